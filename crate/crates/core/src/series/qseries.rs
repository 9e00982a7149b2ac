use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{HalfExp, Monomial, Result, SeriesError};

/// A truncated power series in `q^{1/2}` with exact rational coefficients.
///
/// Terms are kept sorted by exponent with no zero coefficients. Every
/// coefficient at an exponent `<= trunc_order` is known; nothing above it is.
/// Binary operations truncate to the smaller of the two orders.
///
/// `==` compares the two series up to the smaller truncation order, so it is
/// not transitive across series of different orders.
#[derive(Clone, Debug)]
pub struct QSeries {
    terms: Vec<(u32, BigRational)>,
    trunc: u32,
}

/// First exponent at which two series disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub exponent: HalfExp,
    pub left: BigRational,
    pub right: BigRational,
}

fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl QSeries {
    pub fn zero(trunc: HalfExp) -> Self {
        QSeries { terms: Vec::new(), trunc: trunc.t_units() }
    }

    pub fn one(trunc: HalfExp) -> Self {
        Self::constant(BigRational::one(), trunc)
    }

    pub fn constant(c: BigRational, trunc: HalfExp) -> Self {
        let terms = if c.is_zero() { Vec::new() } else { vec![(0, c)] };
        QSeries { terms, trunc: trunc.t_units() }
    }

    pub fn monomial(m: Monomial, trunc: HalfExp) -> Self {
        Self::from_terms([(m.exp(), int(m.sign_i32() as i64))], trunc)
    }

    /// `1 - m`.
    pub fn one_minus(m: Monomial, trunc: HalfExp) -> Self {
        Self::one(trunc).mul_one_minus(m)
    }

    /// Builds a series from arbitrary terms; duplicates are summed, zeros and
    /// terms above `trunc` dropped.
    pub fn from_terms<I>(terms: I, trunc: HalfExp) -> Self
    where
        I: IntoIterator<Item = (HalfExp, BigRational)>,
    {
        let mut v: Vec<(u32, BigRational)> = terms
            .into_iter()
            .filter(|(e, _)| *e <= trunc)
            .map(|(e, c)| (e.t_units(), c))
            .collect();
        v.sort_by_key(|(e, _)| *e);
        let mut merged: Vec<(u32, BigRational)> = Vec::with_capacity(v.len());
        for (e, c) in v {
            match merged.last_mut() {
                Some((le, lc)) if *le == e => *lc += c,
                _ => merged.push((e, c)),
            }
        }
        merged.retain(|(_, c)| !c.is_zero());
        QSeries { terms: merged, trunc: trunc.t_units() }
    }

    fn from_dense(dense: Vec<BigRational>, trunc: u32) -> Self {
        let terms = dense
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| (e as u32, c))
            .collect();
        QSeries { terms, trunc }
    }

    fn to_dense(&self) -> Vec<BigRational> {
        let mut dense = vec![BigRational::zero(); self.trunc as usize + 1];
        for (e, c) in &self.terms {
            dense[*e as usize] = c.clone();
        }
        dense
    }

    pub fn trunc_order(&self) -> HalfExp {
        HalfExp::new(self.trunc)
    }

    pub fn coeff(&self, e: HalfExp) -> BigRational {
        match self.terms.binary_search_by_key(&e.t_units(), |(k, _)| *k) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => BigRational::zero(),
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (HalfExp, &BigRational)> + '_ {
        self.terms.iter().map(|(e, c)| (HalfExp::new(*e), c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn valuation(&self) -> Option<HalfExp> {
        self.terms.first().map(|(e, _)| HalfExp::new(*e))
    }

    /// Drops every term above `order`; a no-op when `order >= trunc_order`.
    pub fn truncate(&self, order: HalfExp) -> QSeries {
        let t = order.t_units().min(self.trunc);
        QSeries {
            terms: self.terms.iter().filter(|(e, _)| *e <= t).cloned().collect(),
            trunc: t,
        }
    }

    /// Replaces the coefficient at `e`. Exponents above the truncation order
    /// are ignored.
    pub fn with_coeff(&self, e: HalfExp, value: BigRational) -> QSeries {
        let mut terms: Vec<_> = self.terms.iter().filter(|(k, _)| *k != e.t_units()).cloned().collect();
        terms.push((e.t_units(), value));
        Self::from_terms(terms.into_iter().map(|(k, c)| (HalfExp::new(k), c)), self.trunc_order())
    }

    pub fn scale(&self, c: &BigRational) -> QSeries {
        if c.is_zero() {
            return QSeries::zero(self.trunc_order());
        }
        QSeries {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
            trunc: self.trunc,
        }
    }

    /// Multiplies by a monomial; terms pushed above the order are dropped.
    pub fn mul_monomial(&self, m: Monomial) -> QSeries {
        let shift = m.exp().t_units();
        let neg = m.is_negative();
        QSeries {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e + shift <= self.trunc)
                .map(|(e, c)| (e + shift, if neg { -c } else { c.clone() }))
                .collect(),
            trunc: self.trunc,
        }
    }

    /// Divides by `q^{k/2}`. Fails unless every term below `k` vanishes; the
    /// truncation order drops by `k`.
    pub fn shift_down(&self, k: HalfExp) -> Result<QSeries> {
        let k = k.t_units();
        if k > self.trunc {
            return Err(SeriesError::InvalidArgument(format!(
                "cannot divide by q^{} a series known only to q^{}",
                HalfExp::new(k),
                self.trunc_order()
            )));
        }
        if let Some((e, _)) = self.terms.first() {
            if *e < k {
                return Err(SeriesError::NotDivisible {
                    what: format!("series with valuation {}", HalfExp::new(*e)),
                    by: HalfExp::new(k),
                });
            }
        }
        Ok(QSeries {
            terms: self.terms.iter().map(|(e, c)| (e - k, c.clone())).collect(),
            trunc: self.trunc - k,
        })
    }

    /// Multiplies by the binomial `1 - m` in one pass.
    pub fn mul_one_minus(&self, m: Monomial) -> QSeries {
        let mut shifted = self.mul_monomial(m);
        shifted.terms.iter_mut().for_each(|(_, c)| *c = -c.clone());
        self + &shifted
    }

    /// Divides by the binomial `1 - m` with the geometric-series recurrence.
    pub fn div_one_minus(&self, m: Monomial) -> Result<QSeries> {
        let e = m.exp().t_units();
        if e == 0 {
            if !m.is_negative() {
                return Err(SeriesError::NonUnit(format!("1 - ({m})")));
            }
            return Ok(self.scale(&BigRational::new(BigInt::one(), BigInt::from(2))));
        }
        let mut g = self.to_dense();
        let e = e as usize;
        for i in e..g.len() {
            if g[i - e].is_zero() {
                continue;
            }
            let prev = g[i - e].clone();
            if m.is_negative() {
                g[i] -= prev;
            } else {
                g[i] += prev;
            }
        }
        Ok(QSeries::from_dense(g, self.trunc))
    }

    /// Multiplicative inverse by the standard coefficient recurrence.
    pub fn invert_unit(&self) -> Result<QSeries> {
        let c0 = match self.terms.first() {
            Some((0, c)) => c.clone(),
            _ => return Err(SeriesError::NonUnit("series".into())),
        };
        let inv0 = c0.recip();
        let n = self.trunc as usize;
        let mut g: Vec<BigRational> = vec![BigRational::zero(); n + 1];
        g[0] = inv0.clone();
        for k in 1..=n {
            let mut acc = BigRational::zero();
            for (i, fi) in self.terms.iter().skip(1) {
                let i = *i as usize;
                if i > k {
                    break;
                }
                if !g[k - i].is_zero() {
                    acc += fi * &g[k - i];
                }
            }
            if !acc.is_zero() {
                g[k] = -(acc * &inv0);
            }
        }
        Ok(QSeries::from_dense(g, self.trunc))
    }

    /// `self / other` for a unit `other`.
    pub fn div_unit(&self, other: &QSeries) -> Result<QSeries> {
        Ok(self * &other.invert_unit()?)
    }

    /// The base change `q -> q^2`: every exponent and the order double.
    pub fn substitute_square(&self) -> QSeries {
        QSeries {
            terms: self.terms.iter().map(|(e, c)| (2 * e, c.clone())).collect(),
            trunc: 2 * self.trunc,
        }
    }

    /// First exponent (up to the smaller order) where the two series differ.
    pub fn first_difference(&self, other: &QSeries) -> Option<Mismatch> {
        let t = self.trunc.min(other.trunc);
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        loop {
            let ea = a.get(i).map(|x| x.0).filter(|e| *e <= t);
            let eb = b.get(j).map(|x| x.0).filter(|e| *e <= t);
            let (e, l, r) = match (ea, eb) {
                (None, None) => return None,
                (Some(x), Some(y)) if x == y => {
                    if a[i].1 != b[j].1 {
                        (x, a[i].1.clone(), b[j].1.clone())
                    } else {
                        i += 1;
                        j += 1;
                        continue;
                    }
                }
                (Some(x), Some(y)) if x < y => (x, a[i].1.clone(), BigRational::zero()),
                (Some(x), None) => (x, a[i].1.clone(), BigRational::zero()),
                (_, Some(y)) => (y, BigRational::zero(), b[j].1.clone()),
            };
            return Some(Mismatch { exponent: HalfExp::new(e), left: l, right: r });
        }
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.terms.iter().all(|(_, c)| c.is_integer())
    }

    /// True when no term sits at a half-integer power of `q`.
    pub fn on_integer_grid(&self) -> bool {
        self.terms.iter().all(|(e, _)| e % 2 == 0)
    }
}

impl PartialEq for QSeries {
    fn eq(&self, other: &Self) -> bool {
        self.first_difference(other).is_none()
    }
}

impl Add for &QSeries {
    type Output = QSeries;

    fn add(self, rhs: &QSeries) -> QSeries {
        let t = self.trunc.min(rhs.trunc);
        let mut out = Vec::with_capacity(self.terms.len() + rhs.terms.len());
        let mut a = self.terms.iter().filter(|x| x.0 <= t).peekable();
        let mut b = rhs.terms.iter().filter(|x| x.0 <= t).peekable();
        loop {
            match (a.peek(), b.peek()) {
                (Some(x), Some(y)) if x.0 == y.0 => {
                    let c = &x.1 + &y.1;
                    if !c.is_zero() {
                        out.push((x.0, c));
                    }
                    a.next();
                    b.next();
                }
                (Some(x), Some(y)) if x.0 < y.0 => out.push(a.next().unwrap().clone()),
                (Some(_), None) => out.push(a.next().unwrap().clone()),
                (_, Some(_)) => out.push(b.next().unwrap().clone()),
                (None, None) => break,
            }
        }
        QSeries { terms: out, trunc: t }
    }
}

impl Neg for &QSeries {
    type Output = QSeries;

    fn neg(self) -> QSeries {
        QSeries {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
            trunc: self.trunc,
        }
    }
}

impl Sub for &QSeries {
    type Output = QSeries;

    fn sub(self, rhs: &QSeries) -> QSeries {
        self + &(-rhs)
    }
}

impl Mul for &QSeries {
    type Output = QSeries;

    fn mul(self, rhs: &QSeries) -> QSeries {
        let t = self.trunc.min(rhs.trunc);
        let mut acc = vec![BigRational::zero(); t as usize + 1];
        let (small, large) = if self.terms.len() <= rhs.terms.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        for (ea, ca) in &small.terms {
            if *ea > t {
                break;
            }
            for (eb, cb) in &large.terms {
                let e = ea + eb;
                if e > t {
                    break;
                }
                acc[e as usize] += ca * cb;
            }
        }
        QSeries::from_dense(acc, t)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for QSeries {
            type Output = QSeries;
            fn $m(self, rhs: QSeries) -> QSeries {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&QSeries> for QSeries {
            type Output = QSeries;
            fn $m(self, rhs: &QSeries) -> QSeries {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

fn fmt_power(f: &mut fmt::Formatter<'_>, e: u32) -> fmt::Result {
    match e {
        0 => Ok(()),
        2 => f.write_str("q"),
        _ => write!(f, "q^{}", HalfExp::new(e)),
    }
}

/// Renders e.g. `1 - q + 1/2q^3/2 + O(q^4)`; the `O` term is the first
/// unknown exponent.
impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if !mag.is_one() || *e == 0 {
                write!(f, "{mag}")?;
            }
            fmt_power(f, *e)?;
        }
        if !self.terms.is_empty() {
            f.write_str(" + ")?;
        }
        f.write_str("O(")?;
        match self.trunc + 1 {
            2 => f.write_str("q")?,
            e => write!(f, "q^{}", HalfExp::new(e))?,
        }
        f.write_str(")")
    }
}
