//! The seed pair and the pair-to-pair transforms.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{BaileyPair, Sequence};
use crate::series::pochhammer::{div_pochhammer, mul_pochhammer};
use crate::series::{inv_pochhammer, HalfExp, Length, Monomial, QSeries, Result, SeriesError};

fn half() -> BigRational {
    BigRational::new(BigInt::from(1), BigInt::from(2))
}

fn triangular(n: usize) -> u32 {
    (n * n.saturating_sub(1) / 2) as u32
}

/// Slater's E(1) pair relative to `(1, q)`: `alpha_0 = 1`,
/// `alpha_n = 2(-1)^n q^{n^2}`, `beta_n = 1/(q^2;q^2)_n`.
pub fn slater_e1() -> BaileyPair {
    let alpha = Sequence::new(|n, trunc| {
        if n == 0 {
            return Ok(QSeries::one(trunc));
        }
        let m = Monomial::new(n % 2 == 1, HalfExp::q((n * n) as u32));
        Ok(QSeries::monomial(m, trunc).scale(&BigRational::from_integer(2.into())))
    });
    let beta = Sequence::new(|n, trunc| inv_pochhammer(Monomial::q(2), 4, Length::Finite(n), trunc));
    BaileyPair::new("E(1)", Monomial::ONE, 2, alpha, beta)
}

/// Lovejoy's transform: from a pair relative to `(a, Q)` to one relative to
/// `(aQ, Q)`.
///
/// ```text
/// alpha*_n = (1 - aQ^{2n+1}) (aQ/b)_n (-b)^n Q^{n(n-1)/2} / ((1 - aQ) (bQ)_n)
///            * sum_{j<=n} (b)_j / (aQ/b)_j (-b)^{-j} Q^{-j(j-1)/2} alpha_j
/// beta*_n  = (1 - b) / (1 - bQ^n) beta_n
/// ```
///
/// The prefactor monomial is moved inside the sum so every term is a power
/// series, and `(aQ/b)_n / (aQ/b)_j` is expanded as `(aQ^{j+1}/b)_{n-j}`.
pub fn lovejoy_star(p: &BaileyPair, b: Monomial) -> Result<BaileyPair> {
    if b.is_one() {
        return Err(SeriesError::NonUnit("1 - b with b = 1".into()));
    }
    let base = p.base_t_units();
    let a = p.a();
    let a_q = a.shift(base);
    let a_q_over_b = a_q.checked_div(b).ok_or_else(|| {
        SeriesError::InvalidArgument(format!("aQ/b = ({a_q})/({b}) has a negative exponent"))
    })?;
    if a_q_over_b.is_one() {
        return Err(SeriesError::NonUnit(format!("(aQ/b; Q)_j with aQ/b = 1 (b = {b})")));
    }

    let alpha_in = p.alpha_seq().clone();
    let alpha = Sequence::new(move |n, trunc| {
        let mut sum = QSeries::zero(trunc);
        for j in 0..=n {
            let mono = b.neg().pow((n - j) as u32).shift(base * (triangular(n) - triangular(j)));
            if mono.exp() > trunc {
                continue;
            }
            let alpha_j = alpha_in.get(j, trunc)?;
            if alpha_j.is_zero() {
                continue;
            }
            let term = alpha_j.mul_monomial(mono);
            let term = mul_pochhammer(&term, a_q_over_b.shift(base * j as u32), base, n - j)?;
            let term = mul_pochhammer(&term, b, base, j)?;
            sum = &sum + &term;
        }
        let sum = sum.mul_one_minus(a.shift(base * (2 * n as u32 + 1)));
        let sum = sum.div_one_minus(a_q)?;
        div_pochhammer(&sum, b.shift(base), base, n)
    });

    let beta_in = p.beta_seq().clone();
    let beta = Sequence::new(move |n, trunc| {
        beta_in.get(n, trunc)?.mul_one_minus(b).div_one_minus(b.shift(base * n as u32))
    });

    Ok(BaileyPair::new(format!("star[{}; b={b}]", p.label()), a_q, base, alpha, beta))
}

/// Adds Lovejoy's transform at `b` and at `-b`, each divided by `1 ∓ b`:
///
/// ```text
/// L1_n = alpha*_n(b) / (2(1-b)) + alpha*_n(-b) / (2(1+b))
/// L2_n = beta_n / (1 - b^2 Q^{2n})
/// ```
///
/// relative to `(aQ, Q)`. `L2` depends on `b` only through `b^2`.
pub fn symmetrize_b(p: &BaileyPair, b: Monomial) -> Result<BaileyPair> {
    let plus = lovejoy_star(p, b)?;
    let minus = lovejoy_star(p, b.neg())?;
    let base = p.base_t_units();

    let alpha = Sequence::new(move |n, trunc| {
        let x = plus.alpha(n, trunc)?.div_one_minus(b)?;
        let y = minus.alpha(n, trunc)?.div_one_minus(b.neg())?;
        Ok((&x + &y).scale(&half()))
    });
    let beta_in = p.beta_seq().clone();
    let b2 = b.pow(2);
    let beta = Sequence::new(move |n, trunc| beta_in.get(n, trunc)?.div_one_minus(b2.shift(2 * base * n as u32)));

    Ok(BaileyPair::new(
        format!("sym[{}; b=±{}]", p.label(), if b.is_negative() { b.neg() } else { b }),
        p.a().shift(base),
        base,
        alpha,
        beta,
    ))
}

/// Base change from a pair relative to `(a, Q)` to one relative to `(a^2, Q^2)`:
///
/// ```text
/// alpha'_n = (1 + aQ^{2n}) / ((1 + a) Q^n) alpha_n
/// beta'_n  = Q^{-n} / (-a;Q)_{2n}
///            * sum_{j<=n} (-1)^{n-j} Q^{(n-j)^2-(n-j)} / (Q^2;Q^2)_{n-j} beta_j
/// ```
///
/// Both sides carry `Q^{-n}`; the numerators are computed `n·base` half-units
/// deeper and then divided, which fails with `NotDivisible` if the input is
/// not a Bailey pair.
pub fn square_base(p: &BaileyPair) -> Result<BaileyPair> {
    let a = p.a();
    if a.neg().is_one() {
        return Err(SeriesError::NonUnit("1 + a with a = -1".into()));
    }
    let base = p.base_t_units();

    let alpha_in = p.alpha_seq().clone();
    let alpha = Sequence::new(move |n, trunc| {
        let shift = HalfExp::new(base * n as u32);
        let s = alpha_in.get(n, trunc + shift)?;
        let s = s.mul_one_minus(a.neg().shift(2 * base * n as u32));
        s.div_one_minus(a.neg())?.shift_down(shift)
    });

    let beta_in = p.beta_seq().clone();
    let beta = Sequence::new(move |n, trunc| {
        let shift = HalfExp::new(base * n as u32);
        let need = trunc + shift;
        let mut sum = QSeries::zero(need);
        for j in 0..=n {
            let d = (n - j) as u32;
            let mono = Monomial::new(d % 2 == 1, HalfExp::new(base * (d * d - d)));
            if mono.exp() > need {
                continue;
            }
            let term = beta_in.get(j, need)?.mul_monomial(mono);
            sum = &sum + &div_pochhammer(&term, Monomial::t(2 * base), 2 * base, n - j)?;
        }
        div_pochhammer(&sum, a.neg(), base, 2 * n)?.shift_down(shift)
    });

    Ok(BaileyPair::new(format!("sq[{}]", p.label()), a.pow(2), 2 * base, alpha, beta))
}

/// The closed-form pair relative to `(q^2, q^2)`:
///
/// ```text
/// U_n(b) = (1 - q^{4n+2}) (q/b)_n (-b)^n q^{n(n-1)/2}
///          / (q^n (1 - b)(1 - q^2)(bq)_n)
///          * (1 + 2 sum_{0<j<=n} (b)_j / (q/b)_j b^{-j} q^{j(j+1)/2})
/// alpha_n = U_n(b)/2 + U_n(-b)/2
/// beta_n  = (-b^2)^n q^{n(n-2)} / ((-q)_{2n} (b^2;q^2)_{n+1})
/// ```
///
/// Individual terms of `U_n(±b)` may carry negative powers of `q`; they are
/// computed against a common shift that is removed after the `±b` average.
pub fn u_pair_closed(b: Monomial) -> Result<BaileyPair> {
    let e = b.exp().t_units();
    if b.is_one() {
        return Err(SeriesError::NonUnit("1 - b with b = 1".into()));
    }
    if e == 0 {
        return Err(SeriesError::InvalidArgument(format!("b = {b} must have a positive exponent")));
    }
    let q_over_b = Monomial::q(1).checked_div(b).ok_or_else(|| {
        SeriesError::InvalidArgument(format!("q/b has a negative exponent for b = {b}"))
    })?;
    if q_over_b.is_one() {
        return Err(SeriesError::NonUnit(format!("(q/b)_j with q/b = 1 (b = {b})")));
    }

    let alpha = Sequence::new(move |n, trunc| {
        let e = e as i64;
        let ni = n as i64;
        let exps: Vec<i64> = (0..=ni)
            .map(|j| (ni - j) * e + ni * (ni - 1) - 2 * ni + j * (j + 1))
            .collect();
        let lift = (-exps.iter().copied().min().unwrap_or(0)).max(0) as u32;
        let work = trunc + HalfExp::new(lift);

        let scaled = |bb: Monomial| -> Result<QSeries> {
            let q_over_bb = Monomial::q(1).checked_div(bb).expect("checked above");
            let mut bracket = QSeries::zero(work);
            for (j, &ej) in exps.iter().enumerate() {
                let negative = (n % 2 == 1) ^ (bb.is_negative() && (n - j) % 2 == 1);
                let mono = Monomial::new(negative, HalfExp::new((ej + lift as i64) as u32));
                if mono.exp() > work {
                    continue;
                }
                let mut term = QSeries::monomial(mono, work);
                if j > 0 {
                    term = term.scale(&BigRational::from_integer(2.into()));
                }
                let term = mul_pochhammer(&term, q_over_bb.shift(2 * j as u32), 2, n - j)?;
                let term = mul_pochhammer(&term, bb, 2, j)?;
                bracket = &bracket + &term;
            }
            let bracket = bracket.mul_one_minus(Monomial::q(2 * n as u32 + 1).pow(2));
            let bracket = bracket.div_one_minus(bb)?.div_one_minus(Monomial::q(2))?;
            div_pochhammer(&bracket, bb.shift(2), 2, n)
        };

        let sum = &scaled(b)? + &scaled(b.neg())?;
        sum.scale(&half()).shift_down(HalfExp::new(lift))
    });

    let b2 = b.pow(2);
    let beta = Sequence::new(move |n, trunc| {
        let ni = n as i64;
        let t = 2 * ni * e as i64 + 2 * ni * (ni - 2);
        if t < 0 {
            return Err(SeriesError::InvalidArgument(format!(
                "beta_{n} has a negative power of q for b = {b}"
            )));
        }
        let head = QSeries::monomial(Monomial::new(n % 2 == 1, HalfExp::new(t as u32)), trunc);
        let head = div_pochhammer(&head, Monomial::q(1).neg(), 2, 2 * n)?;
        div_pochhammer(&head, b2, 4, n + 1)
    });

    Ok(BaileyPair::new(format!("U[b={b}]"), Monomial::q(2), 4, alpha, beta))
}

/// `square_base(symmetrize_b(E(1), b))`: the same pair as [`u_pair_closed`],
/// built through the transform chain.
pub fn u_pair_chain(b: Monomial) -> Result<BaileyPair> {
    Ok(square_base(&symmetrize_b(&slater_e1(), b)?)?.with_label(format!("chain[b={b}]")))
}
