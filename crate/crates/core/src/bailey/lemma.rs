use super::BaileyPair;
use crate::series::pochhammer::{div_pochhammer, mul_pochhammer};
use crate::series::{inv_pochhammer, pochhammer, HalfExp, Length, Monomial, MonomialParam, QSeries, Result, SeriesError};

/// Hard ceiling on the number of summands of an infinite n-sum.
pub(crate) fn term_ceiling(trunc: HalfExp) -> usize {
    (4 * trunc.t_units() as usize).max(16)
}

/// Sums `term(n)` for `n = 0, 1, ...` until `bound(n)` (a lower bound on the
/// valuation of every later term) exceeds `trunc`.
pub(crate) fn sum_while<B, T>(trunc: HalfExp, mut bound: B, mut term: T) -> Result<QSeries>
where
    B: FnMut(usize) -> Option<HalfExp>,
    T: FnMut(usize) -> Result<QSeries>,
{
    let ceiling = term_ceiling(trunc);
    let mut acc = QSeries::zero(trunc);
    for n in 0.. {
        match bound(n) {
            None => return Ok(acc),
            Some(v) if v > trunc => return Ok(acc),
            _ => {}
        }
        if n > ceiling {
            return Err(SeriesError::NonTerminating { ceiling });
        }
        acc = &acc + &term(n)?;
    }
    unreachable!()
}

/// Both sides of the limiting Bailey lemma for `p` relative to `(a, Q)`:
///
/// ```text
/// sum_n (X1)_n (X2)_n (aQ/X1X2)^n beta_n
///   = (aQ/X1)_inf (aQ/X2)_inf / ((aQ)_inf (aQ/X1X2)_inf)
///     * sum_n (X1)_n (X2)_n (aQ/X1X2)^n alpha_n / ((aQ/X1)_n (aQ/X2)_n)
/// ```
///
/// With `X2 = Infinity` the limits `(X2)_n (c/X2)^n -> (-c)^n Q^{n(n-1)/2}`
/// and `(aQ/X2)_* -> 1` are applied symbolically.
pub fn bailey_lemma_sides(p: &BaileyPair, x1: Monomial, x2: MonomialParam, trunc: HalfExp) -> Result<(QSeries, QSeries)> {
    let base = p.base_t_units();
    let a_q = p.a().shift(base);
    let over = |num: Monomial, den: Monomial, what: &str| {
        num.checked_div(den)
            .ok_or_else(|| SeriesError::InvalidArgument(format!("{what} has a negative exponent")))
    };
    let a_q_x1 = over(a_q, x1, "aQ/X1")?;

    // Monomial weight of the n-th term and the Pochhammer arguments that
    // multiply (numerator) or divide (denominator) both sums.
    let (weight, numer, denom): (Box<dyn Fn(usize) -> Monomial>, Vec<Monomial>, Vec<Monomial>) = match x2 {
        MonomialParam::Infinity => {
            let c = a_q_x1;
            let w = move |n: usize| c.neg().pow(n as u32).shift(base * (n * n.saturating_sub(1) / 2) as u32);
            (Box::new(w), vec![x1], vec![a_q_x1])
        }
        MonomialParam::Finite(x2) => {
            let a_q_x2 = over(a_q, x2, "aQ/X2")?;
            let c = over(a_q_x2, x1, "aQ/(X1 X2)")?;
            if c.is_one() {
                return Err(SeriesError::NonUnit("(aQ/(X1 X2))_inf with aQ/(X1 X2) = 1".into()));
            }
            if c.exp() == HalfExp::ZERO {
                return Err(SeriesError::InvalidArgument(
                    "aQ/(X1 X2) = -1: the n-sums have no decaying weight".into(),
                ));
            }
            (Box::new(move |n: usize| c.pow(n as u32)), vec![x1, x2], vec![a_q_x1, a_q_x2])
        }
    };
    // (X)_n with X = 1 vanishes for n >= 1, which ends both sums.
    let dead_after_zero = numer.iter().any(|m| m.is_one());
    let bound = |n: usize| {
        if dead_after_zero && n >= 1 {
            None
        } else {
            Some(weight(n).exp())
        }
    };

    let lhs = sum_while(trunc, bound, |n| {
        let mut t = p.beta(n, trunc)?.mul_monomial(weight(n));
        for &x in &numer {
            t = mul_pochhammer(&t, x, base, n)?;
        }
        Ok(t)
    })?;

    let sum = sum_while(trunc, bound, |n| {
        let mut t = p.alpha(n, trunc)?.mul_monomial(weight(n));
        for &x in &numer {
            t = mul_pochhammer(&t, x, base, n)?;
        }
        for &x in &denom {
            t = div_pochhammer(&t, x, base, n)?;
        }
        Ok(t)
    })?;

    let mut prefactor = inv_pochhammer(a_q, base, Length::Infinite, trunc)?;
    for &x in &denom {
        prefactor = &prefactor * &pochhammer(x, base, Length::Infinite, trunc)?;
    }
    if let MonomialParam::Finite(_) = x2 {
        let c = weight(1);
        prefactor = &prefactor * &inv_pochhammer(c, base, Length::Infinite, trunc)?;
    }
    Ok((lhs, &prefactor * &sum))
}
