use std::time::Instant;

use super::lemma::sum_while;
use crate::report::VerificationReport;
use crate::series::pochhammer::div_pochhammer;
use crate::series::{pochhammer, HalfExp, Length, Monomial, QSeries, Result, SeriesError};

/// Both sides of Fine's transformation
///
/// ```text
/// (t)_inf sum_n t^n / ((q)_n (1 - b q^n)) = sum_n (-t)^n b^n q^{n(n-1)/2} / (b)_{n+1}
/// ```
pub fn fine_sides(b: Monomial, t: Monomial, trunc: HalfExp) -> Result<(QSeries, QSeries)> {
    if b.is_one() {
        return Err(SeriesError::NonUnit("1 - b with b = 1".into()));
    }
    if t.exp() == HalfExp::ZERO {
        return Err(SeriesError::InvalidArgument(format!("t = {t} must have a positive exponent")));
    }
    let lhs_sum = sum_while(
        trunc,
        |n| Some(t.pow(n as u32).exp()),
        |n| {
            let head = QSeries::monomial(t.pow(n as u32), trunc);
            let head = div_pochhammer(&head, Monomial::q(1), 2, n)?;
            head.div_one_minus(b.shift(2 * n as u32))
        },
    )?;
    let lhs = &pochhammer(t, 2, Length::Infinite, trunc)? * &lhs_sum;

    let weight = |n: usize| t.neg().mul(b).pow(n as u32).shift((n * n.saturating_sub(1)) as u32);
    let rhs = sum_while(
        trunc,
        |n| Some(weight(n).exp()),
        |n| div_pochhammer(&QSeries::monomial(weight(n), trunc), b, 2, n + 1),
    )?;
    Ok((lhs, rhs))
}

pub fn fine_identity_check(b: Monomial, t: Monomial, trunc: HalfExp) -> Result<VerificationReport> {
    let started = Instant::now();
    let (lhs, rhs) = fine_sides(b, t, trunc)?;
    Ok(VerificationReport::compare(format!("fine(b={b}, t={t}): lhs = rhs"), &lhs, &rhs, trunc, started))
}
