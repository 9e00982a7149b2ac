use super::{HalfExp, Monomial, QSeries, Result, SeriesError};

/// Number of factors in a q-Pochhammer product.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Length {
    Finite(usize),
    Infinite,
}

/// Exponents of the factors `z·Q^k` that can still affect coefficients up to
/// `trunc`. For an infinite product, the remaining factors are `1 + O(q^{>trunc})`.
fn factor_monomials(z: Monomial, base_t_units: u32, n: Length, trunc: HalfExp) -> Result<Vec<Monomial>> {
    let z0 = z.exp().t_units();
    let live = if z0 > trunc.t_units() {
        0
    } else if base_t_units == 0 {
        usize::MAX
    } else {
        ((trunc.t_units() - z0) / base_t_units) as usize + 1
    };
    let count = match n {
        Length::Finite(n) => n.min(live),
        Length::Infinite if base_t_units == 0 && live > 0 => {
            return Err(SeriesError::DivergentInfiniteProduct)
        }
        Length::Infinite => live,
    };
    Ok((0..count).map(|k| z.shift(base_t_units * k as u32)).collect())
}

/// `(z; Q)_n = (1 - z)(1 - zQ)...(1 - zQ^{n-1})` with `Q = q^{base_t_units/2}`.
///
/// For `n = Infinite` only the factors whose deviation from 1 lies at or below
/// `trunc` are multiplied in. A factor `1 - 1` (z = +1) makes the product the
/// zero series, which is a legal value.
pub fn pochhammer(z: Monomial, base_t_units: u32, n: Length, trunc: HalfExp) -> Result<QSeries> {
    let mut acc = QSeries::one(trunc);
    for m in factor_monomials(z, base_t_units, n, trunc)? {
        acc = acc.mul_one_minus(m);
        if acc.is_zero() {
            break;
        }
    }
    Ok(acc)
}

/// `1 / (z; Q)_n`, dividing factor by factor. Fails with `NonUnit` when some
/// factor is `1 - 1`.
pub fn inv_pochhammer(z: Monomial, base_t_units: u32, n: Length, trunc: HalfExp) -> Result<QSeries> {
    let mut acc = QSeries::one(trunc);
    for m in factor_monomials(z, base_t_units, n, trunc)? {
        acc = acc.div_one_minus(m)?;
    }
    Ok(acc)
}

/// Multiplies `f` by `1 / (z; Q)_n` without forming the inverse separately.
pub(crate) fn div_pochhammer(f: &QSeries, z: Monomial, base_t_units: u32, n: usize) -> Result<QSeries> {
    let mut acc = f.clone();
    for m in factor_monomials(z, base_t_units, Length::Finite(n), f.trunc_order())? {
        acc = acc.div_one_minus(m)?;
    }
    Ok(acc)
}

/// Multiplies `f` by `(z; Q)_n`.
pub(crate) fn mul_pochhammer(f: &QSeries, z: Monomial, base_t_units: u32, n: usize) -> Result<QSeries> {
    let mut acc = f.clone();
    for m in factor_monomials(z, base_t_units, Length::Finite(n), f.trunc_order())? {
        acc = acc.mul_one_minus(m);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn finite_product() {
        let p = pochhammer(Monomial::q(1), 2, Length::Finite(2), HalfExp::q(4)).unwrap();
        let want = QSeries::from_terms(
            [(0, 1), (1, -1), (2, -1), (3, 1)].map(|(k, c)| (HalfExp::q(k), r(c))),
            HalfExp::q(4),
        );
        assert_eq!(p, want);
        assert_eq!(
            pochhammer(Monomial::t(3).neg(), 4, Length::Finite(0), HalfExp::q(4)).unwrap(),
            QSeries::one(HalfExp::q(4))
        );
    }

    #[test]
    fn euler_product_to_q12() {
        let p = pochhammer(Monomial::q(1), 2, Length::Infinite, HalfExp::q(12)).unwrap();
        let want = QSeries::from_terms(
            [(0, 1), (1, -1), (2, -1), (5, 1), (7, 1), (12, -1)].map(|(k, c)| (HalfExp::q(k), r(c))),
            HalfExp::q(12),
        );
        assert_eq!(p, want);
    }

    #[test]
    fn plus_one_argument_gives_zero() {
        let p = pochhammer(Monomial::ONE, 2, Length::Infinite, HalfExp::q(6)).unwrap();
        assert!(p.is_zero());
        assert!(inv_pochhammer(Monomial::ONE, 2, Length::Finite(3), HalfExp::q(6)).is_err());
        assert_eq!(
            pochhammer(Monomial::q(1), 0, Length::Infinite, HalfExp::q(6)),
            Err(SeriesError::DivergentInfiniteProduct)
        );
    }

    #[test]
    fn inverse_times_product_is_one() {
        let t = HalfExp::q(15);
        for (z, base) in [(Monomial::q(1), 2), (Monomial::t(1).neg(), 4), (Monomial::MINUS_ONE, 2)] {
            for n in [Length::Finite(5), Length::Infinite] {
                let p = pochhammer(z, base, n, t).unwrap();
                let i = inv_pochhammer(z, base, n, t).unwrap();
                assert_eq!(&p * &i, QSeries::one(t));
            }
        }
    }
}
