//! Double theta-type sums over the cone `|j| <= n`.
//!
//! The right-hand sides of the three partition identities are sums of
//! `q^{Q(n, j)/2}` where `Q` is a positive definite diagonal form restricted
//! to `|j| <= n`, dressed with characters `(-1)^n`, `(-1)^j` and a few
//! binomial factors `1 ± q^{(k n + c)/2}`. In half-units the exponents are:
//!
//! | identity | outer exponent       | inner exponent |
//! |----------|----------------------|----------------|
//! | 1        | `2n^2 + n`           | `j^2`          |
//! | 2        | `3n^2`               | `j^2`          |
//! | 3        | `n^2`                | `j^2`          |

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::bailey::sum_while;
use crate::series::{HalfExp, Monomial, QSeries, Result, SeriesError};

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Character {
    Trivial,
    /// `(-1)^k`
    Parity,
}

impl Character {
    fn negates(self, k: i64) -> bool {
        self == Character::Parity && k.rem_euclid(2) == 1
    }
}

/// The factor `1 + sign·q^{(n_coeff·n + const_coeff)/2}` of the n-th term.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct BinomialFactor {
    pub negative: bool,
    pub n_coeff: u32,
    pub const_coeff: u32,
}

impl BinomialFactor {
    pub fn plus(n_coeff: u32, const_coeff: u32) -> Self {
        BinomialFactor { negative: false, n_coeff, const_coeff }
    }

    pub fn minus(n_coeff: u32, const_coeff: u32) -> Self {
        BinomialFactor { negative: true, n_coeff, const_coeff }
    }

    /// The monomial `m` with the factor written as `1 - m`.
    fn monomial(self, n: u32) -> Monomial {
        Monomial::new(!self.negative, HalfExp::new(self.n_coeff * n + self.const_coeff))
    }
}

/// `scale · sum_{n>=0} chi_n(n) q^{(n2 n^2 + n1 n + c)/2} prod(factors)
///  · sum_{|j|<=n} chi_j(j) q^{j2 j^2 / 2}`.
#[derive(Clone, Debug, PartialEq)]
pub struct ThetaBlockSpec {
    pub n2_coeff: u32,
    pub n1_coeff: u32,
    pub const_coeff: u32,
    pub j2_coeff: u32,
    pub chi_n: Character,
    pub chi_j: Character,
    pub scale: BigRational,
    pub factors: Vec<BinomialFactor>,
}

pub fn theta_block(spec: &ThetaBlockSpec, trunc: HalfExp) -> Result<QSeries> {
    if spec.n2_coeff == 0 || spec.j2_coeff == 0 {
        return Err(SeriesError::InvalidArgument(
            "theta block needs positive quadratic coefficients".into(),
        ));
    }
    if spec.scale.is_zero() {
        return Ok(QSeries::zero(trunc));
    }
    let outer = |n: usize| {
        let n = n as u32;
        HalfExp::new(spec.n2_coeff * n * n + spec.n1_coeff * n + spec.const_coeff)
    };

    // inner sum over |j| <= n, extended by the two endpoints each step
    let mut inner = QSeries::zero(trunc);
    let block = sum_while(
        trunc,
        |n| Some(outer(n)),
        |n| {
            let ni = n as i64;
            let end = Monomial::new(spec.chi_j.negates(ni), HalfExp::new(spec.j2_coeff * (n * n) as u32));
            let ends = QSeries::monomial(end, trunc);
            inner = if n == 0 { ends } else { &inner + &(&ends + &ends) };
            let mut term = inner.mul_monomial(Monomial::new(spec.chi_n.negates(ni), outer(n)));
            for f in &spec.factors {
                term = term.mul_one_minus(f.monomial(n as u32));
            }
            Ok(term)
        },
    )?;
    Ok(block.scale(&spec.scale))
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Identity {
    One,
    Two,
    Three,
}

impl Identity {
    pub const ALL: [Identity; 3] = [Identity::One, Identity::Two, Identity::Three];

    pub fn from_id(id: u32) -> Option<Identity> {
        match id {
            1 => Some(Identity::One),
            2 => Some(Identity::Two),
            3 => Some(Identity::Three),
            _ => None,
        }
    }

    pub fn id(self) -> u32 {
        match self {
            Identity::One => 1,
            Identity::Two => 2,
            Identity::Three => 3,
        }
    }
}

/// The two halves (plain and `(-1)^{n+j}`-twisted) of the right-hand side.
///
/// For identity 3 the terms carry no `(1 + q^{2n+1})` factor: in the Bailey
/// lemma with `X2 = -q` that factor of `alpha_n` cancels against
/// `(-q;q^2)_n / (-q^3;q^2)_n`. See [`theorem3_blocks_with_extra_factor`].
pub fn theorem_blocks(id: Identity) -> [ThetaBlockSpec; 2] {
    let (n2, n1, extra) = match id {
        Identity::One => (2, 1, None),
        Identity::Two => (3, 0, Some(BinomialFactor::plus(4, 2))),
        Identity::Three => (1, 0, None),
    };
    blocks(n2, n1, extra)
}

/// Identity 3's right-hand side with an extra `(1 + q^{2n+1})` in every term,
/// the shape shared with identity 2. It is *not* equal to the n-sum: already
/// at `n = 0` the factor contributes a spurious `+q`.
pub fn theorem3_blocks_with_extra_factor() -> [ThetaBlockSpec; 2] {
    blocks(1, 0, Some(BinomialFactor::plus(4, 2)))
}

fn blocks(n2: u32, n1: u32, extra: Option<BinomialFactor>) -> [ThetaBlockSpec; 2] {
    let half = BigRational::new(BigInt::from(1), BigInt::from(2));
    let block = |twisted: bool| {
        let mut factors: Vec<BinomialFactor> = extra.into_iter().collect();
        factors.push(if twisted { BinomialFactor::minus(2, 1) } else { BinomialFactor::plus(2, 1) });
        let chi = if twisted { Character::Parity } else { Character::Trivial };
        ThetaBlockSpec {
            n2_coeff: n2,
            n1_coeff: n1,
            const_coeff: 0,
            j2_coeff: 1,
            chi_n: chi,
            chi_j: chi,
            scale: half.clone(),
            factors,
        }
    };
    [block(false), block(true)]
}

/// Right-hand side of identity `id`, truncated at `trunc`.
pub fn theorem_rhs(id: Identity, trunc: HalfExp) -> Result<QSeries> {
    let [plain, twisted] = theorem_blocks(id);
    Ok(&theta_block(&plain, trunc)? + &theta_block(&twisted, trunc)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn constant_term_is_one() {
        for id in Identity::ALL {
            let rhs = theorem_rhs(id, HalfExp::q(3)).unwrap();
            assert_eq!(rhs.coeff(HalfExp::ZERO), BigRational::one(), "{id:?}");
        }
    }

    #[test]
    fn zero_scale_gives_zero() {
        let mut spec = theorem_blocks(Identity::One)[0].clone();
        spec.scale = BigRational::zero();
        assert!(theta_block(&spec, HalfExp::q(20)).unwrap().is_zero());
    }

    #[test]
    fn rejects_degenerate_form() {
        let mut spec = theorem_blocks(Identity::Two)[1].clone();
        spec.n2_coeff = 0;
        assert!(theta_block(&spec, HalfExp::q(5)).is_err());
    }

    #[test]
    fn plain_block_by_hand() {
        // 1/2 (1 + q^{1/2}) + 1/2 q^{3/2}(1 + q^{3/2})(1 + 2q^{1/2}) + ...
        let plain = theorem_blocks(Identity::One)[0].clone();
        let s = theta_block(&plain, HalfExp::new(4)).unwrap();
        let h = |n: i64| BigRational::new(n.into(), 2.into());
        assert_eq!(s.coeff(HalfExp::new(0)), h(1));
        assert_eq!(s.coeff(HalfExp::new(1)), h(1));
        assert_eq!(s.coeff(HalfExp::new(2)), h(0));
        assert_eq!(s.coeff(HalfExp::new(3)), h(1));
        assert_eq!(s.coeff(HalfExp::new(4)), h(2));
    }

    #[test]
    fn extra_factor_variant_adds_q() {
        let trunc = HalfExp::q(2);
        let [plain, twisted] = theorem3_blocks_with_extra_factor();
        let with = &theta_block(&plain, trunc).unwrap() + &theta_block(&twisted, trunc).unwrap();
        let without = theorem_rhs(Identity::Three, trunc).unwrap();
        assert_eq!(with.coeff(HalfExp::q(1)), BigRational::from_integer(3.into()));
        assert_eq!(without.coeff(HalfExp::q(1)), BigRational::from_integer(2.into()));
    }
}
