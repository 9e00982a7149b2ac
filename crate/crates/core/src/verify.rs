//! Three-way certification of the partition identities: the analytic n-sum,
//! the theta-block side, and the enumeration oracle, plus a check that the
//! limiting Bailey lemma applied to the right pair reproduces both sides.

use std::thread;
use std::time::Instant;

use num_rational::BigRational;

use crate::bailey::{bailey_lemma_sides, sum_while, symmetrize_b, slater_e1, u_pair_closed, BaileyPair};
use crate::oracle::{enumerate, Family, SignedCountTable};
use crate::report::{FirstMismatch, VerificationReport};
use crate::series::pochhammer::{div_pochhammer, mul_pochhammer};
use crate::series::{HalfExp, Monomial, MonomialParam, QSeries, Result, SeriesError};
use crate::theta::{theorem_rhs, Identity};

impl Identity {
    pub fn family(self) -> Family {
        match self {
            Identity::One => Family::P,
            Identity::Two => Family::Q,
            Identity::Three => Family::R,
        }
    }
}

/// The n-sum side of identity `id`:
///
/// ```text
/// 1: sum (-1)^n q^{n(n+1)/2} / ((-q;q)_n (1 - q^{2n+1}))
/// 2: sum (q^2;q^2)_n q^{2n^2} / ((-q^2;q^2)_n (q^2;q^4)_n (1 - q^{2n+1}))
/// 3: sum (q^2;q^2)_n q^{n^2} / ((-q^2;q^2)_n (q;q^2)_{n+1})
/// ```
pub fn lhs_series(id: Identity, trunc: HalfExp) -> Result<QSeries> {
    let lead = move |n: usize| -> Monomial {
        let n = n as u32;
        match id {
            Identity::One => Monomial::new(n % 2 == 1, HalfExp::new(n * (n + 1))),
            Identity::Two => Monomial::q(2 * n * n),
            Identity::Three => Monomial::q(n * n),
        }
    };
    sum_while(
        trunc,
        |n| Some(lead(n).exp()),
        |n| {
            let head = QSeries::monomial(lead(n), trunc);
            match id {
                Identity::One => {
                    div_pochhammer(&head, Monomial::q(1).neg(), 2, n)?.div_one_minus(Monomial::q(2 * n as u32 + 1))
                }
                Identity::Two => {
                    let t = mul_pochhammer(&head, Monomial::q(2), 4, n)?;
                    let t = div_pochhammer(&t, Monomial::q(2).neg(), 4, n)?;
                    let t = div_pochhammer(&t, Monomial::q(2), 8, n)?;
                    t.div_one_minus(Monomial::q(2 * n as u32 + 1))
                }
                Identity::Three => {
                    let t = mul_pochhammer(&head, Monomial::q(2), 4, n)?;
                    let t = div_pochhammer(&t, Monomial::q(2).neg(), 4, n)?;
                    div_pochhammer(&t, Monomial::q(1), 4, n + 1)
                }
            }
        },
    )
}

/// The pair and `(X1, X2)` specialization each identity is derived from.
pub fn derivation_setup(id: Identity) -> Result<(BaileyPair, Monomial, MonomialParam)> {
    let b = Monomial::t(1);
    Ok(match id {
        Identity::One => (symmetrize_b(&slater_e1(), b)?, Monomial::q(1), MonomialParam::Infinity),
        Identity::Two => (u_pair_closed(b)?, Monomial::q(2), MonomialParam::Infinity),
        Identity::Three => (u_pair_closed(b)?, Monomial::q(2), Monomial::q(1).neg().into()),
    })
}

/// Reports that the Bailey-lemma sides for `pair` equal the n-sum and the
/// theta side of identity `id`.
pub fn derivation_reports(
    id: Identity,
    pair: &BaileyPair,
    x1: Monomial,
    x2: MonomialParam,
    lhs: &QSeries,
    rhs: &QSeries,
    trunc: HalfExp,
) -> Result<Vec<VerificationReport>> {
    let started = Instant::now();
    let (bailey_lhs, bailey_rhs) = bailey_lemma_sides(pair, x1, x2, trunc)?;
    let k = id.id();
    let what = format!("{} with X1={x1}, X2={x2}", pair.label());
    Ok(vec![
        VerificationReport::compare(format!("theorem-{k}: bailey_lhs[{what}] = lhs_series"), &bailey_lhs, lhs, trunc, started),
        VerificationReport::compare(format!("theorem-{k}: bailey_rhs[{what}] = theorem_rhs"), &bailey_rhs, rhs, trunc, started),
    ])
}

/// Compares the integer-power coefficients of `series` with a count table for
/// `n <= table.n_max`.
pub fn compare_with_table(identity: impl Into<String>, series: &QSeries, table: &SignedCountTable, started: Instant) -> VerificationReport {
    let mismatch = (0..=table.n_max).find_map(|n| {
        let e = HalfExp::q(n as u32);
        let from_series = series.coeff(e);
        let from_table = BigRational::from_integer(table.counts[n].clone());
        (from_series != from_table).then(|| FirstMismatch { t_units: e, lhs: from_series, rhs: from_table })
    });
    VerificationReport::from_mismatch(identity, HalfExp::q(table.n_max as u32), mismatch, started)
}

/// Runs every comparison leg for identity `id` at order `trunc`:
///
/// 1. `lhs_series = theorem_rhs`;
/// 2. with `oracle_n_max`, `lhs_series` against the enumerated counts;
/// 3. the Bailey-lemma specialization against both sides.
pub fn verify_theorem(id: Identity, trunc: HalfExp, oracle_n_max: Option<usize>) -> Result<Vec<VerificationReport>> {
    if let Some(n) = oracle_n_max {
        if HalfExp::q(n as u32) > trunc {
            return Err(SeriesError::InvalidArgument(format!(
                "oracle bound {n} exceeds the order q^{trunc}"
            )));
        }
    }
    let k = id.id();
    let started = Instant::now();
    let (lhs, rhs, table, pair) = thread::scope(|s| {
        let lhs = s.spawn(|| lhs_series(id, trunc));
        let rhs = s.spawn(|| theorem_rhs(id, trunc));
        let table = s.spawn(|| oracle_n_max.map(|n| enumerate(id.family(), n)));
        let pair = derivation_setup(id);
        (
            lhs.join().expect("lhs thread"),
            rhs.join().expect("rhs thread"),
            table.join().expect("oracle thread"),
            pair,
        )
    });
    let (lhs, rhs, (pair, x1, x2)) = (lhs?, rhs?, pair?);

    let mut reports = vec![VerificationReport::compare(
        format!("theorem-{k}: lhs_series = theorem_rhs"),
        &lhs,
        &rhs,
        trunc,
        started,
    )];
    if let Some(table) = table {
        reports.push(compare_with_table(
            format!("theorem-{k}: lhs_series = enumerate_{}", id.family()),
            &lhs,
            &table,
            started,
        ));
    }
    reports.extend(derivation_reports(id, &pair, x1, x2, &lhs, &rhs, trunc)?);
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(id: Identity, k: u32) -> BigRational {
        lhs_series(id, HalfExp::q(6)).unwrap().coeff(HalfExp::q(k))
    }

    fn int(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn leading_coefficients() {
        assert_eq!(c(Identity::One, 0), int(1));
        assert_eq!(c(Identity::One, 1), int(0));
        assert_eq!(c(Identity::Two, 2), int(2));
        assert_eq!(c(Identity::Three, 0), int(1));
        assert_eq!(c(Identity::Three, 1), int(2));
    }

    #[test]
    fn oracle_bound_above_order_is_rejected() {
        assert!(verify_theorem(Identity::One, HalfExp::q(5), Some(6)).is_err());
    }

    #[test]
    fn small_orders_pass() {
        for id in Identity::ALL {
            let reports = verify_theorem(id, HalfExp::q(12), Some(12)).unwrap();
            assert_eq!(reports.len(), 4);
            assert!(reports.iter().all(|r| r.passed()), "{id:?}");
        }
    }
}
