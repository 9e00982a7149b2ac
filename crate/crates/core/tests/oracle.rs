use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use qbailey::oracle::{enumerate, enumerate_p, enumerate_q, enumerate_r, enumerate_slices, naive, Family};
use qbailey::series::{inv_pochhammer, pochhammer, HalfExp, Length, Monomial, QSeries};

/// Product form of the m-th slice, built from series primitives only.
fn slice_series(family: Family, m: usize, trunc: HalfExp) -> QSeries {
    let mu = m as u32;
    let geo = |e: u32| QSeries::one_minus(Monomial::q(e), trunc).invert_unit().unwrap();
    let poch = |z: Monomial, base_q: u32, n: usize| pochhammer(z, 2 * base_q, Length::Finite(n), trunc).unwrap();
    let ipoch = |z: Monomial, base_q: u32, n: usize| inv_pochhammer(z, 2 * base_q, Length::Finite(n), trunc).unwrap();
    match family {
        Family::P => {
            let head = QSeries::monomial(Monomial::new(m % 2 == 1, HalfExp::q(mu * (mu + 1) / 2)), trunc);
            &(&head * &ipoch(Monomial::q(1).neg(), 1, m)) * &geo(2 * mu + 1)
        }
        Family::Q => {
            let head = QSeries::monomial(Monomial::q(2 * mu * mu), trunc);
            let x = &(&head * &poch(Monomial::q(2), 2, m)) * &ipoch(Monomial::q(2).neg(), 2, m);
            &(&x * &ipoch(Monomial::q(2), 4, m)) * &geo(2 * mu + 1)
        }
        Family::R => {
            let head = QSeries::monomial(Monomial::q(mu * mu), trunc);
            let x = &(&head * &poch(Monomial::q(2), 2, m)) * &ipoch(Monomial::q(2).neg(), 2, m);
            &x * &ipoch(Monomial::q(1), 2, m + 1)
        }
    }
}

#[test]
fn spec_values() {
    let p = enumerate_p(10);
    assert_eq!((p.count(0), p.count(1)), (&BigInt::from(1), &BigInt::from(0)));
    assert_eq!(enumerate_q(2).count(2), &BigInt::from(2));
    assert_eq!(enumerate_r(1).count(1), &BigInt::from(2));
    for f in Family::ALL {
        assert_eq!(enumerate(f, 0).counts, vec![BigInt::from(1)]);
    }
}

#[test]
fn slices_match_product_forms() {
    let n_max = 40;
    let trunc = HalfExp::q(n_max as u32);
    for family in Family::ALL {
        for (m, slice) in enumerate_slices(family, n_max).into_iter().enumerate() {
            let s = slice_series(family, m, trunc);
            for (n, c) in slice.iter().enumerate() {
                assert_eq!(s.coeff(HalfExp::q(n as u32)), BigRational::from_integer(c.clone()), "{family} m={m} n={n}");
            }
            assert!(s.on_integer_grid());
        }
    }
}

#[test]
fn dp_agrees_with_naive() {
    for family in Family::ALL {
        let table = enumerate(family, 20);
        for n in 0..=20 {
            assert_eq!(table.count(n), &BigInt::from(naive::signed_count(family, n)), "{family} n={n}");
        }
    }
}

#[test]
fn table_json_shape() {
    let v = serde_json::to_value(enumerate(Family::R, 3)).unwrap();
    assert_eq!(v, serde_json::json!({"family": "R", "n_max": 3, "counts": [1, 2, 2, 0]}));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn prefix_stability(n in 0usize..60, k in 0usize..60) {
        let (lo, hi) = (n.min(k), n.max(k));
        for f in Family::ALL {
            let small = enumerate(f, lo);
            prop_assert_eq!(&small.counts[..], &enumerate(f, hi).counts[..=lo]);
        }
    }

    #[test]
    fn table_matches_summed_slices(n in 0usize..40) {
        for f in Family::ALL {
            let trunc = HalfExp::q(n as u32);
            let mut total = QSeries::zero(trunc);
            for m in 0..enumerate_slices(f, n).len() {
                total = &total + &slice_series(f, m, trunc);
            }
            let t = enumerate(f, n);
            for k in 0..=n {
                prop_assert_eq!(total.coeff(HalfExp::q(k as u32)), BigRational::from_integer(t.count(k).clone()));
            }
            prop_assert_eq!(t.count(0).clone(), BigInt::from(1));
        }
    }
}
