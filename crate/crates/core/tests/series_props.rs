use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use qbailey::series::{inv_pochhammer, pochhammer, HalfExp, Length, Monomial, QSeries};

const T: u32 = 14;

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn series(trunc: u32) -> impl Strategy<Value = QSeries> {
    prop::collection::vec((0..=trunc, -6i64..=6, 1i64..=4), 0..8)
        .prop_map(move |ts| QSeries::from_terms(ts.into_iter().map(|(e, n, d)| (HalfExp::new(e), rat(n, d))), HalfExp::new(trunc)))
}

fn unit(trunc: u32) -> impl Strategy<Value = QSeries> {
    (series(trunc), prop_oneof![-3i64..=-1, 1i64..=3]).prop_map(move |(s, c)| {
        let c = BigRational::from_integer(c.into());
        s.with_coeff(HalfExp::ZERO, c)
    })
}

fn monomial() -> impl Strategy<Value = Monomial> {
    (any::<bool>(), 0u32..=9).prop_map(|(neg, e)| Monomial::new(neg, HalfExp::new(e)))
}

proptest! {
    #[test]
    fn addition_commutes_and_associates(a in series(T), b in series(T), c in series(T)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn multiplication_ring_laws(a in series(T), b in series(T), c in series(T)) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &QSeries::one(HalfExp::new(T)), a);
    }

    #[test]
    fn inverse_of_unit(u in unit(T)) {
        let inv = u.invert_unit().unwrap();
        prop_assert_eq!(&u * &inv, QSeries::one(HalfExp::new(T)));
    }

    #[test]
    fn binomial_division_undoes_multiplication(a in series(T), m in monomial()) {
        prop_assume!(!m.is_one());
        let back = a.mul_one_minus(m).div_one_minus(m).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn pochhammer_recurrence(z in monomial(), base in 1u32..=4, n in 0usize..8) {
        let trunc = HalfExp::new(20);
        let next = pochhammer(z, base, Length::Finite(n + 1), trunc).unwrap();
        let step = QSeries::one_minus(z.shift(base * n as u32), trunc);
        prop_assert_eq!(next, &pochhammer(z, base, Length::Finite(n), trunc).unwrap() * &step);
    }

    #[test]
    fn inverse_pochhammer_is_inverse(e in 1u32..=6, neg in any::<bool>(), base in 1u32..=4, n in 0usize..6) {
        let z = Monomial::new(neg, HalfExp::new(e));
        let trunc = HalfExp::new(24);
        let p = pochhammer(z, base, Length::Finite(n), trunc).unwrap();
        let ip = inv_pochhammer(z, base, Length::Finite(n), trunc).unwrap();
        prop_assert_eq!(&p * &ip, QSeries::one(trunc));
    }

    #[test]
    fn substitute_square_is_a_homomorphism(a in series(T), b in series(T)) {
        prop_assert_eq!((&a + &b).substitute_square(), &a.substitute_square() + &b.substitute_square());
        prop_assert_eq!((&a * &b).substitute_square(), &a.substitute_square() * &b.substitute_square());
    }

    #[test]
    fn truncation_is_coherent(a in series(T), u in unit(T), cut in 0u32..T) {
        let c = HalfExp::new(cut);
        let (at, ut) = (a.truncate(c), u.truncate(c));
        prop_assert_eq!((&a * &u).truncate(c).trunc_order(), c);
        prop_assert_eq!((&a * &u).truncate(c), &at * &ut);
        prop_assert_eq!(u.invert_unit().unwrap().truncate(c), ut.invert_unit().unwrap());
        let p = pochhammer(Monomial::t(1), 2, Length::Finite(5), HalfExp::new(T)).unwrap();
        prop_assert_eq!(p.truncate(c), pochhammer(Monomial::t(1), 2, Length::Finite(5), c).unwrap());
    }

    #[test]
    fn euler_product_is_pentagonal(n in 0u32..120) {
        let trunc = HalfExp::q(n);
        let product = pochhammer(Monomial::q(1), 2, Length::Infinite, trunc).unwrap();
        // coefficient of q^k is (-1)^j when k = j(3j-1)/2 for some integer j, else 0
        let pentagonal = |k: i64| -> i64 {
            (-20i64..=20).find(|j| j * (3 * j - 1) / 2 == k).map_or(0, |j| if j % 2 == 0 { 1 } else { -1 })
        };
        for k in 0..=n {
            prop_assert_eq!(product.coeff(HalfExp::q(k)), rat(pentagonal(k as i64), 1));
            prop_assert_eq!(product.coeff(HalfExp::new(2 * k + 1)), rat(0, 1));
        }
    }

    #[test]
    fn monomial_text_round_trips(m in monomial()) {
        let back: Monomial = m.to_string().parse().unwrap();
        prop_assert_eq!(back, m);
    }

    #[test]
    fn stored_terms_are_canonical(a in series(T), b in series(T)) {
        let p = &a * &b;
        prop_assert!(p.terms().all(|(e, c)| e <= p.trunc_order() && *c != rat(0, 1)));
        let es: Vec<_> = p.terms().map(|(e, _)| e).collect();
        prop_assert!(es.windows(2).all(|w| w[0] < w[1]));
    }
}

#[test]
fn trivial_arithmetic() {
    let t = HalfExp::q(6);
    let one_plus_q = QSeries::one_minus(Monomial::q(1).neg(), t);
    let one_minus_q = QSeries::one_minus(Monomial::q(1), t);
    assert_eq!(&one_plus_q + &one_minus_q, QSeries::constant(rat(2, 1), t));
    assert_eq!(&one_plus_q * &one_minus_q, QSeries::one_minus(Monomial::q(2), t));
    let h = QSeries::monomial(Monomial::t(1), t);
    assert_eq!((&h + &h).coeff(HalfExp::new(1)), rat(2, 1));
    let halves = &QSeries::one_minus(Monomial::t(1), t) * &QSeries::one_minus(Monomial::t(1).neg(), t);
    assert_eq!(halves, one_minus_q);
    assert_eq!(QSeries::constant(rat(2, 1), t).invert_unit().unwrap(), QSeries::constant(rat(1, 2), t));
    assert!(QSeries::zero(t).invert_unit().is_err());
}

#[test]
fn small_pochhammers() {
    let t = HalfExp::q(4);
    let p = pochhammer(Monomial::q(1), 2, Length::Finite(2), t).unwrap();
    assert_eq!(p.to_string(), "1 - q - q^2 + q^3 + O(q^9/2)");
    assert_eq!(pochhammer(Monomial::t(3), 5, Length::Finite(0), t).unwrap(), QSeries::one(t));
    let e = pochhammer(Monomial::q(1), 2, Length::Infinite, HalfExp::q(12)).unwrap();
    let expect = QSeries::from_terms(
        [(0, 1), (1, -1), (2, -1), (5, 1), (7, 1), (12, -1)].map(|(k, c)| (HalfExp::q(k), rat(c, 1))),
        HalfExp::q(12),
    );
    assert_eq!(e, expect);
}
