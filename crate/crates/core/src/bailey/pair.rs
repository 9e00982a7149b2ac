use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use num_rational::BigRational;
use serde::Serialize;

use crate::report::{Status, rational_string};
use crate::series::pochhammer::div_pochhammer;
use crate::series::{HalfExp, Monomial, QSeries, Result};

type TermFn = dyn Fn(usize, HalfExp) -> Result<QSeries> + Send + Sync;

/// A lazily evaluated sequence `n -> QSeries`.
///
/// Each index is computed on demand at the requested order and memoized; a
/// request at a lower order is served by truncating the cached value.
#[derive(Clone)]
pub struct Sequence {
    term: Arc<TermFn>,
    cache: Arc<Mutex<HashMap<usize, QSeries>>>,
}

impl Sequence {
    pub fn new<F>(term: F) -> Self
    where
        F: Fn(usize, HalfExp) -> Result<QSeries> + Send + Sync + 'static,
    {
        Sequence { term: Arc::new(term), cache: Arc::default() }
    }

    pub fn get(&self, n: usize, trunc: HalfExp) -> Result<QSeries> {
        if let Some(hit) = self.cache.lock().unwrap().get(&n) {
            if hit.trunc_order() >= trunc {
                return Ok(hit.truncate(trunc));
            }
        }
        let value = (self.term)(n, trunc)?;
        let mut cache = self.cache.lock().unwrap();
        let keep = cache.get(&n).map_or(true, |old| old.trunc_order() < value.trunc_order());
        if keep {
            cache.insert(n, value.clone());
        }
        Ok(value)
    }
}

/// Sequences `(alpha_n, beta_n)` together with the parameter `a` and the base
/// `Q = q^{base_t_units/2}` they are a Bailey pair relative to.
#[derive(Clone)]
pub struct BaileyPair {
    label: String,
    a: Monomial,
    base_t_units: u32,
    alpha: Sequence,
    beta: Sequence,
}

impl fmt::Debug for BaileyPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BaileyPair")
            .field("label", &self.label)
            .field("a", &self.a.to_string())
            .field("base_t_units", &self.base_t_units)
            .finish()
    }
}

impl BaileyPair {
    pub fn new(label: impl Into<String>, a: Monomial, base_t_units: u32, alpha: Sequence, beta: Sequence) -> Self {
        BaileyPair { label: label.into(), a, base_t_units, alpha, beta }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn a(&self) -> Monomial {
        self.a
    }

    pub fn base_t_units(&self) -> u32 {
        self.base_t_units
    }

    /// The base variable `Q` as a monomial.
    pub fn base(&self) -> Monomial {
        Monomial::t(self.base_t_units)
    }

    pub fn alpha(&self, n: usize, trunc: HalfExp) -> Result<QSeries> {
        self.alpha.get(n, trunc)
    }

    pub fn beta(&self, n: usize, trunc: HalfExp) -> Result<QSeries> {
        self.beta.get(n, trunc)
    }

    pub(crate) fn alpha_seq(&self) -> &Sequence {
        &self.alpha
    }

    pub(crate) fn beta_seq(&self) -> &Sequence {
        &self.beta
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    /// Same pair with `delta` added to the coefficient of `q^{e/2}` in
    /// `alpha_n`. Used for negative controls.
    pub fn with_alpha_perturbed(&self, n: usize, e: HalfExp, delta: BigRational) -> BaileyPair {
        let inner = self.alpha.clone();
        let alpha = Sequence::new(move |k, trunc| {
            let base = inner.get(k, trunc)?;
            if k != n {
                return Ok(base);
            }
            let c = base.coeff(e) + &delta;
            Ok(base.with_coeff(e, c))
        });
        BaileyPair {
            label: format!("{} (alpha_{n} perturbed at q^{e})", self.label),
            alpha,
            ..self.clone()
        }
    }

    /// Right-hand side of the defining relation:
    /// `sum_{j<=n} alpha_j / ((Q;Q)_{n-j} (aQ;Q)_{n+j})`.
    pub fn relation_rhs(&self, n: usize, trunc: HalfExp) -> Result<QSeries> {
        let q = self.base_t_units;
        let a_q = self.a.shift(q);
        let mut acc = QSeries::zero(trunc);
        for j in 0..=n {
            let alpha = self.alpha(j, trunc)?;
            if alpha.is_zero() {
                continue;
            }
            let term = div_pochhammer(&alpha, self.base(), q, n - j)?;
            let term = div_pochhammer(&term, a_q, q, n + j)?;
            acc = &acc + &term;
        }
        Ok(acc)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairFailure {
    pub n: usize,
    pub t_units: HalfExp,
    #[serde(serialize_with = "rational_string")]
    pub lhs: BigRational,
    #[serde(serialize_with = "rational_string")]
    pub rhs: BigRational,
}

/// Outcome of checking the defining relation for `n = 0..=n_checked`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairCheckReport {
    pub pair: String,
    pub n_checked: usize,
    pub trunc_t_units: HalfExp,
    pub status: Status,
    pub first_failure: Option<PairFailure>,
}

/// Checks `beta_n = sum_j alpha_j / ((Q)_{n-j} (aQ)_{n+j})` for every
/// `n <= n_max` at order `trunc`, stopping at the first mismatch.
pub fn verify_pair(p: &BaileyPair, n_max: usize, trunc: HalfExp) -> Result<PairCheckReport> {
    for n in 0..=n_max {
        let lhs = p.beta(n, trunc)?;
        let rhs = p.relation_rhs(n, trunc)?;
        if let Some(m) = lhs.first_difference(&rhs) {
            return Ok(PairCheckReport {
                pair: p.label().to_string(),
                n_checked: n,
                trunc_t_units: trunc,
                status: Status::Fail,
                first_failure: Some(PairFailure { n, t_units: m.exponent, lhs: m.left, rhs: m.right }),
            });
        }
    }
    Ok(PairCheckReport {
        pair: p.label().to_string(),
        n_checked: n_max,
        trunc_t_units: trunc,
        status: Status::Pass,
        first_failure: None,
    })
}
