//! Signed counts of the three partition families, by direct enumeration.
//!
//! Nothing here touches the series ring: counts are built by adding signed
//! integer weights over part sizes and multiplicities.
//!
//! * **P**: `m` distinct parts with largest part `j` (`j = 0` when `m = 0`),
//!   plus any number of copies of the part `2m + 1`; weight `(-1)^j`.
//! * **Q**: a pair `(mu, lambda)`. `mu` is an overpartition into even parts
//!   `<= 2m` and `j` counts all its parts, overlined or not. Every odd part
//!   `< 2m + 1` occurs in `lambda` a positive even number of times and `2m + 1`
//!   any number of times; weight `(-1)^j`.
//! * **R**: as Q, except every odd part `< 2m + 1` occurs at least once (any
//!   multiplicity).
//!
//! The statement of R names the pair `(mu, pi)` and then describes `lambda`;
//! the two names refer to the same object here. "mu is the number of
//! overpartitions" is read as "mu is an overpartition".

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Family {
    P,
    Q,
    R,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::P, Family::Q, Family::R];

    /// Smallest size of an object with parameter `m`.
    fn min_size(self, m: usize) -> usize {
        match self {
            Family::P => m * (m + 1) / 2,
            Family::Q => 2 * m * m,
            Family::R => m * m,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "P" | "p" => Ok(Family::P),
            "Q" | "q" => Ok(Family::Q),
            "R" | "r" => Ok(Family::R),
            _ => Err(format!("unknown family `{s}` (expected P, Q or R)")),
        }
    }
}

/// `counts[n] = sum_{m, j} (-1)^j · #objects of size n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SignedCountTable {
    pub family: Family,
    pub n_max: usize,
    #[serde(serialize_with = "bigints")]
    pub counts: Vec<BigInt>,
}

fn bigints<S: serde::Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for x in v {
        // numbers while they fit, exact strings beyond
        match i64::try_from(x) {
            Ok(small) => seq.serialize_element(&small)?,
            Err(_) => seq.serialize_element(&x.to_string())?,
        }
    }
    seq.end()
}

impl SignedCountTable {
    pub fn count(&self, n: usize) -> &BigInt {
        &self.counts[n]
    }
}

type Poly = Vec<BigInt>;

fn zeros(len: usize) -> Poly {
    vec![BigInt::zero(); len]
}

fn unit(len: usize) -> Poly {
    let mut p = zeros(len);
    p[0] = BigInt::one();
    p
}

/// Convolves `p` with `sum_{k in mults} sign(k) · q^{part·k}`.
fn with_multiplicities(p: &Poly, part: usize, mults: impl Fn(usize) -> Option<i32>) -> Poly {
    let mut out = zeros(p.len());
    for (s, c) in p.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mut k = 0;
        while s + part * k < p.len() {
            if let Some(sign) = mults(k) {
                let target = &mut out[s + part * k];
                if sign > 0 {
                    *target += c;
                } else {
                    *target -= c;
                }
            }
            k += 1;
        }
    }
    out
}

fn convolve(a: &Poly, b: &Poly) -> Poly {
    let mut out = zeros(a.len());
    for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
        for (j, y) in b.iter().enumerate().take(a.len() - i) {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

/// Per-m signed counts of family P, up to size `n_max`.
fn slices_p(n_max: usize) -> Vec<Poly> {
    let len = n_max + 1;
    let mut m_max = 0;
    while Family::P.min_size(m_max + 1) <= n_max {
        m_max += 1;
    }
    // subsets[m][s]: subsets of {1..k-1} with m parts and sum s
    let mut subsets: Vec<Poly> = (0..=m_max).map(|m| if m == 0 { unit(len) } else { zeros(len) }).collect();
    // signed[m][s]: subsets with m parts, sum s, weighted by (-1)^{largest}
    let mut signed: Vec<Poly> = (0..=m_max).map(|m| if m == 0 { unit(len) } else { zeros(len) }).collect();
    for k in 1..=n_max {
        for m in (1..=m_max).rev() {
            for s in k..len {
                let c = subsets[m - 1][s - k].clone();
                if c.is_zero() {
                    continue;
                }
                if k % 2 == 0 {
                    signed[m][s] += &c;
                } else {
                    signed[m][s] -= &c;
                }
                subsets[m][s] += c;
            }
        }
    }
    signed
        .into_iter()
        .enumerate()
        .map(|(m, p)| with_multiplicities(&p, 2 * m + 1, |_| Some(1)))
        .collect()
}

/// Per-m signed counts of families Q and R.
fn slices_qr(family: Family, n_max: usize) -> Vec<Poly> {
    let len = n_max + 1;
    let mut out = Vec::new();
    let mut m = 0;
    while family.min_size(m) <= n_max {
        // mu: each even size 2i carries k plain copies and o overlined (o <= 1),
        // weight (-1)^{k+o}
        let mut mu = unit(len);
        for i in 1..=m {
            mu = with_multiplicities(&mu, 2 * i, |k| Some(if k % 2 == 0 { 1 } else { -1 }));
            mu = with_multiplicities(&mu, 2 * i, |o| match o {
                0 => Some(1),
                1 => Some(-1),
                _ => None,
            });
        }
        let mut lambda = unit(len);
        for i in 1..=m {
            let odd = 2 * i - 1;
            lambda = match family {
                Family::Q => with_multiplicities(&lambda, odd, |k| (k > 0 && k % 2 == 0).then_some(1)),
                _ => with_multiplicities(&lambda, odd, |k| (k > 0).then_some(1)),
            };
        }
        lambda = with_multiplicities(&lambda, 2 * m + 1, |_| Some(1));
        out.push(convolve(&mu, &lambda));
        m += 1;
    }
    out
}

/// Signed counts split by the parameter `m`; entry `m` is the contribution
/// of objects with that `m`.
pub fn enumerate_slices(family: Family, n_max: usize) -> Vec<Vec<BigInt>> {
    match family {
        Family::P => slices_p(n_max),
        Family::Q | Family::R => slices_qr(family, n_max),
    }
}

pub fn enumerate(family: Family, n_max: usize) -> SignedCountTable {
    let mut counts = zeros(n_max + 1);
    for slice in enumerate_slices(family, n_max) {
        for (c, x) in counts.iter_mut().zip(slice) {
            *c += x;
        }
    }
    SignedCountTable { family, n_max, counts }
}

pub fn enumerate_p(n_max: usize) -> SignedCountTable {
    enumerate(Family::P, n_max)
}

pub fn enumerate_q(n_max: usize) -> SignedCountTable {
    enumerate(Family::Q, n_max)
}

pub fn enumerate_r(n_max: usize) -> SignedCountTable {
    enumerate(Family::R, n_max)
}

/// Explicit-object enumeration for small sizes, kept as a check on the
/// dynamic programme above. Exponential; use only for `n_max <= ~20`.
pub mod naive {
    use super::Family;

    /// All partitions of `n` into parts from `allowed` (descending lists).
    fn partitions(n: usize, allowed: &[usize]) -> Vec<Vec<usize>> {
        fn go(n: usize, allowed: &[usize], max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if n == 0 {
                out.push(cur.clone());
                return;
            }
            for &p in allowed.iter().filter(|&&p| p <= max && p <= n) {
                cur.push(p);
                go(n - p, allowed, p, cur, out);
                cur.pop();
            }
        }
        let mut allowed = allowed.to_vec();
        allowed.sort_unstable_by(|a, b| b.cmp(a));
        let mut out = Vec::new();
        go(n, &allowed, usize::MAX, &mut Vec::new(), &mut out);
        out
    }

    fn multiplicity(parts: &[usize], p: usize) -> usize {
        parts.iter().filter(|&&x| x == p).count()
    }

    /// Overpartitions of `n` into even parts `<= 2m`, as the number of parts
    /// of each one (every distinct size may be overlined or not).
    fn overpartition_part_counts(n: usize, m: usize) -> Vec<usize> {
        let evens: Vec<usize> = (1..=m).map(|i| 2 * i).collect();
        let mut out = Vec::new();
        for parts in partitions(n, &evens) {
            let mut distinct = parts.clone();
            distinct.dedup();
            for _ in 0..(1usize << distinct.len()) {
                out.push(parts.len());
            }
        }
        out
    }

    fn lambda_ok(family: Family, parts: &[usize], m: usize) -> bool {
        (1..=m).all(|i| {
            let k = multiplicity(parts, 2 * i - 1);
            match family {
                Family::Q => k > 0 && k % 2 == 0,
                _ => k > 0,
            }
        })
    }

    fn count_p(n: usize) -> i64 {
        // distinct-part sets as strictly decreasing lists
        fn subsets(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            out.push(cur.clone());
            for p in (1..=max.min(n)).rev() {
                cur.push(p);
                subsets(n - p, p - 1, cur, out);
                cur.pop();
            }
        }
        let mut sets = Vec::new();
        subsets(n, n, &mut Vec::new(), &mut sets);
        let mut total = 0;
        for s in sets {
            let size: usize = s.iter().sum();
            let m = s.len();
            let j = s.first().copied().unwrap_or(0);
            if (n - size) % (2 * m + 1) == 0 {
                total += if j % 2 == 0 { 1 } else { -1 };
            }
        }
        total
    }

    fn count_qr(family: Family, n: usize) -> i64 {
        let mut total = 0;
        let mut m = 0;
        while family.min_size(m) <= n {
            let odds: Vec<usize> = (0..=m).map(|i| 2 * i + 1).collect();
            for mu_size in (0..=n).step_by(2) {
                let mu_weight: i64 = overpartition_part_counts(mu_size, m)
                    .into_iter()
                    .map(|j| if j % 2 == 0 { 1 } else { -1 })
                    .sum();
                if mu_weight == 0 {
                    continue;
                }
                let lambdas = partitions(n - mu_size, &odds)
                    .into_iter()
                    .filter(|l| lambda_ok(family, l, m))
                    .count() as i64;
                total += mu_weight * lambdas;
            }
            m += 1;
        }
        total
    }

    /// Signed count of objects of size exactly `n`.
    pub fn signed_count(family: Family, n: usize) -> i64 {
        match family {
            Family::P => count_p(n),
            Family::Q | Family::R => count_qr(family, n),
        }
    }
}
