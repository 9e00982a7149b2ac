use std::fmt;
use std::str::FromStr;

use super::{HalfExp, SeriesError};

/// A signed power `±q^{e/2}`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    negative: bool,
    exp: HalfExp,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { negative: false, exp: HalfExp::ZERO };
    pub const MINUS_ONE: Monomial = Monomial { negative: true, exp: HalfExp::ZERO };

    pub const fn new(negative: bool, exp: HalfExp) -> Self {
        Monomial { negative, exp }
    }

    /// `q^k`.
    pub const fn q(k: u32) -> Self {
        Monomial::new(false, HalfExp::q(k))
    }

    /// `q^{t/2}`.
    pub const fn t(t_units: u32) -> Self {
        Monomial::new(false, HalfExp::new(t_units))
    }

    pub const fn exp(self) -> HalfExp {
        self.exp
    }

    pub const fn is_negative(self) -> bool {
        self.negative
    }

    /// True for the constant `+1`; `1 - z` is then the zero series.
    pub fn is_one(self) -> bool {
        self == Monomial::ONE
    }

    pub fn neg(self) -> Monomial {
        Monomial { negative: !self.negative, exp: self.exp }
    }

    pub fn mul(self, other: Monomial) -> Monomial {
        Monomial {
            negative: self.negative ^ other.negative,
            exp: self.exp + other.exp,
        }
    }

    /// Multiplies by `q^{t/2}`.
    pub fn shift(self, t_units: u32) -> Monomial {
        Monomial { negative: self.negative, exp: HalfExp::new(self.exp.t_units() + t_units) }
    }

    pub fn pow(self, n: u32) -> Monomial {
        Monomial {
            negative: self.negative && n % 2 == 1,
            exp: HalfExp::new(self.exp.t_units() * n),
        }
    }

    /// `self / other`, or `None` when the quotient has a negative exponent.
    pub fn checked_div(self, other: Monomial) -> Option<Monomial> {
        let t = self.exp.t_units().checked_sub(other.exp.t_units())?;
        Some(Monomial { negative: self.negative ^ other.negative, exp: HalfExp::new(t) })
    }

    pub(crate) fn sign_i32(self) -> i32 {
        if self.negative {
            -1
        } else {
            1
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.negative { "-" } else { "" };
        let t = self.exp.t_units();
        if t == 0 {
            write!(f, "{sign}1")
        } else {
            write!(f, "{sign}q^{}", self.exp)
        }
    }
}

/// Parses `[-]q^<k>`, `[-]q^<k>/2` (odd `k`), `1` and `-1`. A bare `q` is
/// accepted as `q^1`.
impl FromStr for Monomial {
    type Err = SeriesError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || SeriesError::Parse(format!("invalid monomial `{s}`"));
        let (negative, body) = match s.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, s),
        };
        match body {
            "1" => return Ok(Monomial::new(negative, HalfExp::ZERO)),
            "q" => return Ok(Monomial::new(negative, HalfExp::q(1))),
            _ => {}
        }
        let power = body.strip_prefix("q^").ok_or_else(bad)?;
        let digits = |d: &str| -> Result<u32, SeriesError> {
            if d.is_empty() || !d.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            d.parse::<u32>().map_err(|_| bad())
        };
        let t_units = match power.split_once('/') {
            Some((num, "2")) => {
                let k = digits(num)?;
                if k % 2 == 0 {
                    return Err(bad());
                }
                k
            }
            Some(_) => return Err(bad()),
            None => digits(power)?.checked_mul(2).ok_or_else(bad)?,
        };
        Ok(Monomial::new(negative, HalfExp::new(t_units)))
    }
}

/// A monomial or the symbolic limit `∞`, for parameters with limit semantics.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum MonomialParam {
    Finite(Monomial),
    Infinity,
}

impl From<Monomial> for MonomialParam {
    fn from(m: Monomial) -> Self {
        MonomialParam::Finite(m)
    }
}

impl fmt::Display for MonomialParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialParam::Finite(m) => m.fmt(f),
            MonomialParam::Infinity => f.write_str("inf"),
        }
    }
}

impl FromStr for MonomialParam {
    type Err = SeriesError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "inf" {
            Ok(MonomialParam::Infinity)
        } else {
            s.parse().map(MonomialParam::Finite)
        }
    }
}
