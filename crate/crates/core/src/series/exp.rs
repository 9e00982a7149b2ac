use std::fmt;

use serde::{Deserialize, Serialize};

/// Exponent of `q` stored in units of `q^{1/2}`.
///
/// `q^k` has `t_units == 2k`; `q^{k/2}` for odd `k` has `t_units == k`.
#[derive(
    Copy, Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
#[serde(transparent)]
pub struct HalfExp(u32);

impl HalfExp {
    pub const ZERO: HalfExp = HalfExp(0);

    pub const fn new(t_units: u32) -> Self {
        HalfExp(t_units)
    }

    /// `q^k`, i.e. `2k` half-units.
    pub const fn q(k: u32) -> Self {
        HalfExp(2 * k)
    }

    pub const fn t_units(self) -> u32 {
        self.0
    }

    pub const fn is_integral(self) -> bool {
        self.0 % 2 == 0
    }

    pub fn saturating_sub(self, other: HalfExp) -> HalfExp {
        HalfExp(self.0.saturating_sub(other.0))
    }
}

impl std::ops::Add for HalfExp {
    type Output = HalfExp;
    fn add(self, rhs: HalfExp) -> HalfExp {
        HalfExp(self.0 + rhs.0)
    }
}

/// Prints the exponent as a reduced fraction: `3`, `5/2`.
impl fmt::Display for HalfExp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 % 2 == 0 {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}
