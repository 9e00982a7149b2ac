//! Exact truncated power series on the `q^{1/2}` exponent grid.
//!
//! Every exponent is stored as an integer number of half-units, so
//! `q^{n+1/2}` and `q^{j^2/2}` need no fractional bookkeeping. Coefficients
//! are arbitrary precision rationals.

mod exp;
mod monomial;
pub(crate) mod pochhammer;
mod qseries;

pub use exp::HalfExp;
pub use monomial::{Monomial, MonomialParam};
pub use pochhammer::{inv_pochhammer, pochhammer, Length};
pub use qseries::{Mismatch, QSeries};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("not a unit: {0} has zero constant term")]
    NonUnit(String),
    #[error("{what} is not divisible by q^{by}")]
    NotDivisible { what: String, by: HalfExp },
    #[error("summation did not terminate within {ceiling} terms")]
    NonTerminating { ceiling: usize },
    #[error("infinite product does not stabilise below the truncation order")]
    DivergentInfiniteProduct,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("{0}")]
    Parse(String),
}

pub type Result<T, E = SeriesError> = std::result::Result<T, E>;
