//! Bailey pairs, the transforms that build new pairs from old ones, the
//! limiting Bailey lemma and Fine's identity.
//!
//! A pair records its parameter `a` and base `Q` explicitly; `verify_pair`
//! and `bailey_lemma_sides` derive every Pochhammer argument from them.
//! Transforms update them: Lovejoy's transform sends `a -> aQ`, the base
//! change sends `(a, Q) -> (a^2, Q^2)`.

mod fine;
mod lemma;
mod pair;
mod transforms;

pub use fine::{fine_identity_check, fine_sides};
pub use lemma::bailey_lemma_sides;
pub(crate) use lemma::sum_while;
pub use pair::{verify_pair, BaileyPair, PairCheckReport, PairFailure, Sequence};
pub use transforms::{lovejoy_star, slater_e1, square_base, symmetrize_b, u_pair_chain, u_pair_closed};
