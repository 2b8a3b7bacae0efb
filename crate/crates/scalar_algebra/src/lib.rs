//! Exact arithmetic used everywhere else in the workspace.
//!
//! Coefficients are arbitrary-precision rationals. Constants that carry
//! powers of pi and i are kept symbolic in [`PiScalar`] so identities close
//! exactly instead of up to rounding.

mod error;
mod linalg;
mod multipoly;
mod perm;
mod pi_scalar;
mod rat;
mod report;
mod unipoly;
mod vandermonde;

pub use error::ScalarError;
pub use linalg::{exact_det, falling_product_sum, vandermonde_det};
pub use multipoly::MultiPoly;
pub use perm::{hyperoctahedral_group, signed_even_group, symmetric_group, SignedPermutation};
pub use pi_scalar::PiScalar;
pub use report::{Failure, Report};
pub use rat::{factorial, int, parse_rat, pow2, rat, rat_to_f64, rising, Rat};
pub use unipoly::UniPoly;
pub use vandermonde::{divide_by_vandermonde, vandermonde_for_group, VandermondeKind};
