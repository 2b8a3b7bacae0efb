//! Dual pair descriptors and the root data of their members.
//!
//! Polynomial objects (root products, sign characters) are exact. Torus
//! evaluations (denominators, characters) are double precision.

mod characters;
mod checks;
mod pair;
mod roots;
mod weights;

use scalar_algebra::ScalarError;

pub use characters::{dim_pi_prime, weyl_character, weyl_denominator, weyl_dimension, CayleyMonomial};
pub use checks::{degree_relation_check, dimension_identity_check};
pub use pair::{Algebra, CompactGroup, DualPair, GroupFamily};
pub use roots::{
    c_h1, cartan_signs, pi_g_h, pi_g_z, pi_gprime_hprime, pi_gprime_zprime, pi_s0_h2, pi_s0_h2_printed, rho,
    rho_doubleprime, sgn_g_h, substitute_squares, weyl_group,
};
pub use weights::{HCParam, HighestWeight};

#[derive(Debug, thiserror::Error, PartialEq)]
pub enum RootError {
    #[error("invalid dual pair: {0}")]
    InvalidPair(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("evaluation error: {0}")]
    Evaluation(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}
