//! Intertwining distributions for dual pairs with one compact member.
//!
//! The distributions are handled symbolically: exponent pairs `(a_j, b_j)`
//! attached to a Harish-Chandra parameter, the polynomial factors they
//! select, and for two compact unitary groups the closed form as an
//! invariant polynomial times a Gaussian.

use root_data::RootError;
use scalar_algebra::ScalarError;
use symplectic_geometry::GeometryError;
use thiserror::Error;

mod howe;
mod profile;
mod toy;
mod unitary;

pub use howe::{admissible_params, correspond, occurs_in_omega, vanishing_condition_l_gt_lprime};
pub use profile::{integrand_profile, ABExponents, Convention, CoordinateDomain, CoordinateProfile, IntegrandProfile};
pub use toy::{o1_sp_toy, ToyDistribution, ToySign};
pub use unitary::{
    eval_uu, multiplicity_one_check, predicted_ratio, skew_factorial_identity, t_at_zero_skew_sum, uu_distribution, MultiplicityReport,
    UUProfile,
};

#[derive(Debug, Error, PartialEq)]
pub enum IntertwiningError {
    #[error("outside the domain: {0}")]
    Domain(String),
    #[error("parameter is not admissible: {0}")]
    Inadmissible(String),
    #[error("internal error: {0}")]
    Internal(String),
    #[error(transparent)]
    Root(#[from] RootError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}
