//! The symplectic space `W` as a space of matrices over `R`, `C` or `H`,
//! with the moment maps, Cartan subspaces, nilpotent orbits and dilations.

use root_data::RootError;
use thiserror::Error;

mod cartan;
mod matrix;
mod model;
mod orbits;
mod slice;

pub use cartan::{cartan_element, complex_structures, normal_form_residual, left_scalar, CartanSpec};
pub use matrix::{MatrixOverD, Quaternion};
pub use model::{is_in_wg, tau, tau_prime, FormModel};
pub use orbits::{
    derivative_order_bound, dim_sh, gt_dilation_det, homogeneity_gap, homogeneity_gap_listed, orbit_dim,
    orbit_dim_general, orbit_table, stable_range_equality, stable_range_rule, OrbitDescriptor,
};
pub use slice::{g_t, gt_full_det_numeric, gt_slice_det_numeric, nilpotent_element, random_slice_point, slice_point};

#[derive(Debug, Error, PartialEq)]
pub enum GeometryError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("matrix is singular")]
    Singular,
    #[error("out of range: {0}")]
    Range(String),
    #[error("outside the domain: {0}")]
    Domain(String),
    #[error(transparent)]
    Root(#[from] RootError),
}
