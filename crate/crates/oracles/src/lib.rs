//! Verification engines that share as little code as possible with what they
//! check: numerical quadrature for the Fourier pairs, brute-force expansions
//! for the determinant and Gaussian integral identities, and tableau sums
//! for characters.

use root_data::RootError;
use scalar_algebra::ScalarError;
use thiserror::Error;

mod combinatorial;
mod pairing;
mod quadrature;
mod tableaux;

pub use combinatorial::{
    combinatorial_suite, factorial_product, falling_product_brute_force, fan_det, fan_matrix, gaussian_selberg,
    gaussian_selberg_closed_form, partial_pi_pi, CombinatorialParams,
};
pub use pairing::{pair_with_test_function, pairing_suite, PairingCheck, TestFunction};
pub use quadrature::{
    fourier_check, gauss_kronrod, quad_fourier, quad_fourier_with, FourierCheck, FourierRow, Method, Quadrature,
    QuadratureSpec,
};
pub use tableaux::{character_suite, schur_oracle, semistandard_tableaux, Tableau};

#[derive(Debug, Error, PartialEq)]
pub enum OracleError {
    #[error("outside the domain: {0}")]
    Domain(String),
    #[error("quadrature stopped at error {achieved:e}, target {target:e}")]
    Quadrature { achieved: f64, target: f64 },
    #[error(transparent)]
    Root(#[from] RootError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}
