//! Numerical laboratory for the metaplectic cocycle: the square of the
//! covering coordinate, modulus and phase of the cocycle, its form on the
//! unitary group, and the determinant identity relating the two.

mod cocycle;
mod element;
mod identity;
pub mod linalg;
mod splitting;
mod sweep;

pub use cocycle::{
    cocycle, cocycle_modulus, cocycle_phase, det_j_g, h_form, q_form, theta_squared, theta_squared_unitary,
    unitary_cocycle, SignatureForm,
};
pub use element::{j_form, random_symplectic, random_unitary, sample_rng, symplectic_pairing, SymplecticElement, C64};
pub use identity::{det_identity_check, signature_halving_check, DetIdentity, SignaturePair, KERNEL_TOL};
pub use splitting::{cover_splits, det_exponent, det_on_plus_space};
pub use sweep::{cocycle_sweep, minus_one_modulus, CocycleSweep, SWEEP_TOL};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum CocycleError {
    #[error("shape: {0}")]
    Shape(String),
    #[error("not symplectic (defect {0:e})")]
    NotSymplectic(f64),
    #[error("does not commute with J or is not unitary (defect {0:e})")]
    NotUnitary(f64),
    #[error("conditioning: {0}")]
    Conditioning(String),
    #[error("resample: {0}")]
    Resample(String),
}
