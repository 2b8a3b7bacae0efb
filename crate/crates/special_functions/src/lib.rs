//! Polynomials attached to the Fourier transform of `(1+iy)^{-a}(1-iy)^{-b}`.
//!
//! For integers `a, b`,
//!
//! ```text
//! ∫ (1+iy)^{-a} (1-iy)^{-b} e^{-iyξ} dy = P_{a,b}(ξ) e^{-|ξ|} + Q_{a,b}(-d/dξ) δ_0
//! ```
//!
//! where `P_{a,b}` is `2π P_{a,b,2}` on `ξ > 0` and `2π P_{a,b,-2}` on `ξ < 0`,
//! and `Q_{a,b}` vanishes unless `a + b <= 0`. Everything here is computed
//! from the defining finite sums; the identity checks compare those sums
//! against the closed forms they are supposed to satisfy.

mod checks;
mod distribution;
mod family;

pub use checks::{
    derivative_identity_check, reflection_check, shift_identity_check, value_at_zero_check,
};
pub use distribution::{fourier_pair, LinePolyDistribution};
pub use family::{poly_branch, poly_p2, poly_pm2, poly_q, value_at_zero, Branch, ExponentPair, ScaledPoly};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DomainError {
    #[error("value at zero of the {branch:?} branch needs {need}, got (a, b) = ({a}, {b})")]
    ValueAtZero { a: i64, b: i64, branch: Branch, need: &'static str },
}
