//! The determinant identity behind the phase of the unitary cocycle, and
//! the halving of signatures between `W` and `W_C^+`.

use nalgebra::DMatrix;

use crate::cocycle::{h_form, q_form};
use crate::element::{SymplecticElement, C64};
use crate::linalg::{
    complement_in, kernel_basis, preimage, range_basis, restricted_det, restricted_to, smallest_singular_value,
};
use crate::CocycleError;

/// Both sides of the identity
///
/// `det(g1 g2 - 1)_{U12} / (det(g1 - 1) det(g2 - 1)_U)
///   = det H(½(c(g1) + c(g2))·,·)_{U/V} / |det(g2 - 1: K12 -> V)|^2`
///
/// where `U = (g2 - 1)W_C^+`, `K12 = Ker(g1 g2 - 1)` and `V = (g2 - 1)K12`
/// is the radical of the form.
#[derive(Clone, Debug, PartialEq)]
pub struct DetIdentity {
    pub lhs: C64,
    pub rhs: C64,
    pub radical_dim: usize,
    /// `|lhs - rhs| / |lhs|`.
    pub residual: f64,
}

/// Eigenvalue 1 of `g1` closer than this makes the check ask for a new sample.
pub const KERNEL_TOL: f64 = 1e-6;

pub fn det_identity_check(g1: &SymplecticElement, g2: &SymplecticElement) -> Result<DetIdentity, CocycleError> {
    let (u1, u2) = (g1.to_unitary()?, g2.to_unitary()?);
    let n = u1.nrows();
    if u2.nrows() != n {
        return Err(CocycleError::Shape("dimensions differ".into()));
    }
    let one = DMatrix::<C64>::identity(n, n);
    let a1 = &u1 - &one;
    let a2 = &u2 - &one;
    let smallest = smallest_singular_value(&a1);
    if smallest < KERNEL_TOL {
        return Err(CocycleError::Resample(format!("g1 has an eigenvalue within {smallest:e} of 1")));
    }
    let a12 = &u1 * &u2 - &one;

    let u = range_basis(&a2)?;
    let lhs = restricted_det(&a12)? / (a1.determinant() * restricted_to(&a2, &u).determinant());

    let k12 = kernel_basis(&a12)?;
    let v = range_basis(&(&a2 * &k12))?;
    if v.ncols() != k12.ncols() {
        return Err(CocycleError::Conditioning("g2 - 1 is not injective on Ker(g1 g2 - 1)".into()));
    }
    let rest = complement_in(&u, &v)?;
    // ½(c(g1) + c(g2)) on the complement; c(g1) is defined everywhere.
    let c1 = (&u1 + &one) * a1.clone().try_inverse().expect("checked invertible") * &rest;
    let c2 = (&u2 + &one) * preimage(&a2, &rest);
    let t = (c1 + c2).scale(0.5);
    let form_det = (rest.adjoint() * t).determinant();
    let k_det = (v.adjoint() * &a2 * &k12).determinant().norm();
    let rhs = form_det / (k_det * k_det);
    Ok(DetIdentity { lhs, rhs, radical_dim: v.ncols(), residual: (lhs - rhs).norm() / lhs.norm() })
}

/// `sgn h` on `W_C^+` and `sgn q` on `W`, each from its own Gram spectrum.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SignaturePair {
    pub sgn_h: i64,
    pub sgn_q: i64,
}

impl SignaturePair {
    pub fn halves(&self) -> bool {
        2 * self.sgn_h == self.sgn_q
    }
}

pub fn signature_halving_check(g1: &SymplecticElement, g2: &SymplecticElement) -> Result<SignaturePair, CocycleError> {
    let sgn_h = h_form(g1, g2)?.signature;
    let sgn_q = q_form(g1, g2)?.signature;
    Ok(SignaturePair { sgn_h, sgn_q })
}
