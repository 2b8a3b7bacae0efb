use std::f64::consts::FRAC_PI_4;

use nalgebra::DMatrix;

use crate::element::{j_form, SymplecticElement, C64};
use crate::linalg::{intersection, range_basis, rank, restricted_det, signature};
use crate::CocycleError;

fn i_pow(k: i64) -> C64 {
    [C64::new(1.0, 0.0), C64::i(), C64::new(-1.0, 0.0), -C64::i()][k.rem_euclid(4) as usize]
}

fn minus_one(g: &SymplecticElement) -> DMatrix<f64> {
    g.matrix() - DMatrix::identity(2 * g.n(), 2 * g.n())
}

fn minus_one_c(u: &DMatrix<C64>) -> DMatrix<C64> {
    u - DMatrix::identity(u.nrows(), u.nrows())
}

/// `J_g = J^{-1}(g - 1)`.
fn j_g(g: &SymplecticElement) -> DMatrix<f64> {
    -j_form(g.n()) * minus_one(g)
}

/// `det(J_g)` restricted to `J_g W`; 1 when `g = 1`.
pub fn det_j_g(g: &SymplecticElement) -> Result<f64, CocycleError> {
    restricted_det(&j_g(g))
}

/// `ξ^2 = i^{dim (g-1)W} det(J_g)^{-1}` on `J_g W`.
pub fn theta_squared(g: &SymplecticElement) -> Result<C64, CocycleError> {
    let r = rank(&minus_one(g))? as i64;
    Ok(i_pow(r) / det_j_g(g)?)
}

/// The same square computed on `W_C^+` for `g` commuting with `J`:
/// `det(g - 1)^{-2} det(u)`, the first determinant taken on `(g - 1)W_C^+`.
pub fn theta_squared_unitary(g: &SymplecticElement) -> Result<C64, CocycleError> {
    let u = g.to_unitary()?;
    let d = restricted_det(&minus_one_c(&u))?;
    Ok(u.determinant() / (d * d))
}

/// `sqrt|det(J_{g1}) det(J_{g2}) / det(J_{g1 g2})|`.
pub fn cocycle_modulus(g1: &SymplecticElement, g2: &SymplecticElement) -> Result<f64, CocycleError> {
    check_same_n(g1, g2)?;
    let num = det_j_g(g1)? * det_j_g(g2)?;
    Ok((num / det_j_g(&g1.mul(g2))?).abs().sqrt())
}

/// A symmetric or hermitian form written on an orthonormal basis of the
/// space where it lives.
#[derive(Clone, Debug, PartialEq)]
pub struct SignatureForm<T: nalgebra::Scalar> {
    pub basis: DMatrix<T>,
    pub gram: DMatrix<T>,
    pub signature: i64,
}

/// `c(g) u = (g + 1) w` for `u = (g - 1) w`, applied to the columns of `u`.
fn cayley_on<T: crate::linalg::Field>(g: &DMatrix<T>, u: &DMatrix<T>) -> DMatrix<T> {
    let n = g.nrows();
    let w = crate::linalg::preimage(&(g - DMatrix::identity(n, n)), u);
    (g + DMatrix::identity(n, n)) * w
}

/// `q(u', u'') = ½<c(g1) u', u''> + ½<c(g2) u', u''>` on `(g1 - 1)W ∩ (g2 - 1)W`.
pub fn q_form(g1: &SymplecticElement, g2: &SymplecticElement) -> Result<SignatureForm<f64>, CocycleError> {
    check_same_n(g1, g2)?;
    let basis = intersection(&range_basis(&minus_one(g1))?, &range_basis(&minus_one(g2))?)?;
    let c = cayley_on(g1.matrix(), &basis) + cayley_on(g2.matrix(), &basis);
    // gram[(i, j)] = q(u_i, u_j) = ½ c_i^t J u_j
    let gram = (c.transpose() * j_form(g1.n()) * &basis).scale(0.5);
    let signature = signature(&gram)?;
    Ok(SignatureForm { basis, gram, signature })
}

/// `χ(sgn q / 8) = e^{(πi/4) sgn q}`.
pub fn cocycle_phase(g1: &SymplecticElement, g2: &SymplecticElement) -> Result<C64, CocycleError> {
    let s = q_form(g1, g2)?.signature;
    Ok(C64::from_polar(1.0, FRAC_PI_4 * s as f64))
}

/// `C(g1, g2) = |C| χ(sgn q / 8)`.
pub fn cocycle(g1: &SymplecticElement, g2: &SymplecticElement) -> Result<C64, CocycleError> {
    Ok(cocycle_phase(g1, g2)? * cocycle_modulus(g1, g2)?)
}

/// The cocycle on elements commuting with `J`, from determinants on `W_C^+`:
/// the complex conjugate of
/// `det(g1 - 1)_{U1} det(g2 - 1)_{U2} / det(g1 g2 - 1)_{U12}`, `U = (g - 1)W_C^+`.
///
/// The ratio itself has the right modulus but the opposite phase; only the
/// conjugate satisfies `ξ1^2 ξ2^2 C^2 = ξ12^2`.
pub fn unitary_cocycle(g1: &SymplecticElement, g2: &SymplecticElement) -> Result<C64, CocycleError> {
    check_same_n(g1, g2)?;
    let (u1, u2) = (g1.to_unitary()?, g2.to_unitary()?);
    let d1 = restricted_det(&minus_one_c(&u1))?;
    let d2 = restricted_det(&minus_one_c(&u2))?;
    let d12 = restricted_det(&minus_one_c(&(&u1 * &u2)))?;
    Ok((d1 * d2 / d12).conj())
}

/// `h(w', w'') = H(-i c(g1) w', w'') + H(-i c(g2) w', w'')` on
/// `(g1 - 1)W_C^+ ∩ (g2 - 1)W_C^+`, with `H(z, z') = z'^* z`.
pub fn h_form(g1: &SymplecticElement, g2: &SymplecticElement) -> Result<SignatureForm<C64>, CocycleError> {
    check_same_n(g1, g2)?;
    let (u1, u2) = (g1.to_unitary()?, g2.to_unitary()?);
    let basis = intersection(&range_basis(&minus_one_c(&u1))?, &range_basis(&minus_one_c(&u2))?)?;
    let c = (cayley_on(&u1, &basis) + cayley_on(&u2, &basis)) * -C64::i();
    // gram[(j, k)] = h(u_k, u_j)
    let gram = basis.adjoint() * c;
    let signature = signature(&gram)?;
    Ok(SignatureForm { basis, gram, signature })
}

fn check_same_n(g1: &SymplecticElement, g2: &SymplecticElement) -> Result<(), CocycleError> {
    if g1.n() != g2.n() {
        return Err(CocycleError::Shape(format!("dimensions {} and {} differ", 2 * g1.n(), 2 * g2.n())));
    }
    Ok(())
}
