//! When the metaplectic cover restricted to the compact member of a dual pair splits.

use nalgebra::DMatrix;
use root_data::{Algebra, DualPair};

use crate::element::C64;
use crate::linalg::kernel_basis;
use crate::CocycleError;

/// The power `k` with `det(g ⊗ 1)_{V ⊗ V'_C^+} = det(δ(g))^k`:
/// `l'` for `Sp_{2l'}(R)`, `p - q` for `U_{p,q}`, and 0 for `O*_{2d'}`.
pub fn det_exponent(pair: &DualPair) -> i64 {
    match pair.algebra() {
        Algebra::Real => pair.l_prime() as i64,
        Algebra::Complex => {
            let (p, q) = pair.signature();
            p as i64 - q as i64
        }
        Algebra::Quaternion => 0,
    }
}

/// The cover splits unless `G' = Sp_{2m}(R)` with `m` odd or `G' = U_{p,q}` with `p + q` odd.
pub fn cover_splits(pair: &DualPair) -> bool {
    det_exponent(pair) % 2 == 0
}

/// `det(g)` on the `+i` eigenspace of `j` in `C^m`, for real `m x m`
/// matrices `g`, `j` with `j^2 = -1` and `g j = j g`.
pub fn det_on_plus_space(g: &DMatrix<f64>, j: &DMatrix<f64>) -> Result<C64, CocycleError> {
    let m = g.nrows();
    let gc = g.map(|x| C64::new(x, 0.0));
    let jc = j.map(|x| C64::new(x, 0.0));
    let plus = kernel_basis(&(jc - DMatrix::from_diagonal_element(m, m, C64::i())))?;
    if 2 * plus.ncols() != m {
        return Err(CocycleError::Conditioning("j is not a complex structure".into()));
    }
    Ok((plus.adjoint() * gc * &plus).determinant())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn listed_cases() {
        assert!(!cover_splits(&DualPair::orthosymplectic(3, 1)));
        assert!(cover_splits(&DualPair::orthosymplectic(3, 2)));
        assert!(!cover_splits(&DualPair::unitary(2, 1, 2)));
        assert!(cover_splits(&DualPair::unitary(2, 1, 1)));
        assert!(cover_splits(&DualPair::unitary(2, 0, 4)));
        assert!(cover_splits(&DualPair::quaternionic(2, 3)));
    }
}
