//! The slice through `N_k` and the dilations `g_t`, in the model `FormModel::nilpotent`.

use nalgebra::DMatrix;
use rand::Rng;
use root_data::DualPair;

use crate::model::random_matrix;
use crate::{FormModel, GeometryError, MatrixOverD};

fn check_k(model: &FormModel, k: usize) -> Result<(), GeometryError> {
    let p = model.pair();
    if k > p.m() {
        return Err(GeometryError::Range(format!("k = {k} exceeds m = {}", p.m())));
    }
    Ok(())
}

/// `N_k = [[I_k, 0], [0, 0], [0, 0]]` (`d' x d`).
pub fn nilpotent_element(model: &FormModel, k: usize) -> Result<MatrixOverD, GeometryError> {
    check_k(model, k)?;
    let p = model.pair();
    let mut n = MatrixOverD::zeros(p.algebra(), p.d_prime(), p.d());
    n.set_block(0, 0, &MatrixOverD::identity(p.algebra(), k));
    Ok(n)
}

/// `[[I_k, 0], [0, w5], [w3, w6]]` with `w3` skew-hermitian (`k x k`),
/// `w5` of size `(d'-2k) x (d-k)` and `w6` of size `k x (d-k)`.
pub fn slice_point(
    model: &FormModel,
    k: usize,
    w3: &MatrixOverD,
    w5: &MatrixOverD,
    w6: &MatrixOverD,
) -> Result<MatrixOverD, GeometryError> {
    let p = model.pair();
    let (n, d) = (p.d_prime(), p.d());
    let mut w = nilpotent_element(model, k)?;
    let shapes = [(w3, k, k), (w5, n - 2 * k, d - k), (w6, k, d - k)];
    for (b, r, c) in shapes {
        if b.rows() != r || b.cols() != c {
            return Err(GeometryError::Shape(format!("slice block {}x{}, expected {r}x{c}", b.rows(), b.cols())));
        }
    }
    if w3.add(&w3.adjoint()).norm() > 1e-12 * (1.0 + w3.norm()) {
        return Err(GeometryError::Domain("w3 must be skew-hermitian".into()));
    }
    w.set_block(k, k, w5);
    w.set_block(n - k, 0, w3);
    w.set_block(n - k, k, w6);
    Ok(w)
}

pub fn random_slice_point<R: Rng + ?Sized>(model: &FormModel, k: usize, rng: &mut R) -> Result<MatrixOverD, GeometryError> {
    check_k(model, k)?;
    let p = model.pair();
    let (alg, n, d) = (p.algebra(), p.d_prime(), p.d());
    let a = random_matrix(rng, alg, k, k, 1.0);
    let w3 = a.sub(&a.adjoint());
    let w5 = random_matrix(rng, alg, n - 2 * k, d - k, 1.0);
    let w6 = random_matrix(rng, alg, k, d - k, 1.0);
    slice_point(model, k, &w3, &w5, &w6)
}

/// `g_t(w) = t s_t w` with `s_t = diag(t^{-1} I_k, I, t I_k)` in `G'`.
pub fn g_t(model: &FormModel, k: usize, t: f64, w: &MatrixOverD) -> Result<MatrixOverD, GeometryError> {
    check_k(model, k)?;
    model.check_w(w)?;
    let p = model.pair();
    let n = p.d_prime();
    let mut s = MatrixOverD::identity(p.algebra(), n);
    let id = MatrixOverD::identity(p.algebra(), k);
    s.set_block(0, 0, &id.scale(1.0 / t));
    s.set_block(n - k, n - k, &id.scale(t));
    Ok(s.mul(w).scale(t))
}

/// An orthonormal basis of the real span of `vs`.
fn span_basis(vs: &[Vec<f64>], dim: usize) -> DMatrix<f64> {
    if vs.is_empty() {
        return DMatrix::zeros(dim, 0);
    }
    let m = DMatrix::from_fn(dim, vs.len(), |r, c| vs[c][r]);
    // unordered: the sorted variant can permute `u` out of step with the values.
    // The default convergence threshold can leave `u` orthonormal only to ~1e-8
    // when singular values repeat, so iterate to full accuracy.
    let svd = m.clone().try_svd_unordered(true, false, 1e-18, 10_000).unwrap_or_else(|| m.svd_unordered(true, false));
    let u = svd.u.expect("u requested");
    let keep: Vec<usize> = (0..svd.singular_values.len()).filter(|&i| svd.singular_values[i] > 1e-10).collect();
    DMatrix::from_fn(dim, keep.len(), |r, c| u[(r, keep[c])])
}

fn unit_vectors(alg: root_data::Algebra, rows: usize, cols: usize) -> Vec<MatrixOverD> {
    let n = MatrixOverD::real_dim(alg, rows, cols);
    (0..n)
        .map(|i| {
            let mut v = vec![0.0; n];
            v[i] = 1.0;
            MatrixOverD::from_real_vec(alg, rows, cols, &v)
        })
        .collect()
}

/// Real basis of the tangent space of the slice at `N_k`, as columns.
fn slice_tangent_basis(model: &FormModel, k: usize) -> Result<DMatrix<f64>, GeometryError> {
    let p = model.pair();
    let (alg, n, d) = (p.algebra(), p.d_prime(), p.d());
    let zero = |r, c| MatrixOverD::zeros(alg, r, c);
    let base = nilpotent_element(model, k)?.to_real_vec();
    let diff = |w: MatrixOverD| -> Vec<f64> { w.to_real_vec().iter().zip(&base).map(|(a, b)| a - b).collect() };
    let mut vs = Vec::new();
    for e in unit_vectors(alg, k, k) {
        let sk = e.sub(&e.adjoint()).scale(0.5);
        vs.push(diff(slice_point(model, k, &sk, &zero(n - 2 * k, d - k), &zero(k, d - k))?));
    }
    for e in unit_vectors(alg, n - 2 * k, d - k) {
        vs.push(diff(slice_point(model, k, &zero(k, k), &e, &zero(k, d - k))?));
    }
    for e in unit_vectors(alg, k, d - k) {
        vs.push(diff(slice_point(model, k, &zero(k, k), &zero(n - 2 * k, d - k), &e)?));
    }
    Ok(span_basis(&vs, p.dim_w() as usize))
}

/// Determinant of the linear map `v -> g_t v` restricted to the span of the columns of `basis`,
/// together with how far the image leaves that span.
fn restricted_det(model: &FormModel, k: usize, t: f64, basis: &DMatrix<f64>) -> Result<(f64, f64), GeometryError> {
    let p = model.pair();
    let (alg, n, d) = (p.algebra(), p.d_prime(), p.d());
    let mut image = DMatrix::zeros(basis.nrows(), basis.ncols());
    for c in 0..basis.ncols() {
        let v: Vec<f64> = basis.column(c).iter().copied().collect();
        let w = MatrixOverD::from_real_vec(alg, n, d, &v);
        let gw = g_t(model, k, t, &w)?.to_real_vec();
        image.set_column(c, &nalgebra::DVector::from_vec(gw));
    }
    let coeffs = basis.transpose() * &image;
    let leak = (&image - basis * &coeffs).norm();
    Ok((coeffs.determinant(), leak))
}

/// Numeric `det g_t` on the slice tangent space, and the norm of the part of
/// `g_t(slice)` outside it (zero when the slice is preserved).
pub fn gt_slice_det_numeric(pair: &DualPair, k: usize, t: f64) -> Result<(f64, f64), GeometryError> {
    let model = FormModel::nilpotent(pair, k)?;
    let basis = slice_tangent_basis(&model, k)?;
    restricted_det(&model, k, t, &basis)
}

/// Numeric `det g_t` on all of `W`.
pub fn gt_full_det_numeric(pair: &DualPair, k: usize, t: f64) -> Result<f64, GeometryError> {
    let model = FormModel::nilpotent(pair, k)?;
    let n = pair.dim_w() as usize;
    Ok(restricted_det(&model, k, t, &DMatrix::identity(n, n))?.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tau;

    #[test]
    fn nilpotent_is_in_the_null_cone() {
        for pair in [DualPair::orthosymplectic(3, 2), DualPair::unitary(2, 2, 3), DualPair::quaternionic(2, 4)] {
            for k in 0..=pair.m() {
                let model = FormModel::nilpotent(&pair, k).unwrap();
                let nk = nilpotent_element(&model, k).unwrap();
                assert!(tau(&nk, &model).unwrap().norm() < 1e-14);
            }
        }
    }

    #[test]
    fn slice_rejects_hermitian_w3() {
        let pair = DualPair::unitary(2, 2, 2);
        let model = FormModel::nilpotent(&pair, 1).unwrap();
        let w3 = MatrixOverD::identity(pair.algebra(), 1);
        let z = |r, c| MatrixOverD::zeros(pair.algebra(), r, c);
        assert!(slice_point(&model, 1, &w3, &z(2, 1), &z(1, 1)).is_err());
    }
}
