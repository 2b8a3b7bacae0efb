//! Subspace computations with certified rank decisions.
//!
//! Ranks are decided by thresholding singular values (or eigenvalue moduli)
//! at `RANK_TOL`, scaled by the largest one when that exceeds 1. A decision
//! is only accepted when the smallest kept value is at least `GAP` times the
//! largest discarded one.

use nalgebra::{ComplexField, DMatrix, Dyn, SymmetricEigen, SVD};

use crate::element::C64;
use crate::CocycleError;

pub const RANK_TOL: f64 = 1e-9;
pub const GAP: f64 = 1e3;

/// Number of values above the threshold, after checking the spectral gap.
/// `values` must be nonnegative.
pub fn certified_rank(values: &[f64], what: &str) -> Result<usize, CocycleError> {
    let top = values.iter().cloned().fold(0.0, f64::max);
    let tol = RANK_TOL * top.max(1.0);
    let kept_min = values.iter().cloned().filter(|&s| s > tol).fold(f64::INFINITY, f64::min);
    let dropped_max = values.iter().cloned().filter(|&s| s <= tol).fold(0.0, f64::max);
    if kept_min.is_finite() && dropped_max > 0.0 && kept_min < GAP * dropped_max {
        return Err(CocycleError::Conditioning(format!(
            "{what}: no spectral gap ({kept_min:e} kept vs {dropped_max:e} dropped)"
        )));
    }
    Ok(values.iter().filter(|&&s| s > tol).count())
}

/// Scalars whose matrices are handled through a real SVD. Complex
/// matrices are embedded as `[[Re, -Im], [Im, Re]]`; nalgebra's complex SVD
/// is not reliable on rank-deficient input.
pub trait Field: ComplexField<RealField = f64> + Copy {
    const REAL_DIM: usize;
    /// Real matrix of the operator.
    fn embed(a: &DMatrix<Self>) -> DMatrix<f64>;
    /// Columns as real vectors `(Re; Im)`.
    fn stack(b: &DMatrix<Self>) -> DMatrix<f64>;
    /// Inverse of `stack`.
    fn unstack(v: &DMatrix<f64>) -> DMatrix<Self>;
}

impl Field for f64 {
    const REAL_DIM: usize = 1;
    fn embed(a: &DMatrix<f64>) -> DMatrix<f64> {
        a.clone()
    }
    fn stack(b: &DMatrix<f64>) -> DMatrix<f64> {
        b.clone()
    }
    fn unstack(v: &DMatrix<f64>) -> DMatrix<f64> {
        v.clone()
    }
}

impl Field for C64 {
    const REAL_DIM: usize = 2;
    fn embed(a: &DMatrix<C64>) -> DMatrix<f64> {
        let (r, c) = a.shape();
        let mut out = DMatrix::zeros(2 * r, 2 * c);
        out.view_mut((0, 0), (r, c)).copy_from(&a.map(|z| z.re));
        out.view_mut((0, c), (r, c)).copy_from(&a.map(|z| -z.im));
        out.view_mut((r, 0), (r, c)).copy_from(&a.map(|z| z.im));
        out.view_mut((r, c), (r, c)).copy_from(&a.map(|z| z.re));
        out
    }
    fn stack(b: &DMatrix<C64>) -> DMatrix<f64> {
        let (r, c) = b.shape();
        let mut out = DMatrix::zeros(2 * r, c);
        out.view_mut((0, 0), (r, c)).copy_from(&b.map(|z| z.re));
        out.view_mut((r, 0), (r, c)).copy_from(&b.map(|z| z.im));
        out
    }
    fn unstack(v: &DMatrix<f64>) -> DMatrix<C64> {
        let r = v.nrows() / 2;
        DMatrix::from_fn(r, v.ncols(), |i, j| C64::new(v[(i, j)], v[(i + r, j)]))
    }
}

/// Pads with zero rows so that the thin SVD exposes the whole right kernel.
fn padded(a: &DMatrix<f64>) -> DMatrix<f64> {
    if a.nrows() >= a.ncols() {
        return a.clone();
    }
    let mut p = DMatrix::zeros(a.ncols(), a.ncols());
    p.view_mut((0, 0), a.shape()).copy_from(a);
    p
}

/// Convergence threshold for the implicit QR sweeps. With nalgebra's default
/// (machine epsilon) the iteration can stop early when singular values
/// cluster, as they do in pairs for embedded complex matrices, leaving a
/// reconstruction error near `1e-8`.
const SVD_EPS: f64 = 1e-18;
const SVD_MAX_ITER: usize = 10_000;

/// SVD iterated to full working accuracy.
pub fn accurate_svd(a: &DMatrix<f64>, compute_u: bool, compute_v: bool) -> SVD<f64, Dyn, Dyn> {
    a.clone()
        .try_svd_unordered(compute_u, compute_v, SVD_EPS, SVD_MAX_ITER)
        .unwrap_or_else(|| a.clone().svd_unordered(compute_u, compute_v))
}

/// Singular values in descending order with the matching left and right
/// singular vectors as columns. The ordering is done here by index rather
/// than by `SVD::sort_by_singular_values`, whose column permutation does
/// not always follow the values.
pub fn sorted_svd(a: &DMatrix<f64>) -> (Vec<f64>, DMatrix<f64>, DMatrix<f64>) {
    let svd = accurate_svd(a, true, true);
    let (u, v) = (svd.u.expect("u computed"), svd.v_t.expect("v computed").transpose());
    let mut order: Vec<usize> = (0..svd.singular_values.len()).collect();
    order.sort_by(|&i, &j| svd.singular_values[j].total_cmp(&svd.singular_values[i]));
    let values = order.iter().map(|&i| svd.singular_values[i]).collect();
    (values, u.select_columns(&order), v.select_columns(&order))
}

/// Orthonormal basis of the span of real-orthonormal vectors that span a
/// subspace over `T`: greedy Gram-Schmidt keeping `rank` of them.
fn orthonormalize<T: Field>(z: &DMatrix<T>, rank: usize) -> DMatrix<T> {
    if T::REAL_DIM == 1 {
        return z.clone();
    }
    let mut rest: Vec<_> = z.column_iter().map(|c| c.into_owned()).collect();
    let mut out: Vec<nalgebra::DVector<T>> = Vec::with_capacity(rank);
    for _ in 0..rank {
        let (k, _) = rest
            .iter()
            .enumerate()
            .map(|(k, c)| (k, c.norm()))
            .fold((0, -1.0), |best, x| if x.1 > best.1 { x } else { best });
        let q = rest.swap_remove(k).normalize();
        for c in rest.iter_mut() {
            let proj = q.dotc(c);
            *c -= &q * proj;
        }
        out.push(q);
    }
    if out.is_empty() {
        DMatrix::zeros(z.nrows(), 0)
    } else {
        DMatrix::from_columns(&out)
    }
}

fn rank_over<T: Field>(values: &[f64], what: &str) -> Result<usize, CocycleError> {
    let r = certified_rank(values, what)?;
    if r % T::REAL_DIM != 0 {
        return Err(CocycleError::Conditioning(format!("{what}: odd real rank {r}")));
    }
    Ok(r / T::REAL_DIM)
}

/// Orthonormal basis of the column space, as columns.
pub fn range_basis<T: Field>(a: &DMatrix<T>) -> Result<DMatrix<T>, CocycleError> {
    if a.ncols() == 0 || a.nrows() == 0 {
        return Ok(DMatrix::zeros(a.nrows(), 0));
    }
    let (s, u, _) = sorted_svd(&T::embed(a));
    let r = rank_over::<T>(&s, "range")?;
    Ok(orthonormalize(&T::unstack(&u.columns(0, r * T::REAL_DIM).into_owned()), r))
}

/// Orthonormal basis of the kernel, as columns.
pub fn kernel_basis<T: Field>(a: &DMatrix<T>) -> Result<DMatrix<T>, CocycleError> {
    let n = a.ncols();
    if n == 0 {
        return Ok(DMatrix::zeros(0, 0));
    }
    let (s, _, v) = sorted_svd(&padded(&T::embed(a)));
    let r = rank_over::<T>(&s, "kernel")?;
    let m = T::REAL_DIM;
    Ok(orthonormalize(&T::unstack(&v.columns(r * m, (n - r) * m).into_owned()), n - r))
}

pub fn rank<T: Field>(a: &DMatrix<T>) -> Result<usize, CocycleError> {
    Ok(range_basis(a)?.ncols())
}

pub fn smallest_singular_value<T: Field>(a: &DMatrix<T>) -> f64 {
    sorted_svd(&T::embed(a)).0.last().copied().unwrap_or(0.0)
}

/// Orthonormal basis of `span(a) ∩ span(b)` for matrices with orthonormal columns.
pub fn intersection<T: Field>(a: &DMatrix<T>, b: &DMatrix<T>) -> Result<DMatrix<T>, CocycleError> {
    let (ra, rb) = (a.ncols(), b.ncols());
    if ra == 0 || rb == 0 {
        return Ok(DMatrix::zeros(a.nrows(), 0));
    }
    let mut stacked = DMatrix::zeros(a.nrows(), ra + rb);
    stacked.columns_mut(0, ra).copy_from(a);
    stacked.columns_mut(ra, rb).copy_from(&-b);
    let k = kernel_basis(&stacked)?;
    range_basis(&(a * k.rows(0, ra)))
}

/// Orthonormal basis of the orthogonal complement of `span(v)` inside `span(u)`.
pub fn complement_in<T: Field>(u: &DMatrix<T>, v: &DMatrix<T>) -> Result<DMatrix<T>, CocycleError> {
    if v.ncols() == 0 {
        return Ok(u.clone());
    }
    let proj = u - v * (v.adjoint() * u);
    range_basis(&proj)
}

/// Determinant of `a` restricted to its own image (1 on the zero space).
pub fn restricted_det<T: Field>(a: &DMatrix<T>) -> Result<T, CocycleError> {
    let q = range_basis(a)?;
    Ok(restricted_to(a, &q).determinant())
}

/// Matrix of `a` compressed to the span of the orthonormal columns of `q`.
pub fn restricted_to<T: Field>(a: &DMatrix<T>, q: &DMatrix<T>) -> DMatrix<T> {
    q.adjoint() * a * q
}

/// Signature of a hermitian matrix, with a certified zero/nonzero split.
/// Fails if the matrix is not hermitian to `1e-8` relative.
pub fn signature<T: Field>(gram: &DMatrix<T>) -> Result<i64, CocycleError> {
    if gram.is_empty() {
        return Ok(0);
    }
    let scale = gram.norm().max(1.0);
    let skew = (gram - gram.adjoint()).norm();
    if skew > 1e-8 * scale {
        return Err(CocycleError::Conditioning(format!("gram matrix not hermitian (defect {skew:e})")));
    }
    // the embedding of a hermitian matrix is symmetric with every eigenvalue doubled
    let sym = T::embed(&(gram + gram.adjoint()).scale(0.5));
    let eig = SymmetricEigen::new(sym).eigenvalues;
    let abs: Vec<f64> = eig.iter().map(|x| x.abs()).collect();
    certified_rank(&abs, "signature")?;
    let tol = RANK_TOL * abs.iter().cloned().fold(1.0, f64::max);
    let s: i64 = eig.iter().map(|&x| if x > tol { 1 } else if x < -tol { -1 } else { 0 }).sum();
    Ok(s / T::REAL_DIM as i64)
}

/// Least-squares preimage of the columns of `b` under `a`.
pub fn preimage<T: Field>(a: &DMatrix<T>, b: &DMatrix<T>) -> DMatrix<T> {
    let m = padded(&T::embed(a));
    let svd = accurate_svd(&m, true, true);
    let tol = RANK_TOL * svd.singular_values.max().max(1.0);
    let mut bb = DMatrix::zeros(m.nrows(), b.ncols());
    let sb = T::stack(b);
    bb.view_mut((0, 0), sb.shape()).copy_from(&sb);
    T::unstack(&svd.solve(&bb, tol).expect("u and v computed"))
}
