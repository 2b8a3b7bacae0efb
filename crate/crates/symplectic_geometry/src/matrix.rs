use nalgebra::DMatrix;
use num_complex::Complex64;
use root_data::Algebra;

use crate::GeometryError;

/// A quaternion `a + b j` with `a, b` complex, realized as `[[a, b], [-conj b, conj a]]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Quaternion {
    pub a: Complex64,
    pub b: Complex64,
}

/// Matrix with entries in D, stored through its complex realization.
///
/// R and C entries occupy one complex slot (R entries have zero imaginary
/// part); an H entry occupies a 2x2 block. The realization is a
/// *-homomorphism, so the conjugate transpose over D is the complex adjoint.
#[derive(Clone, Debug, PartialEq)]
pub struct MatrixOverD {
    algebra: Algebra,
    rows: usize,
    cols: usize,
    data: DMatrix<Complex64>,
}

fn block(algebra: Algebra) -> usize {
    if algebra == Algebra::Quaternion {
        2
    } else {
        1
    }
}

impl MatrixOverD {
    pub fn zeros(algebra: Algebra, rows: usize, cols: usize) -> Self {
        let s = block(algebra);
        MatrixOverD { algebra, rows, cols, data: DMatrix::zeros(rows * s, cols * s) }
    }

    pub fn identity(algebra: Algebra, n: usize) -> Self {
        let s = block(algebra);
        MatrixOverD { algebra, rows: n, cols: n, data: DMatrix::identity(n * s, n * s) }
    }

    /// Wraps a complex realization, checking the shape and the reality condition.
    pub fn from_realization(algebra: Algebra, data: DMatrix<Complex64>) -> Result<Self, GeometryError> {
        let s = block(algebra);
        if data.nrows() % s != 0 || data.ncols() % s != 0 {
            return Err(GeometryError::Shape(format!("{}x{} is not a block matrix", data.nrows(), data.ncols())));
        }
        let m = MatrixOverD { algebra, rows: data.nrows() / s, cols: data.ncols() / s, data };
        if m.reality_defect() > 1e-12 * m.norm().max(1.0) {
            return Err(GeometryError::Shape(format!("matrix does not have entries in {}", algebra.symbol())));
        }
        Ok(m)
    }

    pub fn algebra(&self) -> Algebra {
        self.algebra
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn realization(&self) -> &DMatrix<Complex64> {
        &self.data
    }

    /// Distance from the subspace of realizations of D-matrices.
    pub fn reality_defect(&self) -> f64 {
        match self.algebra {
            Algebra::Real => self.data.iter().map(|z| z.im.abs()).fold(0.0, f64::max),
            Algebra::Complex => 0.0,
            Algebra::Quaternion => {
                let mut worst: f64 = 0.0;
                for r in 0..self.rows {
                    for c in 0..self.cols {
                        let d = &self.data;
                        let (a, b) = (d[(2 * r, 2 * c)], d[(2 * r, 2 * c + 1)]);
                        worst = worst.max((d[(2 * r + 1, 2 * c)] + b.conj()).norm());
                        worst = worst.max((d[(2 * r + 1, 2 * c + 1)] - a.conj()).norm());
                    }
                }
                worst
            }
        }
    }

    /// Complex entry; panics for H.
    pub fn get(&self, r: usize, c: usize) -> Complex64 {
        assert!(self.algebra != Algebra::Quaternion, "use get_quaternion over H");
        self.data[(r, c)]
    }

    pub fn set(&mut self, r: usize, c: usize, z: Complex64) {
        match self.algebra {
            Algebra::Real => {
                assert!(z.im == 0.0, "real entry expected");
                self.data[(r, c)] = z;
            }
            Algebra::Complex => self.data[(r, c)] = z,
            Algebra::Quaternion => self.set_quaternion(r, c, Quaternion { a: z, b: Complex64::new(0.0, 0.0) }),
        }
    }

    pub fn get_quaternion(&self, r: usize, c: usize) -> Quaternion {
        match self.algebra {
            Algebra::Quaternion => Quaternion { a: self.data[(2 * r, 2 * c)], b: self.data[(2 * r, 2 * c + 1)] },
            _ => Quaternion { a: self.data[(r, c)], b: Complex64::new(0.0, 0.0) },
        }
    }

    pub fn set_quaternion(&mut self, r: usize, c: usize, q: Quaternion) {
        assert_eq!(self.algebra, Algebra::Quaternion);
        self.data[(2 * r, 2 * c)] = q.a;
        self.data[(2 * r, 2 * c + 1)] = q.b;
        self.data[(2 * r + 1, 2 * c)] = -q.b.conj();
        self.data[(2 * r + 1, 2 * c + 1)] = q.a.conj();
    }

    fn same(&self, other: &Self) {
        assert_eq!(self.algebra, other.algebra, "mixed division algebras");
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.same(other);
        assert_eq!(self.cols, other.rows, "shape mismatch");
        MatrixOverD { algebra: self.algebra, rows: self.rows, cols: other.cols, data: &self.data * &other.data }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.same(other);
        MatrixOverD { data: &self.data + &other.data, ..self.clone() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.same(other);
        MatrixOverD { data: &self.data - &other.data, ..self.clone() }
    }

    pub fn scale(&self, t: f64) -> Self {
        MatrixOverD { data: self.data.map(|z| z * t), ..self.clone() }
    }

    /// Conjugate transpose over D.
    pub fn adjoint(&self) -> Self {
        MatrixOverD { algebra: self.algebra, rows: self.cols, cols: self.rows, data: self.data.adjoint() }
    }

    pub fn norm(&self) -> f64 {
        self.data.norm()
    }

    /// `tr_{D/R}`: the trace of the matrix as an R-linear map of `D^n`.
    pub fn real_trace(&self) -> f64 {
        assert_eq!(self.rows, self.cols);
        let factor = match self.algebra {
            Algebra::Real => 1.0,
            Algebra::Complex | Algebra::Quaternion => 2.0,
        };
        factor * self.data.trace().re
    }

    /// Rank over D, counting singular values above `tol * max(1, σ_max)`.
    /// The SVD is taken of the real form `[[Re, -Im], [Im, Re]]` (every
    /// complex singular value twice): nalgebra's complex SVD is not reliable
    /// on rank-deficient input.
    pub fn rank(&self, tol: f64) -> usize {
        if self.data.is_empty() {
            return 0;
        }
        let (r, c) = self.data.shape();
        let mut real = DMatrix::<f64>::zeros(2 * r, 2 * c);
        real.view_mut((0, 0), (r, c)).copy_from(&self.data.map(|z| z.re));
        real.view_mut((0, c), (r, c)).copy_from(&self.data.map(|z| -z.im));
        real.view_mut((r, 0), (r, c)).copy_from(&self.data.map(|z| z.im));
        real.view_mut((r, c), (r, c)).copy_from(&self.data.map(|z| z.re));
        let sv = real.svd_unordered(false, false).singular_values;
        let cut = tol * sv.max().max(1.0);
        sv.iter().filter(|&&s| s > cut).count() / (2 * block(self.algebra))
    }

    pub fn inverse(&self) -> Result<Self, GeometryError> {
        let inv = self.data.clone().try_inverse().ok_or(GeometryError::Singular)?;
        Ok(MatrixOverD { algebra: self.algebra, rows: self.cols, cols: self.rows, data: inv })
    }

    pub fn exp(&self) -> Self {
        MatrixOverD { data: self.data.exp(), ..self.clone() }
    }

    /// Real dimension of the space of matrices of this shape.
    pub fn real_dim(algebra: Algebra, rows: usize, cols: usize) -> usize {
        rows * cols * algebra.real_dim() as usize
    }

    /// Coordinates over R: `x` (R), `(re, im)` (C), `(re a, im a, re b, im b)` (H), row-major.
    pub fn to_real_vec(&self) -> Vec<f64> {
        let mut out = Vec::with_capacity(Self::real_dim(self.algebra, self.rows, self.cols));
        for r in 0..self.rows {
            for c in 0..self.cols {
                match self.algebra {
                    Algebra::Real => out.push(self.data[(r, c)].re),
                    Algebra::Complex => {
                        let z = self.data[(r, c)];
                        out.extend([z.re, z.im]);
                    }
                    Algebra::Quaternion => {
                        let q = self.get_quaternion(r, c);
                        out.extend([q.a.re, q.a.im, q.b.re, q.b.im]);
                    }
                }
            }
        }
        out
    }

    pub fn from_real_vec(algebra: Algebra, rows: usize, cols: usize, v: &[f64]) -> Self {
        assert_eq!(v.len(), Self::real_dim(algebra, rows, cols));
        let mut m = Self::zeros(algebra, rows, cols);
        let step = algebra.real_dim() as usize;
        for r in 0..rows {
            for c in 0..cols {
                let x = &v[(r * cols + c) * step..(r * cols + c + 1) * step];
                match algebra {
                    Algebra::Real => m.data[(r, c)] = Complex64::new(x[0], 0.0),
                    Algebra::Complex => m.data[(r, c)] = Complex64::new(x[0], x[1]),
                    Algebra::Quaternion => m.set_quaternion(
                        r,
                        c,
                        Quaternion { a: Complex64::new(x[0], x[1]), b: Complex64::new(x[2], x[3]) },
                    ),
                }
            }
        }
        m
    }

    /// Copy of the rows `r0..r1` and columns `c0..c1` (indices over D).
    pub fn block(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Self {
        let s = block(self.algebra);
        let data = self.data.view((r0 * s, c0 * s), ((r1 - r0) * s, (c1 - c0) * s)).into_owned();
        MatrixOverD { algebra: self.algebra, rows: r1 - r0, cols: c1 - c0, data }
    }

    /// Writes `b` with its top-left corner at `(r0, c0)`.
    pub fn set_block(&mut self, r0: usize, c0: usize, b: &Self) {
        self.same(b);
        let s = block(self.algebra);
        self.data.view_mut((r0 * s, c0 * s), (b.rows * s, b.cols * s)).copy_from(&b.data);
    }
}
