use nalgebra::{Complex, DMatrix};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::CocycleError;

pub type C64 = Complex<f64>;

/// The fixed complex structure on `R^{2n}` in coordinates `(x_1, y_1, ..., x_n, y_n)`:
/// `J(x, y) = (y, -x)` on each plane. It is also the matrix of the symplectic
/// form, `<u, v> = u^t J v`, so `<J u, v> = u^t v`.
pub fn j_form(n: usize) -> DMatrix<f64> {
    let mut j = DMatrix::zeros(2 * n, 2 * n);
    for k in 0..n {
        j[(2 * k, 2 * k + 1)] = 1.0;
        j[(2 * k + 1, 2 * k)] = -1.0;
    }
    j
}

/// `<u, v> = u^t J v`.
pub fn symplectic_pairing(u: &DMatrix<f64>, v: &DMatrix<f64>) -> DMatrix<f64> {
    u.transpose() * j_form(u.nrows() / 2) * v
}

/// An element of `Sp_{2n}(R)` for the form `j_form(n)`.
#[derive(Clone, Debug, PartialEq)]
pub struct SymplecticElement {
    matrix: DMatrix<f64>,
}

impl SymplecticElement {
    /// Checks `g^t J g = J` to `1e-12` relative to `|g|^2`.
    pub fn new(matrix: DMatrix<f64>) -> Result<Self, CocycleError> {
        let (r, c) = matrix.shape();
        if r != c || r % 2 == 1 || r == 0 {
            return Err(CocycleError::Shape(format!("{r}x{c} is not 2n x 2n")));
        }
        let j = j_form(r / 2);
        let defect = (matrix.transpose() * &j * &matrix - &j).norm();
        let scale = matrix.norm_squared().max(1.0);
        if defect > 1e-12 * scale {
            return Err(CocycleError::NotSymplectic(defect));
        }
        Ok(SymplecticElement { matrix })
    }

    pub fn identity(n: usize) -> Self {
        SymplecticElement { matrix: DMatrix::identity(2 * n, 2 * n) }
    }

    pub fn minus_identity(n: usize) -> Self {
        SymplecticElement { matrix: -DMatrix::identity(2 * n, 2 * n) }
    }

    /// The real form of a unitary `u` acting on `W_C^+ = C^n`. A vector `w_0`
    /// corresponds to `z_k = x_k - i y_k`, the coordinates of `(1 - iJ) w_0 / 2`.
    pub fn from_unitary(u: &DMatrix<C64>) -> Result<Self, CocycleError> {
        let n = u.nrows();
        if u.ncols() != n {
            return Err(CocycleError::Shape("unitary must be square".into()));
        }
        let defect = (u.adjoint() * u - DMatrix::identity(n, n)).norm();
        if defect > 1e-10 {
            return Err(CocycleError::NotUnitary(defect));
        }
        let mut g = DMatrix::zeros(2 * n, 2 * n);
        for j in 0..n {
            for k in 0..n {
                let (a, b) = (u[(j, k)].re, u[(j, k)].im);
                g[(2 * j, 2 * k)] = a;
                g[(2 * j, 2 * k + 1)] = b;
                g[(2 * j + 1, 2 * k)] = -b;
                g[(2 * j + 1, 2 * k + 1)] = a;
            }
        }
        SymplecticElement::new(g)
    }

    pub fn n(&self) -> usize {
        self.matrix.nrows() / 2
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.matrix
    }

    pub fn mul(&self, other: &Self) -> Self {
        SymplecticElement { matrix: &self.matrix * &other.matrix }
    }

    /// `g^{-1} = -J g^t J`.
    pub fn inverse(&self) -> Self {
        let j = j_form(self.n());
        SymplecticElement { matrix: -(&j * self.matrix.transpose() * &j) }
    }

    pub fn commutes_with_j(&self) -> bool {
        let j = j_form(self.n());
        (&self.matrix * &j - &j * &self.matrix).norm() <= 1e-10 * self.matrix.norm().max(1.0)
    }

    /// The restriction `u = g|_{W_C^+}`, for `g` commuting with `J`.
    pub fn to_unitary(&self) -> Result<DMatrix<C64>, CocycleError> {
        if !self.commutes_with_j() {
            return Err(CocycleError::NotUnitary((&self.matrix * j_form(self.n()) - j_form(self.n()) * &self.matrix).norm()));
        }
        let n = self.n();
        Ok(DMatrix::from_fn(n, n, |j, k| C64::new(self.matrix[(2 * j, 2 * k)], self.matrix[(2 * j, 2 * k + 1)])))
    }
}

/// Haar-distributed unitary: QR of a complex Gaussian matrix, with the
/// phases of the diagonal of `R` moved into `Q`.
pub fn random_unitary<R: Rng + ?Sized>(rng: &mut R, n: usize) -> DMatrix<C64> {
    let z = DMatrix::from_fn(n, n, |_, _| C64::new(rng.sample(StandardNormal), rng.sample(StandardNormal)));
    let qr = z.qr();
    let (mut q, r) = (qr.q(), qr.r());
    for k in 0..n {
        let d = r[(k, k)];
        let phase = if d.norm() > 0.0 { d / d.norm() } else { C64::new(1.0, 0.0) };
        let mut col = q.column_mut(k);
        col *= phase;
    }
    q
}

/// `exp(J S)` for a symmetric Gaussian `S` with entries of size `scale`;
/// `J S` is hamiltonian for the form `J`.
pub fn random_symplectic<R: Rng + ?Sized>(rng: &mut R, n: usize, scale: f64) -> SymplecticElement {
    let m = 2 * n;
    let a = DMatrix::from_fn(m, m, |_, _| scale * rng.sample::<f64, _>(StandardNormal));
    let s = (&a + a.transpose()).scale(0.5);
    let g = (j_form(n) * s).exp();
    SymplecticElement::new(g).expect("exponential of a hamiltonian matrix")
}

/// Independent generator for sample `index` of a sweep rooted at `seed`.
pub fn sample_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn j_is_compatible() {
        let j = j_form(3);
        assert!(SymplecticElement::new(j.clone()).is_ok());
        assert_eq!(&j * &j, -DMatrix::<f64>::identity(6, 6));
        // <J u, u> = |u|^2
        let u = DMatrix::from_column_slice(6, 1, &[1.0, -2.0, 0.5, 0.0, 3.0, 1.0]);
        let v = symplectic_pairing(&(&j * &u), &u)[(0, 0)];
        assert!((v - u.norm_squared()).abs() < 1e-12);
    }

    #[test]
    fn unitary_round_trip() {
        let mut rng = sample_rng(7, 0);
        let u = random_unitary(&mut rng, 3);
        let g = SymplecticElement::from_unitary(&u).unwrap();
        assert!(g.commutes_with_j());
        assert!((g.to_unitary().unwrap() - &u).norm() < 1e-14);
        // i acts as J
        let i = DMatrix::from_diagonal_element(2, 2, C64::i());
        assert_eq!(SymplecticElement::from_unitary(&i).unwrap().matrix(), &j_form(2));
    }

    #[test]
    fn products_and_inverses() {
        let mut rng = sample_rng(11, 3);
        let g = random_symplectic(&mut rng, 2, 0.4);
        let h = g.mul(&g.inverse());
        assert!((h.matrix() - DMatrix::<f64>::identity(4, 4)).norm() < 1e-12);
        assert!(!g.commutes_with_j());
    }
}
