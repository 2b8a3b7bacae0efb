use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;
use root_data::{cartan_signs, Algebra, DualPair};

use crate::{GeometryError, MatrixOverD};

/// `W = M_{d',d}(D) = Hom(V_0, V_1)` with `V_0 = D^d` (standard positive form)
/// and `V_1 = D^{d'}` carrying the skew-hermitian form `F`.
///
/// Coordinates follow the left `D`-structure `a v = v conj(a)`: a matrix
/// acts on coordinate columns, so the scalar `-i` appears as the entry `i`.
#[derive(Clone, Debug, PartialEq)]
pub struct FormModel {
    pair: DualPair,
    f: MatrixOverD,
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn symplectic_blocks(n: usize) -> MatrixOverD {
    let mut f = MatrixOverD::zeros(Algebra::Real, n, n);
    for j in 0..n / 2 {
        f.set(2 * j, 2 * j + 1, c(1.0, 0.0));
        f.set(2 * j + 1, 2 * j, c(-1.0, 0.0));
    }
    f
}

/// `i diag(signs)` over C or H.
fn i_diag(algebra: Algebra, signs: &[f64]) -> MatrixOverD {
    let mut f = MatrixOverD::zeros(algebra, signs.len(), signs.len());
    for (j, &s) in signs.iter().enumerate() {
        f.set(j, j, c(0.0, s));
    }
    f
}

fn check_pair(pair: &DualPair) -> Result<(), GeometryError> {
    if pair.algebra() == Algebra::Real && pair.d_prime() % 2 == 1 {
        return Err(GeometryError::Shape("odd d' over R".into()));
    }
    Ok(())
}

impl FormModel {
    /// The form used for Cartan subspaces: `J`-blocks over R, `i diag(δ_1..δ_{l''}, ±1..)`
    /// over C with signature `(p, q)`, and `i I` over H.
    pub fn cartan(pair: &DualPair, m: usize) -> Result<Self, GeometryError> {
        check_pair(pair)?;
        let signs = cartan_signs(pair, m)?;
        let n = pair.d_prime();
        let f = match pair.algebra() {
            Algebra::Real => symplectic_blocks(n),
            Algebra::Complex => {
                let (p, q) = pair.signature();
                let ll = signs.len();
                let mut s: Vec<f64> = signs.iter().map(|&x| x as f64).collect();
                s.extend(std::iter::repeat_n(1.0, p - m));
                s.extend(std::iter::repeat_n(-1.0, q - (ll - m)));
                i_diag(Algebra::Complex, &s)
            }
            Algebra::Quaternion => i_diag(Algebra::Quaternion, &vec![1.0; n]),
        };
        Ok(FormModel { pair: *pair, f })
    }

    /// `F = [[0, 0, I_k], [0, F', 0], [-I_k, 0, 0]]`, used with the nilpotent `N_k`.
    pub fn nilpotent(pair: &DualPair, k: usize) -> Result<Self, GeometryError> {
        check_pair(pair)?;
        if k > pair.m() {
            return Err(GeometryError::Range(format!("k = {k} exceeds m = {}", pair.m())));
        }
        let alg = pair.algebra();
        let n = pair.d_prime();
        let inner = match alg {
            Algebra::Real => symplectic_blocks(n - 2 * k),
            Algebra::Complex => {
                let (p, q) = pair.signature();
                let mut s = vec![1.0; p - k];
                s.extend(std::iter::repeat_n(-1.0, q - k));
                i_diag(alg, &s)
            }
            Algebra::Quaternion => i_diag(alg, &vec![1.0; n - 2 * k]),
        };
        let mut f = MatrixOverD::zeros(alg, n, n);
        let id = MatrixOverD::identity(alg, k);
        f.set_block(0, n - k, &id);
        f.set_block(n - k, 0, &id.scale(-1.0));
        f.set_block(k, k, &inner);
        Ok(FormModel { pair: *pair, f })
    }

    pub fn pair(&self) -> &DualPair {
        &self.pair
    }

    pub fn form(&self) -> &MatrixOverD {
        &self.f
    }

    pub fn check_w(&self, w: &MatrixOverD) -> Result<(), GeometryError> {
        if w.algebra() != self.pair.algebra() || w.rows() != self.pair.d_prime() || w.cols() != self.pair.d() {
            return Err(GeometryError::Shape(format!(
                "expected a {}x{} matrix over {}, got {}x{}",
                self.pair.d_prime(),
                self.pair.d(),
                self.pair.algebra().symbol(),
                w.rows(),
                w.cols()
            )));
        }
        Ok(())
    }

    /// `w^* = conj(w)^t F`, the component `V_1 -> V_0` of `w` as an odd endomorphism.
    pub fn star(&self, w: &MatrixOverD) -> MatrixOverD {
        w.adjoint().mul(&self.f)
    }

    /// `g^{-1} = F^{-1} conj(g)^t F` for `g` in `G'`.
    pub fn g_prime_inverse(&self, g: &MatrixOverD) -> Result<MatrixOverD, GeometryError> {
        Ok(self.f.inverse()?.mul(&g.adjoint()).mul(&self.f))
    }

    /// Residual of `conj(g)^t F g = F`.
    pub fn g_prime_defect(&self, g: &MatrixOverD) -> f64 {
        g.adjoint().mul(&self.f).mul(g).sub(&self.f).norm()
    }

    /// Residual of `conj(X)^t F + F X = 0`.
    pub fn lie_g_prime_defect(&self, x: &MatrixOverD) -> f64 {
        x.adjoint().mul(&self.f).add(&self.f.mul(x)).norm()
    }

    pub fn random_w<R: Rng + ?Sized>(&self, rng: &mut R) -> MatrixOverD {
        random_matrix(rng, self.pair.algebra(), self.pair.d_prime(), self.pair.d(), 1.0)
    }

    /// Element of `G`: exponential of a random skew-hermitian matrix, times a
    /// reflection half of the time over R.
    pub fn random_g<R: Rng + ?Sized>(&self, rng: &mut R) -> MatrixOverD {
        let (alg, d) = (self.pair.algebra(), self.pair.d());
        let a = random_matrix(rng, alg, d, d, 1.0);
        let g = a.sub(&a.adjoint()).exp();
        if alg == Algebra::Real && rng.random_bool(0.5) {
            let mut r = MatrixOverD::identity(alg, d);
            r.set(0, 0, c(-1.0, 0.0));
            return g.mul(&r);
        }
        g
    }

    /// Element of the identity component of `G'`: `exp(F^{-1} S)` with `S` hermitian.
    pub fn random_g_prime<R: Rng + ?Sized>(&self, rng: &mut R, scale: f64) -> Result<MatrixOverD, GeometryError> {
        let (alg, n) = (self.pair.algebra(), self.pair.d_prime());
        let a = random_matrix(rng, alg, n, n, scale);
        let s = a.add(&a.adjoint());
        Ok(self.f.inverse()?.mul(&s).exp())
    }
}

pub(crate) fn random_matrix<R: Rng + ?Sized>(rng: &mut R, alg: Algebra, rows: usize, cols: usize, scale: f64) -> MatrixOverD {
    let v: Vec<f64> = (0..MatrixOverD::real_dim(alg, rows, cols))
        .map(|_| scale * rng.sample::<f64, _>(StandardNormal))
        .collect();
    MatrixOverD::from_real_vec(alg, rows, cols, &v)
}

/// `τ(w) = w^* w`, the `g`-valued moment map (a skew-hermitian `d x d` matrix).
pub fn tau(w: &MatrixOverD, model: &FormModel) -> Result<MatrixOverD, GeometryError> {
    model.check_w(w)?;
    Ok(model.star(w).mul(w))
}

/// `τ'(w) = w w^*`, the `g'`-valued moment map.
pub fn tau_prime(w: &MatrixOverD, model: &FormModel) -> Result<MatrixOverD, GeometryError> {
    model.check_w(w)?;
    Ok(w.mul(&model.star(w)))
}

/// `w` lies in `W_g` iff no nonzero `x` in `g` has `w x = 0`, i.e. iff
/// `ker w` carries no nonzero skew-hermitian endomorphism: `dim ker w <= 1`
/// over R, `ker w = 0` over C and H.
pub fn is_in_wg(w: &MatrixOverD, pair: &DualPair) -> bool {
    let kernel = pair.d() - w.rank(1e-10);
    match pair.algebra() {
        Algebra::Real => kernel <= 1,
        _ => kernel == 0,
    }
}

