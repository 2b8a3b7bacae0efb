use std::f64::consts::FRAC_1_SQRT_2;

use num_complex::Complex64;
use root_data::{cartan_signs, Algebra, DualPair};
use scalar_algebra::{rat_to_f64, Rat};

use crate::{tau, tau_prime, FormModel, GeometryError, MatrixOverD};

/// A point `Σ w_j u_j` of the Cartan subspace with `m` positive signs `δ_j`.
#[derive(Clone, Debug, PartialEq)]
pub struct CartanSpec {
    pub pair: DualPair,
    pub m: usize,
    pub coords: Vec<Rat>,
}

impl CartanSpec {
    /// Number of Cartan coordinates, `min(l, l')`.
    pub fn rank(pair: &DualPair) -> usize {
        pair.l().min(pair.l_prime())
    }

    pub fn coords_f64(&self) -> Vec<f64> {
        self.coords.iter().map(rat_to_f64).collect()
    }

    pub fn signs(&self) -> Result<Vec<i8>, GeometryError> {
        Ok(cartan_signs(&self.pair, self.m)?)
    }

    fn validate(&self) -> Result<(), GeometryError> {
        let n = Self::rank(&self.pair);
        if self.coords.len() != n {
            return Err(GeometryError::Shape(format!("expected {n} Cartan coordinates, got {}", self.coords.len())));
        }
        Ok(())
    }
}

/// Scalar of a coordinate entry. The left structure `a v = v conj(a)` makes
/// the matrix entry the conjugate of the scalar.
pub fn left_scalar(entry: Complex64) -> Complex64 {
    entry.conj()
}

fn unit_element(model: &FormModel, j: usize, delta: i8) -> MatrixOverD {
    let pair = model.pair();
    let mut u = MatrixOverD::zeros(pair.algebra(), pair.d_prime(), pair.d());
    match pair.algebra() {
        Algebra::Real => {
            let s = FRAC_1_SQRT_2;
            let (a, b) = (2 * j, 2 * j + 1);
            u.set(a, a, Complex64::new(s, 0.0));
            u.set(b, a, Complex64::new(-s, 0.0));
            u.set(a, b, Complex64::new(s, 0.0));
            u.set(b, b, Complex64::new(s, 0.0));
        }
        _ => {
            let phase = delta as f64 * std::f64::consts::FRAC_PI_4;
            u.set(j, j, Complex64::from_polar(1.0, phase));
        }
    }
    u
}

/// `Σ_j w_j u_j` in the model returned alongside it.
pub fn cartan_element(spec: &CartanSpec) -> Result<(FormModel, MatrixOverD), GeometryError> {
    spec.validate()?;
    let model = FormModel::cartan(&spec.pair, spec.m)?;
    let signs = spec.signs()?;
    let p = &spec.pair;
    let mut w = MatrixOverD::zeros(p.algebra(), p.d_prime(), p.d());
    for (j, x) in spec.coords_f64().into_iter().enumerate() {
        w = w.add(&unit_element(&model, j, signs[j]).scale(x));
    }
    Ok((model, w))
}

/// The complex structures `J_j` on `V_0` and `J'_j` on `V_1`, with
/// `τ(u_j) = δ_j J_j` and `τ'(u_j) = δ_j J'_j`.
pub fn complex_structures(pair: &DualPair) -> (Vec<MatrixOverD>, Vec<MatrixOverD>) {
    let alg = pair.algebra();
    let n = CartanSpec::rank(pair);
    let make = |size: usize, j: usize| {
        let mut x = MatrixOverD::zeros(alg, size, size);
        match alg {
            Algebra::Real => {
                x.set(2 * j, 2 * j + 1, Complex64::new(1.0, 0.0));
                x.set(2 * j + 1, 2 * j, Complex64::new(-1.0, 0.0));
            }
            _ => x.set(j, j, Complex64::new(0.0, 1.0)),
        }
        x
    };
    (
        (0..n).map(|j| make(pair.d(), j)).collect(),
        (0..n).map(|j| make(pair.d_prime(), j)).collect(),
    )
}

/// Residuals of `τ(w) = Σ w_j² δ_j J_j` and `τ'(w) = Σ w_j² δ_j J'_j`.
pub fn normal_form_residual(spec: &CartanSpec) -> Result<(f64, f64), GeometryError> {
    let (model, w) = cartan_element(spec)?;
    let signs = spec.signs()?;
    let (js, jps) = complex_structures(&spec.pair);
    let p = &spec.pair;
    let mut expect = MatrixOverD::zeros(p.algebra(), p.d(), p.d());
    let mut expect_p = MatrixOverD::zeros(p.algebra(), p.d_prime(), p.d_prime());
    for (j, x) in spec.coords_f64().into_iter().enumerate() {
        let c = x * x * signs[j] as f64;
        expect = expect.add(&js[j].scale(c));
        expect_p = expect_p.add(&jps[j].scale(c));
    }
    Ok((
        tau(&w, &model)?.sub(&expect).norm(),
        tau_prime(&w, &model)?.sub(&expect_p).norm(),
    ))
}
