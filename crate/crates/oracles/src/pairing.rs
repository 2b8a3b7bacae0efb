//! The Fourier identity paired with a test function, for `a + b <= 0`,
//! where the transform carries derivatives of the Dirac delta.
//!
//! The left side is a double integral done entirely by quadrature: first
//! `ψ^(y) = ∫ e^{-iyξ} ψ(ξ) dξ` on a shifted contour, then `∫ (1+iy)^{-a} (1-iy)^{-b} ψ^(y) dy`.
//! The right side pairs the closed-form transform with `ψ`.

use num_complex::Complex64;
use scalar_algebra::Report;
use special_functions::{fourier_pair, ExponentPair};

use crate::quadrature::gauss_kronrod;
use crate::OracleError;

/// `ψ(ξ) = ξ^power e^{-ξ^2}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TestFunction {
    pub power: u32,
}

/// `ψ` is below `1e-27` past this point for every power used here.
const XI_CUT: f64 = 10.0;
/// `|y|^6 |ψ^(y)|` is below `1e-20` past this point.
const Y_CUT: f64 = 20.0;

impl TestFunction {
    pub fn value(&self, xi: f64) -> f64 {
        xi.powi(self.power as i32) * (-xi * xi).exp()
    }

    /// `ψ^{(n)}(0)` for `n < count`, from `ξ^m e^{-ξ^2} = Σ_j (-1)^j ξ^{m+2j} / j!`.
    pub fn derivatives_at_zero(&self, count: usize) -> Vec<f64> {
        let m = self.power as usize;
        let fact = |k: usize| (1..=k).map(|x| x as f64).product::<f64>();
        (0..count)
            .map(|n| {
                if n < m || (n - m) % 2 == 1 {
                    return 0.0;
                }
                let j = (n - m) / 2;
                let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
                sign * fact(n) / fact(j)
            })
            .collect()
    }

    /// `∫ e^{-iyξ} ψ(ξ) dξ` by quadrature, on the contour `ξ - iy/2`
    /// where the integrand becomes `e^{-y^2/4} (ξ - iy/2)^power e^{-ξ^2}` and
    /// stops oscillating. `rel_tol` is relative to `(1 + |y|/2)^power`.
    pub fn fourier(&self, y: f64, rel_tol: f64) -> Result<Complex64, OracleError> {
        let shift = Complex64::new(0.0, -0.5 * y);
        let scale = (1.0 + 0.5 * y.abs()).powi(self.power as i32);
        let q = gauss_kronrod(
            |xi| (shift + xi).powi(self.power as i32) * (-xi * xi).exp(),
            -XI_CUT,
            XI_CUT,
            rel_tol * scale,
        )?;
        Ok(q.value * (-0.25 * y * y).exp())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct PairingCheck {
    pub a: i64,
    pub b: i64,
    pub psi: TestFunction,
    /// The double integral.
    pub lhs: Complex64,
    /// `∫ P_{a,b} e^{-|ξ|} ψ + Q_{a,b}(∂)ψ(0)`.
    pub rhs: f64,
    /// `|lhs - rhs| / max(|rhs|, 1)`.
    pub residual: f64,
}

/// Pairs both sides of the distributional identity with
/// `ψ(ξ) = ξ^{c_power+1} e^{-ξ^2}`. With `c_power = -a-b` the first `c + 1`
/// derivatives of `ψ` vanish at the origin; smaller powers exercise the
/// delta part.
pub fn pair_with_test_function(a: i64, b: i64, c_power: i64) -> Result<PairingCheck, OracleError> {
    if a + b > 0 {
        return Err(OracleError::Domain(format!("a + b = {} > 0 has no delta part", a + b)));
    }
    if c_power < -1 {
        return Err(OracleError::Domain(format!("c_power = {c_power} < -1")));
    }
    let psi = TestFunction { power: (c_power + 1) as u32 };
    let one = Complex64::new(1.0, 0.0);
    let i = Complex64::i();
    let weight = |y: f64| (one + i * y).powi(-a as i32) * (one - i * y).powi(-b as i32);

    let mut inner_error = None;
    let outer = gauss_kronrod(
        |y| {
            let w = weight(y);
            match psi.fourier(y, 1e-13) {
                Ok(v) => w * v,
                Err(e) => {
                    inner_error.get_or_insert(e);
                    Complex64::new(0.0, 0.0)
                }
            }
        },
        -Y_CUT,
        Y_CUT,
        1e-9,
    )?;
    if let Some(e) = inner_error {
        return Err(e);
    }

    let d = fourier_pair(ExponentPair::new(a, b));
    let smooth = |lo: f64, hi: f64| {
        gauss_kronrod(|xi| Complex64::new(d.smooth_value(xi).unwrap_or(0.0) * psi.value(xi), 0.0), lo, hi, 1e-12)
    };
    let smooth_part = smooth(-XI_CUT, 0.0)?.value.re + smooth(0.0, XI_CUT)?.value.re;
    let degree = d.delta_part.degree().map_or(0, |k| k + 1);
    let delta = d.delta_pairing(&psi.derivatives_at_zero(degree));
    let rhs = smooth_part + delta;
    let residual = (outer.value - rhs).norm() / rhs.abs().max(1.0);
    Ok(PairingCheck { a, b, psi, lhs: outer.value, rhs, residual })
}

/// Every `(a, b)` with `min <= a, b` and `a + b <= 0`, each against the test
/// functions `ξ^k e^{-ξ^2}` for `0 <= k <= 1 - a - b`.
pub fn pairing_suite(min: i64, tol: f64) -> Report {
    let mut r = Report::new("distributional Fourier identity");
    for a in min..=-min {
        for b in min..=-a {
            for c_power in -1..=-a - b {
                let label = format!("(a, b) = ({a}, {b}), ψ = ξ^{} e^(-ξ^2)", c_power + 1);
                match pair_with_test_function(a, b, c_power) {
                    Ok(p) => {
                        r.check_residual(label, p.rhs, p.lhs, p.residual, tol);
                    }
                    Err(e) => {
                        r.check(label, false, e);
                    }
                }
            }
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn gaussian_transform() {
        let psi = TestFunction { power: 0 };
        for y in [0.0, 1.0, 3.5] {
            let v = psi.fourier(y, 1e-13).unwrap();
            assert!((v - PI.sqrt() * (-y * y / 4.0).exp()).norm() < 1e-12);
        }
    }

    #[test]
    fn derivatives_of_the_test_function() {
        // ξ e^{-ξ^2} = ξ - ξ^3 + ξ^5/2 - ...
        let d = TestFunction { power: 1 }.derivatives_at_zero(6);
        assert_eq!(d, vec![0.0, 1.0, 0.0, -6.0, 0.0, 60.0]);
    }

    #[test]
    fn constant_weight_gives_two_pi_psi_at_zero() {
        let p = pair_with_test_function(0, 0, -1).unwrap();
        assert!((p.rhs - 2.0 * PI).abs() < 1e-12);
        assert!(p.residual < 1e-8, "{p:?}");
        let odd = pair_with_test_function(0, 0, 0).unwrap();
        assert!(odd.rhs.abs() < 1e-12 && odd.lhs.norm() < 1e-8);
    }
}
