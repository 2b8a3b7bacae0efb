use scalar_algebra::{rat_to_f64, PiScalar, UniPoly};

use crate::family::{poly_p2, poly_pm2, poly_q, Branch, ExponentPair};

/// `overall * (plus(ξ) e^{-ξ} 1_{ξ>0} + minus(ξ) e^{ξ} 1_{ξ<0} + delta(-d/dξ) δ_0)`.
///
/// `delta_part[k]` is the coefficient of `(-d/dξ)^k δ_0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinePolyDistribution {
    pub plus_part: UniPoly,
    pub minus_part: UniPoly,
    pub delta_part: UniPoly,
    pub overall: PiScalar,
}

impl LinePolyDistribution {
    fn overall_f64(&self) -> f64 {
        let z = self.overall.to_complex();
        debug_assert!(z.im == 0.0);
        z.re
    }

    /// The smooth part at `ξ != 0`; `None` at the origin, where it jumps.
    pub fn smooth_value(&self, xi: f64) -> Option<f64> {
        if xi > 0.0 {
            Some(self.overall_f64() * self.plus_part.eval_f64(xi) * (-xi).exp())
        } else if xi < 0.0 {
            Some(self.overall_f64() * self.minus_part.eval_f64(xi) * xi.exp())
        } else {
            None
        }
    }

    /// One-sided limit of the smooth part at the origin.
    pub fn limit_at_zero(&self, side: Branch) -> f64 {
        let p = match side {
            Branch::Plus => &self.plus_part,
            Branch::Minus => &self.minus_part,
        };
        self.overall_f64() * rat_to_f64(&p.coeff(0))
    }

    /// Action of the delta part on a test function given its derivatives at 0:
    /// `Σ_k delta[k] ((-d/dξ)^k δ_0)(ψ) = Σ_k delta[k] ψ^{(k)}(0)`.
    pub fn delta_pairing(&self, derivs_at_zero: &[f64]) -> f64 {
        self.overall_f64()
            * self
                .delta_part
                .coeffs()
                .iter()
                .enumerate()
                .map(|(k, c)| rat_to_f64(c) * derivs_at_zero[k])
                .sum::<f64>()
    }
}

/// Distributional Fourier transform of `(1+iy)^{-a}(1-iy)^{-b}`.
pub fn fourier_pair(e: ExponentPair) -> LinePolyDistribution {
    LinePolyDistribution {
        plus_part: poly_p2(e),
        minus_part: poly_pm2(e),
        delta_part: poly_q(e).poly,
        overall: PiScalar::two_pi(),
    }
}
