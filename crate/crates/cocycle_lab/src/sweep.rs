//! Seeded Monte-Carlo sweeps over random unitary and symplectic pairs.

use scalar_algebra::Report;

use crate::cocycle::{cocycle, cocycle_modulus, theta_squared, theta_squared_unitary, unitary_cocycle};
use crate::element::{random_symplectic, random_unitary, sample_rng, SymplecticElement, C64};
use crate::identity::{det_identity_check, signature_halving_check};
use crate::CocycleError;

/// Redraws allowed per requested sample before giving up.
const MAX_REDRAWS: u64 = 20;

#[derive(Clone, Debug)]
pub struct CocycleSweep {
    pub dim: usize,
    pub samples: usize,
    pub seed: u64,
    /// `unitary_cocycle = cocycle_modulus × cocycle_phase`, relative.
    pub factorization: Report,
    pub det_identity: Report,
    pub signature_halving: Report,
    /// `ξ^2` by definition against the `W_C^+` route, relative.
    pub theta_routes: Report,
    /// `ξ1^2 ξ2^2 C^2 = ξ12^2` on random symplectic (not unitary) pairs, relative.
    pub multiplicativity: Report,
    pub modulus_symmetry: Report,
    /// Samples redrawn because of an ill-conditioned rank or an eigenvalue near 1.
    pub redrawn: u64,
}

impl CocycleSweep {
    pub fn reports(&self) -> [&Report; 6] {
        [
            &self.factorization,
            &self.det_identity,
            &self.signature_halving,
            &self.theta_routes,
            &self.multiplicativity,
            &self.modulus_symmetry,
        ]
    }

    pub fn passed(&self) -> bool {
        self.reports().iter().all(|r| r.passed())
    }
}

fn rel(a: C64, b: C64) -> f64 {
    (a - b).norm() / b.norm().max(f64::MIN_POSITIVE)
}

/// Draws a sample with `draw`, retrying on `Resample` and `Conditioning`.
fn with_redraws<T>(
    seed: u64,
    index: u64,
    redrawn: &mut u64,
    mut draw: impl FnMut(&mut rand_chacha::ChaCha8Rng) -> Result<T, CocycleError>,
) -> Result<T, CocycleError> {
    let mut last = None;
    for attempt in 0..MAX_REDRAWS {
        let mut rng = sample_rng(seed, index * MAX_REDRAWS + attempt);
        match draw(&mut rng) {
            Ok(t) => return Ok(t),
            Err(e @ (CocycleError::Resample(_) | CocycleError::Conditioning(_))) => {
                *redrawn += 1;
                last = Some(e);
            }
            Err(e) => return Err(e),
        }
    }
    Err(last.expect("at least one attempt"))
}

fn unitary_pair(rng: &mut rand_chacha::ChaCha8Rng, dim: usize) -> (SymplecticElement, SymplecticElement) {
    let g1 = SymplecticElement::from_unitary(&random_unitary(rng, dim)).expect("unitary");
    let g2 = SymplecticElement::from_unitary(&random_unitary(rng, dim)).expect("unitary");
    (g1, g2)
}

/// Tolerance for every relative comparison in the sweep.
pub const SWEEP_TOL: f64 = 1e-8;

/// One sweep of `samples` random pairs in `U(dim) ⊂ Sp_{2 dim}(R)`, plus the
/// same number of general symplectic pairs. Deterministic in `seed`.
pub fn cocycle_sweep(dim: usize, samples: usize, seed: u64) -> Result<CocycleSweep, CocycleError> {
    if dim == 0 {
        return Err(CocycleError::Shape("dim must be positive".into()));
    }
    let mut out = CocycleSweep {
        dim,
        samples,
        seed,
        factorization: Report::new("unitary cocycle = modulus x phase"),
        det_identity: Report::new("determinant identity"),
        signature_halving: Report::new("sgn h = sgn q / 2"),
        theta_routes: Report::new("theta squared, two routes"),
        multiplicativity: Report::new("theta squared multiplicativity"),
        modulus_symmetry: Report::new("modulus symmetry"),
        redrawn: 0,
    };
    let mut redrawn = 0;
    for s in 0..samples as u64 {
        let label = format!("sample {s}");
        let (expected, got, ident, sig, t1, t1u) = with_redraws(seed, 4 * s, &mut redrawn, |rng| {
            let (g1, g2) = unitary_pair(rng, dim);
            let expected = unitary_cocycle(&g1, &g2)?;
            let got = cocycle(&g1, &g2)?;
            let ident = det_identity_check(&g1, &g2)?;
            let sig = signature_halving_check(&g1, &g2)?;
            let t1 = theta_squared(&g1)?;
            let t1u = theta_squared_unitary(&g1)?;
            Ok((expected, got, ident, sig, t1, t1u))
        })?;
        out.factorization.check_residual(&label, expected, got, rel(got, expected), SWEEP_TOL);
        out.det_identity.check_residual(&label, ident.lhs, ident.rhs, ident.residual, SWEEP_TOL);
        out.signature_halving.check(&label, sig.halves(), format!("sgn h = {}, sgn q = {}", sig.sgn_h, sig.sgn_q));
        out.theta_routes.check_residual(&label, t1u, t1, rel(t1, t1u), SWEEP_TOL);

        let (lhs, rhs, m12, m21) = with_redraws(seed, 4 * s + 1, &mut redrawn, |rng| {
            let g1 = random_symplectic(rng, dim, 0.5);
            let g2 = random_symplectic(rng, dim, 0.5);
            let c = cocycle(&g1, &g2)?;
            let lhs = theta_squared(&g1)? * theta_squared(&g2)? * c * c;
            let rhs = theta_squared(&g1.mul(&g2))?;
            Ok((lhs, rhs, cocycle_modulus(&g1, &g2)?, cocycle_modulus(&g2, &g1)?))
        })?;
        out.multiplicativity.check_residual(&label, rhs, lhs, rel(lhs, rhs), SWEEP_TOL);
        out.modulus_symmetry.check_residual(&label, m12, m21, (m12 - m21).abs() / m12, SWEEP_TOL);
    }
    out.redrawn = redrawn;
    Ok(out)
}

/// `cocycle_modulus(-1, -1)` in `Sp_{2n}(R)` against `2^{2n}`.
pub fn minus_one_modulus(max_n: usize) -> Report {
    let mut r = Report::new("C(-1,-1) = 2^{2n}");
    for n in 1..=max_n {
        let m = SymplecticElement::minus_identity(n);
        let expected = 4f64.powi(n as i32);
        match cocycle_modulus(&m, &m) {
            Ok(c) => {
                r.check_residual(format!("n = {n}"), expected, c, (c - expected).abs(), 1e-9);
            }
            Err(e) => {
                r.check(format!("n = {n}"), false, e);
            }
        }
    }
    r
}
