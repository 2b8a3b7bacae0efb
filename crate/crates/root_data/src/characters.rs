use std::f64::consts::PI;

use num_complex::Complex64;
use num_traits::{One, Zero};
use scalar_algebra::{factorial, int, rat, rat_to_f64, Rat, SignedPermutation};

use crate::{rho, sgn_g_h, weyl_group, CompactGroup, HCParam, HighestWeight, RootError};

/// `|Δ|` below this at a sample point makes the character quotient unreliable.
const DENOMINATOR_FLOOR: f64 = 1e-9;

fn dot(a: &[i64], x: &[f64]) -> f64 {
    a.iter().zip(x).map(|(&c, &t)| c as f64 * t).sum()
}

fn angles_f64(angles: &[Rat]) -> Vec<f64> {
    angles.iter().map(|a| PI * rat_to_f64(a)).collect()
}

fn cis(x: f64) -> Complex64 {
    Complex64::from_polar(1.0, x)
}

fn check_rank(g: CompactGroup, n: usize) -> Result<(), RootError> {
    if n != g.rank() {
        return Err(RootError::Domain(format!("{g} has rank {}, got {n} entries", g.rank())));
    }
    Ok(())
}

/// `Δ(h) = ξ_ρ(h) ∏_{α>0} (1 - ξ_{-α}(h))` at `h = exp(Σ θ_j J_j)`, angles given as multiples of π.
pub fn weyl_denominator(g: CompactGroup, angles: &[Rat]) -> Result<Complex64, RootError> {
    check_rank(g, angles.len())?;
    let th = angles_f64(angles);
    let r: Vec<f64> = rho(g).iter().map(rat_to_f64).collect();
    let rho_dot: f64 = r.iter().zip(&th).map(|(a, b)| a * b).sum();
    Ok(g.positive_roots()
        .iter()
        .fold(cis(rho_dot), |acc, a| acc * (Complex64::one() - cis(-dot(a, &th)))))
}

/// Weyl character formula `Σ_s sgn(s) ξ_{sμ}(h) / Δ(h)`, `μ = λ + ρ`.
///
/// For `O_{2l}` the sum runs over all of `Σ_l ⋉ {±1}^l`, so the result is the
/// character of the `O_{2l}`-module generated by λ restricted to the torus.
pub fn weyl_character(lambda: &HighestWeight, g: CompactGroup, angles: &[Rat]) -> Result<Complex64, RootError> {
    check_rank(g, lambda.len())?;
    let den = weyl_denominator(g, angles)?;
    if den.norm() < DENOMINATOR_FLOOR {
        return Err(RootError::Evaluation(format!("|Δ| = {:e} at the sample point", den.norm())));
    }
    let th = angles_f64(angles);
    let mu: Vec<f64> = lambda.entries().iter().zip(rho(g)).map(|(a, b)| rat_to_f64(&(a + b))).collect();
    let num: Complex64 = weyl_group(g)
        .iter()
        .map(|s| {
            let smu = s.apply(&mu);
            let phase: f64 = smu.iter().zip(&th).map(|(a, b)| a * b).sum();
            cis(phase) * sgn_g_h(g, s) as f64
        })
        .sum();
    Ok(num / den)
}

/// `∏_{α>0} <λ+ρ, α> / <ρ, α>`.
pub fn weyl_dimension(lambda: &HighestWeight, g: CompactGroup) -> Result<Rat, RootError> {
    check_rank(g, lambda.len())?;
    let r = rho(g);
    let mu: Vec<Rat> = lambda.entries().iter().zip(&r).map(|(a, b)| a + b).collect();
    let pair = |v: &[Rat], a: &[i64]| v.iter().zip(a).fold(Rat::zero(), |acc, (x, &c)| acc + x * int(c));
    let mut out = Rat::one();
    for a in g.positive_roots() {
        out *= pair(&mu, &a) / pair(&r, &a);
    }
    Ok(out)
}

/// Dimension of the `U_{l'}`-type attached to `μ` through the `(U_l, U_{l'})` correspondence:
/// `[1/∏_{j=1}^{l}(l'-j)!] ∏_j (δ+μ_j-1)!/(μ_j-δ)! ∏_{j<k}(μ_j-μ_k)`, `δ = (l'-l+1)/2`.
pub fn dim_pi_prime(mu: &HCParam, l: usize, l_prime: usize) -> Result<Rat, RootError> {
    if mu.len() != l || l > l_prime {
        return Err(RootError::Domain(format!("need {l} entries and l <= l', got {} and l' = {l_prime}", mu.len())));
    }
    let delta = rat(l_prime as i64 - l as i64 + 1, 2);
    let to_nat = |r: Rat| -> Result<u64, RootError> {
        if !r.is_integer() || r < Rat::zero() {
            return Err(RootError::Domain(format!("μ is not admissible: needs μ_j - δ in Z_{{>=0}}, δ = {delta}")));
        }
        Ok(r.to_integer().try_into().expect("small"))
    };
    let fact = |n: u64| Rat::from_integer(factorial(n));
    let mut out = Rat::one();
    for j in 1..=l {
        out /= fact((l_prime - j) as u64);
    }
    for m in mu.entries() {
        let top = to_nat(&delta + m - int(1))?;
        let bottom = to_nat(m - &delta)?;
        out *= fact(top) / fact(bottom);
    }
    let e = mu.entries();
    for j in 0..l {
        for k in j + 1..l {
            out *= &e[j] - &e[k];
        }
    }
    Ok(out)
}

/// `∏_j (1+iy_j)^{a_j} (1-iy_j)^{b_j}`, kept as its exponent vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CayleyMonomial {
    pub exps: Vec<(i64, i64)>,
}

impl CayleyMonomial {
    /// `ξ_{-μ}` in Cayley coordinates: `a_j = -μ_j+δ-1`, `b_j = μ_j+δ-1`.
    pub fn xi_minus_mu(mu: &[Rat], delta: &Rat) -> Result<Self, RootError> {
        let exps = mu
            .iter()
            .map(|m| {
                let a = -m + delta - int(1);
                let b = m + delta - int(1);
                if !a.is_integer() {
                    return Err(RootError::Domain("exponents must be integers".into()));
                }
                let conv = |r: Rat| -> i64 { r.to_integer().try_into().expect("small exponent") };
                Ok((conv(a), conv(b)))
            })
            .collect::<Result<_, _>>()?;
        Ok(CayleyMonomial { exps })
    }

    /// The monomial `y -> F(s.y)`.
    pub fn act(&self, s: &SignedPermutation) -> Self {
        let mut exps = vec![(0, 0); self.exps.len()];
        for (j, &(a, b)) in self.exps.iter().enumerate() {
            exps[s.perm()[j]] = if s.signs()[j] > 0 { (a, b) } else { (b, a) };
        }
        CayleyMonomial { exps }
    }

    pub fn eval(&self, y: &[f64]) -> Complex64 {
        self.exps
            .iter()
            .zip(y)
            .map(|(&(a, b), &t)| {
                let z = Complex64::new(1.0, t);
                z.powi(a as i32) * z.conj().powi(b as i32)
            })
            .product()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hw(v: &[i64]) -> HighestWeight {
        HighestWeight::from_ints(v).unwrap()
    }

    #[test]
    fn denominator_examples() {
        let g = CompactGroup::Unitary(2);
        assert!(weyl_denominator(g, &[int(0), int(0)]).unwrap().norm() < 1e-15);
        assert_eq!(weyl_denominator(CompactGroup::Unitary(1), &[rat(1, 3)]).unwrap(), Complex64::one());
        let t = rat(2, 7);
        let v = weyl_denominator(g, &[t.clone(), int(0)]).unwrap();
        let expect = Complex64::new(0.0, 2.0 * (PI * rat_to_f64(&t) / 2.0).sin());
        assert!((v - expect).norm() < 1e-14);
    }

    #[test]
    fn character_examples() {
        let g = CompactGroup::Unitary(2);
        let (a, b) = (rat(1, 5), rat(-2, 7));
        let v = weyl_character(&hw(&[1, 0]), g, &[a.clone(), b.clone()]).unwrap();
        let expect = cis(PI * rat_to_f64(&a)) + cis(PI * rat_to_f64(&b));
        assert!((v - expect).norm() < 1e-13);
        let one = weyl_character(&hw(&[0, 0, 0]), CompactGroup::Symplectic(3), &[rat(1, 3), rat(1, 7), rat(2, 9)]).unwrap();
        assert!((one - Complex64::one()).norm() < 1e-12);
        assert!(weyl_character(&hw(&[0, 0]), g, &[int(0), int(0)]).is_err());
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(weyl_dimension(&hw(&[0, 0]), CompactGroup::Symplectic(2)).unwrap(), int(1));
        assert_eq!(weyl_dimension(&hw(&[1, 0]), CompactGroup::Unitary(2)).unwrap(), int(2));
        assert_eq!(weyl_dimension(&hw(&[2, 1, 0]), CompactGroup::Unitary(3)).unwrap(), int(8));
        assert_eq!(weyl_dimension(&hw(&[1]), CompactGroup::Orthogonal(3)).unwrap(), int(3));
        assert_eq!(weyl_dimension(&hw(&[1, 0]), CompactGroup::Symplectic(2)).unwrap(), int(4));
    }

    #[test]
    fn dim_pi_prime_examples() {
        let mu = |v: i64| HCParam::new(vec![int(v)]).unwrap();
        assert_eq!(dim_pi_prime(&mu(1), 1, 2).unwrap(), int(1));
        assert_eq!(dim_pi_prime(&mu(2), 1, 2).unwrap(), int(2));
        assert!(dim_pi_prime(&mu(0), 1, 2).is_err());
    }
}
