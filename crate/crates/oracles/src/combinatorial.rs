//! Exact determinant and Gaussian-integral identities, each recomputed by
//! brute-force expansion.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use root_data::{pi_g_h, CompactGroup};
use scalar_algebra::{
    exact_det, factorial, falling_product_sum, int, rat, rising, symmetric_group, vandermonde_det, MultiPoly,
    PiScalar, Rat, Report,
};

use crate::OracleError;

fn fact(n: u64) -> Rat {
    Rat::from_integer(factorial(n))
}

/// `∏_{k=lo}^{hi} k!`, 1 when the range is empty.
pub fn factorial_product(lo: u64, hi: u64) -> Rat {
    (lo..=hi).fold(Rat::one(), |acc, k| acc * fact(k))
}

/// `∫_{(R+)^l} ∏_{j<k} (x_j - x_k)^2 ∏_j x_j^{l'-l} e^{-Σx} dx`, by expanding
/// the squared Vandermonde into monomials and integrating each one with
/// `∫ x^α e^{-x} dx = α!`.
pub fn gaussian_selberg(l: usize, l_prime: usize) -> Result<Rat, OracleError> {
    if !(1..=3).contains(&l) || l > l_prime || l_prime > 8 {
        return Err(OracleError::Domain(format!("need 1 <= l <= 3 and l <= l' <= 8, got ({l}, {l_prime})")));
    }
    let shift = (l_prime - l) as u64;
    let square = MultiPoly::vandermonde(l).pow(2);
    let mut total = Rat::zero();
    for (alpha, c) in square.terms() {
        let c = c.as_rational().expect("integer coefficients");
        total += c * alpha.iter().fold(Rat::one(), |acc, &e| acc * fact(e as u64 + shift));
    }
    Ok(total)
}

/// `∏_{k=0}^{l} k! ∏_{k=0}^{l-1} (k + l' - l)!`.
pub fn gaussian_selberg_closed_form(l: usize, l_prime: usize) -> Rat {
    let shift = (l_prime - l) as u64;
    factorial_product(0, l as u64) * (0..l as u64).fold(Rat::one(), |acc, k| acc * fact(k + shift))
}

/// `[(a + i)(a + i + 1)…(a + i + j - 1)]_{i,j=0}^{n-1}`.
pub fn fan_matrix(a: &Rat, n: usize) -> Vec<Vec<Rat>> {
    (0..n)
        .map(|i| {
            let row_start = a + int(i as i64);
            (0..n).map(|j| rising(&row_start, j as u64)).collect()
        })
        .collect()
}

/// The determinant of [`fan_matrix`]; equals `∏_{k=1}^{n-1} k!` for every `a`.
pub fn fan_det(a: &Rat, n: usize) -> Result<Rat, OracleError> {
    if n < 2 {
        return Err(OracleError::Domain(format!("n = {n} < 2")));
    }
    Ok(exact_det(&fan_matrix(a, n))?)
}

/// `∂(π)(π)` for `π = π_{g/h}` of `U_l`, in the coordinates `x_j = i y_j`
/// where `π` has rational coefficients. A monomial `x^α` in the operator
/// only survives against the same monomial, contributing `c_α^2 α!`.
pub fn partial_pi_pi(l: usize) -> Result<Rat, OracleError> {
    if !(1..=6).contains(&l) {
        return Err(OracleError::Domain(format!("l = {l} outside 1..=6")));
    }
    let pi = pi_g_h(CompactGroup::Unitary(l));
    let mut total = Rat::zero();
    for (alpha, c) in pi.terms() {
        // y^α = (-i x)^α
        let degree: u32 = alpha.iter().sum();
        let in_x = c * &PiScalar::new(Rat::one(), 0, -(degree as i64));
        let c = in_x
            .as_rational()
            .ok_or_else(|| OracleError::Domain(format!("coefficient {in_x} is not rational in x")))?;
        total += c * c * alpha.iter().fold(Rat::one(), |acc, &e| acc * fact(e as u64));
    }
    Ok(total)
}

/// `Σ_s sgn(s) ∏_j ∏_{k=1}^{s(j)-1} (z_j - k)` summed over all of `Σ_m`.
pub fn falling_product_brute_force(z: &[Rat]) -> Rat {
    let falling = |zj: &Rat, len: usize| (1..len).fold(Rat::one(), |acc, k| acc * (zj - int(k as i64)));
    symmetric_group(z.len())
        .iter()
        .map(|s| {
            let term = z.iter().zip(s.perm()).fold(Rat::one(), |acc, (zj, &p)| acc * falling(zj, p + 1));
            term * int(s.perm_sign() as i64)
        })
        .sum()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CombinatorialParams {
    pub seed: u64,
    pub falling_max_m: usize,
    pub falling_tuples: usize,
    pub fan_max_n: usize,
    pub pi_max_l: usize,
    pub selberg_max_l: usize,
    pub selberg_max_l_prime: usize,
}

impl Default for CombinatorialParams {
    fn default() -> Self {
        CombinatorialParams {
            seed: 0,
            falling_max_m: 6,
            falling_tuples: 100,
            fan_max_n: 8,
            pi_max_l: 5,
            selberg_max_l: 3,
            selberg_max_l_prime: 6,
        }
    }
}

fn random_rat(rng: &mut ChaCha8Rng) -> Rat {
    rat(rng.random_range(-40..=40), rng.random_range(1..=9))
}

/// Falling products against the Vandermonde determinant, Fan determinants at
/// two random rational `a`, `∂(π)(π)` and the Gaussian integrals. All exact.
pub fn combinatorial_suite(p: &CombinatorialParams) -> Report {
    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
    let mut r = Report::new("determinant and Gaussian integral identities");

    for m in 1..=p.falling_max_m {
        for _ in 0..p.falling_tuples {
            let z: Vec<Rat> = (0..m).map(|_| int(rng.random_range(-12..=12))).collect();
            let label = format!("falling products at {:?}", z.iter().map(|x| x.to_string()).collect::<Vec<_>>());
            let brute = falling_product_brute_force(&z);
            r.check_eq(&label, &vandermonde_det(&z), &brute);
            r.check_eq(&label, &brute, &falling_product_sum(&z));
        }
    }

    for n in 2..=p.fan_max_n {
        let expected = factorial_product(1, n as u64 - 1);
        let values: Vec<_> = (0..2).map(|_| random_rat(&mut rng)).collect();
        for a in &values {
            let label = format!("F({a}, {n})");
            match fan_det(a, n) {
                Ok(d) => {
                    r.check_eq(label, &expected, &d);
                }
                Err(e) => {
                    r.check(label, false, e);
                }
            }
        }
    }

    for l in 1..=p.pi_max_l {
        let label = format!("∂(π)(π) for U_{l}");
        match partial_pi_pi(l) {
            Ok(v) => {
                r.check_eq(label, &factorial_product(0, l as u64), &v);
            }
            Err(e) => {
                r.check(label, false, e);
            }
        }
    }

    for l in 1..=p.selberg_max_l {
        for lp in l..=p.selberg_max_l_prime {
            let label = format!("Gaussian integral (l, l') = ({l}, {lp})");
            match gaussian_selberg(l, lp) {
                Ok(v) => {
                    r.check_eq(label, &gaussian_selberg_closed_form(l, lp), &v);
                }
                Err(e) => {
                    r.check(label, false, e);
                }
            }
        }
    }
    r
}
