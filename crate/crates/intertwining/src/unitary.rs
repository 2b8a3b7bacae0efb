//! The pair `(U_l, U_{l'})`, `l <= l'`, with both members compact.

use nalgebra::DMatrix;
use num_complex::Complex64;
use num_traits::{One, Signed, Zero};
use root_data::{dim_pi_prime, pi_g_h, CompactGroup, DualPair, HCParam};
use scalar_algebra::{
    divide_by_vandermonde, factorial, int, rat, symmetric_group, vandermonde_det, MultiPoly, PiScalar, Rat, Report,
};
use special_functions::poly_pm2;
use symplectic_geometry::{tau, FormModel, MatrixOverD};

use crate::howe::admissible_params;
use crate::profile::{ABExponents, Convention};
use crate::IntertwiningError;

/// `T(Θ̌_Π)(w) = c e^{-(π/2)<Jw,w>} P̃_μ(τ(w))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UUProfile {
    pub mu: HCParam,
    pub l: usize,
    pub l_prime: usize,
    /// `P̃_μ = (Σ_s sgn(s) P_μ(s y)) / π_{g/h}(y)`.
    pub invariant_poly: MultiPoly,
    /// The `π/2` in the Gaussian.
    pub gaussian_rate: PiScalar,
}

fn delta(l: usize, l_prime: usize) -> Rat {
    rat(l_prime as i64 - l as i64 + 1, 2)
}

fn exponents(mu: &HCParam, l: usize, l_prime: usize) -> Result<ABExponents, IntertwiningError> {
    if l == 0 || l > l_prime || mu.len() != l {
        return Err(IntertwiningError::Domain(format!("need 1 <= l <= l' and {l} entries")));
    }
    let d = delta(l, l_prime);
    for m in mu.entries() {
        let n = m - &d;
        if !n.is_integer() || n.is_negative() {
            return Err(IntertwiningError::Inadmissible(format!("μ_j = {m} is not in {d} + Z_{{>=0}}")));
        }
    }
    ABExponents::new(mu, &d, Convention::CompactUnitary)
}

fn pos_roots(l: usize) -> i64 {
    (l * (l.saturating_sub(1)) / 2) as i64
}

/// Builds `P̃_μ` from `P_μ(y) = ∏_j P_{a_j,b_j,-2}(π y_j)` by an exact skew sum
/// and exact division.
pub fn uu_distribution(mu: &HCParam, l: usize, l_prime: usize) -> Result<UUProfile, IntertwiningError> {
    let ab = exponents(mu, l, l_prime)?;
    let pi = PiScalar::pi();
    let mut p_mu = MultiPoly::one(l);
    for (j, e) in ab.pairs().into_iter().enumerate() {
        p_mu = &p_mu * &MultiPoly::from_unipoly(&poly_pm2(e), j, l, &pi);
    }
    let group = symmetric_group(l);
    let mut skew = MultiPoly::zero(l);
    for s in &group {
        let t = p_mu.act(s);
        skew = if s.perm_sign() == 1 { &skew + &t } else { &skew - &t };
    }
    // π_{g/h} = (-i)^N ∏_{j<k}(y_j - y_k), so dividing by it is i^N times dividing by the Vandermonde.
    let q = divide_by_vandermonde(&skew, &group)
        .map_err(|e| IntertwiningError::Internal(format!("skew sum is not divisible: {e}")))?;
    let invariant_poly = q.scale(&PiScalar::i().pow(pos_roots(l) as i32));
    debug_assert!(&invariant_poly * &pi_g_h(CompactGroup::Unitary(l)) == skew);
    Ok(UUProfile {
        mu: mu.clone(),
        l,
        l_prime,
        invariant_poly,
        gaussian_rate: PiScalar::new(rat(1, 2), 1, 0),
    })
}

/// `e^{-(π/2) tr(w w̄^t)} (-i)^N P̃_μ(y)` where `y` are the eigenvalues of `-i τ(w)`.
///
/// The unimodular `(-i)^N` relating `π_{g/h}` to the real Vandermonde is
/// absorbed into the constant, so the value is real.
pub fn eval_uu(profile: &UUProfile, w: &MatrixOverD) -> Result<f64, IntertwiningError> {
    let pair = DualPair::unitary(profile.l, 0, profile.l_prime);
    let model = FormModel::cartan(&pair, 0)?;
    let t = tau(w, &model)?;
    let herm: DMatrix<Complex64> = t.realization().map(|z| z * Complex64::new(0.0, -1.0));
    let herm = (&herm + herm.adjoint()).scale(0.5);
    let y: Vec<Complex64> = herm
        .symmetric_eigenvalues()
        .iter()
        .map(|&v| Complex64::new(v, 0.0))
        .collect();
    let phase = PiScalar::i().pow(-pos_roots(profile.l) as i32).to_complex();
    let value = phase * profile.invariant_poly.eval_complex(&y);
    let rate = profile.gaussian_rate.to_complex().re;
    Ok((-rate * w.norm().powi(2)).exp() * value.re)
}

fn fact(n: i64) -> Rat {
    Rat::from_integer(factorial(n as u64))
}

/// `S(μ) = Σ_{s ∈ Σ_l} sgn(s) ∏_j (∂^{s(j)-1} P_{a_j,b_j,-2})(0)`, with
/// `a_j = μ_j - δ + 1`, `b_j = -μ_j - δ + 1`, from the polynomials directly.
pub fn t_at_zero_skew_sum(mu: &HCParam, l: usize, l_prime: usize) -> Result<Rat, IntertwiningError> {
    let ab = exponents(mu, l, l_prime)?;
    let polys: Vec<_> = ab.pairs().into_iter().map(poly_pm2).collect();
    let mut total = Rat::zero();
    for s in symmetric_group(l) {
        let mut term = Rat::from_integer(s.perm_sign().into());
        for (j, p) in polys.iter().enumerate() {
            let k = s.perm()[j];
            term *= p.coeff(k) * fact(k as i64);
        }
        total += term;
    }
    Ok(total)
}

/// `(Σ_s sgn(s) ∏_j (μ_j-δ)!/(μ_j-s(j)-δ+1)!, ∏_{j<k}(μ_j - μ_k))`, with `1/n! = 0` for `n < 0`.
pub fn skew_factorial_identity(mu: &HCParam, l: usize, l_prime: usize) -> Result<(Rat, Rat), IntertwiningError> {
    exponents(mu, l, l_prime)?;
    let d = delta(l, l_prime);
    let n: Vec<i64> = mu.entries().iter().map(|m| (m - &d).to_integer().try_into().expect("small")).collect();
    let mut lhs = Rat::zero();
    for s in symmetric_group(l) {
        let mut term = Rat::from_integer(s.perm_sign().into());
        for (j, &nj) in n.iter().enumerate() {
            let bottom = nj - s.perm()[j] as i64;
            if bottom < 0 {
                term = Rat::zero();
                break;
            }
            term *= fact(nj) / fact(bottom);
        }
        lhs += term;
    }
    let e = mu.entries();
    let mut prod = Rat::one();
    for j in 0..l {
        for k in j + 1..l {
            prod *= &e[j] - &e[k];
        }
    }
    Ok((lhs, prod))
}

#[derive(Clone, Debug)]
pub struct MultiplicityReport {
    pub report: Report,
    /// The common value of `|S(μ)| / dim Π'`.
    pub constant: Option<Rat>,
    /// The common sign `ε` in `Σ_s ... = ε ∏_{j<k}(μ_j - μ_k)`.
    pub identity_sign: Option<i64>,
    /// `(μ, sign of S(μ))` over the sweep; recorded, not checked.
    pub signs: Vec<(HCParam, i64)>,
}

/// Sweeps all admissible `μ` with `μ_j - δ <= max_n`:
/// the factorial identity against an exact determinant, a `μ`-independent
/// sign in that identity, and a `μ`-independent ratio `|S(μ)| / dim Π'`.
pub fn multiplicity_one_check(l: usize, l_prime: usize, max_n: u32) -> Result<MultiplicityReport, IntertwiningError> {
    let mut report = Report::new(format!("multiplicity one (l, l') = ({l}, {l_prime})"));
    let mut constant: Option<Rat> = None;
    let mut identity_sign: Option<i64> = None;
    let mut signs = Vec::new();
    let d = delta(l, l_prime);
    for mu in admissible_params(l, l_prime, max_n)? {
        let label = format!("μ = {:?}", mu.entries().iter().map(|x| x.to_string()).collect::<Vec<_>>());
        let (lhs, prod) = skew_factorial_identity(&mu, l, l_prime)?;
        let n: Vec<Rat> = mu.entries().iter().map(|m| m - &d).collect();
        report.check_eq(format!("{label} factorial determinant"), &vandermonde_det(&n), &lhs);
        let eps = if lhs == prod {
            1
        } else if lhs == -&prod {
            -1
        } else {
            0
        };
        report.check(format!("{label} identity sign"), eps != 0 && *identity_sign.get_or_insert(eps) == eps, format!("{lhs} vs {prod}"));
        let s = t_at_zero_skew_sum(&mu, l, l_prime)?;
        let dim = dim_pi_prime(&mu, l, l_prime)?;
        signs.push((mu.clone(), if s.is_positive() { 1 } else if s.is_negative() { -1 } else { 0 }));
        if dim.is_zero() || s.is_zero() {
            report.check(format!("{label} ratio"), false, format!("S = {s}, dim = {dim}"));
            continue;
        }
        let ratio = s.abs() / dim;
        let c = constant.get_or_insert_with(|| ratio.clone()).clone();
        report.check_eq(format!("{label} ratio"), &c, &ratio);
    }
    Ok(MultiplicityReport { report, constant, identity_sign, signs })
}

/// `2^{l l' - l(l+1)/2}`, the ratio predicted by the factorial bookkeeping.
pub fn predicted_ratio(l: usize, l_prime: usize) -> Rat {
    int(2).pow((l * l_prime - l * (l + 1) / 2) as i32)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hc(xs: &[Rat]) -> HCParam {
        HCParam::new(xs.to_vec()).unwrap()
    }

    #[test]
    fn skew_sum_examples() {
        assert_eq!(t_at_zero_skew_sum(&hc(&[int(1)]), 1, 2).unwrap(), int(2));
        assert_eq!(t_at_zero_skew_sum(&hc(&[int(2)]), 1, 2).unwrap(), int(-4));
        assert_eq!(t_at_zero_skew_sum(&hc(&[rat(1, 2)]), 1, 1).unwrap(), int(1));
    }

    #[test]
    fn invariant_polynomial_degrees() {
        let p = uu_distribution(&hc(&[rat(1, 2)]), 1, 1).unwrap();
        assert_eq!(p.invariant_poly.total_degree(), 0);
        let p = uu_distribution(&hc(&[int(1)]), 1, 2).unwrap();
        assert_eq!(p.invariant_poly.total_degree(), 0);
        let p = uu_distribution(&hc(&[int(2)]), 1, 2).unwrap();
        assert_eq!(p.invariant_poly.total_degree(), 1);
    }

    #[test]
    fn small_sweep() {
        let r = multiplicity_one_check(1, 2, 6).unwrap();
        assert!(r.report.passed(), "{:?}", r.report.failures);
        assert_eq!(r.constant, Some(int(2)));
        assert_eq!(predicted_ratio(1, 2), int(2));
        let r = multiplicity_one_check(2, 2, 3).unwrap();
        assert!(r.report.passed(), "{:?}", r.report.failures);
    }

    #[test]
    fn gaussian_at_the_origin_and_on_a_sphere() {
        let p = uu_distribution(&hc(&[rat(1, 2)]), 1, 1).unwrap();
        let c = p.invariant_poly.eval_complex(&[Complex64::new(0.0, 0.0)]).re;
        let zero = MatrixOverD::zeros(root_data::Algebra::Complex, 1, 1);
        assert!((eval_uu(&p, &zero).unwrap() - c).abs() < 1e-15);
        let mut w = MatrixOverD::zeros(root_data::Algebra::Complex, 1, 1);
        w.set(0, 0, Complex64::new((2.0 / std::f64::consts::PI).sqrt(), 0.0));
        assert!((eval_uu(&p, &w).unwrap() - c * (-1.0f64).exp()).abs() < 1e-14);
    }
}
