//! Batch verification suites shared by the `identities` subcommand and the
//! acceptance run. Each returns a [`Report`]; none of them panics on a failed case.

use intertwining::{
    admissible_params, correspond, eval_uu, multiplicity_one_check, o1_sp_toy, predicted_ratio, uu_distribution, ToySign,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use root_data::{
    degree_relation_check, dim_pi_prime, dimension_identity_check, weyl_dimension, Algebra, CompactGroup, DualPair,
    HighestWeight,
};
use scalar_algebra::{int, pow2, rat, rat_to_f64, Rat, Report};
use special_functions::{derivative_identity_check, reflection_check, shift_identity_check, value_at_zero_check};
use symplectic_geometry::{
    homogeneity_gap, homogeneity_gap_listed, normal_form_residual, orbit_dim, orbit_dim_general, stable_range_equality,
    stable_range_rule, tau, tau_prime, CartanSpec, FormModel, MatrixOverD,
};

/// Every irreducible pair with `d <= max_d`, `d' <= max_d_prime`: all
/// signatures `p <= q` over C, even `d'` over R.
pub fn enumerate_pairs(max_d: usize, max_d_prime: usize) -> Vec<DualPair> {
    let mut out = Vec::new();
    for d in 1..=max_d {
        for n in 1..=max_d_prime {
            if n % 2 == 0 {
                out.push(DualPair::orthosymplectic(d, n / 2));
            }
            for p in 0..=n / 2 {
                out.push(DualPair::unitary(d, p, n - p));
            }
            out.push(DualPair::quaternionic(d, n));
        }
    }
    out
}

/// Reflection, derivative rules, value at zero and the shift identities for
/// `|a|, |b|, c <= max`, all exact.
pub fn special_function_suite(max: i64) -> Report {
    let mut r = Report::new("special function identities");
    for a in -max..=max {
        for b in -max..=max {
            r.absorb(reflection_check(a, b));
            r.absorb(derivative_identity_check(a, b));
            r.absorb(value_at_zero_check(a, b));
            for c in 0..=max {
                r.absorb(shift_identity_check(a, b, c));
            }
        }
    }
    r
}

/// The degree relation and the dimension identity on every enumerated pair.
pub fn pair_identity_suite(max_d: usize, max_d_prime: usize) -> Report {
    let mut r = Report::new("root data identities");
    for pair in enumerate_pairs(max_d, max_d_prime) {
        r.absorb(degree_relation_check(&pair));
        r.absorb(dimension_identity_check(&pair));
    }
    r
}

/// The orbit dimension table against `d' k dim_R D - 2 dim SH_k` for
/// `k <= max_k`, `d' <= max_d_prime`, and the stable-range equality against
/// its rule on pairs with `d, d' <= max_pair`.
pub fn orbit_suite(max_k: usize, max_d_prime: usize, max_pair: usize) -> Report {
    let mut r = Report::new("orbit geometry");
    for alg in [Algebra::Real, Algebra::Complex, Algebra::Quaternion] {
        for n in 1..=max_d_prime {
            if alg == Algebra::Real && n % 2 == 1 {
                continue;
            }
            let pair = match alg {
                Algebra::Real => DualPair::orthosymplectic(max_k, n / 2),
                Algebra::Complex => DualPair::unitary(max_k, n / 2, n - n / 2),
                Algebra::Quaternion => DualPair::quaternionic(max_k, n),
            };
            for k in 0..=pair.m() {
                let label = format!("dim O'_{k} for {pair}");
                match orbit_dim(&pair, k) {
                    Ok(dim) => {
                        r.check_eq(label, &orbit_dim_general(alg, n, k), &dim);
                    }
                    Err(e) => {
                        r.check(label, false, e);
                    }
                }
            }
        }
    }
    for pair in enumerate_pairs(max_pair, max_pair) {
        r.check_eq(format!("stable-range equality for {pair}"), &stable_range_rule(&pair), &stable_range_equality(&pair));
    }
    r
}

/// Whether the homogeneity gap vanishes exactly on the listed pairs.
pub fn gap_suite(max_d: usize, max_d_prime: usize) -> Report {
    let mut r = Report::new("homogeneity gap zero set");
    for pair in enumerate_pairs(max_d, max_d_prime) {
        let gap = homogeneity_gap(&pair);
        r.check_eq(format!("{pair} (gap {gap})"), &homogeneity_gap_listed(&pair), &(gap == 0));
    }
    r
}

/// `weyl_dimension(correspond(μ)) = dim_pi_prime(μ)` for `l <= max_l`,
/// `l <= l' <= max_l_prime`, `μ_j - δ <= max_n`.
pub fn correspondence_suite(max_l: usize, max_l_prime: usize, max_n: u32) -> Report {
    let mut r = Report::new("Howe correspondence dimensions");
    for l in 1..=max_l {
        for lp in l..=max_l_prime {
            let params = match admissible_params(l, lp, max_n) {
                Ok(p) => p,
                Err(e) => {
                    r.check(format!("(l, l') = ({l}, {lp})"), false, e);
                    continue;
                }
            };
            for mu in params {
                let label = format!("(l, l') = ({l}, {lp}), μ = {:?}", mu.entries().iter().map(|x| x.to_string()).collect::<Vec<_>>());
                let g = CompactGroup::Unitary(lp);
                let dims = correspond(&mu, l, lp)
                    .map_err(|e| e.to_string())
                    .and_then(|mup| HighestWeight::from_hc(&mup, g).map_err(|e| e.to_string()))
                    .and_then(|lam| weyl_dimension(&lam, g).map_err(|e| e.to_string()))
                    .and_then(|w| dim_pi_prime(&mu, l, lp).map(|d| (w, d)).map_err(|e| e.to_string()));
                match dims {
                    Ok((w, d)) => {
                        r.check_eq(label, &d, &w);
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

/// `(1/2, ±2^{-n-1})` for `1 <= n <= max_n`.
pub fn toy_suite(max_n: u32) -> Report {
    let mut r = Report::new("O_1 toy distribution");
    for n in 1..=max_n {
        for (sign, s) in [(ToySign::Plus, 1), (ToySign::Minus, -1)] {
            let t = o1_sp_toy(n, sign);
            let label = format!("n = {n}, sign {s:+}");
            r.check_eq(format!("{label} delta"), &rat(1, 2), &t.delta_coeff);
            r.check_eq(format!("{label} lebesgue"), &(int(s) * pow2(-(n as i64) - 1)), &t.lebesgue_coeff);
        }
    }
    r
}

/// `|S(μ)| / dim Π'` constant in `μ` for `1 <= l <= l' <= max_l_prime`,
/// `l <= max_l`, and equal to `2^{l l' - l(l+1)/2}`; 2 for `(1, 2)`.
pub fn multiplicity_suite(max_l: usize, max_l_prime: usize, max_n: u32) -> Report {
    let mut r = Report::new("multiplicity one");
    for l in 1..=max_l {
        for lp in l..=max_l_prime {
            let label = format!("(l, l') = ({l}, {lp})");
            match multiplicity_one_check(l, lp, max_n) {
                Ok(m) => {
                    r.check(format!("{label} cases"), m.report.cases > 0, "empty sweep");
                    r.absorb(m.report);
                    let shown = m.constant.as_ref().map_or("none".to_string(), |c| c.to_string());
                    r.check(format!("{label} constant"), m.constant == Some(predicted_ratio(l, lp)), shown);
                    if (l, lp) == (1, 2) {
                        r.check(format!("{label} constant is 2"), m.constant == Some(int(2)), "");
                    }
                }
                Err(e) => {
                    r.check(label, false, e);
                }
            }
        }
    }
    r
}

/// Representative pairs over R, C and H, with `l <= l'` and `l > l'`.
pub fn geometry_families() -> Vec<Vec<DualPair>> {
    vec![
        vec![DualPair::orthosymplectic(1, 2), DualPair::orthosymplectic(3, 2), DualPair::orthosymplectic(4, 1), DualPair::orthosymplectic(5, 3)],
        vec![DualPair::unitary(1, 1, 1), DualPair::unitary(2, 0, 3), DualPair::unitary(3, 1, 2), DualPair::unitary(2, 2, 2)],
        vec![DualPair::quaternionic(1, 2), DualPair::quaternionic(2, 3), DualPair::quaternionic(3, 2)],
    ]
}

/// `τ(g' w g^{-1}) = g τ(w) g^{-1}`, `τ'(g' w g^{-1}) = g' τ'(w) g'^{-1}`, and
/// the Cartan normal form `τ(Σ w_j u_j)`, `τ'(Σ w_j u_j)` on random rational
/// coordinates; `samples` per family, relative residuals.
pub fn geometry_suite(samples: usize, seed: u64, tol: f64) -> Report {
    let mut r = Report::new("moment maps and Cartan normal form");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for fam in geometry_families() {
        for i in 0..samples {
            let pair = fam[i % fam.len()];
            let label = format!("{pair} sample {i}");
            match equivariance_residual(&pair, i % 2 == 0, &mut rng) {
                Ok(res) => {
                    r.check_residual(format!("{label} equivariance"), 0.0, res, res, tol);
                }
                Err(e) => {
                    r.check(format!("{label} equivariance"), false, e);
                }
            }
        }
        for i in 0..samples {
            let pair = fam[i % fam.len()];
            let ms: Vec<usize> = (0..=CartanSpec::rank(&pair)).filter(|&m| FormModel::cartan(&pair, m).is_ok()).collect();
            let m = ms[rng.random_range(0..ms.len())];
            let coords: Vec<Rat> =
                (0..CartanSpec::rank(&pair)).map(|_| rat(rng.random_range(-40..=40), rng.random_range(1..=9))).collect();
            let scale: f64 = coords.iter().map(|c| rat_to_f64(c).powi(2)).sum::<f64>() + 1.0;
            let label = format!("{pair} m = {m} normal form");
            match normal_form_residual(&CartanSpec { pair, m, coords }) {
                Ok((a, b)) => {
                    let res = a.max(b) / scale;
                    r.check_residual(label, 0.0, res, res, tol);
                }
                Err(e) => {
                    r.check(label, false, e);
                }
            }
        }
    }
    r
}

fn equivariance_residual(pair: &DualPair, top: bool, rng: &mut ChaCha8Rng) -> Result<f64, String> {
    let k = if top { pair.m() } else { 0 };
    let model = FormModel::nilpotent(pair, k).map_err(|e| e.to_string())?;
    let w = model.random_w(rng);
    let g = model.random_g(rng);
    let gp = model.random_g_prime(rng, 0.3).map_err(|e| e.to_string())?;
    let unitarity = g.adjoint().mul(&g).sub(&MatrixOverD::identity(pair.algebra(), pair.d())).norm();
    let membership = model.g_prime_defect(&gp) / (gp.norm() * gp.norm());
    let gi = g.adjoint();
    let gpi = model.g_prime_inverse(&gp).map_err(|e| e.to_string())?;
    let moved = gp.mul(&w).mul(&gi);
    let t = tau(&w, &model).map_err(|e| e.to_string())?;
    let lhs = tau(&moved, &model).map_err(|e| e.to_string())?;
    let a = lhs.sub(&g.mul(&t).mul(&gi)).norm() / (1.0 + t.norm());
    let tp = tau_prime(&w, &model).map_err(|e| e.to_string())?;
    let lhs = tau_prime(&moved, &model).map_err(|e| e.to_string())?;
    let b = lhs.sub(&gp.mul(&tp).mul(&gpi)).norm() / (1.0 + tp.norm() * gp.norm() * gpi.norm());
    Ok(unitarity.max(membership).max(a).max(b))
}

/// `eval_uu(w) = eval_uu(g' w g^{-1})` for random `g ∈ U_l`, `g' ∈ U_{l'}`.
pub fn invariance_suite(samples: usize, seed: u64, tol: f64) -> Report {
    let mut r = Report::new("closed-form distribution invariance");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for (l, lp) in [(1, 1), (1, 2), (2, 2), (2, 3)] {
        let pair = DualPair::unitary(l, 0, lp);
        let prepared = FormModel::cartan(&pair, 0)
            .map_err(|e| e.to_string())
            .and_then(|m| admissible_params(l, lp, 3).map(|p| (m, p)).map_err(|e| e.to_string()));
        let (model, params) = match prepared {
            Ok(x) => x,
            Err(e) => {
                r.check(format!("(l, l') = ({l}, {lp})"), false, e);
                continue;
            }
        };
        for i in 0..samples {
            let mu = &params[i % params.len()];
            let label = format!("(l, l') = ({l}, {lp}), μ = {:?}", mu.entries().iter().map(|x| x.to_string()).collect::<Vec<_>>());
            let w = model.random_w(&mut rng).scale(0.6);
            let g = model.random_g(&mut rng);
            let values = model.random_g_prime(&mut rng, 1.0).map_err(|e| e.to_string()).and_then(|gp| {
                let moved = gp.mul(&w).mul(&g.adjoint());
                let p = uu_distribution(mu, l, lp).map_err(|e| e.to_string())?;
                let a = eval_uu(&p, &w).map_err(|e| e.to_string())?;
                let b = eval_uu(&p, &moved).map_err(|e| e.to_string())?;
                Ok((a, b))
            });
            match values {
                Ok((a, b)) => {
                    r.check_residual(label, a, b, (a - b).abs() / a.abs(), tol);
                }
                Err(e) => {
                    r.check(label, false, e);
                }
            }
        }
    }
    r
}
