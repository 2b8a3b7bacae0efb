use cocycle_lab::{cocycle_sweep, cover_splits, det_exponent, minus_one_modulus};
use intertwining::{
    correspond, eval_uu, multiplicity_one_check, o1_sp_toy, predicted_ratio, uu_distribution, ToySign,
};
use nalgebra::DMatrix;
use num_complex::Complex64;
use oracles::{combinatorial_suite, fourier_check, pairing_suite, CombinatorialParams};
use root_data::{
    degree_relation_check, dim_pi_prime, dimension_identity_check, rho, weyl_dimension, Algebra, CompactGroup, DualPair,
    HCParam, HighestWeight,
};
use scalar_algebra::{PiScalar, Rat, Report};
use serde_json::{json, Value};
use special_functions::{fourier_pair, poly_p2, poly_pm2, poly_q, ExponentPair};
use symplectic_geometry::{
    derivative_order_bound, homogeneity_gap, homogeneity_gap_listed, orbit_dim_general, orbit_table,
    stable_range_equality, stable_range_rule, MatrixOverD,
};

use crate::json::{complex, float, pi_scalar, rat, rats, report, unipoly};
use crate::{suites, AlgebraArg, BranchArg, Command, GroupArg, Output, PairArgs, SignArg};

type CmdResult = Result<Output, String>;

pub(crate) fn dispatch(cmd: Command) -> CmdResult {
    match cmd {
        Command::PairInfo { pair } => pair_info(&pair),
        Command::Poly { a, b, branch } => Ok(poly(a, b, branch)),
        Command::FourierCheck { amin, amax, tol, xi, pairing_min } => fourier(amin, amax, tol, &xi, pairing_min),
        Command::OrbitDims { pair } => orbit_dims(&pair),
        Command::Correspond { l, lprime, mu } => correspondence(l, lprime, mu),
        Command::Dim { group, d, lambda, l, lprime, mu } => dim(group, d, lambda, l, lprime, mu),
        Command::MultOne { l, lprime, max_mu } => mult_one(l, lprime, max_mu),
        Command::Identities { seed } => Ok(identities(seed)),
        Command::CocycleCheck { dim, samples, seed } => cocycle_check(dim, samples, seed),
        Command::ToyO1sp { n, sign } => Ok(toy(n, sign)),
        Command::EvalDistribution { l, lprime, mu, w } => eval_distribution(l, lprime, mu, &w),
    }
}

fn algebra_of_group(g: GroupArg) -> Algebra {
    match g {
        GroupArg::O => Algebra::Real,
        GroupArg::U => Algebra::Complex,
        GroupArg::Sp => Algebra::Quaternion,
    }
}

fn compact_group(g: GroupArg, d: usize) -> CompactGroup {
    match g {
        GroupArg::O => CompactGroup::Orthogonal(d),
        GroupArg::U => CompactGroup::Unitary(d),
        GroupArg::Sp => CompactGroup::Symplectic(d),
    }
}

/// Over C without `--p/--q` the signature is the balanced `(⌊d'/2⌋, ⌈d'/2⌉)`.
fn build_pair(args: &PairArgs) -> Result<DualPair, String> {
    let from_algebra = args.algebra.map(|a| match a {
        AlgebraArg::R => Algebra::Real,
        AlgebraArg::C => Algebra::Complex,
        AlgebraArg::H => Algebra::Quaternion,
    });
    let from_group = args.g.map(algebra_of_group);
    let algebra = match (from_algebra, from_group) {
        (Some(a), Some(g)) if a != g => {
            return Err(format!("--g does not match --algebra {}", a.symbol()));
        }
        (Some(a), _) | (None, Some(a)) => a,
        (None, None) => return Err("one of --algebra or --g is required".into()),
    };
    let signature = match (args.p, args.q) {
        (Some(p), Some(q)) => Some((p, q)),
        _ if algebra == Algebra::Complex => Some((args.dprime / 2, args.dprime - args.dprime / 2)),
        _ => None,
    };
    DualPair::new(algebra, args.d, args.dprime, signature).map_err(|e| e.to_string())
}

fn pair_info(args: &PairArgs) -> CmdResult {
    let pair = build_pair(args)?;
    let checks = [degree_relation_check(&pair), dimension_identity_check(&pair)];
    let signature = if pair.algebra() == Algebra::Complex {
        let (p, q) = pair.signature();
        json!([p, q])
    } else {
        Value::Null
    };
    let value = json!({
        "pair": pair.to_string(),
        "algebra": pair.algebra().symbol(),
        "g": pair.g().to_string(),
        "d": pair.d(),
        "dprime": pair.d_prime(),
        "signature": signature,
        "l": pair.l(),
        "lprime": pair.l_prime(),
        "r": rat(&pair.r()),
        "iota": rat(&pair.iota()),
        "delta": rat(&pair.delta()),
        "beta": pi_scalar(&PiScalar::new(pair.beta_pi_multiple(), 1, 0)),
        "rho": rats(&rho(pair.g())),
        "dim_g": pair.g().dim(),
        "dim_g_prime": pair.dim_g_prime(),
        "dim_w": pair.dim_w(),
        "witt_index": pair.witt_index(),
        "m": pair.m(),
        "stable_range": pair.is_stable_range(),
        "stable_range_equality": stable_range_equality(&pair),
        "stable_range_rule": stable_range_rule(&pair),
        "homogeneity_gap": homogeneity_gap(&pair),
        "homogeneity_gap_listed": homogeneity_gap_listed(&pair),
        "derivative_order_bound": derivative_order_bound(&pair).ok(),
        "det_exponent": det_exponent(&pair),
        "cover_splits": cover_splits(&pair),
        "checks": checks.iter().map(report).collect::<Vec<_>>(),
    });
    Ok(Output { value, passed: checks.iter().all(Report::passed) })
}

fn poly(a: i64, b: i64, branch: BranchArg) -> Output {
    let e = ExponentPair::new(a, b);
    let value = match branch {
        BranchArg::Plus => json!({ "a": a, "b": b, "branch": "2", "poly": unipoly(&poly_p2(e)) }),
        BranchArg::Minus => json!({ "a": a, "b": b, "branch": "-2", "poly": unipoly(&poly_pm2(e)) }),
        BranchArg::Q => {
            let q = poly_q(e);
            json!({ "a": a, "b": b, "branch": "q", "scale": pi_scalar(&q.scale), "poly": unipoly(&q.poly) })
        }
        BranchArg::Pair => {
            let d = fourier_pair(e);
            json!({
                "a": a,
                "b": b,
                "branch": "pair",
                "overall": pi_scalar(&d.overall),
                "plus": unipoly(&d.plus_part),
                "minus": unipoly(&d.minus_part),
                "delta": unipoly(&d.delta_part),
            })
        }
    };
    Output::ok(value)
}

fn fourier(amin: i64, amax: i64, tol: f64, xis: &[Rat], pairing_min: Option<i64>) -> CmdResult {
    if amin > amax {
        return Err(format!("--amin {amin} exceeds --amax {amax}"));
    }
    if !(tol > 0.0) {
        return Err("--tol must be positive".into());
    }
    let c = fourier_check(amin, amax, xis, tol);
    let rows: Vec<Value> = c
        .rows
        .iter()
        .map(|r| {
            json!({
                "a": r.a,
                "b": r.b,
                "xi": rat(&r.xi),
                "quad": complex(r.quad),
                "expected": float(r.expected),
                "residual": float(r.residual),
            })
        })
        .collect();
    let mut passed = c.passed();
    let mut value = json!({
        "tol": float(tol),
        "rows": rows,
        "report": report(&c.report),
        "zero_report": report(&c.zero_report),
    });
    if let Some(min) = pairing_min {
        if min > 0 {
            return Err("--pairing-min must be nonpositive".into());
        }
        let p = pairing_suite(min, tol);
        passed &= p.passed();
        value["pairing_report"] = report(&p);
    }
    Ok(Output { value, passed })
}

fn orbit_dims(args: &PairArgs) -> CmdResult {
    let pair = build_pair(args)?;
    let table = orbit_table(&pair);
    let rows: Vec<Value> = table.iter().map(|o| json!({ "k": o.k, "dim": o.dim, "degree": o.degree })).collect();
    let agrees = table.iter().all(|o| o.dim == orbit_dim_general(pair.algebra(), pair.d_prime(), o.k));
    let value = json!({
        "pair": pair.to_string(),
        "dim_w": pair.dim_w(),
        "m": pair.m(),
        "rows": rows,
        "general_formula_agrees": agrees,
    });
    Ok(Output { value, passed: agrees })
}

fn hc(mu: Vec<Rat>) -> Result<HCParam, String> {
    HCParam::new(mu).map_err(|e| e.to_string())
}

fn correspondence(l: usize, lprime: usize, mu: Vec<Rat>) -> CmdResult {
    let mu = hc(mu)?;
    if mu.len() != l {
        return Err(format!("--mu has {} entries, expected {l}", mu.len()));
    }
    let mup = correspond(&mu, l, lprime).map_err(|e| e.to_string())?;
    let g = CompactGroup::Unitary(lprime);
    let lambda = HighestWeight::from_hc(&mup, g).map_err(|e| e.to_string())?;
    let weyl = weyl_dimension(&lambda, g).map_err(|e| e.to_string())?;
    let dim = dim_pi_prime(&mu, l, lprime).map_err(|e| e.to_string())?;
    let value = json!({
        "l": l,
        "lprime": lprime,
        "mu": rats(mu.entries()),
        "mu_prime": rats(mup.entries()),
        "highest_weight": rats(lambda.entries()),
        "weyl_dimension": rat(&weyl),
        "dim_pi_prime": rat(&dim),
    });
    Ok(Output { value, passed: weyl == dim })
}

fn dim(
    group: Option<GroupArg>,
    d: Option<usize>,
    lambda: Option<Vec<Rat>>,
    l: Option<usize>,
    lprime: Option<usize>,
    mu: Option<Vec<Rat>>,
) -> CmdResult {
    match (group, d, lambda, l, lprime, mu) {
        (Some(g), Some(d), Some(lambda), None, None, None) => {
            let g = compact_group(g, d);
            let hw = HighestWeight::new(lambda).map_err(|e| e.to_string())?;
            let dim = weyl_dimension(&hw, g).map_err(|e| e.to_string())?;
            Ok(Output::ok(json!({ "group": g.to_string(), "lambda": rats(hw.entries()), "dim": rat(&dim) })))
        }
        (None, None, None, Some(l), Some(lp), Some(mu)) => {
            let mu = hc(mu)?;
            let dim = dim_pi_prime(&mu, l, lp).map_err(|e| e.to_string())?;
            Ok(Output::ok(json!({ "l": l, "lprime": lp, "mu": rats(mu.entries()), "dim": rat(&dim) })))
        }
        _ => Err("use either --group --d --lambda or --l --lprime --mu".into()),
    }
}

fn mult_one(l: usize, lprime: usize, max_mu: u32) -> CmdResult {
    let m = multiplicity_one_check(l, lprime, max_mu).map_err(|e| e.to_string())?;
    let predicted = predicted_ratio(l, lprime);
    let signs: Vec<Value> = m.signs.iter().map(|(mu, s)| json!({ "mu": rats(mu.entries()), "sign": s })).collect();
    let passed = m.report.passed() && m.constant.as_ref() == Some(&predicted);
    let value = json!({
        "l": l,
        "lprime": lprime,
        "max_mu": max_mu,
        "constant": m.constant.as_ref().map(rat),
        "predicted": rat(&predicted),
        "identity_sign": m.identity_sign,
        "signs": signs,
        "report": report(&m.report),
    });
    Ok(Output { value, passed })
}

/// Everything exact, plus the seeded geometry and invariance sweeps.
fn identities(seed: u64) -> Output {
    let reports = [
        suites::special_function_suite(8),
        combinatorial_suite(&CombinatorialParams { seed, ..CombinatorialParams::default() }),
        suites::pair_identity_suite(6, 8),
        suites::orbit_suite(6, 12, 10),
        suites::correspondence_suite(3, 5, 5),
        suites::toy_suite(8),
        suites::multiplicity_suite(4, 4, 6),
        suites::geometry_suite(200, seed, 1e-12),
        suites::invariance_suite(100, seed, 1e-9),
    ];
    let passed = reports.iter().all(Report::passed);
    let value = json!({
        "seed": seed,
        "passed": passed,
        "suites": reports.iter().map(report).collect::<Vec<_>>(),
    });
    Output { value, passed }
}

fn cocycle_check(dim: usize, samples: usize, seed: u64) -> CmdResult {
    let sweep = cocycle_sweep(dim, samples, seed).map_err(|e| e.to_string())?;
    let minus_one = minus_one_modulus(dim);
    let passed = sweep.passed() && minus_one.passed();
    let value = json!({
        "dim": dim,
        "samples": samples,
        "seed": seed,
        "redrawn": sweep.redrawn,
        "passed": passed,
        "reports": sweep.reports().iter().map(|r| report(r)).collect::<Vec<_>>(),
        "minus_one": report(&minus_one),
    });
    Ok(Output { value, passed })
}

fn toy(n: u32, sign: SignArg) -> Output {
    let sign = match sign {
        SignArg::Plus => ToySign::Plus,
        SignArg::Minus => ToySign::Minus,
    };
    let t = o1_sp_toy(n, sign);
    Output::ok(json!({ "delta": rat(&t.delta_coeff), "lebesgue": rat(&t.lebesgue_coeff) }))
}

fn entry(v: &Value) -> Option<Complex64> {
    match v {
        Value::Number(n) => Some(Complex64::new(n.as_f64()?, 0.0)),
        Value::Array(pair) if pair.len() == 2 => Some(Complex64::new(pair[0].as_f64()?, pair[1].as_f64()?)),
        _ => None,
    }
}

/// Parses an `rows x cols` complex matrix from JSON rows.
fn parse_matrix(text: &str, rows: usize, cols: usize) -> Result<DMatrix<Complex64>, String> {
    let v: Value = serde_json::from_str(text).map_err(|e| format!("--w is not JSON: {e}"))?;
    let shape_err = || format!("--w must be a {rows} x {cols} array of numbers or [re, im] pairs");
    let rs = v.as_array().filter(|r| r.len() == rows).ok_or_else(shape_err)?;
    let mut m = DMatrix::zeros(rows, cols);
    for (i, row) in rs.iter().enumerate() {
        let row = row.as_array().filter(|r| r.len() == cols).ok_or_else(shape_err)?;
        for (j, e) in row.iter().enumerate() {
            m[(i, j)] = entry(e).ok_or_else(shape_err)?;
        }
    }
    Ok(m)
}

fn eval_distribution(l: usize, lprime: usize, mu: Vec<Rat>, w: &str) -> CmdResult {
    let mu = hc(mu)?;
    let profile = uu_distribution(&mu, l, lprime).map_err(|e| e.to_string())?;
    let m = parse_matrix(w, lprime, l)?;
    let w = MatrixOverD::from_realization(Algebra::Complex, m).map_err(|e| e.to_string())?;
    let v = eval_uu(&profile, &w).map_err(|e| e.to_string())?;
    Ok(Output::ok(float(v)))
}
