use cli::{run, Outcome};
use proptest::prelude::*;
use serde_json::{json, Value};

fn call(args: &[&str]) -> Outcome {
    run(std::iter::once("dualpairs").chain(args.iter().copied()))
}

fn ok_json(args: &[&str]) -> Value {
    let out = call(args);
    assert_eq!(out.code, 0, "{args:?}: {}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap()
}

#[test]
fn toy_example() {
    let out = call(&["toy-o1sp", "--n", "1", "--sign", "plus"]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout.trim(), r#"{"delta":"1/2","lebesgue":"1/4"}"#);
    let minus = ok_json(&["toy-o1sp", "--n", "3", "--sign", "minus"]);
    assert_eq!(minus, json!({ "delta": "1/2", "lebesgue": "-1/16" }));
}

#[test]
fn orbit_dims_example() {
    let v = ok_json(&["orbit-dims", "--algebra", "C", "--d", "2", "--dprime", "4"]);
    let rows: Vec<(i64, i64)> =
        v["rows"].as_array().unwrap().iter().map(|r| (r["k"].as_i64().unwrap(), r["dim"].as_i64().unwrap())).collect();
    assert_eq!(rows, vec![(0, 0), (1, 6), (2, 8)]);
    let real = ok_json(&["orbit-dims", "--algebra", "R", "--d", "3", "--dprime", "8"]);
    assert_eq!(real["rows"].as_array().unwrap().len(), 4);
    assert_eq!(real["general_formula_agrees"], json!(true));
}

#[test]
fn pair_info_example() {
    let v = ok_json(&["pair-info", "--algebra", "C", "--g", "U", "--d", "2", "--dprime", "5", "--p", "0", "--q", "5"]);
    assert_eq!(v["pair"], json!("(U_2, U_{0,5})"));
    assert_eq!((v["l"].as_u64(), v["lprime"].as_u64()), (Some(2), Some(5)));
    assert_eq!(v["r"], json!("2"));
    assert_eq!(v["delta"], json!("2"));
    assert_eq!(v["beta"], json!({ "coeff": "1", "pi": 1, "i": 0 }));
    assert_eq!(v["stable_range"], json!(false));
    for key in ["homogeneity_gap", "homogeneity_gap_listed", "stable_range_equality"] {
        assert!(v.get(key).is_some(), "{key}");
    }
}

#[test]
fn pair_info_rejects_mismatched_group() {
    assert_eq!(call(&["pair-info", "--algebra", "R", "--g", "U", "--d", "2", "--dprime", "4"]).code, 2);
    assert_eq!(call(&["pair-info", "--algebra", "R", "--d", "2", "--dprime", "3"]).code, 2);
    assert_eq!(call(&["pair-info", "--d", "2", "--dprime", "4"]).code, 2);
}

#[test]
fn poly_branches() {
    let v = ok_json(&["poly", "--a", "1", "--b", "1", "--branch", "2"]);
    assert_eq!(v["poly"], json!(["1/2"]));
    let pair = ok_json(&["poly", "--a", "-1", "--b", "-1"]);
    assert_eq!(pair["overall"], json!({ "coeff": "2", "pi": 1, "i": 0 }));
    assert_eq!(pair["delta"], json!(["1", "0", "-1"]));
    let q = ok_json(&["poly", "--a", "2", "--b", "-1", "--branch", "q"]);
    assert!(q.get("scale").is_some());
    let m = ok_json(&["poly", "--a", "2", "--b", "1", "--branch", "-2"]);
    assert!(m["poly"].is_array());
}

#[test]
fn correspond_example() {
    let v = ok_json(&["correspond", "--l", "1", "--lprime", "3", "--mu", "3/2"]);
    assert_eq!(v["mu_prime"].as_array().unwrap().len(), 3);
    assert_eq!(v["weyl_dimension"], v["dim_pi_prime"]);
    // 1/2 is below δ = 3/2
    assert_eq!(call(&["correspond", "--l", "1", "--lprime", "3", "--mu", "1/2"]).code, 2);
}

#[test]
fn dim_both_forms() {
    let v = ok_json(&["dim", "--group", "U", "--d", "3", "--lambda", "2,1,0"]);
    assert_eq!(v["dim"], json!("8"));
    let w = ok_json(&["dim", "--l", "1", "--lprime", "2", "--mu", "3"]);
    assert_eq!(w["dim"], json!("3"));
    assert_eq!(call(&["dim", "--group", "U", "--l", "1"]).code, 2);
}

#[test]
fn mult_one_example() {
    let v = ok_json(&["mult-one", "--l", "2", "--lprime", "4", "--max-mu", "6"]);
    assert_eq!(v["constant"], v["predicted"]);
    assert_eq!(v["report"]["passed"], json!(true));
    let small = ok_json(&["mult-one", "--l", "1", "--lprime", "2", "--max-mu", "6"]);
    assert_eq!(small["constant"], json!("2"));
}

#[test]
fn eval_distribution_is_a_float() {
    let out = call(&["eval-distribution", "--l", "1", "--lprime", "2", "--mu", "1", "--w", "[[0.3],[[0.1,-0.2]]]"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let x: f64 = out.stdout.trim().parse().unwrap();
    assert!(x.is_finite());
    // the value only depends on the U_1 x U_2 orbit: swapping the rows is a unitary change
    let swapped = call(&["eval-distribution", "--l", "1", "--lprime", "2", "--mu", "1", "--w", "[[[0.1,-0.2]],[0.3]]"]);
    let y: f64 = swapped.stdout.trim().parse().unwrap();
    assert!((x - y).abs() <= 1e-12 * x.abs().max(1.0));
    let bad = call(&["eval-distribution", "--l", "1", "--lprime", "2", "--mu", "1", "--w", "[[1,2]]"]);
    assert_eq!(bad.code, 2);
}

#[test]
fn cocycle_check_is_deterministic() {
    let args = ["cocycle-check", "--dim", "2", "--samples", "20", "--seed", "42"];
    let a = call(&args);
    let b = call(&args);
    assert_eq!(a.code, 0, "{}", a.stdout);
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_str(&a.stdout).unwrap();
    assert_eq!(v["passed"], json!(true));
}

#[test]
fn fourier_check_small_range() {
    let v = ok_json(&["fourier-check", "--amin", "0", "--amax", "2", "--tol", "1e-6", "--xi", "1,-1/2"]);
    // eight pairs in [0, 2]^2 with a + b >= 1
    assert_eq!(v["rows"].as_array().unwrap().len(), 2 * 8);
    assert_eq!(v["report"]["passed"], json!(true));
    // an impossible tolerance is a verification failure, not a usage error
    let strict = call(&["fourier-check", "--amin", "0", "--amax", "1", "--tol", "1e-30", "--xi", "1"]);
    assert_eq!(strict.code, 1);
    assert!(serde_json::from_str::<Value>(&strict.stdout).is_ok());
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(call(&["no-such-command"]).code, 2);
    assert_eq!(call(&["toy-o1sp", "--n", "x", "--sign", "plus"]).code, 2);
    assert_eq!(call(&["toy-o1sp", "--n", "0", "--sign", "plus"]).code, 2);
    assert_eq!(call(&["poly", "--a", "1"]).code, 2);
    assert_eq!(call(&[]).code, 2);
    let help = call(&["--help"]);
    assert_eq!(help.code, 0);
    assert!(help.stdout.contains("identities"));
}

#[test]
fn floats_have_seventeen_digits() {
    let v = call(&["fourier-check", "--amin", "1", "--amax", "1", "--xi", "1"]);
    let text = v.stdout;
    let doc: Value = serde_json::from_str(&text).unwrap();
    let expected = doc["rows"][0]["expected"].to_string();
    let mantissa = expected.split('e').next().unwrap().replace(['-', '.'], "");
    assert_eq!(mantissa.len(), 17, "{expected}");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn pair_info_is_valid_json_everywhere(alg in 0usize..3, d in 1usize..7, n in 1usize..9, p in 0usize..9) {
        let (algebra, dprime) = match alg {
            0 => ("R", 2 * n),
            1 => ("C", n),
            _ => ("H", n),
        };
        let d_s = d.to_string();
        let n_s = dprime.to_string();
        let mut args = vec!["pair-info", "--algebra", algebra, "--d", &d_s, "--dprime", &n_s];
        let (p_s, q_s) = ((p % (dprime + 1)).to_string(), (dprime - p % (dprime + 1)).to_string());
        if alg == 1 {
            args.extend(["--p", &p_s, "--q", &q_s]);
        }
        let out = call(&args);
        prop_assert_eq!(out.code, 0, "{}", out.stdout);
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        prop_assert_eq!(v["dim_w"].as_i64().unwrap(), v["d"].as_i64().unwrap() * v["dprime"].as_i64().unwrap()
            * match alg { 0 => 1, 1 => 2, _ => 4 });
    }

    #[test]
    fn toy_signs_are_opposite(n in 1u32..12) {
        let n_s = n.to_string();
        let plus = ok_json(&["toy-o1sp", "--n", &n_s, "--sign", "plus"]);
        let minus = ok_json(&["toy-o1sp", "--n", &n_s, "--sign", "minus"]);
        prop_assert_eq!(&plus["delta"], &minus["delta"]);
        let neg = format!("-{}", plus["lebesgue"].as_str().unwrap());
        prop_assert_eq!(minus["lebesgue"].as_str().unwrap(), neg.as_str());
    }
}
