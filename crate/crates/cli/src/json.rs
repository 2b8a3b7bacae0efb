//! Serialization conventions: rationals as `"p/q"` strings, polynomials as
//! arrays of coefficient strings (constant term first), floats with 17
//! significant digits, non-finite floats as `null`.

use std::str::FromStr;

use num_complex::Complex64;
use scalar_algebra::{PiScalar, Rat, Report, UniPoly};
use serde_json::{json, Number, Value};

pub fn rat(r: &Rat) -> Value {
    Value::String(r.to_string())
}

pub fn rats(rs: &[Rat]) -> Value {
    Value::Array(rs.iter().map(rat).collect())
}

pub fn unipoly(p: &UniPoly) -> Value {
    rats(p.coeffs())
}

/// `coeff · π^pi · i^i`.
pub fn pi_scalar(s: &PiScalar) -> Value {
    json!({ "coeff": rat(s.coeff()), "pi": s.pi_power(), "i": s.i_power() })
}

/// Scientific notation with 17 significant digits, so that the value
/// round-trips exactly.
pub fn float(x: f64) -> Value {
    if !x.is_finite() {
        return Value::Null;
    }
    let text = format!("{x:.16e}");
    Value::Number(Number::from_str(&text).expect("formatted float is a JSON number"))
}

pub fn opt_float(x: Option<f64>) -> Value {
    x.map_or(Value::Null, float)
}

pub fn complex(z: Complex64) -> Value {
    json!({ "re": float(z.re), "im": float(z.im) })
}

pub fn report(r: &Report) -> Value {
    let failures: Vec<Value> = r
        .failures
        .iter()
        .map(|f| {
            json!({
                "inputs": f.inputs,
                "expected": f.expected,
                "got": f.got,
                "residual": opt_float(f.residual),
            })
        })
        .collect();
    json!({
        "suite": r.suite,
        "cases": r.cases,
        "passed": r.passed(),
        "failures": failures,
        "worst_residual": opt_float(r.worst_residual),
    })
}
