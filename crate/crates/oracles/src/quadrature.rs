//! Adaptive Gauss–Kronrod quadrature and the Fourier integrals
//! `∫ (1+iy)^{-a} (1-iy)^{-b} e^{-iyξ} dy`.

use std::collections::BinaryHeap;
use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;
use scalar_algebra::{rat_to_f64, Rat, Report};
use special_functions::{fourier_pair, value_at_zero, Branch, ExponentPair};

use crate::OracleError;

const XGK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.0,
];
const WGK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];
// Gauss weights at XGK[1], XGK[3], XGK[5], XGK[7].
const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

const MAX_PANELS: usize = 20_000;

/// An integral value with its estimated absolute error.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Quadrature {
    pub value: Complex64,
    pub error: f64,
    pub panels: usize,
}

struct Panel {
    lo: f64,
    hi: f64,
    value: Complex64,
    error: f64,
}

fn g7k15(f: &mut impl FnMut(f64) -> Complex64, lo: f64, hi: f64) -> Panel {
    let c = 0.5 * (lo + hi);
    let h = 0.5 * (hi - lo);
    let mut k = f(c) * WGK[7];
    let mut g = f(c) * WG[3];
    for (j, (&x, &w)) in XGK.iter().zip(&WGK).take(7).enumerate() {
        let s = f(c - h * x) + f(c + h * x);
        k += s * w;
        if j % 2 == 1 {
            g += s * WG[j / 2];
        }
    }
    Panel { lo, hi, value: k * h, error: ((k - g) * h).norm() }
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}

impl Eq for Panel {}

impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Panel {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.error.total_cmp(&other.error)
    }
}

/// Globally adaptive G7K15 on `[lo, hi]`: the panel with the largest error
/// estimate is bisected until the total estimate is below `tol`.
pub fn gauss_kronrod(
    mut f: impl FnMut(f64) -> Complex64,
    lo: f64,
    hi: f64,
    tol: f64,
) -> Result<Quadrature, OracleError> {
    let first = g7k15(&mut f, lo, hi);
    let mut error = first.error;
    let mut panels = BinaryHeap::from([first]);
    loop {
        if error <= tol {
            // the running sum drifts; confirm against a fresh one
            error = panels.iter().map(|p| p.error).sum();
            if error <= tol {
                break;
            }
        }
        if panels.len() >= MAX_PANELS {
            return Err(OracleError::Quadrature { achieved: error, target: tol });
        }
        let p = panels.pop().expect("nonempty");
        let mid = 0.5 * (p.lo + p.hi);
        if mid <= p.lo || mid >= p.hi {
            return Err(OracleError::Quadrature { achieved: error, target: tol });
        }
        let (l, r) = (g7k15(&mut f, p.lo, mid), g7k15(&mut f, mid, p.hi));
        error += l.error + r.error - p.error;
        panels.push(l);
        panels.push(r);
    }
    let value = panels.iter().map(|p| p.value).sum();
    Ok(Quadrature { value, error, panels: panels.len() })
}

/// `∫_0^∞ f(t) dt` through `t = s / (1 - s)`; `f` must decay.
fn half_line(mut f: impl FnMut(f64) -> Complex64, tol: f64) -> Result<Quadrature, OracleError> {
    gauss_kronrod(
        |s| {
            let d = 1.0 - s;
            f(s / d) / (d * d)
        },
        0.0,
        1.0,
        tol,
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    /// Real panels on `[-Y, Y]`; each tail is rotated onto the vertical ray
    /// from `±Y` into the half-plane where `e^{-iyξ}` decays. The poles at
    /// `y = ±i` stay outside the swept region, so the tails are exact
    /// integrals of exponentially decaying functions. Needs `ξ != 0`.
    RayTails,
    /// `y = tan θ`, turning the integrand into
    /// `e^{i(b-a)θ} cos^{a+b-2}θ e^{-iξ tan θ}` on `(-π/2, π/2)`. Needs `a + b >= 2`.
    TangentMap,
}

#[derive(Clone, Debug, PartialEq)]
pub struct QuadratureSpec {
    pub a: i64,
    pub b: i64,
    pub xi: Rat,
    /// `Y`: end of the real panels for [`Method::RayTails`].
    pub truncation: f64,
    /// Absolute error target.
    pub tol: f64,
    pub method: Method,
}

impl QuadratureSpec {
    /// Ray tails away from the origin, the tangent map at `ξ = 0`.
    pub fn new(a: i64, b: i64, xi: Rat) -> Self {
        let method = if xi == Rat::from_integer(0.into()) { Method::TangentMap } else { Method::RayTails };
        QuadratureSpec { a, b, xi, truncation: 8.0, tol: 1e-11, method }
    }
}

fn integrand(a: i64, b: i64, xi: f64, y: Complex64) -> Complex64 {
    let i = Complex64::i();
    let one = Complex64::new(1.0, 0.0);
    (one + i * y).powi(-a as i32) * (one - i * y).powi(-b as i32) * (-i * y * xi).exp()
}

pub fn quad_fourier_with(spec: &QuadratureSpec) -> Result<Quadrature, OracleError> {
    let QuadratureSpec { a, b, tol, .. } = *spec;
    if a + b < 1 {
        return Err(OracleError::Domain(format!("a + b = {} is not absolutely convergent", a + b)));
    }
    let xi = rat_to_f64(&spec.xi);
    match spec.method {
        Method::RayTails => {
            if xi == 0.0 {
                return Err(OracleError::Domain("ray tails need ξ != 0".into()));
            }
            let y_max = spec.truncation;
            let sigma = -xi.signum();
            let shift = Complex64::new(0.0, sigma);
            let center = gauss_kronrod(|y| integrand(a, b, xi, Complex64::new(y, 0.0)), -y_max, y_max, 0.5 * tol)?;
            let right = half_line(|t| integrand(a, b, xi, y_max + shift * t), 0.25 * tol)?;
            let left = half_line(|t| integrand(a, b, xi, -y_max + shift * t), 0.25 * tol)?;
            Ok(Quadrature {
                value: center.value + shift * (right.value - left.value),
                error: center.error + right.error + left.error,
                panels: center.panels + right.panels + left.panels,
            })
        }
        Method::TangentMap => {
            if a + b < 2 {
                return Err(OracleError::Domain("the tangent map needs a + b >= 2".into()));
            }
            gauss_kronrod(
                |t| {
                    let phase = Complex64::from_polar(1.0, (b - a) as f64 * t - xi * t.tan());
                    phase * t.cos().powi((a + b - 2) as i32)
                },
                -FRAC_PI_2,
                FRAC_PI_2,
                tol,
            )
        }
    }
}

/// `∫ (1+iy)^{-a} (1-iy)^{-b} e^{-iyξ} dy` for `a + b >= 1`.
pub fn quad_fourier(a: i64, b: i64, xi: &Rat) -> Result<Complex64, OracleError> {
    Ok(quad_fourier_with(&QuadratureSpec::new(a, b, xi.clone()))?.value)
}

#[derive(Clone, Debug, PartialEq)]
pub struct FourierRow {
    pub a: i64,
    pub b: i64,
    pub xi: Rat,
    pub quad: Complex64,
    pub expected: f64,
    /// `|quad - expected| / max(|expected|, 1)`.
    pub residual: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct FourierCheck {
    pub rows: Vec<FourierRow>,
    /// Quadrature against the closed form at `ξ != 0`.
    pub report: Report,
    /// One-sided limits at the origin against the value-at-zero formula,
    /// and against the quadrature at `ξ = 0` where the integrand is
    /// absolutely integrable after the tangent map (`a + b >= 2`).
    pub zero_report: Report,
}

impl FourierCheck {
    pub fn passed(&self) -> bool {
        self.report.passed() && self.zero_report.passed()
    }
}

fn scaled_residual(got: Complex64, expected: f64) -> f64 {
    (got - expected).norm() / expected.abs().max(1.0)
}

/// Runs the quadrature over `amin <= a, b <= amax`, `a + b >= 1`, at each
/// nonzero `ξ` in `xis`, and the origin checks for the same pairs.
pub fn fourier_check(amin: i64, amax: i64, xis: &[Rat], tol: f64) -> FourierCheck {
    let mut rows = Vec::new();
    let mut report = Report::new("quadrature vs Fourier pair");
    let mut zero_report = Report::new("limits at the origin");
    for a in amin..=amax {
        for b in amin..=amax {
            if a + b < 1 {
                continue;
            }
            let d = fourier_pair(ExponentPair::new(a, b));
            for xi in xis.iter().filter(|x| **x != Rat::from_integer(0.into())) {
                let label = format!("(a, b, ξ) = ({a}, {b}, {xi})");
                let expected = d.smooth_value(rat_to_f64(xi)).expect("ξ != 0");
                match quad_fourier(a, b, xi) {
                    Ok(q) => {
                        let residual = scaled_residual(q, expected);
                        report.check_residual(&label, expected, q, residual, tol);
                        rows.push(FourierRow { a, b, xi: xi.clone(), quad: q, expected, residual });
                    }
                    Err(e) => {
                        report.check(&label, false, e);
                    }
                }
            }
            let zero_quad = if a + b >= 2 { Some(quad_fourier(a, b, &Rat::from_integer(0.into()))) } else { None };
            for branch in [Branch::Plus, Branch::Minus] {
                let label = format!("(a, b) = ({a}, {b}), {branch:?} side");
                let limit = d.limit_at_zero(branch);
                if let Ok(v) = value_at_zero(ExponentPair::new(a, b), branch) {
                    let v = 2.0 * PI * rat_to_f64(&v);
                    zero_report.check_residual(&label, v, limit, (limit - v).abs() / v.abs().max(1.0), tol);
                }
                match &zero_quad {
                    Some(Ok(q)) => {
                        zero_report.check_residual(&label, limit, q, scaled_residual(*q, limit), tol);
                    }
                    Some(Err(e)) => {
                        zero_report.check(&label, false, e);
                    }
                    None => {}
                }
            }
        }
    }
    FourierCheck { rows, report, zero_report }
}
