use root_data::{Algebra, DualPair, HCParam};
use scalar_algebra::{PiScalar, Rat};
use special_functions::{fourier_pair, ExponentPair, LinePolyDistribution};

use crate::IntertwiningError;

/// Which sign of `μ` goes into `a_j`.
///
/// `General`: `a_j = -μ_j - δ + 1`, `b_j = μ_j - δ + 1`, the form for an arbitrary pair.
/// `CompactUnitary`: `a_j = μ_j - δ + 1`, `b_j = -μ_j - δ + 1`, the form for
/// `(U_l, U_{0,l'})`, where every `δ_j = -1` reverses the coordinate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Convention {
    General,
    CompactUnitary,
}

impl Convention {
    pub fn name(self) -> &'static str {
        match self {
            Convention::General => "general",
            Convention::CompactUnitary => "compact-unitary",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ABExponents {
    pub a: Vec<i64>,
    pub b: Vec<i64>,
    pub convention: Convention,
}

fn to_i64(r: &Rat) -> Result<i64, IntertwiningError> {
    if !r.is_integer() {
        return Err(IntertwiningError::Inadmissible(format!("exponent {r} is not an integer")));
    }
    r.to_integer()
        .try_into()
        .map_err(|_| IntertwiningError::Domain(format!("exponent {r} is too large")))
}

impl ABExponents {
    /// Errors unless every `μ_j ± δ` is an integer.
    pub fn new(mu: &HCParam, delta: &Rat, convention: Convention) -> Result<Self, IntertwiningError> {
        let one = Rat::from_integer(1.into());
        let mut a = Vec::with_capacity(mu.len());
        let mut b = Vec::with_capacity(mu.len());
        for m in mu.entries() {
            let minus = to_i64(&(-m - delta + &one))?;
            let plus = to_i64(&(m - delta + &one))?;
            match convention {
                Convention::General => {
                    a.push(minus);
                    b.push(plus);
                }
                Convention::CompactUnitary => {
                    a.push(plus);
                    b.push(minus);
                }
            }
        }
        Ok(ABExponents { a, b, convention })
    }

    /// Same exponents in the other convention: `a` and `b` trade places.
    pub fn convert(&self, target: Convention) -> Self {
        if target == self.convention {
            return self.clone();
        }
        ABExponents { a: self.b.clone(), b: self.a.clone(), convention: target }
    }

    pub fn pairs(&self) -> Vec<ExponentPair> {
        self.a.iter().zip(&self.b).map(|(&a, &b)| ExponentPair::new(a, b)).collect()
    }
}

/// Shape of the projection of `h ∩ τ(W)` onto one coordinate, in the fundamental chamber.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoordinateDomain {
    Line,
    NonNegative,
    NonPositive,
}

impl CoordinateDomain {
    pub fn name(self) -> &'static str {
        match self {
            CoordinateDomain::Line => "line",
            CoordinateDomain::NonNegative => "nonnegative",
            CoordinateDomain::NonPositive => "nonpositive",
        }
    }
}

/// One factor `p_j(y_j) + q_j(-∂) δ_0(y_j)`: the Fourier pair of `(a_j, b_j)`,
/// read at `ξ = β y_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoordinateProfile {
    pub exponents: ExponentPair,
    pub transform: LinePolyDistribution,
    pub domain: CoordinateDomain,
    /// False when `y_j = 0` is a boundary of the domain, which removes the delta part.
    pub delta_kept: bool,
}

impl CoordinateProfile {
    pub fn has_delta(&self) -> bool {
        self.delta_kept && !self.transform.delta_part.is_zero()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegrandProfile {
    pub pair: DualPair,
    pub exponents: ABExponents,
    pub beta: PiScalar,
    pub coords: Vec<CoordinateProfile>,
}

impl IntegrandProfile {
    /// Vanishes identically on the domain when some factor does.
    pub fn is_zero(&self) -> bool {
        self.coords.iter().any(|c| {
            let t = &c.transform;
            let plus = t.plus_part.is_zero() || c.domain == CoordinateDomain::NonPositive;
            let minus = t.minus_part.is_zero() || c.domain == CoordinateDomain::NonNegative;
            plus && minus && !c.has_delta()
        })
    }
}

/// Per-coordinate domains: over C, `y_j >= 0` for `j <= max(l-q, 0)` and
/// `y_j <= 0` for `j > min(p, l)`; the whole line otherwise.
fn domains(pair: &DualPair) -> Vec<CoordinateDomain> {
    let l = pair.l();
    (1..=l)
        .map(|j| match pair.algebra() {
            Algebra::Complex => {
                let (p, q) = pair.signature();
                if j <= l.saturating_sub(q) {
                    CoordinateDomain::NonNegative
                } else if j > p.min(l) {
                    CoordinateDomain::NonPositive
                } else {
                    CoordinateDomain::Line
                }
            }
            _ => CoordinateDomain::Line,
        })
        .collect()
}

/// The symbolic integrand `∏_j (p_j(y_j) + q_j(-∂_{y_j}) δ_0(y_j))` for `l <= l'`,
/// with `β = π/ι` and `δ = (d' - r + ι)/(2ι)`.
///
/// Delta parts are kept only on coordinates whose hyperplane `y_j = 0` is
/// interior to the domain. For `(U_l, U_{0,l'})` the exponents are taken in
/// the compact-unitary convention, matching the coordinates `y_j <= 0`.
pub fn integrand_profile(mu: &HCParam, pair: &DualPair) -> Result<IntegrandProfile, IntertwiningError> {
    if pair.l() > pair.l_prime() {
        return Err(IntertwiningError::Domain(format!("{pair} has l > l'")));
    }
    if mu.len() != pair.l() {
        return Err(IntertwiningError::Domain(format!("μ has {} entries, expected {}", mu.len(), pair.l())));
    }
    let convention = if pair.algebra() == Algebra::Complex && pair.signature().0 == 0 {
        Convention::CompactUnitary
    } else {
        Convention::General
    };
    let exponents = ABExponents::new(mu, &pair.delta(), convention)?;
    let coords = exponents
        .pairs()
        .into_iter()
        .zip(domains(pair))
        .map(|(e, domain)| CoordinateProfile {
            exponents: e,
            transform: fourier_pair(e),
            domain,
            delta_kept: domain == CoordinateDomain::Line,
        })
        .collect();
    let beta = PiScalar::new(pair.beta_pi_multiple(), 1, 0);
    Ok(IntegrandProfile { pair: *pair, exponents, beta, coords })
}
