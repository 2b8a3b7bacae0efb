use num_traits::Zero;
use scalar_algebra::Rat;

use crate::{rho, CompactGroup, RootError};

fn is_integer(r: &Rat) -> bool {
    r.is_integer()
}

/// Harish-Chandra parameter: strictly decreasing entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HCParam {
    entries: Vec<Rat>,
}

impl HCParam {
    pub fn new(entries: Vec<Rat>) -> Result<Self, RootError> {
        if entries.windows(2).any(|w| w[0] <= w[1]) {
            return Err(RootError::Domain("HC parameter must be strictly decreasing".into()));
        }
        Ok(HCParam { entries })
    }

    /// Also requires `μ_j + δ ∈ Z`.
    pub fn with_delta(entries: Vec<Rat>, delta: &Rat) -> Result<Self, RootError> {
        if entries.iter().any(|m| !is_integer(&(m + delta))) {
            return Err(RootError::Domain(format!("entries must lie in -{delta} + Z")));
        }
        Self::new(entries)
    }

    pub fn entries(&self) -> &[Rat] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Highest weight: weakly decreasing with integer gaps.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HighestWeight {
    entries: Vec<Rat>,
}

impl HighestWeight {
    pub fn new(entries: Vec<Rat>) -> Result<Self, RootError> {
        for w in entries.windows(2) {
            let gap = &w[0] - &w[1];
            if gap < Rat::zero() || !is_integer(&gap) {
                return Err(RootError::Domain("highest weight gaps must be nonnegative integers".into()));
            }
        }
        Ok(HighestWeight { entries })
    }

    pub fn from_ints(entries: &[i64]) -> Result<Self, RootError> {
        Self::new(entries.iter().map(|&x| Rat::from_integer(x.into())).collect())
    }

    pub fn zero(l: usize) -> Self {
        HighestWeight { entries: vec![Rat::zero(); l] }
    }

    pub fn entries(&self) -> &[Rat] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `μ = λ + ρ`. Strict decrease can only fail for `O_{2l}` when the
    /// last two entries are `±ρ`-symmetric, so it is reported rather than assumed.
    pub fn to_hc(&self, g: CompactGroup) -> Result<HCParam, RootError> {
        let r = rho(g);
        if r.len() != self.entries.len() {
            return Err(RootError::Domain(format!("{g} has rank {}, weight has {} entries", r.len(), self.len())));
        }
        HCParam::new(self.entries.iter().zip(&r).map(|(a, b)| a + b).collect())
    }

    /// Inverse of [`to_hc`](Self::to_hc).
    pub fn from_hc(mu: &HCParam, g: CompactGroup) -> Result<Self, RootError> {
        let r = rho(g);
        if r.len() != mu.len() {
            return Err(RootError::Domain("rank mismatch".into()));
        }
        Self::new(mu.entries().iter().zip(&r).map(|(a, b)| a - b).collect())
    }
}
