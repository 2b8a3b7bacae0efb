use crate::{MultiPoly, PiScalar, ScalarError, SignedPermutation};

/// Which Weyl-denominator shape a signed permutation group calls for.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VandermondeKind {
    /// Plain permutations: `∏_{j<k}(y_j - y_k)`.
    TypeA,
    /// All sign changes: `∏_{j<k}(y_j^2 - y_k^2) ∏_j y_j`.
    TypeB,
    /// Even sign changes only: `∏_{j<k}(y_j^2 - y_k^2)`.
    TypeD,
}

impl VandermondeKind {
    pub fn of_group(group: &[SignedPermutation]) -> Self {
        if group.iter().all(|s| s.negations() == 0) {
            VandermondeKind::TypeA
        } else if group.iter().any(|s| s.negations() % 2 == 1) {
            VandermondeKind::TypeB
        } else {
            VandermondeKind::TypeD
        }
    }
}

/// The skew polynomial that generates the skew elements for `kind`.
pub fn vandermonde_for_group(kind: VandermondeKind, nvars: usize) -> MultiPoly {
    let y = |j| MultiPoly::var(nvars, j);
    let mut p = MultiPoly::one(nvars);
    for j in 0..nvars {
        for k in j + 1..nvars {
            let f = match kind {
                VandermondeKind::TypeA => &y(j) - &y(k),
                _ => &y(j).pow(2) - &y(k).pow(2),
            };
            p = &p * &f;
        }
        if kind == VandermondeKind::TypeB {
            p = &p * &y(j);
        }
    }
    p
}

/// Divides a skew polynomial by the group's Vandermonde-type denominator.
///
/// Skewness is checked against the sign character by which the denominator
/// itself transforms, so the result is invariant under the group.
pub fn divide_by_vandermonde(
    skew: &MultiPoly,
    group: &[SignedPermutation],
) -> Result<MultiPoly, ScalarError> {
    let n = skew.nvars();
    let denom = vandermonde_for_group(VandermondeKind::of_group(group), n);
    for s in group {
        let moved = denom.act(s);
        let sign = if moved == denom {
            PiScalar::one()
        } else if moved == -&denom {
            -PiScalar::one()
        } else {
            return Err(ScalarError::Divisibility("group does not preserve the denominator".into()));
        };
        if skew.act(s) != skew.scale(&sign) {
            return Err(ScalarError::NotSkew);
        }
    }
    skew.div_exact(&denom)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{hyperoctahedral_group, symmetric_group};

    #[test]
    fn self_division() {
        let g = symmetric_group(2);
        let v = MultiPoly::vandermonde(2);
        assert!(divide_by_vandermonde(&v, &g).unwrap().is_constant_one());
    }

    #[test]
    fn symmetric_input_is_not_skew() {
        let g = symmetric_group(2);
        let p = &MultiPoly::var(2, 0) + &MultiPoly::var(2, 1);
        assert_eq!(divide_by_vandermonde(&p, &g), Err(ScalarError::NotSkew));
    }

    #[test]
    fn type_b_denominator_is_skew() {
        let g = hyperoctahedral_group(2);
        let d = vandermonde_for_group(VandermondeKind::TypeB, 2);
        assert!(divide_by_vandermonde(&d, &g).unwrap().is_constant_one());
    }
}
