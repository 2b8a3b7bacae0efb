use itertools::Itertools;
use num_traits::{Signed, Zero};
use root_data::{rho, Algebra, CompactGroup, DualPair, GroupFamily, HCParam, HighestWeight};
use scalar_algebra::{int, rat, Rat};

use crate::IntertwiningError;

fn compact_unitary(l: usize, l_prime: usize) -> Result<DualPair, IntertwiningError> {
    if l == 0 || l > l_prime {
        return Err(IntertwiningError::Domain(format!("need 1 <= l <= l', got ({l}, {l_prime})")));
    }
    Ok(DualPair::unitary(l, 0, l_prime))
}

fn delta(l: usize, l_prime: usize) -> Rat {
    rat(l_prime as i64 - l as i64 + 1, 2)
}

/// Whether `λ` occurs in the oscillator representation for `(U_l, U_{l'})`,
/// `l <= l'`: `λ_l >= l'/2`.
pub fn occurs_in_omega(lambda: &HighestWeight, pair: &DualPair) -> Result<bool, IntertwiningError> {
    if pair.algebra() != Algebra::Complex || pair.signature().0 != 0 || pair.d() > pair.d_prime() {
        return Err(IntertwiningError::Domain(format!("{pair} is not (U_l, U_l') with l <= l'")));
    }
    if lambda.len() != pair.d() {
        return Err(IntertwiningError::Domain(format!("weight has {} entries, expected {}", lambda.len(), pair.d())));
    }
    Ok(lambda.entries().last().is_some_and(|x| *x >= rat(pair.d_prime() as i64, 2)))
}

/// `μ_j - δ ∈ Z_{>=0}` for every `j`.
fn check_admissible(mu: &HCParam, l: usize, l_prime: usize) -> Result<(), IntertwiningError> {
    let d = delta(l, l_prime);
    if mu.len() != l {
        return Err(IntertwiningError::Domain(format!("μ has {} entries, expected {l}", mu.len())));
    }
    for m in mu.entries() {
        let n = m - &d;
        if !n.is_integer() || n < Rat::zero() {
            return Err(IntertwiningError::Inadmissible(format!("μ_j = {m} is not in {d} + Z_{{>=0}}")));
        }
    }
    Ok(())
}

/// The `ρ` of the centralizer `g''` of the smaller Cartan subalgebra.
fn rho_doubleprime_of(pair: &DualPair) -> Vec<Rat> {
    let dd = pair.d() - pair.d_prime();
    let g2 = match pair.algebra() {
        Algebra::Real => CompactGroup::Orthogonal(dd),
        Algebra::Complex => CompactGroup::Unitary(dd),
        Algebra::Quaternion => CompactGroup::Symplectic(dd),
    };
    rho(g2)
}

/// For `l > l'`: whether some Weyl conjugate of `μ` restricts to `ρ''` on `h''`.
///
/// For unitary groups the Weyl group permutes, so `ρ''` must be a sub-multiset
/// of `μ`; for the other families it also changes signs, and absolute values are compared.
pub fn vanishing_condition_l_gt_lprime(mu: &HCParam, pair: &DualPair) -> Result<bool, IntertwiningError> {
    if pair.l() <= pair.l_prime() {
        return Err(IntertwiningError::Domain(format!("{pair} does not have l > l'")));
    }
    if mu.len() != pair.l() {
        return Err(IntertwiningError::Domain(format!("μ has {} entries, expected {}", mu.len(), pair.l())));
    }
    let target = rho_doubleprime_of(pair);
    let norm = |x: &Rat| if pair.family() == GroupFamily::U { x.clone() } else { x.abs() };
    let mut pool: Vec<Rat> = mu.entries().iter().map(norm).collect();
    for t in target.iter().map(norm) {
        match pool.iter().position(|x| *x == t) {
            Some(i) => {
                pool.remove(i);
            }
            None => return Ok(false),
        }
    }
    Ok(true)
}

/// The Harish-Chandra parameter of the `U_{l'}` representation paired with `μ`:
/// `-μ` on `h`, `ρ''` on `h''`, sorted decreasingly.
pub fn correspond(mu: &HCParam, l: usize, l_prime: usize) -> Result<HCParam, IntertwiningError> {
    compact_unitary(l, l_prime)?;
    check_admissible(mu, l, l_prime)?;
    let mut out: Vec<Rat> = mu.entries().iter().map(|m| -m).collect();
    out.extend(rho(CompactGroup::Unitary(l_prime - l)));
    out.sort_by(|a, b| b.cmp(a));
    HCParam::new(out).map_err(|_| IntertwiningError::Internal("corresponding parameter is not regular".into()))
}

/// All admissible `μ` for `(U_l, U_{l'})` with `μ_j - δ <= max_n`.
pub fn admissible_params(l: usize, l_prime: usize, max_n: u32) -> Result<Vec<HCParam>, IntertwiningError> {
    compact_unitary(l, l_prime)?;
    let d = delta(l, l_prime);
    Ok((0..=max_n as i64)
        .rev()
        .combinations(l)
        .map(|ns| HCParam::new(ns.into_iter().map(|n| int(n) + &d).collect()).expect("strictly decreasing"))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hc(xs: &[Rat]) -> HCParam {
        HCParam::new(xs.to_vec()).unwrap()
    }

    #[test]
    fn occurrence_examples() {
        let p12 = DualPair::unitary(1, 0, 2);
        assert!(occurs_in_omega(&HighestWeight::from_ints(&[1]).unwrap(), &p12).unwrap());
        assert!(!occurs_in_omega(&HighestWeight::from_ints(&[0]).unwrap(), &p12).unwrap());
        let p22 = DualPair::unitary(2, 0, 2);
        assert!(occurs_in_omega(&HighestWeight::from_ints(&[1, 1]).unwrap(), &p22).unwrap());
        assert!(occurs_in_omega(&HighestWeight::zero(1), &DualPair::orthosymplectic(1, 1)).is_err());
    }

    #[test]
    fn vanishing_examples() {
        let p21 = DualPair::unitary(2, 0, 1);
        assert!(vanishing_condition_l_gt_lprime(&hc(&[int(3), int(0)]), &p21).unwrap());
        assert!(!vanishing_condition_l_gt_lprime(&hc(&[int(3), int(1)]), &p21).unwrap());
        let p31 = DualPair::unitary(3, 0, 1);
        assert!(vanishing_condition_l_gt_lprime(&hc(&[rat(5, 2), rat(1, 2), rat(-1, 2)]), &p31).unwrap());
        assert!(vanishing_condition_l_gt_lprime(&hc(&[int(1)]), &DualPair::unitary(1, 0, 2)).is_err());
    }

    #[test]
    fn correspondence_examples() {
        assert_eq!(correspond(&hc(&[int(1)]), 1, 2).unwrap(), hc(&[int(0), int(-1)]));
        assert_eq!(correspond(&hc(&[rat(3, 2)]), 1, 3).unwrap(), hc(&[rat(1, 2), rat(-1, 2), rat(-3, 2)]));
        assert_eq!(correspond(&hc(&[rat(3, 2), rat(1, 2)]), 2, 2).unwrap(), hc(&[rat(-1, 2), rat(-3, 2)]));
        assert!(correspond(&hc(&[int(0)]), 1, 2).is_err());
    }

    #[test]
    fn occurrence_matches_admissibility() {
        // λ_l >= l'/2 iff μ_j ∈ δ + Z_{>=0}
        for (l, lp) in [(1, 1), (1, 2), (2, 3), (2, 4), (3, 3)] {
            let g = CompactGroup::Unitary(l);
            let pair = DualPair::unitary(l, 0, lp);
            for mu in admissible_params(l, lp, 5).unwrap() {
                let lam = HighestWeight::from_hc(&mu, g).unwrap();
                assert!(occurs_in_omega(&lam, &pair).unwrap());
                // one step below the boundary is excluded
                let mut low = mu.entries().to_vec();
                if low.last().unwrap() == &delta(l, lp) {
                    *low.last_mut().unwrap() -= int(1);
                    let lam = HighestWeight::from_hc(&HCParam::new(low).unwrap(), g).unwrap();
                    assert!(!occurs_in_omega(&lam, &pair).unwrap());
                }
            }
        }
    }
}
