//! Schur polynomials as sums over semistandard tableaux, an independent
//! route to the characters of `U_l`.

use num_complex::Complex64;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use root_data::{weyl_character, CompactGroup, HighestWeight, RootError};
use scalar_algebra::{rat, Rat, Report};

use crate::OracleError;

/// A semistandard filling of a Young diagram with entries `1..=l`: rows weakly
/// increase, columns strictly increase.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tableau {
    pub rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn shape(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.len()).collect()
    }

    pub fn is_semistandard(&self, l: usize) -> bool {
        let rows_ok = self
            .rows
            .iter()
            .all(|r| r.iter().all(|&e| (1..=l).contains(&e)) && r.windows(2).all(|w| w[0] <= w[1]));
        let cols_ok = self.rows.windows(2).all(|p| p[1].len() <= p[0].len() && p[1].iter().zip(&p[0]).all(|(b, a)| a < b));
        rows_ok && cols_ok
    }

    /// `∏_j x_j^{#j}`.
    pub fn weight(&self, x: &[Complex64]) -> Complex64 {
        self.rows.iter().flatten().map(|&e| x[e - 1]).product()
    }
}

/// All semistandard tableaux of `shape` with entries at most `l`.
pub fn semistandard_tableaux(shape: &[usize], l: usize) -> Vec<Tableau> {
    fn fill(rows: &mut Vec<Vec<usize>>, shape: &[usize], l: usize, out: &mut Vec<Tableau>) {
        let r = rows.len() - 1;
        if rows[r].len() == shape[r] {
            if r + 1 == shape.len() {
                out.push(Tableau { rows: rows.clone() });
            } else {
                rows.push(Vec::new());
                fill(rows, shape, l, out);
                rows.pop();
            }
            return;
        }
        let c = rows[r].len();
        let left = if c > 0 { rows[r][c - 1] } else { 1 };
        let above = if r > 0 { rows[r - 1][c] + 1 } else { 1 };
        for e in left.max(above)..=l {
            rows[r].push(e);
            fill(rows, shape, l, out);
            rows[r].pop();
        }
    }
    let shape: Vec<usize> = shape.iter().copied().filter(|&s| s > 0).collect();
    if shape.is_empty() {
        return vec![Tableau { rows: Vec::new() }];
    }
    let mut out = Vec::new();
    fill(&mut vec![Vec::new()], &shape, l, &mut out);
    out
}

fn partition(lambda: &HighestWeight) -> Result<Vec<usize>, OracleError> {
    lambda
        .entries()
        .iter()
        .map(|e| {
            if !e.is_integer() || *e < Rat::zero() {
                Err(OracleError::Domain(format!("entry {e} is not a nonnegative integer")))
            } else {
                Ok(e.to_integer().try_into().expect("small"))
            }
        })
        .collect()
}

/// `s_λ(x) = Σ_T x^T` over semistandard tableaux of shape `λ` with entries
/// at most `len(x)`.
pub fn schur_oracle(lambda: &HighestWeight, x: &[Complex64]) -> Result<Complex64, OracleError> {
    if lambda.len() != x.len() {
        return Err(OracleError::Domain(format!("{} entries for {} variables", lambda.len(), x.len())));
    }
    let shape = partition(lambda)?;
    Ok(semistandard_tableaux(&shape, x.len()).iter().map(|t| t.weight(x)).sum())
}

/// Partitions of size at most `max_size` with at most `l` parts, padded to length `l`.
fn partitions(l: usize, max_size: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, l: usize, budget: usize, cap: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == l {
            out.push(prefix.clone());
            return;
        }
        for p in 0..=cap.min(budget) {
            prefix.push(p);
            go(prefix, l, budget - p, p, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), l, max_size, max_size, &mut out);
    out
}

/// The tableau sum against the Weyl character formula at `points` random
/// torus elements for every `λ` with `l <= max_l`, `|λ| <= max_size`.
pub fn character_suite(max_l: usize, max_size: usize, points: usize, seed: u64, tol: f64) -> Report {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut r = Report::new("Schur tableaux vs Weyl character");
    for l in 1..=max_l {
        for p in partitions(l, max_size) {
            let ints: Vec<i64> = p.iter().map(|&e| e as i64).collect();
            let lambda = HighestWeight::from_ints(&ints).expect("a partition is dominant");
            let mut done = 0;
            while done < points {
                // angles as multiples of π
                let angles: Vec<Rat> = (0..l).map(|_| rat(rng.random_range(-999..=999), 1000)).collect();
                let w = match weyl_character(&lambda, CompactGroup::Unitary(l), &angles) {
                    Err(RootError::Evaluation(_)) => continue,
                    other => other,
                };
                done += 1;
                let x: Vec<Complex64> = angles
                    .iter()
                    .map(|a| Complex64::from_polar(1.0, std::f64::consts::PI * scalar_algebra::rat_to_f64(a)))
                    .collect();
                let label = format!("λ = {ints:?} at θ/π = {:?}", angles.iter().map(|a| a.to_string()).collect::<Vec<_>>());
                match (w, schur_oracle(&lambda, &x)) {
                    (Ok(w), Ok(s)) => {
                        r.check_residual(label, s, w, (w - s).norm() / s.norm().max(1.0), tol);
                    }
                    (Err(e), _) => {
                        r.check(label, false, e);
                    }
                    (_, Err(e)) => {
                        r.check(label, false, e);
                    }
                }
            }
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn small_shapes() {
        let x = [c(0.3, 0.4), c(-1.2, 0.5)];
        let hw = |e: &[i64]| HighestWeight::from_ints(e).unwrap();
        assert!((schur_oracle(&hw(&[1, 0]), &x).unwrap() - (x[0] + x[1])).norm() < 1e-15);
        assert!((schur_oracle(&hw(&[1, 1]), &x).unwrap() - x[0] * x[1]).norm() < 1e-15);
        let ones = [c(1.0, 0.0); 2];
        assert_eq!(schur_oracle(&hw(&[2, 1]), &ones).unwrap(), c(2.0, 0.0));
    }

    #[test]
    fn tableau_counts_are_dimensions() {
        // number of SSYT of shape (2, 1) in 3 letters is dim = 8
        let t = semistandard_tableaux(&[2, 1], 3);
        assert_eq!(t.len(), 8);
        assert!(t.iter().all(|t| t.is_semistandard(3) && t.shape() == vec![2, 1]));
        assert_eq!(semistandard_tableaux(&[0, 0], 2).len(), 1);
    }

    #[test]
    fn partitions_are_listed_once() {
        assert_eq!(partitions(2, 2), vec![vec![0, 0], vec![1, 0], vec![1, 1], vec![2, 0]]);
    }
}
