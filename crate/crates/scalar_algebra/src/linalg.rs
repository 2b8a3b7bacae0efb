use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::{Rat, ScalarError};

/// Exact determinant by fraction-free (Bareiss) elimination.
///
/// Each row is first scaled to integers by the lcm of its denominators;
/// the scaling is divided back out at the end.
pub fn exact_det(m: &[Vec<Rat>]) -> Result<Rat, ScalarError> {
    let n = m.len();
    if let Some(row) = m.iter().find(|r| r.len() != n) {
        return Err(ScalarError::Shape { rows: n, cols: row.len() });
    }
    if n == 0 {
        return Ok(Rat::one());
    }
    let mut scale = BigInt::one();
    let mut a: Vec<Vec<BigInt>> = m
        .iter()
        .map(|row| {
            let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            scale *= &l;
            row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
        })
        .collect();

    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return Ok(Rat::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    Ok(Rat::new(sign * &a[n - 1][n - 1], scale))
}

/// `∏_{j<k} (z_k - z_j)`, the determinant of `[z_j^{k-1}]`.
pub fn vandermonde_det(z: &[Rat]) -> Rat {
    let mut out = Rat::one();
    for j in 0..z.len() {
        for k in j + 1..z.len() {
            out *= &z[k] - &z[j];
        }
    }
    out
}

/// `Σ_s sgn(s) ∏_j ∏_{k=1}^{s(j)-1} (z_j - k)`, computed as the determinant of
/// the falling-product matrix. Equal to [`vandermonde_det`].
pub fn falling_product_sum(z: &[Rat]) -> Rat {
    let m = z.len();
    let rows: Vec<Vec<Rat>> = z
        .iter()
        .map(|zj| {
            let mut row = Vec::with_capacity(m);
            let mut acc = Rat::one();
            for k in 0..m {
                row.push(acc.clone());
                acc *= zj - Rat::from_integer(BigInt::from(k + 1));
            }
            row
        })
        .collect();
    exact_det(&rows).expect("square by construction")
}
