use root_data::{Algebra, DualPair};
use scalar_algebra::{int, Rat};

use crate::GeometryError;

/// Real dimension of the skew-hermitian `k x k` matrices over `D`.
pub fn dim_sh(algebra: Algebra, k: usize) -> i64 {
    let k = k as i64;
    match algebra {
        Algebra::Real => k * (k - 1) / 2,
        Algebra::Complex => k * k,
        Algebra::Quaternion => k * (2 * k + 1),
    }
}

/// `dim O'_k = d' k dim_R D - 2 dim SH_k(D)`.
pub fn orbit_dim_general(algebra: Algebra, d_prime: usize, k: usize) -> i64 {
    (d_prime * k) as i64 * algebra.real_dim() - 2 * dim_sh(algebra, k)
}

fn orbit_dim_table(algebra: Algebra, d_prime: usize, k: usize) -> i64 {
    let (n, k) = (d_prime as i64, k as i64);
    match algebra {
        Algebra::Real => k * n - k * (k - 1),
        Algebra::Complex => 2 * k * n - 2 * k * k,
        Algebra::Quaternion => 4 * k * n - 2 * k * (2 * k + 1),
    }
}

/// Dimension of the nilpotent orbit `O'_k` in `τ'(τ^{-1}(0))`, `0 <= k <= m`.
pub fn orbit_dim(pair: &DualPair, k: usize) -> Result<i64, GeometryError> {
    if k > pair.m() {
        return Err(GeometryError::Range(format!("k = {k} exceeds m = {} for {pair}", pair.m())));
    }
    Ok(orbit_dim_table(pair.algebra(), pair.d_prime(), k))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitDescriptor {
    pub pair: DualPair,
    pub k: usize,
    pub dim: i64,
    /// Homogeneity degree of the orbital integral, `dim O'_k - dim W`.
    pub degree: i64,
}

pub fn orbit_table(pair: &DualPair) -> Vec<OrbitDescriptor> {
    (0..=pair.m())
        .map(|k| {
            let dim = orbit_dim_table(pair.algebra(), pair.d_prime(), k);
            OrbitDescriptor { pair: *pair, k, dim, degree: dim - pair.dim_w() }
        })
        .collect()
}

/// `dim O'_m = dim W - 2 dim g`.
pub fn stable_range_equality(pair: &DualPair) -> bool {
    orbit_dim_table(pair.algebra(), pair.d_prime(), pair.m()) == pair.dim_w() - 2 * pair.g().dim()
}

/// Stable range, or `(O_{m+1}, Sp_{2m}(R))`, or `(U_{d'-m}, U_{m,d'-m})` with `2m < d'`.
pub fn stable_range_rule(pair: &DualPair) -> bool {
    let (d, n) = (pair.d(), pair.d_prime());
    let (p, _) = pair.signature();
    pair.is_stable_range()
        || match pair.algebra() {
            Algebra::Real => d == n / 2 + 1,
            Algebra::Complex => d == n - p && 2 * p < n,
            Algebra::Quaternion => false,
        }
}

/// `dim W - dim O'_m - dim g - dim h`.
pub fn homogeneity_gap(pair: &DualPair) -> i64 {
    let om = orbit_dim_table(pair.algebra(), pair.d_prime(), pair.m());
    pair.dim_w() - om - pair.g().dim() - pair.l() as i64
}

/// The pairs on which the gap is claimed to vanish: `(O_2, Sp_{2l'}(R))`,
/// `(O_3, Sp_{2l'}(R))` and `(U_1, U_{p,q})` with `1 <= p <= q`.
///
/// This list does not match [`homogeneity_gap`]: `(O_1, *)` and
/// `(U_1, U_{0,q})` also give zero, while `(O_3, Sp_{2l'}(R))` with `l' >= 2` does not.
pub fn homogeneity_gap_listed(pair: &DualPair) -> bool {
    match pair.algebra() {
        Algebra::Real => pair.d() == 2 || pair.d() == 3,
        Algebra::Complex => pair.d() == 1 && pair.signature().0 >= 1,
        Algebra::Quaternion => false,
    }
}

/// Exponent `e` and value `t^e` of `det g_t` on the slice through `N_k`;
/// `e = dim W - dim O'_k = 2 dim SH_k + d'(d-k) dim_R D`.
pub fn gt_dilation_det(pair: &DualPair, k: usize, t: &Rat) -> Result<(i64, Rat), GeometryError> {
    if *t <= int(0) {
        return Err(GeometryError::Domain("t must be positive".into()));
    }
    let e = pair.dim_w() - orbit_dim(pair, k)?;
    debug_assert_eq!(
        e,
        2 * dim_sh(pair.algebra(), k) + (pair.d_prime() * (pair.d() - k)) as i64 * pair.algebra().real_dim()
    );
    Ok((e, t.pow(e as i32)))
}

/// Largest order of derivatives guaranteed to extend continuously:
/// `d' - r - 1` over R and C, `2(d' - r)` over H. Requires `l <= l'`.
pub fn derivative_order_bound(pair: &DualPair) -> Result<i64, GeometryError> {
    if pair.l() > pair.l_prime() {
        return Err(GeometryError::Domain(format!("{pair} has l > l'")));
    }
    let x = int(pair.d_prime() as i64) - pair.r();
    let v = match pair.algebra() {
        Algebra::Quaternion => x * int(2),
        _ => x - int(1),
    };
    Ok(v.to_integer().try_into().expect("small"))
}
