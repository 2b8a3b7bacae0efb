//! Products of positive roots, Weyl groups and their sign characters.
//!
//! `y_j` is the coordinate of `Σ y_j J_j` on the elliptic Cartan subalgebra.

use num_complex::Complex64;
use scalar_algebra::{hyperoctahedral_group, int, rat, symmetric_group, MultiPoly, PiScalar, Rat, SignedPermutation};

use crate::{Algebra, CompactGroup, DualPair, GroupFamily, RootError};

fn c(coeff: i64, i_power: i64) -> PiScalar {
    PiScalar::new(int(coeff), 0, i_power)
}

/// `a y_j^e + b y_k^e`.
fn binomial(nv: usize, j: usize, a: PiScalar, k: usize, b: PiScalar, e: u32) -> MultiPoly {
    let mut ej = vec![0; nv];
    ej[j] = e;
    let mut ek = vec![0; nv];
    ek[k] = e;
    &MultiPoly::term(nv, ej, a) + &MultiPoly::term(nv, ek, b)
}

/// `∏_j (a y_j^e)`.
fn each(nv: usize, a: PiScalar, e: u32) -> MultiPoly {
    MultiPoly::term(nv, vec![e; nv], a.pow(nv as i32))
}

/// `∏_{j<k} i(-y_j + y_k)`.
fn type_a(nv: usize) -> MultiPoly {
    let mut p = MultiPoly::one(nv);
    for j in 0..nv {
        for k in j + 1..nv {
            p = &p * &binomial(nv, j, c(-1, 1), k, c(1, 1), 1);
        }
    }
    p
}

/// `∏_{j<k} (-y_j^2 + y_k^2)`.
fn type_bc(nv: usize) -> MultiPoly {
    let mut p = MultiPoly::one(nv);
    for j in 0..nv {
        for k in j + 1..nv {
            p = &p * &binomial(nv, j, c(-1, 0), k, c(1, 0), 2);
        }
    }
    p
}

/// ρ of the compact member: `O_d: d/2 - j`, `U_d: (d+1)/2 - j`, `Sp_d: d+1-j`.
pub fn rho(g: CompactGroup) -> Vec<Rat> {
    let d = g.d() as i64;
    (1..=g.rank() as i64)
        .map(|j| match g {
            CompactGroup::Orthogonal(_) => rat(d, 2) - int(j),
            CompactGroup::Unitary(_) => rat(d + 1, 2) - int(j),
            CompactGroup::Symplectic(_) => int(d + 1 - j),
        })
        .collect()
}

/// ρ of `u_{l'-l}`: entries `(l'-l+1-2j)/2`.
pub fn rho_doubleprime(l: usize, l_prime: usize) -> Result<Vec<Rat>, RootError> {
    if l >= l_prime {
        return Err(RootError::Domain(format!("rho'' needs l < l', got ({l}, {l_prime})")));
    }
    let n = (l_prime - l) as i64;
    Ok((1..=n).map(|j| rat(n + 1 - 2 * j, 2)).collect())
}

/// Product of the positive roots of `g` on `h`, in `l` variables.
pub fn pi_g_h(g: CompactGroup) -> MultiPoly {
    let l = g.rank();
    match g.family() {
        GroupFamily::U => type_a(l),
        GroupFamily::Sp => &type_bc(l) * &each(l, c(2, 1), 1),
        GroupFamily::OEven => type_bc(l),
        GroupFamily::OOdd => &type_bc(l) * &each(l, c(1, 1), 1),
    }
}

/// Product of the roots of `h` in `g'/z'`, in `l` variables. Needs `l <= l'`.
pub fn pi_gprime_zprime(pair: &DualPair) -> Result<MultiPoly, RootError> {
    let (l, lp) = (pair.l(), pair.l_prime());
    if l > lp {
        return Err(RootError::Domain(format!("pi_{{g'/z'}} needs l <= l', got ({l}, {lp})")));
    }
    // d' - d, and d' - d + 1 for odd orthogonal groups, are both >= 0 here
    let n = pair.d_prime() as i64 - pair.d() as i64;
    let out = match pair.family() {
        GroupFamily::U => &type_a(l) * &each(l, c(-1, 1), 1).pow(n as u32),
        GroupFamily::Sp => &type_bc(l) * &each(l, c(-1, 0), 2).pow(n as u32),
        GroupFamily::OEven => &(&type_bc(l) * &each(l, c(2, 1), 1)) * &each(l, c(1, 1), 1).pow(n as u32),
        GroupFamily::OOdd => &(&type_bc(l) * &each(l, c(2, 1), 1)) * &each(l, c(1, 1), 1).pow((n + 1) as u32),
    };
    Ok(out)
}

/// Product of the positive roots of `g'` on `h' = h`, in `l'` variables. Needs `l >= l'`.
pub fn pi_gprime_hprime(pair: &DualPair) -> Result<MultiPoly, RootError> {
    let (l, lp) = (pair.l(), pair.l_prime());
    if l < lp {
        return Err(RootError::Domain(format!("pi_{{g'/h'}} needs l >= l', got ({l}, {lp})")));
    }
    Ok(match pair.algebra() {
        Algebra::Complex => type_a(lp),
        Algebra::Quaternion => type_bc(lp),
        Algebra::Real => &type_bc(lp) * &each(lp, c(2, 1), 1),
    })
}

/// Product of the roots of `h` in `g/z`, in `l'` variables. Needs `l >= l'`.
///
/// For odd orthogonal groups this is the same monomial as for even ones,
/// `∏ (iy_j)^{d-d'}`; that is the degree `dim g/z` forces.
pub fn pi_g_z(pair: &DualPair) -> Result<MultiPoly, RootError> {
    let (l, lp) = (pair.l(), pair.l_prime());
    if l < lp {
        return Err(RootError::Domain(format!("pi_{{g/z}} needs l >= l', got ({l}, {lp})")));
    }
    let n = (pair.d() - pair.d_prime()) as u32;
    Ok(match pair.algebra() {
        Algebra::Complex => &type_a(lp) * &each(lp, c(-1, 1), 1).pow(n),
        Algebra::Quaternion => &(&type_bc(lp) * &each(lp, c(2, 1), 1)) * &each(lp, c(-1, 0), 2).pow(n),
        Algebra::Real => &type_bc(lp) * &each(lp, c(1, 1), 1).pow(n),
    })
}

/// Signs `δ_j` of the Cartan subspace with `m` positive entries: `(1,..,1,-1,..,-1)`
/// of length `l'' = min(l, l')`. Only the unitary pairs have more than one
/// Cartan subspace, `max(l''-q, 0) <= m <= min(p, l'')`; for the others
/// `m` must equal `l''`.
pub fn cartan_signs(pair: &DualPair, m: usize) -> Result<Vec<i8>, RootError> {
    let ll = pair.l().min(pair.l_prime());
    let ok = match pair.algebra() {
        Algebra::Complex => {
            let (p, q) = pair.signature();
            (ll.saturating_sub(q)..=p.min(ll)).contains(&m)
        }
        _ => m == ll,
    };
    if !ok {
        return Err(RootError::Domain(format!("no Cartan subspace with m = {m} for {pair}")));
    }
    Ok((0..ll).map(|j| if j < m { 1 } else { -1 }).collect())
}

/// `y_j -> δ_j w_j^2`.
pub fn substitute_squares(p: &MultiPoly, signs: &[i8]) -> MultiPoly {
    assert_eq!(p.nvars(), signs.len());
    let nv = p.nvars();
    let mut out = MultiPoly::zero(nv);
    for (e, coeff) in p.terms() {
        let flips = e.iter().zip(signs).filter(|(&k, &s)| s < 0 && k % 2 == 1).count();
        let coeff = if flips % 2 == 1 { -coeff } else { coeff.clone() };
        out = &out + &MultiPoly::term(nv, e.iter().map(|k| 2 * k).collect(), coeff);
    }
    out
}

/// `π_{s0/h1^2}(w^2)` as the product of the two root products at `τ(w)`, `τ'(w)`.
pub fn pi_s0_h2(pair: &DualPair, signs: &[i8]) -> Result<MultiPoly, RootError> {
    let prod = if pair.l() <= pair.l_prime() {
        &pi_g_h(pair.g()) * &pi_gprime_zprime(pair)?
    } else {
        &pi_gprime_hprime(pair)? * &pi_g_z(pair)?
    };
    if signs.len() != prod.nvars() {
        return Err(RootError::Domain("sign vector length must be min(l, l')".into()));
    }
    Ok(substitute_squares(&prod, signs))
}

/// The closed table for `π_{s0/h1^2}(w^2)` when `l <= l'`, written directly in `w`.
pub fn pi_s0_h2_printed(pair: &DualPair, signs: &[i8]) -> Result<MultiPoly, RootError> {
    let l = pair.l();
    if l > pair.l_prime() || signs.len() != l {
        return Err(RootError::Domain("table needs l <= l' and l signs".into()));
    }
    // d' - d is -1 only for (O_{2l+1}, Sp_{2l}), where the exponent used is d' - d + 1
    let n = pair.d_prime() as i64 - pair.d() as i64;
    let nu = n.max(0) as u32;
    let mut quartic = MultiPoly::one(l);
    for j in 0..l {
        for k in j + 1..l {
            quartic = &quartic * &binomial(l, j, c(-1, 0), k, c(1, 0), 4);
        }
    }
    let quartic_sq = quartic.pow(2);
    let out = match pair.family() {
        GroupFamily::U => {
            let mut a = MultiPoly::one(l);
            for j in 0..l {
                for k in j + 1..l {
                    let f = binomial(l, j, c(-(signs[j] as i64), 1), k, c(signs[k] as i64, 1), 2);
                    a = &a * &f;
                }
            }
            let mut tail = MultiPoly::one(l);
            for (j, &s) in signs.iter().enumerate() {
                let mut e = vec![0; l];
                e[j] = 2;
                tail = &tail * &MultiPoly::term(l, e, c(-(s as i64), 1));
            }
            &a.pow(2) * &tail.pow(nu)
        }
        GroupFamily::Sp => &(&quartic_sq * &each(l, c(2, 1), 2)) * &each(l, c(-1, 0), 4).pow(nu),
        GroupFamily::OEven => &(&quartic_sq * &each(l, c(2, 1), 2)) * &each(l, c(1, 1), 2).pow(nu),
        GroupFamily::OOdd => {
            &(&(&quartic_sq * &each(l, c(1, 1), 2)) * &each(l, c(2, 1), 2)) * &each(l, c(1, 1), 2).pow((n + 1) as u32)
        }
    };
    Ok(out)
}

/// `Σ_l` for unitary groups, `Σ_l ⋉ {±1}^l` otherwise.
pub fn weyl_group(g: CompactGroup) -> Vec<SignedPermutation> {
    match g.family() {
        GroupFamily::U => symmetric_group(g.rank()),
        _ => hyperoctahedral_group(g.rank()),
    }
}

/// `sgn_{g/h}(s)`, defined by `π_{g/h}(s.y) = sgn(s) π_{g/h}(y)`.
pub fn sgn_g_h(g: CompactGroup, s: &SignedPermutation) -> i32 {
    let p = pi_g_h(g);
    let q = p.act(s);
    if q == p {
        1
    } else if q == -p {
        -1
    } else {
        panic!("{g}: pi_g_h is not W-skew")
    }
}

/// `C(h1)` with `|π_{s0/h1^2}(w^2)| = C π_{s0/h1^2}(w^2)`, read off at a regular sample point.
pub fn c_h1(pair: &DualPair, signs: &[i8]) -> Result<Complex64, RootError> {
    let p = pi_s0_h2(pair, signs)?;
    let w: Vec<Complex64> = (0..p.nvars()).map(|j| Complex64::new(1.0 + 0.37 * (j + 1) as f64, 0.0)).collect();
    let v = p.eval_complex(&w);
    if v.norm() == 0.0 {
        return Err(RootError::Evaluation("sample point is singular".into()));
    }
    Ok(Complex64::new(v.norm(), 0.0) / v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rho_examples() {
        assert_eq!(rho(CompactGroup::Unitary(3)), vec![int(1), int(0), int(-1)]);
        assert_eq!(rho(CompactGroup::Symplectic(2)), vec![int(2), int(1)]);
        assert_eq!(rho(CompactGroup::Orthogonal(2)), vec![int(0)]);
        assert_eq!(rho_doubleprime(1, 2).unwrap(), vec![int(0)]);
        assert_eq!(rho_doubleprime(1, 3).unwrap(), vec![rat(1, 2), rat(-1, 2)]);
        assert_eq!(rho_doubleprime(2, 3).unwrap(), vec![int(0)]);
        assert!(rho_doubleprime(2, 2).is_err());
    }

    #[test]
    fn pi_examples() {
        let y = |j| MultiPoly::var(2, j);
        let i = MultiPoly::constant(2, PiScalar::i());
        assert_eq!(pi_g_h(CompactGroup::Unitary(2)), &i * &(&y(1) - &y(0)));
        let sp = pi_g_h(CompactGroup::Symplectic(2));
        let expect = &(&(&y(1) * &y(1)) - &(&y(0) * &y(0))) * &(&y(0) * &y(1)).scale(&PiScalar::new(int(-4), 0, 0));
        assert_eq!(sp, expect);
        let o3 = pi_g_h(CompactGroup::Orthogonal(3));
        assert_eq!(o3, MultiPoly::term(1, vec![1], PiScalar::i()));

        assert_eq!(
            pi_gprime_zprime(&DualPair::unitary(1, 1, 1)).unwrap(),
            MultiPoly::term(1, vec![1], -PiScalar::i())
        );
        assert_eq!(
            pi_gprime_zprime(&DualPair::orthosymplectic(2, 1)).unwrap(),
            MultiPoly::term(1, vec![1], PiScalar::new(int(2), 0, 1))
        );
        assert_eq!(
            pi_gprime_zprime(&DualPair::quaternionic(1, 2)).unwrap(),
            MultiPoly::term(1, vec![2], PiScalar::new(int(-1), 0, 0))
        );
        assert!(pi_gprime_zprime(&DualPair::unitary(3, 1, 1)).is_err());
    }

    #[test]
    fn weyl_groups() {
        assert_eq!(weyl_group(CompactGroup::Unitary(2)).len(), 2);
        assert_eq!(weyl_group(CompactGroup::Orthogonal(2)).len(), 2);
        let swap = SignedPermutation::unsigned(vec![1, 0]).unwrap();
        assert_eq!(sgn_g_h(CompactGroup::Unitary(2), &swap), -1);
    }

    #[test]
    fn cartan_sign_ranges() {
        let p = DualPair::unitary(2, 1, 3);
        assert_eq!(cartan_signs(&p, 1).unwrap(), vec![1, -1]);
        assert!(cartan_signs(&p, 0).is_ok());
        assert!(cartan_signs(&DualPair::unitary(2, 0, 3), 1).is_err());
        assert_eq!(cartan_signs(&DualPair::unitary(3, 1, 1), 1).unwrap(), vec![1, -1]);
        assert!(cartan_signs(&DualPair::orthosymplectic(3, 2), 0).is_err());
    }
}
