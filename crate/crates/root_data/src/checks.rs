use scalar_algebra::{int, Rat, Report};

use crate::{pi_g_h, pi_g_z, pi_gprime_zprime, DualPair, GroupFamily};

/// `max_j deg_{y_j} π_{g/h} = (r - 1)/ι`. Vacuous for `O_1`, which has no torus.
pub fn degree_relation_check(pair: &DualPair) -> Report {
    let mut rep = Report::new("degree_relation");
    if pair.l() == 0 {
        return rep;
    }
    let p = pi_g_h(pair.g());
    let deg = (0..p.nvars()).map(|j| p.degree_in(j)).max().unwrap_or(0);
    let expect = (pair.r() - int(1)) / pair.iota();
    rep.check_eq(pair, &expect, &Rat::from_integer(deg.into()));
    rep
}

/// `dim W = dim g + dim g'/z' + dim h + dim s1(V^0)` for `l <= l'`, and
/// `dim W = dim g' + dim g/z + dim h'` for `l >= l'`, with the quotient
/// dimensions read off as twice the degree of the root products.
pub fn dimension_identity_check(pair: &DualPair) -> Report {
    let mut rep = Report::new("dimension_identity");
    let (l, lp) = (pair.l() as i64, pair.l_prime() as i64);
    if l <= lp {
        let quot = 2 * pi_gprime_zprime(pair).expect("l <= l'").total_degree() as i64;
        let s1 = if pair.family() == GroupFamily::OOdd { 2 * lp - 2 * l } else { 0 };
        let rhs = pair.g().dim() + quot + l + s1;
        rep.check_eq(format!("{pair} l <= l'"), &pair.dim_w(), &rhs);
    }
    if l >= lp {
        let quot = 2 * pi_g_z(pair).expect("l >= l'").total_degree() as i64;
        let rhs = pair.dim_g_prime() + quot + lp;
        rep.check_eq(format!("{pair} l >= l'"), &pair.dim_w(), &rhs);
    }
    rep
}
