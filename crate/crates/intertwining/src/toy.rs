//! `(O_1, Sp_{2n}(R))`: the four-element cover of `O_1` and its two genuine characters.

use num_traits::Signed;
use scalar_algebra::{int, pow2, rat, PiScalar, Rat};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ToySign {
    Plus,
    Minus,
}

/// `delta_coeff δ_0 + lebesgue_coeff dw`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToyDistribution {
    pub delta_coeff: Rat,
    pub lebesgue_coeff: Rat,
}

/// An element `(g, ξ)` of the cover; `ξ` is a rational times a power of `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Elem {
    g: i64,
    xi: PiScalar,
}

fn cocycle(g1: i64, g2: i64, n: u32) -> Rat {
    if g1 == -1 && g2 == -1 {
        pow2(2 * n as i64)
    } else {
        int(1)
    }
}

fn mul(x: &Elem, y: &Elem, n: u32) -> Elem {
    Elem { g: x.g * y.g, xi: (&x.xi * &y.xi).scale(&cocycle(x.g, y.g, n)) }
}

fn inverse(x: &Elem, n: u32) -> Elem {
    // ξ ξ' C(g, g) = 1 since g^{-1} = g
    let xi = x.xi.recip().expect("nonzero").scale(&cocycle(x.g, x.g, n).recip());
    Elem { g: x.g, xi }
}

/// `Π(g, η) = η/|η|`, times `g` for the minus character.
fn character(x: &Elem, sign: ToySign) -> PiScalar {
    let unit = x.xi.scale(&x.xi.coeff().abs().recip());
    match sign {
        ToySign::Plus => unit,
        ToySign::Minus => unit.scale(&int(x.g)),
    }
}

fn add(a: &PiScalar, b: &PiScalar) -> PiScalar {
    if a.is_zero() {
        return b.clone();
    }
    a.checked_add(b).expect("like terms")
}

/// `T(Θ̌_Π) = (1/4) Σ Θ_Π(g̃^{-1}) T(g̃)`, with `T(1, ξ) = ξ δ_0` and `T(-1, ξ) = ξ dw`.
pub fn o1_sp_toy(n: u32, sign: ToySign) -> ToyDistribution {
    let i_n = PiScalar::new(pow2(-(n as i64)), 0, n as i64);
    let group = [
        Elem { g: 1, xi: PiScalar::one() },
        Elem { g: 1, xi: -PiScalar::one() },
        Elem { g: -1, xi: i_n.clone() },
        Elem { g: -1, xi: -i_n },
    ];
    // closure under the group law
    for x in &group {
        for y in &group {
            debug_assert!(group.contains(&mul(x, y, n)));
        }
    }
    let mut delta = PiScalar::zero();
    let mut lebesgue = PiScalar::zero();
    for x in &group {
        let term = &character(&inverse(x, n), sign) * &x.xi;
        if x.g == 1 {
            delta = add(&delta, &term);
        } else {
            lebesgue = add(&lebesgue, &term);
        }
    }
    let real = |p: PiScalar| p.as_rational().cloned().expect("real coefficient") * rat(1, 4);
    ToyDistribution { delta_coeff: real(delta), lebesgue_coeff: real(lebesgue) }
}
