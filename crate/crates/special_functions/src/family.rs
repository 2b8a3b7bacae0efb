use num_traits::Zero;
use scalar_algebra::{factorial, int, rising, PiScalar, Rat, UniPoly};

use crate::DomainError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ExponentPair {
    pub a: i64,
    pub b: i64,
}

impl ExponentPair {
    pub fn new(a: i64, b: i64) -> Self {
        ExponentPair { a, b }
    }

    /// The pair with `a` and `b` exchanged.
    pub fn swapped(self) -> Self {
        ExponentPair { a: self.b, b: self.a }
    }
}

/// Which half-line: `Plus` is `ξ > 0` (the "+2" polynomial), `Minus` is `ξ < 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Branch {
    Plus,
    Minus,
}

/// A polynomial with an exact overall scalar in front.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScaledPoly {
    pub scale: PiScalar,
    pub poly: UniPoly,
}

fn fact(n: i64) -> Rat {
    Rat::from_integer(factorial(n as u64))
}

/// `Σ_{k=0}^{b-1} (a)_k / (k! (b-1-k)!) 2^{-a-k} ξ^{b-1-k}`, zero for `b <= 0`.
pub fn poly_p2(e: ExponentPair) -> UniPoly {
    let ExponentPair { a, b } = e;
    if b <= 0 {
        return UniPoly::zero();
    }
    let mut coeffs = vec![Rat::zero(); b as usize];
    let two = int(2);
    for k in 0..b {
        let c = rising(&int(a), k as u64) / (fact(k) * fact(b - 1 - k)) * two.pow((-a - k) as i32);
        coeffs[(b - 1 - k) as usize] = c;
    }
    UniPoly::new(coeffs)
}

/// `(-1)^{a+b-1} Σ_{k=0}^{a-1} (b)_k / (k! (a-1-k)!) (-2)^{-b-k} ξ^{a-1-k}`, zero for `a <= 0`.
pub fn poly_pm2(e: ExponentPair) -> UniPoly {
    let ExponentPair { a, b } = e;
    if a <= 0 {
        return UniPoly::zero();
    }
    let sign = if (a + b - 1).rem_euclid(2) == 0 { int(1) } else { int(-1) };
    let mut coeffs = vec![Rat::zero(); a as usize];
    let m2 = int(-2);
    for k in 0..a {
        let c = rising(&int(b), k as u64) / (fact(k) * fact(a - 1 - k)) * m2.pow((-b - k) as i32);
        coeffs[(a - 1 - k) as usize] = &sign * c;
    }
    UniPoly::new(coeffs)
}

/// `Q_{a,b}` as `2π` times a polynomial in the symbol `t = iy`.
///
/// Zero when `a + b >= 1`; otherwise of degree `-a-b`.
pub fn poly_q(e: ExponentPair) -> ScaledPoly {
    let ExponentPair { a, b } = e;
    let one_plus = UniPoly::from_ints(&[1, 1]);
    let one_minus = UniPoly::from_ints(&[1, -1]);
    let poly = if a + b >= 1 {
        UniPoly::zero()
    } else if a <= 0 && b <= 0 {
        &one_plus.pow((-a) as u32) * &one_minus.pow((-b) as u32)
    } else if b >= 1 {
        // here a <= -b
        let mut acc = UniPoly::zero();
        for k in b..=-a {
            let c = rising(&int(a), k as u64) / fact(k) * int(2).pow((-a - k) as i32);
            acc = &acc + &one_minus.pow((k - b) as u32).scale(&c);
        }
        acc
    } else {
        // a >= 1 and b <= -a
        let mut acc = UniPoly::zero();
        for k in a..=-b {
            let c = rising(&int(b), k as u64) / fact(k) * int(2).pow((-b - k) as i32);
            acc = &acc + &one_plus.pow((k - a) as u32).scale(&c);
        }
        acc
    };
    let scale = if poly.is_zero() { PiScalar::zero() } else { PiScalar::two_pi() };
    ScaledPoly { scale, poly }
}

/// Value at `ξ = 0` from the closed product formula:
/// `P_{a,b,2}(0) = 2^{1-a-b} a(a+1)…(a+b-2)/(b-1)!` and its mirror for the `-2` branch.
pub fn value_at_zero(e: ExponentPair, branch: Branch) -> Result<Rat, DomainError> {
    let ExponentPair { a, b } = e;
    let (p, q, need) = match branch {
        Branch::Plus => (a, b, "b >= 1"),
        Branch::Minus => (b, a, "a >= 1"),
    };
    if q < 1 {
        return Err(DomainError::ValueAtZero { a, b, branch, need });
    }
    Ok(int(2).pow((1 - a - b) as i32) * rising(&int(p), (q - 1) as u64) / fact(q - 1))
}

/// `P_{a,b,2}` or `P_{a,b,-2}` according to `branch`.
pub fn poly_branch(e: ExponentPair, branch: Branch) -> UniPoly {
    match branch {
        Branch::Plus => poly_p2(e),
        Branch::Minus => poly_pm2(e),
    }
}
