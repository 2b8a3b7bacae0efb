use std::fmt;

use num_traits::One;
use scalar_algebra::{int, rat, Rat};

use crate::RootError;

/// The division algebra over which the pair is defined.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Algebra {
    Real,
    Complex,
    Quaternion,
}

impl Algebra {
    pub fn real_dim(self) -> i64 {
        match self {
            Algebra::Real => 1,
            Algebra::Complex => 2,
            Algebra::Quaternion => 4,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Algebra::Real => "R",
            Algebra::Complex => "C",
            Algebra::Quaternion => "H",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GroupFamily {
    OEven,
    OOdd,
    U,
    Sp,
}

/// A compact classical group: `O_d`, `U_d` or `Sp_d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CompactGroup {
    Orthogonal(usize),
    Unitary(usize),
    Symplectic(usize),
}

impl CompactGroup {
    pub fn d(self) -> usize {
        match self {
            CompactGroup::Orthogonal(d) | CompactGroup::Unitary(d) | CompactGroup::Symplectic(d) => d,
        }
    }

    pub fn rank(self) -> usize {
        match self {
            CompactGroup::Orthogonal(d) => d / 2,
            CompactGroup::Unitary(d) | CompactGroup::Symplectic(d) => d,
        }
    }

    pub fn family(self) -> GroupFamily {
        match self {
            CompactGroup::Orthogonal(d) if d % 2 == 0 => GroupFamily::OEven,
            CompactGroup::Orthogonal(_) => GroupFamily::OOdd,
            CompactGroup::Unitary(_) => GroupFamily::U,
            CompactGroup::Symplectic(_) => GroupFamily::Sp,
        }
    }

    pub fn algebra(self) -> Algebra {
        match self {
            CompactGroup::Orthogonal(_) => Algebra::Real,
            CompactGroup::Unitary(_) => Algebra::Complex,
            CompactGroup::Symplectic(_) => Algebra::Quaternion,
        }
    }

    /// Real dimension of the Lie algebra.
    pub fn dim(self) -> i64 {
        let d = self.d() as i64;
        match self {
            CompactGroup::Orthogonal(_) => d * (d - 1) / 2,
            CompactGroup::Unitary(_) => d * d,
            CompactGroup::Symplectic(_) => d * (2 * d + 1),
        }
    }

    /// Positive roots as integer coefficient vectors in the basis `e_1..e_l`.
    pub fn positive_roots(self) -> Vec<Vec<i64>> {
        let l = self.rank();
        let e = |j: usize| {
            let mut v = vec![0; l];
            v[j] = 1;
            v
        };
        let comb = |a: &[i64], s: i64, b: &[i64]| a.iter().zip(b).map(|(x, y)| x + s * y).collect::<Vec<_>>();
        let mut out = Vec::new();
        for j in 0..l {
            for k in j + 1..l {
                out.push(comb(&e(j), -1, &e(k)));
                if self.family() != GroupFamily::U {
                    out.push(comb(&e(j), 1, &e(k)));
                }
            }
            match self.family() {
                GroupFamily::OOdd => out.push(e(j)),
                GroupFamily::Sp => out.push(comb(&e(j), 1, &e(j))),
                _ => {}
            }
        }
        out
    }
}

impl fmt::Display for CompactGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CompactGroup::Orthogonal(d) => write!(f, "O_{d}"),
            CompactGroup::Unitary(d) => write!(f, "U_{d}"),
            CompactGroup::Symplectic(d) => write!(f, "Sp_{d}"),
        }
    }
}

/// An irreducible dual pair `(G, G')` with `G` compact:
/// `(O_d, Sp_{2l'}(R))`, `(U_d, U_{p,q})` or `(Sp_d, O*_{2d'})`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DualPair {
    algebra: Algebra,
    d: usize,
    d_prime: usize,
    p: usize,
    q: usize,
}

impl DualPair {
    /// `d_prime` is the dimension over the algebra of the second space:
    /// `2l'` for `Sp_{2l'}(R)`, `p+q` for `U_{p,q}`, `d'` for `O*_{2d'}`.
    /// The signature is only meaningful for `C`; it defaults to `(0, d')`.
    pub fn new(algebra: Algebra, d: usize, d_prime: usize, signature: Option<(usize, usize)>) -> Result<Self, RootError> {
        if d == 0 || d_prime == 0 {
            return Err(RootError::InvalidPair("dimensions must be positive".into()));
        }
        let (p, q) = match (algebra, signature) {
            (Algebra::Complex, Some((p, q))) => {
                if p + q != d_prime {
                    return Err(RootError::InvalidPair(format!("p + q = {} but d' = {d_prime}", p + q)));
                }
                (p.min(q), p.max(q))
            }
            (Algebra::Complex, None) => (0, d_prime),
            (_, Some(_)) => return Err(RootError::InvalidPair("signature only applies to C".into())),
            (_, None) => (0, 0),
        };
        if algebra == Algebra::Real && d_prime % 2 == 1 {
            return Err(RootError::InvalidPair("Sp_{d'}(R) needs even d'".into()));
        }
        Ok(DualPair { algebra, d, d_prime, p, q })
    }

    /// `(O_d, Sp_{2l'}(R))`.
    pub fn orthosymplectic(d: usize, l_prime: usize) -> Self {
        Self::new(Algebra::Real, d, 2 * l_prime, None).expect("valid pair")
    }

    /// `(U_d, U_{p,q})`.
    pub fn unitary(d: usize, p: usize, q: usize) -> Self {
        Self::new(Algebra::Complex, d, p + q, Some((p, q))).expect("valid pair")
    }

    /// `(Sp_d, O*_{2d'})`.
    pub fn quaternionic(d: usize, d_prime: usize) -> Self {
        Self::new(Algebra::Quaternion, d, d_prime, None).expect("valid pair")
    }

    pub fn algebra(&self) -> Algebra {
        self.algebra
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn d_prime(&self) -> usize {
        self.d_prime
    }

    pub fn signature(&self) -> (usize, usize) {
        (self.p, self.q)
    }

    pub fn g(&self) -> CompactGroup {
        match self.algebra {
            Algebra::Real => CompactGroup::Orthogonal(self.d),
            Algebra::Complex => CompactGroup::Unitary(self.d),
            Algebra::Quaternion => CompactGroup::Symplectic(self.d),
        }
    }

    pub fn family(&self) -> GroupFamily {
        self.g().family()
    }

    pub fn l(&self) -> usize {
        self.g().rank()
    }

    pub fn l_prime(&self) -> usize {
        match self.algebra {
            Algebra::Real => self.d_prime / 2,
            _ => self.d_prime,
        }
    }

    /// `2 dim g / dim_R V_0`.
    pub fn r(&self) -> Rat {
        let l = self.l() as i64;
        match self.family() {
            GroupFamily::OEven => int(2 * l - 1),
            GroupFamily::OOdd => int(2 * l),
            GroupFamily::U => int(l),
            GroupFamily::Sp => int(l) + rat(1, 2),
        }
    }

    pub fn iota(&self) -> Rat {
        if self.algebra == Algebra::Quaternion {
            rat(1, 2)
        } else {
            Rat::one()
        }
    }

    /// `(d' - r + ι) / (2ι)`.
    pub fn delta(&self) -> Rat {
        let iota = self.iota();
        (int(self.d_prime as i64) - self.r() + &iota) / (int(2) * iota)
    }

    /// `β = π/ι`, returned as the multiple of π.
    pub fn beta_pi_multiple(&self) -> Rat {
        self.iota().recip()
    }

    /// Real dimension of the Lie algebra of `G'`.
    pub fn dim_g_prime(&self) -> i64 {
        let n = self.d_prime as i64;
        match self.algebra {
            Algebra::Real => (n / 2) * (n + 1),
            Algebra::Complex => n * n,
            Algebra::Quaternion => n * (2 * n - 1),
        }
    }

    /// `dim_R W = d d' dim_R D`.
    pub fn dim_w(&self) -> i64 {
        (self.d * self.d_prime) as i64 * self.algebra.real_dim()
    }

    /// Witt index of the form preserved by `G'`.
    pub fn witt_index(&self) -> usize {
        match self.algebra {
            Algebra::Real => self.d_prime / 2,
            Algebra::Complex => self.p.min(self.q),
            Algebra::Quaternion => self.d_prime / 2,
        }
    }

    /// Rank of the maximal nilpotent orbit in `τ'(τ^{-1}(0))`.
    pub fn m(&self) -> usize {
        self.d.min(self.witt_index())
    }

    pub fn is_stable_range(&self) -> bool {
        self.d <= self.witt_index()
    }
}

impl fmt::Display for DualPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.algebra {
            Algebra::Real => write!(f, "(O_{}, Sp_{}(R))", self.d, self.d_prime),
            Algebra::Complex => write!(f, "(U_{}, U_{{{},{}}})", self.d, self.p, self.q),
            Algebra::Quaternion => write!(f, "(Sp_{}, O*_{})", self.d, 2 * self.d_prime),
        }
    }
}
