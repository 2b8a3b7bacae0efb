use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::One;

use crate::{PiScalar, Rat, ScalarError, SignedPermutation, UniPoly};

/// Sparse polynomial in a fixed number of variables with [`PiScalar`] coefficients.
///
/// Terms whose coefficients are added must share their pi/i content; every
/// polynomial built in this workspace is homogeneous in that sense, and a
/// mismatch is a logic error, so it panics.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, PiScalar>,
}

fn add_into(terms: &mut BTreeMap<Vec<u32>, PiScalar>, e: Vec<u32>, c: PiScalar) {
    if c.is_zero() {
        return;
    }
    let sum = match terms.get(&e) {
        Some(old) => old
            .checked_add(&c)
            .unwrap_or_else(|| panic!("incompatible pi/i content: {old} + {c}")),
        None => c,
    };
    if sum.is_zero() {
        terms.remove(&e);
    } else {
        terms.insert(e, sum);
    }
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: PiScalar) -> Self {
        Self::term(nvars, vec![0; nvars], c)
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, PiScalar::one())
    }

    pub fn term(nvars: usize, exps: Vec<u32>, c: PiScalar) -> Self {
        assert_eq!(exps.len(), nvars);
        let mut p = Self::zero(nvars);
        add_into(&mut p.terms, exps, c);
        p
    }

    /// The coordinate `y_j`.
    pub fn var(nvars: usize, j: usize) -> Self {
        let mut e = vec![0; nvars];
        e[j] = 1;
        Self::term(nvars, e, PiScalar::one())
    }

    /// `p(s * y_j)` as a polynomial in `nvars` variables.
    pub fn from_unipoly(p: &UniPoly, j: usize, nvars: usize, s: &PiScalar) -> Self {
        let mut out = Self::zero(nvars);
        for (k, c) in p.coeffs().iter().enumerate() {
            let mut e = vec![0; nvars];
            e[j] = k as u32;
            add_into(&mut out.terms, e, s.pow(k as i32).scale(c));
        }
        out
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &PiScalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exps: &[u32]) -> PiScalar {
        self.terms.get(exps).cloned().unwrap_or_else(PiScalar::zero)
    }

    /// Highest power of `y_j` that occurs; 0 for the zero polynomial.
    pub fn degree_in(&self, j: usize) -> u32 {
        self.terms.keys().map(|e| e[j]).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &PiScalar) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, a) in &self.terms {
            add_into(&mut out.terms, e.clone(), a * c);
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(self.nvars), |acc, _| &acc * self)
    }

    /// `p(s.y)` for a signed permutation `s`.
    pub fn act(&self, s: &SignedPermutation) -> Self {
        assert_eq!(s.len(), self.nvars);
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut ne = vec![0; self.nvars];
            let mut neg = false;
            for j in 0..self.nvars {
                ne[s.perm()[j]] = e[j];
                if s.signs()[j] < 0 && e[j] % 2 == 1 {
                    neg = !neg;
                }
            }
            add_into(&mut out.terms, ne, if neg { -c } else { c.clone() });
        }
        out
    }

    pub fn eval_complex(&self, y: &[Complex64]) -> Complex64 {
        assert_eq!(y.len(), self.nvars);
        self.terms
            .iter()
            .map(|(e, c)| {
                e.iter()
                    .zip(y)
                    .fold(c.to_complex(), |acc, (&k, &x)| acc * x.powu(k))
            })
            .sum()
    }

    /// Value at a rational point, when every coefficient is rational.
    pub fn eval_rational(&self, y: &[Rat]) -> Option<Rat> {
        let mut acc = Rat::from_integer(0.into());
        for (e, c) in &self.terms {
            let mut t = c.as_rational()?.clone();
            for (&k, x) in e.iter().zip(y) {
                t *= x.pow(k as i32);
            }
            acc += t;
        }
        Some(acc)
    }

    fn leading(&self) -> Option<(&Vec<u32>, &PiScalar)> {
        self.terms.iter().next_back()
    }

    /// Exact quotient `self / d`; fails unless `d` divides `self`.
    ///
    /// Lexicographic long division. `{d}` is a Gröbner basis of the ideal it
    /// generates, so a leading term that `lt(d)` does not divide proves a
    /// nonzero remainder.
    pub fn div_exact(&self, d: &Self) -> Result<Self, ScalarError> {
        assert_eq!(self.nvars, d.nvars);
        let (de, dc) = d.leading().ok_or(ScalarError::DivisionByZero)?;
        let dc_inv = dc.recip().ok_or(ScalarError::DivisionByZero)?;
        let mut r = self.clone();
        let mut q = Self::zero(self.nvars);
        while let Some((re, rc)) = r.leading() {
            if re.iter().zip(de).any(|(a, b)| a < b) {
                return Err(ScalarError::Divisibility(format!(
                    "leading monomial {re:?} not divisible by {de:?}"
                )));
            }
            let te: Vec<u32> = re.iter().zip(de).map(|(a, b)| a - b).collect();
            let t = Self::term(self.nvars, te, rc * &dc_inv);
            r = &r - &(&t * d);
            q = &q + &t;
        }
        Ok(q)
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            add_into(&mut out.terms, e.clone(), c.clone());
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&-PiScalar::one())
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self + &(-rhs)
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = MultiPoly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                add_into(&mut out.terms, e, c1 * c2);
            }
        }
        out
    }
}

macro_rules! by_value {
    ($tr:ident, $m:ident) => {
        impl $tr for MultiPoly {
            type Output = MultiPoly;
            fn $m(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
by_value!(Add, add);
by_value!(Sub, sub);
by_value!(Mul, mul);

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (e, c)) in self.terms.iter().rev().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            for (j, &k) in e.iter().enumerate() {
                match k {
                    0 => {}
                    1 => write!(f, "*y{}", j + 1)?,
                    _ => write!(f, "*y{}^{}", j + 1, k)?,
                }
            }
        }
        Ok(())
    }
}

impl MultiPoly {
    /// `∏_{j<k} (y_j - y_k)`.
    pub fn vandermonde(nvars: usize) -> Self {
        let mut p = Self::one(nvars);
        for j in 0..nvars {
            for k in j + 1..nvars {
                p = &p * &(&Self::var(nvars, j) - &Self::var(nvars, k));
            }
        }
        p
    }

    pub fn is_constant_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&vec![0; self.nvars])
                .is_some_and(|c| c.as_rational().is_some_and(|r| r.is_one()))
    }
}
