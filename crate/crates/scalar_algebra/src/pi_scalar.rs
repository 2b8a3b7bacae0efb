use std::fmt;
use std::ops::{Mul, Neg};

use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::rat::{int, rat_to_f64, Rat};

/// A number of the form `coeff * pi^pi_power * i^i_power`.
///
/// Stored canonically: `i^2 = -1` is folded into the coefficient so the
/// stored i-power is 0 or 1, and zero is always `(0, 0, 0)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PiScalar {
    coeff: Rat,
    pi_power: i32,
    i_power: u8,
}

impl PiScalar {
    pub fn new(coeff: Rat, pi_power: i32, i_power: i64) -> Self {
        if coeff.is_zero() {
            return Self::zero();
        }
        let m = i_power.rem_euclid(4) as u8;
        let (coeff, i_power) = if m >= 2 { (-coeff, m - 2) } else { (coeff, m) };
        PiScalar { coeff, pi_power, i_power }
    }

    pub fn zero() -> Self {
        PiScalar { coeff: Rat::zero(), pi_power: 0, i_power: 0 }
    }

    pub fn one() -> Self {
        Self::rational(Rat::one())
    }

    pub fn rational(r: Rat) -> Self {
        Self::new(r, 0, 0)
    }

    pub fn i() -> Self {
        Self::new(Rat::one(), 0, 1)
    }

    pub fn pi() -> Self {
        Self::new(Rat::one(), 1, 0)
    }

    pub fn two_pi() -> Self {
        Self::new(int(2), 1, 0)
    }

    pub fn coeff(&self) -> &Rat {
        &self.coeff
    }

    pub fn pi_power(&self) -> i32 {
        self.pi_power
    }

    pub fn i_power(&self) -> u8 {
        self.i_power
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    /// True when the value is a rational number (no pi, no i).
    pub fn as_rational(&self) -> Option<&Rat> {
        (self.is_zero() || (self.pi_power == 0 && self.i_power == 0)).then_some(&self.coeff)
    }

    /// Sum, defined only when both terms carry the same pi and i content.
    pub fn checked_add(&self, other: &Self) -> Option<Self> {
        if self.is_zero() {
            return Some(other.clone());
        }
        if other.is_zero() {
            return Some(self.clone());
        }
        if self.pi_power != other.pi_power || self.i_power != other.i_power {
            return None;
        }
        Some(Self::new(&self.coeff + &other.coeff, self.pi_power, self.i_power as i64))
    }

    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(Self::new(self.coeff.recip(), -self.pi_power, -(self.i_power as i64)))
    }

    pub fn pow(&self, e: i32) -> Self {
        if e == 0 {
            return Self::one();
        }
        if e < 0 {
            return self.recip().expect("negative power of zero").pow(-e);
        }
        Self::new(self.coeff.pow(e), self.pi_power * e, self.i_power as i64 * e as i64)
    }

    pub fn scale(&self, r: &Rat) -> Self {
        Self::new(&self.coeff * r, self.pi_power, self.i_power as i64)
    }

    pub fn conj(&self) -> Self {
        Self::new(self.coeff.clone(), self.pi_power, -(self.i_power as i64))
    }

    pub fn to_complex(&self) -> Complex64 {
        let mag = rat_to_f64(&self.coeff) * std::f64::consts::PI.powi(self.pi_power);
        if self.i_power == 0 {
            Complex64::new(mag, 0.0)
        } else {
            Complex64::new(0.0, mag)
        }
    }
}

impl Mul for &PiScalar {
    type Output = PiScalar;
    fn mul(self, rhs: &PiScalar) -> PiScalar {
        PiScalar::new(
            &self.coeff * &rhs.coeff,
            self.pi_power + rhs.pi_power,
            self.i_power as i64 + rhs.i_power as i64,
        )
    }
}

impl Mul for PiScalar {
    type Output = PiScalar;
    fn mul(self, rhs: PiScalar) -> PiScalar {
        &self * &rhs
    }
}

impl Neg for PiScalar {
    type Output = PiScalar;
    fn neg(self) -> PiScalar {
        PiScalar::new(-self.coeff, self.pi_power, self.i_power as i64)
    }
}

impl Neg for &PiScalar {
    type Output = PiScalar;
    fn neg(self) -> PiScalar {
        -self.clone()
    }
}

impl From<Rat> for PiScalar {
    fn from(r: Rat) -> Self {
        PiScalar::rational(r)
    }
}

impl fmt::Display for PiScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.coeff)?;
        match self.pi_power {
            0 => {}
            1 => write!(f, "*pi")?,
            p => write!(f, "*pi^{p}")?,
        }
        if self.i_power == 1 {
            write!(f, "*i")?;
        }
        Ok(())
    }
}
