//! Univariate polynomials in the formal fiber-degree parameter d, with
//! exact rational coefficients. These carry the d-dependence that divisor
//! insertions produce when they are traded for intersection numbers
//! against the family class S + dF.

use std::fmt;
use std::ops::{Add, Mul};

use num_traits::{One, Signed, Zero};

use crate::series::{rat_string, Rat};

/// coeffs[k] is the coefficient of d^k; trailing zeros are trimmed, the
/// zero polynomial is an empty list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyInD {
    coeffs: Vec<Rat>,
}

impl PolyInD {
    pub fn zero() -> Self {
        PolyInD { coeffs: Vec::new() }
    }

    pub fn constant(c: Rat) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// c0 + c1 * d.
    pub fn linear(c0: Rat, c1: Rat) -> Self {
        Self::from_coeffs(vec![c0, c1])
    }

    pub fn from_coeffs(coeffs: Vec<Rat>) -> Self {
        let mut p = PolyInD { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Rat::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the zero polynomial is None.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of d^k (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn scale(&self, c: &Rat) -> PolyInD {
        if c.is_zero() {
            return PolyInD::zero();
        }
        PolyInD {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn eval(&self, d: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * d + c;
        }
        acc
    }

    /// Smallest power of d where two polynomials differ.
    pub fn first_difference(&self, other: &PolyInD) -> Option<usize> {
        let top = self.coeffs.len().max(other.coeffs.len());
        (0..top).find(|&k| self.coeff(k) != other.coeff(k))
    }
}

impl Add for &PolyInD {
    type Output = PolyInD;
    fn add(self, other: &PolyInD) -> PolyInD {
        let top = self.coeffs.len().max(other.coeffs.len());
        PolyInD::from_coeffs((0..top).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }
}

impl Mul for &PolyInD {
    type Output = PolyInD;
    fn mul(self, other: &PolyInD) -> PolyInD {
        if self.is_zero() || other.is_zero() {
            return PolyInD::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += x * y;
            }
        }
        PolyInD::from_coeffs(coeffs)
    }
}

/// Canonical text form, highest power first: "1/9*d^2 - 4/9*d + 4/9".
impl fmt::Display for PolyInD {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            match k {
                0 => write!(f, "{}", rat_string(&mag))?,
                1 if mag.is_one() => write!(f, "d")?,
                1 => write!(f, "{}*d", rat_string(&mag))?,
                _ if mag.is_one() => write!(f, "d^{}", k)?,
                _ => write!(f, "{}*d^{}", rat_string(&mag), k)?,
            }
        }
        Ok(())
    }
}
