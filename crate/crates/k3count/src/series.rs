//! Truncated formal power series over exact arbitrary-precision rationals.
//!
//! A `PowerSeries` stores the coefficients of t^0 .. t^N densely, where N is
//! the (inclusive) truncation order. Every operation is exact; there is no
//! floating-point representation anywhere.
//!
//! Invariants:
//! - `coeffs.len() == order + 1`
//! - coefficients are always in lowest terms with positive denominator
//!   (maintained by `BigRational`)
//! - binary operations truncate to the smaller operand order

use std::fmt;
use std::ops::{Add, Index, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Exact rational scalar: reduced fraction with positive denominator,
/// zero represented as 0/1.
pub type Rat = num_rational::BigRational;

/// Integer rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Fraction in lowest terms.
pub fn frac(numer: i64, denom: i64) -> Rat {
    Rat::new(BigInt::from(numer), BigInt::from(denom))
}

/// Canonical text form: "p/q" in lowest terms, just "p" when q = 1.
/// No locale formatting.
pub fn rat_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct PowerSeries {
    order: usize,
    coeffs: Vec<Rat>,
}

impl PowerSeries {
    /// The zero series truncated at `order`.
    pub fn zero(order: usize) -> Self {
        PowerSeries {
            order,
            coeffs: vec![Rat::zero(); order + 1],
        }
    }

    /// The constant 1 truncated at `order`.
    pub fn one(order: usize) -> Self {
        Self::monomial(Rat::one(), 0, order)
    }

    /// c * t^exp truncated at `order` (zero series if exp > order).
    pub fn monomial(c: Rat, exp: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if exp <= order {
            s.coeffs[exp] = c;
        }
        s
    }

    /// Series with the given coefficients; the order is `coeffs.len() - 1`.
    pub fn from_coeffs(coeffs: Vec<Rat>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least the t^0 coefficient");
        PowerSeries {
            order: coeffs.len() - 1,
            coeffs,
        }
    }

    /// Build coefficient n as f(n) for n = 0..=order.
    pub fn from_fn(order: usize, f: impl FnMut(usize) -> Rat) -> Self {
        PowerSeries {
            order,
            coeffs: (0..=order).map(f).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Coefficient of t^n. Panics beyond the truncation order: coefficients
    /// there are unknown, never silently zero.
    pub fn coeff(&self, n: usize) -> &Rat {
        assert!(
            n <= self.order,
            "coefficient t^{} requested but series is only known to order {}",
            n,
            self.order
        );
        &self.coeffs[n]
    }

    /// Coefficient of t^n, or None beyond the truncation order.
    pub fn get(&self, n: usize) -> Option<&Rat> {
        self.coeffs.get(n)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rat::is_zero)
    }

    /// True when the coefficients of t^0..=t^n agree. Panics if either
    /// series is not known that far.
    pub fn equal_to_order(&self, other: &PowerSeries, n: usize) -> bool {
        self.first_difference(other, n).is_none()
    }

    /// Smallest exponent <= n where the two series differ.
    pub fn first_difference(&self, other: &PowerSeries, n: usize) -> Option<usize> {
        assert!(
            n <= self.order && n <= other.order,
            "comparison to order {} exceeds known orders {} and {}",
            n,
            self.order,
            other.order
        );
        (0..=n).find(|&k| self.coeffs[k] != other.coeffs[k])
    }

    /// Drop coefficients above `order` (which must not exceed the current one).
    pub fn truncate(&self, order: usize) -> PowerSeries {
        assert!(
            order <= self.order,
            "cannot extend a series from order {} to {}",
            self.order,
            order
        );
        PowerSeries {
            order,
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    /// Scalar multiple.
    pub fn scale(&self, c: &Rat) -> PowerSeries {
        if c.is_zero() {
            return PowerSeries::zero(self.order);
        }
        PowerSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// t d/dt: multiplies the n-th coefficient by n. Order is preserved.
    pub fn theta(&self) -> PowerSeries {
        PowerSeries {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(n, c)| c * rat(n as i64))
                .collect(),
        }
    }

    /// d/dt. The order drops by one: the top coefficient of the derivative
    /// would need an unknown coefficient of self.
    pub fn differentiate(&self) -> PowerSeries {
        assert!(self.order >= 1, "cannot differentiate an order-0 series");
        PowerSeries {
            order: self.order - 1,
            coeffs: (1..=self.order)
                .map(|n| &self.coeffs[n] * rat(n as i64))
                .collect(),
        }
    }

    /// Substitution t -> t^k, truncated at the original order:
    /// result[k*n] = self[n], everything else 0.
    pub fn compose_power(&self, k: usize) -> PowerSeries {
        assert!(k >= 1, "compose_power requires k >= 1");
        let mut out = PowerSeries::zero(self.order);
        for n in 0..=self.order {
            match n.checked_mul(k) {
                Some(m) if m <= self.order => out.coeffs[m] = self.coeffs[n].clone(),
                _ => break,
            }
        }
        out
    }

    /// result[d] = self[stride*d + offset] where the index lands in
    /// 0..=order, 0 otherwise; the result order is
    /// floor((order - offset) / stride), clamped at 0.
    pub fn reindex(&self, stride: usize, offset: i64) -> PowerSeries {
        assert!(stride >= 1, "reindex requires stride >= 1");
        let span = self.order as i64 - offset;
        let new_order = if span < 0 { 0 } else { (span / stride as i64) as usize };
        let mut out = PowerSeries::zero(new_order);
        for d in 0..=new_order {
            let idx = stride as i64 * d as i64 + offset;
            if idx >= 0 && idx <= self.order as i64 {
                out.coeffs[d] = self.coeffs[idx as usize].clone();
            }
        }
        out
    }

    /// Multiplicative inverse to the truncation order. Panics when the
    /// constant term is zero (the series is not a unit).
    pub fn invert(&self) -> PowerSeries {
        let a0 = &self.coeffs[0];
        assert!(!a0.is_zero(), "cannot invert a series with zero constant term");
        let inv_a0 = a0.recip();
        let mut out = vec![Rat::zero(); self.order + 1];
        out[0] = inv_a0.clone();
        for n in 1..=self.order {
            let mut sum = Rat::zero();
            for k in 1..=n {
                let ak = &self.coeffs[k];
                if ak.is_zero() || out[n - k].is_zero() {
                    continue;
                }
                sum += ak * &out[n - k];
            }
            if !sum.is_zero() {
                out[n] = -&inv_a0 * sum;
            }
        }
        PowerSeries {
            order: self.order,
            coeffs: out,
        }
    }

    /// Division by a unit series: the same value as mul(self, g.invert()),
    /// computed by the direct recurrence
    /// b[n] = (self[n] - sum_{k >= 1} g[k] b[n-k]) / g[0],
    /// which costs O(order * nonzeros(g)). Panics when g[0] = 0.
    pub fn div(&self, g: &PowerSeries) -> PowerSeries {
        let g0 = &g.coeffs[0];
        assert!(!g0.is_zero(), "cannot divide by a series with zero constant term");
        let order = self.order.min(g.order);
        let inv_g0 = g0.recip();
        let mut out = vec![Rat::zero(); order + 1];
        let g_support: Vec<usize> = (1..=order).filter(|&k| !g.coeffs[k].is_zero()).collect();
        for n in 0..=order {
            let mut sum = self.coeffs[n].clone();
            for &k in g_support.iter().take_while(|&&k| k <= n) {
                if out[n - k].is_zero() {
                    continue;
                }
                sum -= &g.coeffs[k] * &out[n - k];
            }
            if !sum.is_zero() {
                out[n] = sum * &inv_g0;
            }
        }
        PowerSeries { order, coeffs: out }
    }

    /// Integer power by repeated squaring (exp = 0 gives 1).
    pub fn pow(&self, exp: u32) -> PowerSeries {
        let mut result = PowerSeries::one(self.order);
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = mul(&result, &base);
            }
            e >>= 1;
            if e > 0 {
                base = mul(&base, &base);
            }
        }
        result
    }

    /// Divide-and-conquer product; always agrees with [`mul`] exactly.
    pub fn mul_fast(&self, other: &PowerSeries) -> PowerSeries {
        crate::fastmul::mul_fast(self, other)
    }
}

/// Reference Cauchy product, truncated to the smaller operand order.
/// Zero coefficients of either operand are skipped, so multiplying by a
/// sparse series costs O(order * nonzeros).
pub fn mul(f: &PowerSeries, g: &PowerSeries) -> PowerSeries {
    let order = f.order.min(g.order);
    let mut coeffs = vec![Rat::zero(); order + 1];
    for (k, fk) in f.coeffs.iter().enumerate().take(order + 1) {
        if fk.is_zero() {
            continue;
        }
        for (j, gj) in g.coeffs.iter().enumerate().take(order + 1 - k) {
            if gj.is_zero() {
                continue;
            }
            coeffs[k + j] += fk * gj;
        }
    }
    PowerSeries { order, coeffs }
}

impl Index<usize> for PowerSeries {
    type Output = Rat;
    fn index(&self, n: usize) -> &Rat {
        self.coeff(n)
    }
}

impl Add for &PowerSeries {
    type Output = PowerSeries;
    fn add(self, other: &PowerSeries) -> PowerSeries {
        let order = self.order.min(other.order);
        PowerSeries {
            order,
            coeffs: (0..=order)
                .map(|n| &self.coeffs[n] + &other.coeffs[n])
                .collect(),
        }
    }
}

impl Sub for &PowerSeries {
    type Output = PowerSeries;
    fn sub(self, other: &PowerSeries) -> PowerSeries {
        let order = self.order.min(other.order);
        PowerSeries {
            order,
            coeffs: (0..=order)
                .map(|n| &self.coeffs[n] - &other.coeffs[n])
                .collect(),
        }
    }
}

impl Neg for &PowerSeries {
    type Output = PowerSeries;
    fn neg(self) -> PowerSeries {
        PowerSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &PowerSeries {
    type Output = PowerSeries;
    fn mul(self, other: &PowerSeries) -> PowerSeries {
        mul(self, other)
    }
}

impl fmt::Debug for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PowerSeries[order {}: ", self.order)?;
        let shown = self.order.min(8);
        for n in 0..=shown {
            if n > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", rat_string(&self.coeffs[n]))?;
        }
        if shown < self.order {
            write!(f, ", ..")?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
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
            if n == 0 {
                write!(f, "{}", rat_string(&mag))?;
            } else if mag.is_one() {
                write!(f, "t^{}", n)?;
            } else {
                write!(f, "{}*t^{}", rat_string(&mag), n)?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(t^{})", self.order + 1)
    }
}
