//! The arithmetic functions and named q-series the engine is built on:
//! divisor sums, the weight-2 Eisenstein series G2, the 24th-power inverse
//! eta product, the elliptic cover count, and the quasimodular combination
//! F(t).

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::series::{frac, mul, rat, PowerSeries, Rat};

/// Sum of the positive divisors of d, by trial division up to sqrt(d).
/// d = 0 is rejected; series generators inject their own constant there.
pub fn divisor_sigma(d: u64) -> u64 {
    assert!(d >= 1, "divisor_sigma is defined for d >= 1");
    let mut sum = 0;
    let mut k = 1;
    while k * k <= d {
        if d.is_multiple_of(k) {
            sum += k;
            let paired = d / k;
            if paired != k {
                sum += paired;
            }
        }
        k += 1;
    }
    sum
}

/// Number of connected genus-one degree-r covers of a fixed elliptic curve.
/// This equals the divisor sum sigma(r): a degree-r cover is an index-r
/// sublattice of the covered curve's lattice, and there are sigma(r) such
/// sublattices (e.g. 1 + 2 = 3 for r = 2).
pub fn cover_count(r: u64) -> u64 {
    assert!(r >= 1, "cover_count is defined for r >= 1");
    divisor_sigma(r)
}

/// Weight-2 Eisenstein series: coefficient 0 is -1/24, coefficient d >= 1
/// is sigma(d).
pub fn g2(order: usize) -> PowerSeries {
    PowerSeries::from_fn(order, |d| {
        if d == 0 {
            frac(-1, 24)
        } else {
            rat(divisor_sigma(d as u64) as i64)
        }
    })
}

/// Truncated product over l = 1..=order of (1 - t^l)^{-24}.
/// All coefficients are positive integers.
///
/// The truncated factors (1 - t^l) are multiplied together first (the
/// result has sparse coefficients in {-1, 0, 1}), and the product is then
/// inverted 24 times, all in plain big integers. This equals multiplying
/// the inverted factors directly (a unit test pins the two constructions
/// against each other) but runs orders of magnitude faster at high
/// truncation orders.
pub fn eta24_inverse(order: usize) -> PowerSeries {
    // product of the truncated factors (1 - t^l)
    let mut euler = vec![BigInt::zero(); order + 1];
    euler[0] = BigInt::one();
    for l in 1..=order {
        for n in (l..=order).rev() {
            let low = euler[n - l].clone();
            euler[n] -= low;
        }
    }
    let support: Vec<usize> = (1..=order).filter(|&k| !euler[k].is_zero()).collect();
    let one = BigInt::one();
    let minus_one = -BigInt::one();

    // invert the product 24 times: each pass solves euler * b = acc
    let mut acc = vec![BigInt::zero(); order + 1];
    acc[0] = BigInt::one();
    for _ in 0..24 {
        let mut b = vec![BigInt::zero(); order + 1];
        for n in 0..=order {
            let mut sum = acc[n].clone();
            for &k in support.iter().take_while(|&&k| k <= n) {
                if b[n - k].is_zero() {
                    continue;
                }
                if euler[k] == one {
                    sum -= &b[n - k];
                } else if euler[k] == minus_one {
                    sum += &b[n - k];
                } else {
                    sum -= &euler[k] * &b[n - k];
                }
            }
            b[n] = sum; // the euler product is monic
        }
        acc = b;
    }
    PowerSeries::from_coeffs(acc.into_iter().map(Rat::from_integer).collect())
}

/// Independent construction of the same product, used as a cross-check:
/// single-color partition numbers by the coin-counting recurrence, then the
/// 24th convolution power, all in plain big integers.
pub fn eta24_inverse_by_partitions(order: usize) -> PowerSeries {
    let mut p = vec![BigInt::zero(); order + 1];
    p[0] = BigInt::one();
    for l in 1..=order {
        for n in l..=order {
            let add = p[n - l].clone();
            p[n] += add;
        }
    }
    let mut acc = vec![BigInt::zero(); order + 1];
    acc[0] = BigInt::one();
    let mut base = p;
    let mut e = 24u32;
    while e > 0 {
        if e & 1 == 1 {
            acc = convolve_int(&acc, &base, order);
        }
        e >>= 1;
        if e > 0 {
            base = convolve_int(&base, &base, order);
        }
    }
    PowerSeries::from_coeffs(acc.into_iter().map(Rat::from_integer).collect())
}

fn convolve_int(a: &[BigInt], b: &[BigInt], order: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); order + 1];
    for (i, x) in a.iter().enumerate().take(order + 1) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(order + 1 - i) {
            if y.is_zero() {
                continue;
            }
            out[i + j] += x * y;
        }
    }
    out
}

/// The quasimodular combination
/// F(t) = 32 G2^2(t^2) - 40 G2(t^2) G2(t) + 8 G2^2(t) - t G2'(t).
/// Coefficientwise it equals 4 t^2 G2'(t^2): the constant term and every
/// odd coefficient cancel.
pub fn f_combo(order: usize) -> PowerSeries {
    let g = g2(order);
    let g_t2 = g.compose_power(2);
    let a = mul(&g_t2, &g_t2).scale(&rat(32));
    let b = mul(&g_t2, &g).scale(&rat(40));
    let c = mul(&g, &g).scale(&rat(8));
    &(&(&a - &b) + &c) - &g.theta()
}

/// Named-series cache. Entries are immutable once computed and are
/// regenerated only when a larger order is requested.
pub struct SeriesCatalog {
    cache: HashMap<&'static str, PowerSeries>,
}

/// Catalog entries: (name, construction tag).
pub const CATALOG: [(&str, &str); 4] = [
    ("g2", "sigma(d) series with constant term -1/24"),
    ("eta24-inverse", "product over l >= 1 of (1 - t^l)^{-24}"),
    ("theta-g2", "theta(g2)"),
    (
        "f-combo",
        "32*G2^2(t^2) - 40*G2(t^2)*G2(t) + 8*G2^2(t) - theta(G2)",
    ),
];

impl SeriesCatalog {
    pub fn new() -> Self {
        SeriesCatalog {
            cache: HashMap::new(),
        }
    }

    /// The named series truncated at `order`, or None for an unknown name.
    pub fn series(&mut self, name: &str, order: usize) -> Option<PowerSeries> {
        let key = CATALOG.iter().map(|(n, _)| *n).find(|n| *n == name)?;
        let cached_order = self.cache.get(key).map(PowerSeries::order);
        if cached_order.is_none_or(|n| n < order) {
            self.cache.insert(key, Self::generate(key, order));
        }
        Some(self.cache[key].truncate(order))
    }

    pub fn provenance(name: &str) -> Option<&'static str> {
        CATALOG.iter().find(|(n, _)| *n == name).map(|(_, p)| *p)
    }

    fn generate(name: &str, order: usize) -> PowerSeries {
        match name {
            "g2" => g2(order),
            "eta24-inverse" => eta24_inverse(order),
            "theta-g2" => g2(order).theta(),
            "f-combo" => f_combo(order),
            _ => unreachable!("unknown catalog entry {name}"),
        }
    }
}

impl Default for SeriesCatalog {
    fn default() -> Self {
        Self::new()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    #[test]
    fn sigma_small_values() {
        assert_eq!(divisor_sigma(1), 1);
        assert_eq!(divisor_sigma(2), 3);
        assert_eq!(divisor_sigma(4), 7);
        assert_eq!(divisor_sigma(6), 12); // divisors 1,2,3,6
        assert_eq!(divisor_sigma(36), 91);
    }

    #[test]
    #[should_panic(expected = "d >= 1")]
    fn sigma_rejects_zero() {
        let _ = divisor_sigma(0);
    }

    #[test]
    fn cover_counts() {
        assert_eq!(cover_count(1), 1);
        assert_eq!(cover_count(2), 3); // 1 + 2
        assert_eq!(cover_count(4), 7);
    }

    #[test]
    fn g2_coefficients() {
        let g = g2(8);
        assert_eq!(g[0], frac(-1, 24));
        assert_eq!(g[1], rat(1));
        assert_eq!(g[2], rat(3));
        assert_eq!(g[4], rat(7)); // divisors 1,2,4
        assert_eq!(g[5], rat(6)); // divisors 1,5
    }

    #[test]
    fn theta_g2_values() {
        let th = g2(4).theta();
        assert_eq!(th[2], rat(6)); // 2 * sigma(2)
    }

    #[test]
    fn g2_squared_constant_term() {
        let g = g2(4);
        assert_eq!(mul(&g, &g)[0], frac(1, 576)); // (-1/24)^2
    }

    #[test]
    fn eta24_inverse_small_coefficients() {
        let e = eta24_inverse(5);
        for (n, want) in [1, 24, 324, 3200, 25650, 176256].iter().enumerate() {
            assert_eq!(e[n], rat(*want), "coefficient {n}");
        }
    }

    #[test]
    fn eta24_inverse_empty_product() {
        assert_eq!(eta24_inverse(0)[0], rat(1));
    }

    /// (1 - t^l)^24 truncated at `order`: binom(24, j) * (-1)^j at j*l.
    fn one_minus_tl_pow24(l: usize, order: usize) -> PowerSeries {
        let mut coeffs = vec![Rat::zero(); order + 1];
        let mut binom: i64 = 1;
        for j in 0..=24usize {
            let exp = j * l;
            if exp > order {
                break;
            }
            let sign = if j % 2 == 0 { 1 } else { -1 };
            coeffs[exp] = rat(sign * binom);
            binom = binom * (24 - j as i64) / (j as i64 + 1);
        }
        PowerSeries::from_coeffs(coeffs)
    }

    #[test]
    fn eta24_inverse_equals_literal_inverted_factor_product() {
        let order = 24;
        let mut acc = PowerSeries::one(order);
        for l in 1..=order {
            acc = mul(&acc, &one_minus_tl_pow24(l, order).invert());
        }
        assert_eq!(eta24_inverse(order), acc);
    }

    #[test]
    fn eta24_inverse_matches_partition_oracle() {
        let order = 48;
        assert_eq!(eta24_inverse(order), eta24_inverse_by_partitions(order));
    }

    #[test]
    fn eta24_inverse_coefficients_positive_integers() {
        let e = eta24_inverse(32);
        for n in 0..=32 {
            assert!(e[n].is_integer() && e[n].is_positive(), "coefficient {n}");
        }
    }

    #[test]
    fn eta24_log_derivative() {
        // theta(eta24_inverse) = (24*g2 + 1) * eta24_inverse
        let order = 40;
        let e = eta24_inverse(order);
        let factor = &g2(order).scale(&rat(24)) + &PowerSeries::one(order);
        assert_eq!(e.theta(), mul(&factor, &e));
    }

    #[test]
    fn f_combo_values() {
        let f = f_combo(12);
        assert_eq!(f[0], rat(0)); // 32/576 - 40/576 + 8/576
        assert_eq!(f[2], rat(4));
        for n in (1..=11).step_by(2) {
            assert!(f[n].is_zero(), "odd coefficient {n}");
        }
    }

    #[test]
    fn f_combo_is_4_theta_g2_at_t2() {
        let order = 32;
        let expected = g2(order).theta().compose_power(2).scale(&rat(4));
        assert_eq!(f_combo(order), expected);
    }

    #[test]
    fn catalog_caches_and_truncates() {
        let mut cat = SeriesCatalog::new();
        let g8 = cat.series("g2", 8).unwrap();
        assert_eq!(g8.order(), 8);
        let g4 = cat.series("g2", 4).unwrap();
        assert_eq!(g4.order(), 4);
        assert!(g8.equal_to_order(&g4, 4));
        assert!(cat.series("entirely-unknown", 4).is_none());
    }
}
