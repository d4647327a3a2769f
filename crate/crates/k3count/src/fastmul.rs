//! Sub-quadratic series multiplication. The contract is exact agreement
//! with [`crate::series::mul`] on every input; rationals are always stored
//! reduced, so any grouping of the same exact sum yields identical values.
//!
//! Two paths:
//! - all-integer series go through Kronecker substitution: coefficients
//!   are packed into fixed-width slots of one big integer per operand, a
//!   single big-integer product is taken, and the slots are read back (no
//!   carries cross slots because each slot is sized for the largest
//!   convolution sum)
//! - anything else goes through Karatsuba over the coefficient slices

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Zero};

use crate::series::{mul, PowerSeries, Rat};

const NAIVE_CUTOFF: usize = 24;

/// Product of `f` and `g`, truncated to the smaller operand order.
/// Agrees with the reference Cauchy product on all inputs.
pub fn mul_fast(f: &PowerSeries, g: &PowerSeries) -> PowerSeries {
    let order = f.order().min(g.order());
    if order < NAIVE_CUTOFF {
        return mul(f, g);
    }
    let a = &f.coeffs()[..=order];
    let b = &g.coeffs()[..=order];
    let full = if all_integers(a) && all_integers(b) {
        kronecker(a, b)
    } else {
        karatsuba(a, b)
    };
    PowerSeries::from_coeffs(full.into_iter().take(order + 1).collect())
}

fn all_integers(a: &[Rat]) -> bool {
    a.iter().all(|c| c.denom().is_one())
}

// ------------------------------------------------------------ kronecker --

/// Full product of two integer coefficient slices by packing each operand
/// into one big integer. Negative coefficients are handled by splitting
/// each operand into its nonnegative and nonpositive parts, giving at most
/// four packed products of magnitudes.
fn kronecker(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let la = a.len();
    let lb = b.len();
    let (a_pos, a_neg) = split_signs(a);
    let (b_pos, b_neg) = split_signs(b);

    let a_bits = max_bits(&a_pos).max(max_bits(&a_neg));
    let b_bits = max_bits(&b_pos).max(max_bits(&b_neg));
    if a_bits == 0 || b_bits == 0 {
        return vec![Rat::zero(); la + lb - 1];
    }
    // each slot holds a sum of at most min(la, lb) coefficient products
    let sum_bound_bits = a_bits + b_bits + ceil_log2(la.min(lb)) + 1;
    let slot_bytes = (sum_bound_bits as usize).div_ceil(8);

    let pp = packed_mul(&a_pos, &b_pos, slot_bytes, la + lb - 1);
    let nn = packed_mul(&a_neg, &b_neg, slot_bytes, la + lb - 1);
    let pn = packed_mul(&a_pos, &b_neg, slot_bytes, la + lb - 1);
    let np = packed_mul(&a_neg, &b_pos, slot_bytes, la + lb - 1);

    (0..la + lb - 1)
        .map(|k| {
            let positive = BigInt::from(&pp[k] + &nn[k]);
            let negative = BigInt::from(&pn[k] + &np[k]);
            Rat::from_integer(positive - negative)
        })
        .collect()
}

/// Magnitudes of the nonnegative part and of the negative part.
fn split_signs(a: &[Rat]) -> (Vec<BigUint>, Vec<BigUint>) {
    let mut pos = vec![BigUint::zero(); a.len()];
    let mut neg = vec![BigUint::zero(); a.len()];
    for (i, c) in a.iter().enumerate() {
        let numer = c.numer();
        match numer.sign() {
            Sign::Plus => pos[i] = numer.magnitude().clone(),
            Sign::Minus => neg[i] = numer.magnitude().clone(),
            Sign::NoSign => {}
        }
    }
    (pos, neg)
}

fn max_bits(a: &[BigUint]) -> u64 {
    a.iter().map(BigUint::bits).max().unwrap_or(0)
}

fn ceil_log2(n: usize) -> u64 {
    (usize::BITS - n.saturating_sub(1).leading_zeros()) as u64
}

/// One packed big-integer product; returns the slot magnitudes of the
/// convolution of the two magnitude sequences.
fn packed_mul(a: &[BigUint], b: &[BigUint], slot_bytes: usize, out_len: usize) -> Vec<BigUint> {
    if a.iter().all(BigUint::is_zero) || b.iter().all(BigUint::is_zero) {
        return vec![BigUint::zero(); out_len];
    }
    let product = pack(a, slot_bytes) * pack(b, slot_bytes);
    let mut bytes = product.to_bytes_le();
    bytes.resize(out_len * slot_bytes, 0);
    (0..out_len)
        .map(|k| BigUint::from_bytes_le(&bytes[k * slot_bytes..(k + 1) * slot_bytes]))
        .collect()
}

fn pack(a: &[BigUint], slot_bytes: usize) -> BigUint {
    let mut bytes = vec![0u8; a.len() * slot_bytes];
    for (i, c) in a.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let cb = c.to_bytes_le();
        debug_assert!(cb.len() <= slot_bytes);
        bytes[i * slot_bytes..i * slot_bytes + cb.len()].copy_from_slice(&cb);
    }
    BigUint::from_bytes_le(&bytes)
}

// ------------------------------------------------------------ karatsuba --

/// Full (untruncated) product of two coefficient slices.
fn karatsuba(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    if a.len().min(b.len()) <= NAIVE_CUTOFF {
        return naive(a, b);
    }
    let mid = a.len().max(b.len()) / 2;
    let (a_low, a_high) = split(a, mid);
    let (b_low, b_high) = split(b, mid);

    let z0 = karatsuba(a_low, b_low);
    let z2 = karatsuba(a_high, b_high);
    let z1 = {
        let a_sum = add_slices(a_low, a_high);
        let b_sum = add_slices(b_low, b_high);
        let mut z = karatsuba(&a_sum, &b_sum);
        sub_assign(&mut z, &z0);
        sub_assign(&mut z, &z2);
        z
    };

    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    add_at(&mut out, &z0, 0);
    add_at(&mut out, &z1, mid);
    add_at(&mut out, &z2, 2 * mid);
    out
}

fn naive(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            out[i + j] += x * y;
        }
    }
    out
}

fn split(a: &[Rat], mid: usize) -> (&[Rat], &[Rat]) {
    if a.len() <= mid {
        (a, &[])
    } else {
        a.split_at(mid)
    }
}

fn add_slices(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut out = long.to_vec();
    for (o, s) in out.iter_mut().zip(short) {
        *o += s;
    }
    out
}

fn sub_assign(dst: &mut [Rat], src: &[Rat]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d -= s;
    }
}

fn add_at(dst: &mut [Rat], src: &[Rat], at: usize) {
    for (k, s) in src.iter().enumerate() {
        if !s.is_zero() {
            dst[at + k] += s;
        }
    }
}
