//! Certified sign of real elements of Q(ζ₂₄).
//!
//! A real element equals Σ cₖ cos(kπ/12); after clearing the factor 4 it becomes
//! A + B√2 + C√3 + D√6 with integer A..D. Each root is enclosed in a dyadic
//! interval and the precision doubles until the enclosure misses zero.

use std::cmp::Ordering;
use std::sync::OnceLock;

use num_bigint::{BigInt, Sign as BigSign};
use num_traits::{Signed, Zero};

use super::Cyclo;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn as_ordering(self) -> Ordering {
        match self {
            Sign::Negative => Ordering::Less,
            Sign::Zero => Ordering::Equal,
            Sign::Positive => Ordering::Greater,
        }
    }
}

const DEFAULT_CAP_BITS: u64 = 1 << 16;
const START_BITS: u64 = 64;

/// Refinement cap in bits, read once from `CRH_PRECISION_BITS`.
pub fn precision_cap() -> u64 {
    static CAP: OnceLock<u64> = OnceLock::new();
    *CAP.get_or_init(|| {
        std::env::var("CRH_PRECISION_BITS")
            .ok()
            .and_then(|v| v.trim().parse::<u64>().ok())
            .filter(|&b| b >= START_BITS)
            .unwrap_or(DEFAULT_CAP_BITS)
    })
}

/// Integer coordinates (A, B, C, D) with 4·den·a = A + B√2 + C√3 + D√6.
fn surd_coords(a: &Cyclo) -> [BigInt; 4] {
    let (n, _) = a.raw();
    let a0 = &n[0] * 4 + &n[4] * 2;
    let b = &n[1] + &n[3] * 2 - &n[5] + &n[7];
    let c = &n[2] * 2;
    let d = &n[1] + &n[5] - &n[7];
    [a0, b, c, d]
}

fn sqrt_bounds(n: u32, bits: u64) -> (BigInt, BigInt) {
    let scaled = BigInt::from(n) << (2 * bits);
    let lo = scaled.sqrt();
    let hi = &lo + 1;
    (lo, hi)
}

fn sign_of_surd_sum(coords: &[BigInt; 4], cap: u64) -> Result<Sign> {
    if coords[1..].iter().all(Zero::is_zero) {
        return Ok(from_big(&coords[0]));
    }
    let mut bits = START_BITS;
    loop {
        let mut lo = &coords[0] << bits;
        let mut hi = lo.clone();
        for (c, n) in coords[1..].iter().zip([2u32, 3, 6]) {
            if c.is_zero() {
                continue;
            }
            let (r_lo, r_hi) = sqrt_bounds(n, bits);
            if c.is_positive() {
                lo += c * &r_lo;
                hi += c * &r_hi;
            } else {
                lo += c * &r_hi;
                hi += c * &r_lo;
            }
        }
        if lo.is_positive() {
            return Ok(Sign::Positive);
        }
        if hi.is_negative() {
            return Ok(Sign::Negative);
        }
        if bits >= cap {
            return Err(Error::PrecisionExhausted { bits });
        }
        bits = (bits * 2).min(cap);
    }
}

fn from_big(n: &BigInt) -> Sign {
    match n.sign() {
        BigSign::Minus => Sign::Negative,
        BigSign::NoSign => Sign::Zero,
        BigSign::Plus => Sign::Positive,
    }
}

/// Sign of a real element; errors on non-real input.
pub fn sign_real(a: &Cyclo) -> Result<Sign> {
    sign_real_with_cap(a, precision_cap())
}

pub fn sign_real_with_cap(a: &Cyclo, cap_bits: u64) -> Result<Sign> {
    if !a.is_real() {
        return Err(Error::NotReal(a.to_string()));
    }
    if a.is_zero() {
        return Ok(Sign::Zero);
    }
    // The shared denominator is positive, so it does not affect the sign.
    sign_of_surd_sum(&surd_coords(a), cap_bits)
}

/// Total order on real elements.
pub fn cmp_real(a: &Cyclo, b: &Cyclo) -> Result<Ordering> {
    Ok(sign_real(&(a - b))?.as_ordering())
}
