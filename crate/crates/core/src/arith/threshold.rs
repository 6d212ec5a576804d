//! `⌊(√3/2)·n / √log₂ n⌋` without floating point.
//!
//! `log₂ n` is enclosed in a rational interval built from fixed-point
//! `atanh` series with explicit truncation bounds. The floor is accepted once
//! both interval ends give the same integer square root; otherwise the
//! precision is doubled.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use super::ArithError;

pub const DEFAULT_PRECISION_BITS: u32 = 64;
pub const MAX_PRECISION_BITS: u32 = 1 << 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ThresholdEval {
    pub value: u64,
    /// Working precision at which the enclosure separated.
    pub bits: u32,
}

pub fn threshold(n: u64) -> Result<u64, ArithError> {
    threshold_from(n, DEFAULT_PRECISION_BITS).map(|e| e.value)
}

/// Evaluate starting at `start_bits` of precision, doubling until decided.
pub fn threshold_from(n: u64, start_bits: u32) -> Result<ThresholdEval, ArithError> {
    if n < 2 {
        return Err(ArithError::ThresholdDomain(n));
    }
    let mut bits = start_bits.max(8);
    loop {
        if let Some(value) = decide(n, bits) {
            return Ok(ThresholdEval { value, bits });
        }
        if bits >= MAX_PRECISION_BITS {
            return Err(ArithError::PrecisionExhausted { n, bits });
        }
        bits = (bits * 2).min(MAX_PRECISION_BITS);
    }
}

/// Fraction `num/den` with positive parts.
struct Frac {
    num: BigUint,
    den: BigUint,
}

fn decide(n: u64, bits: u32) -> Option<u64> {
    let (lo, hi) = log2_enclosure(n, bits);
    // v² = 3n² / (4·log₂ n); floor(√x) = floor(√⌊x⌋)
    let three_n2 = BigUint::from(n) * BigUint::from(n) * 3u32;
    let v_lo = ((&three_n2 * &hi.den) / (&hi.num * 4u32)).sqrt();
    let v_hi = ((&three_n2 * &lo.den) / (&lo.num * 4u32)).sqrt();
    if v_lo == v_hi {
        v_lo.to_u64()
    } else {
        None
    }
}

/// Rational bounds `lo ≤ log₂ n ≤ hi`; exact when `n` is a power of two.
fn log2_enclosure(n: u64, bits: u32) -> (Frac, Frac) {
    let k = n.trailing_zeros();
    let m = n >> k;
    let j = 63 - m.leading_zeros();
    let whole = BigUint::from(k + j);
    let low_part = m - (1u64 << j);
    if low_part == 0 {
        let one = BigUint::one();
        return (
            Frac { num: whole.clone(), den: one.clone() },
            Frac { num: whole, den: one },
        );
    }
    // log₂(m / 2^j) = atanh(t) / atanh(1/3), t = (m − 2^j)/(m + 2^j) < 1/3
    let (t_lo, t_hi) = atanh_scaled(low_part, m + (1u64 << j), bits);
    let (l_lo, l_hi) = atanh_scaled(1, 3, bits);
    let lo = Frac { num: &whole * &l_hi + t_lo, den: l_hi.clone() };
    let hi = Frac { num: &whole * &l_lo + t_hi, den: l_lo };
    (lo, hi)
}

/// `2^bits · atanh(num/den)` enclosed by integers, for `0 < num/den ≤ 1/3`.
fn atanh_scaled(num: u64, den: u64, bits: u32) -> (BigUint, BigUint) {
    let scale = BigUint::one() << bits;
    let num = BigUint::from(num);
    let den = BigUint::from(den);
    let num2 = &num * &num;
    let den2 = &den * &den;
    let mut p_num = num;
    let mut p_den = den;
    let mut sum = BigUint::zero();
    let mut terms = 0u64;
    let mut i = 0u64;
    loop {
        // floor(scale · t^(2i+1) / (2i+1)), each short of the truth by < 1
        sum += (&scale * &p_num) / (&p_den * (2 * i + 1));
        terms += 1;
        p_num *= &num2;
        p_den *= &den2;
        i += 1;
        // stop once scale · t^(2i+1) < 1; the tail is then below
        // t^(2i+1)/(1 − t²) ≤ 9/8 units
        if &scale * &p_num < p_den {
            break;
        }
    }
    let hi = &sum + terms + 2u32;
    (sum, hi)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_values() {
        assert_eq!(threshold((1 << 17) * 5).unwrap(), 129117);
        assert_eq!(threshold((1 << 15) * 15).unwrap(), 97895);
        assert_eq!(threshold((1 << 17) * 15).unwrap(), 372380);
    }

    #[test]
    fn exact_integer_boundary_at_powers_of_two() {
        // (√3/2)·8/√3 = 4 exactly
        assert_eq!(threshold(8).unwrap(), 4);
        // (√3/2)·2/1 = √3
        assert_eq!(threshold(2).unwrap(), 1);
        // n = 2^12: √3/2 · 4096 / √12 = 1024
        assert_eq!(threshold(4096).unwrap(), 1024);
    }

    #[test]
    fn rejects_small_n() {
        assert_eq!(threshold(1), Err(ArithError::ThresholdDomain(1)));
        assert_eq!(threshold(0), Err(ArithError::ThresholdDomain(0)));
    }

    #[test]
    fn stable_when_precision_doubles() {
        for n in [3u64, 5, 48, 327680, (1 << 35) * 15, (1 << 40) - 87] {
            let e = threshold_from(n, 16).unwrap();
            let again = threshold_from(n, e.bits * 2).unwrap();
            assert_eq!(e.value, again.value, "{n}");
        }
    }

    #[test]
    fn enclosure_contains_known_logs() {
        // log₂ 3 = 1.584962500721156...; compare against 10^15-scaled bounds
        let (lo, hi) = log2_enclosure(3, 96);
        let s = BigUint::from(10u64.pow(15));
        assert!(&lo.num * &s <= BigUint::from(1_584_962_500_721_157u64) * &lo.den);
        assert!(&hi.num * &s >= BigUint::from(1_584_962_500_721_156u64) * &hi.den);
    }
}
