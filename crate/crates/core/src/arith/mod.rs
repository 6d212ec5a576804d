//! Exact arithmetic: factorizations, the `K`/`ω`/`ω₁`/`ws`/`E_sol` calculus,
//! binomials, primality and the correctly floored threshold.

mod esol;
mod factor;
mod primes;
mod rational;
mod threshold;

use core::fmt;

pub use esol::{binomial, e_sol, k_value, omega, omega1, p_part, ws};
pub use factor::{factorize, FactoredInteger};
pub use primes::{is_prime, is_prime_power};
pub use rational::ExactRational;
pub use threshold::{threshold, threshold_from, ThresholdEval, MAX_PRECISION_BITS};

/// Largest integer accepted by [`factorize`] and everything built on it.
pub const MAX_INPUT: u64 = 1 << 40;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ArithError {
    Zero,
    TooLarge(u64),
    NotPrime(u64),
    BinomialRange { n: u64, k: u64 },
    ThresholdDomain(u64),
    /// Precision escalation hit [`MAX_PRECISION_BITS`] without separating the
    /// value from an integer boundary.
    PrecisionExhausted { n: u64, bits: u32 },
}

impl fmt::Display for ArithError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArithError::Zero => write!(f, "expected a positive integer, got 0"),
            ArithError::TooLarge(s) => write!(f, "{s} exceeds the input cap 2^40"),
            ArithError::NotPrime(p) => write!(f, "{p} is not prime"),
            ArithError::BinomialRange { n, k } => write!(f, "binomial({n}, {k}) needs k <= n"),
            ArithError::ThresholdDomain(n) => write!(f, "threshold needs n >= 2, got {n}"),
            ArithError::PrecisionExhausted { n, bits } => {
                write!(f, "threshold({n}) undecided at {bits} bits of precision")
            }
        }
    }
}

impl core::error::Error for ArithError {}
