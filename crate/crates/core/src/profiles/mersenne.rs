use alloc::vec::Vec;
use core::fmt;

use crate::arith::is_prime;

use super::AdmissibleDegree;

/// Side condition on a Mersenne prime `p` appearing in a row's notes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum Congruence {
    None,
    /// `3 | p − 1`
    Three,
    /// `5 | p − 1`
    Five,
    /// `15 | p − 1`
    Fifteen,
}

impl Congruence {
    pub fn divisor(self) -> u64 {
        match self {
            Congruence::None => 1,
            Congruence::Three => 3,
            Congruence::Five => 5,
            Congruence::Fifteen => 15,
        }
    }

    pub fn holds(self, p: u64) -> bool {
        (p - 1) % self.divisor() == 0
    }
}

impl fmt::Display for Congruence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Congruence::None => write!(f, "none"),
            c => write!(f, "{} | p-1", c.divisor()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct MersenneCandidate {
    pub u: u32,
    /// `2^u − 1`
    pub p: u64,
    /// Largest `e₂` with `(p + 1)^e₂` dividing the 2-part of `m`.
    pub max_e2: u32,
}

/// Mersenne primes `p = 2^u − 1` with `p + 1` dividing the 2-part `2^k` of
/// `m` and satisfying `congruence`.
///
/// `p = 3` is never returned: `L₂(3)` is soluble, so it cannot be the
/// nonabelian section behind any of the Mersenne rows.
pub fn mersenne_candidates(m: AdmissibleDegree, congruence: Congruence) -> Vec<MersenneCandidate> {
    let k = m.x();
    (3..=k.min(63))
        .filter(|&u| is_prime(u64::from(u)))
        .map(|u| (u, (1u64 << u) - 1))
        .filter(|&(_, p)| is_prime(p) && congruence.holds(p))
        .map(|(u, p)| MersenneCandidate { u, p, max_e2: k / u })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn deg(m: u64) -> AdmissibleDegree {
        AdmissibleDegree::new(m).unwrap()
    }

    #[test]
    fn five_divides_case() {
        let c = mersenne_candidates(deg((1 << 16) * 5), Congruence::Five);
        let us: Vec<u32> = c.iter().map(|c| c.u).collect();
        assert_eq!(us, [5, 13]);
        assert_eq!(c[0].max_e2, 3);
        assert_eq!(c[1].max_e2, 1);
    }

    #[test]
    fn too_small_two_part() {
        assert!(mersenne_candidates(deg(8 * 15), Congruence::Fifteen).is_empty());
        let c = mersenne_candidates(deg(32 * 15), Congruence::Fifteen);
        assert_eq!(c, [MersenneCandidate { u: 5, p: 31, max_e2: 1 }]);
    }

    #[test]
    fn unconstrained() {
        let ps: Vec<u64> = mersenne_candidates(deg(1 << 20), Congruence::None).iter().map(|c| c.p).collect();
        assert_eq!(ps, [7, 31, 127, 8191, 131071, 524287]);
        let ps: Vec<u64> = mersenne_candidates(deg(1 << 20), Congruence::Three).iter().map(|c| c.p).collect();
        assert_eq!(ps, [7, 31, 127, 8191, 131071, 524287]);
    }
}
