use alloc::collections::BTreeMap;
use core::fmt;

use super::{ArithError, MAX_INPUT};

/// A positive integer stored as its prime factorization. The empty map is 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FactoredInteger {
    factors: BTreeMap<u64, u32>,
}

impl FactoredInteger {
    pub fn one() -> Self {
        FactoredInteger { factors: BTreeMap::new() }
    }

    pub fn factors(&self) -> &BTreeMap<u64, u32> {
        &self.factors
    }

    pub fn value(&self) -> u64 {
        self.factors.iter().map(|(&p, &r)| p.pow(r)).product()
    }

    pub fn exponent(&self, p: u64) -> u32 {
        self.factors.get(&p).copied().unwrap_or(0)
    }

    pub fn omega(&self) -> u64 {
        self.factors.values().map(|&r| u64::from(r)).sum()
    }

    pub fn omega1(&self) -> u64 {
        self.factors.iter().map(|(&p, &r)| p * u64::from(r)).sum()
    }

    pub fn k_value(&self) -> u64 {
        self.factors.iter().map(|(&p, &r)| (p - 1) * u64::from(r)).sum()
    }
}

impl fmt::Display for FactoredInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (i, (p, r)) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, "·")?;
            }
            if *r == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{r}")?;
            }
        }
        Ok(())
    }
}

/// Trial division; inputs are capped at [`MAX_INPUT`] so this is instant.
pub fn factorize(s: u64) -> Result<FactoredInteger, ArithError> {
    if s == 0 {
        return Err(ArithError::Zero);
    }
    if s > MAX_INPUT {
        return Err(ArithError::TooLarge(s));
    }
    let mut factors = BTreeMap::new();
    let mut rest = s;
    let twos = rest.trailing_zeros();
    if twos > 0 {
        factors.insert(2, twos);
        rest >>= twos;
    }
    let mut d = 3u64;
    while d * d <= rest {
        let mut r = 0;
        while rest % d == 0 {
            rest /= d;
            r += 1;
        }
        if r > 0 {
            factors.insert(d, r);
        }
        d += 2;
    }
    if rest > 1 {
        *factors.entry(rest).or_insert(0) += 1;
    }
    Ok(FactoredInteger { factors })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_factorizations() {
        assert!(factorize(1).unwrap().factors().is_empty());
        let f = factorize(12).unwrap();
        assert_eq!(f.exponent(2), 2);
        assert_eq!(f.exponent(3), 1);
        assert_eq!(f.factors().len(), 2);
        let f = factorize(81920).unwrap();
        assert_eq!(f.exponent(2), 14);
        assert_eq!(f.exponent(5), 1);
        assert_eq!(f.value(), 81920);
    }

    #[test]
    fn rejects_zero_and_oversized() {
        assert_eq!(factorize(0), Err(ArithError::Zero));
        assert_eq!(factorize(MAX_INPUT + 1), Err(ArithError::TooLarge(MAX_INPUT + 1)));
        assert!(factorize(MAX_INPUT).is_ok());
    }

    #[test]
    fn large_prime_survives() {
        // 2^40 - 87 is the largest prime below 2^40
        let p = (1u64 << 40) - 87;
        let f = factorize(p).unwrap();
        assert_eq!(f.exponent(p), 1);
    }

    #[test]
    fn display_uses_exponents() {
        assert_eq!(alloc::format!("{}", factorize(81920).unwrap()), "2^14·5");
        assert_eq!(alloc::format!("{}", factorize(1).unwrap()), "1");
    }
}
