use num_bigint::{BigInt, BigUint};
use num_traits::One;

use super::{factorize, is_prime, ArithError, ExactRational};

pub fn omega(s: u64) -> Result<u64, ArithError> {
    Ok(factorize(s)?.omega())
}

pub fn omega1(s: u64) -> Result<u64, ArithError> {
    Ok(factorize(s)?.omega1())
}

/// `K(s) = Σ rᵢ(pᵢ − 1)` over the factorization `s = Π pᵢ^rᵢ`.
pub fn k_value(s: u64) -> Result<u64, ArithError> {
    Ok(factorize(s)?.k_value())
}

pub fn binomial(n: u64, k: u64) -> Result<BigUint, ArithError> {
    if k > n {
        return Err(ArithError::BinomialRange { n, k });
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    // acc = C(n - k + i, i) after step i, always an integer
    for i in 1..=k {
        acc *= n - k + i;
        acc /= i;
    }
    Ok(acc)
}

/// `ws(s) = s / 2^K(s) · C(K(s), ⌊K(s)/2⌋)`.
pub fn ws(s: u64) -> Result<ExactRational, ArithError> {
    let k = factorize(s)?.k_value();
    let c = binomial(k, k / 2)?;
    let numer = BigInt::from(c) * BigInt::from(s);
    let denom = BigInt::one() << k;
    Ok(ExactRational::new(numer, denom))
}

pub fn p_part(s: u64, p: u64) -> Result<u64, ArithError> {
    if !is_prime(p) {
        return Err(ArithError::NotPrime(p));
    }
    let f = factorize(s)?;
    Ok(p.pow(f.exponent(p)))
}

/// `E_sol(s, p) = min(ws(s), s_p)`.
pub fn e_sol(s: u64, p: u64) -> Result<ExactRational, ArithError> {
    let part = ExactRational::from_integer(p_part(s, p)?);
    let w = ws(s)?;
    Ok(if w < part { w } else { part })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: u64, d: u64) -> ExactRational {
        ExactRational::new(n, d)
    }

    #[test]
    fn statistics_of_small_values() {
        assert_eq!(k_value(1).unwrap(), 0);
        assert_eq!(omega(12).unwrap(), 3);
        assert_eq!(omega1(12).unwrap(), 7);
        assert_eq!(k_value(12).unwrap(), 4);
        assert_eq!(k_value((1 << 13) * 5).unwrap(), 17);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(0, 0).unwrap(), BigUint::from(1u32));
        assert_eq!(binomial(17, 8).unwrap(), BigUint::from(24310u32));
        assert_eq!(binomial(34, 17).unwrap(), BigUint::from(2333606220u64));
        assert_eq!(binomial(3, 4), Err(ArithError::BinomialRange { n: 3, k: 4 }));
    }

    #[test]
    fn ws_values() {
        assert_eq!(ws(1).unwrap(), r(1, 1));
        assert_eq!(ws(5).unwrap(), r(15, 8));
        assert_eq!(ws((1 << 14) * 5).unwrap(), r(60775, 4));
    }

    #[test]
    fn p_parts() {
        assert_eq!(p_part(12, 2).unwrap(), 4);
        assert_eq!(p_part(12, 5).unwrap(), 1);
        assert_eq!(p_part((1 << 14) * 15, 2).unwrap(), 16384);
        assert_eq!(p_part(12, 4), Err(ArithError::NotPrime(4)));
        assert_eq!(p_part(12, 1), Err(ArithError::NotPrime(1)));
    }

    #[test]
    fn e_sol_values() {
        assert_eq!(e_sol(1, 2).unwrap(), r(1, 1));
        assert_eq!(e_sol(5, 2).unwrap(), r(1, 1));
        assert_eq!(e_sol((1 << 15) * 5, 2).unwrap(), r(230945, 8));
        assert_eq!(e_sol((1 << 14) * 15, 2).unwrap(), r(16384, 1));
        assert_eq!(ws((1 << 14) * 15).unwrap(), r(692835, 16));
    }
}
