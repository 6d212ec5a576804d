use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul};
use core::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};

/// Reduced fraction over unbounded integers. Ordering is exact
/// (cross-multiplication), never via floating point.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactRational(BigRational);

impl ExactRational {
    pub fn zero() -> Self {
        ExactRational(BigRational::zero())
    }

    pub fn from_integer<T: Into<BigInt>>(n: T) -> Self {
        ExactRational(BigRational::from_integer(n.into()))
    }

    /// Panics on a zero denominator.
    pub fn new<N: Into<BigInt>, D: Into<BigInt>>(numer: N, denom: D) -> Self {
        ExactRational(BigRational::new(numer.into(), denom.into()))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn floor(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    /// Floor as `u64`, `None` when negative or out of range.
    pub fn floor_u64(&self) -> Option<u64> {
        self.floor().to_u64()
    }

    /// Decimal rendering with `digits` significant digits, `%g` style.
    pub fn to_decimal(&self, digits: u32) -> String {
        decimal(&self.0, digits.max(1))
    }
}

impl fmt::Display for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseRationalError;

impl fmt::Display for ParseRationalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "expected an integer or a fraction `p/q` with q > 0")
    }
}

impl core::error::Error for ParseRationalError {}

impl FromStr for ExactRational {
    type Err = ParseRationalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n, d),
            None => (s, "1"),
        };
        let n: BigInt = n.trim().parse().map_err(|_| ParseRationalError)?;
        let d: BigInt = d.trim().parse().map_err(|_| ParseRationalError)?;
        if !d.is_positive() {
            return Err(ParseRationalError);
        }
        Ok(ExactRational::new(n, d))
    }
}

impl Add for ExactRational {
    type Output = ExactRational;
    fn add(self, rhs: ExactRational) -> ExactRational {
        ExactRational(self.0 + rhs.0)
    }
}

impl<'a> Add<&'a ExactRational> for &'a ExactRational {
    type Output = ExactRational;
    fn add(self, rhs: &ExactRational) -> ExactRational {
        ExactRational(&self.0 + &rhs.0)
    }
}

impl AddAssign<&ExactRational> for ExactRational {
    fn add_assign(&mut self, rhs: &ExactRational) {
        self.0 += &rhs.0;
    }
}

impl Mul for ExactRational {
    type Output = ExactRational;
    fn mul(self, rhs: ExactRational) -> ExactRational {
        ExactRational(self.0 * rhs.0)
    }
}

impl<'a> Mul<&'a ExactRational> for &'a ExactRational {
    type Output = ExactRational;
    fn mul(self, rhs: &ExactRational) -> ExactRational {
        ExactRational(&self.0 * &rhs.0)
    }
}

impl core::iter::Sum for ExactRational {
    fn sum<I: Iterator<Item = ExactRational>>(iter: I) -> Self {
        iter.fold(ExactRational::zero(), |acc, x| acc + x)
    }
}

fn pow10(e: u32) -> BigInt {
    Pow::pow(BigInt::from(10u32), e)
}

fn digits_of(n: &BigUint) -> u32 {
    n.to_str_radix(10).len() as u32
}

fn decimal(x: &BigRational, digits: u32) -> String {
    if x.is_zero() {
        return String::from("0");
    }
    let neg = x.is_negative();
    let a = x.abs();
    // e = floor(log10 a)
    let int_part = a.floor().to_integer();
    let mut e: i64 = if int_part.is_zero() {
        let mut e = 0i64;
        let mut y = a.clone();
        while y < BigRational::one() {
            y *= BigRational::from_integer(BigInt::from(10u32));
            e -= 1;
        }
        e
    } else {
        i64::from(digits_of(int_part.magnitude())) - 1
    };
    let shift = i64::from(digits) - 1 - e;
    let scaled = if shift >= 0 {
        &a * BigRational::from_integer(pow10(shift as u32))
    } else {
        &a / BigRational::from_integer(pow10((-shift) as u32))
    };
    // round half up
    let two = BigInt::from(2u32);
    let mut m = (scaled.numer() * &two + scaled.denom()).div_floor(&(scaled.denom() * &two));
    if digits_of(m.magnitude()) > digits {
        m /= BigInt::from(10u32);
        e += 1;
    }
    let body: Vec<u8> = m.magnitude().to_str_radix(10).into_bytes();
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    let d = body.len() as i64;
    if e >= i64::from(digits) || e < -4 {
        out.push(body[0] as char);
        let tail = trim_zeros(&body[1..]);
        if !tail.is_empty() {
            out.push('.');
            out.push_str(tail);
        }
        out.push('e');
        out.push_str(&alloc::format!("{e}"));
    } else if e >= 0 {
        let point = (e + 1) as usize;
        out.push_str(core::str::from_utf8(&body[..point]).unwrap_or("?"));
        let tail = trim_zeros(&body[point..]);
        if !tail.is_empty() {
            out.push('.');
            out.push_str(tail);
        }
    } else {
        out.push_str("0.");
        for _ in 0..(-e - 1) {
            out.push('0');
        }
        out.push_str(trim_zeros(&body[..d as usize]));
    }
    out
}

fn trim_zeros(b: &[u8]) -> &str {
    let mut end = b.len();
    while end > 0 && b[end - 1] == b'0' {
        end -= 1;
    }
    core::str::from_utf8(&b[..end]).unwrap_or("?")
}


/// Serialized as the exact `"n/d"` string.
#[cfg(feature = "serde")]
impl serde::Serialize for ExactRational {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[cfg(feature = "serde")]
impl<'de> serde::Deserialize<'de> for ExactRational {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = <alloc::borrow::Cow<'de, str>>::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> ExactRational {
        ExactRational::new(n, d)
    }

    #[test]
    fn reduces_and_orders() {
        assert_eq!(r(30, 16), r(15, 8));
        assert!(r(15, 8) > ExactRational::from_integer(1));
        assert!(r(230945, 8) < ExactRational::from_integer(32768));
        assert_eq!(r(493097, 4).floor_u64(), Some(123274));
    }

    #[test]
    fn display_and_parse_round_trip() {
        for x in [r(15, 8), r(60775, 1), r(-7, 3), ExactRational::zero()] {
            let s = alloc::format!("{x}");
            assert_eq!(s.parse::<ExactRational>().unwrap(), x);
        }
        assert!("1/0".parse::<ExactRational>().is_err());
        assert!("x".parse::<ExactRational>().is_err());
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(r(230945, 8).to_decimal(6), "28868.1");
        assert_eq!(r(15, 8).to_decimal(6), "1.875");
        assert_eq!(r(60775, 4).to_decimal(6), "15193.8");
        assert_eq!(r(493097, 4).to_decimal(6), "123274");
        assert_eq!(ExactRational::from_integer(2333606220u64).to_decimal(6), "2.33361e9");
        assert_eq!(r(1, 3).to_decimal(6), "0.333333");
        assert_eq!(r(999999, 1000000).to_decimal(3), "1");
        assert_eq!(r(-1, 8).to_decimal(6), "-0.125");
        assert_eq!(r(1, 100000).to_decimal(2), "1e-5");
    }
}
