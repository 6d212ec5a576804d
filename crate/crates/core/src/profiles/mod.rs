//! Orbit-length profiles of the soluble subgroup `F` for degrees
//! `m = 2^x·3^y·5^z` with `y, z ≤ 1`.

mod enumerate;
mod mersenne;
mod orbit;
mod table;

use core::fmt;

use crate::arith::{factorize, ArithError};
use crate::partitions::PartitionError;

pub use enumerate::{
    enumerate_profiles, instantiate, rows_for_degree, skeletons, BlockChoices, Choice, Profile, RowInstance, Skeleton, TowerLevel,
    TowerProfile, MAX_CANDIDATES,
};
pub use mersenne::{mersenne_candidates, Congruence, MersenneCandidate};
pub use orbit::OrbitProfile;
pub use table::{
    builtin_rows, Body, Family, Growth, OrbitPair, RowSpec, Term, Variant, ROW_COUNT, TABLE_VERSION,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProfileError {
    /// `m` is not of the form `2^x·3^y·5^z` with `y, z ≤ 1`, or `m < 2`.
    Inadmissible(u64),
    Arith(ArithError),
    Partition(PartitionError),
    /// The Cartesian product of choices for a row exceeds [`MAX_CANDIDATES`].
    TooMany { row: u8, count: u128 },
    /// An emitted profile failed the degree re-summation check.
    DegreeMismatch { row: u8, expected: u64, got: u128 },
    UnknownRow(u8),
    /// Level choices passed to a tower do not match its block counts.
    BadChoice,
}

impl fmt::Display for ProfileError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProfileError::Inadmissible(m) => {
                write!(f, "degree {m} is not of the form 2^x·3^y·5^z with y, z <= 1 and m >= 2")
            }
            ProfileError::Arith(e) => write!(f, "{e}"),
            ProfileError::Partition(e) => write!(f, "{e}"),
            ProfileError::TooMany { row, count } => {
                write!(f, "row {row}: {count} candidate profiles exceeds the cap {MAX_CANDIDATES}")
            }
            ProfileError::DegreeMismatch { row, expected, got } => {
                write!(f, "row {row}: profile sums to {got}, expected {expected}")
            }
            ProfileError::UnknownRow(r) => write!(f, "no row {r} in the table"),
            ProfileError::BadChoice => write!(f, "block choices do not match the tower's block counts"),
        }
    }
}

impl core::error::Error for ProfileError {}

impl From<ArithError> for ProfileError {
    fn from(e: ArithError) -> Self {
        ProfileError::Arith(e)
    }
}

impl From<PartitionError> for ProfileError {
    fn from(e: PartitionError) -> Self {
        ProfileError::Partition(e)
    }
}

/// A degree `2^x·3^y·5^z` with `y, z ∈ {0, 1}` and value at least 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AdmissibleDegree(u64);

impl AdmissibleDegree {
    pub fn new(m: u64) -> Result<Self, ProfileError> {
        if m < 2 {
            return Err(ProfileError::Inadmissible(m));
        }
        let f = factorize(m)?;
        let ok = f.factors().iter().all(|(&p, &e)| p == 2 || ((p == 3 || p == 5) && e == 1));
        if !ok {
            return Err(ProfileError::Inadmissible(m));
        }
        Ok(AdmissibleDegree(m))
    }

    pub fn get(self) -> u64 {
        self.0
    }

    /// Exponent of 2.
    pub fn x(self) -> u32 {
        self.0.trailing_zeros()
    }

    pub fn y(self) -> u32 {
        u32::from(self.0 % 3 == 0)
    }

    pub fn z(self) -> u32 {
        u32::from(self.0 % 5 == 0)
    }
}

impl TryFrom<u64> for AdmissibleDegree {
    type Error = ProfileError;
    fn try_from(m: u64) -> Result<Self, Self::Error> {
        AdmissibleDegree::new(m)
    }
}

impl fmt::Display for AdmissibleDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let odd = self.0 >> self.x();
        match (self.x(), odd) {
            (0, o) => write!(f, "{o}"),
            (x, 1) => write!(f, "2^{x}"),
            (x, o) => write!(f, "2^{x}·{o}"),
        }
    }
}
