//! Brute-force permutation groups: explicit closure, right-coset actions and
//! the orbit-combination laws they certify.

mod cosets;
mod fixtures;
mod group;
mod laws;
mod perm;

use alloc::string::String;
use core::fmt;

pub use cosets::{subgroup_orbits_on_cosets, CosetSpace};
pub use fixtures::{
    a5_d10, a5_generators, a6_d10, a6_generators, a8_generators, build_fixture, builtin_fixtures, f8_frobenius,
    f8_singer, f8_translation, f8_transvection, l2_generators, Fixture, FixtureSpec, GroupSpec, Suite,
};
pub use group::{closure, direct_product, product_generators, PermGroup, DEFAULT_CAP};
pub use laws::{product_orbit_law, subdirect_hypothesis, subdirect_orbit_law};
pub use perm::{Permutation, MAX_DEGREE};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupError {
    BadDegree(usize),
    NotBijection,
    DegreeMismatch,
    /// Closure would exceed this many elements.
    CapExceeded { cap: usize },
    NotSubgroup,
    WrongOrder { what: String, expected: usize, got: usize },
    UnknownFixture(String),
    UnknownSuite(String),
}

impl fmt::Display for GroupError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupError::BadDegree(n) => write!(f, "degree {n} outside 1..={MAX_DEGREE}"),
            GroupError::NotBijection => write!(f, "images do not form a bijection"),
            GroupError::DegreeMismatch => write!(f, "generators act on different degrees"),
            GroupError::CapExceeded { cap } => write!(f, "group closure exceeded {cap} elements"),
            GroupError::NotSubgroup => write!(f, "subgroup generators do not lie in the group"),
            GroupError::WrongOrder { what, expected, got } => write!(f, "{what}: expected order {expected}, got {got}"),
            GroupError::UnknownFixture(n) => write!(f, "unknown fixture {n:?}"),
            GroupError::UnknownSuite(n) => write!(f, "unknown suite {n:?}"),
        }
    }
}

impl core::error::Error for GroupError {}
