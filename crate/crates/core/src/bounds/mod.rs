//! The `E_sol` bound calculus, per-row maxima and the inductive verifier for
//! the two exceptional degree families.

mod calculus;
mod pipeline;
mod rows;

use alloc::string::String;
use core::fmt;

use crate::arith::ArithError;
use crate::profiles::{AdmissibleDegree, ProfileError};

pub use calculus::{
    closed_form, combine, esol_sum, esol_sum_cached, has_closed_form, tower_two_part_max, two_part_sum,
    ClosedFormParams, EsolCache,
};
pub use pipeline::{
    default_seeds, pipeline, verify_families, BoundCertificate, Chain, Family, FamilyRun, QuotientCandidate, QuotientSource,
    SeedConstant, Verdict, INCONSISTENT_THRESHOLD_QUOTE, REFERENCE_TOTALS,
};
pub use rows::{reevaluate, row_maximum, row_maximum_cached, Mode, Route, RowMaximum};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoundError {
    Arith(ArithError),
    Profile(ProfileError),
    EmptyProfile,
    Overflow,
    NoClosedForm(u8),
    UnknownMode(String),
    /// Not of the form `2^x·5` (`17 ≤ x ≤ 26`) or `2^x·15` (`15 ≤ x ≤ 35`).
    OutsideFamilies(u64),
    /// Neither a seed nor an earlier certificate covers this quotient degree.
    MissingQuotientBound { degree: u64 },
    NoApplicableRow(u64),
    BadSeed { degree: u64, bound: u64 },
}

fn shape(n: u64) -> String {
    use alloc::string::ToString;
    AdmissibleDegree::new(n).map(|d| d.to_string()).unwrap_or_else(|_| n.to_string())
}

impl fmt::Display for BoundError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundError::Arith(e) => write!(f, "{e}"),
            BoundError::Profile(e) => write!(f, "{e}"),
            BoundError::EmptyProfile => write!(f, "orbit profile is empty"),
            BoundError::Overflow => write!(f, "bound overflows 64 bits"),
            BoundError::NoClosedForm(r) => write!(f, "row {r} has no closed form"),
            BoundError::UnknownMode(m) => write!(f, "unknown mode {m:?} (expected fidelity or sharp)"),
            BoundError::OutsideFamilies(n) => {
                write!(f, "{n} is not 2^x·5 with 17 <= x <= 26 or 2^x·15 with 15 <= x <= 35")
            }
            BoundError::MissingQuotientBound { degree } => {
                write!(f, "no quotient bound for degree {} ({degree}); supply a seed", shape(*degree))
            }
            BoundError::NoApplicableRow(m) => write!(f, "no table row applies to degree {m}"),
            BoundError::BadSeed { degree, bound } => write!(f, "invalid seed {bound} for degree {degree}"),
        }
    }
}

impl core::error::Error for BoundError {}

impl From<ArithError> for BoundError {
    fn from(e: ArithError) -> Self {
        BoundError::Arith(e)
    }
}

impl From<ProfileError> for BoundError {
    fn from(e: ProfileError) -> Self {
        BoundError::Profile(e)
    }
}
