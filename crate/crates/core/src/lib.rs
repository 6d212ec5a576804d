//! Verification kernel for generator bounds of transitive permutation groups
//! whose degree has the shape `2^x·3^y·5^z` with `y, z ≤ 1`.
//!
//! Everything here is pure computation over `alloc`: the `E_sol` calculus and
//! threshold evaluation ([`arith`]), partition enumeration ([`partitions`]),
//! the orbit-length table and its profile generator ([`profiles`]), a
//! brute-force permutation-group oracle ([`permgrp`]) and the inductive bound
//! pipeline ([`bounds`]). File formats and the command line live in the
//! companion `transgen-cli` crate.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod arith;
pub mod bounds;
pub mod partitions;
pub mod permgrp;
pub mod profiles;

pub use arith::{ExactRational, FactoredInteger};
pub use profiles::OrbitProfile;
