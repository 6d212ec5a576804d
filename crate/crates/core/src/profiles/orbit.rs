use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

/// Multiset of orbit lengths: length → multiplicity.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(from = "Vec<(u64, u64)>", into = "Vec<(u64, u64)>"))]
pub struct OrbitProfile {
    lengths: BTreeMap<u64, u64>,
}

impl OrbitProfile {
    pub fn new() -> Self {
        OrbitProfile::default()
    }

    /// Zero multiplicities are dropped; repeated lengths accumulate.
    pub fn from_pairs<I: IntoIterator<Item = (u64, u64)>>(pairs: I) -> Self {
        let mut p = OrbitProfile::new();
        for (len, mult) in pairs {
            p.add(len, mult);
        }
        p
    }

    pub fn add(&mut self, length: u64, multiplicity: u64) {
        if multiplicity > 0 {
            *self.lengths.entry(length).or_insert(0) += multiplicity;
        }
    }

    pub fn merge(&mut self, other: &OrbitProfile) {
        for (&len, &mult) in &other.lengths {
            self.add(len, mult);
        }
    }

    pub fn is_empty(&self) -> bool {
        self.lengths.is_empty()
    }

    pub fn multiplicity(&self, length: u64) -> u64 {
        self.lengths.get(&length).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.lengths.iter().map(|(&l, &m)| (l, m))
    }

    pub fn orbit_count(&self) -> u128 {
        self.lengths.values().map(|&m| u128::from(m)).sum()
    }

    /// `Σ length · multiplicity`.
    pub fn degree(&self) -> u128 {
        self.lengths.iter().map(|(&l, &m)| u128::from(l) * u128::from(m)).sum()
    }

    pub fn scale_lengths(&self, factor: u64) -> OrbitProfile {
        OrbitProfile::from_pairs(self.iter().map(|(l, m)| (l * factor, m)))
    }

    pub fn scale_multiplicities(&self, factor: u64) -> OrbitProfile {
        OrbitProfile::from_pairs(self.iter().map(|(l, m)| (l, m * factor)))
    }
}

impl fmt::Display for OrbitProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (l, m)) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{l}:{m}")?;
        }
        write!(f, "}}")
    }
}

impl FromIterator<(u64, u64)> for OrbitProfile {
    fn from_iter<I: IntoIterator<Item = (u64, u64)>>(iter: I) -> Self {
        OrbitProfile::from_pairs(iter)
    }
}

impl From<Vec<(u64, u64)>> for OrbitProfile {
    fn from(pairs: Vec<(u64, u64)>) -> Self {
        OrbitProfile::from_pairs(pairs)
    }
}

impl From<OrbitProfile> for Vec<(u64, u64)> {
    fn from(p: OrbitProfile) -> Self {
        p.iter().collect()
    }
}
