//! Integer partitions and compositions.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

pub const MAX_PARTITION_TOTAL: u32 = 64;
pub const MAX_COMPOSITION_TOTAL: u32 = 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PartitionError {
    Zero,
    TooLarge { n: u32, max: u32 },
    NotPartition,
}

impl fmt::Display for PartitionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PartitionError::Zero => write!(f, "cannot partition 0"),
            PartitionError::TooLarge { n, max } => write!(f, "{n} is above the supported maximum {max}"),
            PartitionError::NotPartition => write!(f, "parts must be positive and non-increasing"),
        }
    }
}

impl core::error::Error for PartitionError {}

/// Non-increasing list of positive parts.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(try_from = "Vec<u32>", into = "Vec<u32>"))]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self, PartitionError> {
        if parts.is_empty() || parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartitionError::NotPartition);
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn total(&self) -> u32 {
        self.parts.iter().sum()
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = PartitionError;
    fn try_from(parts: Vec<u32>) -> Result<Self, Self::Error> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All partitions of `n`, largest first part first: `(4), (3,1), (2,2), (2,1,1), (1,1,1,1)`.
pub fn unordered_partitions(n: u32) -> Result<Vec<Partition>, PartitionError> {
    if n == 0 {
        return Err(PartitionError::Zero);
    }
    if n > MAX_PARTITION_TOTAL {
        return Err(PartitionError::TooLarge { n, max: MAX_PARTITION_TOTAL });
    }
    let mut out = Vec::new();
    let mut stack = Vec::new();
    extend(n, n, &mut stack, &mut out);
    Ok(out)
}

fn extend(rest: u32, cap: u32, stack: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition { parts: stack.clone() });
        return;
    }
    for part in (1..=cap.min(rest)).rev() {
        stack.push(part);
        extend(rest - part, part, stack, out);
        stack.pop();
    }
}

/// All `2^(n−1)` ordered tuples of positive integers summing to `n`.
pub fn compositions(n: u32) -> Result<Vec<Vec<u32>>, PartitionError> {
    if n == 0 {
        return Err(PartitionError::Zero);
    }
    if n > MAX_COMPOSITION_TOTAL {
        return Err(PartitionError::TooLarge { n, max: MAX_COMPOSITION_TOTAL });
    }
    // bit i of the mask set = cut after position i+1
    let mut out = Vec::with_capacity(1 << (n - 1));
    for mask in 0u32..(1 << (n - 1)) {
        let mut tuple = vec![];
        let mut run = 1;
        for i in 0..n - 1 {
            if mask & (1 << i) != 0 {
                tuple.push(run);
                run = 1;
            } else {
                run += 1;
            }
        }
        tuple.push(run);
        out.push(tuple);
    }
    Ok(out)
}
