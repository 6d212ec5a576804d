use alloc::vec::Vec;
use core::fmt;

use super::GroupError;

/// Largest supported degree; points are stored as `u8`.
pub const MAX_DEGREE: usize = 256;

/// A bijection of `{0, …, n−1}` in image notation.
///
/// Products act on the right: `i^(gh) = (i^g)^h`, so `g.then(&h)` applies `g`
/// first.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(try_from = "Vec<u16>", into = "Vec<u16>"))]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn new(images: Vec<u16>) -> Result<Self, GroupError> {
        let n = images.len();
        if n == 0 || n > MAX_DEGREE {
            return Err(GroupError::BadDegree(n));
        }
        let mut seen = [false; MAX_DEGREE];
        for &i in &images {
            let i = usize::from(i);
            if i >= n || seen[i] {
                return Err(GroupError::NotBijection);
            }
            seen[i] = true;
        }
        Ok(Permutation { images: images.into_iter().map(|i| i as u8).collect() })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).map(|i| i as u8).collect() }
    }

    /// Build from disjoint cycles; points not mentioned are fixed.
    pub fn from_cycles(n: usize, cycles: &[&[u16]]) -> Result<Self, GroupError> {
        let mut images: Vec<u16> = (0..n as u16).collect();
        let mut touched = [false; MAX_DEGREE];
        for cycle in cycles {
            for (k, &p) in cycle.iter().enumerate() {
                let q = cycle[(k + 1) % cycle.len()];
                if usize::from(p) >= n || usize::from(q) >= n || touched[usize::from(p)] {
                    return Err(GroupError::NotBijection);
                }
                touched[usize::from(p)] = true;
                images[usize::from(p)] = q;
            }
        }
        Permutation::new(images)
    }

    /// Permutation `i ↦ f(i)` on `n` points.
    pub fn from_fn(n: usize, f: impl Fn(usize) -> usize) -> Result<Self, GroupError> {
        Permutation::new((0..n).map(|i| f(i) as u16).collect())
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        usize::from(self.images[i])
    }

    pub fn images(&self) -> impl Iterator<Item = u16> + '_ {
        self.images.iter().map(|&i| u16::from(i))
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| usize::from(j) == i)
    }

    /// `self` followed by `other`. Degrees must agree.
    pub fn then(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation { images: self.images.iter().map(|&i| other.images[usize::from(i)]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = alloc::vec![0u8; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[usize::from(j)] = i as u8;
        }
        Permutation { images: inv }
    }

    /// `x⁻¹·self·x`
    pub fn conjugate_by(&self, x: &Permutation) -> Permutation {
        x.inverse().then(self).then(x)
    }

    pub fn pow(&self, k: u32) -> Permutation {
        (0..k).fold(Permutation::identity(self.degree()), |acc, _| acc.then(self))
    }

    /// Action of `(self, other)` on the disjoint union of their point sets,
    /// `other`'s points shifted up by `self.degree()`.
    pub fn direct_sum(&self, other: &Permutation) -> Result<Permutation, GroupError> {
        let shift = self.degree();
        let images = self
            .images()
            .chain(other.images().map(|i| i + shift as u16))
            .collect();
        Permutation::new(images)
    }

    pub fn is_even(&self) -> bool {
        let mut seen = alloc::vec![false; self.degree()];
        let mut transpositions = 0;
        for start in 0..self.degree() {
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.apply(i);
                len += 1;
            }
            if len > 0 {
                transpositions += len - 1;
            }
        }
        transpositions % 2 == 0
    }
}

impl TryFrom<Vec<u16>> for Permutation {
    type Error = GroupError;
    fn try_from(v: Vec<u16>) -> Result<Self, Self::Error> {
        Permutation::new(v)
    }
}

impl From<Permutation> for Vec<u16> {
    fn from(p: Permutation) -> Vec<u16> {
        p.images().collect()
    }
}

/// Cycle notation, `()` for the identity.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "()");
        }
        let mut seen = alloc::vec![false; self.degree()];
        for start in 0..self.degree() {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            write!(f, "(")?;
            let mut i = start;
            let mut first = true;
            while !seen[i] {
                seen[i] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{i}")?;
                first = false;
                i = self.apply(i);
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}
