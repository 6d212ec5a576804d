use alloc::vec;
use alloc::vec::Vec;

use crate::profiles::OrbitProfile;

use super::{GroupError, PermGroup, Permutation};

/// Right cosets `Hg` of `H` in `G`, each represented by its smallest element.
#[derive(Debug, Clone)]
pub struct CosetSpace<'a> {
    group: &'a PermGroup,
    /// Coset id of every element of `group`, in element order.
    coset_of: Vec<u32>,
    /// Element index of each coset's representative.
    reps: Vec<usize>,
}

impl<'a> CosetSpace<'a> {
    pub fn new(group: &'a PermGroup, subgroup: &PermGroup) -> Result<Self, GroupError> {
        if !subgroup.is_subgroup_of(group) {
            return Err(GroupError::NotSubgroup);
        }
        let mut coset_of = vec![u32::MAX; group.order()];
        let mut reps = Vec::with_capacity(group.order() / subgroup.order());
        // Elements are sorted, so the first unassigned one is the smallest of its coset.
        for (gi, g) in group.elements().iter().enumerate() {
            if coset_of[gi] != u32::MAX {
                continue;
            }
            let id = reps.len() as u32;
            reps.push(gi);
            for h in subgroup.elements() {
                let hg = h.then(g);
                let k = group.index_of(&hg).ok_or(GroupError::NotSubgroup)?;
                coset_of[k] = id;
            }
        }
        Ok(CosetSpace { group, coset_of, reps })
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn representative(&self, coset: usize) -> &Permutation {
        &self.group.elements()[self.reps[coset]]
    }

    /// `Hg·s`
    pub fn act(&self, coset: usize, s: &Permutation) -> usize {
        let gs = self.representative(coset).then(s);
        let k = self.group.index_of(&gs).expect("acting element lies in the group");
        self.coset_of[k] as usize
    }

    /// Orbit lengths of the group generated by `gens` acting on the cosets.
    pub fn orbits_under(&self, gens: &[Permutation]) -> OrbitProfile {
        let mut seen = vec![false; self.len()];
        let mut out = OrbitProfile::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut stack = vec![start];
            let mut size = 0u64;
            while let Some(c) = stack.pop() {
                size += 1;
                for s in gens {
                    let d = self.act(c, s);
                    if !seen[d] {
                        seen[d] = true;
                        stack.push(d);
                    }
                }
            }
            out.add(size, 1);
        }
        out
    }
}

/// Orbit lengths of `S` on the right cosets of `H` in `G`.
pub fn subgroup_orbits_on_cosets(g: &PermGroup, h: &PermGroup, s: &PermGroup) -> Result<OrbitProfile, GroupError> {
    if !s.is_subgroup_of(g) {
        return Err(GroupError::NotSubgroup);
    }
    let space = CosetSpace::new(g, h)?;
    Ok(space.orbits_under(s.generators()))
}
