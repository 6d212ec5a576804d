use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::{GroupError, Permutation};

pub const DEFAULT_CAP: usize = 200_000;

/// A permutation group with every element materialized, sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
}

/// Generated group, by breadth-first closure under right multiplication.
pub fn closure(generators: &[Permutation], degree: usize, cap: usize) -> Result<PermGroup, GroupError> {
    if generators.iter().any(|g| g.degree() != degree) {
        return Err(GroupError::DegreeMismatch);
    }
    let id = Permutation::identity(degree);
    let mut seen = BTreeSet::from([id.clone()]);
    let mut frontier = alloc::vec![id];
    while let Some(x) = frontier.pop() {
        for g in generators {
            let y = x.then(g);
            if !seen.contains(&y) {
                if seen.len() >= cap {
                    return Err(GroupError::CapExceeded { cap });
                }
                seen.insert(y.clone());
                frontier.push(y);
            }
        }
    }
    Ok(PermGroup { degree, generators: generators.to_vec(), elements: seen.into_iter().collect() })
}

impl PermGroup {
    pub fn generate(generators: &[Permutation], degree: usize) -> Result<Self, GroupError> {
        closure(generators, degree, DEFAULT_CAP)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Sorted ascending; the identity comes first.
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn index_of(&self, g: &Permutation) -> Option<usize> {
        self.elements.binary_search(g).ok()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.index_of(g).is_some()
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.generators.iter().all(|g| other.contains(g))
    }

    /// Subgroup generated by `gens`, checked to lie in `self`.
    pub fn subgroup(&self, gens: &[Permutation]) -> Result<PermGroup, GroupError> {
        if gens.iter().any(|g| g.degree() != self.degree || !self.contains(g)) {
            return Err(GroupError::NotSubgroup);
        }
        closure(gens, self.degree, self.order())
    }

    pub fn conjugate(&self, x: &Permutation) -> Result<PermGroup, GroupError> {
        let gens: Vec<Permutation> = self.generators.iter().map(|g| g.conjugate_by(x)).collect();
        closure(&gens, self.degree, self.order())
    }

    /// Subgroup generated by all commutators `[a, b] = a⁻¹b⁻¹ab`.
    pub fn derived_subgroup(&self) -> Result<PermGroup, GroupError> {
        let mut comms = BTreeSet::new();
        for a in &self.elements {
            for b in &self.elements {
                comms.insert(a.inverse().then(&b.inverse()).then(a).then(b));
            }
        }
        let gens: Vec<Permutation> = comms.into_iter().collect();
        closure(&gens, self.degree, self.order())
    }

    pub fn intersection(&self, other: &PermGroup) -> PermGroup {
        let elements: Vec<Permutation> = self.elements.iter().filter(|g| other.contains(g)).cloned().collect();
        PermGroup { degree: self.degree, generators: elements.clone(), elements }
    }

    /// Is the product set `self·other` exactly `target`?
    pub fn product_equals(&self, other: &PermGroup, target: &PermGroup) -> bool {
        if self.order() * other.order() < target.order() {
            return false;
        }
        let mut prod = BTreeSet::new();
        for a in &self.elements {
            for b in &other.elements {
                let c = a.then(b);
                if !target.contains(&c) {
                    return false;
                }
                prod.insert(c);
            }
        }
        prod.len() == target.order()
    }
}

/// `A × B` acting on the disjoint union of the two point sets.
pub fn direct_product(a: &PermGroup, b: &PermGroup, cap: usize) -> Result<PermGroup, GroupError> {
    let gens = product_generators(a.generators(), a.degree(), b.generators(), b.degree())?;
    closure(&gens, a.degree() + b.degree(), cap)
}

/// Generators `(g, 1)` and `(1, h)` for the direct product.
pub fn product_generators(
    a: &[Permutation],
    deg_a: usize,
    b: &[Permutation],
    deg_b: usize,
) -> Result<Vec<Permutation>, GroupError> {
    let (ia, ib) = (Permutation::identity(deg_a), Permutation::identity(deg_b));
    let mut gens = Vec::new();
    for g in a {
        gens.push(g.direct_sum(&ib)?);
    }
    for h in b {
        gens.push(ia.direct_sum(h)?);
    }
    Ok(gens)
}
