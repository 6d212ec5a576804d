use crate::profiles::OrbitProfile;

use super::{CosetSpace, GroupError, PermGroup};

/// Orbit lengths of `S₁ × … × S_e` on a product of coset spaces: every
/// product of one length per factor, multiplicities multiplied. The empty
/// product is the one-point space `{1:1}`.
pub fn product_orbit_law(profiles: &[OrbitProfile]) -> OrbitProfile {
    profiles.iter().fold(OrbitProfile::from_pairs([(1, 1)]), |acc, p| {
        let mut out = OrbitProfile::new();
        for (la, ma) in acc.iter() {
            for (lb, mb) in p.iter() {
                out.add(la * lb, ma * mb);
            }
        }
        out
    })
}

/// Passing from `P = P₁ × … × P_e` to a subdirect `H` of index `n` in `P`
/// multiplies every orbit length by `n`. Valid only under
/// [`subdirect_hypothesis`].
pub fn subdirect_orbit_law(base: &OrbitProfile, index: u64) -> OrbitProfile {
    base.scale_lengths(index)
}

/// Does `(S ∩ Pˣ)[Pˣ, Pˣ] = Pˣ` hold for every `x ∈ G`?
///
/// One `x` per right coset `Px` suffices, since `Pˣ` depends only on that
/// coset.
pub fn subdirect_hypothesis(g: &PermGroup, p: &PermGroup, s: &PermGroup) -> Result<bool, GroupError> {
    if !p.is_subgroup_of(g) || !s.is_subgroup_of(g) {
        return Err(GroupError::NotSubgroup);
    }
    let space = CosetSpace::new(g, p)?;
    for c in 0..space.len() {
        let px = p.conjugate(space.representative(c))?;
        let derived = px.derived_subgroup()?;
        if !s.intersection(&px).product_equals(&derived, &px) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_law_examples() {
        let a = OrbitProfile::from_pairs([(5, 1)]);
        assert_eq!(product_orbit_law(core::slice::from_ref(&a)), a);
        let x = OrbitProfile::from_pairs([(1, 1), (5, 1)]);
        let y = OrbitProfile::from_pairs([(1, 2), (10, 1)]);
        assert_eq!(
            product_orbit_law(&[x, y]),
            OrbitProfile::from_pairs([(1, 2), (10, 1), (5, 2), (50, 1)])
        );
    }

    #[test]
    fn product_law_folds_binomially() {
        let base = OrbitProfile::from_pairs([(1, 1), (7, 1)]);
        let four = product_orbit_law(&[base.clone(), base.clone(), base.clone(), base]);
        let want = OrbitProfile::from_pairs([(1, 1), (7, 4), (49, 6), (343, 4), (2401, 1)]);
        assert_eq!(four, want);
    }

    #[test]
    fn subdirect_scaling() {
        assert_eq!(
            subdirect_orbit_law(&OrbitProfile::from_pairs([(5, 4)]), 2),
            OrbitProfile::from_pairs([(10, 4)])
        );
        let p = OrbitProfile::from_pairs([(5, 2), (25, 2)]);
        assert_eq!(subdirect_orbit_law(&p, 1), p);
    }
}
