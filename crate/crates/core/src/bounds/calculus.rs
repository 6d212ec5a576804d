use alloc::collections::BTreeMap;

use crate::arith::{e_sol, p_part, ExactRational};
use crate::profiles::{OrbitProfile, TowerProfile};

use super::BoundError;

/// Memo of `E_sol(s, 2)`; the pipeline asks for the same lengths many times.
#[derive(Debug, Default, Clone)]
pub struct EsolCache {
    values: BTreeMap<u64, ExactRational>,
}

impl EsolCache {
    pub fn new() -> Self {
        EsolCache::default()
    }

    pub fn get(&mut self, s: u64) -> Result<ExactRational, BoundError> {
        if let Some(v) = self.values.get(&s) {
            return Ok(v.clone());
        }
        let v = e_sol(s, 2)?;
        self.values.insert(s, v.clone());
        Ok(v)
    }
}

/// `Σ multiplicity · E_sol(length, 2)`.
pub fn esol_sum(profile: &OrbitProfile) -> Result<ExactRational, BoundError> {
    esol_sum_cached(profile, &mut EsolCache::new())
}

pub fn esol_sum_cached(profile: &OrbitProfile, cache: &mut EsolCache) -> Result<ExactRational, BoundError> {
    let mut acc = ExactRational::zero();
    for (len, mult) in profile.iter() {
        acc += &(cache.get(len)? * ExactRational::from_integer(mult));
    }
    Ok(acc)
}

/// `Σ E_sol(sᵢ, 2) + d(G^Σ)` for a profile and a quotient bound.
pub fn combine(profile: &OrbitProfile, quotient_bound: u64) -> Result<ExactRational, BoundError> {
    if profile.is_empty() {
        return Err(BoundError::EmptyProfile);
    }
    Ok(esol_sum(profile)? + ExactRational::from_integer(quotient_bound))
}

/// `Σ multiplicity · (length)₂`, the coarser bound behind the closed forms.
pub fn two_part_sum(profile: &OrbitProfile) -> Result<u128, BoundError> {
    let mut acc = 0u128;
    for (len, mult) in profile.iter() {
        acc += u128::from(p_part(len, 2)?) * u128::from(mult);
    }
    Ok(acc)
}

/// Largest `Σ (length)₂ · multiplicity` over all block choices of a tower.
pub fn tower_two_part_max(tower: &TowerProfile) -> Result<u128, BoundError> {
    let choices = tower.block_choices()?;
    let mut acc = 0u128;
    for level in &tower.levels {
        let mut best = 0u128;
        for pi in &choices {
            let mut v = 0u128;
            for &x in pi.parts() {
                v += u128::from(p_part(level.unit * u64::from(x), 2)?);
            }
            best = best.max(v);
        }
        acc += best * u128::from(level.blocks);
    }
    Ok(acc)
}

/// Parameters read by the closed forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClosedFormParams {
    pub a: u64,
    pub b: u32,
    pub e2: u32,
}

/// The 2-part closed form `d(G) ≤ f(a, b, e₂) + d(G^Σ)` for rows 12, 22 and 24–30.
pub fn closed_form(row: u8, params: ClosedFormParams, quotient_bound: u64) -> Result<u64, BoundError> {
    let ClosedFormParams { a, b, e2 } = params;
    let pow2 = |k: u32| 1u64.checked_shl(k).filter(|_| k < 64);
    let overflow = BoundError::Overflow;
    let partial = match row {
        12 => pow2(e2 + b + 1).and_then(|p| p.checked_mul(a)),
        22 => pow2(e2 + b + 2).and_then(|p| p.checked_mul(a)),
        24 => pow2(e2).and_then(|p| p.checked_mul(54 * a)),
        25 => pow2(e2).and_then(|p| p.checked_mul(10 * a)),
        26 => pow2(e2).and_then(|p| p.checked_mul(3 * a)),
        27 => {
            if b > 4 {
                return Err(overflow);
            }
            pow2(e2 + 4 - b).and_then(|p| p.checked_mul(a))
        }
        // four orbit families per level: a, 2a and a orbits of odd length
        28 => pow2(e2).and_then(|p| p.checked_mul(4 * a)),
        29 => pow2(e2).and_then(|p| p.checked_mul(a)),
        30 => a.checked_mul(2),
        _ => return Err(BoundError::NoClosedForm(row)),
    };
    partial.and_then(|p| p.checked_add(quotient_bound)).ok_or(overflow)
}

pub fn has_closed_form(row: u8) -> bool {
    matches!(row, 12 | 22 | 24..=30)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(pairs: &[(u64, u64)]) -> OrbitProfile {
        OrbitProfile::from_pairs(pairs.iter().copied())
    }

    #[test]
    fn checkpoint_combinations() {
        let c = combine(&p(&[((1 << 15) * 5, 2)]), 65538).unwrap();
        assert_eq!(c, ExactRational::new(493097, 4));
        assert_eq!(c.floor_u64(), Some(123274));
        assert_eq!(combine(&p(&[((1 << 14) * 5, 4)]), 65538).unwrap(), ExactRational::from_integer(126313));
        let c = combine(&p(&[((1 << 14) * 5, 1), ((1 << 14) * 15, 1)]), 65538).unwrap();
        assert_eq!(c.floor_u64(), Some(97115));
        assert_eq!(combine(&p(&[(5, 2048), (155, 2048)]), 65538).unwrap(), ExactRational::from_integer(69634));
        assert_eq!(combine(&OrbitProfile::new(), 1), Err(BoundError::EmptyProfile));
    }

    #[test]
    fn closed_form_examples() {
        let cf = |row, a, b, e2, q| closed_form(row, ClosedFormParams { a, b, e2 }, q).unwrap();
        assert_eq!(cf(12, 1, 0, 1, 0), 4);
        assert_eq!(cf(30, 3, 0, 0, 10), 16);
        assert_eq!(cf(24, 1, 0, 2, 0), 216);
        assert_eq!(cf(27, 1, 1, 0, 0), 8);
        assert_eq!(closed_form(7, ClosedFormParams { a: 1, b: 0, e2: 0 }, 0), Err(BoundError::NoClosedForm(7)));
    }

    #[test]
    fn two_parts() {
        assert_eq!(two_part_sum(&p(&[(12, 2), (5, 3)])).unwrap(), 11);
    }
}
