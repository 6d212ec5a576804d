use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::{self, Write as _};

use num_traits::ToPrimitive;

use crate::arith::{binomial, is_prime_power};
use crate::partitions::{unordered_partitions, Partition};

use super::{
    mersenne_candidates, AdmissibleDegree, Body, Growth, OrbitProfile, ProfileError, RowSpec,
};

/// Cap on the raw candidate count of a single (row, degree) enumeration.
pub const MAX_CANDIDATES: u128 = 1_000_000;

/// The discrete parameters of one row variant solving the degree equation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Skeleton {
    pub row: u8,
    /// Index into the row's variants.
    pub variant: usize,
    pub label: String,
    pub a: u64,
    #[cfg_attr(feature = "serde", serde(default, skip_serializing_if = "Option::is_none"))]
    pub b: Option<u32>,
    #[cfg_attr(feature = "serde", serde(default, skip_serializing_if = "Option::is_none"))]
    pub e2: Option<u32>,
    /// `p` in rows 12 and 22, `q` in rows 28–30.
    #[cfg_attr(feature = "serde", serde(default, skip_serializing_if = "Option::is_none"))]
    pub q: Option<u64>,
    #[cfg_attr(feature = "serde", serde(default, skip_serializing_if = "Option::is_none"))]
    pub x_prime: Option<u32>,
}

impl fmt::Display for Skeleton {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.variant)?;
        if !self.label.is_empty() {
            write!(f, "[{}]", self.label)?;
        }
        write!(f, ";a={}", self.a)?;
        if let Some(e2) = self.e2 {
            write!(f, ";e2={e2}")?;
        }
        if let Some(q) = self.q {
            write!(f, ";q={q}")?;
        }
        if let Some(x) = self.x_prime {
            write!(f, ";x'={x}")?;
        }
        Ok(())
    }
}

/// Per tower level, each distinct block partition and how many blocks take it.
pub type BlockChoices = Vec<Vec<(Partition, u64)>>;

/// Free choices on top of a skeleton.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(tag = "kind", content = "value", rename_all = "snake_case"))]
pub enum Choice {
    None,
    /// One partition per partitioned term, in term order.
    Partitions(Vec<Partition>),
    /// Tower rows in factored form: every block choice still open.
    Factored,
    /// Tower rows with choices fixed: per level `i`, (partition, number of blocks).
    Blocks(BlockChoices),
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct RowInstance {
    pub skeleton: Skeleton,
    pub choice: Choice,
}

impl RowInstance {
    /// Serialized assignment used for deterministic tie-breaking.
    pub fn assignment_key(&self) -> String {
        let mut s = alloc::format!("{}", self.skeleton);
        match &self.choice {
            Choice::None => {}
            Choice::Factored => s.push_str(";blocks=open"),
            Choice::Partitions(ps) => {
                for (i, p) in ps.iter().enumerate() {
                    let _ = write!(s, ";P{i}={p}");
                }
            }
            Choice::Blocks(levels) => {
                for (i, level) in levels.iter().enumerate() {
                    let _ = write!(s, ";L{i}=");
                    for (j, (p, c)) in level.iter().enumerate() {
                        if j > 0 {
                            s.push('+');
                        }
                        let _ = write!(s, "{c}x{p}");
                    }
                }
            }
        }
        s
    }
}

impl fmt::Display for RowInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "row {} {}", self.skeleton.row, self.assignment_key())
    }
}

/// `blocks` independent blocks of orbits `unit·πₖ`, `π` a partition of the
/// tower's `parts`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct TowerLevel {
    pub i: u32,
    pub unit: u64,
    pub blocks: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct TowerProfile {
    pub parts: u32,
    pub levels: Vec<TowerLevel>,
}

impl TowerProfile {
    pub fn degree(&self) -> u128 {
        self.levels
            .iter()
            .map(|l| u128::from(l.blocks) * u128::from(l.unit) * u128::from(self.parts))
            .sum()
    }

    pub fn block_choices(&self) -> Result<Vec<Partition>, ProfileError> {
        Ok(unordered_partitions(self.parts)?)
    }

    /// Concrete profile for one choice multiset per level.
    pub fn realize(&self, choices: &[Vec<(Partition, u64)>]) -> Result<OrbitProfile, ProfileError> {
        if choices.len() != self.levels.len() {
            return Err(ProfileError::BadChoice);
        }
        let mut out = OrbitProfile::new();
        for (level, picks) in self.levels.iter().zip(choices) {
            let used: u64 = picks.iter().map(|(_, c)| c).sum();
            if used != level.blocks || picks.iter().any(|(p, _)| p.total() != self.parts) {
                return Err(ProfileError::BadChoice);
            }
            for (p, c) in picks {
                for &x in p.parts() {
                    out.add(level.unit * u64::from(x), *c);
                }
            }
        }
        Ok(out)
    }

    /// Every block at level `i` takes `per_level[i]`.
    pub fn uniform(&self, per_level: &[Partition]) -> Result<(OrbitProfile, BlockChoices), ProfileError> {
        let choices: BlockChoices = self
            .levels
            .iter()
            .zip(per_level)
            .map(|(l, p)| vec![(p.clone(), l.blocks)])
            .collect();
        Ok((self.realize(&choices)?, choices))
    }

    /// All distinct orbit multisets the tower admits. Fails once more than
    /// `cap` are produced.
    pub fn expand(&self, cap: usize) -> Result<Vec<OrbitProfile>, ProfileError> {
        let choices = self.block_choices()?;
        let mut acc: BTreeSet<OrbitProfile> = BTreeSet::from([OrbitProfile::new()]);
        for level in &self.levels {
            let mut level_profiles = BTreeSet::new();
            let mut counts = vec![0u64; choices.len()];
            weak_compositions(level.blocks, 0, &mut counts, &mut |counts| {
                let mut p = OrbitProfile::new();
                for (choice, &c) in choices.iter().zip(counts.iter()) {
                    for &x in choice.parts() {
                        p.add(level.unit * u64::from(x), c);
                    }
                }
                level_profiles.insert(p);
                level_profiles.len() <= cap
            });
            if level_profiles.len() > cap {
                return Err(ProfileError::TooMany { row: 0, count: level_profiles.len() as u128 });
            }
            let mut next = BTreeSet::new();
            for base in &acc {
                for lp in &level_profiles {
                    let mut p = base.clone();
                    p.merge(lp);
                    next.insert(p);
                    if next.len() > cap {
                        return Err(ProfileError::TooMany { row: 0, count: next.len() as u128 });
                    }
                }
            }
            acc = next;
        }
        Ok(acc.into_iter().collect())
    }
}

/// Calls `f` on every vector of nonnegative counts summing to `total`; stops
/// early when `f` returns false.
fn weak_compositions(total: u64, at: usize, counts: &mut Vec<u64>, f: &mut impl FnMut(&[u64]) -> bool) -> bool {
    if at + 1 == counts.len() {
        counts[at] = total;
        let go = f(counts);
        counts[at] = 0;
        return go;
    }
    for c in (0..=total).rev() {
        counts[at] = c;
        if !weak_compositions(total - c, at + 1, counts, f) {
            counts[at] = 0;
            return false;
        }
    }
    counts[at] = 0;
    true
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(tag = "kind", content = "value", rename_all = "snake_case"))]
pub enum Profile {
    Explicit(OrbitProfile),
    Tower(TowerProfile),
}

impl Profile {
    pub fn degree(&self) -> u128 {
        match self {
            Profile::Explicit(p) => p.degree(),
            Profile::Tower(t) => t.degree(),
        }
    }
}

fn central(e2: u32, i: u32) -> Result<u64, ProfileError> {
    let c = binomial(u64::from(e2), u64::from(i))?;
    c.to_u64().ok_or(ProfileError::TooMany { row: 0, count: u128::MAX })
}

/// Degree `coeff · base^e` when it fits and divides `m`.
fn solve_a(m: u64, coeff: u64, base: u64, e: u32) -> Option<u64> {
    let d = base.checked_pow(e)?.checked_mul(coeff)?;
    (m % d == 0).then(|| m / d)
}

/// All parameter skeletons under which `spec`'s degree expression equals `m`.
pub fn skeletons(spec: &RowSpec, m: AdmissibleDegree) -> Vec<Skeleton> {
    let mv = m.get();
    let mut out = Vec::new();
    for (vi, var) in spec.variants.iter().enumerate() {
        let sk = |a: u64| Skeleton {
            row: spec.id,
            variant: vi,
            label: var.label.clone(),
            a,
            b: var.b,
            e2: None,
            q: None,
            x_prime: None,
        };
        match &var.body {
            Body::Partitioned { degree_coeff, .. } => {
                if let Some(a) = solve_a(mv, *degree_coeff, 1, 0) {
                    out.push(sk(a));
                }
            }
            Body::Tower { degree_coeff, e2_min, congruence, .. } => {
                for c in mersenne_candidates(m, *congruence) {
                    for e2 in *e2_min..=c.max_e2 {
                        if let Some(a) = solve_a(mv, *degree_coeff, c.p + 1, e2) {
                            out.push(Skeleton { e2: Some(e2), q: Some(c.p), ..sk(a) });
                        }
                    }
                }
            }
            Body::Binomial { growth, pairs, e2_min } => {
                let ratios: Vec<u64> = match growth {
                    Growth::Fixed { ratio } => vec![*ratio],
                    Growth::Mersenne { congruence } => {
                        mersenne_candidates(m, *congruence).iter().map(|c| c.p).collect()
                    }
                };
                for r in ratios {
                    let base: Option<u64> = pairs.iter().try_fold(0u64, |acc, p| {
                        let term = r.checked_pow(p.q_power)?.checked_mul(p.count)?.checked_mul(p.length)?;
                        acc.checked_add(term)
                    });
                    let Some(base) = base else { continue };
                    let mut e2 = *e2_min;
                    while let Some(d) = (r + 1).checked_pow(e2).and_then(|g| g.checked_mul(base)) {
                        if d > mv {
                            break;
                        }
                        if mv % d == 0 {
                            let q = matches!(growth, Growth::Mersenne { .. }).then_some(r);
                            out.push(Skeleton { e2: Some(e2), q, ..sk(mv / d) });
                        }
                        e2 += 1;
                    }
                }
            }
            Body::ParabolicPair { twist } => {
                for xp in 1..=m.x() {
                    let Some(a) = solve_a(mv, 15, 2, xp) else { continue };
                    let q = twist * (1u64 << xp) - 1;
                    if q >= 5 && q % 2 == 1 && is_prime_power(q).is_some() {
                        out.push(Skeleton { q: Some(q), x_prime: Some(xp), ..sk(a) });
                    }
                }
            }
        }
    }
    out
}

/// Rows of `table` applicable to `m`, each with its nonempty skeleton list.
pub fn rows_for_degree(table: &[RowSpec], m: u64) -> Result<Vec<(&RowSpec, Vec<Skeleton>)>, ProfileError> {
    let m = AdmissibleDegree::new(m)?;
    Ok(table
        .iter()
        .filter_map(|spec| {
            let s = skeletons(spec, m);
            (!s.is_empty()).then_some((spec, s))
        })
        .collect())
}

/// Every distinct profile `spec` admits at degree `m`, each paired with the
/// lexicographically smallest assignment producing it. Tower rows yield one
/// factored profile per skeleton.
pub fn enumerate_profiles(spec: &RowSpec, m: u64) -> Result<Vec<(RowInstance, Profile)>, ProfileError> {
    let deg = AdmissibleDegree::new(m)?;
    let mut best: BTreeMap<Profile, RowInstance> = BTreeMap::new();
    let mut offer = |inst: RowInstance, prof: Profile| -> Result<(), ProfileError> {
        let got = prof.degree();
        if got != u128::from(m) {
            return Err(ProfileError::DegreeMismatch { row: spec.id, expected: m, got });
        }
        match best.get(&prof) {
            Some(old) if old.assignment_key() <= inst.assignment_key() => {}
            _ => {
                best.insert(prof, inst);
            }
        }
        Ok(())
    };
    for sk in skeletons(spec, deg) {
        for (inst, prof) in instantiate(spec, &sk)? {
            offer(inst, prof)?;
        }
    }
    let mut out: Vec<(RowInstance, Profile)> = best.into_iter().map(|(p, i)| (i, p)).collect();
    out.sort_by_cached_key(|(i, _)| i.assignment_key());
    Ok(out)
}

/// Profiles of one skeleton, unchecked against any degree. The skeleton may
/// be hand-built, e.g. with a Mersenne parameter the degree solver would skip.
pub fn instantiate(spec: &RowSpec, sk: &Skeleton) -> Result<Vec<(RowInstance, Profile)>, ProfileError> {
    let variant = spec.variants.get(sk.variant).ok_or(ProfileError::BadChoice)?;
    let mut out = Vec::new();
    let a = sk.a;
    match &variant.body {
        Body::Partitioned { terms, .. } => {
            let families: Vec<Vec<Partition>> = terms
                .iter()
                .filter_map(|t| t.parts)
                .map(unordered_partitions)
                .collect::<Result<_, _>>()?;
            let count: u128 = families.iter().map(|f| f.len() as u128).product();
            if count > MAX_CANDIDATES {
                return Err(ProfileError::TooMany { row: spec.id, count });
            }
            for flat in 0..count as usize {
                // mixed-radix digits of `flat` pick one partition per family
                let mut rest = flat;
                let picks: Vec<&Partition> = families
                    .iter()
                    .map(|f| {
                        let p = &f[rest % f.len()];
                        rest /= f.len();
                        p
                    })
                    .collect();
                let mut prof = OrbitProfile::new();
                let mut fam = picks.iter();
                for t in terms {
                    let len = t.coeff * a;
                    match t.parts {
                        None => prof.add(len, 1),
                        Some(_) => {
                            for &x in fam.next().map(|p| p.parts()).unwrap_or_default() {
                                prof.add(len * u64::from(x), 1);
                            }
                        }
                    }
                }
                let choice = if picks.is_empty() {
                    Choice::None
                } else {
                    Choice::Partitions(picks.into_iter().cloned().collect())
                };
                out.push((RowInstance { skeleton: sk.clone(), choice }, Profile::Explicit(prof)));
            }
        }
        Body::Tower { length_coeff, parts, .. } => {
            let (e2, p) = (sk.e2.unwrap_or(0), sk.q.unwrap_or(0));
            let levels = (0..=e2)
                .map(|i| {
                    Ok(TowerLevel { i, unit: length_coeff * p.pow(i) * a, blocks: central(e2, i)? })
                })
                .collect::<Result<Vec<_>, ProfileError>>()?;
            let tower = TowerProfile { parts: *parts, levels };
            out.push((RowInstance { skeleton: sk.clone(), choice: Choice::Factored }, Profile::Tower(tower)));
        }
        Body::Binomial { growth, pairs, .. } => {
            let e2 = sk.e2.unwrap_or(0);
            let r = match growth {
                Growth::Fixed { ratio } => *ratio,
                Growth::Mersenne { .. } => sk.q.unwrap_or(1),
            };
            let mut prof = OrbitProfile::new();
            for pr in pairs {
                for i in 0..=e2 {
                    let len = pr.length * r.pow(pr.q_power) * r.pow(i);
                    prof.add(len, a * pr.count * central(e2, i)?);
                }
            }
            out.push((RowInstance { skeleton: sk.clone(), choice: Choice::None }, Profile::Explicit(prof)));
        }
        Body::ParabolicPair { twist } => {
            let q = sk.q.unwrap_or(0);
            let r = 15 / twist;
            let prof = OrbitProfile::from_pairs([(a * q * r, 1), (a * r, 1)]);
            out.push((RowInstance { skeleton: sk.clone(), choice: Choice::None }, Profile::Explicit(prof)));
        }
    }
    Ok(out)
}
