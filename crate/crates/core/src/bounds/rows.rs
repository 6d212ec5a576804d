use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::arith::ExactRational;
use crate::partitions::Partition;
use crate::profiles::{enumerate_profiles, Choice, OrbitProfile, Profile, RowInstance, RowSpec, TowerProfile};

use super::calculus::{closed_form, esol_sum_cached, has_closed_form, ClosedFormParams, EsolCache};
use super::BoundError;

/// `Fidelity` routes rows 12, 22 and 24–30 through the 2-part closed forms;
/// `Sharp` uses `E_sol` sums for every row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum Mode {
    #[default]
    Fidelity,
    Sharp,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Fidelity => "fidelity",
            Mode::Sharp => "sharp",
        })
    }
}

impl FromStr for Mode {
    type Err = BoundError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "fidelity" => Ok(Mode::Fidelity),
            "sharp" => Ok(Mode::Sharp),
            _ => Err(BoundError::UnknownMode(s.into())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum Route {
    EsolSum,
    ClosedForm,
}

/// Largest partial sum a row admits at one degree, with the instance attaining it.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct RowMaximum {
    pub row: u8,
    pub partial: ExactRational,
    pub route: Route,
    pub witness: RowInstance,
    /// Explicit orbit lengths of the witness.
    pub profile: OrbitProfile,
}

fn params(inst: &RowInstance) -> ClosedFormParams {
    let sk = &inst.skeleton;
    ClosedFormParams { a: sk.a, b: sk.b.unwrap_or(0), e2: sk.e2.unwrap_or(0) }
}

/// Best partition per level under `score`, fixed across the level's blocks.
fn best_uniform<F>(tower: &TowerProfile, mut score: F) -> Result<(ExactRational, Vec<Partition>), BoundError>
where
    F: FnMut(u64) -> Result<ExactRational, BoundError>,
{
    let choices = tower.block_choices()?;
    let mut total = ExactRational::zero();
    let mut picks = Vec::new();
    for level in &tower.levels {
        let mut best: Option<(ExactRational, &Partition)> = None;
        for pi in &choices {
            let mut v = ExactRational::zero();
            for &x in pi.parts() {
                v += &score(level.unit * u64::from(x))?;
            }
            if best.as_ref().map_or(true, |(b, _)| v > *b) {
                best = Some((v, pi));
            }
        }
        let (v, pi) = best.expect("every positive integer has a partition");
        total += &(v * ExactRational::from_integer(level.blocks));
        picks.push(pi.clone());
    }
    Ok((total, picks))
}

pub fn row_maximum(spec: &RowSpec, m: u64, mode: Mode) -> Result<Option<RowMaximum>, BoundError> {
    row_maximum_cached(spec, m, mode, &mut EsolCache::new())
}

/// `None` when the row does not apply to `m`. Ties keep the instance with
/// the smallest assignment key.
pub fn row_maximum_cached(
    spec: &RowSpec,
    m: u64,
    mode: Mode,
    cache: &mut EsolCache,
) -> Result<Option<RowMaximum>, BoundError> {
    let closed = mode == Mode::Fidelity && has_closed_form(spec.id);
    let route = if closed { Route::ClosedForm } else { Route::EsolSum };
    let mut best: Option<RowMaximum> = None;
    for (inst, prof) in enumerate_profiles(spec, m)? {
        let (partial, witness, profile) = match prof {
            Profile::Explicit(p) => {
                let v = if closed {
                    ExactRational::from_integer(closed_form(spec.id, params(&inst), 0)?)
                } else {
                    esol_sum_cached(&p, cache)?
                };
                (v, inst, p)
            }
            Profile::Tower(t) => {
                let (v, picks) = if closed {
                    let (_, picks) = best_uniform(&t, |s| {
                        Ok(ExactRational::from_integer(crate::arith::p_part(s, 2)?))
                    })?;
                    (ExactRational::from_integer(closed_form(spec.id, params(&inst), 0)?), picks)
                } else {
                    best_uniform(&t, |s| cache.get(s))?
                };
                let (profile, blocks) = t.uniform(&picks)?;
                let witness = RowInstance { skeleton: inst.skeleton, choice: Choice::Blocks(blocks) };
                (v, witness, profile)
            }
        };
        if best.as_ref().map_or(true, |b| partial > b.partial) {
            best = Some(RowMaximum { row: spec.id, partial, route, witness, profile });
        }
    }
    Ok(best)
}

/// Recompute a row maximum's partial sum from its witness alone.
pub fn reevaluate(max: &RowMaximum) -> Result<ExactRational, BoundError> {
    match max.route {
        Route::EsolSum => esol_sum_cached(&max.profile, &mut EsolCache::new()),
        Route::ClosedForm => Ok(ExactRational::from_integer(closed_form(max.row, params(&max.witness), 0)?)),
    }
}
