//! Named `(G, H, S)` triples with their expected `S`-orbit lengths on `H\G`.
//!
//! Subgroups are given by explicit generators. Points of the `A₈` fixtures
//! are vectors of `F₂³ = F₂[x]/(x³+x+1)` written as integers `b₀ + 2b₁ + 4b₂`;
//! points of `L₂(q)` are `F_q ∪ {∞}` with `∞ = q`.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::profiles::OrbitProfile;

use super::{closure, product_generators, GroupError, PermGroup, Permutation, DEFAULT_CAP};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum Suite {
    A5,
    A6,
    A5sq,
    A8,
    L2,
}

impl Suite {
    pub const ALL: [Suite; 5] = [Suite::A5, Suite::A6, Suite::A5sq, Suite::A8, Suite::L2];

    pub fn name(self) -> &'static str {
        match self {
            Suite::A5 => "a5",
            Suite::A6 => "a6",
            Suite::A5sq => "a5sq",
            Suite::A8 => "a8",
            Suite::L2 => "l2",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = GroupError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| GroupError::UnknownSuite(s.to_string()))
    }
}

/// Generators and the order they must produce.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct GroupSpec {
    pub generators: Vec<Permutation>,
    pub order: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct FixtureSpec {
    pub name: String,
    pub suite: Suite,
    pub degree: usize,
    /// Human label of the subgroup `H`, e.g. `(A3xA3).2`.
    pub label: String,
    pub group: GroupSpec,
    pub subgroup: GroupSpec,
    pub acting: GroupSpec,
    pub expected: OrbitProfile,
}

#[derive(Debug, Clone)]
pub struct Fixture {
    pub spec: FixtureSpec,
    pub g: PermGroup,
    pub h: PermGroup,
    pub s: PermGroup,
}

impl GroupSpec {
    fn build(&self, degree: usize, what: &str) -> Result<PermGroup, GroupError> {
        let g = closure(&self.generators, degree, DEFAULT_CAP)?;
        if g.order() != self.order {
            return Err(GroupError::WrongOrder { what: what.to_string(), expected: self.order, got: g.order() });
        }
        Ok(g)
    }
}

impl FixtureSpec {
    /// Materialize all three groups, checking orders and containment.
    pub fn build(&self) -> Result<Fixture, GroupError> {
        let g = self.group.build(self.degree, &alloc::format!("{} G", self.name))?;
        let h = self.subgroup.build(self.degree, &alloc::format!("{} H", self.name))?;
        let s = self.acting.build(self.degree, &alloc::format!("{} S", self.name))?;
        if !h.is_subgroup_of(&g) || !s.is_subgroup_of(&g) {
            return Err(GroupError::NotSubgroup);
        }
        Ok(Fixture { spec: self.clone(), g, h, s })
    }
}

impl Fixture {
    pub fn orbits(&self) -> Result<OrbitProfile, GroupError> {
        super::subgroup_orbits_on_cosets(&self.g, &self.h, &self.s)
    }
}

pub fn build_fixture(name: &str) -> Result<Fixture, GroupError> {
    builtin_fixtures()
        .into_iter()
        .find(|f| f.name == name)
        .ok_or_else(|| GroupError::UnknownFixture(name.to_string()))?
        .build()
}

fn cyc(n: usize, cycles: &[&[u16]]) -> Permutation {
    Permutation::from_cycles(n, cycles).expect("catalog cycles are valid")
}

fn spec(generators: Vec<Permutation>, order: usize) -> GroupSpec {
    GroupSpec { generators, order }
}

/// `A₅ = ⟨(0 1 2 3 4), (0 1 2)⟩`.
pub fn a5_generators() -> Vec<Permutation> {
    vec![cyc(5, &[&[0, 1, 2, 3, 4]]), cyc(5, &[&[0, 1, 2]])]
}

pub fn a5_d10() -> Vec<Permutation> {
    vec![cyc(5, &[&[0, 1, 2, 3, 4]]), cyc(5, &[&[1, 4], &[2, 3]])]
}

/// `A₆ = ⟨(0 1 2), (1 2 3 4 5)⟩`.
pub fn a6_generators() -> Vec<Permutation> {
    vec![cyc(6, &[&[0, 1, 2]]), cyc(6, &[&[1, 2, 3, 4, 5]])]
}

/// `D₁₀ < A₅ < A₆`, fixing the point 5.
pub fn a6_d10() -> Vec<Permutation> {
    vec![cyc(6, &[&[0, 1, 2, 3, 4]]), cyc(6, &[&[1, 4], &[2, 3]])]
}

/// `A₈ = ⟨(0 1 2), (1 2 3 4 5 6 7)⟩`.
pub fn a8_generators() -> Vec<Permutation> {
    vec![cyc(8, &[&[0, 1, 2]]), cyc(8, &[&[1, 2, 3, 4, 5, 6, 7]])]
}

fn f8_mul(a: usize, b: usize) -> usize {
    let mut acc = 0usize;
    for i in 0..3 {
        if b >> i & 1 == 1 {
            acc ^= a << i;
        }
    }
    // reduce modulo x³ + x + 1
    for i in (3..5).rev() {
        if acc >> i & 1 == 1 {
            acc ^= 0b1011 << (i - 3);
        }
    }
    acc
}

/// Multiplication by `x`: a Singer cycle on `F₈*`.
pub fn f8_singer() -> Permutation {
    Permutation::from_fn(8, |v| f8_mul(v, 2)).expect("field multiplication is bijective")
}

pub fn f8_frobenius() -> Permutation {
    Permutation::from_fn(8, |v| f8_mul(v, v)).expect("Frobenius is bijective")
}

pub fn f8_translation() -> Permutation {
    Permutation::from_fn(8, |v| v ^ 1).expect("translation is bijective")
}

/// `(b₀, b₁, b₂) ↦ (b₀ + b₁, b₁, b₂)`.
pub fn f8_transvection() -> Permutation {
    Permutation::from_fn(8, |v| v ^ ((v >> 1) & 1)).expect("transvection is bijective")
}

fn pow_mod(b: u64, e: u64, m: u64) -> u64 {
    (0..e).fold(1, |acc, _| acc * b % m)
}

/// Generators `t: x ↦ x+1`, `d: x ↦ g²x` (`g` a primitive root) and
/// `w: x ↦ −1/x` of `L₂(q)` on the projective line, `q` an odd prime.
pub fn l2_generators(q: u64) -> (Permutation, Permutation, Permutation) {
    let n = (q + 1) as usize;
    let inf = q as usize;
    let g = (2..q).find(|&g| (1..q - 1).all(|k| pow_mod(g, k, q) != 1)).expect("odd primes have primitive roots");
    let sq = g * g % q;
    let t = Permutation::from_fn(n, |x| if x == inf { inf } else { (x + 1) % q as usize }).unwrap();
    let d = Permutation::from_fn(n, |x| if x == inf { inf } else { (x as u64 * sq % q) as usize }).unwrap();
    let w = Permutation::from_fn(n, |x| {
        if x == inf {
            0
        } else if x == 0 {
            inf
        } else {
            // −1/x = −x^(q−2)
            let inv = pow_mod(x as u64, q - 2, q);
            ((q - inv) % q) as usize
        }
    })
    .unwrap();
    (t, d, w)
}

fn l2_full(q: u64) -> GroupSpec {
    let (t, d, w) = l2_generators(q);
    spec(vec![t, d, w], (q * (q * q - 1) / 2) as usize)
}

fn l2_parabolic(q: u64, k: u32) -> GroupSpec {
    let (t, d, _) = l2_generators(q);
    let torus = (q - 1) / 2 / u64::from(k);
    spec(vec![t, d.pow(k)], (q * torus) as usize)
}

fn pair(a: &Permutation, b: &Permutation) -> Permutation {
    a.direct_sum(b).expect("degrees fit")
}

#[rustfmt::skip]
pub fn builtin_fixtures() -> Vec<FixtureSpec> {
    let mut out = Vec::new();
    let mut push = |name: &str, suite: Suite, degree: usize, label: &str, group: GroupSpec, subgroup: GroupSpec, acting: GroupSpec, expected: &[(u64, u64)]| {
        out.push(FixtureSpec {
            name: name.to_string(), suite, degree, label: label.to_string(),
            group, subgroup, acting, expected: OrbitProfile::from_pairs(expected.iter().copied()),
        });
    };

    let a5 = || spec(a5_generators(), 60);
    let d10 = || spec(a5_d10(), 10);
    push("a5_a3", Suite::A5, 5, "A3", a5(), spec(vec![cyc(5, &[&[0, 1, 2]])], 3), d10(), &[(10, 2)]);
    push("a5_s3", Suite::A5, 5, "S3", a5(), spec(vec![cyc(5, &[&[0, 1, 2]]), cyc(5, &[&[0, 1], &[3, 4]])], 6), d10(), &[(5, 2)]);
    push("a5_a4", Suite::A5, 5, "A4", a5(), spec(vec![cyc(5, &[&[0, 1, 2]]), cyc(5, &[&[0, 1], &[2, 3]])], 12), d10(), &[(5, 1)]);
    push("a5_c5", Suite::A5, 5, "C5", a5(), spec(vec![cyc(5, &[&[0, 1, 2, 3, 4]])], 5), d10(), &[(1, 2), (10, 1)]);
    push("a5_d10", Suite::A5, 5, "D10", a5(), d10(), d10(), &[(1, 1), (5, 1)]);

    let a6 = || spec(a6_generators(), 360);
    let d10_6 = || spec(a6_d10(), 10);
    let a3a3 = vec![cyc(6, &[&[0, 1, 2]]), cyc(6, &[&[3, 4, 5]])];
    let a3a3_2 = [a3a3.clone(), vec![cyc(6, &[&[0, 1], &[3, 4]])]].concat();
    let a3a3_22 = [a3a3.clone(), vec![cyc(6, &[&[0, 3, 1, 4], &[2, 5]])]].concat();
    push("a6_a3xa3", Suite::A6, 6, "A3xA3", a6(), spec(a3a3, 9), d10_6(), &[(10, 4)]);
    push("a6_a3xa3_2", Suite::A6, 6, "(A3xA3).2", a6(), spec(a3a3_2, 18), d10_6(), &[(5, 4)]);
    push("a6_a3xa3_2_2", Suite::A6, 6, "(A3xA3).2.2", a6(), spec(a3a3_22, 36), d10_6(), &[(5, 2)]);
    push("a6_transitive_a5", Suite::A6, 6, "A5 (transitive)", a6(),
        spec(vec![cyc(6, &[&[0, 1, 2, 3, 4]]), cyc(6, &[&[0, 5], &[1, 4]])], 60), d10_6(), &[(1, 1), (5, 1)]);
    push("a6_point_stab", Suite::A6, 6, "A5 (intransitive)", a6(),
        spec(vec![cyc(6, &[&[0, 1, 2, 3, 4]]), cyc(6, &[&[0, 1, 2]])], 60), d10_6(), &[(1, 1), (5, 1)]);

    let i5 = Permutation::identity(5);
    let a5sq = || spec(product_generators(&a5_generators(), 5, &a5_generators(), 5).unwrap(), 3600);
    let d10sq = || spec(product_generators(&a5_d10(), 5, &a5_d10(), 5).unwrap(), 100);
    let half = vec![
        pair(&cyc(5, &[&[0, 1, 2]]), &i5),
        pair(&i5, &cyc(5, &[&[0, 1, 2, 3, 4]])),
        pair(&cyc(5, &[&[0, 1], &[3, 4]]), &cyc(5, &[&[1, 4], &[2, 3]])),
    ];
    push("a5sq_subdirect_half_s3xd10", Suite::A5sq, 10, "1/2(S3xD10)", a5sq(), spec(half, 30), d10sq(), &[(5, 4), (25, 4)]);
    let diag: Vec<Permutation> = a5_generators().iter().map(|g| pair(g, g)).collect();
    push("a5sq_diagonal", Suite::A5sq, 10, "diag(A5)", a5sq(), spec(diag, 60), d10sq(), &[(10, 1), (50, 1)]);

    let a8 = || spec(a8_generators(), 20160);
    let s0 = || spec(vec![f8_singer(), f8_frobenius()], 21);
    push("a8_a7", Suite::A8, 8, "A7", a8(), spec(vec![cyc(8, &[&[1, 2, 3]]), cyc(8, &[&[1, 2, 3, 4, 5, 6, 7]])], 2520), s0(), &[(1, 1), (7, 1)]);
    push("a8_7_3", Suite::A8, 8, "7:3", a8(), s0(), s0(), &[(1, 1), (7, 11), (21, 42)]);
    push("a8_2e3_7_3", Suite::A8, 8, "2^3:(7:3)", a8(),
        spec(vec![f8_singer(), f8_frobenius(), f8_translation()], 168), s0(), &[(1, 1), (7, 5), (21, 4)]);
    push("a8_gl3_2", Suite::A8, 8, "GL3(2)", a8(), spec(vec![f8_singer(), f8_transvection()], 168), s0(), &[(1, 1), (7, 5), (21, 4)]);
    push("a8_agl3_2", Suite::A8, 8, "2^3:GL3(2)", a8(),
        spec(vec![f8_singer(), f8_transvection(), f8_translation()], 1344), s0(), &[(1, 1), (7, 2)]);

    for q in [7u64, 31] {
        let n = (q + 1) as usize;
        push(&alloc::format!("l2_{q}_parabolic"), Suite::L2, n, "parabolic", l2_full(q), l2_parabolic(q, 1), l2_parabolic(q, 1), &[(1, 1), (q, 1)]);
    }
    // index-r subgroups q:((q−1)/2r) of the parabolic
    for (q, r) in [(7u64, 3u32), (31, 3), (31, 5), (31, 15)] {
        let n = (q + 1) as usize;
        let r64 = u64::from(r);
        push(&alloc::format!("l2_{q}_index{r}"), Suite::L2, n, &alloc::format!("{q}:{}", (q - 1) / 2 / r64),
            l2_full(q), l2_parabolic(q, r), l2_parabolic(q, 1), &[(r64, 1), (r64 * q, 1)]);
    }
    let (t, d, w) = l2_generators(7);
    let i8 = Permutation::identity(8);
    let l2sq = || spec(product_generators(&[t.clone(), d.clone(), w.clone()], 8, &[t.clone(), d.clone(), w.clone()], 8).unwrap(), 168 * 168);
    let psq = || spec(product_generators(&[t.clone(), d.clone()], 8, &[t.clone(), d.clone()], 8).unwrap(), 441);
    let sub = vec![pair(&t, &i8), pair(&i8, &t), pair(&d, &d)];
    let twisted = vec![pair(&t, &i8), pair(&i8, &t), pair(&d, &d.inverse())];
    let want = [(3, 1), (21, 2), (147, 1)];
    push("l2_7sq_subdirect", Suite::L2, 16, "1/3(P x P)", l2sq(), spec(sub, 147), psq(), &want);
    push("l2_7sq_subdirect_twisted", Suite::L2, 16, "1/3(P x P) twisted", l2sq(), spec(twisted, 147), psq(), &want);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_maps() {
        assert_eq!(f8_mul(2, 4), 3); // x·x² = x + 1
        assert_eq!(alloc::format!("{}", f8_singer()), "(1 2 4 3 6 7 5)");
        assert!(f8_frobenius().pow(3).is_identity());
        assert!(f8_transvection().is_even() && f8_translation().is_even());
    }

    #[test]
    fn l2_7_matches_hand_generators() {
        let (t, d, w) = l2_generators(7);
        assert_eq!(alloc::format!("{t}"), "(0 1 2 3 4 5 6)");
        assert_eq!(alloc::format!("{d}"), "(1 2 4)(3 6 5)");
        assert_eq!(alloc::format!("{w}"), "(0 7)(1 6)(2 3)(4 5)");
    }

    #[test]
    fn names_unique() {
        let all = builtin_fixtures();
        let mut names: Vec<&str> = all.iter().map(|f| f.name.as_str()).collect();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), all.len());
        assert!(matches!(build_fixture("nope"), Err(GroupError::UnknownFixture(_))));
    }
}
