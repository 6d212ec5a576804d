//! Transcription of the 30-row orbit-length table.
//!
//! Each row is a list of variants (one per value of a discrete parameter such
//! as `b`), and each variant has a body describing its degree expression and
//! orbit-length template in one of four shapes.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use super::Congruence;

pub const TABLE_VERSION: u32 = 1;
pub const ROW_COUNT: usize = 30;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum Family {
    /// Explicit `k × l` lists (rows 23–30).
    List,
    /// `αaXᵢ, βaYⱼ` over unordered partitions (rows 1–11, 13–21).
    PartitionPair,
    /// Mersenne towers with per-block partition choices (rows 12, 22).
    MersenneTower,
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct RowSpec {
    pub id: u8,
    /// Label of the nonabelian section, e.g. `A5^e`.
    pub section: String,
    pub family: Family,
    /// Degree and orbit columns as printed, kept for audit and reporting.
    pub degree: String,
    pub orbits: String,
    pub notes: String,
    pub variants: Vec<Variant>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Variant {
    /// Discrete parameter binding, e.g. `b=1` or `X=4,b=0`; empty when none.
    pub label: String,
    #[cfg_attr(feature = "serde", serde(default, skip_serializing_if = "Option::is_none"))]
    pub b: Option<u32>,
    pub body: Body,
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(tag = "kind", rename_all = "snake_case"))]
pub enum Body {
    /// Degree `degree_coeff·a`; each term contributes orbits `coeff·a·x` for
    /// `x` running over a partition of `parts`, or one orbit `coeff·a`.
    Partitioned { degree_coeff: u64, terms: Vec<Term> },
    /// Degree `degree_coeff·(p+1)^e₂·a`. For each `0 ≤ i ≤ e₂` there are
    /// `C(e₂, i)` blocks, each choosing a partition `π` of `parts` and
    /// contributing orbits `length_coeff·pⁱ·a·πₖ`.
    Tower { degree_coeff: u64, length_coeff: u64, parts: u32, e2_min: u32, congruence: Congruence },
    /// Degree `a·(r+1)^e₂·Σⱼ sⱼ·lⱼ·q^kⱼ`; `a·sⱼ·C(e₂, i)` orbits of length
    /// `lⱼ·q^kⱼ·rⁱ`. The ratio `r` is fixed or a Mersenne prime `q`.
    Binomial { growth: Growth, pairs: Vec<OrbitPair>, e2_min: u32 },
    /// `q = twist·2^x' − 1` an odd prime power, `r = 15/twist`; degree
    /// `2^x'·15·a` with orbits `a·q·r` and `a·r`.
    ParabolicPair { twist: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Term {
    pub coeff: u64,
    #[cfg_attr(feature = "serde", serde(default, skip_serializing_if = "Option::is_none"))]
    pub parts: Option<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(tag = "type", rename_all = "snake_case"))]
pub enum Growth {
    Fixed { ratio: u64 },
    Mersenne { congruence: Congruence },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct OrbitPair {
    pub count: u64,
    pub length: u64,
    #[cfg_attr(feature = "serde", serde(default))]
    pub q_power: u32,
}

fn t(coeff: u64, parts: u32) -> Term {
    Term { coeff, parts: Some(parts) }
}

fn single(coeff: u64) -> Term {
    Term { coeff, parts: None }
}

fn pair(count: u64, length: u64) -> OrbitPair {
    OrbitPair { count, length, q_power: 0 }
}

fn plain(degree_coeff: u64, terms: Vec<Term>) -> Vec<Variant> {
    vec![Variant { label: String::new(), b: None, body: Body::Partitioned { degree_coeff, terms } }]
}

fn with_b(b: u32, body: Body) -> Variant {
    Variant { label: alloc::format!("b={b}"), b: Some(b), body }
}

struct Row<'a> {
    id: u8,
    section: &'a str,
    family: Family,
    degree: &'a str,
    orbits: &'a str,
    notes: &'a str,
    variants: Vec<Variant>,
}

impl Row<'_> {
    fn build(self) -> RowSpec {
        RowSpec {
            id: self.id,
            section: self.section.to_string(),
            family: self.family,
            degree: self.degree.to_string(),
            orbits: self.orbits.to_string(),
            notes: self.notes.to_string(),
            variants: self.variants,
        }
    }
}

fn pp(id: u8, section: &str, degree: &str, orbits: &str, notes: &str, variants: Vec<Variant>) -> RowSpec {
    Row { id, section, family: Family::PartitionPair, degree, orbits, notes, variants }.build()
}

fn tower(b: u32, x: u32) -> Body {
    Body::Tower {
        degree_coeff: (1 << b) * u64::from(x) * 15,
        length_coeff: (1 << b) * 15,
        parts: x,
        e2_min: 1,
        congruence: Congruence::None,
    }
}

#[rustfmt::skip]
pub fn builtin_rows() -> Vec<RowSpec> {
    const A5: &str = "A5^e";
    const A6: &str = "A6^e";
    const XY: &str = "(ΣX, ΣY)";
    let mut rows = vec![
        pp(1, A5, "240a", "10aX, 100aY", &alloc::format!("{XY} = (4, 2)"), plain(240, vec![t(10, 4), t(100, 2)])),
        pp(2, A5, "120a", "5aX, 50aY", &alloc::format!("{XY} = (4, 2)"), plain(120, vec![t(5, 4), t(50, 2)])),
        pp(3, A5, "120a", "10aX, 50aY", &alloc::format!("{XY} = (2, 2)"), plain(120, vec![t(10, 2), t(50, 2)])),
        pp(4, A5, "60a", "5aX, 25aY", &alloc::format!("{XY} = (2, 2)"), plain(60, vec![t(5, 2), t(25, 2)])),
        pp(5, A5, "60a", "5aX, 50aY", &alloc::format!("{XY} = (2, 1)"), plain(60, vec![t(5, 2), t(50, 1)])),
        pp(6, A5, "30a", "5aX, 25aY", &alloc::format!("{XY} = (1, 1)"), plain(30, vec![t(5, 1), t(25, 1)])),
        pp(7, A5, "2^b·10a", "2^b·5aX", "ΣX = 2; b in {0,1}; G/L soluble", vec![
            with_b(0, Body::Partitioned { degree_coeff: 10, terms: vec![t(5, 2)] }),
            with_b(1, Body::Partitioned { degree_coeff: 20, terms: vec![t(10, 2)] }),
        ]),
        pp(8, A5, "60a", "10a, 50a", "", plain(60, vec![single(10), single(50)])),
        pp(9, A5, "30a", "5aX, 10aY", &alloc::format!("{XY} = (2, 2)"), plain(30, vec![t(5, 2), t(10, 2)])),
        pp(10, A5, "120a", "5aX, 25aY", &alloc::format!("{XY} = (4, 4)"), plain(120, vec![t(5, 4), t(25, 4)])),
        pp(11, A5, "60a", "5aX, 25aY", &alloc::format!("{XY} = (2, 2)"), plain(60, vec![t(5, 2), t(25, 2)])),
        Row {
            id: 12, section: A5, family: Family::MersenneTower,
            degree: "2^b·(p+1)^e2·30a",
            orbits: "Σ_i Σ_{j,k} C(i)_j × 2^b·3·p^i·5a·X(i,j)_k",
            notes: "Σ_j C(i)_j = C(e2,i); Σ_k X(i,j)_k = 2; b in {0,1}; G/L insoluble; p a Mersenne prime; 1 <= e2 <= e",
            variants: vec![with_b(0, tower(0, 2)), with_b(1, tower(1, 2))],
        }.build(),
        pp(13, A6, "240a", "10aX, 50aY", &alloc::format!("{XY} = (4, 4)"), plain(240, vec![t(10, 4), t(50, 4)])),
        pp(14, A6, "120a", "5aX, 25aY", &alloc::format!("{XY} = (4, 4)"), plain(120, vec![t(5, 4), t(25, 4)])),
        pp(15, A6, "60a", "5aX, 25aY", &alloc::format!("{XY} = (2, 2)"), plain(60, vec![t(5, 2), t(25, 2)])),
        pp(16, A6, "120a", "10aX", "ΣX = 12", plain(120, vec![t(10, 12)])),
        pp(17, A6, "15a", "5aX", "ΣX = 3", plain(15, vec![t(5, 3)])),
        pp(18, A6, "40a", "10aX", "ΣX = 4; G/L soluble", plain(40, vec![t(10, 4)])),
        pp(19, A6, "2^b·5a", "5aX", "ΣX = 2^b; b in {1,2}; G/L soluble", vec![
            with_b(1, Body::Partitioned { degree_coeff: 10, terms: vec![t(5, 2)] }),
            with_b(2, Body::Partitioned { degree_coeff: 20, terms: vec![t(5, 4)] }),
        ]),
        pp(20, A6, "60a", "5aX, 10aY", &alloc::format!("{XY} = (4, 4)"), plain(60, vec![t(5, 4), t(10, 4)])),
        pp(21, A6, "30a", "5aX, 10aY", &alloc::format!("{XY} = (2, 2)"), plain(30, vec![t(5, 2), t(10, 2)])),
        Row {
            id: 22, section: A6, family: Family::MersenneTower,
            degree: "2^b·X·(p+1)^e2·15a",
            orbits: "Σ_i Σ_{j,k} C(i)_j × 2^b·3·p^i·5a·X(i,j)_k",
            notes: "Σ_j C(i)_j = C(e2,i); Σ_k X(i,j)_k = X; (X,b) in {(4,1),(4,0),(2,0)}; G/L insoluble; p a Mersenne prime; 1 <= e2 <= e",
            variants: vec![
                Variant { label: "X=4,b=1".to_string(), b: Some(1), body: tower(1, 4) },
                Variant { label: "X=4,b=0".to_string(), b: Some(0), body: tower(0, 4) },
                Variant { label: "X=2,b=0".to_string(), b: Some(0), body: tower(0, 2) },
            ],
        }.build(),
        Row {
            id: 23, section: "T^e, T in {PSp4(4), POmega8+(2)}", family: Family::List,
            degree: "2^b·120a", orbits: "2^b·24a + 2^b·96a", notes: "b in {0,3}",
            variants: vec![
                with_b(0, Body::Partitioned { degree_coeff: 120, terms: vec![single(24), single(96)] }),
                with_b(3, Body::Partitioned { degree_coeff: 960, terms: vec![single(192), single(768)] }),
            ],
        }.build(),
    ];
    let a8 = |id: u8, degree: &str, pairs: &[(u64, u64)], notes: &str| Row {
        id, section: "A8^e", family: Family::List, degree,
        orbits: "Σ_j Σ_i a·s_j·C(e2,i) × 7^i·l_j", notes,
        variants: vec![Variant {
            label: String::new(), b: None,
            body: Body::Binomial {
                growth: Growth::Fixed { ratio: 7 },
                pairs: pairs.iter().map(|&(s, l)| pair(s, l)).collect(),
                e2_min: 0,
            },
        }],
    }.build();
    rows.push(a8(24, "8^e2·960a", &[(1, 1), (11, 7), (42, 21)], "0 <= e2 <= e; (s,l) = (1,1), (11,7), (42,21)"));
    rows.push(a8(25, "8^e2·120a", &[(1, 1), (5, 7), (4, 21)], "0 <= e2 <= e; (s,l) = (1,1), (5,7), (4,21)"));
    rows.push(a8(26, "8^e2·15a", &[(1, 1), (2, 7)], "0 <= e2 <= e; (s,l) = (1,1), (2,7)"));
    let a16 = |b: u32| with_b(b, Body::Binomial {
        growth: Growth::Fixed { ratio: 15 },
        pairs: vec![pair(16 >> b, 15)],
        e2_min: 0,
    });
    rows.push(Row {
        id: 27, section: "A16^e", family: Family::List,
        degree: "15·16^(e2+1)/2^b·a", orbits: "Σ_i a·(16/2^b)·C(e2,i) × 15^(i+1)",
        notes: "b in {0,1}; 0 <= e2 <= e",
        variants: vec![a16(0), a16(1)],
    }.build());
    rows.push(Row {
        id: 28, section: "L2(q)^e", family: Family::List,
        degree: "15a·(q+1)^(e2+2)",
        orbits: "Σ_i a·C(e2,i) × 15q^i + 2a·C(e2,i) × 15q^(i+1) + a·C(e2,i) × 15q^(i+2)",
        notes: "q a Mersenne prime, 15 | q−1; 0 <= e2 <= e",
        variants: vec![Variant {
            label: String::new(), b: None,
            body: Body::Binomial {
                growth: Growth::Mersenne { congruence: Congruence::Fifteen },
                pairs: vec![
                    OrbitPair { count: 1, length: 15, q_power: 0 },
                    OrbitPair { count: 2, length: 15, q_power: 1 },
                    OrbitPair { count: 1, length: 15, q_power: 2 },
                ],
                e2_min: 0,
            },
        }],
    }.build());
    let l2 = |y0: u32, z0: u32| {
        let c = 3u64.pow(y0) * 5u64.pow(z0);
        let congruence = match c { 3 => Congruence::Three, 5 => Congruence::Five, _ => Congruence::Fifteen };
        Variant {
            label: alloc::format!("y0={y0},z0={z0}"), b: None,
            body: Body::Binomial { growth: Growth::Mersenne { congruence }, pairs: vec![pair(1, c)], e2_min: 1 },
        }
    };
    rows.push(Row {
        id: 29, section: "L2(q)^e", family: Family::List,
        degree: "3^y0·5^z0·a·(q+1)^e2", orbits: "Σ_i a·C(e2,i) × 3^y0·5^z0·q^i",
        notes: "q a Mersenne prime, 3^y0·5^z0 | q−1, (y0,z0) != (0,0); 1 <= e2 <= e",
        variants: vec![l2(1, 0), l2(0, 1), l2(1, 1)],
    }.build());
    rows.push(Row {
        id: 30, section: "L2(q)^e", family: Family::List,
        degree: "2^x'·15a", orbits: "a·q·3^(1−y')·5^(1−z') + a·3^(1−y')·5^(1−z')",
        notes: "q = 2^x'·3^y'·5^z' − 1 an odd prime power; {y',z'} = {1,0}",
        variants: vec![
            Variant { label: "y'=1,z'=0".to_string(), b: None, body: Body::ParabolicPair { twist: 3 } },
            Variant { label: "y'=0,z'=1".to_string(), b: None, body: Body::ParabolicPair { twist: 5 } },
        ],
    }.build());
    rows
}
