use std::fmt::Write as _;

use serde::Serialize;
use serde_json::json;
use transgen_core::arith::{e_sol, factorize, k_value, omega, omega1, p_part, threshold_from, ws};
use transgen_core::bounds::{
    pipeline, verify_families, BoundCertificate, BoundError, Family, FamilyRun, Mode, QuotientSource, RowMaximum,
};
use transgen_core::permgrp::{builtin_fixtures, Suite};
use transgen_core::profiles::{
    builtin_rows, enumerate_profiles, rows_for_degree, AdmissibleDegree, OrbitProfile, Profile, ProfileError,
    RowInstance, TowerProfile, ROW_COUNT,
};

use crate::report::{to_value, Approx, CliError, Outcome};
use crate::seeds::SeedSet;

/// Profiles listed per row unless `--all` is given.
pub const LIST_CAP: usize = 25;

fn shape(n: u64) -> String {
    match AdmissibleDegree::new(n) {
        Ok(d) => format!("{d} ({n})"),
        Err(_) => n.to_string(),
    }
}

#[derive(Debug, Serialize)]
struct EsolReport {
    s: u64,
    factorization: String,
    factors: Vec<(u64, u32)>,
    omega: u64,
    omega1: u64,
    k: u64,
    ws: Approx,
    two_part: u64,
    e_sol: Approx,
    /// Which side of `min{ws, s₂}` is attained.
    branch: &'static str,
}

pub fn esol(s: u64) -> Result<Outcome, CliError> {
    let f = factorize(s)?;
    let w = ws(s)?;
    let two = p_part(s, 2)?;
    let e = e_sol(s, 2)?;
    let r = EsolReport {
        s,
        factorization: f.to_string(),
        factors: f.factors().iter().map(|(&p, &k)| (p, k)).collect(),
        omega: omega(s)?,
        omega1: omega1(s)?,
        k: k_value(s)?,
        ws: Approx::new(&w),
        two_part: two,
        e_sol: Approx::new(&e),
        branch: if e == w { "ws" } else { "two_part" },
    };
    let mut h = String::new();
    let _ = writeln!(h, "s = {} = {}", r.s, r.factorization);
    let _ = writeln!(h, "omega = {}, omega1 = {}, K = {}", r.omega, r.omega1, r.k);
    let _ = writeln!(h, "ws = {}", r.ws);
    let _ = writeln!(h, "s_2 = {}", r.two_part);
    let _ = writeln!(h, "E_sol = {} ({} branch)", r.e_sol, r.branch);
    Ok(Outcome { results: to_value(&r), human: h, passed: true })
}

pub fn threshold(n: u64) -> Result<Outcome, CliError> {
    let t = threshold_from(n, 64)?;
    let results = json!({ "n": n, "shape": shape(n), "threshold": t.value, "precision_bits": t.bits });
    let human = format!("threshold({}) = floor(sqrt(3)/2 · n / sqrt(log2 n)) = {}  [{} bits]\n", shape(n), t.value, t.bits);
    Ok(Outcome { results, human, passed: true })
}

#[derive(Debug, Serialize)]
struct ProfileLine {
    assignment: String,
    profile: Profile,
}

#[derive(Debug, Serialize)]
struct RowListing {
    row: u8,
    section: String,
    degree: String,
    orbits: String,
    notes: String,
    skeletons: Vec<String>,
    count: usize,
    profiles: Vec<ProfileLine>,
}

fn tower_text(t: &TowerProfile) -> String {
    let levels: Vec<String> = t.levels.iter().map(|l| format!("{}x[{}·π]", l.blocks, l.unit)).collect();
    format!("blocks π ⊢ {}: {}", t.parts, levels.join(" + "))
}

fn profile_text(p: &Profile) -> String {
    match p {
        Profile::Explicit(o) => o.to_string(),
        Profile::Tower(t) => tower_text(t),
    }
}

pub fn profiles(m: u64, row: Option<u8>, all: bool) -> Result<Outcome, CliError> {
    if let Some(r) = row {
        if r == 0 || usize::from(r) > ROW_COUNT {
            return Err(ProfileError::UnknownRow(r).into());
        }
    }
    let table = builtin_rows();
    let applicable = rows_for_degree(&table, m)?;
    let mut listings = Vec::new();
    for (spec, sks) in applicable.into_iter().filter(|(s, _)| row.map_or(true, |r| s.id == r)) {
        let found = enumerate_profiles(spec, m)?;
        let count = found.len();
        let keep = if all { count } else { count.min(LIST_CAP) };
        listings.push(RowListing {
            row: spec.id,
            section: spec.section.clone(),
            degree: spec.degree.clone(),
            orbits: spec.orbits.clone(),
            notes: spec.notes.clone(),
            skeletons: sks.iter().map(ToString::to_string).collect(),
            count,
            profiles: found
                .into_iter()
                .take(keep)
                .map(|(inst, profile)| ProfileLine { assignment: inst.assignment_key(), profile })
                .collect(),
        });
    }
    let ids: Vec<String> = listings.iter().map(|l| l.row.to_string()).collect();
    let mut h = String::new();
    if ids.is_empty() {
        let _ = writeln!(h, "degree {}: no applicable rows{}", shape(m), row.map(|r| format!(" (row {r} requested)")).unwrap_or_default());
    } else {
        let _ = writeln!(h, "degree {}: rows {}", shape(m), ids.join(", "));
    }
    for l in &listings {
        let _ = writeln!(h, "\nrow {} [{}] degree {}; orbits {}{}", l.row, l.section, l.degree, l.orbits,
            if l.notes.is_empty() { String::new() } else { format!("; {}", l.notes) });
        let _ = writeln!(h, "  {} profiles over skeletons {}", l.count, l.skeletons.join(" | "));
        for p in &l.profiles {
            let _ = writeln!(h, "  {:<40} {}", p.assignment, profile_text(&p.profile));
        }
        if l.profiles.len() < l.count {
            let _ = writeln!(h, "  ... {} more (use --all)", l.count - l.profiles.len());
        }
    }
    let results = json!({ "m": m, "shape": shape(m), "row_filter": row, "all": all, "rows": to_value(&listings) });
    Ok(Outcome { results, human: h, passed: true })
}

#[derive(Debug, Serialize)]
struct RowApprox {
    row: u8,
    partial: String,
}

/// A certificate plus the `≈` renderings of its rationals.
#[derive(Debug, Serialize)]
struct CertificateView<'a> {
    #[serde(flatten)]
    certificate: &'a BoundCertificate,
    shape: String,
    quotient_shape: String,
    max_partial_approx: String,
    row_partials_approx: Vec<RowApprox>,
}

impl<'a> CertificateView<'a> {
    fn new(c: &'a BoundCertificate) -> Self {
        CertificateView {
            certificate: c,
            shape: shape(c.degree),
            quotient_shape: shape(c.quotient_degree),
            max_partial_approx: Approx::new(&c.max_partial).approx,
            row_partials_approx: c
                .row_maxima
                .iter()
                .map(|r| RowApprox { row: r.row, partial: Approx::new(&r.partial).approx })
                .collect(),
        }
    }
}

fn source_name(s: QuotientSource) -> &'static str {
    match s {
        QuotientSource::Seed => "seed",
        QuotientSource::Threshold => "threshold",
        QuotientSource::Reuse => "reuse",
    }
}

fn witness_text(w: &RowInstance, p: &OrbitProfile) -> String {
    format!("{} -> {}", w.assignment_key(), p)
}

fn render_row(h: &mut String, r: &RowMaximum) {
    let route = match r.route {
        transgen_core::bounds::Route::EsolSum => "esol_sum",
        transgen_core::bounds::Route::ClosedForm => "closed_form",
    };
    let _ = writeln!(h, "  {:>3}  {:<11}  {:<28}  {}", r.row, route, Approx::new(&r.partial).to_string(), witness_text(&r.witness, &r.profile));
}

fn render_certificate(c: &BoundCertificate) -> String {
    let mut h = String::new();
    let _ = writeln!(h, "degree {}, quotient degree {}, mode {}", shape(c.degree), shape(c.quotient_degree), c.mode);
    let _ = writeln!(h, "quotient bound {} ({})", c.quotient_bound, source_name(c.quotient_source));
    for q in &c.quotient_candidates {
        let _ = writeln!(h, "  candidate {} {}: {}", source_name(q.source), q.bound, q.detail);
    }
    let _ = writeln!(h, "  row  route        partial                       witness");
    for r in &c.row_maxima {
        render_row(&mut h, r);
    }
    let _ = writeln!(h, "max partial {} (row {}); witness {}", Approx::new(&c.max_partial), c.worst_row, witness_text(&c.witness, &c.witness_profile));
    let _ = writeln!(h, "total {} vs threshold {}: {}", c.total, c.threshold, c.verdict);
    if let Some(r) = c.reference_total {
        let _ = writeln!(h, "reference total {r}");
    }
    for n in &c.notes {
        let _ = writeln!(h, "note: {n}");
    }
    h
}

pub fn bound(n: u64, seeds: &SeedSet, mode: Mode) -> Result<Outcome, CliError> {
    match pipeline(n, &seeds.seeds, mode) {
        Ok(c) => Ok(Outcome {
            results: to_value(&CertificateView::new(&c)),
            human: render_certificate(&c),
            passed: c.passed(),
        }),
        // the sweep ran but could not reach `n`
        Err(e @ BoundError::MissingQuotientBound { .. }) => Ok(Outcome {
            results: json!({ "degree": n, "shape": shape(n), "uncertified": e.to_string() }),
            human: format!("degree {}: not certified: {e}\n", shape(n)),
            passed: false,
        }),
        Err(e) => Err(e.into()),
    }
}

#[derive(Debug, Serialize)]
struct RunView<'a> {
    family: Family,
    degrees: usize,
    passed: usize,
    certificates: Vec<CertificateView<'a>>,
    uncertified: Vec<(u64, String)>,
}

fn render_run(h: &mut String, run: &FamilyRun) {
    let total = run.certificates.len() + run.uncertified.len();
    let passed = run.certificates.iter().filter(|c| c.passed()).count();
    let _ = writeln!(h, "family 2^x·{}: {passed}/{total} PASS", run.family);
    let _ = writeln!(h, "  {:<22} {:>9} {:<9} {:>5} {:<22} {:>10} {:>10} {:<7} {:>10}", "degree", "quotient", "source", "row", "max partial", "total", "threshold", "verdict", "reference");
    for c in &run.certificates {
        let _ = writeln!(h, "  {:<22} {:>9} {:<9} {:>5} {:<22} {:>10} {:>10} {:<7} {:>10}",
            shape(c.degree), c.quotient_bound, source_name(c.quotient_source), c.worst_row,
            Approx::new(&c.max_partial).to_string(), c.total, c.threshold, c.verdict.to_string(),
            c.reference_total.map(|r| r.to_string()).unwrap_or_else(|| "-".into()));
        for n in c.notes.iter().filter(|_| !c.passed() || c.reference_total.is_some()) {
            let _ = writeln!(h, "      note: {n}");
        }
    }
    for (n, e) in &run.uncertified {
        let _ = writeln!(h, "  {:<22} not certified: {e}", shape(*n));
    }
}

pub fn verify_chain(families: &[Family], seeds: &SeedSet, mode: Mode) -> Result<Outcome, CliError> {
    let runs = verify_families(&seeds.seeds, mode, families);
    // an engine failure (as opposed to a missing bound) is not a verdict
    for run in &runs {
        if let Some((_, e)) = run.uncertified.iter().find(|(_, e)| !matches!(e, BoundError::MissingQuotientBound { .. })) {
            return Err(e.clone().into());
        }
    }
    let mut h = String::new();
    for run in &runs {
        render_run(&mut h, run);
    }
    let views: Vec<RunView> = runs
        .iter()
        .map(|run| RunView {
            family: run.family,
            degrees: run.certificates.len() + run.uncertified.len(),
            passed: run.certificates.iter().filter(|c| c.passed()).count(),
            certificates: run.certificates.iter().map(CertificateView::new).collect(),
            uncertified: run.uncertified.iter().map(|(n, e)| (*n, e.to_string())).collect(),
        })
        .collect();
    let passed = runs.iter().all(FamilyRun::passed);
    Ok(Outcome { results: to_value(&views), human: h, passed })
}

#[derive(Debug, Serialize)]
struct GroupCheck {
    fixture: String,
    suite: Suite,
    label: String,
    degree: usize,
    group_order: usize,
    subgroup_order: usize,
    acting_order: usize,
    index: usize,
    expected: OrbitProfile,
    computed: OrbitProfile,
    matches: bool,
}

pub fn verify_groups(suites: &[Suite]) -> Result<Outcome, CliError> {
    let mut checks = Vec::new();
    for spec in builtin_fixtures().into_iter().filter(|f| suites.contains(&f.suite)) {
        let f = spec.build()?;
        let computed = f.orbits()?;
        checks.push(GroupCheck {
            fixture: spec.name.clone(),
            suite: spec.suite,
            label: spec.label.clone(),
            degree: spec.degree,
            group_order: f.g.order(),
            subgroup_order: f.h.order(),
            acting_order: f.s.order(),
            index: f.g.order() / f.h.order(),
            matches: computed == spec.expected,
            expected: spec.expected,
            computed,
        });
    }
    let mut h = String::new();
    for &s in suites {
        let mine: Vec<&GroupCheck> = checks.iter().filter(|c| c.suite == s).collect();
        let ok = mine.iter().filter(|c| c.matches).count();
        let _ = writeln!(h, "suite {s}: {ok}/{} match", mine.len());
        for c in mine {
            let _ = writeln!(h, "  {:<28} H = {:<20} |G|={} |H|={} |S|={} index {}: expected {}, computed {}  {}",
                c.fixture, c.label, c.group_order, c.subgroup_order, c.acting_order, c.index, c.expected, c.computed,
                if c.matches { "ok" } else { "MISMATCH" });
        }
    }
    let passed = checks.iter().all(|c| c.matches);
    Ok(Outcome { results: to_value(&checks), human: h, passed })
}
