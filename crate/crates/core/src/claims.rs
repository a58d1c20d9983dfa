//! Registry of checkable statements and the batch runner.
//!
//! Every claim is a pure function of a seed. Sampled claims draw instance
//! `i` from `seed + i`, so a report can be reproduced from its seed alone.

use std::time::Instant;

use globset::Glob;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::bipartite::{classify_k13_free, even_parts, gen_type_b, same_blocks, verify_background_spanning};
use crate::connectivity::{
    best_monochromatic, best_two_colored, gyarfas_floor, is_k_connected,
    k_connected_among_large_subsets, largest_monochromatic_component, mader_extract,
    masks_up_to_two, Mode,
};
use crate::construct::{
    eg_realizable, realize_degree_sequence, ConstructionSpec, DegreeSequence,
};
use crate::error::{Error, Result};
use crate::gallai::{gallai_partition, is_gallai, sample_gallai_exact, validate_partition};
use crate::gallai::{verify_two_colored_2conn, verify_two_colored_3conn};
use crate::graph::SimpleGraph;
use crate::host::{restrict, ColorId, ColoredBipartite, ColoredComplete, ColoredHost, Host};
use crate::par::{self, Parallelism};
use crate::paths::{check_eg_path_bound, check_mono_cycle_bound, check_path_vector, color_degree_identity};
use crate::pattern::{catalog_members, parse_pattern, CatalogId};
use crate::rainbow::{find_rainbow, validate_embedding, WithoutColors};
use crate::verdict::Check;

pub const DEFAULT_SAMPLES: u64 = 1000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

/// Result of evaluating a claim: whether the property held, plus evidence.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub holds: bool,
    pub witness: Value,
}

impl Outcome {
    fn new(holds: bool, witness: Value) -> Self {
        Outcome { holds, witness }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Context {
    pub seed: u64,
    pub samples: u64,
    pub par: Parallelism,
}

pub struct Claim {
    pub id: &'static str,
    pub statement: &'static str,
    /// `Fail` for statements that are recorded as false on purpose.
    pub expected: Status,
    run: fn(&Context) -> Result<Outcome>,
}

impl Claim {
    pub fn evaluate(&self, ctx: &Context) -> RunReport {
        let start = Instant::now();
        let (status, witness) = match (self.run)(ctx) {
            Ok(o) => (if o.holds { Status::Pass } else { Status::Fail }, o.witness),
            Err(e) => (Status::Error, json!({ "error": e.to_string() })),
        };
        RunReport {
            claim_id: self.id.to_owned(),
            status,
            witness,
            millis: start.elapsed().as_millis() as u64,
            seed: ctx.seed,
            expected: self.expected,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub claim_id: String,
    pub status: Status,
    pub witness: Value,
    pub millis: u64,
    pub seed: u64,
    #[serde(skip)]
    pub expected: Status,
}

impl RunReport {
    pub fn is_expected(&self) -> bool {
        self.status == self.expected
    }
}

#[derive(Clone, Copy, Debug)]
pub struct RunOptions {
    pub seed: u64,
    pub samples: u64,
    pub par: Parallelism,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            seed: 0,
            samples: DEFAULT_SAMPLES,
            par: Parallelism::Parallel,
        }
    }
}

/// Runs every claim whose id matches the glob `filter`, in registry order.
pub fn run_claims(filter: &str, opts: &RunOptions) -> Result<Vec<RunReport>> {
    let matcher = Glob::new(filter)
        .map_err(|e| Error::param(format!("bad filter `{filter}`: {e}")))?
        .compile_matcher();
    let chosen: Vec<&Claim> = registry().iter().filter(|c| matcher.is_match(c.id)).collect();
    if chosen.is_empty() {
        return Err(Error::UnknownClaim(filter.to_owned()));
    }
    let ctx = Context {
        seed: opts.seed,
        samples: opts.samples,
        par: opts.par,
    };
    Ok(par::map(&chosen, opts.par, |c| c.evaluate(&ctx)))
}

/// Reports whose status differs from the claim's expectation.
pub fn unexpected(reports: &[RunReport]) -> Vec<&RunReport> {
    reports.iter().filter(|r| !r.is_expected()).collect()
}

pub fn find_claim(id: &str) -> Option<&'static Claim> {
    registry().iter().find(|c| c.id == id)
}

// ---------------------------------------------------------------------------
// building blocks

fn build(spec: ConstructionSpec) -> Result<Host> {
    Ok(spec.build()?.host)
}

fn r1() -> ConstructionSpec {
    ConstructionSpec::R1 { n: 9, m: 4 }
}

fn r1_wide() -> ConstructionSpec {
    ConstructionSpec::R1 { n: 12, m: 5 }
}

fn r2() -> ConstructionSpec {
    ConstructionSpec::R2 { n: 12, m: 6 }
}

fn f1() -> ConstructionSpec {
    ConstructionSpec::F1 { s: 12, t: 6, m: 4 }
}

fn f2() -> ConstructionSpec {
    ConstructionSpec::F2 { s: 13, t: 6, m: 5 }
}

fn f3() -> ConstructionSpec {
    ConstructionSpec::F3 { s: 12, t: 12, m: 6 }
}

fn free_of(spec: ConstructionSpec, pattern: &str) -> Result<Outcome> {
    let host = build(spec)?;
    let p = parse_pattern(pattern)?;
    let found = find_rainbow(&host, &p)?;
    Ok(Outcome::new(
        found.is_none(),
        json!({ "host": spec.to_string(), "pattern": p.name(), "copy": found }),
    ))
}

fn contains(spec: ConstructionSpec, pattern: &str) -> Result<Outcome> {
    let host = build(spec)?;
    let p = parse_pattern(pattern)?;
    let found = find_rainbow(&host, &p)?;
    let ok = found.as_ref().is_some_and(|e| validate_embedding(&host, &p, e));
    Ok(Outcome::new(
        ok,
        json!({ "host": spec.to_string(), "pattern": p.name(), "copy": found }),
    ))
}

/// Rainbow copies of `pattern` need every color in `required`: hiding any
/// one of them leaves the host free of the pattern.
fn needs_each(spec: ConstructionSpec, pattern: &str, required: &[u16]) -> Result<Outcome> {
    let host = build(spec)?;
    let p = parse_pattern(pattern)?;
    let mut escapes = Vec::new();
    for &c in required {
        let view = WithoutColors::new(&host, [ColorId(c)]);
        if let Some(e) = find_rainbow(&view, &p)? {
            escapes.push(json!({ "hidden": c, "copy": e }));
        }
    }
    Ok(Outcome::new(
        escapes.is_empty(),
        json!({ "host": spec.to_string(), "pattern": p.name(), "required": required, "escapes": escapes }),
    ))
}

/// Rainbow copies of `pattern` use at least one color of `any_of`.
fn needs_one(spec: ConstructionSpec, pattern: &str, any_of: &[u16]) -> Result<Outcome> {
    let host = build(spec)?;
    let p = parse_pattern(pattern)?;
    let view = WithoutColors::new(&host, any_of.iter().map(|&c| ColorId(c)));
    let escape = find_rainbow(&view, &p)?;
    Ok(Outcome::new(
        escape.is_none(),
        json!({ "host": spec.to_string(), "pattern": p.name(), "any_of": any_of, "escape": escape }),
    ))
}

fn mono_order(spec: ConstructionSpec, k: usize) -> Result<(usize, Value)> {
    let host = build(spec)?;
    let (color, rep) = best_monochromatic(&host, k, Mode::Exact)?;
    if !rep.exact {
        return Err(Error::Certification(format!("search on {spec} was not exact")));
    }
    let g = restrict(&host, &rep.mask)?.induced(&rep.witness);
    if !rep.witness.is_empty() && !is_k_connected(&g, k) {
        return Err(Error::Certification("witness fails the connectivity check".into()));
    }
    Ok((
        rep.lower,
        json!({ "host": spec.to_string(), "k": k, "color": color, "order": rep.lower, "vertices": rep.witness }),
    ))
}

fn mono_equals(spec: ConstructionSpec, k: usize, want: usize) -> Result<Outcome> {
    let (order, w) = mono_order(spec, k)?;
    Ok(Outcome::new(order == want, json!({ "expected": want, "found": w })))
}

fn mono_at_most(spec: ConstructionSpec, ks: &[usize], cap: usize) -> Result<Outcome> {
    let mut rows = Vec::new();
    let mut ok = true;
    for &k in ks {
        let (order, w) = mono_order(spec, k)?;
        ok &= order <= cap;
        rows.push(w);
    }
    Ok(Outcome::new(ok, json!({ "cap": cap, "searches": rows })))
}

fn component_equals(spec: ConstructionSpec, want: usize) -> Result<Outcome> {
    let host = build(spec)?;
    let (color, comp) =
        largest_monochromatic_component(&host).ok_or_else(|| Error::pre("host has no edges"))?;
    Ok(Outcome::new(
        comp.len() == want,
        json!({ "host": spec.to_string(), "expected": want, "color": color, "component": comp }),
    ))
}

/// Runs `check` on `ctx.samples` seeds; the closure returns a failure note
/// or `None`. Errors count as failures.
fn sampled<F>(ctx: &Context, check: F) -> Result<Outcome>
where
    F: Fn(u64) -> Result<Option<String>> + Sync + Send,
{
    let results = par::map_range(0..ctx.samples, ctx.par, |i| {
        let seed = ctx.seed.wrapping_add(i);
        match check(seed) {
            Ok(None) => None,
            Ok(Some(msg)) => Some(json!({ "seed": seed, "failure": msg })),
            Err(e) => Some(json!({ "seed": seed, "error": e.to_string() })),
        }
    });
    let failures: Vec<Value> = results.into_iter().flatten().collect();
    let shown: Vec<&Value> = failures.iter().take(5).collect();
    Ok(Outcome::new(
        failures.is_empty(),
        json!({ "samples": ctx.samples, "failures": failures.len(), "first_failures": shown }),
    ))
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub(crate) fn random_complete(rng: &mut impl Rng, n: usize, m: u16) -> ColoredComplete {
    ColoredComplete::from_fn(n, m, |_, _| rng.gen_range(1..=m)).expect("valid random coloring")
}

fn random_bipartite(rng: &mut impl Rng, s: usize, t: usize, m: u16) -> ColoredBipartite {
    ColoredBipartite::from_fn(s, t, m, |_, _| rng.gen_range(1..=m)).expect("valid random coloring")
}

fn gnp(rng: &mut impl Rng, n: usize, p: f64) -> SimpleGraph {
    SimpleGraph::from_fn(n, |_, _| rng.gen_bool(p))
}

fn two_colored_both(host: &ColoredComplete) -> Result<Option<String>> {
    let n = host.n();
    match verify_two_colored_2conn(host)? {
        Check::Holds(w) if w.vertices.len() == n => {}
        Check::Holds(w) => return Ok(Some(format!("2-connected witness has order {}", w.vertices.len()))),
        Check::Falsified(msg) => return Ok(Some(msg)),
    }
    match verify_two_colored_3conn(host)? {
        Check::Holds(w) if w.vertices.len() + 1 >= n => Ok(None),
        Check::Holds(w) => Ok(Some(format!("3-connected witness has order {}", w.vertices.len()))),
        Check::Falsified(msg) => Ok(Some(msg)),
    }
}

fn gallai_three_colored_constructions() -> Vec<ConstructionSpec> {
    vec![
        ConstructionSpec::Intro { n: 10, k: 3 },
        ConstructionSpec::Intro { n: 12, k: 5 },
        ConstructionSpec::Intro { n: 16, k: 7 },
        ConstructionSpec::Counter4t { t: 1, n: 20 },
        ConstructionSpec::Counter4t { t: 2, n: 40 },
    ]
}

fn two_colored_on_constructions() -> Result<Outcome> {
    let mut rows = Vec::new();
    let mut ok = true;
    for spec in gallai_three_colored_constructions() {
        let host = build(spec)?;
        let c = host.as_complete().ok_or_else(|| Error::pre("complete host expected"))?;
        let failure = two_colored_both(c)?;
        ok &= failure.is_none();
        rows.push(json!({ "host": spec.to_string(), "failure": failure }));
    }
    Ok(Outcome::new(ok, json!(rows)))
}

fn counter_gallai(t: usize, n: usize) -> Result<Outcome> {
    let host = build(ConstructionSpec::Counter4t { t, n })?;
    let c = host.as_complete().ok_or_else(|| Error::pre("complete host expected"))?;
    let p = gallai_partition(c)?;
    Ok(Outcome::new(
        is_gallai(c) && c.used_colors().len() == 3 && validate_partition(c, &p),
        json!({ "n": n, "t": t, "parts": p.parts.len(), "colors": c.used_colors() }),
    ))
}

/// No two-colored subgraph on more than `n - 2t` vertices is 4t-connected.
fn counter_bound(t: usize, n: usize) -> Result<Outcome> {
    let host = build(ConstructionSpec::Counter4t { t, n })?;
    let k = 4 * t;
    let mut rows = Vec::new();
    let mut ok = true;
    for mask in masks_up_to_two(&host).into_iter().filter(|m| m.len() == 2) {
        let g = restrict(&host, &mask)?;
        let hit = k_connected_among_large_subsets(&g, k, n - 2 * t + 1);
        ok &= hit.is_none();
        rows.push(json!({ "mask": mask, "violating_set": hit }));
    }
    Ok(Outcome::new(ok, json!({ "n": n, "k": k, "bound": n - 2 * t, "masks": rows })))
}

/// The bound is attained: some two-colored subgraph on `n - 2t` vertices is
/// 4t-connected.
fn counter_attained(t: usize, n: usize) -> Result<Outcome> {
    let host = build(ConstructionSpec::Counter4t { t, n })?;
    let rep = best_two_colored(&host, 4 * t, Mode::Heuristic)?;
    Ok(Outcome::new(
        rep.lower == n - 2 * t,
        json!({ "n": n, "k": 4 * t, "mask": rep.mask, "order": rep.lower, "vertices": rep.witness }),
    ))
}

fn counter_degrees(t: usize, n: usize) -> Result<Outcome> {
    let c = ConstructionSpec::Counter4t { t, n }.build()?;
    let host = &c.host;
    let k = 4 * t;
    let v2 = c.meta.part("V2").ok_or_else(|| Error::pre("missing part V2"))?;
    let v3 = c.meta.part("V3").ok_or_else(|| Error::pre("missing part V3"))?;
    let g = restrict(host, &crate::host::ColorMask::single(ColorId(1)))?.induced(v2);
    let mut degs = g.degrees();
    degs.sort_unstable_by(|a, b| b.cmp(a));
    let expected = DegreeSequence::two_level(t);
    Ok(Outcome::new(
        v3.len() == 2 * t && v2.len() == k && degs == expected.as_slice(),
        json!({ "v2": v2, "v3": v3, "color1_degrees_in_v2": degs }),
    ))
}

fn intro_best(n: usize, k: usize) -> Result<Outcome> {
    let spec = ConstructionSpec::Intro { n, k };
    let host = build(spec)?;
    let c = host.as_complete().ok_or_else(|| Error::pre("complete host expected"))?;
    let rep = best_two_colored(&host, k, Mode::Exact)?;
    let want = n - (k - 1) / 2;
    Ok(Outcome::new(
        is_gallai(c) && rep.exact && rep.lower == want,
        json!({ "host": spec.to_string(), "k": k, "expected": want, "order": rep.lower, "mask": rep.mask, "vertices": rep.witness }),
    ))
}

fn eg_two_level() -> Result<Outcome> {
    let mut rows = Vec::new();
    let mut ok = true;
    for t in 1..=5 {
        let d = DegreeSequence::two_level(t);
        let g = realize_degree_sequence(&d)?;
        let good = eg_realizable(&d) && g.degrees() == d.as_slice();
        ok &= good;
        rows.push(json!({ "t": t, "sequence": d, "realized": good }));
    }
    Ok(Outcome::new(ok, json!(rows)))
}

/// Every non-increasing sequence of length `n` is accepted by the
/// Erdős–Gallai test iff some labeled graph on `n` vertices has it.
fn eg_exhaustive(n: usize) -> Result<Outcome> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut seen = std::collections::BTreeSet::new();
    for bits in 0u64..1 << pairs.len() {
        let mut d = vec![0usize; n];
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if bits >> i & 1 == 1 {
                d[u] += 1;
                d[v] += 1;
            }
        }
        d.sort_unstable_by(|a, b| b.cmp(a));
        seen.insert(d);
    }
    let mut checked = 0u64;
    let mut mismatches = Vec::new();
    let mut seq = vec![0usize; n];
    loop {
        let d = DegreeSequence::new(seq.clone())?;
        if eg_realizable(&d) != seen.contains(&seq) {
            mismatches.push(seq.clone());
        }
        checked += 1;
        if !next_non_increasing(&mut seq, n - 1) {
            break;
        }
    }
    Ok(Outcome::new(
        mismatches.is_empty(),
        json!({ "n": n, "sequences": checked, "graphical": seen.len(), "mismatches": mismatches }),
    ))
}

/// Advances to the next non-increasing sequence with entries `<= max`, in
/// lexicographic order.
pub(crate) fn next_non_increasing(seq: &mut [usize], max: usize) -> bool {
    let Some(i) = (0..seq.len()).rev().find(|&i| seq[i] < if i == 0 { max } else { seq[i - 1] }) else {
        return false;
    };
    seq[i] += 1;
    for x in &mut seq[i + 1..] {
        *x = 0;
    }
    true
}

fn constructions_for_floors() -> Vec<ConstructionSpec> {
    vec![
        ConstructionSpec::Intro { n: 10, k: 3 },
        ConstructionSpec::Intro { n: 12, k: 5 },
        r1(),
        r1_wide(),
        r2(),
        f1(),
        f2(),
        f3(),
        ConstructionSpec::F3 { s: 12, t: 12, m: 4 },
        ConstructionSpec::Counter4t { t: 1, n: 20 },
        ConstructionSpec::Counter4t { t: 2, n: 40 },
    ]
}

fn floor_row(host: &Host) -> Result<Option<String>> {
    match gyarfas_floor(host) {
        Ok(_) => Ok(None),
        Err(Error::Certification(msg)) => Ok(Some(msg)),
        Err(e) => Err(e),
    }
}

fn floors_on_constructions() -> Result<Outcome> {
    let mut rows = Vec::new();
    let mut ok = true;
    for spec in constructions_for_floors() {
        let host = build(spec)?;
        let rep = gyarfas_floor(&host);
        ok &= rep.is_ok();
        rows.push(match rep {
            Ok(r) => json!({ "host": spec.to_string(), "floor": r.floor, "component": r.component.len() }),
            Err(e) => json!({ "host": spec.to_string(), "error": e.to_string() }),
        });
    }
    Ok(Outcome::new(ok, json!(rows)))
}

fn b_members_in(spec: ConstructionSpec) -> Result<Outcome> {
    let host = build(spec)?;
    let mut missing = Vec::new();
    for p in catalog_members(CatalogId::BSet) {
        match find_rainbow(&host, p)? {
            Some(e) if validate_embedding(&host, p, &e) => {}
            _ => missing.push(p.name().to_owned()),
        }
    }
    Ok(Outcome::new(
        missing.is_empty(),
        json!({ "host": spec.to_string(), "members": catalog_members(CatalogId::BSet).len(), "missing": missing }),
    ))
}

fn type_b_sizes(rng: &mut impl Rng) -> (usize, usize, usize) {
    let m = rng.gen_range(5..=8);
    let s = rng.gen_range(8..=12);
    let t = rng.gen_range(8..=12);
    (m, s, t)
}

fn type_b_round_trip(seed: u64) -> Result<Option<String>> {
    let mut r = rng(seed);
    let (m, s, t) = type_b_sizes(&mut r);
    let (host, planted) = gen_type_b(&even_parts(s, m - 1), &even_parts(t, m - 1), 0.5, seed)?;
    let st = classify_k13_free(&host)?;
    Ok((!same_blocks(&st, &planted)).then(|| format!("m={m} s={s} t={t}: planted blocks not recovered")))
}

fn few_colors_case_a(seed: u64) -> Result<Option<String>> {
    let mut r = rng(seed);
    let m = r.gen_range(1..=4u16);
    let s = r.gen_range(3..=10);
    let t = r.gen_range(3..=10);
    let host = random_bipartite(&mut r, s, t, m);
    let st = classify_k13_free(&host)?;
    Ok(st.is_case_b().then(|| format!("{s}x{t} with {m} colors classified as case B")))
}

fn background(seed: u64, k: usize) -> Result<Option<String>> {
    let mut r = rng(seed);
    let m = r.gen_range((k + 4).max(5)..=8);
    let s = r.gen_range(m.max(8)..=12);
    let t = r.gen_range(m.max(8)..=12);
    let (host, _) = gen_type_b(&even_parts(s, m - 1), &even_parts(t, m - 1), 0.5, seed)?;
    Ok(match verify_background_spanning(&host, k)? {
        Check::Holds(_) => None,
        Check::Falsified(msg) => Some(msg),
    })
}

fn path_vector(seed: u64) -> Result<Option<String>> {
    let mut r = rng(seed);
    let n = r.gen_range(2..=12);
    let m = r.gen_range(1..=4u16);
    let host = random_complete(&mut r, n, m);
    let budget = r.gen_range(0..=n + 2 * m as usize - 2);
    let mut a = vec![0usize; m as usize];
    for _ in 0..budget {
        a[r.gen_range(0..m as usize)] += 1;
    }
    Ok(match check_path_vector(&host, &a)? {
        Check::Holds(_) => None,
        Check::Falsified(msg) => Some(format!("a={a:?}: {msg}")),
    })
}

fn degree_identity(seed: u64) -> Result<Option<String>> {
    let mut r = rng(seed);
    let n = r.gen_range(2..=12);
    let m = r.gen_range(1..=4u16);
    let host = random_complete(&mut r, n, m);
    Ok((!color_degree_identity(&host)).then(|| format!("identity fails on K{n} with {m} colors")))
}

fn mader(seed: u64) -> Result<Option<String>> {
    let mut r = rng(seed);
    let n = r.gen_range(2..=30);
    let p = [0.3, 0.5, 0.8][r.gen_range(0..3)];
    let g = gnp(&mut r, n, p);
    if g.edge_count() == 0 {
        return Ok(None);
    }
    let w = mader_extract(&g)?;
    let h = g.induced(&w.vertices);
    Ok((!is_k_connected(&h, w.target)).then(|| format!("extracted subgraph is not {}-connected", w.target)))
}

fn mono_cycle(seed: u64) -> Result<Option<String>> {
    let mut r = rng(seed);
    let n = r.gen_range(6..=12);
    let m = r.gen_range(2..=3u16);
    let host = random_complete(&mut r, n, m);
    Ok(match check_mono_cycle_bound(&host)? {
        Check::Holds(_) => None,
        Check::Falsified(msg) => Some(msg),
    })
}

fn eg_path(seed: u64) -> Result<Option<String>> {
    let mut r = rng(seed);
    let n = r.gen_range(4..=12);
    let k = r.gen_range(2..=n.min(6));
    let p = r.gen_range(0.3..0.95);
    let g = gnp(&mut r, n, p);
    if 2 * g.edge_count() <= (k - 1) * n {
        return Ok(None);
    }
    Ok(match check_eg_path_bound(&g, k)? {
        Check::Holds(_) => None,
        Check::Falsified(msg) => Some(msg),
    })
}

fn random_floor(seed: u64) -> Result<Option<String>> {
    let mut r = rng(seed);
    let m = r.gen_range(2..=5u16);
    let host: Host = if r.gen_bool(0.5) {
        let n = r.gen_range(3..=14);
        random_complete(&mut r, n, m).into()
    } else {
        let (s, t) = (r.gen_range(1..=8), r.gen_range(1..=8));
        random_bipartite(&mut r, s, t, m).into()
    };
    if matches!(host, Host::Complete(_)) && host.used_colors().len() < 2 {
        return Ok(None);
    }
    floor_row(&host)
}

fn gallai_sample_k9(seed: u64) -> Result<Option<String>> {
    let host = sample_gallai_exact(9, 3, seed)?;
    two_colored_both(&host)
}

fn gallai_partition_sample(seed: u64) -> Result<Option<String>> {
    let mut r = rng(seed);
    let n = r.gen_range(2..=14);
    let m = r.gen_range(1..=5u16);
    let host = crate::gallai::sample_gallai(n, m, seed)?;
    let p = gallai_partition(&host)?;
    Ok((!validate_partition(&host, &p)).then(|| "partition fails validation".to_owned()))
}

// ---------------------------------------------------------------------------
// the registry

macro_rules! claim {
    ($id:literal, $statement:literal, $expected:ident, $run:expr) => {
        Claim {
            id: $id,
            statement: $statement,
            expected: Status::$expected,
            run: $run,
        }
    };
}

static REGISTRY: &[Claim] = &[
    // R1
    claim!("R1-no-rainbow-K3uP3", "R1(9,4) has no rainbow K3 u P3", Pass, |_| free_of(r1(), "K3uP3")),
    claim!("R1-no-rainbow-K1_3uP3", "R1(9,4) has no rainbow K1,3 u P3", Pass, |_| free_of(r1(), "K1_3uP3")),
    claim!("R1-no-rainbow-P4plusuP3", "R1(9,4) has no rainbow P4+ u P3", Pass, |_| free_of(r1(), "P4plusuP3")),
    claim!("R1-no-rainbow-P5uP3", "R1(9,4) has no rainbow P5 u P3", Pass, |_| free_of(r1(), "P5uP3")),
    claim!("R1-rainbow-K3uP3-present", "R1(9,4) contains a rainbow K3 u P3", Fail, |_| contains(r1(), "K3uP3")),
    claim!("R1-rainbow-K3-needs-colors-1-2-3", "every rainbow triangle of R1(9,4) uses colors 1, 2 and 3", Pass,
        |_| needs_each(r1(), "K3", &[1, 2, 3])),
    claim!("R1-rainbow-P3-needs-color-1-or-3", "every rainbow P3 of R1(9,4) uses color 1 or color 3", Pass,
        |_| needs_one(r1(), "P3", &[1, 3])),
    claim!("R1-rainbow-P5-needs-colors-1-3", "every rainbow P5 of R1(12,5) uses colors 1 and 3", Pass,
        |_| needs_each(r1_wide(), "P5", &[1, 3])),
    claim!("R1-found-K2uK3", "R1(12,5) contains a rainbow K2 u K3", Pass, |_| contains(r1_wide(), "K2uK3")),
    claim!("R1-found-K2uP5", "R1(12,5) contains a rainbow K2 u P5", Pass, |_| contains(r1_wide(), "K2uP5")),
    claim!("R1-found-K2uP4plus", "R1(12,5) contains a rainbow K2 u P4+", Pass, |_| contains(r1_wide(), "K2uP4plus")),
    claim!("R1-mono-1conn-order", "the largest monochromatic connected subgraph of R1(9,4) has 6 vertices", Pass,
        |_| mono_equals(r1(), 1, 6)),
    claim!("R1-no-almost-spanning-mono", "R1(9,4) has no monochromatic k-connected subgraph above 2n/3 + 1 for k = 1..3", Pass,
        |_| mono_at_most(r1(), &[1, 2, 3], 7)),
    // R2
    claim!("R2-no-rainbow-K2uP6", "R2(12,6) has no rainbow K2 u P6", Pass, |_| free_of(r2(), "K2uP6")),
    claim!("R2-found-K2uK3", "R2(12,6) contains a rainbow K2 u K3", Pass, |_| contains(r2(), "K2uK3")),
    claim!("R2-found-K2uP5", "R2(12,6) contains a rainbow K2 u P5", Pass, |_| contains(r2(), "K2uP5")),
    claim!("R2-found-K2uP4plus", "R2(12,6) contains a rainbow K2 u P4+", Pass, |_| contains(r2(), "K2uP4plus")),
    claim!("R2-mono-1conn-order", "the largest monochromatic connected subgraph of R2(12,6) has 8 vertices", Pass,
        |_| mono_equals(r2(), 1, 8)),
    claim!("R2-no-almost-spanning-mono", "R2(12,6) has no monochromatic k-connected subgraph above 2n/3 + 1 for k = 1..3", Pass,
        |_| mono_at_most(r2(), &[1, 2, 3], 9)),
    // F1
    claim!("F1-no-rainbow-P4", "F1(12,6,4) has no rainbow P4", Pass, |_| free_of(f1(), "P4")),
    claim!("F1-largest-mono-component", "the largest monochromatic component of F1(12,6,4) has s/m + t = 9 vertices", Pass,
        |_| component_equals(f1(), 9)),
    claim!("F1-contains-B-members", "F1(12,6,6) contains every member of the bipartite family as a rainbow subgraph", Pass,
        |_| b_members_in(ConstructionSpec::F1 { s: 12, t: 6, m: 6 })),
    // F2
    claim!("F2-no-rainbow-4K2", "F2(13,6,5) has no rainbow 4K2", Pass, |_| free_of(f2(), "4K2")),
    claim!("F2-no-rainbow-K2u2P3", "F2(13,6,5) has no rainbow K2 u 2P3", Pass, |_| free_of(f2(), "K2u2P3")),
    claim!("F2-no-rainbow-3K2", "F2(13,6,5) has no rainbow 3K2", Fail, |_| free_of(f2(), "3K2")),
    claim!("F2-mono-1conn-bound", "no monochromatic connected subgraph of F2(13,6,5) exceeds (s-1)/2 + t + 1 = 13 vertices", Pass,
        |_| mono_at_most(f2(), &[1], 13)),
    claim!("F2-mono-3conn-order", "the largest monochromatic 3-connected subgraph of F2(13,6,5) has (s-1)/2 + t = 12 vertices", Pass,
        |_| mono_equals(f2(), 3, 12)),
    claim!("F2-contains-B-members", "F2(13,6,5) contains every member of the bipartite family as a rainbow subgraph", Pass,
        |_| b_members_in(f2())),
    // F3
    claim!("F3-no-rainbow-K1_4", "F3(12,12,6) has no rainbow K1,4", Pass, |_| free_of(f3(), "K1_4")),
    claim!("F3-m4-no-rainbow-K1_4", "F3(12,12,4) has no rainbow K1,4", Pass,
        |_| free_of(ConstructionSpec::F3 { s: 12, t: 12, m: 4 }, "K1_4")),
    claim!("F3-rainbow-K1_3-needs-colors-1-2", "every rainbow K1,3 of F3(12,12,6) uses colors 1 and 2", Pass,
        |_| needs_each(f3(), "K1_3", &[1, 2])),
    claim!("F3-rainbow-P3-needs-color-1-or-2", "every rainbow P3 of F3(12,12,6) uses color 1 or color 2", Pass,
        |_| needs_one(f3(), "P3", &[1, 2])),
    claim!("F3-mono-1conn-order", "the largest monochromatic connected subgraph of F3(12,12,6) has (s+t)/2 = 12 vertices", Pass,
        |_| mono_equals(f3(), 1, 12)),
    claim!("F3-contains-B-members", "F3(12,12,6) contains every member of the bipartite family as a rainbow subgraph", Pass,
        |_| b_members_in(f3())),
    // bipartite structure
    claim!("k13free-type-b-round-trip", "sampled type-(b) hosts are classified as case B with the planted blocks", Pass,
        |ctx| sampled(ctx, type_b_round_trip)),
    claim!("k13free-few-colors-case-a", "hosts with at most four colors are classified as case A", Pass,
        |ctx| sampled(ctx, few_colors_case_a)),
    claim!("background-k1", "the background color of a type-(b) host with m >= 5 is spanning and connected", Pass,
        |ctx| sampled(ctx, |s| background(s, 1))),
    claim!("background-k2", "the background color of a type-(b) host with m >= 6 is spanning and 2-connected", Pass,
        |ctx| sampled(ctx, |s| background(s, 2))),
    claim!("background-k3", "the background color of a type-(b) host with m >= 7 is spanning and 3-connected", Pass,
        |ctx| sampled(ctx, |s| background(s, 3))),
    // Gallai colorings
    claim!("gallai-partition-sampled", "sampled Gallai colorings admit a validated Gallai partition", Pass,
        |ctx| sampled(ctx, gallai_partition_sample)),
    claim!("gallai-two-colored-K9", "sampled Gallai 3-colorings of K9 have a spanning 2-connected and an (n-1)-vertex 3-connected two-colored subgraph", Pass,
        |ctx| sampled(ctx, gallai_sample_k9)),
    claim!("gallai-two-colored-constructions", "the Gallai 3-colored constructions have a spanning 2-connected and an (n-1)-vertex 3-connected two-colored subgraph", Pass,
        |_| two_colored_on_constructions()),
    claim!("intro-10-3-best-two-colored", "the largest 3-connected two-colored subgraph of intro(10,3) has n - 1 vertices", Pass,
        |_| intro_best(10, 3)),
    claim!("intro-12-5-best-two-colored", "the largest 5-connected two-colored subgraph of intro(12,5) has n - 2 vertices", Pass,
        |_| intro_best(12, 5)),
    // the 4t counterexample
    claim!("counter4t-t1-gallai", "counter4t(1,20) is a Gallai 3-coloring", Pass, |_| counter_gallai(1, 20)),
    claim!("counter4t-t1-bound", "no two-colored subgraph of counter4t(1,20) on more than n - 2 vertices is 4-connected", Pass,
        |_| counter_bound(1, 20)),
    claim!("counter4t-t1-attained", "counter4t(1,20) has a 4-connected two-colored subgraph on n - 2 vertices", Pass,
        |_| counter_attained(1, 20)),
    claim!("counter4t-t1-degrees", "color 1 inside V2 of counter4t(1,20) realizes the two-level sequence", Pass,
        |_| counter_degrees(1, 20)),
    claim!("counter4t-t2-gallai", "counter4t(2,40) is a Gallai 3-coloring", Pass, |_| counter_gallai(2, 40)),
    claim!("counter4t-t2-bound", "no two-colored subgraph of counter4t(2,40) on more than n - 4 vertices is 8-connected", Pass,
        |_| counter_bound(2, 40)),
    claim!("counter4t-t2-attained", "counter4t(2,40) has an 8-connected two-colored subgraph on n - 4 vertices", Pass,
        |_| counter_attained(2, 40)),
    claim!("counter4t-t2-degrees", "color 1 inside V2 of counter4t(2,40) realizes the two-level sequence", Pass,
        |_| counter_degrees(2, 40)),
    // degree sequences
    claim!("degseq-two-level", "the two-level sequence is graphical and realized exactly for t = 1..5", Pass,
        |_| eg_two_level()),
    claim!("degseq-exhaustive-n6", "the Erdős–Gallai test agrees with enumeration of all graphs on 6 vertices", Pass,
        |_| eg_exhaustive(6)),
    // paths and cycles
    claim!("paths-mono-path-vector", "random colorings of K_n with an admissible length vector have a monochromatic path of the required length in some color", Pass,
        |ctx| sampled(ctx, path_vector)),
    claim!("paths-degree-identity", "average monochromatic degrees of a coloring of K_n sum to n - 1", Pass,
        |ctx| sampled(ctx, degree_identity)),
    claim!("paths-eg-path-bound", "graphs with more than (k-1)n/2 edges contain a path on k + 1 vertices", Pass,
        |ctx| sampled(ctx, eg_path)),
    claim!("cycles-mono-cycle", "random 2- and 3-colorings of K_n have a monochromatic cycle of length at least n/m", Pass,
        |ctx| sampled(ctx, mono_cycle)),
    // floors and extraction
    claim!("floor-constructions", "every construction has a monochromatic component reaching the covering floor", Pass,
        |_| floors_on_constructions()),
    claim!("floor-random", "random colorings have a monochromatic component reaching the covering floor", Pass,
        |ctx| sampled(ctx, random_floor)),
    claim!("mader-random", "random graphs of average degree a contain a ceil(a/4)-connected subgraph", Pass,
        |ctx| sampled(ctx, mader)),
];

pub fn registry() -> &'static [Claim] {
    REGISTRY
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique() {
        let mut ids: Vec<&str> = registry().iter().map(|c| c.id).collect();
        ids.sort_unstable();
        let before = ids.len();
        ids.dedup();
        assert_eq!(before, ids.len());
        assert!(registry().iter().all(|c| !c.statement.is_empty()));
    }

    #[test]
    fn unknown_filter_is_an_error() {
        let err = run_claims("bogus-*", &RunOptions::default()).unwrap_err();
        assert!(matches!(err, Error::UnknownClaim(_)));
    }

    #[test]
    fn non_increasing_enumeration() {
        let mut seq = vec![0, 0, 0];
        let mut all = vec![seq.clone()];
        while next_non_increasing(&mut seq, 2) {
            all.push(seq.clone());
        }
        assert_eq!(all.len(), 10);
        assert!(all.iter().all(|s| s.windows(2).all(|w| w[0] >= w[1])));
    }
}
