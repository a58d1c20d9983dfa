//! Acceptance criteria 1-11. Runs without the libtest harness so every
//! criterion prints exactly one PASS/FAIL line; exits nonzero if any fails.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use rainbowconn::bipartite::{classify_k13_free, even_parts, gen_type_b, same_blocks, verify_background_spanning};
use rainbowconn::connectivity::{
    best_monochromatic, gyarfas_floor, is_k_connected, k_connected_among_large_subsets,
    largest_monochromatic_component, mader_extract, masks_up_to_two,
};
use rainbowconn::construct::{eg_realizable, realize_degree_sequence};
use rainbowconn::gallai::{is_gallai, sample_gallai_exact, verify_two_colored_2conn, verify_two_colored_3conn};
use rainbowconn::host::restrict;
use rainbowconn::oracle::micro_crosscheck;
use rainbowconn::paths::{check_path_vector, color_degree_identity};
use rainbowconn::rainbow::{find_rainbow, validate_embedding};
use rainbowconn::*;

const SEED: u64 = 2024;

struct Verdict {
    ok: bool,
    detail: String,
}

fn verdict(ok: bool, detail: impl Into<String>) -> Verdict {
    Verdict {
        ok,
        detail: detail.into(),
    }
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn host(spec: ConstructionSpec) -> Host {
    spec.build().expect("valid construction").host
}

fn mono_connected_order(spec: ConstructionSpec) -> usize {
    let (_, rep) = best_monochromatic(&host(spec), 1, Mode::Exact).unwrap();
    assert!(rep.exact);
    rep.lower
}

fn component_order(spec: ConstructionSpec) -> usize {
    largest_monochromatic_component(&host(spec)).map_or(0, |(_, c)| c.len())
}

fn c1_sizes() -> Verdict {
    let rows = [
        ("R1(9,4) mono connected", mono_connected_order(ConstructionSpec::R1 { n: 9, m: 4 }), 6),
        ("R2(12,6) mono connected", mono_connected_order(ConstructionSpec::R2 { n: 12, m: 6 }), 8),
        ("F1(12,6,4) component", component_order(ConstructionSpec::F1 { s: 12, t: 6, m: 4 }), 9),
        ("F2(13,6,5) component", component_order(ConstructionSpec::F2 { s: 13, t: 6, m: 5 }), 12),
        ("F3(12,12,6) component", component_order(ConstructionSpec::F3 { s: 12, t: 12, m: 6 }), 12),
    ];
    let wrong: Vec<String> = rows
        .iter()
        .filter(|r| r.1 != r.2)
        .map(|(name, got, want)| format!("{name}: got {got}, want {want}"))
        .collect();
    verdict(wrong.is_empty(), if wrong.is_empty() { "5/5 exact".into() } else { wrong.join("; ") })
}

fn c2_rainbow() -> Verdict {
    let r1 = host(ConstructionSpec::R1 { n: 9, m: 4 });
    let r1_wide = host(ConstructionSpec::R1 { n: 12, m: 5 });
    let r2 = host(ConstructionSpec::R2 { n: 12, m: 6 });
    let f1 = host(ConstructionSpec::F1 { s: 12, t: 6, m: 4 });
    let f2 = host(ConstructionSpec::F2 { s: 13, t: 6, m: 5 });
    let f3 = host(ConstructionSpec::F3 { s: 12, t: 12, m: 6 });
    let free = [
        (&r2, "R2", "K2uP6"),
        (&r1, "R1", "K3uP3"),
        (&r1, "R1", "K1_3uP3"),
        (&r1, "R1", "P4plusuP3"),
        (&r1, "R1", "P5uP3"),
        (&f1, "F1", "P4"),
        (&f3, "F3", "K1_4"),
        (&f2, "F2", "4K2"),
        (&f2, "F2", "K2u2P3"),
    ];
    let found = [
        (&r1_wide, "R1(12,5)", "K2uK3"),
        (&r1_wide, "R1(12,5)", "K2uP5"),
        (&r1_wide, "R1(12,5)", "K2uP4plus"),
        (&r2, "R2", "K2uK3"),
        (&r2, "R2", "K2uP5"),
        (&r2, "R2", "K2uP4plus"),
    ];
    let mut bad = Vec::new();
    for (h, name, p) in free {
        let p = parse_pattern(p).unwrap();
        if find_rainbow(h, &p).unwrap().is_some() {
            bad.push(format!("{name} has a rainbow {p}"));
        }
    }
    for (h, name, p) in found {
        let p = parse_pattern(p).unwrap();
        match find_rainbow(h, &p).unwrap() {
            Some(e) if validate_embedding(h, &p, &e) => {}
            _ => bad.push(format!("{name} lacks a rainbow {p}")),
        }
    }
    verdict(bad.is_empty(), if bad.is_empty() { "9 free, 6 found".into() } else { bad.join("; ") })
}

fn c3_counterexample() -> Verdict {
    let mut bad = Vec::new();
    for (t, n) in [(1, 20), (2, 40)] {
        let h = host(ConstructionSpec::Counter4t { t, n });
        let c = h.as_complete().unwrap();
        if !is_gallai(c) {
            bad.push(format!("t={t}: not Gallai"));
        }
        for mask in masks_up_to_two(&h).into_iter().filter(|m| m.len() == 2) {
            let g = restrict(&h, &mask).unwrap();
            if let Some(s) = k_connected_among_large_subsets(&g, 4 * t, n - 2 * t + 1) {
                bad.push(format!("t={t} mask {mask}: {}-connected on {} vertices", 4 * t, s.len()));
            }
        }
    }
    verdict(bad.is_empty(), if bad.is_empty() { "t=1,2 bounded by n-2t".into() } else { bad.join("; ") })
}

fn two_colored_failure(c: &ColoredComplete) -> Option<String> {
    let n = c.n();
    match verify_two_colored_2conn(c) {
        Ok(Check::Holds(w)) if w.vertices.len() == n => {}
        other => return Some(format!("2-connected: {other:?}")),
    }
    match verify_two_colored_3conn(c) {
        Ok(Check::Holds(w)) if w.vertices.len() + 1 >= n => None,
        other => Some(format!("3-connected: {other:?}")),
    }
}

fn c4_two_colored() -> Verdict {
    let mut failures: Vec<String> = (0..1000u64)
        .filter_map(|i| {
            let c = sample_gallai_exact(9, 3, SEED + i).unwrap();
            two_colored_failure(&c).map(|f| format!("seed {}: {f}", SEED + i))
        })
        .collect();
    let constructions = [
        ConstructionSpec::Intro { n: 10, k: 3 },
        ConstructionSpec::Intro { n: 12, k: 5 },
        ConstructionSpec::Counter4t { t: 1, n: 20 },
        ConstructionSpec::Counter4t { t: 2, n: 40 },
    ];
    for spec in constructions {
        let h = host(spec);
        let c = h.as_complete().unwrap();
        if let Some(f) = two_colored_failure(c) {
            failures.push(format!("{spec}: {f}"));
        }
    }
    verdict(failures.is_empty(), format!("1000 samples + 4 constructions, {} failures", failures.len()))
}

fn graphical_sequences(n: usize) -> BTreeSet<Vec<usize>> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut seen = BTreeSet::new();
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
    seen
}

fn non_increasing(n: usize, max: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, n: usize, cap: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for x in 0..=cap {
            prefix.push(x);
            go(prefix, n, x, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), n, max, &mut out);
    out
}

fn c5_degree_sequences() -> Verdict {
    let mut bad = Vec::new();
    let mut checked = 0;
    for n in 1..=7 {
        let graphical = graphical_sequences(n);
        for seq in non_increasing(n, n - 1) {
            checked += 1;
            let d = DegreeSequence::new(seq.clone()).unwrap();
            let eg = eg_realizable(&d);
            if eg != graphical.contains(&seq) {
                bad.push(format!("{seq:?}: test says {eg}"));
            }
            if eg && realize_degree_sequence(&d).map(|g| g.degrees()).ok().as_deref() != Some(&seq[..]) {
                bad.push(format!("{seq:?}: realization degrees differ"));
            }
        }
    }
    for t in 1..=5 {
        let d = DegreeSequence::two_level(t);
        if !eg_realizable(&d) || realize_degree_sequence(&d).map(|g| g.degrees()).ok().as_deref() != Some(d.as_slice()) {
            bad.push(format!("two-level t={t} not realized"));
        }
    }
    verdict(bad.is_empty(), format!("{checked} sequences, {} mismatches", bad.len()))
}

fn c6_round_trip() -> Verdict {
    let mut bad = 0;
    for i in 0..200u64 {
        let mut r = rng(SEED + i);
        let m = r.gen_range(5..=8usize);
        let (s, t) = (r.gen_range(8..=12), r.gen_range(8..=12));
        let (h, planted) = gen_type_b(&even_parts(s, m - 1), &even_parts(t, m - 1), 0.5, SEED + i).unwrap();
        match classify_k13_free(&h) {
            Ok(st) if st.is_case_b() && same_blocks(&st, &planted) => {}
            _ => bad += 1,
        }
    }
    for i in 0..200u64 {
        let mut r = rng(SEED + 10_000 + i);
        let m = r.gen_range(1..=4u16);
        let (s, t) = (r.gen_range(8..=12), r.gen_range(8..=12));
        let h = ColoredBipartite::from_fn(s, t, m, |_, _| r.gen_range(1..=m)).unwrap();
        match classify_k13_free(&h) {
            Ok(st) if !st.is_case_b() => {}
            _ => bad += 1,
        }
    }
    verdict(bad == 0, format!("400 hosts, {bad} failures"))
}

fn c7_background() -> Verdict {
    let mut bad = 0;
    for k in 1..=3usize {
        for i in 0..100u64 {
            let seed = SEED + 1000 * k as u64 + i;
            let mut r = rng(seed);
            let m = r.gen_range(k + 4..=8);
            let (s, t) = (r.gen_range(m.max(8)..=12), r.gen_range(m.max(8)..=12));
            let (h, _) = gen_type_b(&even_parts(s, m - 1), &even_parts(t, m - 1), 0.5, seed).unwrap();
            match verify_background_spanning(&h, k) {
                Ok(Check::Holds(w)) if w.order == s + t => {}
                _ => bad += 1,
            }
        }
    }
    verdict(bad == 0, format!("300 hosts (k = 1, 2, 3), {bad} failures"))
}

fn c8_paths() -> Verdict {
    let mut bad = 0;
    for i in 0..1000u64 {
        let mut r = rng(SEED + i);
        let n = r.gen_range(2..=12usize);
        let m = r.gen_range(1..=4u16);
        let h = ColoredComplete::from_fn(n, m, |_, _| r.gen_range(1..=m)).unwrap();
        let budget = r.gen_range(0..=n + 2 * m as usize - 2);
        let mut a = vec![0usize; m as usize];
        for _ in 0..budget {
            a[r.gen_range(0..m as usize)] += 1;
        }
        if !matches!(check_path_vector(&h, &a), Ok(Check::Holds(_))) || !color_degree_identity(&h) {
            bad += 1;
        }
    }
    verdict(bad == 0, format!("1000 colorings, {bad} failures"))
}

fn c9_mader() -> Verdict {
    let mut bad = 0;
    let mut run = 0;
    for i in 0..500u64 {
        let mut r = rng(SEED + i);
        let n = r.gen_range(2..=30usize);
        let p = [0.3, 0.5, 0.8][i as usize % 3];
        let g = SimpleGraph::from_fn(n, |_, _| r.gen_bool(p));
        if g.edge_count() == 0 {
            continue;
        }
        run += 1;
        match mader_extract(&g) {
            Ok(w) if is_k_connected(&g.induced(&w.vertices), w.target)
                && 4 * w.target * g.n() >= 2 * g.edge_count() => {}
            _ => bad += 1,
        }
    }
    verdict(bad == 0, format!("{run} graphs with edges, {bad} failures"))
}

fn c10_oracles() -> Verdict {
    let runs = [
        micro_crosscheck(5, 2, None, SEED, Parallelism::Parallel),
        micro_crosscheck(4, 3, None, SEED, Parallelism::Parallel),
        micro_crosscheck(6, 3, Some(100_000), SEED, Parallelism::Parallel),
    ];
    let ok = runs[0].exhaustive && runs[1].exhaustive && runs.iter().all(|r| r.agrees());
    let detail = runs
        .iter()
        .map(|r| {
            format!(
                "({},{}) {} hosts{} {} disagreements",
                r.n,
                r.m,
                r.hosts,
                if r.exhaustive { " exhaustive," } else { "," },
                r.disagreements.len()
            )
        })
        .collect::<Vec<_>>()
        .join("; ");
    verdict(ok, detail)
}

fn c11_floors() -> Verdict {
    let mut hosts: Vec<Host> = [
        ConstructionSpec::Intro { n: 10, k: 3 },
        ConstructionSpec::Intro { n: 12, k: 5 },
        ConstructionSpec::R1 { n: 9, m: 4 },
        ConstructionSpec::R1 { n: 12, m: 5 },
        ConstructionSpec::R2 { n: 12, m: 6 },
        ConstructionSpec::F1 { s: 12, t: 6, m: 4 },
        ConstructionSpec::F2 { s: 13, t: 6, m: 5 },
        ConstructionSpec::F3 { s: 12, t: 12, m: 6 },
        ConstructionSpec::F3 { s: 12, t: 12, m: 4 },
        ConstructionSpec::Counter4t { t: 1, n: 20 },
        ConstructionSpec::Counter4t { t: 2, n: 40 },
    ]
    .into_iter()
    .map(host)
    .collect();
    for i in 0..1000u64 {
        let mut r = rng(SEED + i);
        let m = r.gen_range(2..=5u16);
        if i % 2 == 0 {
            let n = r.gen_range(3..=14);
            let c = ColoredComplete::from_fn(n, m, |_, _| r.gen_range(1..=m)).unwrap();
            if c.used_colors().len() >= 2 {
                hosts.push(c.into());
            }
        } else {
            let (s, t) = (r.gen_range(1..=8), r.gen_range(1..=8));
            hosts.push(ColoredBipartite::from_fn(s, t, m, |_, _| r.gen_range(1..=m)).unwrap().into());
        }
    }
    let bad = hosts.iter().filter(|h| gyarfas_floor(h).is_err()).count();
    verdict(bad == 0, format!("{} hosts, {bad} violations", hosts.len()))
}

type Criterion = (u32, &'static str, u64, fn() -> Verdict);

const CRITERIA: [Criterion; 11] = [
    (1, "construction sizes", 5, c1_sizes),
    (2, "rainbow freeness", 10, c2_rainbow),
    (3, "4t counterexample", 30, c3_counterexample),
    (4, "two-colored spanning subgraphs", 120, c4_two_colored),
    (5, "degree sequences", 60, c5_degree_sequences),
    (6, "K1,3-free structure round trip", 60, c6_round_trip),
    (7, "background color", 60, c7_background),
    (8, "monochromatic path vector", 60, c8_paths),
    (9, "dense subgraph extraction", 60, c9_mader),
    (10, "oracle cross-checks", 600, c10_oracles),
    (11, "component floors", 60, c11_floors),
];

fn main() {
    let mut failed = 0;
    for (id, name, limit, run) in CRITERIA {
        let start = Instant::now();
        let v = run();
        let took = start.elapsed();
        let in_time = took <= Duration::from_secs(limit);
        let pass = v.ok && in_time;
        if !pass {
            failed += 1;
        }
        println!(
            "criterion {id:>2} {}: {name} ({}; {:.2}s of {limit}s{})",
            if pass { "PASS" } else { "FAIL" },
            v.detail,
            took.as_secs_f64(),
            if in_time { "" } else { ", over time limit" }
        );
    }
    println!("acceptance: {} passed, {failed} failed", CRITERIA.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
