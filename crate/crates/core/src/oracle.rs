//! Brute-force reference implementations and the micro-scale cross-check.
//!
//! Nothing here shares code with the fast algorithms beyond the graph and
//! host types.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::connectivity::{largest_k_connected_in, masks_up_to_two, vertex_connectivity, Mode};
use crate::graph::SimpleGraph;
use crate::host::{restrict, ColorMask, ColoredComplete, ColoredHost};
use crate::par::{self, Parallelism};
use crate::paths::{longest_mono_path, validate_path};
use crate::pattern::{parse_pattern, Pattern};
use crate::rainbow::{count_rainbow, find_rainbow, validate_embedding};

/// Whether a rainbow copy exists and how many distinct copies (edge sets)
/// there are, by trying every injection of pattern vertices.
pub fn naive_rainbow(host: &impl ColoredHost, p: &Pattern) -> (bool, u64) {
    let g = p.graph();
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let n = host.order();
    let mut map = Vec::with_capacity(g.n());
    let mut used = vec![false; n];
    let mut images: HashSet<Vec<(usize, usize)>> = HashSet::new();
    fn go(
        host: &impl ColoredHost,
        k: usize,
        edges: &[(usize, usize)],
        map: &mut Vec<usize>,
        used: &mut [bool],
        images: &mut HashSet<Vec<(usize, usize)>>,
    ) {
        if map.len() == k {
            let mut colors = Vec::with_capacity(edges.len());
            let mut image = Vec::with_capacity(edges.len());
            for &(a, b) in edges {
                let (x, y) = (map[a], map[b]);
                match host.color(x, y) {
                    Some(c) if !colors.contains(&c) => colors.push(c),
                    _ => return,
                }
                image.push((x.min(y), x.max(y)));
            }
            image.sort_unstable();
            images.insert(image);
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                map.push(v);
                go(host, k, edges, map, used, images);
                map.pop();
                used[v] = false;
            }
        }
    }
    go(host, g.n(), &edges, &mut map, &mut used, &mut images);
    (!images.is_empty(), images.len() as u64)
}

fn connected_table(g: &SimpleGraph) -> Vec<bool> {
    let n = g.n();
    let adj: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w))
        .collect();
    (0..1u64 << n)
        .map(|s| {
            if s == 0 {
                return true;
            }
            let mut seen = s & s.wrapping_neg();
            loop {
                let mut grow = seen;
                let mut it = seen;
                while it != 0 {
                    let v = it.trailing_zeros() as usize;
                    it &= it - 1;
                    grow |= adj[v] & s;
                }
                if grow == seen {
                    return seen == s;
                }
                seen = grow;
            }
        })
        .collect()
}

/// `κ` of the subgraph induced by every vertex subset (bitmask index): the
/// fewest deletions leaving a disconnected graph or a single vertex.
pub fn naive_connectivity_table(g: &SimpleGraph) -> Vec<usize> {
    assert!(g.n() <= 16, "table is exponential in n");
    let conn = connected_table(g);
    (0..1u64 << g.n())
        .map(|s| {
            let size = s.count_ones() as usize;
            let mut best = size.saturating_sub(1);
            // every sub-mask t of s
            let mut t = s;
            loop {
                let kept = t.count_ones() as usize;
                if kept >= 2 && !conn[t as usize] {
                    best = best.min(size - kept);
                }
                if t == 0 {
                    break;
                }
                t = (t - 1) & s;
            }
            best
        })
        .collect()
}

pub fn naive_vertex_connectivity(g: &SimpleGraph) -> usize {
    naive_connectivity_table(g)[(1usize << g.n()) - 1]
}

/// Order of the largest vertex set inducing a k-connected subgraph.
pub fn naive_largest_k_connected(g: &SimpleGraph, k: usize) -> usize {
    largest_from_table(&naive_connectivity_table(g), k)
}

fn largest_from_table(table: &[usize], k: usize) -> usize {
    table
        .iter()
        .enumerate()
        .filter(|&(s, &kappa)| s.count_ones() as usize > k && kappa >= k)
        .map(|(s, _)| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Order of a longest path, by extending every simple path.
pub fn naive_longest_path(g: &SimpleGraph) -> usize {
    fn go(g: &SimpleGraph, v: usize, on: &mut [bool], len: usize) -> usize {
        let mut best = len;
        for &w in g.neighbors(v) {
            if !on[w] {
                on[w] = true;
                best = best.max(go(g, w, on, len + 1));
                on[w] = false;
            }
        }
        best
    }
    let mut on = vec![false; g.n()];
    (0..g.n())
        .map(|s| {
            on[s] = true;
            let r = go(g, s, &mut on, 1);
            on[s] = false;
            r
        })
        .max()
        .unwrap_or(0)
}

/// Patterns exercised by the cross-check, smallest first.
pub const CROSSCHECK_PATTERNS: [&str; 9] = [
    "P3",
    "2K2",
    "K3",
    "P4",
    "K1_3",
    "V:4;E:0-1,1-2,2-3,0-3",
    "K2uP3",
    "P5",
    "P4plus",
];

/// Hosts beyond this many colorings are sampled instead of enumerated.
pub const FULL_ENUMERATION_LIMIT: u64 = 1 << 20;

pub const DEFAULT_SAMPLES: u64 = 100_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrosscheckReport {
    pub n: usize,
    pub m: u16,
    pub hosts: u64,
    pub exhaustive: bool,
    pub comparisons: u64,
    pub disagreements: Vec<String>,
}

impl CrosscheckReport {
    pub fn agrees(&self) -> bool {
        self.disagreements.is_empty()
    }
}

/// Compares the fast algorithms against the oracles on one host. Returns
/// the number of comparisons and any disagreements.
pub fn crosscheck_host(host: &ColoredComplete, patterns: &[Pattern]) -> (u64, Vec<String>) {
    let mut count = 0;
    let mut bad = Vec::new();
    let tag = || crate::io::write_coloring_string(&host.clone().into()).replace('\n', " / ");
    for p in patterns.iter().filter(|p| p.order() <= host.n()) {
        let (found, copies) = naive_rainbow(host, p);
        let fast = find_rainbow(host, p).expect("pattern fits");
        let fast_count = count_rainbow(host, p).expect("pattern fits");
        count += 2;
        if fast.is_some() != found || fast_count != copies {
            bad.push(format!("rainbow {p}: fast ({}, {fast_count}) vs naive ({found}, {copies}) on {}", fast.is_some(), tag()));
        }
        if let Some(e) = fast {
            if !validate_embedding(host, p, &e) {
                bad.push(format!("invalid embedding for {p} on {}", tag()));
            }
        }
    }
    for mask in masks_up_to_two(host) {
        let g = restrict(host, &mask).expect("mask of used colors");
        let table = naive_connectivity_table(&g);
        let kappa = vertex_connectivity(&g).expect("n >= 1");
        count += 1;
        if kappa != table[table.len() - 1] {
            bad.push(format!("kappa mask {mask}: {kappa} vs {} on {}", table[table.len() - 1], tag()));
        }
        for k in 1..=3 {
            let want = largest_from_table(&table, k);
            let exact = largest_k_connected_in(&g, k, Mode::Exact).expect("k >= 1");
            count += 1;
            if exact.witness.len() != want || exact.upper != want {
                bad.push(format!(
                    "largest {k}-connected mask {mask}: {} vs {want} on {}",
                    exact.witness.len(),
                    tag()
                ));
            }
        }
    }
    for c in host.used_colors() {
        let w = longest_mono_path(host, c).expect("used color");
        let g = restrict(host, &ColorMask::single(c)).expect("used color");
        let want = naive_longest_path(&g);
        count += 1;
        if w.order() != want || !validate_path(host, &w) {
            bad.push(format!("longest path color {c}: {} vs {want} on {}", w.order(), tag()));
        }
    }
    (count, bad)
}

fn decode(n: usize, m: u16, mut index: u64) -> ColoredComplete {
    ColoredComplete::from_fn(n, m, |_, _| {
        let c = (index % m as u64) as u16 + 1;
        index /= m as u64;
        c
    })
    .expect("valid digits")
}

fn sample(n: usize, m: u16, seed: u64, index: u64) -> ColoredComplete {
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(index));
    ColoredComplete::from_fn(n, m, |_, _| rng.gen_range(1..=m)).expect("valid colors")
}

/// Runs [`crosscheck_host`] on every coloring of `K_n` with colors `1..=m`
/// when there are at most [`FULL_ENUMERATION_LIMIT`] of them and `samples`
/// is `None`; otherwise on `samples` seeded random colorings (default
/// [`DEFAULT_SAMPLES`]). Sample `i` uses seed `seed + i`.
pub fn micro_crosscheck(n: usize, m: u16, samples: Option<u64>, seed: u64, par: Parallelism) -> CrosscheckReport {
    assert!((2..=8).contains(&n) && m >= 1, "crosscheck is meant for tiny hosts");
    let pairs = (n * (n - 1) / 2) as u32;
    let total = (m as u64).checked_pow(pairs).filter(|&t| t <= FULL_ENUMERATION_LIMIT);
    let exhaustive = total.is_some() && samples.is_none();
    let hosts = if exhaustive {
        total.unwrap()
    } else {
        samples.unwrap_or(DEFAULT_SAMPLES)
    };
    let patterns: Vec<Pattern> = CROSSCHECK_PATTERNS
        .iter()
        .map(|s| parse_pattern(s).expect("fixed pattern names"))
        .collect();
    let results = par::map_range(0..hosts, par, |i| {
        let host = if exhaustive { decode(n, m, i) } else { sample(n, m, seed, i) };
        crosscheck_host(&host, &patterns)
    });
    let mut comparisons = 0;
    let mut disagreements = Vec::new();
    for (c, bad) in results {
        comparisons += c;
        disagreements.extend(bad);
    }
    CrosscheckReport {
        n,
        m,
        hosts,
        exhaustive,
        comparisons,
        disagreements,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::host::ColorId;

    #[test]
    fn oracle_basics() {
        assert_eq!(naive_vertex_connectivity(&SimpleGraph::complete(5)), 4);
        assert_eq!(naive_vertex_connectivity(&SimpleGraph::cycle(5)), 2);
        assert_eq!(naive_vertex_connectivity(&SimpleGraph::complete_bipartite(3, 3)), 3);
        assert_eq!(naive_vertex_connectivity(&SimpleGraph::empty(3)), 0);
        assert_eq!(naive_largest_k_connected(&SimpleGraph::path(5), 2), 0);
        assert_eq!(naive_largest_k_connected(&SimpleGraph::path(5), 1), 5);
        assert_eq!(naive_longest_path(&SimpleGraph::cycle(6)), 6);
        let k3 = ColoredComplete::from_fn(3, 3, |u, v| (u + v) as u16).unwrap();
        assert_eq!(naive_rainbow(&k3, &parse_pattern("K3").unwrap()), (true, 1));
        assert_eq!(naive_rainbow(&k3, &parse_pattern("P3").unwrap()), (true, 3));
    }

    #[test]
    fn decode_covers_all_colorings() {
        let all: HashSet<String> = (0..729)
            .map(|i| crate::io::write_coloring_string(&decode(4, 3, i).into()))
            .collect();
        assert_eq!(all.len(), 729);
        assert_eq!(decode(4, 3, 0).used_colors(), vec![ColorId(1)]);
    }

    #[test]
    fn small_exhaustive_runs_agree() {
        let r = micro_crosscheck(4, 2, None, 0, Parallelism::Sequential);
        assert!(r.exhaustive);
        assert_eq!(r.hosts, 64);
        assert!(r.agrees(), "{:?}", r.disagreements);
        let r = micro_crosscheck(4, 1, None, 0, Parallelism::Parallel);
        assert_eq!(r.hosts, 1);
        assert!(r.agrees());
    }
}
