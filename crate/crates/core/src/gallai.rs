//! Gallai colorings: recognition, partitions, sampling, and two-colored
//! connectivity checks.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::connectivity::{is_k_connected, k_connected_among_large_subsets, masks_up_to_two};
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::host::{restrict_unchecked, ColorId, ColorMask, ColoredComplete, ColoredHost};
use crate::rainbow::find_rainbow_triangle;
use crate::verdict::Check;

/// No rainbow triangle.
pub fn is_gallai(host: &ColoredComplete) -> bool {
    find_rainbow_triangle(host).is_none()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossColor {
    pub a: usize,
    pub b: usize,
    pub color: ColorId,
}

/// Parts (each sorted, ordered by smallest vertex) and the color between
/// every pair of parts `a < b`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GallaiPartition {
    pub parts: Vec<Vec<usize>>,
    pub cross_colors: Vec<CrossColor>,
}

impl GallaiPartition {
    /// Distinct colors between parts, ascending.
    pub fn reduced_colors(&self) -> Vec<ColorId> {
        let mut c: Vec<ColorId> = self.cross_colors.iter().map(|x| x.color).collect();
        c.sort_unstable();
        c.dedup();
        c
    }
}

/// Independent check of the partition contract.
pub fn validate_partition(host: &ColoredComplete, p: &GallaiPartition) -> bool {
    let mut owner = vec![usize::MAX; host.n()];
    for (i, part) in p.parts.iter().enumerate() {
        for &v in part {
            if v >= host.n() || owner[v] != usize::MAX {
                return false;
            }
            owner[v] = i;
        }
    }
    if p.parts.len() < 2 || p.parts.iter().any(Vec::is_empty) || owner.contains(&usize::MAX) {
        return false;
    }
    let mut seen = Vec::new();
    for u in 0..host.n() {
        for v in u + 1..host.n() {
            let (a, b) = (owner[u].min(owner[v]), owner[u].max(owner[v]));
            if a == b {
                continue;
            }
            let c = host.get(u, v);
            let listed = p.cross_colors.iter().find(|x| x.a == a && x.b == b);
            if listed.is_none_or(|x| x.color != c) {
                return false;
            }
            if !seen.contains(&c) {
                seen.push(c);
            }
        }
    }
    seen.len() <= 2
}

fn finish(parts: Vec<Vec<usize>>, host: &ColoredComplete) -> GallaiPartition {
    let mut parts = parts;
    for p in &mut parts {
        p.sort_unstable();
    }
    parts.sort_by_key(|p| p[0]);
    let mut cross_colors = Vec::new();
    for a in 0..parts.len() {
        for b in a + 1..parts.len() {
            cross_colors.push(CrossColor {
                a,
                b,
                color: host.get(parts[a][0], parts[b][0]),
            });
        }
    }
    GallaiPartition { parts, cross_colors }
}

/// Merges parts joined by more than one color until every pair is
/// monochromatic. Returns `None` if fewer than two parts remain.
fn merge_until_monochromatic(host: &ColoredComplete, mut parts: Vec<Vec<usize>>) -> Option<Vec<Vec<usize>>> {
    'outer: loop {
        if parts.len() < 2 {
            return None;
        }
        for a in 0..parts.len() {
            for b in a + 1..parts.len() {
                let first = host.get(parts[a][0], parts[b][0]);
                let mixed = parts[a]
                    .iter()
                    .any(|&u| parts[b].iter().any(|&v| host.get(u, v) != first));
                if mixed {
                    let pb = parts.swap_remove(b);
                    parts[a].extend(pb);
                    continue 'outer;
                }
            }
        }
        return Some(parts);
    }
}

/// Some partition with at least two parts, one color between each pair of
/// parts and at most two colors overall. Checked by [`validate_partition`]
/// before returning.
pub fn gallai_partition(host: &ColoredComplete) -> Result<GallaiPartition> {
    if !is_gallai(host) {
        return Err(Error::pre("host has a rainbow triangle"));
    }
    let n = host.n();
    let used = host.used_colors();
    if used.len() <= 2 {
        let p = finish((0..n).map(|v| vec![v]).collect(), host);
        return certify(host, p);
    }
    for (i, &a) in used.iter().enumerate() {
        for &b in &used[i + 1..] {
            // components of the edges colored outside {a, b}
            let others = SimpleGraph::from_fn(n, |u, v| {
                let c = host.get(u, v);
                c != a && c != b
            });
            let comps = others.components();
            if comps.len() < 2 {
                continue;
            }
            if let Some(parts) = merge_until_monochromatic(host, comps) {
                let p = finish(parts, host);
                if p.reduced_colors().len() <= 2 {
                    return certify(host, p);
                }
            }
        }
    }
    if n <= 10 {
        if let Some(p) = exhaustive_partition(host) {
            return certify(host, p);
        }
    }
    Err(Error::Certification(format!(
        "no partition found for a Gallai coloring on {n} vertices"
    )))
}

/// Merges parts along one reduced color: if the parts joined by color `c`
/// fall into several groups, every edge between groups has the other
/// reduced color, so each group can become a single part.
pub fn coarsen(host: &ColoredComplete, p: &GallaiPartition) -> GallaiPartition {
    let mut current = p.clone();
    loop {
        let l = current.parts.len();
        let mut next = None;
        for c in current.reduced_colors() {
            let q = SimpleGraph::from_edges(
                l,
                current
                    .cross_colors
                    .iter()
                    .filter(|x| x.color == c)
                    .map(|x| (x.a, x.b)),
            )
            .expect("part pairs are distinct");
            let groups = q.components();
            if groups.len() >= 2 && groups.len() < l {
                let parts = groups
                    .iter()
                    .map(|g| g.iter().flat_map(|&i| current.parts[i].iter().copied()).collect())
                    .collect();
                next = Some(finish(parts, host));
                break;
            }
        }
        match next {
            Some(n) => current = n,
            None => return current,
        }
    }
}

fn certify(host: &ColoredComplete, p: GallaiPartition) -> Result<GallaiPartition> {
    let p = coarsen(host, &p);
    if validate_partition(host, &p) {
        Ok(p)
    } else {
        Err(Error::Certification("extracted partition fails validation".into()))
    }
}

/// Tries every set partition into at least two blocks (restricted growth
/// strings).
fn exhaustive_partition(host: &ColoredComplete) -> Option<GallaiPartition> {
    let n = host.n();
    let mut label = vec![0usize; n];
    loop {
        let blocks = label.iter().max().unwrap() + 1;
        if blocks >= 2 {
            let mut parts = vec![Vec::new(); blocks];
            for (v, &l) in label.iter().enumerate() {
                parts[l].push(v);
            }
            let p = finish(parts, host);
            if validate_partition(host, &p) {
                return Some(p);
            }
        }
        // next restricted growth string
        let mut i = n;
        loop {
            if i <= 1 {
                return None;
            }
            i -= 1;
            let cap = label[..i].iter().max().unwrap() + 1;
            if label[i] < cap {
                label[i] += 1;
                label[i + 1..].iter_mut().for_each(|x| *x = 0);
                break;
            }
        }
    }
}

/// Random Gallai coloring of `K_n` with colors from `1..=m`, built by
/// substituting colorings into a randomly two-colored quotient `K_r`,
/// `2 ≤ r ≤ min(len, 5)`. Each quotient takes one color not used yet (while
/// any remain) and one random color. Deterministic per seed.
pub fn sample_gallai(n: usize, m: u16, seed: u64) -> Result<ColoredComplete> {
    if n < 2 || m < 1 {
        return Err(Error::param("sample_gallai needs n >= 2 and m >= 1"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(sample_with(n, m, &mut rng))
}

fn sample_with(n: usize, m: u16, rng: &mut ChaCha8Rng) -> ColoredComplete {
    let mut colors = vec![vec![0u16; n]; n];
    let mut fresh: Vec<u16> = (1..=m).collect();
    fresh.shuffle(rng);
    let vertices: Vec<usize> = (0..n).collect();
    fill(&vertices, m, &mut fresh, rng, &mut colors);
    ColoredComplete::from_fn(n, m, |u, v| colors[u][v]).expect("colors in range")
}

fn fill(vs: &[usize], m: u16, fresh: &mut Vec<u16>, rng: &mut ChaCha8Rng, out: &mut [Vec<u16>]) {
    if vs.len() < 2 {
        return;
    }
    let r = rng.gen_range(2..=vs.len().min(5));
    let mut shuffled = vs.to_vec();
    shuffled.shuffle(rng);
    // r - 1 distinct cut points
    let mut cuts: Vec<usize> = (1..vs.len()).collect();
    cuts.shuffle(rng);
    let mut cuts: Vec<usize> = cuts[..r - 1].to_vec();
    cuts.sort_unstable();
    let mut parts = Vec::with_capacity(r);
    let mut start = 0;
    for c in cuts.into_iter().chain(std::iter::once(vs.len())) {
        parts.push(shuffled[start..c].to_vec());
        start = c;
    }
    let a = fresh.pop().unwrap_or_else(|| rng.gen_range(1..=m));
    let b = if rng.gen_bool(0.5) {
        fresh.pop().unwrap_or_else(|| rng.gen_range(1..=m))
    } else {
        rng.gen_range(1..=m)
    };
    for i in 0..r {
        for j in i + 1..r {
            let c = if rng.gen_bool(0.5) { a } else { b };
            for &u in &parts[i] {
                for &v in &parts[j] {
                    out[u][v] = c;
                    out[v][u] = c;
                }
            }
        }
    }
    for p in &parts {
        fill(p, m, fresh, rng, out);
    }
}

/// Like [`sample_gallai`] but redraws until exactly `m` colors appear. A
/// Gallai coloring of `K_n` uses at most `n - 1` colors, so `m < n` is
/// required.
pub fn sample_gallai_exact(n: usize, m: u16, seed: u64) -> Result<ColoredComplete> {
    if n < 2 || m < 1 || m as usize >= n.max(3) {
        return Err(Error::param(format!("cannot force {m} colors on K_{n}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let h = sample_with(n, m, &mut rng);
        if h.uses_all_colors() {
            return Ok(h);
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoColoredWitness {
    pub mask: ColorMask,
    pub vertices: Vec<usize>,
    pub k: usize,
}

fn two_colored_pre(host: &ColoredComplete) -> Result<()> {
    if host.n() < 7 {
        return Err(Error::pre(format!("need n >= 7, got {}", host.n())));
    }
    let used = host.used_colors().len();
    if used != 3 {
        return Err(Error::pre(format!("need exactly 3 colors, host uses {used}")));
    }
    if !is_gallai(host) {
        return Err(Error::pre("host has a rainbow triangle"));
    }
    Ok(())
}

fn two_color_masks(host: &ColoredComplete) -> Vec<ColorMask> {
    masks_up_to_two(host).into_iter().filter(|m| m.len() == 2).collect()
}

/// A spanning 2-connected subgraph using at most two colors.
pub fn verify_two_colored_2conn(host: &ColoredComplete) -> Result<Check<TwoColoredWitness>> {
    two_colored_pre(host)?;
    for mask in two_color_masks(host) {
        let g = restrict_unchecked(host, &mask);
        if is_k_connected(&g, 2) {
            return Ok(Check::Holds(TwoColoredWitness {
                mask,
                vertices: (0..host.n()).collect(),
                k: 2,
            }));
        }
    }
    Ok(Check::Falsified(
        "no color pair spans a 2-connected subgraph".into(),
    ))
}

/// A 3-connected subgraph on at least `n - 1` vertices using at most two
/// colors.
pub fn verify_two_colored_3conn(host: &ColoredComplete) -> Result<Check<TwoColoredWitness>> {
    two_colored_pre(host)?;
    let n = host.n();
    for mask in two_color_masks(host) {
        let g = restrict_unchecked(host, &mask);
        if let Some(vertices) = k_connected_among_large_subsets(&g, 3, n - 1) {
            return Ok(Check::Holds(TwoColoredWitness { mask, vertices, k: 3 }));
        }
    }
    Ok(Check::Falsified(
        "no color pair has a 3-connected subgraph on n - 1 vertices".into(),
    ))
}
