//! Longest monochromatic paths and cycles.
//!
//! Exact search is a subset dynamic program over `(visited set, endpoint)`
//! run separately on each connected component. Components above
//! [`EXACT_LIMIT`] vertices fall back to a work-capped DFS whose result is
//! flagged inexact.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::host::{restrict_unchecked, ColorId, ColorMask, ColoredComplete, ColoredHost};
use crate::verdict::Check;

/// Largest component handled by the exact dynamic program.
pub const EXACT_LIMIT: usize = 20;

/// Node budget for the DFS fallback on larger components.
pub const DFS_WORK_CAP: u64 = 2_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathWitness {
    pub color: ColorId,
    pub vertices: Vec<usize>,
    pub exact: bool,
}

impl PathWitness {
    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.vertices.len()
    }
}

/// Distinct vertices, consecutive ones joined by an edge of `color`.
pub fn validate_path(host: &impl ColoredHost, w: &PathWitness) -> bool {
    let v = &w.vertices;
    if v.iter().any(|&x| x >= host.order()) {
        return false;
    }
    for i in 0..v.len() {
        if v[i + 1..].contains(&v[i]) {
            return false;
        }
    }
    v.windows(2).all(|p| host.color(p[0], p[1]) == Some(w.color))
}

/// A cycle `vertices[0] … vertices[len-1] vertices[0]`. Length 2 stands for a
/// single edge and length 1 for a single vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleWitness {
    pub color: ColorId,
    pub vertices: Vec<usize>,
    pub exact: bool,
}

impl CycleWitness {
    pub fn length(&self) -> usize {
        self.vertices.len()
    }
}

pub fn validate_cycle(host: &impl ColoredHost, w: &CycleWitness) -> bool {
    let v = &w.vertices;
    let as_path = PathWitness {
        color: w.color,
        vertices: v.clone(),
        exact: w.exact,
    };
    if !validate_path(host, &as_path) {
        return false;
    }
    v.len() < 3 || host.color(v[v.len() - 1], v[0]) == Some(w.color)
}

/// Runs `f` on each component (relabelled `0..len`) and maps the resulting
/// vertex list back.
fn best_over_components(
    g: &SimpleGraph,
    f: impl Fn(&SimpleGraph) -> (Vec<usize>, bool),
) -> (Vec<usize>, bool) {
    let mut best: Vec<usize> = Vec::new();
    let mut exact = true;
    for comp in g.components() {
        if comp.len() <= best.len() {
            continue;
        }
        let h = g.induced(&comp);
        let (local, ex) = f(&h);
        exact &= ex;
        if local.len() > best.len() {
            best = local.into_iter().map(|i| comp[i]).collect();
        }
    }
    (best, exact)
}

/// A longest path of `g` (vertex list) and whether it is certified longest.
pub fn longest_path_in(g: &SimpleGraph) -> (Vec<usize>, bool) {
    if g.n() == 0 {
        return (Vec::new(), true);
    }
    best_over_components(g, |h| {
        if h.n() <= EXACT_LIMIT {
            (dp_longest_path(h), true)
        } else {
            dfs_longest_path(h)
        }
    })
}

fn masks_of(g: &SimpleGraph) -> Vec<u32> {
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect()
}

/// `reach[S]` holds the endpoints `v` of paths visiting exactly `S`.
fn dp_longest_path(g: &SimpleGraph) -> Vec<usize> {
    let n = g.n();
    let adj = masks_of(g);
    let full = 1usize << n;
    let mut reach = vec![0u32; full];
    for v in 0..n {
        reach[1 << v] = 1 << v;
    }
    let mut best_mask = 1usize;
    for mask in 1..full {
        let ends = reach[mask];
        if ends == 0 {
            continue;
        }
        if mask.count_ones() > best_mask.count_ones() {
            best_mask = mask;
        }
        let mut e = ends;
        while e != 0 {
            let v = e.trailing_zeros() as usize;
            e &= e - 1;
            let mut ext = adj[v] & !(mask as u32);
            while ext != 0 {
                let w = ext.trailing_zeros() as usize;
                ext &= ext - 1;
                reach[mask | 1 << w] |= 1 << w;
            }
        }
    }
    let mut path = Vec::with_capacity(best_mask.count_ones() as usize);
    let mut mask = best_mask;
    let mut v = reach[mask].trailing_zeros() as usize;
    loop {
        path.push(v);
        let rest = mask & !(1 << v);
        if rest == 0 {
            break;
        }
        let prev = reach[rest] & adj[v];
        debug_assert!(prev != 0);
        v = prev.trailing_zeros() as usize;
        mask = rest;
    }
    path
}

fn dfs_longest_path(g: &SimpleGraph) -> (Vec<usize>, bool) {
    struct Dfs<'a> {
        g: &'a SimpleGraph,
        on: Vec<bool>,
        stack: Vec<usize>,
        best: Vec<usize>,
        work: u64,
    }
    impl Dfs<'_> {
        fn go(&mut self) {
            self.work += 1;
            if self.stack.len() > self.best.len() {
                self.best = self.stack.clone();
            }
            if self.work > DFS_WORK_CAP || self.best.len() == self.g.n() {
                return;
            }
            let v = *self.stack.last().unwrap();
            let mut next: Vec<usize> = self.g.neighbors(v).iter().copied().filter(|&w| !self.on[w]).collect();
            // fewest onward options first
            next.sort_by_key(|&w| self.g.neighbors(w).iter().filter(|&&x| !self.on[x]).count());
            for w in next {
                self.on[w] = true;
                self.stack.push(w);
                self.go();
                self.stack.pop();
                self.on[w] = false;
            }
        }
    }
    let mut d = Dfs {
        g,
        on: vec![false; g.n()],
        stack: Vec::new(),
        best: Vec::new(),
        work: 0,
    };
    for s in 0..g.n() {
        d.on[s] = true;
        d.stack.push(s);
        d.go();
        d.stack.pop();
        d.on[s] = false;
        if d.work > DFS_WORK_CAP {
            break;
        }
    }
    let exact = d.best.len() == g.n() || d.work <= DFS_WORK_CAP;
    (d.best, exact)
}

fn check_color(host: &impl ColoredHost, color: ColorId) -> Result<()> {
    if !host.used_colors().contains(&color) {
        return Err(Error::InvalidMask(format!("color {color} is not used")));
    }
    Ok(())
}

pub fn longest_mono_path(host: &impl ColoredHost, color: ColorId) -> Result<PathWitness> {
    check_color(host, color)?;
    let g = restrict_unchecked(host, &ColorMask::single(color));
    let (vertices, exact) = longest_path_in(&g);
    Ok(PathWitness { color, vertices, exact })
}

/// A longest cycle of `g` (length ≥ 3), or an empty list if `g` is a forest.
pub fn longest_cycle_in(g: &SimpleGraph) -> (Vec<usize>, bool) {
    best_over_components(g, |h| {
        if h.n() <= EXACT_LIMIT {
            (dp_longest_cycle(h), true)
        } else {
            dfs_longest_cycle(h)
        }
    })
}

/// Paths start at the lowest vertex of their set and only extend to higher
/// vertices, so each cycle is found from its minimum vertex.
fn dp_longest_cycle(g: &SimpleGraph) -> Vec<usize> {
    let n = g.n();
    let adj = masks_of(g);
    let full = 1usize << n;
    let mut reach = vec![0u32; full];
    for v in 0..n {
        reach[1 << v] = 1 << v;
    }
    let mut best: Option<(usize, usize)> = None;
    for mask in 1..full {
        let ends = reach[mask];
        if ends == 0 {
            continue;
        }
        let low = mask.trailing_zeros() as usize;
        let size = mask.count_ones() as usize;
        if size >= 3 && ends & adj[low] != 0 && best.is_none_or(|(m, _)| size > m.count_ones() as usize) {
            best = Some((mask, (ends & adj[low]).trailing_zeros() as usize));
        }
        let mut e = ends;
        while e != 0 {
            let v = e.trailing_zeros() as usize;
            e &= e - 1;
            let above = !((2u32 << low) - 1);
            let mut ext = adj[v] & !(mask as u32) & above;
            while ext != 0 {
                let w = ext.trailing_zeros() as usize;
                ext &= ext - 1;
                reach[mask | 1 << w] |= 1 << w;
            }
        }
    }
    let Some((mut mask, mut v)) = best else {
        return Vec::new();
    };
    let low = mask.trailing_zeros() as usize;
    let mut cycle = Vec::new();
    loop {
        cycle.push(v);
        if v == low {
            break;
        }
        let rest = mask & !(1 << v);
        let prev = reach[rest] & adj[v];
        v = if rest.count_ones() == 1 {
            low
        } else {
            // the start vertex is only a valid predecessor at the end
            (prev & !(1 << low)).trailing_zeros() as usize
        };
        mask = rest;
    }
    cycle.reverse();
    cycle
}

/// Work-capped DFS from each start vertex through higher vertices only.
fn dfs_longest_cycle(g: &SimpleGraph) -> (Vec<usize>, bool) {
    fn go(g: &SimpleGraph, s: usize, on: &mut [bool], stack: &mut Vec<usize>, best: &mut Vec<usize>, work: &mut u64) {
        *work += 1;
        let v = *stack.last().unwrap();
        if stack.len() >= 3 && stack.len() > best.len() && g.has_edge(v, s) {
            *best = stack.clone();
        }
        if *work > DFS_WORK_CAP || best.len() == g.n() {
            return;
        }
        for &w in g.neighbors(v) {
            if w > s && !on[w] {
                on[w] = true;
                stack.push(w);
                go(g, s, on, stack, best, work);
                stack.pop();
                on[w] = false;
            }
        }
    }
    let mut best = Vec::new();
    let mut work = 0;
    let mut on = vec![false; g.n()];
    for s in 0..g.n() {
        if g.n() - s <= best.len() || work > DFS_WORK_CAP {
            break;
        }
        on[s] = true;
        let mut stack = vec![s];
        go(g, s, &mut on, &mut stack, &mut best, &mut work);
        on[s] = false;
    }
    let exact = best.len() == g.n() || work <= DFS_WORK_CAP;
    (best, exact)
}

/// Longest cycle in one color; falls back to an edge (length 2) if the color
/// class is a forest.
pub fn longest_mono_cycle(host: &impl ColoredHost, color: ColorId) -> Result<CycleWitness> {
    check_color(host, color)?;
    let g = restrict_unchecked(host, &ColorMask::single(color));
    let (mut vertices, exact) = longest_cycle_in(&g);
    if vertices.is_empty() {
        let (a, b) = g.edges().next().expect("used color has an edge");
        vertices = vec![a, b];
    }
    Ok(CycleWitness { color, vertices, exact })
}

/// A monochromatic cycle of length at least `⌈n/m⌉` (`m` = colors used),
/// enforced only when that bound is at least 3.
pub fn check_mono_cycle_bound(host: &ColoredComplete) -> Result<Check<CycleWitness>> {
    let used = host.used_colors();
    let bound = host.n().div_ceil(used.len());
    let mut best: Option<CycleWitness> = None;
    for c in used {
        let w = longest_mono_cycle(host, c)?;
        if best.as_ref().is_none_or(|b| w.length() > b.length()) {
            best = Some(w);
        }
    }
    let best = best.expect("complete host uses a color");
    if bound >= 3 && best.length() < bound {
        return Ok(Check::Falsified(format!(
            "longest monochromatic cycle has length {}, below {bound}",
            best.length()
        )));
    }
    Ok(Check::Holds(best))
}

/// Given `a_1, …, a_m` with `Σ a_i ≤ n + 2m - 2`, a path on at least `a_i`
/// vertices in color `i` for some `i` (the first such `i`).
pub fn check_path_vector(host: &ColoredComplete, a: &[usize]) -> Result<Check<PathWitness>> {
    let m = host.m() as usize;
    if a.len() != m {
        return Err(Error::param(format!("need {m} entries in a, got {}", a.len())));
    }
    let total: usize = a.iter().sum();
    if total > host.n() + 2 * m - 2 {
        return Err(Error::pre(format!(
            "sum of a is {total}, above n + 2m - 2 = {}",
            host.n() + 2 * m - 2
        )));
    }
    let used = host.used_colors();
    for (i, &ai) in a.iter().enumerate() {
        let color = ColorId(i as u16 + 1);
        if ai <= 1 {
            let vertices = if ai == 0 { vec![] } else { vec![0] };
            return Ok(Check::Holds(PathWitness { color, vertices, exact: true }));
        }
        if !used.contains(&color) {
            continue;
        }
        let w = longest_mono_path(host, color)?;
        if w.order() >= ai {
            return Ok(Check::Holds(w));
        }
    }
    Ok(Check::Falsified(format!("no color i has a path on a_i vertices for a = {a:?}")))
}

/// A graph with more than `(k-1)n/2` edges has a path on `k + 1` vertices.
pub fn check_eg_path_bound(g: &SimpleGraph, k: usize) -> Result<Check<Vec<usize>>> {
    if k < 2 {
        return Err(Error::param("k must be at least 2"));
    }
    if 2 * g.edge_count() <= (k - 1) * g.n() {
        return Err(Error::pre(format!(
            "{} edges is not above (k-1)n/2 = {}",
            g.edge_count(),
            (k - 1) as f64 * g.n() as f64 / 2.0
        )));
    }
    let (path, _) = longest_path_in(g);
    if path.len() > k {
        Ok(Check::Holds(path))
    } else {
        Ok(Check::Falsified(format!("longest path has {} vertices", path.len())))
    }
}

/// Per-vertex color degrees sum to `n - 1`, and so the average color
/// degrees sum to `n - 1`: `Σ_i 2|E_i| = n(n-1)`. Checked in integers.
pub fn color_degree_identity(host: &ColoredComplete) -> bool {
    let n = host.n();
    let m = host.m() as usize;
    let mut total_twice_edges = 0;
    for v in 0..n {
        let mut d = vec![0usize; m + 1];
        for w in 0..n {
            if w != v {
                d[host.get(v, w).index()] += 1;
            }
        }
        if d.iter().sum::<usize>() != n - 1 {
            return false;
        }
        total_twice_edges += d.iter().sum::<usize>();
    }
    let hist = host.color_histogram();
    total_twice_edges == n * (n - 1) && 2 * hist.iter().sum::<usize>() == n * (n - 1)
}

/// Average degree of each color class, index `i - 1` for color `i`.
pub fn mono_average_degrees(host: &ColoredComplete) -> Vec<f64> {
    let n = host.n() as f64;
    host.color_histogram()[1..].iter().map(|&e| 2.0 * e as f64 / n).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{gen_f1, gen_r1};
    use rand::{Rng, SeedableRng};

    fn brute_longest_path(g: &SimpleGraph) -> usize {
        fn go(g: &SimpleGraph, v: usize, on: &mut Vec<bool>, len: usize, best: &mut usize) {
            *best = (*best).max(len);
            for &w in g.neighbors(v) {
                if !on[w] {
                    on[w] = true;
                    go(g, w, on, len + 1, best);
                    on[w] = false;
                }
            }
        }
        let mut best = 0;
        for s in 0..g.n() {
            let mut on = vec![false; g.n()];
            on[s] = true;
            go(g, s, &mut on, 1, &mut best);
        }
        best
    }

    #[test]
    fn named_examples() {
        let k4 = ColoredComplete::monochromatic(4, 1).unwrap();
        assert_eq!(longest_mono_path(&k4, ColorId(1)).unwrap().order(), 4);
        let r1 = gen_r1(9, 4).unwrap().host;
        let w = longest_mono_path(&r1, ColorId(4)).unwrap();
        assert_eq!(w.order(), 2);
        assert!(validate_path(&r1, &w));
        let f1 = gen_f1(12, 6, 4).unwrap().host;
        let w = longest_mono_path(&f1, ColorId(1)).unwrap();
        assert_eq!(w.order(), 7);
        assert!(w.exact && validate_path(&f1, &w));
        assert!(longest_mono_path(&r1, ColorId(5)).is_err());
    }

    #[test]
    fn dp_matches_brute_force() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2);
        for _ in 0..300 {
            let n = rng.gen_range(1..=10);
            let p: f64 = rng.gen_range(0.1..0.7);
            let g = SimpleGraph::from_fn(n, |_, _| rng.gen_bool(p));
            let (path, exact) = longest_path_in(&g);
            assert!(exact);
            assert_eq!(path.len(), brute_longest_path(&g));
            assert!(path.windows(2).all(|w| g.has_edge(w[0], w[1])));
        }
    }

    #[test]
    fn dfs_fallback_finds_hamilton_path() {
        let g = SimpleGraph::cycle(30);
        let (p, exact) = longest_path_in(&g);
        assert_eq!(p.len(), 30);
        assert!(exact);
    }

    #[test]
    fn cycles() {
        let k5 = ColoredComplete::monochromatic(5, 1).unwrap();
        let w = longest_mono_cycle(&k5, ColorId(1)).unwrap();
        assert_eq!(w.length(), 5);
        assert!(validate_cycle(&k5, &w));
        // two triangles in color 1, color 2 across
        let h = ColoredComplete::from_fn(6, 2, |u, v| if (u < 3) == (v < 3) { 1 } else { 2 }).unwrap();
        let w = check_mono_cycle_bound(&h).unwrap();
        assert!(w.witness().unwrap().length() >= 3);
        let w = longest_mono_cycle(&h, ColorId(2)).unwrap();
        assert_eq!(w.length(), 6);
        assert!(validate_cycle(&h, &w));
        let (c, exact) = longest_cycle_in(&SimpleGraph::complete(25));
        assert_eq!((c.len(), exact), (25, true));
        let star = ColoredComplete::from_fn(4, 2, |u, _| if u == 0 { 1 } else { 2 }).unwrap();
        assert_eq!(longest_mono_cycle(&star, ColorId(1)).unwrap().length(), 2);
    }

    #[test]
    fn cycle_dp_matches_brute_force() {
        fn brute(g: &SimpleGraph) -> usize {
            fn go(g: &SimpleGraph, s: usize, v: usize, on: &mut Vec<bool>, len: usize, best: &mut usize) {
                if len >= 3 && g.has_edge(v, s) {
                    *best = (*best).max(len);
                }
                for &w in g.neighbors(v) {
                    if w > s && !on[w] {
                        on[w] = true;
                        go(g, s, w, on, len + 1, best);
                        on[w] = false;
                    }
                }
            }
            let mut best = 0;
            for s in 0..g.n() {
                let mut on = vec![false; g.n()];
                on[s] = true;
                go(g, s, s, &mut on, 1, &mut best);
            }
            best
        }
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(8);
        for _ in 0..300 {
            let n = rng.gen_range(1..=9);
            let g = SimpleGraph::from_fn(n, |_, _| rng.gen_bool(0.45));
            let (c, _) = longest_cycle_in(&g);
            assert_eq!(c.len(), brute(&g));
            if !c.is_empty() {
                assert!(g.has_edge(c[c.len() - 1], c[0]));
                assert!(c.windows(2).all(|w| g.has_edge(w[0], w[1])));
            }
        }
    }

    #[test]
    fn path_vector_examples() {
        let k6 = ColoredComplete::monochromatic(6, 1).unwrap();
        assert_eq!(check_path_vector(&k6, &[6]).unwrap().witness().unwrap().order(), 6);
        assert!(check_path_vector(&k6, &[7]).is_err());
        let h = ColoredComplete::from_fn(6, 3, |u, v| ((u + v) % 3 + 1) as u16).unwrap();
        let w = check_path_vector(&h, &[2, 4, 4]).unwrap();
        assert_eq!(w.witness().unwrap().color, ColorId(1));
    }

    #[test]
    fn eg_path_examples() {
        assert_eq!(check_eg_path_bound(&SimpleGraph::complete(4), 3).unwrap().witness().unwrap().len(), 4);
        assert!(check_eg_path_bound(&SimpleGraph::cycle(6), 2).unwrap().holds());
        assert!(check_eg_path_bound(&SimpleGraph::cycle(6), 3).is_err());
    }

    #[test]
    fn degree_identity() {
        let r1 = gen_r1(12, 5).unwrap().host;
        assert!(color_degree_identity(&r1));
        let s: f64 = mono_average_degrees(&r1).iter().sum();
        assert!((s - 11.0).abs() < 1e-9);
    }
}
