//! Vertex connectivity and largest k-connected subgraphs.
//!
//! Local connectivity is unit-vertex-capacity max-flow on the usual split
//! network (`v_in -> v_out` with capacity 1). Global connectivity follows
//! Esfahanian–Hakimi: for a fixed vertex `v`, the minimum over `κ(v, u)` for
//! non-neighbors `u` and `κ(x, y)` for non-adjacent neighbor pairs of `v`.
//!
//! Largest k-connected subgraph search rests on one fact: if `X` is a vertex
//! cut of size `< k` of a graph `C`, every k-connected subgraph `T ⊆ C`
//! misses all but one component `A` of `C - X`, so `T ⊆ A ∪ X`. Branching on
//! those sides after peeling to the k-core is therefore exhaustive.

use std::cmp::Reverse;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::host::{restrict, restrict_unchecked, ColorId, ColorMask, ColoredHost};
use crate::par::{self, Parallelism};

const INF: u32 = u32::MAX / 2;

struct SplitNetwork {
    to: Vec<u32>,
    cap: Vec<u32>,
    head: Vec<Vec<u32>>,
}

impl SplitNetwork {
    fn new(g: &SimpleGraph) -> Self {
        let n = g.n();
        let mut net = SplitNetwork {
            to: Vec::with_capacity(2 * (n + 2 * g.edge_count())),
            cap: Vec::with_capacity(2 * (n + 2 * g.edge_count())),
            head: vec![Vec::new(); 2 * n],
        };
        for v in 0..n {
            net.arc(2 * v, 2 * v + 1, 1);
        }
        for (u, v) in g.edges() {
            net.arc(2 * u + 1, 2 * v, INF);
            net.arc(2 * v + 1, 2 * u, INF);
        }
        net
    }

    fn arc(&mut self, a: usize, b: usize, c: u32) {
        self.head[a].push(self.to.len() as u32);
        self.to.push(b as u32);
        self.cap.push(c);
        self.head[b].push(self.to.len() as u32);
        self.to.push(a as u32);
        self.cap.push(0);
    }

    /// Pushes up to `limit` units from `source` to `sink`, one BFS path at a
    /// time. Returns the flow value.
    fn max_flow(&mut self, source: usize, sink: usize, limit: usize) -> usize {
        let nodes = self.head.len();
        let mut flow = 0;
        let mut parent = vec![u32::MAX; nodes];
        let mut queue = Vec::with_capacity(nodes);
        while flow < limit {
            parent.iter_mut().for_each(|p| *p = u32::MAX);
            queue.clear();
            queue.push(source as u32);
            parent[source] = u32::MAX - 1;
            let mut qi = 0;
            let mut reached = false;
            'bfs: while qi < queue.len() {
                let x = queue[qi] as usize;
                qi += 1;
                for &a in &self.head[x] {
                    let y = self.to[a as usize] as usize;
                    if self.cap[a as usize] > 0 && parent[y] == u32::MAX {
                        parent[y] = a;
                        if y == sink {
                            reached = true;
                            break 'bfs;
                        }
                        queue.push(y as u32);
                    }
                }
            }
            if !reached {
                break;
            }
            let mut y = sink;
            while y != source {
                let a = parent[y] as usize;
                self.cap[a] -= 1;
                self.cap[a ^ 1] += 1;
                y = self.to[a ^ 1] as usize;
            }
            flow += 1;
        }
        flow
    }

    fn reachable(&self, source: usize) -> Vec<bool> {
        let mut seen = vec![false; self.head.len()];
        let mut stack = vec![source];
        seen[source] = true;
        while let Some(x) = stack.pop() {
            for &a in &self.head[x] {
                let y = self.to[a as usize] as usize;
                if self.cap[a as usize] > 0 && !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        seen
    }
}

/// Minimum `s`–`t` vertex separator for non-adjacent `s != t`, provided its
/// size is below `limit`.
fn local_cut(g: &SimpleGraph, s: usize, t: usize, limit: usize) -> Option<Vec<usize>> {
    debug_assert!(s != t && !g.has_edge(s, t));
    let mut net = SplitNetwork::new(g);
    let f = net.max_flow(2 * s + 1, 2 * t, limit);
    if f >= limit {
        return None;
    }
    let seen = net.reachable(2 * s + 1);
    let cut: Vec<usize> = (0..g.n())
        .filter(|&v| v != s && v != t && seen[2 * v] && !seen[2 * v + 1])
        .collect();
    debug_assert_eq!(cut.len(), f);
    Some(cut)
}

/// Number of internally disjoint `s`–`t` paths, capped at `limit`.
pub fn local_connectivity(g: &SimpleGraph, s: usize, t: usize, limit: usize) -> usize {
    assert!(s != t && !g.has_edge(s, t), "local connectivity needs non-adjacent vertices");
    SplitNetwork::new(g).max_flow(2 * s + 1, 2 * t, limit)
}

/// A minimum vertex cut of `g`, if `g` is not complete and `κ(g) < limit`.
pub fn min_vertex_cut(g: &SimpleGraph, limit: usize) -> Option<Vec<usize>> {
    let n = g.n();
    if n < 2 || g.is_complete() || limit == 0 {
        return None;
    }
    let v = (0..n).min_by_key(|&v| (g.degree(v), v)).unwrap();
    let mut best: Option<Vec<usize>> = None;
    let mut bound = limit.min(g.degree(v) + 1);
    let consider = |s: usize, t: usize, best: &mut Option<Vec<usize>>, bound: &mut usize| {
        if let Some(cut) = local_cut(g, s, t, *bound) {
            *bound = cut.len();
            *best = Some(cut);
        }
    };
    for u in 0..n {
        if u != v && !g.has_edge(u, v) {
            consider(v, u, &mut best, &mut bound);
            if bound == 0 {
                return best;
            }
        }
    }
    let nb = g.neighbors(v);
    for (i, &x) in nb.iter().enumerate() {
        for &y in &nb[i + 1..] {
            if !g.has_edge(x, y) {
                consider(x, y, &mut best, &mut bound);
            }
        }
    }
    best
}

/// `κ(g)`, with `κ(K_r) = r - 1`.
pub fn vertex_connectivity(g: &SimpleGraph) -> Result<usize> {
    if g.n() == 0 {
        return Err(Error::param("vertex connectivity of the empty graph"));
    }
    if g.is_complete() {
        return Ok(g.n() - 1);
    }
    Ok(min_vertex_cut(g, g.n()).map_or(g.n() - 1, |c| c.len()))
}

/// At least `k + 1` vertices and no vertex cut of size below `k`.
pub fn is_k_connected(g: &SimpleGraph, k: usize) -> bool {
    if g.n() < k + 1 {
        return false;
    }
    if k == 0 {
        return true;
    }
    if (0..g.n()).any(|v| g.degree(v) < k) {
        return false;
    }
    min_vertex_cut(g, k).is_none()
}

/// Vertices of `set` surviving repeated deletion of vertices with fewer than
/// `k` neighbors inside the set. Output is sorted.
pub fn k_core(g: &SimpleGraph, set: &[usize], k: usize) -> Vec<usize> {
    let mut inside = vec![false; g.n()];
    for &v in set {
        inside[v] = true;
    }
    let mut deg = vec![0usize; g.n()];
    for &v in set {
        deg[v] = g.neighbors(v).iter().filter(|&&w| inside[w]).count();
    }
    let mut stack: Vec<usize> = set.iter().copied().filter(|&v| deg[v] < k).collect();
    for &v in &stack {
        inside[v] = false;
    }
    while let Some(v) = stack.pop() {
        for &w in g.neighbors(v) {
            if inside[w] {
                deg[w] -= 1;
                if deg[w] < k {
                    inside[w] = false;
                    stack.push(w);
                }
            }
        }
    }
    let mut out: Vec<usize> = set.iter().copied().filter(|&v| inside[v]).collect();
    out.sort_unstable();
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exact,
    Heuristic,
}

/// Depth of cut-branching explored before heuristic mode stops branching.
pub const HEURISTIC_DEPTH_CAP: usize = 20;

/// Result of a largest-k-connected search on a plain graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KConnectedSearch {
    /// Sorted vertex set inducing a k-connected subgraph, or empty.
    pub witness: Vec<usize>,
    /// Certified upper bound on the optimum order.
    pub upper: usize,
    pub exact: bool,
}

struct Searcher<'a> {
    g: &'a SimpleGraph,
    k: usize,
    depth_cap: Option<usize>,
    best: Vec<usize>,
    open_upper: usize,
}

impl Searcher<'_> {
    fn explore(&mut self, set: &[usize], depth: usize) {
        let core = k_core(self.g, set, self.k);
        if core.len() <= self.best.len() || core.len() < self.k + 1 {
            return;
        }
        let mut comps: Vec<Vec<usize>> = self
            .g
            .induced(&core)
            .components()
            .into_iter()
            .map(|c| c.into_iter().map(|i| core[i]).collect())
            .collect();
        comps.sort_by_key(|c| Reverse(c.len()));
        for comp in comps {
            if comp.len() <= self.best.len() || comp.len() < self.k + 1 {
                break;
            }
            let h = self.g.induced(&comp);
            let Some(local) = min_vertex_cut(&h, self.k) else {
                self.best = comp;
                continue;
            };
            if self.depth_cap.is_some_and(|cap| depth >= cap) {
                self.open_upper = self.open_upper.max(comp.len());
                if let Some(w) = greedy_witness(self.g, &comp, self.k) {
                    if w.len() > self.best.len() {
                        self.best = w;
                    }
                }
                continue;
            }
            let cut: Vec<usize> = local.iter().map(|&i| comp[i]).collect();
            let mut sides: Vec<Vec<usize>> = h
                .components_without(&local)
                .into_iter()
                .map(|side| {
                    let mut s: Vec<usize> = side.into_iter().map(|i| comp[i]).collect();
                    s.extend_from_slice(&cut);
                    s.sort_unstable();
                    s
                })
                .collect();
            sides.sort_by_key(|s| Reverse(s.len()));
            for side in sides {
                if side.len() > self.best.len() {
                    self.explore(&side, depth + 1);
                }
            }
        }
    }
}

/// Follows the larger side of each cut without branching.
fn greedy_witness(g: &SimpleGraph, set: &[usize], k: usize) -> Option<Vec<usize>> {
    let mut current = set.to_vec();
    loop {
        let core = k_core(g, &current, k);
        if core.len() < k + 1 {
            return None;
        }
        let comp: Vec<usize> = g
            .induced(&core)
            .components()
            .into_iter()
            .max_by_key(|c| (c.len(), Reverse(c[0])))
            .map(|c| c.into_iter().map(|i| core[i]).collect())?;
        if comp.len() < k + 1 {
            return None;
        }
        let h = g.induced(&comp);
        match min_vertex_cut(&h, k) {
            None => return Some(comp),
            Some(local) => {
                let side = h
                    .components_without(&local)
                    .into_iter()
                    .max_by_key(|c| (c.len(), Reverse(c[0])))?;
                current = side.into_iter().chain(local).map(|i| comp[i]).collect();
            }
        }
    }
}

/// Adds outside vertices with at least `k` neighbors in the witness; each
/// addition keeps the witness k-connected.
fn augment(g: &SimpleGraph, witness: &mut Vec<usize>, k: usize) {
    if witness.is_empty() {
        return;
    }
    let mut inside = vec![false; g.n()];
    for &v in witness.iter() {
        inside[v] = true;
    }
    let mut changed = true;
    while changed {
        changed = false;
        for v in 0..g.n() {
            if !inside[v] && g.neighbors(v).iter().filter(|&&w| inside[w]).count() >= k {
                inside[v] = true;
                witness.push(v);
                changed = true;
            }
        }
    }
    witness.sort_unstable();
}

/// Largest vertex set of `g` inducing a k-connected subgraph.
pub fn largest_k_connected_in(g: &SimpleGraph, k: usize, mode: Mode) -> Result<KConnectedSearch> {
    if k < 1 {
        return Err(Error::param("k must be at least 1"));
    }
    let mut s = Searcher {
        g,
        k,
        depth_cap: match mode {
            Mode::Exact => None,
            Mode::Heuristic => Some(HEURISTIC_DEPTH_CAP),
        },
        best: Vec::new(),
        open_upper: 0,
    };
    let all: Vec<usize> = (0..g.n()).collect();
    s.explore(&all, 0);
    let mut witness = s.best;
    match mode {
        Mode::Exact => Ok(KConnectedSearch {
            upper: witness.len(),
            witness,
            exact: true,
        }),
        Mode::Heuristic => {
            augment(g, &mut witness, k);
            Ok(KConnectedSearch {
                upper: witness.len().max(s.open_upper),
                witness,
                exact: false,
            })
        }
    }
}

/// Largest k-connected induced subgraph among vertex sets of size at least
/// `min_size`, by enumerating every such set. Intended for `n - min_size`
/// small (a handful of deleted vertices).
pub fn k_connected_among_large_subsets(
    g: &SimpleGraph,
    k: usize,
    min_size: usize,
) -> Option<Vec<usize>> {
    let n = g.n();
    let max_removed = n.saturating_sub(min_size);
    for removed in 0..=max_removed {
        let mut combo: Vec<usize> = (0..removed).collect();
        loop {
            let mut keep = vec![true; n];
            for &r in &combo {
                keep[r] = false;
            }
            let set: Vec<usize> = (0..n).filter(|&v| keep[v]).collect();
            let quick_ok = set.len() > k
                && set
                    .iter()
                    .all(|&v| g.neighbors(v).iter().filter(|&&w| keep[w]).count() >= k);
            if quick_ok && is_k_connected(&g.induced(&set), k) {
                return Some(set);
            }
            if !next_combination(&mut combo, n) {
                break;
            }
        }
    }
    None
}

/// Advances `combo` to the next `len`-subset of `0..n` in lexicographic
/// order. Returns false after the last one.
pub(crate) fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let r = combo.len();
    let mut i = r;
    while i > 0 {
        i -= 1;
        if combo[i] < n - r + i {
            combo[i] += 1;
            for j in i + 1..r {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConnectivityReport {
    pub k: usize,
    pub mask: ColorMask,
    pub witness: Vec<usize>,
    pub lower: usize,
    pub upper: usize,
    pub exact: bool,
}

/// Largest k-connected subgraph of `host` using only colors in `mask`.
pub fn largest_k_connected(
    host: &impl ColoredHost,
    mask: &ColorMask,
    k: usize,
    mode: Mode,
) -> Result<ConnectivityReport> {
    let g = restrict(host, mask)?;
    let s = largest_k_connected_in(&g, k, mode)?;
    Ok(ConnectivityReport {
        k,
        mask: mask.clone(),
        lower: s.witness.len(),
        upper: s.upper,
        witness: s.witness,
        exact: s.exact,
    })
}

fn best_over_masks(
    host: &impl ColoredHost,
    masks: Vec<ColorMask>,
    k: usize,
    mode: Mode,
    par: Parallelism,
) -> Result<ConnectivityReport> {
    if k < 1 {
        return Err(Error::param("k must be at least 1"));
    }
    if masks.is_empty() {
        return Err(Error::pre("host uses no colors"));
    }
    let reports = par::map(&masks, par, |mask| {
        let g = restrict_unchecked(host, mask);
        let s = largest_k_connected_in(&g, k, mode).expect("k >= 1 checked");
        ConnectivityReport {
            k,
            mask: mask.clone(),
            lower: s.witness.len(),
            upper: s.upper,
            witness: s.witness,
            exact: s.exact,
        }
    });
    let upper = reports.iter().map(|r| r.upper).max().unwrap_or(0);
    let exact = reports.iter().all(|r| r.exact);
    let mut best = reports
        .into_iter()
        .reduce(|a, b| if b.lower > a.lower { b } else { a })
        .expect("at least one mask");
    // the bound covers every mask, not only the winning one
    best.upper = upper;
    best.exact = exact && best.lower == best.upper;
    Ok(best)
}

/// Best single color for a k-connected monochromatic subgraph. Ties go to the
/// smallest color.
pub fn best_monochromatic(host: &impl ColoredHost, k: usize, mode: Mode) -> Result<(ColorId, ConnectivityReport)> {
    best_monochromatic_with(host, k, mode, Parallelism::default())
}

pub fn best_monochromatic_with(
    host: &impl ColoredHost,
    k: usize,
    mode: Mode,
    par: Parallelism,
) -> Result<(ColorId, ConnectivityReport)> {
    let masks = host.used_colors().into_iter().map(ColorMask::single).collect();
    let r = best_over_masks(host, masks, k, mode, par)?;
    Ok((r.mask.colors()[0], r))
}

/// Every mask of one or two used colors, in lexicographic order.
pub fn masks_up_to_two(host: &impl ColoredHost) -> Vec<ColorMask> {
    let used = host.used_colors();
    let mut masks = Vec::new();
    for (i, &a) in used.iter().enumerate() {
        masks.push(ColorMask::single(a));
        for &b in &used[i + 1..] {
            masks.push(ColorMask::pair(a, b));
        }
    }
    masks
}

/// Best mask of at most two colors for a k-connected subgraph. Ties go to
/// the lexicographically smallest mask.
pub fn best_two_colored(host: &impl ColoredHost, k: usize, mode: Mode) -> Result<ConnectivityReport> {
    best_two_colored_with(host, k, mode, Parallelism::default())
}

pub fn best_two_colored_with(
    host: &impl ColoredHost,
    k: usize,
    mode: Mode,
    par: Parallelism,
) -> Result<ConnectivityReport> {
    best_over_masks(host, masks_up_to_two(host), k, mode, par)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MaderWitness {
    /// Sorted vertices of `g` inducing the extracted subgraph.
    pub vertices: Vec<usize>,
    pub graph: SimpleGraph,
    pub average_degree: f64,
    /// Required connectivity, `⌈α / 4⌉`.
    pub target: usize,
}

fn density(g: &SimpleGraph, set: &[usize]) -> f64 {
    let h = g.induced(set);
    h.edge_count() as f64 / set.len().max(1) as f64
}

/// Extracts a `⌈α/4⌉`-connected subgraph from a graph of average degree `α`,
/// verified before returning.
pub fn mader_extract(g: &SimpleGraph) -> Result<MaderWitness> {
    let n = g.n();
    let e = g.edge_count();
    if n == 0 || e == 0 {
        return Err(Error::pre("average degree must be positive"));
    }
    // ⌈(2e/n) / 4⌉ = ⌈e / 2n⌉
    let target = e.div_ceil(2 * n);
    let average_degree = 2.0 * e as f64 / n as f64;

    // delete vertices of degree < α/2, i.e. deg * n < e; the threshold is
    // fixed from the original α
    let mut alive = vec![true; n];
    let mut deg = g.degrees();
    let mut stack: Vec<usize> = (0..n).filter(|&v| deg[v] * n < e).collect();
    for &v in &stack {
        alive[v] = false;
    }
    while let Some(v) = stack.pop() {
        for &w in g.neighbors(v) {
            if alive[w] {
                deg[w] -= 1;
                if deg[w] * n < e {
                    alive[w] = false;
                    stack.push(w);
                }
            }
        }
    }
    let mut current: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();

    let mut found = None;
    while !current.is_empty() {
        let core = k_core(g, &current, target);
        let Some(comp) = g
            .induced(&core)
            .components()
            .into_iter()
            .filter(|c| c.len() > target)
            .map(|c| c.into_iter().map(|i| core[i]).collect::<Vec<_>>())
            .max_by(|a, b| density(g, a).total_cmp(&density(g, b)))
        else {
            break;
        };
        let h = g.induced(&comp);
        match min_vertex_cut(&h, target) {
            None => {
                found = Some(comp);
                break;
            }
            Some(local) => {
                let cut: Vec<usize> = local.iter().map(|&i| comp[i]).collect();
                current = h
                    .components_without(&local)
                    .into_iter()
                    .map(|side| {
                        let mut s: Vec<usize> = side.into_iter().map(|i| comp[i]).collect();
                        s.extend_from_slice(&cut);
                        s.sort_unstable();
                        s
                    })
                    .max_by(|a, b| density(g, a).total_cmp(&density(g, b)))
                    .unwrap_or_default();
            }
        }
    }
    let vertices = match found {
        Some(v) => v,
        None => {
            let s = largest_k_connected_in(g, target, Mode::Exact)?;
            if s.witness.is_empty() {
                return Err(Error::Certification(format!(
                    "no {target}-connected subgraph in a graph of average degree {average_degree}"
                )));
            }
            s.witness
        }
    };
    let graph = g.induced(&vertices);
    if !is_k_connected(&graph, target) || vertices.len() < target {
        return Err(Error::Certification(format!(
            "extracted subgraph is not {target}-connected"
        )));
    }
    Ok(MaderWitness {
        vertices,
        graph,
        average_degree,
        target,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GyarfasReport {
    pub color: ColorId,
    /// Sorted vertices of the largest monochromatic component.
    pub component: Vec<usize>,
    /// `⌈n/(m-1)⌉` for complete hosts, `⌈(s+t)/m⌉` for bipartite hosts, with
    /// `m` the number of colors used.
    pub floor: usize,
}

/// Largest monochromatic component (at least one edge). Ties go to the
/// smallest color, then the component with the smallest vertex.
pub fn largest_monochromatic_component(host: &impl ColoredHost) -> Option<(ColorId, Vec<usize>)> {
    let mut best: Option<(ColorId, Vec<usize>)> = None;
    for c in host.used_colors() {
        let g = restrict_unchecked(host, &ColorMask::single(c));
        for comp in g.components() {
            if comp.len() >= 2 && best.as_ref().is_none_or(|(_, b)| comp.len() > b.len()) {
                best = Some((c, comp));
            }
        }
    }
    best
}

pub fn gyarfas_floor(host: &crate::host::Host) -> Result<GyarfasReport> {
    let used = host.used_colors().len();
    let floor = match host {
        crate::host::Host::Complete(c) => {
            if used < 2 {
                return Err(Error::pre("host must use at least two colors"));
            }
            c.n().div_ceil(used - 1)
        }
        crate::host::Host::Bipartite(b) => (b.s() + b.t()).div_ceil(used.max(1)),
    };
    let (color, component) =
        largest_monochromatic_component(host).ok_or_else(|| Error::pre("host has no edges"))?;
    if component.len() < floor {
        return Err(Error::Certification(format!(
            "largest monochromatic component has {} vertices, below the floor {floor}",
            component.len()
        )));
    }
    Ok(GyarfasReport {
        color,
        component,
        floor,
    })
}
