//! Backtracking embedder shared by subgraph containment and rainbow search.
//!
//! Pattern vertices are placed in a fixed order (largest component first,
//! then inside each component the vertex with the most already-placed
//! neighbors, ties by degree then index). Host vertices are tried in
//! increasing index order, so the first embedding found is deterministic.

use std::ops::ControlFlow;

use crate::graph::SimpleGraph;
use crate::host::ColoredHost;

/// Something a pattern can be embedded into.
pub(crate) trait Target {
    fn order(&self) -> usize;
    /// `None` if `uv` is not an edge; otherwise the edge's color (0 when
    /// colors are irrelevant).
    fn edge(&self, u: usize, v: usize) -> Option<u16>;
    fn palette(&self) -> usize;
    fn degree_at_least(&self, _v: usize, _d: usize) -> bool {
        true
    }
}

impl Target for SimpleGraph {
    fn order(&self) -> usize {
        self.n()
    }

    #[inline]
    fn edge(&self, u: usize, v: usize) -> Option<u16> {
        self.has_edge(u, v).then_some(0)
    }

    fn palette(&self) -> usize {
        1
    }

    fn degree_at_least(&self, v: usize, d: usize) -> bool {
        self.degree(v) >= d
    }
}

pub(crate) struct Colored<'a, H: ColoredHost + ?Sized>(pub &'a H);

impl<H: ColoredHost + ?Sized> Target for Colored<'_, H> {
    fn order(&self) -> usize {
        self.0.order()
    }

    #[inline]
    fn edge(&self, u: usize, v: usize) -> Option<u16> {
        self.0.color(u, v).map(|c| c.0)
    }

    fn palette(&self) -> usize {
        self.0.declared_colors() as usize + 1
    }
}

pub(crate) struct Plan {
    /// Pattern vertex placed at each step.
    order: Vec<usize>,
    /// For each step, the earlier steps whose vertices are pattern-adjacent.
    back: Vec<Vec<usize>>,
    degree: Vec<usize>,
    edges: usize,
}

impl Plan {
    pub(crate) fn new(pattern: &SimpleGraph) -> Self {
        let n = pattern.n();
        let mut comps = pattern.components();
        comps.sort_by(|a, b| {
            let ea: usize = a.iter().map(|&v| pattern.degree(v)).sum();
            let eb: usize = b.iter().map(|&v| pattern.degree(v)).sum();
            eb.cmp(&ea).then(b.len().cmp(&a.len())).then(a[0].cmp(&b[0]))
        });
        let mut placed = vec![false; n];
        let mut pos = vec![usize::MAX; n];
        let mut order = Vec::with_capacity(n);
        for comp in comps {
            for _ in 0..comp.len() {
                let next = comp
                    .iter()
                    .copied()
                    .filter(|&v| !placed[v])
                    .max_by(|&a, &b| {
                        let pa = pattern.neighbors(a).iter().filter(|&&w| placed[w]).count();
                        let pb = pattern.neighbors(b).iter().filter(|&&w| placed[w]).count();
                        pa.cmp(&pb)
                            .then(pattern.degree(a).cmp(&pattern.degree(b)))
                            .then(b.cmp(&a))
                    })
                    .expect("component has an unplaced vertex");
                placed[next] = true;
                pos[next] = order.len();
                order.push(next);
            }
        }
        let back = order
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                let mut b: Vec<usize> = pattern
                    .neighbors(v)
                    .iter()
                    .map(|&w| pos[w])
                    .filter(|&p| p < i)
                    .collect();
                b.sort_unstable();
                b
            })
            .collect();
        Plan {
            order,
            back,
            degree: pattern.degrees(),
            edges: pattern.edge_count(),
        }
    }
}

struct Search<'a, T: Target, F> {
    target: &'a T,
    plan: &'a Plan,
    rainbow: bool,
    /// Host vertex chosen at each step.
    chosen: Vec<usize>,
    used_vertex: Vec<bool>,
    used_color: Vec<bool>,
    colors_left: usize,
    edges_placed: usize,
    scratch: Vec<Vec<u16>>,
    visit: F,
}

impl<T, F> Search<'_, T, F>
where
    T: Target,
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    fn step(&mut self, i: usize) -> ControlFlow<()> {
        if i == self.plan.order.len() {
            let mut map = vec![0; self.chosen.len()];
            for (step, &pv) in self.plan.order.iter().enumerate() {
                map[pv] = self.chosen[step];
            }
            return (self.visit)(&map);
        }
        let back = &self.plan.back[i];
        let need_degree = self.plan.degree[self.plan.order[i]];
        let mut new_colors = std::mem::take(&mut self.scratch[i]);
        for h in 0..self.target.order() {
            if self.used_vertex[h] || !self.target.degree_at_least(h, need_degree) {
                continue;
            }
            new_colors.clear();
            let mut ok = true;
            for &b in back {
                match self.target.edge(h, self.chosen[b]) {
                    None => {
                        ok = false;
                        break;
                    }
                    Some(c) => {
                        if self.rainbow {
                            if self.used_color[c as usize] || new_colors.contains(&c) {
                                ok = false;
                                break;
                            }
                            new_colors.push(c);
                        }
                    }
                }
            }
            if !ok {
                continue;
            }
            if self.rainbow {
                let remaining_edges = self.plan.edges - self.edges_placed - back.len();
                if remaining_edges > self.colors_left - new_colors.len() {
                    continue;
                }
                for &c in &new_colors {
                    self.used_color[c as usize] = true;
                }
                self.colors_left -= new_colors.len();
            }
            self.edges_placed += back.len();
            self.used_vertex[h] = true;
            self.chosen.push(h);
            let flow = self.step(i + 1);
            self.chosen.pop();
            self.used_vertex[h] = false;
            self.edges_placed -= back.len();
            if self.rainbow {
                for &c in &new_colors {
                    self.used_color[c as usize] = false;
                }
                self.colors_left += new_colors.len();
            }
            if flow.is_break() {
                self.scratch[i] = new_colors;
                return flow;
            }
        }
        self.scratch[i] = new_colors;
        ControlFlow::Continue(())
    }
}

/// Enumerates injective edge-preserving maps `pattern -> target`. When
/// `rainbow` is set, the images of pattern edges must carry pairwise
/// distinct colors. `visit` receives `map[pattern_vertex] = host_vertex`.
pub(crate) fn for_each_embedding<T, F>(
    pattern: &SimpleGraph,
    plan: &Plan,
    target: &T,
    rainbow: bool,
    available_colors: usize,
    visit: F,
) -> ControlFlow<()>
where
    T: Target,
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    if pattern.n() > target.order() {
        return ControlFlow::Continue(());
    }
    if rainbow && pattern.edge_count() > available_colors {
        return ControlFlow::Continue(());
    }
    let mut s = Search {
        target,
        plan,
        rainbow,
        chosen: Vec::with_capacity(pattern.n()),
        used_vertex: vec![false; target.order()],
        used_color: vec![false; target.palette().max(1)],
        colors_left: available_colors,
        edges_placed: 0,
        scratch: vec![Vec::new(); pattern.n()],
        visit,
    };
    s.step(0)
}

pub(crate) fn first_embedding<T: Target>(
    pattern: &SimpleGraph,
    target: &T,
    rainbow: bool,
    available_colors: usize,
) -> Option<Vec<usize>> {
    let plan = Plan::new(pattern);
    let mut found = None;
    let _ = for_each_embedding(pattern, &plan, target, rainbow, available_colors, |m| {
        found = Some(m.to_vec());
        ControlFlow::Break(())
    });
    found
}

pub(crate) fn count_embeddings<T: Target>(
    pattern: &SimpleGraph,
    target: &T,
    rainbow: bool,
    available_colors: usize,
) -> u64 {
    let plan = Plan::new(pattern);
    let mut count = 0u64;
    let _ = for_each_embedding(pattern, &plan, target, rainbow, available_colors, |_| {
        count += 1;
        ControlFlow::Continue(())
    });
    count
}
