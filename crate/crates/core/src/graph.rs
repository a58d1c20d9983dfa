//! Plain undirected simple graphs.
//!
//! `SimpleGraph` carries both sorted adjacency lists and a dense bit matrix so
//! that neighbor iteration and `has_edge` are both cheap. Graphs in this crate
//! are small (desk scale) and immutable once built.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    adj: Vec<Vec<usize>>,
    words: usize,
    bits: Vec<u64>,
    m: usize,
}

/// Serialized form: vertex count plus edge list.
#[derive(Serialize, Deserialize)]
struct GraphRepr {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Serialize for SimpleGraph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GraphRepr {
            n: self.n,
            edges: self.edges().collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SimpleGraph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = GraphRepr::deserialize(d)?;
        SimpleGraph::from_edges(r.n, r.edges).map_err(serde::de::Error::custom)
    }
}

impl std::fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SimpleGraph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl SimpleGraph {
    pub fn empty(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        SimpleGraph {
            n,
            adj: vec![Vec::new(); n],
            words,
            bits: vec![0; words * n],
            m: 0,
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.insert(u, v);
            }
        }
        g.finish();
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            let v = (u + 1) % n;
            if u != v && !g.has_edge(u, v) {
                g.insert(u, v);
            }
        }
        g.finish();
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Self::empty(n);
        for u in 1..n {
            g.insert(u - 1, u);
        }
        g.finish();
        g
    }

    pub fn complete_bipartite(s: usize, t: usize) -> Self {
        let mut g = Self::empty(s + t);
        for u in 0..s {
            for v in s..s + t {
                g.insert(u, v);
            }
        }
        g.finish();
        g
    }

    /// Builds a graph from an edge list. Loops, duplicate edges and
    /// out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(n);
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge {u}-{v} out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at {u}")));
            }
            if g.has_edge(u, v) {
                return Err(Error::InvalidGraph(format!("duplicate edge {u}-{v}")));
            }
            g.insert(u, v);
        }
        g.finish();
        Ok(g)
    }

    /// Builds a graph on `n` vertices with an edge wherever `pred(u, v)` holds
    /// (`u < v`).
    pub fn from_fn(n: usize, mut pred: impl FnMut(usize, usize) -> bool) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if pred(u, v) {
                    g.insert(u, v);
                }
            }
        }
        g.finish();
        g
    }

    fn insert(&mut self, u: usize, v: usize) {
        self.adj[u].push(v);
        self.adj[v].push(u);
        self.bits[u * self.words + v / 64] |= 1 << (v % 64);
        self.bits[v * self.words + u / 64] |= 1 << (u % 64);
        self.m += 1;
    }

    fn finish(&mut self) {
        for list in &mut self.adj {
            list.sort_unstable();
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn is_complete(&self) -> bool {
        self.n < 2 || self.m == self.n * (self.n - 1) / 2
    }

    /// Subgraph induced by `vertices`; vertex `i` of the result is
    /// `vertices[i]`.
    pub fn induced(&self, vertices: &[usize]) -> SimpleGraph {
        let mut g = Self::empty(vertices.len());
        for (i, &a) in vertices.iter().enumerate() {
            for (j, &b) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(a, b) {
                    g.insert(i, j);
                }
            }
        }
        g.finish();
        g
    }

    pub fn complement(&self) -> SimpleGraph {
        Self::from_fn(self.n, |u, v| !self.has_edge(u, v))
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        let mut stack = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            stack.push(s);
            let mut comp = Vec::new();
            while let Some(v) = stack.pop() {
                comp.push(v);
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// Components of the graph with `removed` deleted.
    pub fn components_without(&self, removed: &[usize]) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        for &r in removed {
            seen[r] = true;
        }
        let mut out = Vec::new();
        let mut stack = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            stack.push(s);
            let mut comp = Vec::new();
            while let Some(v) = stack.pop() {
                comp.push(v);
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Sorted degree sequence, non-increasing.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d = self.degrees();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_and_duplicates() {
        assert!(SimpleGraph::from_edges(3, [(0, 0)]).is_err());
        assert!(SimpleGraph::from_edges(3, [(0, 1), (1, 0)]).is_err());
        assert!(SimpleGraph::from_edges(3, [(0, 3)]).is_err());
    }

    #[test]
    fn induced_relabels() {
        let g = SimpleGraph::path(5);
        let h = g.induced(&[1, 2, 4]);
        assert_eq!(h.n(), 3);
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![(0, 1)]);
    }

    #[test]
    fn components_of_two_triangles() {
        let g = SimpleGraph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert_eq!(g.components(), vec![vec![0, 1, 2], vec![3, 4, 5]]);
        assert_eq!(g.components_without(&[0, 3]), vec![vec![1, 2], vec![4, 5]]);
        assert!(!g.is_connected());
    }

    #[test]
    fn wide_graph_bits() {
        let g = SimpleGraph::complete(130);
        assert!(g.has_edge(3, 129));
        assert!(!g.has_edge(7, 7));
        assert_eq!(g.edge_count(), 130 * 129 / 2);
        assert!(g.is_complete());
    }
}
