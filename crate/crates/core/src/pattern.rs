//! Small forbidden graphs and the named families they belong to.
//!
//! Names follow a tiny grammar: `pattern := term ('u' term)*`,
//! `term := [count] base`, with `base` one of `K2 P3 P4 P5 P6 K3 K1_3
//! P4plus`. For example `2K2uK3` is two disjoint edges plus a triangle.
//! Arbitrary graphs are written `V:<n>;E:a-b,c-d,...`.

use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::embed;
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

pub const MAX_PATTERN_ORDER: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Base {
    K2,
    P3,
    P4,
    P5,
    P6,
    K3,
    K1_3,
    K1_4,
    P4Plus,
}

impl Base {
    pub const ALL: [Base; 9] = [
        Base::K2,
        Base::P3,
        Base::P4,
        Base::P5,
        Base::P6,
        Base::K3,
        Base::K1_3,
        Base::K1_4,
        Base::P4Plus,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Base::K2 => "K2",
            Base::P3 => "P3",
            Base::P4 => "P4",
            Base::P5 => "P5",
            Base::P6 => "P6",
            Base::K3 => "K3",
            Base::K1_3 => "K1_3",
            Base::K1_4 => "K1_4",
            Base::P4Plus => "P4plus",
        }
    }

    pub fn graph(self) -> SimpleGraph {
        match self {
            Base::K2 => SimpleGraph::path(2),
            Base::P3 => SimpleGraph::path(3),
            Base::P4 => SimpleGraph::path(4),
            Base::P5 => SimpleGraph::path(5),
            Base::P6 => SimpleGraph::path(6),
            Base::K3 => SimpleGraph::complete(3),
            Base::K1_3 => SimpleGraph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap(),
            Base::K1_4 => SimpleGraph::from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap(),
            // degree sequence 3,2,1,1,1
            Base::P4Plus => SimpleGraph::from_edges(5, [(0, 1), (1, 2), (2, 3), (2, 4)]).unwrap(),
        }
    }

    fn parse(s: &str) -> Option<Base> {
        Base::ALL.into_iter().find(|b| b.name() == s)
    }
}

/// A small graph without isolated vertices.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Pattern {
    graph: SimpleGraph,
    name: String,
}

impl fmt::Debug for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Pattern({})", self.name)
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

impl std::str::FromStr for Pattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_pattern(s)
    }
}

fn bad(name: &str, msg: impl Into<String>) -> Error {
    Error::InvalidPattern {
        name: name.to_owned(),
        msg: msg.into(),
    }
}

/// Disjoint union of `parts`, in order.
fn disjoint_union(parts: &[SimpleGraph]) -> SimpleGraph {
    let n = parts.iter().map(SimpleGraph::n).sum();
    let mut edges = Vec::new();
    let mut offset = 0;
    for p in parts {
        edges.extend(p.edges().map(|(u, v)| (u + offset, v + offset)));
        offset += p.n();
    }
    SimpleGraph::from_edges(n, edges).expect("disjoint union of simple graphs")
}

pub fn parse_pattern(name: &str) -> Result<Pattern> {
    let name = name.trim();
    if name.starts_with("V:") {
        return parse_explicit(name);
    }
    if name.is_empty() {
        return Err(bad(name, "empty name"));
    }
    let mut parts = Vec::new();
    for term in split_terms(name) {
        let digits = term.chars().take_while(char::is_ascii_digit).count();
        let (count, base) = term.split_at(digits);
        let count: usize = if count.is_empty() {
            1
        } else {
            count.parse().map_err(|_| bad(name, format!("bad count in `{term}`")))?
        };
        if count == 0 {
            return Err(bad(name, format!("zero count in `{term}`")));
        }
        let base = Base::parse(base).ok_or_else(|| bad(name, format!("unknown base `{base}`")))?;
        for _ in 0..count {
            parts.push(base.graph());
            if parts.iter().map(SimpleGraph::n).sum::<usize>() > MAX_PATTERN_ORDER {
                return Err(bad(name, format!("more than {MAX_PATTERN_ORDER} vertices")));
            }
        }
    }
    Pattern::from_graph(disjoint_union(&parts)).map_err(|e| match e {
        Error::InvalidPattern { msg, .. } => bad(name, msg),
        other => other,
    })
}

/// Splits on the union marker `u`, leaving the `u` inside `P4plus` alone.
fn split_terms(name: &str) -> Vec<&str> {
    let mut terms = Vec::new();
    let mut start = 0;
    for (i, ch) in name.char_indices() {
        if ch == 'u' && !name[..i].ends_with("P4pl") {
            terms.push(&name[start..i]);
            start = i + 1;
        }
    }
    terms.push(&name[start..]);
    terms
}

fn parse_explicit(name: &str) -> Result<Pattern> {
    let rest = &name[2..];
    let (n_part, e_part) = rest
        .split_once(';')
        .ok_or_else(|| bad(name, "expected `V:<n>;E:<edges>`"))?;
    let n: usize = n_part
        .trim()
        .parse()
        .map_err(|_| bad(name, format!("bad vertex count `{n_part}`")))?;
    let e_part = e_part
        .trim()
        .strip_prefix("E:")
        .ok_or_else(|| bad(name, "missing `E:`"))?;
    let mut edges = Vec::new();
    for tok in e_part.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let (a, b) = tok
            .split_once('-')
            .ok_or_else(|| bad(name, format!("bad edge `{tok}`")))?;
        let a: usize = a.trim().parse().map_err(|_| bad(name, format!("bad edge `{tok}`")))?;
        let b: usize = b.trim().parse().map_err(|_| bad(name, format!("bad edge `{tok}`")))?;
        edges.push((a, b));
    }
    if n > MAX_PATTERN_ORDER {
        return Err(bad(name, format!("more than {MAX_PATTERN_ORDER} vertices")));
    }
    let g = SimpleGraph::from_edges(n, edges).map_err(|e| bad(name, e.to_string()))?;
    Pattern::from_graph(g)
}

impl Pattern {
    /// Wraps a graph, checking the pattern invariants and deriving its name.
    pub fn from_graph(graph: SimpleGraph) -> Result<Self> {
        let placeholder = || format!("V:{}", graph.n());
        if graph.n() < 2 {
            return Err(bad(&placeholder(), "order must be at least 2"));
        }
        if graph.n() > MAX_PATTERN_ORDER {
            return Err(bad(&placeholder(), format!("more than {MAX_PATTERN_ORDER} vertices")));
        }
        if let Some(v) = (0..graph.n()).find(|&v| graph.degree(v) == 0) {
            return Err(bad(&placeholder(), format!("vertex {v} is isolated")));
        }
        let name = canonical_name(&graph);
        Ok(Pattern { graph, name })
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.graph.n()
    }

    pub fn size(&self) -> usize {
        self.graph.edge_count()
    }

    pub fn max_degree(&self) -> usize {
        self.graph.max_degree()
    }

    /// Number of connected components.
    pub fn component_number(&self) -> usize {
        self.graph.components().len()
    }

    pub fn automorphism_count(&self) -> u64 {
        embed::count_embeddings(&self.graph, &self.graph, false, 0)
    }
}

/// Grammar name when every component is a base graph, explicit form
/// otherwise.
fn canonical_name(g: &SimpleGraph) -> String {
    let mut counts = [0usize; Base::ALL.len()];
    for comp in g.components() {
        let sub = g.induced(&comp);
        match Base::ALL.iter().position(|b| isomorphic(&sub, &b.graph())) {
            Some(i) => counts[i] += 1,
            None => {
                let edges: Vec<String> = g.edges().map(|(u, v)| format!("{u}-{v}")).collect();
                return format!("V:{};E:{}", g.n(), edges.join(","));
            }
        }
    }
    let terms: Vec<String> = Base::ALL
        .iter()
        .zip(counts)
        .filter(|(_, c)| *c > 0)
        .map(|(b, c)| if c == 1 { b.name().to_owned() } else { format!("{c}{}", b.name()) })
        .collect();
    terms.join("u")
}

fn isomorphic(a: &SimpleGraph, b: &SimpleGraph) -> bool {
    a.n() == b.n()
        && a.edge_count() == b.edge_count()
        && a.degree_sequence() == b.degree_sequence()
        && embed::first_embedding(a, b, false, 0).is_some()
}

/// Whether `g` is isomorphic to a (not necessarily induced) subgraph of `h`.
pub fn is_subgraph(g: &Pattern, h: &Pattern) -> bool {
    graph_is_subgraph(&g.graph, &h.graph)
}

pub(crate) fn graph_is_subgraph(g: &SimpleGraph, h: &SimpleGraph) -> bool {
    g.n() <= h.n()
        && g.edge_count() <= h.edge_count()
        && embed::first_embedding(g, h, false, 0).is_some()
}

pub fn is_isomorphic(a: &Pattern, b: &Pattern) -> bool {
    isomorphic(&a.graph, &b.graph)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CatalogId {
    /// Connected patterns forcing an almost spanning monochromatic subgraph.
    GSet,
    /// The disconnected counterpart.
    HSet,
    /// Members of `HSet` with exactly two components.
    H2Set,
    /// `GSet ∪ HSet`.
    ASet,
    /// The bipartite-host family.
    BSet,
}

impl CatalogId {
    pub const ALL: [CatalogId; 5] = [
        CatalogId::GSet,
        CatalogId::HSet,
        CatalogId::H2Set,
        CatalogId::ASet,
        CatalogId::BSet,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CatalogId::GSet => "G_SET",
            CatalogId::HSet => "H_SET",
            CatalogId::H2Set => "H2_SET",
            CatalogId::ASet => "A_SET",
            CatalogId::BSet => "B_SET",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Keep {
    Connected,
    Disconnected,
    Any,
}

/// All subgraphs (edge subsets, isolated vertices dropped) of the `maximal`
/// patterns with order at least 3, filtered by connectivity, without
/// isomorphic duplicates.
fn closure(maximal: &[&str], keep: Keep) -> Vec<Pattern> {
    let mut out: Vec<Pattern> = Vec::new();
    for name in maximal {
        let p = parse_pattern(name).expect("catalog names are well formed");
        let edges: Vec<(usize, usize)> = p.graph.edges().collect();
        for bits in 1u32..(1 << edges.len()) {
            let chosen: Vec<(usize, usize)> = edges
                .iter()
                .enumerate()
                .filter(|(i, _)| bits >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let mut verts: Vec<usize> = chosen.iter().flat_map(|&(u, v)| [u, v]).collect();
            verts.sort_unstable();
            verts.dedup();
            if verts.len() < 3 {
                continue;
            }
            let relabel = |x: usize| verts.binary_search(&x).unwrap();
            let g = SimpleGraph::from_edges(
                verts.len(),
                chosen.iter().map(|&(u, v)| (relabel(u), relabel(v))),
            )
            .unwrap();
            let connected = g.is_connected();
            let wanted = match keep {
                Keep::Connected => connected,
                Keep::Disconnected => !connected,
                Keep::Any => true,
            };
            if !wanted || out.iter().any(|q| isomorphic(&q.graph, &g)) {
                continue;
            }
            out.push(Pattern::from_graph(g).unwrap());
        }
    }
    out.sort_by(|a, b| {
        (a.order(), a.size(), a.name()).cmp(&(b.order(), b.size(), b.name()))
    });
    out
}

/// Maximal members each family is generated from.
pub fn catalog_generators(id: CatalogId) -> &'static [&'static str] {
    match id {
        CatalogId::GSet => &["K3", "P6", "P4plus"],
        CatalogId::HSet => &["P3uP4", "K2uP5", "K2u2P3", "2K2uK3", "2K2uP4plus", "3K2uK1_3"],
        CatalogId::H2Set => &["P3uP4", "K2uP5", "K2uK3", "K2uP4plus"],
        CatalogId::ASet => &[
            "P6", "P3uP4", "K2uP5", "K2u2P3", "2K2uK3", "2K2uP4plus", "3K2uK1_3", "K3", "P4plus",
        ],
        CatalogId::BSet => &["2P3", "2K2uK1_3"],
    }
}

fn build(id: CatalogId) -> Vec<Pattern> {
    match id {
        CatalogId::GSet => closure(catalog_generators(id), Keep::Connected),
        CatalogId::HSet => closure(catalog_generators(id), Keep::Disconnected),
        CatalogId::H2Set => catalog_members(CatalogId::HSet)
            .iter()
            .filter(|p| p.component_number() == 2)
            .cloned()
            .collect(),
        CatalogId::ASet => {
            let mut v = catalog_members(CatalogId::GSet).to_vec();
            v.extend(catalog_members(CatalogId::HSet).iter().cloned());
            v
        }
        CatalogId::BSet => closure(catalog_generators(id), Keep::Any),
    }
}

/// Frozen members of a family, computed once.
pub fn catalog_members(id: CatalogId) -> &'static [Pattern] {
    static CELLS: [OnceLock<Vec<Pattern>>; 5] = [
        OnceLock::new(),
        OnceLock::new(),
        OnceLock::new(),
        OnceLock::new(),
        OnceLock::new(),
    ];
    let slot = CatalogId::ALL.iter().position(|&c| c == id).unwrap();
    CELLS[slot].get_or_init(|| build(id))
}

pub fn in_set(p: &Pattern, id: CatalogId) -> bool {
    catalog_members(id).iter().any(|q| is_isomorphic(p, q))
}
