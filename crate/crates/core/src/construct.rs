//! Deterministic generators for the extremal colorings, plus degree-sequence
//! realization.
//!
//! Every generator returns the host together with its named vertex parts.
//! Complete hosts number parts consecutively (`V1` first). Bipartite hosts
//! use global labels: `U` is `0..s`, `V` is `s..s+t`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::host::{ColoredBipartite, ColoredComplete, Host};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ConstructionId {
    #[serde(rename = "intro")]
    Intro,
    R1,
    R2,
    F1,
    F2,
    F3,
    #[serde(rename = "counter4t")]
    Counter4t,
}

impl ConstructionId {
    pub const ALL: [ConstructionId; 7] = [
        ConstructionId::Intro,
        ConstructionId::R1,
        ConstructionId::R2,
        ConstructionId::F1,
        ConstructionId::F2,
        ConstructionId::F3,
        ConstructionId::Counter4t,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ConstructionId::Intro => "intro",
            ConstructionId::R1 => "R1",
            ConstructionId::R2 => "R2",
            ConstructionId::F1 => "F1",
            ConstructionId::F2 => "F2",
            ConstructionId::F3 => "F3",
            ConstructionId::Counter4t => "counter4t",
        }
    }
}

impl fmt::Display for ConstructionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for ConstructionId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ConstructionId::ALL
            .into_iter()
            .find(|c| c.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::param(format!("unknown construction `{s}`")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedPart {
    pub name: String,
    pub vertices: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartMetadata {
    pub construction: ConstructionId,
    pub params: BTreeMap<String, usize>,
    pub parts: Vec<NamedPart>,
}

impl PartMetadata {
    fn new(id: ConstructionId, params: &[(&str, usize)]) -> Self {
        PartMetadata {
            construction: id,
            params: params.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
            parts: Vec::new(),
        }
    }

    fn push(&mut self, name: impl Into<String>, vertices: std::ops::Range<usize>) {
        self.parts.push(NamedPart {
            name: name.into(),
            vertices: vertices.collect(),
        });
    }

    pub fn part(&self, name: &str) -> Option<&[usize]> {
        self.parts
            .iter()
            .find(|p| p.name == name)
            .map(|p| p.vertices.as_slice())
    }
}

#[derive(Clone, Debug)]
pub struct Construction<H> {
    pub host: H,
    pub meta: PartMetadata,
}

impl<H: Into<Host>> Construction<H> {
    pub fn into_host(self) -> Construction<Host> {
        Construction {
            host: self.host.into(),
            meta: self.meta,
        }
    }
}

/// A construction together with its parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "id")]
pub enum ConstructionSpec {
    #[serde(rename = "intro")]
    Intro { n: usize, k: usize },
    R1 { n: usize, m: usize },
    R2 { n: usize, m: usize },
    F1 { s: usize, t: usize, m: usize },
    F2 { s: usize, t: usize, m: usize },
    F3 { s: usize, t: usize, m: usize },
    #[serde(rename = "counter4t")]
    Counter4t { t: usize, n: usize },
}

impl ConstructionSpec {
    pub fn id(&self) -> ConstructionId {
        match self {
            ConstructionSpec::Intro { .. } => ConstructionId::Intro,
            ConstructionSpec::R1 { .. } => ConstructionId::R1,
            ConstructionSpec::R2 { .. } => ConstructionId::R2,
            ConstructionSpec::F1 { .. } => ConstructionId::F1,
            ConstructionSpec::F2 { .. } => ConstructionId::F2,
            ConstructionSpec::F3 { .. } => ConstructionId::F3,
            ConstructionSpec::Counter4t { .. } => ConstructionId::Counter4t,
        }
    }

    pub fn build(&self) -> Result<Construction<Host>> {
        Ok(match *self {
            ConstructionSpec::Intro { n, k } => gen_intro_example(n, k)?.into_host(),
            ConstructionSpec::R1 { n, m } => gen_r1(n, m)?.into_host(),
            ConstructionSpec::R2 { n, m } => gen_r2(n, m)?.into_host(),
            ConstructionSpec::F1 { s, t, m } => gen_f1(s, t, m)?.into_host(),
            ConstructionSpec::F2 { s, t, m } => gen_f2(s, t, m)?.into_host(),
            ConstructionSpec::F3 { s, t, m } => gen_f3(s, t, m)?.into_host(),
            ConstructionSpec::Counter4t { t, n } => gen_counterexample_4t(t, n)?.into_host(),
        })
    }
}

impl fmt::Display for ConstructionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ConstructionSpec::Intro { n, k } => write!(f, "intro(n={n},k={k})"),
            ConstructionSpec::R1 { n, m } => write!(f, "R1(n={n},m={m})"),
            ConstructionSpec::R2 { n, m } => write!(f, "R2(n={n},m={m})"),
            ConstructionSpec::F1 { s, t, m } => write!(f, "F1(s={s},t={t},m={m})"),
            ConstructionSpec::F2 { s, t, m } => write!(f, "F2(s={s},t={t},m={m})"),
            ConstructionSpec::F3 { s, t, m } => write!(f, "F3(s={s},t={t},m={m})"),
            ConstructionSpec::Counter4t { t, n } => write!(f, "counter4t(t={t},n={n})"),
        }
    }
}

fn palette(m: usize) -> Result<u16> {
    u16::try_from(m).map_err(|_| Error::param(format!("m = {m} is too large")))
}

/// Splits `total` into `parts` sizes of `⌊total/parts⌋`, remainder to the last.
fn even_split(total: usize, parts: usize) -> Vec<usize> {
    let base = total / parts;
    let mut sizes = vec![base; parts];
    sizes[parts - 1] += total - base * parts;
    sizes
}

/// Part index of every vertex for consecutive parts of the given sizes.
fn labels(sizes: &[usize]) -> Vec<usize> {
    sizes
        .iter()
        .enumerate()
        .flat_map(|(i, &s)| std::iter::repeat_n(i, s))
        .collect()
}

/// Three-part layout `V1 | V2 | V3` with `c(V1,V2) = c(V2,V3) = 1`,
/// `c(V1,V3) = 2` and every part colored 3 inside.
pub fn gen_intro_example(n: usize, k: usize) -> Result<Construction<ColoredComplete>> {
    if k < 3 {
        return Err(Error::param(format!("k must be at least 3 so every part is non-empty, got {k}")));
    }
    if n < k + 2 {
        return Err(Error::param(format!("n must be at least k + 2 = {}, got {n}", k + 2)));
    }
    let sizes = [n - k + 1, (k - 1).div_ceil(2), (k - 1) / 2];
    let part = labels(&sizes);
    let host = ColoredComplete::from_fn(n, 3, |u, v| match (part[u], part[v]) {
        (a, b) if a == b => 3,
        (0, 2) | (2, 0) => 2,
        _ => 1,
    })?;
    let mut meta = PartMetadata::new(ConstructionId::Intro, &[("n", n), ("k", k)]);
    push_consecutive(&mut meta, &["V1", "V2", "V3"], &sizes, 0);
    Ok(Construction { host, meta })
}

fn push_consecutive(meta: &mut PartMetadata, names: &[&str], sizes: &[usize], offset: usize) {
    let mut start = offset;
    for (name, &size) in names.iter().zip(sizes) {
        meta.push(*name, start..start + size);
        start += size;
    }
}

/// Base layout shared by R1 and R2; `special` colors edges inside `V1`.
fn gen_r(
    id: ConstructionId,
    n: usize,
    m: usize,
    special: impl Fn(usize, usize) -> Option<u16>,
) -> Result<Construction<ColoredComplete>> {
    let q = n / 3;
    let sizes = [n - 2 * q, q, q];
    let part = labels(&sizes);
    let host = ColoredComplete::from_fn(n, palette(m)?, |u, v| match (part[u], part[v]) {
        (0, 0) => special(u, v).unwrap_or(1),
        (0, 1) | (1, 0) => 1,
        (1, 1) | (1, 2) | (2, 1) => 2,
        _ => 3,
    })?;
    let mut meta = PartMetadata::new(id, &[("n", n), ("m", m)]);
    push_consecutive(&mut meta, &["V1", "V2", "V3"], &sizes, 0);
    Ok(Construction { host, meta })
}

/// `V1` colored 1 except a rainbow matching `(0,1), (2,3), …` in colors `4..=m`.
pub fn gen_r1(n: usize, m: usize) -> Result<Construction<ColoredComplete>> {
    if m < 4 {
        return Err(Error::param(format!("R1 needs m >= 4, got {m}")));
    }
    let v1 = n - 2 * (n / 3);
    if n < 3 || v1 / 2 < m - 3 {
        return Err(Error::param(format!(
            "R1 needs a matching of {} edges inside V1 of size {v1}",
            m - 3
        )));
    }
    let mut c = gen_r(ConstructionId::R1, n, m, |u, v| {
        let (a, b) = (u.min(v), u.max(v));
        (a % 2 == 0 && b == a + 1 && a / 2 < m - 3).then(|| (4 + a / 2) as u16)
    })?;
    c.meta.push("matching", 0..2 * (m - 3));
    Ok(c)
}

/// `V1` colored 1 except a rainbow star centered at 0 with leaves `1..=m-3`
/// in colors `4..=m`.
pub fn gen_r2(n: usize, m: usize) -> Result<Construction<ColoredComplete>> {
    if m < 4 {
        return Err(Error::param(format!("R2 needs m >= 4, got {m}")));
    }
    let v1 = n - 2 * (n / 3);
    if n < 3 || v1 < m - 2 {
        return Err(Error::param(format!(
            "R2 needs a star with {} leaves inside V1 of size {v1}",
            m - 3
        )));
    }
    let mut c = gen_r(ConstructionId::R2, n, m, |u, v| {
        let (a, b) = (u.min(v), u.max(v));
        (a == 0 && b <= m - 3).then(|| (3 + b) as u16)
    })?;
    c.meta.push("star", 0..m - 2);
    Ok(c)
}

/// `U = U_1 ∪ … ∪ U_m` with `c(U_i, V) = i`.
pub fn gen_f1(s: usize, t: usize, m: usize) -> Result<Construction<ColoredBipartite>> {
    if m < 1 || s < m || t < 1 {
        return Err(Error::param(format!("F1 needs s >= m >= 1 and t >= 1, got s={s}, t={t}, m={m}")));
    }
    let sizes = even_split(s, m);
    let part = labels(&sizes);
    let host = ColoredBipartite::from_fn(s, t, palette(m)?, |u, _| (part[u] + 1) as u16)?;
    let mut meta = PartMetadata::new(ConstructionId::F1, &[("s", s), ("t", t), ("m", m)]);
    let names: Vec<String> = (1..=m).map(|i| format!("U{i}")).collect();
    let names: Vec<&str> = names.iter().map(String::as_str).collect();
    push_consecutive(&mut meta, &names, &sizes, 0);
    meta.push("V", s..s + t);
    Ok(Construction { host, meta })
}

/// `U = U_1 ∪ U_2 ∪ {u}` with `c(U_1, V) = 1`, `c(U_2, V) = 2`, and `u`
/// seeing every color: `c(u, v_j) = (j mod m) + 1`.
pub fn gen_f2(s: usize, t: usize, m: usize) -> Result<Construction<ColoredBipartite>> {
    if s < 3 || m < 2 || t < m {
        return Err(Error::param(format!("F2 needs s >= 3, m >= 2 and t >= m, got s={s}, t={t}, m={m}")));
    }
    let u1 = (s - 1) / 2;
    let sizes = [u1, s - 1 - u1, 1];
    let part = labels(&sizes);
    let host = ColoredBipartite::from_fn(s, t, palette(m)?, |u, v| match part[u] {
        0 => 1,
        1 => 2,
        _ => (v % m + 1) as u16,
    })?;
    let mut meta = PartMetadata::new(ConstructionId::F2, &[("s", s), ("t", t), ("m", m)]);
    push_consecutive(&mut meta, &["U1", "U2", "u"], &sizes, 0);
    meta.push("V", s..s + t);
    Ok(Construction { host, meta })
}

/// `U = U_3 ∪ … ∪ U_m`, `V = V_3 ∪ … ∪ V_m` with `c(U_i, V_i) = i`; with
/// `α = ⌊(m-2)/2⌋ + 2`, edges from `U_{≤α}` to `V_{>α}` and from `V_{≤α}` to
/// `U_{>α}` get color 1 and the rest color 2. For `m = 4` no edge gets color 2.
pub fn gen_f3(s: usize, t: usize, m: usize) -> Result<Construction<ColoredBipartite>> {
    if m < 4 || s < m - 2 || t < m - 2 {
        return Err(Error::param(format!("F3 needs m >= 4 and s, t >= m - 2, got s={s}, t={t}, m={m}")));
    }
    let alpha = (m - 2) / 2 + 2;
    let su = even_split(s, m - 2);
    let sv = even_split(t, m - 2);
    let pu = labels(&su);
    let pv = labels(&sv);
    let host = ColoredBipartite::from_fn(s, t, palette(m)?, |u, v| {
        let (i, j) = (pu[u] + 3, pv[v] + 3);
        if i == j {
            i as u16
        } else if (i <= alpha && j > alpha) || (j <= alpha && i > alpha) {
            1
        } else {
            2
        }
    })?;
    let mut meta = PartMetadata::new(
        ConstructionId::F3,
        &[("s", s), ("t", t), ("m", m), ("alpha", alpha)],
    );
    let un: Vec<String> = (3..=m).map(|i| format!("U{i}")).collect();
    let vn: Vec<String> = (3..=m).map(|i| format!("V{i}")).collect();
    push_consecutive(&mut meta, &un.iter().map(String::as_str).collect::<Vec<_>>(), &su, 0);
    push_consecutive(&mut meta, &vn.iter().map(String::as_str).collect::<Vec<_>>(), &sv, s);
    Ok(Construction { host, meta })
}

/// Gallai-3-coloring of `K_n` with no 4t-connected two-colored subgraph on
/// more than `n - 2t` vertices. `V1 | V2 | V3` have sizes `n-6t`, `4t`, `2t`.
/// Inside `V2`, color 1 is a realization of the sequence
/// `(2t × 2t, 2t × (2t-1))` and color 2 its complement; the `2t` vertices of
/// color-1 degree `2t` join `V1` in color 1, the others in color 2; all
/// remaining edges get color 3.
pub fn gen_counterexample_4t(t: usize, n: usize) -> Result<Construction<ColoredComplete>> {
    if t < 1 {
        return Err(Error::param("t must be at least 1"));
    }
    if n < 10 * t + 1 {
        return Err(Error::param(format!("n must be at least 10t + 1 = {}, got {n}", 10 * t + 1)));
    }
    let f = realize_degree_sequence(&DegreeSequence::two_level(t))?;
    let n1 = n - 6 * t;
    let sizes = [n1, 4 * t, 2 * t];
    let part = labels(&sizes);
    let host = ColoredComplete::from_fn(n, 3, |u, v| match (part[u], part[v]) {
        (1, 1) => {
            if f.has_edge(u - n1, v - n1) {
                1
            } else {
                2
            }
        }
        (0, 1) | (1, 0) => {
            let w = u.max(v) - n1;
            if w < 2 * t {
                1
            } else {
                2
            }
        }
        _ => 3,
    })?;
    let mut meta = PartMetadata::new(ConstructionId::Counter4t, &[("t", t), ("n", n), ("k", 4 * t)]);
    push_consecutive(&mut meta, &["V1", "V2", "V3"], &sizes, 0);
    meta.push("V2_high", n1..n1 + 2 * t);
    meta.push("V2_low", n1 + 2 * t..n1 + 4 * t);
    Ok(Construction { host, meta })
}

/// Non-increasing sequence of non-negative integers, each below the length.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct DegreeSequence(Vec<usize>);

impl DegreeSequence {
    pub fn new(d: Vec<usize>) -> Result<Self> {
        if d.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::param("degree sequence must be non-increasing"));
        }
        if d.first().is_some_and(|&x| x >= d.len()) {
            return Err(Error::param("every degree must be below the sequence length"));
        }
        Ok(DegreeSequence(d))
    }

    /// Sorts `d` non-increasingly first.
    pub fn from_unsorted(mut d: Vec<usize>) -> Result<Self> {
        d.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(d)
    }

    /// `2t` entries equal to `2t` followed by `2t` entries equal to `2t - 1`.
    pub fn two_level(t: usize) -> Self {
        assert!(t >= 1);
        let mut d = vec![2 * t; 2 * t];
        d.extend(std::iter::repeat_n(2 * t - 1, 2 * t));
        DegreeSequence(d)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl TryFrom<Vec<usize>> for DegreeSequence {
    type Error = Error;

    fn try_from(d: Vec<usize>) -> Result<Self> {
        DegreeSequence::new(d)
    }
}

impl From<DegreeSequence> for Vec<usize> {
    fn from(d: DegreeSequence) -> Self {
        d.0
    }
}

/// Erdős–Gallai test: even sum and, for every `k`,
/// `Σ_{i≤k} d_i ≤ k(k-1) + Σ_{i>k} min(k, d_i)`.
pub fn eg_realizable(d: &DegreeSequence) -> bool {
    let d = &d.0;
    if d.iter().sum::<usize>() % 2 == 1 {
        return false;
    }
    let mut prefix = 0;
    for k in 1..=d.len() {
        prefix += d[k - 1];
        let tail: usize = d[k..].iter().map(|&x| x.min(k)).sum();
        if prefix > k * (k - 1) + tail {
            return false;
        }
    }
    true
}

/// Havel–Hakimi realization. Vertex `i` of the result has degree `d[i]`.
/// Repeatedly takes the vertex of largest remaining degree and joins it to
/// the next largest ones; ties go to the lower index.
pub fn realize_degree_sequence(d: &DegreeSequence) -> Result<SimpleGraph> {
    if !eg_realizable(d) {
        return Err(Error::pre(format!("sequence {:?} is not graphical", d.0)));
    }
    let n = d.len();
    let mut left = d.0.clone();
    let mut edges = Vec::new();
    loop {
        let mut order: Vec<usize> = (0..n).filter(|&v| left[v] > 0).collect();
        if order.is_empty() {
            break;
        }
        order.sort_by(|&a, &b| left[b].cmp(&left[a]).then(a.cmp(&b)));
        let v = order[0];
        let need = left[v];
        if order.len() <= need {
            return Err(Error::Certification("Havel–Hakimi ran out of partners".into()));
        }
        for &w in &order[1..=need] {
            edges.push((v, w));
            left[w] -= 1;
        }
        left[v] = 0;
    }
    let g = SimpleGraph::from_edges(n, edges)?;
    if g.degrees() != d.0 {
        return Err(Error::Certification("realization has the wrong degrees".into()));
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connectivity::{best_monochromatic, best_two_colored, is_k_connected, Mode};
    use crate::host::{restrict, ColorId, ColorMask, ColoredHost};

    fn ids(c: &[u16]) -> Vec<ColorId> {
        c.iter().map(|&x| ColorId(x)).collect()
    }

    #[test]
    fn used_colors_of_constructions() {
        assert_eq!(gen_r1(9, 4).unwrap().host.used_colors(), ids(&[1, 2, 3, 4]));
        assert_eq!(gen_f1(12, 6, 4).unwrap().host.used_colors(), ids(&[1, 2, 3, 4]));
        assert_eq!(gen_f3(12, 12, 6).unwrap().host.used_colors(), ids(&[1, 2, 3, 4, 5, 6]));
        assert_eq!(gen_f3(12, 12, 4).unwrap().host.used_colors(), ids(&[1, 3, 4]));
    }

    #[test]
    fn r1_restrictions() {
        let r1 = gen_r1(9, 4).unwrap().host;
        let g2 = restrict(&r1, &ColorMask::single(ColorId(2))).unwrap();
        assert_eq!(g2.edge_count(), 12);
        let touched = (0..9).filter(|&v| g2.degree(v) > 0).count();
        assert_eq!(touched, 6);
        let g4 = restrict(&r1, &ColorMask::single(ColorId(4))).unwrap();
        assert_eq!(g4.edges().collect::<Vec<_>>(), vec![(0, 1)]);
        let v = [3, 4, 5, 6, 7, 8];
        assert!(is_k_connected(&g2.induced(&v), 3));
    }

    #[test]
    fn r_sizes() {
        let (_, r) = best_monochromatic(&gen_r1(9, 4).unwrap().host, 1, Mode::Exact).unwrap();
        assert_eq!(r.lower, 6);
        let (_, r) = best_monochromatic(&gen_r2(12, 6).unwrap().host, 1, Mode::Exact).unwrap();
        assert_eq!(r.lower, 8);
        let (_, r) = best_monochromatic(&gen_r1(9, 4).unwrap().host, 2, Mode::Exact).unwrap();
        assert_eq!(r.lower, 6);
        assert!(r.mask.colors()[0].get() <= 3);
    }

    #[test]
    fn r_rejects_small_v1() {
        assert!(gen_r1(9, 5).is_err());
        assert!(gen_r1(9, 3).is_err());
        assert!(gen_r2(9, 6).is_err());
        assert!(gen_r2(12, 6).is_ok());
    }

    #[test]
    fn intro_layout() {
        let c = gen_intro_example(10, 3).unwrap();
        let sizes: Vec<usize> = c.meta.parts.iter().map(|p| p.vertices.len()).collect();
        assert_eq!(sizes, vec![8, 1, 1]);
        let r = best_two_colored(&c.host, 3, Mode::Exact).unwrap();
        assert_eq!(r.lower, 9);
        assert!(gen_intro_example(10, 1).is_err());
        assert!(gen_intro_example(10, 2).is_err());
        let c = gen_intro_example(12, 5).unwrap();
        let sizes: Vec<usize> = c.meta.parts.iter().map(|p| p.vertices.len()).collect();
        assert_eq!(sizes, vec![8, 2, 2]);
        assert!(crate::rainbow::find_rainbow_triangle(&c.host).is_none());
    }

    #[test]
    fn f2_layout_and_components() {
        let c = gen_f2(13, 6, 5).unwrap();
        assert_eq!(c.meta.part("U1").unwrap().len(), 6);
        assert_eq!(c.meta.part("U2").unwrap().len(), 6);
        assert_eq!(c.meta.part("u").unwrap(), &[12]);
        assert!(c.host.uses_all_colors());
        // u sees colors 1 and 2, so it joins a big component
        let (_, r) = best_monochromatic(&c.host, 1, Mode::Exact).unwrap();
        assert_eq!(r.lower, 13);
        // from 3-connectivity on, u drops out
        let (_, r) = best_monochromatic(&c.host, 3, Mode::Exact).unwrap();
        assert_eq!(r.lower, 12);
        assert!(gen_f2(13, 4, 5).is_err());
    }

    #[test]
    fn f3_sizes() {
        let c = gen_f3(12, 12, 6).unwrap();
        assert_eq!(c.meta.params["alpha"], 4);
        let (_, r) = best_monochromatic(&c.host, 1, Mode::Exact).unwrap();
        assert_eq!(r.lower, 12);
        assert!(gen_f3(3, 12, 6).is_err());
    }

    #[test]
    fn counter_4t_structure() {
        for t in 1..=3 {
            let n = 10 * t + 1;
            let c = gen_counterexample_4t(t, n).unwrap();
            let v2 = c.meta.part("V2").unwrap().to_vec();
            let h = c.host.induced(&v2).unwrap();
            let g1 = restrict(&h, &ColorMask::single(ColorId(1))).unwrap();
            let g2 = restrict(&h, &ColorMask::single(ColorId(2))).unwrap();
            let d1 = g1.degrees();
            let d2 = g2.degrees();
            for i in 0..2 * t {
                assert_eq!((d1[i], d2[i]), (2 * t, 2 * t - 1));
                assert_eq!((d1[2 * t + i], d2[2 * t + i]), (2 * t - 1, 2 * t));
            }
            assert!(crate::rainbow::find_rainbow_triangle(&c.host).is_none());
        }
        assert!(gen_counterexample_4t(1, 10).is_err());
        assert!(gen_counterexample_4t(0, 30).is_err());
    }

    #[test]
    fn eg_examples() {
        let ds = |v: &[usize]| DegreeSequence::new(v.to_vec()).unwrap();
        assert!(eg_realizable(&ds(&[3, 3, 3, 3])));
        assert!(eg_realizable(&ds(&[2, 2, 1, 1])));
        assert!(!eg_realizable(&ds(&[3, 3, 1, 1])));
        assert!(!eg_realizable(&ds(&[1, 1, 1])));
        assert!(DegreeSequence::new(vec![1, 2]).is_err());
        assert!(DegreeSequence::new(vec![2, 1]).is_err());
    }

    #[test]
    fn realizations() {
        let g = realize_degree_sequence(&DegreeSequence::new(vec![2, 2, 1, 1]).unwrap()).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert!(g.is_connected());
        let g = realize_degree_sequence(&DegreeSequence::new(vec![1, 1]).unwrap()).unwrap();
        assert_eq!(g, SimpleGraph::complete(2));
        let g = realize_degree_sequence(&DegreeSequence::new(vec![2, 2, 2]).unwrap()).unwrap();
        assert_eq!(g, SimpleGraph::complete(3));
        assert!(realize_degree_sequence(&DegreeSequence::new(vec![3, 3, 1, 1]).unwrap()).is_err());
        for t in 1..=5 {
            assert!(realize_degree_sequence(&DegreeSequence::two_level(t)).is_ok());
        }
    }

    #[test]
    fn deterministic_output() {
        let a = crate::io::write_coloring_string(&gen_r2(15, 5).unwrap().host.into());
        let b = crate::io::write_coloring_string(&gen_r2(15, 5).unwrap().host.into());
        assert_eq!(a, b);
    }

    #[test]
    fn spec_serializes_with_tag() {
        let spec = ConstructionSpec::F2 { s: 13, t: 6, m: 5 };
        let json = serde_json::to_string(&spec).unwrap();
        assert_eq!(json, r#"{"id":"F2","s":13,"t":6,"m":5}"#);
        let back: ConstructionSpec = serde_json::from_str(&json).unwrap();
        assert_eq!(back, spec);
        assert_eq!(spec.build().unwrap().host.order(), 19);
    }
}
