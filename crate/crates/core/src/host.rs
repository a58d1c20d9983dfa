//! Edge-colored complete and complete bipartite hosts.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

/// Upper bound on the order of a complete host.
pub const MAX_ORDER: usize = 10_000;

/// A color in `1..=m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ColorId(pub u16);

impl ColorId {
    #[inline]
    pub fn get(self) -> u16 {
        self.0
    }

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for ColorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A non-empty set of permitted colors.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ColorMask(Vec<ColorId>);

impl ColorMask {
    pub fn new(colors: impl IntoIterator<Item = ColorId>) -> Result<Self> {
        let mut v: Vec<ColorId> = colors.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        if v.is_empty() {
            return Err(Error::InvalidMask("empty mask".into()));
        }
        if v[0].0 == 0 {
            return Err(Error::InvalidMask("color 0 is not a color".into()));
        }
        Ok(ColorMask(v))
    }

    pub fn single(c: ColorId) -> Self {
        ColorMask(vec![c])
    }

    pub fn pair(a: ColorId, b: ColorId) -> Self {
        // new() only fails on empty input
        Self::new([a, b]).expect("non-empty")
    }

    pub fn colors(&self) -> &[ColorId] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    #[inline]
    pub fn contains(&self, c: ColorId) -> bool {
        self.0.contains(&c)
    }

    /// Checks the mask only names colors the host actually uses.
    pub fn check_against(&self, host: &impl ColoredHost) -> Result<()> {
        let used = host.used_colors();
        for c in &self.0 {
            if !used.contains(c) {
                return Err(Error::InvalidMask(format!("color {c} is not used by the host")));
            }
        }
        Ok(())
    }
}

impl fmt::Display for ColorMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Common view over colored hosts. Vertices are `0..order()`; `color` is
/// `None` for non-edges (including `u == v`).
pub trait ColoredHost: Sync {
    fn order(&self) -> usize;

    /// The declared palette size `m`.
    fn declared_colors(&self) -> u16;

    fn color(&self, u: usize, v: usize) -> Option<ColorId>;

    /// Colors appearing on at least one edge, ascending.
    fn used_colors(&self) -> Vec<ColorId> {
        let mut seen = vec![false; self.declared_colors() as usize + 1];
        let n = self.order();
        for u in 0..n {
            for v in u + 1..n {
                if let Some(c) = self.color(u, v) {
                    seen[c.index()] = true;
                }
            }
        }
        seen.iter()
            .enumerate()
            .filter(|(_, &s)| s)
            .map(|(i, _)| ColorId(i as u16))
            .collect()
    }

    /// Whether every color of `1..=m` is used.
    fn uses_all_colors(&self) -> bool {
        self.used_colors().len() == self.declared_colors() as usize
    }

    /// Number of edges of each color; index 0 is unused.
    fn color_histogram(&self) -> Vec<usize> {
        let mut h = vec![0; self.declared_colors() as usize + 1];
        let n = self.order();
        for u in 0..n {
            for v in u + 1..n {
                if let Some(c) = self.color(u, v) {
                    h[c.index()] += 1;
                }
            }
        }
        h
    }
}

/// Spanning subgraph of `host` keeping exactly the edges whose color is in
/// `mask`.
pub fn restrict(host: &impl ColoredHost, mask: &ColorMask) -> Result<SimpleGraph> {
    if mask.is_empty() {
        return Err(Error::InvalidMask("empty mask".into()));
    }
    mask.check_against(host)?;
    Ok(restrict_unchecked(host, mask))
}

pub(crate) fn restrict_unchecked(host: &impl ColoredHost, mask: &ColorMask) -> SimpleGraph {
    let mut allowed = vec![false; host.declared_colors() as usize + 1];
    for c in mask.colors() {
        if let Some(slot) = allowed.get_mut(c.index()) {
            *slot = true;
        }
    }
    SimpleGraph::from_fn(host.order(), |u, v| {
        host.color(u, v).is_some_and(|c| allowed[c.index()])
    })
}

/// Edge-coloring of `K_n`, stored as a flat upper-triangular array.
#[derive(Clone, PartialEq, Eq)]
pub struct ColoredComplete {
    n: usize,
    m: u16,
    colors: Vec<u16>,
}

impl fmt::Debug for ColoredComplete {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ColoredComplete(n={}, m={})", self.n, self.m)
    }
}

#[inline]
fn tri_index(n: usize, u: usize, v: usize) -> usize {
    debug_assert!(u < v && v < n);
    u * (2 * n - u - 1) / 2 + (v - u - 1)
}

fn check_color(c: u32, m: u16) -> Result<u16> {
    if c == 0 || c > m as u32 {
        Err(Error::ColorOutOfRange { color: c, max: m })
    } else {
        Ok(c as u16)
    }
}

impl ColoredComplete {
    /// Builds `K_n` with `c(u, v) = f(u, v)` for `u < v`.
    pub fn from_fn(n: usize, m: u16, mut f: impl FnMut(usize, usize) -> u16) -> Result<Self> {
        if n < 2 {
            return Err(Error::param(format!("complete host needs n >= 2, got {n}")));
        }
        if n > MAX_ORDER {
            return Err(Error::param(format!("n = {n} exceeds {MAX_ORDER}")));
        }
        if m == 0 {
            return Err(Error::param("m must be at least 1"));
        }
        let mut colors = Vec::with_capacity(n * (n - 1) / 2);
        for u in 0..n {
            for v in u + 1..n {
                colors.push(check_color(f(u, v) as u32, m)?);
            }
        }
        Ok(ColoredComplete { n, m, colors })
    }

    /// Monochromatic `K_n` in color 1 with palette size `m`.
    pub fn monochromatic(n: usize, m: u16) -> Result<Self> {
        Self::from_fn(n, m, |_, _| 1)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> u16 {
        self.m
    }

    /// Color of the pair `{u, v}`; panics if `u == v`.
    #[inline]
    pub fn get(&self, u: usize, v: usize) -> ColorId {
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        assert!(a != b, "no edge at a single vertex");
        ColorId(self.colors[tri_index(self.n, a, b)])
    }

    /// Sub-coloring induced by `vertices` (relabelled `0..len`).
    pub fn induced(&self, vertices: &[usize]) -> Result<ColoredComplete> {
        ColoredComplete::from_fn(vertices.len(), self.m, |i, j| {
            self.get(vertices[i], vertices[j]).0
        })
    }

    /// Same coloring with a new declared palette size.
    pub fn with_declared_colors(&self, m: u16) -> Result<Self> {
        ColoredComplete::from_fn(self.n, m, |u, v| self.get(u, v).0)
    }
}

impl ColoredHost for ColoredComplete {
    fn order(&self) -> usize {
        self.n
    }

    fn declared_colors(&self) -> u16 {
        self.m
    }

    #[inline]
    fn color(&self, u: usize, v: usize) -> Option<ColorId> {
        if u == v {
            None
        } else {
            Some(self.get(u, v))
        }
    }

    fn used_colors(&self) -> Vec<ColorId> {
        let mut seen = vec![false; self.m as usize + 1];
        for &c in &self.colors {
            seen[c as usize] = true;
        }
        (1..=self.m).filter(|&c| seen[c as usize]).map(ColorId).collect()
    }
}

/// Edge-coloring of `K_{s,t}`. Host vertices `0..s` form the part `U` and
/// `s..s+t` the part `V`.
#[derive(Clone, PartialEq, Eq)]
pub struct ColoredBipartite {
    s: usize,
    t: usize,
    m: u16,
    colors: Vec<u16>,
}

impl fmt::Debug for ColoredBipartite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ColoredBipartite(s={}, t={}, m={})", self.s, self.t, self.m)
    }
}

impl ColoredBipartite {
    /// Builds `K_{s,t}` with `c(u, v) = f(u, v)` for `u < s`, `v < t`
    /// (`v` indexes within `V`).
    pub fn from_fn(s: usize, t: usize, m: u16, mut f: impl FnMut(usize, usize) -> u16) -> Result<Self> {
        if s == 0 || t == 0 {
            return Err(Error::param(format!("bipartite host needs s, t >= 1, got {s}, {t}")));
        }
        if s + t > MAX_ORDER {
            return Err(Error::param(format!("s + t = {} exceeds {MAX_ORDER}", s + t)));
        }
        if m == 0 {
            return Err(Error::param("m must be at least 1"));
        }
        let mut colors = Vec::with_capacity(s * t);
        for u in 0..s {
            for v in 0..t {
                colors.push(check_color(f(u, v) as u32, m)?);
            }
        }
        Ok(ColoredBipartite { s, t, m, colors })
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn m(&self) -> u16 {
        self.m
    }

    /// Color between `u ∈ U` (`0..s`) and `v ∈ V` (`0..t`, part-local index).
    #[inline]
    pub fn get(&self, u: usize, v: usize) -> ColorId {
        ColorId(self.colors[u * self.t + v])
    }

    pub fn u_vertices(&self) -> std::ops::Range<usize> {
        0..self.s
    }

    pub fn v_vertices(&self) -> std::ops::Range<usize> {
        self.s..self.s + self.t
    }
}

impl ColoredHost for ColoredBipartite {
    fn order(&self) -> usize {
        self.s + self.t
    }

    fn declared_colors(&self) -> u16 {
        self.m
    }

    #[inline]
    fn color(&self, a: usize, b: usize) -> Option<ColorId> {
        let (u, v) = if a < b { (a, b) } else { (b, a) };
        if u < self.s && v >= self.s && v < self.s + self.t {
            Some(self.get(u, v - self.s))
        } else {
            None
        }
    }

    fn used_colors(&self) -> Vec<ColorId> {
        let mut seen = vec![false; self.m as usize + 1];
        for &c in &self.colors {
            seen[c as usize] = true;
        }
        (1..=self.m).filter(|&c| seen[c as usize]).map(ColorId).collect()
    }
}

/// Either kind of host, as read from a coloring file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Host {
    Complete(ColoredComplete),
    Bipartite(ColoredBipartite),
}

impl Host {
    pub fn as_complete(&self) -> Option<&ColoredComplete> {
        match self {
            Host::Complete(c) => Some(c),
            Host::Bipartite(_) => None,
        }
    }

    pub fn as_bipartite(&self) -> Option<&ColoredBipartite> {
        match self {
            Host::Bipartite(b) => Some(b),
            Host::Complete(_) => None,
        }
    }
}

impl From<ColoredComplete> for Host {
    fn from(c: ColoredComplete) -> Self {
        Host::Complete(c)
    }
}

impl From<ColoredBipartite> for Host {
    fn from(b: ColoredBipartite) -> Self {
        Host::Bipartite(b)
    }
}

impl ColoredHost for Host {
    fn order(&self) -> usize {
        match self {
            Host::Complete(c) => c.order(),
            Host::Bipartite(b) => b.order(),
        }
    }

    fn declared_colors(&self) -> u16 {
        match self {
            Host::Complete(c) => c.declared_colors(),
            Host::Bipartite(b) => b.declared_colors(),
        }
    }

    #[inline]
    fn color(&self, u: usize, v: usize) -> Option<ColorId> {
        match self {
            Host::Complete(c) => c.color(u, v),
            Host::Bipartite(b) => b.color(u, v),
        }
    }

    fn used_colors(&self) -> Vec<ColorId> {
        match self {
            Host::Complete(c) => c.used_colors(),
            Host::Bipartite(b) => b.used_colors(),
        }
    }
}

impl<H: ColoredHost + ?Sized> ColoredHost for &H {
    fn order(&self) -> usize {
        (**self).order()
    }

    fn declared_colors(&self) -> u16 {
        (**self).declared_colors()
    }

    fn color(&self, u: usize, v: usize) -> Option<ColorId> {
        (**self).color(u, v)
    }

    fn used_colors(&self) -> Vec<ColorId> {
        (**self).used_colors()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangular_layout_roundtrips_pairs() {
        let h = ColoredComplete::from_fn(7, 50, |u, v| (u * 7 + v) as u16 % 50 + 1).unwrap();
        for u in 0..7 {
            for v in 0..7 {
                if u < v {
                    assert_eq!(h.get(u, v).0, (u * 7 + v) as u16 % 50 + 1);
                    assert_eq!(h.get(v, u), h.get(u, v));
                }
            }
        }
    }

    #[test]
    fn monochromatic_k4() {
        let h = ColoredComplete::monochromatic(4, 1).unwrap();
        assert_eq!(h.used_colors(), vec![ColorId(1)]);
        let g = restrict(&h, &ColorMask::single(ColorId(1))).unwrap();
        assert_eq!(g, SimpleGraph::complete(4));
    }

    #[test]
    fn rejects_bad_colors_and_sizes() {
        assert!(ColoredComplete::from_fn(3, 2, |_, _| 3).is_err());
        assert!(ColoredComplete::from_fn(3, 2, |_, _| 0).is_err());
        assert!(ColoredComplete::from_fn(1, 2, |_, _| 1).is_err());
        assert!(ColoredBipartite::from_fn(0, 3, 2, |_, _| 1).is_err());
    }

    #[test]
    fn empty_or_foreign_masks_rejected() {
        let h = ColoredComplete::from_fn(4, 3, |u, _| if u == 0 { 1 } else { 2 }).unwrap();
        assert!(ColorMask::new([]).is_err());
        assert!(restrict(&h, &ColorMask::single(ColorId(3))).is_err());
    }

    #[test]
    fn bipartite_has_no_edges_inside_parts() {
        let b = ColoredBipartite::from_fn(2, 3, 2, |u, v| ((u + v) % 2 + 1) as u16).unwrap();
        assert_eq!(b.color(0, 1), None);
        assert_eq!(b.color(2, 4), None);
        assert_eq!(b.color(1, 2), Some(ColorId(2)));
        assert_eq!(b.color(4, 0), Some(ColorId(1)));
        let g = restrict(&b, &ColorMask::new([ColorId(1), ColorId(2)]).unwrap()).unwrap();
        assert_eq!(g, SimpleGraph::complete_bipartite(2, 3));
    }
}
