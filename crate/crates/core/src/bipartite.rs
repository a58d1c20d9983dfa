//! Structure of colorings of `K_{s,t}` without a rainbow `K_{1,3}`.
//!
//! Such a coloring either uses at most four colors, or one color (the
//! background) splits `U` and `V` into blocks `U_i`, `V_i`, one per other
//! color `i`, with `C(U_i, V_i) ⊆ {background, i}` and every edge outside
//! the blocks in the background color.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::connectivity::is_k_connected;
use crate::error::{Error, Result};
use crate::host::{restrict_unchecked, ColorId, ColorMask, ColoredBipartite, ColoredHost};
use crate::verdict::Check;

/// Original color and its new number; the background becomes 1, the other
/// colors 2, 3, … in increasing order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Renumbering {
    pub original: ColorId,
    pub renumbered: u16,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "case")]
pub enum BipartiteStructure {
    /// At most four colors used.
    A { colors: Vec<ColorId> },
    /// `u_parts[j]` and `v_parts[j]` form the block of renumbered color
    /// `j + 2`. Vertices carry global labels (`V` starts at `s`).
    B {
        background: ColorId,
        renumbering: Vec<Renumbering>,
        u_parts: Vec<Vec<usize>>,
        v_parts: Vec<Vec<usize>>,
    },
}

impl BipartiteStructure {
    pub fn is_case_b(&self) -> bool {
        matches!(self, BipartiteStructure::B { .. })
    }
}

/// Some vertex together with three edges of distinct colors, if any.
pub fn find_rainbow_k13(host: &ColoredBipartite) -> Option<(usize, [usize; 3])> {
    let n = host.order();
    for c in 0..n {
        let mut picked: Vec<(usize, ColorId)> = Vec::with_capacity(3);
        for w in 0..n {
            if let Some(col) = host.color(c, w) {
                if picked.iter().all(|&(_, p)| p != col) {
                    picked.push((w, col));
                    if picked.len() == 3 {
                        return Some((c, [picked[0].0, picked[1].0, picked[2].0]));
                    }
                }
            }
        }
    }
    None
}

/// Independent check of a case-B certificate.
pub fn validate_structure(host: &ColoredBipartite, st: &BipartiteStructure) -> bool {
    let BipartiteStructure::B {
        background,
        renumbering,
        u_parts,
        v_parts,
    } = st
    else {
        return host.used_colors().len() <= 4;
    };
    let (s, t) = (host.s(), host.t());
    let blocks = u_parts.len();
    if blocks != v_parts.len() || blocks + 1 != renumbering.len() {
        return false;
    }
    let mut block_of = vec![usize::MAX; s + t];
    for (j, part) in u_parts.iter().chain(v_parts).enumerate() {
        if part.is_empty() {
            return false;
        }
        for &x in part {
            let in_side = if j < blocks { x < s } else { (s..s + t).contains(&x) };
            if !in_side || block_of[x] != usize::MAX {
                return false;
            }
            block_of[x] = j % blocks;
        }
    }
    if block_of.contains(&usize::MAX) {
        return false;
    }
    let original_of = |num: u16| renumbering.iter().find(|r| r.renumbered == num).map(|r| r.original);
    if original_of(1) != Some(*background) {
        return false;
    }
    for u in 0..s {
        for v in s..s + t {
            let c = host.color(u, v).unwrap();
            let ok = if block_of[u] == block_of[v] {
                c == *background || Some(c) == original_of(block_of[u] as u16 + 2)
            } else {
                c == *background
            };
            if !ok {
                return false;
            }
        }
    }
    true
}

fn extract_case_b(host: &ColoredBipartite, background: ColorId) -> Option<BipartiteStructure> {
    let (s, t) = (host.s(), host.t());
    let others: Vec<ColorId> = host.used_colors().into_iter().filter(|&c| c != background).collect();
    let mut block_of = vec![usize::MAX; s + t];
    for u in 0..s {
        for v in s..s + t {
            let c = host.color(u, v).unwrap();
            if c == background {
                continue;
            }
            let j = others.binary_search(&c).ok()?;
            for x in [u, v] {
                if block_of[x] != usize::MAX && block_of[x] != j {
                    return None;
                }
                block_of[x] = j;
            }
        }
    }
    let mut u_parts = vec![Vec::new(); others.len()];
    let mut v_parts = vec![Vec::new(); others.len()];
    for (x, &b) in block_of.iter().enumerate() {
        // vertices seeing only the background can sit in any block
        let j = if b == usize::MAX { 0 } else { b };
        if x < s {
            u_parts[j].push(x);
        } else {
            v_parts[j].push(x);
        }
    }
    let mut renumbering = vec![Renumbering {
        original: background,
        renumbered: 1,
    }];
    renumbering.extend(others.iter().enumerate().map(|(j, &c)| Renumbering {
        original: c,
        renumbered: j as u16 + 2,
    }));
    let st = BipartiteStructure::B {
        background,
        renumbering,
        u_parts,
        v_parts,
    };
    validate_structure(host, &st).then_some(st)
}

/// Classifies a coloring without a rainbow `K_{1,3}`. With at most four
/// colors the answer is case A without further checks. Otherwise the
/// background is the color seen at every vertex, and each other color's
/// block is the set of vertices incident to it; if that fails, every used
/// color is tried as background.
pub fn classify_k13_free(host: &ColoredBipartite) -> Result<BipartiteStructure> {
    if host.s().min(host.t()) < 3 {
        return Err(Error::pre("both parts need at least 3 vertices"));
    }
    let used = host.used_colors();
    if used.len() <= 4 {
        return Ok(BipartiteStructure::A { colors: used });
    }
    if let Some((c, _)) = find_rainbow_k13(host) {
        return Err(Error::pre(format!("rainbow K1_3 centered at vertex {c}")));
    }
    let n = host.order();
    let seen_everywhere = used.iter().copied().find(|&c| {
        (0..n).all(|x| (0..n).any(|y| host.color(x, y) == Some(c)))
    });
    let candidates = seen_everywhere.into_iter().chain(used.iter().copied());
    for bg in candidates {
        if let Some(st) = extract_case_b(host, bg) {
            return Ok(st);
        }
    }
    Err(Error::Certification(format!(
        "no block structure for a rainbow-K1_3-free coloring with {} colors",
        used.len()
    )))
}

/// Case-B host with blocks of the given sizes (`m = sizes + 1` colors).
/// Inside block `i` each edge gets color `i + 2` with probability `p_block`,
/// otherwise color 1. Afterwards every block vertex is given at least one
/// edge of its block color, so the planted blocks are recoverable and every
/// color is used.
pub fn gen_type_b(
    u_sizes: &[usize],
    v_sizes: &[usize],
    p_block: f64,
    seed: u64,
) -> Result<(ColoredBipartite, BipartiteStructure)> {
    let blocks = u_sizes.len();
    if blocks < 4 || v_sizes.len() != blocks {
        return Err(Error::param("need matching part lists of length m - 1 >= 4"));
    }
    if u_sizes.iter().chain(v_sizes).any(|&x| x == 0) {
        return Err(Error::param("part sizes must be positive"));
    }
    if !(0.0..=1.0).contains(&p_block) {
        return Err(Error::param("p_block must lie in [0, 1]"));
    }
    let m = blocks as u16 + 1;
    let (s, t): (usize, usize) = (u_sizes.iter().sum(), v_sizes.iter().sum());
    let ub: Vec<usize> = (0..blocks).flat_map(|j| std::iter::repeat_n(j, u_sizes[j])).collect();
    let vb: Vec<usize> = (0..blocks).flat_map(|j| std::iter::repeat_n(j, v_sizes[j])).collect();
    let u_start: Vec<usize> = prefix(u_sizes);
    let v_start: Vec<usize> = prefix(v_sizes);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut colors = vec![vec![1u16; t]; s];
    for u in 0..s {
        for v in 0..t {
            if ub[u] == vb[v] && rng.gen_bool(p_block) {
                colors[u][v] = ub[u] as u16 + 2;
            }
        }
    }
    for j in 0..blocks {
        let (us, vs) = (u_sizes[j], v_sizes[j]);
        for a in 0..us.max(vs) {
            colors[u_start[j] + a % us][v_start[j] + a % vs] = j as u16 + 2;
        }
    }
    let host = ColoredBipartite::from_fn(s, t, m, |u, v| colors[u][v])?;
    let planted = BipartiteStructure::B {
        background: ColorId(1),
        renumbering: (1..=m)
            .map(|c| Renumbering {
                original: ColorId(c),
                renumbered: c,
            })
            .collect(),
        u_parts: (0..blocks).map(|j| (u_start[j]..u_start[j] + u_sizes[j]).collect()).collect(),
        v_parts: (0..blocks)
            .map(|j| (s + v_start[j]..s + v_start[j] + v_sizes[j]).collect())
            .collect(),
    };
    debug_assert!(validate_structure(&host, &planted));
    Ok((host, planted))
}

fn prefix(sizes: &[usize]) -> Vec<usize> {
    sizes
        .iter()
        .scan(0, |acc, &x| {
            let start = *acc;
            *acc += x;
            Some(start)
        })
        .collect()
}

/// Sizes of `parts` near-equal parts of `total`, larger ones first.
pub fn even_parts(total: usize, parts: usize) -> Vec<usize> {
    (0..parts).map(|i| total / parts + usize::from(i < total % parts)).collect()
}

/// Same blocks up to renumbering: the parts, paired `(U_i, V_i)`, agree as
/// sets of pairs.
pub fn same_blocks(a: &BipartiteStructure, b: &BipartiteStructure) -> bool {
    match (a, b) {
        (
            BipartiteStructure::B { u_parts: ua, v_parts: va, .. },
            BipartiteStructure::B { u_parts: ub, v_parts: vb, .. },
        ) => {
            let key = |u: &[Vec<usize>], v: &[Vec<usize>]| {
                let mut k: Vec<(Vec<usize>, Vec<usize>)> = u
                    .iter()
                    .zip(v)
                    .map(|(x, y)| {
                        let (mut x, mut y) = (x.clone(), y.clone());
                        x.sort_unstable();
                        y.sort_unstable();
                        (x, y)
                    })
                    .collect();
                k.sort();
                k
            };
            key(ua, va) == key(ub, vb)
        }
        _ => false,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpanningWitness {
    pub color: ColorId,
    pub k: usize,
    pub order: usize,
}

/// With `m ≥ k + 4` colors and `min(s, t) ≥ m - 1`, the background color
/// spans a k-connected subgraph.
pub fn verify_background_spanning(host: &ColoredBipartite, k: usize) -> Result<Check<SpanningWitness>> {
    if k < 1 {
        return Err(Error::param("k must be at least 1"));
    }
    let m = host.used_colors().len();
    if m < k + 4 {
        return Err(Error::pre(format!("need at least k + 4 = {} colors, host uses {m}", k + 4)));
    }
    if host.s().min(host.t()) + 1 < m {
        return Err(Error::pre(format!("need min(s, t) >= m - 1 = {}", m - 1)));
    }
    let st = classify_k13_free(host)?;
    let BipartiteStructure::B { background, .. } = st else {
        return Err(Error::Certification("five or more colors classified as case A".into()));
    };
    let g = restrict_unchecked(host, &ColorMask::single(background));
    if (0..g.n()).any(|v| g.degree(v) == 0) {
        return Ok(Check::Falsified(format!("color {background} is not spanning")));
    }
    if !is_k_connected(&g, k) {
        return Ok(Check::Falsified(format!("color {background} is not {k}-connected")));
    }
    Ok(Check::Holds(SpanningWitness {
        color: background,
        k,
        order: g.n(),
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::gen_f1;

    #[test]
    fn few_colors_is_case_a() {
        let f1 = gen_f1(12, 6, 4).unwrap().host;
        assert!(matches!(classify_k13_free(&f1).unwrap(), BipartiteStructure::A { .. }));
        let h = ColoredBipartite::from_fn(4, 4, 3, |u, _| (u % 3 + 1) as u16).unwrap();
        assert!(!classify_k13_free(&h).unwrap().is_case_b());
    }

    #[test]
    fn rainbow_k13_is_rejected() {
        let h = ColoredBipartite::from_fn(3, 5, 5, |_, v| (v + 1) as u16).unwrap();
        assert!(find_rainbow_k13(&h).is_some());
        assert!(matches!(classify_k13_free(&h), Err(Error::Precondition(_))));
    }

    #[test]
    fn round_trip() {
        for seed in 0..40 {
            let (h, planted) = gen_type_b(&even_parts(10, 5), &even_parts(10, 5), 0.5, seed).unwrap();
            assert!(h.uses_all_colors());
            assert!(validate_structure(&h, &planted));
            let got = classify_k13_free(&h).unwrap();
            assert!(validate_structure(&h, &got));
            assert!(same_blocks(&got, &planted), "seed {seed}");
        }
    }

    #[test]
    fn pure_blocks_and_scrambled_colors() {
        let (h, planted) = gen_type_b(&[2, 2, 3, 3, 2], &[3, 3, 2, 2, 2], 1.0, 0).unwrap();
        assert!(find_rainbow_k13(&h).is_none());
        // renumber: swap colors 1 and 4
        let swap = |c: u16| match c {
            1 => 4,
            4 => 1,
            x => x,
        };
        let h2 = ColoredBipartite::from_fn(h.s(), h.t(), h.m(), |u, v| swap(h.get(u, v).0)).unwrap();
        let got = classify_k13_free(&h2).unwrap();
        let BipartiteStructure::B { background, .. } = &got else { panic!() };
        assert_eq!(*background, ColorId(4));
        assert!(same_blocks(&got, &planted));
    }

    #[test]
    fn sparse_blocks_get_repaired() {
        let (h, planted) = gen_type_b(&[2; 4], &[2; 4], 0.0, 9).unwrap();
        assert!(h.uses_all_colors());
        assert!(same_blocks(&classify_k13_free(&h).unwrap(), &planted));
    }

    #[test]
    fn background_spanning_on_type_b() {
        let (h, _) = gen_type_b(&even_parts(10, 6), &even_parts(10, 6), 0.5, 3).unwrap();
        for k in 1..=3 {
            let w = verify_background_spanning(&h, k).unwrap();
            assert_eq!(w.witness().unwrap().order, 20);
        }
        assert!(matches!(verify_background_spanning(&h, 4), Err(Error::Precondition(_))));
    }

    #[test]
    fn validator_catches_wrong_blocks() {
        let (h, planted) = gen_type_b(&[2; 4], &[2; 4], 1.0, 1).unwrap();
        let BipartiteStructure::B { background, renumbering, mut u_parts, v_parts } = planted else {
            panic!()
        };
        let moved = u_parts[0].pop().unwrap();
        u_parts[1].push(moved);
        let bad = BipartiteStructure::B { background, renumbering, u_parts, v_parts };
        assert!(!validate_structure(&h, &bad));
    }
}
