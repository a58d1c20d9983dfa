//! Rainbow copies of patterns in colored hosts.

use serde::{Deserialize, Serialize};

use crate::embed::{self, Colored};
use crate::error::{Error, Result};
use crate::host::{ColorId, ColoredComplete, ColoredHost};
use crate::pattern::Pattern;

/// A rainbow copy of a pattern: `map[i]` is the host vertex playing pattern
/// vertex `i`; `colors[j]` is the color on the image of the `j`-th pattern
/// edge (in the pattern's lexicographic edge order).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Embedding {
    pub map: Vec<usize>,
    pub colors: Vec<ColorId>,
}

impl Embedding {
    fn from_map(host: &impl ColoredHost, pattern: &Pattern, map: Vec<usize>) -> Self {
        let colors = pattern
            .graph()
            .edges()
            .map(|(a, b)| host.color(map[a], map[b]).expect("embedded edge exists"))
            .collect();
        Embedding { map, colors }
    }
}

/// Independent check of the embedding contract: injective, every pattern
/// edge lands on a host edge, and all image colors are distinct.
pub fn validate_embedding(host: &impl ColoredHost, pattern: &Pattern, e: &Embedding) -> bool {
    let g = pattern.graph();
    if e.map.len() != g.n() || e.map.iter().any(|&v| v >= host.order()) {
        return false;
    }
    for i in 0..e.map.len() {
        for j in i + 1..e.map.len() {
            if e.map[i] == e.map[j] {
                return false;
            }
        }
    }
    let mut seen = Vec::new();
    for (k, (a, b)) in g.edges().enumerate() {
        match host.color(e.map[a], e.map[b]) {
            Some(c) if e.colors.get(k) == Some(&c) && !seen.contains(&c) => seen.push(c),
            _ => return false,
        }
    }
    seen.len() == e.colors.len()
}

fn check_sizes(host: &impl ColoredHost, p: &Pattern) -> Result<()> {
    if p.order() > host.order() {
        return Err(Error::PatternTooLarge {
            pattern: p.order(),
            host: host.order(),
        });
    }
    Ok(())
}

/// Some rainbow copy of `p` in `host`, or `None` when there is none. The
/// search is exhaustive and deterministic.
pub fn find_rainbow(host: &impl ColoredHost, p: &Pattern) -> Result<Option<Embedding>> {
    check_sizes(host, p)?;
    let used = host.used_colors().len();
    Ok(embed::first_embedding(p.graph(), &Colored(host), true, used)
        .map(|map| Embedding::from_map(host, p, map)))
}

pub fn is_rainbow_free(host: &impl ColoredHost, p: &Pattern) -> Result<bool> {
    Ok(find_rainbow(host, p)?.is_none())
}

/// Number of rainbow copies of `p`, counting each subgraph once (labelled
/// embeddings divided by the automorphism count of `p`).
pub fn count_rainbow(host: &impl ColoredHost, p: &Pattern) -> Result<u64> {
    check_sizes(host, p)?;
    let used = host.used_colors().len();
    let labelled = embed::count_embeddings(p.graph(), &Colored(host), true, used);
    let aut = p.automorphism_count();
    debug_assert_eq!(labelled % aut, 0);
    Ok(labelled / aut)
}

/// The host with the edges of some colors deleted. A rainbow copy in this
/// view is exactly a rainbow copy in the host avoiding those colors.
pub struct WithoutColors<'a, H: ColoredHost + ?Sized> {
    host: &'a H,
    hidden: Vec<ColorId>,
}

impl<'a, H: ColoredHost + ?Sized> WithoutColors<'a, H> {
    pub fn new(host: &'a H, hidden: impl IntoIterator<Item = ColorId>) -> Self {
        WithoutColors {
            host,
            hidden: hidden.into_iter().collect(),
        }
    }
}

impl<H: ColoredHost + ?Sized> ColoredHost for WithoutColors<'_, H> {
    fn order(&self) -> usize {
        self.host.order()
    }

    fn declared_colors(&self) -> u16 {
        self.host.declared_colors()
    }

    fn color(&self, u: usize, v: usize) -> Option<ColorId> {
        self.host.color(u, v).filter(|c| !self.hidden.contains(c))
    }
}

/// Lexicographically first rainbow triangle by a direct triple scan.
pub fn find_rainbow_triangle(host: &ColoredComplete) -> Option<Embedding> {
    let n = host.n();
    for a in 0..n {
        for b in a + 1..n {
            let ab = host.get(a, b);
            for c in b + 1..n {
                let ac = host.get(a, c);
                if ac == ab {
                    continue;
                }
                let bc = host.get(b, c);
                if bc != ab && bc != ac {
                    // pattern edges of K3 in order: 0-1, 0-2, 1-2
                    return Some(Embedding {
                        map: vec![a, b, c],
                        colors: vec![ab, ac, bc],
                    });
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::parse_pattern;

    fn p(s: &str) -> Pattern {
        parse_pattern(s).unwrap()
    }

    #[test]
    fn monochromatic_host_has_no_rainbow_p3() {
        let h = ColoredComplete::monochromatic(5, 1).unwrap();
        assert!(is_rainbow_free(&h, &p("P3")).unwrap());
        assert_eq!(count_rainbow(&h, &p("P3")).unwrap(), 0);
    }

    #[test]
    fn rainbow_triangle_found() {
        let h = ColoredComplete::from_fn(3, 3, |u, v| (u + v) as u16).unwrap();
        let e = find_rainbow_triangle(&h).unwrap();
        assert!(validate_embedding(&h, &p("K3"), &e));
        let e2 = find_rainbow(&h, &p("K3")).unwrap().unwrap();
        assert!(validate_embedding(&h, &p("K3"), &e2));
        assert_eq!(count_rainbow(&h, &p("K3")).unwrap(), 1);
    }

    #[test]
    fn two_colored_host_has_no_rainbow_triangle() {
        let h = ColoredComplete::from_fn(6, 2, |u, v| ((u * v) % 2 + 1) as u16).unwrap();
        assert!(find_rainbow_triangle(&h).is_none());
    }

    #[test]
    fn pattern_larger_than_host_is_an_error() {
        let h = ColoredComplete::monochromatic(3, 1).unwrap();
        assert!(matches!(
            find_rainbow(&h, &p("P4")),
            Err(Error::PatternTooLarge { pattern: 4, host: 3 })
        ));
    }

    #[test]
    fn hidden_colors_block_copies() {
        let h = ColoredComplete::from_fn(3, 3, |u, v| (u + v) as u16).unwrap();
        assert!(!is_rainbow_free(&h, &p("P3")).unwrap());
        let view = WithoutColors::new(&h, [ColorId(1), ColorId(2)]);
        assert!(is_rainbow_free(&view, &p("P3")).unwrap());
        let view = WithoutColors::new(&h, [ColorId(2)]);
        assert_eq!(count_rainbow(&view, &p("P3")).unwrap(), 1);
    }

    #[test]
    fn validator_rejects_tampering() {
        let h = ColoredComplete::from_fn(4, 8, |u, v| (u + 2 * v) as u16).unwrap();
        let e = find_rainbow(&h, &p("P3")).unwrap().unwrap();
        assert!(validate_embedding(&h, &p("P3"), &e));
        let mut bad = e.clone();
        bad.map[1] = bad.map[0];
        assert!(!validate_embedding(&h, &p("P3"), &bad));
        let mut bad = e.clone();
        bad.colors[0] = ColorId(1);
        assert!(!validate_embedding(&h, &p("P3"), &bad));
    }
}
