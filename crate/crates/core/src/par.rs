//! Data-parallel helpers.
//!
//! With the `parallel` feature (default) these dispatch to rayon when asked
//! for [`Parallelism::Parallel`]; without it every call runs sequentially.
//! Results are always returned in input order, so output never depends on
//! the scheduling.

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum Parallelism {
    Sequential,
    #[default]
    Parallel,
}

impl Parallelism {
    /// Whether work will actually fan out across threads.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Parallelism::Parallel
    }
}

pub fn map<T, R, F>(items: &[T], par: Parallelism, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if par.is_parallel() {
        use rayon::prelude::*;
        return items.par_iter().map(f).collect();
    }
    let _ = par;
    items.iter().map(f).collect()
}

pub fn map_range<R, F>(range: std::ops::Range<u64>, par: Parallelism, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(u64) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if par.is_parallel() {
        use rayon::prelude::*;
        return range.into_par_iter().map(f).collect();
    }
    let _ = par;
    range.map(f).collect()
}

/// First index (in input order) whose result is `Some`, with that result.
pub fn find_first<R, F>(range: std::ops::Range<u64>, par: Parallelism, f: F) -> Option<(u64, R)>
where
    R: Send,
    F: Fn(u64) -> Option<R> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if par.is_parallel() {
        use rayon::prelude::*;
        return range.into_par_iter().find_map_first(|i| f(i).map(|r| (i, r)));
    }
    let _ = par;
    range.into_iter().find_map(|i| f(i).map(|r| (i, r)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_modes_agree() {
        let xs: Vec<u64> = (0..200).collect();
        let a = map(&xs, Parallelism::Sequential, |x| x * x);
        let b = map(&xs, Parallelism::Parallel, |x| x * x);
        assert_eq!(a, b);
        let c = map_range(0..200, Parallelism::Parallel, |x| x * x);
        assert_eq!(a, c);
        let first = find_first(0..1000, Parallelism::Parallel, |i| (i % 37 == 36).then_some(i));
        assert_eq!(first, Some((36, 36)));
    }
}
