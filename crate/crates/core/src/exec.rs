//! Sequential or data-parallel execution of independent work items.
//!
//! Results always come back in input order and searches report the match
//! with the lowest index, so output never depends on the thread count.

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Exec {
    Sequential,
    /// Runs on the rayon pool when the `parallel` feature is enabled and
    /// falls back to sequential execution otherwise.
    #[default]
    Parallel,
}

impl Exec {
    pub fn map<T, R, G>(self, items: &[T], g: G) -> Vec<R>
    where
        T: Sync,
        R: Send,
        G: Fn(&T) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self == Exec::Parallel {
            use rayon::prelude::*;
            return items.par_iter().map(g).collect();
        }
        items.iter().map(g).collect()
    }

    pub fn map_range<R, G>(self, n: usize, g: G) -> Vec<R>
    where
        R: Send,
        G: Fn(usize) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self == Exec::Parallel {
            use rayon::prelude::*;
            return (0..n).into_par_iter().map(g).collect();
        }
        (0..n).map(g).collect()
    }

    /// The result for the first item (by index) where `g` returns `Some`.
    pub fn find_first<T, R, G>(self, items: &[T], g: G) -> Option<R>
    where
        T: Sync,
        R: Send,
        G: Fn(&T) -> Option<R> + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self == Exec::Parallel {
            use rayon::prelude::*;
            return items.par_iter().find_map_first(g);
        }
        items.iter().find_map(g)
    }

    pub fn find_first_range<R, G>(self, n: usize, g: G) -> Option<R>
    where
        R: Send,
        G: Fn(usize) -> Option<R> + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self == Exec::Parallel {
            use rayon::prelude::*;
            return (0..n).into_par_iter().find_map_first(g);
        }
        (0..n).find_map(g)
    }
}

/// Runs `f` on a dedicated pool with `threads` workers. Without the
/// `parallel` feature this just calls `f`.
pub fn with_threads<R: Send>(threads: usize, f: impl FnOnce() -> R + Send) -> R {
    #[cfg(feature = "parallel")]
    {
        match rayon::ThreadPoolBuilder::new().num_threads(threads.max(1)).build() {
            Ok(pool) => pool.install(f),
            Err(_) => f(),
        }
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = threads;
        f()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_and_first_match_are_stable() {
        let xs: Vec<u32> = (0..1000).collect();
        for exec in [Exec::Sequential, Exec::Parallel] {
            assert_eq!(exec.map(&xs, |x| x * 2)[999], 1998);
            assert_eq!(exec.find_first(&xs, |&x| (x % 37 == 36).then_some(x)), Some(36));
            assert_eq!(exec.find_first_range(10, |i| (i > 100).then_some(i)), None);
            assert_eq!(exec.map_range(4, |i| i), vec![0, 1, 2, 3]);
        }
        let r = with_threads(3, || Exec::Parallel.map(&xs, |x| x + 1));
        assert_eq!(r, (1..1001).collect::<Vec<_>>());
    }
}
