//! Execution strategy for the data-parallel loops (shuffle expansion,
//! case sweeps, axiom sweeps).
//!
//! With the `parallel` feature the work is spread over the rayon pool;
//! without it every strategy runs on the calling thread. Both paths produce
//! identical results: partial results are always merged in input order.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Exec {
    Sequential,
    /// Falls back to `Sequential` when the crate is built without `parallel`.
    Parallel,
}

impl Default for Exec {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Exec::Parallel
        } else {
            Exec::Sequential
        }
    }
}

impl Exec {
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }

    /// Order-preserving map.
    pub fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return items.par_iter().map(f).collect();
        }
        items.iter().map(f).collect()
    }

    /// Map each item to a partial result and fold them left to right.
    pub fn map_fold<T, R, F, M>(self, items: &[T], init: R, f: F, merge: M) -> R
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
        M: Fn(R, R) -> R,
    {
        self.map(items, f).into_iter().fold(init, merge)
    }
}
