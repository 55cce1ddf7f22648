//! Execution policy for the data-parallel loops (per-arc rechecks, per-bridge
//! partitions, orientation enumeration).
//!
//! With the `parallel` feature, [`Execution::Parallel`] runs on the current
//! rayon pool. Without it, both variants run sequentially. Results never
//! depend on the policy.

use std::ops::Range;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

impl Execution {
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Execution::Parallel
    }

    /// Ordered filter over a slice.
    pub(crate) fn filter_items<T, P>(self, items: &[T], pred: P) -> Vec<T>
    where
        T: Copy + Send + Sync,
        P: Fn(T) -> bool + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return items.par_iter().copied().filter(|&x| pred(x)).collect();
        }
        items.iter().copied().filter(|&x| pred(x)).collect()
    }

    pub(crate) fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
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

    /// Maps every item and combines the results with an associative,
    /// commutative `combine`.
    pub(crate) fn map_reduce<T, R, F, I, C>(self, items: &[T], identity: I, f: F, combine: C) -> R
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
        I: Fn() -> R + Sync + Send,
        C: Fn(R, R) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return items.par_iter().map(f).reduce(&identity, &combine);
        }
        items.iter().map(f).fold(identity(), combine)
    }

    /// Folds every index of `range` into per-worker accumulators and merges them.
    pub(crate) fn fold_range<A, I, F, C>(self, range: Range<u64>, identity: I, fold: F, combine: C) -> A
    where
        A: Send,
        I: Fn() -> A + Sync + Send,
        F: Fn(A, u64) -> A + Sync + Send,
        C: Fn(A, A) -> A + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return range
                .into_par_iter()
                .fold(&identity, &fold)
                .reduce(&identity, &combine);
        }
        let _ = combine;
        range.fold(identity(), fold)
    }
}

/// Runs `f` with a policy matching `threads`: `Some(1)` is sequential,
/// `Some(k)` runs on a dedicated pool of `k` workers, `None` uses the global pool.
pub fn with_threads<R, F>(threads: Option<usize>, f: F) -> R
where
    R: Send,
    F: FnOnce(Execution) -> R + Send,
{
    match threads {
        Some(0) | Some(1) => f(Execution::Sequential),
        #[cfg(feature = "parallel")]
        Some(k) => match rayon::ThreadPoolBuilder::new().num_threads(k).build() {
            Ok(pool) => pool.install(|| f(Execution::Parallel)),
            Err(_) => f(Execution::Sequential),
        },
        #[cfg(not(feature = "parallel"))]
        Some(_) => f(Execution::Sequential),
        None => f(Execution::default()),
    }
}
