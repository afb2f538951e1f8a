//! Execution strategy for the enumeration scans.
//!
//! Every scan in the crate (subspace sweeps, subcode enumeration, codeword
//! enumeration) is a fold over an index range followed by a reduction.
//! With the `parallel` feature the fold runs on the rayon pool; without it,
//! or when [`ExecMode::Sequential`] is requested, it runs on the caller's
//! thread. Both paths visit the same indices and use associative
//! reductions, so results are identical.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// How to run a scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExecMode {
    Sequential,
    Parallel,
}

impl Default for ExecMode {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            ExecMode::Parallel
        } else {
            ExecMode::Sequential
        }
    }
}

impl ExecMode {
    /// True when this mode will actually use worker threads.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == ExecMode::Parallel
    }
}

// Shortest range handed to rayon.
#[cfg(feature = "parallel")]
const PARALLEL_THRESHOLD: u64 = 64;

/// Fold over `0..len` and combine partial results with `reduce`.
///
/// `reduce` must be associative and `identity()` its neutral element.
pub fn fold_range<T, I, F, R>(mode: ExecMode, len: u64, identity: I, fold: F, reduce: R) -> T
where
    T: Send,
    I: Fn() -> T + Sync + Send,
    F: Fn(T, u64) -> T + Sync + Send,
    R: Fn(T, T) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        if mode.is_parallel() && len >= PARALLEL_THRESHOLD {
            return (0..len)
                .into_par_iter()
                .fold(&identity, &fold)
                .reduce(&identity, &reduce);
        }
    }
    let _ = &reduce;
    let _ = mode;
    (0..len).fold(identity(), fold)
}

/// Map every item of a slice, preserving order.
pub fn map_slice<S, T, F>(mode: ExecMode, items: &[S], f: F) -> Vec<T>
where
    S: Sync,
    T: Send,
    F: Fn(&S) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        if mode.is_parallel() && items.len() > 1 {
            return items.par_iter().map(f).collect();
        }
    }
    let _ = mode;
    items.iter().map(f).collect()
}
