//! Data-parallel evaluation over independent inputs.
//!
//! With the `parallel` feature (on by default) [`Execution::Parallel`] fans out over
//! rayon's global pool; without it every call runs sequentially. Output order always
//! matches input order.

use crate::error::Result;
use crate::geometry::Triangle;
use crate::partition::{equal_partition, PartitionSolution};
use crate::solve2d::SolverConfig;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

impl Execution {
    /// Whether `Parallel` actually runs on multiple threads in this build.
    pub const fn parallel_available() -> bool {
        cfg!(feature = "parallel")
    }
}

pub fn map<T, R, F>(items: &[T], exec: Execution, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => {
            use rayon::prelude::*;
            items.par_iter().map(f).collect()
        }
        _ => items.iter().map(f).collect(),
    }
}

/// `f(0), f(1), …, f(n − 1)`.
pub fn map_range<R, F>(n: usize, exec: Execution, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => {
            use rayon::prelude::*;
            (0..n).into_par_iter().map(f).collect()
        }
        _ => (0..n).map(f).collect(),
    }
}

pub fn solve_all(tris: &[Triangle], cfg: &SolverConfig, exec: Execution) -> Vec<Result<PartitionSolution>> {
    map(tris, exec, |t| equal_partition(t, cfg))
}
