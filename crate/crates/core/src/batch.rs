//! Order-preserving maps over independent instances.
//!
//! With the `parallel` feature (on by default) [`map_indexed`] runs on the
//! rayon thread pool; without it, it falls back to [`map_indexed_sequential`].
//! Both return results in index order, so reports built from them are
//! identical either way.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Seed of instance `index` in a batch started at `base`.
pub fn instance_seed(base: u64, index: usize) -> u64 {
    base.wrapping_add(index as u64)
}

pub fn map_indexed_sequential<T, F>(count: usize, f: F) -> Vec<T>
where
    F: Fn(usize) -> T,
{
    (0..count).map(f).collect()
}

#[cfg(feature = "parallel")]
pub fn map_indexed_parallel<T, F>(count: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    (0..count).into_par_iter().map(f).collect()
}

#[cfg(feature = "parallel")]
pub fn map_indexed<T, F>(count: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    map_indexed_parallel(count, f)
}

#[cfg(not(feature = "parallel"))]
pub fn map_indexed<T, F>(count: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    map_indexed_sequential(count, f)
}

/// Seeds `base, base + 1, ...` mapped through `f`, in order.
pub fn map_seeds<T, F>(base: u64, count: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64) -> T + Sync + Send,
{
    map_indexed(count, |i| f(instance_seed(base, i)))
}
