//! Data-parallel map with a deterministic, order-preserving reduction.
//!
//! With the `parallel` feature (default) the map runs on the rayon pool; the
//! reduction is always performed sequentially in index order, so numerical
//! results are bitwise independent of the thread count. Without the feature
//! everything runs sequentially.

/// Map `f` over `items` and sum the results in index order.
pub fn map_sum<T, F>(items: &[T], f: F) -> f64
where
    T: Sync,
    F: Fn(&T) -> f64 + Sync + Send,
{
    map_collect(items, f).into_iter().sum()
}

/// Map `f` over `items`, preserving order.
#[cfg(feature = "parallel")]
pub fn map_collect<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    use rayon::prelude::*;
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map_collect<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    F: Fn(&T) -> R,
{
    items.iter().map(f).collect()
}

/// Sequential twin of [`map_sum`], kept unconditionally for benchmarks and
/// for the determinism cross-check.
pub fn map_sum_seq<T, F>(items: &[T], f: F) -> f64
where
    F: Fn(&T) -> f64,
{
    items.iter().map(f).sum()
}

/// Map over an integer range and sum in index order.
pub fn range_map_sum<F>(range: std::ops::Range<i64>, f: F) -> f64
where
    F: Fn(i64) -> f64 + Sync + Send,
{
    let items: Vec<i64> = range.collect();
    map_sum(&items, |&i| f(i))
}
