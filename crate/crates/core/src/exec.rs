//! Data-parallel driver with a sequential fallback.
//!
//! Every parallel loop in the crate goes through [`map_slice`], which uses
//! rayon when the `parallel` feature is enabled and a plain iterator
//! otherwise. Output order always matches input order, so results are
//! bit-identical in both modes.

use std::cell::Cell;

thread_local! {
    static FORCE_SEQUENTIAL: Cell<bool> = const { Cell::new(false) };
}

/// Run `f` with parallel dispatch disabled on the current thread.
///
/// Intended for the benchmark suite, which compares the rayon path against
/// the sequential one inside a single binary.
pub fn scoped_sequential<R>(f: impl FnOnce() -> R) -> R {
    FORCE_SEQUENTIAL.with(|c| c.set(true));
    let out = f();
    FORCE_SEQUENTIAL.with(|c| c.set(false));
    out
}

fn sequential_forced() -> bool {
    FORCE_SEQUENTIAL.with(|c| c.get())
}

/// Map `f` over `items`, preserving order.
#[cfg(feature = "parallel")]
pub fn map_slice<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    use rayon::prelude::*;
    if sequential_forced() || items.len() < 2 {
        items.iter().map(f).collect()
    } else {
        items.par_iter().map(f).collect()
    }
}

/// Map `f` over `items`, preserving order.
#[cfg(not(feature = "parallel"))]
pub fn map_slice<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    F: Fn(&T) -> U,
{
    let _ = sequential_forced();
    items.iter().map(f).collect()
}

/// Map `f` over the range `0..n`, preserving order.
pub fn map_range<U, F>(n: usize, f: F) -> Vec<U>
where
    U: Send,
    F: Fn(usize) -> U + Sync + Send,
{
    let idx: Vec<usize> = (0..n).collect();
    map_slice(&idx, |&i| f(i))
}
