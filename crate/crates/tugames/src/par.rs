//! Data-parallel mapping with a sequential fallback.
//!
//! Per-item results are produced independently and collected in index
//! order, so the parallel and sequential paths return identical vectors.

/// Per-player loops go parallel from this player count; below it the rayon
/// dispatch overhead exceeds the 2^n work per player (crossover measured
/// around n = 14 on a two-core box, see benches/values.rs).
pub(crate) const PLAYER_PAR_THRESHOLD: usize = 14;

#[cfg(feature = "parallel")]
pub(crate) fn map_indexed<T, F>(len: usize, parallel: bool, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    use rayon::prelude::*;
    if parallel && len > 1 {
        (0..len).into_par_iter().map(f).collect()
    } else {
        (0..len).map(f).collect()
    }
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_indexed<T, F>(len: usize, _parallel: bool, f: F) -> Vec<T>
where
    F: Fn(usize) -> T,
{
    (0..len).map(f).collect()
}
