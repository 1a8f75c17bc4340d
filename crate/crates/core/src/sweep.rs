//! Range partitioning for verification sweeps.
//!
//! Work items are independent; results come back in input order regardless
//! of the number of workers.

use rayon::prelude::*;

/// Maps `f` over `items` on `jobs` worker threads (`jobs <= 1` runs inline).
pub fn map_keys<K, T, F>(items: &[K], jobs: usize, f: F) -> Vec<T>
where
    K: Sync,
    T: Send,
    F: Fn(&K) -> T + Sync + Send,
{
    if jobs <= 1 || items.len() < 2 {
        return items.iter().map(f).collect();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(pool) => pool.install(|| items.par_iter().map(&f).collect()),
        Err(_) => items.iter().map(f).collect(),
    }
}

/// All `(r, s)` with `r_lo <= r <= r_hi`, `s_lo <= s <= s_hi`, row-major.
pub fn rectangle(r_lo: usize, r_hi: usize, s_lo: usize, s_hi: usize) -> Vec<(usize, usize)> {
    (r_lo..=r_hi)
        .flat_map(|r| (s_lo..=s_hi).map(move |s| (r, s)))
        .collect()
}
