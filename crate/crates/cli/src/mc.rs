//! Deterministic parallel Monte Carlo.
//!
//! Replica `r` always consumes the random stream with `stream_id = r`, and
//! results are collected in replica order, so the aggregate is identical
//! for every thread count.

use rayon::prelude::*;

/// Number of worker threads: `--threads` flag if given, else the
//  `SORTNET_THREADS` environment variable, else all available cores.
pub fn resolve_threads(flag: Option<usize>) -> usize {
    flag.or_else(|| {
        std::env::var("SORTNET_THREADS")
            .ok()
            .and_then(|v| v.parse().ok())
    })
    .unwrap_or_else(|| {
        std::thread::available_parallelism()
            .map(|v| v.get())
            .unwrap_or(1)
    })
    .max(1)
}

/// Run `samples` independent replicas of `statistic`, replica `r` on
/// stream id `r`, on a dedicated pool of `threads` workers. The returned
/// vector is indexed by replica.
pub fn parallel_monte_carlo<T, F>(samples: usize, threads: usize, statistic: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64) -> T + Sync + Send,
{
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .expect("thread pool construction");
    pool.install(|| {
        (0..samples as u64)
            .into_par_iter()
            .map(statistic)
            .collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use sortnet_core::rng::RandomStream;

    #[test]
    fn aggregate_is_thread_count_independent() {
        let stat = |r: u64| RandomStream::new(42, r).next_u64();
        let one = parallel_monte_carlo(64, 1, stat);
        let eight = parallel_monte_carlo(64, 8, stat);
        assert_eq!(one, eight);
    }

    #[test]
    fn single_sample_equals_direct_call() {
        let stat = |r: u64| RandomStream::new(7, r).next_u64();
        assert_eq!(parallel_monte_carlo(1, 4, stat), vec![stat(0)]);
    }
}
