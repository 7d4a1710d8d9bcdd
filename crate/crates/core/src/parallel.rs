//! Thread-count configuration for the rayon pool.

/// Environment variable capping the number of worker threads.
pub const THREADS_ENV: &str = "PARTITION_FORGE_THREADS";

/// Reads [`THREADS_ENV`]; `None` when unset, empty or not a positive integer.
pub fn threads_from_env() -> Option<usize> {
    std::env::var(THREADS_ENV).ok()?.trim().parse().ok().filter(|&n| n > 0)
}

/// Sizes the global pool from [`THREADS_ENV`]. Only the first call in a
/// process has an effect; later calls and an unset variable are no-ops.
pub fn init_from_env() {
    if let Some(n) = threads_from_env() {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}
