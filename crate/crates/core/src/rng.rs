//! Seeded random streams and the worker pool.
//!
//! Every random draw in the crate comes from ChaCha8, seeded per partition
//! by mixing `(seed, partition)` through SplitMix64. Work is split into a
//! fixed number of partitions independent of the thread count, so results
//! are identical however many workers run them.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Environment variable that caps worker threads.
pub const THREADS_ENV: &str = "HYPERLAB_THREADS";

pub fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

pub fn derive_seed(seed: u64, partition: u64) -> u64 {
    splitmix64(seed ^ splitmix64(partition))
}

pub fn stream(seed: u64, partition: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(derive_seed(seed, partition))
}

/// Worker count from the environment, if set to a positive integer.
pub fn thread_cap() -> Option<usize> {
    std::env::var(THREADS_ENV).ok()?.trim().parse().ok().filter(|&n| n > 0)
}

/// Run `f` inside a pool honouring the thread cap.
pub fn with_pool<R: Send>(f: impl FnOnce() -> R + Send) -> R {
    match thread_cap() {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(f),
            Err(_) => f(),
        },
        None => f(),
    }
}
