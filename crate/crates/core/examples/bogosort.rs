//! Bogosort with and without memory of tried arrangements.

use hyperlab::rng;
use hyperlab::tae::bogosort;

fn main() {
    let seq = [5, 4, 3, 2, 1];
    let runs = 2000u64;
    for memo in [false, true] {
        let total: u64 = (0..runs)
            .map(|seed| bogosort(&seq, memo, &mut rng::stream(seed, 0), 1_000_000).unwrap().tries())
            .sum();
        println!("memoized = {memo}: mean tries {:.1} over {runs} runs", total as f64 / runs as f64);
    }
}
