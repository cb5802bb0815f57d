use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;

use super::TaeError;

pub const MAX_BOGOSORT_LEN: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BogoOutcome {
    Sorted { sorted: Vec<i64>, tries: u64 },
    GaveUp { tries: u64 },
}

impl BogoOutcome {
    pub fn tries(&self) -> u64 {
        match self {
            BogoOutcome::Sorted { tries, .. } | BogoOutcome::GaveUp { tries } => *tries,
        }
    }
}

fn is_sorted(v: &[i64]) -> bool {
    v.windows(2).all(|w| w[0] <= w[1])
}

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// Permutation of `0..n` with lexicographic rank `rank`.
pub fn unrank_permutation(n: usize, mut rank: u64) -> Vec<usize> {
    let mut pool: Vec<usize> = (0..n).collect();
    let mut out = Vec::with_capacity(n);
    for i in (0..n).rev() {
        let f = factorial(i);
        let k = (rank / f) as usize;
        rank %= f;
        out.push(pool.remove(k));
    }
    out
}

/// Count sortedness checks until the arrangement is sorted.
///
/// Without memory each scramble is a fresh uniform shuffle and the run
/// gives up after `max_tries` checks. With memory, arrangements are drawn
/// without replacement (the starting one counts as seen), so at most `n!`
/// checks are needed and `max_tries` does not apply.
pub fn bogosort(seq: &[i64], memoized: bool, rng: &mut impl Rng, max_tries: u64) -> Result<BogoOutcome, TaeError> {
    if seq.len() > MAX_BOGOSORT_LEN {
        return Err(TaeError::Domain(format!(
            "sequence length {} exceeds {MAX_BOGOSORT_LEN}",
            seq.len()
        )));
    }
    if memoized {
        return Ok(memoized_sort(seq, rng));
    }
    let mut v = seq.to_vec();
    let mut tries = 0u64;
    loop {
        if tries == max_tries {
            return Ok(BogoOutcome::GaveUp { tries });
        }
        tries += 1;
        if is_sorted(&v) {
            return Ok(BogoOutcome::Sorted { sorted: v, tries });
        }
        v.shuffle(rng);
    }
}

fn memoized_sort(seq: &[i64], rng: &mut impl Rng) -> BogoOutcome {
    let n = seq.len();
    let total = factorial(n);
    // lazy Fisher–Yates over ranks 0..n!; slot i holds `swapped[i]` or i
    let mut swapped: HashMap<u64, u64> = HashMap::new();
    if is_sorted(seq) {
        return BogoOutcome::Sorted { sorted: seq.to_vec(), tries: 1 };
    }
    for t in 1..total {
        let j = rng.gen_range(t..total);
        let at_j = *swapped.get(&j).unwrap_or(&j);
        let at_t = *swapped.get(&t).unwrap_or(&t);
        swapped.insert(j, at_t);
        let arrangement: Vec<i64> = unrank_permutation(n, at_j).into_iter().map(|i| seq[i]).collect();
        if is_sorted(&arrangement) {
            return BogoOutcome::Sorted { sorted: arrangement, tries: t + 1 };
        }
    }
    unreachable!("some permutation sorts the sequence")
}
