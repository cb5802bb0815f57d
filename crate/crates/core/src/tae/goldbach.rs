use serde::Serialize;

use super::limit::AnswerStream;
use super::TaeError;

pub fn is_prime(n: u64) -> bool {
    if n < 4 {
        return n >= 2;
    }
    if n.is_multiple_of(2) || n.is_multiple_of(3) {
        return false;
    }
    let mut d = 5u64;
    while d * d <= n {
        if n.is_multiple_of(d) || n.is_multiple_of(d + 2) {
            return false;
        }
        d += 6;
    }
    true
}

/// Smallest prime `p ≤ n/2` with `n − p` prime.
pub fn goldbach_witness(n: u64) -> Option<u64> {
    (2..=n / 2).find(|&p| is_prime(p) && is_prime(n - p))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GoldbachRun {
    /// Answers indexed by the even number just examined.
    pub stream: AnswerStream,
    /// Largest even number examined.
    pub checked_up_to: u64,
    pub counterexample: Option<u64>,
}

/// Answer "yes" after examining 4, then keep checking even numbers up to
/// `horizon`, switching to "no" at the first one with no prime split.
pub fn goldbach_stream(horizon: u64) -> Result<GoldbachRun, TaeError> {
    if horizon < 4 {
        return Err(TaeError::Domain(format!("horizon must be at least 4, got {horizon}")));
    }
    let mut stream = AnswerStream::new(horizon);
    stream.push(4, true)?;
    let mut checked = 4;
    let mut n = 6;
    while n <= horizon {
        checked = n;
        if goldbach_witness(n).is_none() {
            stream.push(n, false)?;
            return Ok(GoldbachRun { stream, checked_up_to: n, counterexample: Some(n) });
        }
        n += 2;
    }
    Ok(GoldbachRun { stream, checked_up_to: checked, counterexample: None })
}
