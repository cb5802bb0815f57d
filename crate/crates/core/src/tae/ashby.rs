use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::TaeError;
use crate::rng;

/// Trials are split into this many seeded partitions whatever the thread count.
pub const SIMULATION_PARTITIONS: u64 = 64;

/// Relative size of the neglected tail in the parallel-lock sum.
pub const CASE3_TAIL: f64 = 1e-9;

/// How the wheels are spun until every one shows A.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Strategy {
    /// Spin all wheels each second; any B resets everything.
    AllAtOnce,
    /// Spin one wheel per second until it shows A, then move on.
    OneAtATime,
    /// Spin all unlocked wheels each second; an A locks its wheel.
    LockInParallel,
}

impl Strategy {
    pub fn from_case(case: u8) -> Result<Self, TaeError> {
        match case {
            1 => Ok(Strategy::AllAtOnce),
            2 => Ok(Strategy::OneAtATime),
            3 => Ok(Strategy::LockInParallel),
            _ => Err(TaeError::Domain(format!("strategy must be 1, 2 or 3, got {case}"))),
        }
    }

    pub fn case(self) -> u8 {
        match self {
            Strategy::AllAtOnce => 1,
            Strategy::OneAtATime => 2,
            Strategy::LockInParallel => 3,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct WheelExperiment {
    pub wheels: u32,
    /// Chance a single spin shows A.
    pub p: f64,
    pub strategy: Strategy,
}

impl WheelExperiment {
    pub fn new(wheels: u32, p: f64, strategy: Strategy) -> Result<Self, TaeError> {
        if wheels == 0 {
            return Err(TaeError::Domain("need at least one wheel".into()));
        }
        if !(p > 0.0 && p < 1.0) {
            return Err(TaeError::Domain(format!("p must lie in (0, 1), got {p}")));
        }
        Ok(WheelExperiment { wheels, p, strategy })
    }
}

/// Expected seconds until all wheels show A.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Expectation {
    /// `+∞` when the value overflows `f64`; see `log2_seconds`.
    pub seconds: f64,
    pub log2_seconds: f64,
}

/// `P(some wheel still unlocked after t seconds) = 1 − (1 − qᵗ)ᴺ`.
fn unfinished_after(n: f64, q: f64, t: u64) -> f64 {
    let qt = q.powf(t as f64);
    if qt >= 1.0 {
        return 1.0;
    }
    -(n * (-qt).ln_1p()).exp_m1()
}

pub fn ashby_expected(e: &WheelExperiment) -> Expectation {
    let n = e.wheels as f64;
    let p = e.p;
    match e.strategy {
        Strategy::AllAtOnce => {
            let log2 = -n * p.log2();
            Expectation { seconds: log2.exp2(), log2_seconds: log2 }
        }
        Strategy::OneAtATime => {
            let s = n / p;
            Expectation { seconds: s, log2_seconds: s.log2() }
        }
        Strategy::LockInParallel => {
            let q = 1.0 - p;
            let mut sum = 0.0;
            let mut t = 0u64;
            loop {
                sum += unfinished_after(n, q, t);
                t += 1;
                // Σ_{s≥t} (1 − (1 − qˢ)ᴺ) ≤ N·qᵗ/p
                let tail = n * q.powf(t as f64) / p;
                if tail <= CASE3_TAIL * sum {
                    break;
                }
            }
            Expectation { seconds: sum, log2_seconds: sum.log2() }
        }
    }
}

/// Seconds taken by one run of the experiment.
pub fn ashby_trial(e: &WheelExperiment, rng: &mut impl Rng) -> u64 {
    let mut seconds = 0u64;
    match e.strategy {
        Strategy::AllAtOnce => loop {
            seconds += 1;
            // wheels after the first B cannot change the outcome of the second
            if (0..e.wheels).all(|_| rng.gen_bool(e.p)) {
                return seconds;
            }
        },
        Strategy::OneAtATime => {
            for _ in 0..e.wheels {
                loop {
                    seconds += 1;
                    if rng.gen_bool(e.p) {
                        break;
                    }
                }
            }
            seconds
        }
        Strategy::LockInParallel => {
            let mut left = e.wheels;
            while left > 0 {
                seconds += 1;
                left -= (0..left).filter(|_| rng.gen_bool(e.p)).count() as u32;
            }
            seconds
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SimulationSummary {
    pub trials: u64,
    pub mean: f64,
    pub std_error: f64,
    pub seed: u64,
}

/// Monte Carlo estimate of the expected time, reproducible for a given seed.
pub fn ashby_simulate(e: &WheelExperiment, trials: u64, seed: u64) -> Result<SimulationSummary, TaeError> {
    if trials < 2 {
        return Err(TaeError::Domain("need at least two trials".into()));
    }
    let parts = SIMULATION_PARTITIONS.min(trials);
    let sums: Vec<(f64, f64)> = rng::with_pool(|| {
        (0..parts)
            .into_par_iter()
            .map(|k| {
                let count = trials / parts + u64::from(k < trials % parts);
                let mut r = rng::stream(seed, k);
                let (mut s, mut s2) = (0.0, 0.0);
                for _ in 0..count {
                    let x = ashby_trial(e, &mut r) as f64;
                    s += x;
                    s2 += x * x;
                }
                (s, s2)
            })
            .collect()
    });
    let (s, s2) = sums.iter().fold((0.0, 0.0), |(a, b), (x, y)| (a + x, b + y));
    let nt = trials as f64;
    let mean = s / nt;
    let var = ((s2 - nt * mean * mean) / (nt - 1.0)).max(0.0);
    Ok(SimulationSummary { trials, mean, std_error: (var / nt).sqrt(), seed })
}
