//! Accelerated-machine time accounting.
//!
//! Step `i` (counting from 0) of an accelerated machine lasts `base·ratioⁱ`.
//! All sums are exact rationals; floating point appears only at the
//! reporting boundary, because parity and boundary questions (Thomson's
//! lamp, "is the elapsed time below the limit") are exact questions.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::tm::{RunOptions, SymbolId, TuringMachine};

/// Speed of light in vacuum, m/s.
pub const SPEED_OF_LIGHT: u64 = 299_792_458;

/// Step index quoted for the first superluminal head move under a 1 m/s
/// first step. Counting from 1 with each step half as long, the least `n`
/// with `2^(n−1) > c` is 30; the quoted figure is kept for comparison.
pub const QUOTED_SUPERLUMINAL_STEP: u64 = 29;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ZenoError {
    #[error("domain error: {0}")]
    Domain(String),
}

/// Geometric step schedule. Default: first step 1 s, ratio ½.
#[derive(Debug, Clone, PartialEq)]
pub struct ZenoSchedule {
    base: BigRational,
    ratio: BigRational,
}

impl Default for ZenoSchedule {
    fn default() -> Self {
        ZenoSchedule { base: BigRational::one(), ratio: BigRational::new(1.into(), 2.into()) }
    }
}

/// Exact value of a finite `f64`.
pub fn exact(x: f64) -> Result<BigRational, ZenoError> {
    BigRational::from_float(x).ok_or_else(|| ZenoError::Domain(format!("{x} is not finite")))
}

pub fn to_f64(x: &BigRational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Approximate `log2|x|` for huge integers without overflowing `f64`.
fn log2_int(x: &BigInt) -> f64 {
    let bits = x.bits();
    let shift = bits.saturating_sub(63);
    let top = (x.magnitude() >> shift).to_u64().expect("fits in 63 bits");
    (top as f64).log2() + shift as f64
}

fn log2_ratio(x: &BigRational) -> f64 {
    log2_int(x.numer()) - log2_int(x.denom())
}

fn pow(r: &BigRational, k: u64) -> BigRational {
    let e = i32::try_from(k).expect("exponent fits in i32");
    num_traits::Pow::pow(r, e)
}

/// Largest `k ≥ 0` with `r^k ≥ g`, for `0 < r < 1` and `0 < g ≤ 1`.
fn largest_power_at_least(r: &BigRational, g: &BigRational) -> u64 {
    let est = (log2_ratio(g) / log2_ratio(r)).floor().max(0.0) as u64;
    let mut k = est.saturating_sub(2);
    while pow(r, k + 1) >= *g {
        k += 1;
    }
    while k > 0 && pow(r, k) < *g {
        k -= 1;
    }
    k
}

/// Outcome of asking how many steps fit in a time budget.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "n")]
pub enum Budget {
    /// Largest `n` with `zeno_time(n) ≤ t`.
    Steps(u64),
    /// The budget is shorter than the first step.
    BelowFirstStep,
    /// The budget reaches the limit: every step completes.
    Unbounded,
}

impl ZenoSchedule {
    pub fn new(base: BigRational, ratio: BigRational) -> Result<Self, ZenoError> {
        if !base.is_positive() {
            return Err(ZenoError::Domain("base step time must be positive".into()));
        }
        if !ratio.is_positive() || ratio >= BigRational::one() {
            return Err(ZenoError::Domain("ratio must lie in (0, 1)".into()));
        }
        Ok(ZenoSchedule { base, ratio })
    }

    pub fn from_f64(base: f64, ratio: f64) -> Result<Self, ZenoError> {
        Self::new(exact(base)?, exact(ratio)?)
    }

    pub fn base(&self) -> &BigRational {
        &self.base
    }

    pub fn ratio(&self) -> &BigRational {
        &self.ratio
    }

    /// Total time of infinitely many steps, `base/(1−ratio)`.
    pub fn limit(&self) -> BigRational {
        &self.base / (BigRational::one() - &self.ratio)
    }

    /// Duration of step `i` (0-based).
    pub fn step_duration(&self, i: u64) -> BigRational {
        &self.base * pow(&self.ratio, i)
    }

    /// `Σ_{i=0..n} base·ratioⁱ`, exact.
    pub fn zeno_time(&self, n: u64) -> BigRational {
        // limit·(q^k − p^k)/q^k with ratio = p/q; the second factor is already
        // in lowest terms, so only the small limit needs cancelling
        let k = u32::try_from(n + 1).expect("step count fits in u32");
        let qk = num_traits::pow(self.ratio.denom().clone(), k as usize);
        let pk = num_traits::pow(self.ratio.numer().clone(), k as usize);
        let (a, b) = (self.limit().numer().clone(), self.limit().denom().clone());
        let top = &qk - pk;
        let g1 = a.gcd(&(&qk % &a));
        let g2 = b.gcd(&(&top % &b));
        BigRational::new_raw((a / &g1) * (top / &g2), (b / &g2) * (qk / &g1))
    }

    pub fn steps_within_budget(&self, t: &BigRational) -> Result<Budget, ZenoError> {
        if !t.is_positive() {
            return Err(ZenoError::Domain("budget must be positive".into()));
        }
        let limit = self.limit();
        if *t >= limit {
            return Ok(Budget::Unbounded);
        }
        if *t < self.base {
            return Ok(Budget::BelowFirstStep);
        }
        // zeno_time(n) ≤ t  ⇔  ratio^(n+1) ≥ (limit − t)/limit
        let g = (&limit - t) / &limit;
        let k = largest_power_at_least(&self.ratio, &g);
        Ok(Budget::Steps(k - 1))
    }

    /// Steps an accelerated machine completes in `budget` when its schedule
    /// is stretched to fill the budget (first step `budget·(1−ratio)`) and a
    /// step may not be shorter than `min_step`.
    ///
    /// With ratio ½ this is `1 + ⌊log₂(budget/(2·min_step))⌋` (or 0), so
    /// waiting 64 times longer buys exactly 6 more steps.
    pub fn physically_bounded_steps(&self, budget: &BigRational, min_step: &BigRational) -> Result<u64, ZenoError> {
        if !budget.is_positive() || !min_step.is_positive() {
            return Err(ZenoError::Domain("budget and minimum step must be positive".into()));
        }
        let first = budget * (BigRational::one() - &self.ratio);
        let x = first / min_step;
        if x < BigRational::one() {
            return Ok(0);
        }
        // count k ≥ 0 with x·ratio^k ≥ 1
        Ok(1 + largest_power_at_least(&self.ratio, &x.recip()))
    }

    /// Lamp state at time `t`: switched on at 0, toggled at every `zeno_time(n)`.
    pub fn thomson_lamp(&self, t: &BigRational, convention: LampConvention) -> Result<Lamp, ZenoError> {
        if t.is_negative() {
            return Err(ZenoError::Domain("time must be non-negative".into()));
        }
        let toggles = if t.is_zero() {
            0
        } else {
            match self.steps_within_budget(t)? {
                Budget::Unbounded => return Ok(Lamp::Undefined),
                Budget::BelowFirstStep => 0,
                Budget::Steps(n) => n + 1,
            }
        };
        let on = convention.initially_on ^ (toggles % 2 == 1);
        Ok(if on { Lamp::On } else { Lamp::Off })
    }

    /// Least 1-based step at which the head outruns light, when the first
    /// step moves the head at `first_speed` m/s and each step is `ratio`
    /// times as long as the previous one over the same cell pitch.
    pub fn first_superluminal_step(&self, first_speed: f64, cell_pitch: f64) -> Result<Superluminal, ZenoError> {
        if first_speed.is_nan() || cell_pitch.is_nan() || first_speed <= 0.0 || cell_pitch <= 0.0 {
            return Err(ZenoError::Domain("speed and pitch must be positive".into()));
        }
        let v1 = exact(first_speed)?;
        let c = BigRational::from_integer(BigInt::from(SPEED_OF_LIGHT));
        let n = if v1 > c {
            1
        } else {
            // speed(n) = v1 / ratio^(n-1) > c  ⇔  ratio^(n-1) < v1/c
            let k = largest_power_at_least(&self.ratio, &(&v1 / &c));
            k + 2
        };
        let speed = &v1 / pow(&self.ratio, n - 1);
        Ok(Superluminal {
            step: n,
            speed: to_f64(&speed),
            step_duration: to_f64(&(exact(cell_pitch)? / &speed)),
            quoted_step: QUOTED_SUPERLUMINAL_STEP,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Lamp {
    On,
    Off,
    /// At or past the limit the state is not fixed by the toggling rule.
    Undefined,
}

/// Phase of Thomson's lamp; the toggling rule does not fix it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LampConvention {
    pub initially_on: bool,
}

impl Default for LampConvention {
    fn default() -> Self {
        LampConvention { initially_on: true }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Superluminal {
    pub step: u64,
    /// Head speed at that step, m/s.
    pub speed: f64,
    pub step_duration: f64,
    pub quoted_step: u64,
}

/// Fuel-bounded stand-in for the accelerated halting construction: the
/// flag cell goes 0 → 1 if the simulated machine halts. A real
/// accelerated machine would finish the supertask; this one stops at `fuel`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HaltingFlag {
    pub flag: u8,
    pub steps: u64,
    #[serde(serialize_with = "ser_rational_f64")]
    pub elapsed: BigRational,
    pub fuel_bounded: bool,
}

fn ser_rational_f64<S: serde::Serializer>(x: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(to_f64(x))
}

pub fn atm_halting_flag(
    schedule: &ZenoSchedule,
    m: &TuringMachine,
    input: &[SymbolId],
    fuel: u64,
) -> Result<HaltingFlag, crate::tm::TmError> {
    let out = m.run(input, RunOptions::fuel(fuel))?;
    let steps = out.config.steps;
    Ok(HaltingFlag { flag: u8::from(out.halted()), steps, elapsed: schedule.zeno_time(steps), fuel_bounded: true })
}

/// `2^e` as an exact rational.
pub fn pow2(e: i64) -> BigRational {
    let one = BigInt::one();
    if e >= 0 {
        BigRational::from_integer(one << e as usize)
    } else {
        BigRational::new(one, BigInt::from_biguint(Sign::Plus, num_bigint::BigUint::one() << (-e) as usize))
    }
}
