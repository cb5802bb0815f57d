use std::collections::BTreeMap;

use rand::Rng;
use serde::Serialize;

use super::fock::TruncatedFockSpace;
use super::poly::DiophantinePolynomial;
use super::problem::{evolve, AdiabaticProblem};
use super::AqcError;
use crate::linalg::Ket;
use crate::rng;

pub const MAX_ORACLE_LATTICE: usize = 10_000_000;
/// Rough ceiling on `steps × dim²` for one evolution.
pub const MAX_EVOLUTION_WORK: f64 = 2e11;

/// Counts per measured occupation tuple.
pub type Histogram = BTreeMap<Vec<u64>, u64>;

/// Seeded multinomial sampling of `|ψ_j|²`.
pub fn measure_sample(psi: &Ket, space: &TruncatedFockSpace, shots: u64, seed: u64) -> Result<Histogram, AqcError> {
    if shots == 0 {
        return Err(AqcError::Domain("shots must be positive".into()));
    }
    if psi.dim() != space.dimension() {
        return Err(AqcError::Shape(format!("state has dimension {}, space has {}", psi.dim(), space.dimension())));
    }
    let norm = psi.norm();
    if (norm - 1.0).abs() > 1e-6 {
        return Err(AqcError::Domain(format!("state has norm {norm}")));
    }
    let mut cdf = Vec::with_capacity(psi.dim());
    let mut acc = 0.0;
    for p in psi.probabilities() {
        acc += p;
        cdf.push(acc);
    }
    let mut r = rng::stream(seed, 0);
    let mut hist = Histogram::new();
    for _ in 0..shots {
        let u = r.gen::<f64>() * acc;
        let j = cdf.partition_point(|&c| c <= u).min(cdf.len() - 1);
        *hist.entry(space.tuple(j)).or_insert(0) += 1;
    }
    Ok(hist)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroundOracle {
    /// `min D²` over the truncated lattice.
    pub energy: u128,
    pub witnesses: Vec<Vec<u64>>,
    pub lattice_size: usize,
}

/// Exhaustive minimum of `D²` over `{0..=cutoff}^k`.
pub fn exact_ground_oracle(d: &DiophantinePolynomial, cutoff: u64) -> Result<GroundOracle, AqcError> {
    let space = TruncatedFockSpace::new(d.num_vars(), cutoff)
        .map_err(|_| AqcError::Resource("lattice size overflows".into()))?;
    let size = space.dimension();
    if size > MAX_ORACLE_LATTICE {
        return Err(AqcError::Resource(format!("lattice of {size} points exceeds {MAX_ORACLE_LATTICE}")));
    }
    let mut best = u128::MAX;
    let mut witnesses = Vec::new();
    for t in space.tuples() {
        let e = d.energy(&t)?;
        if e < best {
            best = e;
            witnesses.clear();
        }
        if e == best {
            witnesses.push(t);
        }
    }
    Ok(GroundOracle { energy: best, witnesses, lattice_size: size })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    SolvableWithWitness,
    NoSolutionUpToCutoff,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DecideParams {
    pub cutoff: u64,
    pub total_time: f64,
    pub dt: f64,
    pub shots: u64,
    pub seed: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct DecisionReport {
    pub verdict: Verdict,
    pub witness: Option<Vec<u64>>,
    /// Exact `min D²` on the lattice.
    pub ground_energy: f64,
    /// Frequency of the most common outcome.
    pub success_probability_estimate: f64,
    /// Probability mass the final state puts on the exact minimizers.
    pub ground_overlap: f64,
    pub most_frequent: Vec<u64>,
    pub samples: Vec<(Vec<u64>, u64)>,
    pub cutoff: u64,
    pub total_time: f64,
    pub dt_requested: f64,
    pub dt_effective: f64,
    pub steps: u64,
    pub norm_drift: f64,
    pub caveat: String,
}

/// Build, evolve, measure and check the most frequent outcome by substitution.
///
/// The requested `dt` is split into equal substeps so that `dt·‖H‖` stays
/// at the automatic step target.
pub fn decide(d: &DiophantinePolynomial, p: DecideParams) -> Result<DecisionReport, AqcError> {
    if !(p.total_time > 0.0 && p.total_time.is_finite()) || !(p.dt > 0.0 && p.dt.is_finite()) {
        return Err(AqcError::Domain("time and dt must be positive".into()));
    }
    if p.shots == 0 {
        return Err(AqcError::Domain("shots must be positive".into()));
    }
    let oracle = exact_ground_oracle(d, p.cutoff)?;
    let mut problem = AdiabaticProblem::for_polynomial(d, p.cutoff, p.total_time, p.dt)?;
    let (dt_eff, _) = problem.stable_substep(p.dt);
    let dim = problem.space.dimension() as f64;
    let work = (p.total_time / dt_eff).ceil() * dim * dim;
    if work > MAX_EVOLUTION_WORK {
        return Err(AqcError::Resource(format!(
            "evolution needs about {work:.3e} operations; lower the cutoff or the total time"
        )));
    }
    problem.dt = dt_eff;
    let psi0 = problem.initial_state()?;
    let ev = evolve(&problem, &psi0)?;
    let hist = measure_sample(&ev.state, &problem.space, p.shots, p.seed)?;
    let (best, count) = hist.iter().fold((None, 0), |(b, c), (t, &n)| if n > c { (Some(t), n) } else { (b, c) });
    let best = best.expect("shots > 0").clone();
    let solved = d.eval(&best)? == 0;
    let space = problem.space;
    let ground_overlap =
        oracle.witnesses.iter().filter_map(|w| space.index(w)).map(|j| ev.state.amplitude(j).norm_sqr()).sum();
    let caveat = if solved {
        format!("witness {best:?} verified by substitution")
    } else {
        format!(
            "no solution found with every variable in 0..={}; larger values were not searched and the run \
             is one finite-time sample, not a proof",
            p.cutoff
        )
    };
    Ok(DecisionReport {
        verdict: if solved { Verdict::SolvableWithWitness } else { Verdict::NoSolutionUpToCutoff },
        witness: solved.then(|| best.clone()),
        ground_energy: oracle.energy as f64,
        success_probability_estimate: count as f64 / p.shots as f64,
        ground_overlap,
        most_frequent: best,
        samples: hist.into_iter().collect(),
        cutoff: p.cutoff,
        total_time: p.total_time,
        dt_requested: p.dt,
        dt_effective: dt_eff,
        steps: ev.steps,
        norm_drift: ev.norm_drift,
        caveat,
    })
}
