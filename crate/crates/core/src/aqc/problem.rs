use serde::Serialize;

use super::fock::TruncatedFockSpace;
use super::poly::DiophantinePolynomial;
use super::AqcError;
use crate::linalg::{hermitian_eigensystem, Complex, ComplexMatrix, Ket, HERMITIAN_TOL};

/// Largest `dt·‖H‖` `evolve` accepts.
pub const STABILITY_LIMIT: f64 = 0.5;
/// `dt·‖H‖` targeted when a step is chosen automatically.
pub const STEP_TARGET: f64 = 0.05;
/// Phase error over the whole run aimed for by [`AdiabaticProblem::default_step`].
pub const PHASE_TOLERANCE: f64 = 1e-8;
/// Dimension up to which the exact spectral norm is computed.
const EXACT_NORM_DIM: usize = 128;

/// `diag(D(n)²)` over the truncated occupation basis.
pub fn build_problem_hamiltonian(
    d: &DiophantinePolynomial,
    space: &TruncatedFockSpace,
) -> Result<ComplexMatrix, AqcError> {
    if d.num_vars() != space.num_modes {
        return Err(AqcError::Shape(format!(
            "polynomial has {} variables, space has {} modes",
            d.num_vars(),
            space.num_modes
        )));
    }
    let diag = space
        .tuples()
        .map(|t| d.energy(&t).map(|e| Complex::real(e as f64)))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ComplexMatrix::diagonal(&diag))
}

/// `I − |u⟩⟨u|` with `u` uniform, and its ground state `u`.
pub fn build_initial_hamiltonian(space: &TruncatedFockSpace) -> (ComplexMatrix, Ket) {
    let n = space.dimension();
    let u = Ket::uniform(n);
    let w = 1.0 / n as f64;
    let mut h = ComplexMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let delta = if i == j { 1.0 } else { 0.0 };
            h.set(i, j, Complex::real(delta - w));
        }
    }
    (h, u)
}

/// Upper bound on the spectral norm: exact for diagonal or small matrices,
/// Gershgorin otherwise.
pub fn spectral_norm_bound(h: &ComplexMatrix) -> Result<f64, AqcError> {
    if h.is_diagonal() {
        return Ok(h.diag().iter().map(|z| z.modulus()).fold(0.0, f64::max));
    }
    if h.rows() <= EXACT_NORM_DIM {
        let es = hermitian_eigensystem(h)?;
        return Ok(es.eigenvalues.iter().map(|l| l.abs()).fold(0.0, f64::max));
    }
    Ok((0..h.rows())
        .map(|i| (0..h.cols()).map(|j| h.get(i, j).modulus()).sum::<f64>())
        .fold(0.0, f64::max))
}

/// `H(s) = (1 − s)·H_I + s·H_P` integrated over `[0, T]`.
#[derive(Debug, Clone)]
pub struct AdiabaticProblem {
    pub space: TruncatedFockSpace,
    pub h_p: ComplexMatrix,
    pub h_i: ComplexMatrix,
    pub total_time: f64,
    pub dt: f64,
    /// Bound on `maxₛ ‖H(s)‖`, by convexity `max(‖H_I‖, ‖H_P‖)`.
    pub norm_bound: f64,
}

impl AdiabaticProblem {
    pub fn new(
        space: TruncatedFockSpace,
        h_p: ComplexMatrix,
        h_i: ComplexMatrix,
        total_time: f64,
        dt: f64,
    ) -> Result<Self, AqcError> {
        let n = space.dimension();
        for (name, h) in [("H_P", &h_p), ("H_I", &h_i)] {
            if h.shape() != (n, n) {
                return Err(AqcError::Shape(format!("{name} is {:?}, space has dimension {n}", h.shape())));
            }
            if !h.is_hermitian(HERMITIAN_TOL) {
                return Err(AqcError::Validation(format!("{name} is not Hermitian")));
            }
        }
        if !h_p.is_diagonal() || h_p.diag().iter().any(|z| z.re < 0.0 || z.im != 0.0) {
            return Err(AqcError::Validation("H_P must be diagonal with non-negative entries".into()));
        }
        if n <= EXACT_NORM_DIM && n > 1 {
            let ev = hermitian_eigensystem(&h_i)?.eigenvalues;
            if ev[1] - ev[0] < 1e-9 {
                return Err(AqcError::Validation("H_I has a degenerate ground state".into()));
            }
        }
        if !(total_time >= 0.0 && total_time.is_finite()) {
            return Err(AqcError::Domain(format!("total time must be non-negative, got {total_time}")));
        }
        if !(dt > 0.0 && dt.is_finite()) {
            return Err(AqcError::Domain(format!("dt must be positive, got {dt}")));
        }
        let norm_bound = spectral_norm_bound(&h_i)?.max(spectral_norm_bound(&h_p)?);
        Ok(AdiabaticProblem { space, h_p, h_i, total_time, dt, norm_bound })
    }

    /// Problem for `D` with the uniform-superposition initial Hamiltonian.
    pub fn for_polynomial(
        d: &DiophantinePolynomial,
        cutoff: u64,
        total_time: f64,
        dt: f64,
    ) -> Result<Self, AqcError> {
        let space = TruncatedFockSpace::new(d.num_vars(), cutoff)?;
        let h_p = build_problem_hamiltonian(d, &space)?;
        let (h_i, _) = build_initial_hamiltonian(&space);
        Self::new(space, h_p, h_i, total_time, dt)
    }

    pub fn initial_state(&self) -> Result<Ket, AqcError> {
        if self.h_i.rows() <= EXACT_NORM_DIM {
            return Ok(hermitian_eigensystem(&self.h_i)?.ground_state().clone());
        }
        Ok(Ket::uniform(self.space.dimension()))
    }

    pub fn interpolate(&self, s: f64) -> Result<ComplexMatrix, AqcError> {
        if !(0.0..=1.0).contains(&s) {
            return Err(AqcError::Domain(format!("s must lie in [0, 1], got {s}")));
        }
        if s == 0.0 {
            return Ok(self.h_i.clone());
        }
        if s == 1.0 {
            return Ok(self.h_p.clone());
        }
        Ok(self.h_i.scale_real(1.0 - s).add(&self.h_p.scale_real(s))?)
    }

    /// Step with `dt·‖H‖ ≤ STEP_TARGET`, shortened further so the RK4 phase
    /// error, about `T‖H‖·(dt‖H‖)⁴/120`, stays near [`PHASE_TOLERANCE`].
    pub fn default_step(&self) -> f64 {
        let norm = self.norm_bound;
        if norm == 0.0 {
            return self.total_time.max(1.0);
        }
        let z = (120.0 * PHASE_TOLERANCE / (self.total_time * norm).max(f64::MIN_POSITIVE)).powf(0.25);
        z.min(STEP_TARGET) / norm
    }

    /// Largest step keeping `dt·‖H‖` at or below [`STEP_TARGET`] that divides `dt`.
    pub fn stable_substep(&self, dt: f64) -> (f64, u64) {
        let k = (dt * self.norm_bound / STEP_TARGET).ceil().max(1.0);
        (dt / k, k as u64)
    }
}

pub fn interpolate_hamiltonian(p: &AdiabaticProblem, s: f64) -> Result<ComplexMatrix, AqcError> {
    p.interpolate(s)
}

#[derive(Debug, Clone, Serialize)]
pub struct Evolution {
    /// Final state, renormalized.
    pub state: Ket,
    /// `|‖ψ(T)‖ − 1|` before renormalization.
    pub norm_drift: f64,
    pub steps: u64,
    pub step: f64,
}

/// Dense or diagonal operator, applied without allocation.
enum Op {
    Diagonal(Vec<Complex>),
    Dense { n: usize, data: Vec<Complex> },
}

impl Op {
    fn new(h: &ComplexMatrix) -> Self {
        if h.is_diagonal() {
            Op::Diagonal(h.diag())
        } else {
            Op::Dense { n: h.rows(), data: h.as_slice().to_vec() }
        }
    }

    /// `out += k · (H ψ)`.
    fn apply_add(&self, k: f64, psi: &[Complex], out: &mut [Complex]) {
        if k == 0.0 {
            return;
        }
        match self {
            Op::Diagonal(d) => {
                for ((o, &h), &x) in out.iter_mut().zip(d).zip(psi) {
                    *o += h * x * k;
                }
            }
            Op::Dense { n, data } => {
                for (i, o) in out.iter_mut().enumerate() {
                    let row = &data[i * n..(i + 1) * n];
                    let mut acc = Complex::ZERO;
                    for (&h, &x) in row.iter().zip(psi) {
                        acc += h * x;
                    }
                    *o += acc * k;
                }
            }
        }
    }
}

/// `out = −i·H(s)·ψ`.
fn derivative(hi: &Op, hp: &Op, s: f64, psi: &[Complex], out: &mut [Complex]) {
    out.fill(Complex::ZERO);
    hi.apply_add(1.0 - s, psi, out);
    hp.apply_add(s, psi, out);
    for z in out.iter_mut() {
        *z = Complex::new(z.im, -z.re);
    }
}

/// Integrate `i·dψ/dt = H(t/T)·ψ` from 0 to `T` with classical RK4.
pub fn evolve(p: &AdiabaticProblem, psi0: &Ket) -> Result<Evolution, AqcError> {
    let n = p.space.dimension();
    if psi0.dim() != n {
        return Err(AqcError::Shape(format!("state has dimension {}, space has {n}", psi0.dim())));
    }
    if (psi0.norm() - 1.0).abs() > 1e-9 {
        return Err(AqcError::Domain(format!("initial state has norm {}", psi0.norm())));
    }
    if p.dt * p.norm_bound > STABILITY_LIMIT {
        let (suggest, _) = p.stable_substep(p.dt);
        return Err(AqcError::Stability { dt: p.dt, norm: p.norm_bound, suggested: suggest });
    }
    if p.total_time == 0.0 {
        return Ok(Evolution { state: psi0.clone(), norm_drift: 0.0, steps: 0, step: 0.0 });
    }
    let steps = (p.total_time / p.dt - 1e-9).ceil().max(1.0) as u64;
    let h = p.total_time / steps as f64;
    let (hi, hp) = (Op::new(&p.h_i), Op::new(&p.h_p));
    let mut psi = psi0.amplitudes().to_vec();
    let mut k = vec![vec![Complex::ZERO; n]; 4];
    let mut tmp = vec![Complex::ZERO; n];
    for step in 0..steps {
        let t = step as f64 * h;
        let s = |t: f64| (t / p.total_time).clamp(0.0, 1.0);
        derivative(&hi, &hp, s(t), &psi, &mut k[0]);
        for (stage, (frac, weight)) in [(0.5, 0.5), (0.5, 0.5), (1.0, 1.0)].into_iter().enumerate() {
            for ((o, &x), &d) in tmp.iter_mut().zip(&psi).zip(&k[stage]) {
                *o = x + d * (h * weight);
            }
            derivative(&hi, &hp, s(t + frac * h), &tmp, &mut k[stage + 1]);
        }
        for (j, x) in psi.iter_mut().enumerate() {
            *x += (k[0][j] + k[1][j] * 2.0 + k[2][j] * 2.0 + k[3][j]) * (h / 6.0);
        }
    }
    let out = Ket::new(psi);
    let norm = out.norm();
    Ok(Evolution { state: out.normalized()?, norm_drift: (norm - 1.0).abs(), steps, step: h })
}
