use serde::{Deserialize, Serialize};

use super::{Complex, ComplexMatrix, LinalgError};

/// Column state vector `|ψ⟩`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Ket(ComplexMatrix);

/// Row dual vector `⟨ψ|`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Bra(ComplexMatrix);

impl Ket {
    pub fn new(amplitudes: Vec<Complex>) -> Self {
        Ket(ComplexMatrix::column(amplitudes))
    }

    pub fn from_real(amplitudes: &[f64]) -> Self {
        Ket::new(amplitudes.iter().map(|&x| Complex::real(x)).collect())
    }

    /// Computational basis vector `|j⟩` in dimension `dim`.
    pub fn basis(dim: usize, j: usize) -> Self {
        let mut v = vec![Complex::ZERO; dim];
        v[j] = Complex::ONE;
        Ket::new(v)
    }

    /// Equal-weight superposition of all basis vectors.
    pub fn uniform(dim: usize) -> Self {
        let a = 1.0 / (dim as f64).sqrt();
        Ket::new(vec![Complex::real(a); dim])
    }

    pub fn from_matrix(m: ComplexMatrix) -> Result<Self, LinalgError> {
        if m.cols() != 1 {
            return Err(LinalgError::Shape { op: "ket", left: m.shape(), right: (m.rows(), 1) });
        }
        Ok(Ket(m))
    }

    pub fn dim(&self) -> usize {
        self.0.rows()
    }

    pub fn amplitudes(&self) -> &[Complex] {
        self.0.as_slice()
    }

    pub fn amplitude(&self, j: usize) -> Complex {
        self.0.as_slice()[j]
    }

    pub fn as_matrix(&self) -> &ComplexMatrix {
        &self.0
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.0
    }

    /// Conjugate transpose.
    pub fn bra(&self) -> Bra {
        Bra(self.0.dagger())
    }

    /// `⟨self|other⟩ = Σ conj(self_i)·other_i`.
    pub fn inner(&self, other: &Ket) -> Result<Complex, LinalgError> {
        if self.dim() != other.dim() {
            return Err(LinalgError::Shape { op: "inner", left: self.0.shape(), right: other.0.shape() });
        }
        Ok(self.amplitudes().iter().zip(other.amplitudes()).map(|(a, b)| a.conj() * *b).sum())
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes().iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn normalized(&self) -> Result<Ket, LinalgError> {
        let n = self.norm();
        if n == 0.0 {
            return Err(LinalgError::Domain("cannot normalize the zero vector".into()));
        }
        Ok(Ket(self.0.scale_real(1.0 / n)))
    }

    /// `|amplitude_j|²` for every basis index.
    pub fn probabilities(&self) -> Vec<f64> {
        self.amplitudes().iter().map(|c| c.norm_sqr()).collect()
    }

    pub fn tensor(&self, other: &Ket) -> Ket {
        Ket(self.0.tensor(&other.0))
    }

    /// `|⟨self|other⟩|²`.
    pub fn fidelity(&self, other: &Ket) -> Result<f64, LinalgError> {
        Ok(self.inner(other)?.norm_sqr())
    }
}

impl Bra {
    pub fn dim(&self) -> usize {
        self.0.cols()
    }

    pub fn entries(&self) -> &[Complex] {
        self.0.as_slice()
    }

    pub fn as_matrix(&self) -> &ComplexMatrix {
        &self.0
    }

    pub fn ket(&self) -> Ket {
        Ket(self.0.dagger())
    }

    /// Row-times-column product `⟨self|ψ⟩`.
    pub fn apply(&self, psi: &Ket) -> Result<Complex, LinalgError> {
        let m = self.0.mul(psi.as_matrix())?;
        Ok(m.get(0, 0))
    }
}

impl ComplexMatrix {
    /// Operator action `A|ψ⟩`.
    pub fn apply(&self, psi: &Ket) -> Result<Ket, LinalgError> {
        Ket::from_matrix(self.mul(psi.as_matrix())?)
    }

    /// Outer product `|a⟩⟨b|`.
    pub fn outer(a: &Ket, b: &Ket) -> ComplexMatrix {
        a.as_matrix().mul(b.bra().as_matrix()).expect("column times row always conforms")
    }
}
