//! Cyclic Jacobi eigensolver for dense complex Hermitian matrices.
//!
//! Each rotation first removes the phase of the pivot `a_pq` with a diagonal
//! unitary, then applies the classical real symmetric 2×2 Jacobi rotation.
//! Sweeps stop once the off-diagonal Frobenius mass falls below
//! `OFF_DIAGONAL_TOL · max(1, ‖H‖_F)`.

use super::{Complex, ComplexMatrix, Ket, LinalgError};

/// Relative off-diagonal Frobenius mass at which sweeps stop.
pub const OFF_DIAGONAL_TOL: f64 = 1e-12;
/// Sweep cap.
pub const MAX_SWEEPS: usize = 100;
/// Entrywise tolerance for accepting an input as Hermitian.
pub const HERMITIAN_TOL: f64 = 1e-10;

/// Real spectrum in ascending order with matching orthonormal eigenvectors.
#[derive(Debug, Clone)]
pub struct EigenSystem {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: Vec<Ket>,
    pub sweeps: usize,
}

impl EigenSystem {
    pub fn ground_energy(&self) -> f64 {
        self.eigenvalues[0]
    }

    pub fn ground_state(&self) -> &Ket {
        &self.eigenvectors[0]
    }

    /// Largest `‖H·v − λ·v‖` over all pairs.
    pub fn max_residual(&self, h: &ComplexMatrix) -> f64 {
        self.eigenvalues
            .iter()
            .zip(&self.eigenvectors)
            .map(|(&lambda, v)| {
                let hv = h.apply(v).expect("eigenvector dimension matches operator");
                hv.amplitudes()
                    .iter()
                    .zip(v.amplitudes())
                    .map(|(&a, &b)| (a - b.scale(lambda)).norm_sqr())
                    .sum::<f64>()
                    .sqrt()
            })
            .fold(0.0, f64::max)
    }
}

fn off_diagonal_mass(a: &[Complex], n: usize) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[i * n + j].norm_sqr();
            }
        }
    }
    s.sqrt()
}

/// Full eigendecomposition of a Hermitian matrix.
pub fn hermitian_eigensystem(h: &ComplexMatrix) -> Result<EigenSystem, LinalgError> {
    let defect = h
        .hermitian_defect()
        .ok_or(LinalgError::Shape { op: "hermitian_eigensystem", left: h.shape(), right: h.shape() })?;
    if defect > HERMITIAN_TOL {
        return Err(LinalgError::NotHermitian { defect });
    }
    let n = h.rows();
    let mut a: Vec<Complex> = h.as_slice().to_vec();
    // symmetrize the input so rounding in the caller does not leak in
    for i in 0..n {
        a[i * n + i] = Complex::real(a[i * n + i].re);
        for j in (i + 1)..n {
            let avg = (a[i * n + j] + a[j * n + i].conj()).scale(0.5);
            a[i * n + j] = avg;
            a[j * n + i] = avg.conj();
        }
    }
    let mut v = ComplexMatrix::identity(n).into_data();

    let threshold = OFF_DIAGONAL_TOL * h.frobenius_norm().max(1.0);
    let mut sweeps = 0;
    let mut off = off_diagonal_mass(&a, n);
    while off > threshold {
        if sweeps == MAX_SWEEPS {
            return Err(LinalgError::NoConvergence { sweeps, off_diagonal: off });
        }
        sweeps += 1;
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut a, &mut v, n, p, q);
            }
        }
        off = off_diagonal_mass(&a, n);
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[i * n + i].re.total_cmp(&a[j * n + j].re));
    let eigenvalues = order.iter().map(|&i| a[i * n + i].re).collect();
    let eigenvectors = order
        .iter()
        .map(|&col| {
            let mut amps: Vec<Complex> = (0..n).map(|r| v[r * n + col]).collect();
            fix_phase(&mut amps);
            Ket::new(amps)
        })
        .collect();
    Ok(EigenSystem { eigenvalues, eigenvectors, sweeps })
}

/// Zero `a[p][q]` with `A ← U†AU`, accumulating `V ← VU`.
fn rotate(a: &mut [Complex], v: &mut [Complex], n: usize, p: usize, q: usize) {
    let apq = a[p * n + q];
    let b = apq.modulus();
    if b == 0.0 {
        return;
    }
    let phase = apq.scale(1.0 / b);
    let app = a[p * n + p].re;
    let aqq = a[q * n + q].re;
    let tau = (aqq - app) / (2.0 * b);
    let t = if tau == 0.0 { 1.0 } else { tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt()) };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;

    // U restricted to (p,q) = diag(1, conj(phase)) · [[c, s], [-s, c]]
    let upp = Complex::real(c);
    let upq = Complex::real(s);
    let uqp = phase.conj().scale(-s);
    let uqq = phase.conj().scale(c);

    for k in 0..n {
        let akp = a[k * n + p];
        let akq = a[k * n + q];
        a[k * n + p] = akp * upp + akq * uqp;
        a[k * n + q] = akp * upq + akq * uqq;
    }
    for k in 0..n {
        let apk = a[p * n + k];
        let aqk = a[q * n + k];
        a[p * n + k] = upp.conj() * apk + uqp.conj() * aqk;
        a[q * n + k] = upq.conj() * apk + uqq.conj() * aqk;
    }
    a[p * n + q] = Complex::ZERO;
    a[q * n + p] = Complex::ZERO;
    a[p * n + p] = Complex::real(a[p * n + p].re);
    a[q * n + q] = Complex::real(a[q * n + q].re);

    for k in 0..n {
        let vkp = v[k * n + p];
        let vkq = v[k * n + q];
        v[k * n + p] = vkp * upp + vkq * uqp;
        v[k * n + q] = vkp * upq + vkq * uqq;
    }
}

/// Rotate the global phase so the largest component is real and positive.
fn fix_phase(amps: &mut [Complex]) {
    let Some(pivot) = amps.iter().copied().max_by(|x, y| x.norm_sqr().total_cmp(&y.norm_sqr())) else {
        return;
    };
    let m = pivot.modulus();
    if m == 0.0 {
        return;
    }
    let rot = pivot.conj().scale(1.0 / m);
    for x in amps.iter_mut() {
        *x *= rot;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_by_two_swap_operator() {
        let h = ComplexMatrix::from_real(2, 2, &[0.0, 3.0, 3.0, 0.0]).unwrap();
        let es = hermitian_eigensystem(&h).unwrap();
        assert!((es.eigenvalues[0] + 3.0).abs() < 1e-12);
        assert!((es.eigenvalues[1] - 3.0).abs() < 1e-12);
        assert!(es.max_residual(&h) < 1e-12);
    }

    #[test]
    fn diagonal_input_is_sorted() {
        let h = ComplexMatrix::diagonal(&[4.0, 1.0, 0.0, 1.0, 4.0].map(Complex::real));
        let es = hermitian_eigensystem(&h).unwrap();
        assert_eq!(es.eigenvalues, vec![0.0, 1.0, 1.0, 4.0, 4.0]);
        assert_eq!(es.ground_state(), &Ket::basis(5, 2));
        assert_eq!(es.sweeps, 0);
    }

    #[test]
    fn complex_offdiagonal_pivot() {
        let c = Complex::new;
        let h = ComplexMatrix::from_rows(vec![
            vec![c(1.0, 0.0), c(2.0, 1.0), c(0.0, -1.0)],
            vec![c(2.0, -1.0), c(5.0, 0.0), c(1.0, 0.0)],
            vec![c(0.0, 1.0), c(1.0, 0.0), c(7.0, 0.0)],
        ])
        .unwrap();
        let es = hermitian_eigensystem(&h).unwrap();
        assert!(es.max_residual(&h) < 1e-10);
        let sum: f64 = es.eigenvalues.iter().sum();
        assert!((sum - 13.0).abs() < 1e-10);
        for i in 0..3 {
            for j in 0..3 {
                let ip = es.eigenvectors[i].inner(&es.eigenvectors[j]).unwrap();
                let want = if i == j { Complex::ONE } else { Complex::ZERO };
                assert!(ip.approx_eq(want, 1e-10));
            }
        }
    }

    #[test]
    fn rejects_non_hermitian() {
        let h = ComplexMatrix::from_real(2, 2, &[0.0, 1.0, 0.0, 0.0]).unwrap();
        assert!(matches!(hermitian_eigensystem(&h), Err(LinalgError::NotHermitian { .. })));
        assert!(matches!(
            hermitian_eigensystem(&ComplexMatrix::zeros(2, 3)),
            Err(LinalgError::Shape { .. })
        ));
    }

    #[test]
    fn empty_matrix_has_empty_spectrum() {
        let es = hermitian_eigensystem(&ComplexMatrix::empty()).unwrap();
        assert!(es.eigenvalues.is_empty());
    }
}
