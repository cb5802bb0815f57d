#![allow(dead_code, clippy::needless_range_loop)]

use hyperlab::linalg::{Complex, ComplexMatrix};
use hyperlab::tm::{random_machine, TuringMachine};
use rand::Rng;

/// Number of eigenvalues of Hermitian `h` below `x`: sign changes in the
/// leading principal minors of `h − x·I`, through the ratios
/// `det(M_k)/det(M_{k−1})` produced by elimination.
pub fn count_below(h: &ComplexMatrix, x: f64) -> usize {
    let n = h.rows();
    let mut a: Vec<Vec<Complex>> =
        (0..n).map(|i| (0..n).map(|j| h.get(i, j) - if i == j { Complex::real(x) } else { Complex::ZERO }).collect()).collect();
    let scale = h.frobenius_norm().max(1.0);
    let mut negatives = 0;
    for k in 0..n {
        let mut pivot = a[k][k].re;
        if pivot.abs() < 1e-300 * scale {
            // x sits on an eigenvalue of a leading block; nudge it
            pivot = -1e-300 * scale;
        }
        if pivot < 0.0 {
            negatives += 1;
        }
        for i in k + 1..n {
            let f = a[i][k] * (1.0 / pivot);
            for j in k + 1..n {
                let akj = a[k][j];
                a[i][j] -= f * akj;
            }
        }
    }
    negatives
}

/// Eigenvalues by bisection on [`count_below`], ascending.
pub fn eigen_oracle(h: &ComplexMatrix) -> Vec<f64> {
    let n = h.rows();
    let radius = (0..n).map(|i| (0..n).map(|j| h.get(i, j).modulus()).sum::<f64>()).fold(0.0, f64::max) + 1.0;
    (0..n)
        .map(|k| {
            // least x with count_below(x) > k
            let (mut lo, mut hi) = (-radius, radius);
            for _ in 0..200 {
                let mid = 0.5 * (lo + hi);
                if mid <= lo || mid >= hi {
                    break;
                }
                if count_below(h, mid) > k {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            0.5 * (lo + hi)
        })
        .collect()
}

pub fn random_hermitian(rng: &mut impl Rng, n: usize) -> ComplexMatrix {
    let mut h = ComplexMatrix::zeros(n, n);
    for i in 0..n {
        h.set(i, i, Complex::real(rng.gen_range(-5.0..5.0)));
        for j in i + 1..n {
            let z = Complex::new(rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0));
            h.set(i, j, z);
            h.set(j, i, z.conj());
        }
    }
    h
}

pub fn fixture(name: &str) -> String {
    let path = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

pub fn fixture_path(name: &str) -> String {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name).display().to_string()
}

/// Twenty machines: the single-tape fixtures, hand-built ones and seeded
/// random machines, paired with an input.
pub fn machine_corpus() -> Vec<(String, TuringMachine, String)> {
    let mut out = Vec::new();
    for (name, input) in [("successor.json", "111"), ("self_loop.json", ""), ("successor.json", "")] {
        out.push((name.to_string(), TuringMachine::from_json(&fixture(name)).unwrap(), input.to_string()));
    }
    let mut r = hyperlab::rng::stream(20, 0);
    while out.len() < 20 {
        let i = out.len();
        let m = random_machine(&mut r, 2 + i % 4, 2 + i % 3, 0.85);
        out.push((format!("random-{i}"), m, "1".repeat(i % 5)));
    }
    out
}
