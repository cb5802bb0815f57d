mod common;

use common::{eigen_oracle, random_hermitian};
use hyperlab::linalg::{hermitian_eigensystem, Complex, ComplexMatrix, Ket};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn arb_matrix(r: usize, c: usize) -> impl Strategy<Value = ComplexMatrix> {
    proptest::collection::vec((-3.0f64..3.0, -3.0f64..3.0), r * c).prop_map(move |v| {
        ComplexMatrix::from_data(r, c, v.into_iter().map(|(a, b)| Complex::new(a, b)).collect()).unwrap()
    })
}

fn arb_hermitian() -> impl Strategy<Value = ComplexMatrix> {
    (1usize..=6, any::<u64>()).prop_map(|(n, seed)| random_hermitian(&mut ChaCha8Rng::seed_from_u64(seed), n))
}

#[test]
fn oracle_on_known_spectra() {
    let h = ComplexMatrix::from_real(2, 2, &[0.0, 3.0, 3.0, 0.0]).unwrap();
    let ev = eigen_oracle(&h);
    assert!((ev[0] + 3.0).abs() < 1e-12 && (ev[1] - 3.0).abs() < 1e-12);
    let d = ComplexMatrix::diagonal(&[Complex::real(2.0), Complex::real(-1.0), Complex::real(2.0)]);
    let ev = eigen_oracle(&d);
    for (got, want) in ev.iter().zip([-1.0, 2.0, 2.0]) {
        assert!((got - want).abs() < 1e-12);
    }
}

#[test]
fn eigensolver_matches_oracle() {
    let mut r = ChaCha8Rng::seed_from_u64(5);
    for n in 1..=8 {
        let h = random_hermitian(&mut r, n);
        let es = hermitian_eigensystem(&h).unwrap();
        for (a, b) in es.eigenvalues.iter().zip(eigen_oracle(&h)) {
            assert!((a - b).abs() < 1e-8, "{a} vs {b}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn mixed_product(a in arb_matrix(2, 2), b in arb_matrix(2, 2), c in arb_matrix(2, 2), d in arb_matrix(2, 2)) {
        let lhs = a.tensor(&b).mul(&c.tensor(&d)).unwrap();
        let rhs = a.mul(&c).unwrap().tensor(&b.mul(&d).unwrap());
        prop_assert!(lhs.approx_eq(&rhs, 1e-9));
    }

    #[test]
    fn dagger_is_an_involution(a in arb_matrix(3, 2), b in arb_matrix(2, 4)) {
        prop_assert_eq!(a.dagger().dagger(), a.clone());
        let lhs = a.mul(&b).unwrap().dagger();
        let rhs = b.dagger().mul(&a.dagger()).unwrap();
        prop_assert!(lhs.approx_eq(&rhs, 1e-12));
    }

    #[test]
    fn direct_sum_trace(a in arb_matrix(3, 3), b in arb_matrix(2, 2)) {
        let t = a.direct_sum(&b).trace().unwrap();
        let want = a.trace().unwrap() + b.trace().unwrap();
        prop_assert!((t - want).modulus() < 1e-12);
    }

    #[test]
    fn eigensystem_invariants(h in arb_hermitian(), c in -10.0f64..10.0) {
        let es = hermitian_eigensystem(&h).unwrap();
        let n = h.rows();
        let scale = h.frobenius_norm().max(1.0);
        let sum: f64 = es.eigenvalues.iter().sum();
        prop_assert!((sum - h.trace().unwrap().re).abs() <= 1e-9 * scale);
        prop_assert!(es.max_residual(&h) <= 1e-9 * scale);
        for w in es.eigenvalues.windows(2) {
            prop_assert!(w[0] <= w[1]);
        }
        for i in 0..n {
            for j in 0..n {
                let ip = es.eigenvectors[i].inner(&es.eigenvectors[j]).unwrap();
                let want = if i == j { 1.0 } else { 0.0 };
                prop_assert!((ip - Complex::real(want)).modulus() < 1e-9);
            }
        }
        let shifted = h.add(&ComplexMatrix::identity(n).scale_real(c)).unwrap();
        let es2 = hermitian_eigensystem(&shifted).unwrap();
        for (a, b) in es.eigenvalues.iter().zip(&es2.eigenvalues) {
            prop_assert!((a + c - b).abs() <= 1e-9 * (scale + c.abs()));
        }
    }

    #[test]
    fn unitary_action_preserves_norm(theta in 0.0f64..6.3, amps in proptest::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 2)) {
        let (s, co) = theta.sin_cos();
        let u = ComplexMatrix::from_rows(vec![
            vec![Complex::real(co), Complex::new(0.0, -s)],
            vec![Complex::new(0.0, -s), Complex::real(co)],
        ]).unwrap();
        let psi = Ket::new(amps.into_iter().map(|(a, b)| Complex::new(a, b)).collect());
        prop_assume!(psi.norm() > 1e-3);
        let psi = psi.normalized().unwrap();
        prop_assert!((u.apply(&psi).unwrap().norm() - 1.0).abs() < 1e-12);
    }
}
