//! Two-qubit states, the NOT⊗NOT gate and an eigendecomposition.

use hyperlab::linalg::{hermitian_eigensystem, ComplexMatrix, Ket};

fn main() {
    let not = ComplexMatrix::from_real(2, 2, &[0.0, 1.0, 1.0, 0.0]).unwrap();
    let nn = not.tensor(&not);
    println!("NOT ⊗ NOT:");
    for i in 0..4 {
        let row: Vec<String> = (0..4).map(|j| format!("{}", nn.get(i, j).re)).collect();
        println!("  [{}]", row.join(" "));
    }

    let zero = Ket::basis(2, 0);
    let one = Ket::basis(2, 1);
    let ket01 = zero.tensor(&one);
    println!("NOT⊗NOT |01⟩ = |10⟩: {}", nn.apply(&ket01).unwrap() == one.tensor(&zero));

    let s = std::f64::consts::FRAC_1_SQRT_2;
    let bell = Ket::from_real(&[s, 0.0, 0.0, s]);
    println!("Bell state probabilities: {:?}", bell.probabilities());

    let h = ComplexMatrix::from_real(2, 2, &[0.0, 3.0, 3.0, 0.0]).unwrap();
    let es = hermitian_eigensystem(&h).unwrap();
    println!("eigenvalues of [[0,3],[3,0]]: {:?} ({} sweeps)", es.eigenvalues, es.sweeps);
    println!("residual: {:.2e}", es.max_residual(&h));
}
