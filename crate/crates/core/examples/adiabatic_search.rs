//! Adiabatic search for natural roots of x − 2, 2x − 1 and x + y − 3.

use hyperlab::aqc::{decide, exact_ground_oracle, DecideParams, DiophantinePolynomial};

fn main() {
    let cases = [
        (include_str!("../fixtures/x_minus_2.json"), 4),
        (include_str!("../fixtures/two_x_minus_1.json"), 8),
        (include_str!("../fixtures/x_plus_y_minus_3.json"), 4),
    ];
    for (src, cutoff) in cases {
        let d = DiophantinePolynomial::from_json(src).unwrap();
        let oracle = exact_ground_oracle(&d, cutoff).unwrap();
        let params = DecideParams { cutoff, total_time: 50.0, dt: 0.01, shots: 1000, seed: 1 };
        let r = decide(&d, params).unwrap();
        println!("{d} = 0, cutoff {cutoff}");
        println!("  exact: E_g = {}, minimizers {:?}", oracle.energy, oracle.witnesses);
        println!(
            "  adiabatic: {:?} {:?}, ground overlap {:.4}, drift {:.1e}",
            r.verdict, r.witness, r.ground_overlap, r.norm_drift
        );
    }
}
