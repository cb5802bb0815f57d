//! Expected and simulated times for the three wheel strategies.

use hyperlab::tae::{ashby_expected, ashby_simulate, Strategy, WheelExperiment};

fn main() {
    let strategies = [Strategy::AllAtOnce, Strategy::OneAtATime, Strategy::LockInParallel];
    for s in strategies {
        let big = ashby_expected(&WheelExperiment::new(1000, 0.5, s).unwrap());
        println!("N = 1000, case {}: log2 E[T] = {:.6}", s.case(), big.log2_seconds);
    }
    for s in strategies {
        let e = WheelExperiment::new(10, 0.5, s).unwrap();
        let x = ashby_expected(&e);
        let sim = ashby_simulate(&e, 100_000, 7).unwrap();
        println!(
            "N = 10, case {}: expected {:.4}, simulated {:.4} ± {:.4}",
            s.case(),
            x.seconds,
            sim.mean,
            sim.std_error
        );
    }
}
