//! A machine that asks an oracle about the number of marks left of its head.

use hyperlab::tm::{attach_oracle, RunOptions, TuringMachine};

fn main() {
    let m = TuringMachine::from_json(include_str!("../fixtures/parity_oracle.json")).unwrap();
    let om = attach_oracle(m, |n| n % 2 == 0).unwrap();
    for input in ["", "1", "11", "1111111"] {
        let run = om.run_str(input, RunOptions::default()).unwrap();
        let tape = run.outcome.config.tape_string(om.machine(), 0);
        println!("{input:>8} → {tape:<9} queries {:?}", run.queries);
    }
}
