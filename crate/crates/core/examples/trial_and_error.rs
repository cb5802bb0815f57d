//! Limit predicates read off a finite horizon, and the Goldbach stream.

use hyperlab::tae::{goldbach_stream, LimitPredicate};
use hyperlab::tm::{RunOptions, TuringMachine};

fn main() {
    // "machine m halts on 111", as the limit of "halts within y steps"
    let machines = [
        TuringMachine::from_json(include_str!("../fixtures/successor.json")).unwrap(),
        TuringMachine::from_json(include_str!("../fixtures/self_loop.json")).unwrap(),
    ];
    let halts = LimitPredicate::total(1, move |x, y| {
        machines[x[0] as usize].run_str("111", RunOptions::fuel(y)).unwrap().halted()
    });
    for m in 0..2 {
        let e = halts.evaluate(&[m], 50).unwrap();
        println!(
            "machine {m}: verdict {} after {} mind change(s), stable since y = {}",
            e.verdict, e.mind_changes, e.stable_since
        );
    }

    let flip = LimitPredicate::total(0, |_, y| y % 2 == 1);
    let e = flip.evaluate(&[], 7).unwrap();
    println!("alternating kernel: {} mind changes, changed at horizon: {}", e.mind_changes, e.changed_at_horizon);

    for horizon in [4, 100, 10_000] {
        let g = goldbach_stream(horizon).unwrap();
        println!(
            "Goldbach to {horizon}: verdict {:?}, {} mind changes",
            g.stream.final_verdict(),
            g.stream.mind_changes()
        );
    }
}
