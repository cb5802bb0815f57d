//! Load a machine document, run it with a trace, and step it by hand.

use hyperlab::tm::{RunOptions, TuringMachine};

const SUCCESSOR: &str = include_str!("../fixtures/successor.json");

fn main() {
    let m = TuringMachine::from_json(SUCCESSOR).expect("fixture parses");
    let out = m.run_str("111", RunOptions::fuel(100).with_trace(true)).unwrap();
    for c in out.trace.as_deref().unwrap_or_default() {
        println!("{}", c.view(&m));
    }
    println!("{:?} after {} steps, tape {}", out.kind, out.config.steps, out.config.tape_string(&m, 0));

    let looper = TuringMachine::from_json(include_str!("../fixtures/self_loop.json")).unwrap();
    let out = looper.run_str("", RunOptions::fuel(1000)).unwrap();
    println!("self loop: {:?} after {} steps", out.kind, out.config.steps);
}
