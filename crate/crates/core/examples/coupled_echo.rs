//! A machine that blocks on external input fed from another thread.

use std::thread;

use hyperlab::tm::{CoupledSession, SessionStatus, TuringMachine};

fn main() {
    let m = TuringMachine::from_json(include_str!("../fixtures/echo.json")).unwrap();
    let mut session = CoupledSession::start(m, &[]).unwrap();
    let feeder = session.feeder();
    let producer = thread::spawn(move || {
        for sym in ["a", "b", "c", "a", "#"] {
            feeder.feed(sym).unwrap();
        }
    });
    producer.join().unwrap();
    loop {
        match session.run(1000) {
            SessionStatus::Running => continue,
            status => {
                println!("{status:?} after {} steps", session.config().steps);
                break;
            }
        }
    }
    println!("tape: {}", session.config().tape_string(session.machine(), 0));
}
