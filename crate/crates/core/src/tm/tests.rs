use std::thread;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::*;

const SUCCESSOR: &str = include_str!("../../fixtures/successor.json");
const SELF_LOOP: &str = include_str!("../../fixtures/self_loop.json");
const PARITY: &str = include_str!("../../fixtures/parity_oracle.json");
const ECHO: &str = include_str!("../../fixtures/echo.json");

fn successor() -> TuringMachine {
    TuringMachine::from_json(SUCCESSOR).unwrap()
}

fn doc(json: &str) -> MachineDoc {
    serde_json::from_str(json).unwrap()
}

#[test]
fn successor_loads_and_appends_a_mark() {
    let m = successor();
    assert_eq!(m.num_states(), 2);
    let out = m.run_str("111", RunOptions::fuel(100)).unwrap();
    assert_eq!(out.kind, OutcomeKind::Halted);
    assert_eq!(out.config.tape_string(&m, 0), "1111");
    assert_eq!(out.config.steps, 4);
}

#[test]
fn duplicate_rule_is_nondeterministic() {
    let mut d = doc(SUCCESSOR);
    let mut extra = d.transitions[0].clone();
    extra.write = SymbolTuple::One("_".into());
    d.transitions.push(extra);
    assert!(matches!(TuringMachine::from_doc(&d), Err(TmError::Nondeterministic { .. })));
}

#[test]
fn dangling_state_reference() {
    let mut d = doc(SUCCESSOR);
    d.transitions[0].to = "nowhere".into();
    assert!(matches!(TuringMachine::from_doc(&d), Err(TmError::Validation(_))));
    let mut d = doc(SUCCESSOR);
    d.transitions[0].write = SymbolTuple::One("7".into());
    assert!(matches!(TuringMachine::from_doc(&d), Err(TmError::Validation(_))));
    let mut d = doc(SUCCESSOR);
    d.finals = vec!["ghost".into()];
    assert!(TuringMachine::from_doc(&d).is_err());
}

#[test]
fn malformed_json_is_a_document_error() {
    assert!(matches!(TuringMachine::from_json("{\"blank\": 3}"), Err(TmError::Document(_))));
}

#[test]
fn skip_right_rule_moves_head_only() {
    let m = successor();
    let c0 = m.initial_config(&m.parse_input("1").unwrap());
    let c1 = m.step(&c0).unwrap();
    assert_eq!(c1.heads, vec![1]);
    assert_eq!(c1.tapes, c0.tapes);
    assert_eq!(c1.steps, 1);
    assert_eq!(c1.state, c0.state);
}

#[test]
fn stay_move_keeps_head() {
    let m = successor();
    let c0 = m.initial_config(&[]);
    let c1 = m.step(&c0).unwrap();
    assert_eq!(c1.heads, vec![0]);
    assert!(m.is_final(c1.state));
    assert_eq!(m.step(&c1), Err(StepError::AlreadyHalted));
}

#[test]
fn missing_rule_is_stuck() {
    let m = TuringMachine::from_json(SELF_LOOP).unwrap();
    let c0 = m.initial_config(&m.parse_input("1").unwrap());
    assert_eq!(m.step(&c0), Err(StepError::Stuck));
    let out = m.run_str("1", RunOptions::fuel(10)).unwrap();
    assert_eq!(out.kind, OutcomeKind::Stuck);
    assert_eq!(out.config.steps, 0);
}

#[test]
fn self_loop_runs_out_of_fuel() {
    let m = TuringMachine::from_json(SELF_LOOP).unwrap();
    let out = m.run(&[], RunOptions::fuel(50)).unwrap();
    assert_eq!(out.kind, OutcomeKind::OutOfFuel);
    assert_eq!(out.config.steps, 50);
}

#[test]
fn immediate_halt_takes_zero_steps() {
    let mut d = doc(SUCCESSOR);
    d.initial = "halt".into();
    let m = TuringMachine::from_doc(&d).unwrap();
    let out = m.run(&[], RunOptions::fuel(5)).unwrap();
    assert_eq!(out.kind, OutcomeKind::Halted);
    assert_eq!(out.config.steps, 0);
}

#[test]
fn input_outside_alphabet_is_rejected() {
    assert!(successor().run_str("12", RunOptions::default()).is_err());
}

const COPY2: &str = r#"{
  "blank": "_", "alphabet": ["_", "1"], "states": ["c", "halt"],
  "initial": "c", "finals": ["halt"],
  "transitions": [
    {"from": "c", "read": ["1", "_"], "to": "c", "write": ["1", "1"], "move": "r"},
    {"from": "c", "read": ["_", "_"], "to": "halt", "write": ["_", "_"], "move": "n"}
  ]
}"#;

#[test]
fn multitape_reads_and_writes_symbol_tuples() {
    let m = TuringMachine::from_json(COPY2).unwrap();
    assert_eq!(m.num_tapes(), 2);
    let c0 = m.initial_config(&m.parse_input("11").unwrap());
    let c1 = m.step(&c0).unwrap();
    assert_eq!(c1.tape_string(&m, 1), "1");
    // one shared move: heads advance together
    assert_eq!(c1.heads, vec![1, 1]);
    let out = m.run_str("111", RunOptions::fuel(100).with_trace(true)).unwrap();
    assert!(out.halted());
    assert_eq!(out.config.tape_string(&m, 1), "111");
    for c in out.trace.unwrap() {
        assert_eq!(c.heads[0], c.heads[1]);
    }
}

#[test]
fn multitape_arity_mismatch() {
    let bad = COPY2.replace(r#""read": ["_", "_"]"#, r#""read": "_""#);
    assert!(matches!(TuringMachine::from_json(&bad), Err(TmError::Validation(_))));
}

#[test]
fn one_sided_tape_rejects_negative_head() {
    let json = r#"{"blank":"_","alphabet":["_"],"states":["s","h"],"initial":"s","finals":["h"],
        "one_sided": true,
        "transitions":[{"from":"s","read":"_","to":"s","write":"_","move":"l"}]}"#;
    let m = TuringMachine::from_json(json).unwrap();
    assert_eq!(m.step(&m.initial_config(&[])), Err(StepError::LeftEdge));
    assert_eq!(m.run(&[], RunOptions::fuel(3)).unwrap().kind, OutcomeKind::Stuck);
}

#[test]
fn trace_is_capped() {
    let m = TuringMachine::from_json(SELF_LOOP).unwrap();
    let opts = RunOptions { fuel: 100, trace: true, trace_cap: 7 };
    let out = m.run(&[], opts).unwrap();
    assert_eq!(out.trace.unwrap().len(), 7);
}

#[test]
fn parity_oracle_answers_yes_on_even() {
    let m = TuringMachine::from_json(PARITY).unwrap();
    let om = attach_oracle(m, |n| n % 2 == 0).unwrap();
    let run = om.run_str("11", RunOptions::fuel(100).with_trace(true)).unwrap();
    assert!(run.outcome.halted());
    assert_eq!(run.queries, vec![2]);
    assert_eq!(run.outcome.config.tape_string(om.machine(), 0), "11Y");
    let run = om.run_str("111", RunOptions::fuel(100)).unwrap();
    assert_eq!(run.outcome.config.tape_string(om.machine(), 0), "111N");
}

#[test]
fn oracle_query_spends_no_fuel() {
    let m = TuringMachine::from_json(PARITY).unwrap();
    let om = attach_oracle(m, |_| true).unwrap();
    // scan 2 marks + blank -> ask (3 steps), yes -> done (1 step)
    let run = om.run_str("11", RunOptions::fuel(4)).unwrap();
    assert!(run.outcome.halted());
    assert_eq!(run.outcome.config.steps, 4);
}

#[test]
fn oracle_needs_query_states() {
    assert!(matches!(attach_oracle(successor(), |_| true), Err(TmError::NoQueryState)));
}

#[test]
fn consultations_match_entries_into_ask() {
    // loops: scan marks, ask, on "no" erase one mark and go back to ask
    let json = r#"{"blank":"_","alphabet":["_","1"],"states":["scan","ask","yes","no","back","done"],
      "initial":"scan","finals":["done"],
      "oracle_states":{"ask":"ask","yes":"yes","no":"no"},
      "transitions":[
        {"from":"scan","read":"1","to":"scan","write":"1","move":"r"},
        {"from":"scan","read":"_","to":"ask","write":"_","move":"n"},
        {"from":"no","read":"_","to":"back","write":"_","move":"l"},
        {"from":"back","read":"1","to":"ask","write":"_","move":"n"},
        {"from":"yes","read":"_","to":"done","write":"_","move":"n"},
        {"from":"yes","read":"1","to":"done","write":"1","move":"n"}
      ]}"#;
    let om = attach_oracle(TuringMachine::from_json(json).unwrap(), |n| n % 3 == 0).unwrap();
    let run = om.run_str("11111", RunOptions::fuel(1000).with_trace(true)).unwrap();
    assert!(run.outcome.halted());
    let ask = om.machine().state_id("ask").unwrap();
    let entries = run.outcome.trace.as_ref().unwrap().iter().filter(|c| c.state == ask).count();
    assert_eq!(run.consultations(), entries);
    assert_eq!(run.queries, vec![5, 4, 3]);
}

#[test]
fn echo_session_emits_in_order() {
    let m = TuringMachine::from_json(ECHO).unwrap();
    let mut s = CoupledSession::start(m, &[]).unwrap();
    for sym in ["a", "b", "c"] {
        s.feed_input(sym).unwrap();
    }
    assert_eq!(s.run(100), SessionStatus::Waiting);
    assert_eq!(s.config().tape_string(s.machine(), 0), "abc");
    assert_eq!(s.config().steps, 3);
    s.feed_input("#").unwrap();
    assert_eq!(s.run(100), SessionStatus::Halted);
    assert_eq!(s.feed_input("a"), Err(TmError::SessionClosed));
}

#[test]
fn empty_queue_blocks_without_stepping() {
    let m = TuringMachine::from_json(ECHO).unwrap();
    let mut s = CoupledSession::start(m, &[]).unwrap();
    assert_eq!(s.run(100), SessionStatus::Waiting);
    assert_eq!(s.config().steps, 0);
}

#[test]
fn feeding_unknown_symbol_fails() {
    let m = TuringMachine::from_json(ECHO).unwrap();
    let s = CoupledSession::start(m, &[]).unwrap();
    assert!(matches!(s.feed_input("z"), Err(TmError::Validation(_))));
}

#[test]
fn feeder_on_another_thread_keeps_fifo_order() {
    let m = TuringMachine::from_json(ECHO).unwrap();
    let mut s = CoupledSession::start(m, &[]).unwrap();
    let feeder = s.feeder();
    let word = "abcabcbbac";
    let handle = thread::spawn(move || {
        for ch in word.chars() {
            feeder.feed(&ch.to_string()).unwrap();
        }
        feeder.feed("#").unwrap();
        feeder
    });
    let feeder = handle.join().unwrap();
    while s.run(1000) != SessionStatus::Halted {}
    assert_eq!(s.config().tape_string(s.machine(), 0), word);
    assert_eq!(feeder.feed("a"), Err(TmError::SessionClosed));
}

#[test]
fn coupled_needs_read_state() {
    assert!(matches!(CoupledSession::start(successor(), &[]), Err(TmError::NoReadState)));
}

proptest! {
    #[test]
    fn fuel_monotonicity(seed in any::<u64>(), states in 1usize..5, symbols in 2usize..4, extra in 0u64..50) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_machine(&mut rng, states, symbols, 0.9);
        let first = m.run(&[], RunOptions::fuel(200)).unwrap();
        if first.kind != OutcomeKind::OutOfFuel {
            let j = first.config.steps;
            for fuel in [j, j + extra, 200 + extra] {
                let again = m.run(&[], RunOptions::fuel(fuel)).unwrap();
                prop_assert_eq!(again.kind, first.kind);
                prop_assert_eq!(&again.config, &first.config);
            }
        }
    }

    #[test]
    fn step_is_a_function_and_tapes_stay_sparse(seed in any::<u64>(), input in proptest::collection::vec(0usize..3, 0..6)) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_machine(&mut rng, 3, 3, 0.9);
        let mut c = m.initial_config(&input);
        for _ in 0..60 {
            let a = m.step(&c);
            let b = m.step(&c);
            prop_assert_eq!(&a, &b);
            let Ok(next) = a else { break };
            prop_assert_eq!(next.steps, c.steps + 1);
            prop_assert!(next.tapes[0].non_blank() <= c.tapes[0].non_blank() + 1);
            c = next;
        }
    }
}
