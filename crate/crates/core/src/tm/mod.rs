//! Deterministic Turing machines: single and multitape, fuel-bounded, with
//! oracle-query and coupled-input hooks.

mod coupled;
mod exec;
mod machine;
mod oracle;

pub use coupled::{CoupledSession, InputFeeder, SessionStatus};
pub use exec::{OutcomeKind, RunOptions, RunOutcome, DEFAULT_FUEL, DEFAULT_TRACE_CAP};
pub use machine::{
    ConfigView, MachineDoc, Move, OracleStates, OracleStatesDoc, StateId, StepError, SymbolId, SymbolTuple, Tape,
    TapeConfiguration, Transition, TransitionDoc, TuringMachine,
};
pub use oracle::{attach_oracle, OracleMachine, OracleRun};

use rand::Rng;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TmError {
    #[error("malformed machine document: {0}")]
    Document(String),
    #[error("invalid machine: {0}")]
    Validation(String),
    #[error("nondeterministic machine: two rules for ({state:?}, {read:?})")]
    Nondeterministic { state: String, read: String },
    #[error("machine declares no oracle query states")]
    NoQueryState,
    #[error("machine declares no read-request state")]
    NoReadState,
    #[error("session is closed")]
    SessionClosed,
}

/// A random single-tape machine over `symbols` symbols (symbol 0 is the
/// blank) with `states` working states plus one final state. Each
/// (state, symbol) pair gets a rule with probability `density`.
pub fn random_machine<R: Rng>(rng: &mut R, states: usize, symbols: usize, density: f64) -> TuringMachine {
    let state_names: Vec<String> = (0..states).map(|i| format!("q{i}")).chain(["halt".to_string()]).collect();
    let alphabet: Vec<String> = (0..symbols).map(|i| if i == 0 { "_".into() } else { i.to_string() }).collect();
    let moves = [Move::Left, Move::Stay, Move::Right];
    let mut transitions = Vec::new();
    for s in 0..states {
        for a in 0..symbols {
            if !rng.gen_bool(density) {
                continue;
            }
            transitions.push(TransitionDoc {
                from: state_names[s].clone(),
                read: SymbolTuple::One(alphabet[a].clone()),
                to: state_names[rng.gen_range(0..=states)].clone(),
                write: SymbolTuple::One(alphabet[rng.gen_range(0..symbols)].clone()),
                mv: moves[rng.gen_range(0..3)],
            });
        }
    }
    let doc = MachineDoc {
        blank: "_".into(),
        alphabet,
        initial: "q0".into(),
        finals: vec!["halt".into()],
        states: state_names,
        oracle_states: None,
        read_state: None,
        one_sided: false,
        transitions,
    };
    TuringMachine::from_doc(&doc).expect("generated machines are valid")
}

#[cfg(test)]
mod tests;
