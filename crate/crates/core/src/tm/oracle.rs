use std::cell::Cell;

use super::exec::{Control, RunOptions, RunOutcome};
use super::machine::{OracleStates, SymbolId, TuringMachine};
use super::TmError;

/// A machine wired to an opaque total predicate over the naturals.
///
/// When control enters the ask state, the number of non-blank cells left of
/// the head on tape 0 is the query. The answer moves control to the yes or
/// no state without spending fuel. The predicate is never inspected.
pub struct OracleMachine<F> {
    machine: TuringMachine,
    states: OracleStates,
    oracle: F,
}

#[derive(Debug, Clone)]
pub struct OracleRun {
    pub outcome: RunOutcome,
    /// Queries in the order they were asked.
    pub queries: Vec<u64>,
}

impl OracleRun {
    pub fn consultations(&self) -> usize {
        self.queries.len()
    }
}

pub fn attach_oracle<F>(machine: TuringMachine, oracle: F) -> Result<OracleMachine<F>, TmError>
where
    F: Fn(u64) -> bool,
{
    let states = machine.oracle_states().ok_or(TmError::NoQueryState)?;
    Ok(OracleMachine { machine, states, oracle })
}

impl<F: Fn(u64) -> bool> OracleMachine<F> {
    pub fn machine(&self) -> &TuringMachine {
        &self.machine
    }

    pub fn run(&self, input: &[SymbolId], opts: RunOptions) -> OracleRun {
        let queries = Cell::new(Vec::new());
        let st = self.states;
        let outcome = self.machine.run_from(self.machine.initial_config(input), opts, |_, c| {
            if c.state != st.ask {
                return Control::Proceed;
            }
            let n = c.tapes[0].marks_left_of(c.heads[0]) as u64;
            let mut q = queries.take();
            q.push(n);
            queries.set(q);
            c.state = if (self.oracle)(n) { st.yes } else { st.no };
            Control::Resolved
        });
        OracleRun { outcome, queries: queries.into_inner() }
    }

    pub fn run_str(&self, input: &str, opts: RunOptions) -> Result<OracleRun, TmError> {
        let syms = self.machine.parse_input(input)?;
        Ok(self.run(&syms, opts))
    }
}
