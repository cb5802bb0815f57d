use serde::Serialize;

use super::machine::{StepError, SymbolId, TapeConfiguration, TuringMachine};
use super::TmError;

pub const DEFAULT_FUEL: u64 = 1_000_000;
pub const DEFAULT_TRACE_CAP: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum OutcomeKind {
    Halted,
    OutOfFuel,
    Stuck,
}

#[derive(Debug, Clone)]
pub struct RunOutcome {
    pub kind: OutcomeKind,
    pub config: TapeConfiguration,
    /// Configurations visited, starting with the initial one, capped.
    pub trace: Option<Vec<TapeConfiguration>>,
}

impl RunOutcome {
    pub fn halted(&self) -> bool {
        self.kind == OutcomeKind::Halted
    }
}

#[derive(Debug, Clone, Copy)]
pub struct RunOptions {
    pub fuel: u64,
    pub trace: bool,
    pub trace_cap: usize,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions { fuel: DEFAULT_FUEL, trace: false, trace_cap: DEFAULT_TRACE_CAP }
    }
}

impl RunOptions {
    pub fn fuel(fuel: u64) -> Self {
        RunOptions { fuel, ..Self::default() }
    }

    pub fn with_trace(mut self, on: bool) -> Self {
        self.trace = on;
        self
    }
}

/// What a control hook decided before the next transition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Control {
    /// Apply the transition normally.
    Proceed,
    /// The hook changed the configuration without a step; re-examine it.
    Resolved,
    /// Suspend until external input arrives.
    Wait,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Pause {
    Finished(OutcomeKind),
    Waiting,
}

/// Drive `c` for at most `fuel` transitions, consulting `hook` before each.
pub(crate) fn drive(
    m: &TuringMachine,
    c: &mut TapeConfiguration,
    fuel: u64,
    mut trace: Option<(&mut Vec<TapeConfiguration>, usize)>,
    mut hook: impl FnMut(&TuringMachine, &mut TapeConfiguration) -> Control,
) -> Pause {
    let mut used = 0u64;
    loop {
        if m.is_final(c.state) {
            return Pause::Finished(OutcomeKind::Halted);
        }
        match hook(m, c) {
            Control::Wait => return Pause::Waiting,
            Control::Resolved => continue,
            Control::Proceed => {}
        }
        if used == fuel {
            // a configuration with no applicable rule is stuck regardless of fuel
            return Pause::Finished(match m.check_step(c) {
                Err(StepError::Stuck | StepError::LeftEdge) => OutcomeKind::Stuck,
                _ => OutcomeKind::OutOfFuel,
            });
        }
        match m.step_in_place(c) {
            Ok(()) => {
                used += 1;
                if let Some((t, cap)) = trace.as_mut() {
                    if t.len() < *cap {
                        t.push(c.clone());
                    }
                }
            }
            Err(StepError::Stuck | StepError::LeftEdge) => return Pause::Finished(OutcomeKind::Stuck),
            Err(StepError::AlreadyHalted) => unreachable!("final states are checked before stepping"),
        }
    }
}

impl TuringMachine {
    /// Run from the standard initial configuration on `input`.
    pub fn run(&self, input: &[SymbolId], opts: RunOptions) -> Result<RunOutcome, TmError> {
        if let Some(&bad) = input.iter().find(|&&s| s >= self.alphabet().len()) {
            return Err(TmError::Validation(format!("input symbol id {bad} outside alphabet")));
        }
        Ok(self.run_from(self.initial_config(input), opts, |_, _| Control::Proceed))
    }

    pub fn run_str(&self, input: &str, opts: RunOptions) -> Result<RunOutcome, TmError> {
        let syms = self.parse_input(input)?;
        self.run(&syms, opts)
    }

    pub(crate) fn run_from(
        &self,
        mut config: TapeConfiguration,
        opts: RunOptions,
        hook: impl FnMut(&TuringMachine, &mut TapeConfiguration) -> Control,
    ) -> RunOutcome {
        let mut trace = opts.trace.then(|| {
            let mut v = Vec::new();
            if opts.trace_cap > 0 {
                v.push(config.clone());
            }
            v
        });
        let pause = drive(self, &mut config, opts.fuel, trace.as_mut().map(|t| (t, opts.trace_cap)), hook);
        let kind = match pause {
            Pause::Finished(k) => k,
            Pause::Waiting => unreachable!("plain runs never wait"),
        };
        RunOutcome { kind, config, trace }
    }
}
