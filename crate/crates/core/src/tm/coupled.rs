use std::sync::mpsc::{self, Receiver, Sender, TryRecvError};
use std::sync::Arc;

use serde::Serialize;

use super::exec::{drive, Control, OutcomeKind, Pause};
use super::machine::{SymbolId, TapeConfiguration, TuringMachine};
use super::TmError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SessionStatus {
    /// Not yet run, or fuel ran out mid-computation.
    Running,
    /// In the read state with an empty queue.
    Waiting,
    Halted,
    Stuck,
}

/// Sending half of a coupled machine's input stream. Clone it into another
/// thread to feed symbols while the session computes.
#[derive(Clone)]
pub struct InputFeeder {
    machine: Arc<TuringMachine>,
    tx: Sender<SymbolId>,
}

impl InputFeeder {
    pub fn feed(&self, symbol: &str) -> Result<(), TmError> {
        let id = self
            .machine
            .symbol_id(symbol)
            .ok_or_else(|| TmError::Validation(format!("symbol {symbol:?} not in alphabet")))?;
        self.tx.send(id).map_err(|_| TmError::SessionClosed)
    }
}

/// A running machine that accepts input after its computation has started.
///
/// Symbols queue first-in first-out. Each time control is in the machine's
/// read state, the oldest queued symbol is written under head 0 and the
/// ordinary transition for that symbol applies.
pub struct CoupledSession {
    machine: Arc<TuringMachine>,
    config: TapeConfiguration,
    rx: Option<Receiver<SymbolId>>,
    feeder: InputFeeder,
    status: SessionStatus,
}

impl CoupledSession {
    pub fn start(machine: TuringMachine, input: &[SymbolId]) -> Result<Self, TmError> {
        if machine.read_state().is_none() {
            return Err(TmError::NoReadState);
        }
        let machine = Arc::new(machine);
        let config = machine.initial_config(input);
        let (tx, rx) = mpsc::channel();
        let feeder = InputFeeder { machine: Arc::clone(&machine), tx };
        Ok(CoupledSession { machine, config, rx: Some(rx), feeder, status: SessionStatus::Running })
    }

    pub fn feeder(&self) -> InputFeeder {
        self.feeder.clone()
    }

    pub fn feed_input(&self, symbol: &str) -> Result<(), TmError> {
        if self.rx.is_none() {
            return Err(TmError::SessionClosed);
        }
        self.feeder.feed(symbol)
    }

    pub fn status(&self) -> SessionStatus {
        self.status
    }

    pub fn config(&self) -> &TapeConfiguration {
        &self.config
    }

    pub fn machine(&self) -> &TuringMachine {
        &self.machine
    }

    /// Compute for at most `fuel` transitions or until the machine halts,
    /// sticks, or blocks on an empty queue.
    pub fn run(&mut self, fuel: u64) -> SessionStatus {
        let Some(rx) = self.rx.as_ref() else {
            return self.status;
        };
        let read_state = self.machine.read_state().expect("checked at start");
        let blank = self.machine.blank();
        let mut disconnected = false;
        let pause = drive(&self.machine, &mut self.config, fuel, None, |_, c| {
            if c.state != read_state {
                return Control::Proceed;
            }
            match rx.try_recv() {
                Ok(sym) => {
                    c.tapes[0].write(c.heads[0], sym, blank);
                    Control::Proceed
                }
                Err(TryRecvError::Empty) => Control::Wait,
                Err(TryRecvError::Disconnected) => {
                    disconnected = true;
                    Control::Wait
                }
            }
        });
        debug_assert!(!disconnected, "session keeps its own sender alive");
        self.status = match pause {
            Pause::Waiting => SessionStatus::Waiting,
            Pause::Finished(OutcomeKind::OutOfFuel) => SessionStatus::Running,
            Pause::Finished(OutcomeKind::Halted) => SessionStatus::Halted,
            Pause::Finished(OutcomeKind::Stuck) => SessionStatus::Stuck,
        };
        if matches!(self.status, SessionStatus::Halted | SessionStatus::Stuck) {
            // closes the stream: later feeds fail with SessionClosed
            self.rx = None;
        }
        self.status
    }
}
