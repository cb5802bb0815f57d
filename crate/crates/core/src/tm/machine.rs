use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use super::TmError;

pub type StateId = usize;
pub type SymbolId = usize;

/// Head movement of a quintuple: left, no movement, right.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Move {
    #[serde(rename = "l")]
    Left,
    #[serde(rename = "n")]
    Stay,
    #[serde(rename = "r")]
    Right,
}

impl Move {
    pub fn offset(self) -> i64 {
        match self {
            Move::Left => -1,
            Move::Stay => 0,
            Move::Right => 1,
        }
    }
}

/// A symbol slot in the document: one symbol for single-tape machines,
/// a list (one per tape) for multitape ones.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SymbolTuple {
    One(String),
    Many(Vec<String>),
}

impl SymbolTuple {
    fn as_vec(&self) -> Vec<&str> {
        match self {
            SymbolTuple::One(s) => vec![s.as_str()],
            SymbolTuple::Many(v) => v.iter().map(String::as_str).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransitionDoc {
    pub from: String,
    pub read: SymbolTuple,
    pub to: String,
    pub write: SymbolTuple,
    #[serde(rename = "move")]
    pub mv: Move,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleStatesDoc {
    pub ask: String,
    pub yes: String,
    pub no: String,
}

/// JSON machine document.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MachineDoc {
    pub blank: String,
    pub alphabet: Vec<String>,
    pub states: Vec<String>,
    pub initial: String,
    pub finals: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle_states: Option<OracleStatesDoc>,
    /// State in which the machine pulls the next symbol of a coupled input stream.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub read_state: Option<String>,
    /// Reject head positions left of the origin.
    #[serde(default)]
    pub one_sided: bool,
    pub transitions: Vec<TransitionDoc>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleStates {
    pub ask: StateId,
    pub yes: StateId,
    pub no: StateId,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transition {
    pub to: StateId,
    pub write: Vec<SymbolId>,
    pub mv: Move,
}

/// A validated, immutable deterministic machine `⟨S, s0, F, A, δ⟩`.
#[derive(Debug, Clone)]
pub struct TuringMachine {
    states: Vec<String>,
    alphabet: Vec<String>,
    blank: SymbolId,
    initial: StateId,
    finals: Vec<bool>,
    tapes: usize,
    delta: HashMap<u64, Transition>,
    oracle: Option<OracleStates>,
    read_state: Option<StateId>,
    one_sided: bool,
}

fn index_of(names: &[String], name: &str) -> Option<usize> {
    names.iter().position(|n| n == name)
}

impl TuringMachine {
    pub fn from_json(text: &str) -> Result<Self, TmError> {
        let doc: MachineDoc = serde_json::from_str(text).map_err(|e| TmError::Document(e.to_string()))?;
        Self::from_doc(&doc)
    }

    pub fn from_doc(doc: &MachineDoc) -> Result<Self, TmError> {
        let states = doc.states.clone();
        let alphabet = doc.alphabet.clone();
        if states.is_empty() {
            return Err(TmError::Validation("machine declares no states".into()));
        }
        for (kind, names) in [("state", &states), ("symbol", &alphabet)] {
            let mut seen = std::collections::HashSet::new();
            for n in names.iter() {
                if !seen.insert(n) {
                    return Err(TmError::Validation(format!("{kind} {n:?} declared twice")));
                }
            }
        }
        let state = |name: &str| {
            index_of(&states, name).ok_or_else(|| TmError::Validation(format!("unknown state {name:?}")))
        };
        let symbol = |name: &str| {
            index_of(&alphabet, name).ok_or_else(|| TmError::Validation(format!("unknown symbol {name:?}")))
        };
        let blank = symbol(&doc.blank)?;
        let initial = state(&doc.initial)?;
        let mut finals = vec![false; states.len()];
        for f in &doc.finals {
            finals[state(f)?] = true;
        }
        let oracle = match &doc.oracle_states {
            Some(o) => {
                let os = OracleStates { ask: state(&o.ask)?, yes: state(&o.yes)?, no: state(&o.no)? };
                if os.ask == os.yes || os.ask == os.no {
                    return Err(TmError::Validation("oracle ask state must differ from yes/no".into()));
                }
                Some(os)
            }
            None => None,
        };
        let read_state = doc.read_state.as_deref().map(state).transpose()?;

        let tapes = doc.transitions.first().map_or(1, |t| t.read.as_vec().len());
        if tapes == 0 {
            return Err(TmError::Validation("transitions must read at least one symbol".into()));
        }
        let a = alphabet.len() as u64;
        let states_n = states.len() as u64;
        if a.checked_pow(tapes as u32).and_then(|k| k.checked_mul(states_n)).is_none() {
            return Err(TmError::Validation("alphabet^tapes too large to index".into()));
        }

        let mut m = TuringMachine {
            states: states.clone(),
            alphabet: alphabet.clone(),
            blank,
            initial,
            finals,
            tapes,
            delta: HashMap::new(),
            oracle,
            read_state,
            one_sided: doc.one_sided,
        };
        for t in &doc.transitions {
            let from = state(&t.from)?;
            let to = state(&t.to)?;
            let read = t.read.as_vec().into_iter().map(symbol).collect::<Result<Vec<_>, _>>()?;
            let write = t.write.as_vec().into_iter().map(symbol).collect::<Result<Vec<_>, _>>()?;
            if read.len() != tapes || write.len() != tapes {
                return Err(TmError::Validation(format!(
                    "transition from {:?} has arity {}/{}, machine has {} tape(s)",
                    t.from,
                    read.len(),
                    write.len(),
                    tapes
                )));
            }
            let key = m.key(from, &read);
            if m.delta.insert(key, Transition { to, write, mv: t.mv }).is_some() {
                return Err(TmError::Nondeterministic { state: t.from.clone(), read: t.read.as_vec().join(",") });
            }
        }
        Ok(m)
    }

    fn key(&self, state: StateId, read: &[SymbolId]) -> u64 {
        let a = self.alphabet.len() as u64;
        read.iter().rev().fold(state as u64, |acc, &s| acc * a + s as u64)
    }

    pub fn transition(&self, state: StateId, read: &[SymbolId]) -> Option<&Transition> {
        self.delta.get(&self.key(state, read))
    }

    pub fn num_tapes(&self) -> usize {
        self.tapes
    }

    pub fn num_states(&self) -> usize {
        self.states.len()
    }

    pub fn num_transitions(&self) -> usize {
        self.delta.len()
    }

    pub fn initial(&self) -> StateId {
        self.initial
    }

    pub fn blank(&self) -> SymbolId {
        self.blank
    }

    pub fn is_final(&self, s: StateId) -> bool {
        self.finals[s]
    }

    pub fn oracle_states(&self) -> Option<OracleStates> {
        self.oracle
    }

    pub fn read_state(&self) -> Option<StateId> {
        self.read_state
    }

    pub fn one_sided(&self) -> bool {
        self.one_sided
    }

    pub fn state_name(&self, s: StateId) -> &str {
        &self.states[s]
    }

    pub fn state_id(&self, name: &str) -> Option<StateId> {
        index_of(&self.states, name)
    }

    pub fn symbol_name(&self, s: SymbolId) -> &str {
        &self.alphabet[s]
    }

    pub fn symbol_id(&self, name: &str) -> Option<SymbolId> {
        index_of(&self.alphabet, name)
    }

    pub fn alphabet(&self) -> &[String] {
        &self.alphabet
    }

    /// Split an input string into symbols: per character when every symbol
    /// is one character long, otherwise on whitespace.
    pub fn parse_input(&self, input: &str) -> Result<Vec<SymbolId>, TmError> {
        let single = self.alphabet.iter().all(|s| s.chars().count() == 1);
        let pieces: Vec<String> = if single {
            input.chars().map(String::from).collect()
        } else {
            input.split_whitespace().map(String::from).collect()
        };
        pieces
            .iter()
            .map(|p| self.symbol_id(p).ok_or_else(|| TmError::Validation(format!("input symbol {p:?} not in alphabet"))))
            .collect()
    }

    /// Initial configuration with `input` on tape 0 starting at cell 0.
    pub fn initial_config(&self, input: &[SymbolId]) -> TapeConfiguration {
        let mut tapes = vec![Tape::default(); self.tapes];
        for (i, &s) in input.iter().enumerate() {
            tapes[0].write(i as i64, s, self.blank);
        }
        TapeConfiguration { tapes, heads: vec![0; self.tapes], state: self.initial, steps: 0 }
    }

    /// Apply one transition, returning the successor configuration.
    pub fn step(&self, c: &TapeConfiguration) -> Result<TapeConfiguration, StepError> {
        let mut next = c.clone();
        self.step_in_place(&mut next)?;
        Ok(next)
    }

    /// Whether a transition applies to `c`, without applying it.
    pub fn check_step(&self, c: &TapeConfiguration) -> Result<(), StepError> {
        if self.is_final(c.state) {
            return Err(StepError::AlreadyHalted);
        }
        let read: Vec<SymbolId> = (0..self.tapes).map(|t| c.tapes[t].read(c.heads[t], self.blank)).collect();
        let tr = self.transition(c.state, &read).ok_or(StepError::Stuck)?;
        if self.one_sided && c.heads.iter().any(|&h| h + tr.mv.offset() < 0) {
            return Err(StepError::LeftEdge);
        }
        Ok(())
    }

    /// All heads read, all heads write, and all heads share the single move.
    pub fn step_in_place(&self, c: &mut TapeConfiguration) -> Result<(), StepError> {
        if self.is_final(c.state) {
            return Err(StepError::AlreadyHalted);
        }
        let read: Vec<SymbolId> = (0..self.tapes).map(|t| c.tapes[t].read(c.heads[t], self.blank)).collect();
        let tr = self.transition(c.state, &read).ok_or(StepError::Stuck)?;
        let off = tr.mv.offset();
        if self.one_sided && c.heads.iter().any(|&h| h + off < 0) {
            return Err(StepError::LeftEdge);
        }
        for t in 0..self.tapes {
            c.tapes[t].write(c.heads[t], tr.write[t], self.blank);
            c.heads[t] += off;
        }
        c.state = tr.to;
        c.steps += 1;
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum StepError {
    #[error("no transition defined")]
    Stuck,
    #[error("machine is already in a final state")]
    AlreadyHalted,
    #[error("head would move left of cell 0 on a one-sided tape")]
    LeftEdge,
}

/// Sparse tape; cells not present hold the blank.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Tape {
    cells: BTreeMap<i64, SymbolId>,
}

impl Tape {
    pub fn read(&self, pos: i64, blank: SymbolId) -> SymbolId {
        self.cells.get(&pos).copied().unwrap_or(blank)
    }

    pub fn write(&mut self, pos: i64, sym: SymbolId, blank: SymbolId) {
        if sym == blank {
            self.cells.remove(&pos);
        } else {
            self.cells.insert(pos, sym);
        }
    }

    pub fn non_blank(&self) -> usize {
        self.cells.len()
    }

    /// Non-blank cells strictly left of `pos`.
    pub fn marks_left_of(&self, pos: i64) -> usize {
        self.cells.range(..pos).count()
    }

    pub fn cells(&self) -> impl Iterator<Item = (i64, SymbolId)> + '_ {
        self.cells.iter().map(|(&p, &s)| (p, s))
    }

    pub fn span(&self) -> Option<(i64, i64)> {
        Some((*self.cells.keys().next()?, *self.cells.keys().next_back()?))
    }
}

/// Snapshot of tapes, heads, control state and step count.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TapeConfiguration {
    pub tapes: Vec<Tape>,
    pub heads: Vec<i64>,
    pub state: StateId,
    pub steps: u64,
}

impl TapeConfiguration {
    /// Tape contents between the outermost non-blank cells, one symbol name
    /// per cell. Empty for a blank tape.
    pub fn tape_string(&self, m: &TuringMachine, tape: usize) -> String {
        let t = &self.tapes[tape];
        let Some((lo, hi)) = t.span() else {
            return String::new();
        };
        let single = m.alphabet.iter().all(|s| s.chars().count() == 1);
        let sep = if single { "" } else { " " };
        (lo..=hi).map(|p| m.symbol_name(t.read(p, m.blank))).collect::<Vec<_>>().join(sep)
    }

    pub fn view<'a>(&'a self, m: &'a TuringMachine) -> ConfigView<'a> {
        ConfigView { m, c: self }
    }
}

pub struct ConfigView<'a> {
    m: &'a TuringMachine,
    c: &'a TapeConfiguration,
}

impl fmt::Display for ConfigView<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{} {}", self.c.steps, self.m.state_name(self.c.state))?;
        for t in 0..self.c.tapes.len() {
            write!(f, " [{}]@{}", self.c.tape_string(self.m, t), self.c.heads[t])?;
        }
        Ok(())
    }
}
