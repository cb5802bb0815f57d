use serde::Serialize;

use super::TaeError;

/// A revisable sequence of yes/no verdicts indexed by step.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct AnswerStream {
    answers: Vec<(u64, bool)>,
    pub horizon: u64,
}

impl AnswerStream {
    pub fn new(horizon: u64) -> Self {
        AnswerStream { answers: Vec::new(), horizon }
    }

    /// Append a verdict; step indices must strictly increase.
    pub fn push(&mut self, step: u64, verdict: bool) -> Result<(), TaeError> {
        if let Some(&(last, _)) = self.answers.last() {
            if step <= last {
                return Err(TaeError::Domain(format!("step {step} does not follow {last}")));
            }
        }
        self.answers.push((step, verdict));
        Ok(())
    }

    pub fn answers(&self) -> &[(u64, bool)] {
        &self.answers
    }

    pub fn mind_changes(&self) -> usize {
        self.answers.windows(2).filter(|w| w[0].1 != w[1].1).count()
    }

    pub fn final_verdict(&self) -> Option<bool> {
        self.answers.last().map(|&(_, v)| v)
    }

    pub fn len(&self) -> usize {
        self.answers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.answers.is_empty()
    }
}

/// Step budget handed to a kernel for one evaluation.
#[derive(Debug)]
pub struct Fuel {
    left: u64,
}

/// The kernel ran out of fuel, i.e. looks non-total at that argument.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OutOfFuel;

impl Fuel {
    pub fn new(n: u64) -> Self {
        Fuel { left: n }
    }

    pub fn tick(&mut self) -> Result<(), OutOfFuel> {
        self.spend(1)
    }

    pub fn spend(&mut self, n: u64) -> Result<(), OutOfFuel> {
        if n > self.left {
            self.left = 0;
            return Err(OutOfFuel);
        }
        self.left -= n;
        Ok(())
    }

    pub fn remaining(&self) -> u64 {
        self.left
    }
}

pub const DEFAULT_KERNEL_FUEL: u64 = 1_000_000;

type Kernel = dyn Fn(&[u64], u64, &mut Fuel) -> Result<bool, OutOfFuel> + Send + Sync;

/// `P(x₁..xₙ) ⇔ lim_{y→∞} f(x₁..xₙ, y) = 1` for a total 0/1 kernel `f`.
pub struct LimitPredicate {
    arity: usize,
    kernel: Box<Kernel>,
    kernel_fuel: u64,
}

impl LimitPredicate {
    /// Kernel that meters its own work through [`Fuel`].
    pub fn metered(
        arity: usize,
        kernel: impl Fn(&[u64], u64, &mut Fuel) -> Result<bool, OutOfFuel> + Send + Sync + 'static,
    ) -> Self {
        LimitPredicate { arity, kernel: Box::new(kernel), kernel_fuel: DEFAULT_KERNEL_FUEL }
    }

    /// Kernel known to be cheap and total.
    pub fn total(arity: usize, kernel: impl Fn(&[u64], u64) -> bool + Send + Sync + 'static) -> Self {
        Self::metered(arity, move |x, y, _| Ok(kernel(x, y)))
    }

    pub fn with_kernel_fuel(mut self, fuel: u64) -> Self {
        self.kernel_fuel = fuel;
        self
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn kernel(&self, args: &[u64], y: u64) -> Result<bool, TaeError> {
        let mut fuel = Fuel::new(self.kernel_fuel);
        (self.kernel)(args, y, &mut fuel).map_err(|_| TaeError::KernelDivergence { y, fuel: self.kernel_fuel })
    }

    /// Tabulate `f(args, y)` for `y = 0..=horizon`.
    pub fn evaluate(&self, args: &[u64], horizon: u64) -> Result<LimitEvaluation, TaeError> {
        if horizon < 1 {
            return Err(TaeError::Domain("horizon must be at least 1".into()));
        }
        if args.len() != self.arity {
            return Err(TaeError::Domain(format!("expected {} arguments, got {}", self.arity, args.len())));
        }
        let mut stream = AnswerStream::new(horizon);
        let mut stable_since = 0;
        let mut prev = None;
        for y in 0..=horizon {
            let v = self.kernel(args, y)?;
            if prev.is_some_and(|p| p != v) {
                stable_since = y;
            }
            prev = Some(v);
            stream.push(y, v)?;
        }
        let verdict = stream.final_verdict().expect("horizon ≥ 1 gives answers");
        Ok(LimitEvaluation {
            verdict,
            mind_changes: stream.mind_changes(),
            stable_since,
            changed_at_horizon: stable_since == horizon,
            stream,
        })
    }
}

/// Horizon-bounded reading of a limit predicate. Nothing here can certify
/// that the kernel will not change its mind after the horizon.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LimitEvaluation {
    pub verdict: bool,
    pub mind_changes: usize,
    /// Least `y*` with `f` constant on `[y*, horizon]`.
    pub stable_since: u64,
    /// The last answer differs from the one before it.
    pub changed_at_horizon: bool,
    pub stream: AnswerStream,
}

impl LimitEvaluation {
    /// Whether the tabulated prefix is consistent with a k-trial kernel.
    pub fn within_k_trials(&self, k: usize) -> bool {
        self.mind_changes <= k
    }
}
