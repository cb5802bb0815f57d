//! The `hyperlab` command line: argument grammar, dispatch to the library
//! and report emission.

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use num_rational::BigRational;
use serde::Serialize;
use serde_json::{json, Value};

use crate::aqc::{self, AqcError, DecideParams, DiophantinePolynomial};
use crate::limits::{LimitsError, PhysicalConstants};
use crate::realenum::{self, PairStatus, RealEnumError};
use crate::report::Report;
use crate::rng;
use crate::tae::{self, BogoOutcome, Strategy, TaeError, WheelExperiment};
use crate::tm::{RunOptions, TapeConfiguration, TmError, TuringMachine, DEFAULT_FUEL};
use crate::zeno::{self, Budget, LampConvention, ZenoError, ZenoSchedule};

#[derive(Debug, Parser)]
#[command(name = "hyperlab", version, about = "Desk-scale hypercomputation workbench")]
pub struct Cli {
    /// Seed for every random draw.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Turing machines.
    #[command(subcommand)]
    Tm(TmCommand),
    /// Trial-and-error procedures.
    #[command(subcommand)]
    Tae(TaeCommand),
    /// Accelerated (Zeno) machines.
    #[command(subcommand)]
    Zeno(ZenoCommand),
    /// Physical bounds on a symbol-manipulating machine.
    Limits(LimitsArgs),
    /// Enumeration of finite-precision reals.
    #[command(subcommand)]
    Enum(EnumCommand),
    /// Adiabatic search for roots of a polynomial.
    #[command(subcommand)]
    Aqc(AqcCommand),
}

#[derive(Debug, Subcommand)]
pub enum TmCommand {
    /// Run a machine document on an input string.
    Run {
        file: PathBuf,
        #[arg(long, default_value = "")]
        input: String,
        #[arg(long, default_value_t = DEFAULT_FUEL)]
        fuel: u64,
        /// Include every visited configuration.
        #[arg(long)]
        trace: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum TaeCommand {
    /// Answer stream for "every even number from 4 up splits into two primes".
    Goldbach {
        #[arg(long)]
        horizon: u64,
    },
    /// Expected time for N wheels to show A under one of three strategies.
    Ashby {
        #[arg(long)]
        wheels: u32,
        #[arg(long)]
        p: f64,
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
        strategy: u8,
        /// Also run a seeded Monte Carlo estimate.
        #[arg(long)]
        simulate: bool,
        #[arg(long, default_value_t = 100_000)]
        trials: u64,
    },
    /// Bogosort a reversed sequence `len, …, 1`.
    Bogosort {
        #[arg(long)]
        len: usize,
        /// Never revisit an arrangement.
        #[arg(long)]
        memo: bool,
        #[arg(long, default_value_t = 10_000_000)]
        max_tries: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum ZenoCommand {
    /// Elapsed time after steps 0..=n.
    Time {
        #[arg(long)]
        n: u64,
        #[command(flatten)]
        schedule: ScheduleArgs,
    },
    /// Steps that fit in a time budget.
    Budget {
        #[arg(long)]
        seconds: f64,
        /// Shortest physically realisable step, in seconds.
        #[arg(long, default_value_t = 1.0)]
        min_step: f64,
        #[command(flatten)]
        schedule: ScheduleArgs,
    },
    /// State of Thomson's lamp at time t.
    Lamp {
        #[arg(long)]
        t: f64,
        /// Start with the lamp off instead of on.
        #[arg(long)]
        start_off: bool,
        #[command(flatten)]
        schedule: ScheduleArgs,
    },
    /// Fuel-bounded halting flag of an accelerated machine.
    Halting {
        file: PathBuf,
        #[arg(long, default_value = "")]
        input: String,
        #[arg(long, default_value_t = DEFAULT_FUEL)]
        fuel: u64,
        #[command(flatten)]
        schedule: ScheduleArgs,
    },
    /// First step at which the head moves faster than light.
    Superluminal {
        /// Head speed during the first step, m/s.
        #[arg(long, default_value_t = 1.0)]
        speed: f64,
        /// Distance between cells, m.
        #[arg(long, default_value_t = 1.0)]
        pitch: f64,
        #[command(flatten)]
        schedule: ScheduleArgs,
    },
}

#[derive(Debug, Args)]
pub struct ScheduleArgs {
    /// Duration of the first step, seconds.
    #[arg(long, default_value_t = 1.0)]
    pub base: f64,
    /// Ratio between consecutive step durations.
    #[arg(long, default_value_t = 0.5)]
    pub ratio: f64,
}

#[derive(Debug, Args)]
pub struct LimitsArgs {
    /// Alphabet size z.
    #[arg(long)]
    pub symbols: f64,
    /// Available power, watts.
    #[arg(long)]
    pub power: Option<f64>,
    /// Step duration, seconds.
    #[arg(long)]
    pub dt: Option<f64>,
}

#[derive(Debug, Subcommand)]
pub enum EnumCommand {
    /// The real numbered `index`.
    Decode {
        #[arg(long, value_parser = parse_biguint)]
        index: BigUint,
    },
    /// The number of `a·10^(−b)`.
    Encode {
        #[arg(long, value_parser = parse_biguint)]
        a: BigUint,
        #[arg(long, value_parser = parse_biguint)]
        b: BigUint,
    },
    /// The first `count` reals of the enumeration.
    List {
        #[arg(long)]
        count: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum AqcCommand {
    /// Decide whether a polynomial has a root in 0..=cutoff per variable.
    Solve {
        file: PathBuf,
        #[arg(long)]
        cutoff: u64,
        #[arg(long, default_value_t = 50.0)]
        time: f64,
        #[arg(long, default_value_t = 0.01)]
        dt: f64,
        #[arg(long, default_value_t = 1000)]
        shots: u64,
        /// Only scan the lattice exhaustively.
        #[arg(long)]
        oracle_only: bool,
    },
}

fn parse_biguint(s: &str) -> Result<BigUint, String> {
    s.parse().map_err(|_| format!("`{s}` is not a natural number"))
}

/// A failure reported as `{"error": {"kind", "message"}}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, thiserror::Error)]
#[error("{kind}: {message}")]
pub struct CliError {
    pub kind: String,
    pub message: String,
}

impl CliError {
    pub fn new(kind: &str, message: impl Into<String>) -> Self {
        CliError { kind: kind.into(), message: message.into() }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&json!({ "error": self })).expect("errors serialize")
    }
}

impl From<TmError> for CliError {
    fn from(e: TmError) -> Self {
        let kind = match e {
            TmError::Document(_) => "document",
            _ => "validation",
        };
        CliError::new(kind, e.to_string())
    }
}

impl From<TaeError> for CliError {
    fn from(e: TaeError) -> Self {
        let kind = match e {
            TaeError::Domain(_) => "domain",
            TaeError::KernelDivergence { .. } => "kernel_divergence",
        };
        CliError::new(kind, e.to_string())
    }
}

impl From<ZenoError> for CliError {
    fn from(e: ZenoError) -> Self {
        CliError::new("domain", e.to_string())
    }
}

impl From<LimitsError> for CliError {
    fn from(e: LimitsError) -> Self {
        CliError::new("domain", e.to_string())
    }
}

impl From<RealEnumError> for CliError {
    fn from(e: RealEnumError) -> Self {
        CliError::new("domain", e.to_string())
    }
}

impl From<AqcError> for CliError {
    fn from(e: AqcError) -> Self {
        let kind = match e {
            AqcError::Document(_) => "document",
            AqcError::Validation(_) => "validation",
            AqcError::Shape(_) => "shape",
            AqcError::Domain(_) => "domain",
            AqcError::Overflow(_) => "overflow",
            AqcError::Resource(_) => "resource",
            AqcError::Stability { .. } => "stability",
            AqcError::Linalg(_) => "numerical",
        };
        CliError::new(kind, e.to_string())
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::new("io", format!("{}: {e}", path.display())))
}

fn schedule(s: &ScheduleArgs) -> Result<ZenoSchedule, CliError> {
    Ok(ZenoSchedule::from_f64(s.base, s.ratio)?)
}

fn exact(x: f64) -> Result<BigRational, CliError> {
    Ok(zeno::exact(x)?)
}

/// Exact rational as `p/q` when small enough to print, else absent.
fn rational_string(x: &BigRational) -> Option<String> {
    (x.numer().bits() <= 256 && x.denom().bits() <= 256).then(|| x.to_string())
}

fn config_json(m: &TuringMachine, c: &TapeConfiguration) -> Value {
    let tapes: Vec<String> = (0..c.tapes.len()).map(|t| c.tape_string(m, t)).collect();
    json!({ "steps": c.steps, "state": m.state_name(c.state), "heads": c.heads, "tapes": tapes })
}

fn load_machine(path: &Path) -> Result<TuringMachine, CliError> {
    Ok(TuringMachine::from_json(&read(path)?)?)
}

/// Run the parsed command and build its report.
pub fn dispatch(cli: &Cli) -> Result<Report, CliError> {
    let seed = cli.seed;
    match &cli.command {
        Command::Tm(TmCommand::Run { file, input, fuel, trace }) => {
            let m = load_machine(file)?;
            let out = m.run_str(input, RunOptions::fuel(*fuel).with_trace(*trace))?;
            let mut body = config_json(&m, &out.config);
            body["outcome"] = json!(out.kind);
            body["fuel"] = json!(fuel);
            let mut r = Report::new("tm run", "configuration reached under a step budget", body);
            if let Some(t) = &out.trace {
                r.insert("trace", t.iter().map(|c| config_json(&m, c)).collect::<Vec<_>>());
                r = r.with_table("trace");
            }
            Ok(r)
        }
        Command::Tae(TaeCommand::Goldbach { horizon }) => {
            let g = tae::goldbach_stream(*horizon)?;
            Ok(Report::new(
                "tae goldbach",
                "revisable verdict on every even number from 4 being a sum of two primes",
                json!({
                    "horizon": horizon,
                    "verdict": g.stream.final_verdict(),
                    "mind_changes": g.stream.mind_changes(),
                    "checked_up_to": g.checked_up_to,
                    "counterexample": g.counterexample,
                    "answers": g.stream.answers().iter().map(|&(s, v)| json!({"step": s, "verdict": v})).collect::<Vec<_>>(),
                }),
            ))
        }
        Command::Tae(TaeCommand::Ashby { wheels, p, strategy, simulate, trials }) => {
            let e = WheelExperiment::new(*wheels, *p, Strategy::from_case(*strategy)?)?;
            let x = tae::ashby_expected(&e);
            let sim = if *simulate { Some(tae::ashby_simulate(&e, *trials, seed)?) } else { None };
            let literature = (*wheels == 1000 && *p == 0.5).then_some(match e.strategy {
                Strategy::AllAtOnce => "2^1000 s",
                Strategy::OneAtATime => "500 s",
                Strategy::LockInParallel => "a little over 0.5 s",
            });
            Ok(Report::new(
                "tae ashby",
                "expected seconds until every wheel shows A, one spin round per second",
                json!({
                    "wheels": wheels,
                    "p": p,
                    "strategy": strategy,
                    "expected_seconds": x.seconds.is_finite().then_some(x.seconds),
                    "log2_expected_seconds": x.log2_seconds,
                    "simulation": {
                        "trials": sim.map(|s| s.trials),
                        "seed": sim.map(|s| s.seed),
                        "mean": sim.map(|s| s.mean),
                        "std_error": sim.map(|s| s.std_error),
                        "z_score": sim.map(|s| (s.mean - x.seconds) / s.std_error),
                    },
                    "literature_figure": literature,
                }),
            ))
        }
        Command::Tae(TaeCommand::Bogosort { len, memo, max_tries }) => {
            let seq: Vec<i64> = (1..=*len as i64).rev().collect();
            let mut r = rng::stream(seed, 0);
            let out = tae::bogosort(&seq, *memo, &mut r, *max_tries)?;
            let (kind, sorted) = match &out {
                BogoOutcome::Sorted { sorted, .. } => ("sorted", Some(sorted.clone())),
                BogoOutcome::GaveUp { .. } => ("gave_up", None),
            };
            Ok(Report::new(
                "tae bogosort",
                "sortedness checks until a random rearrangement comes out sorted",
                json!({
                    "len": len,
                    "memoized": memo,
                    "seed": seed,
                    "input": seq,
                    "outcome": kind,
                    "tries": out.tries(),
                    "sorted": sorted,
                }),
            ))
        }
        Command::Zeno(z) => zeno_report(z),
        Command::Limits(a) => {
            let r = PhysicalConstants::default().report(a.symbols, a.power, a.dt)?;
            Ok(Report::new("limits", "frequency, energy and size bounds for a mechanical symbol machine", r))
        }
        Command::Enum(e) => enum_report(e),
        Command::Aqc(AqcCommand::Solve { file, cutoff, time, dt, shots, oracle_only }) => {
            let d = DiophantinePolynomial::from_json(&read(file)?)?;
            let o = aqc::exact_ground_oracle(&d, *cutoff)?;
            if *oracle_only {
                return Ok(Report::new(
                    "aqc solve",
                    "exhaustive minimum of D² over the truncated lattice",
                    json!({
                        "polynomial": d.to_string(),
                        "cutoff": cutoff,
                        "lattice_size": o.lattice_size,
                        "ground_energy": o.energy as f64,
                        "ground_energy_exact": o.energy.to_string(),
                        "minimizers": o.witnesses,
                    }),
                ));
            }
            let r = aqc::decide(&d, DecideParams { cutoff: *cutoff, total_time: *time, dt: *dt, shots: *shots, seed })?;
            let mut report = Report::new("aqc solve", "adiabatic decision on a natural-number root of D", &r);
            report.insert(
                "samples",
                r.samples.iter().map(|(t, n)| json!({"outcome": t, "count": n})).collect::<Vec<_>>(),
            );
            report.insert("polynomial", d.to_string());
            report.insert("seed", seed);
            report.insert("shots", shots);
            Ok(report)
        }
    }
}

fn zeno_report(z: &ZenoCommand) -> Result<Report, CliError> {
    match z {
        ZenoCommand::Time { n, schedule: s } => {
            let sch = schedule(s)?;
            let t = sch.zeno_time(*n);
            Ok(Report::new(
                "zeno time",
                "elapsed time after steps 0..=n of a geometric schedule",
                json!({
                    "n": n,
                    "t": zeno::to_f64(&t),
                    "t_exact": rational_string(&t),
                    "limit": zeno::to_f64(&sch.limit()),
                    "base": s.base,
                    "ratio": s.ratio,
                }),
            ))
        }
        ZenoCommand::Budget { seconds, min_step, schedule: s } => {
            let sch = schedule(s)?;
            let budget = sch.steps_within_budget(&exact(*seconds)?)?;
            let physical = sch.physically_bounded_steps(&exact(*seconds)?, &exact(*min_step)?)?;
            let (kind, n) = match budget {
                Budget::Steps(n) => ("steps", Some(n)),
                Budget::BelowFirstStep => ("below_first_step", None),
                Budget::Unbounded => ("unbounded", None),
            };
            Ok(Report::new(
                "zeno budget",
                "steps completed within a time budget",
                json!({
                    "seconds": seconds,
                    "budget": kind,
                    "steps": n,
                    "min_step": min_step,
                    "physically_bounded_steps": physical,
                    "limit": zeno::to_f64(&sch.limit()),
                }),
            ))
        }
        ZenoCommand::Lamp { t, start_off, schedule: s } => {
            let sch = schedule(s)?;
            let lamp = sch.thomson_lamp(&exact(*t)?, LampConvention { initially_on: !start_off })?;
            Ok(Report::new(
                "zeno lamp",
                "lamp state when toggled at the end of every step",
                json!({"t": t, "initially_on": !start_off, "state": lamp, "limit": zeno::to_f64(&sch.limit())}),
            ))
        }
        ZenoCommand::Halting { file, input, fuel, schedule: s } => {
            let sch = schedule(s)?;
            let m = load_machine(file)?;
            let syms = m.parse_input(input)?;
            let h = zeno::atm_halting_flag(&sch, &m, &syms, *fuel)?;
            let mut r =
                Report::new("zeno halting", "halting flag of an accelerated machine, cut off at a step budget", &h);
            r.insert("elapsed_exact", rational_string(&h.elapsed));
            r.insert("time_to_limit", zeno::to_f64(&(sch.limit() - &h.elapsed)));
            r.insert("fuel", fuel);
            Ok(r)
        }
        ZenoCommand::Superluminal { speed, pitch, schedule: s } => {
            let out = schedule(s)?.first_superluminal_step(*speed, *pitch)?;
            Ok(Report::new("zeno superluminal", "first step whose head speed exceeds light speed", out))
        }
    }
}

fn enum_entry(index: &BigUint, a: &BigUint, b: &BigUint, status: Option<&PairStatus>) -> Value {
    let r = realenum::FinitePrecisionReal { a: a.clone(), b: b.clone() };
    let mut v = json!({
        "index": index.to_string(),
        "a": a.to_string(),
        "b": b.to_string(),
        "value": realenum::decimal_string(a, b),
        "canonical": r.is_canonical(),
    });
    if let Some(s) = status {
        let (kind, of) = match s {
            PairStatus::Canonical => ("canonical", None),
            PairStatus::Duplicate { of } => ("duplicate", Some(of.clone())),
            PairStatus::Unnumbered => ("unnumbered", None),
        };
        v["status"] = json!(kind);
        v["duplicate_of"] = json!(of);
    }
    v
}

fn enum_report(e: &EnumCommand) -> Result<Report, CliError> {
    let quantity = "diagonal numbering of pairs (a, b) standing for a·10^(−b)";
    match e {
        EnumCommand::Decode { index } => {
            let (a, b) = realenum::pair_decode(index);
            let entry = realenum::enumerate_one(index);
            Ok(Report::new("enum decode", quantity, enum_entry(index, &a, &b, Some(&entry.status))))
        }
        EnumCommand::Encode { a, b } => {
            let index = realenum::pair_index(a, b)?;
            Ok(Report::new("enum encode", quantity, enum_entry(&index, a, b, None)))
        }
        EnumCommand::List { count } => {
            let entries: Vec<Value> = realenum::enumerate(*count)
                .iter()
                .map(|x| enum_entry(&x.index, &x.real.a, &x.real.b, Some(&x.status)))
                .collect();
            Ok(Report::new("enum list", quantity, json!({ "count": count, "entries": entries })).with_table("entries"))
        }
    }
}

fn emit(cli: &Cli, report: &Report) -> Result<(), CliError> {
    let text = match cli.format {
        Format::Json => report.to_json(),
        Format::Csv => report.to_csv(),
    };
    match &cli.output {
        Some(path) => std::fs::write(path, text).map_err(|e| CliError::new("io", format!("{}: {e}", path.display()))),
        None => {
            use std::io::Write;
            std::io::stdout().lock().write_all(text.as_bytes()).map_err(|e| CliError::new("io", e.to_string()))
        }
    }
}

/// Parse, dispatch and emit; returns the process exit status.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match dispatch(&cli).and_then(|r| emit(&cli, &r)) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("{}", e.to_json());
            1
        }
    }
}

