//! Acceptance suite: one line per criterion, non-zero exit if any fails.
// a NaN must fail a criterion, so conditions are negated rather than flipped
#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use common::{eigen_oracle, fixture, fixture_path, machine_corpus, random_hermitian};
use hyperlab::aqc::{self, AdiabaticProblem, DecideParams, DiophantinePolynomial, TruncatedFockSpace, Verdict};
use hyperlab::limits::{PhysicalConstants, QUOTED_C_OVER_A};
use hyperlab::linalg::{hermitian_eigensystem, Complex, ComplexMatrix, Ket};
use hyperlab::realenum::{pair_decode, pair_index, FinitePrecisionReal};
use hyperlab::tae::{self, Strategy, WheelExperiment};
use hyperlab::tm::{random_machine, OutcomeKind, RunOptions, TuringMachine};
use hyperlab::zeno::{self, ZenoSchedule};
use num_bigint::BigUint;
use num_traits::Zero;
use rand::Rng;

type Check = fn() -> Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    if elapsed < limit {
        Ok(())
    } else {
        Err(format!("took {elapsed:?}, limit {limit:?}"))
    }
}

fn c1_frequency_ceiling() -> Result<String, String> {
    let start = Instant::now();
    let ceiling = PhysicalConstants::default().frequency_symbol_ceiling();
    let elapsed = start.elapsed();
    let quoted = 0.5 * QUOTED_C_OVER_A;
    let rel = (ceiling - quoted).abs() / quoted;
    ensure!((2.80e18..=2.86e18).contains(&ceiling), "ceiling {ceiling:e} outside [2.80e18, 2.86e18]");
    ensure!(rel <= 0.005, "relative gap {rel:e} to quoted {quoted:e}");
    within(elapsed, Duration::from_millis(1))?;
    Ok(format!("½·c/a = {ceiling:.6e}, gap to quoted {rel:.2e}"))
}

fn c2_zeno_accounting() -> Result<String, String> {
    let start = Instant::now();
    let s = ZenoSchedule::default();
    let mut ns: Vec<u64> = (0..=1000).collect();
    ns.extend([4096, 10_000, 65_537, 100_000, 1_000_000]);
    for &n in &ns {
        let t = s.zeno_time(n);
        // 2 − 2^−n = (2^(n+1) − 1)/2^n
        let d = t.denom().magnitude();
        ensure!((d & (d - 1u32)).is_zero() && d.bits() == n + 1, "t({n}) has denominator other than 2^{n}");
        ensure!(*t.numer().magnitude() == (d << 1u32) - 1u32, "t({n}) ≠ 2 − 2^−{n}");
    }
    let min = zeno::exact(1.0).unwrap();
    let steps = |t: num_rational::BigRational| s.physically_bounded_steps(&t, &min).unwrap();
    let d1 = steps(zeno::exact(64.0).unwrap()) - steps(zeno::exact(1.0).unwrap());
    let d2 = steps(zeno::pow2(1000)) - steps(zeno::exact(1.0).unwrap());
    ensure!(d1 == 6, "64 vs 1 gives {d1}");
    ensure!(d2 == 1000, "2^1000 vs 1 gives {d2}");
    within(start.elapsed(), Duration::from_secs(1))?;
    Ok(format!("{} exact sums up to n = 10^6; differences {d1} and {d2}", ns.len()))
}

fn c3_tensor_fixture() -> Result<String, String> {
    let not = ComplexMatrix::from_real(2, 2, &[0.0, 1.0, 1.0, 0.0]).unwrap();
    let nn = not.tensor(&not);
    let want = ComplexMatrix::from_real(
        4,
        4,
        &[0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 1.0, 0.0, 0.0, 1.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0],
    )
    .unwrap();
    ensure!(nn == want, "NOT⊗NOT = {nn:?}");
    Ok("NOT⊗NOT is the 4×4 anti-diagonal, bit-exact".into())
}

fn c4_eigensolver() -> Result<String, String> {
    let start = Instant::now();
    let mut r = hyperlab::rng::stream(4, 0);
    let (mut worst_eig, mut worst_inv) = (0.0f64, 0.0f64);
    for _ in 0..200 {
        let n = r.gen_range(1..=8);
        let h = random_hermitian(&mut r, n);
        let es = hermitian_eigensystem(&h).map_err(|e| e.to_string())?;
        for (a, b) in es.eigenvalues.iter().zip(eigen_oracle(&h)) {
            worst_eig = worst_eig.max((a - b).abs());
        }
        let trace = h.trace().unwrap().re;
        worst_inv = worst_inv.max((es.eigenvalues.iter().sum::<f64>() - trace).abs());
        let c = r.gen_range(-10.0..10.0);
        let shifted = hermitian_eigensystem(&h.add(&ComplexMatrix::identity(n).scale_real(c)).unwrap()).unwrap();
        for (a, b) in es.eigenvalues.iter().zip(&shifted.eigenvalues) {
            worst_inv = worst_inv.max((a + c - b).abs());
        }
    }
    ensure!(worst_eig <= 1e-8, "eigenvalue error {worst_eig:e}");
    ensure!(worst_inv <= 1e-9, "trace/shift error {worst_inv:e}");
    within(start.elapsed(), Duration::from_secs(10))?;
    Ok(format!("200 matrices: max eigenvalue error {worst_eig:.1e}, trace/shift {worst_inv:.1e}"))
}

fn poly(name: &str) -> DiophantinePolynomial {
    DiophantinePolynomial::from_json(&fixture(name)).unwrap()
}

fn c5_aqc_end_to_end() -> Result<String, String> {
    let start = Instant::now();
    let params = DecideParams { cutoff: 4, total_time: 50.0, dt: 0.01, shots: 1000, seed: 0 };
    let r = aqc::decide(&poly("x_minus_2.json"), params).map_err(|e| e.to_string())?;
    ensure!(r.verdict == Verdict::SolvableWithWitness && r.witness == Some(vec![2]), "x − 2: {:?} {:?}", r.verdict, r.witness);
    ensure!(r.ground_overlap >= 0.9, "x − 2 overlap {}", r.ground_overlap);
    let r2 = aqc::decide(&poly("two_x_minus_1.json"), DecideParams { cutoff: 8, ..params }).map_err(|e| e.to_string())?;
    ensure!(r2.verdict == Verdict::NoSolutionUpToCutoff, "2x − 1: {:?}", r2.verdict);
    ensure!(r2.ground_energy == 1.0, "2x − 1 ground energy {}", r2.ground_energy);
    let mut overlaps = Vec::new();
    for t in [1.0, 5.0, 25.0, 125.0] {
        let p = AdiabaticProblem::for_polynomial(&poly("x_minus_2.json"), 4, t, 0.01).unwrap();
        let ev = aqc::evolve(&p, &p.initial_state().unwrap()).unwrap();
        overlaps.push(ev.state.amplitude(2).norm_sqr());
    }
    ensure!(overlaps.windows(2).all(|w| w[1] >= w[0] - 0.02), "overlaps {overlaps:?}");
    within(start.elapsed(), Duration::from_secs(60))?;
    Ok(format!(
        "x−2 → x=2 (overlap {:.4}); 2x−1 → none up to 8, E_g = 1; overlaps {:.3?}",
        r.ground_overlap, overlaps
    ))
}

fn c6_norm_conservation() -> Result<String, String> {
    let mut worst = 0.0f64;
    for (name, cutoff) in [("x_minus_2.json", 4), ("two_x_minus_1.json", 8), ("x_plus_y_minus_3.json", 4)] {
        let r = aqc::decide(&poly(name), DecideParams { cutoff, total_time: 50.0, dt: 0.01, shots: 100, seed: 0 })
            .map_err(|e| e.to_string())?;
        worst = worst.max(r.norm_drift);
    }
    for t in [1.0, 5.0, 25.0, 125.0] {
        let p = AdiabaticProblem::for_polynomial(&poly("x_minus_2.json"), 4, t, 0.01).unwrap();
        worst = worst.max(aqc::evolve(&p, &p.initial_state().unwrap()).unwrap().norm_drift);
    }
    let e = [0.0, 0.5, 1.7, 3.0, 4.2];
    let h = ComplexMatrix::diagonal(&e.map(Complex::real));
    let t = 20.0;
    let mut p = AdiabaticProblem::new(TruncatedFockSpace::new(1, 4).unwrap(), h.clone(), h, t, 0.01).unwrap();
    p.dt = p.default_step();
    let psi0 = Ket::uniform(5);
    let ev = aqc::evolve(&p, &psi0).unwrap();
    worst = worst.max(ev.norm_drift);
    let phase_err = e
        .iter()
        .enumerate()
        .map(|(j, &ej)| (ev.state.amplitude(j) - psi0.amplitude(j) * Complex::from_phase(-ej * t)).modulus())
        .fold(0.0, f64::max);
    ensure!(worst <= 1e-6, "norm drift {worst:e}");
    ensure!(phase_err <= 1e-7, "phase error {phase_err:e}");
    Ok(format!("max drift {worst:.1e} over 8 runs; constant-H phase error {phase_err:.1e} at default step"))
}

fn c7_pairing_roundtrip() -> Result<String, String> {
    let start = Instant::now();
    let mut canonical = 0;
    for i in 0..100_000u64 {
        let idx = BigUint::from(i);
        let (a, b) = pair_decode(&idx);
        if FinitePrecisionReal::new(a.clone(), b.clone()).is_canonical() {
            canonical += 1;
            let back = pair_index(&a, &b).map_err(|e| e.to_string())?;
            ensure!(back == idx, "index {i} → ({a}, {b}) → {back}");
        }
    }
    within(start.elapsed(), Duration::from_secs(1))?;
    Ok(format!("{canonical} canonical indices below 10^5 round-trip"))
}

fn c8_goldbach() -> Result<String, String> {
    let start = Instant::now();
    let horizon = 10_000usize;
    let g = tae::goldbach_stream(horizon as u64).map_err(|e| e.to_string())?;
    // independent oracle: sieve, then look for a prime pair for every even n
    let mut prime = vec![true; horizon + 1];
    prime[0] = false;
    prime[1] = false;
    for i in 2..=horizon {
        if prime[i] {
            for j in (i * i..=horizon).step_by(i) {
                prime[j] = false;
            }
        }
    }
    let primes: Vec<usize> = (2..=horizon).filter(|&i| prime[i]).collect();
    let counterexample = (4..=horizon).step_by(2).find(|&n| !primes.iter().take_while(|&&p| p <= n / 2).any(|&p| prime[n - p]));
    ensure!(g.stream.mind_changes() == 0, "{} mind changes", g.stream.mind_changes());
    ensure!(counterexample.is_none(), "oracle counterexample {counterexample:?}");
    ensure!(g.stream.final_verdict() == Some(true) && g.counterexample.is_none(), "stream says {:?}", g.stream.final_verdict());
    within(start.elapsed(), Duration::from_secs(5))?;
    Ok(format!("0 mind changes to {horizon}, oracle agrees"))
}

fn c9_ashby() -> Result<String, String> {
    let start = Instant::now();
    let t1 = tae::ashby_expected(&WheelExperiment::new(1000, 0.5, Strategy::AllAtOnce).unwrap());
    ensure!(t1.log2_seconds == 1000.0, "log2 T1 = {}", t1.log2_seconds);
    let mut worst = 0.0f64;
    let mut runs = 0;
    for n in [1u32, 3, 4, 10, 12] {
        for s in [Strategy::AllAtOnce, Strategy::OneAtATime, Strategy::LockInParallel] {
            let e = WheelExperiment::new(n, 0.5, s).unwrap();
            let x = tae::ashby_expected(&e).seconds;
            let sim = tae::ashby_simulate(&e, 100_000, 1).map_err(|e| e.to_string())?;
            let z = (sim.mean - x).abs() / sim.std_error;
            ensure!(z <= 3.0, "N = {n}, case {}: mean {} vs {x}, {z:.2} SE", s.case(), sim.mean);
            worst = worst.max(z);
            runs += 1;
        }
    }
    within(start.elapsed(), Duration::from_secs(30))?;
    Ok(format!("log2 T1 = 1000 exactly; {runs} simulations, worst {worst:.2} SE"))
}

fn c10_tm_engine() -> Result<String, String> {
    let m = TuringMachine::from_json(&fixture("successor.json")).unwrap();
    let out = m.run_str("111", RunOptions::fuel(100)).unwrap();
    ensure!(out.kind == OutcomeKind::Halted && out.config.tape_string(&m, 0) == "1111", "successor: {:?}", out.kind);

    let mut r = hyperlab::rng::stream(10, 0);
    let trials = 500;
    for _ in 0..trials {
        let (states, symbols) = (r.gen_range(1..5), r.gen_range(2..4));
        let m = random_machine(&mut r, states, symbols, 0.8);
        let input: Vec<usize> = (0..r.gen_range(0..5)).map(|_| r.gen_range(0..m.alphabet().len())).collect();
        let f1 = r.gen_range(0..200);
        let f2 = f1 + r.gen_range(0..200);
        let a = m.run(&input, RunOptions::fuel(f1)).unwrap();
        let b = m.run(&input, RunOptions::fuel(f2)).unwrap();
        if a.kind != OutcomeKind::OutOfFuel {
            ensure!(a.kind == b.kind && a.config == b.config, "fuel {f1} → {:?}, fuel {f2} → {:?}", a.kind, b.kind);
        }
        ensure!(b.config.steps >= a.config.steps, "steps decreased with more fuel");
    }

    let sch = ZenoSchedule::default();
    let corpus = machine_corpus();
    let two = num_rational::BigRational::from_integer(2.into());
    let mut halting = 0;
    for (name, m, input) in &corpus {
        let syms = m.parse_input(input).unwrap();
        let run = m.run(&syms, RunOptions::fuel(500)).unwrap();
        let flag = zeno::atm_halting_flag(&sch, m, &syms, 500).unwrap();
        ensure!((flag.flag == 1) == run.halted(), "{name}: flag {} vs {:?}", flag.flag, run.kind);
        ensure!(flag.elapsed == sch.zeno_time(run.config.steps) && flag.elapsed < two, "{name}: elapsed");
        halting += flag.flag as usize;
    }
    Ok(format!("successor halts on 1111; {trials} fuel pairs; flag agrees on {} machines ({halting} halt)", corpus.len()))
}

fn c11_determinism() -> Result<String, String> {
    let bin = env!("CARGO_BIN_EXE_hyperlab");
    let succ = fixture_path("successor.json");
    let xm2 = fixture_path("x_minus_2.json");
    let cases: Vec<Vec<&str>> = vec![
        vec!["tae", "ashby", "--wheels", "6", "--p", "0.3", "--strategy", "3", "--simulate", "--trials", "20000", "--seed", "5"],
        vec!["tae", "ashby", "--wheels", "6", "--p", "0.3", "--strategy", "1", "--simulate", "--trials", "2000", "--format", "csv"],
        vec!["tae", "bogosort", "--len", "6", "--seed", "3"],
        vec!["tae", "bogosort", "--len", "5", "--memo", "--seed", "3"],
        vec!["tae", "goldbach", "--horizon", "1000"],
        vec!["aqc", "solve", &xm2, "--cutoff", "4", "--time", "10", "--dt", "0.01", "--shots", "500", "--seed", "7"],
        vec!["tm", "run", &succ, "--input", "1111", "--trace", "--format", "csv"],
        vec!["zeno", "time", "--n", "40"],
        vec!["limits", "--symbols", "4", "--power", "2"],
        vec!["enum", "list", "--count", "30", "--format", "csv"],
    ];
    for args in &cases {
        let run = || Command::new(bin).args(args).output().map_err(|e| e.to_string());
        let (a, b) = (run()?, run()?);
        ensure!(a.status.success(), "{args:?} failed: {}", String::from_utf8_lossy(&a.stderr));
        ensure!(a.stdout == b.stdout && !a.stdout.is_empty(), "{args:?} differs between runs");
    }
    Ok(format!("{} commands byte-identical across two runs", cases.len()))
}

fn main() {
    let criteria: [(&str, Check); 11] = [
        ("frequency-symbol ceiling", c1_frequency_ceiling),
        ("Zeno accounting", c2_zeno_accounting),
        ("tensor fixture", c3_tensor_fixture),
        ("eigensolver vs minor-sign oracle", c4_eigensolver),
        ("adiabatic decision end to end", c5_aqc_end_to_end),
        ("norm conservation", c6_norm_conservation),
        ("pairing roundtrip", c7_pairing_roundtrip),
        ("Goldbach stream", c8_goldbach),
        ("wheel strategies", c9_ashby),
        ("Turing machine engine", c10_tm_engine),
        ("CLI determinism", c11_determinism),
    ];
    std::panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or(p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
        });
        let ms = start.elapsed().as_secs_f64() * 1e3;
        match result {
            Ok(detail) => println!("PASS {:>2} {name} [{ms:.1} ms]: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name} [{ms:.1} ms]: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
