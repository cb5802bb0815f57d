//! Time accounting for a machine whose every step takes half as long.

use hyperlab::tm::TuringMachine;
use hyperlab::zeno::{self, Budget, LampConvention, ZenoSchedule};

fn main() {
    let s = ZenoSchedule::default();
    for n in [0, 1, 3, 10, 60] {
        println!("t({n}) = {}", zeno::to_f64(&s.zeno_time(n)));
    }

    let minute = zeno::exact(1.0).unwrap();
    let hour = zeno::exact(64.0).unwrap();
    let d = s.physically_bounded_steps(&hour, &minute).unwrap() - s.physically_bounded_steps(&minute, &minute).unwrap();
    println!("64 minutes vs 1 minute: {d} more steps");
    assert_eq!(s.steps_within_budget(&hour).unwrap(), Budget::Unbounded);

    for t in [0.5, 1.2, 1.9999, 2.0] {
        let lamp = s.thomson_lamp(&zeno::exact(t).unwrap(), LampConvention::default()).unwrap();
        println!("lamp at {t}: {lamp:?}");
    }

    let sl = s.first_superluminal_step(1.0, 1.0).unwrap();
    println!("head outruns light at step {} (figure in the literature: {})", sl.step, sl.quoted_step);

    let m = TuringMachine::from_json(include_str!("../fixtures/successor.json")).unwrap();
    let input = m.parse_input("11").unwrap();
    let flag = zeno::atm_halting_flag(&s, &m, &input, 1000).unwrap();
    println!("halting flag {} after {} steps, elapsed {}", flag.flag, flag.steps, flag.elapsed);
}
