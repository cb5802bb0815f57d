//! Numbering finite-precision reals along the diagonals of a grid.

use hyperlab::realenum::{decimal_string, enumerate, pair_decode, pair_index, PairStatus};
use num_bigint::BigUint;

fn main() {
    for e in enumerate(16) {
        let note = match &e.status {
            PairStatus::Canonical => String::new(),
            PairStatus::Duplicate { of } => format!("  (same as #{of})"),
            PairStatus::Unnumbered => "  (not numbered)".into(),
        };
        println!("#{:<3} {}{note}", e.index, decimal_string(&e.real.a, &e.real.b));
    }
    let i = pair_index(&BigUint::from(314159u32), &BigUint::from(5u32)).unwrap();
    let (a, b) = pair_decode(&i);
    println!("3.14159 is #{i}, which decodes to {}", decimal_string(&a, &b));
}
