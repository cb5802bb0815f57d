//! Frequency, energy and size bounds for a machine built from atoms.

use hyperlab::limits::PhysicalConstants;

fn main() {
    let k = PhysicalConstants::default();
    println!("f·z^(1/3) ceiling: {:.4e} per second", k.frequency_symbol_ceiling());
    for z in [1.0, 2.0, 8.0, 1e6] {
        println!("z = {z:>9}: f ≤ {:.4e} Hz", k.max_frequency_from_alphabet(z).unwrap());
    }
    println!("1 W: f ≤ {:.4e} Hz", k.max_frequency_from_power(1.0).unwrap());
    println!("1 ns step: E ≥ {:.4e} J", k.min_step_energy(1e-9).unwrap());
}
