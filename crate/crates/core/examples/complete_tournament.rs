//! Rotational tournaments on odd complete graphs, and why even ones fail.

use dmagic::constructors::construct_complete;
use dmagic::obstructions::obstruct;
use dmagic::graph::complete;

fn main() {
    for n in (1..=15).step_by(2) {
        let cert = construct_complete(n).expect("odd complete graphs are magic");
        println!("K_{n:<2} mu = {}", cert.mu().value());
    }
    for n in [4, 6, 8] {
        match obstruct(&complete(n)) {
            dmagic::obstructions::ObstructionOutcome::Certified(c) => println!("K_{n}: {c}"),
            dmagic::obstructions::ObstructionOutcome::Inconclusive => println!("K_{n}: inconclusive"),
        }
    }
    println!();
    print!("{}", construct_complete(5).unwrap());
}
