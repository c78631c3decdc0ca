//! Nonexistence for prisms: odd-regular counting for `n` odd, parity for
//! `n` even, with the mod-2 solution space shown for `n = 4`.

use dmagic::graph::prism;
use dmagic::obstructions::{parity_feasibility, parity_space, prism_nonexistence, prism_sides};

fn main() {
    for n in 3..=12 {
        match prism_nonexistence(n) {
            Ok(cert) => println!("{cert}"),
            Err(e) => println!("prism({n}): unproven: {e}"),
        }
    }

    let g = prism(4).unwrap();
    println!("\nprism(4): {}", parity_feasibility(&g).unwrap());
    let (u, w) = prism_sides(4).unwrap();
    println!("sides u = {u:?}, w = {w:?}");
    for c in [false, true] {
        let Some(space) = parity_space(&g, c) else {
            println!("c = {}: no solutions", c as u8);
            continue;
        };
        print!("c = {}: solutions with odd-count", c as u8);
        space.for_each_point(|p| {
            print!(" {}", p.count_ones());
            true
        });
        println!();
    }
}
