//! Labelings of `K_m ∘ K̄_n` with `m` odd and `n ≡ 2 (mod 4)`, compared with
//! both signs of the closed form `n²(m²−1)/4`.

use dmagic::constructors::{case2_closed_forms, construct_case2};

fn main() {
    println!("{:>3} {:>3} {:>8} {:>10} {:>10}", "m", "n", "verified", "-formula", "+formula");
    for m in (3..=11).step_by(2) {
        for n in [2, 6, 10] {
            let cert = construct_case2(m, n).expect("construction verifies");
            let f = case2_closed_forms(m, n);
            println!(
                "{m:>3} {n:>3} {:>8} {:>10} {:>10}",
                cert.mu().value(),
                f.derived,
                f.opposite_sign
            );
        }
    }
}
