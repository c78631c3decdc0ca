//! Labelings of `K_m ∘ K̄_n` with `mn ≡ 0 (mod 4)`; μ is always `mn/2`.

use dmagic::constructors::construct_case1;

fn main() {
    println!("{:>3} {:>3} {:>5} {:>5}", "m", "n", "order", "mu");
    for m in 2..=8 {
        for n in 2..=8 {
            if (m * n) % 4 != 0 {
                continue;
            }
            let cert = construct_case1(m, n).expect("construction verifies");
            assert_eq!(cert.mu().value() as usize, m * n / 2);
            println!("{m:>3} {n:>3} {:>5} {:>5}", m * n, cert.mu().value());
        }
    }
    println!();
    print!("{}", construct_case1(4, 3).unwrap());
}
