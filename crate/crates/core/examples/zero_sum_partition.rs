//! Zero-sum partitions and the set system behind the `mn ≡ 0 (mod 4)` labeler.
//!
//! Usage: `cargo run --example zero_sum_partition -- [N] [size,size,...]`

use dmagic::zero_sum::{case1_sets, validate_partition, zero_sum_partition};

fn main() {
    let mut args = std::env::args().skip(1);
    let total: usize = args.next().map_or(12, |a| a.parse().expect("N"));
    let sizes: Vec<usize> = args
        .next()
        .map(|s| s.split(',').map(|x| x.parse().expect("size")).collect())
        .unwrap_or_else(|| vec![3, 3, 6]);

    let p = zero_sum_partition(total, &sizes).unwrap_or_else(|e| panic!("{e}"));
    validate_partition(&p).expect("valid partition");
    println!("{{±1..±{}}} into {sizes:?}:", total / 2);
    print!("{p}");

    let sets = case1_sets(4, 3).unwrap();
    println!("\nsets of Z_12 for K_4 ∘ K̄_3 (mn/4 in set {}):", sets.quarter_index + 1);
    for (k, s) in sets.sets.iter().enumerate() {
        let vals: Vec<String> = s.iter().map(|x| x.to_string()).collect();
        println!("  A{} = {{{}}}", k + 1, vals.join(", "));
    }
}
