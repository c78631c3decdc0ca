//! Property tests for zero-sum partitions, checked by test-side oracles.

mod common;

use proptest::prelude::*;

use dmagic::zero_sum::{case1_sets, validate_partition, zero_sum_partition};

fn sizes_for(total: usize) -> impl Strategy<Value = (usize, Vec<usize>)> {
    let max_parts = total / 2;
    prop::collection::vec(0usize..=total, 0..max_parts).prop_map(move |cuts| {
        // turn random cut points into a composition with parts >= 2
        let mut sizes = Vec::new();
        let mut left = total;
        for c in cuts {
            let s = 2 + c % (left / 2).max(1);
            if left < s + 2 {
                break;
            }
            sizes.push(s);
            left -= s;
        }
        sizes.push(left);
        (total, sizes)
    })
}

fn input() -> impl Strategy<Value = (usize, Vec<usize>)> {
    (1usize..=100).prop_flat_map(|h| sizes_for(2 * h))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn partitions_are_valid((total, sizes) in input()) {
        let p = zero_sum_partition(total, &sizes).unwrap();
        prop_assert!(validate_partition(&p).is_ok());
        let parts: Vec<Vec<i64>> = (0..p.parts().len()).map(|i| p.part_values(i)).collect();
        prop_assert_eq!(common::partition_ok(total, &sizes, &parts), Ok(()));
    }

    #[test]
    fn deterministic((total, sizes) in input()) {
        prop_assert_eq!(zero_sum_partition(total, &sizes).unwrap(), zero_sum_partition(total, &sizes).unwrap());
    }
}

#[test]
fn every_small_composition_is_in_the_enumerated_set() {
    for total in (2..=12).step_by(2) {
        for sizes in common::compositions(total) {
            let p = zero_sum_partition(total, &sizes).unwrap();
            let mut parts: Vec<Vec<i64>> = (0..p.parts().len()).map(|i| p.part_values(i)).collect();
            parts.iter_mut().for_each(|q| q.sort_unstable());
            let all = common::all_zero_sum_partitions(total, &sizes);
            assert!(!all.is_empty());
            assert!(all.contains(&parts), "N={total} {sizes:?}");
        }
    }
}

#[test]
fn invalid_inputs_are_rejected() {
    assert!(zero_sum_partition(5, &[5]).is_err());
    assert!(zero_sum_partition(6, &[1, 5]).is_err());
    assert!(zero_sum_partition(6, &[2, 2]).is_err());
    assert!(zero_sum_partition(0, &[]).is_err());
}

#[test]
fn case1_sets_on_grid() {
    for m in 2..=12 {
        for n in 2..=12 {
            if (m * n) % 4 == 0 {
                let s = case1_sets(m, n).unwrap();
                assert!(validate_partition(&s).is_ok(), "m={m} n={n}");
            } else {
                assert!(case1_sets(m, n).is_err());
            }
        }
    }
}
