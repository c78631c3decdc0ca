//! Search verdicts against the known classification of small family members.

mod common;

use dmagic::constructors::{decide_kmokn, kmokn_graph, FamilyStatus};
use dmagic::graph::{complete, complete_multipartite, prism};
use dmagic::search::{decide_existence, SearchConfig, VerdictKind};

fn verdict(g: &dmagic::graph::UndirectedGraph) -> VerdictKind {
    let out = decide_existence(g, &SearchConfig::default()).unwrap();
    if let Some(c) = out.verdict.witness() {
        assert!(common::certificate_ok(c));
    }
    out.verdict.kind()
}

#[test]
fn complete_graphs_are_magic_iff_odd() {
    for n in 1..=8 {
        let expected = if n % 2 == 1 { VerdictKind::Witness } else { VerdictKind::ExhaustedNoSolution };
        assert_eq!(verdict(&complete(n)), expected, "K{n}");
    }
}

#[test]
fn odd_multipartite_with_second_part_at_least_two() {
    for total in (3..=8).step_by(2) {
        for mut sizes in common::integer_partitions(total, total) {
            sizes.reverse();
            if sizes.len() < 2 || sizes[1] < 2 {
                continue;
            }
            let g = complete_multipartite(&sizes).unwrap();
            assert_eq!(verdict(&g), VerdictKind::Witness, "K{sizes:?}");
        }
    }
}

#[test]
fn multipartite_family_matches_decision() {
    for m in 1..=8 {
        for n in 1..=8 / m {
            let expected = match decide_kmokn(m, n).unwrap().status {
                FamilyStatus::Magic { .. } => VerdictKind::Witness,
                FamilyStatus::NotMagic(_) => VerdictKind::ExhaustedNoSolution,
                // odd order with parts of size n >= 3
                FamilyStatus::SearchRequired => VerdictKind::Witness,
            };
            assert_eq!(verdict(&kmokn_graph(m, n)), expected, "m={m} n={n}");
        }
    }
}

#[test]
fn small_prisms_are_not_magic() {
    for n in [3, 4] {
        assert_eq!(verdict(&prism(n).unwrap()), VerdictKind::ExhaustedNoSolution, "prism({n})");
    }
}

#[test]
fn seeds_change_order_not_verdicts() {
    for g in [complete(5), complete(6), prism(4).unwrap(), complete_multipartite(&[1, 2, 4]).unwrap()] {
        let base = verdict(&g);
        for seed in 1..=5 {
            let c = SearchConfig { seed, ..SearchConfig::default() };
            assert_eq!(decide_existence(&g, &c).unwrap().verdict.kind(), base);
        }
    }
}
