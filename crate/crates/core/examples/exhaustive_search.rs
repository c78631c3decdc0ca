//! Exhaustive search on small graphs, with and without parity pruning.
//!
//! Usage: `cargo run --release --example exhaustive_search -- [graph file]`

use dmagic::graph::{complete, complete_multipartite, cycle, prism, UndirectedGraph};
use dmagic::search::{decide_existence, SearchConfig};

fn report(name: &str, g: &UndirectedGraph, config: &SearchConfig) {
    let out = decide_existence(g, config).expect("searchable graph");
    let mu = out.verdict.witness().map(|c| format!(" mu={}", c.mu().value())).unwrap_or_default();
    println!(
        "{name:<14} {:<22}{mu:<6} nodes={:<9} parity-prunes={}",
        out.verdict.name(),
        out.stats.nodes,
        out.stats.prunes.parity
    );
}

fn main() {
    if let Some(path) = std::env::args().nth(1) {
        let g = UndirectedGraph::parse(&std::fs::read_to_string(&path).expect("readable file")).expect("graph");
        let out = decide_existence(&g, &SearchConfig::default()).unwrap();
        println!("{}", out.verdict.name());
        if let Some(c) = out.verdict.witness() {
            print!("{c}");
        }
        return;
    }

    let no_parity = SearchConfig {
        parity_pruning: false,
        ..SearchConfig::default()
    };
    let graphs = [
        ("K4", complete(4)),
        ("K5", complete(5)),
        ("K6", complete(6)),
        ("K_{1,2,2}", complete_multipartite(&[1, 2, 2]).unwrap()),
        ("K_{1,2,4}", complete_multipartite(&[1, 2, 4]).unwrap()),
        ("K_{3,2,2}", complete_multipartite(&[3, 2, 2]).unwrap()),
        ("C6", cycle(6).unwrap()),
        ("prism(4)", prism(4).unwrap()),
    ];
    for (name, g) in &graphs {
        report(name, g, &SearchConfig::default());
        report("  no parity", g, &no_parity);
    }
}
