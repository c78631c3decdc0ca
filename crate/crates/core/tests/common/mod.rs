//! Oracles shared by the integration tests. They use only the raw graph,
//! arc list and label vector, never the library's verifier.

#![allow(dead_code)]

use std::collections::HashSet;

use dmagic::graph::{self, UndirectedGraph};
use dmagic::verify::MagicCertificate;

/// Weights mod N computed straight from arcs: `u -> v` adds `l(u)` at `v`
/// and subtracts `l(v)` at `u`.
pub fn weights(n: usize, arcs: &[(usize, usize)], labels: &[u64]) -> Vec<i64> {
    let m = n as i64;
    let mut w = vec![0i64; n];
    for &(t, h) in arcs {
        w[h] += labels[t] as i64;
        w[t] -= labels[h] as i64;
    }
    w.into_iter().map(|x| x.rem_euclid(m)).collect()
}

/// The common weight if the arcs and labels form a magic labeling of `g`.
pub fn magic_constant(g: &UndirectedGraph, arcs: &[(usize, usize)], labels: &[u64]) -> Option<u64> {
    let n = g.vertex_count();
    let mut sorted = labels.to_vec();
    sorted.sort_unstable();
    if sorted != (0..n as u64).collect::<Vec<_>>() || arcs.len() != g.edge_count() {
        return None;
    }
    let mut seen = HashSet::new();
    for &(t, h) in arcs {
        if !g.has_edge(t, h) || !seen.insert((t.min(h), t.max(h))) {
            return None;
        }
    }
    let w = weights(n, arcs, labels);
    w.iter().all(|&x| x == w[0]).then_some(w[0] as u64)
}

/// Independent check of a certificate's recorded μ.
pub fn certificate_ok(c: &MagicCertificate) -> bool {
    let arcs: Vec<_> = c.orientation().arcs(c.graph()).collect();
    magic_constant(c.graph(), &arcs, c.labeling().as_slice()) == Some(c.mu().value())
}

/// Ordered partitions of `{±1..±N/2}` into zero-sum parts of the given
/// sizes, each part sorted.
pub fn all_zero_sum_partitions(total: usize, sizes: &[usize]) -> HashSet<Vec<Vec<i64>>> {
    let half = (total / 2) as i64;
    let values: Vec<i64> = (-half..=half).filter(|&v| v != 0).collect();
    let mut out = HashSet::new();
    let mut used = vec![false; values.len()];
    let mut parts = Vec::new();
    fill(&values, sizes, &mut used, &mut parts, &mut out);
    out
}

fn fill(
    values: &[i64],
    sizes: &[usize],
    used: &mut [bool],
    parts: &mut Vec<Vec<i64>>,
    out: &mut HashSet<Vec<Vec<i64>>>,
) {
    let Some(&size) = sizes.get(parts.len()) else {
        if used.iter().all(|&u| u) {
            out.insert(parts.clone());
        }
        return;
    };
    let free: Vec<usize> = (0..values.len()).filter(|&i| !used[i]).collect();
    let mut pick = Vec::new();
    subsets(&free, size, 0, &mut pick, &mut |chosen: &[usize]| {
        if chosen.iter().map(|&i| values[i]).sum::<i64>() != 0 {
            return;
        }
        for &i in chosen {
            used[i] = true;
        }
        let mut part: Vec<i64> = chosen.iter().map(|&i| values[i]).collect();
        part.sort_unstable();
        parts.push(part);
        fill(values, sizes, used, parts, out);
        parts.pop();
        for &i in chosen {
            used[i] = false;
        }
    });
}

fn subsets(pool: &[usize], k: usize, start: usize, pick: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
    if pick.len() == k {
        f(pick);
        return;
    }
    for i in start..pool.len() {
        if pool.len() - i < k - pick.len() {
            break;
        }
        pick.push(pool[i]);
        subsets(pool, k, i + 1, pick, f);
        pick.pop();
    }
}

/// Checks a partition directly: sizes, disjoint exact cover, zero sums.
pub fn partition_ok(total: usize, sizes: &[usize], parts: &[Vec<i64>]) -> Result<(), String> {
    if parts.len() != sizes.len() {
        return Err(format!("{} parts for {} sizes", parts.len(), sizes.len()));
    }
    let half = (total / 2) as i64;
    let mut seen = HashSet::new();
    for (i, (p, &s)) in parts.iter().zip(sizes).enumerate() {
        if p.len() != s {
            return Err(format!("part {i} has size {}, expected {s}", p.len()));
        }
        if p.iter().sum::<i64>() != 0 {
            return Err(format!("part {i} sums to {}", p.iter().sum::<i64>()));
        }
        for &v in p {
            if v == 0 || v.abs() > half || !seen.insert(v) {
                return Err(format!("bad or repeated value {v}"));
            }
        }
    }
    if seen.len() != total {
        return Err(format!("covers {} of {total} values", seen.len()));
    }
    Ok(())
}

/// Every ordered composition of `total` into parts of size at least 2.
pub fn compositions(total: usize) -> Vec<Vec<usize>> {
    if total == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 2..=total {
        if total - first == 1 {
            continue;
        }
        for mut rest in compositions(total - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Integer partitions of `n` as non-increasing part lists.
pub fn integer_partitions(n: usize, max: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in (1..=max.min(n)).rev() {
        for mut rest in integer_partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Every labeled simple graph on `n` vertices.
pub fn all_graphs(n: usize) -> Vec<UndirectedGraph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u64..1 << pairs.len())
        .map(|mask| {
            let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
            UndirectedGraph::new(n, edges).unwrap()
        })
        .collect()
}

/// Named graphs from the families the library deals with, up to `max_order`.
pub fn family_graphs(max_order: usize) -> Vec<(String, UndirectedGraph)> {
    let mut out = Vec::new();
    for n in 1..=max_order {
        out.push((format!("K{n}"), graph::complete(n)));
        for sizes in integer_partitions(n, n) {
            if sizes.len() >= 2 && sizes.len() < n {
                let g = graph::complete_multipartite(&sizes).unwrap();
                out.push((format!("K{sizes:?}"), g));
            }
        }
    }
    for n in 3..=max_order / 2 {
        out.push((format!("prism({n})"), graph::prism(n).unwrap()));
    }
    out
}
