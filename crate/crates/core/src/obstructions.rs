//! Analytic nonexistence arguments.
//!
//! Two necessary conditions are checked:
//!
//! * **Odd-regular counting**: an `r`-regular graph with `r` odd and order
//!   `N ≡ 2 (mod 4)` has no orientable `Z_N`-distance magic labeling.
//! * **Parity feasibility**: for even `N`, reducing `w(x) = μ` mod 2 removes
//!   the orientation (`+` and `-` agree mod 2), leaving
//!   `Σ_{y ~ x} p(y) = c` for the parity vector `p` of the labels. Since
//!   `0..N` contains exactly `N/2` odd values, a labeling needs a solution
//!   `p` of weight `N/2` for `c = 0` or `c = 1`. The affine solution space is
//!   found by GF(2) elimination and its points are enumerated, up to a cap on
//!   the kernel dimension.

use std::fmt;
use std::time::Duration;

use crate::gf2::{self, AffineSpace, BitVec};
use crate::graph::{self, UndirectedGraph};
use crate::search::{self, SearchConfig, Verdict};

/// Largest kernel dimension whose coset is enumerated (2^24 points).
pub const MAX_KERNEL_DIMENSION: usize = 24;

/// Named obstruction, as reported by decisions and tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Obstruction {
    /// Odd-regular graph of order ≡ 2 (mod 4).
    OddRegular,
    /// Complete graph of even order.
    EvenComplete,
    /// No balanced parity vector solves the mod-2 weight system.
    Parity,
}

impl Obstruction {
    pub fn token(self) -> &'static str {
        match self {
            Obstruction::OddRegular => "theorem1",
            Obstruction::EvenComplete => "theorem2",
            Obstruction::Parity => "parity",
        }
    }
}

impl fmt::Display for Obstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

/// Outcome of the parity system for one target constant `c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TargetParity {
    /// The system `A p = c·1` has no solution at all.
    Unsolvable,
    /// A solution with exactly `N/2` ones exists.
    Feasible { kernel_dim: usize, witness: Vec<bool> },
    /// Solutions exist but none has `N/2` ones.
    Infeasible { kernel_dim: usize },
    /// Kernel too large to enumerate.
    Inconclusive { kernel_dim: usize },
}

impl TargetParity {
    fn rules_out(&self) -> bool {
        matches!(self, TargetParity::Unsolvable | TargetParity::Infeasible { .. })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParityWitnessSpace {
    pub order: usize,
    /// Indexed by the target constant `c`.
    pub targets: [TargetParity; 2],
}

impl ParityWitnessSpace {
    pub fn is_infeasible(&self) -> bool {
        self.targets.iter().all(TargetParity::rules_out)
    }

    pub fn is_inconclusive(&self) -> bool {
        !self.is_infeasible()
            && !self
                .targets
                .iter()
                .any(|t| matches!(t, TargetParity::Feasible { .. }))
    }
}

impl fmt::Display for ParityWitnessSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (c, t) in self.targets.iter().enumerate() {
            if c > 0 {
                f.write_str("; ")?;
            }
            match t {
                TargetParity::Unsolvable => write!(f, "c={c}: unsolvable")?,
                TargetParity::Feasible { kernel_dim, .. } => {
                    write!(f, "c={c}: feasible (kernel dim {kernel_dim})")?
                }
                TargetParity::Infeasible { kernel_dim } => {
                    write!(f, "c={c}: no balanced solution (kernel dim {kernel_dim})")?
                }
                TargetParity::Inconclusive { kernel_dim } => {
                    write!(f, "c={c}: inconclusive (kernel dim {kernel_dim})")?
                }
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NonexistenceReason {
    OddRegular { degree: usize, order: usize },
    ParityInfeasible(ParityWitnessSpace),
    ExhaustedSearch { nodes: u64, elapsed: Duration },
}

/// A machine-checkable reason why a graph has no orientable magic labeling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonexistenceCertificate {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub reason: NonexistenceReason,
}

impl NonexistenceCertificate {
    fn new(g: &UndirectedGraph, reason: NonexistenceReason) -> Self {
        NonexistenceCertificate {
            vertex_count: g.vertex_count(),
            edge_count: g.edge_count(),
            reason,
        }
    }

    pub fn method(&self) -> &'static str {
        match self.reason {
            NonexistenceReason::OddRegular { .. } => Obstruction::OddRegular.token(),
            NonexistenceReason::ParityInfeasible(_) => Obstruction::Parity.token(),
            NonexistenceReason::ExhaustedSearch { .. } => "search",
        }
    }
}

impl fmt::Display for NonexistenceCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "not-magic {} graph {} {}: ",
            self.method(),
            self.vertex_count,
            self.edge_count
        )?;
        match &self.reason {
            NonexistenceReason::OddRegular { degree, order } => {
                write!(f, "{degree}-regular with odd degree, order {order} ≡ 2 (mod 4)")
            }
            NonexistenceReason::ParityInfeasible(space) => write!(f, "{space}"),
            NonexistenceReason::ExhaustedSearch { nodes, elapsed } => {
                write!(f, "search exhausted after {nodes} nodes in {:.3}s", elapsed.as_secs_f64())
            }
        }
    }
}

/// Certificate iff `g` is `r`-regular with `r` odd and order ≡ 2 (mod 4).
pub fn odd_regular_check(g: &UndirectedGraph) -> Option<NonexistenceCertificate> {
    let order = g.vertex_count();
    let degree = g.regularity()?;
    (degree % 2 == 1 && order % 4 == 2)
        .then(|| NonexistenceCertificate::new(g, NonexistenceReason::OddRegular { degree, order }))
}

fn adjacency_rows(g: &UndirectedGraph) -> Vec<BitVec> {
    (0..g.vertex_count())
        .map(|v| {
            let mut row = BitVec::zeros(g.vertex_count());
            for u in g.neighbors(v) {
                row.set(u, true);
            }
            row
        })
        .collect()
}

/// All parity vectors `p` with `Σ_{y ~ x} p(y) = target` for every `x`.
/// `None` when the system is unsolvable.
pub fn parity_space(g: &UndirectedGraph, target: bool) -> Option<AffineSpace> {
    let n = g.vertex_count();
    gf2::solve(&adjacency_rows(g), &vec![target; n], n)
}

fn target_parity(g: &UndirectedGraph, target: bool, max_kernel_dim: usize) -> TargetParity {
    let Some(space) = parity_space(g, target) else {
        return TargetParity::Unsolvable;
    };
    let kernel_dim = space.dimension();
    if kernel_dim > max_kernel_dim {
        return TargetParity::Inconclusive { kernel_dim };
    }
    let half = g.vertex_count() / 2;
    let mut witness = None;
    space.for_each_point(|p| {
        if p.count_ones() == half {
            witness = Some(p.to_bools());
            false
        } else {
            true
        }
    });
    match witness {
        Some(witness) => TargetParity::Feasible { kernel_dim, witness },
        None => TargetParity::Infeasible { kernel_dim },
    }
}

/// Parity feasibility for graphs of even order; `None` for odd order, where
/// residues mod N carry no parity.
pub fn parity_feasibility(g: &UndirectedGraph) -> Option<ParityWitnessSpace> {
    parity_feasibility_with_cap(g, MAX_KERNEL_DIMENSION)
}

pub fn parity_feasibility_with_cap(
    g: &UndirectedGraph,
    max_kernel_dim: usize,
) -> Option<ParityWitnessSpace> {
    let order = g.vertex_count();
    if order == 0 || order % 2 == 1 {
        return None;
    }
    Some(ParityWitnessSpace {
        order,
        targets: [
            target_parity(g, false, max_kernel_dim),
            target_parity(g, true, max_kernel_dim),
        ],
    })
}

/// Nonexistence certificate from parity alone, if the system rules out both
/// targets.
pub fn parity_check(g: &UndirectedGraph) -> Option<NonexistenceCertificate> {
    let space = parity_feasibility(g)?;
    space
        .is_infeasible()
        .then(|| NonexistenceCertificate::new(g, NonexistenceReason::ParityInfeasible(space)))
}

/// Every balanced parity vector (exactly `N/2` ones) with its target bit, as
/// bit masks. `None` if the order is odd or above 64, the kernel dimension
/// exceeds `max_kernel_dim`, or more than `max_count` vectors exist.
pub fn balanced_parity_masks(
    g: &UndirectedGraph,
    max_kernel_dim: usize,
    max_count: usize,
) -> Option<Vec<(u64, bool)>> {
    let n = g.vertex_count();
    if n == 0 || n % 2 == 1 || n > 64 {
        return None;
    }
    let mut out = Vec::new();
    for target in [false, true] {
        let Some(space) = parity_space(g, target) else {
            continue;
        };
        if space.dimension() > max_kernel_dim {
            return None;
        }
        let complete = space.for_each_point(|p| {
            if p.count_ones() == n / 2 {
                out.push((p.low_word(), target));
            }
            out.len() <= max_count
        });
        if !complete {
            return None;
        }
    }
    Some(out)
}

/// Runs the analytic checks in order: odd-regular counting, then parity.
pub fn obstruct(g: &UndirectedGraph) -> ObstructionOutcome {
    if let Some(cert) = odd_regular_check(g) {
        return ObstructionOutcome::Certified(cert);
    }
    match parity_feasibility(g) {
        Some(space) if space.is_infeasible() => ObstructionOutcome::Certified(
            NonexistenceCertificate::new(g, NonexistenceReason::ParityInfeasible(space)),
        ),
        _ => ObstructionOutcome::Inconclusive,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ObstructionOutcome {
    Certified(NonexistenceCertificate),
    Inconclusive,
}

/// The prism's two colour classes for even `n`, ordered so that `u_i` is
/// adjacent to `w_{i-1}`, `w_i` and `w_{i+1}` (indices mod n): walking the
/// cycle, `u_i` and `w_i` alternate between the two copies of `C_n`.
pub fn prism_sides(n: usize) -> Option<(Vec<usize>, Vec<usize>)> {
    if n < 4 || n % 2 == 1 {
        return None;
    }
    let u = (0..n).map(|i| (i % 2) * n + i).collect();
    let w = (0..n).map(|i| ((i + 1) % 2) * n + i).collect();
    Some((u, w))
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Unproven {
    #[error("prism needs n >= 3")]
    BadOrder,
    #[error("no analytic obstruction applies and the search did not finish: {0}")]
    Open(String),
    #[error("search found a witness, contradicting the obstruction")]
    Contradiction,
}

/// Nonexistence for `P_2 □ C_n`: odd `n` by the counting argument, even `n`
/// by parity. For `n <= 5` the parity certificate is confirmed by an
/// exhaustive search that does not use parity pruning.
pub fn prism_nonexistence(n: usize) -> Result<NonexistenceCertificate, Unproven> {
    let g = graph::prism(n).map_err(|_| Unproven::BadOrder)?;
    if let Some(cert) = odd_regular_check(&g) {
        return Ok(cert);
    }
    let independent = SearchConfig {
        parity_pruning: false,
        time_budget: Duration::from_secs(600),
        ..SearchConfig::default()
    };
    let parity = parity_check(&g);
    if n > 5 {
        if let Some(cert) = parity {
            return Ok(cert);
        }
    }
    let outcome = search::decide_existence(&g, &independent).map_err(|e| Unproven::Open(e.to_string()))?;
    match (parity, outcome.verdict) {
        (_, Verdict::Witness(_)) => Err(Unproven::Contradiction),
        (Some(cert), Verdict::ExhaustedNoSolution) => Ok(cert),
        (None, Verdict::ExhaustedNoSolution) => Ok(NonexistenceCertificate::new(
            &g,
            NonexistenceReason::ExhaustedSearch {
                nodes: outcome.stats.nodes,
                elapsed: outcome.stats.elapsed,
            },
        )),
        (_, Verdict::Inconclusive) => Err(Unproven::Open("search budget exhausted".into())),
    }
}
