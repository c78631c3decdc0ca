//! Backtracking decision procedure for small graphs.
//!
//! Vertices are labeled in maximum-adjacency order; each edge is oriented
//! right after its second endpoint receives a label. μ is taken from the
//! first vertex whose incident edges are all oriented. Branches are cut when
//!
//! * a completed vertex has weight other than μ,
//! * a vertex with a single undecided edge needs a label that is gone, or
//! * no balanced parity vector of the mod-2 weight system is consistent with
//!   the labels placed so far.
//!
//! Symmetry reductions:
//!
//! * `fix_first_arc`: reversing every arc maps solutions to solutions
//!   (μ to −μ), so the first oriented edge keeps its forward direction.
//! * `twin_ordering`: vertices with equal open or equal closed
//!   neighbourhoods are interchangeable, so labels increase with vertex id
//!   inside each such class.
//! * `unit_scaling`: multiplying every label by a unit of `Z_N` maps
//!   solutions to solutions (μ to aμ), so one vertex that has no twin only
//!   takes labels in `{0} ∪ {d : d | N}`.

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{Orientation, UndirectedGraph};
use crate::obstructions;
use crate::verify::{self, Labeling, MagicCertificate};

const CHECK_INTERVAL: u64 = 4096;
const PARITY_MAX_KERNEL: usize = 16;
const PARITY_MAX_MASKS: usize = 1 << 16;
/// Labels and masks are `u64` bitsets.
pub const MAX_ORDER: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    pub node_budget: u64,
    pub time_budget: Duration,
    pub threads: usize,
    pub fix_first_arc: bool,
    pub unit_scaling: bool,
    pub twin_ordering: bool,
    pub parity_pruning: bool,
    /// Tie-breaking among equally ranked vertices; 0 keeps vertex-id order.
    pub seed: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            node_budget: 50_000_000_000,
            time_budget: Duration::from_secs(600),
            threads: 1,
            fix_first_arc: true,
            unit_scaling: false,
            twin_ordering: true,
            parity_pruning: true,
            seed: 0,
        }
    }
}

impl SearchConfig {
    /// No symmetry reductions. Pruning rules stay on.
    pub fn unreduced() -> Self {
        SearchConfig {
            fix_first_arc: false,
            unit_scaling: false,
            twin_ordering: false,
            ..SearchConfig::default()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("graph has {0} vertices; search supports at most {MAX_ORDER}")]
    TooLarge(usize),
    #[error("invalid search configuration: {0}")]
    Config(&'static str),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Witness(MagicCertificate),
    ExhaustedNoSolution,
    Inconclusive,
}

impl Verdict {
    pub fn name(&self) -> &'static str {
        match self {
            Verdict::Witness(_) => "witness",
            Verdict::ExhaustedNoSolution => "exhausted-no-solution",
            Verdict::Inconclusive => "inconclusive",
        }
    }

    pub fn witness(&self) -> Option<&MagicCertificate> {
        match self {
            Verdict::Witness(c) => Some(c),
            _ => None,
        }
    }

    /// Verdict with the witness dropped, for outcome-level comparisons.
    pub fn kind(&self) -> VerdictKind {
        match self {
            Verdict::Witness(_) => VerdictKind::Witness,
            Verdict::ExhaustedNoSolution => VerdictKind::ExhaustedNoSolution,
            Verdict::Inconclusive => VerdictKind::Inconclusive,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VerdictKind {
    Witness,
    ExhaustedNoSolution,
    Inconclusive,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct PruneCounts {
    pub weight_mismatch: u64,
    pub residual: u64,
    pub parity: u64,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes: u64,
    pub prunes: PruneCounts,
    pub elapsed: Duration,
}

impl SearchStats {
    fn absorb(&mut self, other: &Counters) {
        self.nodes += other.nodes;
        self.prunes.weight_mismatch += other.prunes.weight_mismatch;
        self.prunes.residual += other.prunes.residual;
        self.prunes.parity += other.prunes.parity;
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub verdict: Verdict,
    pub stats: SearchStats,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Step {
    Label(usize),
    /// Edge index with its stored endpoints; bit 0 is `a -> b`.
    Orient { edge: usize, a: usize, b: usize },
}

const NONE: u64 = u64::MAX;

/// Everything fixed before the walk starts.
struct Plan<'g> {
    graph: &'g UndirectedGraph,
    order: u64,
    steps: Vec<Step>,
    first_orient: Option<usize>,
    twins: Vec<Vec<usize>>,
    pivot: Option<(usize, u64)>,
    parity: Option<Vec<(u64, bool)>>,
    fixed_mu: Option<u64>,
}

/// Vertex order: most edges into the placed set first, then higher degree,
/// then seed priority.
fn vertex_order(g: &UndirectedGraph, seed: u64) -> Vec<usize> {
    let n = g.vertex_count();
    let mut priority: Vec<usize> = (0..n).collect();
    if seed != 0 {
        priority.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    }
    let mut rank = vec![0; n];
    for (r, &v) in priority.iter().enumerate() {
        rank[v] = r;
    }
    let mut placed = vec![false; n];
    let mut links = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !placed[v])
            .min_by_key(|&v| (usize::MAX - links[v], usize::MAX - g.degree(v), rank[v]))
            .expect("unplaced vertex remains");
        placed[v] = true;
        order.push(v);
        for u in g.neighbors(v) {
            links[u] += 1;
        }
    }
    order
}

/// Classes of vertices sharing their open or their closed neighbourhood.
/// Neighbourhoods are `u64` masks, so the order must be at most 64.
pub fn twin_classes(g: &UndirectedGraph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let open: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).fold(0u64, |m, u| m | 1 << u))
        .collect();
    let mut class = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for v in 0..n {
        if class[v] != usize::MAX {
            continue;
        }
        // a vertex cannot be both a true and a false twin of the same vertex,
        // and each relation is an equivalence, so take whichever applies
        let same_open: Vec<usize> = (v..n).filter(|&u| open[u] == open[v]).collect();
        let closed = |x: usize| open[x] | 1 << x;
        let same_closed: Vec<usize> = (v..n).filter(|&u| closed(u) == closed(v)).collect();
        let members = if same_closed.len() > same_open.len() {
            same_closed
        } else {
            same_open
        };
        let members: Vec<usize> = members.into_iter().filter(|&u| class[u] == usize::MAX).collect();
        for &u in &members {
            class[u] = classes.len();
        }
        classes.push(members);
    }
    classes
}

fn divisor_mask(order: u64) -> u64 {
    (1..order).filter(|d| order % d == 0).fold(1u64, |m, d| m | 1 << d)
}

impl<'g> Plan<'g> {
    fn new(graph: &'g UndirectedGraph, config: &SearchConfig) -> Self {
        let n = graph.vertex_count();
        let order_list = vertex_order(graph, config.seed);
        let mut position = vec![0; n];
        for (i, &v) in order_list.iter().enumerate() {
            position[v] = i;
        }
        let mut steps = Vec::with_capacity(n + graph.edge_count());
        let mut first_orient = None;
        for &v in &order_list {
            steps.push(Step::Label(v));
            let mut back: Vec<(usize, usize)> = graph
                .incident(v)
                .iter()
                .copied()
                .filter(|&(u, _)| position[u] < position[v])
                .collect();
            back.sort_by_key(|&(u, _)| position[u]);
            for (_, edge) in back {
                let (a, b) = graph.edges()[edge];
                first_orient.get_or_insert(steps.len());
                steps.push(Step::Orient { edge, a, b });
            }
        }

        let mut twins = vec![Vec::new(); n];
        let mut singletons = vec![true; n];
        if config.twin_ordering {
            for class in twin_classes(graph) {
                for &v in &class {
                    singletons[v] = class.len() == 1;
                    twins[v] = class.iter().copied().filter(|&u| u != v).collect();
                }
            }
        }
        let pivot = config
            .unit_scaling
            .then(|| order_list.iter().copied().find(|&v| singletons[v]))
            .flatten()
            .map(|v| (v, divisor_mask(n as u64)));

        let parity = if config.parity_pruning {
            obstructions::balanced_parity_masks(graph, PARITY_MAX_KERNEL, PARITY_MAX_MASKS)
        } else {
            None
        };
        let fixed_mu = (0..n).any(|v| graph.degree(v) == 0).then_some(0);

        Plan {
            graph,
            order: n as u64,
            steps,
            first_orient: first_orient.filter(|_| config.fix_first_arc),
            twins,
            pivot,
            parity,
            fixed_mu,
        }
    }
}

#[derive(Debug, Clone, Default)]
struct Counters {
    nodes: u64,
    prunes: PruneCounts,
}

struct Shared {
    start: Instant,
    node_budget: u64,
    time_budget: Duration,
    /// Nodes a worker expands between budget checks.
    interval: u64,
    nodes: AtomicU64,
    stop: AtomicBool,
    budget_hit: AtomicBool,
}

impl Shared {
    fn stopped(&self) -> bool {
        self.stop.load(Ordering::Relaxed)
    }

    fn report(&self, delta: u64) {
        let total = self.nodes.fetch_add(delta, Ordering::Relaxed) + delta;
        if total > self.node_budget || self.start.elapsed() > self.time_budget {
            self.budget_hit.store(true, Ordering::Relaxed);
            self.stop.store(true, Ordering::Relaxed);
        }
    }
}

enum Flow {
    Continue,
    Found,
    Stop,
}

/// Mutable partial assignment owned by one worker.
struct State<'p, 'g> {
    plan: &'p Plan<'g>,
    shared: &'p Shared,
    labels: Vec<u64>,
    used: u64,
    weights: Vec<u64>,
    undecided: Vec<u32>,
    decided: Vec<bool>,
    reversed: Vec<bool>,
    mu: Option<u64>,
    masks: Vec<(u64, bool)>,
    live: usize,
    counters: Counters,
    unreported: u64,
}

/// What an applied step must restore.
struct Undo {
    live: usize,
    mu_was_unset: bool,
}

impl<'p, 'g> State<'p, 'g> {
    fn new(plan: &'p Plan<'g>, shared: &'p Shared) -> Self {
        let g = plan.graph;
        let n = g.vertex_count();
        let masks = plan.parity.clone().unwrap_or_default();
        let live = masks.len();
        let mut state = State {
            plan,
            shared,
            labels: vec![NONE; n],
            used: 0,
            weights: vec![0; n],
            undecided: (0..n).map(|v| g.degree(v) as u32).collect(),
            decided: vec![false; g.edge_count()],
            reversed: vec![false; g.edge_count()],
            mu: None,
            masks,
            live,
            counters: Counters::default(),
            unreported: 0,
        };
        if let Some(mu) = plan.fixed_mu {
            state.mu = Some(mu);
            state.filter_parity(|&(_, c)| c == (mu & 1 == 1));
        }
        state
    }

    fn parity_active(&self) -> bool {
        self.plan.parity.is_some()
    }

    fn filter_parity(&mut self, keep: impl Fn(&(u64, bool)) -> bool) {
        if !self.parity_active() {
            return;
        }
        let mut k = 0;
        for i in 0..self.live {
            if keep(&self.masks[i]) {
                self.masks.swap(k, i);
                k += 1;
            }
        }
        self.live = k;
    }

    fn choices(&self, step: usize) -> Vec<u64> {
        match self.plan.steps[step] {
            Step::Label(v) => {
                let mut allowed = !self.used & mask_below(self.plan.order);
                if let Some((p, m)) = self.plan.pivot {
                    if p == v {
                        allowed &= m;
                    }
                }
                let mut lo = 0u64;
                let mut hi = self.plan.order;
                for &u in &self.plan.twins[v] {
                    let l = self.labels[u];
                    if l == NONE {
                        continue;
                    }
                    if u < v {
                        lo = lo.max(l + 1);
                    } else {
                        hi = hi.min(l);
                    }
                }
                (lo..hi).filter(|&l| allowed >> l & 1 == 1).collect()
            }
            Step::Orient { .. } if self.plan.first_orient == Some(step) => vec![0],
            Step::Orient { .. } => vec![0, 1],
        }
    }

    /// Applies `choice` at `step`. Returns the undo record and whether the
    /// resulting state survives pruning.
    fn apply(&mut self, step: usize, choice: u64) -> (Undo, bool) {
        let n = self.plan.order;
        let mut undo = Undo {
            live: self.live,
            mu_was_unset: false,
        };
        match self.plan.steps[step] {
            Step::Label(v) => {
                self.labels[v] = choice;
                self.used |= 1 << choice;
                let bit = choice & 1;
                self.filter_parity(|&(m, _)| m >> v & 1 == bit);
            }
            Step::Orient { edge, a, b } => {
                let (tail, head) = if choice == 1 { (b, a) } else { (a, b) };
                self.reversed[edge] = choice == 1;
                self.decided[edge] = true;
                self.weights[head] = (self.weights[head] + self.labels[tail]) % n;
                self.weights[tail] = (self.weights[tail] + n - self.labels[head]) % n;
                self.undecided[a] -= 1;
                self.undecided[b] -= 1;
                for x in [a, b] {
                    if self.undecided[x] != 0 {
                        continue;
                    }
                    match self.mu {
                        None => {
                            let mu = self.weights[x];
                            self.mu = Some(mu);
                            undo.mu_was_unset = true;
                            self.filter_parity(|&(_, c)| c == (mu & 1 == 1));
                        }
                        Some(mu) if mu != self.weights[x] => {
                            self.counters.prunes.weight_mismatch += 1;
                            return (undo, false);
                        }
                        Some(_) => {}
                    }
                }
            }
        }
        if self.parity_active() && self.live == 0 {
            self.counters.prunes.parity += 1;
            return (undo, false);
        }
        if !self.residual_ok() {
            self.counters.prunes.residual += 1;
            return (undo, false);
        }
        (undo, true)
    }

    fn revert(&mut self, step: usize, choice: u64, undo: Undo) {
        let n = self.plan.order;
        self.live = undo.live;
        if undo.mu_was_unset {
            self.mu = None;
        }
        match self.plan.steps[step] {
            Step::Label(v) => {
                self.labels[v] = NONE;
                self.used &= !(1 << choice);
            }
            Step::Orient { edge, a, b } => {
                let (tail, head) = if choice == 1 { (b, a) } else { (a, b) };
                self.decided[edge] = false;
                self.weights[head] = (self.weights[head] + n - self.labels[tail]) % n;
                self.weights[tail] = (self.weights[tail] + self.labels[head]) % n;
                self.undecided[a] += 1;
                self.undecided[b] += 1;
            }
        }
    }

    /// A vertex with one undecided edge to `y` ends at `W ± l(y)`, so `l(y)`
    /// must be `±(μ − W)`.
    fn residual_ok(&self) -> bool {
        let Some(mu) = self.mu else {
            return true;
        };
        let n = self.plan.order;
        let g = self.plan.graph;
        for x in 0..g.vertex_count() {
            if self.undecided[x] != 1 {
                continue;
            }
            let &(y, _) = g
                .incident(x)
                .iter()
                .find(|&&(_, e)| !self.decided[e])
                .expect("one undecided edge");
            let need = (mu + n - self.weights[x]) % n;
            let other = (n - need) % n;
            let ok = match self.labels[y] {
                NONE => self.used >> need & 1 == 0 || self.used >> other & 1 == 0,
                l => l == need || l == other,
            };
            if !ok {
                return false;
            }
        }
        true
    }

    fn tick(&mut self) -> bool {
        self.counters.nodes += 1;
        self.unreported += 1;
        if self.unreported >= self.shared.interval {
            self.shared.report(self.unreported);
            self.unreported = 0;
        }
        !self.shared.stopped()
    }

    fn dfs(&mut self, step: usize) -> Flow {
        if step == self.plan.steps.len() {
            return Flow::Found;
        }
        for choice in self.choices(step) {
            if !self.tick() {
                return Flow::Stop;
            }
            let (undo, alive) = self.apply(step, choice);
            if alive {
                match self.dfs(step + 1) {
                    Flow::Continue => {}
                    other => return other,
                }
            }
            self.revert(step, choice, undo);
        }
        Flow::Continue
    }

    /// Collects every surviving assignment of the first `depth` steps.
    fn expand(&mut self, step: usize, depth: usize, path: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if step == depth || step == self.plan.steps.len() {
            out.push(path.clone());
            return;
        }
        for choice in self.choices(step) {
            self.counters.nodes += 1;
            let (undo, alive) = self.apply(step, choice);
            if alive {
                path.push(choice);
                self.expand(step + 1, depth, path, out);
                path.pop();
            }
            self.revert(step, choice, undo);
        }
    }

    fn certificate(&self) -> MagicCertificate {
        let g = self.plan.graph;
        let labeling = Labeling::new(self.labels.clone()).expect("search assigns a bijection");
        let orientation = Orientation::from_bits(self.reversed.iter().copied());
        verify::verify(g, &orientation, &labeling).expect("search witness fails verification")
    }
}

fn mask_below(n: u64) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1 << n) - 1
    }
}

/// Decides whether `graph` has an orientable `Z_N`-distance magic labeling.
///
/// `ExhaustedNoSolution` is reported only when the whole (reduced) space was
/// covered; running out of budget gives `Inconclusive`. With one thread the
/// statistics and witness are a function of the graph and configuration.
pub fn decide_existence(graph: &UndirectedGraph, config: &SearchConfig) -> Result<SearchOutcome, SearchError> {
    let n = graph.vertex_count();
    if n == 0 {
        return Err(SearchError::EmptyGraph);
    }
    if n > MAX_ORDER {
        return Err(SearchError::TooLarge(n));
    }
    if config.threads == 0 {
        return Err(SearchError::Config("threads must be positive"));
    }
    if config.node_budget == 0 || config.time_budget.is_zero() {
        return Err(SearchError::Config("budgets must be positive"));
    }

    let shared = Shared {
        start: Instant::now(),
        node_budget: config.node_budget,
        time_budget: config.time_budget,
        interval: CHECK_INTERVAL.min(config.node_budget),
        nodes: AtomicU64::new(0),
        stop: AtomicBool::new(false),
        budget_hit: AtomicBool::new(false),
    };
    let plan = Plan::new(graph, config);
    let mut stats = SearchStats::default();

    if plan.parity.as_ref().is_some_and(Vec::is_empty) {
        stats.prunes.parity = 1;
        stats.elapsed = shared.start.elapsed();
        return Ok(SearchOutcome {
            verdict: Verdict::ExhaustedNoSolution,
            stats,
        });
    }

    let witness = if config.threads == 1 {
        let mut state = State::new(&plan, &shared);
        let flow = state.dfs(0);
        stats.absorb(&state.counters);
        matches!(flow, Flow::Found).then(|| state.certificate())
    } else {
        run_parallel(&plan, &shared, config.threads, &mut stats)
    };

    stats.elapsed = shared.start.elapsed();
    let verdict = match witness {
        Some(cert) => Verdict::Witness(cert),
        None if shared.budget_hit.load(Ordering::Relaxed) => Verdict::Inconclusive,
        None => Verdict::ExhaustedNoSolution,
    };
    Ok(SearchOutcome { verdict, stats })
}

fn run_parallel(plan: &Plan<'_>, shared: &Shared, threads: usize, stats: &mut SearchStats) -> Option<MagicCertificate> {
    let mut jobs = Vec::new();
    let mut root = State::new(plan, shared);
    root.expand(0, 2.min(plan.steps.len()), &mut Vec::new(), &mut jobs);
    stats.absorb(&root.counters);

    let next = AtomicUsize::new(0);
    let per_job: Vec<Mutex<Option<Counters>>> = (0..jobs.len()).map(|_| Mutex::new(None)).collect();
    let found: Mutex<Option<(usize, MagicCertificate)>> = Mutex::new(None);

    std::thread::scope(|scope| {
        for _ in 0..threads.min(jobs.len().max(1)) {
            scope.spawn(|| {
                let mut state = State::new(plan, shared);
                loop {
                    let j = next.fetch_add(1, Ordering::Relaxed);
                    if j >= jobs.len() || shared.stopped() {
                        break;
                    }
                    let before = state.counters.clone();
                    let mut applied = Vec::new();
                    for (step, &choice) in jobs[j].iter().enumerate() {
                        let (undo, alive) = state.apply(step, choice);
                        debug_assert!(alive, "expanded prefix must survive replay");
                        applied.push((step, choice, undo));
                    }
                    if let Flow::Found = state.dfs(jobs[j].len()) {
                        let mut slot = found.lock().expect("lock");
                        if slot.as_ref().is_none_or(|(k, _)| j < *k) {
                            *slot = Some((j, state.certificate()));
                        }
                        shared.stop.store(true, Ordering::Relaxed);
                    }
                    for (step, choice, undo) in applied.into_iter().rev() {
                        state.revert(step, choice, undo);
                    }
                    let delta = Counters {
                        nodes: state.counters.nodes - before.nodes,
                        prunes: PruneCounts {
                            weight_mismatch: state.counters.prunes.weight_mismatch - before.prunes.weight_mismatch,
                            residual: state.counters.prunes.residual - before.prunes.residual,
                            parity: state.counters.prunes.parity - before.prunes.parity,
                        },
                    };
                    *per_job[j].lock().expect("lock") = Some(delta);
                }
                shared.report(state.unreported);
            });
        }
    });

    for slot in &per_job {
        if let Some(c) = slot.lock().expect("lock").as_ref() {
            stats.absorb(c);
        }
    }
    found.into_inner().expect("lock").map(|(_, c)| c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, complete_multipartite, cycle, empty, path, prism};

    fn verdict(g: &UndirectedGraph, config: &SearchConfig) -> VerdictKind {
        decide_existence(g, config).unwrap().verdict.kind()
    }

    #[test]
    fn spec_examples() {
        let c = SearchConfig::default();
        assert_eq!(verdict(&complete(4), &c), VerdictKind::ExhaustedNoSolution);
        assert_eq!(verdict(&prism(4).unwrap(), &c), VerdictKind::ExhaustedNoSolution);
        let out = decide_existence(&complete(5), &c).unwrap();
        assert!(out.verdict.witness().is_some());
        let out = decide_existence(&complete_multipartite(&[1, 2, 2]).unwrap(), &c).unwrap();
        assert!(out.verdict.witness().is_some());
    }

    #[test]
    fn trivial_graphs() {
        let c = SearchConfig::default();
        let out = decide_existence(&empty(1), &c).unwrap();
        assert_eq!(out.verdict.witness().unwrap().mu().value(), 0);
        assert_eq!(verdict(&complete(2), &c), VerdictKind::ExhaustedNoSolution);
        assert_eq!(verdict(&complete(3), &c), VerdictKind::Witness);
        assert!(decide_existence(&empty(0), &c).is_err());
    }

    #[test]
    fn isolated_vertices_force_zero() {
        // edgeless graphs: every weight is 0
        let out = decide_existence(&empty(4), &SearchConfig::default()).unwrap();
        assert_eq!(out.verdict.witness().unwrap().mu().value(), 0);
    }

    #[test]
    fn parity_pruning_cuts_prism_four() {
        let g = prism(4).unwrap();
        let on = decide_existence(&g, &SearchConfig::default()).unwrap();
        let off = decide_existence(
            &g,
            &SearchConfig {
                parity_pruning: false,
                ..SearchConfig::default()
            },
        )
        .unwrap();
        assert_eq!(on.verdict, Verdict::ExhaustedNoSolution);
        assert_eq!(off.verdict, Verdict::ExhaustedNoSolution);
        assert!(on.stats.nodes < off.stats.nodes);
        assert!(on.stats.prunes.parity > 0);
    }

    #[test]
    fn parity_pruning_filters_feasible_graphs_too() {
        // C_6 passes the parity test, so the masks only narrow the search
        let g = cycle(6).unwrap();
        let on = decide_existence(&g, &SearchConfig::default()).unwrap();
        let off = decide_existence(
            &g,
            &SearchConfig {
                parity_pruning: false,
                ..SearchConfig::default()
            },
        )
        .unwrap();
        assert_eq!(on.verdict.kind(), off.verdict.kind());
        assert!(on.stats.nodes <= off.stats.nodes);
    }

    #[test]
    fn deterministic_with_one_thread() {
        let g = complete_multipartite(&[1, 2, 4]).unwrap();
        for seed in [0, 7] {
            let c = SearchConfig {
                seed,
                ..SearchConfig::default()
            };
            let a = decide_existence(&g, &c).unwrap();
            let b = decide_existence(&g, &c).unwrap();
            assert_eq!(a.stats.nodes, b.stats.nodes);
            assert_eq!(a.stats.prunes, b.stats.prunes);
            assert_eq!(
                a.verdict.witness().unwrap().to_text(),
                b.verdict.witness().unwrap().to_text()
            );
        }
    }

    #[test]
    fn node_budget_gives_inconclusive() {
        let c = SearchConfig {
            node_budget: 10,
            parity_pruning: false,
            twin_ordering: false,
            ..SearchConfig::default()
        };
        assert_eq!(verdict(&complete(6), &c), VerdictKind::Inconclusive);
    }

    #[test]
    fn threads_agree_with_single_worker() {
        let graphs = [
            complete(5),
            complete(4),
            prism(4).unwrap(),
            complete_multipartite(&[1, 2, 2]).unwrap(),
            cycle(5).unwrap(),
            path(4),
        ];
        for g in &graphs {
            let one = verdict(g, &SearchConfig::default());
            let many = verdict(
                g,
                &SearchConfig {
                    threads: 4,
                    ..SearchConfig::default()
                },
            );
            assert_eq!(one, many, "{}", g.to_text());
        }
    }

    #[test]
    fn twin_classes_of_multipartite_graph() {
        let g = complete_multipartite(&[1, 2, 2]).unwrap();
        let mut classes = twin_classes(&g);
        classes.sort();
        assert_eq!(classes, vec![vec![0], vec![1, 2], vec![3, 4]]);
        assert_eq!(twin_classes(&complete(4)), vec![vec![0, 1, 2, 3]]);
        assert_eq!(twin_classes(&cycle(5).unwrap()).len(), 5);
    }

    #[test]
    fn unit_scaling_keeps_verdicts() {
        let c = SearchConfig {
            unit_scaling: true,
            ..SearchConfig::default()
        };
        for g in [complete(5), cycle(6).unwrap(), prism(3).unwrap(), path(5)] {
            assert_eq!(verdict(&g, &c), verdict(&g, &SearchConfig::unreduced()));
        }
    }
}
