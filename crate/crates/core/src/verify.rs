//! Ground truth for the magic property.
//!
//! The weight of `x` is the sum of the labels of its in-neighbours minus the
//! sum of the labels of its out-neighbours: an arc `u -> v` adds `l(u)` to
//! `w(v)` and subtracts `l(v)` from `w(u)`. Every μ in this crate uses this
//! sign convention; certificates record it in their header comment.

use std::fmt::{self, Write as _};

use thiserror::Error;

use crate::graph::{GraphError, Orientation, UndirectedGraph};
use crate::group::{self, GroupElement};

/// Header comment naming the sign convention of a certificate's μ.
pub const CONVENTION_LINE: &str = "# weight = in-neighbour labels - out-neighbour labels";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("labeling has modulus {labeling} but the graph has {graph} vertices")]
    OrderMismatch { graph: usize, labeling: u64 },
    #[error("orientation covers {orientation} edges but the graph has {graph}")]
    EdgeCountMismatch { graph: usize, orientation: usize },
    #[error("not a labeling: {0}")]
    NotALabeling(String),
    #[error("vertex {0} does not exist")]
    NoSuchVertex(usize),
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error(transparent)]
    Violation(#[from] Violation),
}

/// The lowest-indexed vertex whose weight differs from `w(0)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("vertex {vertex} has weight {weight}, expected {expected}")]
pub struct Violation {
    pub vertex: usize,
    pub weight: u64,
    pub expected: u64,
}

/// A bijection from vertices onto `Z_N`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Labeling {
    modulus: u64,
    labels: Vec<u64>,
}

impl Labeling {
    /// Labels are reduced modulo the number of vertices; the result must hit
    /// every residue exactly once.
    pub fn new(labels: Vec<u64>) -> Result<Self, VerifyError> {
        let n = labels.len();
        if n == 0 {
            return Err(VerifyError::EmptyGraph);
        }
        let mut seen = vec![false; n];
        for (v, &l) in labels.iter().enumerate() {
            if l >= n as u64 {
                return Err(VerifyError::NotALabeling(format!(
                    "vertex {v} has label {l}, outside 0..{n}"
                )));
            }
            if std::mem::replace(&mut seen[l as usize], true) {
                return Err(VerifyError::NotALabeling(format!("label {l} used twice")));
            }
        }
        Ok(Labeling {
            modulus: n as u64,
            labels,
        })
    }

    pub fn identity(n: usize) -> Self {
        Labeling {
            modulus: n as u64,
            labels: (0..n as u64).collect(),
        }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn label(&self, v: usize) -> GroupElement {
        GroupElement::new(self.labels[v], self.modulus).expect("positive modulus")
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.labels
    }

    /// Multiplies every label by `unit`. Returns `None` when `unit` is not
    /// invertible mod N, since the result would not be a bijection.
    pub fn scaled(&self, unit: u64) -> Option<Self> {
        if group::gcd(unit % self.modulus, self.modulus) != 1 && self.modulus != 1 {
            return None;
        }
        let n = self.modulus as u128;
        Some(Labeling {
            modulus: self.modulus,
            labels: self
                .labels
                .iter()
                .map(|&l| (l as u128 * unit as u128 % n) as u64)
                .collect(),
        })
    }
}

/// A verified witness: orientation, labeling and the common weight μ.
/// Only [`verify`] creates these.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MagicCertificate {
    graph: UndirectedGraph,
    orientation: Orientation,
    labeling: Labeling,
    mu: GroupElement,
}

impl MagicCertificate {
    pub fn graph(&self) -> &UndirectedGraph {
        &self.graph
    }

    pub fn orientation(&self) -> &Orientation {
        &self.orientation
    }

    pub fn labeling(&self) -> &Labeling {
        &self.labeling
    }

    pub fn mu(&self) -> GroupElement {
        self.mu
    }

    pub fn order(&self) -> usize {
        self.graph.vertex_count()
    }

    /// Certificate text: `certificate <N>`, the convention comment,
    /// `mu <value>`, one `l <v> <label>` per vertex and one `a <tail> <head>`
    /// per edge in canonical edge order.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "certificate {}", self.labeling.modulus).unwrap();
        writeln!(out, "{CONVENTION_LINE}").unwrap();
        writeln!(out, "mu {}", self.mu.value()).unwrap();
        for (v, l) in self.labeling.labels.iter().enumerate() {
            writeln!(out, "l {v} {l}").unwrap();
        }
        for (t, h) in self.orientation.arcs(&self.graph) {
            writeln!(out, "a {t} {h}").unwrap();
        }
        out
    }
}

impl fmt::Display for MagicCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// A parsed but not yet verified certificate file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificateRecord {
    pub order: u64,
    pub mu: u64,
    pub labels: Vec<u64>,
    pub arcs: Vec<(usize, usize)>,
}

impl CertificateRecord {
    pub fn parse(text: &str) -> Result<Self, GraphError> {
        let err = |line: usize, message: String| GraphError::Parse { line, message };
        let mut order = None;
        let mut mu = None;
        let mut labels: Vec<Option<u64>> = Vec::new();
        let mut arcs = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut tok = line.split_whitespace();
            let kind = tok.next().unwrap();
            let nums = tok
                .map(|t| {
                    t.parse::<u64>()
                        .map_err(|_| err(line_no, format!("expected an integer, got `{t}`")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            let want = |k: usize| {
                if nums.len() == k {
                    Ok(())
                } else {
                    Err(err(line_no, format!("`{kind}` takes {k} values")))
                }
            };
            if kind != "certificate" && order.is_none() {
                return Err(err(line_no, "record before `certificate` header".into()));
            }
            match kind {
                "certificate" => {
                    want(1)?;
                    if order.is_some() {
                        return Err(err(line_no, "duplicate header".into()));
                    }
                    order = Some(nums[0]);
                    labels = vec![None; nums[0] as usize];
                }
                "mu" => {
                    want(1)?;
                    if mu.replace(nums[0]).is_some() {
                        return Err(err(line_no, "duplicate `mu`".into()));
                    }
                }
                "l" => {
                    want(2)?;
                    let v = nums[0] as usize;
                    let slot = labels
                        .get_mut(v)
                        .ok_or_else(|| err(line_no, format!("vertex {v} out of range")))?;
                    if slot.replace(nums[1]).is_some() {
                        return Err(err(line_no, format!("vertex {v} labeled twice")));
                    }
                }
                "a" => {
                    want(2)?;
                    arcs.push((nums[0] as usize, nums[1] as usize));
                }
                other => return Err(err(line_no, format!("unknown record `{other}`"))),
            }
        }
        let order = order.ok_or_else(|| err(1, "missing `certificate` header".into()))?;
        let mu = mu.ok_or_else(|| err(1, "missing `mu` line".into()))?;
        let labels = labels
            .into_iter()
            .enumerate()
            .map(|(v, l)| l.ok_or_else(|| err(1, format!("vertex {v} has no label"))))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(CertificateRecord {
            order,
            mu,
            labels,
            arcs,
        })
    }

    /// Rebuilds orientation and labeling against `graph` and verifies them.
    /// A recorded μ that disagrees with the verified one is reported as a
    /// violation at vertex 0.
    pub fn check(&self, graph: &UndirectedGraph) -> Result<MagicCertificate, CheckError> {
        if self.order != graph.vertex_count() as u64 {
            return Err(VerifyError::OrderMismatch {
                graph: graph.vertex_count(),
                labeling: self.order,
            }
            .into());
        }
        let orientation = Orientation::from_arcs(graph, self.arcs.iter().copied())?;
        let labeling = Labeling::new(self.labels.clone())?;
        let cert = verify(graph, &orientation, &labeling)?;
        if cert.mu().value() != self.mu {
            return Err(VerifyError::Violation(Violation {
                vertex: 0,
                weight: cert.mu().value(),
                expected: self.mu,
            })
            .into());
        }
        Ok(cert)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CheckError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Verify(#[from] VerifyError),
}

fn check_shapes(
    graph: &UndirectedGraph,
    orientation: &Orientation,
    labeling: &Labeling,
) -> Result<(), VerifyError> {
    if labeling.modulus != graph.vertex_count() as u64 {
        return Err(VerifyError::OrderMismatch {
            graph: graph.vertex_count(),
            labeling: labeling.modulus,
        });
    }
    if orientation.len() != graph.edge_count() {
        return Err(VerifyError::EdgeCountMismatch {
            graph: graph.edge_count(),
            orientation: orientation.len(),
        });
    }
    Ok(())
}

pub fn weight(
    graph: &UndirectedGraph,
    orientation: &Orientation,
    labeling: &Labeling,
    x: usize,
) -> Result<GroupElement, VerifyError> {
    check_shapes(graph, orientation, labeling)?;
    if x >= graph.vertex_count() {
        return Err(VerifyError::NoSuchVertex(x));
    }
    let n = labeling.modulus;
    let w = graph.incident(x).iter().fold(0u64, |acc, &(y, e)| {
        let (tail, _) = orientation.arc(graph, e);
        let l = labeling.labels[y];
        if tail == y {
            group::add_mod(acc, l, n)
        } else {
            group::sub_mod(acc, l, n)
        }
    });
    Ok(GroupElement::new(w, n).expect("positive modulus"))
}

/// All weights in one pass over the arcs.
pub fn weights(
    graph: &UndirectedGraph,
    orientation: &Orientation,
    labeling: &Labeling,
) -> Result<Vec<u64>, VerifyError> {
    check_shapes(graph, orientation, labeling)?;
    let n = labeling.modulus;
    let l = &labeling.labels;
    let mut w = vec![0u64; graph.vertex_count()];
    for (tail, head) in orientation.arcs(graph) {
        w[head] = group::add_mod(w[head], l[tail], n);
        w[tail] = group::sub_mod(w[tail], l[head], n);
    }
    Ok(w)
}

/// Certifies the triple when every weight equals `w(0)`; otherwise reports
/// the lowest-indexed vertex that differs.
pub fn verify(
    graph: &UndirectedGraph,
    orientation: &Orientation,
    labeling: &Labeling,
) -> Result<MagicCertificate, VerifyError> {
    if graph.vertex_count() == 0 {
        return Err(VerifyError::EmptyGraph);
    }
    let w = weights(graph, orientation, labeling)?;
    let mu = w[0];
    if let Some(vertex) = w.iter().position(|&x| x != mu) {
        return Err(Violation {
            vertex,
            weight: w[vertex],
            expected: mu,
        }
        .into());
    }
    Ok(MagicCertificate {
        graph: graph.clone(),
        orientation: orientation.clone(),
        labeling: labeling.clone(),
        mu: GroupElement::new(mu, labeling.modulus).expect("positive modulus"),
    })
}
