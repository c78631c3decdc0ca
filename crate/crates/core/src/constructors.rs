//! Explicit magic labelings and the decision procedure for `K_m ∘ K̄_n`.
//!
//! Vertex `v_i^k` (part `k`, position `i`, both 1-based) has id
//! `(k-1)n + (i-1)`, as in [`ProductIndexing`]. Every constructor passes its
//! output through [`verify`] before returning it.

use std::fmt;

use thiserror::Error;

use crate::graph::{self, Orientation, ProductIndexing, UndirectedGraph};
use crate::obstructions::Obstruction;
use crate::verify::{self, Labeling, MagicCertificate, VerifyError};
use crate::zero_sum::{self, ZeroSumError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("{0}")]
    Precondition(String),
    #[error("not magic ({0})")]
    NotMagic(Obstruction),
    #[error(transparent)]
    SetSystem(#[from] ZeroSumError),
    #[error("construction failed verification: {0}")]
    Unverified(#[from] VerifyError),
}

/// The construction behind a magic verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Construction {
    /// Rotational tournament on `K_n`, `n` odd.
    Complete,
    /// `mn ≡ 0 (mod 4)`, from a zero-sum set system.
    Case1,
    /// `m` odd, `n ≡ 2 (mod 4)`, with identity labels.
    Case2,
    /// No edges: every weight is 0.
    Edgeless,
}

impl Construction {
    pub fn token(self) -> &'static str {
        match self {
            Construction::Complete => "complete",
            Construction::Case1 => "case1",
            Construction::Case2 => "case2",
            Construction::Edgeless => "edgeless",
        }
    }
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

fn certify(g: &UndirectedGraph, arcs: Vec<(usize, usize)>, labels: Vec<u64>) -> Result<MagicCertificate, ConstructError> {
    let orientation = Orientation::from_arcs(g, arcs).map_err(|e| ConstructError::Precondition(e.to_string()))?;
    let labeling = Labeling::new(labels)?;
    Ok(verify::verify(g, &orientation, &labeling)?)
}

/// Rotational tournament: arc `i -> j` iff `(j - i) mod n ∈ {1, …, (n-1)/2}`,
/// labels `l(i) = i`.
pub fn construct_complete(n: usize) -> Result<MagicCertificate, ConstructError> {
    if n == 0 {
        return Err(ConstructError::Precondition("complete graph needs n >= 1".into()));
    }
    if n % 2 == 0 {
        return Err(ConstructError::NotMagic(Obstruction::EvenComplete));
    }
    let g = graph::complete(n);
    let h = (n - 1) / 2;
    let arcs = g
        .edges()
        .iter()
        .map(|&(i, j)| if (j - i) <= h { (i, j) } else { (j, i) })
        .collect();
    certify(&g, arcs, (0..n as u64).collect())
}

/// `n` isolated vertices with identity labels.
pub fn construct_edgeless(n: usize) -> Result<MagicCertificate, ConstructError> {
    if n == 0 {
        return Err(ConstructError::Precondition("graph needs at least one vertex".into()));
    }
    certify(&graph::empty(n), Vec::new(), (0..n as u64).collect())
}

/// `K_m ∘ K̄_n` for `mn ≡ 0 (mod 4)`, μ = mn/2.
///
/// Part `V^k` receives the set `A^k`, with `l(v_1^1) = mn/2` and
/// `l(v_1^q) = mn/4` where `A^q` holds `mn/4`. Between `V^1` and `V^q`:
/// `v_i^1 -> v_1^q` and `v_j^q -> v_i^1` for `j ≥ 2`. Every other pair of
/// parts is oriented from the lower index to the higher.
pub fn construct_case1(m: usize, n: usize) -> Result<MagicCertificate, ConstructError> {
    let sets = zero_sum::case1_sets(m, n)?;
    let order = (m * n) as u64;
    let idx = ProductIndexing::new(m, n);
    let q = sets.quarter_index + 1;

    let mut labels = vec![0u64; m * n];
    for (k0, set) in sets.sets.iter().enumerate() {
        let k = k0 + 1;
        let special = match k {
            1 => Some(order / 2),
            _ if k == q => Some(order / 4),
            _ => None,
        };
        let mut values: Vec<u64> = set.iter().map(|x| x.value()).collect();
        if let Some(s) = special {
            let pos = values.iter().position(|&v| v == s).expect("set holds its special value");
            values.remove(pos);
            values.insert(0, s);
        }
        for (i0, v) in values.into_iter().enumerate() {
            labels[idx.id(k, i0 + 1)] = v;
        }
    }

    let g = kmokn_graph(m, n);
    let mut arcs = Vec::with_capacity(g.edge_count());
    for k in 1..=m {
        for l in k + 1..=m {
            for i in 1..=n {
                for j in 1..=n {
                    let (a, b) = (idx.id(k, i), idx.id(l, j));
                    if k == 1 && l == q && j >= 2 {
                        arcs.push((b, a));
                    } else {
                        arcs.push((a, b));
                    }
                }
            }
        }
    }
    certify(&g, arcs, labels)
}

/// `K_m ∘ K̄_n` for odd `m ≥ 3` and `n ≡ 2 (mod 4)`.
///
/// Labels `l(v_i^k) = (i-1) + (k-1)n`; `V^l -> V^k` whenever `k - l` is in
/// `{1, …, (m-1)/2}` modulo `m`.
pub fn construct_case2(m: usize, n: usize) -> Result<MagicCertificate, ConstructError> {
    if m < 3 || m % 2 == 0 || n % 4 != 2 {
        return Err(ConstructError::Precondition(format!(
            "need odd m >= 3 and n ≡ 2 (mod 4), got m={m}, n={n}"
        )));
    }
    rotational_parts(m, n)
}

fn rotational_parts(m: usize, n: usize) -> Result<MagicCertificate, ConstructError> {
    let g = kmokn_graph(m, n);
    let h = (m - 1) / 2;
    let arcs = g
        .edges()
        .iter()
        .map(|&(u, v)| {
            let d = (v / n + m - u / n) % m;
            if (1..=h).contains(&d) {
                (u, v)
            } else {
                (v, u)
            }
        })
        .collect();
    certify(&g, arcs, (0..(m * n) as u64).collect())
}

/// The complete multipartite graph with `m` parts of size `n`.
pub fn kmokn_graph(m: usize, n: usize) -> UndirectedGraph {
    graph::lexicographic(&graph::complete(m), &graph::empty(n))
}

/// μ of [`construct_case2`] in closed form, with the opposite-sign variant
/// `((m-1)/2)((m+1)/2)n²` alongside for comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Case2ClosedForms {
    pub modulus: u64,
    /// `−n²(m²−1)/4 mod mn`; matches the verified constant.
    pub derived: u64,
    /// `+n²(m²−1)/4 mod mn`.
    pub opposite_sign: u64,
}

pub fn case2_closed_forms(m: usize, n: usize) -> Case2ClosedForms {
    let modulus = (m * n) as u64;
    let (m, n) = (m as u64, n as u64);
    let positive = ((m - 1) / 2 * m.div_ceil(2) % modulus) * (n * n % modulus) % modulus;
    Case2ClosedForms {
        modulus,
        derived: (modulus - positive) % modulus,
        opposite_sign: positive,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyStatus {
    Magic {
        construction: Construction,
        certificate: MagicCertificate,
    },
    NotMagic(Obstruction),
    /// Odd order: a labeling exists but no construction is provided here.
    SearchRequired,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyDecision {
    pub m: usize,
    pub n: usize,
    pub status: FamilyStatus,
}

impl FamilyDecision {
    pub fn certificate(&self) -> Option<&MagicCertificate> {
        match &self.status {
            FamilyStatus::Magic { certificate, .. } => Some(certificate),
            _ => None,
        }
    }
}

impl fmt::Display for FamilyDecision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.status {
            FamilyStatus::Magic {
                construction,
                certificate,
            } => write!(f, "magic {construction} mu={}", certificate.mu().value()),
            FamilyStatus::NotMagic(o) => write!(f, "not-magic {o}"),
            FamilyStatus::SearchRequired => f.write_str("search-required"),
        }
    }
}

/// Status of `K_m ∘ K̄_n`: magic unless `n = 1` with `m` even, or `n ≥ 2`
/// odd with `m ≡ 2 (mod 4)`. Odd orders are left to search.
pub fn decide_kmokn(m: usize, n: usize) -> Result<FamilyDecision, ConstructError> {
    if m == 0 || n == 0 {
        return Err(ConstructError::Precondition(format!("need m, n >= 1, got m={m}, n={n}")));
    }
    let magic = |construction, certificate| FamilyStatus::Magic {
        construction,
        certificate,
    };
    let status = if n == 1 {
        if m % 2 == 1 {
            magic(Construction::Complete, construct_complete(m)?)
        } else {
            FamilyStatus::NotMagic(Obstruction::EvenComplete)
        }
    } else if n % 2 == 1 && m % 4 == 2 {
        FamilyStatus::NotMagic(Obstruction::OddRegular)
    } else if m == 1 {
        magic(Construction::Edgeless, construct_edgeless(n)?)
    } else if (m * n) % 2 == 1 {
        FamilyStatus::SearchRequired
    } else if (m * n) % 4 == 0 {
        magic(Construction::Case1, construct_case1(m, n)?)
    } else {
        magic(Construction::Case2, construct_case2(m, n)?)
    };
    Ok(FamilyDecision { m, n, status })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_examples() {
        assert_eq!(construct_complete(1).unwrap().mu().value(), 0);
        assert_eq!(construct_complete(5).unwrap().mu().value(), 4);
        assert_eq!(construct_complete(7).unwrap().mu().value(), 2);
        assert_eq!(construct_complete(4), Err(ConstructError::NotMagic(Obstruction::EvenComplete)));
    }

    #[test]
    fn complete_mu_formula() {
        for n in (1..=31).step_by(2) {
            let h = (n - 1) / 2;
            let expected = (n * n - h * (h + 1) % n) % n;
            assert_eq!(construct_complete(n).unwrap().mu().value() as usize, expected, "n={n}");
        }
    }

    #[test]
    fn case1_small_examples() {
        let c = construct_case1(2, 2).unwrap();
        assert_eq!(c.labeling().as_slice(), &[2, 0, 1, 3]);
        assert_eq!(c.mu().value(), 2);

        let c = construct_case1(4, 3).unwrap();
        assert_eq!(c.mu().value(), 6);
        let idx = ProductIndexing::new(4, 3);
        assert_eq!(c.labeling().as_slice()[idx.id(1, 1)], 6);
        let q = (2..=4).find(|&k| c.labeling().as_slice()[idx.id(k, 1)] == 3);
        assert!(q.is_some());
    }

    #[test]
    fn case1_grid_has_half_order_constant() {
        for m in 2..=12 {
            for n in 2..=12 {
                if (m * n) % 4 != 0 {
                    assert!(construct_case1(m, n).is_err());
                    continue;
                }
                let c = construct_case1(m, n).unwrap();
                assert_eq!(c.mu().value() as usize, m * n / 2, "m={m} n={n}");
            }
        }
    }

    #[test]
    fn case1_free_pairs_may_flip() {
        for (m, n) in [(4, 3), (3, 4), (5, 4), (6, 2), (4, 4)] {
            let c = construct_case1(m, n).unwrap();
            let g = c.graph();
            for k in 2..=m {
                for l in k + 1..=m {
                    let mut o = c.orientation().clone();
                    for e in 0..g.edge_count() {
                        let (u, v) = g.edges()[e];
                        let (pu, pv) = (u / n + 1, v / n + 1);
                        if (pu, pv) == (k, l) {
                            o.set(e, !o.get(e));
                        }
                    }
                    let flipped = verify::verify(g, &o, c.labeling()).unwrap();
                    assert_eq!(flipped.mu(), c.mu(), "m={m} n={n} pair ({k},{l})");
                }
            }
        }
    }

    #[test]
    fn case2_examples() {
        let c = construct_case2(3, 2).unwrap();
        assert_eq!(c.labeling().as_slice(), &[0, 1, 2, 3, 4, 5]);
        assert_eq!(c.mu().value(), 4);
        assert_eq!(construct_case2(5, 2).unwrap().mu().value(), 6);
        assert!(construct_case2(3, 6).is_ok());
        assert!(construct_case2(4, 2).is_err());
        assert!(construct_case2(3, 4).is_err());
    }

    #[test]
    fn case2_closed_form_sign() {
        let f = case2_closed_forms(5, 2);
        assert_eq!((f.derived, f.opposite_sign), (6, 4));
        for m in (3..=11).step_by(2) {
            for n in [2, 6, 10] {
                let c = construct_case2(m, n).unwrap();
                assert_eq!(c.mu().value(), case2_closed_forms(m, n).derived, "m={m} n={n}");
            }
        }
    }

    #[test]
    fn rotational_parts_work_for_every_odd_m() {
        for m in (3..=9).step_by(2) {
            for n in 1..=8 {
                assert!(rotational_parts(m, n).is_ok(), "m={m} n={n}");
            }
        }
    }

    #[test]
    fn decide_examples() {
        assert_eq!(decide_kmokn(6, 3).unwrap().to_string(), "not-magic theorem1");
        assert_eq!(decide_kmokn(4, 3).unwrap().to_string(), "magic case1 mu=6");
        assert_eq!(decide_kmokn(3, 3).unwrap().status, FamilyStatus::SearchRequired);
        assert_eq!(decide_kmokn(3, 1).unwrap().to_string(), "magic complete mu=1");
        assert_eq!(decide_kmokn(4, 1).unwrap().to_string(), "not-magic theorem2");
        assert_eq!(decide_kmokn(1, 4).unwrap().to_string(), "magic edgeless mu=0");
        assert!(decide_kmokn(0, 3).is_err());
    }

    #[test]
    fn decide_is_consistent_on_grid() {
        for m in 1..=12 {
            for n in 1..=12 {
                let d = decide_kmokn(m, n).unwrap();
                if n >= 2 && n % 2 == 1 && m % 4 == 2 {
                    assert_eq!(d.status, FamilyStatus::NotMagic(Obstruction::OddRegular));
                }
                let constructible = (n == 1 && m % 2 == 1)
                    || (m >= 2 && n >= 2 && (m * n) % 4 == 0)
                    || (m >= 3 && m % 2 == 1 && n % 4 == 2);
                if constructible {
                    assert!(d.certificate().is_some(), "m={m} n={n}");
                }
                if let Some(c) = d.certificate() {
                    assert_eq!(c.order(), m * n);
                    assert_eq!(c.graph(), &kmokn_graph(m, n));
                }
            }
        }
    }
}
