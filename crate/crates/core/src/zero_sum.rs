//! Zero-sum partitions of the symmetric set `{±1, …, ±N/2}` and the set
//! system used by the `mn ≡ 0 (mod 4)` labeler for `K_m ∘ K̄_n`.
//!
//! The construction is direct. With `t` odd-sized parts (always an even
//! number) and `j = t/2`, the values `±1..±3j` split into `t` zero-sum
//! triples
//!
//! ```text
//! { i, 3j+1-2i, -(3j+1-i) }   and   { -i, -(j+i), j+2i }     for i = 1..j
//! ```
//!
//! and every remaining value pairs with its negative. Each odd part takes
//! one triple plus antipodal pairs; each even part takes only pairs. The
//! result is validated, and a plain backtracking search is kept as a
//! fallback should validation ever fail.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::group::{GroupElement, SymmetricInt};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ZeroSumError {
    #[error("invalid size vector: {0}")]
    InvalidSizes(String),
    #[error("invalid parameters: {0}")]
    Precondition(String),
    #[error("internal defect: no valid partition produced for N={total}, sizes {sizes:?}")]
    Defect { total: usize, sizes: Vec<usize> },
}

/// The first broken invariant found by [`validate_partition`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionViolation {
    #[error("N={0} must be even and positive")]
    OddTotal(usize),
    #[error("part {index} has size {size} < 2")]
    PartTooSmall { index: usize, size: usize },
    #[error("part {index} sum ≠ 0 (sum {sum})")]
    NonZeroSum { index: usize, sum: i64 },
    #[error("part {index} contains {value}, outside the ground set")]
    OutsideGroundSet { index: usize, value: i64 },
    #[error("value {value} appears twice (part {index})")]
    Duplicate { index: usize, value: i64 },
    #[error("value {0} is not covered")]
    Uncovered(i64),
    #[error("expected {expected} parts, found {found}")]
    PartCount { expected: usize, found: usize },
    #[error("part {index} has size {size}, expected {expected}")]
    WrongSize {
        index: usize,
        size: usize,
        expected: usize,
    },
    #[error("part {index} residue sum is {sum}, expected {expected}")]
    WrongResidueSum {
        index: usize,
        sum: u64,
        expected: u64,
    },
    #[error("first part must contain mn/2 = {0}")]
    MissingHalf(u64),
    #[error("part {index} (q) does not contain mn/4 = {quarter}")]
    MissingQuarter { index: usize, quarter: u64 },
    #[error("q must differ from 1")]
    QuarterInFirstPart,
}

pub trait Validate {
    fn validate(&self) -> Result<(), PartitionViolation>;
}

/// Checks every invariant of a partition or set system; reports the first
/// violation.
pub fn validate_partition<T: Validate + ?Sized>(p: &T) -> Result<(), PartitionViolation> {
    p.validate()
}

/// A partition of `{-N/2, …, -1, 1, …, N/2}` into zero-sum parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeroSumPartition {
    total: usize,
    parts: Vec<Vec<SymmetricInt>>,
}

impl ZeroSumPartition {
    /// Wraps raw parts without checking them; see [`validate_partition`].
    pub fn from_parts(total: usize, parts: Vec<Vec<i64>>) -> Self {
        ZeroSumPartition {
            total,
            parts: parts
                .into_iter()
                .map(|p| p.into_iter().map(SymmetricInt).collect())
                .collect(),
        }
    }

    pub fn total(&self) -> usize {
        self.total
    }

    pub fn parts(&self) -> &[Vec<SymmetricInt>] {
        &self.parts
    }

    pub fn part_values(&self, index: usize) -> Vec<i64> {
        self.parts[index].iter().map(|s| s.get()).collect()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.parts.iter().map(Vec::len).collect()
    }
}

impl Validate for ZeroSumPartition {
    fn validate(&self) -> Result<(), PartitionViolation> {
        if self.total == 0 || self.total % 2 == 1 {
            return Err(PartitionViolation::OddTotal(self.total));
        }
        let half = (self.total / 2) as i64;
        let mut seen = BTreeSet::new();
        for (index, part) in self.parts.iter().enumerate() {
            if part.len() < 2 {
                return Err(PartitionViolation::PartTooSmall {
                    index,
                    size: part.len(),
                });
            }
            for &SymmetricInt(value) in part {
                if value == 0 || value.abs() > half {
                    return Err(PartitionViolation::OutsideGroundSet { index, value });
                }
                if !seen.insert(value) {
                    return Err(PartitionViolation::Duplicate { index, value });
                }
            }
            let sum: i64 = part.iter().map(|s| s.get()).sum();
            if sum != 0 {
                return Err(PartitionViolation::NonZeroSum { index, sum });
            }
        }
        if let Some(v) = (-half..=half).find(|&v| v != 0 && !seen.contains(&v)) {
            return Err(PartitionViolation::Uncovered(v));
        }
        Ok(())
    }
}

impl fmt::Display for ZeroSumPartition {
    /// One part per line, values space-separated in increasing order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for part in &self.parts {
            let mut vals: Vec<i64> = part.iter().map(|s| s.get()).collect();
            vals.sort_unstable();
            let line: Vec<String> = vals.iter().map(i64::to_string).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

fn check_sizes(total: usize, sizes: &[usize]) -> Result<(), ZeroSumError> {
    if total < 2 || total % 2 == 1 {
        return Err(ZeroSumError::InvalidSizes(format!("N={total} must be even and at least 2")));
    }
    if sizes.is_empty() {
        return Err(ZeroSumError::InvalidSizes("no parts given".into()));
    }
    if let Some((i, s)) = sizes.iter().enumerate().find(|(_, &s)| s < 2) {
        return Err(ZeroSumError::InvalidSizes(format!("part {i} has size {s} < 2")));
    }
    let sum: usize = sizes.iter().sum();
    if sum != total {
        return Err(ZeroSumError::InvalidSizes(format!("sizes sum to {sum}, not {total}")));
    }
    Ok(())
}

/// Splits `{±1, …, ±N/2}` into parts of the given sizes, each summing to 0.
/// Deterministic: among slots of equal size, parts are assigned in order of
/// their smallest absolute value.
pub fn zero_sum_partition(total: usize, sizes: &[usize]) -> Result<ZeroSumPartition, ZeroSumError> {
    check_sizes(total, sizes)?;
    let constructed = ZeroSumPartition::from_parts(total, construct(total, sizes));
    if constructed.validate().is_ok() && constructed.sizes() == sizes {
        return Ok(constructed);
    }
    backtrack_partition(total, sizes)
        .map(|parts| ZeroSumPartition::from_parts(total, canonical_order(sizes, parts)))
        .ok_or_else(|| ZeroSumError::Defect {
            total,
            sizes: sizes.to_vec(),
        })
}

fn construct(total: usize, sizes: &[usize]) -> Vec<Vec<i64>> {
    let half = (total / 2) as i64;
    let odd = sizes.iter().filter(|&&s| s % 2 == 1).count();
    let j = (odd / 2) as i64;

    let mut triples = Vec::with_capacity(odd);
    for i in 1..=j {
        triples.push(vec![i, 3 * j + 1 - 2 * i, -(3 * j + 1 - i)]);
        triples.push(vec![-i, -(j + i), j + 2 * i]);
    }
    let mut triples = triples.into_iter();
    let mut pairs = (3 * j + 1..=half).map(|a| [a, -a]);

    let mut parts: Vec<Vec<i64>> = sizes
        .iter()
        .map(|&s| if s % 2 == 1 { triples.next().unwrap_or_default() } else { Vec::new() })
        .collect();
    for (part, &size) in parts.iter_mut().zip(sizes) {
        while part.len() < size {
            match pairs.next() {
                Some(p) => part.extend(p),
                None => break,
            }
        }
    }
    canonical_order(sizes, parts)
}

/// Within each group of equal-size slots, reorders parts by smallest
/// absolute value (ties by sorted contents). Parts themselves are sorted.
fn canonical_order(sizes: &[usize], mut parts: Vec<Vec<i64>>) -> Vec<Vec<i64>> {
    for p in &mut parts {
        p.sort_unstable();
    }
    let key = |p: &Vec<i64>| (p.iter().map(|v| v.abs()).min().unwrap_or(0), p.clone());
    let distinct: BTreeSet<usize> = sizes.iter().copied().collect();
    for size in distinct {
        let slots: Vec<usize> = (0..sizes.len()).filter(|&i| sizes[i] == size).collect();
        let mut group: Vec<Vec<i64>> = slots.iter().map(|&i| std::mem::take(&mut parts[i])).collect();
        group.sort_by_key(key);
        for (slot, part) in slots.into_iter().zip(group) {
            parts[slot] = part;
        }
    }
    parts
}

/// Exhaustive search: fills slots in order, choosing zero-sum subsets of the
/// remaining values. Exponential; only used when the direct construction
/// fails validation.
pub fn backtrack_partition(total: usize, sizes: &[usize]) -> Option<Vec<Vec<i64>>> {
    if check_sizes(total, sizes).is_err() {
        return None;
    }
    let half = (total / 2) as i64;
    let values: Vec<i64> = (1..=half).flat_map(|a| [-a, a]).collect();
    let mut used = vec![false; values.len()];
    let mut parts = vec![Vec::new(); sizes.len()];
    fill_slot(&values, &mut used, sizes, 0, &mut parts).then_some(parts)
}

fn fill_slot(
    values: &[i64],
    used: &mut [bool],
    sizes: &[usize],
    slot: usize,
    parts: &mut [Vec<i64>],
) -> bool {
    if slot == sizes.len() {
        return true;
    }
    let free: Vec<usize> = (0..values.len()).filter(|&i| !used[i]).collect();
    choose(values, used, sizes, slot, parts, &free, 0, 0)
}

#[allow(clippy::too_many_arguments)]
fn choose(
    values: &[i64],
    used: &mut [bool],
    sizes: &[usize],
    slot: usize,
    parts: &mut [Vec<i64>],
    free: &[usize],
    start: usize,
    sum: i64,
) -> bool {
    let need = sizes[slot] - parts[slot].len();
    if need == 0 {
        return sum == 0 && fill_slot(values, used, sizes, slot + 1, parts);
    }
    for k in start..free.len() {
        if free.len() - k < need {
            break;
        }
        let i = free[k];
        let v = values[i];
        // remaining picks can move the sum by at most need-1 maximal values
        let bound = (need as i64 - 1) * (values.len() as i64 / 2);
        if (sum + v).abs() > bound {
            continue;
        }
        used[i] = true;
        parts[slot].push(v);
        if choose(values, used, sizes, slot, parts, free, k + 1, sum + v) {
            return true;
        }
        parts[slot].pop();
        used[i] = false;
    }
    false
}

/// The sets `A¹…A^m` of `Z_{mn}` for `mn ≡ 0 (mod 4)`: `A¹` sums to `mn/2`
/// and contains it, every other set sums to 0, and `mn/4` lies in `A^q` with
/// `q ≠ 1`. `quarter_index` is the 0-based position of `A^q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Case1SetSystem {
    pub m: usize,
    pub n: usize,
    pub sets: Vec<Vec<GroupElement>>,
    pub quarter_index: usize,
}

impl Case1SetSystem {
    pub fn order(&self) -> u64 {
        (self.m * self.n) as u64
    }

    pub fn half(&self) -> u64 {
        self.order() / 2
    }

    pub fn quarter(&self) -> u64 {
        self.order() / 4
    }
}

impl Validate for Case1SetSystem {
    fn validate(&self) -> Result<(), PartitionViolation> {
        let order = self.order();
        if self.sets.len() != self.m {
            return Err(PartitionViolation::PartCount {
                expected: self.m,
                found: self.sets.len(),
            });
        }
        let mut seen = vec![false; order as usize];
        for (index, set) in self.sets.iter().enumerate() {
            if set.len() != self.n {
                return Err(PartitionViolation::WrongSize {
                    index,
                    size: set.len(),
                    expected: self.n,
                });
            }
            for x in set {
                if x.modulus() != order {
                    return Err(PartitionViolation::OutsideGroundSet {
                        index,
                        value: x.value() as i64,
                    });
                }
                if std::mem::replace(&mut seen[x.value() as usize], true) {
                    return Err(PartitionViolation::Duplicate {
                        index,
                        value: x.value() as i64,
                    });
                }
            }
            let sum = set.iter().map(|x| x.value()).sum::<u64>() % order;
            let expected = if index == 0 { self.half() } else { 0 };
            if sum != expected {
                return Err(PartitionViolation::WrongResidueSum {
                    index,
                    sum,
                    expected,
                });
            }
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return Err(PartitionViolation::Uncovered(v as i64));
        }
        if !self.sets[0].iter().any(|x| x.value() == self.half()) {
            return Err(PartitionViolation::MissingHalf(self.half()));
        }
        if self.quarter_index == 0 {
            return Err(PartitionViolation::QuarterInFirstPart);
        }
        let q = self.quarter_index;
        if !self.sets.get(q).is_some_and(|s| s.iter().any(|x| x.value() == self.quarter())) {
            return Err(PartitionViolation::MissingQuarter {
                index: q,
                quarter: self.quarter(),
            });
        }
        Ok(())
    }
}

/// Builds `A¹…A^m` from a zero-sum partition of `Z_{mn} \ {0, mn/2}`, seen
/// as the symmetric set `{±1, …, ±(mn/2 - 1)}`.
pub fn case1_sets(m: usize, n: usize) -> Result<Case1SetSystem, ZeroSumError> {
    if m < 2 || n < 2 || (m * n) % 4 != 0 {
        return Err(ZeroSumError::Precondition(format!(
            "need m >= 2, n >= 2 and mn ≡ 0 (mod 4), got m={m}, n={n}"
        )));
    }
    let order = (m * n) as u64;
    let reduced = m * n - 2;
    let to_set = |part: &[SymmetricInt]| -> Vec<GroupElement> {
        part.iter()
            .map(|s| s.to_residue(order).expect("positive modulus"))
            .collect()
    };
    let elem = |v: u64| GroupElement::new(v, order).expect("positive modulus");
    let quarter = SymmetricInt::from_residue(elem(order / 4));

    let mut sets: Vec<Vec<GroupElement>>;
    if n == 2 {
        let partition = zero_sum_partition(reduced, &vec![2; m - 1])?;
        sets = vec![vec![elem(0), elem(order / 2)]];
        sets.extend(partition.parts().iter().map(|p| to_set(p)));
    } else {
        let mut sizes = vec![n; m];
        sizes[0] = n - 1;
        sizes[1] = n - 1;
        let partition = zero_sum_partition(reduced, &sizes)?;
        let mut parts: Vec<Vec<SymmetricInt>> = partition.parts().to_vec();
        if parts[0].contains(&quarter) {
            parts.swap(0, 1);
        }
        sets = parts.iter().map(|p| to_set(p)).collect();
        sets[0].push(elem(order / 2));
        sets[1].push(elem(0));
    }
    for set in &mut sets {
        set.sort_unstable();
    }
    let quarter_index = sets
        .iter()
        .position(|s| s.contains(&elem(order / 4)))
        .expect("mn/4 is covered");
    let system = Case1SetSystem {
        m,
        n,
        sets,
        quarter_index,
    };
    system.validate().map_err(|_| ZeroSumError::Defect {
        total: reduced,
        sizes: vec![n; m],
    })?;
    Ok(system)
}
