//! Status table over `K_m ∘ K̄_n` and prisms.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::constructors::{self, FamilyStatus};
use crate::graph::{self, UndirectedGraph};
use crate::obstructions::{self, ObstructionOutcome};
use crate::search::{self, SearchConfig, Verdict};
use crate::verify::MagicCertificate;

pub const CSV_HEADER: &str = "family,m,n,order,status,mu,method,nodes,time_ms";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// `K_m ∘ K̄_n`.
    Kmokn,
    /// `P_2 □ C_n`, listed with `m = 2`.
    Prism,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Kmokn => "kmokn",
            Family::Prism => "prism",
        }
    }

    pub fn graph(self, m: usize, n: usize) -> UndirectedGraph {
        match self {
            Family::Kmokn => constructors::kmokn_graph(m, n),
            Family::Prism => graph::prism(n).expect("prism rows have n >= 3"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    Magic,
    NotMagic,
    Unknown,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Magic => "magic",
            Status::NotMagic => "not-magic",
            Status::Unknown => "unknown",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub family: Family,
    pub m: usize,
    pub n: usize,
    pub order: usize,
    pub status: Status,
    pub mu: Option<u64>,
    pub method: Option<String>,
    pub nodes: Option<u64>,
    pub elapsed: Duration,
    pub certificate: Option<MagicCertificate>,
}

impl TableRow {
    pub fn graph(&self) -> UndirectedGraph {
        self.family.graph(self.m, self.n)
    }

    /// File stem for the row's graph and certificate files.
    pub fn stem(&self) -> String {
        format!("{}-{}-{}", self.family.name(), self.m, self.n)
    }

    pub fn to_csv(&self) -> String {
        let opt = |x: Option<String>| x.unwrap_or_default();
        format!(
            "{},{},{},{},{},{},{},{},{}",
            self.family.name(),
            self.m,
            self.n,
            self.order,
            self.status.name(),
            opt(self.mu.map(|v| v.to_string())),
            opt(self.method.clone()),
            opt(self.nodes.map(|v| v.to_string())),
            self.elapsed.as_millis()
        )
    }
}

#[derive(Debug, Clone)]
pub struct TableOptions {
    pub max_m: usize,
    pub max_n: usize,
    /// Odd-order cells up to this order are settled by search.
    pub search_threshold: usize,
    /// Prisms `P_2 □ C_n` for `3 <= n <= max_prism`; 0 leaves them out.
    pub max_prism: usize,
    pub search: SearchConfig,
}

impl Default for TableOptions {
    fn default() -> Self {
        TableOptions {
            max_m: 6,
            max_n: 6,
            search_threshold: 9,
            max_prism: 6,
            search: SearchConfig::default(),
        }
    }
}

fn not_magic_method(g: &UndirectedGraph, fallback: &str) -> String {
    match obstructions::obstruct(g) {
        ObstructionOutcome::Certified(c) => c.method().to_string(),
        ObstructionOutcome::Inconclusive => fallback.to_string(),
    }
}

fn kmokn_row(m: usize, n: usize, opts: &TableOptions) -> TableRow {
    let start = Instant::now();
    let mut row = TableRow {
        family: Family::Kmokn,
        m,
        n,
        order: m * n,
        status: Status::Unknown,
        mu: None,
        method: None,
        nodes: None,
        elapsed: Duration::ZERO,
        certificate: None,
    };
    match constructors::decide_kmokn(m, n).map(|d| d.status) {
        Ok(FamilyStatus::Magic {
            construction,
            certificate,
        }) => {
            row.status = Status::Magic;
            row.mu = Some(certificate.mu().value());
            row.method = Some(construction.token().to_string());
            row.certificate = Some(certificate);
        }
        Ok(FamilyStatus::NotMagic(o)) => {
            row.status = Status::NotMagic;
            row.method = Some(not_magic_method(&row.graph(), o.token()));
        }
        Ok(FamilyStatus::SearchRequired) if m * n <= opts.search_threshold => {
            let config = SearchConfig {
                threads: 1,
                ..opts.search.clone()
            };
            if let Ok(outcome) = search::decide_existence(&row.graph(), &config) {
                row.nodes = Some(outcome.stats.nodes);
                match outcome.verdict {
                    Verdict::Witness(c) => {
                        row.status = Status::Magic;
                        row.mu = Some(c.mu().value());
                        row.method = Some("search".into());
                        row.certificate = Some(c);
                    }
                    Verdict::ExhaustedNoSolution => {
                        row.status = Status::NotMagic;
                        row.method = Some("search".into());
                    }
                    Verdict::Inconclusive => {}
                }
            }
        }
        Ok(FamilyStatus::SearchRequired) | Err(_) => {}
    }
    row.elapsed = start.elapsed();
    row
}

fn prism_row(n: usize) -> TableRow {
    let start = Instant::now();
    let (status, method) = match obstructions::prism_nonexistence(n) {
        Ok(cert) => (Status::NotMagic, Some(cert.method().to_string())),
        Err(_) => (Status::Unknown, None),
    };
    TableRow {
        family: Family::Prism,
        m: 2,
        n,
        order: 2 * n,
        status,
        mu: None,
        method,
        nodes: None,
        elapsed: start.elapsed(),
        certificate: None,
    }
}

/// All rows, `K_m ∘ K̄_n` in `(m, n)` order followed by prisms. Cells are
/// computed in parallel; the order of the result does not depend on it.
pub fn build_table(opts: &TableOptions) -> Vec<TableRow> {
    let mut cells: Vec<(Family, usize, usize)> = Vec::new();
    for m in 1..=opts.max_m {
        for n in 1..=opts.max_n {
            cells.push((Family::Kmokn, m, n));
        }
    }
    for n in 3..=opts.max_prism {
        cells.push((Family::Prism, 2, n));
    }
    cells
        .into_par_iter()
        .map(|(family, m, n)| match family {
            Family::Kmokn => kmokn_row(m, n, opts),
            Family::Prism => prism_row(n),
        })
        .collect()
}

pub fn to_csv(rows: &[TableRow]) -> String {
    let mut out = String::new();
    writeln!(out, "{CSV_HEADER}").unwrap();
    for row in rows {
        writeln!(out, "{}", row.to_csv()).unwrap();
    }
    out
}

/// Writes `<stem>.graph` and `<stem>.cert` for every magic row; returns the
/// certificate paths.
pub fn write_certificates(rows: &[TableRow], dir: &Path) -> std::io::Result<Vec<PathBuf>> {
    std::fs::create_dir_all(dir)?;
    let mut written = Vec::new();
    for row in rows {
        let Some(cert) = &row.certificate else {
            continue;
        };
        let stem = row.stem();
        crate::io::write_atomic(&dir.join(format!("{stem}.graph")), cert.graph().to_text().as_bytes())?;
        let path = dir.join(format!("{stem}.cert"));
        crate::io::write_atomic(&path, cert.to_text().as_bytes())?;
        written.push(path);
    }
    Ok(written)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> Vec<TableRow> {
        build_table(&TableOptions {
            max_m: 6,
            max_n: 4,
            search_threshold: 9,
            max_prism: 5,
            search: SearchConfig::default(),
        })
    }

    fn find(rows: &[TableRow], family: Family, m: usize, n: usize) -> &TableRow {
        rows.iter()
            .find(|r| r.family == family && r.m == m && r.n == n)
            .unwrap()
    }

    #[test]
    fn spec_cells() {
        let rows = small();
        let r = find(&rows, Family::Kmokn, 6, 3);
        assert_eq!((r.status, r.method.as_deref()), (Status::NotMagic, Some("theorem1")));
        let r = find(&rows, Family::Kmokn, 4, 3);
        assert_eq!((r.status, r.method.as_deref(), r.mu), (Status::Magic, Some("case1"), Some(6)));
        let r = find(&rows, Family::Kmokn, 3, 1);
        assert_eq!((r.status, r.method.as_deref()), (Status::Magic, Some("complete")));
        let r = find(&rows, Family::Kmokn, 3, 3);
        assert_eq!((r.status, r.method.as_deref()), (Status::Magic, Some("search")));
        let r = find(&rows, Family::Kmokn, 4, 1);
        assert_eq!((r.status, r.method.as_deref()), (Status::NotMagic, Some("parity")));
        let r = find(&rows, Family::Prism, 2, 4);
        assert_eq!((r.status, r.method.as_deref()), (Status::NotMagic, Some("parity")));
    }

    #[test]
    fn rows_are_ordered_and_complete() {
        let rows = small();
        assert_eq!(rows.len(), 6 * 4 + 3);
        let keys: Vec<(usize, usize)> = rows.iter().take(24).map(|r| (r.m, r.n)).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        assert!(rows.iter().all(|r| r.status != Status::Magic || r.certificate.is_some()));
    }

    #[test]
    fn csv_shape() {
        let csv = to_csv(&small());
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some(CSV_HEADER));
        for line in lines {
            assert_eq!(line.split(',').count(), 9, "{line}");
        }
        assert!(csv.contains("\nkmokn,4,3,12,magic,6,case1,,"));
    }
}
