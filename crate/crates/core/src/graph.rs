//! Simple undirected graphs, orientations over their canonical edge lists,
//! and the generators for the graph families used throughout the crate.
//!
//! Vertices are dense `0..n` indices. Product graphs carry their structure
//! through [`ProductIndexing`] rather than tuple-typed vertices.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge ({0}, {1}) has an endpoint outside 0..{2}")]
    EndpointOutOfRange(usize, usize, usize),
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("{0}")]
    Usage(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

fn parse_err(line: usize, message: impl Into<String>) -> GraphError {
    GraphError::Parse {
        line,
        message: message.into(),
    }
}

/// A simple graph with a sorted, deduplicated edge list of pairs `(u, v)`,
/// `u < v`. The position of an edge in that list is its edge index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UndirectedGraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    // (neighbour, edge index), sorted by neighbour
    adjacency: Vec<Vec<(usize, usize)>>,
}

impl UndirectedGraph {
    /// Canonicalizes `edges`: each pair is stored with the smaller endpoint
    /// first, the list is sorted and duplicates are dropped.
    pub fn new<I>(vertex_count: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut list = Vec::new();
        for (a, b) in edges {
            if a >= vertex_count || b >= vertex_count {
                return Err(GraphError::EndpointOutOfRange(a, b, vertex_count));
            }
            if a == b {
                return Err(GraphError::Loop(a));
            }
            list.push((a.min(b), a.max(b)));
        }
        list.sort_unstable();
        list.dedup();
        Ok(Self::from_canonical(vertex_count, list))
    }

    fn from_canonical(vertex_count: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adjacency = vec![Vec::new(); vertex_count];
        for (idx, &(u, v)) in edges.iter().enumerate() {
            adjacency[u].push((v, idx));
            adjacency[v].push((u, idx));
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        UndirectedGraph {
            vertex_count,
            edges,
            adjacency,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Neighbours of `v` with the index of the connecting edge.
    pub fn incident(&self, v: usize) -> &[(usize, usize)] {
        &self.adjacency[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adjacency[v].iter().map(|&(u, _)| u)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edge_index(a, b).is_some()
    }

    pub fn edge_index(&self, a: usize, b: usize) -> Option<usize> {
        if a >= self.vertex_count {
            return None;
        }
        self.adjacency[a]
            .binary_search_by_key(&b, |&(u, _)| u)
            .ok()
            .map(|i| self.adjacency[a][i].1)
    }

    /// `Some(r)` iff every vertex has degree `r`. The order-0 graph has no
    /// well-defined degree and yields `None`.
    pub fn regularity(&self) -> Option<usize> {
        let first = self.adjacency.first()?.len();
        self.adjacency
            .iter()
            .all(|l| l.len() == first)
            .then_some(first)
    }

    /// Writes the text format: a `graph <n> <m>` header, then `e <u> <v>` per
    /// edge in canonical order.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "graph {} {}", self.vertex_count, self.edges.len()).unwrap();
        for &(u, v) in &self.edges {
            writeln!(out, "e {} {}", u, v).unwrap();
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self, GraphError> {
        let mut header: Option<(usize, usize, usize)> = None;
        let mut edges = Vec::new();
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
                    t.parse::<usize>()
                        .map_err(|_| parse_err(line_no, format!("expected an integer, got `{t}`")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            match (kind, header) {
                ("graph", None) => {
                    if nums.len() != 2 {
                        return Err(parse_err(line_no, "header must be `graph <vertices> <edges>`"));
                    }
                    header = Some((nums[0], nums[1], line_no));
                }
                ("graph", Some(_)) => return Err(parse_err(line_no, "duplicate header")),
                ("e", Some((n, _, _))) => {
                    if nums.len() != 2 {
                        return Err(parse_err(line_no, "edge line must be `e <u> <v>`"));
                    }
                    let (u, v) = (nums[0], nums[1]);
                    if u >= n || v >= n {
                        return Err(parse_err(line_no, format!("vertex out of range 0..{n}")));
                    }
                    if u == v {
                        return Err(parse_err(line_no, "loops are not allowed"));
                    }
                    edges.push(((u.min(v), u.max(v)), line_no));
                }
                ("e", None) => return Err(parse_err(line_no, "edge before `graph` header")),
                (other, _) => return Err(parse_err(line_no, format!("unknown record `{other}`"))),
            }
        }
        let (n, m, header_line) = header.ok_or_else(|| parse_err(1, "missing `graph` header"))?;
        edges.sort_unstable();
        for w in edges.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(parse_err(w[1].1, format!("duplicate edge {:?}", w[1].0)));
            }
        }
        if edges.len() != m {
            return Err(parse_err(
                header_line,
                format!("header declares {m} edges, found {}", edges.len()),
            ));
        }
        Ok(Self::from_canonical(n, edges.into_iter().map(|(e, _)| e).collect()))
    }
}

impl FromStr for UndirectedGraph {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse(s)
    }
}

impl fmt::Display for UndirectedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Per-edge direction bits aligned with a graph's canonical edge list.
/// Bit 0 on stored pair `(u, v)` is the arc `u -> v`; bit 1 is `v -> u`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Orientation {
    len: usize,
    bits: Vec<u64>,
}

impl Orientation {
    /// Every edge oriented from its smaller to its larger endpoint.
    pub fn forward(edge_count: usize) -> Self {
        Orientation {
            len: edge_count,
            bits: vec![0; edge_count.div_ceil(64)],
        }
    }

    pub fn from_bits<I: IntoIterator<Item = bool>>(bits: I) -> Self {
        let mut o = Orientation::forward(0);
        for b in bits {
            if o.len % 64 == 0 {
                o.bits.push(0);
            }
            o.len += 1;
            o.set(o.len - 1, b);
        }
        o
    }

    /// Builds the orientation of `graph` that contains exactly the given
    /// arcs. Every edge must appear once, in either direction.
    pub fn from_arcs<I>(graph: &UndirectedGraph, arcs: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut o = Orientation::forward(graph.edge_count());
        let mut seen = vec![false; graph.edge_count()];
        for (tail, head) in arcs {
            let idx = graph.edge_index(tail, head).ok_or_else(|| {
                GraphError::Usage(format!("arc {tail}->{head} is not an edge of the graph"))
            })?;
            if std::mem::replace(&mut seen[idx], true) {
                return Err(GraphError::Usage(format!("edge {tail}-{head} oriented twice")));
            }
            o.set(idx, tail > head);
        }
        if let Some(missing) = seen.iter().position(|s| !s) {
            let (u, v) = graph.edges()[missing];
            return Err(GraphError::Usage(format!("edge {u}-{v} has no orientation")));
        }
        Ok(o)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, edge: usize) -> bool {
        assert!(edge < self.len, "edge index {edge} out of range");
        self.bits[edge / 64] >> (edge % 64) & 1 == 1
    }

    pub fn set(&mut self, edge: usize, reversed: bool) {
        assert!(edge < self.len, "edge index {edge} out of range");
        let mask = 1u64 << (edge % 64);
        if reversed {
            self.bits[edge / 64] |= mask;
        } else {
            self.bits[edge / 64] &= !mask;
        }
    }

    /// `(tail, head)` of edge `edge` under this orientation.
    pub fn arc(&self, graph: &UndirectedGraph, edge: usize) -> (usize, usize) {
        let (u, v) = graph.edges()[edge];
        if self.get(edge) {
            (v, u)
        } else {
            (u, v)
        }
    }

    pub fn arcs<'a>(&'a self, graph: &'a UndirectedGraph) -> impl Iterator<Item = (usize, usize)> + 'a {
        (0..self.len).map(move |e| self.arc(graph, e))
    }

    /// Every arc flipped.
    pub fn reversed(&self) -> Self {
        Orientation::from_bits((0..self.len).map(|e| !self.get(e)))
    }
}

/// Indexing of `{1..outer} x {1..inner}` onto `0..outer*inner`: the vertex
/// `v_i^k` (part `k`, position `i`, both 1-based) has id `(k-1)*inner + (i-1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProductIndexing {
    pub outer: usize,
    pub inner: usize,
}

impl ProductIndexing {
    pub fn new(outer: usize, inner: usize) -> Self {
        ProductIndexing { outer, inner }
    }

    pub fn len(&self) -> usize {
        self.outer * self.inner
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn id(&self, k: usize, i: usize) -> usize {
        assert!(
            (1..=self.outer).contains(&k) && (1..=self.inner).contains(&i),
            "({k}, {i}) outside {}x{}",
            self.outer,
            self.inner
        );
        (k - 1) * self.inner + (i - 1)
    }

    pub fn coords(&self, id: usize) -> (usize, usize) {
        assert!(id < self.len());
        (id / self.inner + 1, id % self.inner + 1)
    }
}

/// `n` isolated vertices.
pub fn empty(n: usize) -> UndirectedGraph {
    UndirectedGraph::from_canonical(n, Vec::new())
}

pub fn path(n: usize) -> UndirectedGraph {
    UndirectedGraph::from_canonical(n, (1..n).map(|v| (v - 1, v)).collect())
}

pub fn cycle(n: usize) -> Result<UndirectedGraph, GraphError> {
    if n < 3 {
        return Err(GraphError::Usage(format!("cycle needs at least 3 vertices, got {n}")));
    }
    UndirectedGraph::new(n, (0..n).map(|v| (v, (v + 1) % n)))
}

pub fn complete(n: usize) -> UndirectedGraph {
    let edges = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    UndirectedGraph::from_canonical(n, edges)
}

/// Parts are consecutive index blocks in the order given.
pub fn complete_multipartite(sizes: &[usize]) -> Result<UndirectedGraph, GraphError> {
    if sizes.is_empty() {
        return Err(GraphError::Usage("complete multipartite graph needs at least one part".into()));
    }
    if let Some(p) = sizes.iter().position(|&s| s == 0) {
        return Err(GraphError::Usage(format!("part {p} is empty")));
    }
    let n: usize = sizes.iter().sum();
    let mut part = Vec::with_capacity(n);
    for (p, &s) in sizes.iter().enumerate() {
        part.extend(std::iter::repeat_n(p, s));
    }
    let edges = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| part[u] != part[v])
        .collect();
    Ok(UndirectedGraph::from_canonical(n, edges))
}

/// `G ∘ H`: `(g, h) ~ (g', h')` iff `g ~ g'`, or `g = g'` and `h ~ h'`.
/// Vertex ids follow `ProductIndexing::new(|G|, |H|)`.
pub fn lexicographic(g: &UndirectedGraph, h: &UndirectedGraph) -> UndirectedGraph {
    let (ng, nh) = (g.vertex_count(), h.vertex_count());
    let mut edges = Vec::new();
    for a in 0..ng {
        for &(u, v) in h.edges() {
            edges.push((a * nh + u, a * nh + v));
        }
    }
    for &(a, b) in g.edges() {
        for i in 0..nh {
            for j in 0..nh {
                edges.push((a * nh + i, b * nh + j));
            }
        }
    }
    UndirectedGraph::new(ng * nh, edges).expect("product edges are in range")
}

/// `G □ H`: one coordinate is equal and the other moves along an edge.
pub fn cartesian(g: &UndirectedGraph, h: &UndirectedGraph) -> UndirectedGraph {
    let (ng, nh) = (g.vertex_count(), h.vertex_count());
    let mut edges = Vec::new();
    for a in 0..ng {
        for &(u, v) in h.edges() {
            edges.push((a * nh + u, a * nh + v));
        }
    }
    for &(a, b) in g.edges() {
        for i in 0..nh {
            edges.push((a * nh + i, b * nh + i));
        }
    }
    UndirectedGraph::new(ng * nh, edges).expect("product edges are in range")
}

/// `P_2 □ C_n`. Vertex `(side, j)` has id `side * n + j`.
pub fn prism(n: usize) -> Result<UndirectedGraph, GraphError> {
    if n < 3 {
        return Err(GraphError::Usage(format!("prism needs n >= 3, got {n}")));
    }
    Ok(cartesian(&path(2), &cycle(n)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn is_canonical(g: &UndirectedGraph) -> bool {
        g.edges().windows(2).all(|w| w[0] < w[1]) && g.edges().iter().all(|&(u, v)| u < v)
    }

    #[test]
    fn complete_examples() {
        assert_eq!(complete(1).edge_count(), 0);
        assert_eq!(complete(3).edges(), &[(0, 1), (0, 2), (1, 2)]);
        let k5 = complete(5);
        assert_eq!(k5.edge_count(), 10);
        assert_eq!(k5.regularity(), Some(4));
    }

    #[test]
    fn multipartite_examples() {
        assert_eq!(complete_multipartite(&[1, 1, 1]).unwrap(), complete(3));
        assert_eq!(complete_multipartite(&[2, 2]).unwrap().edge_count(), 4);
        let g = complete_multipartite(&[1, 2, 2]).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (5, 8));
        assert!(complete_multipartite(&[]).is_err());
        assert!(complete_multipartite(&[2, 0]).is_err());
    }

    #[test]
    fn lexicographic_examples() {
        assert_eq!(
            lexicographic(&complete(2), &empty(2)),
            complete_multipartite(&[2, 2]).unwrap()
        );
        let k222 = lexicographic(&complete(3), &empty(2));
        assert_eq!(k222.edge_count(), 12);
        assert_eq!(k222, complete_multipartite(&[2, 2, 2]).unwrap());
        let c5 = cycle(5).unwrap();
        assert_eq!(lexicographic(&c5, &empty(1)), c5);
    }

    #[test]
    fn lexicographic_of_complete_and_empty_is_multipartite() {
        for m in 1..=8 {
            for n in 1..=8 {
                let lex = lexicographic(&complete(m), &empty(n));
                assert_eq!(lex, complete_multipartite(&vec![n; m]).unwrap(), "m={m} n={n}");
                assert!(is_canonical(&lex));
            }
        }
    }

    #[test]
    fn cartesian_examples() {
        let g = cartesian(&path(2), &cycle(4).unwrap());
        assert_eq!((g.vertex_count(), g.edge_count()), (8, 12));
        let c6 = cycle(6).unwrap();
        assert_eq!(cartesian(&empty(1), &c6), c6);
        let g = cartesian(&path(2), &cycle(3).unwrap());
        assert_eq!((g.vertex_count(), g.edge_count(), g.regularity()), (6, 9, Some(3)));
    }

    #[test]
    fn prism_examples() {
        for (n, m) in [(3, 9), (4, 12), (5, 15)] {
            let g = prism(n).unwrap();
            assert_eq!((g.vertex_count(), g.edge_count()), (2 * n, m));
        }
        assert!(prism(2).is_err());
        for n in 3..=50 {
            assert_eq!(prism(n).unwrap().regularity(), Some(3));
        }
    }

    #[test]
    fn regularity_examples() {
        assert_eq!(complete(5).regularity(), Some(4));
        assert_eq!(path(3).regularity(), None);
        assert_eq!(prism(6).unwrap().regularity(), Some(3));
    }

    #[test]
    fn canonicalization_is_a_fixed_point() {
        let g = UndirectedGraph::new(4, [(3, 1), (0, 2), (1, 3), (2, 0), (0, 1)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (1, 3)]);
        let again = UndirectedGraph::new(4, g.edges().iter().copied()).unwrap();
        assert_eq!(again, g);
        assert!(UndirectedGraph::new(3, [(1, 1)]).is_err());
        assert!(UndirectedGraph::new(3, [(1, 3)]).is_err());
    }

    #[test]
    fn text_round_trip() {
        let g = prism(4).unwrap();
        let text = g.to_text();
        assert!(text.starts_with("graph 8 12\ne 0 1\n"));
        assert_eq!(UndirectedGraph::parse(&text).unwrap(), g);
        assert_eq!(UndirectedGraph::parse(&text).unwrap().to_text(), text);
    }

    #[test]
    fn parse_errors_name_the_line() {
        let err = UndirectedGraph::parse("graph 3 1\n# comment\ne 0 5\n").unwrap_err();
        assert_eq!(err, parse_err(3, "vertex out of range 0..3"));
        let err = UndirectedGraph::parse("graph 3 2\ne 0 1\n").unwrap_err();
        assert!(matches!(err, GraphError::Parse { line: 1, .. }));
        let err = UndirectedGraph::parse("graph 3 2\ne 0 1\ne 1 0\n").unwrap_err();
        assert!(matches!(err, GraphError::Parse { line: 3, .. }));
        let err = UndirectedGraph::parse("graph 3 x\n").unwrap_err();
        assert!(matches!(err, GraphError::Parse { line: 1, .. }));
    }

    #[test]
    fn orientation_bits_and_arcs() {
        let g = cycle(3).unwrap();
        // 0->1, 1->2, 2->0
        let o = Orientation::from_arcs(&g, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (1, 2)]);
        assert_eq!((o.get(0), o.get(1), o.get(2)), (false, true, false));
        assert_eq!(o.arcs(&g).collect::<Vec<_>>(), vec![(0, 1), (2, 0), (1, 2)]);
        let r = o.reversed();
        assert_eq!(r.arcs(&g).collect::<Vec<_>>(), vec![(1, 0), (0, 2), (2, 1)]);
        assert!(Orientation::from_arcs(&g, [(0, 1), (1, 2)]).is_err());
        assert!(Orientation::from_arcs(&g, [(0, 1), (1, 0), (1, 2)]).is_err());
    }

    #[test]
    fn product_indexing_is_a_bijection() {
        let idx = ProductIndexing::new(4, 3);
        let mut seen = [false; 12];
        for k in 1..=4 {
            for i in 1..=3 {
                let id = idx.id(k, i);
                assert!(!seen[id]);
                seen[id] = true;
                assert_eq!(idx.coords(id), (k, i));
            }
        }
        assert_eq!(idx.id(1, 1), 0);
        assert_eq!(idx.id(2, 1), 3);
    }
}
