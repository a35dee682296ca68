//! Simple undirected graphs with dense 0-based vertex ids.
//!
//! Provides closed-neighborhood queries, the multiset-domination relation,
//! the standard generator families, and a line-oriented edge-list format.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::multiset::Multiset;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {id} out of range for {n} vertices")]
    VertexOutOfRange { id: usize, n: usize },
}

/// Errors from [`Graph::parse_edge_list`], each tagged with a 1-based line number.
#[derive(Debug, Error, PartialEq, Eq)]
#[error("line {line}: {kind}")]
pub struct EdgeListError {
    pub line: usize,
    pub kind: EdgeListErrorKind,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EdgeListErrorKind {
    #[error("expected header \"n <count>\"")]
    MissingHeader,
    #[error("malformed header: {0}")]
    MalformedHeader(String),
    #[error("malformed edge line: {0}")]
    MalformedEdge(String),
    #[error("unknown line type {0:?}")]
    UnknownLineType(String),
    #[error("self-loop {0}-{0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {id} out of range for {n} vertices")]
    VertexOutOfRange { id: usize, n: usize },
}

/// A simple undirected graph stored as sorted per-vertex neighbor lists.
///
/// Invariants: no self-loops, no parallel edges, and adjacency is symmetric.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// A graph on `n` vertices with no edges.
    pub fn edgeless(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from an edge list, validating the simple-graph invariants.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::edgeless(n);
        for &(u, v) in edges {
            g.add_edge_checked(u, v)?;
        }
        for nbrs in &mut g.adj {
            nbrs.sort_unstable();
        }
        Ok(g)
    }

    fn add_edge_checked(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.vertex_count();
        for id in [u, v] {
            if id >= n {
                return Err(GraphError::VertexOutOfRange { id, n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if self.adj[u].contains(&v) {
            return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.adj[u].push(v);
        self.adj[v].push(u);
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// All edges as `(u, v)` pairs with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, nbrs) in self.adj.iter().enumerate() {
            for &v in nbrs {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Open neighborhood, sorted ascending. Panics when `v` is out of range.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Closed neighborhood `N[v] = N(v) + {v}`, sorted ascending.
    /// Panics when `v` is out of range.
    pub fn closed_neighborhood(&self, v: usize) -> Vec<usize> {
        assert!(
            v < self.vertex_count(),
            "vertex {v} out of range for {} vertices",
            self.vertex_count()
        );
        let mut out = Vec::with_capacity(self.adj[v].len() + 1);
        let pos = self.adj[v].partition_point(|&u| u < v);
        out.extend_from_slice(&self.adj[v][..pos]);
        out.push(v);
        out.extend_from_slice(&self.adj[v][pos..]);
        out
    }

    /// Multiset domination: `a` dominates `b` iff for every element `v` of
    /// `b`, the copies of `N[v]` members in `a` number at least `count_b(v)`.
    ///
    /// Panics when either multiset holds an out-of-range vertex id.
    pub fn dominates(&self, a: &Multiset, b: &Multiset) -> bool {
        let n = self.vertex_count();
        for x in a.elements().chain(b.elements()) {
            assert!(x < n, "vertex {x} out of range for {n} vertices");
        }
        b.iter()
            .all(|(v, mult)| a.count_over_set(&self.closed_neighborhood(v)) >= mult)
    }

    /// All vertex ids as a multiset with multiplicity one.
    pub fn vertex_multiset(&self) -> Multiset {
        Multiset::from_elements(0..self.vertex_count())
    }

    // ---- generators ------------------------------------------------------

    /// Path on `n >= 1` vertices: edges `i`-`i+1`.
    pub fn path(n: usize) -> Result<Self, GraphError> {
        if n < 1 {
            return Err(GraphError::InvalidParameter("path requires n >= 1".into()));
        }
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges)
    }

    /// Cycle on `n >= 3` vertices in ring order.
    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        if n < 3 {
            return Err(GraphError::InvalidParameter("cycle requires n >= 3".into()));
        }
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges)
    }

    /// Complete graph on `n >= 1` vertices.
    pub fn complete(n: usize) -> Result<Self, GraphError> {
        if n < 1 {
            return Err(GraphError::InvalidParameter(
                "complete requires n >= 1".into(),
            ));
        }
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, &edges)
    }

    /// Star on `n >= 1` vertices: center 0 joined to every other vertex.
    pub fn star(n: usize) -> Result<Self, GraphError> {
        if n < 1 {
            return Err(GraphError::InvalidParameter("star requires n >= 1".into()));
        }
        let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
        Graph::from_edges(n, &edges)
    }

    /// Grid with `rows * cols` vertices in row-major order.
    pub fn grid(rows: usize, cols: usize) -> Result<Self, GraphError> {
        if rows < 1 || cols < 1 {
            return Err(GraphError::InvalidParameter(
                "grid requires rows, cols >= 1".into(),
            ));
        }
        let mut edges = Vec::new();
        for r in 0..rows {
            for c in 0..cols {
                let v = r * cols + c;
                if c + 1 < cols {
                    edges.push((v, v + 1));
                }
                if r + 1 < rows {
                    edges.push((v, v + cols));
                }
            }
        }
        Graph::from_edges(rows * cols, &edges)
    }

    /// Seeded G(n, p): every pair `(u, v)` with `u < v` is visited in
    /// lexicographic order and kept with probability `p`, so the same seed
    /// reproduces the same graph on every platform.
    pub fn random_gnp(n: usize, p: f64, seed: u64) -> Result<Self, GraphError> {
        if n < 1 {
            return Err(GraphError::InvalidParameter(
                "random_gnp requires n >= 1".into(),
            ));
        }
        if !(0.0..=1.0).contains(&p) {
            return Err(GraphError::InvalidParameter(format!(
                "edge probability {p} outside [0,1]"
            )));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.gen::<f64>() < p {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(n, &edges)
    }

    /// Disjoint union; vertices of `other` are shifted past `self`'s.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let offset = self.vertex_count();
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|nbrs| nbrs.iter().map(|&v| v + offset).collect()),
        );
        Graph { adj }
    }

    // ---- edge-list file format -------------------------------------------

    /// Parses the edge-list format: a mandatory `n <count>` header, then
    /// `e <u> <v>` lines. `#`-lines are comments, blank lines are skipped.
    pub fn parse_edge_list(text: &str) -> Result<Self, EdgeListError> {
        let mut graph: Option<Graph> = None;
        let mut last_line = 0;
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            last_line = line;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let mut parts = trimmed.split_whitespace();
            let tag = parts.next().unwrap();
            match tag {
                "n" => {
                    if graph.is_some() {
                        return Err(EdgeListError {
                            line,
                            kind: EdgeListErrorKind::MalformedHeader("duplicate header".into()),
                        });
                    }
                    let count = parts
                        .next()
                        .and_then(|s| s.parse::<usize>().ok())
                        .ok_or_else(|| EdgeListError {
                            line,
                            kind: EdgeListErrorKind::MalformedHeader(trimmed.to_string()),
                        })?;
                    if parts.next().is_some() {
                        return Err(EdgeListError {
                            line,
                            kind: EdgeListErrorKind::MalformedHeader(trimmed.to_string()),
                        });
                    }
                    graph = Some(Graph::edgeless(count));
                }
                "e" => {
                    let g = graph.as_mut().ok_or(EdgeListError {
                        line,
                        kind: EdgeListErrorKind::MissingHeader,
                    })?;
                    let mut next_id = || {
                        parts
                            .next()
                            .and_then(|s| s.parse::<usize>().ok())
                            .ok_or(EdgeListError {
                                line,
                                kind: EdgeListErrorKind::MalformedEdge(trimmed.to_string()),
                            })
                    };
                    let u = next_id()?;
                    let v = next_id()?;
                    if parts.next().is_some() {
                        return Err(EdgeListError {
                            line,
                            kind: EdgeListErrorKind::MalformedEdge(trimmed.to_string()),
                        });
                    }
                    g.add_edge_checked(u, v).map_err(|e| EdgeListError {
                        line,
                        kind: match e {
                            GraphError::SelfLoop(u) => EdgeListErrorKind::SelfLoop(u),
                            GraphError::DuplicateEdge(u, v) => {
                                EdgeListErrorKind::DuplicateEdge(u, v)
                            }
                            GraphError::VertexOutOfRange { id, n } => {
                                EdgeListErrorKind::VertexOutOfRange { id, n }
                            }
                            GraphError::InvalidParameter(m) => EdgeListErrorKind::MalformedEdge(m),
                        },
                    })?;
                }
                other => {
                    return Err(EdgeListError {
                        line,
                        kind: EdgeListErrorKind::UnknownLineType(other.to_string()),
                    });
                }
            }
        }
        let mut g = graph.ok_or(EdgeListError {
            line: last_line + 1,
            kind: EdgeListErrorKind::MissingHeader,
        })?;
        for nbrs in &mut g.adj {
            nbrs.sort_unstable();
        }
        Ok(g)
    }

    /// Serializes to the edge-list format; `parse_edge_list` round-trips it.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("n {}\n", self.vertex_count());
        for (u, v) in self.edges() {
            out.push_str(&format!("e {u} {v}\n"));
        }
        out
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "graph(n={}, m={})",
            self.vertex_count(),
            self.edge_count()
        )
    }
}

/// Graph generator families with their parameters.
#[derive(Debug, Clone, PartialEq)]
pub enum Family {
    Path { n: usize },
    Cycle { n: usize },
    Complete { n: usize },
    Star { n: usize },
    Grid { rows: usize, cols: usize },
    RandomGnp { n: usize, p: f64, seed: u64 },
    DisjointUnion(Box<Family>, Box<Family>),
}

impl Family {
    /// Deterministic graph for the family and parameters.
    pub fn generate(&self) -> Result<Graph, GraphError> {
        match self {
            Family::Path { n } => Graph::path(*n),
            Family::Cycle { n } => Graph::cycle(*n),
            Family::Complete { n } => Graph::complete(*n),
            Family::Star { n } => Graph::star(*n),
            Family::Grid { rows, cols } => Graph::grid(*rows, *cols),
            Family::RandomGnp { n, p, seed } => Graph::random_gnp(*n, *p, *seed),
            Family::DisjointUnion(a, b) => Ok(a.generate()?.disjoint_union(&b.generate()?)),
        }
    }

    /// Short family name, e.g. `path`.
    pub fn name(&self) -> &'static str {
        match self {
            Family::Path { .. } => "path",
            Family::Cycle { .. } => "cycle",
            Family::Complete { .. } => "complete",
            Family::Star { .. } => "star",
            Family::Grid { .. } => "grid",
            Family::RandomGnp { .. } => "random_gnp",
            Family::DisjointUnion(..) => "disjoint_union",
        }
    }

    /// Parameter string with no commas, e.g. `n=4` or `n=3;p=0.3;seed=7`.
    pub fn params(&self) -> String {
        match self {
            Family::Path { n }
            | Family::Cycle { n }
            | Family::Complete { n }
            | Family::Star { n } => format!("n={n}"),
            Family::Grid { rows, cols } => format!("rows={rows};cols={cols}"),
            Family::RandomGnp { n, p, seed } => format!("n={n};p={p};seed={seed}"),
            Family::DisjointUnion(a, b) => format!(
                "[{} {}]+[{} {}]",
                a.name(),
                a.params(),
                b.name(),
                b.params()
            ),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_neighborhood_includes_self() {
        let p3 = Graph::path(3).unwrap();
        assert_eq!(p3.closed_neighborhood(1), vec![0, 1, 2]);
        let lone = Graph::edgeless(4);
        assert_eq!(lone.closed_neighborhood(2), vec![2]);
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(k4.closed_neighborhood(1), vec![0, 1, 2, 3]);
    }

    #[test]
    #[should_panic(expected = "out of range")]
    fn closed_neighborhood_rejects_bad_vertex() {
        Graph::path(3).unwrap().closed_neighborhood(3);
    }

    #[test]
    fn dominates_counts_with_multiplicity() {
        let p3 = Graph::path(3).unwrap();
        let center = Multiset::from_elements([1]);
        assert!(p3.dominates(&center, &Multiset::from_elements([0, 1, 2])));
        assert!(!p3.dominates(&center, &Multiset::from_elements([0, 0])));
        assert!(p3.dominates(&Multiset::new(), &Multiset::new()));
        assert!(!p3.dominates(&Multiset::new(), &Multiset::from_elements([1])));
    }

    #[test]
    fn generators_have_expected_shapes() {
        let p4 = Graph::path(4).unwrap();
        assert_eq!(p4.edges(), vec![(0, 1), (1, 2), (2, 3)]);
        assert_eq!(Graph::complete(3).unwrap().edge_count(), 3);
        assert_eq!(Graph::cycle(5).unwrap().edge_count(), 5);
        assert_eq!(Graph::star(5).unwrap().degree(0), 4);
        let grid = Graph::grid(2, 3).unwrap();
        assert_eq!(grid.vertex_count(), 6);
        assert_eq!(grid.edge_count(), 7);

        let both = p4.disjoint_union(&Graph::edgeless(1));
        assert_eq!(both.vertex_count(), 5);
        assert_eq!(both.edge_count(), 3);
    }

    #[test]
    fn generators_reject_bad_parameters() {
        assert!(Graph::path(0).is_err());
        assert!(Graph::cycle(2).is_err());
        assert!(Graph::random_gnp(3, 1.5, 0).is_err());
    }

    #[test]
    fn random_gnp_is_reproducible() {
        let a = Graph::random_gnp(8, 0.4, 123).unwrap();
        let b = Graph::random_gnp(8, 0.4, 123).unwrap();
        assert_eq!(a, b);
        assert_eq!(Graph::random_gnp(5, 0.0, 9).unwrap().edge_count(), 0);
        assert_eq!(Graph::random_gnp(5, 1.0, 9).unwrap().edge_count(), 10);
    }

    #[test]
    fn edge_list_round_trips() {
        let g = Graph::parse_edge_list("n 2\ne 0 1").unwrap();
        assert_eq!(g, Graph::complete(2).unwrap());
        let isolated = Graph::parse_edge_list("n 3").unwrap();
        assert_eq!(isolated, Graph::edgeless(3));

        let grid = Graph::grid(3, 3).unwrap();
        assert_eq!(Graph::parse_edge_list(&grid.to_edge_list()).unwrap(), grid);
    }

    #[test]
    fn edge_list_reports_line_numbers() {
        let err = Graph::parse_edge_list("n 2\ne 0 0").unwrap_err();
        assert_eq!(err.line, 2);
        assert_eq!(err.kind, EdgeListErrorKind::SelfLoop(0));

        let err = Graph::parse_edge_list("# hi\nn 2\ne 0 1\ne 1 0").unwrap_err();
        assert_eq!(err.line, 4);
        assert_eq!(err.kind, EdgeListErrorKind::DuplicateEdge(0, 1));

        let err = Graph::parse_edge_list("n 2\ne 0 5").unwrap_err();
        assert_eq!(err.line, 2);
        assert_eq!(
            err.kind,
            EdgeListErrorKind::VertexOutOfRange { id: 5, n: 2 }
        );

        let err = Graph::parse_edge_list("e 0 1\nn 2").unwrap_err();
        assert_eq!(err.line, 1);
        assert_eq!(err.kind, EdgeListErrorKind::MissingHeader);

        let err = Graph::parse_edge_list("n two").unwrap_err();
        assert_eq!(err.line, 1);

        assert!(Graph::parse_edge_list("# only comments\n").is_err());
    }

    #[test]
    fn comments_and_blanks_are_ignored() {
        let g = Graph::parse_edge_list("# path\n\nn 3\n e 0 1 \n# mid\ne 1 2\n\n").unwrap();
        assert_eq!(g, Graph::path(3).unwrap());
    }
}
