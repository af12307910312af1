//! Immutable simple graphs with a canonical edge indexing.
//!
//! Vertices of a graph on `n` vertices are `0..n`. The edge list is kept
//! sorted lexicographically; that order is the canonical edge indexing used
//! by every matrix in the crate.

pub(crate) mod connectivity;
mod enumerate;
mod families;
mod g6;
mod ops;

pub use connectivity::TwoSeparation;
pub use enumerate::{are_isomorphic, canonical_edge_mask, enumerate_dense, enumerate_graphs};
pub use g6::{decode as graph6_decode, encode as graph6_encode};

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {0} out of range for {1} vertices")]
    VertexOutOfRange(usize, usize),
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("({0}, {1}) is not an edge")]
    NotAnEdge(usize, usize),
    #[error("({0}, {1}) is already an edge")]
    AlreadyAnEdge(usize, usize),
    #[error("unknown graph family '{0}'")]
    UnknownFamily(String),
    #[error("invalid parameters for family '{family}': {reason}")]
    InvalidParams { family: String, reason: String },
    #[error("edge split needs {expected} extra vertices, got {got}")]
    WrongExtraCount { expected: usize, got: usize },
    #[error("invalid extra vertex {0} for edge split")]
    InvalidExtraVertex(usize),
    #[error("vertices must be distinct")]
    EqualVertices,
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("enumeration supports n <= {limit}, got {n}; use an external graph6 stream")]
    EnumerationTooLarge { n: usize, limit: usize },
    #[error("dense enumeration at n = 8 requires min_edges >= 15, got {0}")]
    DenseBoundTooLow(usize),
}

/// Unordered pair of distinct vertices, stored with the smaller first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct VertexPair {
    u: usize,
    v: usize,
}

impl VertexPair {
    pub fn new(a: usize, b: usize) -> Result<Self, GraphError> {
        if a == b {
            return Err(GraphError::Loop(a));
        }
        Ok(VertexPair {
            u: a.min(b),
            v: a.max(b),
        })
    }

    pub fn u(&self) -> usize {
        self.u
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn contains(&self, x: usize) -> bool {
        self.u == x || self.v == x
    }

    /// The endpoint other than `x`; panics if `x` is not an endpoint.
    pub fn other(&self, x: usize) -> usize {
        if x == self.u {
            self.v
        } else {
            assert_eq!(x, self.v, "vertex {} not an endpoint", x);
            self.u
        }
    }
}

/// Finite simple graph. Immutable after construction; cheap to clone and
/// safe to share between workers.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<VertexPair>,
}

impl Graph {
    /// Builds a graph from an edge list, validating simplicity and sorting
    /// the edges into the canonical order.
    pub fn new(n: usize, edges: Vec<VertexPair>) -> Result<Self, GraphError> {
        let mut edges = edges;
        for e in &edges {
            if e.v >= n {
                return Err(GraphError::VertexOutOfRange(e.v, n));
            }
        }
        edges.sort();
        for w in edges.windows(2) {
            if w[0] == w[1] {
                return Err(GraphError::DuplicateEdge(w[0].u, w[0].v));
            }
        }
        Ok(Graph { n, edges })
    }

    /// Convenience constructor from `(u, v)` tuples.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let pairs = edges
            .iter()
            .map(|&(a, b)| {
                if a >= n {
                    return Err(GraphError::VertexOutOfRange(a, n));
                }
                if b >= n {
                    return Err(GraphError::VertexOutOfRange(b, n));
                }
                VertexPair::new(a, b)
            })
            .collect::<Result<Vec<_>, _>>()?;
        Graph::new(n, pairs)
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical (lexicographic) order.
    pub fn edges(&self) -> &[VertexPair] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> VertexPair {
        self.edges[index]
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        VertexPair::new(a, b)
            .map(|e| self.edges.binary_search(&e).is_ok())
            .unwrap_or(false)
    }

    /// Canonical index of the edge `{a, b}`, if present.
    pub fn edge_index(&self, a: usize, b: usize) -> Option<usize> {
        let e = VertexPair::new(a, b).ok()?;
        self.edges.binary_search(&e).ok()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.contains(v)).count()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter(|e| e.contains(v))
            .map(|e| e.other(v))
            .collect();
        out.sort_unstable();
        out
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for e in &self.edges {
            adj[e.u].push(e.v);
            adj[e.v].push(e.u);
        }
        adj
    }

    pub fn has_isolated_vertex(&self) -> bool {
        let mut seen = vec![false; self.n];
        for e in &self.edges {
            seen[e.u] = true;
            seen[e.v] = true;
        }
        seen.iter().any(|&s| !s)
    }

    pub fn is_complete(&self) -> bool {
        self.edges.len() == self.n * self.n.saturating_sub(1) / 2
    }

    pub fn add_edge(&self, a: usize, b: usize) -> Result<Graph, GraphError> {
        if a >= self.n {
            return Err(GraphError::VertexOutOfRange(a, self.n));
        }
        if b >= self.n {
            return Err(GraphError::VertexOutOfRange(b, self.n));
        }
        let e = VertexPair::new(a, b)?;
        if self.has_edge(a, b) {
            return Err(GraphError::AlreadyAnEdge(e.u, e.v));
        }
        let mut edges = self.edges.clone();
        edges.push(e);
        Graph::new(self.n, edges)
    }

    pub fn remove_edge(&self, a: usize, b: usize) -> Result<Graph, GraphError> {
        let e = VertexPair::new(a, b)?;
        let idx = self
            .edges
            .binary_search(&e)
            .map_err(|_| GraphError::NotAnEdge(e.u, e.v))?;
        let mut edges = self.edges.clone();
        edges.remove(idx);
        Ok(Graph { n: self.n, edges })
    }

    /// Graph with vertex `v` removed. Remaining vertices are relabeled
    /// downward to stay contiguous (w > v becomes w - 1).
    pub fn remove_vertex(&self, v: usize) -> Result<Graph, GraphError> {
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange(v, self.n));
        }
        let map = |w: usize| if w > v { w - 1 } else { w };
        let edges = self
            .edges
            .iter()
            .filter(|e| !e.contains(v))
            .map(|e| VertexPair::new(map(e.u), map(e.v)).unwrap())
            .collect();
        Graph::new(self.n - 1, edges)
    }

    /// Subgraph induced by a vertex set. Vertices are relabeled by their
    /// position in the sorted set; the returned map sends new ids to the
    /// old ones.
    pub fn induced(&self, vertices: &[usize]) -> (Graph, Vec<usize>) {
        let mut vs: Vec<usize> = vertices.to_vec();
        vs.sort_unstable();
        vs.dedup();
        let mut back = vec![usize::MAX; self.n];
        for (new, &old) in vs.iter().enumerate() {
            back[old] = new;
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| back[e.u] != usize::MAX && back[e.v] != usize::MAX)
            .map(|e| VertexPair::new(back[e.u], back[e.v]).unwrap())
            .collect();
        (Graph::new(vs.len(), edges).unwrap(), vs)
    }

    /// Subgraph on the same vertex set keeping only the edges at the given
    /// canonical indices.
    pub fn edge_subgraph(&self, indices: &[usize]) -> Graph {
        let edges = indices.iter().map(|&i| self.edges[i]).collect();
        Graph::new(self.n, edges).unwrap()
    }

    /// Number of edges with both ends inside `inside` (given as a mask).
    pub fn edges_within(&self, inside: &[bool]) -> usize {
        self.edges
            .iter()
            .filter(|e| inside[e.u] && inside[e.v])
            .count()
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        connectivity::component_count(self) == 1
    }

    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        connectivity::components(self)
    }

    pub fn kappa(&self, u: usize, v: usize) -> Result<usize, GraphError> {
        connectivity::kappa(self, u, v)
    }

    pub fn is_k_connected(&self, k: usize) -> bool {
        connectivity::is_k_connected(self, k)
    }

    pub fn two_separations(&self) -> Vec<TwoSeparation> {
        connectivity::two_separations(self)
    }

    pub fn cone(&self) -> Graph {
        ops::cone(self)
    }

    pub fn graph6(&self) -> String {
        g6::encode(self)
    }

    /// True if the graph contains a complete subgraph on `k` vertices.
    pub fn has_clique(&self, k: usize) -> bool {
        enumerate::has_clique(self, k)
    }
}

pub use families::construct_family;
pub use ops::{edge_split, parallel_connection, two_sum};
