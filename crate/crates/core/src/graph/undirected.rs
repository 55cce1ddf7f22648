use super::VertexId;
use crate::error::{Error, Result};

/// Simple undirected graph: at most one edge per unordered pair, no self-edges.
/// Edges are stored as `(min, max)` pairs in ascending order; an edge's id is
/// its position in [`UndirectedGraph::edges`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UndirectedGraph {
    n: usize,
    edges: Vec<(VertexId, VertexId)>,
    adj: Vec<Vec<(VertexId, usize)>>,
}

impl UndirectedGraph {
    /// Builds a graph from arbitrary pairs; repeated pairs collapse to one edge.
    pub fn new(n: usize, pairs: impl IntoIterator<Item = (VertexId, VertexId)>) -> Result<Self> {
        let mut edges = Vec::new();
        for (u, v) in pairs {
            if u >= n || v >= n {
                return Err(Error::UnknownVertex(u.max(v)));
            }
            if u == v {
                return Err(Error::SelfLoop {
                    line: 0,
                    label: u.to_string(),
                });
            }
            edges.push((u.min(v), u.max(v)));
        }
        edges.sort_unstable();
        edges.dedup();
        Ok(Self::from_normalized(n, edges))
    }

    pub(crate) fn from_normalized(n: usize, edges: Vec<(VertexId, VertexId)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for (id, &(u, v)) in edges.iter().enumerate() {
            adj[u].push((v, id));
            adj[v].push((u, id));
        }
        Self { n, edges, adj }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    /// Neighbors of `v` with the id of the connecting edge.
    pub fn neighbors(&self, v: VertexId) -> &[(VertexId, usize)] {
        &self.adj[v]
    }
}
