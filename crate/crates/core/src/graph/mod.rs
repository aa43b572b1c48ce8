//! Simple undirected graphs on at most 62 vertices.
//!
//! Adjacency is stored as one `u64` bit row per vertex, which keeps every
//! graph of interest (the extremal families and exhaustive sweeps) in a
//! handful of machine words and makes BFS a sequence of mask operations.

mod distance;
mod families;
pub mod graph6;

pub use distance::{apsp, DistanceMatrix};
pub use families::{
    cocktail_party, enumerate_n4_dvdr, extremal_family, make_complete, make_complete_multipartite,
    make_cycle, make_dvdr, make_path, make_star, FamilyKind, FamilySpec,
};
pub use graph6::{parse_graph6, to_graph6, Graph6Error};

use std::fmt;
use thiserror::Error;

/// Largest order representable by the dense bit rows (and by short graph6).
pub const MAX_ORDER: usize = 62;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph order must be between 1 and {MAX_ORDER}, got {0}")]
    UnsupportedOrder(usize),
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    VertexOutOfRange { u: usize, v: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("base graph is not regular (degrees range over {min}..={max})")]
    NotRegular { min: usize, max: usize },
    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),
}

/// A simple undirected graph with vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n == 0 || n > MAX_ORDER {
            return Err(GraphError::UnsupportedOrder(n));
        }
        Ok(Graph {
            n,
            rows: vec![0; n],
        })
    }

    /// Builds a graph from an edge list. Duplicate pairs collapse.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        if u >= self.n || v >= self.n {
            return Err(GraphError::VertexOutOfRange { u, v, n: self.n });
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.rows[u] |= 1 << v;
        self.rows[v] |= 1 << u;
        Ok(())
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.rows
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows[u] >> v & 1 == 1
    }

    /// Neighbourhood of `v` as a bit mask.
    #[inline]
    pub fn neighbor_mask(&self, v: usize) -> u64 {
        self.rows[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        BitIter(self.rows[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Edges `(u, v)` with `u < v`, in row order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| BitIter(self.rows[u] & !low_mask(u + 1)).map(move |v| (u, v)))
    }

    /// Mask with one bit set per vertex.
    #[inline]
    pub(crate) fn vertex_mask(&self) -> u64 {
        low_mask(self.n)
    }

    /// `Some(r)` if every vertex has degree `r`.
    pub fn regular_degree(&self) -> Option<usize> {
        let r = self.degree(0);
        (1..self.n).all(|v| self.degree(v) == r).then_some(r)
    }

    /// Breadth-first reachability from vertex 0.
    pub fn is_connected(&self) -> bool {
        let all = self.vertex_mask();
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0u64;
            for v in BitIter(frontier) {
                next |= self.rows[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen & all == all
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertex_mask();
        let rows = (0..self.n)
            .map(|v| !self.rows[v] & all & !(1u64 << v))
            .collect();
        Graph { n: self.n, rows }
    }

    /// Subgraph induced by all vertices except `v`, relabelled in order.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph, GraphError> {
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        self.induced(&keep)
    }

    /// Subgraph induced by `vertices`; vertex `vertices[i]` becomes `i`.
    pub fn induced(&self, vertices: &[usize]) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(vertices.len())?;
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &w) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, w) {
                    g.add_edge(i, j)?;
                }
            }
        }
        Ok(g)
    }

    /// Relabels vertex `v` as `perm[v]`. `perm` must be a permutation of `0..n`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length mismatch");
        let mut rows = vec![0u64; self.n];
        for (u, v) in self.edges() {
            rows[perm[u]] |= 1 << perm[v];
            rows[perm[v]] |= 1 << perm[u];
        }
        Graph { n: self.n, rows }
    }

    /// Lengths of the cycles of a 2-regular graph, sorted ascending.
    /// `None` if the graph is not 2-regular.
    pub fn cycle_lengths(&self) -> Option<Vec<usize>> {
        if self.regular_degree() != Some(2) {
            return None;
        }
        let mut seen = 0u64;
        let mut lengths = Vec::new();
        for start in 0..self.n {
            if seen >> start & 1 == 1 {
                continue;
            }
            // component size by flood fill; in a 2-regular graph each component is a cycle
            let mut comp = 1u64 << start;
            let mut frontier = comp;
            while frontier != 0 {
                let mut next = 0;
                for v in BitIter(frontier) {
                    next |= self.rows[v];
                }
                frontier = next & !comp;
                comp |= next;
            }
            seen |= comp;
            lengths.push(comp.count_ones() as usize);
        }
        lengths.sort_unstable();
        Some(lengths)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Convenience wrapper matching the edge-list constructor.
pub fn graph_from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
    Graph::from_edges(n, edges.iter().copied())
}

#[inline]
pub(crate) fn low_mask(k: usize) -> u64 {
    if k >= 64 {
        u64::MAX
    } else {
        (1u64 << k) - 1
    }
}

/// Iterates set bit positions in ascending order.
pub(crate) struct BitIter(pub(crate) u64);

impl Iterator for BitIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }
}
