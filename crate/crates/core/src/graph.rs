use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Labeled simple graph on vertices `0..n` backed by an adjacency bit matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    rows: Vec<FixedBitSet>,
    degrees: Vec<usize>,
    edge_count: usize,
}

impl SimpleGraph {
    pub fn empty(n: usize) -> Self {
        Self {
            rows: vec![FixedBitSet::with_capacity(n); n],
            degrees: vec![0; n],
            edge_count: 0,
        }
    }

    /// Builds a graph from an edge list, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Self::empty(n);
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge {{{u}, {v}}} out of range for {n} vertices"
                )));
            }
            if !g.add_edge(u, v) {
                return Err(Error::InvalidGraph(format!(
                    "edge {{{u}, {v}}} is a loop or duplicate"
                )));
            }
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn degree(&self, v: usize) -> usize {
        self.degrees[v]
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    /// Degrees sorted nonincreasing.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d = self.degrees.clone();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.rows[u].contains(v)
    }

    /// Inserts `{u, v}`. Returns `false` (and changes nothing) for loops and
    /// edges already present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> bool {
        if u == v || self.rows[u].contains(v) {
            return false;
        }
        self.rows[u].insert(v);
        self.rows[v].insert(u);
        self.degrees[u] += 1;
        self.degrees[v] += 1;
        self.edge_count += 1;
        true
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        if u == v || !self.rows[u].contains(v) {
            return false;
        }
        self.rows[u].set(v, false);
        self.rows[v].set(u, false);
        self.degrees[u] -= 1;
        self.degrees[v] -= 1;
        self.edge_count -= 1;
        true
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.rows[v].ones()
    }

    pub(crate) fn row(&self, v: usize) -> &FixedBitSet {
        &self.rows[v]
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.ones().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn is_k_regular(&self, k: usize) -> bool {
        self.degrees.iter().all(|&d| d == k)
    }

    pub fn is_edge_disjoint(&self, other: &SimpleGraph) -> bool {
        self.n() == other.n() && self.rows.iter().zip(&other.rows).all(|(a, b)| a.is_disjoint(b))
    }

    /// Edge union of two edge-disjoint graphs on the same vertex set.
    pub fn union(&self, other: &SimpleGraph) -> Result<SimpleGraph> {
        if self.n() != other.n() {
            return Err(Error::VertexCountMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        let mut g = self.clone();
        for (u, v) in other.edges() {
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub fn complement(&self) -> SimpleGraph {
        let n = self.n();
        let mut g = SimpleGraph::empty(n);
        for u in 0..n {
            let mut row = self.rows[u].clone();
            row.toggle_range(..);
            row.set(u, false);
            g.degrees[u] = row.count_ones(..);
            g.rows[u] = row;
        }
        g.edge_count = g.degrees.iter().sum::<usize>() / 2;
        g
    }
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimpleGraph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Wire form: `{"n": 3, "edges": [[0, 1], [1, 2]]}` with sorted edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl From<&SimpleGraph> for GraphJson {
    fn from(g: &SimpleGraph) -> Self {
        GraphJson {
            n: g.n(),
            edges: g.edges().map(|(u, v)| [u, v]).collect(),
        }
    }
}

impl TryFrom<GraphJson> for SimpleGraph {
    type Error = Error;

    fn try_from(g: GraphJson) -> Result<Self> {
        SimpleGraph::from_edges(g.n, g.edges.into_iter().map(|[u, v]| (u, v)))
    }
}

impl Serialize for SimpleGraph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GraphJson::from(self).serialize(s)
    }
}

/// Undirected DOT: one `i -- j;` line per edge in ascending order, every
/// vertex declared so isolated vertices survive the round trip.
pub fn to_dot(g: &SimpleGraph) -> String {
    let mut out = String::from("graph {\n");
    for v in 0..g.n() {
        out.push_str(&format!("  {v};\n"));
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}
