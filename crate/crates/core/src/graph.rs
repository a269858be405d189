// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! Immutable undirected simple graphs with three anchor vertices.

use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{input_err, Error, Result};

/// Dense 0-based vertex identifier.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub usize);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Undirected edge stored in canonical form (`u < v`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    u: VertexId,
    v: VertexId,
}

impl Edge {
    pub fn new(a: usize, b: usize) -> Result<Edge> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Ok(Edge {
                u: VertexId(a),
                v: VertexId(b),
            }),
            std::cmp::Ordering::Greater => Ok(Edge {
                u: VertexId(b),
                v: VertexId(a),
            }),
            std::cmp::Ordering::Equal => input_err(format!("self-loop at vertex {a}")),
        }
    }

    /// The endpoints, smaller id first.
    pub fn endpoints(&self) -> (VertexId, VertexId) {
        (self.u, self.v)
    }

    pub fn touches(&self, w: VertexId) -> bool {
        self.u == w || self.v == w
    }

    pub fn shares_endpoint(&self, other: &Edge) -> bool {
        self.touches(other.u) || self.touches(other.v)
    }
}

/// An undirected simple graph with stable dense edge indices and three
/// distinguished anchor vertices.
///
/// Edges are kept sorted by `(u, v)`; an edge's index is its position in that
/// order. Each adjacency entry pairs a neighbour with the connecting edge's
/// index, sorted by neighbour.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n_vertices: usize,
    edges: Vec<Edge>,
    adjacency: Vec<Vec<(VertexId, usize)>>,
    anchors: [VertexId; 3],
}

impl Graph {
    /// Builds a graph from endpoint pairs in any order or orientation.
    pub fn new(n_vertices: usize, pairs: &[(usize, usize)], anchors: [usize; 3]) -> Result<Graph> {
        let mut edges = Vec::with_capacity(pairs.len());
        for &(a, b) in pairs {
            if a >= n_vertices || b >= n_vertices {
                return input_err(format!(
                    "edge ({a}, {b}) references a vertex outside 0..{n_vertices}"
                ));
            }
            edges.push(Edge::new(a, b)?);
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            let (u, v) = w[0].endpoints();
            return input_err(format!("duplicate edge ({u}, {v})"));
        }
        for &a in &anchors {
            if a >= n_vertices {
                return input_err(format!("anchor {a} outside 0..{n_vertices}"));
            }
        }
        if anchors[0] == anchors[1] || anchors[0] == anchors[2] || anchors[1] == anchors[2] {
            return input_err(format!("anchors {anchors:?} are not distinct"));
        }
        let adjacency = build_adjacency(n_vertices, &edges);
        Ok(Graph {
            n_vertices,
            edges,
            adjacency,
            anchors: anchors.map(VertexId),
        })
    }

    /// The 3-clique on vertices 0, 1, 2, all of them anchors.
    pub fn triangle() -> Graph {
        Graph::new(3, &[(0, 1), (0, 2), (1, 2)], [0, 1, 2]).expect("triangle is valid")
    }

    pub fn vertex_count(&self) -> usize {
        self.n_vertices
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> Result<Edge> {
        self.edges
            .get(e)
            .copied()
            .ok_or_else(|| Error::Input(format!("edge index {e} outside 0..{}", self.edges.len())))
    }

    pub fn anchors(&self) -> [VertexId; 3] {
        self.anchors
    }

    pub fn adjacency(&self, v: VertexId) -> Result<&[(VertexId, usize)]> {
        self.check_vertex(v)?;
        Ok(&self.adjacency[v.0])
    }

    pub fn degree(&self, v: VertexId) -> Result<usize> {
        Ok(self.adjacency(v)?.len())
    }

    /// Indices of the edges incident to `v`, ascending.
    pub fn incident_edges(&self, v: VertexId) -> Result<Vec<usize>> {
        let mut out: Vec<usize> = self.adjacency(v)?.iter().map(|&(_, e)| e).collect();
        out.sort_unstable();
        Ok(out)
    }

    /// Whether two distinct edges share an endpoint.
    pub fn edges_adjacent(&self, e1: usize, e2: usize) -> Result<bool> {
        if e1 == e2 {
            return input_err(format!(
                "adjacency is defined between distinct edges, got {e1} twice"
            ));
        }
        Ok(self.edge(e1)?.shares_endpoint(&self.edge(e2)?))
    }

    /// Sorted degree sequence.
    pub fn degree_multiset(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.adjacency.iter().map(Vec::len).collect();
        d.sort_unstable();
        d
    }

    pub fn is_connected(&self) -> bool {
        if self.n_vertices == 0 {
            return true;
        }
        let mut seen = vec![false; self.n_vertices];
        let mut stack = vec![0];
        seen[0] = true;
        let mut reached = 1;
        while let Some(v) = stack.pop() {
            for &(w, _) in &self.adjacency[v] {
                if !seen[w.0] {
                    seen[w.0] = true;
                    reached += 1;
                    stack.push(w.0);
                }
            }
        }
        reached == self.n_vertices
    }

    /// Checks the stored adjacency against a rebuild from the edge list.
    pub fn adjacency_is_consistent(&self) -> bool {
        build_adjacency(self.n_vertices, &self.edges) == self.adjacency
    }

    /// An empty edge set sized for this graph.
    pub fn empty_set(&self) -> EdgeSet {
        EdgeSet::empty(self.edge_count())
    }

    /// An edge set holding the given edge indices.
    pub fn edge_set(&self, indices: &[usize]) -> Result<EdgeSet> {
        let mut s = self.empty_set();
        for &e in indices {
            if e >= self.edge_count() {
                return input_err(format!("edge index {e} outside 0..{}", self.edge_count()));
            }
            s.insert(e);
        }
        Ok(s)
    }

    /// Index of the edge joining `a` and `b`, if present.
    pub fn find_edge(&self, a: usize, b: usize) -> Option<usize> {
        let key = Edge::new(a, b).ok()?;
        self.edges.binary_search(&key).ok()
    }

    fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v.0 < self.n_vertices {
            Ok(())
        } else {
            input_err(format!("vertex {v} outside 0..{}", self.n_vertices))
        }
    }
}

fn build_adjacency(n_vertices: usize, edges: &[Edge]) -> Vec<Vec<(VertexId, usize)>> {
    let mut adjacency = vec![Vec::new(); n_vertices];
    for (i, e) in edges.iter().enumerate() {
        adjacency[e.u.0].push((e.v, i));
        adjacency[e.v.0].push((e.u, i));
    }
    for list in &mut adjacency {
        list.sort_unstable();
    }
    adjacency
}

/// A subset of a graph's edges, as a bitset over edge indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeSet {
    bits: FixedBitSet,
}

impl EdgeSet {
    pub fn empty(len: usize) -> EdgeSet {
        EdgeSet {
            bits: FixedBitSet::with_capacity(len),
        }
    }

    pub fn full(len: usize) -> EdgeSet {
        let mut bits = FixedBitSet::with_capacity(len);
        bits.insert_range(..);
        EdgeSet { bits }
    }

    /// Builds a set from the low `len` bits of `mask`.
    pub fn from_mask(len: usize, mask: u64) -> EdgeSet {
        let mut s = EdgeSet::empty(len);
        for e in 0..len.min(64) {
            if mask >> e & 1 == 1 {
                s.insert(e);
            }
        }
        s
    }

    /// The set as a 64-bit mask; `None` for sets longer than 64 edges.
    pub fn to_mask(&self) -> Option<u64> {
        if self.len() > 64 {
            return None;
        }
        Some(self.bits.ones().fold(0u64, |m, e| m | 1 << e))
    }

    /// Number of edges in the owning graph.
    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.len() == 0
    }

    pub fn cardinality(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn contains(&self, e: usize) -> bool {
        self.bits.contains(e)
    }

    pub fn insert(&mut self, e: usize) {
        self.bits.insert(e);
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    pub fn is_subset(&self, other: &EdgeSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn union_with(&mut self, other: &EdgeSet) {
        self.bits.union_with(&other.bits);
    }

    pub(crate) fn check_owner(&self, g: &Graph) -> Result<()> {
        if self.len() == g.edge_count() {
            Ok(())
        } else {
            input_err(format!(
                "edge set of length {} does not belong to a graph with {} edges",
                self.len(),
                g.edge_count()
            ))
        }
    }
}
