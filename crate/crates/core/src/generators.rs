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

//! Deterministic constructions of the pseudofractal scale-free web and the
//! Sierpinski gasket.

use std::fmt;
use std::str::FromStr;

use crate::error::{capacity_err, input_err, Error, Result};
use crate::graph::Graph;

/// Largest generation the builders will materialize (`3^18` edges).
pub const MAX_BUILD_GENERATION: u32 = 18;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    /// Pseudofractal scale-free web.
    Web,
    /// Sierpinski gasket.
    Gasket,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Web => "web",
            Family::Gasket => "gasket",
        }
    }

    /// Builds generation `n` of this family (merge construction for the gasket,
    /// iterative construction for the web).
    pub fn build(self, n: Generation) -> Result<Graph> {
        match self {
            Family::Web => build_web_iterative(n),
            Family::Gasket => build_gasket(n),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "web" => Ok(Family::Web),
            "gasket" => Ok(Family::Gasket),
            _ => input_err(format!("unknown family {s:?} (expected web or gasket)")),
        }
    }
}

/// Generation index, `n >= 1`; generation 1 is the triangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Generation(u32);

impl Generation {
    pub fn new(n: u32) -> Result<Generation> {
        if n >= 1 {
            Ok(Generation(n))
        } else {
            input_err("generation must be at least 1")
        }
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

impl fmt::Display for Generation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// `3^n`, the edge count of generation `n` in both families.
pub fn edge_count(n: Generation) -> Result<u64> {
    3u64.checked_pow(n.get())
        .ok_or_else(|| Error::Capacity(format!("3^{n} does not fit in 64 bits")))
}

/// `(3^n + 3) / 2`, the vertex count of generation `n` in both families.
pub fn vertex_count(n: Generation) -> Result<u64> {
    let e = edge_count(n)?;
    e.checked_add(3)
        .map(|v| v / 2)
        .ok_or_else(|| Error::Capacity(format!("vertex count of generation {n} overflows")))
}

fn check_buildable(n: Generation) -> Result<usize> {
    if n.get() > MAX_BUILD_GENERATION {
        return capacity_err(format!(
            "generation {n} exceeds the build cap of {MAX_BUILD_GENERATION}"
        ));
    }
    usize::try_from(edge_count(n)?)
        .map_err(|_| Error::Capacity(format!("3^{n} edges exceed the platform index type")))
}

/// Grows `G_n` by attaching a new vertex to both ends of every edge, once per
/// generation.
///
/// Vertices 0, 1, 2 are the initial clique (the anchors). Each sweep creates
/// new vertices in ascending order of the parent edge's index.
pub fn build_web_iterative(n: Generation) -> Result<Graph> {
    check_buildable(n)?;
    let mut g = Graph::triangle();
    for _ in 1..n.get() {
        let mut next_id = g.vertex_count();
        let mut pairs: Vec<(usize, usize)> = Vec::with_capacity(3 * g.edge_count());
        for e in g.edges() {
            let (u, v) = e.endpoints();
            pairs.push((u.0, v.0));
        }
        for e in g.edges() {
            let (u, v) = e.endpoints();
            pairs.push((u.0, next_id));
            pairs.push((v.0, next_id));
            next_id += 1;
        }
        g = Graph::new(next_id, &pairs, [0, 1, 2])?;
    }
    Ok(g)
}

/// Anchor roles within one copy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Role {
    A = 0,
    B = 1,
    C = 2,
}

type Slot = (usize, Role);

struct MergeRule {
    /// Anchor pairs fused when three copies are merged.
    fuse: [(Slot, Slot); 3],
    /// Where the merged graph's anchors A, B, C come from.
    anchors: [Slot; 3],
}

const WEB_MERGE: MergeRule = MergeRule {
    fuse: [
        ((0, Role::A), (2, Role::B)),
        ((0, Role::C), (1, Role::B)),
        ((1, Role::A), (2, Role::C)),
    ],
    anchors: [(0, Role::A), (0, Role::C), (1, Role::A)],
};

const GASKET_MERGE: MergeRule = MergeRule {
    fuse: [
        ((0, Role::B), (1, Role::A)),
        ((0, Role::C), (2, Role::A)),
        ((1, Role::C), (2, Role::B)),
    ],
    anchors: [(0, Role::A), (1, Role::B), (2, Role::C)],
};

/// Merges three copies of `g`.
///
/// Copy 1 keeps its labels, copies 2 and 3 are offset by `|V|` and `2|V|`;
/// each fused pair takes the smaller label, then labels are compacted in
/// ascending order.
fn merge_three(g: &Graph, rule: &MergeRule) -> Result<Graph> {
    let nv = g.vertex_count();
    let anchors = g.anchors();
    let slot = |(copy, role): Slot| copy * nv + anchors[role as usize].0;

    let mut rep: Vec<usize> = (0..3 * nv).collect();
    for &(a, b) in &rule.fuse {
        let (x, y) = (slot(a), slot(b));
        let (lo, hi) = (x.min(y), x.max(y));
        rep[hi] = lo;
    }
    let mut label = vec![usize::MAX; 3 * nv];
    let mut next = 0;
    for v in 0..3 * nv {
        if rep[v] == v {
            label[v] = next;
            next += 1;
        }
    }
    let relabel = |v: usize| label[rep[v]];

    let mut pairs = Vec::with_capacity(3 * g.edge_count());
    for copy in 0..3 {
        for e in g.edges() {
            let (u, v) = e.endpoints();
            pairs.push((relabel(copy * nv + u.0), relabel(copy * nv + v.0)));
        }
    }
    let new_anchors = rule.anchors.map(|s| relabel(slot(s)));
    Graph::new(next, &pairs, new_anchors)
}

fn build_by_merging(n: Generation, rule: &MergeRule) -> Result<Graph> {
    check_buildable(n)?;
    let mut g = Graph::triangle();
    for _ in 1..n.get() {
        g = merge_three(&g, rule)?;
    }
    Ok(g)
}

/// `G_n` by merging three copies of `G_{n-1}` at their hubs.
pub fn build_web_merge(n: Generation) -> Result<Graph> {
    build_by_merging(n, &WEB_MERGE)
}

/// `S_n` by merging three copies of `S_{n-1}` at their outmost vertices.
/// Anchors are the topmost, leftmost and rightmost vertices.
pub fn build_gasket(n: Generation) -> Result<Graph> {
    build_by_merging(n, &GASKET_MERGE)
}
