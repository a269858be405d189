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

//! Brute-force ground truth: domination checks, anchor-state classification,
//! minimum edge dominating sets and class minima for small graphs.
//!
//! An edge set `s` dominates an edge when the edge is in `s` or shares an
//! endpoint with an edge of `s`. Each anchor is
//!
//! * [`AnchorState::Filled`] when some incident edge is in `s`,
//! * [`AnchorState::Empty`] when none is, but all incident edges are dominated,
//! * [`AnchorState::Cross`] otherwise.
//!
//! A set is a *relaxed* EDS when every undominated edge touches a cross
//! anchor. Class minima are taken over relaxed EDSs, grouped by the number of
//! filled and cross anchors.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use crate::error::{capacity_err, input_err, Error, Result};
use crate::graph::{EdgeSet, Graph};
use crate::scalar::Count;

/// Default cap on the number of edges the oracle will enumerate over.
pub const DEFAULT_EDGE_CAP: usize = 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AnchorState {
    Filled,
    Empty,
    Cross,
}

impl AnchorState {
    pub fn symbol(self) -> char {
        match self {
            AnchorState::Filled => 'F',
            AnchorState::Empty => 'E',
            AnchorState::Cross => 'X',
        }
    }

    fn from_digit(d: usize) -> AnchorState {
        match d {
            0 => AnchorState::Filled,
            1 => AnchorState::Empty,
            _ => AnchorState::Cross,
        }
    }

    fn digit(self) -> usize {
        self as usize
    }
}

/// Anchor states in the order of the graph's anchors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AnchorStateVector(pub [AnchorState; 3]);

impl AnchorStateVector {
    pub fn key(&self) -> ClassKey {
        let filled = self.0.iter().filter(|&&s| s == AnchorState::Filled).count() as u8;
        let cross = self.0.iter().filter(|&&s| s == AnchorState::Cross).count() as u8;
        ClassKey { filled, cross }
    }

    /// Base-3 code in `0..27` (`F = 0`, `E = 1`, `X = 2`, first anchor most
    /// significant); indexes the enumeration tallies.
    pub fn code(&self) -> usize {
        self.0[0].digit() * 9 + self.0[1].digit() * 3 + self.0[2].digit()
    }

    /// Inverse of [`AnchorStateVector::code`].
    pub fn from_code(code: usize) -> AnchorStateVector {
        AnchorStateVector([
            AnchorState::from_digit(code / 9),
            AnchorState::from_digit(code / 3 % 3),
            AnchorState::from_digit(code % 3),
        ])
    }
}

impl fmt::Display for AnchorStateVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in self.0 {
            write!(f, "{}", s.symbol())?;
        }
        Ok(())
    }
}

/// Number of filled and cross anchors. The filled count selects the class
/// letter (0 → a, 1 → b, 2 → c, 3 → d) and the cross count is its superscript.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ClassKey {
    filled: u8,
    cross: u8,
}

impl ClassKey {
    pub fn new(filled: u8, cross: u8) -> Result<ClassKey> {
        if filled as u16 + cross as u16 > 3 {
            return input_err(format!("filled {filled} + cross {cross} exceeds 3 anchors"));
        }
        Ok(ClassKey { filled, cross })
    }

    pub fn filled(self) -> u8 {
        self.filled
    }

    pub fn cross(self) -> u8 {
        self.cross
    }

    /// All ten keys, ordered by `(filled, cross)`.
    pub fn all() -> impl Iterator<Item = ClassKey> {
        (0..=3u8).flat_map(|f| {
            (0..=3 - f).map(move |c| ClassKey {
                filled: f,
                cross: c,
            })
        })
    }

    /// Conventional label such as `c^1`.
    pub fn label(self) -> String {
        let letter = ['a', 'b', 'c', 'd'][self.filled as usize];
        format!("{letter}^{}", self.cross)
    }
}

impl fmt::Display for ClassKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.filled, self.cross)
    }
}

/// Minimum cardinality of an inhabited class and the sets attaining it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassEntry {
    pub min_cardinality: usize,
    /// Number of distinct sets of minimum cardinality, over every anchor
    /// state vector in the class.
    pub count_at_min: Count,
    /// The same count split by anchor state vector (vectors with zero sets at
    /// the minimum are omitted).
    pub by_states: BTreeMap<AnchorStateVector, Count>,
}

impl ClassEntry {
    /// The count for a single anchor state vector, when every vector of the
    /// class has the same count (as it does on anchor-symmetric graphs).
    pub fn uniform_per_vector(&self) -> Option<&Count> {
        let mut it = self.by_states.values();
        let first = it.next()?;
        it.all(|c| c == first).then_some(first)
    }
}

/// Class minima of one graph; `None` marks a class with no relaxed EDS of any
/// cardinality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassReport {
    pub classes: BTreeMap<ClassKey, Option<ClassEntry>>,
}

impl ClassReport {
    pub fn get(&self, key: ClassKey) -> Option<&ClassEntry> {
        self.classes.get(&key).and_then(Option::as_ref)
    }

    pub fn is_inhabited(&self, key: ClassKey) -> bool {
        self.get(key).is_some()
    }

    pub fn min_cardinality(&self, filled: u8, cross: u8) -> Option<usize> {
        self.get(ClassKey { filled, cross })
            .map(|e| e.min_cardinality)
    }

    pub fn inhabited(&self) -> impl Iterator<Item = (ClassKey, &ClassEntry)> {
        self.classes
            .iter()
            .filter_map(|(k, e)| e.as_ref().map(|e| (*k, e)))
    }
}

/// Edge domination number and the number of minimum edge dominating sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinEds {
    pub gamma: usize,
    pub count: Count,
}

/// Edges that are in `s` or share an endpoint with an edge of `s`.
pub fn dominated_edges(g: &Graph, s: &EdgeSet) -> Result<EdgeSet> {
    s.check_owner(g)?;
    let covered = covered_vertices(g, s);
    let mut out = g.empty_set();
    for (i, e) in g.edges().iter().enumerate() {
        let (u, v) = e.endpoints();
        if covered[u.0] || covered[v.0] {
            out.insert(i);
        }
    }
    Ok(out)
}

pub fn is_eds(g: &Graph, s: &EdgeSet) -> Result<bool> {
    Ok(dominated_edges(g, s)?.cardinality() == g.edge_count())
}

pub fn classify_anchors(g: &Graph, s: &EdgeSet) -> Result<AnchorStateVector> {
    let dominated = dominated_edges(g, s)?;
    Ok(classify_with(g, s, &dominated))
}

/// True when every undominated edge touches a cross anchor.
pub fn is_relaxed_eds(g: &Graph, s: &EdgeSet) -> Result<bool> {
    let dominated = dominated_edges(g, s)?;
    let states = classify_with(g, s, &dominated);
    let cross: Vec<_> = g
        .anchors()
        .into_iter()
        .zip(states.0)
        .filter(|&(_, st)| st == AnchorState::Cross)
        .map(|(a, _)| a)
        .collect();
    Ok(g.edges()
        .iter()
        .enumerate()
        .filter(|&(i, _)| !dominated.contains(i))
        .all(|(_, e)| cross.iter().any(|&a| e.touches(a))))
}

fn covered_vertices(g: &Graph, s: &EdgeSet) -> Vec<bool> {
    let mut covered = vec![false; g.vertex_count()];
    for e in s.iter() {
        let (u, v) = g.edges()[e].endpoints();
        covered[u.0] = true;
        covered[v.0] = true;
    }
    covered
}

fn classify_with(g: &Graph, s: &EdgeSet, dominated: &EdgeSet) -> AnchorStateVector {
    AnchorStateVector(g.anchors().map(|a| {
        let incident = &g.adjacency(a).expect("anchors are valid vertices");
        if incident.iter().any(|&(_, e)| s.contains(e)) {
            AnchorState::Filled
        } else if incident.iter().all(|&(_, e)| dominated.contains(e)) {
            AnchorState::Empty
        } else {
            AnchorState::Cross
        }
    }))
}

pub fn min_eds(g: &Graph) -> Result<MinEds> {
    Oracle::default().min_eds(g)
}

pub fn class_minima(g: &Graph) -> Result<ClassReport> {
    Oracle::default().class_minima(g)
}

pub fn class_min_count(g: &Graph, key: ClassKey) -> Result<ClassEntry> {
    Oracle::default().class_min_count(g, key)
}

/// Exhaustive search engine.
///
/// Candidates are enumerated by ascending cardinality over 64-bit edge masks.
/// With `parallel` set, each cardinality level is split over rayon workers by
/// the first two chosen edges; tallies are summed, so results do not depend on
/// the worker count.
#[derive(Debug, Clone, Copy)]
pub struct Oracle {
    pub edge_cap: usize,
    pub parallel: bool,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle {
            edge_cap: DEFAULT_EDGE_CAP,
            parallel: true,
        }
    }
}

impl Oracle {
    pub fn sequential() -> Oracle {
        Oracle {
            parallel: false,
            ..Oracle::default()
        }
    }

    pub fn min_eds(&self, g: &Graph) -> Result<MinEds> {
        let masks = self.masks(g)?;
        for k in 0..=masks.m {
            let hits = self.level(&masks, k, |_, dom, t: &mut u64| {
                if dom == masks.full {
                    *t += 1;
                }
            });
            if hits > 0 {
                return Ok(MinEds {
                    gamma: k,
                    count: Count::from(hits),
                });
            }
        }
        unreachable!("the full edge set dominates every edge")
    }

    pub fn class_minima(&self, g: &Graph) -> Result<ClassReport> {
        let masks = self.masks(g)?;
        let mut classes: BTreeMap<ClassKey, Option<ClassEntry>> =
            ClassKey::all().map(|k| (k, None)).collect();
        let mut open = classes.len();
        for k in 0..=masks.m {
            let tally = self.level(&masks, k, |s, dom, t: &mut Tally| masks.tally(s, dom, t));
            for (key, entry) in classes.iter_mut() {
                if entry.is_none() {
                    *entry = tally.entry_for(*key, k);
                    if entry.is_some() {
                        open -= 1;
                    }
                }
            }
            if open == 0 {
                break;
            }
        }
        Ok(ClassReport { classes })
    }

    /// Minimum cardinality and count for a single class.
    pub fn class_min_count(&self, g: &Graph, key: ClassKey) -> Result<ClassEntry> {
        let masks = self.masks(g)?;
        for k in 0..=masks.m {
            let tally = self.level(&masks, k, |s, dom, t: &mut Tally| masks.tally(s, dom, t));
            if let Some(entry) = tally.entry_for(key, k) {
                return Ok(entry);
            }
        }
        Err(Error::NotFound(format!(
            "class {key} has no relaxed edge dominating set"
        )))
    }

    fn masks(&self, g: &Graph) -> Result<Masks> {
        let m = g.edge_count();
        let cap = self.edge_cap.min(64);
        if m > cap {
            return capacity_err(format!(
                "graph has {m} edges, above the brute-force cap of {cap}"
            ));
        }
        Ok(Masks::new(g))
    }

    /// Visits every `k`-subset with its dominated mask and sums the per-worker
    /// accumulators.
    fn level<T, F>(&self, masks: &Masks, k: usize, visit: F) -> T
    where
        T: Accumulator,
        F: Fn(u64, u64, &mut T) + Sync,
    {
        let m = masks.m;
        if k > m {
            return T::default();
        }
        if k < 2 || !self.parallel {
            let mut acc = T::default();
            masks.walk(0, k, 0, 0, &mut acc, &visit);
            return acc;
        }
        let prefixes: Vec<(usize, usize)> = (0..m)
            .flat_map(|i| (i + 1..m).map(move |j| (i, j)))
            .collect();
        prefixes
            .into_par_iter()
            .map(|(i, j)| {
                let mut acc = T::default();
                let s = 1u64 << i | 1u64 << j;
                let dom = masks.closed[i] | masks.closed[j];
                masks.walk(j + 1, k - 2, s, dom, &mut acc, &visit);
                acc
            })
            .reduce(T::default, T::merge)
    }
}

trait Accumulator: Default + Send {
    fn merge(self, other: Self) -> Self;
}

impl Accumulator for u64 {
    fn merge(self, other: Self) -> Self {
        self + other
    }
}

/// Relaxed-EDS counts for one cardinality, indexed by anchor state code.
#[derive(Debug, Clone, Copy, Default)]
struct Tally([u64; 27]);

impl Accumulator for Tally {
    fn merge(mut self, other: Self) -> Self {
        for (a, b) in self.0.iter_mut().zip(other.0) {
            *a += b;
        }
        self
    }
}

impl Tally {
    fn entry_for(&self, key: ClassKey, k: usize) -> Option<ClassEntry> {
        let by_states: BTreeMap<AnchorStateVector, Count> = (0..27)
            .filter(|&code| self.0[code] > 0)
            .map(|code| (AnchorStateVector::from_code(code), self.0[code]))
            .filter(|(v, _)| v.key() == key)
            .map(|(v, n)| (v, Count::from(n)))
            .collect();
        if by_states.is_empty() {
            return None;
        }
        let total: u64 = (0..27)
            .filter(|&code| AnchorStateVector::from_code(code).key() == key)
            .map(|code| self.0[code])
            .sum();
        Some(ClassEntry {
            min_cardinality: k,
            count_at_min: Count::from(total),
            by_states,
        })
    }
}

/// Bitmask view of a graph with at most 64 edges.
struct Masks {
    m: usize,
    full: u64,
    /// Per edge: itself plus every edge sharing an endpoint.
    closed: Vec<u64>,
    anchor_incident: [u64; 3],
}

impl Masks {
    fn new(g: &Graph) -> Masks {
        let m = g.edge_count();
        let full = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
        let incident: Vec<u64> = (0..g.vertex_count())
            .map(|v| {
                g.adjacency(crate::graph::VertexId(v))
                    .expect("vertex in range")
                    .iter()
                    .fold(0u64, |acc, &(_, e)| acc | 1 << e)
            })
            .collect();
        let closed = g
            .edges()
            .iter()
            .map(|e| {
                let (u, v) = e.endpoints();
                incident[u.0] | incident[v.0]
            })
            .collect();
        let anchor_incident = g.anchors().map(|a| incident[a.0]);
        Masks {
            m,
            full,
            closed,
            anchor_incident,
        }
    }

    fn walk<T, F>(&self, start: usize, left: usize, s: u64, dom: u64, acc: &mut T, visit: &F)
    where
        F: Fn(u64, u64, &mut T),
    {
        if left == 0 {
            visit(s, dom, acc);
            return;
        }
        for e in start..=self.m - left {
            self.walk(
                e + 1,
                left - 1,
                s | 1 << e,
                dom | self.closed[e],
                acc,
                visit,
            );
        }
    }

    #[inline]
    fn tally(&self, s: u64, dom: u64, t: &mut Tally) {
        let mut code = 0;
        let mut allowed = 0u64;
        for inc in self.anchor_incident {
            let digit = if inc & s != 0 {
                0
            } else if inc & !dom == 0 {
                1
            } else {
                allowed |= inc;
                2
            };
            code = code * 3 + digit;
        }
        if self.full & !dom & !allowed == 0 {
            t.0[code] += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{build_gasket, build_web_iterative, build_web_merge};
    use crate::Generation;
    use proptest::prelude::*;

    fn gen(n: u32) -> Generation {
        Generation::new(n).unwrap()
    }

    fn key(f: u8, c: u8) -> ClassKey {
        ClassKey::new(f, c).unwrap()
    }

    fn subset_of_size(g: &Graph, k: usize) -> impl Iterator<Item = EdgeSet> + '_ {
        let m = g.edge_count();
        (0u64..1 << m)
            .filter(move |mask| mask.count_ones() as usize == k)
            .map(move |mask| EdgeSet::from_mask(m, mask))
    }

    #[test]
    fn triangle_domination() {
        let t = Graph::triangle();
        let one = t.edge_set(&[1]).unwrap();
        assert_eq!(dominated_edges(&t, &one).unwrap().cardinality(), 3);
        assert!(is_eds(&t, &one).unwrap());
        assert!(!is_eds(&t, &t.empty_set()).unwrap());
        assert_eq!(
            dominated_edges(&t, &t.empty_set()).unwrap().cardinality(),
            0
        );
    }

    #[test]
    fn size_mismatch_is_rejected() {
        let t = Graph::triangle();
        let wrong = EdgeSet::empty(4);
        assert!(matches!(dominated_edges(&t, &wrong), Err(Error::Input(_))));
        assert!(is_eds(&t, &wrong).is_err());
        assert!(classify_anchors(&t, &wrong).is_err());
        assert!(is_relaxed_eds(&t, &wrong).is_err());
    }

    #[test]
    fn gasket_gen2_domination_is_local() {
        let g = build_gasket(gen(2)).unwrap();
        let top = g.find_edge(0, 1).unwrap();
        let dom = dominated_edges(&g, &g.edge_set(&[top]).unwrap()).unwrap();
        // everything touching 0 or 1, nothing from the bottom-right triangle's (4,5) or (2,5)
        let expect: Vec<usize> = [(0, 1), (0, 2), (1, 2), (1, 3), (1, 4)]
            .iter()
            .map(|&(a, b)| g.find_edge(a, b).unwrap())
            .collect();
        assert_eq!(dom.iter().collect::<Vec<_>>(), expect);
        assert!(!dom.contains(g.find_edge(4, 5).unwrap()));
    }

    #[test]
    fn classify_triangle() {
        let t = Graph::triangle();
        use AnchorState::*;
        let s = t.edge_set(&[t.find_edge(0, 1).unwrap()]).unwrap();
        assert_eq!(
            classify_anchors(&t, &s).unwrap(),
            AnchorStateVector([Filled, Filled, Empty])
        );
        assert_eq!(
            classify_anchors(&t, &t.empty_set()).unwrap(),
            AnchorStateVector([Cross, Cross, Cross])
        );
        assert!(is_relaxed_eds(&t, &t.empty_set()).unwrap());
    }

    #[test]
    fn web_gen3_has_no_two_edge_eds() {
        let g = build_web_iterative(gen(3)).unwrap();
        assert!(subset_of_size(&g, 2).all(|s| !is_eds(&g, &s).unwrap()));
    }

    #[test]
    fn web_gen3_minimum_sets_fill_every_hub() {
        // the minimum sets of G_3 are the two perfect matchings of G_2's vertices
        // {0,3}{2,4}{1,5} and {1,3}{0,4}{2,5} (labels of the iterative build)
        let g = build_web_iterative(gen(3)).unwrap();
        for matching in [[(0, 3), (2, 4), (1, 5)], [(1, 3), (0, 4), (2, 5)]] {
            let idx: Vec<usize> = matching
                .iter()
                .map(|&(a, b)| g.find_edge(a, b).unwrap())
                .collect();
            let s = g.edge_set(&idx).unwrap();
            assert!(is_eds(&g, &s).unwrap());
            assert_eq!(
                classify_anchors(&g, &s).unwrap(),
                AnchorStateVector([AnchorState::Filled; 3])
            );
        }
    }

    #[test]
    fn min_eds_small_graphs() {
        let t = Graph::triangle();
        assert_eq!(
            min_eds(&t).unwrap(),
            MinEds {
                gamma: 1,
                count: Count::from(3u64)
            }
        );
        let g3 = build_web_iterative(gen(3)).unwrap();
        assert_eq!(
            min_eds(&g3).unwrap(),
            MinEds {
                gamma: 3,
                count: Count::from(2u64)
            }
        );
        let s3 = build_gasket(gen(3)).unwrap();
        assert_eq!(
            min_eds(&s3).unwrap(),
            MinEds {
                gamma: 5,
                count: Count::from(66u64)
            }
        );
    }

    #[test]
    fn min_eds_gamma_is_tight_at_gen2() {
        for g in [
            build_web_iterative(gen(2)).unwrap(),
            build_gasket(gen(2)).unwrap(),
        ] {
            let r = min_eds(&g).unwrap();
            let m = g.edge_count();
            let mut best = usize::MAX;
            let mut count = 0u64;
            for mask in 0u64..1 << m {
                if is_eds(&g, &EdgeSet::from_mask(m, mask)).unwrap() {
                    let k = mask.count_ones() as usize;
                    if k < best {
                        best = k;
                        count = 0;
                    }
                    if k == best {
                        count += 1;
                    }
                }
            }
            assert_eq!(
                r,
                MinEds {
                    gamma: best,
                    count: Count::from(count)
                }
            );
        }
    }

    #[test]
    fn oracle_refuses_large_graphs() {
        let g = build_gasket(gen(4)).unwrap();
        assert!(matches!(min_eds(&g), Err(Error::Capacity(_))));
        assert!(matches!(class_minima(&g), Err(Error::Capacity(_))));
    }

    #[test]
    fn class_key_bounds() {
        assert!(ClassKey::new(2, 2).is_err());
        assert_eq!(ClassKey::all().count(), 10);
        assert_eq!(key(1, 2).label(), "b^2");
    }

    #[test]
    fn triangle_fully_filled_class() {
        // all 8 subsets of K3: only the three 2-edge sets and the full set fill every vertex
        let t = Graph::triangle();
        let e = class_min_count(&t, key(3, 0)).unwrap();
        assert_eq!((e.min_cardinality, e.count_at_min), (2, Count::from(3u64)));
    }

    // Frozen from an independent exhaustive enumeration (separate script,
    // all subsets up to size 6, which reaches every inhabited class).
    #[test]
    fn web_gen3_class_minima() {
        let g = build_web_iterative(gen(3)).unwrap();
        let r = class_minima(&g).unwrap();
        let expected = [
            ((0, 3), 3, 8),
            ((1, 2), 3, 30),
            ((2, 0), 5, 12),
            ((2, 1), 3, 24),
            ((3, 0), 3, 2),
        ];
        for ((f, c), min, count) in expected {
            let e = r.get(key(f, c)).unwrap();
            assert_eq!(
                (e.min_cardinality, e.count_at_min.clone()),
                (min, Count::from(count as u64))
            );
        }
        // the hubs are pairwise adjacent, so a hub is empty only if both other
        // hubs are filled: every class with an empty hub and fewer than two
        // filled hubs is uninhabited
        for (f, c) in [(0, 0), (0, 1), (0, 2), (1, 0), (1, 1)] {
            assert!(!r.is_inhabited(key(f, c)), "class ({f}, {c})");
        }
        let c1 = r.get(key(2, 1)).unwrap();
        assert_eq!(c1.by_states.len(), 3);
        assert!(c1.by_states.values().all(|n| *n == Count::from(8u64)));
    }

    #[test]
    fn gasket_gen3_class_minima() {
        let g = build_gasket(gen(3)).unwrap();
        let r = class_minima(&g).unwrap();
        let expected = [
            ((0, 0), 5, 33),
            ((0, 1), 5, 252),
            ((0, 2), 4, 3),
            ((0, 3), 4, 6),
            ((1, 0), 5, 30),
            ((1, 1), 5, 222),
            ((1, 2), 5, 210),
            ((2, 0), 5, 3),
            ((2, 1), 5, 36),
            ((3, 0), 6, 197),
        ];
        for ((f, c), min, count) in expected {
            let e = r.get(key(f, c)).unwrap();
            assert_eq!(
                (e.min_cardinality, e.count_at_min.clone()),
                (min, Count::from(count as u64))
            );
        }
    }

    #[test]
    fn single_class_query_matches_report() {
        let g = build_gasket(gen(3)).unwrap();
        let r = class_minima(&g).unwrap();
        for k in [key(0, 2), key(2, 1), key(3, 0)] {
            assert_eq!(&class_min_count(&g, k).unwrap(), r.get(k).unwrap());
        }
        let w = build_web_iterative(gen(2)).unwrap();
        assert!(matches!(
            class_min_count(&w, key(1, 1)),
            Err(Error::NotFound(_))
        ));
    }

    #[test]
    fn sequential_and_parallel_agree() {
        for g in [
            build_web_merge(gen(3)).unwrap(),
            build_gasket(gen(3)).unwrap(),
        ] {
            assert_eq!(
                Oracle::sequential().min_eds(&g).unwrap(),
                Oracle::default().min_eds(&g).unwrap()
            );
        }
        let g = build_gasket(gen(2)).unwrap();
        assert_eq!(
            Oracle::sequential().class_minima(&g).unwrap(),
            Oracle::default().class_minima(&g).unwrap()
        );
    }

    #[test]
    fn mask_engine_matches_reference_classification() {
        let g = build_gasket(gen(2)).unwrap();
        let masks = Masks::new(&g);
        for mask in 0u64..1 << g.edge_count() {
            let s = EdgeSet::from_mask(g.edge_count(), mask);
            let dom = dominated_edges(&g, &s).unwrap().to_mask().unwrap();
            assert_eq!(dom, masks.closed_union(mask));
            let mut t = Tally::default();
            masks.tally(mask, dom, &mut t);
            let hit = t.0.iter().position(|&n| n == 1);
            let relaxed = is_relaxed_eds(&g, &s).unwrap();
            assert_eq!(hit.is_some(), relaxed);
            if let Some(code) = hit {
                let v = classify_anchors(&g, &s).unwrap();
                assert_eq!(AnchorStateVector::from_code(code), v);
                assert_eq!(v.code(), code);
            }
        }
    }

    impl Masks {
        fn closed_union(&self, s: u64) -> u64 {
            (0..self.m)
                .filter(|e| s >> e & 1 == 1)
                .fold(0, |d, e| d | self.closed[e])
        }
    }

    proptest! {
        #[test]
        fn domination_is_monotone(a in 0u64..1 << 27, b in 0u64..1 << 27) {
            let g = build_gasket(gen(3)).unwrap();
            let small = EdgeSet::from_mask(27, a & b);
            let big = EdgeSet::from_mask(27, a);
            let ds = dominated_edges(&g, &small).unwrap();
            let db = dominated_edges(&g, &big).unwrap();
            prop_assert!(ds.is_subset(&db));
            if is_eds(&g, &small).unwrap() {
                prop_assert!(is_eds(&g, &big).unwrap());
            }
        }

        #[test]
        fn relaxation_laws(mask in 0u64..1 << 27) {
            let g = build_web_iterative(gen(3)).unwrap();
            let s = EdgeSet::from_mask(27, mask);
            let eds = is_eds(&g, &s).unwrap();
            let relaxed = is_relaxed_eds(&g, &s).unwrap();
            let states = classify_anchors(&g, &s).unwrap();
            prop_assert!(!eds || relaxed);
            if relaxed && states.key().cross() == 0 {
                prop_assert!(eds);
            }
            let k = states.key();
            prop_assert!(k.filled() + k.cross() <= 3);
        }
    }
}
