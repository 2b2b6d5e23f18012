//! Exact combinatorial invariants.

mod chromatic;
mod connectivity;
mod planarity;

use std::collections::VecDeque;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::graph::Graph;

pub use chromatic::{chromatic_number, chromatic_number_with, ChromaticLimits};
pub use connectivity::{local_vertex_connectivity, vertex_connectivity};
pub use planarity::{is_planar, is_planar_fast, Obstruction, ObstructionKind, PlanarityVerdict};

/// Length of a shortest cycle, or `Infinite` for forests.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GirthValue {
    Finite(usize),
    Infinite,
}

impl GirthValue {
    pub fn finite(self) -> Option<usize> {
        match self {
            GirthValue::Finite(g) => Some(g),
            GirthValue::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        self == GirthValue::Infinite
    }
}

impl fmt::Display for GirthValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GirthValue::Finite(g) => write!(f, "{g}"),
            GirthValue::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for GirthValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            GirthValue::Finite(g) => s.serialize_u64(*g as u64),
            GirthValue::Infinite => s.serialize_none(),
        }
    }
}

/// Connected-component label per vertex, numbered in order of first vertex.
pub fn components(g: &Graph) -> Vec<usize> {
    let mut label = vec![usize::MAX; g.n()];
    let mut next = 0;
    let mut stack = Vec::new();
    for root in 0..g.n() {
        if label[root] != usize::MAX {
            continue;
        }
        label[root] = next;
        stack.push(root);
        while let Some(v) = stack.pop() {
            for &w in g.neighbors(v) {
                if label[w] == usize::MAX {
                    label[w] = next;
                    stack.push(w);
                }
            }
        }
        next += 1;
    }
    label
}

pub fn component_count(g: &Graph) -> usize {
    components(g).into_iter().max().map_or(0, |m| m + 1)
}

pub fn is_connected(g: &Graph) -> bool {
    component_count(g) == 1
}

/// Exact girth by a breadth-first search from every vertex.
pub fn girth(g: &Graph) -> GirthValue {
    let n = g.n();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for root in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[root] = 0;
        parent[root] = usize::MAX;
        queue.clear();
        queue.push_back(root);
        while let Some(v) = queue.pop_front() {
            // nothing shorter can be closed from deeper levels
            if 2 * dist[v] >= best {
                break;
            }
            for &w in g.neighbors(v) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    queue.push_back(w);
                } else if parent[v] != w {
                    best = best.min(dist[v] + dist[w] + 1);
                }
            }
        }
    }
    if best == usize::MAX {
        GirthValue::Infinite
    } else {
        GirthValue::Finite(best)
    }
}

/// Common degree if the graph is regular.
pub fn is_regular(g: &Graph) -> Option<usize> {
    let d = g.min_degree();
    (d == g.max_degree()).then_some(d)
}

/// Two-coloring by breadth-first search.
pub fn bipartition(g: &Graph) -> Option<Vec<bool>> {
    let n = g.n();
    let mut side: Vec<Option<bool>> = vec![None; n];
    let mut queue = VecDeque::new();
    for root in 0..n {
        if side[root].is_some() {
            continue;
        }
        side[root] = Some(false);
        queue.push_back(root);
        while let Some(v) = queue.pop_front() {
            let s = side[v].unwrap();
            for &w in g.neighbors(v) {
                match side[w] {
                    None => {
                        side[w] = Some(!s);
                        queue.push_back(w);
                    }
                    Some(t) if t == s => return None,
                    Some(_) => {}
                }
            }
        }
    }
    Some(side.into_iter().map(Option::unwrap).collect())
}

pub fn is_bipartite(g: &Graph) -> bool {
    bipartition(g).is_some()
}

/// Vertices whose removal disconnects their component (articulation points).
pub fn cut_vertices(g: &Graph) -> Vec<bool> {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut is_cut = vec![false; n];
    let mut time = 0;
    // iterative DFS: (vertex, parent, next neighbor index)
    let mut stack: Vec<(usize, usize, usize)> = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut root_children = 0;
        stack.push((root, usize::MAX, 0));
        while let Some(&(v, parent, idx)) = stack.last() {
            if let Some(&w) = g.neighbors(v).get(idx) {
                stack.last_mut().unwrap().2 += 1;
                if disc[w] == usize::MAX {
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    if v == root {
                        root_children += 1;
                    }
                    stack.push((w, v, 0));
                } else if w != parent {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if parent != usize::MAX {
                    low[parent] = low[parent].min(low[v]);
                    if parent != root && low[v] >= disc[parent] {
                        is_cut[parent] = true;
                    }
                }
            }
        }
        if root_children > 1 {
            is_cut[root] = true;
        }
    }
    is_cut
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{disjoint_union, family, Family};

    #[test]
    fn connectivity_examples() {
        assert!(is_connected(&family("complete", &[4]).unwrap()));
        assert_eq!(component_count(&Graph::empty(2).unwrap()), 2);
        let k3 = family("complete", &[3]).unwrap();
        assert_eq!(component_count(&disjoint_union(&k3, &k3)), 2);
    }

    #[test]
    fn girth_examples() {
        assert_eq!(girth(&family("complete", &[4]).unwrap()), GirthValue::Finite(3));
        assert_eq!(girth(&family("cycle", &[7]).unwrap()), GirthValue::Finite(7));
        assert_eq!(girth(&Family::Cube.build().unwrap()), GirthValue::Finite(4));
        assert_eq!(girth(&Family::Petersen.build().unwrap()), GirthValue::Finite(5));
        assert_eq!(girth(&family("path", &[6]).unwrap()), GirthValue::Infinite);
        assert_eq!(girth(&Graph::empty(1).unwrap()), GirthValue::Infinite);
    }

    #[test]
    fn regular_and_bipartite() {
        let c6 = family("cycle", &[6]).unwrap();
        assert_eq!(is_regular(&c6), Some(2));
        assert!(is_bipartite(&c6));
        let k33 = family("complete_bipartite", &[3, 3]).unwrap();
        assert_eq!(is_regular(&k33), Some(3));
        assert!(is_bipartite(&k33));
        assert_eq!(is_regular(&Family::DoubleWheel(5).build().unwrap()), None);
        assert!(!is_bipartite(&family("cycle", &[5]).unwrap()));
    }

    #[test]
    fn cut_vertices_of_near_complete() {
        let g = Family::NearComplete(4).build().unwrap();
        // hub 4 carries the pendant 3
        let cuts = cut_vertices(&g);
        assert_eq!(cuts, vec![false, false, false, false, true]);
        assert!(cut_vertices(&family("cycle", &[5]).unwrap()).iter().all(|c| !c));
        let p4 = family("path", &[4]).unwrap();
        assert_eq!(cut_vertices(&p4), vec![false, true, true, false]);
    }
}
