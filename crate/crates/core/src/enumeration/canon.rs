//! Canonical forms for small graphs.
//!
//! Both forms encode a labeled graph as a [`CanonKey`]: the graph6 bit
//! string, pair `(0,1)` most significant, read as an integer. Two canonical
//! forms are provided and cross-checked against each other:
//!
//! * [`lex_min_key`], the minimum key over all vertex permutations, found by
//!   a column-by-column search with prefix pruning;
//! * [`canonical_form`], individualization and refinement with automorphism
//!   pruning, which scales to the orders the generator needs.

use crate::graph::Graph;

/// Largest order whose key fits in a [`CanonKey`].
pub const CANON_MAX_N: usize = 16;

pub type CanonKey = u128;

fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Key of `g` under `inverse`, where `inverse[label]` is the vertex placed
/// at position `label`.
fn key_of(rows: &[u64], inverse: &[usize]) -> CanonKey {
    let n = inverse.len();
    let total = pair_count(n);
    let mut key = 0;
    let mut k = 0;
    for j in 1..n {
        let row = rows[inverse[j]];
        for &vi in &inverse[..j] {
            if row >> vi & 1 == 1 {
                key |= 1 << (total - 1 - k);
            }
            k += 1;
        }
    }
    key
}

/// Key of `g` as labeled.
pub fn labeled_key(g: &Graph) -> CanonKey {
    assert!(g.n() <= CANON_MAX_N, "canonical keys need n <= {CANON_MAX_N}");
    let identity: Vec<usize> = (0..g.n()).collect();
    key_of(&g.bit_rows(), &identity)
}

/// Graph with the given key.
pub fn graph_from_key(n: usize, key: CanonKey) -> Graph {
    let total = pair_count(n);
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if key >> (total - 1 - k) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::new(n, edges).expect("pairs are in range")
}

/// Column `j` of the key under a partial placement, as a `j`-bit number.
fn column(rows: &[u64], placed: &[usize], j: usize) -> u32 {
    let row = rows[placed[j]];
    placed[..j]
        .iter()
        .fold(0, |acc, &vi| (acc << 1) | (row >> vi & 1) as u32)
}

/// Minimum key over all relabelings. Exponential; meant for `n <= 8`.
pub fn lex_min_key(g: &Graph) -> CanonKey {
    let n = g.n();
    assert!(n <= CANON_MAX_N, "canonical keys need n <= {CANON_MAX_N}");
    let rows = g.bit_rows();
    let mut best: Vec<u32> = vec![u32::MAX; n];
    let mut best_inverse: Vec<usize> = (0..n).collect();
    let mut placed = Vec::with_capacity(n);
    let mut used = vec![false; n];
    lex_min_search(&rows, &mut placed, &mut used, &mut best, &mut best_inverse);
    key_of(&rows, &best_inverse)
}

/// `best` holds the columns of the smallest key seen; a strictly smaller
/// column overwrites it at once, since every completion then improves on it.
fn lex_min_search(
    rows: &[u64],
    placed: &mut Vec<usize>,
    used: &mut [bool],
    best: &mut [u32],
    best_inverse: &mut Vec<usize>,
) {
    let n = used.len();
    let j = placed.len();
    if j == n {
        best_inverse.clone_from(placed);
        return;
    }
    for v in 0..n {
        if used[v] {
            continue;
        }
        placed.push(v);
        let col = column(rows, placed, j);
        if col <= best[j] {
            if col < best[j] {
                best[j] = col;
                best[j + 1..].iter_mut().for_each(|c| *c = u32::MAX);
            }
            used[v] = true;
            lex_min_search(rows, placed, used, best, best_inverse);
            used[v] = false;
        }
        placed.pop();
    }
}

/// Whether the identity labeling already attains the minimum key.
pub fn is_lex_min(rows: &[u64]) -> bool {
    let n = rows.len();
    let identity: Vec<usize> = (0..n).collect();
    let target: Vec<u32> = (0..n).map(|j| column(rows, &identity, j)).collect();
    let mut placed = Vec::with_capacity(n);
    let mut used = vec![false; n];
    !finds_smaller(rows, &target, &mut placed, &mut used)
}

fn finds_smaller(rows: &[u64], target: &[u32], placed: &mut Vec<usize>, used: &mut [bool]) -> bool {
    let n = used.len();
    let j = placed.len();
    if j == n {
        return false;
    }
    for v in 0..n {
        if used[v] {
            continue;
        }
        placed.push(v);
        let col = column(rows, placed, j);
        let found = if col < target[j] {
            true
        } else if col == target[j] {
            used[v] = true;
            let deeper = finds_smaller(rows, target, placed, used);
            used[v] = false;
            deeper
        } else {
            false
        };
        placed.pop();
        if found {
            return true;
        }
    }
    false
}

/// A canonical key together with the labeling that produces it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Canonical {
    pub key: CanonKey,
    /// `labeling[v]` is the canonical label of vertex `v`.
    pub labeling: Vec<usize>,
}

impl Canonical {
    pub fn graph(&self, n: usize) -> Graph {
        graph_from_key(n, self.key)
    }
}

/// Canonical form by partition refinement. Isomorphic graphs get equal keys.
pub fn canonical_form(g: &Graph) -> Canonical {
    let n = g.n();
    assert!(n <= CANON_MAX_N, "canonical keys need n <= {CANON_MAX_N}");
    if n == 0 {
        return Canonical {
            key: 0,
            labeling: Vec::new(),
        };
    }
    let mut search = Refiner {
        rows: g.bit_rows(),
        first: None,
        best: None,
        generators: Vec::new(),
    };
    let cells = vec![(0..n).collect::<Vec<_>>()];
    search.descend(cells, &mut Vec::new());
    let (key, inverse) = search.best.expect("at least one leaf");
    let mut labeling = vec![0; n];
    for (label, &v) in inverse.iter().enumerate() {
        labeling[v] = label;
    }
    Canonical { key, labeling }
}

pub fn canonical_key(g: &Graph) -> CanonKey {
    canonical_form(g).key
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.n() == h.n() && g.e() == h.e() && canonical_key(g) == canonical_key(h)
}

struct Refiner {
    rows: Vec<u64>,
    first: Option<(CanonKey, Vec<usize>)>,
    best: Option<(CanonKey, Vec<usize>)>,
    generators: Vec<Vec<usize>>,
}

impl Refiner {
    /// Splits cells by neighbor counts into each splitter cell until the
    /// ordered partition is equitable.
    fn refine(&self, cells: &mut Vec<Vec<usize>>) {
        let mut s = 0;
        while s < cells.len() {
            let mask = cells[s].iter().fold(0u64, |m, &v| m | 1 << v);
            let mut next = Vec::with_capacity(cells.len());
            let mut split = false;
            for cell in cells.iter() {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(u32, usize)> = cell
                    .iter()
                    .map(|&v| ((self.rows[v] & mask).count_ones(), v))
                    .collect();
                keyed.sort_unstable();
                let mut start = 0;
                for i in 1..=keyed.len() {
                    if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                        next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                        start = i;
                    }
                }
                split |= keyed[0].0 != keyed[keyed.len() - 1].0;
            }
            *cells = next;
            // any split can refine earlier splitters, so restart
            s = if split { 0 } else { s + 1 };
        }
    }

    fn descend(&mut self, mut cells: Vec<Vec<usize>>, prefix: &mut Vec<usize>) {
        self.refine(&mut cells);
        let target = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|(i, c)| (c.len(), *i))
            .map(|(i, _)| i);
        let Some(target) = target else {
            self.leaf(cells.into_iter().map(|c| c[0]).collect());
            return;
        };
        let mut explored: Vec<usize> = Vec::new();
        for &w in &cells[target] {
            if !explored.is_empty() && self.same_orbit(prefix, &explored, w) {
                continue;
            }
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(vec![w]);
            child.push(cells[target].iter().copied().filter(|&x| x != w).collect());
            child.extend_from_slice(&cells[target + 1..]);
            prefix.push(w);
            self.descend(child, prefix);
            prefix.pop();
            explored.push(w);
        }
    }

    /// Whether `w` shares an orbit with an explored vertex under the
    /// automorphisms found so far that fix `prefix` pointwise.
    fn same_orbit(&self, prefix: &[usize], explored: &[usize], w: usize) -> bool {
        let n = self.rows.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for gen in &self.generators {
            if prefix.iter().any(|&p| gen[p] != p) {
                continue;
            }
            for (v, &image) in gen.iter().enumerate() {
                let (a, b) = (find(&mut parent, v), find(&mut parent, image));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        let root = find(&mut parent, w);
        explored.iter().any(|&u| find(&mut parent, u) == root)
    }

    fn leaf(&mut self, inverse: Vec<usize>) {
        let key = key_of(&self.rows, &inverse);
        for (known_key, known_inverse) in [&self.first, &self.best].into_iter().flatten() {
            if *known_key == key {
                // same key: mapping inverse[l] -> known_inverse[l] is an automorphism
                let mut gen = vec![0; inverse.len()];
                for (&a, &b) in inverse.iter().zip(known_inverse) {
                    gen[a] = b;
                }
                if gen.iter().enumerate().any(|(v, &x)| v != x) {
                    self.generators.push(gen);
                }
                return;
            }
        }
        if self.first.is_none() {
            self.first = Some((key, inverse.clone()));
        }
        if self.best.as_ref().is_none_or(|(b, _)| key < *b) {
            self.best = Some((key, inverse));
        }
    }
}
