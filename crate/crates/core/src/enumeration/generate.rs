//! Isomorph-free generation of small connected graphs.
//!
//! Orders up to [`BRUTE_MAX_N`] come from scanning every labeled graph and
//! keeping the lexicographically minimal connected ones. Larger orders use
//! canonical augmentation: a child `G` of a parent `P` (obtained by adding a
//! vertex adjacent to a nonempty subset of `P`) is kept exactly when `P` is
//! isomorphic to `G - w` for the canonical deletion vertex `w` of `G`. That
//! vertex is the non-cut vertex of maximum degree with the largest canonical
//! label, so every connected graph has exactly one accepted parent class.

use std::collections::HashSet;

use rayon::prelude::*;

use super::canon::{canonical_form, canonical_key, graph_from_key, is_lex_min, labeled_key, CanonKey};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::invariants::{cut_vertices, is_bipartite, is_planar_fast, is_regular};

/// Largest order generated by the labeled scan.
pub const BRUTE_MAX_N: usize = 7;
/// Largest order [`generate_connected`] accepts.
pub const GENERATE_MAX_N: usize = 9;
/// Largest order [`generate_filtered`] accepts.
pub const FILTERED_MAX_N: usize = 14;

/// Connected graphs on `n` vertices, one per isomorphism class, as
/// lexicographically minimal representatives in increasing key order.
pub fn generate_connected_brute(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > BRUTE_MAX_N {
        return Err(Error::InvalidParameter {
            family: "connected graphs".into(),
            reason: format!("labeled scan needs 1 <= n <= {BRUTE_MAX_N}, got {n}"),
        });
    }
    let total = n * (n - 1) / 2;
    let keys: Vec<CanonKey> = (0..1u64 << total)
        .into_par_iter()
        .map(|k| k as CanonKey)
        .filter(|&key| {
            let rows = rows_from_key(n, key);
            rows_connected(&rows) && is_lex_min(&rows)
        })
        .collect();
    Ok(keys.into_iter().map(|k| graph_from_key(n, k)).collect())
}

fn rows_from_key(n: usize, key: CanonKey) -> Vec<u64> {
    let total = n * n.saturating_sub(1) / 2;
    let mut rows = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if key >> (total - 1 - k) & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            k += 1;
        }
    }
    rows
}

fn rows_connected(rows: &[u64]) -> bool {
    let full = if rows.len() == 64 { u64::MAX } else { (1u64 << rows.len()) - 1 };
    let mut seen = 1u64;
    let mut frontier = 1u64;
    while frontier != 0 {
        let mut next = 0;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= rows[v];
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen == full
}

/// Connected graphs on `n <= 9` vertices, one per isomorphism class.
/// Orders up to 7 come from the labeled scan, 8 and 9 from canonical
/// augmentation of the previous order.
pub fn generate_connected(n: usize) -> Result<Vec<Graph>> {
    Ok(generate_connected_levels(n)?.pop().unwrap_or_default())
}

/// `levels[k - 1]` holds the connected graphs on `k` vertices, `k = 1..=n_max`.
pub fn generate_connected_levels(n_max: usize) -> Result<Vec<Vec<Graph>>> {
    if n_max == 0 || n_max > GENERATE_MAX_N {
        return Err(Error::ResourceLimit(format!(
            "generation supports 1 <= n <= {GENERATE_MAX_N}, got {n_max}"
        )));
    }
    let mut levels = Vec::with_capacity(n_max);
    for n in 1..=n_max.min(BRUTE_MAX_N) {
        levels.push(generate_connected_brute(n)?);
    }
    for _ in BRUTE_MAX_N + 1..=n_max {
        let next = augment(levels.last().unwrap(), &Filters::default(), usize::MAX);
        levels.push(next);
    }
    Ok(levels)
}

/// Hereditary and final conditions for [`generate_filtered`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Filters {
    pub planar: bool,
    pub bipartite: bool,
    pub regular: bool,
    pub cubic: bool,
    pub max_degree: Option<usize>,
}

impl Filters {
    /// Parses `planar`, `bipartite`, `regular`, `cubic`, or `dmax<=k`.
    pub fn add(&mut self, item: &str) -> Result<()> {
        let item = item.trim();
        match item {
            "planar" => self.planar = true,
            "bipartite" => self.bipartite = true,
            "regular" => self.regular = true,
            "cubic" => self.cubic = true,
            _ => {
                let k = item
                    .strip_prefix("dmax<=")
                    .or_else(|| item.strip_prefix("d_max<="))
                    .and_then(|k| k.parse().ok())
                    .ok_or_else(|| Error::InvalidParameter {
                        family: "filter".into(),
                        reason: format!("unknown filter `{item}`"),
                    })?;
                self.max_degree = Some(self.max_degree.map_or(k, |m: usize| m.min(k)));
            }
        }
        Ok(())
    }

    pub fn parse_list(items: &[String]) -> Result<Filters> {
        let mut f = Filters::default();
        for item in items.iter().flat_map(|s| s.split(',')).filter(|s| !s.trim().is_empty()) {
            f.add(item)?;
        }
        Ok(f)
    }

    pub fn union(self, other: Filters) -> Filters {
        Filters {
            planar: self.planar || other.planar,
            bipartite: self.bipartite || other.bipartite,
            regular: self.regular || other.regular,
            cubic: self.cubic || other.cubic,
            max_degree: match (self.max_degree, other.max_degree) {
                (Some(a), Some(b)) => Some(a.min(b)),
                (a, b) => a.or(b),
            },
        }
    }

    /// Names in a fixed order, as rendered in reports.
    pub fn names(&self) -> Vec<String> {
        let mut out = Vec::new();
        for (on, name) in [
            (self.planar, "planar"),
            (self.bipartite, "bipartite"),
            (self.regular, "regular"),
            (self.cubic, "cubic"),
        ] {
            if on {
                out.push(name.to_string());
            }
        }
        if let Some(k) = self.max_degree {
            out.push(format!("dmax<={k}"));
        }
        out
    }

    /// Degree cap implied by the hereditary conditions.
    fn degree_cap(&self) -> Option<usize> {
        match (self.max_degree, self.cubic) {
            (Some(k), true) => Some(k.min(3)),
            (k, true) => k.or(Some(3)),
            (k, false) => k,
        }
    }

    /// Conditions inherited by every induced subgraph.
    pub fn hereditary_ok(&self, g: &Graph) -> bool {
        self.degree_cap().is_none_or(|k| g.max_degree() <= k)
            && (!self.bipartite || is_bipartite(g))
            && (!self.planar || is_planar_fast(g))
    }

    pub fn accepts(&self, g: &Graph) -> bool {
        self.hereditary_ok(g)
            && (!self.regular || is_regular(g).is_some())
            && (!self.cubic || is_regular(g) == Some(3))
    }
}

/// Children of `parents` under canonical augmentation, in increasing
/// canonical key order. Children must satisfy the hereditary part of
/// `filters`; with `cubic` set, a child on `k` vertices is dropped when its
/// degree deficiency exceeds `3 (target_n - k)`, since no cubic graph on
/// `target_n` vertices contains it.
fn augment(parents: &[Graph], filters: &Filters, target_n: usize) -> Vec<Graph> {
    let cap = filters.degree_cap();
    let mut children: Vec<(CanonKey, Graph)> = parents
        .par_iter()
        .flat_map_iter(|parent| {
            let n = parent.n() + 1;
            let parent_key = canonical_key(parent);
            let mut seen = HashSet::new();
            let mut out = Vec::new();
            for mask in 1u64..(1 << parent.n()) {
                let subset: Vec<usize> = (0..parent.n()).filter(|&v| mask >> v & 1 == 1).collect();
                if let Some(k) = cap {
                    if subset.len() > k || subset.iter().any(|&v| parent.degree(v) >= k) {
                        continue;
                    }
                }
                let child = parent.with_vertex(&subset).expect("subset of parent vertices");
                if filters.cubic && target_n != usize::MAX {
                    let deficiency: usize = (0..n).map(|v| 3 - child.degree(v)).sum();
                    if deficiency > 3 * (target_n - n) {
                        continue;
                    }
                }
                if !filters.hereditary_ok(&child) {
                    continue;
                }
                if let Some(key) = accept(&child, parent_key) {
                    if seen.insert(key) {
                        out.push((key, graph_from_key(n, key)));
                    }
                }
            }
            out
        })
        .collect();
    children.sort_unstable_by_key(|(k, _)| *k);
    debug_assert!(children.windows(2).all(|w| w[0].0 != w[1].0));
    children.into_iter().map(|(_, g)| g).collect()
}

/// Canonical key of `child` when its last vertex passes the canonical
/// deletion test against a parent with key `parent_key`.
fn accept(child: &Graph, parent_key: CanonKey) -> Option<CanonKey> {
    let n = child.n();
    let new = n - 1;
    let cut = cut_vertices(child);
    let max_deg = (0..n).filter(|&v| !cut[v]).map(|v| child.degree(v)).max()?;
    if child.degree(new) != max_deg {
        return None;
    }
    let canon = canonical_form(child);
    let w = (0..n)
        .filter(|&v| !cut[v] && child.degree(v) == max_deg)
        .max_by_key(|&v| canon.labeling[v])?;
    if w == new {
        return Some(canon.key);
    }
    let keep: Vec<usize> = (0..n).filter(|&v| v != w).collect();
    (canonical_key(&child.induced(&keep)) == parent_key).then_some(canon.key)
}

/// Connected graphs on `1..=n_max` vertices satisfying `filters`, grown by
/// canonical augmentation from `K_1`. Only the hereditary conditions prune
/// the search, so `levels[k - 1]` lists every class on `k` vertices that
/// passes `filters`.
pub fn generate_filtered(n_max: usize, filters: &Filters) -> Result<Vec<Vec<Graph>>> {
    if n_max == 0 || n_max > FILTERED_MAX_N {
        return Err(Error::ResourceLimit(format!(
            "filtered generation supports 1 <= n <= {FILTERED_MAX_N}, got {n_max}"
        )));
    }
    if filters.degree_cap().is_none() && !filters.bipartite && n_max > GENERATE_MAX_N {
        return Err(Error::ResourceLimit(format!(
            "orders above {GENERATE_MAX_N} need a degree cap or the bipartite filter"
        )));
    }
    let mut grown = vec![Graph::empty(1)?];
    let mut levels = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        if n > 1 {
            grown = augment(&grown, filters, if filters.cubic { n_max } else { usize::MAX });
        }
        levels.push(grown.iter().filter(|g| filters.accepts(g)).cloned().collect());
    }
    Ok(levels)
}

/// Sorted canonical keys of `graphs`, for comparing generator outputs.
pub fn canonical_keys(graphs: &[Graph]) -> Vec<CanonKey> {
    let mut keys: Vec<CanonKey> = graphs.par_iter().map(canonical_key).collect();
    keys.sort_unstable();
    keys
}

/// Sorted lexicographically minimal keys of `graphs`.
pub fn lex_min_keys(graphs: &[Graph]) -> Vec<CanonKey> {
    let mut keys: Vec<CanonKey> = graphs.par_iter().map(super::canon::lex_min_key).collect();
    keys.sort_unstable();
    keys
}

/// Whether `g` is its own lexicographically minimal representative.
pub fn is_brute_representative(g: &Graph) -> bool {
    labeled_key(g) == super::canon::lex_min_key(g)
}
