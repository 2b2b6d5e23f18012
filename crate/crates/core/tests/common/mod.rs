//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use heawood::{Family, Graph};
use num_bigint::{BigInt, BigUint};

/// Whether `g` contains a subdivision of `K_5` or `K_{3,3}`, by exhaustive
/// search over branch sets and internally disjoint path systems. Exponential;
/// meant for `n <= 8`.
pub fn has_kuratowski_subdivision(g: &Graph) -> bool {
    let n = g.n();
    let verts: Vec<usize> = (0..n).collect();
    let k5 = combinations(&verts, 5).into_iter().any(|b| {
        b.iter().all(|&v| g.degree(v) >= 4) && {
            let pairs: Vec<(usize, usize)> = combinations(&b, 2).into_iter().map(|p| (p[0], p[1])).collect();
            routes(g, &b, &pairs)
        }
    });
    if k5 {
        return true;
    }
    combinations(&verts, 6).into_iter().any(|b| {
        if b.iter().any(|&v| g.degree(v) < 3) {
            return false;
        }
        // sides containing b[0]
        combinations(&b[1..], 2).into_iter().any(|rest| {
            let left = [b[0], rest[0], rest[1]];
            let right: Vec<usize> = b.iter().copied().filter(|v| !left.contains(v)).collect();
            let pairs: Vec<(usize, usize)> = left
                .iter()
                .flat_map(|&x| right.iter().map(move |&y| (x, y)))
                .collect();
            routes(g, &b, &pairs)
        })
    })
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if items.len() < k {
        return Vec::new();
    }
    let mut out = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        for mut rest in combinations(&items[i + 1..], k - 1) {
            rest.insert(0, x);
            out.push(rest);
        }
    }
    out
}

fn routes(g: &Graph, branch: &[usize], pairs: &[(usize, usize)]) -> bool {
    let mut blocked = vec![false; g.n()];
    for &b in branch {
        blocked[b] = true;
    }
    route_from(g, pairs, &mut blocked)
}

fn route_from(g: &Graph, pairs: &[(usize, usize)], blocked: &mut [bool]) -> bool {
    let Some((&(a, b), rest)) = pairs.split_first() else {
        return true;
    };
    extend_path(g, a, b, rest, blocked)
}

/// Extends a path at `at` toward `target` through unblocked vertices; the
/// interior stays blocked while the remaining pairs are routed.
fn extend_path(g: &Graph, at: usize, target: usize, rest: &[(usize, usize)], blocked: &mut [bool]) -> bool {
    for &w in g.neighbors(at) {
        if w == target {
            if route_from(g, rest, blocked) {
                return true;
            }
        } else if !blocked[w] {
            blocked[w] = true;
            let found = extend_path(g, w, target, rest, blocked);
            blocked[w] = false;
            if found {
                return true;
            }
        }
    }
    false
}

/// graph6 decoder written from the format description, independent of the
/// crate's codec: expand to a bit vector, then read pairs column by column.
pub fn reference_graph6_decode(text: &str) -> (usize, Vec<(usize, usize)>) {
    let bytes = text.as_bytes();
    let n = (bytes[0] - 63) as usize;
    let bits: Vec<bool> = bytes[1..]
        .iter()
        .flat_map(|&b| (0..6).rev().map(move |k| ((b - 63) >> k) & 1 == 1))
        .collect();
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 0..n {
        for i in 0..j {
            if bits[k] {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    (n, edges)
}

/// `ceil(((2d - 4 sqrt(d-1) - 5)^2 - 1) / 48)` in fixed point with 60
/// decimal digits.
pub fn ramanujan_genus_oracle(d: u64) -> BigInt {
    let scale = BigUint::from(10u32).pow(60);
    let scale_sq = &scale * &scale;
    let root = (BigUint::from(d - 1) * &scale_sq).sqrt();
    let scale = BigInt::from(scale);
    let scale_sq = BigInt::from(scale_sq);
    let x = BigInt::from(2 * d as i64 - 5) * &scale - BigInt::from(4) * BigInt::from(root);
    let num = &x * &x - &scale_sq;
    let den = BigInt::from(48) * scale_sq;
    // num > 0 for d >= 9
    (num + &den - 1) / den
}

/// Catalog graphs with `min_n <= n <= max_n`.
pub fn catalog(min_n: usize, max_n: usize) -> Vec<(String, Graph)> {
    let mut families = Vec::new();
    for n in 1..=max_n {
        families.push(Family::Complete(n));
        families.push(Family::Path(n));
        families.push(Family::Empty(n));
        if n >= 3 {
            families.push(Family::Cycle(n));
            families.push(Family::DoubleWheel(n));
        }
        if n >= 2 {
            families.push(Family::NearComplete(n));
        }
        for p in 1..=n {
            families.push(Family::CompleteBipartite(p, n));
        }
    }
    families.extend([Family::Octahedron, Family::Prism3, Family::Cube, Family::Petersen]);
    families
        .into_iter()
        .filter_map(|f| f.build().ok().map(|g| (f.to_string(), g)))
        .filter(|(_, g)| (min_n..=max_n).contains(&g.n()))
        .collect()
}
