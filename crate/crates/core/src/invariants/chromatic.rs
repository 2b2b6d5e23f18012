//! Exact chromatic number by DSATUR branch and bound.

use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Resource caps for the exact coloring search.
#[derive(Debug, Clone, Copy)]
pub struct ChromaticLimits {
    pub max_n: usize,
    pub time_limit: Option<Duration>,
}

impl Default for ChromaticLimits {
    fn default() -> Self {
        ChromaticLimits {
            max_n: 30,
            time_limit: Some(Duration::from_secs(30)),
        }
    }
}

pub fn chromatic_number(g: &Graph) -> Result<usize> {
    chromatic_number_with(g, ChromaticLimits::default())
}

pub fn chromatic_number_with(g: &Graph, limits: ChromaticLimits) -> Result<usize> {
    let n = g.n();
    if n > limits.max_n {
        return Err(Error::ResourceLimit(format!(
            "chromatic number capped at n <= {} (got {n})",
            limits.max_n
        )));
    }
    if g.e() == 0 {
        return Ok(1);
    }
    let lower = greedy_clique(g);
    let mut search = Search {
        g,
        color: vec![usize::MAX; n],
        // neighbor color counts, row v holds counts for colors 0..n
        counts: vec![0; n * n],
        saturation: vec![0; n],
        best: n + 1,
        lower,
        deadline: limits.time_limit.map(|t| Instant::now() + t),
        steps: 0,
        timed_out: false,
    };
    search.best = search.dsatur_greedy();
    if search.best > lower {
        search.color.iter_mut().for_each(|c| *c = usize::MAX);
        search.counts.iter_mut().for_each(|c| *c = 0);
        search.saturation.iter_mut().for_each(|c| *c = 0);
        search.branch(0);
    }
    if search.timed_out {
        return Err(Error::ResourceLimit(format!(
            "chromatic number search exceeded {:?}",
            limits.time_limit.unwrap_or_default()
        )));
    }
    Ok(search.best)
}

/// Size of a clique grown greedily from each vertex; a lower bound.
fn greedy_clique(g: &Graph) -> usize {
    let mut best = 1;
    for start in 0..g.n() {
        let mut clique = vec![start];
        let mut candidates: Vec<usize> = g.neighbors(start).to_vec();
        candidates.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
        for v in candidates {
            if clique.iter().all(|&u| g.has_edge(u, v)) {
                clique.push(v);
            }
        }
        best = best.max(clique.len());
    }
    best
}

struct Search<'a> {
    g: &'a Graph,
    color: Vec<usize>,
    counts: Vec<u32>,
    saturation: Vec<usize>,
    best: usize,
    lower: usize,
    deadline: Option<Instant>,
    steps: u64,
    timed_out: bool,
}

impl Search<'_> {
    fn n(&self) -> usize {
        self.g.n()
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.color[v] = c;
        let n = self.n();
        for &w in self.g.neighbors(v) {
            let slot = &mut self.counts[w * n + c];
            if *slot == 0 {
                self.saturation[w] += 1;
            }
            *slot += 1;
        }
    }

    fn unassign(&mut self, v: usize) {
        let c = self.color[v];
        self.color[v] = usize::MAX;
        let n = self.n();
        for &w in self.g.neighbors(v) {
            let slot = &mut self.counts[w * n + c];
            *slot -= 1;
            if *slot == 0 {
                self.saturation[w] -= 1;
            }
        }
    }

    /// Uncolored vertex of maximum saturation, ties by degree then index.
    fn pick(&self) -> Option<usize> {
        (0..self.n())
            .filter(|&v| self.color[v] == usize::MAX)
            .max_by_key(|&v| (self.saturation[v], self.g.degree(v), std::cmp::Reverse(v)))
    }

    fn dsatur_greedy(&mut self) -> usize {
        let n = self.n();
        let mut used = 0;
        while let Some(v) = self.pick() {
            let c = (0..n).find(|&c| self.counts[v * n + c] == 0).unwrap();
            self.assign(v, c);
            used = used.max(c + 1);
        }
        used
    }

    fn branch(&mut self, used: usize) {
        if self.timed_out || self.best == self.lower {
            return;
        }
        self.steps += 1;
        if self.steps.is_multiple_of(4096) {
            if let Some(deadline) = self.deadline {
                if Instant::now() > deadline {
                    self.timed_out = true;
                    return;
                }
            }
        }
        let Some(v) = self.pick() else {
            self.best = self.best.min(used);
            return;
        };
        let n = self.n();
        // colors beyond `used` are interchangeable, so only one new color is tried
        let limit = (used + 1).min(self.best - 1);
        for c in 0..limit {
            if self.counts[v * n + c] != 0 {
                continue;
            }
            self.assign(v, c);
            self.branch(used.max(c + 1));
            self.unassign(v);
            if self.timed_out || self.best == self.lower {
                return;
            }
        }
    }
}
