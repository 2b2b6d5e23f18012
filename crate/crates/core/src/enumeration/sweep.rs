//! Predicate sweeps over generated graphs.
//!
//! A sweep evaluates one predicate on every graph that passes its filters and
//! collects counterexamples and extremal graphs (value within
//! [`TIGHT_TOL`] of the bound). Work is spread over a local rayon pool and
//! collected in input order, so reports do not depend on the worker count.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use super::canon::{canonical_key, CanonKey};
use super::generate::{generate_connected_levels, Filters, GENERATE_MAX_N};
use super::graph6;
use crate::bounds::{
    best_cut_bound, chromatic_bound, fiedler_chain, ser_round12, CutStrategy, TIGHT_TOL,
};
use crate::error::{Error, Result};
use crate::graph::{family, Family, Graph};
use crate::invariants::{is_bipartite, is_connected, is_planar_fast, is_regular};
use crate::spectral::algebraic_connectivity;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Predicate {
    /// Planar graphs have `a <= 4`, with equality only for `K_4` and the
    /// octahedron. Conjectural.
    Conjecture1PlanarCap,
    /// Planar graphs other than `K_4` and the octahedron have `a <= 3`.
    /// Conjectural; the double wheel on seven vertices already exceeds it.
    Conjecture1Gap,
    /// Planar bipartite graphs have `a <= 2`. Conjectural.
    Conjecture2PlanarBipartite,
    FiedlerChainHolds,
    PlanarDmax5Cap,
    PlanarCubicCap,
    ChromaticBoundHolds,
    CutBoundUniversal,
}

impl Predicate {
    pub const ALL: [Predicate; 8] = [
        Predicate::Conjecture1PlanarCap,
        Predicate::Conjecture1Gap,
        Predicate::Conjecture2PlanarBipartite,
        Predicate::FiedlerChainHolds,
        Predicate::PlanarDmax5Cap,
        Predicate::PlanarCubicCap,
        Predicate::ChromaticBoundHolds,
        Predicate::CutBoundUniversal,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Predicate::Conjecture1PlanarCap => "conjecture1_planar_cap",
            Predicate::Conjecture1Gap => "conjecture1_gap",
            Predicate::Conjecture2PlanarBipartite => "conjecture2_planar_bipartite",
            Predicate::FiedlerChainHolds => "fiedler_chain_holds",
            Predicate::PlanarDmax5Cap => "planar_dmax5_cap",
            Predicate::PlanarCubicCap => "planar_cubic_cap",
            Predicate::ChromaticBoundHolds => "chromatic_bound_holds",
            Predicate::CutBoundUniversal => "cut_bound_universal",
        }
    }

    /// Whether a counterexample contradicts a proven theorem, i.e. signals a
    /// bug rather than evidence against a conjecture.
    pub fn theorem_backed(self) -> bool {
        !matches!(
            self,
            Predicate::Conjecture1PlanarCap
                | Predicate::Conjecture1Gap
                | Predicate::Conjecture2PlanarBipartite
        )
    }

    /// Filters implied by the predicate's hypotheses.
    pub fn required_filters(self) -> Filters {
        let planar = Filters {
            planar: true,
            ..Filters::default()
        };
        match self {
            Predicate::Conjecture1PlanarCap | Predicate::Conjecture1Gap => planar,
            Predicate::Conjecture2PlanarBipartite => Filters {
                bipartite: true,
                ..planar
            },
            Predicate::PlanarDmax5Cap => Filters {
                max_degree: Some(5),
                ..planar
            },
            Predicate::PlanarCubicCap => Filters {
                cubic: true,
                ..planar
            },
            _ => Filters::default(),
        }
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Predicate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Predicate> {
        Predicate::ALL
            .into_iter()
            .find(|p| p.id() == s)
            .ok_or_else(|| Error::UnknownPredicate(s.to_string()))
    }
}

/// Outcome of a predicate on one graph whose hypotheses hold.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Check {
    pub a: f64,
    pub bound: f64,
    pub violated: bool,
    pub extremal: bool,
}

/// Canonical keys of the two conjectured planar extremal graphs.
#[derive(Debug, Clone, Copy)]
struct Extremes {
    k4: CanonKey,
    octahedron: CanonKey,
}

impl Extremes {
    fn new() -> Self {
        Extremes {
            k4: canonical_key(&family("complete", &[4]).expect("K_4")),
            octahedron: canonical_key(&Family::Octahedron.build().expect("octahedron")),
        }
    }

    fn contains(&self, g: &Graph) -> bool {
        matches!(g.n(), 4 | 6) && {
            let key = canonical_key(g);
            key == self.k4 || key == self.octahedron
        }
    }
}

fn cap_check(a: f64, bound: f64) -> Check {
    Check {
        a,
        bound,
        violated: a > bound + TIGHT_TOL,
        extremal: (a - bound).abs() <= TIGHT_TOL,
    }
}

/// Evaluates `predicate` on `g`; `None` when its hypotheses fail.
pub fn check(predicate: Predicate, g: &Graph) -> Result<Option<Check>> {
    check_with(predicate, g, &Extremes::new())
}

fn check_with(predicate: Predicate, g: &Graph, extremes: &Extremes) -> Result<Option<Check>> {
    if g.n() < 2 || !is_connected(g) {
        return Ok(None);
    }
    let planar = || is_planar_fast(g);
    let applies = match predicate {
        Predicate::Conjecture1PlanarCap => planar(),
        Predicate::Conjecture1Gap => planar() && !extremes.contains(g),
        Predicate::Conjecture2PlanarBipartite => is_bipartite(g) && planar(),
        Predicate::PlanarDmax5Cap => g.max_degree() <= 5 && planar(),
        Predicate::PlanarCubicCap => is_regular(g) == Some(3) && !g.is_complete() && planar(),
        Predicate::FiedlerChainHolds | Predicate::ChromaticBoundHolds => !g.is_complete(),
        Predicate::CutBoundUniversal => true,
    };
    if !applies {
        return Ok(None);
    }
    let a = algebraic_connectivity(g)?;
    let result = match predicate {
        Predicate::Conjecture1PlanarCap => {
            let mut c = cap_check(a, 4.0);
            c.violated |= c.extremal && !extremes.contains(g);
            c
        }
        Predicate::Conjecture1Gap => cap_check(a, 3.0),
        Predicate::Conjecture2PlanarBipartite => cap_check(a, 2.0),
        Predicate::PlanarDmax5Cap => cap_check(a, 4.0),
        Predicate::PlanarCubicCap => cap_check(a, 2.0),
        Predicate::FiedlerChainHolds => {
            let chain = fiedler_chain(g)?;
            let mut c = cap_check(a, chain.a_bound());
            c.violated |= chain.vertex_connectivity > chain.min_degree
                || chain.min_degree as f64 > chain.average_degree + TIGHT_TOL;
            c
        }
        Predicate::ChromaticBoundHolds => cap_check(a, chromatic_bound(g)?),
        Predicate::CutBoundUniversal => cap_check(a, best_cut_bound(g, CutStrategy::Exhaustive)?.1),
    };
    Ok(Some(result))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExtremalRecord {
    pub g6: String,
    #[serde(serialize_with = "ser_round12")]
    pub a: f64,
    #[serde(serialize_with = "ser_round12")]
    pub bound: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepReport {
    pub predicate: String,
    pub n_max: usize,
    pub filters: Vec<String>,
    pub checked: usize,
    pub counterexamples: Vec<String>,
    pub extremal: Vec<ExtremalRecord>,
}

impl SweepReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Sweeps all connected graphs on `1..=n_max` vertices.
pub fn sweep(predicate: Predicate, n_max: usize, filters: &Filters, workers: usize) -> Result<SweepReport> {
    if n_max > GENERATE_MAX_N {
        return Err(Error::ResourceLimit(format!(
            "sweeps support n_max <= {GENERATE_MAX_N}, got {n_max}"
        )));
    }
    let pool = pool(workers)?;
    let graphs: Vec<Graph> = pool
        .install(|| generate_connected_levels(n_max))?
        .into_iter()
        .flatten()
        .collect();
    run(predicate, &graphs, n_max, filters, &pool)
}

/// Sweeps a caller-supplied list, e.g. graphs read from a graph6 file.
pub fn sweep_graphs(predicate: Predicate, graphs: &[Graph], filters: &Filters, workers: usize) -> Result<SweepReport> {
    let n_max = graphs.iter().map(Graph::n).max().unwrap_or(0);
    run(predicate, graphs, n_max, filters, &pool(workers)?)
}

fn pool(workers: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::ResourceLimit(format!("thread pool: {e}")))
}

fn run(
    predicate: Predicate,
    graphs: &[Graph],
    n_max: usize,
    filters: &Filters,
    pool: &rayon::ThreadPool,
) -> Result<SweepReport> {
    let filters = filters.union(predicate.required_filters());
    let extremes = Extremes::new();
    let checks: Vec<Option<Check>> = pool.install(|| {
        graphs
            .par_iter()
            .map(|g| {
                if filters.accepts(g) {
                    check_with(predicate, g, &extremes)
                } else {
                    Ok(None)
                }
            })
            .collect::<Result<Vec<_>>>()
    })?;
    let mut report = SweepReport {
        predicate: predicate.id().to_string(),
        n_max,
        filters: filters.names(),
        checked: 0,
        counterexamples: Vec::new(),
        extremal: Vec::new(),
    };
    for (g, c) in graphs.iter().zip(checks) {
        let Some(c) = c else { continue };
        report.checked += 1;
        if c.violated {
            report.counterexamples.push(graph6::encode(g)?);
        }
        if c.extremal {
            report.extremal.push(ExtremalRecord {
                g6: graph6::encode(g)?,
                a: c.a,
                bound: c.bound,
            });
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn predicate_ids_round_trip() {
        for p in Predicate::ALL {
            assert_eq!(p.id().parse::<Predicate>().unwrap(), p);
        }
        assert!(matches!("conjecture9".parse::<Predicate>(), Err(Error::UnknownPredicate(_))));
    }

    #[test]
    fn single_graph_checks() {
        let oct = Family::Octahedron.build().unwrap();
        let c = check(Predicate::Conjecture1PlanarCap, &oct).unwrap().unwrap();
        assert!(c.extremal && !c.violated);
        assert_eq!(check(Predicate::Conjecture1Gap, &oct).unwrap(), None);
        let dw = Family::DoubleWheel(5).build().unwrap();
        let c = check(Predicate::Conjecture1Gap, &dw).unwrap().unwrap();
        assert!(c.violated && c.a > 3.38);
        let k5 = family("complete", &[5]).unwrap();
        assert_eq!(check(Predicate::Conjecture1PlanarCap, &k5).unwrap(), None);
        let prism = Family::Prism3.build().unwrap();
        let c = check(Predicate::PlanarCubicCap, &prism).unwrap().unwrap();
        assert!(c.extremal && !c.violated);
    }

    #[test]
    fn small_sweeps() {
        let none = Filters::default();
        let r = sweep(Predicate::Conjecture1PlanarCap, 6, &none, 2).unwrap();
        assert!(r.counterexamples.is_empty());
        let g6: Vec<&str> = r.extremal.iter().map(|e| e.g6.as_str()).collect();
        assert_eq!(g6.len(), 2);
        assert_eq!(r.filters, ["planar"]);
        let r = sweep(Predicate::FiedlerChainHolds, 6, &none, 2).unwrap();
        assert!(r.counterexamples.is_empty());
        assert!(sweep(Predicate::FiedlerChainHolds, 10, &none, 1).is_err());
    }
}
