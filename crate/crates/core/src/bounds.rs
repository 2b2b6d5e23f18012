//! Upper bounds on the algebraic connectivity and the verdict engine that
//! applies all of them to one graph.
//!
//! Each evaluator checks its own hypotheses and returns
//! [`Error::Inapplicable`] (or a more specific error) when they fail. The
//! verdict engine keeps inapplicable entries in the report together with the
//! reason, so a reader can see which hypothesis ruled a bound out.

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{subset_degree, Graph, VertexSubset};
use crate::invariants::{
    chromatic_number, girth, is_bipartite, is_connected, is_planar_fast, is_regular,
    vertex_connectivity, GirthValue,
};
use crate::spectral::{algebraic_connectivity, fiedler_vector};
use crate::surfaces::{cook_number, cook_planar_girth_cap, euler_edge_bound, heawood_number, Surface};

/// Tolerance for bound soundness and tightness classification.
pub const TIGHT_TOL: f64 = 1e-6;

/// Largest order for the exhaustive cut-bound search.
pub const EXHAUSTIVE_CUT_MAX_N: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ContextSource {
    Given,
    PlanarityDerived,
}

/// The surface a graph is assumed to embed in, if any.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SurfaceContext {
    pub surface: Option<Surface>,
    pub source: ContextSource,
}

impl SurfaceContext {
    pub fn given(surface: Surface) -> Self {
        SurfaceContext {
            surface: Some(surface),
            source: ContextSource::Given,
        }
    }

    /// The sphere when `g` is planar, otherwise no surface at all.
    pub fn auto(g: &Graph) -> Self {
        SurfaceContext {
            surface: is_planar_fast(g).then_some(Surface::SPHERE),
            source: ContextSource::PlanarityDerived,
        }
    }

    pub fn none() -> Self {
        SurfaceContext {
            surface: None,
            source: ContextSource::Given,
        }
    }

    pub fn chi(&self) -> Option<i64> {
        self.surface.map(|s| s.euler_characteristic())
    }

    fn is_sphere(&self) -> bool {
        self.surface.is_some_and(|s| s.is_sphere())
    }

    /// Checks the context against necessary conditions for `g` to embed:
    /// planarity for the sphere and the Euler edge bound otherwise.
    pub fn check(&self, g: &Graph) -> Result<Surface> {
        let surface = self
            .surface
            .ok_or_else(|| Error::Inapplicable("no surface context".into()))?;
        if surface.is_sphere() && !is_planar_fast(g) {
            return Err(Error::Inapplicable("graph is not planar".into()));
        }
        if g.n() >= 3 && is_connected(g) {
            let limit = euler_edge_bound(g.n(), girth(g), surface.euler_characteristic())?;
            if g.e() as i64 > limit {
                return Err(Error::Inapplicable(format!(
                    "{} edges exceed the Euler bound {limit} for {surface}",
                    g.e()
                )));
            }
        }
        Ok(surface)
    }
}

fn require_non_complete(g: &Graph) -> Result<()> {
    if g.is_complete() {
        Err(Error::Complete)
    } else {
        Ok(())
    }
}

/// The chain `a(G) <= v(G) <= d_min <= 2e/n`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FiedlerChain {
    pub vertex_connectivity: usize,
    pub min_degree: usize,
    pub average_degree: f64,
}

impl FiedlerChain {
    /// The first link, the bound on `a(G)`.
    pub fn a_bound(&self) -> f64 {
        self.vertex_connectivity as f64
    }
}

pub fn fiedler_chain(g: &Graph) -> Result<FiedlerChain> {
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    require_non_complete(g)?;
    Ok(FiedlerChain {
        vertex_connectivity: vertex_connectivity(g)?,
        min_degree: g.min_degree(),
        average_degree: 2.0 * g.e() as f64 / g.n() as f64,
    })
}

/// `2g/(g-2) * (n - chi)/n` for a non-complete graph. Forests use `g = 3`;
/// the second field reports whether that fallback happened.
pub fn euler_density_bound(g: &Graph, ctx: &SurfaceContext) -> Result<(f64, bool)> {
    require_non_complete(g)?;
    let chi = ctx.check(g)?.euler_characteristic();
    let (gi, acyclic) = match girth(g) {
        GirthValue::Finite(x) => (x as f64, false),
        GirthValue::Infinite => (3.0, true),
    };
    let n = g.n() as f64;
    Ok((2.0 * gi / (gi - 2.0) * (n - chi as f64) / n, acyclic))
}

/// Test-function bound `d(H) n / (m (n - m))`.
pub fn cut_bound(g: &Graph, h: &VertexSubset) -> Result<f64> {
    let d = subset_degree(g, h)? as f64;
    let n = g.n() as f64;
    let m = h.m() as f64;
    Ok(d * n / (m * (n - m)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CutStrategy {
    /// Every proper subset; only for `n <= 16`.
    Exhaustive,
    /// Vertex sets of all shortest cycles, or arcs of a Hamiltonian girth
    /// cycle. Forests fall back to singletons.
    Cycles,
    /// Prefixes of the vertices sorted by a Fiedler vector.
    FiedlerSweep,
}

/// Smallest cut bound found by `strategy`. Ties keep the first subset found.
pub fn best_cut_bound(g: &Graph, strategy: CutStrategy) -> Result<(VertexSubset, f64)> {
    let n = g.n();
    if n < 2 {
        return Err(Error::TooFewVertices { required: 2, n });
    }
    let candidates: Vec<Vec<usize>> = match strategy {
        CutStrategy::Exhaustive => return exhaustive_cut(g),
        CutStrategy::Cycles => cycle_candidates(g),
        CutStrategy::FiedlerSweep => {
            let (_, x) = fiedler_vector(g)?;
            let mut order: Vec<usize> = (0..n).collect();
            order.sort_by(|&i, &j| x[i].total_cmp(&x[j]).then(i.cmp(&j)));
            (1..n).map(|k| order[..k].to_vec()).collect()
        }
    };
    let mut best: Option<(VertexSubset, f64)> = None;
    for members in candidates {
        let h = VertexSubset::new(n, members)?;
        let value = cut_bound(g, &h)?;
        if best.as_ref().is_none_or(|(_, b)| value < *b) {
            best = Some((h, value));
        }
    }
    best.ok_or_else(|| Error::Inapplicable("no candidate subsets".into()))
}

fn exhaustive_cut(g: &Graph) -> Result<(VertexSubset, f64)> {
    let n = g.n();
    if n > EXHAUSTIVE_CUT_MAX_N {
        return Err(Error::ResourceLimit(format!(
            "exhaustive cut search needs n <= {EXHAUSTIVE_CUT_MAX_N} (got {n})"
        )));
    }
    let rows = g.bit_rows();
    let full = (1u64 << n) - 1;
    let mut best_mask = 0;
    let mut best = f64::INFINITY;
    // complements give the same bound, so the last vertex stays outside
    for mask in 1..(1u64 << (n - 1)) {
        let mut boundary = 0;
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            boundary += (rows[v] & !mask & full).count_ones();
        }
        let m = mask.count_ones() as f64;
        let value = boundary as f64 * n as f64 / (m * (n as f64 - m));
        if value < best {
            best = value;
            best_mask = mask;
        }
    }
    Ok((VertexSubset::from_mask(n, best_mask)?, best))
}

/// Vertex sequences of all cycles of length `girth(g)`, each listed once.
pub fn shortest_cycles(g: &Graph, limit: usize) -> Vec<Vec<usize>> {
    let Some(len) = girth(g).finite() else {
        return Vec::new();
    };
    let mut out = Vec::new();
    let mut path = Vec::with_capacity(len);
    let mut on_path = vec![false; g.n()];
    for start in 0..g.n() {
        path.push(start);
        on_path[start] = true;
        extend_cycle(g, len, &mut path, &mut on_path, &mut out, limit);
        on_path[start] = false;
        path.pop();
        if out.len() >= limit {
            break;
        }
    }
    out
}

fn extend_cycle(
    g: &Graph,
    len: usize,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    out: &mut Vec<Vec<usize>>,
    limit: usize,
) {
    let start = path[0];
    let last = *path.last().unwrap();
    if path.len() == len {
        // one orientation per cycle: second vertex below the last one
        if g.has_edge(last, start) && path[1] < last {
            out.push(path.clone());
        }
        return;
    }
    for &w in g.neighbors(last) {
        if w > start && !on_path[w] && out.len() < limit {
            path.push(w);
            on_path[w] = true;
            extend_cycle(g, len, path, on_path, out, limit);
            on_path[w] = false;
            path.pop();
        }
    }
}

fn cycle_candidates(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let cycles = shortest_cycles(g, 10_000);
    if cycles.is_empty() {
        return (0..n).map(|v| vec![v]).collect();
    }
    let mut out = Vec::new();
    for cycle in cycles {
        if cycle.len() < n {
            out.push(cycle);
        } else {
            // a proper subset is required, so use the arcs of the cycle
            for k in 1..n {
                for s in 0..n {
                    out.push((0..k).map(|i| cycle[(s + i) % n]).collect());
                }
            }
        }
    }
    out
}

/// Bound for a regular graph of girth `g < n`:
/// `2n / ((n - g)(g - 2)) * (2 - g chi / n)`. On the sphere this equals
/// `4 / (g - 2)`, returned as the second field.
pub fn regular_girth_bound(g: &Graph, ctx: &SurfaceContext) -> Result<(f64, Option<f64>)> {
    if is_regular(g).is_none() {
        return Err(Error::NotRegular);
    }
    let gi = girth(g).finite().ok_or(Error::Acyclic)?;
    let n = g.n();
    if gi >= n {
        return Err(Error::Inapplicable(format!(
            "girth {gi} equals n; the cycle case is covered by the Fiedler chain"
        )));
    }
    let chi = ctx.check(g)?.euler_characteristic() as f64;
    let (nf, gf) = (n as f64, gi as f64);
    let value = 2.0 * nf / ((nf - gf) * (gf - 2.0)) * (2.0 - gf * chi / nf);
    let planar = ctx.is_sphere().then(|| 4.0 / (gf - 2.0));
    Ok((value, planar))
}

/// `n - ceil(n / kappa)` for a non-complete graph.
pub fn chromatic_bound(g: &Graph) -> Result<f64> {
    require_non_complete(g)?;
    let kappa = chromatic_number(g)?;
    let n = g.n();
    Ok((n - n.div_ceil(kappa)) as f64)
}

/// `4 (n - chi) / n` for a non-complete bipartite graph with an edge.
pub fn bichromatic_bound(g: &Graph, ctx: &SurfaceContext) -> Result<f64> {
    require_non_complete(g)?;
    if g.e() == 0 || !is_bipartite(g) {
        return Err(Error::Inapplicable("chromatic number is not 2".into()));
    }
    let chi = ctx.check(g)?.euler_characteristic() as f64;
    let n = g.n() as f64;
    Ok(4.0 * (n - chi) / n)
}

/// Heawood-type cap: 5 on the sphere, 6 on the Klein bottle, `H(S)` for
/// complete graphs and `C(S) = H(S) - 1` for everything else.
pub fn heawood_bound(g: &Graph, ctx: &SurfaceContext) -> Result<(f64, &'static str)> {
    let surface = ctx.check(g)?;
    if surface.is_sphere() {
        return Ok((5.0, "planar cap"));
    }
    if surface.is_klein_bottle() {
        return Ok((6.0, "Klein bottle: a(K_6) = 6 < H = 7"));
    }
    let chi = surface.euler_characteristic();
    if g.is_complete() {
        Ok((heawood_number(chi)? as f64, "complete graph: H(S)"))
    } else {
        Ok((cook_number(chi)? as f64, "non-complete graph: C(S) = H(S) - 1"))
    }
}

fn require_planar(g: &Graph, ctx: &SurfaceContext) -> Result<()> {
    let surface = ctx.check(g)?;
    if surface.is_sphere() {
        Ok(())
    } else {
        Err(Error::Inapplicable("surface context is not the sphere".into()))
    }
}

/// Cook's girth table combined with `a(G) <= v(G)` for non-complete planar
/// graphs.
pub fn cook_girth_bound(g: &Graph, ctx: &SurfaceContext) -> Result<f64> {
    require_non_complete(g)?;
    require_planar(g, ctx)?;
    Ok(cook_planar_girth_cap(girth(g)) as f64)
}

/// 4 for planar graphs with maximum degree at most 5.
pub fn planar_max_degree_bound(g: &Graph, ctx: &SurfaceContext) -> Result<f64> {
    require_planar(g, ctx)?;
    if g.max_degree() > 5 {
        return Err(Error::Inapplicable(format!("d_max = {} > 5", g.max_degree())));
    }
    Ok(4.0)
}

/// 2 for planar cubic graphs other than `K_4`.
pub fn planar_cubic_bound(g: &Graph, ctx: &SurfaceContext) -> Result<f64> {
    require_planar(g, ctx)?;
    if is_regular(g) != Some(3) {
        return Err(Error::Inapplicable("graph is not cubic".into()));
    }
    if g.is_complete() {
        return Err(Error::Inapplicable("K_4 is excluded".into()));
    }
    Ok(2.0)
}

/// 3 for non-complete planar bipartite graphs with at least one edge.
pub fn planar_bichromatic_bound(g: &Graph, ctx: &SurfaceContext) -> Result<f64> {
    require_non_complete(g)?;
    require_planar(g, ctx)?;
    if g.e() == 0 || !is_bipartite(g) {
        return Err(Error::Inapplicable("chromatic number is not 2".into()));
    }
    Ok(3.0)
}

/// Lower bound on the orientable genus of a Ramanujan graph of degree
/// `d >= 9` (with `d != n - 1`, which the caller checks):
/// `ceil(((2d - 4 sqrt(d-1) - 5)^2 - 1) / 48)`.
///
/// The value is estimated in floating point and then settled exactly: with
/// `x = 2d - 5 - 4 sqrt(d - 1)`, `x^2 = P - Q sqrt(d - 1)` for integers `P`,
/// `Q`, and `x^2 <= 48k + 1` is decided by squaring in `i128`.
pub fn ramanujan_genus_lower_bound(d: u64) -> Result<u64> {
    if d < 9 {
        return Err(Error::Inapplicable(format!(
            "degree {d} < 9: the spectral gap does not constrain the genus"
        )));
    }
    let s = (d - 1) as i128;
    let p = (2 * d as i128 - 5).pow(2) + 16 * s;
    let q = 8 * (2 * d as i128 - 5);
    // (x^2 - 1) / 48 <= k  <=>  P - (48k + 1) <= Q sqrt(s)
    let at_most = |k: i128| {
        let lhs = p - (48 * k + 1);
        lhs <= 0 || lhs * lhs <= q * q * s
    };
    let df = d as f64;
    let estimate = (((2.0 * df - 4.0 * (df - 1.0).sqrt() - 5.0).powi(2) - 1.0) / 48.0).ceil();
    let mut k = estimate as i128;
    while k > 0 && at_most(k - 1) {
        k -= 1;
    }
    while !at_most(k) {
        k += 1;
    }
    Ok(k as u64)
}

/// Graph classes with closed-form asymptotic caps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AsymptoticClass {
    General,
    Regular,
    RegularGirth(usize),
    DRegular(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AsymptoticCap {
    pub lower: Option<f64>,
    pub upper: f64,
}

/// Closed-form caps on the limiting algebraic connectivity of a class.
/// These are formula evaluators; nothing here certifies a limit.
pub fn asymptotic_caps(class: AsymptoticClass) -> Result<AsymptoticCap> {
    let invalid = |reason: &str| {
        Err(Error::InvalidParameter {
            family: format!("{class:?}"),
            reason: reason.into(),
        })
    };
    match class {
        // the double wheel sequence witnesses the lower bound
        AsymptoticClass::General => Ok(AsymptoticCap {
            lower: Some(2.0),
            upper: 6.0,
        }),
        AsymptoticClass::Regular => Ok(AsymptoticCap {
            lower: None,
            upper: 4.0,
        }),
        AsymptoticClass::RegularGirth(g) if g < 3 => invalid("girth must be at least 3"),
        AsymptoticClass::RegularGirth(g) => Ok(AsymptoticCap {
            lower: None,
            upper: 4.0 / (g as f64 - 2.0),
        }),
        AsymptoticClass::DRegular(d) if d < 2 => invalid("degree must be at least 2"),
        AsymptoticClass::DRegular(d) => {
            let df = d as f64;
            let upper = if d <= 10 { df - 2.0 * (df - 1.0).sqrt() } else { 4.0 };
            Ok(AsymptoticCap { lower: None, upper })
        }
    }
}

/// Rounds to 12 significant digits, the precision of every rendered real.
pub fn round12(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.11e}").parse().unwrap_or(x)
}

pub(crate) fn ser_round12<S: Serializer>(x: &f64, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(round12(*x))
}

pub(crate) fn ser_opt_round12<S: Serializer>(
    x: &Option<f64>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match x {
        Some(v) => s.serialize_f64(round12(*v)),
        None => s.serialize_none(),
    }
}

/// One row of a [`BoundReport`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundEntry {
    pub name: &'static str,
    #[serde(serialize_with = "ser_opt_round12")]
    pub value: Option<f64>,
    pub applicable: bool,
    pub reason: String,
    pub paper_ref: &'static str,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    pub graph: String,
    pub n: usize,
    pub e: usize,
    #[serde(serialize_with = "ser_round12")]
    pub a: f64,
    pub entries: Vec<BoundEntry>,
    #[serde(serialize_with = "ser_opt_round12")]
    pub best_upper: Option<f64>,
    pub tight: bool,
    #[serde(skip)]
    pub best_entry: Option<usize>,
}

impl BoundReport {
    pub fn entry(&self, name: &str) -> Option<&BoundEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    /// Applicable entries whose value is within [`TIGHT_TOL`] of `a`.
    pub fn tight_entries(&self) -> Vec<&BoundEntry> {
        self.entries
            .iter()
            .filter(|e| e.applicable && e.value.is_some_and(|v| (v - self.a).abs() <= TIGHT_TOL))
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Names of the verdict catalog in report order.
pub const CATALOG: [&str; 14] = [
    "fiedler_vertex_connectivity",
    "fiedler_min_degree",
    "fiedler_average_degree",
    "euler_density",
    "heawood",
    "cook_planar_girth",
    "cut_bound",
    "planar_max_degree_5",
    "regular_girth",
    "planar_regular_girth",
    "planar_cubic",
    "chromatic",
    "bichromatic",
    "planar_bichromatic",
];

fn describe(err: &Error) -> String {
    match err {
        Error::Inapplicable(reason) => reason.clone(),
        other => other.to_string(),
    }
}

fn entry(name: &'static str, paper_ref: &'static str, result: Result<(f64, String)>) -> BoundEntry {
    match result {
        Ok((value, reason)) => BoundEntry {
            name,
            value: Some(value),
            applicable: true,
            reason,
            paper_ref,
        },
        Err(err) => BoundEntry {
            name,
            value: None,
            applicable: false,
            reason: describe(&err),
            paper_ref,
        },
    }
}

/// Runs every bound in [`CATALOG`] order against `g`.
pub fn verdict(g: &Graph, ctx: &SurfaceContext, label: &str) -> Result<BoundReport> {
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    let a = if g.n() >= 2 { algebraic_connectivity(g)? } else { 0.0 };
    let chain = fiedler_chain(g);
    let chain_entry = |pick: fn(&FiedlerChain) -> (f64, String)| match &chain {
        Ok(c) => Ok(pick(c)),
        Err(e) => Err(e.clone()),
    };
    let mut entries = vec![
        entry(
            "fiedler_vertex_connectivity",
            "Fiedler: a(G) <= v(G) for connected non-complete G",
            chain_entry(|c| (c.a_bound(), format!("v(G) = {}", c.vertex_connectivity))),
        ),
        entry(
            "fiedler_min_degree",
            "Fiedler: v(G) <= d_min",
            chain_entry(|c| (c.min_degree as f64, format!("d_min = {}", c.min_degree))),
        ),
        entry(
            "fiedler_average_degree",
            "Fiedler: d_min <= 2e/n",
            chain_entry(|c| (c.average_degree, "2e/n".to_string())),
        ),
        entry(
            "euler_density",
            "Euler edge bound with Fiedler: a(G) <= 2g/(g-2) (n-chi)/n",
            euler_density_bound(g, ctx).map(|(v, acyclic)| {
                let note = if acyclic { "acyclic: girth taken as 3" } else { "girth from graph" };
                (v, note.to_string())
            }),
        ),
        entry(
            "heawood",
            "Heawood-type cap: a(G) <= a(K^gamma) = H(S); C(S) for non-complete G",
            heawood_bound(g, ctx).map(|(v, note)| (v, note.to_string())),
        ),
        entry(
            "cook_planar_girth",
            "Cook planar girth table with a(G) <= v(G)",
            cook_girth_bound(g, ctx).map(|v| (v, format!("girth {}", girth(g)))),
        ),
        entry(
            "cut_bound",
            "Subset bound: a(G) <= d(H) n / (m (n - m))",
            cut_entry(g),
        ),
        entry(
            "planar_max_degree_5",
            "Planar with d_max <= 5: a(G) <= 4",
            planar_max_degree_bound(g, ctx).map(|v| (v, "planar, d_max <= 5".into())),
        ),
    ];
    let regular = regular_girth_bound(g, ctx);
    entries.push(entry(
        "regular_girth",
        "Regular of girth g < n: a(G) <= 2n/((n-g)(g-2)) (2 - g chi/n)",
        regular.clone().map(|(v, _)| (v, format!("girth {}", girth(g)))),
    ));
    entries.push(entry(
        "planar_regular_girth",
        "Regular planar of girth g < n: a(G) <= 4/(g-2)",
        regular.and_then(|(_, planar)| {
            planar
                .map(|v| (v, "sphere".to_string()))
                .ok_or_else(|| Error::Inapplicable("surface context is not the sphere".into()))
        }),
    ));
    entries.push(entry(
        "planar_cubic",
        "Planar cubic other than K_4: a(G) <= 2",
        planar_cubic_bound(g, ctx).map(|v| (v, "planar cubic".into())),
    ));
    entries.push(entry(
        "chromatic",
        "Chromatic bound: a(G) <= n - ceil(n / kappa(G))",
        chromatic_bound(g).map(|v| (v, "exact chromatic number".into())),
    ));
    entries.push(entry(
        "bichromatic",
        "Bichromatic: a(G) <= 4 (n - chi)/n",
        bichromatic_bound(g, ctx).map(|v| (v, "bipartite".into())),
    ));
    entries.push(entry(
        "planar_bichromatic",
        "Planar bichromatic: a(G) <= 3",
        planar_bichromatic_bound(g, ctx).map(|v| (v, "planar bipartite".into())),
    ));
    debug_assert!(entries.iter().map(|e| e.name).eq(CATALOG));

    let mut best_entry: Option<usize> = None;
    for (i, e) in entries.iter().enumerate() {
        if let (true, Some(v)) = (e.applicable, e.value) {
            if best_entry.is_none_or(|b| v < entries[b].value.unwrap()) {
                best_entry = Some(i);
            }
        }
    }
    let best_upper = best_entry.map(|i| entries[i].value.unwrap());
    Ok(BoundReport {
        graph: label.to_string(),
        n: g.n(),
        e: g.e(),
        a,
        tight: best_upper.is_some_and(|b| (b - a).abs() <= TIGHT_TOL),
        entries,
        best_upper,
        best_entry,
    })
}

fn cut_entry(g: &Graph) -> Result<(f64, String)> {
    if g.n() <= EXHAUSTIVE_CUT_MAX_N {
        let (h, v) = best_cut_bound(g, CutStrategy::Exhaustive)?;
        return Ok((v, format!("exhaustive, H = {:?}", h.members())));
    }
    let (h1, v1) = best_cut_bound(g, CutStrategy::FiedlerSweep)?;
    let (h2, v2) = best_cut_bound(g, CutStrategy::Cycles)?;
    if v2 < v1 {
        Ok((v2, format!("shortest cycles, H = {:?}", h2.members())))
    } else {
        Ok((v1, format!("Fiedler sweep, H = {:?}", h1.members())))
    }
}
