//! Immutable simple undirected graphs.
//!
//! Vertices are dense indices `0..n`. The edge set is stored normalized
//! (`i < j`, sorted, deduplicated), so two graphs compare equal exactly when
//! they have the same labeled edge set.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

impl Graph {
    /// Builds a graph from an arbitrary edge list. Duplicate edges (in either
    /// orientation) collapse to one.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut normalized = Vec::new();
        for (a, b) in edges {
            for v in [a, b] {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            if a == b {
                return Err(Error::Loop(a));
            }
            normalized.push((a.min(b), a.max(b)));
        }
        normalized.sort_unstable();
        normalized.dedup();
        Ok(Self::from_normalized(n, normalized))
    }

    fn from_normalized(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(i, j) in &edges {
            adj[i].push(j);
            adj[j].push(i);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Result<Self> {
        Self::new(n, std::iter::empty())
    }

    /// Builds a graph from symmetric adjacency bit rows (`n <= 64`).
    pub fn from_bit_rows(rows: &[u64]) -> Result<Self> {
        let n = rows.len();
        let mut edges = Vec::new();
        for (i, &row) in rows.iter().enumerate() {
            let mut higher = row & !((2u64 << i) - 1);
            while higher != 0 {
                let j = higher.trailing_zeros() as usize;
                higher &= higher - 1;
                if j >= n {
                    return Err(Error::VertexOutOfRange { vertex: j, n });
                }
                edges.push((i, j));
            }
        }
        Self::new(n, edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn e(&self) -> usize {
        self.edges.len()
    }

    /// Normalized edges, sorted lexicographically.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && b < self.n && self.adj[a].binary_search(&b).is_ok()
    }

    pub fn is_complete(&self) -> bool {
        self.e() == self.n * (self.n - 1) / 2
    }

    /// Adjacency as bit rows; bit `j` of row `i` is set iff `ij` is an edge.
    ///
    /// Panics if `n > 64`.
    pub fn bit_rows(&self) -> Vec<u64> {
        assert!(self.n <= 64, "bit rows support at most 64 vertices");
        self.adj
            .iter()
            .map(|list| list.iter().fold(0u64, |acc, &j| acc | (1 << j)))
            .collect()
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut edges: Vec<_> = self
            .edges
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (perm[a], perm[b]);
                (x.min(y), x.max(y))
            })
            .collect();
        edges.sort_unstable();
        Self::from_normalized(self.n, edges)
    }

    /// Subgraph induced by `keep`, relabeled in the order given.
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        for (new, &old) in keep.iter().enumerate() {
            index[old] = new;
        }
        let mut edges: Vec<_> = self
            .edges
            .iter()
            .filter(|&&(a, b)| index[a] != usize::MAX && index[b] != usize::MAX)
            .map(|&(a, b)| (index[a].min(index[b]), index[a].max(index[b])))
            .collect();
        edges.sort_unstable();
        Self::from_normalized(keep.len(), edges)
    }

    /// Same vertex set with the listed edges removed.
    pub fn without_edges(&self, removed: &[(usize, usize)]) -> Graph {
        let edges = self
            .edges
            .iter()
            .copied()
            .filter(|&(a, b)| !removed.contains(&(a.min(b), a.max(b))))
            .collect();
        Self::from_normalized(self.n, edges)
    }

    /// Graph with one extra vertex `n` adjacent to `neighbors`.
    pub fn with_vertex(&self, neighbors: &[usize]) -> Result<Graph> {
        let v = self.n;
        Graph::new(
            self.n + 1,
            self.edges.iter().copied().chain(neighbors.iter().map(|&u| (u, v))),
        )
    }

    /// Writes the edge-list text form: `n m` then one `i j` line per edge.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.e());
        for &(i, j) in &self.edges {
            out.push_str(&format!("{i} {j}\n"));
        }
        out
    }

    /// Parses the edge-list text form. `#` starts a comment; blank lines are
    /// ignored. The declared edge count must match the lines that follow.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 2 {
                return Err(Error::Parse {
                    line: line_no,
                    reason: format!("expected two integers, found {}", fields.len()),
                });
            }
            let parse = |s: &str| {
                s.parse::<usize>().map_err(|_| Error::Parse {
                    line: line_no,
                    reason: format!("`{s}` is not a non-negative integer"),
                })
            };
            let (a, b) = (parse(fields[0])?, parse(fields[1])?);
            if header.is_none() {
                header = Some((a, b));
            } else {
                edges.push((a, b));
            }
        }
        let (n, m) = header.ok_or(Error::Parse {
            line: 0,
            reason: "missing `n m` header".into(),
        })?;
        if edges.len() != m {
            return Err(Error::Parse {
                line: 0,
                reason: format!("header declares {m} edges but {} follow", edges.len()),
            });
        }
        Graph::new(n, edges)
    }
}

/// Zykov join: disjoint union plus every edge between the two parts.
/// The second graph's vertices are offset by `g1.n()`.
pub fn join(g1: &Graph, g2: &Graph) -> Graph {
    let offset = g1.n;
    let mut edges = g1.edges.clone();
    edges.extend(g2.edges.iter().map(|&(a, b)| (a + offset, b + offset)));
    for a in 0..g1.n {
        for b in 0..g2.n {
            edges.push((a, b + offset));
        }
    }
    edges.sort_unstable();
    Graph::from_normalized(g1.n + g2.n, edges)
}

/// Disjoint union; the second graph's vertices are offset by `g1.n()`.
pub fn disjoint_union(g1: &Graph, g2: &Graph) -> Graph {
    let offset = g1.n;
    let mut edges = g1.edges.clone();
    edges.extend(g2.edges.iter().map(|&(a, b)| (a + offset, b + offset)));
    Graph::from_normalized(g1.n + g2.n, edges)
}

pub fn complement(g: &Graph) -> Graph {
    let mut edges = Vec::with_capacity(g.n * (g.n - 1) / 2 - g.e());
    for i in 0..g.n {
        let mut present = g.adj[i].iter().peekable();
        for j in i + 1..g.n {
            while present.peek().is_some_and(|&&k| k < j) {
                present.next();
            }
            if present.peek() != Some(&&j) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_normalized(g.n, edges)
}

/// A proper nonempty vertex subset `H` of a graph on `n` vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexSubset {
    members: Vec<usize>,
    n: usize,
}

impl VertexSubset {
    pub fn new(n: usize, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut members: Vec<usize> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        if let Some(&v) = members.iter().find(|&&v| v >= n) {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        if members.is_empty() || members.len() >= n {
            return Err(Error::DegenerateSubset {
                size: members.len(),
                n,
            });
        }
        Ok(VertexSubset { members, n })
    }

    /// Subset from a bit mask over `n <= 64` vertices.
    pub fn from_mask(n: usize, mask: u64) -> Result<Self> {
        Self::new(n, (0..n.min(64)).filter(|&v| mask >> v & 1 == 1))
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    /// Number of members, `m`.
    pub fn m(&self) -> usize {
        self.members.len()
    }

    /// Order of the ambient graph.
    pub fn ambient_n(&self) -> usize {
        self.n
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }
}

/// Degree of a vertex subset: the number of edges with exactly one endpoint
/// in `h` (its edge boundary).
pub fn subset_degree(g: &Graph, h: &VertexSubset) -> Result<usize> {
    if h.n != g.n {
        return Err(Error::DegenerateSubset { size: h.m(), n: g.n });
    }
    let mut inside = vec![false; g.n];
    for &v in &h.members {
        inside[v] = true;
    }
    Ok(g.edges.iter().filter(|&&(a, b)| inside[a] != inside[b]).count())
}

/// Named graph families with their fixed labelings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// `K_n`.
    Complete(usize),
    /// `C_n`, edges `(i, i+1 mod n)`.
    Cycle(usize),
    /// `P_n`, edges `(i, i+1)`.
    Path(usize),
    /// `kK_1`.
    Empty(usize),
    /// `K_{p,q}` with parts `0..p` and `p..p+q`.
    CompleteBipartite(usize, usize),
    /// `C_n ∔ 2K_1`: cycle on `0..n`, hubs `n` and `n+1`.
    DoubleWheel(usize),
    /// `2K_1 ∔ C_4`: hubs `0, 1`, cycle on `2..6`.
    Octahedron,
    /// Triangles `012` and `345` with rungs `(i, i+3)`.
    Prism3,
    /// `Q_3` on `0..8`, adjacent when labels differ in one bit.
    Cube,
    /// `(K_{n-1} ∪ K_1) ∔ K_1`: clique on `0..n-1`, pendant `x = n-1`, hub
    /// `n`. The hub and the clique span a `K_n`; `n + 1` vertices in all.
    NearComplete(usize),
    /// Outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `(i, i+5)`.
    Petersen,
}

impl Family {
    pub const NAMES: [&'static str; 11] = [
        "complete",
        "cycle",
        "path",
        "empty",
        "complete_bipartite",
        "double_wheel",
        "octahedron",
        "prism_3",
        "cube",
        "near_complete",
        "petersen",
    ];

    /// Builds a family member from a name and integer parameters.
    pub fn from_parts(name: &str, params: &[usize]) -> Result<Family> {
        let arity = |k: usize| -> Result<()> {
            if params.len() == k {
                Ok(())
            } else {
                Err(Error::InvalidParameter {
                    family: name.to_string(),
                    reason: format!("expected {k} parameter(s), got {}", params.len()),
                })
            }
        };
        let family = match name {
            "complete" | "K" => {
                arity(1)?;
                Family::Complete(params[0])
            }
            "cycle" | "C" => {
                arity(1)?;
                Family::Cycle(params[0])
            }
            "path" | "P" => {
                arity(1)?;
                Family::Path(params[0])
            }
            "empty" => {
                arity(1)?;
                Family::Empty(params[0])
            }
            "complete_bipartite" | "K_pq" => {
                arity(2)?;
                Family::CompleteBipartite(params[0], params[1])
            }
            "double_wheel" => {
                arity(1)?;
                Family::DoubleWheel(params[0])
            }
            "octahedron" => {
                arity(0)?;
                Family::Octahedron
            }
            "prism_3" | "prism" => {
                arity(0)?;
                Family::Prism3
            }
            "cube" | "Q3" => {
                arity(0)?;
                Family::Cube
            }
            "near_complete" => {
                arity(1)?;
                Family::NearComplete(params[0])
            }
            "petersen" => {
                arity(0)?;
                Family::Petersen
            }
            _ => return Err(Error::UnknownFamily(name.to_string())),
        };
        family.validate()?;
        Ok(family)
    }

    pub fn name(&self) -> &'static str {
        match self {
            Family::Complete(_) => "complete",
            Family::Cycle(_) => "cycle",
            Family::Path(_) => "path",
            Family::Empty(_) => "empty",
            Family::CompleteBipartite(..) => "complete_bipartite",
            Family::DoubleWheel(_) => "double_wheel",
            Family::Octahedron => "octahedron",
            Family::Prism3 => "prism_3",
            Family::Cube => "cube",
            Family::NearComplete(_) => "near_complete",
            Family::Petersen => "petersen",
        }
    }

    /// Family with the same shape but size parameter `n`, for families that
    /// have exactly one size parameter.
    pub fn with_size(name: &str, n: usize) -> Result<Family> {
        match name {
            "complete" | "cycle" | "path" | "empty" | "double_wheel" | "near_complete" => {
                Family::from_parts(name, &[n])
            }
            _ if Family::NAMES.contains(&name) => Err(Error::InvalidParameter {
                family: name.to_string(),
                reason: "family is not parameterized by a single size".into(),
            }),
            _ => Err(Error::UnknownFamily(name.to_string())),
        }
    }

    fn validate(&self) -> Result<()> {
        let bad = |reason: &str| {
            Err(Error::InvalidParameter {
                family: self.name().to_string(),
                reason: reason.to_string(),
            })
        };
        match *self {
            Family::Complete(n) | Family::Path(n) | Family::Empty(n) if n == 0 => {
                bad("need at least one vertex")
            }
            Family::Cycle(n) | Family::DoubleWheel(n) if n < 3 => bad("cycle needs n >= 3"),
            Family::CompleteBipartite(p, q) if p == 0 || q == 0 => {
                bad("both parts must be nonempty")
            }
            Family::NearComplete(n) if n < 2 => bad("clique order must be at least 2"),
            _ => Ok(()),
        }
    }

    pub fn build(&self) -> Result<Graph> {
        self.validate()?;
        let g = match *self {
            Family::Complete(n) => {
                let edges = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
                Graph::new(n, edges)?
            }
            Family::Cycle(n) => Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))?,
            Family::Path(n) => Graph::new(n, (1..n).map(|i| (i - 1, i)))?,
            Family::Empty(n) => Graph::empty(n)?,
            Family::CompleteBipartite(p, q) => {
                Graph::new(p + q, (0..p).flat_map(|i| (p..p + q).map(move |j| (i, j))))?
            }
            Family::DoubleWheel(n) => join(&Family::Cycle(n).build()?, &Graph::empty(2)?),
            Family::Octahedron => join(&Graph::empty(2)?, &Family::Cycle(4).build()?),
            Family::Prism3 => Graph::new(
                6,
                [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)],
            )?,
            Family::Cube => {
                let edges = (0..8usize)
                    .flat_map(|v| (0..3).map(move |b| (v, v ^ (1 << b))))
                    .filter(|&(a, b)| a < b);
                Graph::new(8, edges)?
            }
            Family::NearComplete(n) => {
                let left = disjoint_union(&Family::Complete(n - 1).build()?, &Graph::empty(1)?);
                join(&left, &Graph::empty(1)?)
            }
            Family::Petersen => {
                let outer = (0..5).map(|i| (i, (i + 1) % 5));
                let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
                let spokes = (0..5).map(|i| (i, i + 5));
                Graph::new(10, outer.chain(inner).chain(spokes))?
            }
        };
        Ok(g)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::Complete(n)
            | Family::Cycle(n)
            | Family::Path(n)
            | Family::Empty(n)
            | Family::DoubleWheel(n)
            | Family::NearComplete(n) => write!(f, "{}:{}", self.name(), n),
            Family::CompleteBipartite(p, q) => write!(f, "{}:{},{}", self.name(), p, q),
            _ => f.write_str(self.name()),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    /// Parses `name` or `name:p1[,p2]`, e.g. `cycle:5`, `complete_bipartite:2,3`.
    fn from_str(s: &str) -> Result<Family> {
        let (name, rest) = match s.split_once(':') {
            Some((name, rest)) => (name, Some(rest)),
            None => (s, None),
        };
        let params = match rest {
            None => Vec::new(),
            Some(rest) => rest
                .split(',')
                .map(|p| {
                    p.trim().parse::<usize>().map_err(|_| Error::InvalidParameter {
                        family: name.to_string(),
                        reason: format!("`{p}` is not a non-negative integer"),
                    })
                })
                .collect::<Result<Vec<_>>>()?,
        };
        Family::from_parts(name.trim(), &params)
    }
}

/// Builds a named family member; see [`Family::from_parts`].
pub fn family(name: &str, params: &[usize]) -> Result<Graph> {
    Family::from_parts(name, params)?.build()
}
