//! Command-line interface.
//!
//! Exit codes: 0 success (including informative "inapplicable" answers),
//! 2 input error, 3 violated precondition, 4 resource cap.

use std::ffi::OsString;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bounds::{
    ramanujan_genus_lower_bound, round12, verdict, BoundReport, SurfaceContext, TIGHT_TOL,
};
use crate::enumeration::{graph6, sweep, sweep_graphs, trend, Filters, Predicate, SweepReport};
use crate::error::{Error, Result};
use crate::graph::{Family, Graph};
use crate::invariants::is_connected;
use crate::spectral::ramanujan_check;
use crate::surfaces::{cook_number, heawood_number, maximal_complete_graph, Surface};

/// Environment variable capping the order of generated sweeps.
pub const MAX_N_ENV: &str = "HEAWOOD_MAX_N";
const DEFAULT_MAX_N: usize = 8;
const HARD_MAX_N: usize = 9;

#[derive(Debug, Parser)]
#[command(name = "heawood", version, about = "Algebraic connectivity of graphs on surfaces")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Output {
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct OutputArg {
    #[arg(long, value_enum, default_value = "text")]
    pub output: Output,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate every bound on one graph.
    Analyze {
        /// Edge-list file, family spec such as `cycle:5`, or graph6 string.
        input: String,
        /// `auto`, `orientable:h`, `nonorientable:k`, or a surface name.
        #[arg(long, default_value = "auto")]
        surface: String,
        /// Tolerance for the tightness verdict.
        #[arg(long, default_value_t = TIGHT_TOL)]
        tol: f64,
        #[command(flatten)]
        output: OutputArg,
    },
    /// Tabulate H(S), C(S) and the largest complete graph per surface.
    Surface {
        /// Inclusive Euler characteristic range `a..b`.
        #[arg(long, allow_hyphen_values = true, conflicts_with = "genus_range")]
        chi_range: Option<String>,
        /// Inclusive genus range `a..b`.
        #[arg(long)]
        genus_range: Option<String>,
        #[arg(long, default_value_t = true, action = clap::ArgAction::Set)]
        orientable: bool,
        #[command(flatten)]
        output: OutputArg,
    },
    /// Check a predicate on every connected graph up to an order.
    Sweep {
        #[arg(long)]
        predicate: String,
        /// Largest order; capped by HEAWOOD_MAX_N (default 8, at most 9).
        #[arg(long)]
        max_n: Option<usize>,
        /// Comma-separated: planar, bipartite, regular, cubic, dmax<=k.
        #[arg(long, value_delimiter = ',')]
        filters: Vec<String>,
        /// graph6 file to sweep instead of generating graphs.
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        workers: Option<usize>,
        #[command(flatten)]
        output: OutputArg,
    },
    /// Algebraic connectivity along a size-parameterized family.
    Trend {
        #[arg(long)]
        family: String,
        /// Inclusive size range `a..b`.
        #[arg(long)]
        n: String,
        #[command(flatten)]
        output: OutputArg,
    },
    /// Genus lower bound for Ramanujan graphs of a degree or a given graph.
    Ramanujan {
        #[arg(long, conflicts_with = "input", required_unless_present = "input")]
        d: Option<u64>,
        /// Edge-list file, family spec, or graph6 string.
        input: Option<String>,
        #[command(flatten)]
        output: OutputArg,
    },
    /// Print a catalog graph as an edge list or graph6.
    Family {
        /// Family spec such as `petersen` or `complete_bipartite:2,3`.
        spec: String,
        #[arg(long, value_enum, default_value = "edges")]
        format: FamilyFormat,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyFormat {
    Edges,
    G6,
}

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Disconnected
        | Error::Complete
        | Error::NotRegular
        | Error::Acyclic
        | Error::TooFewVertices { .. }
        | Error::Inapplicable(_) => 3,
        Error::ResourceLimit(_) | Error::NoConvergence { .. } => 4,
        _ => 2,
    }
}

/// Parses `args` (program name first), runs the command, and returns the
/// process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return if err.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(cli.command) {
        Ok(text) => {
            // a closed downstream pipe is not an error of ours
            let _ = writeln!(std::io::stdout(), "{text}");
            0
        }
        Err(err) => {
            eprintln!("error: {err}");
            exit_code(&err)
        }
    }
}

pub fn execute(command: Command) -> Result<String> {
    match command {
        Command::Analyze {
            input,
            surface,
            tol,
            output,
        } => analyze(&input, &surface, tol, output.output),
        Command::Surface {
            chi_range,
            genus_range,
            orientable,
            output,
        } => surface_table(chi_range.as_deref(), genus_range.as_deref(), orientable, output.output),
        Command::Sweep {
            predicate,
            max_n,
            filters,
            input,
            workers,
            output,
        } => run_sweep(&predicate, max_n, &filters, input.as_deref(), workers, output.output),
        Command::Trend { family, n, output } => run_trend(&family, &n, output.output),
        Command::Ramanujan { d, input, output } => ramanujan(d, input.as_deref(), output.output),
        Command::Family { spec, format } => {
            let g = spec.parse::<Family>()?.build()?;
            Ok(match format {
                FamilyFormat::Edges => g.to_edge_list().trim_end().to_string(),
                FamilyFormat::G6 => graph6::encode(&g)?,
            })
        }
    }
}

/// Resolves a graph argument: an existing edge-list file, then a family
/// spec, then a graph6 string.
pub fn load_graph(input: &str) -> Result<Graph> {
    let path = Path::new(input);
    if path.is_file() {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Io(format!("{input}: {e}")))?;
        return Graph::parse_edge_list(&text);
    }
    if let Ok(family) = input.parse::<Family>() {
        return family.build();
    }
    graph6::decode(input.trim()).map_err(|e| match e {
        Error::Graph6(reason) => Error::Graph6(format!(
            "`{input}` is not a file, family, or graph6 string ({reason})"
        )),
        other => other,
    })
}

fn parse_context(spec: &str, g: &Graph) -> Result<SurfaceContext> {
    if spec == "auto" {
        Ok(SurfaceContext::auto(g))
    } else {
        Ok(SurfaceContext::given(spec.parse()?))
    }
}

fn fmt12(x: f64) -> String {
    format!("{}", round12(x))
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("value serializes")
}

fn analyze(input: &str, surface: &str, tol: f64, output: Output) -> Result<String> {
    let g = load_graph(input)?;
    let ctx = parse_context(surface, &g)?;
    if !is_connected(&g) {
        return Err(Error::Disconnected);
    }
    let mut report = verdict(&g, &ctx, input)?;
    report.tight = report.best_upper.is_some_and(|b| (b - report.a).abs() <= tol);
    Ok(match output {
        Output::Json => report.to_json(),
        Output::Text => render_report(&report, &ctx, tol),
    })
}

fn render_report(r: &BoundReport, ctx: &SurfaceContext, tol: f64) -> String {
    let mut out = String::new();
    let surface = ctx.surface.map_or("none".to_string(), |s| s.to_string());
    out.push_str(&format!("graph {}  n = {}  e = {}  surface {surface}\n", r.graph, r.n, r.e));
    out.push_str(&format!("a(G) = {}\n\n", fmt12(r.a)));
    for e in &r.entries {
        let value = e.value.map_or("-".to_string(), fmt12);
        let mark = match e.value {
            Some(v) if e.applicable && (v - r.a).abs() <= tol => "tight",
            Some(_) => "",
            None => "n/a",
        };
        out.push_str(&format!(
            "{:<28} {:>16} {:<6} {}\n",
            e.name, value, mark, e.reason
        ));
    }
    match (r.best_upper, r.best_entry) {
        (Some(b), Some(i)) => out.push_str(&format!(
            "\nbest upper bound {} ({}), tight: {}",
            fmt12(b),
            r.entries[i].name,
            if r.tight { "yes" } else { "no" }
        )),
        _ => out.push_str("\nno applicable bound"),
    }
    out
}

fn parse_range(text: &str, what: &str) -> Result<RangeInclusive<i64>> {
    let invalid = |reason: String| Error::InvalidParameter {
        family: what.to_string(),
        reason,
    };
    let (a, b) = text
        .split_once("..")
        .ok_or_else(|| invalid(format!("`{text}`: expected a..b")))?;
    let parse = |s: &str| {
        s.trim()
            .parse::<i64>()
            .map_err(|_| invalid(format!("`{s}` is not an integer")))
    };
    let (a, b) = (parse(a)?, parse(b)?);
    if a > b {
        return Err(invalid(format!("empty range {a}..{b}")));
    }
    Ok(a..=b)
}

#[derive(Debug, Serialize)]
struct SurfaceRow {
    surface: String,
    chi: i64,
    heawood: i64,
    cook: Option<i64>,
    max_complete: usize,
    note: String,
}

fn surface_row(s: Surface) -> Result<SurfaceRow> {
    let chi = s.euler_characteristic();
    Ok(SurfaceRow {
        surface: s.to_string(),
        chi,
        heawood: heawood_number(chi)?,
        cook: (chi <= 1).then(|| cook_number(chi)).transpose()?,
        max_complete: maximal_complete_graph(s),
        note: if s.is_klein_bottle() {
            "cap 6 < H=7".to_string()
        } else {
            String::new()
        },
    })
}

fn surface_table(chi: Option<&str>, genus: Option<&str>, orientable: bool, output: Output) -> Result<String> {
    let mut surfaces = Vec::new();
    match (chi, genus) {
        (Some(chi), _) => {
            for c in parse_range(chi, "chi range")?.rev() {
                if c > 2 {
                    return Err(Error::EulerCharacteristic { chi: c, max: 2 });
                }
                if c % 2 == 0 {
                    surfaces.push(Surface::orientable(((2 - c) / 2) as u32));
                }
                if c <= 1 {
                    surfaces.push(Surface::nonorientable((2 - c) as u32)?);
                }
            }
        }
        (None, Some(genus)) => {
            let range = parse_range(genus, "genus range")?;
            if *range.start() < 0 {
                return Err(Error::InvalidSurface("genus must be nonnegative".into()));
            }
            for h in range {
                surfaces.push(Surface::new(orientable, h as u32)?);
            }
        }
        (None, None) => {
            return Err(Error::InvalidParameter {
                family: "surface".into(),
                reason: "give --chi-range or --genus-range".into(),
            })
        }
    }
    let rows = surfaces.into_iter().map(surface_row).collect::<Result<Vec<_>>>()?;
    Ok(match output {
        Output::Json => to_json(&rows),
        Output::Text => {
            let mut out = format!(
                "{:<18} {:>5} {:>5} {:>5} {:>6}  note",
                "surface", "chi", "H", "C", "K_max"
            );
            for r in rows {
                let cook = r.cook.map_or("-".to_string(), |c| c.to_string());
                out.push_str(&format!(
                    "\n{:<18} {:>5} {:>5} {:>5} {:>6}  {}",
                    r.surface, r.chi, r.heawood, cook, r.max_complete, r.note
                ));
            }
            out
        }
    })
}

/// Sweep order cap from [`MAX_N_ENV`], clamped to 9.
pub fn max_n_cap() -> Result<usize> {
    match std::env::var(MAX_N_ENV) {
        Ok(text) => text
            .trim()
            .parse::<usize>()
            .map(|n| n.min(HARD_MAX_N))
            .map_err(|_| Error::InvalidParameter {
                family: MAX_N_ENV.into(),
                reason: format!("`{text}` is not a nonnegative integer"),
            }),
        Err(_) => Ok(DEFAULT_MAX_N),
    }
}

fn run_sweep(
    predicate: &str,
    max_n: Option<usize>,
    filters: &[String],
    input: Option<&Path>,
    workers: Option<usize>,
    output: Output,
) -> Result<String> {
    let predicate: Predicate = predicate.parse()?;
    let filters = Filters::parse_list(filters)?;
    let workers = workers
        .or_else(|| std::thread::available_parallelism().ok().map(|n| n.get()))
        .unwrap_or(1)
        .max(1);
    let report = match input {
        Some(path) => sweep_graphs(predicate, &graph6::read_file(path)?, &filters, workers)?,
        None => {
            let cap = max_n_cap()?;
            let n_max = max_n.unwrap_or(cap);
            if n_max > cap {
                return Err(Error::ResourceLimit(format!(
                    "--max-n {n_max} exceeds the cap {cap}; raise {MAX_N_ENV} (at most {HARD_MAX_N})"
                )));
            }
            sweep(predicate, n_max, &filters, workers)?
        }
    };
    Ok(match output {
        Output::Json => report.to_json(),
        Output::Text => render_sweep(&report, predicate),
    })
}

fn render_sweep(r: &SweepReport, predicate: Predicate) -> String {
    let filters = if r.filters.is_empty() {
        "none".to_string()
    } else {
        r.filters.join(",")
    };
    let mut out = format!(
        "predicate {}  n <= {}  filters {filters}\nchecked {} graphs\n",
        r.predicate, r.n_max, r.checked
    );
    if r.counterexamples.is_empty() {
        out.push_str("counterexamples: none\n");
    } else {
        let kind = if predicate.theorem_backed() {
            "a proven bound failed; this indicates a bug"
        } else {
            "evidence against the conjecture"
        };
        out.push_str(&format!(
            "!!! {} COUNTEREXAMPLES FOUND ({kind}) !!!\n",
            r.counterexamples.len()
        ));
        for g6 in &r.counterexamples {
            out.push_str(&format!("  {g6}\n"));
        }
    }
    out.push_str(&format!("extremal graphs: {}", r.extremal.len()));
    for e in &r.extremal {
        out.push_str(&format!("\n  {:<12} a = {}  bound = {}", e.g6, fmt12(e.a), fmt12(e.bound)));
    }
    out
}

fn run_trend(family: &str, n: &str, output: Output) -> Result<String> {
    let range = parse_range(n, "size range")?;
    if *range.start() < 0 {
        return Err(Error::InvalidParameter {
            family: family.into(),
            reason: "sizes must be nonnegative".into(),
        });
    }
    let points = trend(family, *range.start() as usize..=*range.end() as usize)?;
    Ok(match output {
        Output::Json => to_json(&points),
        Output::Text => {
            let mut out = format!("{:>5} {:>16} {:>16}", "n", "a", "closed form");
            for p in points {
                let cf = p.closed_form.map_or("-".to_string(), fmt12);
                out.push_str(&format!("\n{:>5} {:>16} {:>16}", p.n, fmt12(p.a), cf));
            }
            out
        }
    })
}

#[derive(Debug, Serialize)]
struct RamanujanReport {
    degree: u64,
    n: Option<usize>,
    ramanujan: Option<bool>,
    applicable: bool,
    genus_lower_bound: Option<u64>,
    reason: String,
}

fn ramanujan(d: Option<u64>, input: Option<&str>, output: Output) -> Result<String> {
    let mut report = RamanujanReport {
        degree: 0,
        n: None,
        ramanujan: None,
        applicable: false,
        genus_lower_bound: None,
        reason: String::new(),
    };
    let degree = match (d, input) {
        (Some(d), _) => d,
        (None, Some(input)) => {
            let g = load_graph(input)?;
            let check = ramanujan_check(&g)?;
            report.n = Some(g.n());
            report.ramanujan = Some(check.ramanujan);
            if !check.ramanujan {
                report.degree = check.degree as u64;
                report.reason = format!(
                    "not Ramanujan: largest nontrivial |eigenvalue| {} > 2 sqrt(d-1) = {}",
                    fmt12(check.max_nontrivial),
                    fmt12(check.threshold)
                );
                return Ok(render_ramanujan(&report, output));
            }
            if check.degree + 1 == g.n() {
                report.degree = check.degree as u64;
                report.reason = "inapplicable: d = n - 1 (complete graph)".into();
                return Ok(render_ramanujan(&report, output));
            }
            check.degree as u64
        }
        (None, None) => unreachable!("clap requires --d or an input"),
    };
    report.degree = degree;
    match ramanujan_genus_lower_bound(degree) {
        Ok(k) => {
            report.applicable = true;
            report.genus_lower_bound = Some(k);
            report.reason = format!("orientable genus >= {k}");
        }
        Err(Error::Inapplicable(reason)) => report.reason = format!("inapplicable: {reason}"),
        Err(e) => return Err(e),
    }
    Ok(render_ramanujan(&report, output))
}

fn render_ramanujan(r: &RamanujanReport, output: Output) -> String {
    match output {
        Output::Json => to_json(r),
        Output::Text => format!("d = {}: {}", r.degree, r.reason),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("-3..2", "chi").unwrap(), -3..=2);
        assert!(parse_range("3..1", "chi").is_err());
        assert!(parse_range("x..1", "chi").is_err());
    }

    #[test]
    fn graph_arguments() {
        assert_eq!(load_graph("octahedron").unwrap().e(), 12);
        assert_eq!(load_graph("cycle:5").unwrap().e(), 5);
        assert_eq!(load_graph("Bw").unwrap().e(), 3);
        assert!(matches!(load_graph("not a graph"), Err(Error::Graph6(_))));
    }

    #[test]
    fn genus_table() {
        let text = surface_table(None, Some("0..3"), true, Output::Json).unwrap();
        let rows: Vec<serde_json::Value> = serde_json::from_str(&text).unwrap();
        let h: Vec<i64> = rows.iter().map(|r| r["heawood"].as_i64().unwrap()).collect();
        assert_eq!(h, [4, 7, 8, 9]);
        let text = surface_table(None, Some("2..2"), false, Output::Text).unwrap();
        assert!(text.contains("cap 6 < H=7"));
        assert!(matches!(
            surface_table(Some("3..3"), None, true, Output::Text),
            Err(Error::EulerCharacteristic { .. })
        ));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(exit_code(&Error::Disconnected), 3);
        assert_eq!(exit_code(&Error::ResourceLimit(String::new())), 4);
        assert_eq!(exit_code(&Error::UnknownPredicate(String::new())), 2);
    }
}
