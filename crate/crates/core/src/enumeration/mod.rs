//! graph6 codec, isomorph-free generation of small connected graphs, and
//! predicate sweeps over them.

pub mod canon;
pub mod generate;
pub mod graph6;
pub mod sweep;
pub mod trend;

pub use canon::{are_isomorphic, canonical_form, canonical_key, lex_min_key, CanonKey, Canonical};
pub use generate::{
    generate_connected, generate_connected_brute, generate_connected_levels, generate_filtered,
    Filters,
};
pub use sweep::{check, sweep, sweep_graphs, Check, ExtremalRecord, Predicate, SweepReport};
pub use trend::{closed_form, trend, TrendPoint};
