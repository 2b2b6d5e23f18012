//! Algebraic connectivity of graphs on surfaces.
//!
//! The crate computes Laplacian spectra of small graphs, surface invariants
//! (Heawood numbers, complete-graph genera, Euler edge bounds), and a
//! catalog of upper bounds on the algebraic connectivity `a(G)`. The
//! [`enumeration`] module generates every small connected graph up to
//! isomorphism and sweeps the bounds and conjectures over them.

pub mod bounds;
pub mod cli;
pub mod enumeration;
pub mod error;
pub mod graph;
pub mod invariants;
pub mod spectral;
pub mod surfaces;

pub use bounds::{verdict, BoundReport, SurfaceContext};
pub use error::{Error, Result};
pub use graph::{Family, Graph, VertexSubset};
pub use spectral::algebraic_connectivity;
pub use surfaces::Surface;
