//! Finite-order trends of `a(G_n)` along size-parameterized families.

use std::f64::consts::PI;
use std::ops::RangeInclusive;

use serde::Serialize;

use crate::bounds::{ser_opt_round12, ser_round12};
use crate::error::Result;
use crate::graph::Family;
use crate::spectral::algebraic_connectivity;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TrendPoint {
    pub n: usize,
    #[serde(serialize_with = "ser_round12")]
    pub a: f64,
    #[serde(serialize_with = "ser_opt_round12")]
    pub closed_form: Option<f64>,
}

/// Known value of `a` for the family member of size `n`, when there is one.
pub fn closed_form(family: &str, n: usize) -> Option<f64> {
    let nf = n as f64;
    match family {
        "double_wheel" => Some((4.0 - 2.0 * (2.0 * PI / nf).cos()).min(nf)),
        "cycle" => Some(2.0 - 2.0 * (2.0 * PI / nf).cos()),
        "path" => Some(2.0 - 2.0 * (PI / nf).cos()),
        "complete" => Some(nf),
        "empty" if n >= 2 => Some(0.0),
        "near_complete" => Some(1.0),
        _ => None,
    }
}

pub fn trend(family: &str, range: RangeInclusive<usize>) -> Result<Vec<TrendPoint>> {
    range
        .map(|n| {
            let g = Family::with_size(family, n)?.build()?;
            Ok(TrendPoint {
                n,
                a: algebraic_connectivity(&g)?,
                closed_form: closed_form(family, n),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn double_wheel_matches_closed_form() {
        for p in trend("double_wheel", 3..=20).unwrap() {
            assert!((p.a - p.closed_form.unwrap()).abs() < 1e-8, "n = {}", p.n);
        }
    }

    #[test]
    fn families_match_closed_forms() {
        for (name, range) in [("cycle", 3..=20), ("path", 2..=15), ("complete", 2..=10), ("near_complete", 2..=8)] {
            for p in trend(name, range).unwrap() {
                assert!((p.a - p.closed_form.unwrap()).abs() < 1e-8, "{name} n = {}", p.n);
            }
        }
    }

    #[test]
    fn rejects_fixed_families() {
        assert!(trend("petersen", 3..=5).is_err());
        assert!(trend("octahedron", 6..=6).is_err());
    }
}
