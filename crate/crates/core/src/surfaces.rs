//! Surface arithmetic. Every evaluator here works in integers; square roots
//! go through [`isqrt`] so the perfect-square cases are exact.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::invariants::GirthValue;

/// A closed surface: a sphere with `genus` handles (orientable) or a sum of
/// `genus` projective planes (non-orientable, `genus >= 1`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Surface {
    orientable: bool,
    genus: u32,
}

impl Surface {
    pub const SPHERE: Surface = Surface {
        orientable: true,
        genus: 0,
    };
    pub const TORUS: Surface = Surface {
        orientable: true,
        genus: 1,
    };
    pub const PROJECTIVE_PLANE: Surface = Surface {
        orientable: false,
        genus: 1,
    };
    pub const KLEIN_BOTTLE: Surface = Surface {
        orientable: false,
        genus: 2,
    };

    pub fn new(orientable: bool, genus: u32) -> Result<Surface> {
        if !orientable && genus == 0 {
            return Err(Error::InvalidSurface(
                "non-orientable genus must be at least 1".into(),
            ));
        }
        Ok(Surface { orientable, genus })
    }

    pub fn orientable(h: u32) -> Surface {
        Surface {
            orientable: true,
            genus: h,
        }
    }

    pub fn nonorientable(k: u32) -> Result<Surface> {
        Surface::new(false, k)
    }

    pub fn is_orientable(&self) -> bool {
        self.orientable
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn is_sphere(&self) -> bool {
        *self == Surface::SPHERE
    }

    pub fn is_klein_bottle(&self) -> bool {
        *self == Surface::KLEIN_BOTTLE
    }

    pub fn euler_characteristic(&self) -> i64 {
        euler_characteristic(*self)
    }
}

impl fmt::Display for Surface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = if self.orientable { "orientable" } else { "nonorientable" };
        write!(f, "{kind}:{}", self.genus)
    }
}

impl FromStr for Surface {
    type Err = Error;

    /// `orientable:h`, `nonorientable:k`, or one of `sphere`, `torus`,
    /// `projective_plane`, `klein_bottle`.
    fn from_str(s: &str) -> Result<Surface> {
        match s {
            "sphere" => return Ok(Surface::SPHERE),
            "torus" => return Ok(Surface::TORUS),
            "projective_plane" => return Ok(Surface::PROJECTIVE_PLANE),
            "klein_bottle" => return Ok(Surface::KLEIN_BOTTLE),
            _ => {}
        }
        let (kind, genus) = s
            .split_once(':')
            .ok_or_else(|| Error::InvalidSurface(format!("`{s}`: expected kind:genus")))?;
        let genus: u32 = genus
            .trim()
            .parse()
            .map_err(|_| Error::InvalidSurface(format!("`{genus}` is not a genus")))?;
        match kind.trim() {
            "orientable" => Ok(Surface::orientable(genus)),
            "nonorientable" | "non-orientable" => Surface::nonorientable(genus),
            other => Err(Error::InvalidSurface(format!("unknown surface kind `{other}`"))),
        }
    }
}

/// `2 - 2h` for orientable, `2 - k` for non-orientable surfaces.
pub fn euler_characteristic(s: Surface) -> i64 {
    if s.orientable {
        2 - 2 * s.genus as i64
    } else {
        2 - s.genus as i64
    }
}

/// Floor of the square root of a non-negative integer.
pub fn isqrt(x: u64) -> u64 {
    x.isqrt()
}

fn discriminant(chi: i64) -> u64 {
    // chi <= 2 keeps this at least 1
    (49 - 24 * chi) as u64
}

/// Heawood number `H = floor((7 + sqrt(49 - 24 chi)) / 2)`.
pub fn heawood_number(chi: i64) -> Result<i64> {
    if chi > 2 {
        return Err(Error::EulerCharacteristic { chi, max: 2 });
    }
    Ok((7 + isqrt(discriminant(chi)) as i64) / 2)
}

/// Cook's bound `C = floor((5 + sqrt(49 - 24 chi)) / 2)` on vertex
/// connectivity; defined for `chi <= 1`.
pub fn cook_number(chi: i64) -> Result<i64> {
    if chi > 1 {
        return Err(Error::EulerCharacteristic { chi, max: 1 });
    }
    Ok((5 + isqrt(discriminant(chi)) as i64) / 2)
}

/// Cook's girth-dependent cap on the vertex connectivity of planar graphs.
/// Forests fall under the `g >= 6` row.
pub fn cook_planar_girth_cap(girth: GirthValue) -> usize {
    match girth {
        GirthValue::Finite(g) if g <= 3 => 5,
        GirthValue::Finite(4 | 5) => 3,
        _ => 2,
    }
}

/// Genus of `K_p` (Ringel–Youngs, orientable; Ringel, non-orientable with
/// the `K_7` exception).
pub fn complete_graph_genus(p: usize, orientable: bool) -> Result<u32> {
    if p < 3 {
        return Err(Error::TooFewVertices { required: 3, n: p });
    }
    let product = if p <= 4 { 0 } else { (p - 3) * (p - 4) };
    let genus = if orientable {
        product.div_ceil(12)
    } else if p == 7 {
        3
    } else {
        product.div_ceil(6)
    };
    Ok(genus as u32)
}

/// Order of the largest complete graph embeddable in `s`.
pub fn maximal_complete_graph(s: Surface) -> usize {
    let mut p = 3;
    // complete_graph_genus is nondecreasing in p
    while complete_graph_genus(p + 1, s.orientable).expect("p >= 3") <= s.genus {
        p += 1;
    }
    p
}

/// Euler-formula edge bound `floor(g / (g - 2) * (n - chi))` for a connected
/// graph of girth `g` on a surface of characteristic `chi`. Forests use
/// `g = 3`, the weakest row.
pub fn euler_edge_bound(n: usize, girth: GirthValue, chi: i64) -> Result<i64> {
    if n < 3 {
        return Err(Error::TooFewVertices { required: 3, n });
    }
    let g = girth.finite().unwrap_or(3).max(3) as i64;
    Ok((g * (n as i64 - chi)).div_euclid(g - 2))
}
