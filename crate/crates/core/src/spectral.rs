//! Laplacian and adjacency spectra.
//!
//! Eigenvalues come from a cyclic Jacobi rotation solver over a dense
//! symmetric matrix. Each sweep annihilates every off-diagonal entry once;
//! iteration stops when the off-diagonal Frobenius norm drops below
//! `1e-12 * ||M||_F`.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::invariants::{is_connected, is_regular};

/// Absolute eigenvalue tolerance reported with every spectrum.
pub const EIGEN_TOL: f64 = 1e-10;
/// Relative off-diagonal norm at which the Jacobi iteration stops.
pub const OFF_DIAGONAL_RTOL: f64 = 1e-12;
/// Tolerance for classifying values that sit on a theoretical boundary.
pub const BOUNDARY_TOL: f64 = 1e-6;

const MAX_SWEEPS: usize = 100;

/// Ascending eigenvalues plus the absolute tolerance they are good to.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    pub values: Vec<f64>,
    pub tol: f64,
}

impl Spectrum {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn max(&self) -> f64 {
        *self.values.last().expect("spectrum of a nonempty graph")
    }

    /// Number of eigenvalues within `tol` of zero.
    pub fn zero_multiplicity(&self) -> usize {
        self.values.iter().filter(|v| v.abs() <= self.tol).count()
    }
}

/// Dense row-major symmetric matrix.
#[derive(Debug, Clone)]
pub struct SymMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    pub fn zeros(n: usize) -> Self {
        SymMatrix {
            n,
            data: vec![0.0; n * n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    /// Sets both `(i, j)` and `(j, i)`.
    pub fn set(&mut self, i: usize, j: usize, value: f64) {
        self.data[i * self.n + j] = value;
        self.data[j * self.n + i] = value;
    }

    pub fn laplacian(g: &Graph) -> Self {
        let mut m = SymMatrix::zeros(g.n());
        for v in 0..g.n() {
            m.set(v, v, g.degree(v) as f64);
        }
        for &(a, b) in g.edges() {
            m.set(a, b, -1.0);
        }
        m
    }

    pub fn adjacency(g: &Graph) -> Self {
        let mut m = SymMatrix::zeros(g.n());
        for &(a, b) in g.edges() {
            m.set(a, b, 1.0);
        }
        m
    }

    fn frobenius(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    fn off_diagonal(&self) -> f64 {
        let n = self.n;
        let mut sum = 0.0;
        for i in 0..n {
            for j in i + 1..n {
                let x = self.data[i * n + j];
                sum += 2.0 * x * x;
            }
        }
        sum.sqrt()
    }
}

/// Eigen-decomposition result: ascending eigenvalues and, optionally, the
/// matching unit eigenvectors (`vectors[k]` pairs with `values[k]`).
#[derive(Debug, Clone)]
pub struct EigenDecomposition {
    pub values: Vec<f64>,
    pub vectors: Option<Vec<Vec<f64>>>,
}

/// Cyclic Jacobi diagonalization.
pub fn jacobi_eigen(matrix: &SymMatrix, want_vectors: bool) -> Result<EigenDecomposition> {
    let n = matrix.n;
    let mut a = matrix.clone();
    let mut v = want_vectors.then(|| {
        let mut id = vec![0.0; n * n];
        (0..n).for_each(|i| id[i * n + i] = 1.0);
        id
    });
    let threshold = OFF_DIAGONAL_RTOL * matrix.frobenius();
    let mut sweeps = 0;
    loop {
        let off = a.off_diagonal();
        if off <= threshold || off == 0.0 {
            break;
        }
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence {
                sweeps,
                off_norm: off,
            });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a.data[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a.data[p * n + p];
                let aqq = a.data[q * n + q];
                // rotation angle from the stable tangent formula
                let theta = (aqq - app) / (2.0 * apq);
                // signum(0.0) is 1.0, which gives the 45 degree rotation
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                rotate(&mut a, p, q, c, s, t, apq);
                if let Some(v) = v.as_mut() {
                    for k in 0..n {
                        let vkp = v[k * n + p];
                        let vkq = v[k * n + q];
                        v[k * n + p] = c * vkp - s * vkq;
                        v[k * n + q] = s * vkp + c * vkq;
                    }
                }
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a.data[i * n + i].total_cmp(&a.data[j * n + j]));
    let values = order.iter().map(|&i| a.data[i * n + i]).collect();
    let vectors = v.map(|v| {
        order
            .iter()
            .map(|&col| (0..n).map(|row| v[row * n + col]).collect())
            .collect()
    });
    Ok(EigenDecomposition { values, vectors })
}

/// Applies the rotation in the `(p, q)` plane that zeroes `a[p][q]`.
fn rotate(a: &mut SymMatrix, p: usize, q: usize, c: f64, s: f64, t: f64, apq: f64) {
    let n = a.n;
    let d = &mut a.data;
    d[p * n + p] -= t * apq;
    d[q * n + q] += t * apq;
    d[p * n + q] = 0.0;
    d[q * n + p] = 0.0;
    for k in 0..n {
        if k == p || k == q {
            continue;
        }
        let akp = d[k * n + p];
        let akq = d[k * n + q];
        let new_kp = c * akp - s * akq;
        let new_kq = s * akp + c * akq;
        d[k * n + p] = new_kp;
        d[p * n + k] = new_kp;
        d[k * n + q] = new_kq;
        d[q * n + k] = new_kq;
    }
}

fn spectrum_of(matrix: &SymMatrix) -> Result<Spectrum> {
    let values = jacobi_eigen(matrix, false)?.values;
    Ok(Spectrum {
        values,
        tol: EIGEN_TOL,
    })
}

/// Eigenvalues of `L = D - A`, ascending.
pub fn laplacian_spectrum(g: &Graph) -> Result<Spectrum> {
    spectrum_of(&SymMatrix::laplacian(g))
}

pub fn adjacency_spectrum(g: &Graph) -> Result<Spectrum> {
    spectrum_of(&SymMatrix::adjacency(g))
}

/// Second-smallest Laplacian eigenvalue `a(G)`.
pub fn algebraic_connectivity(g: &Graph) -> Result<f64> {
    if g.n() < 2 {
        return Err(Error::TooFewVertices {
            required: 2,
            n: g.n(),
        });
    }
    Ok(laplacian_spectrum(g)?.values[1])
}

/// A unit eigenvector for `a(G)`.
pub fn fiedler_vector(g: &Graph) -> Result<(f64, Vec<f64>)> {
    if g.n() < 2 {
        return Err(Error::TooFewVertices {
            required: 2,
            n: g.n(),
        });
    }
    let eig = jacobi_eigen(&SymMatrix::laplacian(g), true)?;
    let vectors = eig.vectors.expect("vectors requested");
    Ok((eig.values[1], vectors[1].clone()))
}

/// Outcome of a Ramanujan check for a connected `d`-regular graph.
#[derive(Debug, Clone, PartialEq)]
pub struct RamanujanCheck {
    pub degree: usize,
    /// Largest absolute adjacency eigenvalue once one copy of `d` is removed.
    pub max_nontrivial: f64,
    /// `2 sqrt(d - 1)`.
    pub threshold: f64,
    pub ramanujan: bool,
    /// `max_nontrivial` is within [`BOUNDARY_TOL`] of the threshold.
    pub boundary: bool,
}

pub fn ramanujan_check(g: &Graph) -> Result<RamanujanCheck> {
    let d = is_regular(g).ok_or(Error::NotRegular)?;
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    if g.n() < 2 {
        return Err(Error::TooFewVertices {
            required: 2,
            n: g.n(),
        });
    }
    let spectrum = adjacency_spectrum(g)?;
    // the largest eigenvalue of a connected d-regular graph is d, simple
    let max_nontrivial = spectrum.values[..spectrum.len() - 1]
        .iter()
        .fold(0.0f64, |m, x| m.max(x.abs()));
    let threshold = 2.0 * ((d as f64) - 1.0).max(0.0).sqrt();
    Ok(RamanujanCheck {
        degree: d,
        max_nontrivial,
        threshold,
        ramanujan: max_nontrivial <= threshold + spectrum.tol,
        boundary: (max_nontrivial - threshold).abs() <= BOUNDARY_TOL,
    })
}

pub fn is_ramanujan(g: &Graph) -> Result<bool> {
    Ok(ramanujan_check(g)?.ramanujan)
}
