//! Spectral radius and Perron vector by shifted power iteration.
//!
//! For a symmetric matrix every eigenvalue lies in `[-σ, σ]` with `σ` the
//! largest absolute row sum, so after adding `σI` the spectrum is
//! nonnegative and the Perron root `μ + σ` dominates strictly. Iteration
//! starts from the all-ones vector, which has positive overlap with any
//! positive eigenvector.

use super::{jacobi_eigen, SpectraError, SymmetricMatrix};
use serde::Serialize;

pub const MAX_ITERATIONS: usize = 1_000_000;
/// Relative change in successive Rayleigh quotients.
pub const ESTIMATE_TOL: f64 = 1e-13;
/// Relative `∞`-norm residual `‖Ax - μx‖`.
pub const RESIDUAL_TOL: f64 = 1e-11;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SolverPath {
    PowerIteration,
    JacobiFallback,
    /// Matrix had no off-diagonal mass (`α = 1` or a single vertex).
    Diagonal,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectralResult {
    pub mu: f64,
    /// Unit positive eigenvector; absent when it is not unique (diagonal
    /// matrix with more than one vertex).
    pub perron: Option<Vec<f64>>,
    pub iterations: usize,
    pub residual: f64,
    pub path: SolverPath,
}

impl SpectralResult {
    /// `(x_min, x_max)` of the Perron vector.
    pub fn perron_extremes(&self) -> Option<(f64, f64)> {
        let x = self.perron.as_ref()?;
        let lo = x.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = x.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        Some((lo, hi))
    }
}

fn inf_residual(m: &SymmetricMatrix, x: &[f64], mu: f64) -> f64 {
    let mut y = vec![0.0; x.len()];
    m.mul_vec(x, &mut y);
    y.iter()
        .zip(x)
        .map(|(yi, xi)| (yi - mu * xi).abs())
        .fold(0.0, f64::max)
}

/// Solves `a y = b` in place by Gaussian elimination with partial pivoting.
/// Zero pivots are nudged to `tiny`, which is what inverse iteration wants.
fn solve_shifted(a: &mut [f64], n: usize, b: &mut [f64], tiny: f64) {
    for k in 0..n {
        let p = (k..n)
            .max_by(|&i, &j| a[i * n + k].abs().total_cmp(&a[j * n + k].abs()))
            .unwrap();
        if p != k {
            for j in 0..n {
                a.swap(k * n + j, p * n + j);
            }
            b.swap(k, p);
        }
        if a[k * n + k].abs() < tiny {
            a[k * n + k] = tiny;
        }
        let pivot = a[k * n + k];
        for i in k + 1..n {
            let f = a[i * n + k] / pivot;
            if f != 0.0 {
                for j in k..n {
                    a[i * n + j] -= f * a[k * n + j];
                }
                b[i] -= f * b[k];
            }
        }
    }
    for k in (0..n).rev() {
        let s: f64 = (k + 1..n).map(|j| a[k * n + j] * b[j]).sum();
        b[k] = (b[k] - s) / a[k * n + k];
    }
}

/// Inverse iteration at the converged shift. When the spectral gap is small
/// (α close to 1) the power-iteration vector is accurate only to about
/// `residual / gap`; a step or two of this restores full precision.
fn polish(m: &SymmetricMatrix, mu: f64, x: Vec<f64>, residual: f64) -> (f64, Vec<f64>, f64) {
    let n = m.order();
    let scale = mu.abs().max(1.0);
    let (mut best_mu, mut best_x, mut best_res) = (mu, x, residual);
    for _ in 0..2 {
        if best_res <= 4.0 * f64::EPSILON * scale * n as f64 {
            break;
        }
        let mut a = m.as_slice().to_vec();
        for i in 0..n {
            a[i * n + i] -= best_mu;
        }
        let mut y = best_x.clone();
        solve_shifted(&mut a, n, &mut y, f64::EPSILON * scale);
        let norm = y.iter().map(|v| v * v).sum::<f64>().sqrt();
        if !norm.is_finite() || norm == 0.0 {
            break;
        }
        let sign = if y.iter().sum::<f64>() < 0.0 {
            -1.0
        } else {
            1.0
        };
        y.iter_mut().for_each(|v| *v *= sign / norm);
        let mut my = vec![0.0; n];
        m.mul_vec(&y, &mut my);
        let rq: f64 = y.iter().zip(&my).map(|(a, b)| a * b).sum();
        let res = inf_residual(m, &y, rq);
        if res >= best_res {
            break;
        }
        (best_mu, best_x, best_res) = (rq, y, res);
    }
    (best_mu, best_x, best_res)
}

/// Largest eigenvalue of a nonnegative irreducible symmetric matrix (a
/// `D_α` of a connected graph), with its unit Perron vector.
pub fn spectral_radius(m: &SymmetricMatrix) -> Result<SpectralResult, SpectraError> {
    spectral_radius_with_limit(m, MAX_ITERATIONS)
}

pub(crate) fn spectral_radius_with_limit(
    m: &SymmetricMatrix,
    max_iterations: usize,
) -> Result<SpectralResult, SpectraError> {
    let n = m.order();
    if m.is_diagonal() {
        let mu = (0..n)
            .map(|i| m.get(i, i))
            .fold(f64::NEG_INFINITY, f64::max);
        return Ok(SpectralResult {
            mu,
            perron: (n == 1).then(|| vec![1.0]),
            iterations: 0,
            residual: 0.0,
            path: SolverPath::Diagonal,
        });
    }

    let shift = (0..n)
        .map(|i| m.row(i).iter().map(|a| a.abs()).sum::<f64>())
        .fold(0.0, f64::max);
    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    let mut y = vec![0.0; n];
    let mut previous = f64::NAN;

    for iteration in 1..=max_iterations {
        m.mul_vec(&x, &mut y);
        let mu: f64 = x.iter().zip(&y).map(|(a, b)| a * b).sum();
        let scale = mu.abs().max(1.0);
        if (mu - previous).abs() <= ESTIMATE_TOL * scale {
            let residual = y
                .iter()
                .zip(&x)
                .map(|(yi, xi)| (yi - mu * xi).abs())
                .fold(0.0, f64::max);
            if residual <= RESIDUAL_TOL * scale {
                let (mu, x, residual) = polish(m, mu, x, residual);
                return Ok(SpectralResult {
                    mu,
                    perron: Some(x),
                    iterations: iteration,
                    residual,
                    path: SolverPath::PowerIteration,
                });
            }
        }
        previous = mu;
        for (xi, yi) in x.iter_mut().zip(&y) {
            *xi = yi + shift * *xi;
        }
        let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
        x.iter_mut().for_each(|v| *v /= norm);
    }

    let eigen = jacobi_eigen(m);
    let mu = eigen.largest();
    let mut perron = eigen.vectors[0].clone();
    if perron.iter().sum::<f64>() < 0.0 {
        perron.iter_mut().for_each(|v| *v = -*v);
    }
    let residual = inf_residual(m, &perron, mu);
    let (mu, perron, residual) = polish(m, mu, perron, residual);
    Ok(SpectralResult {
        mu,
        perron: Some(perron),
        iterations: max_iterations,
        residual,
        path: SolverPath::JacobiFallback,
    })
}
