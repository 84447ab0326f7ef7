//! Laplacian spectral radius and the spectral lower bound.
//!
//! The radius is computed by power iteration on `L = D - A`. All Laplacian
//! eigenvalues are nonnegative, so the iteration converges to the largest
//! one; the known kernel (the constant vector) is projected out anyway for
//! conditioning. The Rayleigh quotient is accepted once the residual
//! `|Lx - lambda x| / |x|` drops below 1e-9.
//!
//! Like any uncertified iterative method, this can settle on a lower
//! eigenvalue when the seed is orthogonal to the top eigenspace - which
//! genuinely happens for structured seeds on symmetric graphs. The seed is
//! therefore drawn from a fixed pseudo-random stream, the result is
//! rejected unless it lands in the known window
//! `max_degree + 1 <= lambda <= 2 max_degree` (valid for any graph with an
//! edge), and a rejected run restarts with a fresh direction.

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;
use crate::rng::Rng;

pub const RESIDUAL_TOLERANCE: f64 = 1e-9;
pub const MAX_ITERATIONS: usize = 100_000;
/// Values this close to an integer are snapped before any ceiling is taken.
pub const INTEGER_SNAP: f64 = 1e-6;
/// How many fresh start vectors to try before giving up.
const RESTART_ATTEMPTS: usize = 8;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectralError {
    #[error("the graph has no vertices")]
    EmptyGraph,
    #[error("the spectral bound applies to connected graphs of order >= 2")]
    NotApplicable,
    #[error("power iteration did not converge: residual {residual:.3e} after {iterations} iterations")]
    NoConvergence { residual: f64, iterations: usize },
    #[error("computed radius {lambda} violates {lo} <= lambda <= {hi}")]
    OutOfWindow { lambda: f64, lo: f64, hi: f64 },
}

/// A converged spectral radius estimate.
#[derive(Debug, Clone, Serialize)]
pub struct SpectralResult {
    pub lambda: f64,
    pub residual: f64,
    pub iterations: usize,
}

fn matvec_laplacian(g: &Graph, x: &[f64], y: &mut [f64]) {
    for v in 0..g.n() {
        let mut acc = g.degree(v) as f64 * x[v];
        for &w in g.neighbors(v) {
            acc -= x[w];
        }
        y[v] = acc;
    }
}

fn norm(x: &[f64]) -> f64 {
    x.iter().map(|a| a * a).sum::<f64>().sqrt()
}

/// Snaps a value to the nearest integer when it is within [`INTEGER_SNAP`].
fn snap(x: f64) -> f64 {
    if (x - x.round()).abs() <= INTEGER_SNAP {
        x.round()
    } else {
        x
    }
}

fn power_iteration(g: &Graph, mut x: Vec<f64>) -> Result<SpectralResult, SpectralError> {
    let n = g.n();
    let mut y = vec![0.0; n];
    let mut lambda = 0.0;
    let mut residual = f64::INFINITY;
    let mut iterations = 0;
    while iterations < MAX_ITERATIONS {
        iterations += 1;
        matvec_laplacian(g, &x, &mut y);
        // Project out the known kernel.
        let mean = y.iter().sum::<f64>() / n as f64;
        for a in y.iter_mut() {
            *a -= mean;
        }
        let len = norm(&y);
        if len == 0.0 {
            return Err(SpectralError::NoConvergence { residual, iterations });
        }
        for a in y.iter_mut() {
            *a /= len;
        }
        std::mem::swap(&mut x, &mut y);

        // Rayleigh quotient and residual on the unit vector x.
        matvec_laplacian(g, &x, &mut y);
        lambda = x.iter().zip(&y).map(|(a, b)| a * b).sum::<f64>();
        residual = x
            .iter()
            .zip(&y)
            .map(|(a, b)| (b - lambda * a) * (b - lambda * a))
            .sum::<f64>()
            .sqrt();
        if residual <= RESIDUAL_TOLERANCE {
            break;
        }
    }
    if residual > RESIDUAL_TOLERANCE {
        return Err(SpectralError::NoConvergence { residual, iterations });
    }
    Ok(SpectralResult { lambda: snap(lambda), residual, iterations })
}

/// Largest eigenvalue of the Laplacian `D - A`.
pub fn laplacian_spectral_radius(g: &Graph) -> Result<SpectralResult, SpectralError> {
    let n = g.n();
    if n == 0 {
        return Err(SpectralError::EmptyGraph);
    }
    if g.edge_count() == 0 {
        return Ok(SpectralResult { lambda: 0.0, residual: 0.0, iterations: 0 });
    }

    let (lo, hi) = (g.max_degree() as f64 + 1.0, 2.0 * g.max_degree() as f64);
    let mut rng = Rng::new(0x5eed_1a77);
    let mut last = Err(SpectralError::NoConvergence { residual: f64::INFINITY, iterations: 0 });
    for _ in 0..RESTART_ATTEMPTS {
        let x: Vec<f64> = (0..n).map(|_| 1.0 + rng.next_f64()).collect();
        last = power_iteration(g, x).and_then(|r| {
            if r.lambda < lo - INTEGER_SNAP || r.lambda > hi + INTEGER_SNAP {
                Err(SpectralError::OutOfWindow { lambda: r.lambda, lo, hi })
            } else {
                Ok(r)
            }
        });
        if last.is_ok() {
            break;
        }
    }
    last
}

/// Spectral lower bound on the global offensive alliance number of a
/// connected graph of order >= 2:
/// `ceil((n / lambda) * ceil((min_degree + 1) / 2))`.
pub fn spectral_lower_bound(g: &Graph) -> Result<(usize, SpectralResult), SpectralError> {
    if g.n() == 0 {
        return Err(SpectralError::EmptyGraph);
    }
    if g.n() < 2 || !g.is_connected() {
        return Err(SpectralError::NotApplicable);
    }
    let spec = laplacian_spectral_radius(g)?;
    let coeff = (g.min_degree() + 2) / 2; // = ceil((min_degree + 1) / 2)
    let raw = g.n() as f64 * coeff as f64 / spec.lambda;
    let snapped = snap(raw);
    // If no snap applied, shave the iteration error so the ceiling cannot
    // overshoot a boundary case.
    let adjusted = if snapped == raw { raw - 1e-9 } else { snapped };
    Ok((adjusted.ceil() as usize, spec))
}
