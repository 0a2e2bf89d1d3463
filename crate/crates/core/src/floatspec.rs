//! Floating-point spectra for energy and extreme-eigenvalue estimates.
//!
//! The cyclic Jacobi iteration is plenty at desk scale and keeps the crate
//! free of a dense linear-algebra dependency. Zero/nonzero classification
//! is never taken from this path; exact inertia comes from the congruence
//! engine.

use crate::graph::Graph;
use crate::inertia::{inertia, Inertia};
use crate::matrix::{adjacency_matrix, IntSymMatrix};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum SpectrumError {
    #[error("Jacobi iteration did not converge after {sweeps} sweeps (off-norm {off:.3e})")]
    NoConvergence { sweeps: usize, off: f64 },
    #[error("energy bounds are defined for graphs with at least one vertex")]
    EmptyGraph,
}

/// Numerically computed eigenvalues, descending, with a residual bound.
#[derive(Clone, Debug, PartialEq)]
pub struct FloatSpectrum {
    pub eigenvalues: Vec<f64>,
    pub residual_bound: f64,
}

impl FloatSpectrum {
    pub fn min_eigenvalue(&self) -> f64 {
        self.eigenvalues.last().copied().unwrap_or(0.0)
    }

    pub fn max_eigenvalue(&self) -> f64 {
        self.eigenvalues.first().copied().unwrap_or(0.0)
    }

    /// Graph energy Σ|λ_i|.
    pub fn energy(&self) -> f64 {
        self.eigenvalues.iter().map(|l| l.abs()).sum()
    }
}

const MAX_SWEEPS: usize = 64;

/// Eigenvalues of a symmetric integer matrix by cyclic Jacobi rotations.
pub fn float_spectrum(m: &IntSymMatrix) -> Result<FloatSpectrum, SpectrumError> {
    let n = m.dim();
    let mut a: Vec<f64> = (0..n * n)
        .map(|idx| m.get(idx / n, idx % n) as f64)
        .collect();
    let fro: f64 = a.iter().map(|v| v * v).sum::<f64>().sqrt();
    let tol = f64::EPSILON * fro.max(1.0);

    let off = |a: &[f64]| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in (i + 1)..n {
                s += a[i * n + j] * a[i * n + j];
            }
        }
        (2.0 * s).sqrt()
    };

    let mut sweeps = 0;
    while off(&a) > tol {
        if sweeps >= MAX_SWEEPS {
            return Err(SpectrumError::NoConvergence {
                sweeps,
                off: off(&a),
            });
        }
        sweeps += 1;
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq.abs() <= tol / (n as f64 * n as f64).max(1.0) {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = if theta >= 0.0 {
                    1.0 / (theta + (1.0 + theta * theta).sqrt())
                } else {
                    1.0 / (theta - (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
            }
        }
    }
    let mut eigenvalues: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    eigenvalues.sort_by(|x, y| y.partial_cmp(x).unwrap());
    let residual_bound = off(&a) + (n as f64) * f64::EPSILON * fro;
    Ok(FloatSpectrum {
        eigenvalues,
        residual_bound,
    })
}

/// Float slack on the energy inequalities.
pub const ENERGY_TOLERANCE: f64 = 1e-6;

/// Energy-side report: E(G) against the three inequalities it must satisfy,
/// with exact inertia on the left-hand sides.
#[derive(Clone, Debug, PartialEq)]
pub struct EnergyReport {
    pub energy: f64,
    pub min_eigenvalue: f64,
    pub inertia: Inertia,
    /// E ≥ n⁺ + n⁻
    pub holds_lower: bool,
    /// E ≤ 2|λ_min|·n⁻
    pub holds_upper: bool,
    /// n⁺ ≤ n⁻(2|λ_min| − 1)
    pub holds_lemma: bool,
}

impl EnergyReport {
    pub fn all_hold(&self) -> bool {
        self.holds_lower && self.holds_upper && self.holds_lemma
    }
}

pub fn check_energy_bounds(g: &Graph) -> Result<EnergyReport, SpectrumError> {
    if g.order() == 0 {
        return Err(SpectrumError::EmptyGraph);
    }
    let spectrum = float_spectrum(&adjacency_matrix(g))?;
    let exact = inertia(&adjacency_matrix(g));
    let energy = spectrum.energy();
    let lam_min = spectrum.min_eigenvalue();
    let tau = ENERGY_TOLERANCE;
    Ok(EnergyReport {
        energy,
        min_eigenvalue: lam_min,
        inertia: exact,
        holds_lower: energy >= exact.rank() as f64 - tau,
        holds_upper: energy <= 2.0 * lam_min.abs() * exact.n_minus as f64 + tau,
        holds_lemma: exact.n_plus as f64
            <= exact.n_minus as f64 * (2.0 * lam_min.abs() - 1.0) + tau,
    })
}
