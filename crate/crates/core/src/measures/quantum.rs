//! Spectral measures on density matrices: von Neumann entropy, quantum
//! Jensen-Shannon divergence, entropic non-triviality, degree of mixture.

use crate::error::Result;
use crate::linalg::HermitianMatrix;
use crate::model::{maximally_mixed, DensityMatrix};

use super::classical::{shannon_entropy, ProbVector};

/// Eigenvalues as a simplex point, renormalized after clamping.
pub fn spectrum_distribution(rho: &DensityMatrix) -> Result<ProbVector> {
    let spec = rho.spectrum()?;
    let sum: f64 = spec.iter().sum();
    ProbVector::new(spec.iter().map(|v| (v / sum).min(1.0)).collect())
}

/// `S = -Tr rho ln rho`, in nats.
pub fn von_neumann_entropy(rho: &DensityMatrix) -> Result<f64> {
    Ok(shannon_entropy(&spectrum_distribution(rho)?))
}

/// `S / ln 4`, in `[0, 1]`.
pub fn normalized_entropy(rho: &DensityMatrix) -> Result<f64> {
    let s_max = (rho.hermitian().dim() as f64).ln();
    Ok((von_neumann_entropy(rho)? / s_max).clamp(0.0, 1.0))
}

/// `S[(rho1 + rho2)/2] - S[rho1]/2 - S[rho2]/2`, in nats.
pub fn quantum_jsd(rho1: &DensityMatrix, rho2: &DensityMatrix) -> Result<f64> {
    let mid = rho1.mix(rho2, 0.5)?;
    let d = von_neumann_entropy(&mid)?
        - 0.5 * von_neumann_entropy(rho1)?
        - 0.5 * von_neumann_entropy(rho2)?;
    Ok(d.max(0.0))
}

/// `C_JS = JSD(rho, I/4) * H_vN(rho)`: vanishes both for pure states and for
/// the maximally mixed state.
pub fn entropic_nontriviality(rho: &DensityMatrix) -> Result<f64> {
    Ok(quantum_jsd(rho, &maximally_mixed())? * normalized_entropy(rho)?)
}

/// `R = 1 / Tr rho^2`.
pub fn degree_of_mixture(rho: &DensityMatrix) -> f64 {
    1.0 / purity(rho.hermitian())
}

fn purity(m: &HermitianMatrix) -> f64 {
    let m = m.as_matrix();
    let n = m.dim();
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            s += m[(i, j)].norm_sqr();
        }
    }
    s
}
