//! Concurrence (three routes) and entanglement of formation.

use crate::error::{Error, Result};
use crate::linalg::{clamped_sqrt, CMatrix, HermitianMatrix};
use crate::model::{check_temperature, DensityMatrix, ModelParams};

/// `sigma_y (x) sigma_y` in the computational basis.
fn yy() -> CMatrix {
    CMatrix::from_real_rows(&[
        vec![0.0, 0.0, 0.0, -1.0],
        vec![0.0, 0.0, 1.0, 0.0],
        vec![0.0, 1.0, 0.0, 0.0],
        vec![-1.0, 0.0, 0.0, 0.0],
    ])
    .expect("4x4 literal")
}

/// Spin-flipped state `(sy x sy) rho* (sy x sy)`.
pub fn spin_flip(rho: &DensityMatrix) -> Result<DensityMatrix> {
    let f = yy();
    let m = f.matmul(&rho.matrix().conj())?.matmul(&f)?;
    DensityMatrix::new(HermitianMatrix::hermitian_part(&m))
}

/// Wootters concurrence of an arbitrary two-qubit state.
///
/// The `lambda_i` are the square roots of the eigenvalues of the Hermitian
/// `sqrt(rho) rho~ sqrt(rho)`, which share a spectrum with `rho rho~`.
pub fn concurrence_wootters(rho: &DensityMatrix) -> Result<f64> {
    let s = rho.hermitian().sqrtm()?;
    let flipped = spin_flip(rho)?;
    let m = s
        .as_matrix()
        .matmul(flipped.matrix())?
        .matmul(s.as_matrix())?;
    let mu = HermitianMatrix::hermitian_part(&m).eigenvalues()?;
    let mut lambda = Vec::with_capacity(4);
    for v in mu {
        lambda.push(clamped_sqrt(v)?);
    }
    let c = lambda[0] - lambda[1] - lambda[2] - lambda[3];
    Ok(c.clamp(0.0, 1.0))
}

/// Closed form for X-shaped states (only diagonal and anti-diagonal entries):
/// `2 max(0, |r23| - sqrt(r11 r44), |r14| - sqrt(r22 r33))`.
pub fn concurrence_xstate(rho: &DensityMatrix) -> Result<f64> {
    let m = rho.matrix();
    for i in 0..4 {
        for j in 0..4 {
            if i != j && i + j != 3 && m[(i, j)].norm() > 1e-12 {
                return Err(Error::validation(format!(
                    "state is not X-shaped: entry ({i}, {j}) = {}",
                    m[(i, j)]
                )));
            }
        }
    }
    let d = |i: usize| m[(i, i)].re.max(0.0);
    let a = m[(1, 2)].norm() - (d(0) * d(3)).sqrt();
    let b = m[(0, 3)].norm() - (d(1) * d(2)).sqrt();
    Ok((2.0 * a.max(b).max(0.0)).min(1.0))
}

/// Unclamped thermal concurrence expression
/// `(e^{8w} - 3) / (1 + e^{-2y} + e^{2y} + e^{8w})`, evaluated with every
/// exponential divided by the largest one so no term overflows.
pub(crate) fn thermal_concurrence_raw(p: &ModelParams, t: f64) -> f64 {
    let w8 = 8.0 * p.w(t);
    let y2 = 2.0 * p.y(t);
    // y >= 0, so e^{-2y} never dominates.
    let top = w8.max(y2).max(0.0);
    let num = (w8 - top).exp() - 3.0 * (-top).exp();
    let den = (-top).exp() + (-y2 - top).exp() + (y2 - top).exp() + (w8 - top).exp();
    num / den
}

/// Analytic concurrence of the Gibbs state; zero at and above `T_c`.
pub fn concurrence_thermal(p: &ModelParams, t: f64) -> Result<f64> {
    check_temperature(t)?;
    Ok(thermal_concurrence_raw(p, t).max(0.0))
}

/// `E_f(C) = h2((1 + sqrt(1 - C^2)) / 2)` in bits.
pub fn entanglement_of_formation(c: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&c) {
        return Err(Error::validation(format!(
            "concurrence must lie in [0, 1], got {c}"
        )));
    }
    if c == 0.0 {
        return Ok(0.0);
    }
    let root = (1.0 - c * c).sqrt();
    // smaller branch (1 - sqrt(1 - c^2))/2 without cancellation
    let v = 0.5 * c * c / (1.0 + root);
    let u = 1.0 - v;
    let h = -(u * (-v).ln_1p() + v * v.ln()) / std::f64::consts::LN_2;
    Ok(h.clamp(0.0, 1.0))
}
