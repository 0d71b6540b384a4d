//! The two-site Heisenberg model in a longitudinal field, its Gibbs state,
//! Werner states, and the zero-temperature ground states.
//!
//! Basis order is `|00>, |01>, |10>, |11>` throughout.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{CMatrix, HermitianMatrix};
use crate::tol;

/// Coupling `J_H > 0`, field `B >= 0` along z, and Boltzmann constant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelParams {
    j_h: f64,
    b: f64,
    k_b: f64,
}

impl ModelParams {
    /// Parameters with `k_B = 1`.
    pub fn new(j_h: f64, b: f64) -> Result<Self> {
        Self::with_kb(j_h, b, 1.0)
    }

    pub fn with_kb(j_h: f64, b: f64, k_b: f64) -> Result<Self> {
        if !(j_h.is_finite() && j_h > 0.0) {
            return Err(Error::validation(format!(
                "coupling J_H must be finite and > 0 (antiferromagnetic), got {j_h}"
            )));
        }
        if !(b.is_finite() && b >= 0.0) {
            return Err(Error::validation(format!(
                "field B must be finite and >= 0, got {b}"
            )));
        }
        if !(k_b.is_finite() && k_b > 0.0) {
            return Err(Error::validation(format!(
                "Boltzmann constant must be finite and > 0, got {k_b}"
            )));
        }
        Ok(ModelParams { j_h, b, k_b })
    }

    /// Same coupling and `k_B`, different field.
    pub fn with_field(&self, b: f64) -> Result<Self> {
        Self::with_kb(self.j_h, b, self.k_b)
    }

    pub fn j_h(&self) -> f64 {
        self.j_h
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn k_b(&self) -> f64 {
        self.k_b
    }

    /// `w = J_H / (k_B T)`.
    pub fn w(&self, t: f64) -> f64 {
        self.j_h / (self.k_b * t)
    }

    /// `y = B / (k_B T)`.
    pub fn y(&self, t: f64) -> f64 {
        self.b / (self.k_b * t)
    }

    /// `B_c = 4 J_H`.
    pub fn critical_field(&self) -> f64 {
        4.0 * self.j_h
    }

    /// Where `B` sits relative to `B_c`, using a relative band of
    /// `tol::DEFAULT.critical_field * J_H`.
    pub fn field_regime(&self) -> FieldRegime {
        let d = self.b - self.critical_field();
        let band = tol::DEFAULT.critical_field * self.j_h;
        if d.abs() <= band {
            FieldRegime::Critical
        } else if d < 0.0 {
            FieldRegime::Below
        } else {
            FieldRegime::Above
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldRegime {
    Below,
    Critical,
    Above,
}

pub(crate) fn check_temperature(t: f64) -> Result<()> {
    if t.is_finite() && t > 0.0 {
        Ok(())
    } else {
        Err(Error::validation(format!(
            "temperature must be finite and > 0, got {t}"
        )))
    }
}

/// A 4x4 unit-trace positive semidefinite Hermitian matrix.
#[derive(Clone, PartialEq, Debug)]
pub struct DensityMatrix(HermitianMatrix);

impl DensityMatrix {
    pub fn new(m: HermitianMatrix) -> Result<Self> {
        if m.dim() != 4 {
            return Err(Error::validation(format!(
                "two-qubit density matrix must be 4x4, got {0}x{0}",
                m.dim()
            )));
        }
        let tr = m.trace();
        if (tr - 1.0).abs() > tol::DEFAULT.unit_sum {
            return Err(Error::validation(format!(
                "density matrix trace is {tr}, expected 1"
            )));
        }
        let min = m.eigenvalues()?.last().copied().unwrap_or(0.0);
        if min < -tol::DEFAULT.psd_floor {
            return Err(Error::validation(format!(
                "density matrix has negative eigenvalue {min:e}"
            )));
        }
        Ok(DensityMatrix(m))
    }

    pub fn from_matrix(m: CMatrix) -> Result<Self> {
        Self::new(HermitianMatrix::new(m)?)
    }

    pub fn hermitian(&self) -> &HermitianMatrix {
        &self.0
    }

    pub fn matrix(&self) -> &CMatrix {
        self.0.as_matrix()
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.matrix()[(i, j)]
    }

    /// Eigenvalues sorted descending, with values in `[-psd_floor, 0)` set to 0.
    pub fn spectrum(&self) -> Result<Vec<f64>> {
        Ok(self
            .0
            .eigenvalues()?
            .into_iter()
            .map(|v| if v < 0.0 { 0.0 } else { v })
            .collect())
    }

    /// Convex combination `a * self + (1 - a) * other`.
    pub fn mix(&self, other: &DensityMatrix, a: f64) -> Result<DensityMatrix> {
        if !(0.0..=1.0).contains(&a) {
            return Err(Error::validation(format!(
                "mixing weight must lie in [0, 1], got {a}"
            )));
        }
        let m = &self.matrix().scale(a) + &other.matrix().scale(1.0 - a);
        Ok(DensityMatrix(HermitianMatrix::hermitian_part(&m)))
    }
}

/// The four Bell states.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Hash)]
pub enum BellChoice {
    /// `(|00> + |11>)/sqrt 2`
    #[default]
    PhiPlus,
    /// `(|00> - |11>)/sqrt 2`
    PhiMinus,
    /// `(|01> + |10>)/sqrt 2`
    PsiPlus,
    /// `(|01> - |10>)/sqrt 2`, the singlet
    PsiMinus,
}

impl BellChoice {
    pub const ALL: [BellChoice; 4] = [
        BellChoice::PhiPlus,
        BellChoice::PhiMinus,
        BellChoice::PsiPlus,
        BellChoice::PsiMinus,
    ];

    /// Amplitudes in units of `1/sqrt 2`.
    fn signs(self) -> [f64; 4] {
        match self {
            BellChoice::PhiPlus => [1.0, 0.0, 0.0, 1.0],
            BellChoice::PhiMinus => [1.0, 0.0, 0.0, -1.0],
            BellChoice::PsiPlus => [0.0, 1.0, 1.0, 0.0],
            BellChoice::PsiMinus => [0.0, 1.0, -1.0, 0.0],
        }
    }

    pub fn ket(self) -> [Complex64; 4] {
        self.signs()
            .map(|s| Complex64::new(s * std::f64::consts::FRAC_1_SQRT_2, 0.0))
    }

    /// `|bell><bell|`, with entries exactly 0 or +-1/2.
    pub fn projector(self) -> DensityMatrix {
        let s = self.signs();
        let m = CMatrix::from_fn(4, |i, j| Complex64::new(0.5 * s[i] * s[j], 0.0));
        DensityMatrix(HermitianMatrix::hermitian_part(&m))
    }
}

impl FromStr for BellChoice {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "phi+" => Ok(BellChoice::PhiPlus),
            "phi-" => Ok(BellChoice::PhiMinus),
            "psi+" => Ok(BellChoice::PsiPlus),
            "psi-" => Ok(BellChoice::PsiMinus),
            other => Err(Error::Usage(format!(
                "unknown Bell state '{other}' (expected phi+, phi-, psi+ or psi-)"
            ))),
        }
    }
}

impl fmt::Display for BellChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BellChoice::PhiPlus => "phi+",
            BellChoice::PhiMinus => "phi-",
            BellChoice::PsiPlus => "psi+",
            BellChoice::PsiMinus => "psi-",
        })
    }
}

/// Two-site Hamiltonian `H = B(sz1 + sz2) + 2 J_H s1.s2` (periodic
/// boundary counts the bond twice).
pub fn hamiltonian(p: &ModelParams) -> HermitianMatrix {
    let (j, b) = (p.j_h, p.b);
    let m = CMatrix::from_real_rows(&[
        vec![2.0 * j + 2.0 * b, 0.0, 0.0, 0.0],
        vec![0.0, -2.0 * j, 4.0 * j, 0.0],
        vec![0.0, 4.0 * j, -2.0 * j, 0.0],
        vec![0.0, 0.0, 0.0, 2.0 * j - 2.0 * b],
    ])
    .expect("4x4 literal");
    HermitianMatrix::hermitian_part(&m)
}

/// Boltzmann weights of the four energy levels after dividing out the
/// largest one: `(|00>, triplet-0, singlet, |11>)` and their sum.
fn scaled_weights(p: &ModelParams, t: f64) -> ([f64; 4], f64) {
    let w = p.w(t);
    let y = p.y(t);
    let exps = [-2.0 * w - 2.0 * y, -2.0 * w, 6.0 * w, -2.0 * w + 2.0 * y];
    let top = exps.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let weights = exps.map(|e| (e - top).exp());
    let z = weights.iter().sum();
    (weights, z)
}

/// Gibbs state `exp(-H / k_B T) / Z` in closed form.
pub fn thermal_state(p: &ModelParams, t: f64) -> Result<DensityMatrix> {
    check_temperature(t)?;
    let ([e_00, e_tri, e_sing, e_11], z) = scaled_weights(p, t);
    let diag_mid = 0.5 * (e_tri + e_sing) / z;
    let off_mid = 0.5 * (e_tri - e_sing) / z;
    let m = CMatrix::from_real_rows(&[
        vec![e_00 / z, 0.0, 0.0, 0.0],
        vec![0.0, diag_mid, off_mid, 0.0],
        vec![0.0, off_mid, diag_mid, 0.0],
        vec![0.0, 0.0, 0.0, e_11 / z],
    ])
    .expect("4x4 literal");
    Ok(DensityMatrix(HermitianMatrix::hermitian_part(&m)))
}

/// Gibbs state through the matrix exponential of the Hamiltonian. The
/// spectrum is shifted by its minimum before exponentiating.
pub fn thermal_state_expm(p: &ModelParams, t: f64) -> Result<DensityMatrix> {
    check_temperature(t)?;
    let h = hamiltonian(p);
    let e_min = h.eigenvalues()?.last().copied().unwrap_or(0.0);
    let kt = p.k_b * t;
    let unnorm = h.mat_fn(|e| (-(e - e_min) / kt).exp())?;
    let z = unnorm.trace();
    Ok(DensityMatrix(unnorm.scale(1.0 / z)))
}

/// `x |bell><bell| + (1 - x) I/4`.
pub fn werner_state(x: f64, bell: BellChoice) -> Result<DensityMatrix> {
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::validation(format!(
            "Werner mixing parameter must lie in [0, 1], got {x}"
        )));
    }
    bell.projector().mix(&maximally_mixed(), x)
}

pub fn maximally_mixed() -> DensityMatrix {
    DensityMatrix(HermitianMatrix::diag(&[0.25; 4]))
}

/// Zero-temperature limit of the Gibbs state: the singlet below `B_c`, the
/// equal mixture of singlet and `|11>` at `B_c`, and `|11>` above.
pub fn ground_state(p: &ModelParams) -> DensityMatrix {
    let singlet = BellChoice::PsiMinus.projector();
    let up = DensityMatrix(HermitianMatrix::diag(&[0.0, 0.0, 0.0, 1.0]));
    match p.field_regime() {
        FieldRegime::Below => singlet,
        FieldRegime::Critical => singlet.mix(&up, 0.5).expect("weight in range"),
        FieldRegime::Above => up,
    }
}
