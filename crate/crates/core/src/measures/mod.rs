//! Scalar measures on probability vectors and two-qubit states.

pub mod classical;
pub mod entanglement;
pub mod quantum;

pub use classical::{j0, j1, jsd, kl_divergence, shannon_entropy, ProbVector};
pub use entanglement::{
    concurrence_thermal, concurrence_wootters, concurrence_xstate, entanglement_of_formation,
    spin_flip,
};
pub use quantum::{
    degree_of_mixture, entropic_nontriviality, normalized_entropy, quantum_jsd,
    spectrum_distribution, von_neumann_entropy,
};

use crate::error::{Error, Result};
use crate::model::{maximally_mixed, DensityMatrix};

/// Every measure at one grid point. `t`, `b` and `inv_t` are `None` for
/// Werner-state rows.
#[derive(Debug, Clone, PartialEq)]
pub struct MeasureRecord {
    pub t: Option<f64>,
    pub b: Option<f64>,
    pub inv_t: Option<f64>,
    /// Werner mixing parameter: mapped from `(T, B)` for thermal rows, the
    /// input `x` for Werner rows.
    pub x_eff: f64,
    /// Concurrence.
    pub c: f64,
    /// Entanglement of formation, bits.
    pub e_f: f64,
    /// von Neumann entropy, nats.
    pub s_vn: f64,
    /// `s_vn / ln 4`.
    pub h_vn: f64,
    /// Jensen-Shannon divergence to `I/4`, nats.
    pub j_js: f64,
    /// Entropic non-triviality, nats.
    pub c_js: f64,
    /// Degree of mixture `1 / Tr rho^2`.
    pub r: f64,
}

/// Slack on the range checks in [`MeasureRecord::check`].
const RANGE_SLACK: f64 = 1e-9;

impl MeasureRecord {
    /// Fills the state-dependent fields from `rho` and its concurrence.
    pub fn from_state(rho: &DensityMatrix, c: f64, x_eff: f64) -> Result<Self> {
        let spectrum = spectrum_distribution(rho)?;
        let s_vn = shannon_entropy(&spectrum);
        let h_vn = (s_vn / 4f64.ln()).clamp(0.0, 1.0);
        let j_js = quantum_jsd(rho, &maximally_mixed())?;
        Ok(MeasureRecord {
            t: None,
            b: None,
            inv_t: None,
            x_eff,
            c,
            e_f: entanglement_of_formation(c)?,
            s_vn,
            h_vn,
            j_js,
            c_js: j_js * h_vn,
            r: degree_of_mixture(rho),
        })
    }

    /// Checks the record's range invariants.
    pub fn check(&self) -> Result<()> {
        let in_range = |v: f64, lo: f64, hi: f64| v >= lo - RANGE_SLACK && v <= hi + RANGE_SLACK;
        let fail = |what: &str, v: f64| {
            Err(Error::Internal(format!(
                "record invariant violated: {what} = {v}"
            )))
        };
        if !in_range(self.c, 0.0, 1.0) {
            return fail("c", self.c);
        }
        if !in_range(self.e_f, 0.0, 1.0) {
            return fail("e_f", self.e_f);
        }
        if (self.c == 0.0) != (self.e_f == 0.0) && self.c > 1e-150 {
            return fail("e_f (zero iff c is zero)", self.e_f);
        }
        if !in_range(self.h_vn, 0.0, 1.0) {
            return fail("h_vn", self.h_vn);
        }
        if !in_range(self.r, 1.0, 4.0) {
            return fail("r", self.r);
        }
        if !(self.s_vn >= 0.0 && self.j_js >= 0.0 && self.c_js >= 0.0) {
            return fail("entropic quantities", self.c_js);
        }
        if !self.x_eff.is_finite() {
            return fail("x_eff", self.x_eff);
        }
        Ok(())
    }
}
