//! Correspondence between the Werner mixing parameter `x` and the temperature
//! of the Heisenberg Gibbs state at fixed field.
//!
//! The forward map is `x = (2/3) [C_raw(T, B) + 1/2]`, where `C_raw` is the
//! unclamped thermal concurrence expression. A Werner state with this `x`
//! has concurrence `max(0, (3x - 1)/2) = C(T, B)`, so both states carry the
//! same entanglement of formation. For `B <= B_c` the map is a bijection
//! onto `(0, x_max(B))`.

use std::f64::consts::FRAC_1_SQRT_2;
use std::fmt;

use crate::error::{Error, Result};
use crate::measures::entanglement::thermal_concurrence_raw;
use crate::model::{check_temperature, FieldRegime, ModelParams};

/// `T_c = 8 J_H / (k_B ln 3)` and `B_c = 4 J_H`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CriticalConstants {
    pub t_c: f64,
    pub b_c: f64,
}

pub fn critical_constants(p: &ModelParams) -> CriticalConstants {
    CriticalConstants {
        t_c: 8.0 * p.j_h() / (p.k_b() * 3f64.ln()),
        b_c: 4.0 * p.j_h(),
    }
}

/// Result of the forward map.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MappedX {
    /// Unclamped; drops below 1/3 above `T_c` and tends to 0 as `T -> inf`.
    pub x: f64,
    /// False when `B > B_c`, where the map is no longer one-to-one.
    pub in_bijection_domain: bool,
}

pub fn x_of_temperature(p: &ModelParams, t: f64) -> Result<MappedX> {
    check_temperature(t)?;
    let x = (2.0 / 3.0) * (thermal_concurrence_raw(p, t) + 0.5);
    Ok(MappedX {
        x,
        in_bijection_domain: p.field_regime() != FieldRegime::Above,
    })
}

/// Supremum of the forward map as `T -> 0`: 1 below `B_c`, 2/3 at `B_c`.
/// `None` above `B_c`.
pub fn x_upper_limit(p: &ModelParams) -> Option<f64> {
    match p.field_regime() {
        FieldRegime::Below => Some(1.0),
        FieldRegime::Critical => Some(2.0 / 3.0),
        FieldRegime::Above => None,
    }
}

const BRACKET_LO: f64 = 1e-6;
const BRACKET_HI: f64 = 1e3;
const MAX_EXPANSIONS: usize = 60;
const T_TOL: f64 = 1e-12;

/// Inverse of [`x_of_temperature`] by bisection, to an absolute temperature
/// tolerance of `1e-12 T_c`.
pub fn temperature_of_x(p: &ModelParams, x: f64) -> Result<f64> {
    let Some(x_max) = x_upper_limit(p) else {
        return Err(Error::domain(format!(
            "B = {} exceeds B_c = {}; the x <-> T map is not one-to-one there",
            p.b(),
            p.critical_field()
        )));
    };
    if !(x > 0.0 && x < x_max) {
        return Err(Error::domain(format!(
            "x = {x} is outside the attainable interval (0, {x_max}) at B = {}",
            p.b()
        )));
    }

    let t_c = critical_constants(p).t_c;
    let map = |t: f64| (2.0 / 3.0) * (thermal_concurrence_raw(p, t) + 0.5);

    let mut lo = BRACKET_LO * t_c;
    let mut hi = BRACKET_HI * t_c;
    let mut n = 0;
    while map(lo) <= x {
        if n == MAX_EXPANSIONS {
            return Err(Error::Internal(format!(
                "could not bracket x = {x} from below (t = {lo:e}); map not monotone?"
            )));
        }
        lo *= 0.5;
        n += 1;
    }
    n = 0;
    while map(hi) >= x {
        if n == MAX_EXPANSIONS {
            return Err(Error::Internal(format!(
                "could not bracket x = {x} from above (t = {hi:e}); map not monotone?"
            )));
        }
        hi *= 2.0;
        n += 1;
    }

    let tol = T_TOL * t_c;
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        // decreasing map: larger x lies at lower temperature
        if map(mid) > x {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// The temperature a Werner mixing parameter stands for at the given field.
/// Same contract as [`temperature_of_x`].
pub fn effective_temperature(x: f64, p: &ModelParams) -> Result<f64> {
    temperature_of_x(p, x)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WernerRegime {
    /// `x <= 1/3`
    Separable,
    /// `1/3 < x <= 1/sqrt 2`
    EntangledLocal,
    /// `x > 1/sqrt 2`
    ChshViolating,
}

impl fmt::Display for WernerRegime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WernerRegime::Separable => "separable",
            WernerRegime::EntangledLocal => "entangled-local",
            WernerRegime::ChshViolating => "chsh-violating",
        })
    }
}

pub fn classify_werner(x: f64) -> Result<WernerRegime> {
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::validation(format!(
            "Werner mixing parameter must lie in [0, 1], got {x}"
        )));
    }
    Ok(if x <= 1.0 / 3.0 {
        WernerRegime::Separable
    } else if x <= FRAC_1_SQRT_2 {
        WernerRegime::EntangledLocal
    } else {
        WernerRegime::ChshViolating
    })
}
