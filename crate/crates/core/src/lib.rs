//! Thermal entanglement of the two-qubit antiferromagnetic Heisenberg model
//! in a magnetic field, its exact correspondence with Werner states, and
//! Jensen-Shannon based entropic non-triviality.
//!
//! Modules, bottom up:
//! - [`linalg`]: small dense Hermitian matrices and a Jacobi eigensolver
//! - [`model`]: Hamiltonian, Gibbs state, Werner and ground states
//! - [`measures`]: entropies, divergences, concurrence, `E_f`, `C_JS`, `R`
//! - [`mapping`]: the `x <-> T` map, critical constants, Werner regimes
//! - [`sweep`] and [`output`]: grid sweeps, figure presets, CSV/SVG files

pub mod error;
pub mod linalg;
pub mod mapping;
pub mod measures;
pub mod model;
pub mod output;
pub mod sweep;
pub mod tol;

pub use error::{Error, Result};
pub use mapping::{
    classify_werner, critical_constants, effective_temperature, temperature_of_x, x_of_temperature,
    CriticalConstants, MappedX, WernerRegime,
};
pub use measures::MeasureRecord;
pub use model::{
    ground_state, hamiltonian, maximally_mixed, thermal_state, werner_state, BellChoice,
    DensityMatrix, ModelParams,
};
pub use sweep::{evaluate_point, evaluate_werner, figure, run_sweep, Axis, Spacing, SweepSpec};
