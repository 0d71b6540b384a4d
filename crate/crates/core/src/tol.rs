//! Numerical tolerances shared by every module.

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Hermiticity check on matrix entries.
    pub hermitian: f64,
    /// Unit-trace check on density matrices and simplex sums.
    pub unit_sum: f64,
    /// Eigenvalues in `[-psd_floor, 0)` are clamped to zero; below that a
    /// matrix is not positive semidefinite.
    pub psd_floor: f64,
    /// Consumer-facing agreement tolerance.
    pub consumer: f64,
    /// Jacobi stopping threshold on off-diagonal Frobenius mass, relative to
    /// the matrix norm.
    pub jacobi: f64,
    pub jacobi_max_sweeps: usize,
    /// Probabilities below this are exact zeros in entropy sums.
    pub zero_prob: f64,
    /// Relative band around `B = 4 J_H` that counts as the critical field.
    pub critical_field: f64,
}

pub const DEFAULT: Tolerances = Tolerances {
    hermitian: 1e-12,
    unit_sum: 1e-12,
    psd_floor: 1e-10,
    consumer: 1e-10,
    jacobi: 1e-14,
    jacobi_max_sweeps: 50,
    zero_prob: 1e-15,
    critical_field: 1e-12,
};
