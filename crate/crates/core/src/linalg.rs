//! Small dense complex matrices and a cyclic Jacobi Hermitian eigensolver.

use std::fmt;
use std::ops::{Add, Index, IndexMut};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::tol;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Square complex matrix stored row-major.
#[derive(Clone, PartialEq)]
pub struct CMatrix {
    n: usize,
    data: Vec<Complex64>,
}

impl CMatrix {
    pub fn zeros(n: usize) -> Self {
        CMatrix {
            n,
            data: vec![ZERO; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = ONE;
        }
        m
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    /// Builds a matrix from rows; every row must have the same length as the
    /// number of rows.
    pub fn from_rows(rows: &[Vec<Complex64>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::validation("matrix must have at least one row"));
        }
        if let Some(bad) = rows.iter().position(|r| r.len() != n) {
            return Err(Error::validation(format!(
                "row {bad} has length {} in a {n}x{n} matrix",
                rows[bad].len()
            )));
        }
        Ok(CMatrix {
            n,
            data: rows.concat(),
        })
    }

    pub fn from_real_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let rows: Vec<Vec<Complex64>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| Complex64::new(v, 0.0)).collect())
            .collect();
        Self::from_rows(&rows)
    }

    pub fn diag(values: &[f64]) -> Self {
        let mut m = Self::zeros(values.len());
        for (i, &v) in values.iter().enumerate() {
            m[(i, i)] = Complex64::new(v, 0.0);
        }
        m
    }

    /// Outer product `|v><v|`.
    pub fn projector(v: &[Complex64]) -> Self {
        Self::from_fn(v.len(), |i, j| v[i] * v[j].conj())
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.n, |i, j| self[(j, i)].conj())
    }

    pub fn conj(&self) -> Self {
        Self::from_fn(self.n, |i, j| self[(i, j)].conj())
    }

    pub fn scale(&self, s: f64) -> Self {
        CMatrix {
            n: self.n,
            data: self.data.iter().map(|z| z * s).collect(),
        }
    }

    pub fn matmul(&self, other: &CMatrix) -> Result<CMatrix> {
        check_same_dim(self, other)?;
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a == ZERO {
                    continue;
                }
                for j in 0..n {
                    out[(i, j)] += a * other[(k, j)];
                }
            }
        }
        Ok(out)
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.n).map(|i| self[(i, i)]).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn frobenius_dist(&self, other: &CMatrix) -> Result<f64> {
        check_same_dim(self, other)?;
        Ok(self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm_sqr())
            .sum::<f64>()
            .sqrt())
    }

    /// Largest elementwise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &CMatrix) -> Result<f64> {
        check_same_dim(self, other)?;
        Ok(self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }

    /// Largest `|a_ij - conj(a_ji)|`.
    pub fn hermiticity_defect(&self) -> f64 {
        let mut worst = 0.0_f64;
        for i in 0..self.n {
            for j in i..self.n {
                worst = worst.max((self[(i, j)] - self[(j, i)].conj()).norm());
            }
        }
        worst
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermiticity_defect() <= tol
    }

    fn off_diagonal_norm(&self) -> f64 {
        let mut s = 0.0;
        for i in 0..self.n {
            for j in 0..self.n {
                if i != j {
                    s += self[(i, j)].norm_sqr();
                }
            }
        }
        s.sqrt()
    }
}

impl Index<(usize, usize)> for CMatrix {
    type Output = Complex64;

    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i * self.n + j]
    }
}

impl IndexMut<(usize, usize)> for CMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.data[i * self.n + j]
    }
}

impl Add for &CMatrix {
    type Output = CMatrix;

    /// Panics on dimension mismatch; use only on matrices of known shape.
    fn add(self, rhs: &CMatrix) -> CMatrix {
        assert_eq!(self.n, rhs.n, "dimension mismatch in matrix addition");
        CMatrix {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl fmt::Debug for CMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "CMatrix {}x{} [", self.n, self.n)?;
        for i in 0..self.n {
            write!(f, " ")?;
            for j in 0..self.n {
                let z = self[(i, j)];
                write!(f, " {:+.6e}{:+.6e}i", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

fn check_same_dim(a: &CMatrix, b: &CMatrix) -> Result<()> {
    if a.n != b.n {
        return Err(Error::validation(format!(
            "dimension mismatch: {}x{} vs {}x{}",
            a.n, a.n, b.n, b.n
        )));
    }
    Ok(())
}

/// A complex matrix known to be Hermitian.
#[derive(Clone, PartialEq, Debug)]
pub struct HermitianMatrix(CMatrix);

impl HermitianMatrix {
    /// Validates `m` against the Hermitian invariant. Accepted inputs are
    /// stored with their Hermitian part so the invariant holds exactly.
    pub fn new(m: CMatrix) -> Result<Self> {
        let defect = m.hermiticity_defect();
        if defect > tol::DEFAULT.hermitian {
            return Err(Error::validation(format!(
                "matrix is not Hermitian (max |a_ij - conj(a_ji)| = {defect:e})"
            )));
        }
        Ok(Self::hermitian_part(&m))
    }

    /// `(m + m^†) / 2` without validation.
    pub fn hermitian_part(m: &CMatrix) -> Self {
        let n = m.dim();
        HermitianMatrix(CMatrix::from_fn(n, |i, j| {
            if i == j {
                Complex64::new(m[(i, i)].re, 0.0)
            } else {
                (m[(i, j)] + m[(j, i)].conj()) * 0.5
            }
        }))
    }

    pub fn identity(n: usize) -> Self {
        HermitianMatrix(CMatrix::identity(n))
    }

    pub fn diag(values: &[f64]) -> Self {
        HermitianMatrix(CMatrix::diag(values))
    }

    pub fn as_matrix(&self) -> &CMatrix {
        &self.0
    }

    pub fn into_matrix(self) -> CMatrix {
        self.0
    }

    pub fn dim(&self) -> usize {
        self.0.dim()
    }

    /// Trace of a Hermitian matrix is real.
    pub fn trace(&self) -> f64 {
        self.0.trace().re
    }

    pub fn scale(&self, s: f64) -> Self {
        HermitianMatrix(self.0.scale(s))
    }

    pub fn eigh(&self) -> Result<EigenDecomposition> {
        jacobi_eigh(&self.0)
    }

    /// Eigenvalues only, sorted descending.
    pub fn eigenvalues(&self) -> Result<Vec<f64>> {
        Ok(self.eigh()?.values)
    }

    /// Applies a real scalar function through the spectrum:
    /// `V diag(f(values)) V^†`. Non-finite `f` values are domain errors.
    pub fn mat_fn(&self, f: impl Fn(f64) -> f64) -> Result<HermitianMatrix> {
        let eig = self.eigh()?;
        let mut mapped = Vec::with_capacity(eig.values.len());
        for &v in &eig.values {
            let fv = f(v);
            if !fv.is_finite() {
                return Err(Error::domain(format!(
                    "matrix function undefined at eigenvalue {v:e}"
                )));
            }
            mapped.push(fv);
        }
        Ok(eig.recompose(&mapped))
    }

    /// Principal square root of a positive semidefinite matrix. Eigenvalues in
    /// `[-psd_floor, 0)` are treated as zero.
    pub fn sqrtm(&self) -> Result<HermitianMatrix> {
        let eig = self.eigh()?;
        let mut roots = Vec::with_capacity(eig.values.len());
        for &v in &eig.values {
            roots.push(clamped_sqrt(v)?);
        }
        Ok(eig.recompose(&roots))
    }
}

/// Square root with negative eigenvalues down to `-psd_floor` clamped to zero.
pub(crate) fn clamped_sqrt(v: f64) -> Result<f64> {
    if v >= 0.0 {
        Ok(v.sqrt())
    } else if v >= -tol::DEFAULT.psd_floor {
        Ok(0.0)
    } else {
        Err(Error::domain(format!(
            "square root of negative eigenvalue {v:e}"
        )))
    }
}

/// Eigenvalues sorted descending with orthonormal eigenvectors as the
/// matching columns of `vectors`.
#[derive(Clone, Debug)]
pub struct EigenDecomposition {
    pub values: Vec<f64>,
    pub vectors: CMatrix,
}

impl EigenDecomposition {
    /// `V diag(values) V^†` for replacement eigenvalues.
    pub fn recompose(&self, values: &[f64]) -> HermitianMatrix {
        let v = &self.vectors;
        let n = v.dim();
        let m = CMatrix::from_fn(n, |i, j| {
            (0..n)
                .map(|k| v[(i, k)] * values[k] * v[(j, k)].conj())
                .sum()
        });
        HermitianMatrix::hermitian_part(&m)
    }

    pub fn reconstruct(&self) -> HermitianMatrix {
        self.recompose(&self.values)
    }
}

/// Cyclic Jacobi for a complex Hermitian matrix.
///
/// Each rotation first removes the phase of `a_pq` with a diagonal unitary,
/// then applies the real symmetric Jacobi rotation in the `(p, q)` plane.
fn jacobi_eigh(input: &CMatrix) -> Result<EigenDecomposition> {
    let tols = tol::DEFAULT;
    let n = input.dim();
    let mut a = HermitianMatrix::hermitian_part(input).into_matrix();
    let mut v = CMatrix::identity(n);
    let scale = a.frobenius_norm().max(f64::MIN_POSITIVE);

    let mut converged = a.off_diagonal_norm() <= tols.jacobi * scale;
    let mut sweeps = 0;
    while !converged && sweeps < tols.jacobi_max_sweeps {
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
        sweeps += 1;
        converged = a.off_diagonal_norm() <= tols.jacobi * scale;
    }
    if !converged {
        return Err(Error::Internal(format!(
            "Jacobi eigensolver did not converge in {sweeps} sweeps"
        )));
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(j, j)].re.total_cmp(&a[(i, i)].re));
    let values = order.iter().map(|&i| a[(i, i)].re).collect();
    let vectors = CMatrix::from_fn(n, |r, c| v[(r, order[c])]);
    Ok(EigenDecomposition { values, vectors })
}

fn rotate(a: &mut CMatrix, v: &mut CMatrix, p: usize, q: usize) {
    let apq = a[(p, q)];
    let mag = apq.norm();
    if mag == 0.0 {
        return;
    }
    let phase = apq / mag;
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;
    let tau = (aqq - app) / (2.0 * mag);
    let t = if tau >= 0.0 {
        1.0 / (tau + tau.hypot(1.0))
    } else {
        -1.0 / (-tau + tau.hypot(1.0))
    };
    let c = 1.0 / t.hypot(1.0);
    let s = t * c;

    // U restricted to the (p, q) plane: [[c, s], [-s e^{-i phi}, c e^{-i phi}]]
    let u_pp = Complex64::new(c, 0.0);
    let u_pq = Complex64::new(s, 0.0);
    let u_qp = -phase.conj() * s;
    let u_qq = phase.conj() * c;

    let n = a.dim();
    for k in 0..n {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = akp * u_pp + akq * u_qp;
        a[(k, q)] = akp * u_pq + akq * u_qq;
    }
    for k in 0..n {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = u_pp.conj() * apk + u_qp.conj() * aqk;
        a[(q, k)] = u_pq.conj() * apk + u_qq.conj() * aqk;
    }
    a[(p, q)] = ZERO;
    a[(q, p)] = ZERO;
    a[(p, p)] = Complex64::new(a[(p, p)].re, 0.0);
    a[(q, q)] = Complex64::new(a[(q, q)].re, 0.0);

    for k in 0..n {
        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = vkp * u_pp + vkq * u_qp;
        v[(k, q)] = vkp * u_pq + vkq * u_qq;
    }
}
