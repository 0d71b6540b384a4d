//! Shannon entropy, Kullback-Leibler divergence and the Jensen-Shannon family
//! on the probability simplex. All logarithms are natural.

use crate::error::{Error, Result};
use crate::tol;

/// A point on the probability simplex.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbVector(Vec<f64>);

impl ProbVector {
    pub fn new(p: Vec<f64>) -> Result<Self> {
        if p.is_empty() {
            return Err(Error::validation("probability vector must be non-empty"));
        }
        if let Some((j, v)) = p
            .iter()
            .enumerate()
            .find(|(_, v)| !(0.0..=1.0).contains(*v))
        {
            return Err(Error::validation(format!(
                "probability component {j} = {v} outside [0, 1]"
            )));
        }
        let sum: f64 = p.iter().sum();
        if (sum - 1.0).abs() > tol::DEFAULT.unit_sum {
            return Err(Error::validation(format!(
                "probabilities sum to {sum}, expected 1"
            )));
        }
        Ok(ProbVector(p))
    }

    pub fn uniform(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::validation("uniform distribution needs n >= 1"));
        }
        Ok(ProbVector(vec![1.0 / n as f64; n]))
    }

    /// All mass on component `k`.
    pub fn delta(n: usize, k: usize) -> Result<Self> {
        if k >= n {
            return Err(Error::validation(format!(
                "delta index {k} out of range for n = {n}"
            )));
        }
        let mut p = vec![0.0; n];
        p[k] = 1.0;
        Ok(ProbVector(p))
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `a * self + (1 - a) * other`.
    pub fn mix(&self, other: &ProbVector, a: f64) -> Result<ProbVector> {
        check_same_len(self, other)?;
        Ok(ProbVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(p, q)| (a * p + (1.0 - a) * q).clamp(0.0, 1.0))
                .collect(),
        ))
    }
}

fn check_same_len(p: &ProbVector, q: &ProbVector) -> Result<()> {
    if p.len() != q.len() {
        return Err(Error::validation(format!(
            "probability vectors have different lengths ({} vs {})",
            p.len(),
            q.len()
        )));
    }
    Ok(())
}

fn is_zero(p: f64) -> bool {
    p < tol::DEFAULT.zero_prob
}

/// `-sum p ln p` with `0 ln 0 = 0`.
pub fn shannon_entropy(p: &ProbVector) -> f64 {
    // `0.0 - x` rather than `-x` so a pure state yields +0.0, not -0.0
    0.0 - p
        .0
        .iter()
        .filter(|&&v| !is_zero(v))
        .map(|&v| v * v.ln())
        .sum::<f64>()
}

/// `K[p|q] = sum p ln(p/q)`. Infinite divergence (some `p_j > 0` where
/// `q_j = 0`) is a domain error.
pub fn kl_divergence(p: &ProbVector, q: &ProbVector) -> Result<f64> {
    check_same_len(p, q)?;
    let mut k = 0.0;
    for (j, (&pj, &qj)) in p.0.iter().zip(&q.0).enumerate() {
        if is_zero(pj) {
            continue;
        }
        if is_zero(qj) {
            return Err(Error::domain(format!(
                "divergence is infinite: p[{j}] = {pj} but q[{j}] = {qj}"
            )));
        }
        k += pj * (pj / qj).ln();
    }
    Ok(k.max(0.0))
}

/// `K[p | (p + q)/2]`, finite for any pair.
pub fn j0(p: &ProbVector, q: &ProbVector) -> Result<f64> {
    let mid = p.mix(q, 0.5)?;
    kl_divergence(p, &mid)
}

/// Symmetrized divergence `2 S[(p+q)/2] - S[p] - S[q]`.
pub fn j1(p: &ProbVector, q: &ProbVector) -> Result<f64> {
    let mid = p.mix(q, 0.5)?;
    Ok((2.0 * shannon_entropy(&mid) - shannon_entropy(p) - shannon_entropy(q)).max(0.0))
}

/// Weighted Jensen-Shannon divergence `S[pi1 p + pi2 q] - pi1 S[p] - pi2 S[q]`.
pub fn jsd(p: &ProbVector, q: &ProbVector, pi1: f64, pi2: f64) -> Result<f64> {
    if !(pi1 > 0.0 && pi2 > 0.0) || (pi1 + pi2 - 1.0).abs() > tol::DEFAULT.unit_sum {
        return Err(Error::validation(format!(
            "JSD weights must be positive and sum to 1, got ({pi1}, {pi2})"
        )));
    }
    let mixed = p.mix(q, pi1)?;
    let d = shannon_entropy(&mixed) - pi1 * shannon_entropy(p) - pi2 * shannon_entropy(q);
    Ok(d.max(0.0))
}
