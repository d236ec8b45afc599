//! Distances on the hypercube and its quantized neighbourhood.

use serde::{Deserialize, Serialize};

use crate::dynamics::SpinState;
use crate::error::{Error, Result};
use crate::matrix::norm;
use crate::quadform::check_dim;
use crate::spectral::{sign_corner, ZeroAs};

/// Largest `n` for which binomial corner counts are produced.
pub const MAX_DISTRIBUTION_DIM: usize = 30;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Rounding {
    #[default]
    Floor,
    /// Nearest integer, halves away from zero.
    Round,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuantizedVector {
    pub values: Vec<i64>,
    pub rule: Rounding,
}

/// Number of positions where `x` and `y` differ.
pub fn hamming_like(x: &SpinState, y: &SpinState) -> Result<usize> {
    check_dim(x.len(), y.len())?;
    Ok(x.iter().zip(y.iter()).filter(|(a, b)| a != b).count())
}

/// Hamming distance between the sign patterns of two real vectors.
pub fn induced_hamming(x: &[f64], y: &[f64], zero_as: ZeroAs) -> Result<usize> {
    check_dim(x.len(), y.len())?;
    let (nx, ny) = (norm(x), norm(y));
    if nx == 0.0 || ny == 0.0 {
        return Err(Error::ZeroVector);
    }
    if !nx.is_finite() || !ny.is_finite() {
        return Err(Error::InvalidInput("non-finite entry".into()));
    }
    let ux: Vec<f64> = x.iter().map(|v| v / nx).collect();
    let uy: Vec<f64> = y.iter().map(|v| v / ny).collect();
    hamming_like(&sign_corner(&ux, zero_as), &sign_corner(&uy, zero_as))
}

pub fn quantize(x: &[f64], rule: Rounding) -> Result<QuantizedVector> {
    let values = x
        .iter()
        .map(|&v| {
            let q = match rule {
                Rounding::Floor => v.floor(),
                Rounding::Round => v.round(),
            };
            // i64 range check; also rejects NaN and infinities
            if q.is_finite() && q.abs() < 9.0e18 {
                Ok(q as i64)
            } else {
                Err(Error::InvalidInput(format!("cannot quantize {v}")))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(QuantizedVector { values, rule })
}

pub fn generalized_induced_hamming(x1: &[f64], x2: &[f64], rule: Rounding) -> Result<usize> {
    check_dim(x1.len(), x2.len())?;
    let (a, b) = (quantize(x1, rule)?, quantize(x2, rule)?);
    Ok(a.values.iter().zip(&b.values).filter(|(p, q)| p != q).count())
}

/// L1 distance between the quantized vectors.
pub fn induced_manhattan(x1: &[f64], x2: &[f64], rule: Rounding) -> Result<u64> {
    check_dim(x1.len(), x2.len())?;
    let (a, b) = (quantize(x1, rule)?, quantize(x2, rule)?);
    Ok(a.values.iter().zip(&b.values).map(|(p, q)| p.abs_diff(*q)).sum())
}

/// Count of `+1` entries.
pub fn corner_weight(x: &SpinState) -> usize {
    x.iter().filter(|&s| s == 1).count()
}

/// `G(k) = C(n, k)` for `k = 0..=n`.
pub fn weight_distribution(n: usize) -> Result<Vec<u64>> {
    if n > MAX_DISTRIBUTION_DIM {
        return Err(Error::InvalidInput(format!("weight distribution limited to n <= {MAX_DISTRIBUTION_DIM}")));
    }
    let mut row = Vec::with_capacity(n + 1);
    let mut c: u64 = 1;
    for k in 0..=n as u64 {
        row.push(c);
        c = c * (n as u64 - k) / (k + 1);
    }
    Ok(row)
}

/// `G(k) / 2ⁿ`, the binomial(n, ½) mass function.
pub fn weight_distribution_normalized(n: usize) -> Result<Vec<f64>> {
    let total = (1u64 << n) as f64;
    Ok(weight_distribution(n)?.into_iter().map(|g| g as f64 / total).collect())
}
