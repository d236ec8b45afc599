//! Weight matrices with prescribed stable and anti-stable corners.
//!
//! Hopfield's outer-product rule `W = Σⱼ(XⱼXⱼᵀ − I)` over `S` mutually orthogonal
//! corners gives `W·Xₖ = (N − S)·Xₖ`. The spectral variant places each stable
//! corner on eigenvalue `μⱼ` and each anti-stable corner on `−βⱼ`. Two distinct
//! orthogonal corners only exist in even dimension.

use serde::Serialize;

use crate::dynamics::SpinState;
use crate::error::{Error, Result, SynthesisViolation};
use crate::matrix::Matrix;
use crate::quadform::WeightMatrix;
use crate::spectral::{sign_corner, symmetric_eigen, ZeroAs};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PatternSet {
    patterns: Vec<SpinState>,
    n: usize,
}

impl PatternSet {
    pub fn new(patterns: Vec<SpinState>, n: usize) -> Result<Self> {
        validate(patterns.iter(), n, n.saturating_sub(1))?;
        Ok(PatternSet { patterns, n })
    }

    pub fn patterns(&self) -> &[SpinState] {
        &self.patterns
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

fn validate<'a>(patterns: impl Iterator<Item = &'a SpinState> + Clone, n: usize, max_count: usize) -> Result<()> {
    let count = patterns.clone().count();
    if count == 0 {
        return Err(SynthesisViolation::Empty.into());
    }
    if let Some((index, p)) = patterns.clone().enumerate().find(|(_, p)| p.len() != n) {
        return Err(SynthesisViolation::Length { index, expected: n, found: p.len() }.into());
    }
    if count > max_count {
        return Err(SynthesisViolation::TooMany { count, n, max: max_count }.into());
    }
    if count >= 2 && n % 2 == 1 {
        return Err(SynthesisViolation::OddDimension { n }.into());
    }
    let all: Vec<&SpinState> = patterns.collect();
    for i in 0..all.len() {
        for j in (i + 1)..all.len() {
            let inner = all[i].inner(all[j]);
            if inner != 0 {
                return Err(SynthesisViolation::NotOrthogonal { i, j, inner }.into());
            }
        }
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumSpec {
    stable: Vec<(SpinState, f64)>,
    antistable: Vec<(SpinState, f64)>,
    n: usize,
}

impl SpectrumSpec {
    /// Every pattern across both lists must be mutually orthogonal; `μ`, `β` positive.
    /// Up to `n` patterns in total are allowed, since each carries its own eigenvalue.
    pub fn new(stable: Vec<(SpinState, f64)>, antistable: Vec<(SpinState, f64)>) -> Result<Self> {
        let n = stable.iter().chain(&antistable).map(|(p, _)| p.len()).next().unwrap_or(0);
        for (index, (_, v)) in stable.iter().chain(&antistable).enumerate() {
            if v.is_nan() || *v <= 0.0 || !v.is_finite() {
                return Err(SynthesisViolation::NonPositive { index, value: *v }.into());
            }
        }
        validate(stable.iter().chain(&antistable).map(|(p, _)| p), n, n)?;
        Ok(SpectrumSpec { stable, antistable, n })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn stable(&self) -> &[(SpinState, f64)] {
        &self.stable
    }

    pub fn antistable(&self) -> &[(SpinState, f64)] {
        &self.antistable
    }

    /// `Σμ − Σβ`, which equals `trace(W)`; zero when the prescribed eigenvalues balance.
    pub fn trace_balance(&self) -> f64 {
        self.stable.iter().map(|p| p.1).sum::<f64>() - self.antistable.iter().map(|p| p.1).sum::<f64>()
    }
}

/// `W = Σⱼ(XⱼXⱼᵀ − I)`; zero diagonal, `W·Xₖ = (N − S)·Xₖ`.
pub fn hopfield_synthesize(ps: &PatternSet) -> WeightMatrix {
    let n = ps.n;
    let s = ps.patterns.len() as f64;
    let mut m = Matrix::identity(n).scale(-s);
    for p in &ps.patterns {
        m.add_outer(1.0, &p.to_f64());
    }
    WeightMatrix::new(m).expect("finite")
}

/// `W = Σ(μⱼ/N)XⱼXⱼᵀ − Σ(βⱼ/N)YⱼYⱼᵀ`. The diagonal is left as built.
pub fn spectral_synthesize(spec: &SpectrumSpec) -> WeightMatrix {
    let n = spec.n;
    let mut m = Matrix::zeros(n);
    for (p, mu) in &spec.stable {
        m.add_outer(mu / n as f64, &p.to_f64());
    }
    for (p, beta) in &spec.antistable {
        m.add_outer(-beta / n as f64, &p.to_f64());
    }
    WeightMatrix::new(m).expect("finite")
}

/// Two orthogonal corners exist exactly when `n` is even.
pub fn orthogonal_pattern_exists(n: usize) -> bool {
    n >= 2 && n.is_multiple_of(2)
}

/// Rows of the Sylvester–Hadamard matrix of order `n` (a power of two), mutually orthogonal.
pub fn hadamard_patterns(n: usize) -> Result<Vec<SpinState>> {
    if n == 0 || !n.is_power_of_two() {
        return Err(Error::InvalidInput(format!("Hadamard order must be a power of two, got {n}")));
    }
    Ok((0..n)
        .map(|i| SpinState::from_signs((0..n).map(|j| if (i & j).count_ones() % 2 == 0 { 1 } else { -1 })))
        .collect())
}

/// If `W = γ·f·fᵀ` with `γ > 0` (entrywise within 1e−8 relative to the largest
/// entry), returns `sign(f)`, which maximizes `xᵀWx = γ(fᵀx)²` over corners.
/// Of the two optimal signs, the one with a leading `+1` is returned.
pub fn rank_one_global(w: &WeightMatrix) -> Option<SpinState> {
    let eig = symmetric_eigen(w).ok()?;
    let (idx, &gamma) = eig.values.iter().enumerate().max_by(|a, b| a.1.abs().total_cmp(&b.1.abs()))?;
    if gamma.is_nan() || gamma <= 0.0 {
        return None;
    }
    let f = &eig.vectors[idx];
    let mut approx = Matrix::zeros(w.dim());
    approx.add_outer(gamma, f);
    let scale = w.matrix().as_slice().iter().fold(1.0f64, |a, v| a.max(v.abs()));
    if approx.max_abs_diff(w.matrix()) > 1e-8 * scale {
        return None;
    }
    // f and −f give the same W; report the sign with the first nonzero entry positive
    let flip = f.iter().find(|c| c.abs() > 1e-12).is_some_and(|&c| c < 0.0);
    let f: Vec<f64> = f.iter().map(|&c| if flip { -c } else { c }).collect();
    Some(sign_corner(&f, ZeroAs::Plus))
}
