//! Spectral tools: top eigenpair, the sign-of-eigenvector initialization for the
//! serial dynamics, eigenvector corners, and Rayleigh-quotient bounds.

pub mod eigen;

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::dynamics::{is_antistable, is_stable, run_serial, RunReport, SpinState, UpdatePolicy};
use crate::error::{Error, Result};
use crate::matrix::{dot, norm, Matrix};
use crate::quadform::{check_dim, Network, WeightMatrix};

pub use eigen::SymmetricEigen;

/// Above this dimension the top eigenpair comes from shifted power iteration.
pub const JACOBI_MAX_DIM: usize = 512;

/// Components with magnitude below this are stored as exact zeros.
const COMPONENT_SNAP: f64 = 1e-14;

/// Gap between the two largest eigenvalues below which the top eigenspace is
/// flagged as degenerate.
pub const DEGENERACY_GAP: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ZeroAs {
    #[default]
    Plus,
    Minus,
}

impl ZeroAs {
    pub fn spin(self) -> i8 {
        match self {
            ZeroAs::Plus => 1,
            ZeroAs::Minus => -1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenConfig {
    pub tol: f64,
    /// Rotation budget (Jacobi) or iteration budget (power); `None` means `10·N²`.
    pub max_iter: Option<usize>,
    pub zero_as: ZeroAs,
}

impl Default for EigenConfig {
    fn default() -> Self {
        EigenConfig { tol: 1e-10, max_iter: None, zero_as: ZeroAs::Plus }
    }
}

impl EigenConfig {
    fn budget(&self, n: usize) -> usize {
        self.max_iter.unwrap_or(10 * n * n)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EigenPair {
    pub value: f64,
    pub vector: Vec<f64>,
    pub residual: f64,
    pub iterations: usize,
    /// Second largest eigenvalue, when a full decomposition was computed.
    pub second_value: Option<f64>,
}

impl EigenPair {
    pub fn top_degenerate(&self) -> bool {
        self.second_value.is_some_and(|s| (self.value - s).abs() < DEGENERACY_GAP)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Shortcut {
    None,
    Perron,
    Eigencorner,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectralSolveReport {
    pub eigenpair: EigenPair,
    pub init_corner: SpinState,
    pub run: RunReport,
    pub final_state: SpinState,
    pub final_energy: f64,
    pub shortcut_used: Shortcut,
    pub top_degenerate: bool,
}

/// Full decomposition of a symmetric matrix with the default rotation budget.
pub fn symmetric_eigen(w: &WeightMatrix) -> Result<SymmetricEigen> {
    let n = w.dim();
    eigen::jacobi(w.matrix(), 10 * n * n + 10)
}

/// Eigenpair of the algebraically largest eigenvalue, residual at most `tol`.
///
/// The vector is signed so that its components sum to a nonnegative value (ties
/// broken by the first nonzero component), which makes a Perron vector positive.
pub fn max_eigenpair(w: &WeightMatrix, tol: f64, max_iter: usize) -> Result<EigenPair> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidInput("tolerance must be positive".into()));
    }
    let n = w.dim();
    if n == 0 {
        return Err(Error::InvalidInput("empty matrix".into()));
    }
    let m = w.matrix();
    let (value, vector, iterations, second_value) = if n <= JACOBI_MAX_DIM {
        let full = eigen::jacobi(m, max_iter)?;
        let second = full.values.get(1).copied();
        (full.values[0], full.vectors[0].clone(), full.rotations, second)
    } else {
        let (value, vector, _, iterations) = eigen::shifted_power(m, tol, max_iter)?;
        (value, vector, iterations, None)
    };
    let vector = canonical_sign(vector);
    let residual = residual(m, value, &vector);
    if residual > tol {
        return Err(Error::EigenBudget { iterations, best_residual: residual });
    }
    Ok(EigenPair { value, vector, residual, iterations, second_value })
}

fn canonical_sign(mut v: Vec<f64>) -> Vec<f64> {
    for c in v.iter_mut() {
        if c.abs() < COMPONENT_SNAP {
            *c = 0.0;
        }
    }
    let sum: f64 = v.iter().sum();
    let flip = if sum.abs() > 1e-12 { sum < 0.0 } else { v.iter().find(|c| c.abs() > 1e-12).is_some_and(|&c| c < 0.0) };
    if flip {
        v.iter_mut().for_each(|c| *c = -*c);
    }
    v
}

fn residual(m: &Matrix, value: f64, v: &[f64]) -> f64 {
    let mv = m.mul_vec(v);
    norm(&mv.iter().zip(v).map(|(a, b)| a - value * b).collect::<Vec<_>>())
}

/// Componentwise sign, exact zeros mapped to `zero_as`.
pub fn sign_corner(v: &[f64], zero_as: ZeroAs) -> SpinState {
    SpinState::from_signs(v.iter().map(|&c| {
        if c > 0.0 {
            1
        } else if c < 0.0 {
            -1
        } else {
            zero_as.spin()
        }
    }))
}

/// Whether the support graph of `w` (edges where `w[i][j] ≠ 0`, `i ≠ j`) is connected.
pub fn is_irreducible(w: &WeightMatrix) -> bool {
    let n = w.dim();
    if n == 0 {
        return false;
    }
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([0]);
    seen[0] = true;
    while let Some(i) = queue.pop_front() {
        for (j, s) in seen.iter_mut().enumerate() {
            if !*s && i != j && w.get(i, j) != 0.0 {
                *s = true;
                queue.push_back(j);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Top eigenvector, its sign corner, then serial dynamics from that corner.
///
/// Nonnegative irreducible weights short-circuit to the all-ones state, and a sign
/// corner that is itself an eigenvector with positive eigenvalue is returned as is.
/// The result is a stable state; global optimality is not claimed.
pub fn spectral_solve(net: &Network, policy: &UpdatePolicy) -> Result<SpectralSolveReport> {
    spectral_solve_with(net, policy, &EigenConfig::default())
}

pub fn spectral_solve_with(net: &Network, policy: &UpdatePolicy, cfg: &EigenConfig) -> Result<SpectralSolveReport> {
    if !net.weights().diag_zeroed() {
        return Err(Error::NotCanonical("nonzero diagonal"));
    }
    if !net.has_zero_threshold() {
        return Err(Error::NotCanonical("nonzero threshold"));
    }
    let w = net.weights();
    let n = w.dim();
    let eigenpair = max_eigenpair(w, cfg.tol, cfg.budget(n))?;
    let init_corner = sign_corner(&eigenpair.vector, cfg.zero_as);

    let (start, shortcut_used) = if w.is_nonnegative() && is_irreducible(w) {
        (SpinState::ones(n), Shortcut::Perron)
    } else if eigencorner(w, &init_corner).is_some_and(|e| e.rho > 0.0) {
        (init_corner.clone(), Shortcut::Eigencorner)
    } else {
        (init_corner.clone(), Shortcut::None)
    };

    let run = run_serial(net, &start, policy)?;
    Ok(SpectralSolveReport {
        top_degenerate: eigenpair.top_degenerate(),
        final_state: run.final_state().clone(),
        final_energy: run.final_energy(),
        eigenpair,
        init_corner,
        run,
        shortcut_used,
    })
}

/// A corner satisfying `Wx = ρx`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Eigencorner {
    pub rho: f64,
    pub stable: bool,
    pub antistable: bool,
}

/// Checks `Wx = ρx` (relative tolerance 1e−8) and reports the stability that follows.
pub fn eigencorner(w: &WeightMatrix, x: &SpinState) -> Option<Eigencorner> {
    if w.dim() != x.len() || x.is_empty() {
        return None;
    }
    let xv = x.to_f64();
    let wx = w.matrix().mul_vec(&xv);
    let rho = dot(&wx, &xv) / x.len() as f64;
    let err = norm(&wx.iter().zip(&xv).map(|(a, b)| a - rho * b).collect::<Vec<_>>());
    if err > 1e-8 * norm(&wx).max(1.0) {
        return None;
    }
    let net = Network::with_diagonal(w.clone(), vec![0.0; w.dim()]).ok()?;
    Some(Eigencorner {
        rho,
        stable: is_stable(&net, x, &UpdatePolicy::default()).unwrap_or(false),
        antistable: is_antistable(&net, x).unwrap_or(false),
    })
}

pub fn is_eigencorner_stable(w: &WeightMatrix, x: &SpinState) -> bool {
    eigencorner(w, x).is_some()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SphereExpansion {
    pub lhs: f64,
    pub rhs: f64,
    pub gap: f64,
}

/// Expands `yᵀWy` around the top eigenvector `x₀`:
/// `yᵀWy = μ + 2μ(y−x₀)ᵀx₀ + (y−x₀)ᵀW(y−x₀)`. The gap (everything after `μ`)
/// is never positive for unit `y`.
pub fn sphere_expansion(w: &WeightMatrix, top: &EigenPair, y: &[f64]) -> Result<SphereExpansion> {
    check_dim(w.dim(), y.len())?;
    if (norm(y) - 1.0).abs() > 1e-8 {
        return Err(Error::InvalidInput("y must be a unit vector".into()));
    }
    let mu = top.value;
    let d: Vec<f64> = y.iter().zip(&top.vector).map(|(a, b)| a - b).collect();
    let gap = 2.0 * mu * dot(&d, &top.vector) + w.quad_form(&d);
    Ok(SphereExpansion { lhs: w.quad_form(y), rhs: mu + gap, gap })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RadiusBound {
    /// `(1/N)·ΣᵢΣⱼ W[i][j]`.
    pub lb: f64,
    /// Minimum absolute row sum.
    pub tau: f64,
}

/// For nonnegative `W`: `tau ≤ lb ≤ μ_max`.
pub fn spectral_radius_lower_bound(w: &WeightMatrix) -> RadiusBound {
    let n = w.dim().max(1) as f64;
    RadiusBound { lb: w.matrix().total_sum() / n, tau: w.matrix().min_abs_row_sum() }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Sandwich {
    pub lower: f64,
    pub upper: f64,
    pub value: f64,
}

/// `N·μ_min ≤ xᵀWx ≤ N·μ_max`.
pub fn rayleigh_sandwich(w: &WeightMatrix, x: &SpinState) -> Result<Sandwich> {
    check_dim(w.dim(), x.len())?;
    let eig = symmetric_eigen(w)?;
    let n = w.dim() as f64;
    Ok(Sandwich { lower: n * eig.min_value(), upper: n * eig.max_value(), value: w.corner_form(x) })
}

/// `(1/N)·ΣᵢΣⱼ W[i][j]` over entrywise nonnegative matrices.
pub fn matrix_sum_norm(w: &Matrix) -> Result<f64> {
    let n = w.dim();
    for i in 0..n {
        for j in 0..n {
            if w[(i, j)] < 0.0 {
                return Err(Error::NegativeEntry { row: i, col: j, value: w[(i, j)] });
            }
        }
    }
    Ok(if n == 0 { 0.0 } else { w.total_sum() / n as f64 })
}
