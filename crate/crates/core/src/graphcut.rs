//! Weighted undirected graphs as canonical networks.
//!
//! With `W[u][v] = w(u,v)` and `T = 0`, every corner satisfies
//! `cut(x) = S/2 − xᵀWx/4` where `S` is the total edge weight, so maximizing
//! the energy minimizes the cut. Negative weights are allowed.

use std::collections::HashSet;

use serde::Serialize;

use crate::dynamics::{SpinState, UpdatePolicy};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::quadform::{check_dim, energy, Network, WeightMatrix};
use crate::spectral::{spectral_solve_with, EigenConfig};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub w: f64,
}

/// Simple graph on vertices `0..n`; edges are stored with `u < v`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
}

impl Graph {
    /// Endpoints may be given in either order. Self-loops, duplicates,
    /// out-of-range endpoints and non-finite weights are rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize, f64)>) -> Result<Self> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for (a, b, w) in edges {
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            if v >= n {
                return Err(Error::IndexOutOfRange { index: v, n });
            }
            if u == v {
                return Err(Error::InvalidInput(format!("self-loop at vertex {u}")));
            }
            if !w.is_finite() {
                return Err(Error::InvalidInput(format!("non-finite weight on edge ({u}, {v})")));
            }
            if !seen.insert((u, v)) {
                return Err(Error::InvalidInput(format!("duplicate edge ({u}, {v})")));
            }
            out.push(Edge { u, v, w });
        }
        Ok(Graph { n, edges: out })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn total_weight(&self) -> f64 {
        self.edges.iter().map(|e| e.w).sum::<f64>() + 0.0
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CutResult {
    /// `side[i] = +1` places vertex `i` in `U`.
    pub side: SpinState,
    pub cut_weight: f64,
    pub energy: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CutIdentity {
    pub cut: f64,
    pub energy: f64,
    pub total: f64,
}

impl CutIdentity {
    /// `S/2 − energy/4`.
    pub fn predicted_cut(&self) -> f64 {
        0.5 * self.total - 0.25 * self.energy
    }
}

pub fn graph_to_network(g: &Graph) -> Network {
    let mut m = Matrix::zeros(g.n);
    for e in &g.edges {
        m[(e.u, e.v)] = e.w;
        m[(e.v, e.u)] = e.w;
    }
    let w = WeightMatrix::new(m).expect("finite weights");
    Network::pure(w).expect("zero diagonal")
}

/// Total weight of edges whose endpoints lie on opposite sides.
pub fn cut_weight(g: &Graph, x: &SpinState) -> Result<f64> {
    check_dim(g.n, x.len())?;
    // `+ 0.0` turns the empty sum's −0 into 0
    Ok(g.edges.iter().filter(|e| x.get(e.u) != x.get(e.v)).map(|e| e.w).sum::<f64>() + 0.0)
}

pub fn cut_energy_identity(g: &Graph, x: &SpinState) -> Result<CutIdentity> {
    let cut = cut_weight(g, x)?;
    let energy = energy(&graph_to_network(g), x)?;
    Ok(CutIdentity { cut, energy, total: g.total_weight() })
}

/// Spectral heuristic on the graph's network; the returned cut is that of the
/// stable state reached.
pub fn min_cut_spectral(g: &Graph, policy: &UpdatePolicy) -> Result<CutResult> {
    min_cut_spectral_with(g, policy, &EigenConfig::default())
}

pub fn min_cut_spectral_with(g: &Graph, policy: &UpdatePolicy, cfg: &EigenConfig) -> Result<CutResult> {
    if g.n == 0 {
        return Err(Error::InvalidInput("graph has no vertices".into()));
    }
    let report = spectral_solve_with(&graph_to_network(g), policy, cfg)?;
    Ok(CutResult {
        cut_weight: cut_weight(g, &report.final_state)?,
        energy: report.final_energy,
        side: report.final_state,
    })
}
