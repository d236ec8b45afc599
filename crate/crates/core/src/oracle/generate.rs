//! Seeded instance generators for audits.
//!
//! Instance `k` of a run with seed `s` draws from ChaCha8 seeded with `s` on
//! stream `k`, so instances are independent of generation order.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::{Deserialize, Serialize};

use crate::dynamics::SpinState;
use crate::graphcut::{graph_to_network, Graph};
use crate::matrix::Matrix;
use crate::quadform::{zero_diagonal, Network, WeightMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InstanceClass {
    /// i.i.d. standard normal, symmetrized, zero diagonal.
    Gaussian,
    /// i.i.d. uniform [0, 1], symmetrized, zero diagonal.
    Nonnegative,
    /// Erdős–Rényi with edge probability ½, weights uniform [−1, 1].
    SparseGraph,
    /// A random corner is the unique top eigenvector; zero diagonal.
    Eigencorner,
    /// Caller-supplied instances.
    Custom,
}

impl InstanceClass {
    pub const GENERATED: [InstanceClass; 4] =
        [InstanceClass::Gaussian, InstanceClass::Nonnegative, InstanceClass::SparseGraph, InstanceClass::Eigencorner];

    pub fn label(self) -> &'static str {
        match self {
            InstanceClass::Gaussian => "gaussian",
            InstanceClass::Nonnegative => "nonnegative",
            InstanceClass::SparseGraph => "sparse_graph",
            InstanceClass::Eigencorner => "eigencorner",
            InstanceClass::Custom => "custom",
        }
    }
}

impl fmt::Display for InstanceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for InstanceClass {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "gaussian" => Ok(InstanceClass::Gaussian),
            "nonnegative" => Ok(InstanceClass::Nonnegative),
            "sparse_graph" | "sparse-graph" => Ok(InstanceClass::SparseGraph),
            "eigencorner" => Ok(InstanceClass::Eigencorner),
            other => Err(format!(
                "unknown instance class `{other}` (expected gaussian, nonnegative, sparse_graph or eigencorner)"
            )),
        }
    }
}

pub fn instance_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Canonical network number `index` of `class` in dimension `n`.
///
/// # Panics
/// For [`InstanceClass::Custom`], which has no generator.
pub fn generate(class: InstanceClass, seed: u64, index: u64, n: usize) -> Network {
    let mut rng = instance_rng(seed, index);
    match class {
        InstanceClass::Gaussian => symmetric_zero_diag(n, || StandardNormal.sample(&mut rng)),
        InstanceClass::Nonnegative => symmetric_zero_diag(n, || rng.random_range(0.0..=1.0)),
        InstanceClass::SparseGraph => {
            let mut edges = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.random_bool(0.5) {
                        edges.push((u, v, rng.random_range(-1.0..=1.0)));
                    }
                }
            }
            graph_to_network(&Graph::new(n, edges).expect("generated edges are valid"))
        }
        InstanceClass::Eigencorner => eigencorner_instance(&mut rng, n),
        InstanceClass::Custom => panic!("custom instances are supplied by the caller"),
    }
}

fn symmetric_zero_diag(n: usize, mut sample: impl FnMut() -> f64) -> Network {
    let b = Matrix::from_fn(n, |_, _| sample());
    let (w, _) = zero_diagonal(&WeightMatrix::new(b).expect("finite samples"));
    Network::pure(w).expect("zero diagonal")
}

/// `W = (μ/n)(XXᵀ − I) + D R D` with `D = diag(X)` and `R` a zero-diagonal
/// symmetric matrix with zero row sums built from signed 4-cycles. Then
/// `WX = μ(n−1)/n · X`, every other eigenvalue is at most `−μ/n + λ_max(R)`, and
/// `μ` exceeds the largest absolute row sum of `R`, so `X/√n` is the unique top
/// eigenvector.
fn eigencorner_instance(rng: &mut ChaCha8Rng, n: usize) -> Network {
    let x = SpinState::from_signs((0..n).map(|_| if rng.random_bool(0.5) { 1 } else { -1 }));
    let mut r = Matrix::zeros(n);
    if n >= 4 {
        for _ in 0..2 * n {
            let mut idx: Vec<usize> = Vec::with_capacity(4);
            while idx.len() < 4 {
                let k = rng.random_range(0..n);
                if !idx.contains(&k) {
                    idx.push(k);
                }
            }
            let (i, j, k, l) = (idx[0], idx[1], idx[2], idx[3]);
            let c: f64 = StandardNormal.sample(rng);
            for (a, b, s) in [(i, j, c), (k, l, c), (i, l, -c), (k, j, -c)] {
                r[(a, b)] += s;
                r[(b, a)] += s;
            }
        }
    }
    let mu = r.max_abs_row_sum() + 1.0;
    let xs = x.to_f64();
    let m =
        Matrix::from_fn(n, |a, b| if a == b { 0.0 } else { mu / n as f64 * xs[a] * xs[b] + xs[a] * r[(a, b)] * xs[b] });
    Network::pure(WeightMatrix::new(m).expect("finite")).expect("zero diagonal")
}
