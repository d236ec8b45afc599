//! Quadratic-form instances and their reduction to canonical networks.
//!
//! An arbitrary instance `(B, T)` with energy `xᵀBx − 2xᵀT` is reduced in three
//! steps: symmetrization (the skew part contributes nothing to `xᵀBx`), removal of
//! the diagonal (a constant `trace(C)` on every corner), and absorption of the
//! threshold vector into one extra node pinned at `+1`.

use log::warn;
use serde::Serialize;

use crate::dynamics::SpinState;
use crate::error::{Error, Result};
use crate::matrix::{dot, norm, Matrix};

/// Asymmetry tolerated on ingestion before a matrix is treated as asymmetric.
pub const SYMMETRY_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct RawInstance {
    b: Matrix,
    t: Vec<f64>,
}

impl RawInstance {
    pub fn new(b: Matrix, t: Vec<f64>) -> Result<Self> {
        let n = b.dim();
        if n == 0 {
            return Err(Error::InvalidInput("instance must have at least one node".into()));
        }
        if t.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: t.len() });
        }
        if !b.is_finite() || t.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidInput("non-finite entry".into()));
        }
        Ok(RawInstance { b, t })
    }

    pub fn pure(b: Matrix) -> Result<Self> {
        let n = b.dim();
        RawInstance::new(b, vec![0.0; n])
    }

    pub fn dim(&self) -> usize {
        self.b.dim()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.b
    }

    pub fn threshold(&self) -> &[f64] {
        &self.t
    }

    /// `xᵀBx − 2xᵀT` evaluated on the raw, unreduced data.
    pub fn energy(&self, x: &SpinState) -> Result<f64> {
        check_dim(self.dim(), x.len())?;
        let xv = x.to_f64();
        Ok(self.b.quad_form(&xv) - 2.0 * dot(&xv, &self.t))
    }
}

/// Symmetric real matrix; `diag_zeroed` records whether every diagonal entry is exactly zero.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WeightMatrix {
    entries: Matrix,
    diag_zeroed: bool,
}

impl WeightMatrix {
    /// Accepts a finite square matrix. Asymmetry above [`SYMMETRY_TOL`] is
    /// repaired by symmetrization with a warning rather than rejected.
    pub fn new(m: Matrix) -> Result<Self> {
        if !m.is_finite() {
            return Err(Error::InvalidInput("non-finite entry".into()));
        }
        let asym = m.max_asymmetry();
        if asym > SYMMETRY_TOL {
            warn!("matrix asymmetric by {asym:e}; replacing with its symmetric part");
        }
        Ok(Self::from_symmetric_part(&m))
    }

    fn from_symmetric_part(m: &Matrix) -> Self {
        let n = m.dim();
        let entries = Matrix::from_fn(n, |i, j| if i == j { m[(i, i)] } else { 0.5 * (m[(i, j)] + m[(j, i)]) });
        let diag_zeroed = (0..n).all(|i| entries[(i, i)] == 0.0);
        WeightMatrix { entries, diag_zeroed }
    }

    pub fn zeros(n: usize) -> Self {
        WeightMatrix { entries: Matrix::zeros(n), diag_zeroed: true }
    }

    pub fn dim(&self) -> usize {
        self.entries.dim()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.entries
    }

    pub fn diag_zeroed(&self) -> bool {
        self.diag_zeroed
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[(i, j)]
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries.as_slice().iter().all(|&v| v >= 0.0)
    }

    pub fn quad_form(&self, x: &[f64]) -> f64 {
        self.entries.quad_form(x)
    }

    pub fn corner_form(&self, x: &SpinState) -> f64 {
        self.entries.quad_form(&x.to_f64())
    }
}

/// Weights plus thresholds. Canonical networks have zero diagonal and `T = 0`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Network {
    w: WeightMatrix,
    t: Vec<f64>,
}

impl Network {
    /// Requires a zero-diagonal weight matrix.
    pub fn new(w: WeightMatrix, t: Vec<f64>) -> Result<Self> {
        if let Some(i) = (0..w.dim()).find(|&i| w.get(i, i) != 0.0) {
            return Err(Error::NonZeroDiagonal { index: i });
        }
        Self::with_diagonal(w, t)
    }

    /// Pure form (`T = 0`) over a zero-diagonal matrix.
    pub fn pure(w: WeightMatrix) -> Result<Self> {
        let n = w.dim();
        Self::new(w, vec![0.0; n])
    }

    /// Accepts a nonzero diagonal. Fields then include the self-coupling
    /// `W[i][i]·x[i]`; used to examine synthesized matrices as built.
    pub fn with_diagonal(w: WeightMatrix, t: Vec<f64>) -> Result<Self> {
        if t.len() != w.dim() {
            return Err(Error::DimensionMismatch { expected: w.dim(), found: t.len() });
        }
        if t.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidInput("non-finite threshold".into()));
        }
        Ok(Network { w, t })
    }

    pub fn dim(&self) -> usize {
        self.w.dim()
    }

    pub fn weights(&self) -> &WeightMatrix {
        &self.w
    }

    pub fn threshold(&self) -> &[f64] {
        &self.t
    }

    pub fn has_zero_threshold(&self) -> bool {
        self.t.iter().all(|&v| v == 0.0)
    }

    pub fn is_canonical(&self) -> bool {
        self.w.diag_zeroed() && self.has_zero_threshold()
    }

    pub fn energy(&self, x: &SpinState) -> Result<f64> {
        energy(self, x)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LebesgueParts {
    pub c_plus: WeightMatrix,
    pub c_minus: WeightMatrix,
}

/// A raw instance reduced to a canonical network, with what is needed to map
/// energies and corners back.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Canonical {
    pub network: Network,
    /// Constant removed with the diagonal: `raw energy = trace + canonical energy`.
    pub trace: f64,
    /// Whether a threshold node was appended as the last index.
    pub augmented: bool,
}

impl Canonical {
    /// Maps a canonical corner back to the original dimension. With an
    /// augmented node `s`, the corner `[x; s]` corresponds to `s·x`.
    pub fn lift(&self, y: &SpinState) -> SpinState {
        if !self.augmented {
            return y.clone();
        }
        let n = y.len() - 1;
        let s = y.get(n);
        SpinState::from_signs((0..n).map(|i| y.get(i) * s))
    }

    /// Inverse of [`lift`](Self::lift) with the extra node set to `+1`.
    pub fn embed(&self, x: &SpinState) -> SpinState {
        if self.augmented {
            SpinState::from_signs(x.iter().chain(std::iter::once(1)))
        } else {
            x.clone()
        }
    }
}

/// `C = ½(B + Bᵀ)`.
pub fn symmetrize(raw: &RawInstance) -> WeightMatrix {
    WeightMatrix::from_symmetric_part(raw.matrix())
}

/// Returns `C̄` with zero diagonal and the removed trace; `xᵀCx = trace + xᵀC̄x` on corners.
pub fn zero_diagonal(c: &WeightMatrix) -> (WeightMatrix, f64) {
    let trace = c.entries.trace();
    let mut entries = c.entries.clone();
    for i in 0..entries.dim() {
        entries[(i, i)] = 0.0;
    }
    (WeightMatrix { entries, diag_zeroed: true }, trace)
}

/// Appends a node coupled to node `i` with weight `−T[i]`. The new network has
/// zero thresholds and `energy([x; +1]) = xᵀWx − 2xᵀT`.
pub fn absorb_threshold(net: &Network) -> Network {
    let n = net.dim();
    let mut entries = Matrix::zeros(n + 1);
    for i in 0..n {
        for j in 0..n {
            entries[(i, j)] = net.w.get(i, j);
        }
        entries[(i, n)] = -net.t[i];
        entries[(n, i)] = -net.t[i];
    }
    let diag_zeroed = (0..=n).all(|i| entries[(i, i)] == 0.0);
    Network { w: WeightMatrix { entries, diag_zeroed }, t: vec![0.0; n + 1] }
}

/// Full reduction of a raw instance. The threshold node is only added when `T ≠ 0`.
pub fn canonicalize(raw: &RawInstance) -> Canonical {
    let (w, trace) = zero_diagonal(&symmetrize(raw));
    let net = Network { w, t: raw.threshold().to_vec() };
    if net.has_zero_threshold() {
        Canonical { network: net, trace, augmented: false }
    } else {
        Canonical { network: absorb_threshold(&net), trace, augmented: true }
    }
}

/// Canonical form of an existing network; a canonical network is returned unchanged.
pub fn canonicalize_network(net: &Network) -> Canonical {
    let (w, trace) = zero_diagonal(&net.w);
    let stripped = Network { w, t: net.t.clone() };
    if stripped.has_zero_threshold() {
        Canonical { network: stripped, trace, augmented: false }
    } else {
        Canonical { network: absorb_threshold(&stripped), trace, augmented: true }
    }
}

/// `xᵀWx − 2xᵀT`.
pub fn energy(net: &Network, x: &SpinState) -> Result<f64> {
    check_dim(net.dim(), x.len())?;
    let xv = x.to_f64();
    Ok(net.w.quad_form(&xv) - 2.0 * dot(&xv, &net.t))
}

/// Strictly lower-triangular `B̲` with `B̲[i][j] = 2·C[i][j]` for `i > j`.
pub fn volterra_form(c: &WeightMatrix) -> Result<Matrix> {
    let n = c.dim();
    if let Some(i) = (0..n).find(|&i| c.get(i, i) != 0.0) {
        return Err(Error::NonZeroDiagonal { index: i });
    }
    Ok(Matrix::from_fn(n, |i, j| if i > j { 2.0 * c.get(i, j) } else { 0.0 }))
}

/// Entrywise split `B = B⁽⁺⁾ − B⁽⁻⁾` with both parts nonnegative.
pub fn positive_negative_parts(b: &Matrix) -> (Matrix, Matrix) {
    let n = b.dim();
    let plus = Matrix::from_fn(n, |i, j| b[(i, j)].max(0.0));
    let minus = Matrix::from_fn(n, |i, j| (-b[(i, j)]).max(0.0));
    (plus, minus)
}

/// Symmetrized positive and negative parts of `B`.
pub fn lebesgue_split(b: &Matrix) -> LebesgueParts {
    let (plus, minus) = positive_negative_parts(b);
    LebesgueParts {
        c_plus: WeightMatrix::from_symmetric_part(&plus),
        c_minus: WeightMatrix::from_symmetric_part(&minus),
    }
}

/// `‖u‖·‖Bu‖`, an upper bound on `uᵀBu`.
pub fn cauchy_schwarz_bound(b: &WeightMatrix, u: &[f64]) -> Result<f64> {
    check_dim(b.dim(), u.len())?;
    Ok(norm(u) * norm(&b.entries.mul_vec(u)))
}

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ENERGY_TOL;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn m(rows: &[&[f64]]) -> Matrix {
        Matrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn random_matrix(rng: &mut ChaCha8Rng, n: usize) -> Matrix {
        Matrix::from_fn(n, |_, _| rng.random_range(-3.0..3.0))
    }

    fn corners(n: usize) -> impl Iterator<Item = SpinState> {
        (0..1u64 << n).map(move |mask| SpinState::from_mask(n, mask))
    }

    #[test]
    fn symmetrize_examples() {
        let raw = RawInstance::pure(m(&[&[0.0, 2.0], &[0.0, 0.0]])).unwrap();
        assert_eq!(symmetrize(&raw).matrix(), &m(&[&[0.0, 1.0], &[1.0, 0.0]]));

        let sym = m(&[&[1.0, -2.0], &[-2.0, 5.0]]);
        let raw = RawInstance::pure(sym.clone()).unwrap();
        assert_eq!(symmetrize(&raw).matrix(), &sym);
    }

    #[test]
    fn symmetrize_preserves_corner_form() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..20 {
            let b = random_matrix(&mut rng, 5);
            let c = symmetrize(&RawInstance::pure(b.clone()).unwrap());
            let x = SpinState::from_mask(5, rng.random_range(0..32));
            let xv = x.to_f64();
            assert!((b.quad_form(&xv) - c.quad_form(&xv)).abs() <= ENERGY_TOL);
        }
    }

    #[test]
    fn non_finite_rejected() {
        let err = RawInstance::pure(m(&[&[f64::NAN]])).unwrap_err();
        assert!(matches!(err, Error::InvalidInput(_)));
        assert!(WeightMatrix::new(m(&[&[f64::INFINITY]])).is_err());
    }

    #[test]
    fn zero_diagonal_examples() {
        let c = WeightMatrix::new(m(&[&[3.0, 1.0], &[1.0, -2.0]])).unwrap();
        let (cbar, trace) = zero_diagonal(&c);
        assert_eq!(cbar.matrix(), &m(&[&[0.0, 1.0], &[1.0, 0.0]]));
        assert!(cbar.diag_zeroed());
        assert_eq!(trace, 1.0);

        let (same, trace) = zero_diagonal(&cbar);
        assert_eq!(same, cbar);
        assert_eq!(trace, 0.0);
    }

    #[test]
    fn zero_diagonal_energy_identity_all_corners() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let c = WeightMatrix::new(random_matrix(&mut rng, 6)).unwrap();
        let (cbar, trace) = zero_diagonal(&c);
        for x in corners(6) {
            assert!((c.corner_form(&x) - trace - cbar.corner_form(&x)).abs() <= ENERGY_TOL);
        }
    }

    #[test]
    fn absorb_zero_threshold() {
        let w = WeightMatrix::new(m(&[&[0.0, 1.0], &[1.0, 0.0]])).unwrap();
        let net = Network::pure(w).unwrap();
        let aug = absorb_threshold(&net);
        assert_eq!(aug.dim(), 3);
        for i in 0..3 {
            assert_eq!(aug.weights().get(2, i), 0.0);
            assert_eq!(aug.weights().get(i, 2), 0.0);
        }
        for x in corners(2) {
            let e = energy(&net, &x).unwrap();
            let y = SpinState::from_signs(x.iter().chain([1]));
            assert_eq!(energy(&aug, &y).unwrap(), e);
        }
    }

    #[test]
    fn absorb_construction_formula() {
        let w = WeightMatrix::new(m(&[&[0.0, 1.0], &[1.0, 0.0]])).unwrap();
        let net = Network::new(w, vec![1.0, -1.0]).unwrap();
        let aug = absorb_threshold(&net);
        let last: Vec<f64> = (0..3).map(|j| aug.weights().get(2, j)).collect();
        assert_eq!(last, vec![-1.0, 1.0, 0.0]);
        assert!(aug.is_canonical());
    }

    #[test]
    fn absorb_preserves_argmax_n3() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..10 {
            let (w, _) = zero_diagonal(&WeightMatrix::new(random_matrix(&mut rng, 3)).unwrap());
            let t: Vec<f64> = (0..3).map(|_| rng.random_range(-2.0..2.0)).collect();
            let net = Network::new(w, t).unwrap();
            let aug = absorb_threshold(&net);
            let best_orig = corners(3).map(|x| energy(&net, &x).unwrap()).fold(f64::MIN, f64::max);
            let best_aug = corners(4).map(|y| energy(&aug, &y).unwrap()).fold(f64::MIN, f64::max);
            assert!((best_orig - best_aug).abs() <= ENERGY_TOL);
            // restricted to s = +1 the energies coincide corner by corner
            for x in corners(3) {
                let y = SpinState::from_signs(x.iter().chain([1]));
                assert!((energy(&net, &x).unwrap() - energy(&aug, &y).unwrap()).abs() <= ENERGY_TOL);
            }
        }
    }

    #[test]
    fn energy_examples() {
        let w = WeightMatrix::new(m(&[&[0.0, 1.0], &[1.0, 0.0]])).unwrap();
        let net = Network::pure(w).unwrap();
        assert_eq!(energy(&net, &SpinState::ones(2)).unwrap(), 2.0);

        let net = Network::new(WeightMatrix::zeros(2), vec![0.5, -1.5]).unwrap();
        let x = SpinState::new(vec![1, -1]).unwrap();
        assert_eq!(energy(&net, &x).unwrap(), -2.0 * (0.5 + 1.5));

        let err = energy(&net, &SpinState::ones(3)).unwrap_err();
        assert_eq!(err, Error::DimensionMismatch { expected: 2, found: 3 });
    }

    #[test]
    fn energy_even_under_negation() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let (w, _) = zero_diagonal(&WeightMatrix::new(random_matrix(&mut rng, 5)).unwrap());
        let net = Network::pure(w).unwrap();
        for x in corners(5) {
            assert_eq!(energy(&net, &x).unwrap(), energy(&net, &x.negated()).unwrap());
        }
    }

    #[test]
    fn volterra_examples() {
        let c = WeightMatrix::new(m(&[&[0.0, 1.0], &[1.0, 0.0]])).unwrap();
        assert_eq!(volterra_form(&c).unwrap(), m(&[&[0.0, 0.0], &[2.0, 0.0]]));
        assert_eq!(volterra_form(&WeightMatrix::zeros(3)).unwrap(), Matrix::zeros(3));

        let diag = WeightMatrix::new(m(&[&[1.0, 0.0], &[0.0, 0.0]])).unwrap();
        assert_eq!(volterra_form(&diag).unwrap_err(), Error::NonZeroDiagonal { index: 0 });
    }

    #[test]
    fn volterra_preserves_corner_form() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let (c, _) = zero_diagonal(&WeightMatrix::new(random_matrix(&mut rng, 5)).unwrap());
        let lower = volterra_form(&c).unwrap();
        for x in corners(5) {
            assert!((lower.quad_form(&x.to_f64()) - c.corner_form(&x)).abs() <= ENERGY_TOL);
        }
    }

    #[test]
    fn lebesgue_examples() {
        let b = m(&[&[0.0, -2.0], &[3.0, 0.0]]);
        let (plus, minus) = positive_negative_parts(&b);
        assert_eq!(plus, m(&[&[0.0, 0.0], &[3.0, 0.0]]));
        assert_eq!(minus, m(&[&[0.0, 2.0], &[0.0, 0.0]]));

        let parts = lebesgue_split(&m(&[&[1.0, 2.0], &[0.0, 4.0]]));
        assert_eq!(parts.c_minus, WeightMatrix::zeros(2));
        assert!(parts.c_plus.is_nonnegative());
    }

    #[test]
    fn lebesgue_identity_all_corners() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let b = random_matrix(&mut rng, 4);
        let parts = lebesgue_split(&b);
        for x in corners(4) {
            let xv = x.to_f64();
            let lhs = b.quad_form(&xv);
            let rhs = parts.c_plus.quad_form(&xv) - parts.c_minus.quad_form(&xv);
            assert!((lhs - rhs).abs() <= ENERGY_TOL);
        }
    }

    #[test]
    fn cauchy_schwarz_examples() {
        let w = WeightMatrix::new(m(&[&[0.0, 1.0], &[1.0, 0.0]])).unwrap();
        // eigenvector [1,1] with eigenvalue 1: bound = λ‖u‖² = 2
        let u = [1.0, 1.0];
        let bound = cauchy_schwarz_bound(&w, &u).unwrap();
        assert!((bound - 2.0).abs() < 1e-15);
        assert!((bound - w.quad_form(&u)).abs() < 1e-15);
        assert_eq!(cauchy_schwarz_bound(&w, &[0.0, 0.0]).unwrap(), 0.0);

        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let w = WeightMatrix::new(random_matrix(&mut rng, 4)).unwrap();
            let u: Vec<f64> = (0..4).map(|_| rng.random_range(-1.0..1.0)).collect();
            assert!(w.quad_form(&u) <= cauchy_schwarz_bound(&w, &u).unwrap() + 1e-12);
        }
    }

    #[test]
    fn canonicalize_is_idempotent() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let raw = RawInstance::new(random_matrix(&mut rng, 4), vec![0.5, 0.0, -1.0, 2.0]).unwrap();
        let canon = canonicalize(&raw);
        assert!(canon.augmented);
        let again = canonicalize_network(&canon.network);
        assert_eq!(again.network, canon.network);
        assert_eq!(again.trace, 0.0);
        assert!(!again.augmented);
    }

    #[test]
    fn canonical_energy_chain() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let t: Vec<f64> = (0..4).map(|_| rng.random_range(-1.0..1.0)).collect();
        let raw = RawInstance::new(random_matrix(&mut rng, 4), t).unwrap();
        let canon = canonicalize(&raw);
        for x in corners(4) {
            let y = canon.embed(&x);
            let chained = canon.trace + energy(&canon.network, &y).unwrap();
            assert!((raw.energy(&x).unwrap() - chained).abs() <= ENERGY_TOL);
            assert_eq!(canon.lift(&y), x);
            assert_eq!(canon.lift(&y.negated()), x);
        }
    }
}
