//! Exhaustive ground truth over all corners, and the audit of the spectral
//! heuristic against it.
//!
//! Corners are visited in Gray-code order so each step flips one spin and the
//! energy and local fields are updated in `O(N)`. The corner space is split into
//! a fixed number of blocks (independent of the thread count); blocks run in
//! parallel and are merged in block order, so results are deterministic.

pub mod generate;

use rayon::prelude::*;
use serde::Serialize;

use crate::dynamics::{SpinState, UpdatePolicy, ZERO_FIELD_TOL};
use crate::error::{Error, Result};
use crate::graphcut::{cut_weight, CutResult, Graph};
use crate::quadform::{energy, Network};
use crate::spectral::{spectral_solve_with, EigenConfig, Shortcut};
use crate::ENERGY_TOL;

pub use generate::{generate, InstanceClass};

/// Largest dimension accepted by exhaustive enumeration.
pub const MAX_ENUM_DIM: usize = 24;
/// Largest dimension accepted by the audit.
pub const MAX_AUDIT_DIM: usize = 20;

const BLOCK_BITS: usize = 6;
const RESYNC_EVERY: u64 = 1 << 12;

/// Energies tied within [`ENERGY_TOL`] of the extremum, as corner masks.
#[derive(Debug, Clone, PartialEq)]
pub struct Extremum {
    pub energy: f64,
    pub masks: Vec<u32>,
    n: usize,
}

impl Serialize for Extremum {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Extremum", 2)?;
        st.serialize_field("energy", &self.energy)?;
        st.serialize_field("states", &self.states().collect::<Vec<_>>())?;
        st.end()
    }
}

impl Extremum {
    pub fn states(&self) -> impl Iterator<Item = SpinState> + '_ {
        self.masks.iter().map(|&m| SpinState::from_mask(self.n, u64::from(m)))
    }

    pub fn contains(&self, x: &SpinState) -> bool {
        self.masks.binary_search(&(x.to_mask() as u32)).is_ok()
    }
}

/// Every corner classified. Corners are stored as masks (bit `i` set means spin
/// `i` is −1), sorted ascending.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CornerCensus {
    pub n: usize,
    pub corners_visited: u64,
    pub global_max: Extremum,
    pub global_min: Extremum,
    pub stable: MaskList,
    pub antistable: MaskList,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MaskList {
    pub n: usize,
    pub masks: Vec<u32>,
}

impl MaskList {
    pub fn len(&self) -> usize {
        self.masks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.masks.is_empty()
    }

    pub fn states(&self) -> impl Iterator<Item = SpinState> + '_ {
        self.masks.iter().map(|&m| SpinState::from_mask(self.n, u64::from(m)))
    }

    pub fn contains(&self, x: &SpinState) -> bool {
        self.masks.binary_search(&(x.to_mask() as u32)).is_ok()
    }
}

impl Serialize for MaskList {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.states())
    }
}

impl CornerCensus {
    pub fn is_stable(&self, x: &SpinState) -> bool {
        self.stable.contains(x)
    }

    pub fn is_antistable(&self, x: &SpinState) -> bool {
        self.antistable.contains(x)
    }
}

struct Walker<'a> {
    net: &'a Network,
    x: Vec<f64>,
    field: Vec<f64>,
    energy: f64,
    mask: u64,
}

impl<'a> Walker<'a> {
    fn at(net: &'a Network, mask: u64) -> Self {
        let mut w = Walker { net, x: Vec::new(), field: Vec::new(), energy: 0.0, mask };
        w.resync();
        w
    }

    fn resync(&mut self) {
        let n = self.net.dim();
        let state = SpinState::from_mask(n, self.mask);
        self.x = state.to_f64();
        let m = self.net.weights().matrix();
        let t = self.net.threshold();
        self.field = m.mul_vec(&self.x).iter().zip(t).map(|(f, ti)| f - ti).collect();
        self.energy = energy(self.net, &state).expect("dimension checked");
    }

    fn flip(&mut self, k: usize) {
        let m = self.net.weights().matrix();
        let xk = self.x[k];
        let wkk = m[(k, k)];
        self.energy -= 4.0 * xk * (self.field[k] - wkk * xk);
        for (j, f) in self.field.iter_mut().enumerate() {
            *f -= 2.0 * xk * m[(j, k)];
        }
        self.x[k] = -xk;
        self.mask ^= 1 << k;
    }

    fn stable(&self) -> bool {
        self.x.iter().zip(&self.field).all(|(x, f)| x * f >= -ZERO_FIELD_TOL)
    }

    fn antistable(&self) -> bool {
        self.x.iter().zip(&self.field).all(|(x, f)| x * f <= ZERO_FIELD_TOL)
    }
}

/// Visits the `2^bits` masks `base ^ gray(i)`, calling `visit` at each.
fn gray_block(net: &Network, base: u64, bits: usize, mut visit: impl FnMut(&Walker<'_>)) {
    let mut walker = Walker::at(net, base);
    visit(&walker);
    for i in 1..(1u64 << bits) {
        walker.flip(i.trailing_zeros() as usize);
        if i % RESYNC_EVERY == 0 {
            walker.resync();
        }
        visit(&walker);
    }
}

struct Tracker {
    best: f64,
    hits: Vec<(u32, f64)>,
}

impl Tracker {
    fn new() -> Self {
        Tracker { best: f64::NEG_INFINITY, hits: Vec::new() }
    }

    /// Tracks the maximum of `e` (callers negate for minimum tracking).
    fn offer(&mut self, mask: u32, e: f64) {
        if e > self.best {
            self.best = e;
            self.hits.retain(|&(_, h)| h >= e - ENERGY_TOL);
            self.hits.push((mask, e));
        } else if e >= self.best - ENERGY_TOL {
            self.hits.push((mask, e));
        }
    }
}

struct BlockResult {
    max: Tracker,
    min: Tracker,
    stable: Vec<u32>,
    antistable: Vec<u32>,
    visited: u64,
}

/// Enumerates every corner. With `T = 0` only corners with the last spin at
/// `+1` are walked and each result is mirrored by negation.
pub fn census(net: &Network) -> Result<CornerCensus> {
    let n = net.dim();
    if n > MAX_ENUM_DIM {
        return Err(Error::EnumerationBudget { n, max: MAX_ENUM_DIM });
    }
    if n == 0 {
        return Err(Error::InvalidInput("empty network".into()));
    }
    let mirror = net.has_zero_threshold();
    let full: u64 = (1u64 << n) - 1;
    let free = if mirror { n - 1 } else { n };
    let block_bits = free.min(BLOCK_BITS);
    let inner = free - block_bits;
    let pure = net.has_zero_threshold();

    let blocks: Vec<BlockResult> = (0..1u64 << block_bits)
        .into_par_iter()
        .map(|b| {
            let mut res = BlockResult {
                max: Tracker::new(),
                min: Tracker::new(),
                stable: Vec::new(),
                antistable: Vec::new(),
                visited: 0,
            };
            gray_block(net, b << inner, inner, |w| {
                let mask = w.mask as u32;
                res.visited += 1;
                res.max.offer(mask, w.energy);
                res.min.offer(mask, -w.energy);
                if w.stable() {
                    res.stable.push(mask);
                }
                if pure && w.antistable() {
                    res.antistable.push(mask);
                }
            });
            res
        })
        .collect();

    let merge = |pick: fn(&BlockResult) -> &Tracker, sign: f64| -> Extremum {
        let best = blocks.iter().map(|b| pick(b).best).fold(f64::NEG_INFINITY, f64::max);
        let mut masks: Vec<u32> = blocks
            .iter()
            .flat_map(|b| pick(b).hits.iter())
            .filter(|&&(_, e)| e >= best - ENERGY_TOL)
            .map(|&(m, _)| m)
            .collect();
        if mirror {
            let mirrored: Vec<u32> = masks.iter().map(|&m| (u64::from(m) ^ full) as u32).collect();
            masks.extend(mirrored);
        }
        masks.sort_unstable();
        Extremum { energy: sign * best, masks, n }
    };
    let global_max = merge(|b| &b.max, 1.0);
    let global_min = merge(|b| &b.min, -1.0);

    let collect = |pick: fn(&BlockResult) -> &Vec<u32>| -> MaskList {
        let mut masks: Vec<u32> = blocks.iter().flat_map(|b| pick(b).iter().copied()).collect();
        if mirror {
            let mirrored: Vec<u32> = masks.iter().map(|&m| (u64::from(m) ^ full) as u32).collect();
            masks.extend(mirrored);
        }
        masks.sort_unstable();
        MaskList { n, masks }
    };
    let stable = collect(|b| &b.stable);
    let antistable = collect(|b| &b.antistable);
    let visited = blocks.iter().map(|b| b.visited).sum::<u64>();

    Ok(CornerCensus {
        n,
        corners_visited: if mirror { 2 * visited } else { visited },
        global_max,
        global_min,
        stable,
        antistable,
    })
}

/// Minimum cut over all bipartitions, with every minimizing side.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MinCut {
    pub best: CutResult,
    /// All minimizing sides with vertex 0 on the `+1` side.
    pub witnesses: Vec<SpinState>,
    pub require_nonempty: bool,
}

/// Enumerates bipartitions with vertex 0 fixed on the `+1` side. The trivial
/// partition (everything on one side, cut 0) counts unless `require_nonempty`.
pub fn brute_min_cut(g: &Graph, require_nonempty: bool) -> Result<MinCut> {
    let n = g.n();
    if n > MAX_ENUM_DIM {
        return Err(Error::EnumerationBudget { n, max: MAX_ENUM_DIM });
    }
    if n == 0 || (require_nonempty && n < 2) {
        return Err(Error::InvalidInput("no admissible bipartition".into()));
    }
    // weighted adjacency lists; cut change on flipping k is x_k·Σ_j w_kj x_j
    let mut adj: Vec<Vec<(usize, f64)>> = vec![Vec::new(); n];
    for e in g.edges() {
        adj[e.u].push((e.v, e.w));
        adj[e.v].push((e.u, e.w));
    }
    let mut x = vec![1.0f64; n];
    let mut h: Vec<f64> = adj.iter().map(|a| a.iter().map(|&(_, w)| w).sum()).collect();
    let mut cut = 0.0;
    let mut mask: u64 = 0;
    let mut best = f64::INFINITY;
    let mut hits: Vec<(u64, f64)> = Vec::new();
    let mut offer = |mask: u64, cut: f64| {
        if require_nonempty && mask == 0 {
            return;
        }
        if cut < best {
            best = cut;
            hits.retain(|&(_, c)| c <= cut + ENERGY_TOL);
            hits.push((mask, cut));
        } else if cut <= best + ENERGY_TOL {
            hits.push((mask, cut));
        }
    };
    offer(mask, cut);
    for i in 1..(1u64 << (n - 1)) {
        let k = i.trailing_zeros() as usize + 1;
        cut += x[k] * h[k];
        for &(j, w) in &adj[k] {
            h[j] -= 2.0 * x[k] * w;
        }
        x[k] = -x[k];
        mask ^= 1 << k;
        offer(mask, cut);
    }
    let mut masks: Vec<u64> = hits.into_iter().filter(|&(_, c)| c <= best + ENERGY_TOL).map(|(m, _)| m).collect();
    masks.sort_unstable();
    let witnesses: Vec<SpinState> = masks.iter().map(|&m| SpinState::from_mask(n, m)).collect();
    let side = witnesses[0].clone();
    let best = CutResult {
        cut_weight: cut_weight(g, &side)?,
        energy: energy(&crate::graphcut::graph_to_network(g), &side)?,
        side,
    };
    Ok(MinCut { best, witnesses, require_nonempty })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GapStats {
    pub mean: f64,
    pub max: f64,
}

/// Field names are part of the output format.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AuditReport {
    pub class_label: InstanceClass,
    pub n: usize,
    pub seed: u64,
    pub instances: usize,
    pub successes: usize,
    pub success_rate: f64,
    /// `(E_opt − E_heuristic) / max(1, |E_opt|)`.
    pub gap_stats: GapStats,
    pub shortcut_perron: usize,
    pub shortcut_eigencorner: usize,
    pub degenerate_top: usize,
    pub solver_errors: usize,
}

impl AuditReport {
    pub const CSV_HEADER: &'static str = "class_label,n,seed,instances,successes,success_rate,gap_mean,gap_max,shortcut_perron,shortcut_eigencorner,degenerate_top,solver_errors";

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{}",
            self.class_label,
            self.n,
            self.seed,
            self.instances,
            self.successes,
            self.success_rate,
            self.gap_stats.mean,
            self.gap_stats.max,
            self.shortcut_perron,
            self.shortcut_eigencorner,
            self.degenerate_top,
            self.solver_errors
        )
    }
}

/// Per-instance audit outcome.
#[derive(Debug, Clone, PartialEq)]
pub struct AuditSample {
    pub optimum: f64,
    pub heuristic: Option<f64>,
    pub shortcut: Option<Shortcut>,
    pub degenerate_top: bool,
}

impl AuditSample {
    pub fn success(&self) -> bool {
        self.heuristic.is_some_and(|h| (self.optimum - h).abs() <= ENERGY_TOL)
    }

    pub fn relative_gap(&self) -> Option<f64> {
        self.heuristic.map(|h| (self.optimum - h) / self.optimum.abs().max(1.0))
    }
}

pub fn audit_one(net: &Network, policy: &UpdatePolicy, cfg: &EigenConfig) -> Result<AuditSample> {
    let optimum = census(net)?.global_max.energy;
    Ok(match spectral_solve_with(net, policy, cfg) {
        Ok(r) => AuditSample {
            optimum,
            heuristic: Some(r.final_energy),
            shortcut: Some(r.shortcut_used),
            degenerate_top: r.top_degenerate,
        },
        Err(_) => AuditSample { optimum, heuristic: None, shortcut: None, degenerate_top: false },
    })
}

/// Runs the spectral heuristic and the census on `count` generated instances.
/// Deterministic for fixed arguments.
pub fn audit_heuristic(
    class: InstanceClass,
    seed: u64,
    count: usize,
    n: usize,
    policy: &UpdatePolicy,
    cfg: &EigenConfig,
) -> Result<AuditReport> {
    if class == InstanceClass::Custom {
        return Err(Error::InvalidInput("custom instances go through `audit_instances`".into()));
    }
    if n == 0 || n > MAX_AUDIT_DIM {
        return Err(Error::InvalidInput(format!("audit dimension must be in 1..={MAX_AUDIT_DIM}, got {n}")));
    }
    let samples = (0..count as u64)
        .into_par_iter()
        .map(|k| audit_one(&generate(class, seed, k, n), policy, cfg))
        .collect::<Result<Vec<_>>>()?;
    Ok(summarize(class, n, seed, &samples))
}

/// Audit over caller-supplied canonical networks; labelled `custom`.
pub fn audit_instances(nets: &[Network], policy: &UpdatePolicy, cfg: &EigenConfig) -> Result<AuditReport> {
    let samples = nets.par_iter().map(|net| audit_one(net, policy, cfg)).collect::<Result<Vec<_>>>()?;
    let n = nets.first().map_or(0, Network::dim);
    Ok(summarize(InstanceClass::Custom, n, 0, &samples))
}

fn summarize(class: InstanceClass, n: usize, seed: u64, samples: &[AuditSample]) -> AuditReport {
    let instances = samples.len();
    let successes = samples.iter().filter(|s| s.success()).count();
    let gaps: Vec<f64> = samples.iter().filter_map(AuditSample::relative_gap).collect();
    let gap_stats = GapStats {
        mean: if gaps.is_empty() { 0.0 } else { gaps.iter().sum::<f64>() / gaps.len() as f64 },
        max: gaps.iter().copied().fold(0.0, f64::max),
    };
    let count_shortcut = |k: Shortcut| samples.iter().filter(|s| s.shortcut == Some(k)).count();
    AuditReport {
        class_label: class,
        n,
        seed,
        instances,
        successes,
        success_rate: if instances == 0 { 0.0 } else { successes as f64 / instances as f64 },
        gap_stats,
        shortcut_perron: count_shortcut(Shortcut::Perron),
        shortcut_eigencorner: count_shortcut(Shortcut::Eigencorner),
        degenerate_top: samples.iter().filter(|s| s.degenerate_top).count(),
        solver_errors: samples.iter().filter(|s| s.heuristic.is_none()).count(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynamics::{is_antistable, is_stable};
    use crate::matrix::Matrix;
    use crate::quadform::{zero_diagonal, WeightMatrix};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn example1() -> Network {
        let m = Matrix::from_rows(&[vec![0.0, 1.0], vec![1.0, 0.0]]).unwrap();
        Network::pure(WeightMatrix::new(m).unwrap()).unwrap()
    }

    fn s(v: &[i8]) -> SpinState {
        SpinState::new(v.to_vec()).unwrap()
    }

    /// Independent re-enumeration: direct evaluation of every corner.
    fn naive(net: &Network) -> (f64, Vec<u32>, f64, Vec<u32>, Vec<u32>, Vec<u32>) {
        let n = net.dim();
        let p = UpdatePolicy::default();
        let all: Vec<(u32, f64, SpinState)> = (0..1u64 << n)
            .map(|m| {
                let x = SpinState::from_mask(n, m);
                (m as u32, energy(net, &x).unwrap(), x)
            })
            .collect();
        let max = all.iter().map(|a| a.1).fold(f64::MIN, f64::max);
        let min = all.iter().map(|a| a.1).fold(f64::MAX, f64::min);
        let pick =
            |f: &dyn Fn(&(u32, f64, SpinState)) -> bool| all.iter().filter(|a| f(a)).map(|a| a.0).collect::<Vec<_>>();
        (
            max,
            pick(&|a| a.1 >= max - ENERGY_TOL),
            min,
            pick(&|a| a.1 <= min + ENERGY_TOL),
            pick(&|a| is_stable(net, &a.2, &p).unwrap()),
            if net.has_zero_threshold() { pick(&|a| is_antistable(net, &a.2).unwrap()) } else { vec![] },
        )
    }

    #[test]
    fn example1_census() {
        let c = census(&example1()).unwrap();
        assert_eq!(c.global_max.energy, 2.0);
        assert_eq!(c.global_min.energy, -2.0);
        let stable: Vec<_> = c.stable.states().collect();
        assert_eq!(stable, vec![s(&[1, 1]), s(&[-1, -1])]);
        let anti: Vec<_> = c.antistable.states().collect();
        assert_eq!(anti, vec![s(&[-1, 1]), s(&[1, -1])]);
        assert!(c.global_max.contains(&SpinState::ones(2)));
        assert_eq!(c.corners_visited, 4);
    }

    #[test]
    fn zero_network_census() {
        let c = census(&Network::pure(WeightMatrix::zeros(4)).unwrap()).unwrap();
        assert_eq!(c.stable.len(), 16);
        assert_eq!(c.antistable.len(), 16);
        assert_eq!(c.global_max.masks.len(), 16);
        assert_eq!(c.global_max.energy, 0.0);
    }

    #[test]
    fn census_matches_naive_enumeration() {
        let mut rng = ChaCha8Rng::seed_from_u64(50);
        for trial in 0..12 {
            let n = 1 + trial % 10;
            let (w, _) =
                zero_diagonal(&WeightMatrix::new(Matrix::from_fn(n, |_, _| rng.random_range(-2.0..2.0))).unwrap());
            let t: Vec<f64> =
                if trial % 2 == 0 { vec![0.0; n] } else { (0..n).map(|_| rng.random_range(-1.0..1.0)).collect() };
            let net = Network::new(w, t).unwrap();
            let c = census(&net).unwrap();
            let (max, max_set, min, min_set, stable, anti) = naive(&net);
            assert!((c.global_max.energy - max).abs() <= ENERGY_TOL);
            assert!((c.global_min.energy - min).abs() <= ENERGY_TOL);
            assert_eq!(c.global_max.masks, max_set);
            assert_eq!(c.global_min.masks, min_set);
            assert_eq!(c.stable.masks, stable);
            assert_eq!(c.antistable.masks, anti);
            assert_eq!(c.corners_visited, 1 << n);
        }
    }

    #[test]
    fn census_with_diagonal_matches_naive() {
        let mut rng = ChaCha8Rng::seed_from_u64(51);
        let w = WeightMatrix::new(Matrix::from_fn(7, |_, _| rng.random_range(-2.0..2.0))).unwrap();
        let net = Network::with_diagonal(w, vec![0.0; 7]).unwrap();
        let c = census(&net).unwrap();
        let (max, max_set, _, _, stable, anti) = naive(&net);
        assert!((c.global_max.energy - max).abs() <= ENERGY_TOL);
        assert_eq!(c.global_max.masks, max_set);
        assert_eq!(c.stable.masks, stable);
        assert_eq!(c.antistable.masks, anti);
    }

    #[test]
    fn census_budget_guard() {
        let net = Network::pure(WeightMatrix::zeros(25)).unwrap();
        assert_eq!(census(&net).unwrap_err(), Error::EnumerationBudget { n: 25, max: 24 });
    }

    #[test]
    fn census_lists_closed_under_negation() {
        let net = generate(InstanceClass::Gaussian, 3, 0, 9);
        let c = census(&net).unwrap();
        for x in c.stable.states() {
            assert!(c.is_stable(&x.negated()));
        }
        for x in c.antistable.states() {
            assert!(c.is_antistable(&x.negated()));
        }
        assert_eq!(c.stable.len() % 2, 0);
    }

    #[test]
    fn min_cut_examples() {
        let tri = Graph::new(3, [(0, 1, 1.0), (1, 2, 1.0), (0, 2, 1.0)]).unwrap();
        let trivial = brute_min_cut(&tri, false).unwrap();
        assert_eq!(trivial.best.cut_weight, 0.0);
        assert_eq!(trivial.witnesses, vec![SpinState::ones(3)]);
        let proper = brute_min_cut(&tri, true).unwrap();
        assert_eq!(proper.best.cut_weight, 2.0);
        assert_eq!(proper.witnesses.len(), 3);

        let neg = Graph::new(2, [(0, 1, -3.0)]).unwrap();
        let r = brute_min_cut(&neg, false).unwrap();
        assert_eq!(r.best.cut_weight, -3.0);
        assert_eq!(r.best.side, s(&[1, -1]));

        assert!(brute_min_cut(&Graph::new(1, []).unwrap(), true).is_err());
    }

    #[test]
    fn min_cut_agrees_with_census_through_identity() {
        for k in 0..10 {
            let net = generate(InstanceClass::SparseGraph, 9, k, 8);
            let mut edges = Vec::new();
            for u in 0..8 {
                for v in (u + 1)..8 {
                    let w = net.weights().get(u, v);
                    if w != 0.0 {
                        edges.push((u, v, w));
                    }
                }
            }
            let g = Graph::new(8, edges).unwrap();
            let mc = brute_min_cut(&g, false).unwrap();
            let c = census(&net).unwrap();
            let predicted = 0.5 * g.total_weight() - 0.25 * c.global_max.energy;
            assert!((mc.best.cut_weight - predicted).abs() <= ENERGY_TOL);
        }
    }

    #[test]
    fn audit_is_deterministic() {
        let p = UpdatePolicy::default();
        let cfg = EigenConfig::default();
        let a = audit_heuristic(InstanceClass::Gaussian, 5, 40, 8, &p, &cfg).unwrap();
        let b = audit_heuristic(InstanceClass::Gaussian, 5, 40, 8, &p, &cfg).unwrap();
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
        assert!((0.0..=1.0).contains(&a.success_rate));
        assert_eq!(a.csv_row().split(',').count(), AuditReport::CSV_HEADER.split(',').count());
    }

    #[test]
    fn audit_provable_classes() {
        let p = UpdatePolicy::default();
        let cfg = EigenConfig::default();
        let nn = audit_heuristic(InstanceClass::Nonnegative, 0, 30, 8, &p, &cfg).unwrap();
        assert_eq!(nn.success_rate, 1.0);
        assert_eq!(nn.shortcut_perron, 30);
        let ec = audit_heuristic(InstanceClass::Eigencorner, 0, 30, 8, &p, &cfg).unwrap();
        assert_eq!(ec.success_rate, 1.0);
        assert_eq!(ec.shortcut_eigencorner, 30);
    }

    #[test]
    fn audit_rejects_bad_dimension() {
        let p = UpdatePolicy::default();
        let cfg = EigenConfig::default();
        assert!(audit_heuristic(InstanceClass::Gaussian, 0, 1, 21, &p, &cfg).is_err());
        assert!(audit_heuristic(InstanceClass::Custom, 0, 1, 4, &p, &cfg).is_err());
    }
}
