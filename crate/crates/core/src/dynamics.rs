//! Discrete Hopfield dynamics over ±1 states.
//!
//! Serial mode updates one node at a time and never decreases the energy of a
//! canonical network, so it always reaches a stable state. Fully parallel mode
//! updates every node at once and ends in a stable state or a two-cycle.

use std::fmt;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::quadform::{check_dim, energy, Network};

/// Fields with magnitude at or below this are treated as zero.
pub const ZERO_FIELD_TOL: f64 = 1e-10;

/// A corner of the hypercube `{+1, −1}ᴺ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Deserialize)]
#[serde(try_from = "Vec<i8>")]
pub struct SpinState(Vec<i8>);

impl SpinState {
    pub fn new(spins: Vec<i8>) -> Result<Self> {
        if let Some(pos) = spins.iter().position(|&s| s != 1 && s != -1) {
            return Err(Error::InvalidInput(format!("spin {pos} is {}, expected +1 or -1", spins[pos])));
        }
        Ok(SpinState(spins))
    }

    /// Panics if any item is not ±1.
    pub fn from_signs(signs: impl IntoIterator<Item = i8>) -> Self {
        let v: Vec<i8> = signs.into_iter().collect();
        assert!(v.iter().all(|&s| s == 1 || s == -1), "spin values must be ±1");
        SpinState(v)
    }

    pub fn ones(n: usize) -> Self {
        SpinState(vec![1; n])
    }

    /// Bit `i` of `mask` set means spin `i` is −1.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        SpinState((0..n).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect())
    }

    pub fn to_mask(&self) -> u64 {
        self.0.iter().enumerate().filter(|(_, &s)| s == -1).fold(0, |m, (i, _)| m | 1 << i)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> i8 {
        self.0[i]
    }

    pub fn flip(&mut self, i: usize) {
        self.0[i] = -self.0[i];
    }

    pub fn iter(&self) -> impl Iterator<Item = i8> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[i8] {
        &self.0
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.0.iter().map(|&s| f64::from(s)).collect()
    }

    pub fn negated(&self) -> Self {
        SpinState(self.0.iter().map(|&s| -s).collect())
    }

    pub fn inner(&self, other: &SpinState) -> i64 {
        self.0.iter().zip(&other.0).map(|(&a, &b)| i64::from(a) * i64::from(b)).sum()
    }
}

impl TryFrom<Vec<i8>> for SpinState {
    type Error = Error;
    fn try_from(v: Vec<i8>) -> Result<Self> {
        SpinState::new(v)
    }
}

impl Serialize for SpinState {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl fmt::Display for SpinState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|s| s.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// How a zero field is resolved.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SignZero {
    /// Keep the current spin.
    #[default]
    Keep,
    PlusOne,
    MinusOne,
}

impl SignZero {
    pub fn resolve(self, field: f64, current: i8) -> i8 {
        if field > ZERO_FIELD_TOL {
            1
        } else if field < -ZERO_FIELD_TOL {
            -1
        } else {
            match self {
                SignZero::Keep => current,
                SignZero::PlusOne => 1,
                SignZero::MinusOne => -1,
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum UpdateOrder {
    #[default]
    Cyclic,
    /// One seeded permutation of the nodes, reused on every sweep.
    Permutation { seed: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct UpdatePolicy {
    pub order: UpdateOrder,
    pub sign_zero: SignZero,
    max_sweeps: Option<usize>,
}

impl UpdatePolicy {
    pub fn with_max_sweeps(mut self, max_sweeps: usize) -> Result<Self> {
        if max_sweeps == 0 {
            return Err(Error::InvalidInput("max_sweeps must be at least 1".into()));
        }
        self.max_sweeps = Some(max_sweeps);
        Ok(self)
    }

    pub fn with_sign_zero(mut self, sign_zero: SignZero) -> Self {
        self.sign_zero = sign_zero;
        self
    }

    pub fn with_order(mut self, order: UpdateOrder) -> Self {
        self.order = order;
        self
    }

    /// Explicit budget, or `4·N + 64` when unset.
    pub fn max_sweeps_for(&self, n: usize) -> usize {
        self.max_sweeps.unwrap_or(4 * n + 64)
    }

    pub fn node_order(&self, n: usize) -> Vec<usize> {
        let mut order: Vec<usize> = (0..n).collect();
        if let UpdateOrder::Permutation { seed } = self.order {
            order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        }
        order
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum UpdateMode {
    Serial,
    Parallel,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Termination {
    Stable,
    TwoCycle,
    BudgetExhausted,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TrajectoryPoint {
    pub state: SpinState,
    pub energy: f64,
}

/// Record of one run. Serial runs record one point per sweep that changed the
/// state, parallel runs one point per synchronous step.
#[derive(Debug, Clone, PartialEq)]
pub struct RunReport {
    pub mode: UpdateMode,
    pub termination: Termination,
    pub sweeps_used: usize,
    pub flips: usize,
    pub trajectory: Vec<TrajectoryPoint>,
}

impl RunReport {
    pub fn initial(&self) -> &TrajectoryPoint {
        &self.trajectory[0]
    }

    pub fn last(&self) -> &TrajectoryPoint {
        self.trajectory.last().expect("trajectory holds the initial state")
    }

    pub fn final_state(&self) -> &SpinState {
        &self.last().state
    }

    pub fn final_energy(&self) -> f64 {
        self.last().energy
    }

    pub fn energies(&self) -> Vec<f64> {
        self.trajectory.iter().map(|p| p.energy).collect()
    }
}

impl Serialize for RunReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("RunReport", 7)?;
        st.serialize_field("mode", &self.mode)?;
        st.serialize_field("termination", &self.termination)?;
        st.serialize_field("sweeps_used", &self.sweeps_used)?;
        st.serialize_field("flips", &self.flips)?;
        st.serialize_field("initial_state", &self.initial().state)?;
        st.serialize_field("final_state", self.final_state())?;
        st.serialize_field("energies", &self.energies())?;
        st.end()
    }
}

/// `Σⱼ W[i][j]·x[j] − T[i]`.
pub fn local_field(net: &Network, x: &SpinState, i: usize) -> Result<f64> {
    check_dim(net.dim(), x.len())?;
    if i >= net.dim() {
        return Err(Error::IndexOutOfRange { index: i, n: net.dim() });
    }
    Ok(field_unchecked(net, x, i))
}

fn field_unchecked(net: &Network, x: &SpinState, i: usize) -> f64 {
    let row = net.weights().matrix().row(i);
    let s: f64 = row.iter().zip(x.as_slice()).map(|(w, &xj)| w * f64::from(xj)).sum();
    s - net.threshold()[i]
}

/// Updates node `i` in place; returns whether it flipped.
pub fn serial_step(net: &Network, x: &mut SpinState, i: usize, sign_zero: SignZero) -> Result<bool> {
    let f = local_field(net, x, i)?;
    let next = sign_zero.resolve(f, x.get(i));
    if next != x.get(i) {
        x.flip(i);
        Ok(true)
    } else {
        Ok(false)
    }
}

/// One pass over all nodes in policy order.
pub fn serial_sweep(net: &Network, x: &SpinState, policy: &UpdatePolicy) -> Result<(SpinState, bool)> {
    let (next, flips) = sweep_counting(net, x, &policy.node_order(net.dim()), policy.sign_zero)?;
    Ok((next, flips > 0))
}

fn sweep_counting(net: &Network, x: &SpinState, order: &[usize], sign_zero: SignZero) -> Result<(SpinState, usize)> {
    check_dim(net.dim(), x.len())?;
    let mut next = x.clone();
    let mut flips = 0;
    for &i in order {
        let f = field_unchecked(net, &next, i);
        if sign_zero.resolve(f, next.get(i)) != next.get(i) {
            next.flip(i);
            flips += 1;
        }
    }
    Ok((next, flips))
}

/// Repeats serial sweeps until a sweep changes nothing or the budget runs out.
pub fn run_serial(net: &Network, x0: &SpinState, policy: &UpdatePolicy) -> Result<RunReport> {
    check_dim(net.dim(), x0.len())?;
    let order = policy.node_order(net.dim());
    let budget = policy.max_sweeps_for(net.dim());
    let mut trajectory = vec![TrajectoryPoint { state: x0.clone(), energy: energy(net, x0)? }];
    let mut current = x0.clone();
    let mut total_flips = 0;
    for sweep in 1..=budget {
        let (next, flips) = sweep_counting(net, &current, &order, policy.sign_zero)?;
        if flips == 0 {
            return Ok(RunReport {
                mode: UpdateMode::Serial,
                termination: Termination::Stable,
                sweeps_used: sweep,
                flips: total_flips,
                trajectory,
            });
        }
        total_flips += flips;
        trajectory.push(TrajectoryPoint { energy: energy(net, &next)?, state: next.clone() });
        current = next;
    }
    Ok(RunReport {
        mode: UpdateMode::Serial,
        termination: Termination::BudgetExhausted,
        sweeps_used: budget,
        flips: total_flips,
        trajectory,
    })
}

/// Synchronous updates until `x(t) = x(t−1)` (stable) or `x(t) = x(t−2)` (two-cycle).
pub fn run_parallel(net: &Network, x0: &SpinState, policy: &UpdatePolicy) -> Result<RunReport> {
    check_dim(net.dim(), x0.len())?;
    let n = net.dim();
    let budget = policy.max_sweeps_for(n);
    let mut trajectory = vec![TrajectoryPoint { state: x0.clone(), energy: energy(net, x0)? }];
    let mut previous: Option<SpinState> = None;
    let mut current = x0.clone();
    let mut total_flips = 0;
    for step in 1..=budget {
        let next = SpinState(
            (0..n).map(|i| policy.sign_zero.resolve(field_unchecked(net, &current, i), current.get(i))).collect(),
        );
        if next == current {
            return Ok(RunReport {
                mode: UpdateMode::Parallel,
                termination: Termination::Stable,
                sweeps_used: step,
                flips: total_flips,
                trajectory,
            });
        }
        total_flips += next.iter().zip(current.iter()).filter(|(a, b)| a != b).count();
        trajectory.push(TrajectoryPoint { energy: energy(net, &next)?, state: next.clone() });
        if previous.as_ref() == Some(&next) {
            return Ok(RunReport {
                mode: UpdateMode::Parallel,
                termination: Termination::TwoCycle,
                sweeps_used: step,
                flips: total_flips,
                trajectory,
            });
        }
        previous = Some(std::mem::replace(&mut current, next));
    }
    Ok(RunReport {
        mode: UpdateMode::Parallel,
        termination: Termination::BudgetExhausted,
        sweeps_used: budget,
        flips: total_flips,
        trajectory,
    })
}

/// True when no node would change under the policy's update rule. With
/// [`SignZero::Keep`] this is `x[i]·field(i) ≥ 0` for every node.
pub fn is_stable(net: &Network, x: &SpinState, policy: &UpdatePolicy) -> Result<bool> {
    check_dim(net.dim(), x.len())?;
    Ok((0..net.dim()).all(|i| policy.sign_zero.resolve(field_unchecked(net, x, i), x.get(i)) == x.get(i)))
}

/// `x[i]·field(i) ≤ 0` for every node; defined for pure forms only.
pub fn is_antistable(net: &Network, x: &SpinState) -> Result<bool> {
    check_dim(net.dim(), x.len())?;
    if !net.has_zero_threshold() {
        return Err(Error::NonZeroThreshold);
    }
    Ok((0..net.dim()).all(|i| f64::from(x.get(i)) * field_unchecked(net, x, i) <= ZERO_FIELD_TOL))
}
