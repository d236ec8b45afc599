//! Quadratic-form maximization over hypercube corners.
//!
//! ```
//! use hypercube::dynamics::UpdatePolicy;
//! use hypercube::io::parse_matrix;
//! use hypercube::oracle::census;
//! use hypercube::quadform::canonicalize;
//! use hypercube::spectral::spectral_solve;
//!
//! let raw = parse_matrix("2\n0 1\n1 0\n")?;
//! let canon = canonicalize(&raw);
//! let report = spectral_solve(&canon.network, &UpdatePolicy::default())?;
//! let best = census(&canon.network)?.global_max.energy;
//! assert_eq!(report.final_energy, best);
//! # Ok::<(), hypercube::Error>(())
//! ```

pub mod cli;
pub mod dynamics;
pub mod error;
pub mod geometry;
pub mod graphcut;
pub mod io;
pub mod matrix;
pub mod oracle;
pub mod quadform;
pub mod spectral;
pub mod synthesis;

pub use dynamics::{RunReport, SignZero, SpinState, Termination, UpdateMode, UpdateOrder, UpdatePolicy};
pub use error::{Error, Result};
pub use matrix::Matrix;
pub use quadform::{LebesgueParts, Network, RawInstance, WeightMatrix};
pub use spectral::{EigenPair, SpectralSolveReport};

/// Absolute tolerance used for all energy comparisons.
pub const ENERGY_TOL: f64 = 1e-9;
