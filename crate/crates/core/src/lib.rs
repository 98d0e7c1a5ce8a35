//! Exact pairwise entanglement in cyclic XX spin chains in a transverse field.
//!
//! The chain of `n` spins with nearest-neighbor XX coupling `v` and field `b`
//! maps onto free fermions with a number-parity dependent boundary condition.
//! This crate evaluates the two-qubit reduced density matrix and concurrence
//! for any pair separation, exactly at finite `n` and finite temperature
//! (parity-projected statistics), in closed form at `T = 0`, in the
//! thermodynamic limit (quadrature), and in the high-field asymptotic regime
//! (projected Bessel sums). A brute-force exact-diagonalization oracle covers
//! `n <= 12` as an independent verification path.

pub mod bulk;
pub mod chain;
pub mod det;
pub mod ed;
pub mod engine;
pub mod error;
pub mod ground;
pub mod limits;
pub mod logdomain;
pub mod quad;
pub mod special;
pub mod thermal;

pub use chain::{ChainSpec, CriticalFieldTable, Parity, SectorKey};
pub use engine::{build_engine, engine_names, Engine, EngineConfig, PointEval};
pub use error::{Error, Result};
pub use thermal::{concurrence, entanglement_of_formation, PairDensity};
