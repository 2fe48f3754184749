//! Exact Brill-Noether and Noether-Lefschetz numerics for polarized K3
//! surfaces.
//!
//! Everything is computed in exact integer or rational arithmetic over a
//! caller-chosen scalar type (see [`Scalar`]): `i64` for fast sweeps,
//! `BigInt` when unbounded inputs matter. There is no floating point in the
//! crate; rational thresholds are `num_rational::Ratio` values compared
//! exactly.
//!
//! - [`bn`]: the Brill-Noether number `rho`, Clifford indices, and the
//!   special / non-computing predicates.
//! - [`lattice`]: rank-2 marking lattices `<H, L>`, the Hodge constraint,
//!   the Noether-Lefschetz classification, and marking certificates.
//! - [`bundles`]: Lazarsfeld-Mukai bundle invariants, Mukai self-pairing,
//!   and the stability feasibility bounds.
//! - [`lifting`]: Donagi-Morrison lift-candidate enumeration and the
//!   per-genus audit of the non-computing case analysis.

pub mod bn;
pub mod bundles;
pub mod error;
pub mod lattice;
pub mod lifting;
pub mod scalar;

pub use error::{Error, Result};
pub use scalar::Scalar;

/// Default unbounded scalar; what the CLI computes with.
pub type Int = num_bigint::BigInt;
/// Exact rational over [`Int`].
pub type Rat = num_rational::Ratio<Int>;
/// Machine-word scalar for grid sweeps where inputs are known small.
pub type Int64 = i64;
/// Exact rational over [`Int64`].
pub type Rat64 = num_rational::Ratio<i64>;
