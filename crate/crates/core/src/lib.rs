//! Nodal domains of Neumann eigenfunctions on the square `(0, π)²` and the
//! classification of its Courant-sharp eigenvalues.
//!
//! The eigenvalues are `p² + q²` with eigenfunctions `cos px cos qy`. For a
//! two-dimensional eigenspace spanned by `(p, q)` and `(q, p)` every
//! eigenfunction is, up to scale, one of
//!
//! ```text
//! Φ(x, y) = cos θ cos px cos qy + sin θ cos qx cos py,   0 ≤ θ < π.
//! ```
//!
//! The crate is organised bottom-up:
//!
//! - [`spectrum`]: exact lattice enumeration, counting function, symmetry subspaces.
//! - [`bounds`]: Faber–Krahn based upper bounds and the global index gate.
//! - [`symmetry`]: subspace Courant bounds and the θ reductions.
//! - [`nodal`]: evaluation, root isolation, critical points, grid counting, sweeps.
//! - [`chessboard`]: sign-rectangle localisation and exact outer-area bounds.
//! - [`classify`]: the rule pipeline producing per-index verdicts.
//! - [`acceptance`]: end-to-end reproduction checks shared by tests and the CLI.

pub mod acceptance;
pub mod bounds;
pub mod chessboard;
pub mod classify;
mod error;
pub mod nodal;
pub mod spectrum;
pub mod symmetry;
mod union_find;

pub use error::{Error, Result};
