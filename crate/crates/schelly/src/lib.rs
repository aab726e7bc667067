//! Schubert calculus on real and complex Grassmannians, checkers for
//! colorful Helly-type transversal theorems, and an exact rational
//! geometry toolkit that verifies those theorems on concrete families
//! of convex polytopes.
//!
//! The crate is organized around five areas:
//!
//! - [`schubert`]: Schubert symbols, the cocycle basis of `H*(G(d,m))`,
//!   Poincaré duality, transposition, and the affine-plane embedding.
//! - [`mult`]: the Pieri rule, general Littlewood–Richardson products,
//!   powers, and an independent Schur-polynomial oracle.
//! - [`classes`]: Stiefel–Whitney classes, heights of w₁,
//!   Lusternik–Schnirelmann category bounds, and rank-locus classes.
//! - [`checkers`]: per-theorem applicability checks producing
//!   machine-readable reports.
//! - [`geom`]: exact convex-polytope machinery (rational simplex LP),
//!   transversal searches, instance generators, and end-to-end
//!   verification of theorem conclusions on planted families.
//!
//! See the `examples/` directory for one runnable walkthrough per area,
//! and the `schelly` binary for the JSON command-line front end.

pub mod checkers;
pub mod classes;
pub mod cli;
pub mod error;
pub mod geom;
pub mod mult;
pub mod schubert;

pub use error::{Error, Result};
pub use schubert::{CohClass, GrassmannContext, Ring, SchubertSymbol};
