//! Constructs, verifies and predicts `c`-sum `k`-magic edge labelings of
//! regular graphs.
//!
//! A labeling assigns every edge a nonzero element of `Z_k` (nonzero integers
//! when `k = 1`); it is `c`-sum magic when the labels around every vertex add
//! up to `c`. The sum spectrum `Σ_k(G)` collects every achievable `c`.
//!
//! - [`graph`]: multigraphs, generators, structural queries, text format.
//! - [`factor`]: doubling, Euler circuits, 2-factorizations, f-factors.
//! - [`labeling`]: verification, complements, folds, factor extension and
//!   the construction dispatcher.
//! - [`spectrum`]: predicted spectra, the exhaustive oracle, null sets.
//! - [`cli`]: the `kmagic` command-line front end.

pub mod cli;
pub mod error;
pub mod factor;
pub mod graph;
mod json;
pub mod labeling;
pub mod spectrum;

pub use error::{Error, Result};
pub use graph::{EdgeId, MultiGraph, Vertex};
