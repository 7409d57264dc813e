//! Saturated subgraphs of the hypercube: constructions, exhaustive
//! verification and bound evaluation.
//!
//! The library works with spanning subgraphs of `Q_n` and the notion of a
//! "copy of `Q_m`": an `m`-dimensional subcube all of whose edges are
//! present. On top of that sit saturation / semi-saturation / weak
//! saturation verdicts, greedy completion, exact minimum searches for tiny
//! cubes, the explicit graph families (base family, density-increment step,
//! semi-saturated graphs, `Q_2`-saturated graphs, weakly saturated trees)
//! and rational evaluation of the density bounds.

use std::sync::OnceLock;

pub mod bits;
pub mod bounds;
pub mod cli;
pub mod codes;
pub mod constructions;
pub mod cube;
pub mod format;
pub mod rng;
pub mod verify;

pub use cube::{CubeGraph, Dim, Edge, Subcube, Vertex};

/// Default cap on cube dimension; per-direction bitvectors of `2^24` bits
/// keep the largest graph under 50 MB.
pub const DEFAULT_N_MAX: u32 = 24;

static N_MAX: OnceLock<u32> = OnceLock::new();

/// Maximum supported dimension. `CUBESAT_NMAX` overrides the default of 24;
/// the value is read once per process.
pub fn n_max() -> u32 {
    *N_MAX.get_or_init(|| {
        std::env::var("CUBESAT_NMAX")
            .ok()
            .and_then(|s| s.trim().parse::<u32>().ok())
            .filter(|&n| (1..=30).contains(&n))
            .unwrap_or(DEFAULT_N_MAX)
    })
}

/// Version tag carried by every JSON document the CLI emits.
pub const OUTPUT_VERSION: u32 = 1;

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension {n} out of range 1..={max}")]
    DimensionOutOfRange { n: u32, max: u32 },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: u32, got: u32 },
    #[error("subcube dimension {m} exceeds cube dimension {n}")]
    SubcubeDimension { m: u32, n: u32 },
    #[error("permutation is not a bijection on 1..=n")]
    InvalidPermutation,
    #[error("edge ({0}, dir {1}) is already present")]
    EdgePresent(Vertex, u32),
    #[error("graph is not Q_{0}-free")]
    NotFree(u32),
    #[error("graph is not Q_{0}-saturated")]
    NotSaturated(u32),
    #[error("family does not cover every Q_{0} along the first {1} directions")]
    NotCovering(u32, u32),
    #[error("exact search supports n <= 4, got n = {0}")]
    ExactTooLarge(u32),
    #[error("{0}")]
    Unsupported(String),
}
