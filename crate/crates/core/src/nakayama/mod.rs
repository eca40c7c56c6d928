//! Closed-form engine for Nakayama algebras given by Kupisch series.
//!
//! Vertices are `0..n`, arrows `i -> i+1`, and `[i, k]` is `e_i A / e_i J^k`
//! with top `S_i` and socle `S_{i+k-1}`. In injective coordinates `[x, y]`
//! stands for `D(J^y e_x)`, and the cosyzygy is `[x - y, d_x - y]` with the
//! injective length `d` taken at `x`.

mod bridge;
mod engine;
mod series;

pub use bridge::bridge_module;
pub use engine::{InjCoord, NakAlgebra, NakDims, NakInvariants, NakModule, ResolutionQuiver};
pub use series::{KupischSeries, NakayamaError};
