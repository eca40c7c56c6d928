//! Finite-dimensional right modules over a based algebra.

mod approx;
mod dims;
mod endo;
mod ext;
mod functors;
mod hom;
mod iso;
mod module;
mod structure;

pub use approx::{coresdim, in_add, indecomposable_summands, min_right_approx, resdim};
pub use dims::{
    codomdim, domdim, injdim, projdim, Direction, HomologicalDim, InfiniteCertificate, PeriodicityCertificate, Witness,
    DEFAULT_CUTOFF,
};
pub(crate) use dims::dualize;
pub use endo::{endo_algebra, EndoAlgebra};
pub use ext::{costable_hom_dim, ext_dim, ext_dim_dual, projective_resolution_tops, stable_hom_dim};
pub use functors::{nu, nu_inv, presentation, star, star_map, tau, tau_inv, transpose_tr};
pub use hom::{hom_basis, hom_dim, HomSpace};
pub use iso::{
    decompose, decompose_seeded, fingerprint, is_indecomposable, iso, iso_classes, iso_seeded, split_local_radical,
    Decomposition, IsoResult, DEFAULT_SEED,
};
pub use module::{ModuleMap, RightModule};
pub use structure::*;

use crate::algebra::AlgebraError;
use crate::linalg::LinalgError;

#[derive(Debug, thiserror::Error)]
pub enum ModrepError {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("modules live over different algebras")]
    AlgebraMismatch,
    #[error("shape error: {0}")]
    Shape(String),
    #[error("not a module: {0}")]
    NotAModule(String),
    #[error("matrix is not a module homomorphism")]
    NotAHomomorphism,
    #[error("could not decide decomposition of a module of dimension {0}")]
    DecompositionInconclusive(usize),
    #[error("endomorphism ring of summand {0} is not split local")]
    NotSplitLocal(usize),
    #[error("no such vertex {0}")]
    NoSuchVertex(usize),
}
