//! Algebra-level invariants, Gorenstein-projectivity certificates and the
//! theorem checks relating the Nakayama and generic engines.

mod algebra_dims;
mod ar;
mod gorenstein;
mod nakayama_checks;
mod report;
mod scan;
mod suite;

pub use algebra_dims::{
    algebra_codomdim, algebra_domdim, chen_koenig_injdim, fdomdim, gendo_symmetric_check, gorenstein_dims,
    missing_injective, missing_projective, mueller_domdim, ChenKoenig, Fdomdim, GorensteinDims,
};
pub use ar::{almost_split_sequence, almost_split_verify, factor_through, knit_indecomposables, ArVerdict, IndecPool, KnitBudget, ShortExact};
pub use gorenstein::{
    ext_vanishing, gi_test, gp_test, gpi_test, stable_part, ExtSide, GpCertificate, GpVerdict, GpiVerdict, Vanishing,
    VanishingCertificate,
};

pub use nakayama_checks::{
    gpi_with_finite_domdim, nakayama_ar_candidate, nearly_gorenstein_check_nak, NearlyGorenstein, PerpSide,
};

pub use report::{EndoSection, InvariantReport, ModuleRecord, NakayamaSection, SCHEMA_VERSION};
pub use scan::{scan_row, ScanRow};
pub use suite::{
    run_checks, theorem_suite, BaseData, CheckStatus, CheckVerdict, PoolEntry, SuiteConfig, SuiteContext,
};

use crate::modrep::ModrepError;

#[derive(Debug, thiserror::Error)]
pub enum InvariantsError {
    #[error(transparent)]
    Modrep(#[from] ModrepError),
    #[error("the algebra is not symmetric")]
    NotSymmetric,
    #[error("not a generator: no summand isomorphic to the projective at vertex {0}")]
    NotGenerator(usize),
    #[error("not a cogenerator: no summand isomorphic to the injective at vertex {0}")]
    NotCogenerator(usize),
    #[error("precondition failed: {0}")]
    Precondition(String),
}
