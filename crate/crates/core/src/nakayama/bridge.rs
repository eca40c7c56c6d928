use std::sync::Arc;

use crate::algebra::BasedAlgebra;
use crate::modrep::{projective_quotient, RightModule};

use super::NakModule;

/// The module `e_i A / e_i J^k` over the bound-quiver realisation of the series.
pub fn bridge_module(a: &Arc<BasedAlgebra>, m: NakModule) -> RightModule {
    match m {
        NakModule::Zero => RightModule::zero(a),
        NakModule::Indec { i, k } => projective_quotient(a, i, k),
    }
}
