//! Serializable bundle of everything computed for one algebra.

use serde::Serialize;

use crate::fixtures::FixtureKind;
use crate::modrep::{injdim, projdim, HomologicalDim};
use crate::nakayama::{NakAlgebra, NakDims, NakInvariants, NakModule, ResolutionQuiver};

use super::algebra_dims::{chen_koenig_injdim, mueller_domdim, ChenKoenig};
use super::gorenstein::GpVerdict;
use super::suite::{CheckVerdict, PoolEntry, SuiteContext};
use super::Fdomdim;

/// Bumped whenever a field of a serialized report changes meaning.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, Serialize)]
pub struct ModuleRecord {
    pub name: String,
    pub dim: usize,
    pub dim_vector: Vec<usize>,
    pub projective: bool,
    pub injective: bool,
    pub projdim: HomologicalDim,
    pub injdim: HomologicalDim,
    pub domdim: HomologicalDim,
    pub codomdim: HomologicalDim,
    pub gp: GpVerdict,
    pub gi: GpVerdict,
}

impl ModuleRecord {
    pub fn from_entry(p: &PoolEntry, cutoff: usize) -> Self {
        ModuleRecord {
            name: p.name.clone(),
            dim: p.module.dim(),
            dim_vector: p.module.dim_vector(),
            projective: p.projective,
            injective: p.injective,
            projdim: projdim(&p.module, cutoff),
            injdim: injdim(&p.module, cutoff),
            domdim: p.domdim.clone(),
            codomdim: p.codomdim.clone(),
            gp: p.gpi.gp.clone(),
            gi: p.gpi.gi.clone(),
        }
    }
}

/// Closed-form data of a Nakayama algebra.
#[derive(Clone, Debug, Serialize)]
pub struct NakayamaSection {
    pub kupisch: Vec<usize>,
    pub cyclic: bool,
    pub invariants: NakInvariants,
    pub resolution_quiver: Option<ResolutionQuiver>,
    pub dims: Vec<(String, NakDims)>,
    pub gp: Vec<String>,
    pub gi: Vec<String>,
    pub gpi: Vec<String>,
    /// `domdim_table[r][a]`: dominant dimensions of the modules `[a,k]` with
    /// `k ≡ r (mod n)` whose domdim is finite and at least 2, distinct values
    /// joined by `/`; `-` when there are none.
    pub domdim_table: Vec<Vec<String>>,
}

impl NakayamaSection {
    pub fn new(nak: &NakAlgebra) -> Self {
        let names = |s: std::collections::BTreeSet<NakModule>| s.iter().map(|m| m.to_string()).collect();
        NakayamaSection {
            kupisch: nak.series().lengths().to_vec(),
            cyclic: nak.series().is_cyclic(),
            invariants: nak.invariants(),
            resolution_quiver: nak.resolution_quiver().ok(),
            dims: nak.indecomposables().into_iter().map(|m| (m.to_string(), nak.dims(m))).collect(),
            gp: names(nak.gp_indecs()),
            gi: names(nak.gi_indecs()),
            gpi: names(nak.gpi_indecs()),
            domdim_table: domdim_table(nak),
        }
    }
}

fn domdim_table(nak: &NakAlgebra) -> Vec<Vec<String>> {
    let n = nak.series().lengths().len();
    let mut cells = vec![vec![std::collections::BTreeSet::new(); n]; n];
    for m in nak.indecomposables() {
        if let (Some((a, k)), Some(d)) = (m.coords(), nak.domdim(m).finite()) {
            if d >= 2 {
                cells[k % n][a].insert(d);
            }
        }
    }
    cells
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|c| {
                    if c.is_empty() {
                        "-".to_string()
                    } else {
                        c.iter().map(|d| d.to_string()).collect::<Vec<_>>().join("/")
                    }
                })
                .collect()
        })
        .collect()
}

/// `B = End_A(W)` cross-checks.
#[derive(Clone, Debug, Serialize)]
pub struct EndoSection {
    pub base_dim: usize,
    pub generator_dim: usize,
    /// `Err` carries the reason the formula does not apply.
    pub mueller_domdim: Result<HomologicalDim, String>,
    pub chen_koenig: Result<ChenKoenig, String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct InvariantReport {
    pub schema_version: u32,
    pub algebra: String,
    pub field: String,
    pub seed: u64,
    pub cutoff: usize,
    pub dim: usize,
    pub vertices: usize,
    pub domdim: HomologicalDim,
    pub codomdim: HomologicalDim,
    pub gordim_left: HomologicalDim,
    pub gordim_right: HomologicalDim,
    /// `None` when no exhaustive pool was available.
    pub fdomdim: Option<Fdomdim>,
    pub symmetric: bool,
    pub gendo_symmetric: bool,
    pub nearly_gorenstein: Option<bool>,
    pub nearly_gorenstein_reason: String,
    pub cm_finite: Option<bool>,
    pub pool_exhaustive: bool,
    pub gp: Vec<String>,
    pub gi: Vec<String>,
    pub gpi: Vec<String>,
    pub modules: Vec<ModuleRecord>,
    pub nakayama: Option<NakayamaSection>,
    pub endo: Option<EndoSection>,
    pub checks: Vec<CheckVerdict>,
}

impl InvariantReport {
    pub fn new(name: &str, kind: &FixtureKind, ctx: &SuiteContext, checks: Vec<CheckVerdict>, seed: u64) -> Self {
        let names = |f: &dyn Fn(&PoolEntry) -> bool| ctx.pool.iter().filter(|p| f(p)).map(|p| p.name.clone()).collect();
        let endo = match kind {
            FixtureKind::Endo(e) => Some(EndoSection {
                base_dim: e.base.dim(),
                generator_dim: e.generator.dim(),
                mueller_domdim: mueller_domdim(&e.generator, ctx.cutoff).map_err(|e| e.to_string()),
                chen_koenig: chen_koenig_injdim(&e.generator, ctx.cutoff).map_err(|e| e.to_string()),
            }),
            _ => None,
        };
        InvariantReport {
            schema_version: SCHEMA_VERSION,
            algebra: name.to_string(),
            field: ctx.algebra.field().name(),
            seed,
            cutoff: ctx.cutoff,
            dim: ctx.algebra.dim(),
            vertices: ctx.algebra.vertex_count(),
            domdim: ctx.domdim.clone(),
            codomdim: ctx.codomdim.clone(),
            gordim_left: ctx.gordims.left.clone(),
            gordim_right: ctx.gordims.right.clone(),
            fdomdim: ctx.fdomdim,
            symmetric: ctx.symmetric,
            gendo_symmetric: ctx.gendo_symmetric,
            nearly_gorenstein: ctx.nearly_gorenstein,
            nearly_gorenstein_reason: ctx.nearly_gorenstein_reason.clone(),
            cm_finite: ctx.cm_finite,
            pool_exhaustive: ctx.pool_exhaustive,
            gp: names(&|p| p.gpi.gp.is_yes()),
            gi: names(&|p| p.gpi.gi.is_yes()),
            gpi: names(&|p| p.gpi.is_yes()),
            modules: ctx.pool.iter().map(|p| ModuleRecord::from_entry(p, ctx.cutoff)).collect(),
            nakayama: ctx.nak.as_ref().map(NakayamaSection::new),
            endo,
            checks,
        }
    }

    pub fn suite_failed(&self) -> bool {
        self.checks.iter().any(CheckVerdict::is_fail)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kupisch_455_table() {
        let nak = NakAlgebra::validate(vec![4, 5, 5], true).unwrap();
        let t = domdim_table(&nak);
        assert_eq!(t[0][0], "4");
        assert_eq!(t[1][0], "2");
        assert_eq!(t[2][0], "-");
        assert_eq!(t[0][1], "2");
        assert_eq!(t[1][1], "-");
        assert_eq!(t[2][1], "3");
    }
}
