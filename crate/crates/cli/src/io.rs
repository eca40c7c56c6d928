//! JSON interchange files for algebras and modules.

use std::path::Path;
use std::sync::Arc;

use anyhow::{bail, Context, Result};
use gendo::algebra::{AlgebraPresentation, BasedAlgebra};
use gendo::invariants::SCHEMA_VERSION;
use gendo::linalg::{Elem, Matrix};
use gendo::modrep::RightModule;
use serde::{Deserialize, Serialize};

#[derive(Debug, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub schema_version: u32,
    pub name: String,
    #[serde(flatten)]
    pub presentation: AlgebraPresentation,
}

/// `action[b]` is the matrix of the `b`-th algebra basis element acting on
/// row vectors of length `dim`.
#[derive(Debug, Serialize, Deserialize)]
pub struct ModuleFile {
    pub schema_version: u32,
    pub name: String,
    pub algebra_ref: String,
    pub dim: usize,
    pub action: Vec<Vec<Vec<Elem>>>,
}

fn check_version(v: u32, path: &Path) -> Result<()> {
    if v != SCHEMA_VERSION {
        bail!("{}: schema version {v}, expected {SCHEMA_VERSION}", path.display());
    }
    Ok(())
}

/// The algebra and its recorded name.
pub fn read_algebra(path: &Path) -> Result<(String, Arc<BasedAlgebra>)> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let file: AlgebraFile = serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
    check_version(file.schema_version, path)?;
    let a = BasedAlgebra::validate(&file.presentation).with_context(|| format!("validating {}", path.display()))?;
    Ok((file.name, a))
}

pub fn write_algebra(path: &Path, name: &str, a: &BasedAlgebra) -> Result<()> {
    let file = AlgebraFile { schema_version: SCHEMA_VERSION, name: name.to_string(), presentation: a.presentation() };
    std::fs::write(path, serde_json::to_string_pretty(&file)?).with_context(|| format!("writing {}", path.display()))
}

pub fn read_module_file(path: &Path) -> Result<ModuleFile> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let file: ModuleFile = serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
    check_version(file.schema_version, path)?;
    Ok(file)
}

pub fn module_from_file(file: &ModuleFile, a: &Arc<BasedAlgebra>) -> Result<RightModule> {
    if file.action.len() != a.dim() {
        bail!("module {}: {} action matrices for an algebra of dimension {}", file.name, file.action.len(), a.dim());
    }
    let mats = file
        .action
        .iter()
        .enumerate()
        .map(|(b, rows)| {
            if rows.len() != file.dim {
                bail!("module {}: action of basis element {b} has {} rows, expected {}", file.name, rows.len(), file.dim);
            }
            Matrix::from_rows(rows, file.dim, a.field()).with_context(|| format!("action of basis element {b}"))
        })
        .collect::<Result<Vec<_>>>()?;
    let (m, _) = RightModule::from_basis_action(a, &mats).with_context(|| format!("module {}", file.name))?;
    Ok(m)
}

pub fn write_module(path: &Path, name: &str, algebra_ref: &str, m: &RightModule) -> Result<()> {
    let file = ModuleFile {
        schema_version: SCHEMA_VERSION,
        name: name.to_string(),
        algebra_ref: algebra_ref.to_string(),
        dim: m.dim(),
        action: m.basis_action().iter().map(Matrix::row_vecs).collect(),
    };
    std::fs::write(path, serde_json::to_string_pretty(&file)?).with_context(|| format!("writing {}", path.display()))
}
