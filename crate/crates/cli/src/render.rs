//! Text, CSV and JSON renderings of reports.

use std::fmt::Write as _;
use std::io::Write;

use anyhow::Result;
use gendo::invariants::{CheckVerdict, InvariantReport, ModuleRecord, ScanRow, SCHEMA_VERSION};
use gendo::modrep::HomologicalDim;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// Module-level output of the `module` command.
#[derive(Debug, Serialize)]
pub struct ModuleReport {
    pub schema_version: u32,
    pub algebra: String,
    pub field: String,
    pub seed: u64,
    pub cutoff: usize,
    pub module: ModuleRecord,
}

/// Output of the `suite` command for one algebra.
#[derive(Debug, Serialize)]
pub struct SuiteReport {
    pub schema_version: u32,
    pub algebra: String,
    pub seed: u64,
    pub cutoff: usize,
    pub checks: Vec<CheckVerdict>,
}

fn opt<T: ToString>(x: &Option<T>) -> String {
    x.as_ref().map_or("unknown".into(), T::to_string)
}

pub fn json<T: Serialize>(out: &mut impl Write, value: &T) -> Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

const MODULE_COLUMNS: [&str; 14] = [
    "schema_version",
    "algebra",
    "module",
    "dim",
    "dim_vector",
    "projective",
    "injective",
    "projdim",
    "injdim",
    "domdim",
    "codomdim",
    "gp",
    "gi",
    "gpi",
];

fn module_row(algebra: &str, m: &ModuleRecord) -> Vec<String> {
    let dv: Vec<String> = m.dim_vector.iter().map(usize::to_string).collect();
    vec![
        SCHEMA_VERSION.to_string(),
        algebra.to_string(),
        m.name.clone(),
        m.dim.to_string(),
        dv.join(" "),
        m.projective.to_string(),
        m.injective.to_string(),
        m.projdim.to_string(),
        m.injdim.to_string(),
        m.domdim.to_string(),
        m.codomdim.to_string(),
        m.gp.to_string(),
        m.gi.to_string(),
        (m.gp.is_yes() && m.gi.is_yes()).to_string(),
    ]
}

pub fn modules_csv<'a>(out: &mut impl Write, algebra: &str, modules: impl IntoIterator<Item = &'a ModuleRecord>) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(MODULE_COLUMNS)?;
    for m in modules {
        w.write_record(module_row(algebra, m))?;
    }
    w.flush()?;
    Ok(())
}

pub fn checks_csv(out: &mut impl Write, reports: &[SuiteReport]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["schema_version", "algebra", "seed", "check", "title", "status", "detail"])?;
    for r in reports {
        for c in &r.checks {
            w.write_record([
                SCHEMA_VERSION.to_string(),
                r.algebra.clone(),
                r.seed.to_string(),
                c.id.to_string(),
                c.title.to_string(),
                format!("{:?}", c.status).to_lowercase(),
                c.detail.clone(),
            ])?;
        }
    }
    w.flush()?;
    Ok(())
}

pub const SCAN_COLUMNS: [&str; 13] = [
    "schema_version",
    "series",
    "n",
    "domdim",
    "gordim",
    "fdomdim",
    "gp_count",
    "nearly_gorenstein",
    "gorenstein_dominant",
    "gendo_symmetric",
    "violates_2n2",
    "violates_g1",
    "violates_gorenstein_dominant",
];

pub fn scan_csv(out: &mut impl Write, rows: &[ScanRow]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(SCAN_COLUMNS)?;
    for r in rows {
        w.write_record([
            SCHEMA_VERSION.to_string(),
            r.series.clone(),
            r.n.to_string(),
            r.domdim.to_string(),
            r.gordim.to_string(),
            r.fdomdim.to_string(),
            r.gp_count.to_string(),
            r.nearly_gorenstein.to_string(),
            r.gorenstein_dominant.to_string(),
            r.gendo_symmetric.to_string(),
            r.violates_2n2.to_string(),
            r.violates_g1.map_or("n/a".into(), |b| b.to_string()),
            r.violates_gorenstein_dominant.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

fn checks_text(s: &mut String, checks: &[CheckVerdict]) {
    for c in checks {
        let _ = writeln!(s, "  ({}) {:<8} {}: {}", c.id, format!("{:?}", c.status).to_lowercase(), c.title, c.detail);
    }
}

fn dim(d: &HomologicalDim) -> String {
    d.to_string()
}

pub fn report_text(r: &InvariantReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "algebra {} over {} (dim {}, {} vertices)", r.algebra, r.field, r.dim, r.vertices);
    let _ = writeln!(s, "schema {}  seed {}  cutoff {}", r.schema_version, r.seed, r.cutoff);
    let _ = writeln!(s, "domdim {}  codomdim {}", dim(&r.domdim), dim(&r.codomdim));
    let _ = writeln!(s, "Gorenstein dimension left {} right {}", dim(&r.gordim_left), dim(&r.gordim_right));
    let fd = r.fdomdim.map(|f| if f.certified { f.value.to_string() } else { format!(">={}", f.value) });
    let _ = writeln!(s, "fdomdim {}", opt(&fd));
    let _ = writeln!(s, "symmetric {}  gendo-symmetric {}", r.symmetric, r.gendo_symmetric);
    let _ = writeln!(s, "nearly Gorenstein {} ({})", opt(&r.nearly_gorenstein), r.nearly_gorenstein_reason);
    let _ = writeln!(s, "CM-finite {}", opt(&r.cm_finite));
    if let Some(n) = &r.nakayama {
        let _ = writeln!(s, "Kupisch series {:?} {}", n.kupisch, if n.cyclic { "cyclic" } else { "linear" });
        let _ = writeln!(s, "Gorenstein-dominant {}", n.invariants.is_gorenstein_dominant);
        if let Some(q) = &n.resolution_quiver {
            let _ = writeln!(s, "resolution quiver {q}");
        }
        let _ = writeln!(s, "GP  {}", n.gp.join(" "));
        let _ = writeln!(s, "GI  {}", n.gi.join(" "));
        let _ = writeln!(s, "GPI {}", n.gpi.join(" "));
        let _ = writeln!(s, "domdim table (rows k mod {}, columns a):", n.kupisch.len());
        let header: Vec<String> = (0..n.kupisch.len()).map(|a| format!("a={a}")).collect();
        let _ = writeln!(s, "        {}", header.join("\t"));
        for (k, row) in n.domdim_table.iter().enumerate() {
            let _ = writeln!(s, "  k≡{k}\t{}", row.join("\t"));
        }
    }
    if let Some(e) = &r.endo {
        let m = e.mueller_domdim.as_ref().map_or_else(|e| format!("n/a ({e})"), dim);
        let _ = writeln!(s, "base dim {}  generator dim {}  Mueller domdim {m}", e.base_dim, e.generator_dim);
        match &e.chen_koenig {
            Ok(ck) => {
                let _ = writeln!(s, "Chen-Koenig injdim {} vs {} (agree {})", dim(&ck.lhs), dim(&ck.rhs), ck.agrees());
            }
            Err(err) => {
                let _ = writeln!(s, "Chen-Koenig n/a ({err})");
            }
        }
    }
    let _ = writeln!(s, "modules ({}{}):", r.modules.len(), if r.pool_exhaustive { ", exhaustive" } else { "" });
    for m in &r.modules {
        let _ = writeln!(s, "  {}", module_line(m));
    }
    let _ = writeln!(s, "checks:");
    checks_text(&mut s, &r.checks);
    s
}

fn module_line(m: &ModuleRecord) -> String {
    format!(
        "{:<16} dim {:>3}  pd {:<4} id {:<4} domdim {:<4} codomdim {:<4} gp {} gi {}",
        m.name,
        m.dim,
        dim(&m.projdim),
        dim(&m.injdim),
        dim(&m.domdim),
        dim(&m.codomdim),
        m.gp,
        m.gi
    )
}

pub fn module_text(r: &ModuleReport) -> String {
    format!("{} over {} (seed {}, cutoff {})\n{}\n", r.algebra, r.field, r.seed, r.cutoff, module_line(&r.module))
}

pub fn suite_text(reports: &[SuiteReport]) -> String {
    let mut s = String::new();
    for r in reports {
        let _ = writeln!(s, "{} (seed {}, cutoff {})", r.algebra, r.seed, r.cutoff);
        checks_text(&mut s, &r.checks);
    }
    s
}

pub fn scan_text(rows: &[ScanRow]) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{:<14} {:>3} {:>7} {:>7} {:>8} {:>4}  violation", "series", "n", "domdim", "gordim", "fdomdim", "|GP|");
    for r in rows {
        let _ = writeln!(
            s,
            "{:<14} {:>3} {:>7} {:>7} {:>8} {:>4}  {}",
            r.series,
            r.n,
            dim(&r.domdim),
            dim(&r.gordim),
            r.fdomdim,
            r.gp_count,
            if r.is_violation() { "YES" } else { "-" }
        );
    }
    s
}
