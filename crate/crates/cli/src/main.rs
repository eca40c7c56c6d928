//! `gendo`: homological invariants of finite-dimensional algebras from the command line.

mod io;
mod render;
mod source;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use gendo::fixtures::{FixtureId, FixtureKind};
use gendo::invariants::{run_checks, scan_row, InvariantReport, ModuleRecord, PoolEntry, ScanRow, SuiteConfig, SuiteContext, SCHEMA_VERSION};
use gendo::linalg::FieldSpec;
use gendo::modrep::{DEFAULT_CUTOFF, DEFAULT_SEED};
use gendo::nakayama::KupischSeries;
use rayon::prelude::*;

use render::{Format, ModuleReport, SuiteReport};
use source::{Loaded, Source};

const EXIT_INPUT: u8 = 1;
const EXIT_SUITE: u8 = 2;
const EXIT_SCAN: u8 = 3;

#[derive(Parser)]
#[command(name = "gendo", version, about = "Homological invariants of finite-dimensional algebras over small finite fields")]
struct Cli {
    #[command(flatten)]
    run: RunArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct RunArgs {
    /// Ground field: a prime such as 2 or F5, or GF4.
    #[arg(long, global = true)]
    field: Option<FieldSpec>,
    /// Ext degrees and resolution steps examined before answering "unknown".
    #[arg(long, global = true, default_value_t = DEFAULT_CUTOFF, value_parser = parse_cutoff)]
    cutoff: usize,
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Defaults to csv for `scan` and text otherwise.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Worker threads; defaults to the number of CPUs.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Write the output here instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
}

#[derive(Args, Default)]
struct SourceArgs {
    /// A named fixture, e.g. penny-farthing-gendo or kupisch-family-2.
    #[arg(long, conflicts_with_all = ["nakayama", "algebra"])]
    fixture: Option<String>,
    /// A cyclic Kupisch series such as 4,5,5.
    #[arg(long, conflicts_with = "algebra")]
    nakayama: Option<String>,
    /// An algebra JSON file.
    #[arg(long)]
    algebra: Option<PathBuf>,
    /// Write the algebra as JSON.
    #[arg(long)]
    emit_algebra: Option<PathBuf>,
}

impl SourceArgs {
    fn source(&self) -> Result<Option<Source>> {
        Ok(match (&self.fixture, &self.nakayama, &self.algebra) {
            (Some(f), _, _) => Some(Source::Fixture(f.parse()?)),
            (_, Some(c), _) => Some(Source::Nakayama(KupischSeries::parse(c, true)?)),
            (_, _, Some(p)) => Some(Source::File(p.clone())),
            _ => None,
        })
    }
}

#[derive(Subcommand)]
enum Command {
    /// Full report on a Nakayama algebra given by its Kupisch series.
    Nakayama {
        /// Comma-separated lengths of the indecomposable projectives.
        series: String,
        #[arg(long, conflicts_with = "linear")]
        cyclic: bool,
        #[arg(long)]
        linear: bool,
        #[arg(long)]
        emit_algebra: Option<PathBuf>,
    },
    /// Report on B = End_A(A + summands), or on an endomorphism-algebra fixture.
    Endo {
        #[command(flatten)]
        src: SourceArgs,
        /// Extra summand of the generator: P<v>, I<v>, S<v>, J<v>^<k>, Q<v>^<k> or a fixture module name.
        #[arg(long = "summand")]
        summands: Vec<String>,
    },
    /// Dimensions and Gorenstein verdicts of one module.
    Module {
        #[command(flatten)]
        src: SourceArgs,
        /// P<v>, I<v>, S<v>, J<v>^<k>, Q<v>^<k>, [i,k], Hom(W,X) or @file.json.
        spec: String,
        /// Write the module as JSON.
        #[arg(long)]
        emit_module: Option<PathBuf>,
    },
    /// Bound checks over all cyclic Kupisch series up to the given size.
    Scan {
        #[arg(long, default_value_t = 3)]
        n_max: usize,
        #[arg(long, default_value_t = 7)]
        c_max: usize,
        /// Largest accepted n_max * c_max.
        #[arg(long, default_value_t = 64)]
        budget: usize,
    },
    /// Theorem checks (a)-(k); every named fixture unless a source is given.
    Suite {
        #[command(flatten)]
        src: SourceArgs,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_INPUT } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}

fn parse_cutoff(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("the cutoff must be at least 1".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

fn config(run: &RunArgs) -> SuiteConfig {
    SuiteConfig { cutoff: run.cutoff, seed: run.seed, ..SuiteConfig::default() }
}

fn emit(run: &RunArgs, default: Format, json: &dyn Fn(&mut Vec<u8>) -> Result<()>, csv: &dyn Fn(&mut Vec<u8>) -> Result<()>, text: &dyn Fn() -> String) -> Result<()> {
    let mut buf = Vec::new();
    match run.format.unwrap_or(default) {
        Format::Json => json(&mut buf)?,
        Format::Csv => csv(&mut buf)?,
        Format::Text => buf.extend(text().into_bytes()),
    }
    match &run.output {
        Some(p) => std::fs::write(p, buf).with_context(|| format!("writing {}", p.display())),
        None => {
            use std::io::Write;
            std::io::stdout().write_all(&buf)?;
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    if let Some(j) = cli.run.jobs {
        rayon::ThreadPoolBuilder::new().num_threads(j.max(1)).build_global()?;
    }
    let run = &cli.run;
    match &cli.command {
        Command::Nakayama { series, linear, emit_algebra, .. } => {
            let loaded = source::load(&Source::Nakayama(KupischSeries::parse(series, !linear)?), run.field.as_ref())?;
            maybe_emit_algebra(emit_algebra.as_deref(), &loaded)?;
            report_command(run, &loaded)
        }
        Command::Endo { src, summands } => {
            let Some(source) = src.source()? else { bail!("give --fixture, --nakayama or --algebra") };
            let base = source::load(&source, run.field.as_ref())?;
            let loaded = match (&base.kind, summands.is_empty()) {
                (FixtureKind::Endo(_), true) => base,
                (_, true) => bail!("{} is not an endomorphism algebra; add --summand", base.name),
                (_, false) => source::endo_over(&base, summands)?,
            };
            maybe_emit_algebra(src.emit_algebra.as_deref(), &loaded)?;
            report_command(run, &loaded)
        }
        Command::Module { src, spec, emit_module } => module_command(run, src, spec, emit_module.as_deref()),
        Command::Scan { n_max, c_max, budget } => scan_command(run, *n_max, *c_max, *budget),
        Command::Suite { src } => suite_command(run, src),
    }
}

fn maybe_emit_algebra(path: Option<&Path>, loaded: &Loaded) -> Result<()> {
    match path {
        Some(p) => io::write_algebra(p, &loaded.name, loaded.algebra()),
        None => Ok(()),
    }
}

fn build_report(run: &RunArgs, loaded: &Loaded) -> Result<InvariantReport> {
    let cfg = config(run);
    let ctx = SuiteContext::build(&loaded.kind, &cfg)?;
    let checks = run_checks(&ctx);
    Ok(InvariantReport::new(&loaded.name, &loaded.kind, &ctx, checks, cfg.seed))
}

fn report_command(run: &RunArgs, loaded: &Loaded) -> Result<u8> {
    let r = build_report(run, loaded)?;
    emit(
        run,
        Format::Text,
        &|out| render::json(out, &r),
        &|out| render::modules_csv(out, &r.algebra, &r.modules),
        &|| render::report_text(&r),
    )?;
    Ok(if r.suite_failed() { EXIT_SUITE } else { 0 })
}

fn module_command(run: &RunArgs, src: &SourceArgs, spec: &str, emit_module: Option<&Path>) -> Result<u8> {
    let source = match (src.source()?, spec.strip_prefix('@')) {
        (Some(s), _) => s,
        (None, Some(path)) => Source::parse_ref(&io::read_module_file(Path::new(path))?.algebra_ref)?,
        (None, None) => bail!("give --fixture, --nakayama or --algebra"),
    };
    let loaded = source::load(&source, run.field.as_ref())?;
    maybe_emit_algebra(src.emit_algebra.as_deref(), &loaded)?;
    let (name, m) = source::resolve_module(&loaded, spec)?;
    if let Some(p) = emit_module {
        io::write_module(p, &name, &loaded.reference, &m)?;
    }
    let entry = PoolEntry::new(name, m, run.cutoff);
    let r = ModuleReport {
        schema_version: SCHEMA_VERSION,
        algebra: loaded.name.clone(),
        field: loaded.algebra().field().name(),
        seed: run.seed,
        cutoff: run.cutoff,
        module: ModuleRecord::from_entry(&entry, run.cutoff),
    };
    emit(
        run,
        Format::Text,
        &|out| render::json(out, &r),
        &|out| render::modules_csv(out, &r.algebra, [&r.module]),
        &|| render::module_text(&r),
    )?;
    Ok(0)
}

fn scan_command(run: &RunArgs, n_max: usize, c_max: usize, budget: usize) -> Result<u8> {
    if n_max * c_max > budget {
        bail!("scan budget exceeded: n_max * c_max = {} > {budget}", n_max * c_max);
    }
    let field = source::field_of(run.field.as_ref())?;
    let series: Vec<KupischSeries> = (1..=n_max).flat_map(|n| KupischSeries::enumerate_cyclic(n, c_max)).collect();
    let rows: Vec<ScanRow> = series.par_iter().map(|s| scan_row(s, &field, run.cutoff)).collect();
    #[derive(serde::Serialize)]
    struct ScanOutput<'a> {
        schema_version: u32,
        seed: u64,
        n_max: usize,
        c_max: usize,
        rows: &'a [ScanRow],
    }
    let out = ScanOutput { schema_version: SCHEMA_VERSION, seed: run.seed, n_max, c_max, rows: &rows };
    emit(run, Format::Csv, &|o| render::json(o, &out), &|o| render::scan_csv(o, &rows), &|| render::scan_text(&rows))?;
    Ok(if rows.iter().any(ScanRow::is_violation) { EXIT_SCAN } else { 0 })
}

fn suite_command(run: &RunArgs, src: &SourceArgs) -> Result<u8> {
    let sources: Vec<Source> = match src.source()? {
        Some(s) => vec![s],
        None => FixtureId::NAMED.iter().map(|id| Source::Fixture(*id)).collect(),
    };
    let cfg = config(run);
    let reports = sources
        .par_iter()
        .map(|s| {
            // Named fixtures pick their own field unless one is forced.
            let loaded = source::load(s, run.field.as_ref())?;
            if let Some(p) = &src.emit_algebra {
                io::write_algebra(p, &loaded.name, loaded.algebra())?;
            }
            let ctx = SuiteContext::build(&loaded.kind, &cfg)?;
            Ok(SuiteReport { schema_version: SCHEMA_VERSION, algebra: loaded.name, seed: cfg.seed, cutoff: cfg.cutoff, checks: run_checks(&ctx) })
        })
        .collect::<Result<Vec<_>>>()?;
    #[derive(serde::Serialize)]
    struct SuiteOutput<'a> {
        schema_version: u32,
        reports: &'a [SuiteReport],
    }
    let out = SuiteOutput { schema_version: SCHEMA_VERSION, reports: &reports };
    emit(run, Format::Text, &|o| render::json(o, &out), &|o| render::checks_csv(o, &reports), &|| render::suite_text(&reports))?;
    let failed = reports.iter().any(|r| r.checks.iter().any(|c| c.is_fail()));
    Ok(if failed { EXIT_SUITE } else { 0 })
}
