//! Resolving algebra sources and module specifications.

use std::path::{Path, PathBuf};
use std::sync::Arc;

use anyhow::{anyhow, bail, Context, Result};
use gendo::algebra::{from_kupisch, BasedAlgebra};
use gendo::fixtures::{self, EndoFixture, FixtureId, FixtureKind, NakFixture};
use gendo::linalg::{Field, FieldSpec};
use gendo::modrep::{injective, projective, projective_quotient, radical_power, RightModule};
use gendo::nakayama::{bridge_module, KupischSeries, NakAlgebra};

use crate::io;

#[derive(Clone, Debug)]
pub enum Source {
    Fixture(FixtureId),
    Nakayama(KupischSeries),
    File(PathBuf),
}

impl Source {
    /// Parses `fixture:<name>`, `nakayama:<c0,c1,..>:<cyclic|linear>` or `file:<path>`.
    pub fn parse_ref(s: &str) -> Result<Source> {
        if let Some(name) = s.strip_prefix("fixture:") {
            return Ok(Source::Fixture(name.parse()?));
        }
        if let Some(rest) = s.strip_prefix("nakayama:") {
            let (c, shape) = rest.rsplit_once(':').unwrap_or((rest, "cyclic"));
            let cyclic = match shape {
                "cyclic" => true,
                "linear" => false,
                other => bail!("unknown Nakayama shape {other:?}"),
            };
            return Ok(Source::Nakayama(KupischSeries::parse(c, cyclic)?));
        }
        if let Some(p) = s.strip_prefix("file:") {
            return Ok(Source::File(PathBuf::from(p)));
        }
        bail!("algebra reference {s:?} must start with fixture:, nakayama: or file:")
    }

    pub fn to_ref(&self) -> String {
        match self {
            Source::Fixture(id) => format!("fixture:{id}"),
            Source::Nakayama(s) => {
                let c: Vec<String> = s.lengths().iter().map(usize::to_string).collect();
                format!("nakayama:{}:{}", c.join(","), if s.is_cyclic() { "cyclic" } else { "linear" })
            }
            Source::File(p) => format!("file:{}", p.display()),
        }
    }
}

pub struct Loaded {
    pub name: String,
    pub reference: String,
    pub kind: FixtureKind,
}

impl Loaded {
    pub fn algebra(&self) -> &Arc<BasedAlgebra> {
        match &self.kind {
            FixtureKind::Nakayama(n) => &n.algebra,
            FixtureKind::Endo(e) => &e.endo.algebra,
            FixtureKind::Plain(a) => a,
        }
    }
}

pub fn field_of(spec: Option<&FieldSpec>) -> Result<Field> {
    Ok(spec.cloned().unwrap_or(FieldSpec::Prime { p: 2 }).build()?)
}

pub fn load(source: &Source, field: Option<&FieldSpec>) -> Result<Loaded> {
    let reference = source.to_ref();
    let (name, kind) = match source {
        Source::Fixture(id) => (id.name(), fixtures::build(*id, field)?.kind),
        Source::Nakayama(s) => {
            let algebra = from_kupisch(s, &field_of(field)?);
            (s.label(), FixtureKind::Nakayama(NakFixture { nak: NakAlgebra::new(s.clone()), algebra }))
        }
        Source::File(p) => {
            let (name, a) = io::read_algebra(p)?;
            if let Some(f) = field {
                if a.field().spec() != *f {
                    bail!("{} is over {}, not the requested field", p.display(), a.field().name());
                }
            }
            (name, FixtureKind::Plain(a))
        }
    };
    Ok(Loaded { name, reference, kind })
}

/// `W = A ⊕ summands` over the algebra of `base`.
pub fn endo_over(base: &Loaded, summands: &[String]) -> Result<Loaded> {
    let a = base.algebra().clone();
    let mut parts: Vec<RightModule> = (0..a.vertex_count()).map(|v| projective(&a, v)).collect();
    let mut named = Vec::new();
    for s in summands {
        let m = module_over(&a, s, &[]).with_context(|| format!("summand {s}"))?;
        parts.push(m.clone());
        named.push((s.clone(), m));
    }
    let generator = RightModule::direct_sum(&parts, &a);
    let endo = gendo::modrep::endo_algebra(std::slice::from_ref(&generator))?;
    Ok(Loaded {
        name: format!("End({} + {})", base.name, summands.join(" + ")),
        reference: base.reference.clone(),
        kind: FixtureKind::Endo(Box::new(EndoFixture { base: a, generator, endo, named })),
    })
}

fn vertex(s: &str, a: &BasedAlgebra) -> Result<usize> {
    let v: usize = s.parse().map_err(|_| anyhow!("bad vertex {s:?}"))?;
    if v >= a.vertex_count() {
        bail!("vertex {v} out of range (the algebra has {} vertices)", a.vertex_count());
    }
    Ok(v)
}

/// `P<v>`, `I<v>`, `S<v>`, `J<v>^<k>` (`e_v J^k`), `Q<v>^<k>` (`e_v A / e_v J^k`),
/// or the name of one of `named`.
pub fn module_over(a: &Arc<BasedAlgebra>, spec: &str, named: &[(String, RightModule)]) -> Result<RightModule> {
    if let Some((_, m)) = named.iter().find(|(n, _)| n == spec) {
        return Ok(m.clone());
    }
    let (head, rest) = spec.split_at(spec.chars().next().map_or(0, char::len_utf8));
    let power = |rest: &str| -> Result<(usize, usize)> {
        let (v, k) = rest.split_once('^').ok_or_else(|| anyhow!("{spec:?}: expected <vertex>^<power>"))?;
        Ok((vertex(v, a)?, k.parse().map_err(|_| anyhow!("bad power in {spec:?}"))?))
    };
    Ok(match head {
        "P" => projective(a, vertex(rest, a)?),
        "I" => injective(a, vertex(rest, a)?),
        "S" => RightModule::simple(a, vertex(rest, a)?),
        "J" => {
            let (v, k) = power(rest)?;
            radical_power(a, v, k)
        }
        "Q" => {
            let (v, k) = power(rest)?;
            projective_quotient(a, v, k)
        }
        _ => bail!("cannot parse module {spec:?}"),
    })
}

/// Resolves a module over the algebra of `src`; returns its display name.
///
/// Besides [`module_over`], accepts Nakayama coordinates `[i,k]`, `Hom(W,X)`
/// over an endomorphism algebra and `@file.json`.
pub fn resolve_module(src: &Loaded, spec: &str) -> Result<(String, RightModule)> {
    let spec = spec.trim();
    if let Some(path) = spec.strip_prefix('@') {
        let file = io::read_module_file(Path::new(path))?;
        let m = io::module_from_file(&file, src.algebra())?;
        return Ok((file.name, m));
    }
    if let Some(inner) = spec.strip_prefix('[').and_then(|s| s.strip_suffix(']')) {
        let FixtureKind::Nakayama(n) = &src.kind else {
            bail!("coordinates {spec} need a Nakayama algebra");
        };
        let (i, k) = inner.split_once(',').ok_or_else(|| anyhow!("expected [i,k], got {spec}"))?;
        let parse = |t: &str| t.trim().parse::<usize>().map_err(|_| anyhow!("bad coordinate in {spec}"));
        let m = n.nak.module(parse(i)?, parse(k)?)?;
        return Ok((m.to_string(), bridge_module(&n.algebra, m)));
    }
    if let Some(inner) = spec.strip_prefix("Hom(W,").and_then(|s| s.strip_suffix(')')) {
        let FixtureKind::Endo(e) = &src.kind else {
            bail!("{spec} needs an endomorphism algebra");
        };
        let x = module_over(&e.base, inner.trim(), &e.named)?;
        return Ok((spec.to_string(), e.endo.hom_functor(&x)?));
    }
    Ok((spec.to_string(), module_over(src.algebra(), spec, &[])?))
}
