//! Named example algebras and modules.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::algebra::{from_kupisch, from_quiver, AlgebraError, BasedAlgebra, QuiverArrow, QuiverPresentation, RewriteBudget};
use crate::linalg::{Elem, Field, FieldSpec};
use crate::modrep::{
    endo_algebra, projective, radical_power, regular_module, EndoAlgebra, ModrepError, RightModule,
};
use crate::nakayama::{KupischSeries, NakAlgebra, NakayamaError};

#[derive(Debug, thiserror::Error)]
pub enum FixtureError {
    #[error("unknown fixture {0:?}")]
    Unknown(String),
    #[error("fixture {fixture} needs the field {needs}")]
    WrongField { fixture: String, needs: String },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Modrep(#[from] ModrepError),
    #[error(transparent)]
    Nakayama(#[from] NakayamaError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FixtureId {
    Kupisch455,
    Kupisch56,
    Sym777Gendo,
    PennyFarthingGendo,
    Gf4LocalGendo,
    A2Line,
    Auslander22,
    TwoPeriodicDemo,
    /// Kupisch series `(3s+1, 3s+2, 3s+2)`.
    KupischFamily(usize),
}

impl FixtureId {
    pub const NAMED: [FixtureId; 8] = [
        FixtureId::Kupisch455,
        FixtureId::Kupisch56,
        FixtureId::Sym777Gendo,
        FixtureId::PennyFarthingGendo,
        FixtureId::Gf4LocalGendo,
        FixtureId::A2Line,
        FixtureId::Auslander22,
        FixtureId::TwoPeriodicDemo,
    ];

    pub fn name(&self) -> String {
        match self {
            FixtureId::Kupisch455 => "kupisch-455".into(),
            FixtureId::Kupisch56 => "kupisch-56".into(),
            FixtureId::Sym777Gendo => "sym-777-gendo".into(),
            FixtureId::PennyFarthingGendo => "penny-farthing-gendo".into(),
            FixtureId::Gf4LocalGendo => "gf4-local-gendo".into(),
            FixtureId::A2Line => "a2-line".into(),
            FixtureId::Auslander22 => "auslander-22".into(),
            FixtureId::TwoPeriodicDemo => "two-periodic-demo".into(),
            FixtureId::KupischFamily(s) => format!("kupisch-family-{s}"),
        }
    }

    /// Field used when none is requested.
    pub fn default_field(&self) -> FieldSpec {
        match self {
            FixtureId::Gf4LocalGendo => FieldSpec::Gf4,
            _ => FieldSpec::Prime { p: 2 },
        }
    }
}

impl fmt::Display for FixtureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for FixtureId {
    type Err = FixtureError;

    /// Accepts the fixed names and `kupisch-family-<s>`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if let Some(id) = FixtureId::NAMED.iter().find(|id| id.name() == s) {
            return Ok(*id);
        }
        s.strip_prefix("kupisch-family-")
            .and_then(|t| t.parse::<usize>().ok())
            .filter(|&k| k >= 1)
            .map(FixtureId::KupischFamily)
            .ok_or_else(|| FixtureError::Unknown(s.to_string()))
    }
}

/// A Nakayama algebra with its bound-quiver realisation.
#[derive(Clone, Debug)]
pub struct NakFixture {
    pub nak: NakAlgebra,
    pub algebra: Arc<BasedAlgebra>,
}

/// `B = End_A(generator)` over a base algebra `A`.
#[derive(Clone, Debug)]
pub struct EndoFixture {
    pub base: Arc<BasedAlgebra>,
    pub generator: RightModule,
    pub endo: EndoAlgebra,
    /// Named base modules, used for module lookups and Hom images.
    pub named: Vec<(String, RightModule)>,
}

impl EndoFixture {
    pub fn module(&self, name: &str) -> Option<&RightModule> {
        self.named.iter().find(|(n, _)| n == name).map(|(_, m)| m)
    }
}

#[derive(Clone, Debug)]
pub enum FixtureKind {
    Nakayama(NakFixture),
    Endo(Box<EndoFixture>),
    Plain(Arc<BasedAlgebra>),
}

#[derive(Clone, Debug)]
pub struct Fixture {
    pub id: FixtureId,
    pub kind: FixtureKind,
}

impl Fixture {
    /// The algebra the fixture is about (the endomorphism ring for endo fixtures).
    pub fn algebra(&self) -> &Arc<BasedAlgebra> {
        match &self.kind {
            FixtureKind::Nakayama(n) => &n.algebra,
            FixtureKind::Endo(e) => &e.endo.algebra,
            FixtureKind::Plain(a) => a,
        }
    }
}

/// Builds a fixture over `field`, or over its default field when `None`.
pub fn build(id: FixtureId, field: Option<&FieldSpec>) -> Result<Fixture, FixtureError> {
    let spec = field.cloned().unwrap_or_else(|| id.default_field());
    if id == FixtureId::Gf4LocalGendo && spec != FieldSpec::Gf4 {
        return Err(FixtureError::WrongField { fixture: id.name(), needs: "GF(4)".into() });
    }
    let fld = spec.build().map_err(|e| FixtureError::Algebra(AlgebraError::from(e)))?;
    let nak = |c: Vec<usize>, cyclic: bool| -> Result<FixtureKind, FixtureError> {
        let series = KupischSeries::new(c, cyclic)?;
        let algebra = from_kupisch(&series, &fld);
        Ok(FixtureKind::Nakayama(NakFixture { nak: NakAlgebra::new(series), algebra }))
    };
    let kind = match id {
        FixtureId::Kupisch455 => nak(vec![4, 5, 5], true)?,
        FixtureId::Kupisch56 => nak(vec![5, 6], true)?,
        FixtureId::KupischFamily(s) => nak(vec![3 * s + 1, 3 * s + 2, 3 * s + 2], true)?,
        FixtureId::A2Line => {
            FixtureKind::Plain(from_kupisch(&KupischSeries::linear(vec![2, 1])?, &fld))
        }
        FixtureId::Sym777Gendo => {
            let a = from_kupisch(&KupischSeries::cyclic(vec![7, 7, 7])?, &fld);
            let m = radical_power(&a, 0, 2);
            endo_fixture(&a, vec![m.clone()], vec![("e0J2".into(), m)])?
        }
        FixtureId::PennyFarthingGendo => {
            let a = from_quiver(&penny_farthing_quiver(spec.clone()), RewriteBudget::default())?;
            let s2 = RightModule::simple(&a, 1);
            let named = vec![
                ("S1".into(), RightModule::simple(&a, 0)),
                ("S2".into(), s2.clone()),
                ("e2J".into(), radical_power(&a, 1, 1)),
                ("e2J2".into(), radical_power(&a, 1, 2)),
            ];
            endo_fixture(&a, vec![s2], named)?
        }
        FixtureId::Gf4LocalGendo => {
            let a = from_quiver(&local_quiver(spec.clone()), RewriteBudget::default())?;
            let w = 2;
            let named = vec![
                ("M(1,1)".into(), local_m(&a, 1, 1)),
                ("M(1,w)".into(), local_m(&a, 1, w)),
                ("M(1,w2)".into(), local_m(&a, 1, fld.mul(w, w))),
            ];
            let m11 = named[0].1.clone();
            endo_fixture(&a, vec![m11], named)?
        }
        FixtureId::Auslander22 => {
            let a = from_kupisch(&KupischSeries::cyclic(vec![2, 2])?, &fld);
            let simples = vec![RightModule::simple(&a, 0), RightModule::simple(&a, 1)];
            let named = vec![("S0".into(), simples[0].clone()), ("S1".into(), simples[1].clone())];
            endo_fixture(&a, simples, named)?
        }
        FixtureId::TwoPeriodicDemo => {
            let a = from_kupisch(&KupischSeries::cyclic(vec![3])?, &fld);
            let s = RightModule::simple(&a, 0);
            endo_fixture(&a, vec![s.clone()], vec![("S0".into(), s), ("J".into(), radical_power(&a, 0, 1))])?
        }
    };
    Ok(Fixture { id, kind })
}

fn endo_fixture(
    a: &Arc<BasedAlgebra>,
    extra: Vec<RightModule>,
    named: Vec<(String, RightModule)>,
) -> Result<FixtureKind, FixtureError> {
    let mut parts: Vec<RightModule> = (0..a.vertex_count()).map(|v| projective(a, v)).collect();
    parts.extend(extra);
    let generator = RightModule::direct_sum(&parts, a);
    let endo = endo_algebra(std::slice::from_ref(&generator))?;
    Ok(FixtureKind::Endo(Box::new(EndoFixture { base: a.clone(), generator, endo, named })))
}

/// Vertices 1, 2; a loop `alpha` at 1, `beta1: 1 -> 2`, `beta2: 2 -> 1`, with
/// relations `alpha^2 - beta1 beta2` and `beta2 beta1`.
pub fn penny_farthing_quiver(field: FieldSpec) -> QuiverPresentation {
    let arrow = |s, t, l: &str| QuiverArrow { source: s, target: t, label: l.into() };
    let path = |ls: &[&str]| ls.iter().map(|s| s.to_string()).collect::<Vec<_>>();
    QuiverPresentation {
        relations: vec![
            vec![(1, path(&["alpha", "alpha"])), (minus_one(&field), path(&["beta1", "beta2"]))],
            vec![(1, path(&["beta2", "beta1"]))],
        ],
        field,
        vertices: vec!["1".into(), "2".into()],
        arrows: vec![arrow(0, 0, "alpha"), arrow(0, 1, "beta1"), arrow(1, 0, "beta2")],
    }
}

/// `k[x, y] / (x^2, y^2, xy - yx)` as one vertex with two loops.
pub fn local_quiver(field: FieldSpec) -> QuiverPresentation {
    let arrow = |l: &str| QuiverArrow { source: 0, target: 0, label: l.into() };
    let path = |ls: &[&str]| ls.iter().map(|s| s.to_string()).collect::<Vec<_>>();
    QuiverPresentation {
        relations: vec![
            vec![(1, path(&["x", "x"]))],
            vec![(1, path(&["y", "y"]))],
            vec![(1, path(&["x", "y"])), (minus_one(&field), path(&["y", "x"]))],
        ],
        field,
        vertices: vec!["0".into()],
        arrows: vec![arrow("x"), arrow("y")],
    }
}

fn minus_one(field: &FieldSpec) -> Elem {
    field.build().map(|f| f.neg(1)).unwrap_or(1)
}

/// `M(a, b) = A / (a x + b y) A` over a local algebra with arrows `x`, `y`.
pub fn local_m(alg: &Arc<BasedAlgebra>, a: Elem, b: Elem) -> RightModule {
    let f = alg.field();
    let reg = regular_module(alg);
    let x = alg.to_word_coords(&alg.arrows()[0].vector);
    let y = alg.to_word_coords(&alg.arrows()[1].vector);
    let g: Vec<Elem> = x.iter().zip(&y).map(|(&p, &q)| f.add(f.mul(a, p), f.mul(b, q))).collect();
    reg.quotient(&[g]).target
}

/// The field of a spec, for callers that only hold the spec.
pub fn field_of(spec: &FieldSpec) -> Result<Field, FixtureError> {
    spec.build().map_err(|e| FixtureError::Algebra(AlgebraError::from(e)))
}
