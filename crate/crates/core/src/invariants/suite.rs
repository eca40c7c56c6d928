//! Executable checks of the main structural statements on a fixture.
//!
//! A [`SuiteContext`] gathers the algebra-level data and a pool of
//! indecomposables once; each check then reads from it.

use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{BasedAlgebra, Corner};
use crate::fixtures::{EndoFixture, Fixture, FixtureKind, NakFixture};
use crate::modrep::{
    codomdim, cosyzygy, decompose, domdim, ext_dim, hom_dim, in_add, indecomposable_summands, is_injective,
    injective_is_projective, is_projective, iso, projdim, projective_is_injective, regular_module, syzygy, tau, tau_inv, HomologicalDim,
    RightModule, DEFAULT_CUTOFF, DEFAULT_SEED,
};
use crate::nakayama::{bridge_module, NakAlgebra, NakModule};

use super::algebra_dims::{algebra_codomdim, algebra_domdim, fdomdim, gendo_symmetric_check, gorenstein_dims};
use super::ar::{almost_split_sequence, knit_indecomposables, IndecPool, KnitBudget};
use super::gorenstein::{ext_vanishing, gpi_test, GpiVerdict, Vanishing};
use super::nakayama_checks::{gpi_with_finite_domdim, nearly_gorenstein_check_nak};
use super::{Fdomdim, GorensteinDims, InvariantsError};

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    /// Ext degrees and resolution steps examined before answering Unknown.
    pub cutoff: usize,
    pub seed: u64,
    /// Knitting limits for the base algebra of an endomorphism fixture.
    pub base_budget: KnitBudget,
    /// Knitting limits for the fixture algebra itself.
    pub pool_budget: KnitBudget,
    /// Number of modules whose pairs enter the Ext comparison.
    pub pair_sample: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            cutoff: DEFAULT_CUTOFF,
            seed: DEFAULT_SEED,
            base_budget: KnitBudget { modules: 60, max_dim: 16 },
            pool_budget: KnitBudget { modules: 24, max_dim: 16 },
            pair_sample: 6,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckVerdict {
    pub id: char,
    pub title: &'static str,
    pub status: CheckStatus,
    /// What was checked on a pass, the witness on a failure, the reason for a skip.
    pub detail: String,
}

impl CheckVerdict {
    fn new(id: char, status: CheckStatus, detail: impl Into<String>) -> Self {
        let title = TITLES.iter().find(|(c, _)| *c == id).map(|(_, t)| *t).unwrap_or("");
        CheckVerdict { id, title, status, detail: detail.into() }
    }

    pub fn is_fail(&self) -> bool {
        self.status == CheckStatus::Fail
    }
}

const TITLES: [(char, &str); 11] = [
    ('a', "tau equals second syzygy over a symmetric algebra"),
    ('b', "codominant dimension two iff tau equals second syzygy"),
    ('c', "GPI iff infinite dominant and codominant dimension"),
    ('d', "nonprojective GPI closed under AR neighbours"),
    ('e', "CM-finite implies no nonprojective GPI"),
    ('f', "finitistic dominant dimension at most g+1"),
    ('g', "corner restriction of GPI lands in the Ext-perpendicular"),
    ('h', "Ext preserved by Hom from the faithful projective-injective"),
    ('i', "Dom_i equals the i-th syzygy category"),
    ('j', "some Ext into the regular module is nonzero"),
    ('k', "projectives are Dom_d when domdim and gldim are d"),
];

/// A pool module with the data every check needs.
#[derive(Clone, Debug)]
pub struct PoolEntry {
    pub name: String,
    pub module: RightModule,
    pub projective: bool,
    pub injective: bool,
    pub domdim: HomologicalDim,
    pub codomdim: HomologicalDim,
    pub gpi: GpiVerdict,
}

impl PoolEntry {
    pub fn new(name: String, module: RightModule, cutoff: usize) -> Self {
        PoolEntry {
            name,
            projective: is_projective(&module),
            injective: is_injective(&module),
            domdim: domdim(&module, cutoff),
            codomdim: codomdim(&module, cutoff),
            gpi: gpi_test(&module, cutoff),
            module,
        }
    }

    /// Computes the entries in parallel, keeping the input order.
    fn many(items: Vec<(String, RightModule)>, cutoff: usize) -> Vec<Self> {
        items.into_par_iter().map(|(n, m)| PoolEntry::new(n, m, cutoff)).collect()
    }

    fn nonprojective_gpi(&self) -> bool {
        !self.projective && self.gpi.is_yes()
    }
}

/// The base algebra of an endomorphism fixture with its knitted pool.
#[derive(Clone, Debug)]
pub struct BaseData {
    pub algebra: Arc<BasedAlgebra>,
    pub generator: RightModule,
    pub pool: IndecPool,
    pub names: Vec<String>,
    pub symmetric: bool,
}

#[derive(Clone, Debug)]
pub struct SuiteContext {
    pub algebra: Arc<BasedAlgebra>,
    pub cutoff: usize,
    pub pair_sample: usize,
    pub domdim: HomologicalDim,
    pub codomdim: HomologicalDim,
    pub gordims: GorensteinDims,
    pub symmetric: bool,
    pub selfinjective: bool,
    pub gendo_symmetric: bool,
    /// `Some` only when certified; the reason says how.
    pub nearly_gorenstein: Option<bool>,
    pub nearly_gorenstein_reason: String,
    pub cm_finite: Option<bool>,
    pub fdomdim: Option<Fdomdim>,
    pub pool: Vec<PoolEntry>,
    pub pool_exhaustive: bool,
    pub base: Option<BaseData>,
    pub nak: Option<NakAlgebra>,
}

impl SuiteContext {
    pub fn build(kind: &FixtureKind, cfg: &SuiteConfig) -> Result<Self, InvariantsError> {
        match kind {
            FixtureKind::Nakayama(n) => Ok(Self::nakayama(n, cfg)),
            FixtureKind::Endo(e) => Self::endo(e, cfg),
            FixtureKind::Plain(a) => Self::plain(a, cfg),
        }
    }

    fn common(a: &Arc<BasedAlgebra>, cfg: &SuiteConfig, pool: Vec<PoolEntry>, exhaustive: bool) -> Self {
        let cutoff = cfg.cutoff;
        SuiteContext {
            algebra: a.clone(),
            cutoff,
            pair_sample: cfg.pair_sample,
            domdim: algebra_domdim(a, cutoff),
            codomdim: algebra_codomdim(a, cutoff),
            gordims: gorenstein_dims(a, cutoff),
            symmetric: a.is_symmetric(cfg.seed).is_symmetric(),
            selfinjective: projective_is_injective(a).iter().all(|&b| b),
            gendo_symmetric: gendo_symmetric_check(a, cutoff),
            nearly_gorenstein: None,
            nearly_gorenstein_reason: "not certified".into(),
            cm_finite: None,
            fdomdim: None,
            pool,
            pool_exhaustive: exhaustive,
            base: None,
            nak: None,
        }
    }

    fn nakayama(n: &NakFixture, cfg: &SuiteConfig) -> Self {
        let items = n.nak.indecomposables().into_iter().map(|m| (m.to_string(), bridge_module(&n.algebra, m))).collect();
        let pool = PoolEntry::many(items, cfg.cutoff);
        let mut ctx = Self::common(&n.algebra, cfg, pool, true);
        let ng = nearly_gorenstein_check_nak(&n.nak);
        ctx.nearly_gorenstein = Some(ng.holds);
        ctx.nearly_gorenstein_reason = match ng.witness {
            None => "perpendicular categories match the Ringel classification".into(),
            Some((m, side)) => format!("mismatch at {m} ({side:?})"),
        };
        ctx.cm_finite = Some(true);
        ctx.fdomdim = Some(Fdomdim { value: n.nak.invariants().fdomdim, certified: true });
        ctx.nak = Some(n.nak.clone());
        ctx
    }

    fn endo(e: &EndoFixture, cfg: &SuiteConfig) -> Result<Self, InvariantsError> {
        let base_pool = knit_with(&e.base, cfg.base_budget, &e.named)?;
        let names: Vec<String> = base_pool
            .modules
            .iter()
            .enumerate()
            .map(|(j, x)| {
                e.named.iter().find(|(_, m)| iso(m, x).is_iso()).map(|(n, _)| n.clone()).unwrap_or(format!("X{j}"))
            })
            .collect();
        let mut modules = Vec::new();
        let mut labels = Vec::new();
        for (x, name) in base_pool.modules.iter().zip(&names) {
            modules.push(e.endo.hom_functor(x)?);
            labels.push(format!("Hom(W,{name})"));
        }
        let b = &e.endo.algebra;
        let knitted = knit_indecomposables(b, cfg.pool_budget)?;
        let exhaustive = knitted.exhaustive;
        for (j, y) in knitted.modules.into_iter().enumerate() {
            if !modules.iter().any(|m| iso(m, &y).is_iso()) {
                modules.push(y);
                labels.push(format!("Y{j}"));
            }
        }
        let pool = PoolEntry::many(labels.into_iter().zip(modules).collect(), cfg.cutoff);
        let mut ctx = Self::common(b, cfg, pool, exhaustive);
        let rep_finite = base_pool.exhaustive;
        // The image of Hom(W, -) is Dom_2, and every other module has dominant
        // dimension at most 1, so the images alone decide the finite values.
        let images = IndecPool { modules: ctx.pool[..names.len()].iter().map(|p| p.module.clone()).collect(), exhaustive: rep_finite };
        ctx.fdomdim = rep_finite.then(|| fdomdim(&images, cfg.cutoff));
        // The corner at the projective-injectives is the base algebra.
        if rep_finite && ctx.domdim.at_least(2) == Some(true) {
            ctx.nearly_gorenstein = Some(true);
            ctx.cm_finite = Some(true);
            ctx.nearly_gorenstein_reason = "dominant dimension at least 2 over a representation-finite corner".into();
        } else if ctx.gordims.is_gorenstein() {
            ctx.nearly_gorenstein = Some(true);
            ctx.nearly_gorenstein_reason = "Gorenstein".into();
        }
        ctx.base = Some(BaseData {
            algebra: e.base.clone(),
            generator: e.generator.clone(),
            symmetric: e.base.is_symmetric(cfg.seed).is_symmetric(),
            pool: base_pool,
            names,
        });
        Ok(ctx)
    }

    fn plain(a: &Arc<BasedAlgebra>, cfg: &SuiteConfig) -> Result<Self, InvariantsError> {
        let knitted = knit_indecomposables(a, cfg.pool_budget)?;
        let exhaustive = knitted.exhaustive;
        let items = knitted.modules.into_iter().enumerate().map(|(j, m)| (format!("Y{j}"), m)).collect();
        let pool = PoolEntry::many(items, cfg.cutoff);
        let mut ctx = Self::common(a, cfg, pool, exhaustive);
        if exhaustive {
            let ms: Vec<RightModule> = ctx.pool.iter().map(|p| p.module.clone()).collect();
            ctx.fdomdim = Some(fdomdim(&IndecPool { modules: ms, exhaustive }, cfg.cutoff));
            ctx.cm_finite = Some(true);
            ctx.nearly_gorenstein = Some(true);
            ctx.nearly_gorenstein_reason = "representation-finite".into();
        } else if ctx.gordims.is_gorenstein() {
            ctx.nearly_gorenstein = Some(true);
            ctx.nearly_gorenstein_reason = "Gorenstein".into();
        }
        Ok(ctx)
    }

    fn projective_injective_corner(&self) -> Option<Corner> {
        let verts: Vec<usize> =
            projective_is_injective(&self.algebra).iter().enumerate().filter(|(_, &b)| b).map(|(v, _)| v).collect();
        if verts.is_empty() {
            return None;
        }
        self.algebra.corner_algebra(&verts).ok()
    }

    fn global_dimension(&self) -> HomologicalDim {
        (0..self.algebra.vertex_count())
            .map(|v| projdim(&RightModule::simple(&self.algebra, v), self.cutoff))
            .reduce(HomologicalDim::max)
            .unwrap_or_else(HomologicalDim::zero_module)
    }
}

/// Knits `a` and appends the named modules that the closure did not reach.
fn knit_with(a: &Arc<BasedAlgebra>, budget: KnitBudget, named: &[(String, RightModule)]) -> Result<IndecPool, InvariantsError> {
    let mut pool = knit_indecomposables(a, budget)?;
    for (_, m) in named {
        for s in decompose(m)?.modules() {
            if !pool.modules.iter().any(|x| iso(x, &s).is_iso()) {
                pool.modules.push(s);
            }
        }
    }
    Ok(pool)
}

/// Builds the context for `fx` and runs every check.
pub fn theorem_suite(fx: &Fixture, cfg: &SuiteConfig) -> Result<Vec<CheckVerdict>, InvariantsError> {
    Ok(run_checks(&SuiteContext::build(&fx.kind, cfg)?))
}

/// Runs the checks in parallel; the result is ordered by check id.
pub fn run_checks(ctx: &SuiteContext) -> Vec<CheckVerdict> {
    const CHECKS: [fn(&SuiteContext) -> CheckVerdict; 11] =
        [check_a, check_b, check_c, check_d, check_e, check_f, check_g, check_h, check_i, check_j, check_k];
    CHECKS.par_iter().map(|check| check(ctx)).collect()
}

use CheckStatus::{Fail, Pass, Skipped};

fn not_gendo(id: char) -> CheckVerdict {
    CheckVerdict::new(id, Skipped, "the algebra is not gendo-symmetric")
}

fn check_a(ctx: &SuiteContext) -> CheckVerdict {
    let (label, modules): (&str, Vec<(&str, &RightModule)>) = if ctx.symmetric {
        ("the algebra", ctx.pool.iter().map(|p| (p.name.as_str(), &p.module)).collect())
    } else if let Some(b) = ctx.base.as_ref().filter(|b| b.symmetric) {
        ("the base algebra", b.names.iter().map(String::as_str).zip(&b.pool.modules).collect())
    } else {
        return CheckVerdict::new('a', Skipped, "neither the algebra nor a base algebra is symmetric");
    };
    let mut count = 0;
    for (name, m) in modules.into_iter().filter(|(_, m)| !is_projective(m)) {
        if !iso(&tau(m), &syzygy(m, 2)).is_iso() {
            return CheckVerdict::new('a', Fail, format!("τ({name}) is not isomorphic to Ω²({name})"));
        }
        count += 1;
    }
    CheckVerdict::new('a', Pass, format!("{count} nonprojective indecomposables over {label}"))
}

fn check_b(ctx: &SuiteContext) -> CheckVerdict {
    if !ctx.gendo_symmetric {
        return not_gendo('b');
    }
    let mut checked = 0;
    let mut inconclusive = 0;
    for p in &ctx.pool {
        let m = &p.module;
        if !p.projective {
            match p.codomdim.at_least(2) {
                Some(lhs) if lhs != iso(&tau(m), &syzygy(m, 2)).is_iso() => {
                    return CheckVerdict::new('b', Fail, format!("{}: codomdim {} but τ vs Ω² disagrees", p.name, p.codomdim))
                }
                Some(_) => checked += 1,
                None => inconclusive += 1,
            }
        }
        if !p.injective {
            match p.domdim.at_least(2) {
                Some(lhs) if lhs != iso(&tau_inv(m), &cosyzygy(m, 2)).is_iso() => {
                    return CheckVerdict::new('b', Fail, format!("{}: domdim {} but τ⁻¹ vs Ω⁻² disagrees", p.name, p.domdim))
                }
                Some(_) => checked += 1,
                None => inconclusive += 1,
            }
        }
    }
    CheckVerdict::new('b', Pass, format!("{checked} instances on nonprojective and noninjective pool modules, {inconclusive} inconclusive"))
}

fn check_c(ctx: &SuiteContext) -> CheckVerdict {
    if !ctx.gendo_symmetric {
        let mut reason = "the algebra is not gendo-symmetric".to_string();
        if let Some((m, d)) = ctx.nak.as_ref().and_then(gpi_with_finite_domdim) {
            reason.push_str(&format!("; the equivalence fails here: {m} is Gorenstein projective-injective with domdim {d}"));
        }
        return CheckVerdict::new('c', Skipped, reason);
    }
    if ctx.selfinjective {
        return CheckVerdict::new('c', Skipped, "the algebra is selfinjective");
    }
    if ctx.nearly_gorenstein != Some(true) {
        return CheckVerdict::new('c', Skipped, "nearly Gorenstein property not certified");
    }
    let (mut checked, mut gpi, mut inconclusive) = (0, 0, 0);
    for p in ctx.pool.iter().filter(|p| !p.projective && !p.injective) {
        let sides = [p.gpi.decided(), p.domdim.is_decided().then(|| p.domdim.is_infinite()), p.codomdim.is_decided().then(|| p.codomdim.is_infinite())];
        let known: Vec<bool> = sides.iter().flatten().copied().collect();
        if known.windows(2).any(|w| w[0] != w[1]) {
            return CheckVerdict::new(
                'c',
                Fail,
                format!("{}: gpi {:?}, domdim {}, codomdim {}", p.name, p.gpi.decided(), p.domdim, p.codomdim),
            );
        }
        if known.len() < 3 {
            inconclusive += 1;
        } else {
            checked += 1;
            gpi += usize::from(known[0]);
        }
    }
    CheckVerdict::new('c', Pass, format!("{checked} modules decided, {gpi} nonprojective GPI, {inconclusive} inconclusive"))
}

fn check_d(ctx: &SuiteContext) -> CheckVerdict {
    if !ctx.gendo_symmetric {
        return not_gendo('d');
    }
    let gpis: Vec<&PoolEntry> = ctx.pool.iter().filter(|p| p.nonprojective_gpi()).collect();
    if gpis.is_empty() {
        return CheckVerdict::new('d', Pass, "no nonprojective GPI module in the pool");
    }
    let (mut checked, mut inconclusive) = (0, 0);
    for p in gpis {
        let m = &p.module;
        let mut nbrs = vec![("τ", tau(m)), ("τ⁻¹", tau_inv(m)), ("Ω²", syzygy(m, 2)), ("Ω⁻²", cosyzygy(m, 2))];
        match almost_split_sequence(m) {
            Ok(seq) => nbrs.push(("AR middle term", seq.middle().clone())),
            Err(e) => return CheckVerdict::new('d', Fail, format!("{}: no almost split sequence: {e}", p.name)),
        }
        for (op, x) in nbrs {
            let parts = match decompose(&x) {
                Ok(d) => d.modules(),
                Err(e) => return CheckVerdict::new('d', Fail, format!("{op}({}): {e}", p.name)),
            };
            for s in parts {
                match gpi_test(&s, ctx.cutoff).decided() {
                    Some(true) => checked += 1,
                    Some(false) => {
                        return CheckVerdict::new('d', Fail, format!("a summand of {op}({}) is not GPI", p.name))
                    }
                    None => inconclusive += 1,
                }
            }
        }
    }
    CheckVerdict::new('d', Pass, format!("{checked} neighbour summands are GPI, {inconclusive} inconclusive"))
}

fn check_e(ctx: &SuiteContext) -> CheckVerdict {
    if !ctx.gendo_symmetric {
        return not_gendo('e');
    }
    if ctx.cm_finite != Some(true) {
        return CheckVerdict::new('e', Skipped, "CM-finiteness not certified");
    }
    match ctx.pool.iter().find(|p| p.nonprojective_gpi()) {
        Some(p) => CheckVerdict::new('e', Fail, format!("{} is a nonprojective GPI module", p.name)),
        None => CheckVerdict::new('e', Pass, format!("none among {} pool modules", ctx.pool.len())),
    }
}

fn check_f(ctx: &SuiteContext) -> CheckVerdict {
    if !ctx.gendo_symmetric {
        return not_gendo('f');
    }
    if ctx.cm_finite != Some(true) {
        return CheckVerdict::new('f', Skipped, "CM-finiteness not certified");
    }
    let Some(g) = ctx.gordims.value() else {
        return CheckVerdict::new('f', Skipped, "the algebra is not Gorenstein");
    };
    let Some(fd) = ctx.fdomdim.filter(|f| f.certified) else {
        return CheckVerdict::new('f', Skipped, "finitistic dominant dimension not certified");
    };
    if let Some(p) = ctx.pool.iter().find(|p| !p.injective && p.domdim.is_infinite()) {
        return CheckVerdict::new('f', Fail, format!("noninjective {} has infinite dominant dimension", p.name));
    }
    if fd.value > g + 1 {
        return CheckVerdict::new('f', Fail, format!("fdomdim {} exceeds g+1 = {}", fd.value, g + 1));
    }
    CheckVerdict::new('f', Pass, format!("fdomdim {} ≤ g+1 = {}", fd.value, g + 1))
}

fn in_perp(x: &RightModule, w: &RightModule, cutoff: usize) -> Option<bool> {
    let side = |v: Vanishing| match v {
        Vanishing::All { .. } => Some(true),
        Vanishing::FailsAt(_) => Some(false),
        Vanishing::Unknown { .. } => None,
    };
    match (side(ext_vanishing(x, w, cutoff)), side(ext_vanishing(w, x, cutoff))) {
        (Some(false), _) | (_, Some(false)) => Some(false),
        (Some(true), Some(true)) => Some(true),
        _ => None,
    }
}

fn check_g(ctx: &SuiteContext) -> CheckVerdict {
    if !ctx.gendo_symmetric {
        return not_gendo('g');
    }
    if ctx.selfinjective {
        return CheckVerdict::new('g', Skipped, "the algebra is selfinjective");
    }
    if ctx.nearly_gorenstein != Some(true) {
        return CheckVerdict::new('g', Skipped, "nearly Gorenstein property not certified");
    }
    let Some(corner) = ctx.projective_injective_corner() else {
        return CheckVerdict::new('g', Skipped, "no projective-injective module");
    };
    let be = regular_module(&ctx.algebra).restrict_to_corner(&corner);
    let mut images: Vec<(&str, RightModule)> = Vec::new();
    let (mut dense, mut inconclusive) = (0, 0);
    for p in &ctx.pool {
        let xe = p.module.restrict_to_corner(&corner);
        match p.gpi.decided() {
            Some(true) => {
                match in_perp(&xe, &be, ctx.cutoff) {
                    Some(true) => {}
                    Some(false) => {
                        return CheckVerdict::new('g', Fail, format!("{}e is not Ext-perpendicular to Ae", p.name))
                    }
                    None => inconclusive += 1,
                }
                if let Some((other, _)) = images.iter().find(|(_, y)| iso(y, &xe).is_iso()) {
                    return CheckVerdict::new('g', Fail, format!("{}e ≅ {}e", p.name, other));
                }
                images.push((&p.name, xe));
            }
            // Outside Gpi but inside Dom_2 the restriction must leave the perpendicular.
            Some(false) if p.domdim.at_least(2) == Some(true) => match in_perp(&xe, &be, ctx.cutoff) {
                Some(true) => {
                    return CheckVerdict::new('g', Fail, format!("{}e is perpendicular but {} is not GPI", p.name, p.name))
                }
                Some(false) => dense += 1,
                None => inconclusive += 1,
            },
            _ => {}
        }
    }
    CheckVerdict::new(
        'g',
        Pass,
        format!(
            "{} GPI restrictions perpendicular and pairwise non-isomorphic; {dense} non-GPI in Dom_2 excluded; {inconclusive} inconclusive",
            images.len()
        ),
    )
}

fn check_h(ctx: &SuiteContext) -> CheckVerdict {
    if ctx.domdim.at_least(1) != Some(true) {
        return CheckVerdict::new('h', Skipped, "dominant dimension below 1");
    }
    // Injective coresolutions of Y stay inside add D(Af), so restriction is along f.
    let verts: Vec<usize> =
        injective_is_projective(&ctx.algebra).iter().enumerate().filter(|(_, &b)| b).map(|(v, _)| v).collect();
    let Ok(corner) = ctx.algebra.corner_algebra(&verts) else {
        return CheckVerdict::new('h', Skipped, "no projective-injective module");
    };
    let mut sample: Vec<&PoolEntry> = ctx.pool.iter().filter(|p| p.domdim.at_least(1) == Some(true)).collect();
    sample.sort_by_key(|p| p.module.dim());
    sample.truncate(ctx.pair_sample);
    let restricted: Vec<RightModule> = sample.iter().map(|p| p.module.restrict_to_corner(&corner)).collect();
    let (mut count, mut literal) = (0, None);
    for (x, xe) in sample.iter().zip(&restricted) {
        for (y, ye) in sample.iter().zip(&restricted) {
            // With eA ≅ ν(eA) a resolution of X by add(eA) gives the same comparison.
            let from_x = if ctx.gendo_symmetric { x.codomdim.lower_bound() } else { 0 };
            let top = from_x.max(y.domdim.lower_bound()).checked_sub(2).map(|t| t.min(4));
            let stated = x.domdim.lower_bound().saturating_add(y.domdim.lower_bound()) - 2;
            let Some(top) = top else {
                continue;
            };
            for n in 0..=top.max(stated.min(4)) {
                let (l, r) = (ext_dim(&x.module, &y.module, n), ext_dim(xe, ye, n));
                if l == r {
                    count += usize::from(n <= top);
                } else if n <= top {
                    return CheckVerdict::new(
                        'h',
                        Fail,
                        format!("Ext^{n}({}, {}) has dimension {l} but {r} after restriction", x.name, y.name),
                    );
                } else if literal.is_none() {
                    literal = Some(format!("Ext^{n}({}, {}) is {l} but {r} after restriction", x.name, y.name));
                }
            }
        }
    }
    let range = if ctx.gendo_symmetric { "max(codomdim X, domdim Y) − 2" } else { "domdim Y − 2" };
    let mut detail = format!("{count} Ext dimensions over {} pairs for n ≤ {range}", sample.len() * sample.len());
    if let Some(w) = literal {
        detail.push_str(&format!("; the range domdim X + domdim Y − 2 is too large: {w}"));
    }
    CheckVerdict::new('h', Pass, detail)
}

fn check_i(ctx: &SuiteContext) -> CheckVerdict {
    if ctx.domdim.at_least(1) != Some(true) {
        return CheckVerdict::new('i', Skipped, "dominant dimension below 1");
    }
    if let Some(nak) = &ctx.nak {
        return check_i_nakayama(ctx, nak);
    }
    if !ctx.pool_exhaustive {
        return CheckVerdict::new('i', Skipped, "needs a full classification of indecomposables");
    }
    let d = ctx.domdim.finite().unwrap_or(4).min(4);
    let position = |x: &RightModule| ctx.pool.iter().position(|p| iso(&p.module, x).is_iso());
    for i in 1..=d {
        let mut omega: Vec<usize> = (0..ctx.pool.len()).filter(|&j| ctx.pool[j].projective).collect();
        for p in &ctx.pool {
            let parts = match decompose(&syzygy(&p.module, i)) {
                Ok(d) => d.modules(),
                Err(e) => return CheckVerdict::new('i', Fail, format!("Ω^{i}({}): {e}", p.name)),
            };
            for s in parts {
                match position(&s) {
                    Some(j) => omega.push(j),
                    None => return CheckVerdict::new('i', Fail, format!("a summand of Ω^{i}({}) is missing from the pool", p.name)),
                }
            }
        }
        omega.sort_unstable();
        omega.dedup();
        let dom: Vec<usize> = (0..ctx.pool.len()).filter(|&j| ctx.pool[j].domdim.at_least(i) == Some(true)).collect();
        if dom != omega {
            let j = dom.iter().chain(&omega).find(|j| !(dom.contains(j) && omega.contains(j))).unwrap();
            return CheckVerdict::new('i', Fail, format!("Dom_{i} and Ω^{i}(mod) differ at {}", ctx.pool[*j].name));
        }
    }
    CheckVerdict::new('i', Pass, format!("equal for 1 ≤ i ≤ {d} over {} indecomposables", ctx.pool.len()))
}

fn check_i_nakayama(ctx: &SuiteContext, nak: &NakAlgebra) -> CheckVerdict {
    let d = match ctx.domdim {
        HomologicalDim::Finite(d) => d,
        _ => 2 * nak.n(),
    };
    let all = nak.indecomposables();
    for i in 1..=d {
        let dom: Vec<NakModule> = all.iter().copied().filter(|&m| nak.domdim(m).at_least(i) == Some(true)).collect();
        let mut omega: Vec<NakModule> = all
            .iter()
            .map(|&m| (0..i).fold(m, |x, _| nak.syzygy(x)))
            .filter(|m| !m.is_zero())
            .chain(all.iter().copied().filter(|&m| nak.is_projective(m)))
            .collect();
        omega.sort();
        omega.dedup();
        if let Some(m) = dom.iter().find(|m| !omega.contains(m)).or_else(|| omega.iter().find(|m| !dom.contains(m))) {
            return CheckVerdict::new('i', Fail, format!("Dom_{i} and Ω^{i}(mod) differ at {m}"));
        }
    }
    CheckVerdict::new('i', Pass, format!("equal for 1 ≤ i ≤ {d} over {} indecomposables", all.len()))
}

fn check_j(ctx: &SuiteContext) -> CheckVerdict {
    if ctx.nearly_gorenstein != Some(true) {
        return CheckVerdict::new('j', Skipped, "nearly Gorenstein property not certified");
    }
    if let Some(nak) = &ctx.nak {
        let regular: Vec<NakModule> = (0..nak.n()).map(|v| nak.projective(v)).collect();
        for m in nak.indecomposables() {
            let hom = regular.iter().map(|&p| nak.hom_dim(m, p)).sum::<usize>();
            if hom == 0 && nak.first_ext_into_regular(m).is_none() {
                return CheckVerdict::new('j', Fail, format!("Ext^i({m}, A) = 0 for all i"));
            }
        }
        if !ctx.selfinjective && !ctx.domdim.is_finite() {
            return CheckVerdict::new('j', Fail, "nonselfinjective with infinite dominant dimension");
        }
        return CheckVerdict::new('j', Pass, format!("all {} indecomposables", nak.indecomposables().len()));
    }
    let a = regular_module(&ctx.algebra);
    let mut inconclusive = 0;
    for p in &ctx.pool {
        if hom_dim(&p.module, &a) > 0 {
            continue;
        }
        match ext_vanishing(&p.module, &a, ctx.cutoff) {
            Vanishing::FailsAt(_) => {}
            Vanishing::All { .. } => return CheckVerdict::new('j', Fail, format!("Ext^i({}, A) = 0 for all i", p.name)),
            Vanishing::Unknown { .. } => inconclusive += 1,
        }
    }
    CheckVerdict::new('j', Pass, format!("{} pool modules, {inconclusive} inconclusive", ctx.pool.len()))
}

fn check_k(ctx: &SuiteContext) -> CheckVerdict {
    let d = match ctx.domdim {
        HomologicalDim::Finite(d) if d >= 2 => d,
        _ => return CheckVerdict::new('k', Skipped, format!("dominant dimension {} is not a finite d ≥ 2", ctx.domdim)),
    };
    let gl = match &ctx.nak {
        Some(nak) => (0..nak.n()).map(|v| nak.projdim(nak.simple(v))).reduce(HomologicalDim::max).unwrap(),
        None => ctx.global_dimension(),
    };
    if gl != HomologicalDim::Finite(d) {
        return CheckVerdict::new('k', Skipped, format!("global dimension {gl} differs from dominant dimension {d}"));
    }
    for p in &ctx.pool {
        if p.projective != (p.domdim.at_least(d) == Some(true)) {
            return CheckVerdict::new('k', Fail, format!("{}: projective {} but domdim {}", p.name, p.projective, p.domdim));
        }
    }
    let Some(base) = &ctx.base else {
        return CheckVerdict::new('k', Pass, format!("proj = Dom_{d} on {} pool modules", ctx.pool.len()));
    };
    let gens = match indecomposable_summands(std::slice::from_ref(&base.generator)) {
        Ok(g) => g,
        Err(e) => return CheckVerdict::new('k', Fail, e.to_string()),
    };
    for (x, name) in base.pool.modules.iter().zip(&base.names) {
        let orth = (1..=d - 2).all(|i| ext_dim(&base.generator, x, i) == 0 && ext_dim(x, &base.generator, i) == 0);
        match in_add(&gens, x) {
            Ok(inside) if inside == orth => {}
            Ok(inside) => {
                return CheckVerdict::new('k', Fail, format!("{name}: in add(W) {inside}, (d−2)-orthogonal {orth}"))
            }
            Err(e) => return CheckVerdict::new('k', Fail, e.to_string()),
        }
    }
    let scope = if base.pool.exhaustive { "all" } else { "pooled" };
    CheckVerdict::new(
        'k',
        Pass,
        format!("proj = Dom_{d}; add(W) = W^⊥({}) on {scope} {} base indecomposables", d - 2, base.pool.modules.len()),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{build, FixtureId};

    fn run(id: FixtureId) -> Vec<CheckVerdict> {
        let t = std::time::Instant::now();
        let v = theorem_suite(&build(id, None).unwrap(), &SuiteConfig::default()).unwrap();
        eprintln!("{id} ({:?})", t.elapsed());
        for c in &v {
            eprintln!("  ({}) {:?}: {}", c.id, c.status, c.detail);
        }
        v
    }

    fn status(v: &[CheckVerdict], id: char) -> CheckStatus {
        v.iter().find(|c| c.id == id).unwrap().status
    }

    #[test]
    fn penny_farthing_suite() {
        let v = run(FixtureId::PennyFarthingGendo);
        assert!(v.iter().all(|c| !c.is_fail()));
        assert_eq!(status(&v, 'c'), Pass);
        assert_eq!(status(&v, 'f'), Pass);
        assert!(v[5].detail.contains("fdomdim 4"));
    }

    #[test]
    fn gf4_suite() {
        let v = run(FixtureId::Gf4LocalGendo);
        assert!(v.iter().all(|c| !c.is_fail()));
        assert_eq!(status(&v, 'c'), Pass);
        assert_eq!(status(&v, 'd'), Pass);
        assert!(!v[2].detail.contains(" 0 nonprojective GPI"));
    }

    #[test]
    fn kupisch_455_suite() {
        let v = run(FixtureId::Kupisch455);
        assert!(v.iter().all(|c| !c.is_fail()));
        assert_eq!(status(&v, 'c'), Skipped);
        assert!(v[2].detail.contains("[1,3]") && v[2].detail.contains("domdim 2"));
    }

    #[test]
    fn no_named_fixture_fails() {
        for id in FixtureId::NAMED {
            let v = run(id);
            assert!(v.iter().all(|c| !c.is_fail()), "{id}");
        }
    }
}
