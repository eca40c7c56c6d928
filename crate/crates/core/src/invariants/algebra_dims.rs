//! Algebra-level dimensions and the endomorphism-ring formulas.

use std::sync::Arc;

use serde::Serialize;

use crate::algebra::BasedAlgebra;
use crate::modrep::{
    codomdim, coresdim, cosyzygy, decompose, domdim, endo_algebra, injdim, injective, is_injective, is_projective,
    projective, projective_is_injective, regular_module, resdim, socle_vertices, syzygy, tau, tau_inv,
    top_vertices, HomologicalDim, RightModule, DEFAULT_SEED,
};

use super::ar::IndecPool;
use super::gorenstein::{ext_vanishing, Vanishing};
use super::InvariantsError;

/// Dominant dimension of the regular module: the minimum over indecomposable projectives.
pub fn algebra_domdim(a: &Arc<BasedAlgebra>, cutoff: usize) -> HomologicalDim {
    (0..a.vertex_count())
        .map(|v| domdim(&projective(a, v), cutoff))
        .reduce(HomologicalDim::min)
        .unwrap_or_else(HomologicalDim::zero_module)
}

/// Codominant dimension of `D(A)`: the minimum over indecomposable injectives.
pub fn algebra_codomdim(a: &Arc<BasedAlgebra>, cutoff: usize) -> HomologicalDim {
    (0..a.vertex_count())
        .map(|v| codomdim(&injective(a, v), cutoff))
        .reduce(HomologicalDim::min)
        .unwrap_or_else(HomologicalDim::zero_module)
}

/// Injective dimensions of the regular module on each side.
#[derive(Clone, Debug, Serialize)]
pub struct GorensteinDims {
    /// `injdim(_A A)`, computed over the opposite algebra.
    pub left: HomologicalDim,
    /// `injdim(A_A)`.
    pub right: HomologicalDim,
}

impl GorensteinDims {
    /// The Gorenstein dimension when both sides are finite and equal.
    pub fn value(&self) -> Option<usize> {
        match (self.left.finite(), self.right.finite()) {
            (Some(l), Some(r)) if l == r => Some(l),
            _ => None,
        }
    }

    pub fn is_gorenstein(&self) -> bool {
        self.value().is_some()
    }
}

fn regular_injdim(a: &Arc<BasedAlgebra>, cutoff: usize) -> HomologicalDim {
    (0..a.vertex_count())
        .map(|v| injdim(&projective(a, v), cutoff))
        .reduce(HomologicalDim::max)
        .unwrap_or_else(HomologicalDim::zero_module)
}

pub fn gorenstein_dims(a: &Arc<BasedAlgebra>, cutoff: usize) -> GorensteinDims {
    GorensteinDims { left: regular_injdim(&a.opposite(), cutoff), right: regular_injdim(a, cutoff) }
}

/// Supremum of the finite dominant dimensions over a pool of indecomposables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Fdomdim {
    pub value: usize,
    /// The pool is exhaustive and every dominant dimension in it was decided.
    pub certified: bool,
}

pub fn fdomdim(pool: &IndecPool, cutoff: usize) -> Fdomdim {
    let mut value = 0;
    let mut decided = true;
    for m in &pool.modules {
        match domdim(m, cutoff) {
            HomologicalDim::Finite(d) => value = value.max(d),
            HomologicalDim::Infinite(_) => {}
            HomologicalDim::AtLeast(_) => decided = false,
        }
    }
    Fdomdim { value, certified: decided && pool.exhaustive }
}

/// Vertex of a missing indecomposable projective summand, if any.
pub fn missing_projective(m: &RightModule) -> Result<Option<usize>, InvariantsError> {
    let parts = decompose(m)?.modules();
    let a = m.algebra();
    Ok((0..a.vertex_count()).find(|&v| !parts.iter().any(|s| is_projective(s) && top_vertices(s) == [v])))
}

/// Vertex of a missing indecomposable injective summand, if any.
pub fn missing_injective(m: &RightModule) -> Result<Option<usize>, InvariantsError> {
    let parts = decompose(m)?.modules();
    let a = m.algebra();
    Ok((0..a.vertex_count()).find(|&v| !parts.iter().any(|s| is_injective(s) && socle_vertices(s) == [v])))
}

/// Whether `A` has dominant dimension at least 2 and `eAe` is symmetric for
/// `eA` the sum of the projective-injective indecomposables.
pub fn gendo_symmetric_check(a: &Arc<BasedAlgebra>, cutoff: usize) -> bool {
    if algebra_domdim(a, cutoff).at_least(2) != Some(true) {
        return false;
    }
    let verts: Vec<usize> = projective_is_injective(a).iter().enumerate().filter(|(_, &b)| b).map(|(v, _)| v).collect();
    match a.corner_algebra(&verts) {
        Ok(c) => c.algebra.is_symmetric(DEFAULT_SEED).is_symmetric(),
        Err(_) => false,
    }
}

/// `domdim End(M) = inf{i ≥ 1 : Ext^i(M, M) ≠ 0} + 1` for a generator `M` over a symmetric algebra.
pub fn mueller_domdim(m: &RightModule, cutoff: usize) -> Result<HomologicalDim, InvariantsError> {
    if !m.algebra().is_symmetric(DEFAULT_SEED).is_symmetric() {
        return Err(InvariantsError::NotSymmetric);
    }
    if let Some(v) = missing_projective(m)? {
        return Err(InvariantsError::NotGenerator(v));
    }
    Ok(match ext_vanishing(m, m, cutoff) {
        Vanishing::All { certificate, .. } => certificate.into_infinite(),
        Vanishing::FailsAt(i) => HomologicalDim::Finite(i + 1),
        Vanishing::Unknown { bound } => HomologicalDim::AtLeast(bound + 2),
    })
}

/// Both sides of the injective-dimension formulas for `B = End(M)`.
#[derive(Clone, Debug, Serialize)]
pub struct ChenKoenig {
    /// `domdim B = z + 2`.
    pub domdim: HomologicalDim,
    /// `injdim(B_B)`, computed directly.
    pub lhs: HomologicalDim,
    /// `z + 2 + M-resdim(τΩ^z M ⊕ D(A))`.
    pub rhs: HomologicalDim,
    /// `injdim(_B B)`, computed directly.
    pub lhs_left: HomologicalDim,
    /// `z + 2 + M-coresdim(τ^{-1}Ω^{-z} M ⊕ A)`.
    pub rhs_left: HomologicalDim,
}

impl ChenKoenig {
    /// Equality of every pair where both sides are decided.
    pub fn agrees(&self) -> bool {
        let eq = |l: &HomologicalDim, r: &HomologicalDim| !(l.is_decided() && r.is_decided()) || l == r;
        eq(&self.lhs, &self.rhs) && eq(&self.lhs_left, &self.rhs_left)
    }

    pub fn certified(&self) -> bool {
        [&self.lhs, &self.rhs, &self.lhs_left, &self.rhs_left].iter().all(|d| d.is_decided())
    }
}

/// Compares the injective dimensions of `End(M)` with the approximation formulas,
/// for `M` a nonprojective generator-cogenerator.
pub fn chen_koenig_injdim(m: &RightModule, cutoff: usize) -> Result<ChenKoenig, InvariantsError> {
    if let Some(v) = missing_projective(m)? {
        return Err(InvariantsError::NotGenerator(v));
    }
    if let Some(v) = missing_injective(m)? {
        return Err(InvariantsError::NotCogenerator(v));
    }
    if is_projective(m) {
        return Err(InvariantsError::Precondition("generator is projective".into()));
    }
    let a = m.algebra();
    let endo = endo_algebra(std::slice::from_ref(m))?;
    let b = &endo.algebra;
    let dd = algebra_domdim(b, cutoff);
    let gd = gorenstein_dims(b, cutoff);
    let (rhs, rhs_left) = match dd {
        HomologicalDim::Finite(d) if d >= 2 => {
            let z = d - 2;
            let x = RightModule::direct_sum(&[tau(&syzygy(m, z)), regular_module(&a.opposite()).dual()], a);
            let y = RightModule::direct_sum(&[tau_inv(&cosyzygy(m, z)), regular_module(a)], a);
            let gens = std::slice::from_ref(m);
            (resdim(gens, &x, cutoff)?.shift(d), coresdim(gens, &y, cutoff)?.shift(d))
        }
        HomologicalDim::Finite(d) => {
            return Err(InvariantsError::Precondition(format!("dominant dimension {d} of End(M) is below 2")))
        }
        HomologicalDim::AtLeast(k) => (HomologicalDim::AtLeast(k), HomologicalDim::AtLeast(k)),
        HomologicalDim::Infinite(_) => {
            return Err(InvariantsError::Precondition("End(M) has infinite dominant dimension".into()))
        }
    };
    Ok(ChenKoenig { domdim: dd, lhs: gd.right, rhs, lhs_left: gd.left, rhs_left })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{build, FixtureId, FixtureKind};
    use crate::modrep::DEFAULT_CUTOFF;

    fn endo(id: FixtureId) -> Box<crate::fixtures::EndoFixture> {
        match build(id, None).unwrap().kind {
            FixtureKind::Endo(e) => e,
            _ => unreachable!(),
        }
    }

    #[test]
    fn endo_fixture_values() {
        for (id, dd, gd) in [
            (FixtureId::PennyFarthingGendo, 3, Some(3)),
            (FixtureId::Sym777Gendo, 3, None),
            (FixtureId::Gf4LocalGendo, 2, Some(2)),
            (FixtureId::TwoPeriodicDemo, 2, Some(2)),
            (FixtureId::Auslander22, 2, Some(2)),
        ] {
            let e = endo(id);
            let b = &e.endo.algebra;
            let t = std::time::Instant::now();
            assert_eq!(algebra_domdim(b, DEFAULT_CUTOFF), HomologicalDim::Finite(dd), "{id}");
            let g = gorenstein_dims(b, DEFAULT_CUTOFF);
            eprintln!("{id}: dim B = {}, gordims {} {} ({:?})", b.dim(), g.left, g.right, t.elapsed());
            assert_eq!(g.value(), gd, "{id}");
        }
    }

    #[test]
    fn mueller_and_chen_koenig() {
        for (id, dd, inf_rhs) in [
            (FixtureId::PennyFarthingGendo, 3, false),
            (FixtureId::Sym777Gendo, 3, true),
            (FixtureId::Gf4LocalGendo, 2, false),
            (FixtureId::TwoPeriodicDemo, 2, false),
        ] {
            let e = endo(id);
            assert_eq!(mueller_domdim(&e.generator, DEFAULT_CUTOFF).unwrap(), HomologicalDim::Finite(dd), "{id}");
            let ck = chen_koenig_injdim(&e.generator, DEFAULT_CUTOFF).unwrap();
            eprintln!("{id}: {} {} | {} {}", ck.lhs, ck.rhs, ck.lhs_left, ck.rhs_left);
            assert!(ck.certified() && ck.agrees(), "{id}");
            assert_eq!(ck.rhs.is_infinite(), inf_rhs);
        }
        let e = endo(FixtureId::Auslander22);
        assert!(matches!(mueller_domdim(&e.generator, DEFAULT_CUTOFF), Err(InvariantsError::NotSymmetric)));
        let ck = chen_koenig_injdim(&e.generator, DEFAULT_CUTOFF).unwrap();
        assert_eq!((ck.lhs.finite(), ck.rhs.finite()), (Some(2), Some(2)));
    }

    #[test]
    fn mueller_on_regular_module_is_infinite() {
        let e = endo(FixtureId::Sym777Gendo);
        let reg = regular_module(&e.base);
        assert!(mueller_domdim(&reg, DEFAULT_CUTOFF).unwrap().is_infinite());
        assert!(algebra_domdim(&e.base, DEFAULT_CUTOFF).is_infinite());
    }

    #[test]
    fn gendo_symmetric_fixtures() {
        for id in [FixtureId::PennyFarthingGendo, FixtureId::Sym777Gendo, FixtureId::Gf4LocalGendo] {
            assert!(gendo_symmetric_check(&endo(id).endo.algebra, DEFAULT_CUTOFF), "{id}");
        }
        let a = build(FixtureId::Kupisch455, None).unwrap();
        assert!(!gendo_symmetric_check(a.algebra(), DEFAULT_CUTOFF));
    }

    #[test]
    fn penny_farthing_fdomdim() {
        let e = endo(FixtureId::PennyFarthingGendo);
        let t = std::time::Instant::now();
        let pool = crate::invariants::knit_indecomposables(&e.base, crate::invariants::KnitBudget::modules(200)).unwrap();
        eprintln!("{} indecomposables, exhaustive {} ({:?})", pool.modules.len(), pool.exhaustive, t.elapsed());
        assert!(pool.exhaustive);
        let images = IndecPool {
            modules: pool.modules.iter().map(|x| e.endo.hom_functor(x).unwrap()).collect(),
            exhaustive: true,
        };
        let f = fdomdim(&images, DEFAULT_CUTOFF);
        assert_eq!(f, Fdomdim { value: 4, certified: true });
        let x = e.endo.hom_functor(e.module("e2J2").unwrap()).unwrap();
        assert_eq!(domdim(&x, DEFAULT_CUTOFF), HomologicalDim::Finite(4));
    }
}
