//! Stable-category identities over symmetric algebras, the socle/top criterion
//! for Ext against simples, duality, and dominant-dimension consistency.

use std::sync::{Arc, OnceLock};

use gendo::algebra::{from_kupisch, BasedAlgebra};
use gendo::fixtures::{self, FixtureId, FixtureKind};
use gendo::invariants::{algebra_domdim, knit_indecomposables, mueller_domdim, KnitBudget};
use gendo::linalg::Field;
use gendo::modrep::{
    cosyzygy, decompose, endo_algebra, ext_dim, is_projective, iso, projective_resolution_tops, regular_module, stable_hom_dim, syzygy,
    tau, tau_inv, top_vector, RightModule, DEFAULT_CUTOFF,
};
use gendo::nakayama::{bridge_module, KupischSeries, NakAlgebra};
use proptest::prelude::*;

const MAX_DEGREE: usize = 6;

struct Pool {
    name: &'static str,
    modules: Vec<RightModule>,
}

fn sym777() -> &'static Pool {
    static P: OnceLock<Pool> = OnceLock::new();
    P.get_or_init(|| {
        let s = KupischSeries::cyclic(vec![7, 7, 7]).unwrap();
        let a = from_kupisch(&s, &Field::prime(2).unwrap());
        let modules = NakAlgebra::new(s).indecomposables().into_iter().map(|m| bridge_module(&a, m)).collect();
        Pool { name: "(7,7,7)", modules }
    })
}

fn penny() -> &'static Pool {
    static P: OnceLock<Pool> = OnceLock::new();
    P.get_or_init(|| {
        let FixtureKind::Endo(e) = fixtures::build(FixtureId::PennyFarthingGendo, None).unwrap().kind else {
            unreachable!()
        };
        let knit = knit_indecomposables(&e.base, KnitBudget::modules(200)).unwrap();
        assert!(knit.exhaustive);
        Pool { name: "penny-farthing", modules: knit.modules }
    })
}

fn symmetric_pools() -> [&'static Pool; 2] {
    let pools = [sym777(), penny()];
    for p in pools {
        assert!(p.modules[0].algebra().is_symmetric(1).is_symmetric(), "{}", p.name);
    }
    pools
}

fn nonprojective(p: &Pool) -> impl Iterator<Item = &RightModule> {
    p.modules.iter().filter(|m| !is_projective(m))
}

#[test]
fn tau_is_second_syzygy() {
    for p in symmetric_pools() {
        for m in nonprojective(p) {
            assert!(iso(&tau(m), &syzygy(m, 2)).is_iso(), "{}", p.name);
            assert!(iso(&tau_inv(&tau(m)), m).is_iso(), "{}", p.name);
        }
    }
}

#[test]
fn ext_is_stable_hom_from_syzygy_and_into_cosyzygy() {
    for p in symmetric_pools() {
        for m in nonprojective(p) {
            for i in 1..=MAX_DEGREE {
                let om = syzygy(m, i);
                for n in nonprojective(p) {
                    let e = ext_dim(m, n, i);
                    assert_eq!(e, stable_hom_dim(&om, n), "{} degree {i}", p.name);
                    assert_eq!(e, stable_hom_dim(m, &cosyzygy(n, i)), "{} degree {i}", p.name);
                }
            }
        }
    }
}

#[test]
fn auslander_reiten_formula_and_shift() {
    for p in symmetric_pools() {
        for m in nonprojective(p) {
            let om = syzygy(m, 1);
            let om2 = syzygy(m, 2);
            for n in nonprojective(p) {
                let e1 = ext_dim(m, n, 1);
                assert_eq!(e1, stable_hom_dim(n, &om2), "{}", p.name);
                assert_eq!(e1, stable_hom_dim(&cosyzygy(n, 2), m), "{}", p.name);
                assert_eq!(stable_hom_dim(m, n), stable_hom_dim(n, &om), "{}", p.name);
            }
        }
    }
}

/// `Ext^l(N, S) != 0` iff `S` is a top of `P_l`, and dually for injective
/// coresolutions, over a symmetric, a non-selfinjective and a linear algebra.
#[test]
fn ext_against_simples_reads_resolution_terms() {
    let f = Field::prime(3).unwrap();
    let mut algebras: Vec<Arc<BasedAlgebra>> = vec![sym777().modules[0].algebra().clone(), penny().modules[0].algebra().clone()];
    for s in [KupischSeries::cyclic(vec![4, 5, 5]).unwrap(), KupischSeries::linear(vec![3, 3, 2, 1]).unwrap()] {
        algebras.push(from_kupisch(&s, &f));
    }
    for a in &algebras {
        let pool = knit_indecomposables(a, KnitBudget::modules(60)).unwrap();
        for n in &pool.modules {
            let tops = projective_resolution_tops(n, 6);
            let dual_tops = projective_resolution_tops(&n.dual(), 6);
            for l in 0..=5 {
                for v in 0..a.vertex_count() {
                    let s = RightModule::simple(a, v);
                    let in_top = tops.get(l).is_some_and(|t| t.contains(&v));
                    assert_eq!(ext_dim(n, &s, l) != 0, in_top, "Ext^{l}(N, S_{v})");
                    let in_socle = dual_tops.get(l).is_some_and(|t| t.contains(&v));
                    assert_eq!(ext_dim(&s, n, l) != 0, in_socle, "Ext^{l}(S_{v}, N)");
                }
            }
        }
    }
}

#[test]
fn mueller_matches_endomorphism_domdim() {
    for id in [FixtureId::Sym777Gendo, FixtureId::PennyFarthingGendo, FixtureId::Gf4LocalGendo, FixtureId::TwoPeriodicDemo] {
        let FixtureKind::Endo(e) = fixtures::build(id, None).unwrap().kind else { unreachable!() };
        assert_eq!(
            mueller_domdim(&e.generator, DEFAULT_CUTOFF).unwrap(),
            algebra_domdim(&e.endo.algebra, DEFAULT_CUTOFF),
            "{id}"
        );
    }
    for p in symmetric_pools() {
        let reg = regular_module(p.modules[0].algebra());
        for x in nonprojective(p) {
            let w = RightModule::direct_sum(&[reg.clone(), x.clone()], x.algebra());
            let b = endo_algebra(&[reg.clone(), x.clone()]).unwrap().algebra;
            assert_eq!(mueller_domdim(&w, DEFAULT_CUTOFF).unwrap(), algebra_domdim(&b, DEFAULT_CUTOFF), "{}", p.name);
        }
    }
}

fn pair_sum(p: &Pool, i: usize, j: usize) -> RightModule {
    let (x, y) = (&p.modules[i % p.modules.len()], &p.modules[j % p.modules.len()]);
    RightModule::direct_sum(&[x.clone(), y.clone()], x.algebra())
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, ..ProptestConfig::default() })]

    /// The identities are additive, so they also hold on sums of two indecomposables.
    #[test]
    fn identities_on_sums(which in 0..2usize, i in 0..64usize, j in 0..64usize, k in 0..64usize, deg in 1..=MAX_DEGREE) {
        let p = symmetric_pools()[which];
        let m = pair_sum(p, i, j);
        let n = &p.modules[k % p.modules.len()];
        prop_assert_eq!(ext_dim(&m, n, deg), stable_hom_dim(&syzygy(&m, deg), n));
        prop_assert_eq!(stable_hom_dim(&m, n), stable_hom_dim(n, &syzygy(&m, 1)));
    }

    #[test]
    fn duality_is_an_involution(which in 0..2usize, i in 0..64usize, j in 0..64usize) {
        let p = symmetric_pools()[which];
        let m = pair_sum(p, i, j);
        let dd = m.dual().dual();
        prop_assert_eq!(dd.dim(), m.dim());
        prop_assert!(iso(&dd, &m).is_iso());
        prop_assert_eq!(top_vector(&m.dual()), gendo::modrep::socle_vector(&m));
        prop_assert_eq!(decompose(&m.dual()).unwrap().modules().len(), decompose(&m).unwrap().modules().len());
    }
}
