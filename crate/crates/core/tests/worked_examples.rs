//! Hand-computed examples: a symmetric Nakayama generator, the penny-farthing
//! algebra and a local algebra in characteristic two.

use gendo::fixtures::{self, EndoFixture, FixtureId, FixtureKind};
use gendo::invariants::{
    algebra_domdim, chen_koenig_injdim, ext_vanishing, gorenstein_dims, gpi_test, mueller_domdim, SuiteConfig,
    SuiteContext, Vanishing,
};
use gendo::modrep::{
    self, ext_dim, hom_dim, iso, min_right_approx, projective, projective_quotient, radical_power, syzygy, tau,
    HomologicalDim, RightModule, DEFAULT_CUTOFF,
};

fn endo(id: FixtureId) -> Box<EndoFixture> {
    match fixtures::build(id, None).unwrap().kind {
        FixtureKind::Endo(e) => e,
        _ => unreachable!(),
    }
}

fn sum(parts: &[RightModule]) -> RightModule {
    RightModule::direct_sum(parts, parts[0].algebra())
}

#[test]
fn symmetric_777_with_e0j2() {
    let e = endo(FixtureId::Sym777Gendo);
    let a = &e.base;
    let m = radical_power(a, 0, 2);
    assert_eq!(ext_dim(&m, &m, 1), 0);
    assert_ne!(ext_dim(&m, &m, 2), 0);
    assert_eq!(mueller_domdim(&e.generator, DEFAULT_CUTOFF).unwrap(), HomologicalDim::Finite(3));
    assert_eq!(algebra_domdim(&e.endo.algebra, DEFAULT_CUTOFF), HomologicalDim::Finite(3));

    // tau(Omega(M)) = e_2 J^5 shifted to e_0 J^5.
    let t = tau(&syzygy(&m, 1));
    assert!(iso(&syzygy(&m, 1), &radical_power(a, 2, 5)).is_iso());
    assert!(iso(&t, &radical_power(a, 0, 5)).is_iso());

    // The W-resolution of e_0 J^5 has kernels e_0 J^4, then e_0 J^4 + e_1 J.
    let w = [e.generator.clone()];
    let k1 = min_right_approx(&w, &t).unwrap().kernel().source;
    let e0j4 = radical_power(a, 0, 4);
    assert!(iso(&k1, &e0j4).is_iso());
    assert!(iso(&e0j4, &projective_quotient(a, 1, 3)).is_iso());
    let pi2 = min_right_approx(&w, &k1).unwrap();
    assert!(iso(&pi2.source, &sum(&[projective(a, 1), radical_power(a, 0, 2)])).is_iso());
    let k2 = pi2.kernel().source;
    assert!(iso(&k2, &sum(&[e0j4.clone(), radical_power(a, 1, 1)])).is_iso());

    let ck = chen_koenig_injdim(&e.generator, DEFAULT_CUTOFF).unwrap();
    assert!(ck.rhs.is_infinite() && ck.lhs.is_infinite());
    assert!(!gorenstein_dims(&e.endo.algebra, DEFAULT_CUTOFF).is_gorenstein());
}

#[test]
fn penny_farthing() {
    let e = endo(FixtureId::PennyFarthingGendo);
    let s2 = e.module("S2").unwrap();
    let e2j2 = e.module("e2J2").unwrap();
    assert!(iso(&syzygy(s2, 3), s2).is_iso());
    assert_eq!(ext_dim(s2, s2, 1), 0);
    assert_ne!(ext_dim(s2, s2, 2), 0);
    assert_eq!(ext_dim(s2, e2j2, 1), 0);
    assert_eq!(ext_dim(s2, e2j2, 2), 0);
    assert_ne!(ext_dim(s2, e2j2, 3), 0);

    let b = &e.endo.algebra;
    assert_eq!(algebra_domdim(b, DEFAULT_CUTOFF), HomologicalDim::Finite(3));
    let g = gorenstein_dims(b, DEFAULT_CUTOFF);
    assert_eq!((g.left.finite(), g.right.finite()), (Some(3), Some(3)));
    let image = e.endo.hom_functor(e2j2).unwrap();
    assert_eq!(modrep::domdim(&image, DEFAULT_CUTOFF), HomologicalDim::Finite(4));

    let ctx = SuiteContext::build(&FixtureKind::Endo(e), &SuiteConfig::default()).unwrap();
    let fd = ctx.fdomdim.unwrap();
    assert!(fd.certified);
    assert_eq!(fd.value, 4);
    assert_eq!(fd.value, g.value().unwrap() + 1);
}

#[test]
fn local_algebra_over_gf4() {
    let e = endo(FixtureId::Gf4LocalGendo);
    let ms: Vec<&RightModule> = ["M(1,1)", "M(1,w)", "M(1,w2)"].iter().map(|n| e.module(n).unwrap()).collect();
    for (i, x) in ms.iter().enumerate() {
        assert!(iso(&syzygy(x, 1), x).is_iso(), "1-periodic");
        for (j, y) in ms.iter().enumerate() {
            if i != j {
                assert!(!iso(x, y).is_iso());
                assert_eq!(hom_dim(x, y), 1);
            }
        }
    }
    match ext_vanishing(ms[0], ms[1], DEFAULT_CUTOFF) {
        Vanishing::All { window, .. } => assert!(window >= 1),
        other => panic!("Ext(M(1,1), M(1,w)) not certified to vanish: {other:?}"),
    }
    let b = &e.endo.algebra;
    assert_eq!(algebra_domdim(b, DEFAULT_CUTOFF), HomologicalDim::Finite(2));
    assert_eq!(gorenstein_dims(b, DEFAULT_CUTOFF).value(), Some(2));
    let image = e.endo.hom_functor(ms[1]).unwrap();
    assert!(gpi_test(&image, DEFAULT_CUTOFF).is_yes());
    assert!(modrep::domdim(&image, DEFAULT_CUTOFF).is_infinite());
    assert!(modrep::codomdim(&image, DEFAULT_CUTOFF).is_infinite());
}
