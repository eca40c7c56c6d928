//! The combinatorial Gorenstein-projective classification of cyclic Nakayama
//! algebras against Ext-vanishing certificates computed by the generic engine.

use std::collections::BTreeSet;
use std::time::Instant;

use gendo::algebra::from_kupisch;
use gendo::invariants::{gi_test, gp_test};
use gendo::linalg::Field;
use gendo::modrep::DEFAULT_CUTOFF;
use gendo::nakayama::{bridge_module, KupischSeries, NakAlgebra, NakModule};

fn check_series(s: &KupischSeries, field: &Field) {
    let a = from_kupisch(s, field);
    let n = NakAlgebra::new(s.clone());
    let (mut gp, mut gi) = (BTreeSet::new(), BTreeSet::new());
    for m in n.indecomposables() {
        let g = bridge_module(&a, m);
        let p = gp_test(&g, DEFAULT_CUTOFF).decided();
        let i = gi_test(&g, DEFAULT_CUTOFF).decided();
        assert!(p.is_some() && i.is_some(), "{} {m}: undecided", s.label());
        if p == Some(true) {
            gp.insert(m);
        }
        if i == Some(true) {
            gi.insert(m);
        }
    }
    assert_eq!(gp, n.gp_indecs(), "GP over {}", s.label());
    assert_eq!(gi, n.gi_indecs(), "GI over {}", s.label());
}

fn four_vertex_sample() -> Vec<KupischSeries> {
    KupischSeries::enumerate_cyclic(4, 7).into_iter().step_by(9).collect()
}

#[test]
fn ringel_criterion_matches_certificates() {
    let t = Instant::now();
    let mut count = 0;
    for field in [Field::prime(2).unwrap(), Field::prime(5).unwrap()] {
        for n in 1..=3 {
            for s in KupischSeries::enumerate_cyclic(n, 7) {
                check_series(&s, &field);
                count += 1;
            }
        }
        for s in four_vertex_sample() {
            check_series(&s, &field);
            count += 1;
        }
    }
    eprintln!("{count} series in {:?}", t.elapsed());
}

#[test]
fn final_example_sets() {
    let n = NakAlgebra::validate(vec![4, 5, 5], true).unwrap();
    let nonproj = |set: BTreeSet<NakModule>| -> BTreeSet<(usize, usize)> {
        set.into_iter().filter(|m| !n.is_projective(*m)).filter_map(|m| m.coords()).collect()
    };
    let expect: BTreeSet<_> = [(0, 1), (0, 3), (1, 2), (1, 3)].into_iter().collect();
    assert_eq!(nonproj(n.gp_indecs()), expect);
    let gpi: BTreeSet<_> = n.gpi_indecs().into_iter().filter(|m| !n.is_projective(*m)).filter_map(|m| m.coords()).collect();
    assert_eq!(gpi, [(1, 3)].into_iter().collect());
}
