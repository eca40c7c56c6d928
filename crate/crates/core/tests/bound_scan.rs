//! Bounds over every small cyclic Nakayama algebra.

use std::time::Instant;

use gendo::invariants::scan_row;
use gendo::linalg::Field;
use gendo::nakayama::KupischSeries;

#[test]
fn no_bound_violations_up_to_three_vertices() {
    let t = Instant::now();
    let f = Field::prime(2).unwrap();
    let mut rows = 0;
    let mut checked_g1 = 0;
    for n in 1..=3 {
        for s in KupischSeries::enumerate_cyclic(n, 7) {
            let r = scan_row(&s, &f, 24);
            assert!(!r.is_violation(), "{r:?}");
            assert!(r.nearly_gorenstein, "{}", r.series);
            checked_g1 += r.violates_g1.is_some() as usize;
            rows += 1;
        }
    }
    eprintln!("{rows} rows, {checked_g1} with the g+1 bound, {:?}", t.elapsed());
    assert!(checked_g1 > 0);
}

#[test]
fn fdomdim_bound_on_four_vertices() {
    for s in KupischSeries::enumerate_cyclic(4, 6) {
        let n = gendo::nakayama::NakAlgebra::new(s.clone());
        assert!(n.invariants().fdomdim <= 6, "{}", s.label());
    }
}
