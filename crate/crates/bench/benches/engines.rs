use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use gendo::algebra::from_kupisch;
use gendo::fixtures::{self, FixtureId, FixtureKind};
use gendo::invariants::{gp_test, knit_indecomposables, run_checks, KnitBudget, SuiteConfig, SuiteContext};
use gendo::linalg::{Field, Matrix};
use gendo::modrep::{self, endo_algebra, radical_power, regular_module, RightModule, DEFAULT_CUTOFF};
use gendo::nakayama::{bridge_module, KupischSeries, NakAlgebra};

fn linalg(c: &mut Criterion) {
    let f = Field::prime(5).unwrap();
    let mut x: u64 = 0x9e37_79b9_7f4a_7c15;
    let mut next = || {
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        f.from_int((x % 5) as i64)
    };
    let rows: Vec<Vec<_>> = (0..40).map(|_| (0..40).map(|_| next()).collect()).collect();
    let m = Matrix::from_rows(&rows, 40, &f).unwrap();
    c.bench_function("rank 40x40 over F5", |b| b.iter(|| black_box(&m).rank()));
}

fn nakayama(c: &mut Criterion) {
    let s = KupischSeries::cyclic(vec![7, 8, 8]).unwrap();
    c.bench_function("nakayama invariants (7,8,8)", |b| b.iter(|| NakAlgebra::new(black_box(s.clone())).invariants()));
    c.bench_function("enumerate n<=3 c<=7", |b| {
        b.iter(|| (1..=3).flat_map(|n| KupischSeries::enumerate_cyclic(n, 7)).map(|s| NakAlgebra::new(s).invariants().fdomdim).max())
    });
}

fn generic(c: &mut Criterion) {
    let s = KupischSeries::cyclic(vec![4, 5, 5]).unwrap();
    let a = from_kupisch(&s, &Field::prime(2).unwrap());
    let n = NakAlgebra::new(s);
    let mods: Vec<RightModule> = n.indecomposables().into_iter().map(|m| bridge_module(&a, m)).collect();
    c.bench_function("generic domdim (4,5,5) indecomposables", |b| {
        b.iter(|| mods.iter().map(|m| modrep::domdim(m, DEFAULT_CUTOFF)).collect::<Vec<_>>())
    });
    c.bench_function("gp_test (4,5,5) indecomposables", |b| {
        b.iter(|| mods.iter().filter(|m| gp_test(m, DEFAULT_CUTOFF).is_yes()).count())
    });
    c.bench_function("knit (4,5,5)", |b| b.iter(|| knit_indecomposables(&a, KnitBudget::modules(200)).unwrap().modules.len()));

    let sym = from_kupisch(&KupischSeries::cyclic(vec![7, 7, 7]).unwrap(), &Field::prime(2).unwrap());
    let w = [regular_module(&sym), radical_power(&sym, 0, 2)];
    c.bench_function("endo algebra of (7,7,7) + e0J^2", |b| b.iter(|| endo_algebra(black_box(&w)).unwrap().algebra.dim()));
}

fn suite(c: &mut Criterion) {
    let mut g = c.benchmark_group("suite");
    g.sample_size(10);
    let kind = fixtures::build(FixtureId::PennyFarthingGendo, None).unwrap().kind;
    let cfg = SuiteConfig::default();
    g.bench_function("penny-farthing context", |b| b.iter(|| SuiteContext::build(&kind, &cfg).unwrap().domdim));
    let ctx = SuiteContext::build(&kind, &cfg).unwrap();
    g.bench_function("penny-farthing checks", |b| b.iter(|| run_checks(&ctx).len()));
    if let FixtureKind::Endo(e) = &kind {
        g.bench_function("penny-farthing hom functor", |b| b.iter(|| e.endo.hom_functor(e.module("e2J2").unwrap()).unwrap().dim()));
    }
    g.finish();
}

criterion_group!(benches, linalg, nakayama, generic, suite);
criterion_main!(benches);
