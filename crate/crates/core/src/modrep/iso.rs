use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::linalg::{Echelon, Elem, Field, Matrix};
use crate::modrep::structure::{socle_vector, top_vector};
use crate::modrep::{HomSpace, ModrepError, ModuleMap, RightModule};

pub const DEFAULT_SEED: u64 = 0x0067_656e_646f;
const ISO_RANDOM_TRIES: usize = 2000;
const ISO_EXHAUSTIVE_LIMIT: u64 = 1 << 20;
const SPLIT_RANDOM_TRIES: usize = 50;
const SPLIT_EXHAUSTIVE_LIMIT: u64 = 1 << 14;

#[derive(Clone, Debug)]
pub enum IsoResult {
    Iso(ModuleMap),
    /// `certain` is false when the search was sampled and found nothing.
    NotIso { certain: bool },
}

impl IsoResult {
    pub fn is_iso(&self) -> bool {
        matches!(self, IsoResult::Iso(_))
    }

    pub fn map(self) -> Option<ModuleMap> {
        match self {
            IsoResult::Iso(m) => Some(m),
            IsoResult::NotIso { .. } => None,
        }
    }
}

/// Cheap isomorphism invariants.
pub fn fingerprint(m: &RightModule) -> (Vec<usize>, Vec<usize>, Vec<usize>) {
    (m.dim_vector(), top_vector(m), socle_vector(m))
}

pub fn iso(m: &RightModule, n: &RightModule) -> IsoResult {
    iso_seeded(m, n, DEFAULT_SEED)
}

pub fn iso_seeded(m: &RightModule, n: &RightModule, seed: u64) -> IsoResult {
    let certain_no = IsoResult::NotIso { certain: true };
    if !m.same_algebra(n) || m.dim() != n.dim() || m.dim_vector() != n.dim_vector() {
        return certain_no;
    }
    if m.is_zero() {
        return IsoResult::Iso(ModuleMap::zero(m, n));
    }
    if fingerprint(m) != fingerprint(n) {
        return certain_no;
    }
    let hmn = HomSpace::compute(m, n).expect("same algebra");
    let hnm = HomSpace::compute(n, m).expect("same algebra");
    if hmn.dim() != hnm.dim() || hmn.dim() == 0 {
        return certain_no;
    }
    let emm = HomSpace::compute(m, m).expect("same algebra");
    let enn = HomSpace::compute(n, n).expect("same algebra");
    if emm.dim() != enn.dim() {
        return certain_no;
    }
    let wrap = |mat: Matrix| IsoResult::Iso(ModuleMap { source: m.clone(), target: n.clone(), matrix: mat });
    for b in hmn.basis() {
        if b.is_invertible() {
            return wrap(b.clone());
        }
    }
    // For a split local endomorphism ring the non-isomorphisms form a
    // subspace, so some basis map would have been invertible.
    if split_local_radical(m, &emm).is_some() {
        return certain_no;
    }
    let f = m.field().clone();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..ISO_RANDOM_TRIES {
        let c: Vec<Elem> = (0..hmn.dim()).map(|_| rng.gen_range(0..f.order())).collect();
        let mat = hmn.combine(&c);
        if mat.is_invertible() {
            return wrap(mat);
        }
    }
    if let Some(r) = iso_by_decomposition(m, n, seed) {
        return r;
    }
    let total = (f.order() as u64).checked_pow(hmn.dim() as u32).unwrap_or(u64::MAX);
    if total <= ISO_EXHAUSTIVE_LIMIT {
        for c in enumerate_coeffs(&f, hmn.dim(), total) {
            let mat = hmn.combine(&c);
            if mat.is_invertible() {
                return wrap(mat);
            }
        }
        return certain_no;
    }
    IsoResult::NotIso { certain: false }
}

fn enumerate_coeffs(f: &Field, h: usize, total: u64) -> impl Iterator<Item = Vec<Elem>> + '_ {
    let q = f.order() as u64;
    (1..total).map(move |mut t| {
        (0..h)
            .map(|_| {
                let c = (t % q) as Elem;
                t /= q;
                c
            })
            .collect()
    })
}

fn iso_by_decomposition(m: &RightModule, n: &RightModule, seed: u64) -> Option<IsoResult> {
    let dm = decompose_seeded(m, seed).ok()?;
    let dn = decompose_seeded(n, seed).ok()?;
    if dm.summands.len() != dn.summands.len() {
        return Some(IsoResult::NotIso { certain: true });
    }
    let pm = dm.projections();
    let mut used = vec![false; dn.summands.len()];
    let mut total = Matrix::zeros(m.dim(), n.dim(), m.field());
    for (i, si) in dm.summands.iter().enumerate() {
        let mut found = false;
        for (j, sj) in dn.summands.iter().enumerate() {
            if used[j] {
                continue;
            }
            if let IsoResult::Iso(phi) = iso_seeded(&si.source, &sj.source, seed) {
                used[j] = true;
                total = total.add(&pm[i].matrix.mul(&phi.matrix).mul(&sj.matrix));
                found = true;
                break;
            }
        }
        if !found {
            return Some(IsoResult::NotIso { certain: true });
        }
    }
    Some(IsoResult::Iso(ModuleMap { source: m.clone(), target: n.clone(), matrix: total }))
}

/// `x^(1/p^s)` in a field of order `p^r`.
fn frobenius_root(f: &Field, x: Elem, s: u32) -> Elem {
    let p = f.characteristic();
    let mut r = 0u32;
    let mut q = f.order();
    while q > 1 {
        q /= p;
        r += 1;
    }
    let t = s.div_ceil(r).max(1);
    let mut y = x;
    for _ in 0..(r * t - s) {
        y = f.pow(y, p as u64);
    }
    y
}

/// If `End(M)` is local with residue field `K`, returns a basis of its radical.
///
/// Every `f` in such a ring is `λ + n` with `n` nilpotent, so `f^(p^s)` is the
/// scalar `λ^(p^s)` once `p^s ≥ dim M`; the candidate radical is spanned by the
/// `f_i - λ_i` and is then checked to be a nilpotent ideal of codimension one.
pub fn split_local_radical(m: &RightModule, end: &HomSpace) -> Option<Vec<Matrix>> {
    let f = m.field().clone();
    let d = m.dim();
    if d == 0 {
        return None;
    }
    let p = f.characteristic() as u64;
    let mut s = 0u32;
    let mut ps = 1u64;
    while ps < d as u64 {
        ps *= p;
        s += 1;
    }
    let id = Matrix::identity(d, &f);
    let mut rad = Vec::with_capacity(end.dim());
    for b in end.basis() {
        let g = b.pow(ps);
        let mu = g.get(0, 0);
        if g != id.scale(mu) {
            return None;
        }
        let lambda = frobenius_root(&f, mu, s);
        rad.push(b.sub(&id.scale(lambda)));
    }
    let len = end.vectorize(&id).len();
    let mut ech = Echelon::new(len, &f);
    let mut basis = Vec::new();
    for r in rad {
        if ech.insert(&end.vectorize(&r)) {
            basis.push(r);
        }
    }
    if basis.len() + 1 != end.dim() || ech.contains(&end.vectorize(&id)) {
        return None;
    }
    // Closed under products and nilpotent.
    let mut power = basis.clone();
    for _ in 0..=end.dim() {
        if power.is_empty() {
            return Some(basis);
        }
        let mut next_e = Echelon::new(len, &f);
        let mut next = Vec::new();
        for x in &power {
            for y in &basis {
                let z = x.mul(y);
                if !ech.contains(&end.vectorize(&z)) {
                    return None;
                }
                if next_e.insert(&end.vectorize(&z)) {
                    next.push(z);
                }
            }
        }
        if next.len() == power.len() {
            return None;
        }
        power = next;
    }
    None
}

/// Direct sum decomposition: inclusions of indecomposable summands.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub module: RightModule,
    pub summands: Vec<ModuleMap>,
}

impl Decomposition {
    pub fn modules(&self) -> Vec<RightModule> {
        self.summands.iter().map(|s| s.source.clone()).collect()
    }

    /// Projections `M -> M_i` matching the inclusions.
    pub fn projections(&self) -> Vec<ModuleMap> {
        let m = &self.module;
        if m.is_zero() {
            return Vec::new();
        }
        let mut stacked = self.summands[0].matrix.clone();
        for s in &self.summands[1..] {
            stacked = stacked.vstack(&s.matrix);
        }
        let inv = stacked.inverse().expect("summands span the module");
        let mut out = Vec::new();
        let mut off = 0;
        for s in &self.summands {
            let cols: Vec<usize> = (off..off + s.source.dim()).collect();
            out.push(ModuleMap { source: m.clone(), target: s.source.clone(), matrix: inv.select_cols(&cols) });
            off += s.source.dim();
        }
        out
    }
}

pub fn decompose(m: &RightModule) -> Result<Decomposition, ModrepError> {
    decompose_seeded(m, DEFAULT_SEED)
}

pub fn decompose_seeded(m: &RightModule, seed: u64) -> Result<Decomposition, ModrepError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    split_rec(&ModuleMap::identity(m), &mut rng, &mut out)?;
    out.sort_by_key(|s| (s.source.dim(), s.source.dim_vector()));
    Ok(Decomposition { module: m.clone(), summands: out })
}

/// Whether `M` is indecomposable (nonzero with local endomorphism ring).
pub fn is_indecomposable(m: &RightModule) -> Result<bool, ModrepError> {
    Ok(decompose(m)?.summands.len() == 1)
}

fn split_rec(inc: &ModuleMap, rng: &mut ChaCha8Rng, out: &mut Vec<ModuleMap>) -> Result<(), ModrepError> {
    let m = &inc.source;
    if m.is_zero() {
        return Ok(());
    }
    let simple_top = top_vector(m).iter().sum::<usize>() == 1;
    if simple_top || socle_vector(m).iter().sum::<usize>() == 1 {
        out.push(inc.clone());
        return Ok(());
    }
    let end = HomSpace::compute(m, m)?;
    if split_local_radical(m, &end).is_some() {
        out.push(inc.clone());
        return Ok(());
    }
    match find_splitting(m, &end, rng) {
        Splitting::Split(g) => {
            let gm = ModuleMap { source: m.clone(), target: m.clone(), matrix: g };
            let img = gm.image();
            let ker = gm.kernel();
            split_rec(&img.then(inc), rng, out)?;
            split_rec(&ker.then(inc), rng, out)?;
            Ok(())
        }
        Splitting::Local => {
            out.push(inc.clone());
            Ok(())
        }
        Splitting::Inconclusive => Err(ModrepError::DecompositionInconclusive(m.dim())),
    }
}

enum Splitting {
    Split(Matrix),
    Local,
    Inconclusive,
}

/// Looks for `f` in `End(M)` whose `dim`-th power is neither zero nor invertible.
fn find_splitting(m: &RightModule, end: &HomSpace, rng: &mut ChaCha8Rng) -> Splitting {
    let f = m.field().clone();
    let d = m.dim() as u64;
    let id = Matrix::identity(m.dim(), &f);
    let test = |x: &Matrix| -> Option<Matrix> {
        let g = x.pow(d);
        (!g.is_zero() && !g.is_invertible()).then_some(g)
    };
    for b in end.basis() {
        if let Some(g) = test(b) {
            return Splitting::Split(g);
        }
        if f.order() <= 16 {
            for lam in 1..f.order() {
                if let Some(g) = test(&b.sub(&id.scale(lam))) {
                    return Splitting::Split(g);
                }
            }
        }
    }
    for _ in 0..SPLIT_RANDOM_TRIES {
        let c: Vec<Elem> = (0..end.dim()).map(|_| rng.gen_range(0..f.order())).collect();
        if let Some(g) = test(&end.combine(&c)) {
            return Splitting::Split(g);
        }
    }
    let total = (f.order() as u64).checked_pow(end.dim() as u32).unwrap_or(u64::MAX);
    if total <= SPLIT_EXHAUSTIVE_LIMIT {
        for c in enumerate_coeffs(&f, end.dim(), total) {
            if let Some(g) = test(&end.combine(&c)) {
                return Splitting::Split(g);
            }
        }
        // Every endomorphism is nilpotent or invertible.
        return Splitting::Local;
    }
    Splitting::Inconclusive
}

/// Groups modules into isomorphism classes; returns one representative per class
/// and the class index of each input.
pub fn iso_classes(mods: &[RightModule]) -> (Vec<RightModule>, Vec<usize>) {
    let mut reps: Vec<RightModule> = Vec::new();
    let mut idx = Vec::with_capacity(mods.len());
    for m in mods {
        match reps.iter().position(|r| iso(r, m).is_iso()) {
            Some(i) => idx.push(i),
            None => {
                idx.push(reps.len());
                reps.push(m.clone());
            }
        }
    }
    (reps, idx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::from_kupisch;
    use crate::modrep::{projective, regular_module};
    use crate::nakayama::KupischSeries;
    use std::sync::Arc;

    fn alg(c: Vec<usize>, p: u32) -> Arc<crate::algebra::BasedAlgebra> {
        from_kupisch(&KupischSeries::cyclic(c).unwrap(), &Field::prime(p).unwrap())
    }

    #[test]
    fn frobenius_roots() {
        let g = Field::gf4();
        for x in g.elements() {
            for s in 0..4 {
                let y = frobenius_root(&g, x, s);
                assert_eq!(g.pow(y, 2u64.pow(s)), x);
            }
        }
    }

    #[test]
    fn regular_module_of_455_decomposes() {
        let a = alg(vec![4, 5, 5], 2);
        let d = decompose(&regular_module(&a)).unwrap();
        let dims: Vec<usize> = d.summands.iter().map(|s| s.source.dim()).collect();
        assert_eq!(dims, vec![4, 5, 5]);
        let pr = d.projections();
        for (s, p) in d.summands.iter().zip(&pr) {
            assert!(s.then(p).matrix.is_identity());
        }
    }

    #[test]
    fn iso_recognises_permuted_sums() {
        let a = alg(vec![3, 3], 3);
        let p0 = projective(&a, 0);
        let p1 = projective(&a, 1);
        let x = RightModule::direct_sum(&[p0.clone(), p1.clone()], &a);
        let y = RightModule::direct_sum(&[p1, p0.clone()], &a);
        let r = iso(&x, &y);
        let map = r.map().expect("isomorphic");
        assert!(map.is_homomorphism() && map.is_iso());
        let z = RightModule::direct_sum(&[p0.clone(), p0], &a);
        assert!(matches!(iso(&x, &z), IsoResult::NotIso { certain: true }));
    }

    #[test]
    fn split_local_on_indecomposables() {
        let a = alg(vec![7, 7, 7], 5);
        let p = projective(&a, 0);
        let e = HomSpace::compute(&p, &p).unwrap();
        let rad = split_local_radical(&p, &e).unwrap();
        assert_eq!(rad.len() + 1, e.dim());
        let s = RightModule::simple(&a, 0);
        let x = RightModule::direct_sum(&[s.clone(), s], &a);
        let e = HomSpace::compute(&x, &x).unwrap();
        assert!(split_local_radical(&x, &e).is_none());
        assert_eq!(decompose(&x).unwrap().summands.len(), 2);
    }
}
