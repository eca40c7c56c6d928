//! Almost split sequences: construction from the socle of `Ext^1(M, τM)`,
//! verification against a pool, and knitting of indecomposables.

use std::sync::Arc;

use serde::Serialize;

use crate::algebra::BasedAlgebra;
use crate::linalg::{Echelon, Elem, Matrix};
use crate::modrep::{
    decompose, injective, radical, socle, is_indecomposable, is_injective, is_projective, iso, projective, split_local_radical, syzygy_map,
    tau, tau_inv, HomSpace, ModuleMap, RightModule,
};

use super::InvariantsError;

/// A short exact sequence `0 -> L -> E -> M -> 0`.
#[derive(Clone, Debug)]
pub struct ShortExact {
    pub left: ModuleMap,
    pub right: ModuleMap,
}

impl ShortExact {
    pub fn start(&self) -> &RightModule {
        &self.left.source
    }

    pub fn middle(&self) -> &RightModule {
        &self.left.target
    }

    pub fn end(&self) -> &RightModule {
        &self.right.target
    }

    pub fn is_exact(&self) -> bool {
        self.left.target.dim() == self.right.source.dim()
            && self.left.is_injective()
            && self.right.is_surjective()
            && self.left.then(&self.right).is_zero()
            && self.middle().dim() == self.start().dim() + self.end().dim()
    }

    /// Whether `E -> M` has a section.
    pub fn splits(&self) -> bool {
        factor_through(&ModuleMap::identity(self.end()), &self.right).is_some()
    }
}

/// Some `h: X -> Y` with `h` followed by `g` equal to `f`, for `f: X -> Z`, `g: Y -> Z`.
pub fn factor_through(f: &ModuleMap, g: &ModuleMap) -> Option<ModuleMap> {
    let h = HomSpace::compute(&f.source, &g.source).ok()?;
    let target = HomSpace::compute(&f.source, &f.target).ok()?;
    let want = target.vectorize(&f.matrix);
    if h.dim() == 0 {
        return want.iter().all(|&x| x == 0).then(|| ModuleMap::zero(&f.source, &g.source));
    }
    let cols: Vec<Vec<Elem>> = h.basis().iter().map(|b| target.vectorize(&b.mul(&g.matrix))).collect();
    let fld = f.source.field();
    let a = Matrix::from_rows(&cols, want.len(), fld).ok()?.transpose();
    let c = a.solve(&want).ok()??;
    Some(ModuleMap { source: f.source.clone(), target: g.source.clone(), matrix: h.combine(&c) })
}

/// The map `E -> Z` induced by `f: X -> Z` along a surjection `q: X -> E`
/// whose kernel `f` kills.
fn descend(q: &ModuleMap, f: &ModuleMap) -> ModuleMap {
    let fld = q.source.field();
    let e = q.target.dim();
    // A linear section s with s q = 1, then s f.
    let qt = q.matrix.transpose();
    let mut s = Matrix::zeros(e, q.source.dim(), fld);
    for j in 0..e {
        let mut unit = vec![0; e];
        unit[j] = 1;
        let x = qt.solve(&unit).expect("shape").expect("q is surjective");
        s.row_mut(j).copy_from_slice(&x);
    }
    ModuleMap { source: q.target.clone(), target: f.target.clone(), matrix: s.mul(&f.matrix) }
}

/// Basis of the maps `N -> M` that are not split epimorphisms, for `N`, `M` indecomposable.
fn non_retractions(n: &RightModule, m: &RightModule) -> Result<Vec<Matrix>, InvariantsError> {
    let h = HomSpace::compute(n, m)?;
    if n.dim() != m.dim() {
        return Ok(h.basis().to_vec());
    }
    let Some(phi) = iso(n, m).map() else {
        return Ok(h.basis().to_vec());
    };
    let end = HomSpace::compute(m, m)?;
    let rad = split_local_radical(m, &end)
        .ok_or_else(|| InvariantsError::Precondition("endomorphism ring is not split local".into()))?;
    Ok(rad.iter().map(|r| phi.matrix.mul(r)).collect())
}

/// The almost split sequence ending at an indecomposable nonprojective `m`.
///
/// With `0 -> ΩM -> P -> M -> 0`, `Ext^1(M, τM)` is `Hom(ΩM, τM)` modulo maps
/// extending to `P`; a nonzero class killed by every radical endomorphism of
/// `M` is pushed out along `ΩM -> P`.
pub fn almost_split_sequence(m: &RightModule) -> Result<ShortExact, InvariantsError> {
    if is_projective(m) {
        return Err(InvariantsError::Precondition("module is projective".into()));
    }
    let fld = m.field().clone();
    let n = tau(m);
    let (cover, iota) = syzygy_map(m);
    let pi = cover.map;
    let p = pi.source.clone();
    let omega = iota.source.clone();
    let hom = HomSpace::compute(&omega, &n)?;
    let mut inner = Echelon::new(hom.dim(), &fld);
    for h in HomSpace::compute(&p, &n)?.basis() {
        let c = hom.coords(&iota.matrix.mul(h)).expect("restriction is a homomorphism");
        inner.insert(&c);
    }
    let end = HomSpace::compute(m, m)?;
    let rad = split_local_radical(m, &end)
        .ok_or_else(|| InvariantsError::Precondition("endomorphism ring is not split local".into()))?;
    // Rows: images of hom basis vectors under each radical endomorphism, modulo inner.
    let mut blocks: Vec<Matrix> = Vec::new();
    for r in &rad {
        let rmap = ModuleMap { source: m.clone(), target: m.clone(), matrix: r.clone() };
        let lift = factor_through(&pi.then(&rmap), &pi).expect("projective lifts");
        let restricted = factor_through(&iota.then(&lift), &iota).expect("lift preserves the syzygy");
        let mut blk = Matrix::zeros(hom.dim(), hom.dim(), &fld);
        for (k, b) in hom.basis().iter().enumerate() {
            let c = hom.coords(&restricted.matrix.mul(b)).expect("composite is a homomorphism");
            blk.row_mut(k).copy_from_slice(&inner.reduce(&c));
        }
        blocks.push(blk);
    }
    let socle: Vec<Vec<Elem>> = if blocks.is_empty() {
        (0..hom.dim()).map(|k| unit(hom.dim(), k)).collect()
    } else {
        let mut all = blocks[0].clone();
        for b in &blocks[1..] {
            all = all.hstack(b);
        }
        all.left_kernel_basis()
    };
    let class = socle
        .into_iter()
        .find(|s| !inner.contains(s))
        .ok_or_else(|| InvariantsError::Precondition("Ext^1(M, τM) has no nonsplit class".into()))?;
    let f = hom.combine(&class);
    // E = (P ⊕ τM) / {(ι x, -f x)}.
    let a = m.algebra();
    let sum = RightModule::direct_sum(&[p.clone(), n.clone()], a);
    let mut emb = Matrix::zeros(omega.dim(), sum.dim(), &fld);
    for i in 0..omega.dim() {
        for j in 0..p.dim() {
            emb.set(i, j, iota.matrix.get(i, j));
        }
        for j in 0..n.dim() {
            emb.set(i, p.dim() + j, fld.neg(f.get(i, j)));
        }
    }
    let emb = ModuleMap { source: omega, target: sum.clone(), matrix: emb };
    let q = emb.cokernel();
    let mut into_n = Matrix::zeros(n.dim(), sum.dim(), &fld);
    for j in 0..n.dim() {
        into_n.set(j, p.dim() + j, 1);
    }
    let left = ModuleMap { source: n.clone(), target: sum.clone(), matrix: into_n }.then(&q);
    let mut onto_m = Matrix::zeros(sum.dim(), m.dim(), &fld);
    for i in 0..p.dim() {
        for j in 0..m.dim() {
            onto_m.set(i, j, pi.matrix.get(i, j));
        }
    }
    let right = descend(&q, &ModuleMap { source: sum, target: m.clone(), matrix: onto_m });
    Ok(ShortExact { left, right })
}

fn unit(d: usize, i: usize) -> Vec<Elem> {
    let mut v = vec![0; d];
    v[i] = 1;
    v
}

/// Indecomposable modules with a flag telling whether every isoclass is present.
#[derive(Clone, Debug)]
pub struct IndecPool {
    pub modules: Vec<RightModule>,
    pub exhaustive: bool,
}

impl IndecPool {
    fn position(&self, m: &RightModule) -> Option<usize> {
        self.modules.iter().position(|x| iso(x, m).is_iso())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ArVerdict {
    pub almost_split: bool,
    /// False when the pool is not known to contain every indecomposable.
    pub pool_complete: bool,
}

/// Checks that `seq` is almost split, testing right almost-splitness on `pool`.
pub fn almost_split_verify(seq: &ShortExact, pool: &IndecPool) -> Result<ArVerdict, InvariantsError> {
    if !seq.is_exact() || !seq.left.is_homomorphism() || !seq.right.is_homomorphism() {
        return Err(InvariantsError::Precondition("sequence is not exact".into()));
    }
    let m = seq.end();
    if is_projective(m) || !is_indecomposable(m)? {
        return Err(InvariantsError::Precondition("end term must be indecomposable and nonprojective".into()));
    }
    if !iso(seq.start(), &tau(m)).is_iso() {
        return Err(InvariantsError::Precondition("start term is not τ of the end term".into()));
    }
    let pool_complete = pool.exhaustive;
    if seq.splits() {
        return Ok(ArVerdict { almost_split: false, pool_complete });
    }
    for x in &pool.modules {
        let target = HomSpace::compute(x, m)?;
        let through: Vec<Matrix> =
            HomSpace::compute(x, seq.middle())?.basis().iter().map(|g| g.mul(&seq.right.matrix)).collect();
        let mut reach = Echelon::new(target.vectorize(&Matrix::zeros(x.dim(), m.dim(), m.field())).len(), m.field());
        for t in &through {
            reach.insert(&target.vectorize(t));
        }
        for h in non_retractions(x, m)? {
            if !reach.contains(&target.vectorize(&h)) {
                return Ok(ArVerdict { almost_split: false, pool_complete });
            }
        }
    }
    Ok(ArVerdict { almost_split: true, pool_complete })
}

/// Limits on a knitting run: the number of isoclasses and their dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KnitBudget {
    pub modules: usize,
    pub max_dim: usize,
}

impl KnitBudget {
    pub fn modules(modules: usize) -> Self {
        KnitBudget { modules, max_dim: usize::MAX }
    }
}

/// Closes the indecomposable projectives and injectives, with the summands of
/// their radicals and socle quotients, under `τ`, `τ^{-1}` and
/// middle terms of almost split sequences.
///
/// For a connected algebra a finite closure is a finite Auslander–Reiten
/// component, hence the whole module category; the pool is then exhaustive.
pub fn knit_indecomposables(a: &Arc<BasedAlgebra>, budget: KnitBudget) -> Result<IndecPool, InvariantsError> {
    let mut pool = IndecPool { modules: Vec::new(), exhaustive: false };
    let mut queue = Vec::new();
    let add = |pool: &mut IndecPool, queue: &mut Vec<usize>, x: RightModule| -> bool {
        if x.is_zero() || pool.position(&x).is_some() {
            return true;
        }
        if pool.modules.len() >= budget.modules || x.dim() > budget.max_dim {
            return false;
        }
        pool.modules.push(x);
        queue.push(pool.modules.len() - 1);
        true
    };
    let mut seeds = Vec::new();
    for v in 0..a.vertex_count() {
        let (p, i) = (projective(a, v), injective(a, v));
        // Irreducible maps into a projective start at summands of its radical;
        // dually out of an injective.
        seeds.extend(decompose(&radical(&p).source)?.modules());
        seeds.extend(decompose(&socle(&i).cokernel().target)?.modules());
        seeds.push(p);
        seeds.push(i);
    }
    for x in seeds {
        if !add(&mut pool, &mut queue, x) {
            return Ok(pool);
        }
    }
    let mut head = 0;
    while head < queue.len() {
        let x = pool.modules[queue[head]].clone();
        head += 1;
        let mut fresh = Vec::new();
        if !is_projective(&x) {
            let seq = almost_split_sequence(&x)?;
            fresh.push(seq.start().clone());
            fresh.extend(decompose(seq.middle())?.modules());
        }
        if !is_injective(&x) {
            fresh.push(tau_inv(&x));
        }
        for y in fresh {
            if !add(&mut pool, &mut queue, y) {
                return Ok(pool);
            }
        }
    }
    pool.exhaustive = a.is_connected();
    Ok(pool)
}
