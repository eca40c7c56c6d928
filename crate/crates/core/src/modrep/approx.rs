use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::linalg::{Echelon, Elem, Matrix};
use crate::modrep::dims::{History, HomologicalDim};
use crate::modrep::iso::{decompose, iso, DEFAULT_SEED};
use crate::modrep::{dualize, Direction, HomSpace, ModrepError, ModuleMap, RightModule};

const NONNILPOTENT_TRIES: usize = 200;

/// Pairwise non-isomorphic indecomposable summands of the given modules.
pub fn indecomposable_summands(gens: &[RightModule]) -> Result<Vec<RightModule>, ModrepError> {
    let mut out: Vec<RightModule> = Vec::new();
    for g in gens {
        for s in decompose(g)?.modules() {
            if !out.iter().any(|o| iso(o, &s).is_iso()) {
                out.push(s);
            }
        }
    }
    Ok(out)
}

/// Whether `x` lies in `add` of the given indecomposables.
pub fn in_add(indecs: &[RightModule], x: &RightModule) -> Result<bool, ModrepError> {
    Ok(decompose(x)?.modules().iter().all(|s| indecs.iter().any(|g| iso(g, s).is_iso())))
}

/// Whether the maps `N -> X` through `phi` span `Hom(N, X)` for every `N`.
fn approximates(indecs: &[RightModule], parts: &[(usize, Matrix)], x: &RightModule) -> bool {
    indecs.iter().all(|n| {
        let h = HomSpace::compute(n, x).expect("same algebra");
        reachable(indecs, parts, n, &h) == h.dim()
    })
}

fn reachable(indecs: &[RightModule], parts: &[(usize, Matrix)], n: &RightModule, h: &HomSpace) -> usize {
    let mut maps = Vec::new();
    for (k, phi) in parts {
        let hk = HomSpace::compute(n, &indecs[*k]).expect("same algebra");
        maps.extend(hk.basis().iter().map(|g| g.mul(phi)));
    }
    h.span_dim(maps.iter())
}

/// A minimal right `add(gens)`-approximation `f: G -> X`.
pub fn min_right_approx(gens: &[RightModule], x: &RightModule) -> Result<ModuleMap, ModrepError> {
    for g in gens {
        g.check_same_algebra(x)?;
    }
    let indecs = indecomposable_summands(gens)?;
    min_right_approx_indecs(&indecs, x)
}

pub(crate) fn min_right_approx_indecs(indecs: &[RightModule], x: &RightModule) -> Result<ModuleMap, ModrepError> {
    let f = x.field().clone();
    // Greedy: add a copy of N for every map N -> X not yet reached.
    let mut parts: Vec<(usize, Matrix)> = Vec::new();
    for (k, n) in indecs.iter().enumerate() {
        let h = HomSpace::compute(n, x)?;
        let mut reached = Echelon::new(h.vectorize(&Matrix::zeros(n.dim(), x.dim(), &f)).len(), &f);
        for (j, phi) in &parts {
            let hj = HomSpace::compute(n, &indecs[*j])?;
            for g in hj.basis() {
                reached.insert(&h.vectorize(&g.mul(phi)));
            }
        }
        for b in h.basis() {
            if reached.insert(&h.vectorize(b)) {
                parts.push((k, b.clone()));
            }
        }
    }
    // Drop summands whose removal keeps the approximation property.
    let mut i = parts.len();
    while i > 0 {
        i -= 1;
        let mut trial = parts.clone();
        trial.remove(i);
        if approximates(indecs, &trial, x) {
            parts = trial;
        }
    }
    let mods: Vec<RightModule> = parts.iter().map(|(k, _)| indecs[*k].clone()).collect();
    let source = RightModule::direct_sum(&mods, x.algebra());
    let mut matrix = Matrix::zeros(0, x.dim(), &f);
    for (_, phi) in &parts {
        matrix = matrix.vstack(phi);
    }
    let phi = ModuleMap { source, target: x.clone(), matrix };
    make_minimal(phi)
}

/// Splits off summands of the source inside the kernel until the map is right minimal.
///
/// `K = {k in End(G) : k f = 0}` is closed under multiplication, and `f` is
/// right minimal exactly when `K` is nilpotent.
fn make_minimal(mut phi: ModuleMap) -> Result<ModuleMap, ModrepError> {
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    loop {
        let g = &phi.source;
        if g.is_zero() {
            return Ok(phi);
        }
        let end = HomSpace::compute(g, g)?;
        let k = kill_space(&end, &phi.matrix);
        if k.is_empty() || nilpotent_span(&end, &k) {
            return Ok(phi);
        }
        let d = g.dim() as u64;
        let f = g.field().clone();
        let mut power = None;
        let mut candidates: Vec<Matrix> = k.clone();
        for _ in 0..NONNILPOTENT_TRIES {
            let c: Vec<Elem> = (0..k.len()).map(|_| rng.gen_range(0..f.order())).collect();
            let mut m = Matrix::zeros(g.dim(), g.dim(), &f);
            for (ci, ki) in c.iter().zip(&k) {
                m.add_scaled(*ci, ki);
            }
            candidates.push(m);
        }
        for c in &candidates {
            let p = c.pow(d);
            if !p.is_zero() {
                power = Some(p);
                break;
            }
        }
        let Some(p) = power else {
            return Err(ModrepError::DecompositionInconclusive(g.dim()));
        };
        let pm = ModuleMap { source: g.clone(), target: g.clone(), matrix: p };
        let keep = pm.kernel();
        phi = keep.then(&phi);
    }
}

/// Basis of `{k in End(G) : k f = 0}`.
fn kill_space(end: &HomSpace, f: &Matrix) -> Vec<Matrix> {
    if end.dim() == 0 {
        return Vec::new();
    }
    let field = end.source.field();
    let images: Vec<Vec<Elem>> = end.basis().iter().map(|b| b.mul(f).data().to_vec()).collect();
    let m = Matrix::from_rows(&images, f.rows() * f.cols(), field).expect("entries in field");
    m.left_kernel_basis().into_iter().map(|c| end.combine(&c)).collect()
}

/// Whether the algebra generated by `k` (closed under products) is nilpotent.
fn nilpotent_span(end: &HomSpace, k: &[Matrix]) -> bool {
    let field = end.source.field();
    let len = end.vectorize(&k[0]).len();
    let mut power = k.to_vec();
    for _ in 0..=end.source.dim() {
        if power.is_empty() {
            return true;
        }
        let mut e = Echelon::new(len, field);
        let mut next = Vec::new();
        for x in &power {
            for y in k {
                let z = x.mul(y);
                if e.insert(&end.vectorize(&z)) {
                    next.push(z);
                }
            }
        }
        if next.len() == power.len() {
            return false;
        }
        power = next;
    }
    power.is_empty()
}

/// `gens`-resolution dimension: least `n` with `Ω^n_gens(X)` in `add(gens)`.
pub fn resdim(gens: &[RightModule], x: &RightModule, cutoff: usize) -> Result<HomologicalDim, ModrepError> {
    for g in gens {
        g.check_same_algebra(x)?;
    }
    let indecs = indecomposable_summands(gens)?;
    let terminal = |m: &RightModule| in_add(&indecs, m).unwrap_or(false);
    let mut hist = History::new(Direction::Approximation);
    let mut cur = x.clone();
    for k in 0..=cutoff {
        if terminal(&cur) {
            return Ok(HomologicalDim::Finite(k));
        }
        if let Some(p) = hist.periodic(&cur) {
            return Ok(p);
        }
        if let Some(r) = hist.recurring(&cur, &terminal) {
            return Ok(r);
        }
        cur = min_right_approx_indecs(&indecs, &cur)?.kernel().source;
    }
    Ok(HomologicalDim::AtLeast(cutoff + 1))
}

/// The dual notion through left approximations, computed over the opposite algebra.
pub fn coresdim(gens: &[RightModule], x: &RightModule, cutoff: usize) -> Result<HomologicalDim, ModrepError> {
    let dg: Vec<RightModule> = gens.iter().map(|g| g.dual()).collect();
    Ok(dualize(resdim(&dg, &x.dual(), cutoff)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::from_kupisch;
    use crate::linalg::Field;
    use crate::modrep::{projdim, projective, radical_power, regular_module, InfiniteCertificate};
    use crate::nakayama::KupischSeries;

    #[test]
    fn covers_over_777() {
        let a = from_kupisch(&KupischSeries::cyclic(vec![7, 7, 7]).unwrap(), &Field::prime(2).unwrap());
        let w = vec![regular_module(&a), radical_power(&a, 0, 2)];
        let f = min_right_approx(&w, &radical_power(&a, 0, 5)).unwrap();
        assert!(f.is_surjective() && f.is_homomorphism());
        let k1 = f.kernel().source;
        assert!(iso(&k1, &radical_power(&a, 0, 4)).is_iso());
        let k2 = min_right_approx(&w, &k1).unwrap().kernel().source;
        let expect = RightModule::direct_sum(&[radical_power(&a, 0, 4), radical_power(&a, 1, 1)], &a);
        assert!(iso(&k2, &expect).is_iso());
        let r = resdim(&w, &radical_power(&a, 0, 5), 6).unwrap();
        assert!(matches!(&r, HomologicalDim::Infinite(c) if matches!(**c, InfiniteCertificate::RecurringSummand { .. })));
    }

    #[test]
    fn trivial_cases() {
        let a = from_kupisch(&KupischSeries::linear(vec![3, 2, 1]).unwrap(), &Field::prime(3).unwrap());
        let p = projective(&a, 0);
        let f = min_right_approx(&[regular_module(&a)], &p).unwrap();
        assert!(f.is_iso());
        let s = RightModule::simple(&a, 0);
        assert_eq!(resdim(&[regular_module(&a)], &s, 5).unwrap(), projdim(&s, 5));
        assert_eq!(resdim(std::slice::from_ref(&p), &p, 3).unwrap(), HomologicalDim::Finite(0));
    }
}
