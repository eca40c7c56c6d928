use std::sync::Arc;

use crate::algebra::{unit_vec, BasedAlgebra};
use crate::linalg::{Elem, Matrix};
use crate::modrep::module::Subspace;
use crate::modrep::{ModuleMap, RightModule};

/// The indecomposable projective `e_v A` on the words starting at `v`.
pub fn projective(a: &Arc<BasedAlgebra>, v: usize) -> RightModule {
    let f = a.field();
    let range = a.words_from(v);
    let labels: Vec<usize> = range.clone().map(|w| a.words()[w].target).collect();
    // Local position of each word inside its target block.
    let mut local = vec![0; labels.len()];
    let mut counts = vec![0; a.vertex_count()];
    for (i, &t) in labels.iter().enumerate() {
        local[i] = counts[t];
        counts[t] += 1;
    }
    let arrows = a
        .arrows()
        .iter()
        .enumerate()
        .map(|(ai, arrow)| {
            let mut m = Matrix::zeros(counts[arrow.source], counts[arrow.target], f);
            for (i, w) in range.clone().enumerate() {
                if labels[i] != arrow.source {
                    continue;
                }
                for &(k, c) in a.word_times_arrow(w, ai) {
                    let j = k as usize - range.start;
                    m.set(local[i], local[j], c);
                }
            }
            m
        })
        .collect();
    RightModule::from_parts(a, labels, arrows)
}

/// The regular module `A_A` as the direct sum of the `e_v A`.
pub fn regular_module(a: &Arc<BasedAlgebra>) -> RightModule {
    let ps: Vec<RightModule> = (0..a.vertex_count()).map(|v| projective(a, v)).collect();
    RightModule::direct_sum(&ps, a)
}

/// The indecomposable injective `D(A e_v)` with socle `S_v`.
pub fn injective(a: &Arc<BasedAlgebra>, v: usize) -> RightModule {
    projective(&a.opposite(), v).dual()
}

/// A direct sum of indecomposable projectives, one per listed vertex.
pub fn projective_sum(a: &Arc<BasedAlgebra>, tops: &[usize]) -> RightModule {
    let ps: Vec<RightModule> = tops.iter().map(|&v| projective(a, v)).collect();
    RightModule::direct_sum(&ps, a)
}

/// The map `⊕ e_{v_i} A -> N` sending the generator `e_{v_i}` to `images[i]`.
pub fn map_from_projectives(a: &Arc<BasedAlgebra>, tops: &[usize], images: &[Vec<Elem>], target: &RightModule) -> ModuleMap {
    let p = projective_sum(a, tops);
    let mut rows = Vec::with_capacity(p.dim());
    for (&v, img) in tops.iter().zip(images) {
        for w in a.words_from(v) {
            rows.push(target.act_word(img, w));
        }
    }
    let matrix = Matrix::from_rows(&rows, target.dim(), a.field()).expect("entries in field");
    ModuleMap { source: p, target: target.clone(), matrix }
}

fn radical_spaces(m: &RightModule) -> Vec<Subspace> {
    let a = m.algebra();
    let f = m.field();
    let mut spaces: Vec<Subspace> = (0..a.vertex_count()).map(|v| Subspace::new(m.block(v).len(), f)).collect();
    for (ai, arrow) in a.arrows().iter().enumerate() {
        let b = m.arrow_block(ai);
        for r in 0..b.rows() {
            spaces[arrow.target].insert(b.row(r));
        }
    }
    spaces
}

/// `rad M` with its inclusion.
pub fn radical(m: &RightModule) -> ModuleMap {
    m.submodule_from_spaces(&radical_spaces(m))
}

/// `M -> M / rad M`.
pub fn top(m: &RightModule) -> ModuleMap {
    m.quotient_by_spaces(&radical_spaces(m))
}

/// `soc M` with its inclusion.
pub fn socle(m: &RightModule) -> ModuleMap {
    let a = m.algebra();
    let f = m.field();
    let spaces: Vec<Subspace> = (0..a.vertex_count())
        .map(|v| {
            let outgoing: Vec<&Matrix> = a
                .arrows()
                .iter()
                .enumerate()
                .filter(|(_, ar)| ar.source == v)
                .map(|(ai, _)| m.arrow_block(ai))
                .collect();
            let mut s = Subspace::new(m.block(v).len(), f);
            if outgoing.is_empty() {
                for i in 0..m.block(v).len() {
                    s.insert(&unit_vec(m.block(v).len(), i));
                }
            } else {
                let mut h = outgoing[0].clone();
                for o in &outgoing[1..] {
                    h = h.hstack(o);
                }
                for k in h.left_kernel_basis() {
                    s.insert(&k);
                }
            }
            s
        })
        .collect();
    m.submodule_from_spaces(&spaces)
}

/// Multiplicities of the simples in the top.
pub fn top_vector(m: &RightModule) -> Vec<usize> {
    radical_spaces(m).iter().enumerate().map(|(v, s)| m.block(v).len() - s.dim()).collect()
}

pub fn socle_vector(m: &RightModule) -> Vec<usize> {
    socle(m).source.dim_vector()
}

fn expand(counts: &[usize]) -> Vec<usize> {
    counts.iter().enumerate().flat_map(|(v, &c)| std::iter::repeat_n(v, c)).collect()
}

/// Vertices of the indecomposable summands of the projective cover, with multiplicity.
pub fn top_vertices(m: &RightModule) -> Vec<usize> {
    expand(&top_vector(m))
}

pub fn socle_vertices(m: &RightModule) -> Vec<usize> {
    expand(&socle_vector(m))
}

/// A minimal projective cover `P -> M`.
#[derive(Clone, Debug)]
pub struct ProjectiveCover {
    /// Vertex of each indecomposable summand of `P`, in order.
    pub tops: Vec<usize>,
    pub map: ModuleMap,
}

pub fn projective_cover(m: &RightModule) -> ProjectiveCover {
    let a = m.algebra();
    let spaces = radical_spaces(m);
    let mut tops = Vec::new();
    let mut images = Vec::new();
    for (v, mut s) in spaces.into_iter().enumerate() {
        let len = m.block(v).len();
        for i in 0..len {
            let e = unit_vec(len, i);
            if s.insert(&e) {
                tops.push(v);
                images.push(m.embed(&e, v));
            }
        }
    }
    let map = map_from_projectives(a, &tops, &images, m);
    ProjectiveCover { tops, map }
}

/// A minimal injective hull `M -> I`, with the socle vertices of `I`.
#[derive(Clone, Debug)]
pub struct InjectiveHull {
    pub socles: Vec<usize>,
    pub map: ModuleMap,
}

pub fn injective_hull(m: &RightModule) -> InjectiveHull {
    let c = projective_cover(&m.dual());
    let target = c.map.source.dual();
    InjectiveHull { socles: c.tops, map: ModuleMap { source: m.clone(), target, matrix: c.map.matrix.transpose() } }
}

/// `Ω(M)`: the kernel of the projective cover, with its inclusion into the cover.
pub fn syzygy_map(m: &RightModule) -> (ProjectiveCover, ModuleMap) {
    let c = projective_cover(m);
    let k = c.map.kernel();
    (c, k)
}

pub fn syzygy(m: &RightModule, steps: usize) -> RightModule {
    let mut cur = m.clone();
    for _ in 0..steps {
        if cur.is_zero() {
            break;
        }
        cur = syzygy_map(&cur).1.source;
    }
    cur
}

/// `Ω^{-1}(M)`: the cokernel of the injective hull, with the projection from the hull.
pub fn cosyzygy_map(m: &RightModule) -> (InjectiveHull, ModuleMap) {
    let h = injective_hull(m);
    let c = h.map.cokernel();
    (h, c)
}

pub fn cosyzygy(m: &RightModule, steps: usize) -> RightModule {
    let mut cur = m.clone();
    for _ in 0..steps {
        if cur.is_zero() {
            break;
        }
        cur = cosyzygy_map(&cur).1.target;
    }
    cur
}

pub fn is_projective(m: &RightModule) -> bool {
    projective_cover(m).map.source.dim() == m.dim()
}

pub fn is_injective(m: &RightModule) -> bool {
    is_projective(&m.dual())
}

/// For each vertex `v`, whether the injective `D(A e_v)` is projective.
pub fn injective_is_projective(a: &Arc<BasedAlgebra>) -> Vec<bool> {
    (0..a.vertex_count()).map(|v| is_projective(&injective(a, v))).collect()
}

/// For each vertex `v`, whether `e_v A` is injective.
pub fn projective_is_injective(a: &Arc<BasedAlgebra>) -> Vec<bool> {
    (0..a.vertex_count()).map(|v| is_injective(&projective(a, v))).collect()
}

/// `e_v A / e_v J^k`.
pub fn projective_quotient(a: &Arc<BasedAlgebra>, v: usize, k: usize) -> RightModule {
    let p = projective(a, v);
    let mut sub = ModuleMap::identity(&p);
    for _ in 0..k {
        sub = radical(&sub.source).then(&sub);
    }
    let gens: Vec<Vec<Elem>> = sub.matrix.row_vecs();
    p.quotient(&gens).target
}

/// `e_v J^k` as a submodule of `e_v A`.
pub fn radical_power(a: &Arc<BasedAlgebra>, v: usize, k: usize) -> RightModule {
    let mut m = projective(a, v);
    for _ in 0..k {
        m = radical(&m).source;
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::from_kupisch;
    use crate::linalg::Field;
    use crate::nakayama::KupischSeries;

    fn alg(c: Vec<usize>, p: u32) -> Arc<BasedAlgebra> {
        from_kupisch(&KupischSeries::cyclic(c).unwrap(), &Field::prime(p).unwrap())
    }

    #[test]
    fn projective_dims_follow_kupisch() {
        let a = alg(vec![4, 5, 5], 2);
        let dims: Vec<usize> = (0..3).map(|v| projective(&a, v).dim()).collect();
        assert_eq!(dims, vec![4, 5, 5]);
        for v in 0..3 {
            projective(&a, v).validate().unwrap();
        }
        assert_eq!(regular_module(&a).dim(), 14);
    }

    #[test]
    fn socle_of_e0a_over_455() {
        let a = alg(vec![4, 5, 5], 2);
        let p = projective(&a, 0);
        // soc(e_0 A) = S_{0+4-1 mod 3} = S_0.
        assert_eq!(socle_vertices(&p), vec![0]);
        assert_eq!(top_vertices(&p), vec![0]);
        assert_eq!(radical(&p).source.dim(), 3);
    }

    #[test]
    fn simple_structure() {
        let a = alg(vec![3, 3], 2);
        let s = RightModule::simple(&a, 1);
        assert!(radical(&s).source.is_zero());
        assert_eq!(socle(&s).source.dim(), 1);
        assert_eq!(top(&s).target.dim(), 1);
        let c = projective_cover(&s);
        assert_eq!(c.tops, vec![1]);
        assert!(c.map.is_surjective() && c.map.is_homomorphism());
    }

    #[test]
    fn hull_of_e0a_over_455() {
        let a = alg(vec![4, 5, 5], 2);
        let h = injective_hull(&projective(&a, 0));
        assert_eq!(h.socles, vec![0]);
        assert!(h.map.is_injective() && h.map.is_homomorphism());
        assert_eq!(h.map.target.dim(), 5);
        // Projective modules have zero syzygy.
        assert!(syzygy(&projective(&a, 1), 1).is_zero());
    }

    #[test]
    fn quotients_and_powers() {
        let a = alg(vec![7, 7, 7], 2);
        assert_eq!(projective_quotient(&a, 0, 3).dim(), 3);
        assert_eq!(radical_power(&a, 0, 2).dim(), 5);
        assert_eq!(top_vertices(&radical_power(&a, 0, 2)), vec![2]);
    }
}
