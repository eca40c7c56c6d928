use crate::algebra::BasedAlgebra;
use crate::linalg::Matrix;
use crate::modrep::structure::{projective_cover, syzygy_map};
use crate::modrep::{HomSpace, ModuleMap, RightModule};

/// Left multiplication by arrow `ai` (from `s` to `t`) as a map `e_t A -> e_s A`.
fn left_mult(a: &BasedAlgebra, ai: usize) -> Matrix {
    let arrow = &a.arrows()[ai];
    let (rs, rt) = (a.words_from(arrow.source), a.words_from(arrow.target));
    let mut m = Matrix::zeros(rt.len(), rs.len(), a.field());
    for (i, w) in rt.enumerate() {
        let prod = a.to_word_coords(&a.mul(&arrow.vector, &a.words()[w].vector));
        for (j, k) in rs.clone().enumerate() {
            m.set(i, j, prod[k]);
        }
    }
    m
}

struct StarData {
    module: RightModule,
    homs: Vec<HomSpace>,
    offsets: Vec<usize>,
}

fn star_data(x: &RightModule) -> StarData {
    let a = x.algebra();
    let op = a.opposite();
    let projs: Vec<RightModule> = (0..a.vertex_count()).map(|v| crate::modrep::projective(a, v)).collect();
    let homs: Vec<HomSpace> = projs.iter().map(|p| HomSpace::compute(x, p).expect("same algebra")).collect();
    let mut offsets = vec![0];
    let mut labels = Vec::new();
    for (v, h) in homs.iter().enumerate() {
        labels.extend(std::iter::repeat_n(v, h.dim()));
        offsets.push(offsets[v] + h.dim());
    }
    let arrows = (0..a.arrows().len())
        .map(|ai| {
            let (s, t) = (a.arrows()[ai].source, a.arrows()[ai].target);
            let l = left_mult(a, ai);
            let mut block = Matrix::zeros(homs[t].dim(), homs[s].dim(), a.field());
            for (i, phi) in homs[t].basis().iter().enumerate() {
                let c = homs[s].coords(&phi.mul(&l)).expect("left multiplication is a homomorphism");
                for (j, x) in c.into_iter().enumerate() {
                    block.set(i, j, x);
                }
            }
            block
        })
        .collect();
    StarData { module: RightModule::from_parts(&op, labels, arrows), homs, offsets }
}

/// `Hom_A(X, A)` as a right module over the opposite algebra.
pub fn star(x: &RightModule) -> RightModule {
    star_data(x).module
}

/// `Hom_A(f, A)`: precomposition with `f: X -> Y`, a map `Y* -> X*`.
pub fn star_map(f: &ModuleMap) -> ModuleMap {
    let sx = star_data(&f.source);
    let sy = star_data(&f.target);
    let field = f.source.field();
    let mut m = Matrix::zeros(sy.module.dim(), sx.module.dim(), field);
    for v in 0..sy.homs.len() {
        for (i, psi) in sy.homs[v].basis().iter().enumerate() {
            let c = sx.homs[v].coords(&f.matrix.mul(psi)).expect("composite is a homomorphism");
            for (j, x) in c.into_iter().enumerate() {
                m.set(sy.offsets[v] + i, sx.offsets[v] + j, x);
            }
        }
    }
    ModuleMap { source: sy.module, target: sx.module, matrix: m }
}

/// The Nakayama functor `D Hom_A(-, A)`.
pub fn nu(m: &RightModule) -> RightModule {
    star(m).dual()
}

/// `Hom_A(D(-), A)`, inverse to `nu` between injectives and projectives.
pub fn nu_inv(m: &RightModule) -> RightModule {
    star(&m.dual())
}

/// The minimal projective presentation `P_1 -> P_0` of `M`.
pub fn presentation(m: &RightModule) -> ModuleMap {
    let (_, inc) = syzygy_map(m);
    projective_cover(&inc.source).map.then(&inc)
}

/// The transpose `Tr M`, over the opposite algebra.
pub fn transpose_tr(m: &RightModule) -> RightModule {
    star_map(&presentation(m)).cokernel().target
}

/// The Auslander–Reiten translate `D Tr`.
pub fn tau(m: &RightModule) -> RightModule {
    transpose_tr(m).dual()
}

/// `Tr D`.
pub fn tau_inv(m: &RightModule) -> RightModule {
    transpose_tr(&m.dual())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::from_kupisch;
    use crate::linalg::Field;
    use crate::modrep::{injective, iso, projective, radical_power, syzygy};
    use crate::nakayama::KupischSeries;
    use std::sync::Arc;

    fn alg(c: Vec<usize>) -> Arc<BasedAlgebra> {
        from_kupisch(&KupischSeries::cyclic(c).unwrap(), &Field::prime(2).unwrap())
    }

    #[test]
    fn nu_sends_projectives_to_injectives() {
        let a = alg(vec![4, 5, 5]);
        for v in 0..3 {
            let p = projective(&a, v);
            let s = star(&p);
            s.validate().unwrap();
            assert!(iso(&nu(&p), &injective(&a, v)).is_iso());
            assert!(iso(&nu_inv(&nu(&p)), &p).is_iso());
        }
    }

    #[test]
    fn tau_on_symmetric_777() {
        let a = alg(vec![7, 7, 7]);
        let m = radical_power(&a, 0, 2);
        let t = tau(&m);
        t.validate().unwrap();
        assert!(iso(&t, &syzygy(&m, 2)).is_iso());
        assert!(iso(&tau(&syzygy(&m, 1)), &radical_power(&a, 0, 5)).is_iso());
        assert!(iso(&tau_inv(&t), &m).is_iso());
        assert!(tau(&projective(&a, 1)).is_zero());
    }
}
