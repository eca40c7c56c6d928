use std::sync::Arc;

use crate::algebra::{to_sparse, BasedAlgebra, Parts};
use crate::linalg::{Elem, Matrix};
use crate::modrep::iso::split_local_radical;
use crate::modrep::{indecomposable_summands, HomSpace, ModrepError, ModuleMap, RightModule};

/// `B = End_A(X_1 ⊕ ... ⊕ X_r)` with basis the union of `Hom(X_j, X_i) = e_i B e_j`.
///
/// The product is composition, `b c = b ∘ c`, so `Hom_A(X, N)` is a right
/// `B`-module by precomposition with vertex `j` carrying `Hom(X_j, N)`.
#[derive(Clone, Debug)]
pub struct EndoAlgebra {
    pub algebra: Arc<BasedAlgebra>,
    /// Indecomposable summands; summand `i` belongs to idempotent `i`.
    pub summands: Vec<RightModule>,
    homs: Vec<Vec<HomSpace>>,
    offsets: Vec<Vec<usize>>,
}

impl EndoAlgebra {
    pub fn build(modules: &[RightModule]) -> Result<Self, ModrepError> {
        let Some(first) = modules.first() else {
            return Err(ModrepError::Shape("at least one module is required".into()));
        };
        for m in modules {
            m.check_same_algebra(first)?;
        }
        let xs = indecomposable_summands(modules)?;
        let r = xs.len();
        let f = first.field().clone();
        let mut homs: Vec<Vec<HomSpace>> = Vec::with_capacity(r);
        for xi in &xs {
            homs.push(xs.iter().map(|xj| HomSpace::compute(xj, xi)).collect::<Result<_, _>>()?);
        }
        let mut offsets = vec![vec![0; r]; r];
        let mut labels = Vec::new();
        let mut index = Vec::new();
        for i in 0..r {
            for j in 0..r {
                offsets[i][j] = labels.len();
                for k in 0..homs[i][j].dim() {
                    labels.push(format!("h{i}_{j}_{k}"));
                    index.push((i, j, k));
                }
            }
        }
        let d = labels.len();
        let embed = |i: usize, j: usize, c: &[Elem]| -> Vec<Elem> {
            let mut v = vec![0; d];
            v[offsets[i][j]..offsets[i][j] + c.len()].copy_from_slice(c);
            v
        };
        let mut table = Vec::with_capacity(d * d);
        for &(i, j, k) in &index {
            let b = &homs[i][j].basis()[k];
            for &(i2, j2, k2) in &index {
                if j != i2 {
                    table.push(Vec::new());
                    continue;
                }
                let c = &homs[i2][j2].basis()[k2];
                let coords = homs[i][j2].coords(&c.mul(b)).expect("composite is a homomorphism");
                table.push(to_sparse(&embed(i, j2, &coords)));
            }
        }
        let mut idempotents = Vec::with_capacity(r);
        let mut radical_generators = Vec::new();
        for i in 0..r {
            let end = &homs[i][i];
            let id = end.coords(&Matrix::identity(xs[i].dim(), &f)).expect("identity");
            idempotents.push(embed(i, i, &id));
            let rad = split_local_radical(&xs[i], end).ok_or(ModrepError::NotSplitLocal(i))?;
            for x in rad {
                radical_generators.push(embed(i, i, &end.coords(&x).expect("endomorphism")));
            }
            for j in 0..r {
                if j != i {
                    for k in 0..homs[i][j].dim() {
                        radical_generators.push(crate::algebra::unit_vec(d, offsets[i][j] + k));
                    }
                }
            }
        }
        let mut unit = vec![0; d];
        for e in &idempotents {
            for (u, x) in unit.iter_mut().zip(e) {
                *u = f.add(*u, *x);
            }
        }
        let algebra = BasedAlgebra::from_parts(
            Parts { field: f, labels, table, unit, idempotents, radical_generators },
            true,
        )?;
        Ok(EndoAlgebra { algebra, summands: xs, homs, offsets })
    }

    /// `Hom(X_j, X_i)`.
    pub fn hom(&self, i: usize, j: usize) -> &HomSpace {
        &self.homs[i][j]
    }

    /// Index of the basis element `k` of `Hom(X_j, X_i)`.
    pub fn basis_index(&self, i: usize, j: usize, k: usize) -> usize {
        self.offsets[i][j] + k
    }

    /// The right `B`-module `Hom_A(X, N)`, with block `j` equal to `Hom(X_j, N)`.
    pub fn hom_functor(&self, n: &RightModule) -> Result<RightModule, ModrepError> {
        Ok(self.hom_functor_data(n)?.0)
    }

    fn hom_functor_data(&self, n: &RightModule) -> Result<(RightModule, Matrix, Vec<HomSpace>, Vec<usize>), ModrepError> {
        let f = n.field().clone();
        let r = self.summands.len();
        let hs: Vec<HomSpace> = self.summands.iter().map(|x| HomSpace::compute(x, n)).collect::<Result<_, _>>()?;
        let mut off = vec![0];
        for h in &hs {
            off.push(off.last().unwrap() + h.dim());
        }
        let dim = off[r];
        let mut actions = Vec::with_capacity(self.algebra.dim());
        for i in 0..r {
            for j in 0..r {
                for b in self.homs[i][j].basis() {
                    let mut act = Matrix::zeros(dim, dim, &f);
                    for (p, phi) in hs[i].basis().iter().enumerate() {
                        let c = hs[j].coords(&b.mul(phi)).expect("composite is a homomorphism");
                        for (q, x) in c.into_iter().enumerate() {
                            act.set(off[i] + p, off[j] + q, x);
                        }
                    }
                    actions.push(act);
                }
            }
        }
        let (module, p) = RightModule::from_basis_action_unchecked(&self.algebra, &actions);
        Ok((module, p, hs, off))
    }

    /// `Hom_A(X, g)` for `g: N -> N'`, by postcomposition.
    pub fn hom_functor_map(&self, g: &ModuleMap) -> Result<ModuleMap, ModrepError> {
        let (src, ps, hs, os) = self.hom_functor_data(&g.source)?;
        let (tgt, pt, ht, ot) = self.hom_functor_data(&g.target)?;
        let f = g.source.field();
        let mut m = Matrix::zeros(os[os.len() - 1], ot[ot.len() - 1], f);
        for j in 0..self.summands.len() {
            for (p, phi) in hs[j].basis().iter().enumerate() {
                let c = ht[j].coords(&phi.mul(&g.matrix)).expect("composite is a homomorphism");
                for (q, x) in c.into_iter().enumerate() {
                    m.set(os[j] + p, ot[j] + q, x);
                }
            }
        }
        let pt_inv = pt.inverse().expect("change of basis");
        Ok(ModuleMap { source: src, target: tgt, matrix: ps.mul(&m).mul(&pt_inv) })
    }
}

/// `End_A(⊕ modules)` as a based algebra.
pub fn endo_algebra(modules: &[RightModule]) -> Result<EndoAlgebra, ModrepError> {
    EndoAlgebra::build(modules)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::from_kupisch;
    use crate::linalg::Field;
    use crate::modrep::{projective, radical_power, regular_module, RightModule};
    use crate::nakayama::KupischSeries;

    #[test]
    fn endo_of_projectives_is_morita_equivalent() {
        let a = from_kupisch(&KupischSeries::cyclic(vec![4, 5, 5]).unwrap(), &Field::prime(2).unwrap());
        let b = endo_algebra(&[regular_module(&a)]).unwrap();
        assert_eq!(b.algebra.dim(), a.dim());
        let ca = a.cartan_matrix();
        let cb = b.algebra.cartan_matrix();
        // Same Cartan matrix up to transposition and the order of summands.
        let mut flat_a: Vec<usize> = ca.iter().flat_map(|r| r.iter().copied()).collect();
        let mut flat_b: Vec<usize> = cb.iter().flat_map(|r| r.iter().copied()).collect();
        flat_a.sort();
        flat_b.sort();
        assert_eq!(flat_a, flat_b);
        let x = radical_power(&a, 0, 2);
        let m = b.hom_functor(&x).unwrap();
        m.validate().unwrap();
        assert_eq!(m.dim(), x.dim());
    }

    #[test]
    fn endo_with_extra_summand() {
        let a = from_kupisch(&KupischSeries::cyclic(vec![7, 7, 7]).unwrap(), &Field::prime(2).unwrap());
        let x = radical_power(&a, 0, 2);
        let b = endo_algebra(&[regular_module(&a), x.clone()]).unwrap();
        assert_eq!(b.summands.len(), 4);
        let expect: usize = b.summands.iter().flat_map(|s| b.summands.iter().map(move |t| crate::modrep::hom_dim(s, t))).sum();
        assert_eq!(b.algebra.dim(), expect);
        let p = projective(&a, 1);
        let hp = b.hom_functor(&p).unwrap();
        hp.validate().unwrap();
        let simple = RightModule::simple(&a, 0);
        let g = crate::modrep::projective_cover(&simple).map;
        let hg = b.hom_functor_map(&g).unwrap();
        assert!(hg.is_homomorphism());
    }
}
