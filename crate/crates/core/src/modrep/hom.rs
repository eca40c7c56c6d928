use crate::linalg::{Echelon, Elem, Matrix};
use crate::modrep::{ModrepError, ModuleMap, RightModule};

/// A basis of `Hom_A(M, N)` with coordinates for arbitrary homomorphisms.
///
/// Homomorphisms preserve vertex blocks, so a map is determined by its
/// diagonal blocks `M e_v -> N e_v`; these entries are the unknowns of the
/// linear system cut out by the arrow actions.
#[derive(Clone, Debug)]
pub struct HomSpace {
    pub source: RightModule,
    pub target: RightModule,
    basis: Vec<Matrix>,
    offsets: Vec<usize>,
    coords: Echelon,
}

impl HomSpace {
    pub fn compute(m: &RightModule, n: &RightModule) -> Result<Self, ModrepError> {
        m.check_same_algebra(n)?;
        let alg = m.algebra();
        let f = m.field().clone();
        let nv = alg.vertex_count();
        let mut offsets = Vec::with_capacity(nv + 1);
        let mut total = 0;
        for v in 0..nv {
            offsets.push(total);
            total += m.block(v).len() * n.block(v).len();
        }
        offsets.push(total);
        let var = |v: usize, i: usize, j: usize| offsets[v] + i * n.block(v).len() + j;

        let mut rows: Vec<Vec<Elem>> = Vec::new();
        for (ai, a) in alg.arrows().iter().enumerate() {
            let (s, t) = (a.source, a.target);
            let am = m.arrow_block(ai);
            let an = n.arrow_block(ai);
            for i in 0..m.block(s).len() {
                for j in 0..n.block(t).len() {
                    let mut row = vec![0; total];
                    for k in 0..m.block(t).len() {
                        let c = am.get(i, k);
                        if c != 0 {
                            let x = var(t, k, j);
                            row[x] = f.add(row[x], c);
                        }
                    }
                    for l in 0..n.block(s).len() {
                        let c = an.get(l, j);
                        if c != 0 {
                            let x = var(s, i, l);
                            row[x] = f.sub(row[x], c);
                        }
                    }
                    if row.iter().any(|&x| x != 0) {
                        rows.push(row);
                    }
                }
            }
        }
        let kernel = if rows.is_empty() {
            (0..total).map(|i| crate::algebra::unit_vec(total, i)).collect()
        } else {
            Matrix::from_rows(&rows, total, &f).expect("entries in field").kernel_basis()
        };
        let mut coords = Echelon::tracking(total, &f);
        let mut basis = Vec::with_capacity(kernel.len());
        for k in kernel {
            coords.insert(&k);
            let mut mat = Matrix::zeros(m.dim(), n.dim(), &f);
            for v in 0..nv {
                for (i, &gi) in m.block(v).iter().enumerate() {
                    for (j, &gj) in n.block(v).iter().enumerate() {
                        mat.set(gi, gj, k[var(v, i, j)]);
                    }
                }
            }
            basis.push(mat);
        }
        Ok(HomSpace { source: m.clone(), target: n.clone(), basis, offsets, coords })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Matrix] {
        &self.basis
    }

    pub fn map(&self, i: usize) -> ModuleMap {
        ModuleMap { source: self.source.clone(), target: self.target.clone(), matrix: self.basis[i].clone() }
    }

    pub fn maps(&self) -> Vec<ModuleMap> {
        (0..self.dim()).map(|i| self.map(i)).collect()
    }

    /// The block entries of a map, in the order of the unknowns.
    pub fn vectorize(&self, mat: &Matrix) -> Vec<Elem> {
        let (m, n) = (&self.source, &self.target);
        let mut out = vec![0; *self.offsets.last().unwrap()];
        for v in 0..m.algebra().vertex_count() {
            let nb = n.block(v).len();
            for (i, &gi) in m.block(v).iter().enumerate() {
                for (j, &gj) in n.block(v).iter().enumerate() {
                    out[self.offsets[v] + i * nb + j] = mat.get(gi, gj);
                }
            }
        }
        out
    }

    /// Coordinates of a homomorphism in the basis; `None` if it is not one.
    pub fn coords(&self, mat: &Matrix) -> Option<Vec<Elem>> {
        self.coords.express(&self.vectorize(mat))
    }

    pub fn combine(&self, coeffs: &[Elem]) -> Matrix {
        let f = self.source.field();
        let mut out = Matrix::zeros(self.source.dim(), self.target.dim(), f);
        for (c, b) in coeffs.iter().zip(&self.basis) {
            out.add_scaled(*c, b);
        }
        out
    }

    /// Dimension of the span of the given maps inside this space.
    pub fn span_dim<'a>(&self, maps: impl IntoIterator<Item = &'a Matrix>) -> usize {
        let mut e = Echelon::new(*self.offsets.last().unwrap(), self.source.field());
        for m in maps {
            e.insert(&self.vectorize(m));
        }
        e.dim()
    }
}

pub fn hom_basis(m: &RightModule, n: &RightModule) -> Result<Vec<ModuleMap>, ModrepError> {
    Ok(HomSpace::compute(m, n)?.maps())
}

pub fn hom_dim(m: &RightModule, n: &RightModule) -> usize {
    HomSpace::compute(m, n).map_or(0, |h| h.dim())
}
