use std::fmt;
use std::sync::Arc;

use crate::algebra::BasedAlgebra;
use crate::linalg::{Echelon, Elem, Matrix};
use crate::modrep::ModrepError;

/// A finite-dimensional right module.
///
/// The basis is adapted to the vertex idempotents: every basis vector lies in
/// some `M e_v`. Only arrow actions are stored, as blocks `M e_s -> M e_t`;
/// the action of any algebra element is recovered through the word basis.
/// Vectors are row vectors and `m * a` is `m` times the action matrix.
#[derive(Clone)]
pub struct RightModule {
    algebra: Arc<BasedAlgebra>,
    labels: Arc<Vec<usize>>,
    blocks: Arc<Vec<Vec<usize>>>,
    arrows: Arc<Vec<Matrix>>,
}

impl fmt::Debug for RightModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RightModule(dim {}, dimvec {:?})", self.dim(), self.dim_vector())
    }
}

/// A homomorphism of right modules, as a `dim(source) x dim(target)` matrix
/// acting on row vectors.
#[derive(Clone, Debug)]
pub struct ModuleMap {
    pub source: RightModule,
    pub target: RightModule,
    pub matrix: Matrix,
}

/// A subspace that remembers the vectors accepted into it, so members can be
/// written in those coordinates.
#[derive(Clone, Debug)]
pub(crate) struct Subspace {
    pub vecs: Vec<Vec<Elem>>,
    ech: Echelon,
}

impl Subspace {
    pub fn new(len: usize, field: &crate::linalg::Field) -> Self {
        Subspace { vecs: Vec::new(), ech: Echelon::tracking(len, field) }
    }

    pub fn insert(&mut self, v: &[Elem]) -> bool {
        if self.ech.insert(v) {
            self.vecs.push(v.to_vec());
            true
        } else {
            false
        }
    }

    pub fn express(&self, v: &[Elem]) -> Option<Vec<Elem>> {
        self.ech.express(v)
    }

    pub fn dim(&self) -> usize {
        self.vecs.len()
    }
}

impl RightModule {
    /// Builds a module from vertex labels and arrow blocks, checking shapes.
    pub(crate) fn from_parts(algebra: &Arc<BasedAlgebra>, labels: Vec<usize>, arrows: Vec<Matrix>) -> Self {
        let n = algebra.vertex_count();
        let mut blocks = vec![Vec::new(); n];
        for (i, &v) in labels.iter().enumerate() {
            blocks[v].push(i);
        }
        assert_eq!(arrows.len(), algebra.arrows().len(), "one block per arrow");
        for (a, m) in algebra.arrows().iter().zip(&arrows) {
            assert_eq!((m.rows(), m.cols()), (blocks[a.source].len(), blocks[a.target].len()), "arrow block shape");
        }
        RightModule {
            algebra: algebra.clone(),
            labels: Arc::new(labels),
            blocks: Arc::new(blocks),
            arrows: Arc::new(arrows),
        }
    }

    pub fn zero(algebra: &Arc<BasedAlgebra>) -> Self {
        let f = algebra.field();
        let arrows = algebra.arrows().iter().map(|_| Matrix::zeros(0, 0, f)).collect();
        Self::from_parts(algebra, Vec::new(), arrows)
    }

    /// The simple module at vertex `v`.
    pub fn simple(algebra: &Arc<BasedAlgebra>, v: usize) -> Self {
        let f = algebra.field();
        let arrows = algebra
            .arrows()
            .iter()
            .map(|a| Matrix::zeros((a.source == v) as usize, (a.target == v) as usize, f))
            .collect();
        Self::from_parts(algebra, vec![v], arrows)
    }

    pub fn algebra(&self) -> &Arc<BasedAlgebra> {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn is_zero(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    /// Global positions of the basis vectors lying in `M e_v`.
    pub fn block(&self, v: usize) -> &[usize] {
        &self.blocks[v]
    }

    pub fn dim_vector(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.len()).collect()
    }

    pub fn arrow_block(&self, a: usize) -> &Matrix {
        &self.arrows[a]
    }

    pub fn arrow_blocks(&self) -> &[Matrix] {
        &self.arrows
    }

    pub fn field(&self) -> &crate::linalg::Field {
        self.algebra.field()
    }

    pub fn same_algebra(&self, other: &RightModule) -> bool {
        self.algebra.same_as(&other.algebra)
    }

    pub(crate) fn check_same_algebra(&self, other: &RightModule) -> Result<(), ModrepError> {
        if self.same_algebra(other) {
            Ok(())
        } else {
            Err(ModrepError::AlgebraMismatch)
        }
    }

    pub fn restrict(&self, v: &[Elem], vertex: usize) -> Vec<Elem> {
        self.blocks[vertex].iter().map(|&i| v[i]).collect()
    }

    pub fn embed(&self, local: &[Elem], vertex: usize) -> Vec<Elem> {
        let mut out = vec![0; self.dim()];
        for (&i, &x) in self.blocks[vertex].iter().zip(local) {
            out[i] = x;
        }
        out
    }

    pub fn act_arrow(&self, v: &[Elem], a: usize) -> Vec<Elem> {
        let arrow = &self.algebra.arrows()[a];
        let local = self.restrict(v, arrow.source);
        self.embed(&self.arrows[a].vec_mul(&local), arrow.target)
    }

    pub fn act_word(&self, v: &[Elem], w: usize) -> Vec<Elem> {
        let word = &self.algebra.words()[w];
        let mut local = self.restrict(v, word.source);
        for &a in &word.arrows {
            local = self.arrows[a].vec_mul(&local);
        }
        self.embed(&local, word.target)
    }

    /// Block `M e_source -> M e_target` of the action of word `w`.
    pub fn word_block(&self, w: usize) -> Matrix {
        let word = &self.algebra.words()[w];
        let mut m = Matrix::identity(self.blocks[word.source].len(), self.field());
        for &a in &word.arrows {
            m = m.mul(&self.arrows[a]);
        }
        m
    }

    /// Full action matrix of an algebra element given in the original basis.
    pub fn action_matrix(&self, x: &[Elem]) -> Matrix {
        let f = self.field().clone();
        let wc = self.algebra.to_word_coords(x);
        let mut out = Matrix::zeros(self.dim(), self.dim(), &f);
        for (w, &c) in wc.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let word = &self.algebra.words()[w];
            let b = self.word_block(w);
            for (r, &gr) in self.blocks[word.source].iter().enumerate() {
                for (col, &gc) in self.blocks[word.target].iter().enumerate() {
                    let y = b.get(r, col);
                    if y != 0 {
                        let cur = out.get(gr, gc);
                        out.set(gr, gc, f.mul_add(cur, c, y));
                    }
                }
            }
        }
        out
    }

    /// Action matrices of every basis element of the algebra.
    pub fn basis_action(&self) -> Vec<Matrix> {
        let d = self.algebra.dim();
        (0..d).map(|k| self.action_matrix(&crate::algebra::unit_vec(d, k))).collect()
    }

    /// Checks that the stored action respects all structure constants.
    pub fn validate(&self) -> Result<(), ModrepError> {
        check_action(&self.algebra, &self.basis_action())
    }

    /// Builds a module from one action matrix per algebra basis element.
    ///
    /// Returns the module together with the change of basis: row `i` of the
    /// returned matrix is the `i`-th new basis vector in the given coordinates.
    pub fn from_basis_action(algebra: &Arc<BasedAlgebra>, actions: &[Matrix]) -> Result<(Self, Matrix), ModrepError> {
        check_action(algebra, actions)?;
        Ok(Self::from_basis_action_unchecked(algebra, actions))
    }

    pub(crate) fn from_basis_action_unchecked(algebra: &Arc<BasedAlgebra>, actions: &[Matrix]) -> (Self, Matrix) {
        let f = algebra.field().clone();
        let dim = actions.first().map_or(0, |m| m.rows());
        let combine = |x: &[Elem]| -> Matrix {
            let mut m = Matrix::zeros(dim, dim, &f);
            for (c, a) in x.iter().zip(actions) {
                m.add_scaled(*c, a);
            }
            m
        };
        let mut labels = Vec::with_capacity(dim);
        let mut rows = Vec::with_capacity(dim);
        for (v, e) in algebra.idempotents().iter().enumerate() {
            let (r, piv) = combine(e).rref();
            for i in 0..piv.len() {
                rows.push(r.row(i).to_vec());
                labels.push(v);
            }
        }
        let p = Matrix::from_rows(&rows, dim, &f).expect("entries in field");
        let pinv = p.inverse().expect("idempotent images span the module");
        let mut blocks = vec![Vec::new(); algebra.vertex_count()];
        for (i, &v) in labels.iter().enumerate() {
            blocks[v].push(i);
        }
        let arrows = algebra
            .arrows()
            .iter()
            .map(|a| {
                let x = combine(&a.vector);
                let moved = p.select_rows(&blocks[a.source]).mul(&x).mul(&pinv);
                moved.select_cols(&blocks[a.target])
            })
            .collect();
        (Self::from_parts(algebra, labels, arrows), p)
    }

    /// The dual module `Hom_K(M, K)` over the opposite algebra.
    pub fn dual(&self) -> RightModule {
        let op = self.algebra.opposite();
        let arrows = self.arrows.iter().map(|m| m.transpose()).collect();
        RightModule::from_parts(&op, self.labels.to_vec(), arrows)
    }

    /// Direct sum with the canonical ordering: summands in order.
    pub fn direct_sum(modules: &[RightModule], algebra: &Arc<BasedAlgebra>) -> RightModule {
        let f = algebra.field();
        let labels = modules.iter().flat_map(|m| m.labels.iter().copied()).collect();
        let arrows = (0..algebra.arrows().len())
            .map(|a| {
                let bl: Vec<&Matrix> = modules.iter().map(|m| &m.arrows[a]).collect();
                Matrix::block_diag(&bl, f)
            })
            .collect();
        RightModule::from_parts(algebra, labels, arrows)
    }

    /// Offsets of each summand in a direct sum built by [`RightModule::direct_sum`].
    pub fn sum_offsets(modules: &[RightModule]) -> Vec<usize> {
        let mut off = Vec::with_capacity(modules.len() + 1);
        let mut s = 0;
        off.push(0);
        for m in modules {
            s += m.dim();
            off.push(s);
        }
        off
    }

    /// The submodule generated by the given vectors, with its inclusion.
    pub fn submodule(&self, gens: &[Vec<Elem>]) -> ModuleMap {
        let n = self.algebra.vertex_count();
        let f = self.field().clone();
        let mut spaces: Vec<Subspace> = (0..n).map(|v| Subspace::new(self.blocks[v].len(), &f)).collect();
        let mut queue: Vec<(usize, Vec<Elem>)> = Vec::new();
        for g in gens {
            for v in 0..n {
                let local = self.restrict(g, v);
                if spaces[v].insert(&local) {
                    queue.push((v, local));
                }
            }
        }
        while let Some((v, local)) = queue.pop() {
            for (ai, a) in self.algebra.arrows().iter().enumerate() {
                if a.source != v {
                    continue;
                }
                let img = self.arrows[ai].vec_mul(&local);
                if spaces[a.target].insert(&img) {
                    queue.push((a.target, img));
                }
            }
        }
        self.submodule_from_spaces(&spaces)
    }

    /// Submodule spanned by per-vertex subspaces that are already closed.
    pub(crate) fn submodule_from_spaces(&self, spaces: &[Subspace]) -> ModuleMap {
        let f = self.field().clone();
        let mut labels = Vec::new();
        let mut rows = Vec::new();
        for (v, s) in spaces.iter().enumerate() {
            for u in &s.vecs {
                labels.push(v);
                rows.push(self.embed(u, v));
            }
        }
        let arrows = self
            .algebra
            .arrows()
            .iter()
            .enumerate()
            .map(|(ai, a)| {
                let src = &spaces[a.source];
                let tgt = &spaces[a.target];
                let data: Vec<Vec<Elem>> = src
                    .vecs
                    .iter()
                    .map(|u| tgt.express(&self.arrows[ai].vec_mul(u)).expect("subspaces are closed"))
                    .collect();
                Matrix::from_rows(&data, tgt.dim(), &f).expect("entries in field")
            })
            .collect();
        let sub = RightModule::from_parts(&self.algebra, labels, arrows);
        let matrix = Matrix::from_rows(&rows, self.dim(), &f).expect("entries in field");
        ModuleMap { source: sub, target: self.clone(), matrix }
    }

    /// The quotient by the submodule spanned by per-vertex subspaces, with the projection.
    pub(crate) fn quotient_by_spaces(&self, spaces: &[Subspace]) -> ModuleMap {
        let f = self.field().clone();
        let n = self.algebra.vertex_count();
        let mut comp: Vec<Vec<usize>> = Vec::with_capacity(n);
        let mut proj_blocks: Vec<Matrix> = Vec::with_capacity(n);
        for v in 0..n {
            let m = self.blocks[v].len();
            let mut ech = Echelon::tracking(m, &f);
            for u in &spaces[v].vecs {
                ech.insert(u);
            }
            let k = ech.dim();
            let mut c = Vec::new();
            for j in 0..m {
                if ech.insert(&crate::algebra::unit_vec(m, j)) {
                    c.push(j);
                }
            }
            let mut pb = Matrix::zeros(m, c.len(), &f);
            for j in 0..m {
                let coords = ech.express(&crate::algebra::unit_vec(m, j)).expect("full span");
                for (t, &x) in coords[k..].iter().enumerate() {
                    pb.set(j, t, x);
                }
            }
            comp.push(c);
            proj_blocks.push(pb);
        }
        let mut labels = Vec::new();
        for (v, c) in comp.iter().enumerate() {
            labels.extend(std::iter::repeat_n(v, c.len()));
        }
        let arrows = self
            .algebra
            .arrows()
            .iter()
            .enumerate()
            .map(|(ai, a)| self.arrows[ai].select_rows(&comp[a.source]).mul(&proj_blocks[a.target]))
            .collect();
        let q = RightModule::from_parts(&self.algebra, labels, arrows);
        let mut matrix = Matrix::zeros(self.dim(), q.dim(), &f);
        for v in 0..n {
            for (j, &gr) in self.blocks[v].iter().enumerate() {
                for (t, &gc) in q.blocks[v].iter().enumerate() {
                    matrix.set(gr, gc, proj_blocks[v].get(j, t));
                }
            }
        }
        ModuleMap { source: self.clone(), target: q, matrix }
    }

    /// Quotient by the submodule generated by `gens`.
    pub fn quotient(&self, gens: &[Vec<Elem>]) -> ModuleMap {
        let inc = self.submodule(gens);
        self.quotient_by_spaces(&inc.spaces_in_target())
    }

    /// Restriction to a corner algebra: `M` becomes `Me`.
    pub fn restrict_to_corner(&self, corner: &crate::algebra::Corner) -> RightModule {
        let pos: Vec<Option<usize>> = (0..self.algebra.vertex_count())
            .map(|v| corner.vertices.iter().position(|&x| x == v))
            .collect();
        let keep: Vec<usize> = (0..self.dim()).filter(|&i| pos[self.labels[i]].is_some()).collect();
        let actions: Vec<Matrix> = corner
            .words
            .iter()
            .map(|&w| {
                let wv = &self.algebra.words()[w].vector;
                self.action_matrix(wv).select_rows(&keep).select_cols(&keep)
            })
            .collect();
        if keep.is_empty() {
            return RightModule::zero(&corner.algebra);
        }
        RightModule::from_basis_action_unchecked(&corner.algebra, &actions).0
    }
}

pub(crate) fn check_action(algebra: &Arc<BasedAlgebra>, actions: &[Matrix]) -> Result<(), ModrepError> {
    let d = algebra.dim();
    let f = algebra.field();
    if actions.len() != d {
        return Err(ModrepError::Shape(format!("expected {d} action matrices, got {}", actions.len())));
    }
    let dim = actions.first().map_or(0, |m| m.rows());
    for m in actions {
        if m.rows() != dim || m.cols() != dim {
            return Err(ModrepError::Shape("action matrices must be square of equal size".into()));
        }
        if m.field() != f {
            return Err(ModrepError::Shape("action matrix over a different field".into()));
        }
    }
    let mut unit = Matrix::zeros(dim, dim, f);
    for (c, a) in algebra.unit().iter().zip(actions) {
        unit.add_scaled(*c, a);
    }
    if !unit.is_identity() {
        return Err(ModrepError::NotAModule("unit does not act as the identity".into()));
    }
    for i in 0..d {
        for j in 0..d {
            let lhs = actions[i].mul(&actions[j]);
            let mut rhs = Matrix::zeros(dim, dim, f);
            for &(k, c) in algebra.product_of_basis(i, j) {
                rhs.add_scaled(c, &actions[k as usize]);
            }
            if lhs != rhs {
                return Err(ModrepError::NotAModule(format!("relation fails for basis pair ({i}, {j})")));
            }
        }
    }
    Ok(())
}

impl ModuleMap {
    pub fn identity(m: &RightModule) -> Self {
        ModuleMap { source: m.clone(), target: m.clone(), matrix: Matrix::identity(m.dim(), m.field()) }
    }

    pub fn zero(source: &RightModule, target: &RightModule) -> Self {
        ModuleMap {
            source: source.clone(),
            target: target.clone(),
            matrix: Matrix::zeros(source.dim(), target.dim(), source.field()),
        }
    }

    /// Wraps a matrix after checking that it intertwines the actions.
    pub fn new(source: &RightModule, target: &RightModule, matrix: Matrix) -> Result<Self, ModrepError> {
        source.check_same_algebra(target)?;
        if matrix.rows() != source.dim() || matrix.cols() != target.dim() {
            return Err(ModrepError::Shape("map matrix has the wrong shape".into()));
        }
        let m = ModuleMap { source: source.clone(), target: target.clone(), matrix };
        if !m.is_homomorphism() {
            return Err(ModrepError::NotAHomomorphism);
        }
        Ok(m)
    }

    /// Block `M e_v -> N e_v`.
    pub fn block(&self, v: usize) -> Matrix {
        self.matrix.select_rows(self.source.block(v)).select_cols(self.target.block(v))
    }

    pub fn is_homomorphism(&self) -> bool {
        let n = self.source.algebra().vertex_count();
        // Off-diagonal vertex blocks must vanish.
        for i in 0..self.source.dim() {
            for j in 0..self.target.dim() {
                if self.source.labels()[i] != self.target.labels()[j] && self.matrix.get(i, j) != 0 {
                    return false;
                }
            }
        }
        let blocks: Vec<Matrix> = (0..n).map(|v| self.block(v)).collect();
        self.source.algebra().arrows().iter().enumerate().all(|(ai, a)| {
            self.source.arrow_block(ai).mul(&blocks[a.target]) == blocks[a.source].mul(self.target.arrow_block(ai))
        })
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &ModuleMap) -> ModuleMap {
        ModuleMap { source: self.source.clone(), target: next.target.clone(), matrix: self.matrix.mul(&next.matrix) }
    }

    pub fn apply(&self, v: &[Elem]) -> Vec<Elem> {
        self.matrix.vec_mul(v)
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    pub fn is_iso(&self) -> bool {
        self.source.dim() == self.target.dim() && self.matrix.is_invertible()
    }

    pub fn is_injective(&self) -> bool {
        self.matrix.rank() == self.source.dim()
    }

    pub fn is_surjective(&self) -> bool {
        self.matrix.rank() == self.target.dim()
    }

    pub fn inverse(&self) -> Option<ModuleMap> {
        let inv = self.matrix.inverse()?;
        Some(ModuleMap { source: self.target.clone(), target: self.source.clone(), matrix: inv })
    }

    pub fn dual(&self) -> ModuleMap {
        ModuleMap { source: self.target.dual(), target: self.source.dual(), matrix: self.matrix.transpose() }
    }

    pub fn scale(&self, c: Elem) -> ModuleMap {
        ModuleMap { matrix: self.matrix.scale(c), ..self.clone() }
    }

    pub fn add(&self, other: &ModuleMap) -> ModuleMap {
        ModuleMap { matrix: self.matrix.add(&other.matrix), ..self.clone() }
    }

    /// The kernel with its inclusion into the source.
    pub fn kernel(&self) -> ModuleMap {
        let f = self.source.field().clone();
        let spaces: Vec<Subspace> = (0..self.source.algebra().vertex_count())
            .map(|v| {
                let b = self.block(v);
                let mut s = Subspace::new(b.rows(), &f);
                for k in b.left_kernel_basis() {
                    s.insert(&k);
                }
                s
            })
            .collect();
        self.source.submodule_from_spaces(&spaces)
    }

    fn image_spaces(&self) -> Vec<Subspace> {
        let f = self.source.field().clone();
        (0..self.source.algebra().vertex_count())
            .map(|v| {
                let b = self.block(v);
                let mut s = Subspace::new(b.cols(), &f);
                for r in 0..b.rows() {
                    s.insert(b.row(r));
                }
                s
            })
            .collect()
    }

    /// The image with its inclusion into the target.
    pub fn image(&self) -> ModuleMap {
        self.target.submodule_from_spaces(&self.image_spaces())
    }

    /// The cokernel with the projection from the target.
    pub fn cokernel(&self) -> ModuleMap {
        self.target.quotient_by_spaces(&self.image_spaces())
    }

    /// Per-vertex subspaces of the target spanned by the image (an inclusion's image).
    pub(crate) fn spaces_in_target(&self) -> Vec<Subspace> {
        self.image_spaces()
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }
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
    fn basis_action_roundtrip() {
        let a = alg(vec![4, 5, 5], 3);
        let p = crate::modrep::projective(&a, 1);
        p.validate().unwrap();
        let acts = p.basis_action();
        let (q, _) = RightModule::from_basis_action(&a, &acts).unwrap();
        assert_eq!(q.dim_vector(), p.dim_vector());
        q.validate().unwrap();
        assert!(crate::modrep::iso(&p, &q).is_iso());
    }

    #[test]
    fn rejects_non_modules() {
        let a = alg(vec![2, 2], 2);
        let f = a.field().clone();
        let acts: Vec<Matrix> = (0..a.dim()).map(|_| Matrix::identity(1, &f)).collect();
        assert!(matches!(RightModule::from_basis_action(&a, &acts), Err(ModrepError::NotAModule(_))));
    }

    #[test]
    fn dual_is_involutive() {
        let a = alg(vec![4, 5, 5], 2);
        let p = crate::modrep::projective(&a, 0);
        let dd = p.dual().dual();
        assert!(Arc::ptr_eq(dd.algebra(), p.algebra()));
        assert_eq!(dd.labels(), p.labels());
        for i in 0..a.arrows().len() {
            assert_eq!(dd.arrow_block(i), p.arrow_block(i));
        }
        p.dual().validate().unwrap();
    }

    #[test]
    fn kernel_image_cokernel_dimensions() {
        let a = alg(vec![3, 3], 5);
        let p = crate::modrep::projective(&a, 0);
        let rad = crate::modrep::radical(&p);
        assert_eq!(rad.source.dim(), 2);
        let q = rad.cokernel();
        assert_eq!(q.target.dim(), 1);
        assert_eq!(q.kernel().source.dim(), 2);
        assert_eq!(q.image().source.dim(), 1);
        assert!(rad.is_homomorphism() && q.is_homomorphism());
    }
}
