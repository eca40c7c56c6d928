//! Finite-dimensional based algebras: validation, opposite and corner
//! algebras, Cartan matrices and symmetry.
//!
//! Every validated algebra also carries an arrow/word basis. Arrows are
//! Peirce-homogeneous elements `e_i a e_j` spanning `J / J^2`; words are
//! the vertex idempotents together with products of arrows, chosen so that
//! they form a basis of the algebra. Modules store only arrow actions and
//! recover everything else through these words.

mod kupisch;
mod quiver;

use std::collections::BTreeSet;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, OnceLock, Weak};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::linalg::{Echelon, Elem, Field, FieldSpec, LinalgError, Matrix};

pub use kupisch::from_kupisch;
pub use quiver::{from_quiver, QuiverArrow, QuiverPresentation, RewriteBudget};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("malformed presentation: {0}")]
    Shape(String),
    #[error("not associative on basis triple ({0}, {1}, {2})")]
    NonAssociative(usize, usize, usize),
    #[error("unit is not a two-sided identity on basis element {0}")]
    BadUnit(usize),
    #[error("idempotent condition fails for ({0}, {1})")]
    BadIdempotents(usize, usize),
    #[error("idempotents do not sum to the unit")]
    IdempotentsNotComplete,
    #[error("radical generator {generator} times basis element {basis} ({side}) leaves the radical span")]
    RadicalNotIdeal {
        generator: usize,
        basis: usize,
        side: &'static str,
    },
    #[error("radical is not nilpotent: J^{0} = J^{1} is nonzero")]
    RadicalNotNilpotent(usize, usize),
    #[error("quotient by the radical is not spanned by the idempotents: basis element {0}")]
    QuotientNotSemisimple(usize),
    #[error("invalid quiver presentation: {0}")]
    BadQuiver(String),
    #[error("rewriting did not finish within {0} steps")]
    RewritingDiverged(usize),
    #[error("normal forms longer than {0} exist; the quotient is not finite dimensional")]
    NotFiniteDimensional(usize),
}

/// Sparse product `b_i * b_j` as `(k, c)` pairs.
pub(crate) type SparseVec = Vec<(u32, Elem)>;

/// Raw, unvalidated algebra data in the interchange layout.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraPresentation {
    pub field: FieldSpec,
    pub basis: Vec<String>,
    /// `mult[i][j]` is the coordinate vector of `b_i * b_j`.
    pub mult: Vec<Vec<Vec<Elem>>>,
    pub unit: Vec<Elem>,
    pub idempotents: Vec<Vec<Elem>>,
    pub radical_generators: Vec<Vec<Elem>>,
}

/// A Peirce-homogeneous element `e_source * a * e_target` of `J` not in `J^2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    pub source: usize,
    pub target: usize,
    pub vector: Vec<Elem>,
}

/// A basis element of the word basis: a vertex idempotent (no arrows) or a
/// product of arrows read left to right.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Word {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
    pub vector: Vec<Elem>,
}

impl Word {
    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_vertex(&self) -> bool {
        self.arrows.is_empty()
    }
}

/// Outcome of the symmetric-form search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Symmetry {
    /// A nondegenerate form with `λ(ab) = λ(ba)`.
    Symmetric { form: Vec<Elem> },
    /// No such form was found; `exhaustive` is false when the search was sampled.
    NotSymmetric { exhaustive: bool },
}

impl Symmetry {
    pub fn is_symmetric(&self) -> bool {
        matches!(self, Symmetry::Symmetric { .. })
    }
}

static NEXT_ID: AtomicU64 = AtomicU64::new(1);

/// A validated finite-dimensional elementary algebra.
pub struct BasedAlgebra {
    id: u64,
    field: Field,
    labels: Vec<String>,
    table: Vec<SparseVec>,
    unit: Vec<Elem>,
    idempotents: Vec<Vec<Elem>>,
    radical_generators: Vec<Vec<Elem>>,
    radical_basis: Vec<Vec<Elem>>,
    loewy_length: usize,
    arrows: Vec<Arrow>,
    words: Vec<Word>,
    vertex_words: Vec<std::ops::Range<usize>>,
    word_coords: Vec<Vec<Elem>>,
    word_times_arrow: Vec<Vec<SparseVec>>,
    connected: bool,
    warnings: Vec<String>,
    opposite: OnceLock<Arc<BasedAlgebra>>,
    origin: OnceLock<Weak<BasedAlgebra>>,
}

impl std::fmt::Debug for BasedAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("BasedAlgebra")
            .field("id", &self.id)
            .field("field", &self.field.name())
            .field("dim", &self.dim())
            .field("vertices", &self.vertex_count())
            .field("arrows", &self.arrows.len())
            .finish()
    }
}

pub(crate) struct Parts {
    pub field: Field,
    pub labels: Vec<String>,
    pub table: Vec<SparseVec>,
    pub unit: Vec<Elem>,
    pub idempotents: Vec<Vec<Elem>>,
    pub radical_generators: Vec<Vec<Elem>>,
}

impl BasedAlgebra {
    /// Validates a presentation.
    pub fn validate(p: &AlgebraPresentation) -> Result<Arc<Self>, AlgebraError> {
        let field = p.field.build()?;
        let d = p.basis.len();
        if p.mult.len() != d || p.mult.iter().any(|r| r.len() != d) {
            return Err(AlgebraError::Shape("mult must be a dim x dim table".into()));
        }
        let check_vec = |v: &Vec<Elem>, what: &str| -> Result<(), AlgebraError> {
            if v.len() != d {
                return Err(AlgebraError::Shape(format!("{what} has length {} instead of {d}", v.len())));
            }
            if let Some(&x) = v.iter().find(|&&x| !field.contains(x)) {
                return Err(LinalgError::ForeignEntry(x).into());
            }
            Ok(())
        };
        let mut table = Vec::with_capacity(d * d);
        for row in &p.mult {
            for v in row {
                check_vec(v, "structure constant vector")?;
                table.push(to_sparse(v));
            }
        }
        check_vec(&p.unit, "unit")?;
        for e in &p.idempotents {
            check_vec(e, "idempotent")?;
        }
        for g in &p.radical_generators {
            check_vec(g, "radical generator")?;
        }
        Self::from_parts(
            Parts {
                field,
                labels: p.basis.clone(),
                table,
                unit: p.unit.clone(),
                idempotents: p.idempotents.clone(),
                radical_generators: p.radical_generators.clone(),
            },
            true,
        )
    }

    pub(crate) fn from_parts(parts: Parts, check_associativity: bool) -> Result<Arc<Self>, AlgebraError> {
        let d = parts.labels.len();
        if parts.idempotents.is_empty() && d > 0 {
            return Err(AlgebraError::Shape("at least one idempotent is required".into()));
        }
        let mut alg = BasedAlgebra {
            id: NEXT_ID.fetch_add(1, Ordering::Relaxed),
            field: parts.field,
            labels: parts.labels,
            table: parts.table,
            unit: parts.unit,
            idempotents: parts.idempotents,
            radical_generators: parts.radical_generators,
            radical_basis: Vec::new(),
            loewy_length: 0,
            arrows: Vec::new(),
            words: Vec::new(),
            vertex_words: Vec::new(),
            word_coords: Vec::new(),
            word_times_arrow: Vec::new(),
            connected: true,
            warnings: Vec::new(),
            opposite: OnceLock::new(),
            origin: OnceLock::new(),
        };
        if check_associativity {
            alg.check_associative()?;
        }
        alg.check_unit_and_idempotents()?;
        alg.check_radical()?;
        alg.compute_arrows();
        alg.compute_words();
        alg.compute_connectedness();
        Ok(Arc::new(alg))
    }

    fn check_associative(&self) -> Result<(), AlgebraError> {
        let d = self.dim();
        let f = &self.field;
        let mut left = vec![0; d];
        let mut right = vec![0; d];
        for i in 0..d {
            for j in 0..d {
                let ij = &self.table[i * d + j];
                for k in 0..d {
                    left.iter_mut().for_each(|x| *x = 0);
                    right.iter_mut().for_each(|x| *x = 0);
                    for &(m, c) in ij {
                        for &(t, c2) in &self.table[m as usize * d + k] {
                            left[t as usize] = f.mul_add(left[t as usize], c, c2);
                        }
                    }
                    for &(m, c) in &self.table[j * d + k] {
                        for &(t, c2) in &self.table[i * d + m as usize] {
                            right[t as usize] = f.mul_add(right[t as usize], c, c2);
                        }
                    }
                    if left != right {
                        return Err(AlgebraError::NonAssociative(i, j, k));
                    }
                }
            }
        }
        Ok(())
    }

    fn check_unit_and_idempotents(&self) -> Result<(), AlgebraError> {
        let d = self.dim();
        for i in 0..d {
            let b = unit_vec(d, i);
            if self.mul(&self.unit, &b) != b || self.mul(&b, &self.unit) != b {
                return Err(AlgebraError::BadUnit(i));
            }
        }
        let f = &self.field;
        let mut sum = vec![0; d];
        for (i, e) in self.idempotents.iter().enumerate() {
            if e.iter().all(|&x| x == 0) {
                return Err(AlgebraError::BadIdempotents(i, i));
            }
            for (j, e2) in self.idempotents.iter().enumerate() {
                let p = self.mul(e, e2);
                let expected = if i == j { e.clone() } else { vec![0; d] };
                if p != expected {
                    return Err(AlgebraError::BadIdempotents(i, j));
                }
            }
            for (s, &x) in sum.iter_mut().zip(e) {
                *s = f.add(*s, x);
            }
        }
        if d > 0 && sum != self.unit {
            return Err(AlgebraError::IdempotentsNotComplete);
        }
        Ok(())
    }

    fn check_radical(&mut self) -> Result<(), AlgebraError> {
        let d = self.dim();
        let span = Echelon::from_vectors(d, &self.field, self.radical_generators.iter());
        for (g, v) in self.radical_generators.iter().enumerate() {
            for b in 0..d {
                let bv = unit_vec(d, b);
                if !span.contains(&self.mul(v, &bv)) {
                    return Err(AlgebraError::RadicalNotIdeal { generator: g, basis: b, side: "right" });
                }
                if !span.contains(&self.mul(&bv, v)) {
                    return Err(AlgebraError::RadicalNotIdeal { generator: g, basis: b, side: "left" });
                }
            }
        }
        let j_basis: Vec<Vec<Elem>> = span.basis().to_vec();
        // Powers J^k until zero.
        let mut power = j_basis.clone();
        let mut k = 1;
        while !power.is_empty() {
            let mut next = Echelon::new(d, &self.field);
            for x in &power {
                for y in &j_basis {
                    next.insert(&self.mul(x, y));
                }
            }
            if next.dim() == power.len() {
                return Err(AlgebraError::RadicalNotNilpotent(k, k + 1));
            }
            power = next.basis().to_vec();
            k += 1;
        }
        self.loewy_length = if d == 0 { 0 } else { k };
        let mut full = Echelon::from_vectors(d, &self.field, j_basis.iter());
        for e in &self.idempotents {
            full.insert(e);
        }
        if full.dim() < d {
            let witness = (0..d).find(|&i| !full.contains(&unit_vec(d, i))).unwrap_or(0);
            return Err(AlgebraError::QuotientNotSemisimple(witness));
        }
        self.radical_basis = j_basis;
        Ok(())
    }

    fn compute_arrows(&mut self) {
        let d = self.dim();
        let n = self.vertex_count();
        let mut j2 = Vec::new();
        for x in &self.radical_basis {
            for y in &self.radical_basis {
                j2.push(self.mul(x, y));
            }
        }
        let j2 = Echelon::from_vectors(d, &self.field, j2.iter()).basis().to_vec();
        let mut arrows = Vec::new();
        for s in 0..n {
            for t in 0..n {
                let corner = |v: &Vec<Elem>| self.mul(&self.mul(&self.idempotents[s], v), &self.idempotents[t]);
                let mut ech = Echelon::new(d, &self.field);
                for v in &j2 {
                    ech.insert(&corner(v));
                }
                for v in &self.radical_basis {
                    let c = corner(v);
                    if ech.insert(&c) {
                        arrows.push(Arrow { source: s, target: t, vector: c });
                    }
                }
            }
        }
        self.arrows = arrows;
    }

    /// Spins each vertex idempotent under right multiplication by arrows.
    fn compute_words(&mut self) {
        let d = self.dim();
        let n = self.vertex_count();
        let f = self.field.clone();
        let mut ech = Echelon::tracking(d, &f);
        let mut words: Vec<Word> = Vec::new();
        let mut ranges = Vec::with_capacity(n);
        for v in 0..n {
            let start = words.len();
            ech.insert(&self.idempotents[v]);
            words.push(Word { source: v, target: v, arrows: Vec::new(), vector: self.idempotents[v].clone() });
            let mut q = start;
            while q < words.len() {
                for (ai, a) in self.arrows.iter().enumerate() {
                    if a.source != words[q].target {
                        continue;
                    }
                    let prod = self.mul(&words[q].vector, &a.vector);
                    if ech.insert(&prod) {
                        let mut arrows = words[q].arrows.clone();
                        arrows.push(ai);
                        words.push(Word { source: v, target: a.target, arrows, vector: prod });
                    }
                }
                q += 1;
            }
            ranges.push(start..words.len());
        }
        assert_eq!(words.len(), d, "word basis must span the algebra");
        let word_coords = (0..d).map(|i| ech.express(&unit_vec(d, i)).expect("basis element in span")).collect();
        let word_times_arrow = words
            .iter()
            .map(|w| {
                self.arrows
                    .iter()
                    .map(|a| {
                        if a.source != w.target {
                            return Vec::new();
                        }
                        to_sparse(&ech.express(&self.mul(&w.vector, &a.vector)).expect("product in span"))
                    })
                    .collect()
            })
            .collect();
        self.words = words;
        self.vertex_words = ranges;
        self.word_coords = word_coords;
        self.word_times_arrow = word_times_arrow;
    }

    fn compute_connectedness(&mut self) {
        let n = self.vertex_count();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        for a in &self.arrows {
            let (x, y) = (find(&mut parent, a.source), find(&mut parent, a.target));
            parent[x] = y;
        }
        let roots: BTreeSet<usize> = (0..n).map(|v| find(&mut parent, v)).collect();
        self.connected = roots.len() <= 1;
        if !self.connected {
            self.warnings.push(format!("algebra is not connected ({} blocks)", roots.len()));
        }
        if self.radical_basis.is_empty() {
            self.warnings.push("algebra is semisimple".into());
        }
    }

    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn vertex_count(&self) -> usize {
        self.idempotents.len()
    }

    pub fn unit(&self) -> &[Elem] {
        &self.unit
    }

    pub fn idempotents(&self) -> &[Vec<Elem>] {
        &self.idempotents
    }

    pub fn radical_generators(&self) -> &[Vec<Elem>] {
        &self.radical_generators
    }

    /// Echelon basis of the Jacobson radical.
    pub fn radical_basis(&self) -> &[Vec<Elem>] {
        &self.radical_basis
    }

    pub fn loewy_length(&self) -> usize {
        self.loewy_length
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    /// Indices of the words starting at vertex `v`: a basis of `e_v A`.
    pub fn words_from(&self, v: usize) -> std::ops::Range<usize> {
        self.vertex_words[v].clone()
    }

    /// Coordinates of `w * arrow` in the word basis (empty when the product is not composable).
    pub fn word_times_arrow(&self, w: usize, arrow: usize) -> &[(u32, Elem)] {
        &self.word_times_arrow[w][arrow]
    }

    /// Coordinates of an element (in the original basis) in the word basis.
    pub fn to_word_coords(&self, x: &[Elem]) -> Vec<Elem> {
        let f = &self.field;
        let mut out = vec![0; self.dim()];
        for (i, &c) in x.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (o, &y) in out.iter_mut().zip(&self.word_coords[i]) {
                if y != 0 {
                    *o = f.mul_add(*o, c, y);
                }
            }
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.connected
    }

    pub fn is_semisimple(&self) -> bool {
        self.radical_basis.is_empty()
    }

    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    /// Sparse structure constants of `b_i * b_j`.
    pub fn product_of_basis(&self, i: usize, j: usize) -> &[(u32, Elem)] {
        &self.table[i * self.dim() + j]
    }

    pub fn mul(&self, x: &[Elem], y: &[Elem]) -> Vec<Elem> {
        let d = self.dim();
        let f = &self.field;
        let mut out = vec![0; d];
        for (i, &a) in x.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in y.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                let ab = f.mul(a, b);
                for &(k, c) in &self.table[i * d + j] {
                    out[k as usize] = f.mul_add(out[k as usize], ab, c);
                }
            }
        }
        out
    }

    pub fn presentation(&self) -> AlgebraPresentation {
        let d = self.dim();
        let mult = (0..d)
            .map(|i| (0..d).map(|j| from_sparse(&self.table[i * d + j], d)).collect())
            .collect();
        AlgebraPresentation {
            field: self.field.spec(),
            basis: self.labels.clone(),
            mult,
            unit: self.unit.clone(),
            idempotents: self.idempotents.clone(),
            radical_generators: self.radical_generators.clone(),
        }
    }

    /// The opposite algebra; `a.opposite().opposite()` is `a` itself.
    pub fn opposite(self: &Arc<Self>) -> Arc<Self> {
        if let Some(a) = self.origin.get().and_then(Weak::upgrade) {
            return a;
        }
        self.opposite
            .get_or_init(|| {
                let op = self.build_opposite();
                let _ = op.origin.set(Arc::downgrade(self));
                op
            })
            .clone()
    }

    fn build_opposite(&self) -> Arc<Self> {
        let d = self.dim();
        let mut table = vec![Vec::new(); d * d];
        for i in 0..d {
            for j in 0..d {
                table[j * d + i] = self.table[i * d + j].clone();
            }
        }
        let mut op = BasedAlgebra {
            id: NEXT_ID.fetch_add(1, Ordering::Relaxed),
            field: self.field.clone(),
            labels: self.labels.clone(),
            table,
            unit: self.unit.clone(),
            idempotents: self.idempotents.clone(),
            radical_generators: self.radical_generators.clone(),
            radical_basis: self.radical_basis.clone(),
            loewy_length: self.loewy_length,
            // Same arrow vectors with reversed direction, so duals transpose arrow actions.
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow { source: a.target, target: a.source, vector: a.vector.clone() })
                .collect(),
            words: Vec::new(),
            vertex_words: Vec::new(),
            word_coords: Vec::new(),
            word_times_arrow: Vec::new(),
            connected: self.connected,
            warnings: self.warnings.clone(),
            opposite: OnceLock::new(),
            origin: OnceLock::new(),
        };
        op.compute_words();
        Arc::new(op)
    }

    pub fn same_as(&self, other: &BasedAlgebra) -> bool {
        self.id == other.id
    }

    /// `C[i][j] = dim e_i A e_j`.
    pub fn cartan_matrix(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut c = vec![vec![0; n]; n];
        for w in &self.words {
            c[w.source][w.target] += 1;
        }
        c
    }

    /// Searches for a nondegenerate symmetric linear form.
    pub fn is_symmetric(&self, seed: u64) -> Symmetry {
        let d = self.dim();
        let f = &self.field;
        // λ(b_i b_j - b_j b_i) = 0 for all i < j.
        let mut rows = Vec::new();
        for i in 0..d {
            for j in (i + 1)..d {
                let mut r = from_sparse(&self.table[i * d + j], d);
                for &(k, c) in &self.table[j * d + i] {
                    r[k as usize] = f.sub(r[k as usize], c);
                }
                if r.iter().any(|&x| x != 0) {
                    rows.push(r);
                }
            }
        }
        let central = if rows.is_empty() {
            (0..d).map(|i| unit_vec(d, i)).collect()
        } else {
            Matrix::from_rows(&rows, d, f).expect("entries in field").kernel_basis()
        };
        if central.is_empty() {
            return Symmetry::NotSymmetric { exhaustive: true };
        }
        let gram_ok = |lambda: &[Elem]| -> bool {
            let mut g = Matrix::zeros(d, d, f);
            for i in 0..d {
                for j in 0..d {
                    let v = self.table[i * d + j]
                        .iter()
                        .fold(0, |acc, &(k, c)| f.mul_add(acc, c, lambda[k as usize]));
                    g.set(i, j, v);
                }
            }
            g.is_invertible()
        };
        for v in &central {
            if gram_ok(v) {
                return Symmetry::Symmetric { form: v.clone() };
            }
        }
        let combine = |coeffs: &[Elem]| -> Vec<Elem> {
            let mut out = vec![0; d];
            for (c, v) in coeffs.iter().zip(&central) {
                for (o, &x) in out.iter_mut().zip(v) {
                    *o = f.mul_add(*o, *c, x);
                }
            }
            out
        };
        let q = f.order() as u64;
        let m = central.len() as u32;
        let total = q.checked_pow(m).unwrap_or(u64::MAX);
        if total <= 1 << 20 {
            for idx in 0..total {
                let mut t = idx;
                let coeffs: Vec<Elem> = (0..m)
                    .map(|_| {
                        let c = (t % q) as Elem;
                        t /= q;
                        c
                    })
                    .collect();
                let v = combine(&coeffs);
                if gram_ok(&v) {
                    return Symmetry::Symmetric { form: v };
                }
            }
            return Symmetry::NotSymmetric { exhaustive: true };
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..1000 {
            let coeffs: Vec<Elem> = (0..m).map(|_| rng.gen_range(0..f.order())).collect();
            let v = combine(&coeffs);
            if gram_ok(&v) {
                return Symmetry::Symmetric { form: v };
            }
        }
        Symmetry::NotSymmetric { exhaustive: false }
    }

    /// The corner algebra `eAe` for `e` the sum of the selected idempotents.
    pub fn corner_algebra(self: &Arc<Self>, vertices: &[usize]) -> Result<Corner, AlgebraError> {
        let sel: BTreeSet<usize> = vertices.iter().copied().collect();
        if sel.is_empty() || sel.iter().any(|&v| v >= self.vertex_count()) {
            return Err(AlgebraError::Shape("corner needs a nonempty set of valid vertices".into()));
        }
        let vertices: Vec<usize> = sel.iter().copied().collect();
        let words: Vec<usize> = (0..self.dim())
            .filter(|&w| sel.contains(&self.words[w].source) && sel.contains(&self.words[w].target))
            .collect();
        let mut pos = vec![usize::MAX; self.dim()];
        for (i, &w) in words.iter().enumerate() {
            pos[w] = i;
        }
        let d = words.len();
        let mut table = Vec::with_capacity(d * d);
        for &w1 in &words {
            for &w2 in &words {
                let prod = self.to_word_coords(&self.mul(&self.words[w1].vector, &self.words[w2].vector));
                let mut sp = Vec::new();
                for (k, &c) in prod.iter().enumerate() {
                    if c != 0 {
                        debug_assert!(pos[k] != usize::MAX);
                        sp.push((pos[k] as u32, c));
                    }
                }
                sp.sort_unstable();
                table.push(sp);
            }
        }
        let labels = words.iter().map(|&w| self.word_label(w)).collect();
        let idempotents = vertices.iter().map(|&v| unit_vec(d, pos[self.vertex_words[v].start])).collect();
        let mut unit = vec![0; d];
        for &v in &vertices {
            unit[pos[self.vertex_words[v].start]] = 1;
        }
        let radical_generators = words
            .iter()
            .enumerate()
            .filter(|(_, &w)| !self.words[w].is_vertex())
            .map(|(i, _)| unit_vec(d, i))
            .collect();
        let algebra = BasedAlgebra::from_parts(
            Parts { field: self.field.clone(), labels, table, unit, idempotents, radical_generators },
            false,
        )?;
        Ok(Corner { algebra, parent: self.clone(), vertices, words })
    }

    /// A readable name for a word, built from basis labels of its arrows.
    pub fn word_label(&self, w: usize) -> String {
        let word = &self.words[w];
        if word.is_vertex() {
            return format!("e{}", word.source);
        }
        word.arrows.iter().map(|&a| format!("a{a}")).collect::<Vec<_>>().join("*")
    }
}

/// The corner algebra `eAe` together with the data needed to restrict modules.
#[derive(Debug, Clone)]
pub struct Corner {
    pub algebra: Arc<BasedAlgebra>,
    pub parent: Arc<BasedAlgebra>,
    /// Selected vertices of the parent, in increasing order.
    pub vertices: Vec<usize>,
    /// Parent word indices forming the corner basis.
    pub words: Vec<usize>,
}

pub(crate) fn unit_vec(d: usize, i: usize) -> Vec<Elem> {
    let mut v = vec![0; d];
    v[i] = 1;
    v
}

pub(crate) fn to_sparse(v: &[Elem]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, &x)| x != 0)
        .map(|(i, &x)| (i as u32, x))
        .collect()
}

pub(crate) fn from_sparse(v: &[(u32, Elem)], d: usize) -> Vec<Elem> {
    let mut out = vec![0; d];
    for &(k, c) in v {
        out[k as usize] = c;
    }
    out
}
