//! Bound quiver algebras via noncommutative Buchberger completion.
//!
//! Paths are read left to right (`ab` is `a` followed by `b`), matching right
//! modules. Terms are ordered by length, then lexicographically on arrow labels.

use std::cmp::Ordering;
use std::collections::{BTreeMap, VecDeque};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{unit_vec, AlgebraError, BasedAlgebra, Parts};
use crate::linalg::{Elem, Field, FieldSpec};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverArrow {
    pub source: usize,
    pub target: usize,
    pub label: String,
}

/// A quiver with relations; each relation is a list of `(coefficient, path)`
/// terms where a path is a sequence of arrow labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverPresentation {
    pub field: FieldSpec,
    pub vertices: Vec<String>,
    pub arrows: Vec<QuiverArrow>,
    pub relations: Vec<Vec<(Elem, Vec<String>)>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RewriteBudget {
    pub max_steps: usize,
    pub max_length: usize,
}

impl Default for RewriteBudget {
    fn default() -> Self {
        RewriteBudget { max_steps: 10_000, max_length: 64 }
    }
}

/// A path as arrow ranks (position in label order).
#[derive(Debug, Clone, PartialEq, Eq)]
struct Path(Vec<u16>);

impl Ord for Path {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

type Poly = BTreeMap<Path, Elem>;

struct Rule {
    lead: Vec<u16>,
    tail: Poly,
}

struct Rewriter<'a> {
    field: &'a Field,
    rules: Vec<Rule>,
    steps: usize,
    budget: RewriteBudget,
}

fn add_term(p: &mut Poly, path: Path, c: Elem, f: &Field) {
    use std::collections::btree_map::Entry;
    if c == 0 {
        return;
    }
    match p.entry(path) {
        Entry::Vacant(e) => {
            e.insert(c);
        }
        Entry::Occupied(mut e) => {
            let v = f.add(*e.get(), c);
            if v == 0 {
                e.remove();
            } else {
                *e.get_mut() = v;
            }
        }
    }
}

fn find_sub(hay: &[u16], needle: &[u16]) -> Option<usize> {
    if needle.len() > hay.len() {
        return None;
    }
    (0..=hay.len() - needle.len()).find(|&i| &hay[i..i + needle.len()] == needle)
}

fn wrap(prefix: &[u16], mid: &[u16], suffix: &[u16]) -> Path {
    let mut v = Vec::with_capacity(prefix.len() + mid.len() + suffix.len());
    v.extend_from_slice(prefix);
    v.extend_from_slice(mid);
    v.extend_from_slice(suffix);
    Path(v)
}

impl Rewriter<'_> {
    fn tick(&mut self) -> Result<(), AlgebraError> {
        self.steps += 1;
        if self.steps > self.budget.max_steps {
            return Err(AlgebraError::RewritingDiverged(self.budget.max_steps));
        }
        Ok(())
    }

    fn reduce(&mut self, mut work: Poly) -> Result<Poly, AlgebraError> {
        let f = self.field;
        let mut out = Poly::new();
        while let Some((t, c)) = work.pop_last() {
            let hit = self
                .rules
                .iter()
                .enumerate()
                .find_map(|(ri, r)| find_sub(&t.0, &r.lead).map(|pos| (ri, pos)));
            match hit {
                None => add_term(&mut out, t, c, f),
                Some((ri, pos)) => {
                    self.tick()?;
                    let r = &self.rules[ri];
                    let (pre, post) = (&t.0[..pos], &t.0[pos + r.lead.len()..]);
                    for (m, &tc) in &r.tail {
                        add_term(&mut work, wrap(pre, &m.0, post), f.mul(c, tc), f);
                    }
                }
            }
        }
        Ok(out)
    }

    fn rule_poly(&self, r: &Rule) -> Poly {
        let mut p: Poly = r.tail.iter().map(|(k, &v)| (k.clone(), self.field.neg(v))).collect();
        p.insert(Path(r.lead.clone()), 1);
        p
    }

    /// `-t1 * q + p * t2` for the overlap `l1 = p o`, `l2 = o q`.
    fn overlap_polys(&self, a: &Rule, b: &Rule) -> Vec<Poly> {
        let f = self.field;
        let mut out = Vec::new();
        let (l1, l2) = (&a.lead, &b.lead);
        for k in 1..l1.len().min(l2.len()) {
            if l1[l1.len() - k..] != l2[..k] {
                continue;
            }
            let p = &l1[..l1.len() - k];
            let q = &l2[k..];
            let mut s = Poly::new();
            for (m, &c) in &a.tail {
                add_term(&mut s, wrap(&[], &m.0, q), f.neg(c), f);
            }
            for (m, &c) in &b.tail {
                add_term(&mut s, wrap(p, &m.0, &[]), c, f);
            }
            out.push(s);
        }
        out
    }

    fn complete(&mut self, relations: Vec<Poly>) -> Result<(), AlgebraError> {
        let f = self.field;
        let mut queue: VecDeque<Poly> = relations.into();
        while let Some(p) = queue.pop_front() {
            let r = self.reduce(p)?;
            let Some((lead, &lc)) = r.last_key_value() else {
                continue;
            };
            let lead = lead.0.clone();
            let inv = f.inv(lc);
            let tail: Poly = r
                .iter()
                .filter(|(k, _)| k.0 != lead)
                .map(|(k, &v)| (k.clone(), f.neg(f.mul(v, inv))))
                .collect();
            let rule = Rule { lead, tail };
            // Rules whose leading path contains the new one are re-derived.
            let mut kept = Vec::with_capacity(self.rules.len());
            for old in std::mem::take(&mut self.rules) {
                if find_sub(&old.lead, &rule.lead).is_some() {
                    queue.push_back(self.rule_poly(&old));
                } else {
                    kept.push(old);
                }
            }
            self.rules = kept;
            for other in &self.rules {
                queue.extend(self.overlap_polys(&rule, other));
                queue.extend(self.overlap_polys(other, &rule));
            }
            queue.extend(self.overlap_polys(&rule, &rule));
            self.rules.push(rule);
            self.tick()?;
        }
        Ok(())
    }
}

/// Builds the bound quiver algebra `KQ/I` with the normal-form path basis.
pub fn from_quiver(q: &QuiverPresentation, budget: RewriteBudget) -> Result<Arc<BasedAlgebra>, AlgebraError> {
    let field = q.field.build()?;
    let f = &field;
    let nv = q.vertices.len();
    if nv == 0 {
        return Err(AlgebraError::BadQuiver("no vertices".into()));
    }
    for a in &q.arrows {
        if a.source >= nv || a.target >= nv {
            return Err(AlgebraError::BadQuiver(format!("arrow {} has an unknown endpoint", a.label)));
        }
    }
    // Rank arrows by label.
    let mut order: Vec<usize> = (0..q.arrows.len()).collect();
    order.sort_by(|&x, &y| q.arrows[x].label.cmp(&q.arrows[y].label));
    for w in order.windows(2) {
        if q.arrows[w[0]].label == q.arrows[w[1]].label {
            return Err(AlgebraError::BadQuiver(format!("duplicate arrow label {}", q.arrows[w[0]].label)));
        }
    }
    let arrow_of_rank: Vec<&QuiverArrow> = order.iter().map(|&i| &q.arrows[i]).collect();
    let rank_of = |label: &str| -> Option<u16> {
        arrow_of_rank.iter().position(|a| a.label == label).map(|r| r as u16)
    };
    let ends = |p: &[u16]| -> Option<(usize, usize)> {
        let first = arrow_of_rank[*p.first()? as usize];
        let mut t = first.target;
        for &r in &p[1..] {
            let a = arrow_of_rank[r as usize];
            if a.source != t {
                return None;
            }
            t = a.target;
        }
        Some((first.source, t))
    };

    let mut relations = Vec::new();
    for (ri, rel) in q.relations.iter().enumerate() {
        let mut poly = Poly::new();
        let mut endpoints = None;
        for (c, labels) in rel {
            if !f.contains(*c) {
                return Err(AlgebraError::BadQuiver(format!("relation {ri}: coefficient {c} not in field")));
            }
            let path: Vec<u16> = labels
                .iter()
                .map(|l| rank_of(l).ok_or_else(|| AlgebraError::BadQuiver(format!("unknown arrow {l}"))))
                .collect::<Result<_, _>>()?;
            if path.len() < 2 {
                return Err(AlgebraError::BadQuiver(format!("relation {ri} has a term of length < 2")));
            }
            let e = ends(&path)
                .ok_or_else(|| AlgebraError::BadQuiver(format!("relation {ri} has a non-composable path")))?;
            if endpoints.is_some_and(|x| x != e) {
                return Err(AlgebraError::BadQuiver(format!("relation {ri} mixes non-parallel paths")));
            }
            endpoints = Some(e);
            add_term(&mut poly, Path(path), *c, f);
        }
        relations.push(poly);
    }

    let mut rw = Rewriter { field: f, rules: Vec::new(), steps: 0, budget };
    rw.complete(relations)?;

    // Enumerate normal paths breadth-first; vertices first.
    let mut paths: Vec<Vec<u16>> = Vec::new();
    let mut frontier: Vec<Vec<u16>> = (0..arrow_of_rank.len() as u16).map(|r| vec![r]).collect();
    frontier.retain(|p| rw.rules.iter().all(|r| find_sub(p, &r.lead).is_none()));
    while !frontier.is_empty() {
        if frontier[0].len() > budget.max_length {
            return Err(AlgebraError::NotFiniteDimensional(budget.max_length));
        }
        let mut next = Vec::new();
        for p in &frontier {
            let t = arrow_of_rank[*p.last().unwrap() as usize].target;
            for (r, a) in arrow_of_rank.iter().enumerate() {
                if a.source != t {
                    continue;
                }
                let mut np = p.clone();
                np.push(r as u16);
                if rw.rules.iter().all(|rule| !np.ends_with(&rule.lead)) {
                    next.push(np);
                }
            }
        }
        paths.append(&mut frontier);
        frontier = next;
    }

    let d = nv + paths.len();
    let index: BTreeMap<Vec<u16>, usize> = paths.iter().enumerate().map(|(i, p)| (p.clone(), nv + i)).collect();
    let src_tgt: Vec<(usize, usize)> = (0..nv).map(|v| (v, v)).chain(paths.iter().map(|p| ends(p).unwrap())).collect();
    let mut labels: Vec<String> = q.vertices.iter().map(|v| format!("e_{v}")).collect();
    labels.extend(paths.iter().map(|p| {
        p.iter().map(|&r| arrow_of_rank[r as usize].label.as_str()).collect::<Vec<_>>().join("*")
    }));

    let mut table = vec![Vec::new(); d * d];
    for i in 0..d {
        for j in 0..d {
            if src_tgt[i].1 != src_tgt[j].0 {
                continue;
            }
            table[i * d + j] = match (i < nv, j < nv) {
                (true, _) => vec![(j as u32, 1)],
                (false, true) => vec![(i as u32, 1)],
                (false, false) => {
                    let mut p = paths[i - nv].clone();
                    p.extend_from_slice(&paths[j - nv]);
                    let reduced = rw.reduce(Poly::from([(Path(p), 1)]))?;
                    let mut sp: Vec<(u32, Elem)> = reduced
                        .iter()
                        .map(|(m, &c)| (index[&m.0] as u32, c))
                        .collect();
                    sp.sort_unstable();
                    sp
                }
            };
        }
    }
    let mut unit = vec![0; d];
    unit[..nv].iter_mut().for_each(|x| *x = 1);
    BasedAlgebra::from_parts(
        Parts {
            field,
            labels,
            table,
            unit,
            idempotents: (0..nv).map(|v| unit_vec(d, v)).collect(),
            radical_generators: (nv..d).map(|i| unit_vec(d, i)).collect(),
        },
        true,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arrow(s: usize, t: usize, l: &str) -> QuiverArrow {
        QuiverArrow { source: s, target: t, label: l.into() }
    }

    fn path(ls: &[&str]) -> Vec<String> {
        ls.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn single_loop_squared_zero() {
        let q = QuiverPresentation {
            field: FieldSpec::Prime { p: 3 },
            vertices: vec!["1".into()],
            arrows: vec![arrow(0, 0, "a")],
            relations: vec![vec![(1, path(&["a", "a"]))]],
        };
        let a = from_quiver(&q, RewriteBudget::default()).unwrap();
        assert_eq!(a.dim(), 2);
        assert_eq!(a.labels(), &["e_1".to_string(), "a".to_string()]);
    }

    #[test]
    fn a2_path_algebra() {
        let q = QuiverPresentation {
            field: FieldSpec::Prime { p: 2 },
            vertices: vec!["1".into(), "2".into()],
            arrows: vec![arrow(0, 1, "alpha")],
            relations: vec![],
        };
        let a = from_quiver(&q, RewriteBudget::default()).unwrap();
        assert_eq!(a.dim(), 3);
        assert_eq!(a.cartan_matrix(), vec![vec![1, 1], vec![0, 1]]);
    }

    #[test]
    fn free_loop_is_not_finite_dimensional() {
        let q = QuiverPresentation {
            field: FieldSpec::Prime { p: 2 },
            vertices: vec!["1".into()],
            arrows: vec![arrow(0, 0, "a")],
            relations: vec![],
        };
        let budget = RewriteBudget { max_steps: 100, max_length: 10 };
        assert_eq!(from_quiver(&q, budget).unwrap_err(), AlgebraError::NotFiniteDimensional(10));
    }

    #[test]
    fn penny_farthing_paths() {
        let q = crate::fixtures::penny_farthing_quiver(FieldSpec::Prime { p: 2 });
        let a = from_quiver(&q, RewriteBudget::default()).unwrap();
        // Hand enumeration: e1, alpha, beta1, alpha^2, alpha beta1, alpha^3 from vertex 1;
        // e2, beta2, beta2 alpha, beta2 alpha beta1 from vertex 2.
        assert_eq!(a.dim(), 10);
        assert_eq!(a.cartan_matrix(), vec![vec![4, 2], vec![2, 2]]);
        assert_eq!(a.words_from(0).len(), 6);
        assert_eq!(a.words_from(1).len(), 4);
        assert_eq!(a.loewy_length(), 4);
        assert!(a.is_symmetric(0).is_symmetric());
        assert!(Arc::ptr_eq(&a.opposite().opposite(), &a));
    }

    #[test]
    fn commutative_square_over_three_elements() {
        // k[x,y]/(x^2, y^2, xy - yx) as a one-vertex quiver.
        let q = QuiverPresentation {
            field: FieldSpec::Prime { p: 3 },
            vertices: vec!["1".into()],
            arrows: vec![arrow(0, 0, "x"), arrow(0, 0, "y")],
            relations: vec![
                vec![(1, path(&["x", "x"]))],
                vec![(1, path(&["y", "y"]))],
                vec![(1, path(&["x", "y"])), (2, path(&["y", "x"]))],
            ],
        };
        let a = from_quiver(&q, RewriteBudget::default()).unwrap();
        assert_eq!(a.dim(), 4);
        assert!(a.is_symmetric(0).is_symmetric());
    }
}
