use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::modrep::{Direction, HomologicalDim, Witness};
use crate::nakayama::{KupischSeries, NakayamaError};

/// An indecomposable `e_i A / e_i J^k`, or zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum NakModule {
    Zero,
    Indec { i: usize, k: usize },
}

impl NakModule {
    pub fn is_zero(&self) -> bool {
        matches!(self, NakModule::Zero)
    }

    /// `(i, k)` for a nonzero module.
    pub fn coords(&self) -> Option<(usize, usize)> {
        match *self {
            NakModule::Zero => None,
            NakModule::Indec { i, k } => Some((i, k)),
        }
    }

    pub fn len(&self) -> usize {
        self.coords().map_or(0, |(_, k)| k)
    }
}

impl fmt::Display for NakModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NakModule::Zero => write!(f, "0"),
            NakModule::Indec { i, k } => write!(f, "[{i},{k}]"),
        }
    }
}

/// `D(J^y e_x)`, written `[x, y]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct InjCoord {
    pub x: usize,
    pub y: usize,
}

/// A validated Kupisch series with its injective data.
#[derive(Clone, Debug)]
pub struct NakAlgebra {
    series: KupischSeries,
    d: Vec<usize>,
    proj_inj: Vec<bool>,
    inj_proj: Vec<bool>,
}

impl NakAlgebra {
    pub fn new(series: KupischSeries) -> Self {
        let n = series.n();
        let mut d = vec![0; n];
        for i in 0..n {
            for l in 0..series.c(i) {
                d[(i + l) % n] += 1;
            }
        }
        let mut a = NakAlgebra { series, d, proj_inj: Vec::new(), inj_proj: Vec::new() };
        a.proj_inj = (0..n).map(|i| a.is_injective(a.projective(i))).collect();
        a.inj_proj = (0..n).map(|x| a.is_projective(a.injective(x))).collect();
        a
    }

    pub fn validate(c: Vec<usize>, cyclic: bool) -> Result<Self, NakayamaError> {
        Ok(Self::new(KupischSeries::new(c, cyclic)?))
    }

    pub fn series(&self) -> &KupischSeries {
        &self.series
    }

    pub fn n(&self) -> usize {
        self.series.n()
    }

    pub fn c(&self, i: usize) -> usize {
        self.series.c(i)
    }

    /// `d_x = dim D(A e_x)`.
    pub fn d(&self, x: usize) -> usize {
        self.d[x % self.n()]
    }

    /// Lengths of the indecomposable injectives.
    pub fn injective_lengths(&self) -> &[usize] {
        &self.d
    }

    fn md(&self, v: isize) -> usize {
        v.rem_euclid(self.n() as isize) as usize
    }

    pub fn module(&self, i: usize, k: usize) -> Result<NakModule, NakayamaError> {
        if i >= self.n() || k > self.c(i) {
            return Err(NakayamaError::NoSuchModule(i, k));
        }
        Ok(if k == 0 { NakModule::Zero } else { NakModule::Indec { i, k } })
    }

    pub fn simple(&self, i: usize) -> NakModule {
        NakModule::Indec { i: i % self.n(), k: 1 }
    }

    pub fn projective(&self, i: usize) -> NakModule {
        NakModule::Indec { i: i % self.n(), k: self.c(i) }
    }

    /// `D(A e_x)`.
    pub fn injective(&self, x: usize) -> NakModule {
        let d = self.d(x);
        NakModule::Indec { i: self.md(x as isize - d as isize + 1), k: d }
    }

    /// All indecomposables, ordered by vertex then length.
    pub fn indecomposables(&self) -> Vec<NakModule> {
        (0..self.n()).flat_map(|i| (1..=self.c(i)).map(move |k| NakModule::Indec { i, k })).collect()
    }

    pub fn top(&self, m: NakModule) -> Option<usize> {
        m.coords().map(|(i, _)| i)
    }

    pub fn socle(&self, m: NakModule) -> Option<usize> {
        m.coords().map(|(i, k)| (i + k - 1) % self.n())
    }

    pub fn is_projective(&self, m: NakModule) -> bool {
        m.coords().is_none_or(|(i, k)| k == self.c(i))
    }

    pub fn is_injective(&self, m: NakModule) -> bool {
        m.coords().is_none_or(|(i, k)| k == self.d(i + k - 1))
    }

    /// For each vertex, whether `e_i A` is injective.
    pub fn projective_is_injective(&self) -> &[bool] {
        &self.proj_inj
    }

    /// For each vertex, whether `D(A e_x)` is projective.
    pub fn injective_is_projective(&self) -> &[bool] {
        &self.inj_proj
    }

    /// `[x, y]` with the smallest `y`: the shortest indecomposable injective
    /// with the same top that has `M` as a quotient. Only quotients of
    /// indecomposable injectives have such coordinates.
    pub fn convert(&self, m: NakModule) -> Result<InjCoord, NakayamaError> {
        let (i, k) = m.coords().ok_or(NakayamaError::NotInjectiveQuotient(0, 0))?;
        (0..self.n())
            .filter(|&x| self.d(x) >= k && self.md(x as isize - self.d(x) as isize + 1) == i)
            .map(|x| InjCoord { x, y: self.d(x) - k })
            .min_by_key(|c| (c.y, c.x))
            .ok_or(NakayamaError::NotInjectiveQuotient(i, k))
    }

    pub fn from_inj(&self, c: InjCoord) -> Result<NakModule, NakayamaError> {
        let d = self.d(c.x);
        if c.x >= self.n() || c.y > d {
            return Err(NakayamaError::NotInjectiveQuotient(c.x, c.y));
        }
        if c.y == d {
            return Ok(NakModule::Zero);
        }
        Ok(NakModule::Indec { i: self.md(c.x as isize - d as isize + 1), k: d - c.y })
    }

    /// `Ω(e_i A / e_i J^k) = e_i J^k = e_{i+k} A / e_{i+k} J^{c_i - k}`.
    pub fn syzygy(&self, m: NakModule) -> NakModule {
        match m.coords() {
            Some((i, k)) if k < self.c(i) => NakModule::Indec { i: (i + k) % self.n(), k: self.c(i) - k },
            _ => NakModule::Zero,
        }
    }

    /// `Ω^{-1}(M) = D(J^k e_s)` for `M` of length `k` with socle `S_s`.
    pub fn cosyzygy(&self, m: NakModule) -> NakModule {
        match m.coords() {
            Some((_, k)) if !self.is_injective(m) => {
                let s = self.socle(m).unwrap();
                self.from_inj(InjCoord { x: s, y: k }).expect("k < d_s")
            }
            _ => NakModule::Zero,
        }
    }

    /// `Ω^{-1}([x, y]) = [x - y, d_x - y]`, with `d` read at `x`.
    pub fn cosyzygy_inj(&self, c: InjCoord) -> InjCoord {
        InjCoord { x: self.md(c.x as isize - c.y as isize), y: self.d(c.x) - c.y }
    }

    pub fn tau(&self, m: NakModule) -> NakModule {
        match m.coords() {
            Some((i, k)) if !self.is_projective(m) => NakModule::Indec { i: (i + 1) % self.n(), k },
            _ => NakModule::Zero,
        }
    }

    pub fn tau_inv(&self, m: NakModule) -> NakModule {
        match m.coords() {
            Some((i, k)) if !self.is_injective(m) => NakModule::Indec { i: self.md(i as isize - 1), k },
            _ => NakModule::Zero,
        }
    }

    pub fn dims(&self, m: NakModule) -> NakDims {
        NakDims {
            projdim: self.projdim(m),
            injdim: self.injdim(m),
            domdim: self.domdim(m),
            codomdim: self.codomdim(m),
        }
    }

    pub fn projdim(&self, m: NakModule) -> HomologicalDim {
        self.walk(m, Direction::Syzygy, |x| self.is_projective(x), |x| self.syzygy(x))
    }

    pub fn injdim(&self, m: NakModule) -> HomologicalDim {
        self.walk(m, Direction::Cosyzygy, |x| self.is_injective(x), |x| self.cosyzygy(x))
    }

    /// Leading projective terms `D(A e_soc)` of the minimal injective coresolution.
    pub fn domdim(&self, m: NakModule) -> HomologicalDim {
        self.count_run(m, Direction::Cosyzygy, |x| self.inj_proj[self.socle(x).unwrap()], |x| self.cosyzygy(x))
    }

    /// Leading injective terms `e_top A` of the minimal projective resolution.
    pub fn codomdim(&self, m: NakModule) -> HomologicalDim {
        self.count_run(m, Direction::Syzygy, |x| self.proj_inj[self.top(x).unwrap()], |x| self.syzygy(x))
    }

    fn walk(
        &self,
        m: NakModule,
        dir: Direction,
        done: impl Fn(NakModule) -> bool,
        step: impl Fn(NakModule) -> NakModule,
    ) -> HomologicalDim {
        if m.is_zero() {
            return HomologicalDim::zero_module();
        }
        let mut seen = HashMap::new();
        let mut cur = m;
        for k in 0.. {
            if done(cur) {
                return HomologicalDim::Finite(k);
            }
            if let Some(j) = seen.insert(cur, k) {
                return periodic(dir, j, k, cur);
            }
            cur = step(cur);
        }
        unreachable!()
    }

    fn count_run(
        &self,
        m: NakModule,
        dir: Direction,
        good: impl Fn(NakModule) -> bool,
        step: impl Fn(NakModule) -> NakModule,
    ) -> HomologicalDim {
        if m.is_zero() {
            return HomologicalDim::zero_module();
        }
        let mut seen = HashMap::new();
        let mut cur = m;
        for k in 0.. {
            if cur.is_zero() {
                return HomologicalDim::terminates(dir, k);
            }
            if !good(cur) {
                return HomologicalDim::Finite(k);
            }
            if let Some(j) = seen.insert(cur, k) {
                return periodic(dir, j, k, cur);
            }
            cur = step(cur);
        }
        unreachable!()
    }

    pub fn resolution_quiver(&self) -> Result<ResolutionQuiver, NakayamaError> {
        if !self.series.is_cyclic() {
            return Err(NakayamaError::NotApplicable("resolution quiver needs a cyclic quiver"));
        }
        if self.series.is_selfinjective() {
            return Err(NakayamaError::NotApplicable("resolution quiver needs a nonselfinjective algebra"));
        }
        let n = self.n();
        let successor: Vec<usize> = (0..n)
            .map(|i| {
                let s = self.simple(self.socle(self.projective(i)).unwrap());
                self.top(self.tau(s)).expect("simples are not projective over a cyclic quiver")
            })
            .collect();
        let black: BTreeSet<usize> =
            (0..n).filter(|&i| self.projdim(self.simple(i)).at_least(2) == Some(true)).collect();
        let mut cyclically_black = BTreeSet::new();
        for v in 0..n {
            let mut cycle = vec![v];
            let mut w = successor[v];
            while w != v && cycle.len() <= n {
                cycle.push(w);
                w = successor[w];
            }
            if w == v && cycle.iter().all(|u| black.contains(u)) {
                cyclically_black.insert(v);
            }
        }
        Ok(ResolutionQuiver { successor, black, cyclically_black })
    }

    /// Indecomposable Gorenstein projectives.
    pub fn gp_indecs(&self) -> BTreeSet<NakModule> {
        let all = self.indecomposables();
        if self.series.is_selfinjective() {
            return all.into_iter().collect();
        }
        let proj = all.iter().copied().filter(|&m| self.is_projective(m));
        if !self.series.is_cyclic() {
            return proj.collect();
        }
        let cb = self.resolution_quiver().expect("cyclic nonselfinjective").cyclically_black;
        let nonproj = all.iter().copied().filter(|&m| {
            !self.is_projective(m) && cb.contains(&self.top(m).unwrap()) && cb.contains(&self.top(self.syzygy(m)).unwrap())
        });
        proj.chain(nonproj).collect()
    }

    /// Indecomposable Gorenstein injectives: injectives and `τ` of nonprojective Gorenstein projectives.
    pub fn gi_indecs(&self) -> BTreeSet<NakModule> {
        let all = self.indecomposables();
        if self.series.is_selfinjective() {
            return all.into_iter().collect();
        }
        let inj = all.iter().copied().filter(|&m| self.is_injective(m));
        let gp = self.gp_indecs();
        let moved: Vec<NakModule> =
            gp.iter().copied().filter(|&m| !self.is_projective(m)).map(|m| self.tau(m)).collect();
        inj.chain(moved).collect()
    }

    pub fn gpi_indecs(&self) -> BTreeSet<NakModule> {
        self.gp_indecs().intersection(&self.gi_indecs()).copied().collect()
    }

    /// Nonprojective Gorenstein projectives together with their projective covers.
    pub fn gorenstein_core(&self) -> BTreeSet<NakModule> {
        let mut out = BTreeSet::new();
        for m in self.gp_indecs() {
            if !self.is_projective(m) {
                out.insert(m);
                out.insert(self.projective(self.top(m).unwrap()));
            }
        }
        out
    }

    /// `dim Hom(M, N)`: elements of `N e_i` killed by `J^k` for `M = [i, k]`.
    pub fn hom_dim(&self, m: NakModule, n: NakModule) -> usize {
        let (Some((i, k)), Some((j, l))) = (m.coords(), n.coords()) else {
            return 0;
        };
        (0..l).filter(|&t| (j + t) % self.n() == i && l - t <= k).count()
    }

    /// `dim Ext^1(M, N)` from `0 -> ΩM -> P(M) -> M -> 0`.
    pub fn ext1_dim(&self, m: NakModule, n: NakModule) -> usize {
        if m.is_zero() || n.is_zero() || self.is_projective(m) {
            return 0;
        }
        let p = self.projective(self.top(m).unwrap());
        self.hom_dim(self.syzygy(m), n) + self.hom_dim(m, n) - self.hom_dim(p, n)
    }

    /// `dim Ext^i(M, N)` for `i ≥ 1`, shifting along syzygies of `M`.
    pub fn ext_dim(&self, m: NakModule, n: NakModule, i: usize) -> usize {
        let mut cur = m;
        for _ in 1..i {
            cur = self.syzygy(cur);
        }
        self.ext1_dim(cur, n)
    }

    /// First `i ≥ 1` with `Ext^i(M, A) ≠ 0`; `None` when all vanish.
    pub fn first_ext_into_regular(&self, m: NakModule) -> Option<usize> {
        let mut seen = BTreeSet::new();
        let mut cur = m;
        for i in 1.. {
            if cur.is_zero() || !seen.insert(cur) {
                return None;
            }
            if (0..self.n()).any(|v| self.ext1_dim(cur, self.projective(v)) != 0) {
                return Some(i);
            }
            cur = self.syzygy(cur);
        }
        unreachable!()
    }

    /// First `i ≥ 1` with `Ext^i(D(A), M) ≠ 0`, shifting along cosyzygies of `M`.
    pub fn first_ext_from_dual(&self, m: NakModule) -> Option<usize> {
        let mut seen = BTreeSet::new();
        let mut cur = m;
        for i in 1.. {
            if cur.is_zero() || !seen.insert(cur) {
                return None;
            }
            if (0..self.n()).any(|v| self.ext1_dim(self.injective(v), cur) != 0) {
                return Some(i);
            }
            cur = self.cosyzygy(cur);
        }
        unreachable!()
    }

    pub fn invariants(&self) -> NakInvariants {
        let n = self.n();
        let domdim = (0..n).map(|i| self.domdim(self.projective(i))).reduce(HomologicalDim::min).unwrap();
        let gordim_right = (0..n).map(|i| self.injdim(self.projective(i))).reduce(HomologicalDim::max).unwrap();
        let gordim_left = (0..n).map(|x| self.projdim(self.injective(x))).reduce(HomologicalDim::max).unwrap();
        let all = self.indecomposables();
        let fdomdim = all.iter().filter_map(|&m| self.domdim(m).finite()).max().unwrap_or(0);
        let gp = self.gp_indecs();
        let dom2 = |m: &NakModule| self.domdim(*m).at_least(2) == Some(true);
        let is_gorenstein_dominant =
            domdim.at_least(1) == Some(true) && gp.iter().filter(|m| !self.is_projective(**m)).all(dom2);
        let core_in_dom2 = self.gorenstein_core().iter().all(dom2);
        NakInvariants {
            domdim,
            gordim_left,
            gordim_right,
            fdomdim,
            is_gorenstein_dominant,
            core_in_dom2,
            // Nakayama algebras are representation-finite.
            cm_finite: true,
            gp_count: gp.len(),
        }
    }
}

fn periodic(dir: Direction, j: usize, k: usize, m: NakModule) -> HomologicalDim {
    HomologicalDim::periodic(dir, j, k - j, Witness::Coordinates(m.to_string()))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NakDims {
    pub projdim: HomologicalDim,
    pub injdim: HomologicalDim,
    pub domdim: HomologicalDim,
    pub codomdim: HomologicalDim,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResolutionQuiver {
    pub successor: Vec<usize>,
    pub black: BTreeSet<usize>,
    pub cyclically_black: BTreeSet<usize>,
}

/// Edges `i->j`; black vertices carry a `*`.
impl fmt::Display for ResolutionQuiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, j) in self.successor.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            let star = if self.black.contains(&i) { "*" } else { "" };
            write!(f, "{i}{star}->{j}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NakInvariants {
    pub domdim: HomologicalDim,
    /// `injdim` of the regular right module.
    pub gordim_right: HomologicalDim,
    /// `injdim` of the regular left module, as `projdim D(A)`.
    pub gordim_left: HomologicalDim,
    pub fdomdim: usize,
    pub is_gorenstein_dominant: bool,
    pub core_in_dom2: bool,
    pub cm_finite: bool,
    pub gp_count: usize,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a455() -> NakAlgebra {
        NakAlgebra::validate(vec![4, 5, 5], true).unwrap()
    }

    fn m(i: usize, k: usize) -> NakModule {
        NakModule::Indec { i, k }
    }

    #[test]
    fn injective_lengths_of_455() {
        assert_eq!(a455().injective_lengths(), &[5, 4, 5]);
        let s = NakAlgebra::validate(vec![4, 4, 4], true).unwrap();
        assert_eq!(s.injective_lengths(), &[4, 4, 4]);
    }

    #[test]
    fn convert_round_trips() {
        let a = NakAlgebra::validate(vec![7, 7, 7], true).unwrap();
        for x in a.indecomposables() {
            assert_eq!(a.from_inj(a.convert(x).unwrap()).unwrap(), x);
        }
        let b = a455();
        assert!(b.convert(b.projective(0)).is_err());
        for x in b.indecomposables() {
            if let Ok(c) = b.convert(x) {
                assert_eq!(b.from_inj(c).unwrap(), x);
                assert_eq!(b.from_inj(b.cosyzygy_inj(c)).unwrap(), b.cosyzygy(x));
            }
        }
        let c = b.convert(b.projective(1)).unwrap();
        assert_eq!(b.from_inj(c).unwrap(), b.projective(1));
    }

    #[test]
    fn cosyzygies_of_e0a_over_455() {
        let a = a455();
        let p = a.projective(0);
        assert_eq!(a.injective(0).coords().map(|c| c.1), Some(5));
        let c1 = a.cosyzygy(p);
        let c2 = a.cosyzygy(c1);
        assert_eq!(a.socle(p), Some(0));
        assert_eq!(a.socle(c1), Some(2));
        assert_eq!(a.socle(c2), Some(1));
        assert!(a.is_injective(c2));
        assert_eq!(a.cosyzygy(c2), NakModule::Zero);
        assert_eq!(a.injdim(p), HomologicalDim::Finite(2));
    }

    #[test]
    fn domdims_over_455() {
        let a = a455();
        assert_eq!(a.domdim(m(0, 3)), HomologicalDim::Finite(4));
        // Three projective terms D(Ae_2), D(Ae_0), D(Ae_0) precede D(Ae_1).
        assert_eq!(a.domdim(m(1, 2)), HomologicalDim::Finite(3));
        assert_eq!(a.domdim(a.projective(0)), HomologicalDim::Finite(2));
    }

    #[test]
    fn resolution_quiver_of_455() {
        let q = a455().resolution_quiver().unwrap();
        assert_eq!(q.successor, vec![1, 0, 1]);
        assert_eq!(q.cyclically_black, [0, 1].into_iter().collect());
    }

    #[test]
    fn gorenstein_classes_of_455() {
        let a = a455();
        let gp = a.gp_indecs();
        let nonproj: BTreeSet<_> = gp.iter().copied().filter(|&x| !a.is_projective(x)).collect();
        assert_eq!(nonproj, [m(0, 1), m(0, 3), m(1, 2), m(1, 3)].into_iter().collect());
        assert!(gp.contains(&m(0, 4)) && gp.contains(&m(1, 5)) && gp.contains(&m(2, 5)));
        let gpi: BTreeSet<_> = a.gpi_indecs().into_iter().filter(|&x| !a.is_projective(x)).collect();
        assert_eq!(gpi, [m(1, 3)].into_iter().collect());
    }

    #[test]
    fn invariants_of_455_and_56() {
        let inv = a455().invariants();
        assert_eq!(inv.domdim, HomologicalDim::Finite(2));
        assert_eq!(inv.gordim_right, HomologicalDim::Finite(2));
        assert_eq!(inv.gordim_left, HomologicalDim::Finite(2));
        assert_eq!(inv.fdomdim, 4);
        assert!(inv.is_gorenstein_dominant && inv.core_in_dom2);
        let b = NakAlgebra::validate(vec![5, 6], true).unwrap().invariants();
        assert!(b.gordim_right.is_infinite());
    }

    #[test]
    fn linear_algebras_have_only_projective_gp() {
        let a = NakAlgebra::validate(vec![3, 2, 1], false).unwrap();
        assert!(a.gp_indecs().iter().all(|&x| a.is_projective(x)));
        assert!(a.resolution_quiver().is_err());
        assert!(a.projdim(a.simple(0)).is_finite());
    }
}
