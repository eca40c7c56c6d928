use std::fmt;

use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

use crate::modrep::iso::{decompose, fingerprint, iso};
use crate::modrep::structure::{
    cosyzygy_map, injective_is_projective, is_injective, is_projective, socle_vertices, syzygy_map,
};
use crate::modrep::{IsoResult, ModuleMap, RightModule};

pub const DEFAULT_CUTOFF: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    Syzygy,
    Cosyzygy,
    /// Kernels of successive minimal approximations.
    Approximation,
}

#[derive(Clone, Debug)]
pub enum Witness {
    Map(ModuleMap),
    /// Combinatorial witness, e.g. a repeated `(vertex, length)` pair.
    Coordinates(String),
}

impl Serialize for Witness {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(1))?;
        match self {
            Witness::Map(f) => m.serialize_entry("map", &f.matrix.row_vecs())?,
            Witness::Coordinates(c) => m.serialize_entry("coordinates", c)?,
        }
        m.end()
    }
}

/// The `offset`-th and `(offset + period)`-th terms are isomorphic.
#[derive(Clone, Debug, Serialize)]
pub struct PeriodicityCertificate {
    pub direction: Direction,
    pub offset: usize,
    pub period: usize,
    pub witness: Witness,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum InfiniteCertificate {
    Periodic(PeriodicityCertificate),
    /// The resolution reached zero after `length` terms, all of the counted kind.
    Terminates { direction: Direction, length: usize },
    /// The zero module, infinite by convention rather than by computation.
    ZeroModule,
    /// The non-terminal summands of term `offset` reappear as summands of term `later`.
    RecurringSummand { direction: Direction, offset: usize, later: usize },
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HomologicalDim {
    Finite(usize),
    Infinite(Box<InfiniteCertificate>),
    /// The cutoff was reached without a certificate.
    AtLeast(usize),
}

impl PartialEq for HomologicalDim {
    fn eq(&self, other: &Self) -> bool {
        use HomologicalDim::*;
        match (self, other) {
            (Finite(a), Finite(b)) | (AtLeast(a), AtLeast(b)) => a == b,
            (Infinite(_), Infinite(_)) => true,
            _ => false,
        }
    }
}

impl fmt::Display for HomologicalDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HomologicalDim::Finite(n) => write!(f, "{n}"),
            HomologicalDim::Infinite(_) => write!(f, "inf"),
            HomologicalDim::AtLeast(n) => write!(f, ">={n}"),
        }
    }
}

impl HomologicalDim {
    pub fn periodic(direction: Direction, offset: usize, period: usize, witness: Witness) -> Self {
        HomologicalDim::Infinite(Box::new(InfiniteCertificate::Periodic(PeriodicityCertificate {
            direction,
            offset,
            period,
            witness,
        })))
    }

    pub fn terminates(direction: Direction, length: usize) -> Self {
        HomologicalDim::Infinite(Box::new(InfiniteCertificate::Terminates { direction, length }))
    }

    pub fn zero_module() -> Self {
        HomologicalDim::Infinite(Box::new(InfiniteCertificate::ZeroModule))
    }

    /// Infinite by the zero-module convention only.
    pub fn is_conventional(&self) -> bool {
        matches!(self, HomologicalDim::Infinite(c) if matches!(**c, InfiniteCertificate::ZeroModule))
    }

    pub fn finite(&self) -> Option<usize> {
        match self {
            HomologicalDim::Finite(n) => Some(*n),
            _ => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, HomologicalDim::Finite(_))
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, HomologicalDim::Infinite(_))
    }

    pub fn is_decided(&self) -> bool {
        !matches!(self, HomologicalDim::AtLeast(_))
    }

    /// Lower bound valid for every outcome.
    pub fn lower_bound(&self) -> usize {
        match self {
            HomologicalDim::Finite(n) | HomologicalDim::AtLeast(n) => *n,
            HomologicalDim::Infinite(_) => usize::MAX,
        }
    }

    /// Whether the value is at least `n` (`None` when undecided).
    pub fn at_least(&self, n: usize) -> Option<bool> {
        match self {
            HomologicalDim::Finite(k) => Some(*k >= n),
            HomologicalDim::Infinite(_) => Some(true),
            HomologicalDim::AtLeast(k) => (*k >= n).then_some(true),
        }
    }

    pub fn min(self, other: Self) -> Self {
        use HomologicalDim::*;
        match (self, other) {
            (Finite(a), Finite(b)) => Finite(a.min(b)),
            (Finite(a), Infinite(_)) | (Infinite(_), Finite(a)) => Finite(a),
            (Infinite(c), Infinite(_)) => Infinite(c),
            (Finite(a), AtLeast(b)) | (AtLeast(b), Finite(a)) => {
                if a < b {
                    Finite(a)
                } else {
                    AtLeast(b)
                }
            }
            (AtLeast(a), AtLeast(b)) => AtLeast(a.min(b)),
            (AtLeast(a), Infinite(_)) | (Infinite(_), AtLeast(a)) => AtLeast(a),
        }
    }

    pub fn max(self, other: Self) -> Self {
        use HomologicalDim::*;
        match (self, other) {
            (Finite(a), Finite(b)) => Finite(a.max(b)),
            (Infinite(c), _) | (_, Infinite(c)) => Infinite(c),
            (Finite(a), AtLeast(b)) | (AtLeast(b), Finite(a)) | (AtLeast(a), AtLeast(b)) => AtLeast(a.max(b)),
        }
    }

    /// Adds a constant shift to finite values and bounds.
    pub fn shift(self, k: usize) -> Self {
        match self {
            HomologicalDim::Finite(n) => HomologicalDim::Finite(n + k),
            HomologicalDim::AtLeast(n) => HomologicalDim::AtLeast(n + k),
            inf => inf,
        }
    }
}

/// Terms of a resolution kept for recurrence tests.
pub(crate) struct History {
    direction: Direction,
    terms: Vec<RightModule>,
    /// Summands outside the terminal class, per term; `None` when undecided.
    pieces: Vec<Option<Vec<RightModule>>>,
}

impl History {
    pub(crate) fn new(direction: Direction) -> Self {
        History { direction, terms: Vec::new(), pieces: Vec::new() }
    }

    /// Looks for an earlier term isomorphic to `cur`.
    pub(crate) fn periodic(&self, cur: &RightModule) -> Option<HomologicalDim> {
        let k = self.terms.len();
        let fp = fingerprint(cur);
        for (j, t) in self.terms.iter().enumerate() {
            if t.dim() != cur.dim() || fingerprint(t) != fp {
                continue;
            }
            if let IsoResult::Iso(map) = iso(t, cur) {
                return Some(HomologicalDim::periodic(self.direction, j, k - j, Witness::Map(map)));
            }
        }
        None
    }

    /// Looks for an earlier term whose non-terminal summands all reappear in `cur`.
    ///
    /// The functor producing the next term is additive and kills terminal
    /// modules, so such a recurrence repeats forever.
    pub(crate) fn recurring(&mut self, cur: &RightModule, terminal: &dyn Fn(&RightModule) -> bool) -> Option<HomologicalDim> {
        let k = self.terms.len();
        let mine = nonterminal_summands(cur, terminal)?;
        let mut found = None;
        for (j, p) in self.pieces.iter().enumerate() {
            if let Some(p) = p {
                if !p.is_empty() && contains_summands(&mine, p) {
                    found = Some(j);
                    break;
                }
            }
        }
        self.pieces.push(Some(mine));
        self.terms.push(cur.clone());
        found.map(|j| {
            HomologicalDim::Infinite(Box::new(InfiniteCertificate::RecurringSummand {
                direction: self.direction,
                offset: j,
                later: k,
            }))
        })
    }

    pub(crate) fn push(&mut self, cur: &RightModule) {
        self.terms.push(cur.clone());
        self.pieces.push(None);
    }
}

fn nonterminal_summands(m: &RightModule, terminal: &dyn Fn(&RightModule) -> bool) -> Option<Vec<RightModule>> {
    let d = decompose(m).ok()?;
    Some(d.modules().into_iter().filter(|s| !terminal(s)).collect())
}

/// Whether the multiset `small` embeds into `big` up to isomorphism.
pub(crate) fn contains_summands(big: &[RightModule], small: &[RightModule]) -> bool {
    let mut used = vec![false; big.len()];
    'outer: for s in small {
        for (i, b) in big.iter().enumerate() {
            if !used[i] && iso(s, b).is_iso() {
                used[i] = true;
                continue 'outer;
            }
        }
        return false;
    }
    true
}

fn resolution_dim(
    m: &RightModule,
    cutoff: usize,
    direction: Direction,
    terminal: &dyn Fn(&RightModule) -> bool,
    step: &dyn Fn(&RightModule) -> RightModule,
) -> HomologicalDim {
    if m.is_zero() {
        return HomologicalDim::zero_module();
    }
    let mut hist = History::new(direction);
    let mut cur = m.clone();
    for k in 0..=cutoff {
        if terminal(&cur) {
            return HomologicalDim::Finite(k);
        }
        if let Some(p) = hist.periodic(&cur) {
            return p;
        }
        if let Some(r) = hist.recurring(&cur, terminal) {
            return r;
        }
        cur = step(&cur);
    }
    HomologicalDim::AtLeast(cutoff + 1)
}

pub fn projdim(m: &RightModule, cutoff: usize) -> HomologicalDim {
    resolution_dim(m, cutoff, Direction::Syzygy, &is_projective, &|x| syzygy_map(x).1.source)
}

pub fn injdim(m: &RightModule, cutoff: usize) -> HomologicalDim {
    resolution_dim(m, cutoff, Direction::Cosyzygy, &is_injective, &|x| cosyzygy_map(x).1.target)
}

/// Number of leading terms of the minimal injective coresolution that are projective.
pub fn domdim(m: &RightModule, cutoff: usize) -> HomologicalDim {
    if m.is_zero() {
        return HomologicalDim::zero_module();
    }
    let pi = injective_is_projective(m.algebra());
    let mut hist = History::new(Direction::Cosyzygy);
    let mut cur = m.clone();
    for k in 0..=cutoff {
        if cur.is_zero() {
            return HomologicalDim::terminates(Direction::Cosyzygy, k);
        }
        if socle_vertices(&cur).iter().any(|&v| !pi[v]) {
            return HomologicalDim::Finite(k);
        }
        if let Some(p) = hist.periodic(&cur) {
            return p;
        }
        hist.push(&cur);
        cur = cosyzygy_map(&cur).1.target;
    }
    HomologicalDim::AtLeast(cutoff + 1)
}

/// Number of leading terms of the minimal projective resolution that are injective.
pub fn codomdim(m: &RightModule, cutoff: usize) -> HomologicalDim {
    dualize(domdim(&m.dual(), cutoff))
}

/// Transports a certificate computed for `DM` over the opposite algebra back to `M`.
pub(crate) fn dualize(d: HomologicalDim) -> HomologicalDim {
    let flip = |dir| match dir {
        Direction::Syzygy => Direction::Cosyzygy,
        Direction::Cosyzygy => Direction::Syzygy,
        Direction::Approximation => Direction::Approximation,
    };
    match d {
        HomologicalDim::Infinite(c) => HomologicalDim::Infinite(Box::new(match *c {
            InfiniteCertificate::Periodic(p) => InfiniteCertificate::Periodic(PeriodicityCertificate {
                direction: flip(p.direction),
                offset: p.offset,
                period: p.period,
                witness: match p.witness {
                    Witness::Map(f) => Witness::Map(f.dual().inverse().expect("isomorphism")),
                    w => w,
                },
            }),
            InfiniteCertificate::Terminates { direction, length } => {
                InfiniteCertificate::Terminates { direction: flip(direction), length }
            }
            InfiniteCertificate::RecurringSummand { direction, offset, later } => {
                InfiniteCertificate::RecurringSummand { direction: flip(direction), offset, later }
            }
            InfiniteCertificate::ZeroModule => InfiniteCertificate::ZeroModule,
        })),
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::from_kupisch;
    use crate::linalg::Field;
    use crate::modrep::{projective, radical_power, regular_module, RightModule};
    use crate::nakayama::KupischSeries;

    #[test]
    fn selfinjective_dims() {
        let a = from_kupisch(&KupischSeries::cyclic(vec![7, 7, 7]).unwrap(), &Field::prime(2).unwrap());
        let m = radical_power(&a, 0, 2);
        assert!(projdim(&m, 10).is_infinite());
        assert!(injdim(&m, 10).is_infinite());
        assert!(domdim(&m, 10).is_infinite());
        assert!(domdim(&regular_module(&a), 10).is_infinite());
        assert!(codomdim(&regular_module(&a), 10).is_infinite());
        assert_eq!(projdim(&projective(&a, 2), 3), HomologicalDim::Finite(0));
    }

    #[test]
    fn linear_a3_dims() {
        let a = from_kupisch(&KupischSeries::linear(vec![3, 2, 1]).unwrap(), &Field::prime(3).unwrap());
        // Simple at the sink-end vertex has projective dimension 0, the others 1.
        let pd: Vec<_> = (0..3).map(|v| projdim(&RightModule::simple(&a, v), 5)).collect();
        assert_eq!(pd, vec![HomologicalDim::Finite(1), HomologicalDim::Finite(1), HomologicalDim::Finite(0)]);
        assert_eq!(domdim(&regular_module(&a), 5), HomologicalDim::Finite(1));
    }

    #[test]
    fn min_max_arithmetic() {
        let inf = HomologicalDim::terminates(Direction::Syzygy, 0);
        assert_eq!(HomologicalDim::Finite(2).min(inf.clone()), HomologicalDim::Finite(2));
        assert!(HomologicalDim::Finite(2).max(inf).is_infinite());
        assert_eq!(HomologicalDim::Finite(5).min(HomologicalDim::AtLeast(3)), HomologicalDim::AtLeast(3));
        assert_eq!(HomologicalDim::AtLeast(4).to_string(), ">=4");
    }
}
