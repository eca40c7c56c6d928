//! Certification of Gorenstein projectivity through Ext-vanishing windows.

use serde::Serialize;

use crate::modrep::{
    decompose, is_projective, iso, regular_module, syzygy_map, transpose_tr, Direction, HomSpace, HomologicalDim,
    InfiniteCertificate, IsoResult, PeriodicityCertificate, RightModule, Witness,
};

/// Why `Ext^i(X, N)` vanishes for every `i ≥ 1`.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum VanishingCertificate {
    /// `X` is projective.
    Projective,
    /// `Ω^length X` is projective and the degrees before it vanish.
    Terminates { length: usize },
    /// The nonprojective parts of two syzygies are isomorphic, so the Ext
    /// sequence repeats and the checked window covers a full period.
    Periodic(PeriodicityCertificate),
}

impl VanishingCertificate {
    pub fn into_infinite(self) -> HomologicalDim {
        HomologicalDim::Infinite(Box::new(match self {
            VanishingCertificate::Projective => InfiniteCertificate::Terminates { direction: Direction::Syzygy, length: 0 },
            VanishingCertificate::Terminates { length } => {
                InfiniteCertificate::Terminates { direction: Direction::Syzygy, length }
            }
            VanishingCertificate::Periodic(p) => InfiniteCertificate::Periodic(p),
        }))
    }
}

/// Outcome of testing `Ext^i(X, N) = 0` for `1 ≤ i ≤ bound`.
#[derive(Clone, Debug)]
pub enum Vanishing {
    /// All degrees vanish; `window` degrees were checked.
    All { certificate: VanishingCertificate, window: usize },
    /// The first nonvanishing degree.
    FailsAt(usize),
    Unknown { bound: usize },
}

/// Nonprojective summands of `m`, as one module.
pub fn stable_part(m: &RightModule) -> RightModule {
    if m.is_zero() {
        return m.clone();
    }
    let parts: Vec<RightModule> = match decompose(m) {
        Ok(d) => d.modules().into_iter().filter(|s| !is_projective(s)).collect(),
        Err(_) => return m.clone(),
    };
    RightModule::direct_sum(&parts, m.algebra())
}

/// Decides `Ext^i(X, N) = 0` for all `i ≥ 1`, degree by degree along the
/// syzygies of `X`, until the stable syzygy orbit repeats.
pub fn ext_vanishing(x: &RightModule, n: &RightModule, bound: usize) -> Vanishing {
    if x.is_zero() || is_projective(x) {
        return Vanishing::All { certificate: VanishingCertificate::Projective, window: 0 };
    }
    let mut seen: Vec<RightModule> = Vec::new();
    let mut cur = x.clone();
    for i in 1..=bound {
        let st = stable_part(&cur);
        if st.is_zero() {
            return Vanishing::All { certificate: VanishingCertificate::Terminates { length: i - 1 }, window: i - 1 };
        }
        for (j, earlier) in seen.iter().enumerate() {
            if let IsoResult::Iso(map) = iso(earlier, &st) {
                let cert = PeriodicityCertificate {
                    direction: Direction::Syzygy,
                    offset: j,
                    period: i - 1 - j,
                    witness: Witness::Map(map),
                };
                return Vanishing::All { certificate: VanishingCertificate::Periodic(cert), window: i - 1 };
            }
        }
        seen.push(st);
        let (cover, inc) = syzygy_map(&cur);
        if ext1_from(&cover.map.source, &inc, n) != 0 {
            return Vanishing::FailsAt(i);
        }
        cur = inc.source;
    }
    Vanishing::Unknown { bound }
}

/// `dim Ext^1(X, N)` from `ΩX -> P`.
fn ext1_from(p: &RightModule, inc: &crate::modrep::ModuleMap, n: &RightModule) -> usize {
    if inc.source.is_zero() {
        return 0;
    }
    let h = HomSpace::compute(&inc.source, n).expect("same algebra");
    if h.dim() == 0 {
        return 0;
    }
    let hp = HomSpace::compute(p, n).expect("same algebra");
    let restricted: Vec<_> = hp.basis().iter().map(|g| inc.matrix.mul(g)).collect();
    h.dim() - h.span_dim(restricted.iter())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ExtSide {
    /// `Ext^i(M, A)`.
    Module,
    /// `Ext^i(Tr M, A^op)`.
    Transpose,
}

#[derive(Clone, Debug, Serialize)]
pub struct GpCertificate {
    pub module: VanishingCertificate,
    pub transpose: VanishingCertificate,
    /// Largest number of degrees checked on either side.
    pub window: usize,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GpVerdict {
    Yes(Box<GpCertificate>),
    /// `Ext^degree` on `side` is nonzero.
    No { degree: usize, side: ExtSide },
    Unknown { bound: usize },
}

impl std::fmt::Display for GpVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GpVerdict::Yes(_) => f.write_str("yes"),
            GpVerdict::No { degree, side: ExtSide::Module } => write!(f, "no(ext{degree})"),
            GpVerdict::No { degree, side: ExtSide::Transpose } => write!(f, "no(ext{degree} of Tr)"),
            GpVerdict::Unknown { bound } => write!(f, "unknown(bound {bound})"),
        }
    }
}

impl GpVerdict {
    pub fn is_yes(&self) -> bool {
        matches!(self, GpVerdict::Yes(_))
    }

    pub fn is_no(&self) -> bool {
        matches!(self, GpVerdict::No { .. })
    }

    pub fn is_decided(&self) -> bool {
        !matches!(self, GpVerdict::Unknown { .. })
    }

    /// `Some(true)` for Yes, `Some(false)` for No.
    pub fn decided(&self) -> Option<bool> {
        match self {
            GpVerdict::Yes(_) => Some(true),
            GpVerdict::No { .. } => Some(false),
            GpVerdict::Unknown { .. } => None,
        }
    }
}

/// Gorenstein projectivity: `Ext^i(M, A) = 0 = Ext^i(Tr M, A)` for all `i ≥ 1`.
pub fn gp_test(m: &RightModule, bound: usize) -> GpVerdict {
    let reg = regular_module(m.algebra());
    let module = match ext_vanishing(m, &reg, bound) {
        Vanishing::All { certificate, window } => (certificate, window),
        Vanishing::FailsAt(degree) => return GpVerdict::No { degree, side: ExtSide::Module },
        Vanishing::Unknown { bound } => return GpVerdict::Unknown { bound },
    };
    let tr = transpose_tr(m);
    let reg_op = regular_module(&m.algebra().opposite());
    let transpose = match ext_vanishing(&tr, &reg_op, bound) {
        Vanishing::All { certificate, window } => (certificate, window),
        Vanishing::FailsAt(degree) => return GpVerdict::No { degree, side: ExtSide::Transpose },
        Vanishing::Unknown { bound } => return GpVerdict::Unknown { bound },
    };
    GpVerdict::Yes(Box::new(GpCertificate {
        window: module.1.max(transpose.1),
        module: module.0,
        transpose: transpose.0,
    }))
}

/// Gorenstein injectivity, as Gorenstein projectivity of `DM` over the opposite algebra.
pub fn gi_test(m: &RightModule, bound: usize) -> GpVerdict {
    gp_test(&m.dual(), bound)
}

#[derive(Clone, Debug, Serialize)]
pub struct GpiVerdict {
    pub gp: GpVerdict,
    pub gi: GpVerdict,
}

impl GpiVerdict {
    pub fn is_yes(&self) -> bool {
        self.gp.is_yes() && self.gi.is_yes()
    }

    pub fn is_no(&self) -> bool {
        self.gp.is_no() || self.gi.is_no()
    }

    pub fn decided(&self) -> Option<bool> {
        match (self.gp.decided(), self.gi.decided()) {
            (Some(false), _) | (_, Some(false)) => Some(false),
            (Some(true), Some(true)) => Some(true),
            _ => None,
        }
    }
}

pub fn gpi_test(m: &RightModule, bound: usize) -> GpiVerdict {
    GpiVerdict { gp: gp_test(m, bound), gi: gi_test(m, bound) }
}
