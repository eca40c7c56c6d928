//! Bound checks over enumerated cyclic Kupisch series.

use serde::Serialize;

use crate::algebra::from_kupisch;
use crate::linalg::Field;
use crate::modrep::HomologicalDim;
use crate::nakayama::{KupischSeries, NakAlgebra};

use super::algebra_dims::gendo_symmetric_check;
use super::nakayama_checks::nearly_gorenstein_check_nak;

#[derive(Clone, Debug, Serialize)]
pub struct ScanRow {
    pub series: String,
    pub n: usize,
    pub domdim: HomologicalDim,
    pub gordim: HomologicalDim,
    pub fdomdim: usize,
    pub gp_count: usize,
    pub nearly_gorenstein: bool,
    pub gorenstein_dominant: bool,
    pub gendo_symmetric: bool,
    /// `fdomdim > 2n - 2`.
    pub violates_2n2: bool,
    /// `fdomdim > g + 1` on a nonselfinjective gendo-symmetric Gorenstein algebra.
    pub violates_g1: Option<bool>,
    pub violates_gorenstein_dominant: bool,
}

impl ScanRow {
    pub fn is_violation(&self) -> bool {
        self.violates_2n2 || self.violates_g1 == Some(true) || self.violates_gorenstein_dominant
    }
}

/// One scan row. The bound-quiver algebra over `field` is only built when the
/// gendo-symmetry test is needed.
pub fn scan_row(series: &KupischSeries, field: &Field, cutoff: usize) -> ScanRow {
    let nak = NakAlgebra::new(series.clone());
    let inv = nak.invariants();
    let n = series.n();
    let gordim = inv.gordim_right.clone().max(inv.gordim_left.clone());
    let selfinjective = series.is_selfinjective();
    let gendo_symmetric = inv.domdim.at_least(2) == Some(true)
        && (series.is_symmetric() || gendo_symmetric_check(&from_kupisch(series, field), cutoff));
    let nearly_gorenstein = nearly_gorenstein_check_nak(&nak).holds;
    let violates_g1 = match gordim.finite() {
        Some(g) if gendo_symmetric && nearly_gorenstein && !selfinjective => Some(inv.fdomdim > g + 1),
        _ => None,
    };
    ScanRow {
        series: series.label(),
        n,
        fdomdim: inv.fdomdim,
        gp_count: inv.gp_count,
        nearly_gorenstein,
        gorenstein_dominant: inv.is_gorenstein_dominant,
        gendo_symmetric,
        violates_2n2: inv.fdomdim + 2 > 2 * n,
        violates_g1,
        violates_gorenstein_dominant: !inv.is_gorenstein_dominant,
        domdim: inv.domdim,
        gordim,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn row_455() {
        let s = KupischSeries::cyclic(vec![4, 5, 5]).unwrap();
        let r = scan_row(&s, &Field::prime(2).unwrap(), 24);
        assert_eq!(r.fdomdim, 4);
        assert_eq!(r.gordim, HomologicalDim::Finite(2));
        assert!(!r.gendo_symmetric);
        assert!(!r.is_violation());
    }

    #[test]
    fn selfinjective_row() {
        let s = KupischSeries::cyclic(vec![3, 3]).unwrap();
        let r = scan_row(&s, &Field::prime(2).unwrap(), 24);
        assert!(r.domdim.is_infinite());
        assert_eq!(r.violates_g1, None);
    }
}
