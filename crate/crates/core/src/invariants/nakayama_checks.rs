//! Checks that run on the closed-form Nakayama engine, with generic-engine
//! verification where modules are needed.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::BasedAlgebra;
use crate::modrep::{HomSpace, HomologicalDim, ModuleMap, RightModule};
use crate::nakayama::{bridge_module, NakAlgebra, NakModule};

use super::ar::ShortExact;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PerpSide {
    /// `⊥A` against the Gorenstein projectives.
    Projective,
    /// `D(A)⊥` against the Gorenstein injectives.
    Injective,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NearlyGorenstein {
    pub holds: bool,
    /// A module in exactly one of the two compared sets.
    pub witness: Option<(NakModule, PerpSide)>,
}

/// Compares `⊥A` with the Gorenstein projectives and `D(A)⊥` with the
/// Gorenstein injectives over all indecomposables.
pub fn nearly_gorenstein_check_nak(nak: &NakAlgebra) -> NearlyGorenstein {
    let gp = nak.gp_indecs();
    let gi = nak.gi_indecs();
    for m in nak.indecomposables() {
        if (nak.first_ext_into_regular(m).is_none()) != gp.contains(&m) {
            return NearlyGorenstein { holds: false, witness: Some((m, PerpSide::Projective)) };
        }
        if (nak.first_ext_from_dual(m).is_none()) != gi.contains(&m) {
            return NearlyGorenstein { holds: false, witness: Some((m, PerpSide::Injective)) };
        }
    }
    NearlyGorenstein { holds: true, witness: None }
}

/// A Gorenstein projective-injective module of finite dominant dimension,
/// which cannot exist over a gendo-symmetric algebra.
pub fn gpi_with_finite_domdim(nak: &NakAlgebra) -> Option<(NakModule, HomologicalDim)> {
    nak.gpi_indecs().into_iter().find_map(|m| {
        let d = nak.domdim(m);
        d.is_finite().then_some((m, d))
    })
}

/// The usual Nakayama pattern `0 -> [i+1,k] -> [i,k+1] ⊕ [i+1,k-1] -> [i,k] -> 0`,
/// realised with a surjection found among combinations of Hom basis maps.
/// The candidate still has to be checked with `almost_split_verify`.
pub fn nakayama_ar_candidate(
    nak: &NakAlgebra,
    a: &Arc<BasedAlgebra>,
    m: NakModule,
    seed: u64,
) -> Option<ShortExact> {
    let (i, k) = m.coords()?;
    if nak.is_projective(m) {
        return None;
    }
    let n = nak.n();
    let mut parts = vec![NakModule::Indec { i, k: k + 1 }];
    if k > 1 {
        parts.push(NakModule::Indec { i: (i + 1) % n, k: k - 1 });
    }
    let target = bridge_module(a, m);
    let mods: Vec<RightModule> = parts.iter().map(|&p| bridge_module(a, p)).collect();
    let e = RightModule::direct_sum(&mods, a);
    let h = HomSpace::compute(&e, &target).ok()?;
    let f = a.field();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let all_ones = vec![1; h.dim()];
    let tries = std::iter::once(all_ones).chain((0..64).map(|_| (0..h.dim()).map(|_| rng.gen_range(0..f.order())).collect()));
    for c in tries {
        let right = ModuleMap { source: e.clone(), target: target.clone(), matrix: h.combine(&c) };
        if right.is_surjective() {
            let left = right.kernel();
            return Some(ShortExact { left, right });
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::from_kupisch;
    use crate::invariants::{almost_split_verify, IndecPool};
    use crate::linalg::Field;
    use crate::nakayama::KupischSeries;

    #[test]
    fn nakayama_fixtures_are_nearly_gorenstein() {
        for c in [vec![4, 5, 5], vec![5, 6]] {
            let nak = NakAlgebra::new(KupischSeries::cyclic(c).unwrap());
            assert!(nearly_gorenstein_check_nak(&nak).holds);
        }
        for n in 1..=3 {
            for s in KupischSeries::enumerate_cyclic(n, 7) {
                let nak = NakAlgebra::new(s.clone());
                assert_eq!(nearly_gorenstein_check_nak(&nak).witness, None, "{}", s.label());
            }
        }
    }

    #[test]
    fn gpi_13_has_domdim_two() {
        let nak = NakAlgebra::new(KupischSeries::cyclic(vec![4, 5, 5]).unwrap());
        let (m, d) = gpi_with_finite_domdim(&nak).unwrap();
        assert_eq!((m, d), (NakModule::Indec { i: 1, k: 3 }, HomologicalDim::Finite(2)));
    }

    #[test]
    fn ar_candidates_verify() {
        let s = KupischSeries::cyclic(vec![4, 5, 5]).unwrap();
        let nak = NakAlgebra::new(s.clone());
        let a = from_kupisch(&s, &Field::prime(2).unwrap());
        let pool = IndecPool {
            modules: nak.indecomposables().into_iter().map(|m| bridge_module(&a, m)).collect(),
            exhaustive: true,
        };
        for m in nak.indecomposables().into_iter().filter(|&m| !nak.is_projective(m)) {
            let seq = nakayama_ar_candidate(&nak, &a, m, 7).unwrap();
            let v = almost_split_verify(&seq, &pool).unwrap();
            assert!(v.almost_split && v.pool_complete, "{m}");
        }
    }
}
