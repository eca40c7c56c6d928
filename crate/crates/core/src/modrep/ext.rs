use crate::modrep::structure::{projective_cover, syzygy_map};
use crate::modrep::{HomSpace, RightModule};

/// `dim Ext^i(M, N)` from the minimal projective resolution of `M`.
///
/// With `0 -> Ω^i M -> P -> Ω^{i-1} M -> 0`, `Ext^i(M, N)` is the cokernel of
/// restriction `Hom(P, N) -> Hom(Ω^i M, N)`.
pub fn ext_dim(m: &RightModule, n: &RightModule, i: usize) -> usize {
    if i == 0 {
        return HomSpace::compute(m, n).expect("same algebra").dim();
    }
    let mut cur = m.clone();
    for _ in 1..i {
        if cur.is_zero() {
            return 0;
        }
        cur = syzygy_map(&cur).1.source;
    }
    if cur.is_zero() {
        return 0;
    }
    let (cover, inc) = syzygy_map(&cur);
    let omega = &inc.source;
    if omega.is_zero() {
        return 0;
    }
    let h_omega = HomSpace::compute(omega, n).expect("same algebra");
    if h_omega.dim() == 0 {
        return 0;
    }
    let h_p = HomSpace::compute(&cover.map.source, n).expect("same algebra");
    let restricted: Vec<_> = h_p.basis().iter().map(|g| inc.matrix.mul(g)).collect();
    h_omega.dim() - h_omega.span_dim(restricted.iter())
}

/// The same dimension through the injective coresolution of `N`, computed as
/// `Ext^i_{A^op}(DN, DM)`.
pub fn ext_dim_dual(m: &RightModule, n: &RightModule, i: usize) -> usize {
    ext_dim(&n.dual(), &m.dual(), i)
}

/// `dim Hom(M, N)` modulo maps factoring through a projective module.
pub fn stable_hom_dim(m: &RightModule, n: &RightModule) -> usize {
    let h = HomSpace::compute(m, n).expect("same algebra");
    if h.dim() == 0 {
        return 0;
    }
    // Every map through a projective factors through the cover of N.
    let pi = projective_cover(n).map;
    let hp = HomSpace::compute(m, &pi.source).expect("same algebra");
    let through: Vec<_> = hp.basis().iter().map(|g| g.mul(&pi.matrix)).collect();
    h.dim() - h.span_dim(through.iter())
}

/// `dim Hom(M, N)` modulo maps factoring through an injective module.
pub fn costable_hom_dim(m: &RightModule, n: &RightModule) -> usize {
    stable_hom_dim(&n.dual(), &m.dual())
}

/// Top vertices of the first `len` terms `P_0, P_1, ...` of the minimal
/// projective resolution; stops early when the resolution ends.
pub fn projective_resolution_tops(m: &RightModule, len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = m.clone();
    for _ in 0..len {
        if cur.is_zero() {
            break;
        }
        let (cover, inc) = syzygy_map(&cur);
        out.push(cover.tops);
        cur = inc.source;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::from_kupisch;
    use crate::linalg::Field;
    use crate::modrep::{projective, radical_power, regular_module};
    use crate::nakayama::KupischSeries;

    #[test]
    fn ext_of_e0j2_over_777() {
        let a = from_kupisch(&KupischSeries::cyclic(vec![7, 7, 7]).unwrap(), &Field::prime(2).unwrap());
        let m = radical_power(&a, 0, 2);
        assert_eq!(ext_dim(&m, &m, 1), 0);
        assert_ne!(ext_dim(&m, &m, 2), 0);
        for i in 1..4 {
            assert_eq!(ext_dim(&m, &m, i), ext_dim_dual(&m, &m, i));
            assert_eq!(ext_dim(&projective(&a, 1), &m, i), 0);
        }
        assert_eq!(stable_hom_dim(&regular_module(&a), &m), 0);
    }
}
