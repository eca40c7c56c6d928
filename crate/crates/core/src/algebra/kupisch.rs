use std::sync::Arc;

use super::{unit_vec, BasedAlgebra, Parts};
use crate::linalg::Field;
use crate::nakayama::KupischSeries;

/// The Nakayama algebra of a Kupisch series.
///
/// Basis element `(i, l)` with `l < c_i` is the path of length `l` starting at
/// vertex `i`; `(i, l) * (j, m) = (i, l + m)` when `j = i + l` and `l + m < c_i`.
pub fn from_kupisch(series: &KupischSeries, field: &Field) -> Arc<BasedAlgebra> {
    let n = series.n();
    let c = series.lengths();
    let mut offset = Vec::with_capacity(n);
    let mut d = 0;
    for &ci in c {
        offset.push(d);
        d += ci;
    }
    let vertex = |i: usize, l: usize| (i + l) % n;
    let mut labels = Vec::with_capacity(d);
    for i in 0..n {
        for l in 0..c[i] {
            labels.push(if l == 0 { format!("e{i}") } else { format!("p{i}_{l}") });
        }
    }
    let mut table = vec![Vec::new(); d * d];
    for i in 0..n {
        for l in 0..c[i] {
            let j = vertex(i, l);
            for m in 0..c[j] {
                if l + m < c[i] {
                    table[(offset[i] + l) * d + offset[j] + m] = vec![((offset[i] + l + m) as u32, 1)];
                }
            }
        }
    }
    let idempotents: Vec<_> = (0..n).map(|i| unit_vec(d, offset[i])).collect();
    let mut unit = vec![0; d];
    for &o in &offset {
        unit[o] = 1;
    }
    let radical_generators = (0..n)
        .flat_map(|i| (1..c[i]).map(move |l| (i, l)))
        .map(|(i, l)| unit_vec(d, offset[i] + l))
        .collect();
    BasedAlgebra::from_parts(
        Parts { field: field.clone(), labels, table, unit, idempotents, radical_generators },
        cfg!(debug_assertions),
    )
    .expect("a valid Kupisch series gives a valid algebra")
}
