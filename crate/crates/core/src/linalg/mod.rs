//! Finite fields and dense linear algebra over them.

mod field;
mod matrix;

pub use field::{Elem, Field, FieldSpec, MAX_PRIME, MAX_TABLE_ORDER};
pub use matrix::{Echelon, Matrix};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("bad field: {0}")]
    BadField(String),
    #[error("field mismatch")]
    FieldMismatch,
    #[error("entry {0} is not an element of the field")]
    ForeignEntry(Elem),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
}

#[cfg(test)]
mod proptests {
    use super::*;
    use proptest::prelude::*;

    fn field_strategy() -> impl Strategy<Value = Field> {
        prop_oneof![
            Just(Field::prime(2).unwrap()),
            Just(Field::prime(3).unwrap()),
            Just(Field::prime(7).unwrap()),
            Just(Field::gf4()),
        ]
    }

    fn matrix_strategy() -> impl Strategy<Value = Matrix> {
        (field_strategy(), 0usize..6, 0usize..6).prop_flat_map(|(f, r, c)| {
            let q = f.order();
            proptest::collection::vec(0..q, r * c)
                .prop_map(move |d| Matrix::from_vec(r, c, d, &f).unwrap())
        })
    }

    proptest! {
        #[test]
        fn rank_equals_transpose_rank(m in matrix_strategy()) {
            prop_assert_eq!(m.rank(), m.transpose().rank());
        }

        #[test]
        fn kernel_vectors_annihilate(m in matrix_strategy()) {
            let k = m.kernel_basis();
            prop_assert_eq!(k.len() + m.rank(), m.cols());
            for v in &k {
                prop_assert!(m.mul_vec(v).iter().all(|&x| x == 0));
            }
        }

        #[test]
        fn solve_reproduces_rhs(m in matrix_strategy(), seed in any::<u64>()) {
            let f = m.field().clone();
            let q = f.order() as u64;
            let x: Vec<Elem> = (0..m.cols()).map(|i| ((seed >> (i * 3)) % q) as Elem).collect();
            let b = m.mul_vec(&x);
            let sol = m.solve(&b).unwrap().expect("consistent system");
            prop_assert_eq!(m.mul_vec(&sol), b);
        }
    }
}
