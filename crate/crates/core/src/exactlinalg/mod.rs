//! Exact rational dense linear algebra: matrices, subspaces, kernels,
//! commutators and trace forms. Rank decisions here feed mathematical
//! verdicts, so there is no floating point anywhere.

mod matrix;
mod poly;
mod subspace;

use thiserror::Error;

pub use matrix::{rat, rat_frac, RatMatrix, Rational};
pub use poly::{minimal_polynomial, Poly};
pub use subspace::{CoordinateMap, Subspace};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("{op}: incompatible shapes {left:?} and {right:?}")]
    DimensionMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("subspaces live in different ambient spaces ({left} vs {right})")]
    AmbientMismatch { left: usize, right: usize },
    #[error("expected a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("ragged matrix data")]
    Ragged,
}

/// Null space of `a`.
pub fn kernel(a: &RatMatrix) -> Subspace {
    a.kernel()
}

/// True iff `v` ⊆ `u`.
pub fn contains(u: &Subspace, v: &Subspace) -> Result<bool, LinalgError> {
    u.contains(v)
}

/// Commutator `[x, y] = xy - yx`.
pub fn bracket(x: &RatMatrix, y: &RatMatrix) -> Result<RatMatrix, LinalgError> {
    x.bracket(y)
}

/// Invariant form `tr(xy)`.
pub fn trace_form(x: &RatMatrix, y: &RatMatrix) -> Result<Rational, LinalgError> {
    x.trace_form(y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn int_matrix(rows: usize, cols: usize) -> impl Strategy<Value = RatMatrix> {
        proptest::collection::vec(-4i64..=4, rows * cols)
            .prop_map(move |xs| RatMatrix::from_flat(rows, cols, xs.into_iter().map(rat).collect()).unwrap())
    }

    fn square_triple(n: usize) -> impl Strategy<Value = (RatMatrix, RatMatrix, RatMatrix)> {
        (int_matrix(n, n), int_matrix(n, n), int_matrix(n, n))
    }

    proptest! {
        #[test]
        fn rank_nullity(a in (1usize..6, 1usize..7).prop_flat_map(|(r, c)| int_matrix(r, c))) {
            let k = a.kernel();
            prop_assert_eq!(a.rank() + k.dim(), a.cols());
            for v in k.basis() {
                prop_assert!(a.apply(v).unwrap().iter().all(|x| x == &rat(0)));
            }
        }

        #[test]
        fn trace_form_is_symmetric_and_invariant((x, y, z) in square_triple(3)) {
            prop_assert_eq!(trace_form(&x, &y).unwrap(), trace_form(&y, &x).unwrap());
            let lhs = trace_form(&bracket(&x, &y).unwrap(), &z).unwrap()
                + trace_form(&y, &bracket(&x, &z).unwrap()).unwrap();
            prop_assert_eq!(lhs, rat(0));
        }
    }
}
