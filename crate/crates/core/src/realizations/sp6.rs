use super::{build_algebra, centralizer, MatrixRealization};
use crate::exactlinalg::{rat, RatMatrix, Subspace};
use crate::liealg::{AlgebraFamily, ClassicalKind};
use crate::partitions::Partition;

fn blocks(a: &RatMatrix) -> RatMatrix {
    RatMatrix::block_diag(a, &-&a.transpose())
}

/// The `(3,3)` nilpotent in `sp_6`, for the form `M = [[0, I₃], [−I₃, 0]]`,
/// with `q` the diagonally embedded `sl_2`.
pub fn sp6_33_triple() -> MatrixRealization {
    let e1 = RatMatrix::from_i64(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
    let f1 = RatMatrix::from_i64(&[&[0, 0, 0], &[2, 0, 0], &[0, 2, 0]]);
    let h1 = RatMatrix::from_i64(&[&[2, 0, 0], &[0, 0, 0], &[0, 0, -2]]);
    let (e, f, h) = (blocks(&e1), blocks(&f1), blocks(&h1));

    let mut gram = RatMatrix::zeros(6, 6);
    for i in 0..3 {
        gram.set(i, i + 3, rat(1));
        gram.set(i + 3, i, rat(-1));
    }
    let g_basis = build_algebra(6, Some((&gram, ClassicalKind::Sp))).expect("standard symplectic form");
    let zf_basis = centralizer(&g_basis, 6, &[&f]).expect("square matrices");

    let cartan = RatMatrix::diagonal(&[1, 1, 1, -1, -1, -1].map(rat));
    let mut raising = RatMatrix::zeros(6, 6);
    let mut lowering = RatMatrix::zeros(6, 6);
    for (i, j, s) in [(0, 5, 1), (1, 4, -1), (2, 3, 1)] {
        raising.set(i, j, rat(s));
        lowering.set(j, i, rat(s));
    }
    let q_basis = Subspace::span(
        36,
        [&cartan, &raising, &lowering]
            .iter()
            .map(|m| m.as_flat().to_vec())
            .collect(),
    )
    .expect("36-dimensional vectors");

    MatrixRealization {
        name: "Sp(6) (3,3)".into(),
        family: AlgebraFamily::Sp(6),
        jordan_type: Some(Partition::new(vec![3, 3]).expect("valid partition")),
        n_ambient: 6,
        g_basis,
        e,
        f,
        h,
        zf_basis,
        q_basis,
        gram: Some(gram),
        hook: None,
        q_cartan: Some(cartan),
        rank_sum: 3 + 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::realizations::weight_space_dims;
    use std::collections::BTreeMap;

    #[test]
    fn sp6_numbers() {
        let r = sp6_33_triple();
        r.check().unwrap();
        assert_eq!(r.g_basis.dim(), 21);
        assert_eq!(r.zf_basis.dim(), 7);
        assert_eq!(r.dim_ambient(), 28);
        let full_q = centralizer(&r.g_basis, 6, &[&r.e, &r.f]).unwrap();
        assert_eq!(full_q.dim(), 3);
        assert!(full_q.contains(&r.q_basis).unwrap());
    }

    #[test]
    fn q_is_an_sl2_triple() {
        let r = sp6_33_triple();
        let q = r.q_elements();
        let (h, x, y) = (&q[0], &q[1], &q[2]);
        assert_eq!(&x.bracket(y).unwrap(), h);
        assert_eq!(h.bracket(x).unwrap(), x.scale(&rat(2)));
        assert_eq!(h.bracket(y).unwrap(), y.scale(&rat(-2)));
    }

    #[test]
    fn zf_weight_spaces() {
        let r = sp6_33_triple();
        let dims = weight_space_dims(&r, r.q_cartan.as_ref().unwrap()).unwrap();
        assert_eq!(dims, BTreeMap::from([(-2, 2), (0, 3), (2, 2)]));
    }
}
