use num_traits::{Signed, Zero};

use super::{ad_weight_dims, centralizer, MatrixRealization};
use crate::exactlinalg::{rat, RatMatrix, Rational, Subspace};
use crate::liealg::{AlgebraFamily, ExceptionalKind};

const N: usize = 7;

/// `φ = e¹²³ + f¹²³ + u∧Σ eⁱ∧fⁱ` on the basis `e1,e2,e3,f1,f2,f3,u`, as a
/// dense alternating array.
fn three_form() -> Vec<i64> {
    let mut phi = vec![0i64; N * N * N];
    let mut put = |i: usize, j: usize, k: usize| {
        for (a, b, c, s) in [
            (i, j, k, 1),
            (j, k, i, 1),
            (k, i, j, 1),
            (j, i, k, -1),
            (i, k, j, -1),
            (k, j, i, -1),
        ] {
            phi[(a * N + b) * N + c] += s;
        }
    };
    put(0, 1, 2);
    put(3, 4, 5);
    for i in 0..3 {
        put(6, i, 3 + i);
    }
    phi
}

/// Stabilizer of `φ` in `gl_7`.
fn g2_algebra() -> Subspace {
    let phi = three_form();
    let at = |a: usize, b: usize, c: usize| phi[(a * N + b) * N + c];
    let mut rows = Vec::new();
    for a in 0..N {
        for b in a + 1..N {
            for c in b + 1..N {
                let mut row = vec![0i64; N * N];
                for l in 0..N {
                    row[l * N + a] += at(l, b, c);
                    row[l * N + b] += at(a, l, c);
                    row[l * N + c] += at(a, b, l);
                }
                rows.push(row.into_iter().map(rat).collect());
            }
        }
    }
    RatMatrix::from_rows(rows)
        .expect("rectangular constraint system")
        .kernel()
}

fn eigenvector(g: &Subspace, h: &RatMatrix, lambda: i64) -> Option<RatMatrix> {
    let elems: Vec<RatMatrix> = g.basis().iter().map(|v| super::to_matrix(N, v)).collect();
    let mut system = RatMatrix::zeros(N * N, elems.len());
    for (j, x) in elems.iter().enumerate() {
        let v = &h.bracket(x).ok()? - &x.scale(&rat(lambda));
        for (i, value) in v.as_flat().iter().enumerate() {
            system.set(i, j, value.clone());
        }
    }
    let kernel = system.kernel();
    (kernel.dim() == 1).then(|| super::to_matrix(N, &g.combine(&kernel.basis()[0])))
}

/// `g_2` acting on its 7-dimensional representation, with `e` a short root
/// vector. Returns `None` if the construction fails its own checks.
pub fn g2_realization() -> Option<MatrixRealization> {
    let g_basis = g2_algebra();
    if g_basis.dim() != ExceptionalKind::G2.dim() {
        return None;
    }
    // Regular element of the diagonal torus; the short roots are ±1, ±3, ±4.
    let h0 = RatMatrix::diagonal(&[1, 3, -4, -1, -3, 4, 0].map(rat));
    let e = eigenvector(&g_basis, &h0, 1)?;
    let f0 = eigenvector(&g_basis, &h0, -1)?;
    let h0ef = e.bracket(&f0).ok()?;
    let he = h0ef.bracket(&e).ok()?;
    let (i, j) = (0..N * N)
        .map(|t| (t / N, t % N))
        .find(|&(i, j)| !e.get(i, j).is_zero())?;
    let scale = rat(2) / (he.get(i, j) / e.get(i, j));
    let f = f0.scale(&scale);
    let h = e.bracket(&f).ok()?;

    let zf_basis = centralizer(&g_basis, N, &[&f]).ok()?;
    let q_basis = centralizer(&g_basis, N, &[&e, &f]).ok()?;
    let diagonal = Subspace::span(N * N, (0..N).map(|i| RatMatrix::unit(N, i, i).into_flat()).collect()).ok()?;
    let torus = q_basis.intersect(&diagonal).ok()?;
    if torus.dim() != 1 {
        return None;
    }
    let d = super::to_matrix(N, &torus.basis()[0]);
    let weights = ad_weight_dims(
        N,
        &q_basis
            .basis()
            .iter()
            .map(|v| super::to_matrix(N, v))
            .collect::<Vec<_>>(),
        &d,
    )
    .ok()?;
    let top = weights
        .keys()
        .map(|w| Rational::from_integer((*w).into()).abs())
        .max()?;
    if top.is_zero() {
        return None;
    }
    let q_cartan = d.scale(&(rat(2) / top));

    let r = MatrixRealization {
        name: "G2 Ã1".into(),
        family: AlgebraFamily::Exceptional(ExceptionalKind::G2),
        jordan_type: None,
        n_ambient: N,
        g_basis,
        e,
        f,
        h,
        zf_basis,
        q_basis,
        gram: None,
        hook: None,
        q_cartan: Some(q_cartan),
        rank_sum: ExceptionalKind::G2.rank() + 1,
    };
    r.check().ok()?;
    Some(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::realizations::weight_space_dims;
    use std::collections::BTreeMap;

    #[test]
    fn g2_dimensions() {
        let r = g2_realization().expect("g2 model builds");
        assert_eq!(r.g_basis.dim(), 14);
        assert_eq!(r.zf_basis.dim(), 6);
        assert_eq!(r.q_basis.dim(), 3);
        assert_eq!(r.dim_ambient(), 20);
    }

    #[test]
    fn zf_is_trivial_plus_standard_plus_adjoint() {
        let r = g2_realization().unwrap();
        let dims = weight_space_dims(&r, r.q_cartan.as_ref().unwrap()).unwrap();
        assert_eq!(dims, BTreeMap::from([(-2, 1), (-1, 1), (0, 2), (1, 1), (2, 1)]));
    }

    #[test]
    fn e_is_a_short_root_vector() {
        let r = g2_realization().unwrap();
        // Jordan type (3,2,2) on the 7-dimensional module; long root vectors square to zero.
        let square = &r.e * &r.e;
        assert!(!square.is_zero());
        assert!((&square * &r.e).is_zero());
        assert_eq!((r.e.rank(), square.rank()), (4, 1));
    }
}
