//! Explicit matrix models of equivariant slices: the algebra `g` preserving a
//! bilinear form, an sl2-triple `(e, h, f)`, the slice directions `z_g(f)` and
//! the reductive centralizer `q`.

mod classical;
mod g2;
mod sp6;

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;
use serde_json::{json, Value};
use thiserror::Error;

use crate::exactlinalg::{rat, LinalgError, RatMatrix, Rational, Subspace};
use crate::liealg::{AlgebraFamily, ClassicalKind, LieError};
use crate::partitions::Partition;

pub use classical::{gl_jordan_triple, hook_l_subspace, hook_triple, invariant_form_on_irreducible};
pub use g2::g2_realization;
pub use sp6::sp6_33_triple;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RealizationError {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error("Gram matrix is degenerate or has the wrong symmetry for {0}")]
    DegenerateGram(ClassicalKind),
    #[error("{family} {partition} is not a hook type")]
    NotAHook {
        family: AlgebraFamily,
        partition: Partition,
    },
    #[error("no matrix model for {0}")]
    Unsupported(String),
    #[error("realization is inconsistent: {0}")]
    Inconsistent(String),
}

/// Shape data of a hook realization `V = U ⊕ W`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HookShape {
    /// `dim U`, the single nontrivial Jordan block.
    pub block: usize,
    /// `dim W`, the number of trailing ones.
    pub ones: usize,
}

#[derive(Debug, Clone)]
pub struct MatrixRealization {
    pub name: String,
    pub family: AlgebraFamily,
    pub jordan_type: Option<Partition>,
    pub n_ambient: usize,
    pub g_basis: Subspace,
    pub e: RatMatrix,
    pub f: RatMatrix,
    pub h: RatMatrix,
    pub zf_basis: Subspace,
    pub q_basis: Subspace,
    pub gram: Option<RatMatrix>,
    pub hook: Option<HookShape>,
    /// A Cartan element of `q`, normalized so that `ad` has eigenvalues ±2 on `q`.
    pub q_cartan: Option<RatMatrix>,
    /// `rk g + rk q`.
    pub rank_sum: usize,
}

impl MatrixRealization {
    pub fn matrix(&self, flat: &[Rational]) -> RatMatrix {
        to_matrix(self.n_ambient, flat)
    }

    pub fn g_elements(&self) -> Vec<RatMatrix> {
        self.g_basis.basis().iter().map(|v| self.matrix(v)).collect()
    }

    pub fn zf_elements(&self) -> Vec<RatMatrix> {
        self.zf_basis.basis().iter().map(|v| self.matrix(v)).collect()
    }

    pub fn q_elements(&self) -> Vec<RatMatrix> {
        self.q_basis.basis().iter().map(|v| self.matrix(v)).collect()
    }

    /// `dim g + dim z_g(f)`, the dimension of `G×S_e`.
    pub fn dim_ambient(&self) -> usize {
        self.g_basis.dim() + self.zf_basis.dim()
    }

    /// Checks the triple relations and the defining properties of `z_g(f)`
    /// and `q`.
    pub fn check(&self) -> Result<(), RealizationError> {
        let fail = |what: &str| Err(RealizationError::Inconsistent(format!("{}: {what}", self.name)));
        let (e, f, h) = (&self.e, &self.f, &self.h);
        if e.bracket(f)? != *h {
            return fail("[e,f] ≠ h");
        }
        if h.bracket(e)? != e.scale(&rat(2)) || h.bracket(f)? != f.scale(&rat(-2)) {
            return fail("h does not grade e and f by ±2");
        }
        for x in [e, f, h] {
            if !self.g_basis.contains_vector(x.as_flat())? {
                return fail("triple is not in g");
            }
        }
        if !self.g_basis.contains(&self.zf_basis)? || !self.g_basis.contains(&self.q_basis)? {
            return fail("z_g(f) or q leaves g");
        }
        for z in self.zf_elements() {
            if !f.bracket(&z)?.is_zero() {
                return fail("z_g(f) element does not commute with f");
            }
        }
        for c in self.q_elements() {
            if !c.bracket(e)?.is_zero() || !c.bracket(f)?.is_zero() {
                return fail("q element does not centralize the triple");
            }
        }
        let full = centralizer(&self.g_basis, self.n_ambient, &[f])?;
        if full.dim() != self.zf_basis.dim() || !full.contains(&self.zf_basis)? {
            return fail("z_g(f) basis is not the full centralizer");
        }
        Ok(())
    }

    /// JSON dump with matrices as arrays of rational strings.
    pub fn to_json(&self) -> Value {
        let mats = |s: &Subspace| -> Vec<Value> {
            s.basis()
                .iter()
                .map(|v| serde_json::to_value(self.matrix(v)).expect("matrices serialize"))
                .collect()
        };
        json!({
            "name": self.name,
            "family": self.family.to_string(),
            "jordan_type": self.jordan_type.as_ref().map(Partition::to_text),
            "n_ambient": self.n_ambient,
            "dim_g": self.g_basis.dim(),
            "dim_zf": self.zf_basis.dim(),
            "dim_q": self.q_basis.dim(),
            "e": self.e,
            "f": self.f,
            "h": self.h,
            "gram": self.gram,
            "zf_basis": mats(&self.zf_basis),
            "q_basis": mats(&self.q_basis),
        })
    }
}

pub(crate) fn to_matrix(n: usize, flat: &[Rational]) -> RatMatrix {
    RatMatrix::from_flat(n, n, flat.to_vec()).expect("flattened square matrix")
}

/// `{X : XᵀM + MX = 0}`, or all of `gl_n` when `gram` is absent.
pub fn build_algebra(n: usize, gram: Option<(&RatMatrix, ClassicalKind)>) -> Result<Subspace, RealizationError> {
    let Some((m, kind)) = gram else {
        return Ok(Subspace::full(n * n));
    };
    let expected = match kind {
        ClassicalKind::So => m.clone(),
        ClassicalKind::Sp => -m,
        ClassicalKind::Gl => return Ok(Subspace::full(n * n)),
    };
    if m.rows() != n || !m.is_square() || m.transpose() != expected || m.rank() != n {
        return Err(RealizationError::DegenerateGram(kind));
    }
    let mut constraint = RatMatrix::zeros(n * n, n * n);
    for a in 0..n {
        for b in 0..n {
            let x = RatMatrix::unit(n, a, b);
            let image = x.transpose().checked_mul(m)?.checked_add(&m.checked_mul(&x)?)?;
            for (row, value) in image.as_flat().iter().enumerate() {
                if !value.is_zero() {
                    constraint.set(row, a * n + b, value.clone());
                }
            }
        }
    }
    Ok(constraint.kernel())
}

/// Elements of `space` commuting with every matrix in `elems`.
pub fn centralizer(space: &Subspace, n: usize, elems: &[&RatMatrix]) -> Result<Subspace, RealizationError> {
    let basis: Vec<RatMatrix> = space.basis().iter().map(|v| to_matrix(n, v)).collect();
    let rows = elems.len() * n * n;
    let mut system = RatMatrix::zeros(rows, basis.len());
    for (j, b) in basis.iter().enumerate() {
        for (t, x) in elems.iter().enumerate() {
            let br = x.bracket(b)?;
            for (i, value) in br.as_flat().iter().enumerate() {
                if !value.is_zero() {
                    system.set(t * n * n + i, j, value.clone());
                }
            }
        }
    }
    let vectors = system.kernel().basis().iter().map(|c| space.combine(c)).collect();
    Ok(Subspace::span(n * n, vectors)?)
}

/// Dimensions of the `ad(h)`-eigenspaces in `z_g(f)` for a diagonal `h`.
pub fn weight_space_dims(r: &MatrixRealization, h: &RatMatrix) -> Result<BTreeMap<i64, usize>, RealizationError> {
    let dims = ad_weight_dims(r.n_ambient, &r.zf_elements(), h)?;
    if dims.values().sum::<usize>() != r.zf_basis.dim() {
        return Err(RealizationError::Inconsistent(
            "z_g(f) is not a sum of weight spaces".into(),
        ));
    }
    Ok(dims)
}

/// Eigenspace dimensions of `ad(h)` on the span of `elems`, which must be
/// `ad(h)`-stable.
pub(crate) fn ad_weight_dims(
    n: usize,
    elems: &[RatMatrix],
    h: &RatMatrix,
) -> Result<BTreeMap<i64, usize>, RealizationError> {
    let diag: Vec<Rational> = (0..n).map(|i| h.get(i, i).clone()).collect();
    if h != &RatMatrix::diagonal(&diag) {
        return Err(RealizationError::Inconsistent(
            "weights need a diagonal Cartan element".into(),
        ));
    }
    let mut candidates = BTreeSet::new();
    for a in &diag {
        for b in &diag {
            let w = a - b;
            if !w.is_integer() {
                return Err(RealizationError::Inconsistent("non-integral weight".into()));
            }
            candidates.insert(
                i64::try_from(w.to_integer())
                    .map_err(|_| RealizationError::Inconsistent("weight out of range".into()))?,
            );
        }
    }
    let mut dims = BTreeMap::new();
    for &w in &candidates {
        let lambda = rat(w);
        let mut system = RatMatrix::zeros(n * n, elems.len());
        for (j, z) in elems.iter().enumerate() {
            let v = h.bracket(z)?.checked_sub(&z.scale(&lambda))?;
            for (i, value) in v.as_flat().iter().enumerate() {
                system.set(i, j, value.clone());
            }
        }
        let d = system.kernel().dim();
        if d > 0 {
            dims.insert(w, d);
        }
    }
    Ok(dims)
}

/// Matrix model for a classical orbit: hooks in every family, any Jordan
/// type in `GL`, and `(3,3)` in `Sp(6)`.
pub fn realize(family: AlgebraFamily, p: &Partition) -> Result<MatrixRealization, RealizationError> {
    family.check_jordan_type(p)?;
    match family {
        AlgebraFamily::Gl(_) => gl_jordan_triple(p),
        AlgebraFamily::Sp(6) if p.parts() == [3, 3] => Ok(sp6_33_triple()),
        _ if p.hook_parameters().is_some() => hook_triple(family, p),
        _ => Err(RealizationError::Unsupported(format!("{family} {p}"))),
    }
}

/// Resolves `sp6-33`, `g2`, or `<family>:<partition>` such as `so:5,1,1`.
pub fn realize_case(case: &str) -> Result<MatrixRealization, RealizationError> {
    match case.trim() {
        "sp6-33" => Ok(sp6_33_triple()),
        "g2" => g2_realization().ok_or_else(|| RealizationError::Unsupported("g2".into())),
        other => {
            let (family, partition) = other
                .split_once(':')
                .ok_or_else(|| RealizationError::Unsupported(other.to_string()))?;
            let p: Partition = partition
                .parse()
                .map_err(|_| RealizationError::Unsupported(other.to_string()))?;
            let kind = match family.to_ascii_lowercase().as_str() {
                "gl" => ClassicalKind::Gl,
                "sp" => ClassicalKind::Sp,
                "so" => ClassicalKind::So,
                _ => return Err(RealizationError::Unsupported(other.to_string())),
            };
            realize(AlgebraFamily::classical(kind, p.size())?, &p)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::{effective_centralizer, slice_dim};
    use crate::partitions::jordan_types;

    #[test]
    fn algebra_dimensions() {
        assert_eq!(build_algebra(3, None).unwrap().dim(), 9);
        let j = RatMatrix::block_diag(&RatMatrix::zeros(3, 3), &RatMatrix::zeros(3, 3));
        let mut m = j;
        for i in 0..3 {
            m.set(i, i + 3, rat(1));
            m.set(i + 3, i, rat(-1));
        }
        assert_eq!(build_algebra(6, Some((&m, ClassicalKind::Sp))).unwrap().dim(), 21);
        let sym = RatMatrix::from_i64(&[
            &[2, 1, 0, 0, 0],
            &[1, 0, 0, 0, 3],
            &[0, 0, 1, 0, 0],
            &[0, 0, 0, -1, 0],
            &[0, 3, 0, 0, 0],
        ]);
        assert_eq!(build_algebra(5, Some((&sym, ClassicalKind::So))).unwrap().dim(), 10);
    }

    #[test]
    fn degenerate_gram_is_rejected() {
        let m = RatMatrix::from_i64(&[&[1, 0], &[0, 0]]);
        assert_eq!(
            build_algebra(2, Some((&m, ClassicalKind::So))),
            Err(RealizationError::DegenerateGram(ClassicalKind::So))
        );
        let skew = RatMatrix::from_i64(&[&[0, 1], &[-1, 0]]);
        assert!(build_algebra(2, Some((&skew, ClassicalKind::So))).is_err());
    }

    #[test]
    fn every_small_realization_is_consistent() {
        for n in 1..=8 {
            for kind in [ClassicalKind::Gl, ClassicalKind::Sp, ClassicalKind::So] {
                let Ok(g) = AlgebraFamily::classical(kind, n) else {
                    continue;
                };
                for p in jordan_types(kind, n) {
                    let r = match realize(g, &p) {
                        Ok(r) => r,
                        Err(RealizationError::Unsupported(_)) => continue,
                        Err(e) => panic!("{g} {p}: {e}"),
                    };
                    r.check().unwrap();
                    assert_eq!(r.g_basis.dim(), g.dim());
                    assert_eq!(r.zf_basis.dim(), slice_dim(g, &p).unwrap(), "{g} {p}");
                    assert_eq!(r.q_basis.dim(), effective_centralizer(g, &p).unwrap().dim(), "{g} {p}");
                }
            }
        }
    }

    #[test]
    fn realize_case_names() {
        assert_eq!(realize_case("so:5,1,1").unwrap().zf_basis.dim(), 5);
        assert_eq!(realize_case("sp6-33").unwrap().zf_basis.dim(), 7);
        assert!(matches!(
            realize_case("so:3,3,1"),
            Err(RealizationError::Unsupported(_))
        ));
        assert!(realize_case("sp:3,1").is_err());
        assert!(realize_case("nonsense").is_err());
    }

    #[test]
    fn json_dump_has_matrices() {
        let r = realize_case("gl:2,1").unwrap();
        let v = r.to_json();
        assert_eq!(v["dim_zf"], 5);
        assert_eq!(v["e"][0][1], "1");
        assert_eq!(v["zf_basis"].as_array().unwrap().len(), 5);
    }
}
