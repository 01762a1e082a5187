use num_traits::Zero;

use super::{build_algebra, centralizer, to_matrix, HookShape, MatrixRealization, RealizationError};
use crate::exactlinalg::{rat, RatMatrix, Rational, Subspace};
use crate::liealg::{effective_centralizer, AlgebraFamily, ClassicalKind};
use crate::partitions::Partition;

/// Standard triple on one Jordan block of size `m`:
/// `e u_{i+1} = u_i`, `f u_i = i(m−i) u_{i+1}`, `h u_i = (m+1−2i) u_i`.
fn block_triple(m: usize) -> (RatMatrix, RatMatrix, RatMatrix) {
    let mut e = RatMatrix::zeros(m, m);
    let mut f = RatMatrix::zeros(m, m);
    for i in 1..m {
        e.set(i - 1, i, rat(1));
        f.set(i, i - 1, rat((i * (m - i)) as i64));
    }
    let h = RatMatrix::diagonal(&(1..=m).map(|i| rat(m as i64 + 1 - 2 * i as i64)).collect::<Vec<_>>());
    (e, f, h)
}

fn block_diag_all(blocks: &[RatMatrix]) -> RatMatrix {
    blocks
        .iter()
        .skip(1)
        .fold(blocks[0].clone(), |acc, b| RatMatrix::block_diag(&acc, b))
}

/// The sl2-invariant bilinear form on the irreducible module of dimension
/// `m`, normalized by `(u_1, u_m) = 1`.
pub fn invariant_form_on_irreducible(m: usize) -> RatMatrix {
    let (e, f, _) = block_triple(m);
    let mut system = RatMatrix::zeros(2 * m * m, m * m);
    for a in 0..m {
        for b in 0..m {
            let unit = RatMatrix::unit(m, a, b);
            for (t, x) in [&e, &f].into_iter().enumerate() {
                let image = &(&x.transpose() * &unit) + &(&unit * x);
                for (i, value) in image.as_flat().iter().enumerate() {
                    if !value.is_zero() {
                        system.set(t * m * m + i, a * m + b, value.clone());
                    }
                }
            }
        }
    }
    let kernel = system.kernel();
    assert_eq!(kernel.dim(), 1, "invariant form on an irreducible module is unique");
    let form = to_matrix(m, &kernel.basis()[0]);
    let corner = form.get(0, m - 1).clone();
    form.scale(&corner.recip())
}

fn standard_form(kind: ClassicalKind, k: usize) -> RatMatrix {
    match kind {
        ClassicalKind::Sp => {
            let half = k / 2;
            let mut j = RatMatrix::zeros(k, k);
            for i in 0..half {
                j.set(i, i + half, rat(1));
                j.set(i + half, i, rat(-1));
            }
            j
        }
        _ => RatMatrix::identity(k),
    }
}

/// `{c ∈ z(e) ∩ z(f) : c₀₀ = 0}`, a complement to the scalars in the
/// centralizer of a `gl_n` triple.
fn gl_effective_q(g: &Subspace, n: usize, e: &RatMatrix, f: &RatMatrix) -> Result<Subspace, RealizationError> {
    let z = centralizer(g, n, &[e, f])?;
    let traceless_corner = Subspace::span(
        n * n,
        (1..n * n)
            .map(|i| {
                let mut v = vec![Rational::zero(); n * n];
                v[i] = rat(1);
                v
            })
            .collect(),
    )?;
    Ok(z.intersect(&traceless_corner)?)
}

/// Block-diagonal standard triple for an arbitrary Jordan type in `gl_n`.
pub fn gl_jordan_triple(p: &Partition) -> Result<MatrixRealization, RealizationError> {
    let n = p.size();
    let family = AlgebraFamily::Gl(n);
    family.check_jordan_type(p)?;
    let triples: Vec<_> = p.parts().iter().map(|&m| block_triple(m)).collect();
    let e = block_diag_all(&triples.iter().map(|t| t.0.clone()).collect::<Vec<_>>());
    let f = block_diag_all(&triples.iter().map(|t| t.1.clone()).collect::<Vec<_>>());
    let h = block_diag_all(&triples.iter().map(|t| t.2.clone()).collect::<Vec<_>>());
    let g_basis = build_algebra(n, None)?;
    let zf_basis = centralizer(&g_basis, n, &[&f])?;
    let q_basis = gl_effective_q(&g_basis, n, &e, &f)?;
    let hook = p.hook_parameters().map(|(n, k)| HookShape { block: n - k, ones: k });
    Ok(MatrixRealization {
        name: format!("{family} {p}"),
        family,
        jordan_type: Some(p.clone()),
        n_ambient: n,
        g_basis,
        e,
        f,
        h,
        zf_basis,
        q_basis,
        gram: None,
        hook,
        q_cartan: None,
        rank_sum: family.rank() + effective_centralizer(family, p)?.rank(),
    })
}

/// Hook triple `e = (e', 0)` on `V = U ⊕ W` with `U` a single Jordan block
/// and `W = U^⊥`.
pub fn hook_triple(family: AlgebraFamily, p: &Partition) -> Result<MatrixRealization, RealizationError> {
    family.check_jordan_type(p)?;
    let Some((n, k)) = p.hook_parameters() else {
        return Err(RealizationError::NotAHook {
            family,
            partition: p.clone(),
        });
    };
    let kind = family.kind().expect("checked Jordan type implies a classical family");
    if kind == ClassicalKind::Gl {
        return gl_jordan_triple(p);
    }
    let m = n - k;
    let (e1, f1, h1) = block_triple(m);
    let u_form = invariant_form_on_irreducible(m);
    let pad = |x: RatMatrix| {
        if k == 0 {
            x
        } else {
            RatMatrix::block_diag(&x, &RatMatrix::zeros(k, k))
        }
    };
    let (e, f, h) = (pad(e1), pad(f1), pad(h1));
    let gram = if k == 0 {
        u_form
    } else {
        RatMatrix::block_diag(&u_form, &standard_form(kind, k))
    };
    let g_basis = build_algebra(n, Some((&gram, kind)))?;
    let zf_basis = centralizer(&g_basis, n, &[&f])?;
    let q_basis = centralizer(&g_basis, n, &[&e, &f])?;
    Ok(MatrixRealization {
        name: format!("{family} {p}"),
        family,
        jordan_type: Some(p.clone()),
        n_ambient: n,
        g_basis,
        e,
        f,
        h,
        zf_basis,
        q_basis,
        gram: Some(gram),
        hook: Some(HookShape { block: m, ones: k }),
        q_cartan: None,
        rank_sum: family.rank() + effective_centralizer(family, p)?.rank(),
    })
}

/// The subspace `L ⊆ z_g(f)` of maps sending `u_1` into `W`, killing the
/// other `u_i`, and sending `W` into `C u_m`.
pub fn hook_l_subspace(r: &MatrixRealization) -> Result<Subspace, RealizationError> {
    let shape = r
        .hook
        .ok_or_else(|| RealizationError::Unsupported(format!("{} is not a hook", r.name)))?;
    let (m, n) = (shape.block, r.n_ambient);
    let unit = |i: usize, j: usize| RatMatrix::unit(n, i, j).into_flat();
    let generators = (m..n).flat_map(|w| [unit(w, 0), unit(m - 1, w)]).collect();
    let l = Subspace::span(n * n, generators)?.intersect(&r.g_basis)?;
    if !r.zf_basis.contains(&l)? {
        return Err(RealizationError::Inconsistent(format!("{}: L ⊄ z_g(f)", r.name)));
    }
    Ok(l)
}
