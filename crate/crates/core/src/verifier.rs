//! Sampling checks of coisotropy at points of `G×S_e`, exact over the
//! rationals. A positive outcome supports a generic-point claim; only a
//! negative one is a proof.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::exactlinalg::{minimal_polynomial, rat, LinalgError, RatMatrix, Rational, Subspace};
use crate::realizations::MatrixRealization;

pub const COEFF_BOUND: i64 = 5;
pub const MAX_ATTEMPTS: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("point is not on the slice e + z_g(f)")]
    NotInSlice,
    #[error("[c, x] leaves z_g(f); the realization is broken")]
    BracketOutsideSlice,
}

/// `x = e + Σ cᵢ zᵢ` for the slice basis `zᵢ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlicePoint {
    pub x: RatMatrix,
    pub coeffs: Vec<i64>,
    pub seed: u64,
}

impl SlicePoint {
    pub fn new(r: &MatrixRealization, coeffs: Vec<i64>, seed: u64) -> Self {
        let direction = r.zf_basis.combine(&coeffs.iter().map(|&c| rat(c)).collect::<Vec<_>>());
        let x = &r.e + &r.matrix(&direction);
        SlicePoint { x, coeffs, seed }
    }

    pub fn at_e(r: &MatrixRealization) -> Self {
        SlicePoint::new(r, vec![0; r.zf_basis.dim()], 0)
    }

    pub fn sample(r: &MatrixRealization, rng: &mut ChaCha8Rng, seed: u64) -> Self {
        let coeffs = (0..r.zf_basis.dim())
            .map(|_| rng.gen_range(-COEFF_BOUND..=COEFF_BOUND))
            .collect();
        SlicePoint::new(r, coeffs, seed)
    }
}

fn check_in_slice(r: &MatrixRealization, x: &RatMatrix) -> Result<(), VerifyError> {
    let offset = x.checked_sub(&r.e)?;
    if !r.zf_basis.contains_vector(offset.as_flat())? {
        return Err(VerifyError::NotInSlice);
    }
    Ok(())
}

/// Gram matrix of `ω_x(ξ+u, η+v) = (x,[ξ,η]) + (u,η) − (v,ξ)` on the basis
/// `g ⊕ z_g(f)`.
pub fn omega_gram(r: &MatrixRealization, x: &RatMatrix) -> Result<RatMatrix, VerifyError> {
    check_in_slice(r, x)?;
    let g = r.g_elements();
    let z = r.zf_elements();
    let (dg, dz) = (g.len(), z.len());
    let mut omega = RatMatrix::zeros(dg + dz, dg + dz);
    let ad_x: Vec<RatMatrix> = g.iter().map(|ga| x.bracket(ga)).collect::<Result<_, _>>()?;
    for a in 0..dg {
        for (b, gb) in g.iter().enumerate().skip(a + 1) {
            // (x,[g_a,g_b]) = tr([x,g_a] g_b)
            let v = ad_x[a].trace_form(gb)?;
            omega.set(b, a, -v.clone());
            omega.set(a, b, v);
        }
        for (j, zj) in z.iter().enumerate() {
            let v = zj.trace_form(&g[a])?;
            omega.set(a, dg + j, -v.clone());
            omega.set(dg + j, a, v);
        }
    }
    Ok(omega)
}

/// Coordinates of `[c, x]` in the slice basis, one row per `q` basis element.
fn q_action_rows(r: &MatrixRealization, x: &RatMatrix) -> Result<Vec<Vec<Rational>>, VerifyError> {
    let coords = r.zf_basis.coordinate_map();
    r.q_elements()
        .iter()
        .map(|c| {
            let br = c.bracket(x)?;
            coords.coordinates(br.as_flat()).ok_or(VerifyError::BracketOutsideSlice)
        })
        .collect()
}

/// Tangent space to the `G×Q`-orbit: `g ⊕ 0` plus `0 ⊕ [q, x]`.
pub fn orbit_tangent(r: &MatrixRealization, x: &RatMatrix) -> Result<Subspace, VerifyError> {
    check_in_slice(r, x)?;
    let (dg, dz) = (r.g_basis.dim(), r.zf_basis.dim());
    let mut vectors = Vec::with_capacity(dg + r.q_basis.dim());
    for i in 0..dg {
        let mut v = vec![rat(0); dg + dz];
        v[i] = rat(1);
        vectors.push(v);
    }
    for row in q_action_rows(r, x)? {
        let mut v = vec![rat(0); dg];
        v.extend(row);
        vectors.push(v);
    }
    Ok(Subspace::span(dg + dz, vectors)?)
}

/// Dimension of the stabilizer of `x` in `q`.
pub fn stabilizer_dim(r: &MatrixRealization, x: &RatMatrix) -> Result<usize, VerifyError> {
    let rows = q_action_rows(r, x)?;
    if rows.is_empty() {
        return Ok(0);
    }
    let m = RatMatrix::from_rows(rows)?;
    Ok(m.rows() - m.rank())
}

/// True when the minimal polynomial of `x` is squarefree, which certifies
/// that `x` is semisimple.
pub fn semisimplicity_probe(x: &RatMatrix) -> Result<bool, VerifyError> {
    Ok(minimal_polynomial(x)?.is_squarefree())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Outcome {
    Coisotropic,
    NotCoisotropic,
    /// `ω` stayed degenerate on every sample.
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoisotropyReport {
    pub case: String,
    pub seed: u64,
    pub attempt: usize,
    pub coefficients: Vec<i64>,
    pub dim_ambient: usize,
    pub dim_g: usize,
    pub dim_zf: usize,
    pub dim_q: usize,
    pub dim_w: usize,
    pub dim_w_perp: usize,
    pub contained: bool,
    pub dim_intersection: usize,
    pub stabilizer_dim: usize,
    pub omega_rank: usize,
    /// `rk g + rk q`, the expected `dim W^⊥` for a coisotropic orbit.
    pub rank_sum: usize,
    pub outcome: Outcome,
}

impl CoisotropyReport {
    /// The full positive claim: nondegenerate form, coisotropic tangent
    /// space of the expected corank, and trivial generic stabilizer.
    pub fn supports_hyperspherical(&self) -> bool {
        self.outcome == Outcome::Coisotropic && self.dim_w_perp == self.rank_sum && self.stabilizer_dim == 0
    }
}

/// Coisotropy report at one point.
pub fn coisotropy_at(
    r: &MatrixRealization,
    point: &SlicePoint,
    attempt: usize,
) -> Result<CoisotropyReport, VerifyError> {
    let omega = omega_gram(r, &point.x)?;
    let w = orbit_tangent(r, &point.x)?;
    let omega_rank = omega.rank();
    let w_rows = w.as_rows();
    let w_perp = w_rows.checked_mul(&omega)?.kernel();
    let contained = w.contains(&w_perp)?;
    let dim_intersection = w.intersect(&w_perp)?.dim();
    let ambient = r.dim_ambient();
    let outcome = if omega_rank < ambient {
        Outcome::Inconclusive
    } else if contained {
        Outcome::Coisotropic
    } else {
        Outcome::NotCoisotropic
    };
    Ok(CoisotropyReport {
        case: r.name.clone(),
        seed: point.seed,
        attempt,
        coefficients: point.coeffs.clone(),
        dim_ambient: ambient,
        dim_g: r.g_basis.dim(),
        dim_zf: r.zf_basis.dim(),
        dim_q: r.q_basis.dim(),
        dim_w: w.dim(),
        dim_w_perp: w_perp.dim(),
        contained,
        dim_intersection,
        stabilizer_dim: stabilizer_dim(r, &point.x)?,
        omega_rank,
        rank_sum: r.rank_sum,
        outcome,
    })
}

/// Samples up to three points from `seed`, stopping at the first with
/// nondegenerate `ω` and trivial stabilizer, and otherwise keeping the most
/// generic one seen.
pub fn coisotropy_check(r: &MatrixRealization, seed: u64) -> Result<CoisotropyReport, VerifyError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best: Option<CoisotropyReport> = None;
    for attempt in 0..MAX_ATTEMPTS {
        let point = SlicePoint::sample(r, &mut rng, seed);
        let report = coisotropy_at(r, &point, attempt)?;
        let done = report.omega_rank == report.dim_ambient && report.stabilizer_dim == 0;
        let better = best
            .as_ref()
            .is_none_or(|b| (report.omega_rank, report.dim_w) > (b.omega_rank, b.dim_w));
        if better {
            best = Some(report);
        }
        if done {
            break;
        }
    }
    Ok(best.expect("at least one attempt"))
}
