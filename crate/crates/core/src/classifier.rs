//! The dimension criterion for hypersphericity of `G×S_e`, the reduced
//! partition inequalities, and exhaustive sweeps over classical families.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::datasets::ExceptionalOrbitTable;
use crate::liealg::{AlgebraFamily, ClassicalKind, ExceptionalKind, LieError, OrbitDatum, OrbitLabel};
use crate::partitions::{jordan_types, Partition};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error("row {label}: {reason}")]
    InconsistentRow { label: String, reason: String },
}

/// Both sides of `dim G×S_e ≤ dim(G×Q) + rk(g⊕q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub lhs: i64,
    pub rhs: i64,
    /// `rhs − 2` for `GL`, where the diagonal scalar acts trivially; `rhs`
    /// otherwise.
    pub rhs_effective: i64,
    pub slack: i64,
}

impl BoundReport {
    pub fn slack_effective(&self) -> i64 {
        self.lhs - self.rhs_effective
    }

    /// Positive exactly when the orbit is obstructed.
    pub fn governing_slack(&self) -> i64 {
        self.slack_effective()
    }
}

pub fn necessary_bound(o: &OrbitDatum) -> BoundReport {
    let g_dim = o.family.dim() as i64;
    let lhs = g_dim + o.slice_dim as i64;
    let rhs = g_dim + o.centralizer.dim() as i64 + o.family.rank() as i64 + o.centralizer.rank() as i64;
    let rhs_effective = match o.family {
        AlgebraFamily::Gl(_) => rhs - 2,
        _ => rhs,
    };
    BoundReport {
        lhs,
        rhs,
        rhs_effective,
        slack: lhs - rhs,
    }
}

/// The type-specific strict inequality on the dual partition `μ`; `true`
/// means the orbit is not hyperspherical.
pub fn reduced_inequality(kind: ClassicalKind, mu: &Partition) -> bool {
    let parts = mu.parts();
    let sum_sq: i64 = parts.iter().map(|&m| (m * m) as i64).sum();
    let diff_sq: i64 = (1..=mu.len())
        .map(|i| {
            let d = (mu.part(i) - mu.part(i + 1)) as i64;
            d * d
        })
        .sum();
    let mu1 = mu.part(1) as i64;
    // Sums over 1-based odd and even indices.
    let odd: i64 = parts.iter().step_by(2).map(|&m| m as i64).sum();
    let even: i64 = parts.iter().skip(1).step_by(2).map(|&m| m as i64).sum();
    match kind {
        ClassicalKind::Gl => sum_sq - (odd + even) > diff_sq + mu1 - 2,
        ClassicalKind::Sp => sum_sq - 2 * odd > diff_sq,
        ClassicalKind::So => sum_sq - 2 * mu1 - 2 * even > diff_sq,
    }
}

/// Where a low-rank exception is sent by an isomorphism of Lie algebras.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IsomorphismTarget {
    pub description: String,
    #[serde(skip)]
    pub image: Option<(AlgebraFamily, Partition)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "detail")]
pub enum Status {
    ZeroOrbit,
    RegularOrbit,
    HypersphericalHook,
    HypersphericalSpecial(String),
    HypersphericalViaIsomorphism(IsomorphismTarget),
    NotHyperspherical,
    /// Passes the bound without being on any known list.
    Candidate,
}

impl Status {
    pub fn name(&self) -> &'static str {
        match self {
            Status::ZeroOrbit => "ZeroOrbit",
            Status::RegularOrbit => "RegularOrbit",
            Status::HypersphericalHook => "HypersphericalHook",
            Status::HypersphericalSpecial(_) => "HypersphericalSpecial",
            Status::HypersphericalViaIsomorphism(_) => "HypersphericalViaIsomorphism",
            Status::NotHyperspherical => "NotHyperspherical",
            Status::Candidate => "Candidate",
        }
    }

    pub fn detail(&self) -> Option<&str> {
        match self {
            Status::HypersphericalSpecial(name) => Some(name),
            Status::HypersphericalViaIsomorphism(t) => Some(&t.description),
            _ => None,
        }
    }

    pub fn is_hyperspherical(&self) -> bool {
        !matches!(self, Status::NotHyperspherical | Status::Candidate)
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.detail() {
            Some(d) => write!(f, "{}({d})", self.name()),
            None => f.write_str(self.name()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub orbit: OrbitDatum,
    pub status: Status,
    pub bound: BoundReport,
}

pub const SP6_33: &str = "sp6 (3,3)";
pub const G2_SHORT_ROOT: &str = "g2 Ã1";

fn jordan(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).expect("hard-coded partition")
}

/// The finite non-hook exceptions of each classical family, with their
/// size fixed by the partition itself.
pub fn known_exceptions(kind: ClassicalKind) -> Vec<Partition> {
    let lists: &[&[usize]] = match kind {
        ClassicalKind::Gl => &[&[2, 2]],
        ClassicalKind::Sp => &[&[2, 2], &[3, 3]],
        ClassicalKind::So => &[&[2, 2], &[2, 2, 1], &[2, 2, 1, 1], &[3, 3], &[2, 2, 2, 2], &[4, 4]],
    };
    lists.iter().map(|p| jordan(p)).collect()
}

fn exception_status(family: AlgebraFamily, p: &Partition) -> Option<Status> {
    let via = |description: &str, image: Option<(AlgebraFamily, &[usize])>| {
        Some(Status::HypersphericalViaIsomorphism(IsomorphismTarget {
            description: description.to_string(),
            image: image.map(|(g, parts)| (g, jordan(parts))),
        }))
    };
    match (family, p.parts()) {
        (AlgebraFamily::Gl(4), [2, 2]) => via(
            "gl₄ ≅ so₆⊕C: (3,1³) in so₆",
            Some((AlgebraFamily::So(6), &[3, 1, 1, 1])),
        ),
        (AlgebraFamily::Sp(4), [2, 2]) => via("sp₄ ≅ so₅: (3,1²) in so₅", Some((AlgebraFamily::So(5), &[3, 1, 1]))),
        (AlgebraFamily::Sp(6), [3, 3]) => Some(Status::HypersphericalSpecial(SP6_33.to_string())),
        (AlgebraFamily::So(4), [2, 2]) => via("so₄ ≅ sl₂⊕sl₂: (2)⊕(1²)", None),
        (AlgebraFamily::So(5), [2, 2, 1]) => via("so₅ ≅ sp₄: (2,1²) in sp₄", Some((AlgebraFamily::Sp(4), &[2, 1, 1]))),
        (AlgebraFamily::So(6), [2, 2, 1, 1]) => {
            via("so₆ ≅ sl₄: (2,1²) in sl₄", Some((AlgebraFamily::Gl(4), &[2, 1, 1])))
        }
        (AlgebraFamily::So(6), [3, 3]) => via("so₆ ≅ sl₄: (3,1) in sl₄", Some((AlgebraFamily::Gl(4), &[3, 1]))),
        (AlgebraFamily::So(8), [4, 4]) => via("triality ↦ (5,1³)", Some((AlgebraFamily::So(8), &[5, 1, 1, 1]))),
        (AlgebraFamily::So(8), [2, 2, 2, 2]) => {
            via("triality ↦ (3,1⁵)", Some((AlgebraFamily::So(8), &[3, 1, 1, 1, 1, 1])))
        }
        _ => None,
    }
}

fn is_g2_short_root(kind: ExceptionalKind, label: &str) -> bool {
    kind == ExceptionalKind::G2 && matches!(label.trim(), "Ã1" | "~A1" | "A1~")
}

pub fn classify(o: &OrbitDatum) -> Verdict {
    let bound = necessary_bound(o);
    let status = if o.is_zero_orbit() {
        Status::ZeroOrbit
    } else if o.is_regular() {
        Status::RegularOrbit
    } else {
        match &o.label {
            OrbitLabel::Jordan { jordan_type, .. } => {
                if jordan_type.hook_parameters().is_some() {
                    Status::HypersphericalHook
                } else if let Some(s) = exception_status(o.family, jordan_type) {
                    s
                } else if bound.governing_slack() > 0 {
                    Status::NotHyperspherical
                } else {
                    Status::Candidate
                }
            }
            OrbitLabel::Named(label) => match o.family {
                AlgebraFamily::Exceptional(k) if is_g2_short_root(k, label) => {
                    Status::HypersphericalSpecial(G2_SHORT_ROOT.to_string())
                }
                _ if bound.governing_slack() > 0 => Status::NotHyperspherical,
                _ => Status::Candidate,
            },
        }
    };
    Verdict {
        orbit: o.clone(),
        status,
        bound,
    }
}

pub fn classify_jordan(family: AlgebraFamily, p: &Partition) -> Result<Verdict, ClassifyError> {
    Ok(classify(&OrbitDatum::classical(family, p.clone())?))
}

/// One verdict per valid Jordan type, in reverse-lex order.
pub fn enumerate_and_classify(family: AlgebraFamily) -> Result<Vec<Verdict>, ClassifyError> {
    let kind = family.kind().ok_or(LieError::NotClassical { family })?;
    let n = family.natural_dim().unwrap_or(0);
    if n == 0 {
        return Err(LieError::InvalidGroup(format!("{family} is trivial")).into());
    }
    jordan_types(kind, n)
        .into_par_iter()
        .map(|p| classify_jordan(family, &p))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub family: AlgebraFamily,
    pub jordan_type: Partition,
    pub reduced: bool,
    pub slack_effective: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub kind: ClassicalKind,
    pub n_max: usize,
    pub checked: usize,
    pub mismatches: Vec<Mismatch>,
    /// Non-hook, nonzero types that pass the bound.
    pub exceptions: Vec<Partition>,
    pub expected_exceptions: Vec<Partition>,
    /// Non-hook types passing the bound but lacking an isomorphism override.
    pub unexplained: Vec<Partition>,
}

impl SweepReport {
    pub fn is_consistent(&self) -> bool {
        self.mismatches.is_empty() && self.unexplained.is_empty() && self.exceptions == self.expected_exceptions
    }

    pub fn exceptions_line(&self) -> String {
        let mut items = vec!["hooks".to_string()];
        items.extend(self.exceptions.iter().map(Partition::to_string));
        format!("exceptions: {}", items.join(", "))
    }
}

impl fmt::Display for SweepReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "family: {}  n_max: {}  checked: {}",
            self.kind, self.n_max, self.checked
        )?;
        writeln!(f, "{}", self.exceptions_line())?;
        for m in &self.mismatches {
            writeln!(
                f,
                "mismatch: {} {} reduced={} slack_effective={}",
                m.family, m.jordan_type, m.reduced, m.slack_effective
            )?;
        }
        if self.exceptions != self.expected_exceptions {
            let expected: Vec<String> = self.expected_exceptions.iter().map(Partition::to_string).collect();
            writeln!(f, "expected exceptions: {}", expected.join(", "))?;
        }
        for p in &self.unexplained {
            writeln!(f, "unexplained: {p}")?;
        }
        write!(f, "result: {}", if self.is_consistent() { "ok" } else { "MISMATCH" })
    }
}

fn families_of_size(kind: ClassicalKind, n: usize) -> Option<AlgebraFamily> {
    AlgebraFamily::classical(kind, n).ok()
}

fn exception_order(a: &Partition, b: &Partition) -> std::cmp::Ordering {
    a.size().cmp(&b.size()).then_with(|| b.parts().cmp(a.parts()))
}

/// Compares the reduced inequality with the direct bound for every valid
/// Jordan type of size at most `n_max`, and collects the exceptions.
pub fn sweep_inequality_proof(kind: ClassicalKind, n_max: usize) -> SweepReport {
    struct Row {
        family: AlgebraFamily,
        p: Partition,
        reduced: bool,
        slack: i64,
        exceptional: bool,
        explained: bool,
    }
    let rows: Vec<Row> = (1..=n_max)
        .into_par_iter()
        .filter_map(|n| families_of_size(kind, n).map(|g| (n, g)))
        .flat_map_iter(|(n, family)| {
            jordan_types(kind, n).into_iter().map(move |p| {
                let mu = p.dual();
                // Duals of the shape (a,2,1) never come from a symplectic Jordan type.
                assert!(
                    !(kind == ClassicalKind::Sp && mu.len() == 3 && mu.part(2) == 2 && mu.part(3) == 1),
                    "unreachable dual {mu} produced from {p}"
                );
                let datum = OrbitDatum::classical(family, p.clone()).expect("enumerated types are valid");
                let bound = necessary_bound(&datum);
                let reduced = reduced_inequality(kind, &mu);
                let exceptional = !reduced && p.hook_parameters().is_none() && !p.is_zero_type();
                Row {
                    family,
                    reduced,
                    slack: bound.slack_effective(),
                    exceptional,
                    explained: exception_status(family, &p).is_some(),
                    p,
                }
            })
        })
        .collect();

    let mismatches = rows
        .iter()
        .filter(|r| r.reduced != (r.slack > 0))
        .map(|r| Mismatch {
            family: r.family,
            jordan_type: r.p.clone(),
            reduced: r.reduced,
            slack_effective: r.slack,
        })
        .collect();
    let mut exceptions: Vec<Partition> = rows.iter().filter(|r| r.exceptional).map(|r| r.p.clone()).collect();
    exceptions.sort_by(exception_order);
    let unexplained = rows
        .iter()
        .filter(|r| r.exceptional && !r.explained)
        .map(|r| r.p.clone())
        .collect();
    let mut expected_exceptions: Vec<Partition> = known_exceptions(kind)
        .into_iter()
        .filter(|p| p.size() <= n_max)
        .collect();
    expected_exceptions.sort_by(exception_order);
    SweepReport {
        kind,
        n_max,
        checked: rows.len(),
        mismatches,
        exceptions,
        expected_exceptions,
        unexplained,
    }
}

/// Bound report for every row of an exceptional orbit table.
pub fn scan_exceptional(table: &ExceptionalOrbitTable) -> Result<Vec<Verdict>, ClassifyError> {
    let family = AlgebraFamily::Exceptional(table.algebra);
    table
        .rows
        .iter()
        .map(|row| {
            if row.orbit_dim > family.dim() {
                return Err(ClassifyError::InconsistentRow {
                    label: row.label.clone(),
                    reason: format!(
                        "orbit dimension {} exceeds dim {family} = {}",
                        row.orbit_dim,
                        family.dim()
                    ),
                });
            }
            let datum = OrbitDatum {
                family,
                label: OrbitLabel::Named(row.label.clone()),
                slice_dim: family.dim() - row.orbit_dim,
                orbit_dim: row.orbit_dim,
                centralizer: row.centralizer.clone(),
                effective_centralizer: row.centralizer.clone(),
            };
            Ok(classify(&datum))
        })
        .collect()
}

/// `lhs − (dim G + dim Q) = rk G + rk Q` style identity, evaluated with the
/// effective centralizer.
pub fn identity_line(v: &Verdict) -> String {
    let o = &v.orbit;
    let lhs = v.bound.lhs;
    let group = (o.family.dim() + o.effective_centralizer.dim()) as i64;
    let (rg, rq) = (o.family.rank(), o.effective_centralizer.rank());
    let rel = match (lhs - group).cmp(&((rg + rq) as i64)) {
        std::cmp::Ordering::Equal => "=",
        std::cmp::Ordering::Greater => ">",
        std::cmp::Ordering::Less => "<",
    };
    format!("{lhs} − {group} = {} {rel} {rg} + {rq}", lhs - group)
}
