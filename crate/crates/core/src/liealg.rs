//! Dimension and rank arithmetic for classical and exceptional groups,
//! Slodowy slice dimensions and reductive centralizers of nilpotent orbits.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::partitions::Partition;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("{partition} is not a Jordan type for {family}")]
    InvalidJordanType {
        family: AlgebraFamily,
        partition: Partition,
    },
    #[error("{family} has no nilpotent orbits indexed by partitions")]
    NotClassical { family: AlgebraFamily },
    #[error("invalid group: {0}")]
    InvalidGroup(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ClassicalKind {
    Gl,
    Sp,
    So,
}

impl fmt::Display for ClassicalKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClassicalKind::Gl => "GL",
            ClassicalKind::Sp => "Sp",
            ClassicalKind::So => "SO",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ExceptionalKind {
    G2,
    F4,
    E6,
    E7,
    E8,
}

impl ExceptionalKind {
    pub fn dim(self) -> usize {
        match self {
            ExceptionalKind::G2 => 14,
            ExceptionalKind::F4 => 52,
            ExceptionalKind::E6 => 78,
            ExceptionalKind::E7 => 133,
            ExceptionalKind::E8 => 248,
        }
    }

    pub fn rank(self) -> usize {
        match self {
            ExceptionalKind::G2 => 2,
            ExceptionalKind::F4 => 4,
            ExceptionalKind::E6 => 6,
            ExceptionalKind::E7 => 7,
            ExceptionalKind::E8 => 8,
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "G2" => Some(ExceptionalKind::G2),
            "F4" => Some(ExceptionalKind::F4),
            "E6" => Some(ExceptionalKind::E6),
            "E7" => Some(ExceptionalKind::E7),
            "E8" => Some(ExceptionalKind::E8),
            _ => None,
        }
    }
}

impl fmt::Display for ExceptionalKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// A reductive group `G`. Classical groups carry the dimension of their
/// natural representation: `Sp(6)` is `Sp_6`, of rank 3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AlgebraFamily {
    Gl(usize),
    Sp(usize),
    So(usize),
    Exceptional(ExceptionalKind),
}

impl AlgebraFamily {
    pub fn classical(kind: ClassicalKind, natural_dim: usize) -> Result<Self, LieError> {
        match kind {
            ClassicalKind::Gl => Ok(AlgebraFamily::Gl(natural_dim)),
            ClassicalKind::Sp if natural_dim.is_multiple_of(2) => Ok(AlgebraFamily::Sp(natural_dim)),
            ClassicalKind::Sp => Err(LieError::InvalidGroup(format!(
                "Sp({natural_dim}) needs an even-dimensional space"
            ))),
            ClassicalKind::So => Ok(AlgebraFamily::So(natural_dim)),
        }
    }

    pub fn dim(&self) -> usize {
        match *self {
            AlgebraFamily::Gl(n) => n * n,
            AlgebraFamily::Sp(m) => m * (m + 1) / 2,
            AlgebraFamily::So(m) => m * m.saturating_sub(1) / 2,
            AlgebraFamily::Exceptional(k) => k.dim(),
        }
    }

    pub fn rank(&self) -> usize {
        match *self {
            AlgebraFamily::Gl(n) => n,
            AlgebraFamily::Sp(m) | AlgebraFamily::So(m) => m / 2,
            AlgebraFamily::Exceptional(k) => k.rank(),
        }
    }

    pub fn kind(&self) -> Option<ClassicalKind> {
        match self {
            AlgebraFamily::Gl(_) => Some(ClassicalKind::Gl),
            AlgebraFamily::Sp(_) => Some(ClassicalKind::Sp),
            AlgebraFamily::So(_) => Some(ClassicalKind::So),
            AlgebraFamily::Exceptional(_) => None,
        }
    }

    pub fn natural_dim(&self) -> Option<usize> {
        match *self {
            AlgebraFamily::Gl(n) | AlgebraFamily::Sp(n) | AlgebraFamily::So(n) => Some(n),
            AlgebraFamily::Exceptional(_) => None,
        }
    }

    /// Langlands dual group.
    pub fn langlands_dual(&self) -> AlgebraFamily {
        match *self {
            AlgebraFamily::Sp(m) => AlgebraFamily::So(m + 1),
            AlgebraFamily::So(m) if m % 2 == 1 => AlgebraFamily::Sp(m - 1),
            other => other,
        }
    }

    /// Jordan type of the regular nilpotent orbit.
    pub fn regular_jordan_type(&self) -> Option<Partition> {
        let parts = match *self {
            AlgebraFamily::Gl(n) | AlgebraFamily::Sp(n) => vec![n],
            AlgebraFamily::So(m) if m % 2 == 1 => vec![m],
            AlgebraFamily::So(m) if m >= 2 => vec![m - 1, 1],
            AlgebraFamily::So(_) => vec![],
            AlgebraFamily::Exceptional(_) => return None,
        };
        Some(Partition::from_unsorted(parts))
    }

    pub fn check_jordan_type(&self, p: &Partition) -> Result<(), LieError> {
        let invalid = || LieError::InvalidJordanType {
            family: *self,
            partition: p.clone(),
        };
        let kind = self.kind().ok_or(LieError::NotClassical { family: *self })?;
        if Some(p.size()) != self.natural_dim() || !p.is_valid_jordan_type(kind) {
            return Err(invalid());
        }
        Ok(())
    }
}

impl fmt::Display for AlgebraFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraFamily::Gl(n) => write!(f, "GL({n})"),
            AlgebraFamily::Sp(n) => write!(f, "Sp({n})"),
            AlgebraFamily::So(n) => write!(f, "SO({n})"),
            AlgebraFamily::Exceptional(k) => write!(f, "{k}"),
        }
    }
}

impl Serialize for AlgebraFamily {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// One simple or abelian factor of a reductive group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Factor {
    Gl(usize),
    Sl(usize),
    Sp(usize),
    So(usize),
    Torus(usize),
    Exceptional(ExceptionalKind),
}

impl Factor {
    pub fn dim(&self) -> usize {
        match *self {
            Factor::Gl(n) => n * n,
            Factor::Sl(n) => (n * n).saturating_sub(1),
            Factor::Sp(m) => AlgebraFamily::Sp(m).dim(),
            Factor::So(m) => AlgebraFamily::So(m).dim(),
            Factor::Torus(r) => r,
            Factor::Exceptional(k) => k.dim(),
        }
    }

    pub fn rank(&self) -> usize {
        match *self {
            Factor::Gl(n) => n,
            Factor::Sl(n) => n.saturating_sub(1),
            Factor::Sp(m) | Factor::So(m) => m / 2,
            Factor::Torus(r) => r,
            Factor::Exceptional(k) => k.rank(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.dim() == 0
    }

    /// Parses a centralizer factor: Cartan labels (`A1`, `B3`, `C2`, `D4`,
    /// `G2`, `T1`) or group names (`GL2`, `SL2`, `Sp6`, `SO7`).
    pub fn parse(s: &str) -> Option<Factor> {
        let s = s.trim();
        if let Some(k) = ExceptionalKind::parse(s) {
            return Some(Factor::Exceptional(k));
        }
        let upper = s.to_ascii_uppercase();
        let split = upper.find(|c: char| c.is_ascii_digit())?;
        let (name, num) = upper.split_at(split);
        let n: usize = num.parse().ok()?;
        match name {
            "A" => Some(Factor::Sl(n + 1)),
            "B" => Some(Factor::So(2 * n + 1)),
            "C" => Some(Factor::Sp(2 * n)),
            "D" => Some(Factor::So(2 * n)),
            "T" => Some(Factor::Torus(n)),
            "GL" => Some(Factor::Gl(n)),
            "SL" => Some(Factor::Sl(n)),
            "SP" if n.is_multiple_of(2) => Some(Factor::Sp(n)),
            "SO" => Some(Factor::So(n)),
            _ => None,
        }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Factor::Gl(n) => write!(f, "GL({n})"),
            Factor::Sl(n) => write!(f, "SL({n})"),
            Factor::Sp(n) => write!(f, "Sp({n})"),
            Factor::So(n) => write!(f, "SO({n})"),
            Factor::Torus(r) => write!(f, "T{r}"),
            Factor::Exceptional(k) => write!(f, "{k}"),
        }
    }
}

/// Formal product of group factors, optionally divided by central tori
/// that act trivially.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ReductiveProduct {
    factors: Vec<Factor>,
    central_quotient: usize,
}

impl ReductiveProduct {
    pub fn trivial() -> Self {
        Self::default()
    }

    /// Drops size-zero factors such as `SO(1)` or `GL(0)`.
    pub fn new(factors: Vec<Factor>) -> Self {
        ReductiveProduct {
            factors: factors.into_iter().filter(|f| !f.is_trivial()).collect(),
            central_quotient: 0,
        }
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn central_quotient(&self) -> usize {
        self.central_quotient
    }

    pub fn dim(&self) -> usize {
        self.factors.iter().map(Factor::dim).sum::<usize>() - self.central_quotient
    }

    pub fn rank(&self) -> usize {
        self.factors.iter().map(Factor::rank).sum::<usize>() - self.central_quotient
    }

    pub fn is_trivial(&self) -> bool {
        self.dim() == 0
    }

    /// Removes one central `GL(1)` worth of torus: absorbed by a `GL(1)`
    /// factor when there is one, recorded as a quotient otherwise.
    pub fn quotient_by_scalar(&self) -> ReductiveProduct {
        let mut out = self.clone();
        if let Some(pos) = out.factors.iter().position(|f| *f == Factor::Gl(1)) {
            out.factors.remove(pos);
        } else {
            out.central_quotient += 1;
        }
        out
    }
}

impl fmt::Display for ReductiveProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            f.write_str("1")?;
        } else {
            let names: Vec<String> = self.factors.iter().map(Factor::to_string).collect();
            f.write_str(&names.join("×"))?;
        }
        for _ in 0..self.central_quotient {
            f.write_str("/C×")?;
        }
        Ok(())
    }
}

impl Serialize for ReductiveProduct {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Dimension of the Slodowy slice `S_e` for a nilpotent of Jordan type `p`.
pub fn slice_dim(family: AlgebraFamily, p: &Partition) -> Result<usize, LieError> {
    family.check_jordan_type(p)?;
    let mu = p.dual();
    let sum_sq: usize = mu.parts().iter().map(|m| m * m).sum();
    let dim = match family {
        AlgebraFamily::Gl(n) => {
            let pairs: usize = mu.parts().iter().map(|m| m * (m.saturating_sub(1)) / 2).sum();
            let by_pairs = n + 2 * pairs;
            debug_assert_eq!(by_pairs, sum_sq);
            by_pairs
        }
        AlgebraFamily::Sp(_) | AlgebraFamily::So(_) => {
            let alternating = alternating_sum(&mu);
            let odd = p.count_odd_parts() as i64;
            debug_assert_eq!(alternating, odd);
            let sign = if family.kind() == Some(ClassicalKind::Sp) {
                1
            } else {
                -1
            };
            let twice = sum_sq as i64 + sign * alternating;
            debug_assert_eq!(twice, sum_sq as i64 + sign * odd);
            (twice / 2) as usize
        }
        AlgebraFamily::Exceptional(_) => unreachable!("rejected by check_jordan_type"),
    };
    Ok(dim)
}

/// `mu_1 - mu_2 + mu_3 - ...`.
pub(crate) fn alternating_sum(mu: &Partition) -> i64 {
    mu.parts()
        .iter()
        .enumerate()
        .map(|(i, &m)| if i % 2 == 0 { m as i64 } else { -(m as i64) })
        .sum()
}

/// Reductive centralizer `Q` of the sl2-triple, one factor per part size
/// with nonzero multiplicity.
pub fn reductive_centralizer(family: AlgebraFamily, p: &Partition) -> Result<ReductiveProduct, LieError> {
    family.check_jordan_type(p)?;
    let mu = p.dual();
    let factors = (1..=mu.len())
        .map(|i| {
            let m = mu.part(i) - mu.part(i + 1);
            match (family, i % 2 == 1) {
                (AlgebraFamily::Gl(_), _) => Factor::Gl(m),
                (AlgebraFamily::Sp(_), true) | (AlgebraFamily::So(_), false) => Factor::Sp(m),
                (AlgebraFamily::Sp(_), false) | (AlgebraFamily::So(_), true) => Factor::So(m),
                (AlgebraFamily::Exceptional(_), _) => unreachable!("rejected by check_jordan_type"),
            }
        })
        .collect();
    Ok(ReductiveProduct::new(factors))
}

/// Centralizer modulo the trivially acting scalars: for `GL` one central
/// `C×` is removed, other families are unchanged.
pub fn effective_centralizer(family: AlgebraFamily, p: &Partition) -> Result<ReductiveProduct, LieError> {
    let full = reductive_centralizer(family, p)?;
    Ok(match family {
        AlgebraFamily::Gl(_) => full.quotient_by_scalar(),
        _ => full,
    })
}

pub fn orbit_dim(family: AlgebraFamily, p: &Partition) -> Result<usize, LieError> {
    Ok(family.dim() - slice_dim(family, p)?)
}

/// How a nilpotent orbit is labelled: by Jordan type for classical groups,
/// by name for exceptional ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrbitLabel {
    Jordan { jordan_type: Partition, dual: Partition },
    Named(String),
}

impl fmt::Display for OrbitLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrbitLabel::Jordan { jordan_type, .. } => write!(f, "{jordan_type}"),
            OrbitLabel::Named(name) => f.write_str(name),
        }
    }
}

/// Dimension data of one nilpotent orbit and its equivariant slice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitDatum {
    pub family: AlgebraFamily,
    pub label: OrbitLabel,
    pub slice_dim: usize,
    pub orbit_dim: usize,
    pub centralizer: ReductiveProduct,
    pub effective_centralizer: ReductiveProduct,
}

impl OrbitDatum {
    pub fn classical(family: AlgebraFamily, jordan_type: Partition) -> Result<Self, LieError> {
        let slice = slice_dim(family, &jordan_type)?;
        let centralizer = reductive_centralizer(family, &jordan_type)?;
        let effective_centralizer = effective_centralizer(family, &jordan_type)?;
        Ok(OrbitDatum {
            family,
            slice_dim: slice,
            orbit_dim: family.dim() - slice,
            centralizer,
            effective_centralizer,
            label: OrbitLabel::Jordan {
                dual: jordan_type.dual(),
                jordan_type,
            },
        })
    }

    pub fn jordan_type(&self) -> Option<&Partition> {
        match &self.label {
            OrbitLabel::Jordan { jordan_type, .. } => Some(jordan_type),
            OrbitLabel::Named(_) => None,
        }
    }

    pub fn dual(&self) -> Option<&Partition> {
        match &self.label {
            OrbitLabel::Jordan { dual, .. } => Some(dual),
            OrbitLabel::Named(_) => None,
        }
    }

    pub fn is_zero_orbit(&self) -> bool {
        self.orbit_dim == 0
    }

    pub fn is_regular(&self) -> bool {
        self.slice_dim == self.family.rank()
    }

    /// Type-D partitions with only even parts label two orbits with the same
    /// dimension data.
    pub fn is_very_even(&self) -> bool {
        matches!(self.family, AlgebraFamily::So(m) if m % 2 == 0)
            && self
                .jordan_type()
                .is_some_and(|p| !p.is_empty() && p.parts().iter().all(|x| x % 2 == 0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::jordan_types;

    fn p(xs: &[usize]) -> Partition {
        Partition::new(xs.to_vec()).unwrap()
    }

    #[test]
    fn group_constants() {
        let table = [
            (AlgebraFamily::Gl(5), 25, 5),
            (AlgebraFamily::Sp(6), 21, 3),
            (AlgebraFamily::So(7), 21, 3),
            (AlgebraFamily::So(8), 28, 4),
            (AlgebraFamily::Exceptional(ExceptionalKind::G2), 14, 2),
            (AlgebraFamily::Exceptional(ExceptionalKind::F4), 52, 4),
            (AlgebraFamily::Exceptional(ExceptionalKind::E6), 78, 6),
            (AlgebraFamily::Exceptional(ExceptionalKind::E7), 133, 7),
            (AlgebraFamily::Exceptional(ExceptionalKind::E8), 248, 8),
        ];
        for (g, dim, rank) in table {
            assert_eq!((g.dim(), g.rank()), (dim, rank), "{g}");
        }
        for degenerate in [Factor::So(0), Factor::So(1), Factor::Sp(0), Factor::Gl(0)] {
            assert_eq!((degenerate.dim(), degenerate.rank()), (0, 0));
        }
        assert_eq!((Factor::So(2).dim(), Factor::So(2).rank()), (1, 1));
    }

    #[test]
    fn slice_dim_examples() {
        for n in 2..10 {
            for k in 0..n - 1 {
                let hook = Partition::hook(n - k, k);
                assert_eq!(slice_dim(AlgebraFamily::Gl(n), &hook).unwrap(), n + k * k + k);
            }
        }
        assert_eq!(slice_dim(AlgebraFamily::Sp(6), &p(&[3, 3])).unwrap(), 7);
        assert_eq!(slice_dim(AlgebraFamily::So(7), &p(&[5, 1, 1])).unwrap(), 5);
    }

    #[test]
    fn invalid_jordan_type_is_rejected() {
        assert!(matches!(
            slice_dim(AlgebraFamily::Sp(4), &p(&[3, 1])),
            Err(LieError::InvalidJordanType { .. })
        ));
        assert!(slice_dim(AlgebraFamily::Gl(5), &p(&[3, 1])).is_err());
        assert!(reductive_centralizer(AlgebraFamily::So(3), &p(&[2, 1])).is_err());
    }

    #[test]
    fn centralizer_examples() {
        let q = reductive_centralizer(AlgebraFamily::Sp(6), &p(&[3, 3])).unwrap();
        assert_eq!(q.factors(), &[Factor::Sp(2)]);
        assert_eq!((q.dim(), q.rank()), (3, 1));

        let q = reductive_centralizer(AlgebraFamily::Gl(5), &p(&[3, 1, 1])).unwrap();
        let mut factors = q.factors().to_vec();
        factors.sort();
        assert_eq!(factors, [Factor::Gl(1), Factor::Gl(2)]);

        let q = reductive_centralizer(AlgebraFamily::So(8), &p(&[5, 1, 1, 1])).unwrap();
        assert_eq!(q.factors(), &[Factor::So(3)]);
        assert_eq!((q.dim(), q.rank()), (3, 1));
    }

    #[test]
    fn effective_centralizer_examples() {
        let q = effective_centralizer(AlgebraFamily::Gl(5), &p(&[3, 1, 1])).unwrap();
        assert_eq!(q.to_string(), "GL(2)");
        assert_eq!((q.dim(), q.rank()), (4, 2));

        // Full centralizer GL(2) contains the scalars of GL(4); removing them
        // leaves dimension 3 and rank 1.
        let q = effective_centralizer(AlgebraFamily::Gl(4), &p(&[2, 2])).unwrap();
        assert_eq!(q.to_string(), "GL(2)/C×");
        assert_eq!((q.dim(), q.rank()), (3, 1));

        let q = effective_centralizer(AlgebraFamily::Sp(6), &p(&[3, 3])).unwrap();
        assert_eq!(q, reductive_centralizer(AlgebraFamily::Sp(6), &p(&[3, 3])).unwrap());
    }

    #[test]
    fn orbit_dim_examples() {
        assert_eq!(orbit_dim(AlgebraFamily::Gl(4), &p(&[4])).unwrap(), 12);
        assert_eq!(orbit_dim(AlgebraFamily::Sp(6), &p(&[3, 3])).unwrap(), 14);
        assert_eq!(orbit_dim(AlgebraFamily::So(9), &Partition::ones(9)).unwrap(), 0);
        assert_eq!(orbit_dim(AlgebraFamily::Gl(3), &Partition::ones(3)).unwrap(), 0);
    }

    fn families_up_to_rank(r: usize) -> Vec<AlgebraFamily> {
        let mut out = Vec::new();
        for n in 1..=r {
            out.push(AlgebraFamily::Gl(n));
            out.push(AlgebraFamily::Sp(2 * n));
            out.push(AlgebraFamily::So(2 * n));
            out.push(AlgebraFamily::So(2 * n + 1));
        }
        out
    }

    #[test]
    fn slice_formulas_agree_and_orbit_is_transverse() {
        for g in families_up_to_rank(12) {
            let kind = g.kind().unwrap();
            let regular = g.regular_jordan_type().unwrap();
            for lambda in jordan_types(kind, g.natural_dim().unwrap()) {
                let mu = lambda.dual();
                let s = slice_dim(g, &lambda).unwrap();
                let sum_sq: usize = mu.parts().iter().map(|m| m * m).sum();
                let odd = lambda.count_odd_parts();
                match kind {
                    ClassicalKind::Gl => assert_eq!(s, sum_sq),
                    ClassicalKind::Sp => assert_eq!(2 * s, sum_sq + odd),
                    ClassicalKind::So => assert_eq!(2 * s + odd, sum_sq),
                }
                assert_eq!(orbit_dim(g, &lambda).unwrap() + s, g.dim());
                assert!(s >= g.rank());
                assert_eq!(
                    s == g.rank(),
                    lambda == regular || g == AlgebraFamily::So(2),
                    "{g} {lambda}"
                );
            }
        }
    }

    #[test]
    fn centralizer_factor_sizes_count_parts() {
        for g in families_up_to_rank(8) {
            for lambda in jordan_types(g.kind().unwrap(), g.natural_dim().unwrap()) {
                let mu = lambda.dual();
                let sizes: usize = (1..=mu.len()).map(|i| mu.part(i) - mu.part(i + 1)).sum();
                assert_eq!(sizes, lambda.len());
                let q = reductive_centralizer(g, &lambda).unwrap();
                // Symplectic factors always act on even-dimensional multiplicity spaces.
                for f in q.factors() {
                    if let Factor::Sp(m) = f {
                        assert_eq!(m % 2, 0, "{g} {lambda}");
                    }
                }
            }
        }
    }

    #[test]
    fn hook_rank_identity() {
        for g in families_up_to_rank(10) {
            for lambda in jordan_types(g.kind().unwrap(), g.natural_dim().unwrap()) {
                if lambda.hook_parameters().is_none() {
                    continue;
                }
                let s = slice_dim(g, &lambda).unwrap();
                let q = effective_centralizer(g, &lambda).unwrap();
                assert_eq!(s - q.dim(), g.rank() + q.rank(), "{g} {lambda}");
            }
        }
    }

    #[test]
    fn very_even_detection() {
        let d = OrbitDatum::classical(AlgebraFamily::So(8), p(&[4, 4])).unwrap();
        assert!(d.is_very_even());
        let d = OrbitDatum::classical(AlgebraFamily::So(8), p(&[5, 1, 1, 1])).unwrap();
        assert!(!d.is_very_even());
    }
}
