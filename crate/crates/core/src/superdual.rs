//! S-dual basic classical Lie superalgebras of hyperspherical slices.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::classifier::{classify_jordan, IsomorphismTarget, Status, Verdict, G2_SHORT_ROOT, SP6_33};
use crate::liealg::{AlgebraFamily, ClassicalKind};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DualError {
    #[error("{0} is not hyperspherical and has no S-dual")]
    NotHyperspherical(String),
    #[error("{orbit} is only a candidate; no S-dual is assigned")]
    Candidate { orbit: String },
    #[error("parity violation: {0}")]
    Parity(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SuperAlgebra {
    Gl {
        n: usize,
        k: usize,
    },
    /// `osp(m|2n)`, stored with the symplectic size `2n`.
    Osp {
        m: usize,
        sp: usize,
    },
    F4,
    G3,
    D21 {
        alpha: String,
    },
}

impl SuperAlgebra {
    pub fn osp(m: usize, sp: usize) -> Self {
        debug_assert!(sp.is_multiple_of(2));
        SuperAlgebra::Osp { m, sp }
    }

    pub fn dim_even(&self) -> usize {
        match self {
            SuperAlgebra::Gl { n, k } => n * n + k * k,
            SuperAlgebra::Osp { m, sp } => m * m.saturating_sub(1) / 2 + sp * (sp + 1) / 2,
            SuperAlgebra::F4 => 24,
            SuperAlgebra::G3 => 17,
            SuperAlgebra::D21 { .. } => 9,
        }
    }

    pub fn dim_odd(&self) -> usize {
        match self {
            SuperAlgebra::Gl { n, k } => 2 * n * k,
            SuperAlgebra::Osp { m, sp } => m * sp,
            SuperAlgebra::F4 => 16,
            SuperAlgebra::G3 => 14,
            SuperAlgebra::D21 { .. } => 8,
        }
    }

    pub fn even_group(&self) -> String {
        match self {
            SuperAlgebra::Gl { n, k } => format!("GL({n})×GL({k})"),
            SuperAlgebra::Osp { m, sp } => format!("SO({m})×Sp({sp})"),
            SuperAlgebra::F4 => "SL(2)×Spin(7)".into(),
            SuperAlgebra::G3 => "SL(2)×G2".into(),
            SuperAlgebra::D21 { .. } => "SL(2)×SL(2)×SL(2)".into(),
        }
    }
}

impl fmt::Display for SuperAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SuperAlgebra::Gl { n, k } => write!(f, "gl({n}|{k})"),
            SuperAlgebra::Osp { m, sp } => write!(f, "osp({m}|{sp})"),
            SuperAlgebra::F4 => f.write_str("f(4)"),
            SuperAlgebra::G3 => f.write_str("g(3)"),
            SuperAlgebra::D21 { alpha } => write!(f, "D(2,1;{alpha})"),
        }
    }
}

impl Serialize for SuperAlgebra {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("SuperAlgebra", 4)?;
        s.serialize_field("name", &self.to_string())?;
        s.serialize_field("dim_even", &self.dim_even())?;
        s.serialize_field("dim_odd", &self.dim_odd())?;
        s.serialize_field("even_group", &self.even_group())?;
        s.end()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "reference", rename_all = "snake_case")]
pub enum Provenance {
    Proved(&'static str),
    Expected,
    /// Standard dualities for the two extreme orbits.
    Classical,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Proved(r) => write!(f, "proved in [{r}]"),
            Provenance::Expected => f.write_str("expected"),
            Provenance::Classical => f.write_str("classical"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DualTarget {
    Super {
        algebra: SuperAlgebra,
    },
    /// The two twisted versions attached to a symplectic hook.
    Twisted {
        options: [SuperAlgebra; 2],
    },
    /// A dual that is not a superalgebra.
    Named {
        text: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SDual {
    pub target: DualTarget,
    pub provenance: Provenance,
}

impl SDual {
    pub fn algebras(&self) -> Vec<&SuperAlgebra> {
        match &self.target {
            DualTarget::Super { algebra } => vec![algebra],
            DualTarget::Twisted { options } => options.iter().collect(),
            DualTarget::Named { .. } => vec![],
        }
    }
}

impl fmt::Display for SDual {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.target {
            DualTarget::Super { algebra } => write!(f, "{algebra}"),
            DualTarget::Twisted { options: [a, b] } => write!(f, "{a} | {b}"),
            DualTarget::Named { text } => f.write_str(text),
        }
    }
}

pub const ZERO_ORBIT_DUAL: &str = "G^∨×G^∨ ↷ T*G^∨";
pub const REGULAR_ORBIT_DUAL: &str = "G^∨ ↷ {0}";

fn named(text: impl Into<String>, provenance: Provenance) -> SDual {
    SDual {
        target: DualTarget::Named { text: text.into() },
        provenance,
    }
}

fn single(algebra: SuperAlgebra, provenance: Provenance) -> SDual {
    SDual {
        target: DualTarget::Super { algebra },
        provenance,
    }
}

fn hook_dual(family: AlgebraFamily, n: usize, k: usize) -> Result<SDual, DualError> {
    let parity = |expect_odd: bool| {
        if (k % 2 == 1) != expect_odd {
            Err(DualError::Parity(format!(
                "{family} hook with {k} trailing ones should have {} k",
                if expect_odd { "odd" } else { "even" }
            )))
        } else {
            Ok(())
        }
    };
    match family {
        AlgebraFamily::Gl(_) => Ok(single(SuperAlgebra::Gl { n, k }, Provenance::Proved("ty"))),
        AlgebraFamily::So(m) if m % 2 == 0 => {
            parity(true)?;
            Ok(single(SuperAlgebra::osp(m, k - 1), Provenance::Expected))
        }
        AlgebraFamily::So(m) => {
            parity(false)?;
            Ok(single(SuperAlgebra::osp(k, m - 1), Provenance::Expected))
        }
        AlgebraFamily::Sp(m) => {
            parity(false)?;
            Ok(SDual {
                target: DualTarget::Twisted {
                    options: [SuperAlgebra::osp(m + 1, m - k), SuperAlgebra::osp(m + 1 - k, m)],
                },
                provenance: Provenance::Expected,
            })
        }
        AlgebraFamily::Exceptional(_) => unreachable!("hooks are classical"),
    }
}

/// The S-dual attached to a hyperspherical verdict.
pub fn s_dual(v: &Verdict) -> Result<SDual, DualError> {
    match &v.status {
        Status::ZeroOrbit => Ok(named(ZERO_ORBIT_DUAL, Provenance::Classical)),
        Status::RegularOrbit => Ok(named(REGULAR_ORBIT_DUAL, Provenance::Classical)),
        Status::HypersphericalHook => {
            let p = v.orbit.jordan_type().expect("hooks carry a Jordan type");
            let (n, k) = p.hook_parameters().expect("hook verdict on a hook partition");
            hook_dual(v.orbit.family, n, k)
        }
        Status::HypersphericalSpecial(name) if name == SP6_33 => Ok(single(SuperAlgebra::F4, Provenance::Expected)),
        Status::HypersphericalSpecial(name) if name == G2_SHORT_ROOT => {
            Ok(single(SuperAlgebra::G3, Provenance::Expected))
        }
        Status::HypersphericalSpecial(name) => Err(DualError::Candidate { orbit: name.clone() }),
        Status::HypersphericalViaIsomorphism(IsomorphismTarget {
            image: Some((g, p)), ..
        }) => {
            let image = classify_jordan(*g, p).expect("isomorphism images are valid Jordan types");
            s_dual(&image)
        }
        Status::HypersphericalViaIsomorphism(IsomorphismTarget { image: None, .. }) => Ok(named(
            format!("sl₂: {REGULAR_ORBIT_DUAL} ⊠ sl₂: {ZERO_ORBIT_DUAL}"),
            Provenance::Classical,
        )),
        Status::NotHyperspherical => Err(DualError::NotHyperspherical(describe(v))),
        Status::Candidate => Err(DualError::Candidate { orbit: describe(v) }),
    }
}

fn describe(v: &Verdict) -> String {
    format!("{} {}", v.orbit.family, v.orbit.label)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum EvenPartCheck {
    Compared {
        expected: usize,
        actual: usize,
        matches: bool,
    },
    NotApplicable,
}

impl EvenPartCheck {
    pub fn holds(&self) -> bool {
        matches!(self, EvenPartCheck::Compared { matches: true, .. })
    }
}

/// For `gl(n|k)` duals of `GL` slices: the even part must have the
/// dimension of `GL_n × Q_eff`.
pub fn check_even_part(sd: &SuperAlgebra, v: &Verdict) -> EvenPartCheck {
    match (sd, v.orbit.family.kind()) {
        (SuperAlgebra::Gl { .. }, Some(ClassicalKind::Gl)) => {
            let expected = v.orbit.family.dim() + v.orbit.effective_centralizer.dim();
            let actual = sd.dim_even();
            EvenPartCheck::Compared {
                expected,
                actual,
                matches: expected == actual,
            }
        }
        _ => EvenPartCheck::NotApplicable,
    }
}

/// Hyperspherical varieties extending beyond a single slice, with known or
/// expected duals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ExtendedCase {
    /// `GL_n×GL_n ↷ T*(GL_n×Cⁿ)`.
    Mirabolic(usize),
    /// `GL_n×GL_{n−1} ↷ T*GL_n`.
    GelfandTsetlin(usize),
    /// `SO_{2m}×SO_{2m−1} ↷ T*SO_{2m}`.
    OrthogonalEven(usize),
    /// `SO_{2m+1}×SO_{2m} ↷ T*SO_{2m+1}`.
    OrthogonalOdd(usize),
    /// `Sp_{2n}×Sp_{2n} ↷ (T*Sp_{2n})×C^{2n}`.
    SymplecticExtension(usize),
}

impl ExtendedCase {
    pub fn description(&self) -> String {
        match *self {
            ExtendedCase::Mirabolic(n) => format!("GL({n})×GL({n}) ↷ T*(GL({n})×C^{n})"),
            ExtendedCase::GelfandTsetlin(n) => format!("GL({n})×GL({}) ↷ T*GL({n})", n - 1),
            ExtendedCase::OrthogonalEven(m) => format!("SO({})×SO({}) ↷ T*SO({})", 2 * m, 2 * m - 1, 2 * m),
            ExtendedCase::OrthogonalOdd(m) => format!("SO({})×SO({}) ↷ T*SO({})", 2 * m + 1, 2 * m, 2 * m + 1),
            ExtendedCase::SymplecticExtension(n) => {
                format!("Sp({})×Sp({}) ↷ (T*Sp({}))×C^{}", 2 * n, 2 * n, 2 * n, 2 * n)
            }
        }
    }

    /// Dimension of the acting group.
    pub fn group_dim(&self) -> usize {
        match *self {
            ExtendedCase::Mirabolic(n) => 2 * n * n,
            ExtendedCase::GelfandTsetlin(n) => n * n + (n - 1) * (n - 1),
            ExtendedCase::OrthogonalEven(m) => AlgebraFamily::So(2 * m).dim() + AlgebraFamily::So(2 * m - 1).dim(),
            ExtendedCase::OrthogonalOdd(m) => AlgebraFamily::So(2 * m + 1).dim() + AlgebraFamily::So(2 * m).dim(),
            ExtendedCase::SymplecticExtension(n) => 2 * AlgebraFamily::Sp(2 * n).dim(),
        }
    }

    pub fn dual(&self) -> SDual {
        match *self {
            ExtendedCase::Mirabolic(n) => single(SuperAlgebra::Gl { n, k: n }, Provenance::Proved("bfgt")),
            ExtendedCase::GelfandTsetlin(n) => single(SuperAlgebra::Gl { n, k: n - 1 }, Provenance::Proved("bfgt")),
            ExtendedCase::OrthogonalEven(m) => single(SuperAlgebra::osp(2 * m, 2 * m - 2), Provenance::Proved("bft1")),
            ExtendedCase::OrthogonalOdd(m) => single(SuperAlgebra::osp(2 * m, 2 * m), Provenance::Proved("bft1")),
            ExtendedCase::SymplecticExtension(n) => {
                single(SuperAlgebra::osp(2 * n + 1, 2 * n), Provenance::Proved("bft2"))
            }
        }
    }

    /// Even-part comparison, for the `gl` duals only.
    pub fn check_even_part(&self) -> EvenPartCheck {
        match self.dual().target {
            DualTarget::Super {
                algebra: a @ SuperAlgebra::Gl { .. },
            } => EvenPartCheck::Compared {
                expected: self.group_dim(),
                actual: a.dim_even(),
                matches: self.group_dim() == a.dim_even(),
            },
            _ => EvenPartCheck::NotApplicable,
        }
    }

    pub fn parse(name: &str, n: usize) -> Option<Self> {
        if n == 0 {
            return None;
        }
        match name {
            "mirabolic" => Some(ExtendedCase::Mirabolic(n)),
            "gelfand-tsetlin" | "gt" if n >= 2 => Some(ExtendedCase::GelfandTsetlin(n)),
            "so-even" => Some(ExtendedCase::OrthogonalEven(n)),
            "so-odd" => Some(ExtendedCase::OrthogonalOdd(n)),
            "sp-extension" => Some(ExtendedCase::SymplecticExtension(n)),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classifier::{enumerate_and_classify, scan_exceptional};
    use crate::datasets::builtin_g2;
    use crate::partitions::Partition;

    fn dual_of(g: AlgebraFamily, xs: &[usize]) -> Result<SDual, DualError> {
        s_dual(&classify_jordan(g, &Partition::new(xs.to_vec()).unwrap()).unwrap())
    }

    #[test]
    fn dimension_formulas() {
        let cases = [
            (SuperAlgebra::Gl { n: 5, k: 2 }, 29, 20),
            (SuperAlgebra::osp(2, 6), 22, 12),
            (SuperAlgebra::osp(1, 2), 3, 2),
            (SuperAlgebra::F4, 24, 16),
            (SuperAlgebra::G3, 17, 14),
            (SuperAlgebra::D21 { alpha: "α".into() }, 9, 8),
        ];
        for (a, even, odd) in cases {
            assert_eq!((a.dim_even(), a.dim_odd()), (even, odd), "{a}");
        }
        // D(2,1;α) deforms osp(4|2).
        assert_eq!(SuperAlgebra::osp(4, 2).dim_even(), 9);
        assert_eq!(SuperAlgebra::osp(4, 2).dim_odd(), 8);
    }

    #[test]
    fn dual_examples() {
        assert_eq!(
            dual_of(AlgebraFamily::Gl(5), &[3, 1, 1]).unwrap().to_string(),
            "gl(5|2)"
        );
        assert_eq!(
            dual_of(AlgebraFamily::So(7), &[5, 1, 1]).unwrap().to_string(),
            "osp(2|6)"
        );
        assert_eq!(dual_of(AlgebraFamily::Sp(6), &[3, 3]).unwrap().to_string(), "f(4)");
        assert_eq!(
            dual_of(AlgebraFamily::So(8), &[5, 1, 1, 1]).unwrap().to_string(),
            "osp(8|2)"
        );
        assert_eq!(dual_of(AlgebraFamily::So(8), &[4, 4]).unwrap().to_string(), "osp(8|2)");
        assert_eq!(
            dual_of(AlgebraFamily::Sp(6), &[2, 1, 1, 1, 1]).unwrap().to_string(),
            "osp(7|2) | osp(3|6)"
        );
        assert_eq!(dual_of(AlgebraFamily::Gl(4), &[2, 2]).unwrap().to_string(), "osp(6|2)");
        assert_eq!(
            dual_of(AlgebraFamily::Gl(4), &[1, 1, 1, 1]).unwrap().to_string(),
            ZERO_ORBIT_DUAL
        );
        assert_eq!(
            dual_of(AlgebraFamily::Gl(4), &[4]).unwrap().to_string(),
            REGULAR_ORBIT_DUAL
        );
        assert!(matches!(
            dual_of(AlgebraFamily::Gl(5), &[3, 2]),
            Err(DualError::NotHyperspherical(_))
        ));
    }

    #[test]
    fn g2_dual() {
        let verdicts = scan_exceptional(&builtin_g2()).unwrap();
        assert_eq!(s_dual(&verdicts[2]).unwrap().to_string(), "g(3)");
        assert!(s_dual(&verdicts[1]).is_err());
    }

    #[test]
    fn gl_even_parts_match_for_hooks() {
        for n in 2..=12 {
            for v in enumerate_and_classify(AlgebraFamily::Gl(n)).unwrap() {
                if v.status != Status::HypersphericalHook {
                    continue;
                }
                let sd = s_dual(&v).unwrap();
                assert!(check_even_part(sd.algebras()[0], &v).holds(), "{}", v.orbit.label);
            }
        }
        let v = classify_jordan(AlgebraFamily::So(7), &"5,1,1".parse().unwrap()).unwrap();
        assert_eq!(
            check_even_part(&SuperAlgebra::osp(2, 6), &v),
            EvenPartCheck::NotApplicable
        );
    }

    #[test]
    fn extended_cases() {
        let m = ExtendedCase::Mirabolic(4);
        assert_eq!(m.dual().to_string(), "gl(4|4)");
        assert!(m.check_even_part().holds());
        assert!(ExtendedCase::GelfandTsetlin(5).check_even_part().holds());
        assert_eq!(ExtendedCase::OrthogonalEven(3).dual().to_string(), "osp(6|4)");
        assert_eq!(ExtendedCase::OrthogonalOdd(3).dual().to_string(), "osp(6|6)");
        assert_eq!(ExtendedCase::SymplecticExtension(2).dual().to_string(), "osp(5|4)");
        assert_eq!(
            ExtendedCase::SymplecticExtension(2).check_even_part(),
            EvenPartCheck::NotApplicable
        );
    }

    #[test]
    fn every_hyperspherical_verdict_has_a_dual_with_even_odd_part() {
        for n in 1..=14 {
            for kind in [ClassicalKind::Gl, ClassicalKind::Sp, ClassicalKind::So] {
                let Ok(g) = AlgebraFamily::classical(kind, n) else {
                    continue;
                };
                for v in enumerate_and_classify(g).unwrap() {
                    if !v.status.is_hyperspherical() {
                        continue;
                    }
                    let sd = s_dual(&v).unwrap();
                    for a in sd.algebras() {
                        assert_eq!(a.dim_odd() % 2, 0, "{a}");
                    }
                }
            }
        }
    }
}
