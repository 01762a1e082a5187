//! Integer partitions as Jordan types of nilpotent matrices: duals,
//! multiplicities, parity rules per classical family, hooks, enumeration.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::liealg::ClassicalKind;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("partition parts must be positive")]
    ZeroPart,
    #[error("partition parts must be weakly decreasing: {0:?}")]
    NotDecreasing(Vec<usize>),
    #[error("cannot parse partition {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

/// Weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, PartitionError> {
        if parts.contains(&0) {
            return Err(PartitionError::ZeroPart);
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartitionError::NotDecreasing(parts));
        }
        Ok(Partition { parts })
    }

    /// Sorts `parts` into weakly decreasing order and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// `(1^n)`, the Jordan type of the zero matrix.
    pub fn ones(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    /// `(m, 1^k)`.
    pub fn hook(m: usize, k: usize) -> Self {
        let mut parts = vec![m];
        parts.extend(std::iter::repeat_n(1, k));
        Partition::from_unsorted(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn largest(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Entry `i` counted from 1, reading past the end as 0.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// Transpose of the Young diagram: `mu_i = #{j : parts[j] >= i}`.
    pub fn dual(&self) -> Partition {
        let parts = (1..=self.largest())
            .map(|i| self.parts.iter().take_while(|&&p| p >= i).count())
            .collect();
        Partition { parts }
    }

    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    pub fn multiplicity(&self, part: usize) -> usize {
        self.parts.iter().filter(|&&p| p == part).count()
    }

    pub fn is_zero_type(&self) -> bool {
        self.parts.iter().all(|&p| p == 1)
    }

    pub fn count_odd_parts(&self) -> usize {
        self.parts.iter().filter(|&&p| p % 2 == 1).count()
    }

    /// `(n, k)` when the partition is `(n - k, 1^k)` with `n - k >= 2`.
    pub fn hook_parameters(&self) -> Option<(usize, usize)> {
        let (&head, tail) = self.parts.split_first()?;
        if head < 2 || tail.iter().any(|&p| p != 1) {
            return None;
        }
        Some((self.size(), tail.len()))
    }

    pub fn is_valid_jordan_type(&self, kind: ClassicalKind) -> bool {
        let parity_with_even_multiplicity = match kind {
            ClassicalKind::Gl => return true,
            ClassicalKind::Sp => 1,
            ClassicalKind::So => 0,
        };
        self.multiplicities()
            .iter()
            .all(|(&part, &mult)| part % 2 != parity_with_even_multiplicity || mult % 2 == 0)
    }

    /// Comma-separated text form, e.g. `5,1,1`.
    pub fn to_text(&self) -> String {
        let parts: Vec<String> = self.parts.iter().map(usize::to_string).collect();
        parts.join(",")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_text())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

/// Parses `5,1,1`, `3,1^3`, `2^4`, with optional surrounding parentheses.
impl FromStr for Partition {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |reason: &str| PartitionError::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let body = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if body.is_empty() {
            return Err(err("empty partition"));
        }
        let mut parts = Vec::new();
        for token in body.split(',') {
            let token = token.trim();
            let (base, exp) = match token.split_once('^') {
                Some((b, e)) => (b.trim(), e.trim()),
                None => (token, "1"),
            };
            let base: usize = base.parse().map_err(|_| err("part is not an integer"))?;
            let exp: usize = exp.parse().map_err(|_| err("exponent is not an integer"))?;
            if base == 0 {
                return Err(err("parts must be positive"));
            }
            parts.extend(std::iter::repeat_n(base, exp));
        }
        if parts.is_empty() {
            return Err(err("empty partition"));
        }
        Partition::new(parts).map_err(|e| err(&e.to_string()))
    }
}

/// All partitions of `n` in reverse-lexicographic order, `(n)` first.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        for p in (1..=remaining.min(max)).rev() {
            prefix.push(p);
            rec(remaining - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(n, n, &mut Vec::new(), &mut out);
    }
    out
}

/// Valid Jordan types of size `n` for a classical family, reverse-lex.
pub fn jordan_types(kind: ClassicalKind, n: usize) -> Vec<Partition> {
    partitions_of(n)
        .into_iter()
        .filter(|p| p.is_valid_jordan_type(kind))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::BTreeSet;

    fn p(xs: &[usize]) -> Partition {
        Partition::new(xs.to_vec()).unwrap()
    }

    #[test]
    fn dual_examples() {
        assert_eq!(p(&[3, 1, 1]).dual(), p(&[3, 1, 1]));
        assert_eq!(p(&[2, 2]).dual(), p(&[2, 2]));
        assert_eq!(p(&[4, 2, 1]).dual(), p(&[3, 2, 1, 1]));
    }

    #[test]
    fn multiplicity_examples() {
        assert_eq!(p(&[3, 3]).multiplicities(), BTreeMap::from([(3, 2)]));
        assert_eq!(p(&[5, 1, 1]).multiplicities(), BTreeMap::from([(5, 1), (1, 2)]));
        assert_eq!(p(&[4, 2, 1]).multiplicities(), BTreeMap::from([(4, 1), (2, 1), (1, 1)]));
    }

    #[test]
    fn parity_rules() {
        assert!(p(&[3, 3]).is_valid_jordan_type(ClassicalKind::Sp));
        assert!(!p(&[3, 1]).is_valid_jordan_type(ClassicalKind::Sp));
        assert!(p(&[5, 1, 1]).is_valid_jordan_type(ClassicalKind::So));
        assert!(!p(&[2, 1]).is_valid_jordan_type(ClassicalKind::So));
        assert!(p(&[2, 1]).is_valid_jordan_type(ClassicalKind::Gl));
    }

    #[test]
    fn hook_examples() {
        assert_eq!(p(&[3, 1, 1]).hook_parameters(), Some((5, 2)));
        assert_eq!(p(&[2, 2]).hook_parameters(), None);
        assert_eq!(p(&[7, 1, 1, 1, 1]).hook_parameters(), Some((11, 4)));
        assert_eq!(p(&[1, 1, 1]).hook_parameters(), None);
        assert_eq!(p(&[4]).hook_parameters(), Some((4, 0)));
    }

    #[test]
    fn parsing() {
        assert_eq!("5,1,1".parse::<Partition>().unwrap(), p(&[5, 1, 1]));
        assert_eq!("2^4".parse::<Partition>().unwrap(), p(&[2, 2, 2, 2]));
        assert_eq!("(3, 1^3)".parse::<Partition>().unwrap(), p(&[3, 1, 1, 1]));
        assert!("1,2".parse::<Partition>().is_err());
        assert!("".parse::<Partition>().is_err());
        assert!("3,0".parse::<Partition>().is_err());
        assert!("a,1".parse::<Partition>().is_err());
    }

    #[test]
    fn enumeration_order_is_reverse_lex() {
        let got: Vec<String> = partitions_of(4).iter().map(Partition::to_text).collect();
        assert_eq!(got, ["4", "3,1", "2,2", "2,1,1", "1,1,1,1"]);
    }

    /// Independent generator: every multiset of parts in 1..=n with the
    /// right sum, found by counting vectors.
    fn brute_force(n: usize) -> BTreeSet<Vec<usize>> {
        let mut out = BTreeSet::new();
        let mut counts = vec![0usize; n + 1];
        fn go(i: usize, rem: usize, counts: &mut Vec<usize>, out: &mut BTreeSet<Vec<usize>>) {
            if i == 0 {
                if rem == 0 {
                    let mut parts = Vec::new();
                    for (part, &c) in counts.iter().enumerate().rev() {
                        parts.extend(std::iter::repeat_n(part, c));
                    }
                    out.insert(parts);
                }
                return;
            }
            for c in 0..=rem / i {
                counts[i] = c;
                go(i - 1, rem - c * i, counts, out);
            }
            counts[i] = 0;
        }
        go(n, n, &mut counts, &mut out);
        out
    }

    fn brute_force_valid(kind: ClassicalKind, n: usize) -> BTreeSet<Vec<usize>> {
        brute_force(n)
            .into_iter()
            .filter(|parts| {
                let bad_parity = match kind {
                    ClassicalKind::Gl => return true,
                    ClassicalKind::Sp => 1,
                    ClassicalKind::So => 0,
                };
                (1..=n).all(|part| part % 2 != bad_parity || parts.iter().filter(|&&x| x == part).count() % 2 == 0)
            })
            .collect()
    }

    #[test]
    fn enumerator_matches_brute_force() {
        for kind in [ClassicalKind::Gl, ClassicalKind::Sp, ClassicalKind::So] {
            for n in 1..=12 {
                let got: BTreeSet<Vec<usize>> = jordan_types(kind, n).into_iter().map(|p| p.parts().to_vec()).collect();
                assert_eq!(got, brute_force_valid(kind, n), "{kind:?} n={n}");
            }
        }
    }

    fn arb_partition() -> impl Strategy<Value = Partition> {
        proptest::collection::vec(1usize..12, 0..10).prop_map(Partition::from_unsorted)
    }

    proptest! {
        #[test]
        fn dual_is_an_involution_preserving_size(p in arb_partition()) {
            prop_assert_eq!(p.dual().dual(), p.clone());
            prop_assert_eq!(p.dual().size(), p.size());
        }

        #[test]
        fn multiplicities_are_dual_differences(p in arb_partition()) {
            let mu = p.dual();
            for i in 1..=p.largest() {
                prop_assert_eq!(p.multiplicity(i), mu.part(i) - mu.part(i + 1));
            }
        }
    }

    #[test]
    fn dual_involution_exhaustive_to_thirty() {
        for n in 1..=30 {
            for p in partitions_of(n) {
                assert_eq!(p.dual().dual(), p);
                assert_eq!(p.dual().size(), n);
            }
        }
    }
}
