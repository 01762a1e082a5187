//! Flat verdict records for TSV and JSON-lines output.

use serde::{Deserialize, Serialize};

use crate::classifier::Verdict;
use crate::superdual::s_dual;

pub const TSV_COLUMNS: [&str; 15] = [
    "family",
    "rank",
    "jordan_type",
    "dual",
    "slice_dim",
    "q",
    "lhs",
    "rhs",
    "rhs_effective",
    "slack",
    "slack_effective",
    "status",
    "detail",
    "sdual",
    "note",
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictRecord {
    pub family: String,
    pub rank: usize,
    pub jordan_type: String,
    pub dual: String,
    pub slice_dim: usize,
    pub q: String,
    pub lhs: i64,
    pub rhs: i64,
    pub rhs_effective: i64,
    pub slack: i64,
    pub slack_effective: i64,
    pub status: String,
    pub detail: String,
    pub sdual: String,
    pub note: String,
}

impl VerdictRecord {
    pub fn new(v: &Verdict) -> Self {
        let o = &v.orbit;
        let note = if o.is_very_even() {
            "very even: two orbits".to_string()
        } else {
            String::new()
        };
        VerdictRecord {
            family: o.family.to_string(),
            rank: o.family.rank(),
            jordan_type: o.label.to_string(),
            dual: o.dual().map(|d| d.to_string()).unwrap_or_default(),
            slice_dim: o.slice_dim,
            q: o.effective_centralizer.to_string(),
            lhs: v.bound.lhs,
            rhs: v.bound.rhs,
            rhs_effective: v.bound.rhs_effective,
            slack: v.bound.slack,
            slack_effective: v.bound.slack_effective(),
            status: v.status.name().to_string(),
            detail: v.status.detail().unwrap_or_default().to_string(),
            sdual: s_dual(v).map(|d| d.to_string()).unwrap_or_default(),
            note,
        }
    }

    pub fn tsv_header() -> String {
        TSV_COLUMNS.join("\t")
    }

    pub fn tsv_row(&self) -> String {
        [
            self.family.clone(),
            self.rank.to_string(),
            self.jordan_type.clone(),
            self.dual.clone(),
            self.slice_dim.to_string(),
            self.q.clone(),
            self.lhs.to_string(),
            self.rhs.to_string(),
            self.rhs_effective.to_string(),
            self.slack.to_string(),
            self.slack_effective.to_string(),
            self.status.clone(),
            self.detail.clone(),
            self.sdual.clone(),
            self.note.clone(),
        ]
        .join("\t")
    }

    pub fn json_line(&self) -> String {
        serde_json::to_string(self).expect("records serialize")
    }
}

pub fn to_tsv(verdicts: &[Verdict]) -> String {
    let mut out = VerdictRecord::tsv_header();
    out.push('\n');
    for v in verdicts {
        out.push_str(&VerdictRecord::new(v).tsv_row());
        out.push('\n');
    }
    out
}

pub fn to_json_lines(verdicts: &[Verdict]) -> String {
    verdicts
        .iter()
        .map(|v| VerdictRecord::new(v).json_line() + "\n")
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classifier::enumerate_and_classify;
    use crate::liealg::AlgebraFamily;

    #[test]
    fn tsv_rows_have_all_columns() {
        let verdicts = enumerate_and_classify(AlgebraFamily::Sp(6)).unwrap();
        let tsv = to_tsv(&verdicts);
        let mut lines = tsv.lines();
        assert_eq!(lines.next().unwrap().split('\t').count(), TSV_COLUMNS.len());
        for line in lines {
            assert_eq!(line.split('\t').count(), TSV_COLUMNS.len());
        }
        let special = tsv.lines().find(|l| l.contains("\t(3,3)\t")).unwrap();
        assert!(special.contains("HypersphericalSpecial"));
        assert!(special.ends_with("f(4)\t"));
    }

    #[test]
    fn json_lines_parse_back() {
        let verdicts = enumerate_and_classify(AlgebraFamily::So(8)).unwrap();
        for line in to_json_lines(&verdicts).lines() {
            let value: serde_json::Value = serde_json::from_str(line).unwrap();
            for key in TSV_COLUMNS {
                assert!(value.get(key).is_some(), "{key}");
            }
            let record: VerdictRecord = serde_json::from_str(line).unwrap();
            assert_eq!(record.json_line(), line);
        }
    }
}
