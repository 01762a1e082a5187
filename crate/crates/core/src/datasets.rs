//! Nilpotent orbit tables for exceptional algebras, in a small tab-separated
//! format:
//!
//! ```text
//! # algebra: G2
//! label  dim_orbit  centralizer  component_group
//! Ã1     8          A1           1
//! ```
//!
//! Centralizers are `+`-separated factors (`A1+T1`, `Sp6`) or `0` when
//! trivial. Lines starting with `#` are comments, except for the optional
//! `# algebra:` directive. Without it the algebra is read off the zero orbit
//! row, whose centralizer is the whole group.

use std::collections::HashSet;
use std::path::Path;

use serde::Serialize;
use thiserror::Error;

use crate::liealg::{ExceptionalKind, Factor, ReductiveProduct};

const G2_TSV: &str = include_str!("../data/g2.tsv");
const HEADER: [&str; 4] = ["label", "dim_orbit", "centralizer", "component_group"];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DatasetError {
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("table has no orbit rows")]
    Empty,
    #[error("line {line}: expected header `{}`", HEADER.join("\t"))]
    Header { line: usize },
    #[error("line {line}: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("line {line}: {reason}")]
    Invariant { line: usize, reason: String },
    #[error("cannot determine the algebra; add a `# algebra: <name>` line")]
    UnknownAlgebra,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitRow {
    pub label: String,
    pub orbit_dim: usize,
    pub centralizer: ReductiveProduct,
    pub component_group: Option<String>,
    /// Line number in the source text.
    #[serde(skip)]
    pub line: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExceptionalOrbitTable {
    pub algebra: ExceptionalKind,
    pub rows: Vec<OrbitRow>,
}

pub fn load_table(path: impl AsRef<Path>) -> Result<ExceptionalOrbitTable, DatasetError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| DatasetError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    parse_table(&text)
}

pub fn builtin_g2() -> ExceptionalOrbitTable {
    parse_table(G2_TSV).expect("shipped G2 table is valid")
}

fn parse_centralizer(field: &str, line: usize) -> Result<ReductiveProduct, DatasetError> {
    let field = field.trim();
    if field == "0" || field == "1" || field.is_empty() {
        return Ok(ReductiveProduct::trivial());
    }
    field
        .split(['+', '×'])
        .map(|f| {
            Factor::parse(f).ok_or_else(|| DatasetError::Malformed {
                line,
                reason: format!("unknown centralizer factor `{}`", f.trim()),
            })
        })
        .collect::<Result<Vec<_>, _>>()
        .map(ReductiveProduct::new)
}

pub fn parse_table(text: &str) -> Result<ExceptionalOrbitTable, DatasetError> {
    let mut algebra = None;
    let mut header_seen = false;
    let mut rows = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        if let Some(comment) = trimmed.strip_prefix('#') {
            if let Some(name) = comment.trim().strip_prefix("algebra:") {
                algebra = Some(ExceptionalKind::parse(name).ok_or_else(|| DatasetError::Malformed {
                    line,
                    reason: format!("unknown exceptional algebra `{}`", name.trim()),
                })?);
            }
            continue;
        }
        let fields: Vec<&str> = raw.split('\t').map(str::trim).collect();
        if !header_seen {
            if fields.len() < 3 || fields[..3] != HEADER[..3] {
                return Err(DatasetError::Header { line });
            }
            header_seen = true;
            continue;
        }
        if !(3..=4).contains(&fields.len()) {
            return Err(DatasetError::Malformed {
                line,
                reason: format!("expected 3 or 4 tab-separated fields, found {}", fields.len()),
            });
        }
        let orbit_dim = fields[1].parse().map_err(|_| DatasetError::Malformed {
            line,
            reason: format!("dim_orbit `{}` is not a nonnegative integer", fields[1]),
        })?;
        if fields[0].is_empty() {
            return Err(DatasetError::Malformed {
                line,
                reason: "empty label".into(),
            });
        }
        rows.push(OrbitRow {
            label: fields[0].to_string(),
            orbit_dim,
            centralizer: parse_centralizer(fields[2], line)?,
            component_group: fields.get(3).filter(|s| !s.is_empty()).map(|s| s.to_string()),
            line,
        });
    }
    if rows.is_empty() {
        return Err(DatasetError::Empty);
    }
    let algebra = match algebra {
        Some(a) => a,
        None => rows
            .iter()
            .find(|r| r.orbit_dim == 0)
            .and_then(|r| match r.centralizer.factors() {
                [Factor::Exceptional(k)] => Some(*k),
                _ => None,
            })
            .ok_or(DatasetError::UnknownAlgebra)?,
    };
    let table = ExceptionalOrbitTable { algebra, rows };
    validate(&table)?;
    Ok(table)
}

pub fn validate(table: &ExceptionalOrbitTable) -> Result<(), DatasetError> {
    let (dim, rank) = (table.algebra.dim(), table.algebra.rank());
    let mut labels = HashSet::new();
    let mut previous = 0;
    for row in &table.rows {
        let fail = |reason: String| DatasetError::Invariant { line: row.line, reason };
        if row.orbit_dim % 2 != 0 {
            return Err(fail(format!("orbit dimension {} is odd", row.orbit_dim)));
        }
        if row.orbit_dim > dim - rank {
            return Err(fail(format!(
                "orbit dimension {} exceeds dim − rank = {}",
                row.orbit_dim,
                dim - rank
            )));
        }
        if row.orbit_dim == dim - rank && !row.centralizer.is_trivial() {
            return Err(fail("the regular orbit has a trivial centralizer".into()));
        }
        if row.orbit_dim == 0 && row.centralizer.dim() != dim {
            return Err(fail(format!(
                "the zero orbit has centralizer of dimension {dim}, found {}",
                row.centralizer.dim()
            )));
        }
        if row.orbit_dim < previous {
            return Err(fail("rows must be sorted by dim_orbit".into()));
        }
        if !labels.insert(row.label.as_str()) {
            return Err(fail(format!("duplicate label `{}`", row.label)));
        }
        previous = row.orbit_dim;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    const HEAD: &str = "label\tdim_orbit\tcentralizer\tcomponent_group\n";

    #[test]
    fn builtin_g2_rows() {
        let t = builtin_g2();
        assert_eq!(t.algebra, ExceptionalKind::G2);
        let summary: Vec<(&str, usize, usize)> = t
            .rows
            .iter()
            .map(|r| (r.label.as_str(), r.orbit_dim, r.centralizer.dim()))
            .collect();
        assert_eq!(
            summary,
            [
                ("0", 0, 14),
                ("A1", 6, 3),
                ("Ã1", 8, 3),
                ("G2(a1)", 10, 0),
                ("G2", 12, 0)
            ]
        );
        assert_eq!(t.rows[3].component_group.as_deref(), Some("S3"));
        let slices: Vec<usize> = t.rows.iter().map(|r| 14 - r.orbit_dim).collect();
        assert_eq!(slices, [14, 8, 6, 4, 2]);
    }

    #[test]
    fn odd_orbit_dimension_is_rejected() {
        let text = format!("# algebra: G2\n{HEAD}0\t0\tG2\t1\nX\t13\t0\t1\n");
        assert!(matches!(
            parse_table(&text),
            Err(DatasetError::Invariant { line: 4, .. })
        ));
    }

    #[test]
    fn empty_input_is_rejected() {
        assert_eq!(parse_table(""), Err(DatasetError::Empty));
        assert_eq!(parse_table(&format!("# algebra: G2\n{HEAD}")), Err(DatasetError::Empty));
    }

    #[test]
    fn algebra_is_inferred_from_zero_row() {
        let t = parse_table(&format!("{HEAD}0\t0\tF4\t1\nF4\t48\t0\t1\n")).unwrap();
        assert_eq!(t.algebra, ExceptionalKind::F4);
        assert_eq!(
            parse_table(&format!("{HEAD}F4\t48\t0\t1\n")),
            Err(DatasetError::UnknownAlgebra)
        );
    }

    #[test]
    fn structural_errors() {
        let g2 = "# algebra: G2\n";
        assert!(matches!(
            parse_table("a\tb\tc\n1\t2\t3\n"),
            Err(DatasetError::Header { line: 1 })
        ));
        let unsorted = format!("{g2}{HEAD}A1\t6\tA1\t1\n0\t0\tG2\t1\n");
        assert!(matches!(
            parse_table(&unsorted),
            Err(DatasetError::Invariant { line: 4, .. })
        ));
        let duplicate = format!("{g2}{HEAD}A1\t6\tA1\t1\nA1\t8\tA1\t1\n");
        assert!(matches!(
            parse_table(&duplicate),
            Err(DatasetError::Invariant { line: 4, .. })
        ));
        let regular = format!("{g2}{HEAD}G2\t12\tA1\t1\n");
        assert!(matches!(parse_table(&regular), Err(DatasetError::Invariant { .. })));
        let factor = format!("{g2}{HEAD}A1\t6\tQ7\t1\n");
        assert!(matches!(
            parse_table(&factor),
            Err(DatasetError::Malformed { line: 3, .. })
        ));
        let zero = format!("{g2}{HEAD}0\t0\tA1\t1\n");
        assert!(matches!(parse_table(&zero), Err(DatasetError::Invariant { .. })));
    }

    #[test]
    fn centralizer_syntax() {
        let q = parse_centralizer("A1+T1", 1).unwrap();
        assert_eq!((q.dim(), q.rank()), (4, 2));
        let q = parse_centralizer("Sp6", 1).unwrap();
        assert_eq!((q.dim(), q.rank()), (21, 3));
        assert!(parse_centralizer("0", 1).unwrap().is_trivial());
    }
}
