use std::fmt::Write as _;

use serde_json::json;
use slicescope::classifier::{identity_line, SweepReport, Verdict};
use slicescope::report::{to_json_lines, to_tsv, VerdictRecord};
use slicescope::superdual::{ExtendedCase, SDual};
use slicescope::verifier::CoisotropyReport;

use crate::config::Format;

fn line(out: &mut String, args: std::fmt::Arguments<'_>) {
    out.write_fmt(args).expect("writing to a String");
    out.push('\n');
}

pub fn verdict_table(fmt: Format, title: &str, verdicts: &[Verdict]) -> String {
    match fmt {
        Format::Tsv => to_tsv(verdicts),
        Format::Json => to_json_lines(verdicts),
        Format::Pretty => {
            let mut out = String::new();
            line(&mut out, format_args!("{title}: {} orbits", verdicts.len()));
            for v in verdicts {
                let r = VerdictRecord::new(v);
                let dual = if r.sdual.is_empty() { "-" } else { &r.sdual };
                line(
                    &mut out,
                    format_args!(
                        "{:<14} slack {:>4}  {:<24} {}  [{}]",
                        r.jordan_type,
                        r.slack_effective,
                        dual,
                        v.status,
                        identity_line(v)
                    ),
                );
            }
            out
        }
    }
}

pub fn single_verdict(fmt: Format, v: &Verdict) -> String {
    let r = VerdictRecord::new(v);
    match fmt {
        Format::Tsv => format!("{}\n{}\n", VerdictRecord::tsv_header(), r.tsv_row()),
        Format::Json => r.json_line() + "\n",
        Format::Pretty => {
            let mut out = String::new();
            line(&mut out, format_args!("family:          {}", r.family));
            line(&mut out, format_args!("jordan type:     {}", r.jordan_type));
            line(&mut out, format_args!("dual partition:  {}", r.dual));
            line(&mut out, format_args!("slice dim:       {}", r.slice_dim));
            line(
                &mut out,
                format_args!("centralizer:     {} (effective {})", v.orbit.centralizer, r.q),
            );
            line(
                &mut out,
                format_args!(
                    "bound:           {} vs {} (effective {})",
                    r.lhs, r.rhs, r.rhs_effective
                ),
            );
            line(&mut out, format_args!("slack:           {}", r.slack_effective));
            line(&mut out, format_args!("identity:        {}", identity_line(v)));
            line(&mut out, format_args!("status:          {}", v.status));
            if !r.sdual.is_empty() {
                line(&mut out, format_args!("S-dual:          {}", r.sdual));
            }
            if !r.note.is_empty() {
                line(&mut out, format_args!("note:            {}", r.note));
            }
            out
        }
    }
}

pub fn dual(fmt: Format, v: &Verdict, d: &SDual) -> String {
    let label = v.orbit.label.to_string();
    match fmt {
        Format::Tsv => format!(
            "family\tjordan_type\tsdual\tprovenance\n{}\t{label}\t{d}\t{}\n",
            v.orbit.family, d.provenance
        ),
        Format::Json => {
            json!({"family": v.orbit.family, "jordan_type": label, "sdual": d.to_string(), "detail": d}).to_string()
                + "\n"
        }
        Format::Pretty => format!("{} {label} ↦ {d} ({})\n", v.orbit.family, d.provenance),
    }
}

pub fn extended(fmt: Format, case: &ExtendedCase) -> String {
    let d = case.dual();
    let even = case.check_even_part();
    match fmt {
        Format::Tsv => format!(
            "case\tsdual\tprovenance\teven_part\n{}\t{d}\t{}\t{}\n",
            case.description(),
            d.provenance,
            even.holds()
        ),
        Format::Json => {
            json!({
                "case": case.description(),
                "group_dim": case.group_dim(),
                "sdual": d.to_string(),
                "detail": d,
                "even_part": even,
            })
            .to_string()
                + "\n"
        }
        Format::Pretty => {
            let mut out = format!("{} ↦ {d} ({})\n", case.description(), d.provenance);
            if let slicescope::superdual::EvenPartCheck::Compared {
                expected,
                actual,
                matches,
            } = even
            {
                line(
                    &mut out,
                    format_args!(
                        "even part: {actual} vs {expected} ({})",
                        if matches { "match" } else { "MISMATCH" }
                    ),
                );
            }
            out
        }
    }
}

const COISOTROPY_COLUMNS: [&str; 12] = [
    "case",
    "seed",
    "attempt",
    "dim_ambient",
    "omega_rank",
    "dim_W",
    "dim_W_perp",
    "rank_sum",
    "contained",
    "stabilizer_dim",
    "outcome",
    "expected_hyperspherical",
];

pub fn coisotropy(fmt: Format, r: &CoisotropyReport, expected: bool) -> String {
    let values = [
        r.case.clone(),
        r.seed.to_string(),
        r.attempt.to_string(),
        r.dim_ambient.to_string(),
        r.omega_rank.to_string(),
        r.dim_w.to_string(),
        r.dim_w_perp.to_string(),
        r.rank_sum.to_string(),
        r.contained.to_string(),
        r.stabilizer_dim.to_string(),
        format!("{:?}", r.outcome),
        expected.to_string(),
    ];
    match fmt {
        Format::Tsv => format!("{}\n{}\n", COISOTROPY_COLUMNS.join("\t"), values.join("\t")),
        Format::Json => {
            let mut v = serde_json::to_value(r).expect("reports serialize");
            v["expected_hyperspherical"] = expected.into();
            v.to_string() + "\n"
        }
        Format::Pretty => {
            let mut out = String::new();
            for (k, v) in COISOTROPY_COLUMNS.iter().zip(&values) {
                line(&mut out, format_args!("{k}={v}"));
            }
            line(&mut out, format_args!("coefficients={:?}", r.coefficients));
            out
        }
    }
}

pub fn sweep(fmt: Format, r: &SweepReport) -> String {
    match fmt {
        Format::Json => serde_json::to_string(r).expect("reports serialize") + "\n",
        Format::Tsv | Format::Pretty => format!("{r}\n"),
    }
}
