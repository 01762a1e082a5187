mod config;
mod output;

use std::process::ExitCode;

use clap::Parser;
use thiserror::Error;

use slicescope::classifier::{classify_jordan, enumerate_and_classify, scan_exceptional, sweep_inequality_proof};
use slicescope::datasets::{builtin_g2, load_table};
use slicescope::liealg::ClassicalKind;
use slicescope::realizations::realize_case;
use slicescope::superdual::{s_dual, ExtendedCase};
use slicescope::verifier::{coisotropy_check, Outcome};

use config::{resolve_family, Cli, Command, FamilyArg};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Library(#[from] slicescope::Error),
}

fn lib<E: Into<slicescope::Error>>(e: E) -> CliError {
    CliError::Library(e.into())
}

/// Rendered output, and whether the computation agreed with expectations.
struct Run {
    text: String,
    consistent: bool,
}

impl Run {
    fn ok(text: String) -> Self {
        Run { text, consistent: true }
    }
}

fn configure_threads() -> Result<(), CliError> {
    let Ok(raw) = std::env::var("SLICESCOPE_THREADS") else {
        return Ok(());
    };
    let threads: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| CliError::Usage(format!("SLICESCOPE_THREADS must be a positive integer, got `{raw}`")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| CliError::Usage(e.to_string()))
}

fn run(cli: Cli) -> Result<Run, CliError> {
    let fmt = cli.format;
    match cli.command {
        Command::Classify { group } => {
            let g = resolve_family(group.family, group.rank, group.dim, None, false)?;
            let verdicts = enumerate_and_classify(g).map_err(lib)?;
            Ok(Run::ok(output::verdict_table(fmt, &g.to_string(), &verdicts)))
        }
        Command::Check { orbit } => {
            let g = resolve_family(
                orbit.group.family,
                orbit.group.rank,
                orbit.group.dim,
                Some(&orbit.partition),
                orbit.rank_from_partition,
            )?;
            let v = classify_jordan(g, &orbit.partition).map_err(lib)?;
            Ok(Run::ok(output::single_verdict(fmt, &v)))
        }
        Command::Verify { case, seed } => {
            let r = realize_case(&case).map_err(|e| CliError::Usage(e.to_string()))?;
            let expected = match &r.jordan_type {
                Some(p) => classify_jordan(r.family, p).map_err(lib)?.status.is_hyperspherical(),
                None => scan_exceptional(&builtin_g2())
                    .map_err(lib)?
                    .iter()
                    .any(|v| v.orbit.label.to_string() == "Ã1" && v.status.is_hyperspherical()),
            };
            let report = coisotropy_check(&r, seed).map_err(lib)?;
            let consistent = report.outcome != Outcome::Inconclusive && report.supports_hyperspherical() == expected;
            Ok(Run {
                text: output::coisotropy(fmt, &report, expected),
                consistent,
            })
        }
        Command::Dual {
            family,
            partition,
            rank,
            dim,
            rank_from_partition,
            extended,
        } => {
            if let Some(name) = extended {
                let n = rank.unwrap_or_default();
                let case = ExtendedCase::parse(&name, n)
                    .ok_or_else(|| CliError::Usage(format!("unknown extended case `{name}` of size {n}")))?;
                return Ok(Run::ok(output::extended(fmt, &case)));
            }
            let family = family.expect("clap requires --family without --extended");
            let partition = partition.ok_or_else(|| CliError::Usage("--partition is required".into()))?;
            let g = resolve_family(family, rank, dim, Some(&partition), rank_from_partition)?;
            let v = classify_jordan(g, &partition).map_err(lib)?;
            let dual = s_dual(&v).map_err(lib)?;
            Ok(Run::ok(output::dual(fmt, &v, &dual)))
        }
        Command::Scan { data } => {
            let table = match data {
                Some(path) => load_table(path).map_err(|e| CliError::Usage(e.to_string()))?,
                None => builtin_g2(),
            };
            let verdicts = scan_exceptional(&table).map_err(lib)?;
            Ok(Run::ok(output::verdict_table(
                fmt,
                &table.algebra.to_string(),
                &verdicts,
            )))
        }
        Command::Sweep { family, n_max } => {
            if n_max == 0 {
                return Err(CliError::Usage("--n-max must be positive".into()));
            }
            let kind = match family {
                FamilyArg::Gl => ClassicalKind::Gl,
                FamilyArg::Sp => ClassicalKind::Sp,
                FamilyArg::So | FamilyArg::B | FamilyArg::D => ClassicalKind::So,
            };
            let report = sweep_inequality_proof(kind, n_max);
            Ok(Run {
                consistent: report.is_consistent(),
                text: output::sweep(fmt, &report),
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = configure_threads().and_then(|()| run(cli));
    match result {
        Ok(r) => {
            print!("{}", r.text);
            if r.consistent {
                ExitCode::SUCCESS
            } else {
                eprintln!("slicescope: result disagrees with the expected outcome");
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("slicescope: {e}");
            ExitCode::from(2)
        }
    }
}
