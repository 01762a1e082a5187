use clap::{Args, Parser, Subcommand, ValueEnum};
use slicescope::liealg::{AlgebraFamily, ClassicalKind};
use slicescope::partitions::Partition;

use crate::CliError;

#[derive(Debug, Parser)]
#[command(
    name = "slicescope",
    version,
    about = "Hyperspherical Slodowy slices: classification, verification and S-duals"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, value_enum, default_value_t = Format::Pretty, global = true)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Tsv,
    Json,
    Pretty,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Gl,
    #[value(alias = "c")]
    Sp,
    So,
    /// SO(2r+1)
    B,
    /// SO(2r)
    D,
}

impl FamilyArg {
    fn kind(self) -> ClassicalKind {
        match self {
            FamilyArg::Gl => ClassicalKind::Gl,
            FamilyArg::Sp => ClassicalKind::Sp,
            FamilyArg::So | FamilyArg::B | FamilyArg::D => ClassicalKind::So,
        }
    }
}

#[derive(Debug, Args)]
pub struct GroupArgs {
    #[arg(long, value_enum)]
    pub family: FamilyArg,
    /// Lie rank.
    #[arg(long)]
    pub rank: Option<usize>,
    /// Dimension of the natural representation.
    #[arg(long, conflicts_with = "rank")]
    pub dim: Option<usize>,
}

#[derive(Debug, Args)]
pub struct OrbitArgs {
    #[command(flatten)]
    pub group: GroupArgs,
    /// Jordan type, e.g. `5,1,1` or `3,1^4`.
    #[arg(long)]
    pub partition: Partition,
    #[arg(long)]
    pub rank_from_partition: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify every nilpotent orbit of one group.
    Classify {
        #[command(flatten)]
        group: GroupArgs,
    },
    /// Report on a single orbit.
    Check {
        #[command(flatten)]
        orbit: OrbitArgs,
    },
    /// Sample coisotropy checks on a matrix model.
    Verify {
        /// `sp6-33`, `g2`, or `<gl|sp|so>:<partition>`.
        #[arg(long)]
        case: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Look up the S-dual of an orbit or of an extended case.
    Dual {
        #[arg(long, value_enum, required_unless_present = "extended")]
        family: Option<FamilyArg>,
        #[arg(long, requires = "family")]
        partition: Option<Partition>,
        #[arg(long)]
        rank: Option<usize>,
        #[arg(long, conflicts_with = "rank")]
        dim: Option<usize>,
        #[arg(long)]
        rank_from_partition: bool,
        /// `mirabolic`, `gelfand-tsetlin`, `so-even`, `so-odd` or `sp-extension`, sized by `--rank`.
        #[arg(long, conflicts_with_all = ["family", "partition"], requires = "rank")]
        extended: Option<String>,
    },
    /// Scan an exceptional orbit table.
    Scan {
        /// Tab-separated table; the built-in G2 table when absent.
        #[arg(long)]
        data: Option<std::path::PathBuf>,
    },
    /// Compare the reduced inequality with the direct bound up to `n_max`.
    Sweep {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n_max: usize,
    },
}

/// Resolves the group from `--rank`/`--dim`, or from the partition when
/// allowed, rejecting any disagreement.
pub fn resolve_family(
    family: FamilyArg,
    rank: Option<usize>,
    dim: Option<usize>,
    partition: Option<&Partition>,
    rank_from_partition: bool,
) -> Result<AlgebraFamily, CliError> {
    let from_partition = partition.map(Partition::size);
    let natural = match (dim, rank) {
        (Some(d), _) => d,
        (None, Some(0)) => return Err(CliError::Usage("rank must be positive".into())),
        (None, Some(r)) => match family {
            FamilyArg::Gl => r,
            FamilyArg::Sp | FamilyArg::D => 2 * r,
            FamilyArg::B => 2 * r + 1,
            FamilyArg::So => match from_partition {
                Some(n) if n / 2 == r => n,
                Some(n) => return Err(CliError::Usage(format!("--rank {r} disagrees with a partition of {n}"))),
                None => {
                    return Err(CliError::Usage(
                        "--family so --rank is ambiguous; use b, d, or --dim".into(),
                    ))
                }
            },
        },
        (None, None) => match from_partition {
            Some(n) if rank_from_partition => n,
            _ => {
                return Err(CliError::Usage(
                    "give --rank or --dim (or --rank-from-partition with --partition)".into(),
                ))
            }
        },
    };
    if natural == 0 {
        return Err(CliError::Usage("dimension must be positive".into()));
    }
    if let Some(n) = from_partition {
        if n != natural {
            return Err(CliError::Usage(format!(
                "partition of {n} does not fit a group on C^{natural}"
            )));
        }
    }
    let g = AlgebraFamily::classical(family.kind(), natural).map_err(|e| CliError::Usage(e.to_string()))?;
    let parity_ok = match family {
        FamilyArg::B => natural % 2 == 1,
        FamilyArg::D => natural % 2 == 0,
        _ => true,
    };
    if !parity_ok {
        return Err(CliError::Usage(format!("{g} is not of the requested type")));
    }
    Ok(g)
}
