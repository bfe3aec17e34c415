//! Command-line surface. Every option can also come from an `MSTD_*`
//! environment variable; explicit flags win.

use std::fmt;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Table => "table",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Parser)]
#[command(name = "mstd", version, about = "Count and bound MSTD sets in finite abelian groups")]
pub struct Cli {
    #[command(flatten)]
    pub common: Common,
    #[command(subcommand)]
    pub command: Command,
}

/// Options shared by every subcommand.
#[derive(Debug, Clone, PartialEq, Args)]
pub struct Common {
    /// Worker threads (0 = all cores).
    #[arg(long, global = true, env = "MSTD_THREADS", default_value_t = 0)]
    pub threads: usize,
    /// Output format; each command has its own default.
    #[arg(long, global = true, env = "MSTD_FORMAT")]
    pub format: Option<Format>,
    /// Fixed-point precision for irrational quantities.
    #[arg(long, global = true, env = "MSTD_PRECISION_BITS")]
    pub precision_bits: Option<u32>,
    /// Seed for randomized checks.
    #[arg(long, global = true, env = "MSTD_SEED", default_value_t = 0x5eed)]
    pub seed: u64,
    /// Largest |G| for exhaustive subset scans.
    #[arg(long, global = true, env = "MSTD_COUNT_CAP", default_value_t = mstd_core::enumerate::COUNT_CAP)]
    pub cap: usize,
    /// Print scan progress to stderr every this many seconds.
    #[arg(long, global = true, env = "MSTD_PROGRESS")]
    pub progress: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Subcommand)]
pub enum Command {
    /// Exact |MSTD(G)| by exhaustive scan.
    Count(GroupArgs),
    /// Upper, lower and asymptotic bounds.
    Bound(BoundArgs),
    /// Forbiddance graph, its components and independent-set count.
    Forbid(ForbidArgs),
    /// Run property checks against brute-force oracles.
    Verify(VerifyArgs),
    /// Exact counts beside bounds over a family of groups.
    Table(TableArgs),
}

#[derive(Debug, Clone, PartialEq, Args)]
pub struct GroupArgs {
    /// Group as cyclic orders, e.g. `8` or `12,2`; repeat for several.
    #[arg(short = 'g', long = "group", required = true, env = "MSTD_GROUP")]
    pub groups: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Args)]
pub struct BoundArgs {
    #[command(flatten)]
    pub group: GroupArgs,
    /// Also count exactly when |G| is within the scan cap.
    #[arg(long)]
    pub exact: bool,
}

#[derive(Debug, Clone, PartialEq, Args)]
pub struct ForbidArgs {
    /// Group as cyclic orders.
    #[arg(short = 'g', long = "group", env = "MSTD_GROUP")]
    pub group: String,
    /// Forbidden differences: element indices or digit tuples like `1:2`.
    #[arg(short = 'd', long = "diffs", value_delimiter = ',', num_args = 1..)]
    pub diffs: Vec<String>,
    /// Forbidden sums, same notation.
    #[arg(short = 's', long = "sums", value_delimiter = ',', num_args = 1..)]
    pub sums: Vec<String>,
    /// Cross-check against a direct scan of all subsets.
    #[arg(long)]
    pub oracle: bool,
    /// Print the graph as an edge list instead of a report.
    #[arg(long)]
    pub edges: bool,
}

#[derive(Debug, Clone, PartialEq, Args)]
pub struct VerifyArgs {
    /// Largest group order swept by group-indexed checks.
    #[arg(long, env = "MSTD_MAX_ORDER", default_value_t = 14)]
    pub max_order: usize,
    /// Run only these checks (comma separated or repeated).
    #[arg(long, value_delimiter = ',')]
    pub only: Vec<String>,
    /// List check names and exit.
    #[arg(long)]
    pub list: bool,
}

#[derive(Debug, Clone, PartialEq, Args)]
pub struct TableArgs {
    /// One of cyclic, cyclic-even, cyclic-odd, Zn-x-Z2, all.
    #[arg(long, env = "MSTD_FAMILY")]
    pub family: String,
    #[arg(long, env = "MSTD_MIN", default_value_t = 2)]
    pub min: usize,
    #[arg(long, env = "MSTD_MAX")]
    pub max: usize,
    /// Count exactly up to this |G|; larger rows leave `exact` blank.
    #[arg(long, env = "MSTD_EXACT_CAP", default_value_t = 24)]
    pub exact_cap: usize,
}

impl Cli {
    /// Canonical argument vector: parsing it yields an equal `Cli`.
    pub fn canonical_args(&self) -> Vec<String> {
        let mut out = vec!["mstd".to_string()];
        let c = &self.common;
        out.extend(["--threads".into(), c.threads.to_string()]);
        if let Some(f) = c.format {
            out.extend(["--format".into(), f.to_string()]);
        }
        if let Some(b) = c.precision_bits {
            out.extend(["--precision-bits".into(), b.to_string()]);
        }
        out.extend(["--seed".into(), c.seed.to_string()]);
        out.extend(["--cap".into(), c.cap.to_string()]);
        if let Some(p) = c.progress {
            out.extend(["--progress".into(), p.to_string()]);
        }
        let groups = |out: &mut Vec<String>, g: &GroupArgs| {
            for s in &g.groups {
                out.extend(["-g".into(), s.clone()]);
            }
        };
        match &self.command {
            Command::Count(g) => {
                out.push("count".into());
                groups(&mut out, g);
            }
            Command::Bound(b) => {
                out.push("bound".into());
                groups(&mut out, &b.group);
                if b.exact {
                    out.push("--exact".into());
                }
            }
            Command::Forbid(f) => {
                out.extend(["forbid".into(), "-g".into(), f.group.clone()]);
                if !f.diffs.is_empty() {
                    out.extend(["-d".into(), f.diffs.join(",")]);
                }
                if !f.sums.is_empty() {
                    out.extend(["-s".into(), f.sums.join(",")]);
                }
                if f.oracle {
                    out.push("--oracle".into());
                }
                if f.edges {
                    out.push("--edges".into());
                }
            }
            Command::Verify(v) => {
                out.extend(["verify".into(), "--max-order".into(), v.max_order.to_string()]);
                if !v.only.is_empty() {
                    out.extend(["--only".into(), v.only.join(",")]);
                }
                if v.list {
                    out.push("--list".into());
                }
            }
            Command::Table(t) => {
                out.extend([
                    "table".into(),
                    "--family".into(),
                    t.family.clone(),
                    "--min".into(),
                    t.min.to_string(),
                    "--max".into(),
                    t.max.to_string(),
                    "--exact-cap".into(),
                    t.exact_cap.to_string(),
                ]);
            }
        }
        out
    }
}

impl fmt::Display for Cli {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical_args()[1..].join(" "))
    }
}
