use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gaussgap_core::{Format, RatioAxis, RatioMode};

#[derive(Parser, Debug)]
#[command(
    name = "gaussgap",
    about = "Gaussian prime gaps under the taxicab metric",
    version
)]
pub struct Cli {
    /// Worker threads (GAUSSGAP_THREADS overrides; 0 = all cores).
    #[arg(long, global = true, default_value_t = 0)]
    pub threads: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Compute (a, b, gap) for every wedge center in range and write the points file.
    Gaps(GapsArgs),
    /// Reduce a points file to per-shell maxima (largest gap, largest prime norm).
    Wedge(WedgeArgs),
    /// Reduce a shells file to the Cramér-style ratio series.
    Euler(EulerArgs),
    /// Check the distance transform against the ladder ring scan, cell by cell.
    Verify(VerifyArgs),
    /// Emit the record series: each record gap with the largest prime norm on its ball boundary.
    Figure(FigureArgs),
    /// Full pipeline: gaps, then wedge, then euler, into one output directory.
    Run(RunArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum FormatArg {
    Compat,
    Csv,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Compat => Format::Compat,
            FormatArg::Csv => Format::Csv,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum ModeArg {
    Cumulative,
    PerShell,
}

impl From<ModeArg> for RatioMode {
    fn from(m: ModeArg) -> RatioMode {
        match m {
            ModeArg::Cumulative => RatioMode::Cumulative,
            ModeArg::PerShell => RatioMode::PerShell,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum AxisArg {
    Norm,
    Magnitude,
}

impl From<AxisArg> for RatioAxis {
    fn from(a: AxisArg) -> RatioAxis {
        match a {
            AxisArg::Norm => RatioAxis::Norm,
            AxisArg::Magnitude => RatioAxis::Magnitude,
        }
    }
}

#[derive(Args, Debug)]
pub struct GapsArgs {
    /// Maximum shell distance; covers columns 0..=n.
    #[arg(long, conflicts_with_all = ["a_start", "a_max"])]
    pub n: Option<u32>,

    /// First column (legacy mode, with --a-max).
    #[arg(long, requires = "a_max")]
    pub a_start: Option<u32>,

    /// Last column (legacy mode, with --a-start).
    #[arg(long, requires = "a_start")]
    pub a_max: Option<u32>,

    /// Columns per band.
    #[arg(long, default_value_t = 4096)]
    pub band_width: u32,

    /// Initial sieve margin; doubled automatically when exhausted.
    #[arg(long, default_value_t = 64)]
    pub margin: u32,

    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    pub format: FormatArg,

    /// Points file path (default: points.<ext> next to the checkpoint).
    #[arg(long)]
    pub output: Option<PathBuf>,

    /// Checkpoint manifest path (default: <output>.ckpt).
    #[arg(long)]
    pub checkpoint: Option<PathBuf>,

    /// Continue an interrupted run from its checkpoint.
    #[arg(long)]
    pub resume: bool,

    /// Mask memory budget in bytes.
    #[arg(long, default_value_t = gaussgap_core::region::DEFAULT_MASK_BUDGET_BYTES)]
    pub mask_budget: u64,
}

#[derive(Args, Debug)]
pub struct WedgeArgs {
    /// Points file from the gaps stage.
    #[arg(long)]
    pub input: PathBuf,

    #[arg(long)]
    pub output: PathBuf,

    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    pub format: FormatArg,

    /// Largest shell to emit (default: the largest fully covered one).
    #[arg(long)]
    pub d_max: Option<u32>,
}

#[derive(Args, Debug)]
pub struct EulerArgs {
    /// Shells file from the wedge stage.
    #[arg(long)]
    pub input: PathBuf,

    #[arg(long)]
    pub output: PathBuf,

    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    pub format: FormatArg,

    #[arg(long, value_enum, default_value_t = ModeArg::Cumulative)]
    pub mode: ModeArg,

    #[arg(long, value_enum, default_value_t = AxisArg::Norm)]
    pub axis: AxisArg,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Verify every wedge center with a <= this column.
    #[arg(long, default_value_t = 300)]
    pub a_max: u32,

    #[arg(long, default_value_t = 64)]
    pub margin: u32,
}

#[derive(Args, Debug)]
pub struct FigureArgs {
    /// Points file from the gaps stage.
    #[arg(long)]
    pub points: PathBuf,

    /// CSV output (prime_norm,gap).
    #[arg(long)]
    pub output: PathBuf,
}

#[derive(Args, Debug)]
pub struct RunArgs {
    /// Maximum shell distance.
    #[arg(long)]
    pub n: u32,

    /// Directory for points, shells, ratios and the checkpoint.
    #[arg(long, default_value = ".")]
    pub out_dir: PathBuf,

    #[arg(long, default_value_t = 4096)]
    pub band_width: u32,

    #[arg(long, default_value_t = 64)]
    pub margin: u32,

    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    pub format: FormatArg,

    #[arg(long, value_enum, default_value_t = ModeArg::Cumulative)]
    pub mode: ModeArg,

    #[arg(long, value_enum, default_value_t = AxisArg::Norm)]
    pub axis: AxisArg,

    #[arg(long)]
    pub resume: bool,

    #[arg(long, default_value_t = gaussgap_core::region::DEFAULT_MASK_BUDGET_BYTES)]
    pub mask_budget: u64,
}
