//! End-to-end pipeline: gaps, then wedge, then euler, sharing one output
//! directory. Produces exactly the files the three stages would produce
//! individually.

use std::path::PathBuf;

use gaussgap_core::Format;

use crate::cli::{EulerArgs, GapsArgs, RunArgs, WedgeArgs};
use crate::commands::{euler, gaps, wedge};
use crate::error::CliError;

pub struct RunPaths {
    pub points: PathBuf,
    pub shells: PathBuf,
    pub ratios: PathBuf,
    pub checkpoint: PathBuf,
}

pub fn paths(args: &RunArgs) -> RunPaths {
    let ext = Format::from(args.format).extension();
    RunPaths {
        points: args.out_dir.join(format!("points.{ext}")),
        shells: args.out_dir.join(format!("shells.{ext}")),
        ratios: args.out_dir.join(format!("ratios.{ext}")),
        checkpoint: args.out_dir.join("checkpoint.txt"),
    }
}

pub fn run(args: &RunArgs) -> Result<(), CliError> {
    std::fs::create_dir_all(&args.out_dir)?;
    let p = paths(args);

    let gaps_args = GapsArgs {
        n: Some(args.n),
        a_start: None,
        a_max: None,
        band_width: args.band_width,
        margin: args.margin,
        format: args.format,
        output: Some(p.points.clone()),
        checkpoint: Some(p.checkpoint.clone()),
        resume: args.resume,
        mask_budget: args.mask_budget,
    };
    gaps::run(&gaps::GapsPlan::from_args(&gaps_args)?)?;

    wedge::run(&WedgeArgs {
        input: p.points.clone(),
        output: p.shells.clone(),
        format: args.format,
        d_max: Some(args.n),
    })?;

    euler::run(&EulerArgs {
        input: p.shells,
        output: p.ratios,
        format: args.format,
        mode: args.mode,
        axis: args.axis,
    })
}
