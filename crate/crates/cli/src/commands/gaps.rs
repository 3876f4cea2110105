//! The gaps stage: banded sieve, distance transform, points file, checkpoint.

use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, BufWriter, Seek, SeekFrom, Write};
use std::path::{Path, PathBuf};

use gaussgap_core::gapfield::{compute_gap_field, GapFieldError};
use gaussgap_core::io::{
    load_checkpoint, points_header, save_checkpoint, write_point_row, CheckpointManifest,
    CHECKPOINT_VERSION,
};
use gaussgap_core::region::build_prime_mask_with_budget;
use gaussgap_core::{BandSpec, Format, GapField};

use crate::cli::GapsArgs;
use crate::error::CliError;
use crate::progress::Progress;

/// Core column ranges of the bands tiling `[a_start, a_max]`.
pub fn band_ranges(a_start: u32, a_max: u32, band_width: u32) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    let mut lo = a_start;
    loop {
        let hi = lo.saturating_add(band_width - 1).min(a_max);
        out.push((lo, hi));
        if hi == a_max {
            return out;
        }
        lo = hi + 1;
    }
}

/// Builds the band's gap field, doubling the margin until it suffices.
/// Returns the field and the margin that worked.
pub fn field_with_margin(
    lo: u32,
    hi: u32,
    mut margin: u32,
    budget: u64,
) -> Result<(GapField, u32), CliError> {
    loop {
        let band = BandSpec::new(lo, hi, margin).map_err(CliError::runtime)?;
        let mask = build_prime_mask_with_budget(&band, budget).map_err(CliError::runtime)?;
        match compute_gap_field(&mask) {
            Ok(field) => return Ok((field, margin)),
            Err(GapFieldError::MarginExhausted { .. }) => {
                margin = margin
                    .checked_mul(2)
                    .ok_or_else(|| CliError::Runtime("margin overflow".into()))?;
                eprintln!("margin exhausted on columns {lo}..={hi}; retrying with {margin}");
            }
        }
    }
}

/// Truncates `path` to exactly `lines` newline-terminated lines.
/// Fails if the file holds fewer.
fn truncate_to_lines(path: &Path, lines: u64) -> Result<(), CliError> {
    let file = File::open(path)?;
    let mut reader = BufReader::new(file);
    let mut remaining = lines;
    let mut offset: u64 = 0;
    let mut buf = Vec::new();
    while remaining > 0 {
        buf.clear();
        let n = reader.read_until(b'\n', &mut buf)?;
        if n == 0 || buf.last() != Some(&b'\n') {
            return Err(CliError::Runtime(format!(
                "{}: expected at least {lines} complete lines for resume, found {}",
                path.display(),
                lines - remaining
            )));
        }
        offset += n as u64;
        remaining -= 1;
    }
    OpenOptions::new().write(true).open(path)?.set_len(offset)?;
    Ok(())
}

pub struct GapsPlan {
    pub a_start: u32,
    pub a_max: u32,
    pub band_width: u32,
    pub margin: u32,
    pub format: Format,
    pub output: PathBuf,
    pub checkpoint: Option<PathBuf>,
    pub resume: bool,
    pub mask_budget: u64,
}

impl GapsPlan {
    pub fn from_args(args: &GapsArgs) -> Result<Self, CliError> {
        let (a_start, a_max) = match (args.n, args.a_start, args.a_max) {
            (Some(n), None, None) => (0, n),
            (None, Some(s), Some(m)) => (s, m),
            _ => {
                return Err(CliError::Config(
                    "exactly one of --n or --a-start/--a-max is required".into(),
                ))
            }
        };
        if a_start > a_max {
            return Err(CliError::Config(format!(
                "--a-start {a_start} exceeds --a-max {a_max}"
            )));
        }
        if args.band_width == 0 || args.margin == 0 {
            return Err(CliError::Config(
                "--band-width and --margin must be positive".into(),
            ));
        }
        let format: Format = args.format.into();
        let output = args
            .output
            .clone()
            .unwrap_or_else(|| PathBuf::from(format!("points.{}", format.extension())));
        // Checkpointing assumes bands tiled from column 0; the legacy
        // windowed mode runs unconditionally from scratch.
        let checkpoint = if a_start == 0 {
            Some(
                args.checkpoint
                    .clone()
                    .unwrap_or_else(|| output.with_extension("ckpt")),
            )
        } else {
            None
        };
        if args.resume && checkpoint.is_none() {
            return Err(CliError::Config(
                "--resume requires --n mode (bands anchored at column 0)".into(),
            ));
        }
        Ok(Self {
            a_start,
            a_max,
            band_width: args.band_width,
            margin: args.margin,
            format,
            output,
            checkpoint,
            resume: args.resume,
            mask_budget: args.mask_budget,
        })
    }
}

pub fn run(plan: &GapsPlan) -> Result<(), CliError> {
    let bands = band_ranges(plan.a_start, plan.a_max, plan.band_width);
    let mut margin = plan.margin;
    let mut first_band = 0usize;

    if plan.resume {
        let ckpt_path = plan.checkpoint.as_ref().expect("resume implies checkpoint");
        let m = load_checkpoint(ckpt_path).map_err(CliError::runtime)?;
        if m.n != plan.a_max || m.band_width != plan.band_width || m.output_format != plan.format {
            return Err(CliError::Config(format!(
                "checkpoint disagrees with arguments: checkpoint has n={} band_width={} format={}",
                m.n,
                m.band_width,
                m.output_format
            )));
        }
        margin = m.margin;
        first_band = m.next_band_index as usize;
        let header_lines = u64::from(points_header(plan.format).is_some());
        let done_cells: u64 = bands[..first_band]
            .iter()
            .map(|&(lo, hi)| gaussgap_core::region::cells_in_columns(lo, hi))
            .sum();
        truncate_to_lines(&plan.output, header_lines + done_cells)?;
        eprintln!(
            "resuming at band {first_band}/{} with margin {margin}",
            bands.len()
        );
    } else {
        let mut f = BufWriter::new(File::create(&plan.output)?);
        if let Some(h) = points_header(plan.format) {
            writeln!(f, "{h}")?;
        }
        f.flush()?;
        if let Some(ckpt_path) = &plan.checkpoint {
            save_manifest(ckpt_path, plan, margin, 0)?;
        }
    }

    let mut out = BufWriter::with_capacity(1 << 20, {
        let mut f = OpenOptions::new().write(true).open(&plan.output)?;
        f.seek(SeekFrom::End(0))?;
        f
    });
    let mut progress = Progress::new("sieving");

    for (i, &(lo, hi)) in bands.iter().enumerate().skip(first_band) {
        let (field, used_margin) = field_with_margin(lo, hi, margin, plan.mask_budget)?;
        margin = used_margin;
        for (a, b, g) in field.iter_cells() {
            write_point_row(&mut out, a, b, g as u32, plan.format)?;
            progress.add(1);
        }
        out.flush()?;
        if let Some(ckpt_path) = &plan.checkpoint {
            save_manifest(ckpt_path, plan, margin, (i + 1) as u32)?;
        }
    }
    eprintln!(
        "gaps done: {} cells over columns {}..={}, final margin {margin}",
        progress.count(),
        plan.a_start,
        plan.a_max
    );
    Ok(())
}

fn save_manifest(path: &Path, plan: &GapsPlan, margin: u32, next: u32) -> Result<(), CliError> {
    save_checkpoint(
        path,
        &CheckpointManifest {
            version: CHECKPOINT_VERSION,
            n: plan.a_max,
            band_width: plan.band_width,
            margin,
            next_band_index: next,
            output_format: plan.format,
        },
    )
    .map_err(CliError::runtime)
}
