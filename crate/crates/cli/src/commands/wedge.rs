//! The wedge stage: stream a points file into per-shell maxima.

use std::fs::File;
use std::io::{BufReader, BufWriter};
use std::path::Path;

use gaussgap_core::aggregate::shell_size;
use gaussgap_core::io::{read_points, write_shells};
use gaussgap_core::{Format, ShellRecord};

use crate::cli::WedgeArgs;
use crate::error::CliError;
use crate::progress::Progress;

/// Shell reducer that grows with the data; the covered shell range is not
/// known until the whole file has streamed past.
#[derive(Default)]
pub struct StreamingShells {
    shells: Vec<ShellRecord>,
    seen: Vec<u64>,
    max_column: u32,
}

impl StreamingShells {
    pub fn add(&mut self, a: u32, b: u32, gap: u32) {
        let d = (a + b) as usize;
        if d >= self.shells.len() {
            let next = self.shells.len() as u32..=d as u32;
            self.shells.extend(next.map(|d| ShellRecord {
                d,
                max_gap: 0,
                max_prime_norm: 0,
            }));
            self.seen.resize(d + 1, 0);
        }
        let rec = &mut self.shells[d];
        rec.max_gap = rec.max_gap.max(gap);
        if gap == 0 {
            let norm = a as u64 * a as u64 + b as u64 * b as u64;
            rec.max_prime_norm = rec.max_prime_norm.max(norm);
        }
        self.seen[d] += 1;
        self.max_column = self.max_column.max(a);
    }

    /// Truncates to the fully covered prefix `d <= d_max` and validates
    /// coverage shell by shell.
    pub fn finish(mut self, d_max: Option<u32>) -> Result<Vec<ShellRecord>, CliError> {
        let d_max = d_max.unwrap_or(self.max_column);
        if (d_max as usize) >= self.shells.len() {
            return Err(CliError::Runtime(format!(
                "shell {d_max} has no centers in the input"
            )));
        }
        self.shells.truncate(d_max as usize + 1);
        for (d, &seen) in self.seen[..=d_max as usize].iter().enumerate() {
            let expected = shell_size(d as u32);
            if seen != expected {
                return Err(CliError::Runtime(format!(
                    "shell {d} is not fully covered: saw {seen} of {expected} centers"
                )));
            }
        }
        Ok(self.shells)
    }
}

/// Streams `input` through the shell reducer; returns records for every
/// fully covered shell (or up to `d_max` when given).
pub fn shells_from_points(input: &Path, d_max: Option<u32>) -> Result<Vec<ShellRecord>, CliError> {
    let reader = BufReader::with_capacity(1 << 20, File::open(input)?);
    let mut acc = StreamingShells::default();
    let mut progress = Progress::new("reading");
    let stats = read_points(reader, |a, b, g| {
        acc.add(a, b, g);
        progress.add(1);
    })?;
    if stats.skipped > 0 {
        eprintln!("skipped {} malformed lines", stats.skipped);
    }
    if stats.rows == 0 {
        return Err(CliError::Runtime(format!(
            "{}: no rows parsed",
            input.display()
        )));
    }
    acc.finish(d_max)
}

pub fn run(args: &WedgeArgs) -> Result<(), CliError> {
    let shells = shells_from_points(&args.input, args.d_max)?;
    let mut out = BufWriter::new(File::create(&args.output)?);
    write_shells(&mut out, &shells, Format::from(args.format))?;
    eprintln!("wedge done: {} shells", shells.len());
    Ok(())
}
