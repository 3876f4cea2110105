//! The figure stage: record gaps paired with the largest prime norm on the
//! record center's ball boundary.
//!
//! Points files are ordered by column, not by shell, so records (defined in
//! shell order) need two streaming passes: one to fix each shell's running
//! maximum, one to collect the few cells that can break a record.

use std::fs::File;
use std::io::{BufReader, BufWriter, Write};

use gaussgap_core::aggregate::records_to_rows;
use gaussgap_core::io::read_points;

use crate::cli::FigureArgs;
use crate::commands::wedge::shells_from_points;
use crate::error::CliError;

pub const FIGURE_CSV_HEADER: &str = "prime_norm,gap";

pub fn run(args: &FigureArgs) -> Result<(), CliError> {
    let shells = shells_from_points(&args.points, None)?;
    let d_max = shells.len() as u32 - 1;

    // prev_max[d] = largest gap over shells strictly before d (-1 for d = 0).
    let mut prev_max = vec![-1i64; shells.len()];
    let mut run = -1i64;
    for s in &shells {
        prev_max[s.d as usize] = run;
        run = run.max(s.max_gap as i64);
    }

    // Candidates: cells that beat everything before their shell. Bucketed
    // per shell; within a shell the points file already yields ascending a.
    let mut candidates: Vec<Vec<(u32, u32, u32)>> = vec![Vec::new(); shells.len()];
    let reader = BufReader::with_capacity(1 << 20, File::open(&args.points)?);
    read_points(reader, |a, b, g| {
        let d = a + b;
        if d <= d_max && (g as i64) > prev_max[d as usize] {
            candidates[d as usize].push((a, b, g));
        }
    })?;

    let mut best = -1i64;
    let mut records = Vec::new();
    for (d, bucket) in candidates.iter_mut().enumerate() {
        bucket.sort_unstable();
        for &(a, b, g) in bucket.iter() {
            debug_assert_eq!(a + b, d as u32);
            if g as i64 > best {
                best = g as i64;
                records.push((a, b, g));
            }
        }
    }

    let rows = records_to_rows(records);
    let mut out = BufWriter::new(File::create(&args.output)?);
    writeln!(out, "{FIGURE_CSV_HEADER}")?;
    for r in &rows {
        writeln!(out, "{},{}", r.prime_norm, r.gap)?;
    }
    eprintln!("figure done: {} record rows", rows.len());
    Ok(())
}
