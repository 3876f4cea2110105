//! The euler stage: shells file to Cramér-style ratio series.

use std::fs::File;
use std::io::{BufReader, BufWriter};

use gaussgap_core::aggregate::ratio_series;
use gaussgap_core::io::{read_shells, write_ratios};
use gaussgap_core::Format;

use crate::cli::EulerArgs;
use crate::error::CliError;

pub fn run(args: &EulerArgs) -> Result<(), CliError> {
    let reader = BufReader::new(File::open(&args.input)?);
    let (shells, stats) = read_shells(reader)?;
    if stats.skipped > 0 {
        eprintln!("skipped {} malformed lines", stats.skipped);
    }
    for (i, s) in shells.iter().enumerate() {
        if s.d as usize != i {
            return Err(CliError::Runtime(format!(
                "shells must be contiguous from 0; row {i} has d = {}",
                s.d
            )));
        }
    }
    let series = ratio_series(&shells, args.mode.into(), args.axis.into());
    let mut out = BufWriter::new(File::create(&args.output)?);
    write_ratios(&mut out, &series, Format::from(args.format))?;
    eprintln!("euler done: {} ratio rows", series.len());
    Ok(())
}
