//! Persistence: the legacy pipe-separated text formats, native CSV, and the
//! resumable checkpoint manifest.
//!
//! Compat points and shells lines use `"| "` between fields (`A| B| G`);
//! compat ratio lines use a bare pipe (`d|ratio`). Both separators are
//! byte-exact so files interoperate with the original dataset. All text is
//! ASCII with LF line endings.

use std::fmt::Display;
use std::io::{self, BufRead, Write};
use std::path::Path;

use thiserror::Error;

use crate::aggregate::{RatioPoint, ShellRecord};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Compat,
    Csv,
}

impl Format {
    /// Conventional file extension.
    pub fn extension(&self) -> &'static str {
        match self {
            Format::Compat => "txt",
            Format::Csv => "csv",
        }
    }
}

impl std::str::FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "compat" => Ok(Format::Compat),
            "csv" => Ok(Format::Csv),
            other => Err(format!("unknown format {other:?} (expected compat or csv)")),
        }
    }
}

impl Display for Format {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Format::Compat => "compat",
            Format::Csv => "csv",
        })
    }
}

pub const POINTS_CSV_HEADER: &str = "a,b,gap";
pub const SHELLS_CSV_HEADER: &str = "d,G,P";
pub const RATIOS_CSV_HEADER: &str = "d,G,P,ratio";

/// Header line for a row file in the given format, if any.
pub fn points_header(format: Format) -> Option<&'static str> {
    match format {
        Format::Compat => None,
        Format::Csv => Some(POINTS_CSV_HEADER),
    }
}

/// Writes one point row. Compat: `A| B| G`.
#[inline]
pub fn write_point_row<W: Write>(w: &mut W, a: u32, b: u32, gap: u32, format: Format) -> io::Result<()> {
    match format {
        Format::Compat => writeln!(w, "{a}| {b}| {gap}"),
        Format::Csv => writeln!(w, "{a},{b},{gap}"),
    }
}

/// Writes a whole points file: header (csv only) then rows in input order.
pub fn write_points<W, I>(w: &mut W, rows: I, format: Format) -> io::Result<()>
where
    W: Write,
    I: IntoIterator<Item = (u32, u32, u32)>,
{
    if let Some(h) = points_header(format) {
        writeln!(w, "{h}")?;
    }
    for (a, b, gap) in rows {
        write_point_row(w, a, b, gap, format)?;
    }
    Ok(())
}

/// Counts from a lenient read: parsed rows and skipped malformed lines.
#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct ReadStats {
    pub rows: u64,
    pub skipped: u64,
}

fn known_header(line: &str) -> bool {
    matches!(
        line,
        POINTS_CSV_HEADER | SHELLS_CSV_HEADER | RATIOS_CSV_HEADER | "d,ratio"
    )
}

fn split_fields(line: &str) -> impl Iterator<Item = &str> {
    line.split(['|', ',']).map(str::trim)
}

fn parse_triple(line: &str) -> Option<(u64, u64, u64)> {
    let mut it = split_fields(line);
    let a = it.next()?.parse().ok()?;
    let b = it.next()?.parse().ok()?;
    let c = it.next()?.parse().ok()?;
    if it.next().is_some() {
        return None;
    }
    Some((a, b, c))
}

/// Streams `(a, b, gap)` rows from either format into `sink`. Malformed
/// lines are skipped and counted; recognized header lines are consumed
/// silently.
pub fn read_points<R, F>(reader: R, mut sink: F) -> io::Result<ReadStats>
where
    R: BufRead,
    F: FnMut(u32, u32, u32),
{
    let mut stats = ReadStats::default();
    for line in reader.lines() {
        let line = line?;
        let line = line.trim_end_matches('\r');
        if known_header(line) {
            continue;
        }
        match parse_triple(line) {
            Some((a, b, g)) if a <= u32::MAX as u64 && b <= u32::MAX as u64 && g <= u32::MAX as u64 => {
                stats.rows += 1;
                sink(a as u32, b as u32, g as u32);
            }
            _ => stats.skipped += 1,
        }
    }
    Ok(stats)
}

/// Writes shell records. Compat: `d| G| P`.
pub fn write_shells<W: Write>(w: &mut W, shells: &[ShellRecord], format: Format) -> io::Result<()> {
    if format == Format::Csv {
        writeln!(w, "{SHELLS_CSV_HEADER}")?;
    }
    for s in shells {
        match format {
            Format::Compat => writeln!(w, "{}| {}| {}", s.d, s.max_gap, s.max_prime_norm)?,
            Format::Csv => writeln!(w, "{},{},{}", s.d, s.max_gap, s.max_prime_norm)?,
        }
    }
    Ok(())
}

/// Reads shell records from either format.
pub fn read_shells<R: BufRead>(reader: R) -> io::Result<(Vec<ShellRecord>, ReadStats)> {
    let mut shells = Vec::new();
    let mut stats = ReadStats::default();
    for line in reader.lines() {
        let line = line?;
        let line = line.trim_end_matches('\r');
        if known_header(line) {
            continue;
        }
        match parse_triple(line) {
            Some((d, g, p)) if d <= u32::MAX as u64 && g <= u32::MAX as u64 => {
                stats.rows += 1;
                shells.push(ShellRecord {
                    d: d as u32,
                    max_gap: g as u32,
                    max_prime_norm: p,
                });
            }
            _ => stats.skipped += 1,
        }
    }
    Ok((shells, stats))
}

/// Writes the ratio series. Compat: `d|ratio` with a bare pipe; floats are
/// the shortest decimal that round-trips to the same f64.
pub fn write_ratios<W: Write>(w: &mut W, ratios: &[RatioPoint], format: Format) -> io::Result<()> {
    if format == Format::Csv {
        writeln!(w, "{RATIOS_CSV_HEADER}")?;
    }
    for r in ratios {
        match format {
            Format::Compat => writeln!(w, "{}|{}", r.d, r.ratio)?,
            Format::Csv => writeln!(w, "{},{},{},{}", r.d, r.g, r.p, r.ratio)?,
        }
    }
    Ok(())
}

pub const CHECKPOINT_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum CheckpointError {
    #[error("checkpoint i/o: {0}")]
    Io(#[from] io::Error),
    #[error("checkpoint version {found}, expected {CHECKPOINT_VERSION}")]
    VersionMismatch { found: u32 },
    #[error("checkpoint missing field {0:?}")]
    MissingField(&'static str),
    #[error("checkpoint field {field:?} has corrupt value {value:?}")]
    CorruptValue { field: &'static str, value: String },
}

/// Progress manifest for a resumable gaps run, stored as `key=value` lines.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CheckpointManifest {
    pub version: u32,
    /// Target maximum column (equals the maximum shell distance covered).
    pub n: u32,
    pub band_width: u32,
    /// Current sieve margin; bands already written may have used a smaller
    /// one, which does not affect their (exact) values.
    pub margin: u32,
    pub next_band_index: u32,
    pub output_format: Format,
}

pub fn save_checkpoint(path: &Path, m: &CheckpointManifest) -> Result<(), CheckpointError> {
    // Write-then-rename so an interrupted save never corrupts the manifest.
    let tmp = path.with_extension("tmp");
    let body = format!(
        "version={}\nn={}\nband_width={}\nmargin={}\nnext_band_index={}\noutput_format={}\n",
        m.version, m.n, m.band_width, m.margin, m.next_band_index, m.output_format
    );
    std::fs::write(&tmp, body)?;
    std::fs::rename(&tmp, path)?;
    Ok(())
}

pub fn load_checkpoint(path: &Path) -> Result<CheckpointManifest, CheckpointError> {
    let text = std::fs::read_to_string(path)?;
    let mut fields: [Option<&str>; 6] = [None; 6];
    const NAMES: [&str; 6] = [
        "version",
        "n",
        "band_width",
        "margin",
        "next_band_index",
        "output_format",
    ];
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if let Some((k, v)) = line.split_once('=') {
            if let Some(i) = NAMES.iter().position(|&n| n == k) {
                fields[i] = Some(v);
            }
        }
    }
    fn num(fields: &[Option<&str>; 6], i: usize) -> Result<u32, CheckpointError> {
        let raw = fields[i].ok_or(CheckpointError::MissingField(NAMES[i]))?;
        raw.parse().map_err(|_| CheckpointError::CorruptValue {
            field: NAMES[i],
            value: raw.to_string(),
        })
    }
    let version = num(&fields, 0)?;
    if version != CHECKPOINT_VERSION {
        return Err(CheckpointError::VersionMismatch { found: version });
    }
    let raw_format = fields[5].ok_or(CheckpointError::MissingField("output_format"))?;
    let output_format = raw_format.parse().map_err(|_| CheckpointError::CorruptValue {
        field: "output_format",
        value: raw_format.to_string(),
    })?;
    Ok(CheckpointManifest {
        version,
        n: num(&fields, 1)?,
        band_width: num(&fields, 2)?,
        margin: num(&fields, 3)?,
        next_band_index: num(&fields, 4)?,
        output_format,
    })
}
