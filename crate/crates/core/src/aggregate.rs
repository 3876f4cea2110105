//! Reductions of the gap field: per-shell maxima, the Cramér-style ratio
//! series, and the record series behind the gap-versus-prime figure.
//!
//! A shell is the set of wedge centers at fixed taxicab distance
//! `d = a + b` from the origin; shell `d` holds `floor(d/2) + 1` centers.

use thiserror::Error;

use crate::gapfield::{boundary_primes, GapField};
use crate::gprime::WedgePoint;

#[derive(Debug, Error)]
pub enum AggregateError {
    #[error("shell {d} is not fully covered: saw {seen} of {expected} centers")]
    Coverage { d: u32, seen: u64, expected: u64 },
    #[error("no gap field covers column {a}")]
    MissingColumn { a: u32 },
}

/// Per-shell maxima: largest gap and largest prime norm on the shell.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ShellRecord {
    pub d: u32,
    pub max_gap: u32,
    /// 0 when the shell holds no Gaussian prime.
    pub max_prime_norm: u64,
}

/// Centers on shell `d` within the wedge.
pub fn shell_size(d: u32) -> u64 {
    d as u64 / 2 + 1
}

/// Streaming accumulator for shell statistics; feed every wedge center with
/// `a + b <= d_max` exactly once, in any order.
pub struct ShellAccumulator {
    d_max: u32,
    records: Vec<ShellRecord>,
    seen: Vec<u64>,
}

impl ShellAccumulator {
    pub fn new(d_max: u32) -> Self {
        let records = (0..=d_max)
            .map(|d| ShellRecord {
                d,
                max_gap: 0,
                max_prime_norm: 0,
            })
            .collect();
        Self {
            d_max,
            records,
            seen: vec![0; d_max as usize + 1],
        }
    }

    /// Records one center; centers beyond `d_max` are ignored.
    #[inline]
    pub fn add(&mut self, a: u32, b: u32, gap: u32) {
        let d = a + b;
        if d > self.d_max {
            return;
        }
        let rec = &mut self.records[d as usize];
        rec.max_gap = rec.max_gap.max(gap);
        if gap == 0 {
            let norm = a as u64 * a as u64 + b as u64 * b as u64;
            rec.max_prime_norm = rec.max_prime_norm.max(norm);
        }
        self.seen[d as usize] += 1;
    }

    /// Validates full coverage of every shell and returns the records.
    pub fn finish(self) -> Result<Vec<ShellRecord>, AggregateError> {
        for (d, &seen) in self.seen.iter().enumerate() {
            let expected = shell_size(d as u32);
            if seen != expected {
                return Err(AggregateError::Coverage {
                    d: d as u32,
                    seen,
                    expected,
                });
            }
        }
        Ok(self.records)
    }
}

fn check_columns(fields: &[GapField], d_max: u32) -> Result<(), AggregateError> {
    let mut covered = vec![false; d_max as usize + 1];
    for f in fields {
        let lo = f.band().a_lo().min(d_max + 1);
        let hi = f.band().a_hi().min(d_max);
        for c in &mut covered[lo as usize..=hi as usize] {
            *c = true;
        }
    }
    match covered.iter().position(|&c| !c) {
        Some(a) => Err(AggregateError::MissingColumn { a: a as u32 }),
        None => Ok(()),
    }
}

/// One [`ShellRecord`] per `d` in `[0, d_max]`, reduced from the given fields
/// in a single pass per band. Fields must jointly cover columns `0..=d_max`.
pub fn shell_stats(fields: &[GapField], d_max: u32) -> Result<Vec<ShellRecord>, AggregateError> {
    check_columns(fields, d_max)?;
    let mut acc = ShellAccumulator::new(d_max);
    for f in fields {
        for (a, b, g) in f.iter_cells() {
            acc.add(a, b, g as u32);
        }
    }
    acc.finish()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RatioMode {
    /// Running maxima of gap and prime norm.
    Cumulative,
    /// The shell's own maximal gap against the running maximal prime norm.
    PerShell,
}

/// What goes into the logarithm: the prime norm `a^2 + b^2` or its square
/// root (the "magnitude" reading of the figure axis).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RatioAxis {
    Norm,
    Magnitude,
}

/// One row of the ratio series. `p` is always the cumulative maximal prime
/// norm; the axis choice only affects `ratio`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RatioPoint {
    pub d: u32,
    pub g: u32,
    pub p: u64,
    /// `g / (ln p_axis)^2`, natural log.
    pub ratio: f64,
}

/// Cramér-style ratio series; rows are emitted once the running prime norm
/// reaches 2.
pub fn ratio_series(shells: &[ShellRecord], mode: RatioMode, axis: RatioAxis) -> Vec<RatioPoint> {
    let mut out = Vec::new();
    let mut g_run = 0u32;
    let mut p_run = 0u64;
    for s in shells {
        g_run = g_run.max(s.max_gap);
        p_run = p_run.max(s.max_prime_norm);
        if p_run < 2 {
            continue;
        }
        let g = match mode {
            RatioMode::Cumulative => g_run,
            RatioMode::PerShell => s.max_gap,
        };
        let p_axis = match axis {
            RatioAxis::Norm => p_run as f64,
            RatioAxis::Magnitude => (p_run as f64).sqrt(),
        };
        let log = p_axis.ln();
        out.push(RatioPoint {
            d: s.d,
            g,
            p: p_run,
            ratio: g as f64 / (log * log),
        });
    }
    out
}

/// One row of the record series: a gap that beat every earlier gap, paired
/// with the largest prime norm on the ball boundary around its center.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FigureRow {
    pub prime_norm: u64,
    pub gap: u32,
}

/// Record centers in scan order (`d` ascending, then `a`): centers whose gap
/// strictly exceeds every earlier gap. The helper is shared with the
/// streaming file path in the CLI.
pub fn records_to_rows(records: impl IntoIterator<Item = (u32, u32, u32)>) -> Vec<FigureRow> {
    records
        .into_iter()
        .map(|(a, b, gap)| {
            let prime_norm = boundary_primes(WedgePoint::new(a, b), gap)
                .iter()
                .map(|p| p.norm())
                .max()
                .expect("a gap's boundary holds at least one prime");
            FigureRow { prime_norm, gap }
        })
        .collect()
}

/// The gap-record series over all shells up to `d_max`.
pub fn figure_series(fields: &[GapField], d_max: u32) -> Result<Vec<FigureRow>, AggregateError> {
    check_columns(fields, d_max)?;
    let lookup = |a: u32, b: u32| -> Result<u32, AggregateError> {
        fields
            .iter()
            .find(|f| f.band().a_lo() <= a && a <= f.band().a_hi())
            .map(|f| f.gap(a, b) as u32)
            .ok_or(AggregateError::MissingColumn { a })
    };
    let mut best: i64 = -1;
    let mut records = Vec::new();
    for d in 0..=d_max {
        for a in d.div_ceil(2)..=d {
            let b = d - a;
            let gap = lookup(a, b)?;
            if gap as i64 > best {
                best = gap as i64;
                records.push((a, b, gap));
            }
        }
    }
    Ok(records_to_rows(records))
}
