//! Banded sieving of the wedge: a bitmap marking Gaussian primes over a
//! column range with a margin on both sides.
//!
//! Cells are the lattice points `(x, y)` with `x_min <= x <= x_max` and
//! `0 <= y <= x` (a trapezoid cut from the wedge). Column `x` holds `x + 1`
//! cells, so the flat index of `(x, y)` is `T(x) - T(x_min) + y` with
//! `T(x) = x(x+1)/2`.

use rayon::prelude::*;
use thiserror::Error;


/// Default cap on mask storage: 2 GiB of bits.
pub const DEFAULT_MASK_BUDGET_BYTES: u64 = 2 << 30;

#[derive(Debug, Error)]
pub enum RegionError {
    #[error("invalid band: a_lo {a_lo} > a_hi {a_hi}")]
    InvalidBounds { a_lo: u32, a_hi: u32 },
    #[error("invalid band: margin must be >= 1")]
    ZeroMargin,
    #[error(
        "mask over {cells} cells needs {needed} bytes, exceeding the {budget} byte budget; \
         shrink the band"
    )]
    CapacityExceeded { cells: u64, needed: u64, budget: u64 },
}

/// A core column range plus sieving margin.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BandSpec {
    a_lo: u32,
    a_hi: u32,
    margin: u32,
}

fn tri(x: u64) -> u64 {
    x * (x + 1) / 2
}

impl BandSpec {
    pub fn new(a_lo: u32, a_hi: u32, margin: u32) -> Result<Self, RegionError> {
        if a_lo > a_hi {
            return Err(RegionError::InvalidBounds { a_lo, a_hi });
        }
        if margin == 0 {
            return Err(RegionError::ZeroMargin);
        }
        Ok(Self { a_lo, a_hi, margin })
    }

    pub fn a_lo(&self) -> u32 {
        self.a_lo
    }

    pub fn a_hi(&self) -> u32 {
        self.a_hi
    }

    pub fn margin(&self) -> u32 {
        self.margin
    }

    /// Same core range with a different margin.
    pub fn with_margin(&self, margin: u32) -> Result<Self, RegionError> {
        Self::new(self.a_lo, self.a_hi, margin)
    }

    /// First sieved column (left margin clamped at zero).
    pub fn x_min(&self) -> u32 {
        self.a_lo.saturating_sub(self.margin)
    }

    /// Last sieved column.
    pub fn x_max(&self) -> u32 {
        self.a_hi + self.margin
    }

    /// Cells in the covered trapezoid, margins included.
    pub fn covered_cells(&self) -> u64 {
        cells_in_columns(self.x_min(), self.x_max())
    }

    /// Cells in the core columns only.
    pub fn core_cells(&self) -> u64 {
        cells_in_columns(self.a_lo, self.a_hi)
    }
}

/// Number of wedge cells with `x_lo <= x <= x_hi`, `0 <= y <= x`.
pub fn cells_in_columns(x_lo: u32, x_hi: u32) -> u64 {
    debug_assert!(x_lo <= x_hi);
    tri(x_hi as u64 + 1) - tri(x_lo as u64)
}

/// Cells in the covered region of `band` (operation form of [`BandSpec::covered_cells`]).
pub fn covered_cells(band: &BandSpec) -> u64 {
    band.covered_cells()
}

/// Immutable Gaussian-prime bitmap over a band's covered trapezoid.
#[derive(Debug)]
pub struct PrimeMask {
    band: BandSpec,
    /// `tri(x_min)`, subtracted to get flat indices.
    base: u64,
    cells: u64,
    words: Vec<u64>,
}

impl PrimeMask {
    pub fn band(&self) -> &BandSpec {
        &self.band
    }

    #[inline]
    fn flat(&self, x: u32, y: u32) -> u64 {
        debug_assert!(x >= self.band.x_min() && x <= self.band.x_max());
        debug_assert!(y <= x);
        tri(x as u64) - self.base + y as u64
    }

    /// Whether `(x, y)` is a Gaussian prime. `(x, y)` must be covered.
    #[inline]
    pub fn bit(&self, x: u32, y: u32) -> bool {
        let i = self.flat(x, y);
        self.words[(i / 64) as usize] >> (i % 64) & 1 == 1
    }

    pub fn covered_cells(&self) -> u64 {
        self.cells
    }

    pub fn popcount(&self) -> u64 {
        self.words.iter().map(|w| w.count_ones() as u64).sum()
    }
}

/// Inverse triangular root: largest `x` with `x(x+1)/2 <= g`.
fn column_of(g: u64) -> u64 {
    let mut x = (((8.0 * g as f64 + 1.0).sqrt() - 1.0) / 2.0) as u64;
    while tri(x + 1) <= g {
        x += 1;
    }
    while tri(x) > g {
        x -= 1;
    }
    x
}

#[inline]
fn cell_is_prime(x: u32, y: u32) -> bool {
    if y == 0 {
        let n = x as u64;
        n % 4 == 3 && crate::gprime::is_rational_prime(n)
    } else {
        // Both coordinates nonzero: prime iff the norm is. Same-parity
        // coordinates give an even norm, prime only for (1, 1).
        if (x ^ y) & 1 == 0 {
            return x == 1 && y == 1;
        }
        let n = x as u64 * x as u64 + y as u64 * y as u64;
        crate::gprime::is_rational_prime(n)
    }
}

pub fn build_prime_mask(band: &BandSpec) -> Result<PrimeMask, RegionError> {
    build_prime_mask_with_budget(band, DEFAULT_MASK_BUDGET_BYTES)
}

/// Builds the bitmap, in parallel over 64-cell words.
pub fn build_prime_mask_with_budget(
    band: &BandSpec,
    budget_bytes: u64,
) -> Result<PrimeMask, RegionError> {
    let cells = band.covered_cells();
    let needed = cells.div_ceil(8);
    if needed > budget_bytes {
        return Err(RegionError::CapacityExceeded {
            cells,
            needed,
            budget: budget_bytes,
        });
    }
    let base = tri(band.x_min() as u64);
    let n_words = cells.div_ceil(64) as usize;
    let words: Vec<u64> = (0..n_words)
        .into_par_iter()
        .map(|wi| {
            let mut word = 0u64;
            let first = base + wi as u64 * 64;
            let mut x = column_of(first);
            let mut y = first - tri(x);
            let in_word = (cells - wi as u64 * 64).min(64);
            for bit in 0..in_word {
                if cell_is_prime(x as u32, y as u32) {
                    word |= 1 << bit;
                }
                y += 1;
                if y > x {
                    x += 1;
                    y = 0;
                }
            }
            word
        })
        .collect();
    Ok(PrimeMask {
        band: *band,
        base,
        cells,
        words,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gprime::{is_gaussian_prime, GaussianPoint};

    #[test]
    fn covered_cell_counts() {
        assert_eq!(cells_in_columns(0, 2), 6);
        assert_eq!(cells_in_columns(3, 3), 4);
        for n in 0..50u32 {
            assert_eq!(cells_in_columns(0, n), (n as u64 + 1) * (n as u64 + 2) / 2);
        }
    }

    #[test]
    fn column_of_roundtrip() {
        for x in 0..200u64 {
            for y in 0..=x {
                assert_eq!(column_of(tri(x) + y), x);
            }
        }
    }

    #[test]
    fn small_band_bits() {
        let band = BandSpec::new(0, 4, 1).unwrap();
        let mask = build_prime_mask(&band).unwrap();
        let mut set = Vec::new();
        for x in 0..=5u32 {
            for y in 0..=x {
                if mask.bit(x, y) {
                    set.push((x, y));
                }
            }
        }
        assert_eq!(
            set,
            vec![(1, 1), (2, 1), (3, 0), (3, 2), (4, 1), (5, 2), (5, 4)]
        );
    }

    #[test]
    fn origin_band() {
        let band = BandSpec::new(0, 0, 1).unwrap();
        let mask = build_prime_mask(&band).unwrap();
        assert!(!mask.bit(0, 0));
    }

    #[test]
    fn popcount_matches_classifier() {
        let band = BandSpec::new(10, 60, 5).unwrap();
        let mask = build_prime_mask(&band).unwrap();
        let mut count = 0u64;
        for x in band.x_min()..=band.x_max() {
            for y in 0..=x {
                let p = is_gaussian_prime(GaussianPoint::new(x as i64, y as i64));
                assert_eq!(mask.bit(x, y), p, "cell ({x}, {y})");
                count += u64::from(p);
            }
        }
        assert_eq!(mask.popcount(), count);
    }

    #[test]
    fn overlapping_bands_agree() {
        let m1 = build_prime_mask(&BandSpec::new(0, 100, 10).unwrap()).unwrap();
        let m2 = build_prime_mask(&BandSpec::new(50, 150, 10).unwrap()).unwrap();
        for x in 50..=110u32 {
            for y in 0..=x {
                assert_eq!(m1.bit(x, y), m2.bit(x, y));
            }
        }
    }

    #[test]
    fn capacity_budget() {
        let band = BandSpec::new(0, 10_000, 1).unwrap();
        let err = build_prime_mask_with_budget(&band, 1024).unwrap_err();
        assert!(matches!(err, RegionError::CapacityExceeded { .. }));
    }

    #[test]
    fn invalid_bands() {
        assert!(BandSpec::new(5, 4, 1).is_err());
        assert!(BandSpec::new(0, 4, 0).is_err());
    }
}
