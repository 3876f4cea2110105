//! Gap computation: taxicab distance from each wedge center to the nearest
//! Gaussian prime.
//!
//! Two routes are kept deliberately independent. [`ladder_gap`] is the
//! reference ring scan: it walks the four segments of the L1 circle at
//! increasing radius and stops at the first prime. [`compute_gap_field`]
//! is the production route: an exact two-pass L1 distance transform over a
//! band's covered trapezoid, sources taken from the prime mask.
//!
//! The transform is exact inside the wedge because any two wedge points are
//! joined by a staircase path (monotone in both coordinates) that stays in
//! the wedge and inside the column range of its endpoints, and because a
//! nearest prime anywhere in the plane has a wedge representative at no
//! greater distance.

use thiserror::Error;

use crate::gprime::{is_gaussian_prime, GaussianPoint, WedgePoint};
use crate::region::{cells_in_columns, BandSpec, PrimeMask};

#[derive(Debug, Error)]
pub enum GapFieldError {
    #[error(
        "margin {margin} exhausted: some core cell is farther than {margin} from every \
         covered prime; retry with a larger margin"
    )]
    MarginExhausted { margin: u32 },
}

#[derive(Debug, Error)]
#[error("no Gaussian prime within L1 distance {limit} of ({a}, {b})")]
pub struct LimitExceeded {
    pub a: u32,
    pub b: u32,
    pub limit: u32,
}

/// Where the ladder searches for primes.
///
/// The prose definition intersects balls with the wedge; the executed code
/// searches all four quadrants. Full-plane is canonical here and the two
/// agree for every wedge center, which the tests check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchRegion {
    FullPlane,
    WedgeOnly,
}

fn ring_points(center: GaussianPoint, r: i64) -> impl Iterator<Item = GaussianPoint> {
    let GaussianPoint { x, y } = center;
    (0..r).flat_map(move |j| {
        [
            GaussianPoint::new(x + r - j, y + j),
            GaussianPoint::new(x - j, y + r - j),
            GaussianPoint::new(x - (r - j), y - j),
            GaussianPoint::new(x + j, y - (r - j)),
        ]
    })
}

fn in_wedge(p: GaussianPoint) -> bool {
    p.x >= p.y && p.y >= 0
}

/// Least `r` with a Gaussian prime at L1 distance exactly `r` from `center`,
/// searching `region`. Errors past `limit`.
pub fn ladder_gap_in(
    center: WedgePoint,
    limit: u32,
    region: SearchRegion,
) -> Result<u32, LimitExceeded> {
    assert!(limit >= 1);
    let c = GaussianPoint::from(center);
    if is_gaussian_prime(c) {
        return Ok(0);
    }
    for r in 1..=limit {
        let mut found = ring_points(c, r as i64);
        let hit = match region {
            SearchRegion::FullPlane => found.any(is_gaussian_prime),
            SearchRegion::WedgeOnly => found.any(|p| in_wedge(p) && is_gaussian_prime(p)),
        };
        if hit {
            return Ok(r);
        }
    }
    Err(LimitExceeded {
        a: center.a(),
        b: center.b(),
        limit,
    })
}

/// Full-plane ladder gap, the appendix ring scan with exact primality.
pub fn ladder_gap(center: WedgePoint, limit: u32) -> Result<u32, LimitExceeded> {
    ladder_gap_in(center, limit, SearchRegion::FullPlane)
}

/// All Gaussian primes at L1 distance exactly `r` from `center`, whole plane.
pub fn boundary_primes(center: WedgePoint, r: u32) -> Vec<GaussianPoint> {
    let c = GaussianPoint::from(center);
    if r == 0 {
        return if is_gaussian_prime(c) { vec![c] } else { Vec::new() };
    }
    ring_points(c, r as i64).filter(|&p| is_gaussian_prime(p)).collect()
}

/// Per-cell gaps over a band's core columns.
#[derive(Debug)]
pub struct GapField {
    band: BandSpec,
    /// `T(a_lo)`, subtracted to index `gaps`.
    base: u64,
    gaps: Vec<u16>,
}

impl GapField {
    pub fn band(&self) -> &BandSpec {
        &self.band
    }

    /// Gap at core cell `(a, b)`; `a` must lie in the core columns, `b <= a`.
    #[inline]
    pub fn gap(&self, a: u32, b: u32) -> u16 {
        debug_assert!(a >= self.band.a_lo() && a <= self.band.a_hi());
        debug_assert!(b <= a);
        let i = (a as u64 * (a as u64 + 1) / 2 - self.base + b as u64) as usize;
        self.gaps[i]
    }

    /// Core cells with their gaps, ordered by column then row.
    pub fn iter_cells(&self) -> impl Iterator<Item = (u32, u32, u16)> + '_ {
        let band = self.band;
        (band.a_lo()..=band.a_hi())
            .flat_map(move |a| (0..=a).map(move |b| (a, b)))
            .zip(self.gaps.iter())
            .map(|((a, b), &g)| (a, b, g))
    }
}

const UNREACHED: u16 = u16::MAX;

/// Exact gaps for every core cell of the mask's band.
///
/// Fails with [`GapFieldError::MarginExhausted`] when some core cell's
/// nearest prime is farther than the margin; the caller doubles the margin
/// and rebuilds the mask.
pub fn compute_gap_field(mask: &PrimeMask) -> Result<GapField, GapFieldError> {
    let band = *mask.band();
    let x_min = band.x_min();
    let x_max = band.x_max();
    let cells = band.covered_cells() as usize;
    let mut dist = vec![UNREACHED; cells];

    // Forward pass: sources, then left and lower neighbors.
    let mut i = 0usize;
    for x in x_min..=x_max {
        // Flat index of (x-1, y) is i - x for the current cell index i.
        let col = (x - x_min) as usize;
        let left_off = x as usize; // (x,y) -> (x-1,y) distance in flat indexing
        for y in 0..=x {
            let d = if mask.bit(x, y) {
                0
            } else {
                let mut d = UNREACHED;
                if col > 0 && y < x {
                    d = d.min(dist[i - left_off].saturating_add(1));
                }
                if y > 0 {
                    d = d.min(dist[i - 1].saturating_add(1));
                }
                d
            };
            dist[i] = d;
            i += 1;
        }
    }

    // Backward pass: right and upper neighbors.
    let mut i = cells;
    for x in (x_min..=x_max).rev() {
        let right_off = x as usize + 1; // (x,y) -> (x+1,y)
        for y in (0..=x).rev() {
            i -= 1;
            let mut d = dist[i];
            if x < x_max {
                d = d.min(dist[i + right_off].saturating_add(1));
            }
            if y < x {
                d = d.min(dist[i + 1].saturating_add(1));
            }
            dist[i] = d;
        }
    }

    // Extract core columns; validate against the margin.
    let margin = band.margin();
    let core = cells_in_columns(band.a_lo(), band.a_hi()) as usize;
    let mut gaps = Vec::with_capacity(core);
    let core_start = (cells_in_columns(x_min, band.a_lo()) - (band.a_lo() as u64 + 1)) as usize;
    let core_end = core_start + core;
    for &d in &dist[core_start..core_end] {
        if d as u32 > margin {
            return Err(GapFieldError::MarginExhausted {
                margin: band.margin(),
            });
        }
        gaps.push(d);
    }
    Ok(GapField {
        band,
        base: band.a_lo() as u64 * (band.a_lo() as u64 + 1) / 2,
        gaps,
    })
}
