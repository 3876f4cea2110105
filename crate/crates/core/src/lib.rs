//! Gaussian prime gaps under the taxicab metric.
//!
//! The pipeline: classify Gaussian primes over the wedge `a >= b >= 0`
//! ([`gprime`]), sieve them into banded bitmaps ([`region`]), compute each
//! center's distance to the nearest prime by an exact L1 distance transform
//! with a ring-scan ladder as the independent oracle ([`gapfield`]), reduce
//! to per-shell maxima and Cramér-style ratios ([`aggregate`]), and persist
//! in legacy-compatible or CSV text with resumable checkpoints ([`io`]).

pub mod aggregate;
pub mod gapfield;
pub mod gprime;
pub mod io;
pub mod region;

pub use aggregate::{RatioAxis, RatioMode, RatioPoint, ShellRecord};
pub use gapfield::{GapField, SearchRegion};
pub use gprime::{GaussianPoint, WedgePoint};
pub use io::{CheckpointManifest, Format};
pub use region::{BandSpec, PrimeMask};
