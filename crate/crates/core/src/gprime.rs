//! Gaussian prime classification and the eightfold symmetry of `Z[i]`.
//!
//! A Gaussian integer `a + bi` is prime iff either exactly one coordinate is
//! zero and the other has absolute value a rational prime congruent to
//! 3 mod 4, or both coordinates are nonzero and the norm `a^2 + b^2` is a
//! rational prime. Conjugation and multiplication by units generate an
//! eightfold symmetry, so classification reduces to the closed wedge
//! `a >= b >= 0`.

/// A lattice point of the Gaussian integers, any quadrant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GaussianPoint {
    pub x: i64,
    pub y: i64,
}

impl GaussianPoint {
    pub fn new(x: i64, y: i64) -> Self {
        Self { x, y }
    }

    /// `x^2 + y^2`.
    pub fn norm(&self) -> u64 {
        (self.x as i128 * self.x as i128 + self.y as i128 * self.y as i128) as u64
    }
}

/// A point of the closed wedge `a >= b >= 0`, the fundamental domain of the
/// eightfold symmetry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WedgePoint {
    a: u32,
    b: u32,
}

impl WedgePoint {
    /// Panics if `a < b`; use [`wedge_representative`] to fold an arbitrary
    /// point into the wedge.
    pub fn new(a: u32, b: u32) -> Self {
        assert!(a >= b, "wedge point requires a >= b, got ({a}, {b})");
        Self { a, b }
    }

    pub fn a(&self) -> u32 {
        self.a
    }

    pub fn b(&self) -> u32 {
        self.b
    }

    /// Taxicab distance from the origin, `a + b`.
    pub fn shell(&self) -> u32 {
        self.a + self.b
    }

    pub fn norm(&self) -> u64 {
        self.a as u64 * self.a as u64 + self.b as u64 * self.b as u64
    }
}

impl From<WedgePoint> for GaussianPoint {
    fn from(w: WedgePoint) -> Self {
        GaussianPoint::new(w.a as i64, w.b as i64)
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    (a as u128 * b as u128 % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc: u64 = 1;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// One strong-pseudoprime round; `n` odd, `n - 1 = d * 2^s`.
fn sprp(n: u64, base: u64, d: u64, s: u32) -> bool {
    let base = base % n;
    if base == 0 {
        return true;
    }
    let mut x = pow_mod(base, d, n);
    if x == 1 || x == n - 1 {
        return true;
    }
    for _ in 1..s {
        x = mul_mod(x, x, n);
        if x == n - 1 {
            return true;
        }
    }
    false
}

// Verified deterministic witness sets (Jaeschke; Sorenson & Webster).
const BASES_SMALL: [u64; 4] = [2, 3, 5, 7];
const BASES_SMALL_LIMIT: u64 = 3_215_031_751;
const BASES_FULL: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Exact primality for the full 64-bit range.
///
/// Cheap small-factor screening first, then deterministic Miller-Rabin.
pub fn is_rational_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    if n < 41 * 41 {
        return true;
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    let bases: &[u64] = if n < BASES_SMALL_LIMIT {
        &BASES_SMALL
    } else {
        &BASES_FULL
    };
    bases.iter().all(|&b| sprp(n, b, d, s))
}

/// Folds a point into the wedge via its eightfold orbit: `(max(|x|,|y|), min(|x|,|y|))`.
pub fn wedge_representative(p: GaussianPoint) -> WedgePoint {
    let ax = p.x.unsigned_abs();
    let ay = p.y.unsigned_abs();
    let (a, b) = if ax >= ay { (ax, ay) } else { (ay, ax) };
    WedgePoint::new(a as u32, b as u32)
}

/// Exact Gaussian primality. Zero and units are not prime.
pub fn is_gaussian_prime(p: GaussianPoint) -> bool {
    let w = wedge_representative(p);
    if w.b == 0 {
        // Axis point: prime iff the coordinate is a rational prime = 3 mod 4.
        let n = w.a as u64;
        n % 4 == 3 && is_rational_prime(n)
    } else {
        is_rational_prime(w.norm())
    }
}

/// Taxicab (boxcar) distance `|dx| + |dy|`.
pub fn l1_distance(p: GaussianPoint, q: GaussianPoint) -> u64 {
    p.x.abs_diff(q.x) + p.y.abs_diff(q.y)
}

/// The eight symmetry images of a point (with repeats on axes/diagonals).
pub fn eightfold_orbit(p: GaussianPoint) -> [GaussianPoint; 8] {
    let GaussianPoint { x, y } = p;
    [
        GaussianPoint::new(x, y),
        GaussianPoint::new(-x, y),
        GaussianPoint::new(x, -y),
        GaussianPoint::new(-x, -y),
        GaussianPoint::new(y, x),
        GaussianPoint::new(-y, x),
        GaussianPoint::new(y, -x),
        GaussianPoint::new(-y, -x),
    ]
}
