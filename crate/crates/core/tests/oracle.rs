//! Oracle equivalence and symmetry checks between the two gap routes.

use gaussgap_core::gapfield::{
    boundary_primes, compute_gap_field, ladder_gap, ladder_gap_in, SearchRegion,
};
use gaussgap_core::gprime::{
    eightfold_orbit, is_gaussian_prime, l1_distance, wedge_representative, GaussianPoint,
    WedgePoint,
};
use gaussgap_core::region::build_prime_mask;
use gaussgap_core::BandSpec;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

#[test]
fn transform_equals_ladder_up_to_300() {
    let band = BandSpec::new(0, 300, 64).unwrap();
    let field = compute_gap_field(&build_prime_mask(&band).unwrap()).unwrap();
    for (a, b, got) in field.iter_cells() {
        let want = ladder_gap(WedgePoint::new(a, b), 128).unwrap();
        assert_eq!(got as u32, want, "cell ({a}, {b})");
    }
}

#[test]
fn full_plane_equals_wedge_search() {
    // The prose intersects balls with the wedge; the code searches the whole
    // plane. Both give the same gap for wedge centers.
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..1_000 {
        let a = rng.gen_range(0..3_000u32);
        let b = rng.gen_range(0..=a);
        let w = WedgePoint::new(a, b);
        assert_eq!(
            ladder_gap_in(w, 64, SearchRegion::FullPlane).unwrap(),
            ladder_gap_in(w, 64, SearchRegion::WedgeOnly).unwrap(),
            "center {w:?}"
        );
    }
}

#[test]
fn primality_is_orbit_invariant() {
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..10_000 {
        let x = rng.gen_range(-1_000_000i64..=1_000_000);
        let y = rng.gen_range(-1_000_000i64..=1_000_000);
        let p = GaussianPoint::new(x, y);
        let is_prime = is_gaussian_prime(p);
        for q in eightfold_orbit(p) {
            assert_eq!(is_gaussian_prime(q), is_prime, "orbit of ({x}, {y})");
        }
    }
}

#[test]
fn wedge_representative_never_increases_distance() {
    // The reflection argument behind sieving only the wedge: folding a prime
    // into the wedge cannot move it farther from a wedge center.
    let mut rng = StdRng::seed_from_u64(13);
    for _ in 0..10_000 {
        let c = {
            let a = rng.gen_range(0..5_000u32);
            let b = rng.gen_range(0..=a);
            GaussianPoint::new(a as i64, b as i64)
        };
        let p = GaussianPoint::new(rng.gen_range(-5_000i64..=5_000), rng.gen_range(-5_000i64..=5_000));
        let folded = GaussianPoint::from(wedge_representative(p));
        assert!(
            l1_distance(c, folded) <= l1_distance(c, p),
            "center {c:?}, point {p:?}"
        );
    }
}

#[test]
fn boundary_primes_match_gap() {
    // The first nonempty boundary is exactly at the gap radius.
    for a in 0..60u32 {
        for b in 0..=a {
            let w = WedgePoint::new(a, b);
            let gap = ladder_gap(w, 64).unwrap();
            for r in 0..gap {
                assert!(boundary_primes(w, r).is_empty(), "center {w:?} radius {r}");
            }
            let ring = boundary_primes(w, gap);
            assert!(!ring.is_empty(), "center {w:?}");
            for p in ring {
                assert!(is_gaussian_prime(p));
                assert_eq!(l1_distance(GaussianPoint::from(w), p), gap as u64);
            }
        }
    }
}
