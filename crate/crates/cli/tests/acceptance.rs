//! Acceptance suite: one test per release criterion, each printing a
//! PASS line. Run with `cargo test --test acceptance -- --nocapture`.
//!
//! The full-scale criterion computes every gap through shell 31567 twice
//! (once uninterrupted, once killed and resumed) and takes several minutes.

use std::fs::{self, File};
use std::io::{BufRead, BufReader, Read};
use std::path::Path;
use std::process::{Command, Stdio};
use std::time::{Duration, Instant};

use gaussgap_core::aggregate::{ratio_series, shell_stats, RatioAxis, RatioMode};
use gaussgap_core::gapfield::{compute_gap_field, ladder_gap};
use gaussgap_core::gprime::{
    eightfold_orbit, is_gaussian_prime, is_rational_prime, GaussianPoint, WedgePoint,
};
use gaussgap_core::io::{read_points, write_points, Format};
use gaussgap_core::region::build_prime_mask;
use gaussgap_core::BandSpec;
use sha2::{Digest, Sha256};

fn pass(name: &str, detail: &str) {
    println!("ACCEPTANCE {name}: PASS ({detail})");
}

#[test]
fn criterion_oracle_equivalence() {
    let start = Instant::now();
    let band = BandSpec::new(0, 300, 64).unwrap();
    let field = compute_gap_field(&build_prime_mask(&band).unwrap()).unwrap();
    let mut mismatches = 0u64;
    let mut cells = 0u64;
    for (a, b, got) in field.iter_cells() {
        cells += 1;
        let want = ladder_gap(WedgePoint::new(a, b), 128).unwrap();
        if got as u32 != want {
            mismatches += 1;
            eprintln!("mismatch at ({a}, {b}): transform {got}, ladder {want}");
        }
    }
    assert_eq!(mismatches, 0);
    pass(
        "oracle-equivalence",
        &format!("{cells} cells, 0 mismatches, {:.1?}", start.elapsed()),
    );
}

/// Small deterministic PRNG so the suite has no RNG dependency.
struct SplitMix(u64);

impl SplitMix {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    fn below(&mut self, n: u64) -> u64 {
        self.next() % n
    }
}

#[test]
fn criterion_primality_exactness() {
    // Exhaustive sieve of Eratosthenes as the independent oracle.
    const LIMIT: usize = 1_000_000;
    let mut composite = vec![false; LIMIT + 1];
    for p in 2..=LIMIT {
        if !composite[p] {
            let mut m = p * p;
            while m <= LIMIT {
                composite[m] = true;
                m += p;
            }
        }
    }
    for n in 0..=LIMIT {
        let want = n >= 2 && !composite[n];
        assert_eq!(is_rational_prime(n as u64), want, "n = {n}");
    }

    let mut rng = SplitMix(42);
    for _ in 0..10_000 {
        let x = rng.below(2_000_001) as i64 - 1_000_000;
        let y = rng.below(2_000_001) as i64 - 1_000_000;
        let p = GaussianPoint::new(x, y);
        let is_prime = is_gaussian_prime(p);
        for q in eightfold_orbit(p) {
            assert_eq!(is_gaussian_prime(q), is_prime, "orbit of ({x}, {y})");
        }
    }
    pass(
        "primality-exactness",
        "trial sieve to 1e6 exhaustive; eightfold symmetry on 1e4 points",
    );
}

#[test]
fn criterion_known_small_values() {
    let band = BandSpec::new(0, 16, 16).unwrap();
    let field = compute_gap_field(&build_prime_mask(&band).unwrap()).unwrap();
    assert_eq!(field.gap(0, 0), 2);
    assert_eq!(field.gap(2, 0), 1);

    let fields = [field];
    let shells = shell_stats(&fields, 8).unwrap();
    assert_eq!(
        (shells[2].d, shells[2].max_gap, shells[2].max_prime_norm),
        (2, 1, 2)
    );

    let rows = gaussgap_core::aggregate::figure_series(&fields, 8).unwrap();
    assert_eq!((rows[0].prime_norm, rows[0].gap), (2, 2));

    let series = ratio_series(&shells[..3], RatioMode::Cumulative, RatioAxis::Norm);
    let want = 2.0 / 2.0f64.ln().powi(2);
    assert!((series[0].ratio - want).abs() < 1e-12);
    pass(
        "known-small-values",
        "gap(0,0)=2 gap(2,0)=1 shell2=(2,1,2) figure0=(2,2) ratio(d=2)=2/(ln2)^2",
    );
}

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_gaussgap"))
}

fn run_ok(args: &[&str], dir: &Path) {
    let out = bin().args(args).current_dir(dir).output().unwrap();
    assert!(
        out.status.success(),
        "gaussgap {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
}

fn read_ratio_rows(path: &Path) -> Vec<(u32, u32, u64, f64)> {
    fs::read_to_string(path)
        .unwrap()
        .lines()
        .skip(1)
        .map(|l| {
            let f: Vec<&str> = l.split(',').collect();
            (
                f[0].parse().unwrap(),
                f[1].parse().unwrap(),
                f[2].parse().unwrap(),
                f[3].parse().unwrap(),
            )
        })
        .collect()
}

#[test]
fn criterion_trend_reproduction() {
    let start = Instant::now();
    let dir = tempfile::tempdir().unwrap();
    run_ok(&["run", "--n", "10000", "--out-dir", "t"], dir.path());
    let rows = read_ratio_rows(&dir.path().join("t/ratios.csv"));
    assert!(!rows.is_empty());

    // (a) cumulative record gaps are nondecreasing.
    assert!(rows.windows(2).all(|w| w[1].1 >= w[0].1));

    // (b) the ratio trends down: mean over the last decile of emitted
    // shells is strictly below the mean over the first decile.
    let decile = (rows.len() / 10).max(1);
    let mean = |s: &[(u32, u32, u64, f64)]| s.iter().map(|r| r.3).sum::<f64>() / s.len() as f64;
    let first = mean(&rows[..decile]);
    let last = mean(&rows[rows.len() - decile..]);
    assert!(
        last < first,
        "ratio did not decay: first decile {first}, last decile {last}"
    );
    assert!(start.elapsed() < Duration::from_secs(300), "over 5 minutes");
    pass(
        "trend-reproduction",
        &format!(
            "n=10000 in {:.1?}; mean ratio {first:.4} (first decile) -> {last:.4} (last)",
            start.elapsed()
        ),
    );
}

fn sha256_file(path: &Path) -> String {
    let mut f = File::open(path).unwrap();
    let mut hasher = Sha256::new();
    let mut buf = vec![0u8; 1 << 20];
    loop {
        let n = f.read(&mut buf).unwrap();
        if n == 0 {
            break;
        }
        hasher.update(&buf[..n]);
    }
    format!("{:x}", hasher.finalize())
}

const FULL_N: &str = "31567";

#[test]
fn criterion_full_scale_resume() {
    let start = Instant::now();
    let dir = tempfile::tempdir().unwrap();

    // Uninterrupted reference run.
    run_ok(&["run", "--n", FULL_N, "--out-dir", "fresh"], dir.path());
    let fresh: Vec<String> = ["points.csv", "shells.csv", "ratios.csv"]
        .iter()
        .map(|f| sha256_file(&dir.path().join("fresh").join(f)))
        .collect();
    fs::remove_dir_all(dir.path().join("fresh")).unwrap();

    // Killed mid-gaps, then resumed.
    let mut child = bin()
        .args(["run", "--n", FULL_N, "--out-dir", "killed"])
        .current_dir(dir.path())
        .stdout(Stdio::null())
        .stderr(Stdio::null())
        .spawn()
        .unwrap();
    let ckpt = dir.path().join("killed/checkpoint.txt");
    loop {
        std::thread::sleep(Duration::from_millis(200));
        if let Ok(m) = gaussgap_core::io::load_checkpoint(&ckpt) {
            if m.next_band_index >= 2 {
                break;
            }
        }
        assert!(
            child.try_wait().unwrap().is_none(),
            "run finished before it could be killed"
        );
    }
    child.kill().unwrap();
    child.wait().unwrap();
    run_ok(
        &["run", "--n", FULL_N, "--out-dir", "killed", "--resume"],
        dir.path(),
    );
    let resumed: Vec<String> = ["points.csv", "shells.csv", "ratios.csv"]
        .iter()
        .map(|f| sha256_file(&dir.path().join("killed").join(f)))
        .collect();
    assert_eq!(fresh, resumed, "resumed outputs differ from a fresh run");
    assert!(start.elapsed() < Duration::from_secs(4 * 3600), "over 4 hours");
    pass(
        "full-scale-resume",
        &format!(
            "n={FULL_N} twice (fresh + kill/resume) in {:.1?}, outputs byte-identical",
            start.elapsed()
        ),
    );
}

#[test]
fn criterion_format_fidelity() {
    let mut rng = SplitMix(7);
    let rows: Vec<(u32, u32, u32)> = (0..1_000_000)
        .map(|_| {
            let a = rng.below(100_000) as u32;
            let b = rng.below(a as u64 + 1) as u32;
            (a, b, rng.below(100) as u32)
        })
        .collect();
    for format in [Format::Compat, Format::Csv] {
        let mut buf = Vec::new();
        write_points(&mut buf, rows.iter().copied(), format).unwrap();
        let mut back = Vec::with_capacity(rows.len());
        let stats = read_points(BufReader::new(&buf[..]), |a, b, g| back.push((a, b, g))).unwrap();
        assert_eq!(back, rows);
        assert_eq!(stats.skipped, 0);
    }

    let mut line = Vec::new();
    gaussgap_core::io::write_point_row(&mut line, 3, 0, 0, Format::Compat).unwrap();
    assert_eq!(line, b"3| 0| 0\n");
    pass(
        "format-fidelity",
        "1e6 random rows round-trip in both formats; (3,0,0) is exactly \"3| 0| 0\"",
    );
}
