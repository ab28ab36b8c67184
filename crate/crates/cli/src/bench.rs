//! Doubling bench for basis extraction.
//!
//! Generates seeded random generator matrices, times `extract_basis` on a
//! grid of sizes and reports the time ratio per doubling of `k` at fixed
//! `n` (and of `n` at fixed `k`). The scan methods cost `O(nk²)`, so a
//! doubling of `k` should show a ratio near 4 and a doubling of `n` a
//! ratio near 2. Matrix generation is deterministic given the seed.

use std::time::{Duration, Instant};

use maxcone_core::{extract_basis, ExtractMethod, GeneratorMatrix, Tolerance};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::CliError;

#[derive(Clone, Debug)]
pub struct BenchConfig {
    pub n_sizes: Vec<usize>,
    pub k_sizes: Vec<usize>,
    pub reps: usize,
    pub seed: u64,
    pub method: ExtractMethod,
    /// Probability of a zero entry; 0 keeps every entry in `(0, 1]`.
    pub sparsity: f64,
    pub rtol: f64,
}

#[derive(Clone, Debug)]
pub struct BenchCell {
    pub n: usize,
    pub k: usize,
    pub reps: usize,
    pub median: Duration,
    /// Sum of the generated entries; a determinism fingerprint.
    pub checksum: f64,
}

#[derive(Clone, Debug)]
pub struct DoublingRatio {
    /// `(n, k)` of the smaller cell.
    pub from: (usize, usize),
    pub to: (usize, usize),
    pub time_from: Duration,
    pub time_to: Duration,
}

impl DoublingRatio {
    pub fn ratio(&self) -> f64 {
        self.time_to.as_secs_f64() / self.time_from.as_secs_f64()
    }
}

#[derive(Clone, Debug)]
pub struct BenchReport {
    pub method: ExtractMethod,
    pub seed: u64,
    pub cells: Vec<BenchCell>,
    /// Ratios across consecutive `k` values at fixed `n`.
    pub k_ratios: Vec<DoublingRatio>,
    /// Ratios across consecutive `n` values at fixed `k`.
    pub n_ratios: Vec<DoublingRatio>,
}

/// Entries uniform on `(0, 1]`, zeroed with probability `sparsity`.
pub fn generate_matrix(rng: &mut StdRng, n: usize, k: usize, sparsity: f64) -> GeneratorMatrix {
    let data: Vec<f64> = (0..n * k)
        .map(|_| {
            if sparsity > 0.0 && rng.random::<f64>() < sparsity {
                0.0
            } else {
                1.0 - rng.random::<f64>()
            }
        })
        .collect();
    GeneratorMatrix::from_row_major(n, k, &data).expect("generated entries are valid")
}

fn median(mut times: Vec<Duration>) -> Duration {
    times.sort();
    let mid = times[times.len() / 2];
    mid.max(Duration::from_nanos(1))
}

pub fn run_bench(config: &BenchConfig) -> Result<BenchReport, CliError> {
    if config.n_sizes.is_empty() || config.k_sizes.is_empty() {
        return Err(CliError::InvalidArgument("no sizes given".into()));
    }
    if config.n_sizes.iter().chain(&config.k_sizes).any(|&s| s == 0) {
        return Err(CliError::InvalidArgument("sizes must be positive".into()));
    }
    if config.reps == 0 {
        return Err(CliError::InvalidArgument(
            "repetitions must be positive".into(),
        ));
    }
    if !(0.0..1.0).contains(&config.sparsity) {
        return Err(CliError::InvalidArgument(
            "sparsity must lie in [0, 1)".into(),
        ));
    }

    let mut rng = StdRng::seed_from_u64(config.seed);
    let mut cells = Vec::new();
    for &n in &config.n_sizes {
        for &k in &config.k_sizes {
            let matrix = generate_matrix(&mut rng, n, k, config.sparsity);
            let checksum: f64 = matrix.columns().flatten().sum();
            let tol = Tolerance::for_matrix(&matrix, config.rtol)?;

            // One warmup, then timed repetitions.
            std::hint::black_box(extract_basis(&matrix, config.method, &tol));
            let mut times = Vec::with_capacity(config.reps);
            for _ in 0..config.reps {
                let start = Instant::now();
                std::hint::black_box(extract_basis(&matrix, config.method, &tol));
                times.push(start.elapsed());
            }
            cells.push(BenchCell {
                n,
                k,
                reps: config.reps,
                median: median(times),
                checksum,
            });
        }
    }

    let cell = |n: usize, k: usize| cells.iter().find(|c| c.n == n && c.k == k).unwrap();
    let mut k_ratios = Vec::new();
    for &n in &config.n_sizes {
        for pair in config.k_sizes.windows(2) {
            let (a, b) = (cell(n, pair[0]), cell(n, pair[1]));
            k_ratios.push(DoublingRatio {
                from: (n, pair[0]),
                to: (n, pair[1]),
                time_from: a.median,
                time_to: b.median,
            });
        }
    }
    let mut n_ratios = Vec::new();
    for &k in &config.k_sizes {
        for pair in config.n_sizes.windows(2) {
            let (a, b) = (cell(pair[0], k), cell(pair[1], k));
            n_ratios.push(DoublingRatio {
                from: (pair[0], k),
                to: (pair[1], k),
                time_from: a.median,
                time_to: b.median,
            });
        }
    }

    Ok(BenchReport {
        method: config.method,
        seed: config.seed,
        cells,
        k_ratios,
        n_ratios,
    })
}

pub fn render_report(report: &BenchReport) -> String {
    let mut out = String::new();
    let method = method_name(report.method);
    out.push_str(&format!("method={} seed={}\n", method, report.seed));
    for c in &report.cells {
        out.push_str(&format!(
            "n={} k={} method={} reps={} median={:?} checksum={}\n",
            c.n, c.k, method, c.reps, c.median, c.checksum
        ));
    }
    for r in &report.k_ratios {
        out.push_str(&format!(
            "doubling k {} -> {} at n={}: ratio {:.2} ({:?} -> {:?})\n",
            r.from.1,
            r.to.1,
            r.from.0,
            r.ratio(),
            r.time_from,
            r.time_to
        ));
    }
    for r in &report.n_ratios {
        out.push_str(&format!(
            "doubling n {} -> {} at k={}: ratio {:.2} ({:?} -> {:?})\n",
            r.from.0,
            r.to.0,
            r.from.1,
            r.ratio(),
            r.time_from,
            r.time_to
        ));
    }
    out
}

pub fn method_name(method: ExtractMethod) -> &'static str {
    match method {
        ExtractMethod::Residuation => "residuation",
        ExtractMethod::Covering => "covering",
        ExtractMethod::Minima => "minima",
    }
}
