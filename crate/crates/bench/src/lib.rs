//! Shared input generation for the criterion benchmarks.

use maxcone_core::{GeneratorMatrix, MaxVector};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// An `n×k` matrix with entries uniform on `(0, 1]`, deterministic in the
/// seed. Dense positive entries keep support handling out of the measured
/// cost.
pub fn random_cone(n: usize, k: usize, seed: u64) -> GeneratorMatrix {
    let mut rng = StdRng::seed_from_u64(seed);
    let data: Vec<f64> = (0..n * k).map(|_| 1.0 - rng.random::<f64>()).collect();
    GeneratorMatrix::from_row_major(n, k, &data).expect("valid entries")
}

/// A strictly positive vector of length `n`, deterministic in the seed.
pub fn random_target(n: usize, seed: u64) -> MaxVector {
    let mut rng = StdRng::seed_from_u64(seed);
    MaxVector::new((0..n).map(|_| 1.0 - rng.random::<f64>()).collect()).expect("valid entries")
}
