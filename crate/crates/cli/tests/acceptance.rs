//! Acceptance suite: one test per criterion, each printing a PASS line.
//!
//! The tests share a lock so the timed criterion is never polluted by the
//! other (CPU-heavy) criteria running on sibling threads.

use std::process::Command;
use std::sync::Mutex;
use std::time::{Duration, Instant};

use maxcone_cli::bench::{run_bench, BenchConfig};
use maxcone_core::{
    brute_force_member, caratheodory_decompose, covering_sets, essentially_equal, extract_basis,
    is_redundant_column, oplus, otimes, residuate, solve_exact, ExtractMethod, GeneratorMatrix,
    MaxVector, Tolerance,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

static GATE: Mutex<()> = Mutex::new(());

fn gate() -> std::sync::MutexGuard<'static, ()> {
    GATE.lock().unwrap_or_else(|e| e.into_inner())
}

const METHODS: [ExtractMethod; 3] = [
    ExtractMethod::Residuation,
    ExtractMethod::Covering,
    ExtractMethod::Minima,
];

const RTOL: f64 = 1e-9;

const EXAMPLE_CSV: &str = "1,9,10,5,9\n2,10,10,0,10\n3,15,14,7,0\n4,20,16,8,12\n";

fn quarters_matrix(rng: &mut StdRng, n: usize, k: usize, sparsity: f64) -> GeneratorMatrix {
    let data: Vec<f64> = (0..n * k)
        .map(|_| {
            if rng.random::<f64>() < sparsity {
                0.0
            } else {
                f64::from(rng.random_range(0u32..=8)) / 4.0
            }
        })
        .collect();
    GeneratorMatrix::from_row_major(n, k, &data).unwrap()
}

fn small_int_matrix(rng: &mut StdRng, n: usize, k: usize) -> GeneratorMatrix {
    let data: Vec<f64> = (0..n * k)
        .map(|_| f64::from(rng.random_range(0u32..=3)))
        .collect();
    GeneratorMatrix::from_row_major(n, k, &data).unwrap()
}

fn small_int_vector(rng: &mut StdRng, n: usize) -> MaxVector {
    MaxVector::new((0..n).map(|_| f64::from(rng.random_range(0u32..=3))).collect()).unwrap()
}

fn continuous_vector(rng: &mut StdRng, n: usize, zero_prob: f64) -> MaxVector {
    MaxVector::new(
        (0..n)
            .map(|_| {
                if rng.random::<f64>() < zero_prob {
                    0.0
                } else {
                    rng.random_range(0.01f64..10.0)
                }
            })
            .collect(),
    )
    .unwrap()
}

fn continuous_matrix(rng: &mut StdRng, n: usize, k: usize, zero_prob: f64) -> GeneratorMatrix {
    let cols: Vec<MaxVector> = (0..k).map(|_| continuous_vector(rng, n, zero_prob)).collect();
    GeneratorMatrix::from_columns(n, &cols).unwrap()
}

/// Drops zero columns, scales to norm 1, removes proportional repeats.
fn normalized(v: &GeneratorMatrix, tol: &Tolerance) -> Option<GeneratorMatrix> {
    let mut cols: Vec<MaxVector> = Vec::new();
    for i in 0..v.num_cols() {
        if v.is_zero_column(i) {
            continue;
        }
        let s = v.column(i).scale_max().unwrap();
        if !cols.iter().any(|c| tol.vec_eq(c, &s)) {
            cols.push(s);
        }
    }
    (!cols.is_empty()).then(|| GeneratorMatrix::from_columns(v.num_rows(), &cols).unwrap())
}

/// Criterion 1: the 4×5 worked example reproduces exactly through the CLI,
/// in under a second.
#[test]
fn criterion_1_worked_example_reproduction() {
    let _g = gate();
    let dir = tempfile::TempDir::new().unwrap();
    let path = dir.path().join("a.csv");
    std::fs::write(&path, EXAMPLE_CSV).unwrap();

    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_maxcone"))
        .args(["basis", path.to_str().unwrap()])
        .output()
        .unwrap();
    let elapsed = start.elapsed();

    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text, "f = 1 4 5\n1,5,9\n2,0,10\n3,7,0\n4,8,12\n");
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    println!(
        "acceptance 1 (worked-example basis, kept columns 1 4 5, exact entries, {elapsed:?}): PASS"
    );
}

/// Criterion 2: the three extraction methods agree on 1000 seeded random
/// matrices with mixed sparse/dense quarter-grid entries.
#[test]
fn criterion_2_three_method_agreement() {
    let _g = gate();
    let mut rng = StdRng::seed_from_u64(0x5eed_0002);
    let sparsities = [0.0, 0.3, 0.6];
    for case in 0..1000 {
        let n = rng.random_range(1..=10);
        let k = rng.random_range(1..=10);
        let sparsity = sparsities[case % sparsities.len()];
        let m = quarters_matrix(&mut rng, n, k, sparsity);
        let tol = Tolerance::for_matrix(&m, RTOL).unwrap();

        let reference = extract_basis(&m, ExtractMethod::Residuation, &tol);
        for method in METHODS {
            let other = extract_basis(&m, method, &tol);
            assert_eq!(
                other.kept, reference.kept,
                "case {case}: kept sets differ for {method:?} on {m:?}"
            );
            assert!(
                essentially_equal(&other.basis, &reference.basis, &tol),
                "case {case}: bases not essentially equal for {method:?}"
            );
        }
    }
    println!("acceptance 2 (three-method agreement on 1000 seeded matrices): PASS");
}

/// Criterion 3: enumeration, residuation and covering give identical
/// membership verdicts on 100000 sampled small-integer instances.
#[test]
fn criterion_3_oracle_equivalence() {
    let _g = gate();
    let mut rng = StdRng::seed_from_u64(0x5eed_0003);
    let mut members = 0usize;
    for case in 0..100_000 {
        let n = rng.random_range(1..=4);
        let k = rng.random_range(0..=3);
        let u = small_int_matrix(&mut rng, n, k);
        let v = small_int_vector(&mut rng, n);
        let tol = Tolerance::for_system(&u, &v, RTOL).unwrap();

        let by_enumeration = brute_force_member(&u, &v, &tol).unwrap();
        let by_residuation = residuate(&u, &v, &tol).unwrap().exact;
        let by_covering = covering_sets(&u, &v, &tol).unwrap().covered;
        assert!(
            by_enumeration == by_residuation && by_residuation == by_covering,
            "case {case}: enumeration={by_enumeration} residuation={by_residuation} \
             covering={by_covering} for U={u:?}, v={v:?}"
        );
        members += usize::from(by_residuation);
    }
    println!(
        "acceptance 3 (oracle equivalence, 100000 instances, {members} members, 0 disagreements): PASS"
    );
}

/// Criterion 4: the invariant suite, 10000 random cases per invariant.
#[test]
fn criterion_4_invariant_suite() {
    let _g = gate();
    const CASES: usize = 10_000;
    let mut rng = StdRng::seed_from_u64(0x5eed_0004);

    // Residuation image never exceeds the target.
    for _ in 0..CASES {
        let n = rng.random_range(1..=6);
        let k = rng.random_range(0..=6);
        let u = continuous_matrix(&mut rng, n, k, 0.2);
        let v = continuous_vector(&mut rng, n, 0.2);
        let tol = Tolerance::for_system(&u, &v, RTOL).unwrap();
        let res = residuate(&u, &v, &tol).unwrap();
        for (img, t) in res.image.iter().zip(v.iter()) {
            assert!(img <= t.next_up().next_up(), "image {img} above target {t}");
        }
    }

    // The principal solution dominates every feasible z, and so does its
    // image (matrices without zero columns).
    for _ in 0..CASES {
        let n = rng.random_range(1..=6);
        let k = rng.random_range(1..=6);
        let u = continuous_matrix(&mut rng, n, k, 0.0);
        let z = continuous_vector(&mut rng, k, 0.3);
        let v = u
            .otimes(&z)
            .unwrap()
            .oplus(&continuous_vector(&mut rng, n, 0.5))
            .unwrap();
        let tol = Tolerance::for_system(&u, &v, RTOL).unwrap();
        let res = residuate(&u, &v, &tol).unwrap();
        assert!(tol.vec_leq(&z, &res.x), "z exceeds the principal solution");
        assert!(
            tol.vec_leq(&u.otimes(&z).unwrap(), &res.image),
            "feasible image exceeds the principal image"
        );
    }

    // ⊗ is isotone.
    for _ in 0..CASES {
        let n = rng.random_range(1..=6);
        let k = rng.random_range(1..=6);
        let u = continuous_matrix(&mut rng, n, k, 0.3);
        let x = continuous_vector(&mut rng, k, 0.3);
        let y = x.oplus(&continuous_vector(&mut rng, k, 0.3)).unwrap();
        assert!(u
            .otimes(&x)
            .unwrap()
            .leq(&u.otimes(&y).unwrap())
            .unwrap());
    }

    // The max norm is max-linear, exactly.
    for _ in 0..CASES {
        let n = rng.random_range(1..=6);
        let u = continuous_vector(&mut rng, n, 0.2);
        let v = continuous_vector(&mut rng, n, 0.2);
        let lambda = rng.random_range(0.0f64..10.0);
        let mu = rng.random_range(0.0f64..10.0);
        let lhs = u.scale(lambda).oplus(&v.scale(mu)).unwrap().max_norm();
        let rhs = oplus(otimes(lambda, u.max_norm()), otimes(mu, v.max_norm()));
        assert_eq!(lhs, rhs);
    }

    // Basis soundness and independence.
    for _ in 0..CASES {
        let n = rng.random_range(1..=6);
        let k = rng.random_range(1..=6);
        let m = quarters_matrix(&mut rng, n, k, 0.3);
        let tol = Tolerance::for_matrix(&m, RTOL).unwrap();
        let result = extract_basis(&m, ExtractMethod::Residuation, &tol);
        for i in 0..m.num_cols() {
            let col = m.column(i);
            if !col.is_zero() {
                assert!(
                    solve_exact(&result.basis, &col, &tol).unwrap().is_some(),
                    "input column {i} not spanned by the basis of {m:?}"
                );
            }
        }
        for b in 0..result.basis.num_cols() {
            assert!(
                !is_redundant_column(&result.basis, b, &tol).unwrap(),
                "basis column {b} redundant for {m:?}"
            );
        }
    }

    // Essential uniqueness under column permutation and positive rescaling.
    for _ in 0..CASES {
        let n = rng.random_range(1..=6);
        let k = rng.random_range(1..=6);
        let m = quarters_matrix(&mut rng, n, k, 0.3);
        let tol = Tolerance::for_matrix(&m, RTOL).unwrap();
        let reference = extract_basis(&m, ExtractMethod::Residuation, &tol);

        let mut order: Vec<usize> = (0..k).collect();
        for i in (1..k).rev() {
            order.swap(i, rng.random_range(0..=i));
        }
        let cols: Vec<MaxVector> = order
            .iter()
            .map(|&i| m.column(i).scale(rng.random_range(0.1f64..10.0)))
            .collect();
        let shuffled = GeneratorMatrix::from_columns(n, &cols).unwrap();
        for method in METHODS {
            let other = extract_basis(&shuffled, method, &tol);
            assert!(
                essentially_equal(&other.basis, &reference.basis, &tol),
                "{method:?} basis of permuted/rescaled input differs for {m:?}"
            );
        }
    }

    // Carathéodory bound and exact reconstruction.
    for _ in 0..CASES {
        let n = rng.random_range(1..=6);
        let k = rng.random_range(1..=6);
        let m = quarters_matrix(&mut rng, n, k, 0.3);
        let tol = Tolerance::for_matrix(&m, RTOL).unwrap();
        let basis = extract_basis(&m, ExtractMethod::Residuation, &tol).basis;
        for i in 0..m.num_cols() {
            let target = m.column(i);
            if target.is_zero() {
                continue;
            }
            let d = caratheodory_decompose(&basis, &target, &tol).unwrap();
            assert!(d.terms.len() <= target.support().len());
            assert!(d.terms.iter().all(|&(_, l)| l > 0.0));
            assert!(tol.vec_eq(&d.reconstruct(&basis).unwrap(), &target));
        }
    }

    // A finite nonzero scaled duplicate-free set keeps at least one column.
    for _ in 0..CASES {
        let n = rng.random_range(1..=6);
        let k = rng.random_range(1..=6);
        let m = quarters_matrix(&mut rng, n, k, 0.3);
        let tol = Tolerance::for_matrix(&m, RTOL).unwrap();
        if let Some(v) = normalized(&m, &tol) {
            for method in METHODS {
                assert!(!extract_basis(&v, method, &tol).kept.is_empty());
            }
        }
    }

    // Extraction is idempotent.
    for _ in 0..CASES {
        let n = rng.random_range(1..=6);
        let k = rng.random_range(0..=6);
        let m = quarters_matrix(&mut rng, n, k, 0.3);
        let tol = Tolerance::for_matrix(&m, RTOL).unwrap();
        for method in METHODS {
            let first = extract_basis(&m, method, &tol);
            let second = extract_basis(&first.basis, method, &tol);
            let all: Vec<usize> = (0..first.basis.num_cols()).collect();
            assert_eq!(second.kept, all);
        }
    }

    println!(
        "acceptance 4 (invariant suite: image bound, principal maximality, feasible-image bound, \
         isotonicity, norm max-linearity, basis soundness+independence, essential uniqueness, \
         decomposition bound+reconstruction, extremal existence, idempotence; 10000 cases each): PASS"
    );
}

/// Criterion 5: doubling k at n = 50 with the residuation method scales
/// like O(nk²): each per-doubling time ratio lies in [3, 6], within 60 s.
#[test]
fn criterion_5_complexity_doubling() {
    let _g = gate();
    let start = Instant::now();
    let report = run_bench(&BenchConfig {
        n_sizes: vec![50],
        k_sizes: vec![250, 500, 1000],
        reps: 9,
        seed: 0x5eed_0005,
        method: ExtractMethod::Residuation,
        sparsity: 0.0,
        rtol: RTOL,
    })
    .unwrap();
    let elapsed = start.elapsed();

    assert_eq!(report.k_ratios.len(), 2);
    let ratios: Vec<f64> = report.k_ratios.iter().map(|r| r.ratio()).collect();
    for (r, pair) in ratios.iter().zip(&report.k_ratios) {
        assert!(
            (3.0..=6.0).contains(r),
            "doubling k {} -> {}: ratio {r:.2} outside [3, 6] ({:?} -> {:?})",
            pair.from.1,
            pair.to.1,
            pair.time_from,
            pair.time_to
        );
    }
    assert!(elapsed < Duration::from_secs(60), "bench took {elapsed:?}");
    println!(
        "acceptance 5 (complexity, n=50, k=250/500/1000, ratios {:.2} and {:.2} in [3,6], {elapsed:?} total): PASS",
        ratios[0], ratios[1]
    );
}

/// Criterion 6: the columns (1, 1/r), r = 1..m keep exactly the first and
/// last; the middle columns are confirmed redundant by the support-scaling
/// criterion, independently of residuation.
#[test]
fn criterion_6_harmonic_prefix_basis() {
    let _g = gate();
    for m in [3usize, 10, 50] {
        let cols: Vec<MaxVector> = (1..=m)
            .map(|r| MaxVector::new(vec![1.0, 1.0 / r as f64]).unwrap())
            .collect();
        let matrix = GeneratorMatrix::from_columns(2, &cols).unwrap();
        let tol = Tolerance::for_matrix(&matrix, RTOL).unwrap();

        for method in METHODS {
            assert_eq!(
                extract_basis(&matrix, method, &tol).kept,
                vec![0, m - 1],
                "m = {m}, method {method:?}"
            );
        }

        // Independent redundancy check for every middle column q: each
        // supported coordinate j of u^q admits another column whose
        // j-scaling sits below u^q's.
        for q in 1..m - 1 {
            let target = matrix.column(q);
            let redundant = target.support().iter().all(|j| {
                (0..m).any(|i| {
                    i != q
                        && matrix.entry(j, i) > 0.0
                        && matrix
                            .column(i)
                            .scale_at(j)
                            .unwrap()
                            .leq(&target.scale_at(j).unwrap())
                            .unwrap()
                })
            });
            assert!(redundant, "middle column {q} not redundant for m = {m}");
        }
    }
    println!("acceptance 6 (harmonic-prefix basis keeps first and last column, m=3/10/50): PASS");
}
