//! Extremal generators, basis extraction, Carathéodory-style decompositions,
//! Pareto minima and essential equality of bases.
//!
//! A nonzero generator is extremal exactly when, for some coordinate `j` of
//! its support, its `j`-scaling is minimal among the `j`-scalings of all
//! generators supported at `j`. Every generating set splits into extremals
//! and redundant columns, and the extremals form the essentially unique
//! basis: the three extraction methods below compute the same kept set.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::matrix::GeneratorMatrix;
use crate::residuation::{covers_masked, image_masked, principal_masked, solve_exact};
use crate::tolerance::Tolerance;
use crate::vector::MaxVector;

/// Strategy used by [`extract_basis`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExtractMethod {
    /// Left-to-right scan zeroing columns whose residuation image reaches them.
    Residuation,
    /// Left-to-right scan zeroing columns whose support is covered by the
    /// tight sets of the remaining columns.
    Covering,
    /// Keep the columns that are minimal under some coordinate scaling.
    Minima,
}

/// Retained column indices (0-based, ascending) and the basis submatrix.
#[derive(Clone, Debug, PartialEq)]
pub struct BasisResult {
    pub kept: Vec<usize>,
    pub basis: GeneratorMatrix,
}

/// Indices of the minimal points of a finite set under componentwise `≤`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimaResult {
    pub minimal_indices: Vec<usize>,
}

/// A max combination `⊕ λ_i · u^i` reaching `target`.
#[derive(Clone, Debug, PartialEq)]
pub struct Decomposition {
    /// `(column index, coefficient)` pairs with strictly positive coefficients.
    pub terms: Vec<(usize, f64)>,
    pub target: MaxVector,
}

impl Decomposition {
    /// Evaluates the combination against the generators it was built from.
    pub fn reconstruct(&self, u: &GeneratorMatrix) -> Result<MaxVector> {
        let mut out = MaxVector::zeros(u.num_rows());
        for &(i, lambda) in &self.terms {
            if i >= u.num_cols() {
                return Err(Error::IndexOutOfRange {
                    index: i,
                    len: u.num_cols(),
                });
            }
            out = out.oplus(&u.column(i).scale(lambda))?;
        }
        Ok(out)
    }
}

/// The minimal elements of a finite point set under componentwise `≤`,
/// by pairwise comparison. Comparisons are exact; among duplicated minimal
/// points only the lowest index is reported.
pub fn pareto_minima(points: &[MaxVector]) -> Result<MinimaResult> {
    if let Some(first) = points.first() {
        for p in points {
            if p.len() != first.len() {
                return Err(Error::DimensionMismatch {
                    expected: first.len(),
                    found: p.len(),
                });
            }
        }
    }
    let mut minimal_indices = Vec::new();
    'outer: for (i, pi) in points.iter().enumerate() {
        for (m, pm) in points.iter().enumerate() {
            if m == i {
                continue;
            }
            if pm == pi {
                if m < i {
                    continue 'outer;
                }
            } else if pm.leq(pi)? {
                continue 'outer;
            }
        }
        minimal_indices.push(i);
    }
    Ok(MinimaResult { minimal_indices })
}

/// Whether `scale_at(col_m, j)` is below `scale_at(col_i, j)` within
/// tolerance and not tolerance-equal to it.
fn strictly_below_at(
    v: &GeneratorMatrix,
    i: usize,
    m: usize,
    j: usize,
    tol: &Tolerance,
) -> bool {
    let ci = v.col_slice(i);
    let cm = v.col_slice(m);
    let (pi, pm) = (ci[j], cm[j]);
    let mut equal = true;
    for (a, b) in cm.iter().zip(ci) {
        let (wa, wb) = (a / pm, b / pi);
        if !tol.leq(wa, wb) {
            return false;
        }
        if !tol.eq(wa, wb) {
            equal = false;
        }
    }
    !equal
}

fn is_extremal_inner(v: &GeneratorMatrix, i: usize, tol: &Tolerance) -> bool {
    let col = v.col_slice(i);
    'coords: for (j, &cij) in col.iter().enumerate() {
        if cij == 0.0 {
            continue;
        }
        for m in 0..v.num_cols() {
            if m != i && v.col_slice(m)[j] > 0.0 && strictly_below_at(v, i, m, j, tol) {
                continue 'coords;
            }
        }
        // No generator lies strictly below the j-scaling of column i.
        return true;
    }
    false
}

/// Whether column `i` is an extremal generator: some `j`-scaling of it is
/// minimal among the `j`-scalings of all columns supported at `j`.
/// Proportional duplicates do not disqualify a column.
pub fn is_extremal_column(v: &GeneratorMatrix, i: usize, tol: &Tolerance) -> Result<bool> {
    if i >= v.num_cols() {
        return Err(Error::IndexOutOfRange {
            index: i,
            len: v.num_cols(),
        });
    }
    if v.is_zero_column(i) {
        return Err(Error::ZeroColumn { index: i });
    }
    Ok(is_extremal_inner(v, i, tol))
}

fn columns_proportional(a: &MaxVector, b: &MaxVector, tol: &Tolerance) -> bool {
    match (a.is_zero(), b.is_zero()) {
        (true, true) => true,
        (true, false) | (false, true) => false,
        (false, false) => {
            let sa = a.scale_max().expect("nonzero");
            let sb = b.scale_max().expect("nonzero");
            tol.vec_eq(&sa, &sb)
        }
    }
}

/// Extracts the essentially unique basis of the cone generated by the
/// columns of `v`. Zero columns are dropped first; all three methods agree
/// on the kept index set, with the highest index retained within each group
/// of mutually proportional extremal columns.
pub fn extract_basis(v: &GeneratorMatrix, method: ExtractMethod, tol: &Tolerance) -> BasisResult {
    let k = v.num_cols();
    let mut alive: Vec<bool> = (0..k).map(|i| !v.is_zero_column(i)).collect();

    match method {
        ExtractMethod::Residuation | ExtractMethod::Covering => {
            for j in 0..k {
                if !alive[j] {
                    continue;
                }
                // Test column j against the remaining columns.
                alive[j] = false;
                let target = v.col_slice(j);
                let x = principal_masked(v, &alive, target);
                let redundant = match method {
                    ExtractMethod::Residuation => {
                        tol.slice_eq(&image_masked(v, &alive, &x), target)
                    }
                    ExtractMethod::Covering => covers_masked(v, &alive, &x, target, tol),
                    ExtractMethod::Minima => unreachable!(),
                };
                if !redundant {
                    alive[j] = true;
                }
            }
        }
        ExtractMethod::Minima => {
            let extremal: Vec<bool> = (0..k)
                .map(|i| alive[i] && is_extremal_inner(v, i, tol))
                .collect();
            for i in 0..k {
                alive[i] = extremal[i]
                    && !(i + 1..k).any(|m| {
                        extremal[m]
                            && columns_proportional(&v.column(i), &v.column(m), tol)
                    });
            }
        }
    }

    let kept: Vec<usize> = (0..k).filter(|&i| alive[i]).collect();
    let basis = v.select_columns(&kept).expect("indices in range");
    BasisResult { kept, basis }
}

/// Decomposes an exact member `v` of `span(U)` into at most `|supp(v)|`
/// terms. For each supported coordinate the column whose scaling fits under
/// the target and is lexicographically greatest (ties to the lowest index)
/// is selected; repeated selections keep the largest coefficient.
pub fn caratheodory_decompose(
    u: &GeneratorMatrix,
    v: &MaxVector,
    tol: &Tolerance,
) -> Result<Decomposition> {
    if v.len() != u.num_rows() {
        return Err(Error::DimensionMismatch {
            expected: u.num_rows(),
            found: v.len(),
        });
    }
    if v.is_zero() {
        return Ok(Decomposition {
            terms: Vec::new(),
            target: v.clone(),
        });
    }
    if solve_exact(u, v, tol)?.is_none() {
        return Err(Error::NotInSpan);
    }

    let mut chosen: BTreeMap<usize, f64> = BTreeMap::new();
    for j in v.support().iter() {
        let target_scaled = v.scale_at(j).expect("j in support");
        let mut best: Option<(usize, MaxVector)> = None;
        for i in 0..u.num_cols() {
            if u.entry(j, i) == 0.0 {
                continue;
            }
            let w = u.column(i).scale_at(j).expect("entry positive");
            if !tol.vec_leq(&w, &target_scaled) {
                continue;
            }
            let better = match &best {
                None => true,
                Some((_, bw)) => lex_gt(w.as_slice(), bw.as_slice()),
            };
            if better {
                best = Some((i, w));
            }
        }
        let (i, _) = best.ok_or(Error::NotInSpan)?;
        let lambda = v[j] / u.entry(j, i);
        chosen
            .entry(i)
            .and_modify(|l| *l = l.max(lambda))
            .or_insert(lambda);
    }

    Ok(Decomposition {
        terms: chosen.into_iter().collect(),
        target: v.clone(),
    })
}

fn lex_gt(a: &[f64], b: &[f64]) -> bool {
    for (&x, &y) in a.iter().zip(b) {
        if x != y {
            return x > y;
        }
    }
    false
}

/// Whether `b2` is `b1` up to a permutation of columns and positive column
/// scalings.
pub fn essentially_equal(b1: &GeneratorMatrix, b2: &GeneratorMatrix, tol: &Tolerance) -> bool {
    if b1.num_rows() != b2.num_rows() || b1.num_cols() != b2.num_cols() {
        return false;
    }
    let k = b1.num_cols();
    let mut used = vec![false; k];
    for i in 0..k {
        let c1 = b1.column(i);
        let matched = (0..k).find(|&m| !used[m] && columns_proportional(&c1, &b2.column(m), tol));
        match matched {
            Some(m) => used[m] = true,
            None => return false,
        }
    }
    true
}

/// Whether nonzero column `i` is a max combination of the other nonzero
/// columns. For scaled duplicate-free generators this is the complement of
/// [`is_extremal_column`].
pub fn is_redundant_column(v: &GeneratorMatrix, i: usize, tol: &Tolerance) -> Result<bool> {
    if i >= v.num_cols() {
        return Err(Error::IndexOutOfRange {
            index: i,
            len: v.num_cols(),
        });
    }
    if v.is_zero_column(i) {
        return Err(Error::ZeroColumn { index: i });
    }
    let mut active: Vec<bool> = (0..v.num_cols()).map(|c| !v.is_zero_column(c)).collect();
    active[i] = false;
    let target = v.col_slice(i);
    let x = principal_masked(v, &active, target);
    Ok(tol.slice_eq(&image_masked(v, &active, &x), target))
}

/// The scaled set `S(j)`: every column supported at `j`, scaled so its
/// `j`-th coordinate is 1, tagged with its original column index.
pub fn scaled_columns_at(v: &GeneratorMatrix, j: usize) -> Result<Vec<(usize, MaxVector)>> {
    if j >= v.num_rows() {
        return Err(Error::IndexOutOfRange {
            index: j,
            len: v.num_rows(),
        });
    }
    Ok((0..v.num_cols())
        .filter(|&i| v.entry(j, i) > 0.0)
        .map(|i| (i, v.column(i).scale_at(j).expect("entry positive")))
        .collect())
}
