//! Total-unimodularity checking for the `A_n` generator matrix: every square
//! submatrix must have determinant 0, +1, or −1. Small instances are checked
//! exhaustively; larger ones by seeded uniform sampling over all square
//! submatrices up to the size bound.

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{generators, Error, FamilyKind, LatticeFamily};
use crate::matrix::int_det;

pub const DEFAULT_TU_SEED: u64 = 0;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TuMode {
    Exhaustive,
    Sampled { budget: u64, seed: u64 },
}

/// A submatrix whose determinant fell outside {0, ±1}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TuWitness {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub det: i128,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TuReport {
    pub family: LatticeFamily,
    pub max_size: usize,
    pub mode: TuMode,
    /// Number of determinants evaluated.
    pub checked: u64,
    pub pass: bool,
    pub witness: Option<TuWitness>,
}

/// Generator matrix: ambient dimension many rows, one column per generator.
pub fn generator_matrix(family: &LatticeFamily) -> Vec<Vec<i64>> {
    let gens = generators(family);
    let dim = family.ambient_dim();
    (0..dim).map(|r| gens.iter().map(|g| g[r]).collect()).collect()
}

/// The homogenized matrix: a row of ones on top, and an extra zero column
/// (the origin generator) appended.
pub fn homogenized_generator_matrix(family: &LatticeFamily) -> Vec<Vec<i64>> {
    let m = generator_matrix(family);
    let cols = m[0].len();
    let mut out = vec![vec![1i64; cols + 1]];
    for row in m {
        let mut r = row;
        r.push(0);
        out.push(r);
    }
    out
}

fn submatrix_det(m: &[Vec<i64>], rows: &[usize], cols: &[usize]) -> i128 {
    let sub: Vec<Vec<i128>> = rows
        .iter()
        .map(|&r| cols.iter().map(|&c| m[r][c] as i128).collect())
        .collect();
    int_det(sub)
}

/// Scan square submatrices of `m` up to `max_size`, exhaustively when their
/// total count stays within `budget`, otherwise by sampling `budget` of them
/// uniformly (sizes weighted by how many submatrices have that size).
/// Returns the mode used, the number checked, and the first witness with
/// `|det| > 1`, if any.
pub fn submatrix_scan(
    m: &[Vec<i64>],
    max_size: usize,
    budget: u64,
    seed: u64,
) -> (TuMode, u64, Option<TuWitness>) {
    let nrows = m.len();
    let ncols = m[0].len();
    let max_size = max_size.min(nrows).min(ncols);
    let count_for = |s: usize| -> u128 {
        let c = |n: usize, k: usize| -> u128 {
            let mut r: u128 = 1;
            for i in 0..k {
                r = r * (n - i) as u128 / (i + 1) as u128;
            }
            r
        };
        c(nrows, s) * c(ncols, s)
    };
    let total: u128 = (1..=max_size).map(count_for).sum();

    if total <= budget as u128 {
        let mut checked = 0u64;
        for s in 1..=max_size {
            for rows in (0..nrows).combinations(s) {
                for cols in (0..ncols).combinations(s) {
                    checked += 1;
                    let det = submatrix_det(m, &rows, &cols);
                    if det.abs() > 1 {
                        return (TuMode::Exhaustive, checked, Some(TuWitness { rows, cols, det }));
                    }
                }
            }
        }
        (TuMode::Exhaustive, checked, None)
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let weights: Vec<u128> = (1..=max_size).map(count_for).collect();
        for i in 0..budget {
            let mut pick = rng.gen_range(0..total);
            let mut size = max_size;
            for (s, &w) in weights.iter().enumerate() {
                if pick < w {
                    size = s + 1;
                    break;
                }
                pick -= w;
            }
            let rows: Vec<usize> = rand::seq::index::sample(&mut rng, nrows, size).into_vec();
            let cols: Vec<usize> = rand::seq::index::sample(&mut rng, ncols, size).into_vec();
            let det = submatrix_det(m, &rows, &cols);
            if det.abs() > 1 {
                return (
                    TuMode::Sampled { budget, seed },
                    i + 1,
                    Some(TuWitness { rows, cols, det }),
                );
            }
        }
        (TuMode::Sampled { budget, seed }, budget, None)
    }
}

/// Determinant scan of the `A_n` generator matrix with the fixed default seed.
pub fn check_total_unimodularity(
    family: &LatticeFamily,
    max_size: usize,
    sample_budget: u64,
) -> Result<TuReport, Error> {
    check_total_unimodularity_seeded(family, max_size, sample_budget, DEFAULT_TU_SEED)
}

/// As [`check_total_unimodularity`], with an explicit sampling seed.
/// Only the `A` family carries the total-unimodularity claim; `C` and `D`
/// are rejected rather than guessed at.
pub fn check_total_unimodularity_seeded(
    family: &LatticeFamily,
    max_size: usize,
    sample_budget: u64,
    seed: u64,
) -> Result<TuReport, Error> {
    if family.kind() != FamilyKind::A {
        return Err(Error::UnsupportedFamily { kind: family.kind() });
    }
    let m = generator_matrix(family);
    let max_size = max_size.min(family.rank() + 1);
    let (mode, checked, witness) = submatrix_scan(&m, max_size, sample_budget, seed);
    Ok(TuReport {
        family: *family,
        max_size,
        mode,
        pass: witness.is_none(),
        checked,
        witness,
    })
}
