//! Concrete root-lattice geometry for the families `A_n`, `C_n`, `D_n`:
//! monoid generator sets, lattice membership, the breadth-first word-length
//! oracle, lattice-point counts in root-polytope dilates with h*-extraction,
//! total-unimodularity checking, and a facet census of the root polytopes.
//!
//! Coordinate conventions: `A_n` lives in `Z^{n+1}` (zero coordinate sum,
//! indices `0..=n`), `C_n` and `D_n` live in `Z^n` (even coordinate sum).

mod dilates;
mod facets;
mod growth;
mod unimodular;

pub use dilates::{dilate_point_count, h_star_from_dilates};
pub use facets::{facet_census, FacetCensus, FacetGroup};
pub use growth::{growth_bfs, GrowthReport, BALL_POINT_LIMIT};
pub use unimodular::{
    check_total_unimodularity, check_total_unimodularity_seeded, generator_matrix,
    homogenized_generator_matrix, submatrix_scan, TuMode, TuReport, TuWitness,
};

use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

/// Integer coordinate vector: a lattice point or monoid generator.
pub type IntVec = Vec<i64>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("family {kind}_{n} is out of range (A needs n >= 1; C and D need n >= 2)")]
    InvalidRank { kind: FamilyKind, n: usize },
    #[error("vector length {got} does not match the ambient dimension {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("word-length ball estimated at {estimate} points exceeds the {limit} limit")]
    BallTooLarge { estimate: BigInt, limit: u64 },
    #[error("Ehrhart numerator has nonzero coefficient {value} at degree {index}; counting bug")]
    NonPolynomialRemainder { index: usize, value: BigInt },
    #[error("total-unimodularity checking is only defined here for the A family, not {kind}")]
    UnsupportedFamily { kind: FamilyKind },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    A,
    C,
    D,
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyKind::A => write!(f, "A"),
            FamilyKind::C => write!(f, "C"),
            FamilyKind::D => write!(f, "D"),
        }
    }
}

impl std::str::FromStr for FamilyKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "A" | "a" => Ok(FamilyKind::A),
            "C" | "c" => Ok(FamilyKind::C),
            "D" | "d" => Ok(FamilyKind::D),
            other => Err(format!("unknown lattice family {other:?} (expected A, C, or D)")),
        }
    }
}

/// A validated choice of family and rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LatticeFamily {
    kind: FamilyKind,
    n: usize,
}

impl LatticeFamily {
    pub fn new(kind: FamilyKind, n: usize) -> Result<Self, Error> {
        let min = match kind {
            FamilyKind::A => 1,
            FamilyKind::C | FamilyKind::D => 2,
        };
        if n < min {
            return Err(Error::InvalidRank { kind, n });
        }
        Ok(LatticeFamily { kind, n })
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    /// Lattice rank `n` (also the dimension of the root polytope).
    pub fn rank(&self) -> usize {
        self.n
    }

    /// Dimension of the ambient coordinate space.
    pub fn ambient_dim(&self) -> usize {
        match self.kind {
            FamilyKind::A => self.n + 1,
            FamilyKind::C | FamilyKind::D => self.n,
        }
    }

    /// `n(n+1)` for A, `2n^2` for C, `2n(n-1)` for D.
    pub fn generator_count(&self) -> usize {
        let n = self.n;
        match self.kind {
            FamilyKind::A => n * (n + 1),
            FamilyKind::C => 2 * n * n,
            FamilyKind::D => 2 * n * (n - 1),
        }
    }
}

impl fmt::Display for LatticeFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.kind, self.n)
    }
}

/// The standard monoid generator set, without duplicates.
///
/// * `A_n`: `e_i - e_j` for all ordered pairs `i != j` in `0..=n`
/// * `C_n`: `±2e_i` together with `±e_i ± e_j` for `i < j`
/// * `D_n`: `±e_i ± e_j` for `i < j`
pub fn generators(family: &LatticeFamily) -> Vec<IntVec> {
    let n = family.rank();
    let dim = family.ambient_dim();
    let mut out = Vec::with_capacity(family.generator_count());
    match family.kind() {
        FamilyKind::A => {
            for i in 0..dim {
                for j in 0..dim {
                    if i == j {
                        continue;
                    }
                    let mut v = vec![0i64; dim];
                    v[i] = 1;
                    v[j] = -1;
                    out.push(v);
                }
            }
        }
        FamilyKind::C | FamilyKind::D => {
            if family.kind() == FamilyKind::C {
                for i in 0..n {
                    for s in [2i64, -2] {
                        let mut v = vec![0i64; n];
                        v[i] = s;
                        out.push(v);
                    }
                }
            }
            for i in 0..n {
                for j in i + 1..n {
                    for si in [1i64, -1] {
                        for sj in [1i64, -1] {
                            let mut v = vec![0i64; n];
                            v[i] = si;
                            v[j] = sj;
                            out.push(v);
                        }
                    }
                }
            }
        }
    }
    debug_assert_eq!(out.len(), family.generator_count());
    out
}

/// Lattice membership: zero coordinate sum for `A_n`, even sum for `C_n`/`D_n`.
pub fn contains(family: &LatticeFamily, v: &[i64]) -> Result<bool, Error> {
    if v.len() != family.ambient_dim() {
        return Err(Error::DimensionMismatch {
            expected: family.ambient_dim(),
            got: v.len(),
        });
    }
    let sum: i64 = v.iter().sum();
    Ok(match family.kind() {
        FamilyKind::A => sum == 0,
        FamilyKind::C | FamilyKind::D => sum % 2 == 0,
    })
}

/// Worker count for the internally parallel enumerations. `ROOTLAT_THREADS`
/// caps it; results do not depend on the value.
pub(crate) fn thread_count() -> usize {
    let available = std::thread::available_parallelism().map_or(1, |t| t.get());
    let cap = std::env::var("ROOTLAT_THREADS")
        .ok()
        .and_then(|s| s.parse::<usize>().ok())
        .filter(|&t| t > 0)
        .unwrap_or(usize::MAX);
    available.min(cap).min(16)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn fam(kind: FamilyKind, n: usize) -> LatticeFamily {
        LatticeFamily::new(kind, n).unwrap()
    }

    #[test]
    fn rank_bounds() {
        assert!(LatticeFamily::new(FamilyKind::A, 1).is_ok());
        assert!(LatticeFamily::new(FamilyKind::A, 0).is_err());
        assert!(LatticeFamily::new(FamilyKind::C, 1).is_err());
        assert!(LatticeFamily::new(FamilyKind::D, 2).is_ok());
    }

    #[test]
    fn generator_sets() {
        let a1 = generators(&fam(FamilyKind::A, 1));
        assert_eq!(a1, vec![vec![1, -1], vec![-1, 1]]);

        let c2: HashSet<IntVec> = generators(&fam(FamilyKind::C, 2)).into_iter().collect();
        assert_eq!(c2.len(), 8);
        for v in [[2, 0], [-2, 0], [0, 2], [0, -2], [1, 1], [1, -1], [-1, 1], [-1, -1]] {
            assert!(c2.contains(&v.to_vec()));
        }

        let d3 = generators(&fam(FamilyKind::D, 3));
        assert_eq!(d3.len(), 12);
        let uniq: HashSet<IntVec> = d3.iter().cloned().collect();
        assert_eq!(uniq.len(), 12);
        for v in &d3 {
            assert_eq!(v.iter().map(|x| x.abs()).sum::<i64>(), 2);
            assert_eq!(v.iter().filter(|&&x| x != 0).count(), 2);
        }
    }

    #[test]
    fn generator_counts_match_formulas() {
        for n in 1..=8 {
            assert_eq!(generators(&fam(FamilyKind::A, n)).len(), n * (n + 1));
        }
        for n in 2..=8 {
            assert_eq!(generators(&fam(FamilyKind::C, n)).len(), 2 * n * n);
            assert_eq!(generators(&fam(FamilyKind::D, n)).len(), 2 * n * (n - 1));
        }
    }

    #[test]
    fn membership() {
        assert!(contains(&fam(FamilyKind::A, 2), &[1, -1, 0]).unwrap());
        assert!(!contains(&fam(FamilyKind::A, 2), &[1, 0, 0]).unwrap());
        assert!(!contains(&fam(FamilyKind::D, 3), &[1, 0, 0]).unwrap());
        assert!(contains(&fam(FamilyKind::C, 2), &[3, 1]).unwrap());
        assert!(matches!(
            contains(&fam(FamilyKind::C, 2), &[1, 1, 0]),
            Err(Error::DimensionMismatch { expected: 2, got: 3 })
        ));
    }

    #[test]
    fn generators_are_lattice_members() {
        for (kind, n) in [(FamilyKind::A, 4), (FamilyKind::C, 3), (FamilyKind::D, 4)] {
            let family = fam(kind, n);
            for g in generators(&family) {
                assert!(contains(&family, &g).unwrap());
            }
        }
    }

    #[test]
    fn generator_sets_centrally_symmetric() {
        for (kind, n) in [(FamilyKind::A, 3), (FamilyKind::C, 3), (FamilyKind::D, 3)] {
            let family = fam(kind, n);
            let set: HashSet<IntVec> = generators(&family).into_iter().collect();
            for g in &set {
                let neg: IntVec = g.iter().map(|x| -x).collect();
                assert!(set.contains(&neg));
            }
        }
    }
}
