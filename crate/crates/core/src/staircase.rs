//! The staircase (pulling) triangulation of the boundary of the `A_n` root
//! polytope.
//!
//! Vertices of the polytope are `v_ij = e_i - e_j`, the entries of an
//! `(n+1) × (n+1)` matrix with empty diagonal. A set of `m` vertices is a
//! face of the triangulation exactly when, sorted lexicographically, the
//! positions `(i_1,j_1), ..., (i_m,j_m)` satisfy
//!
//! 1. `i_1 <= ... <= i_m` and `j_1 <= ... <= j_m`,
//! 2. all positions distinct,
//! 3. no row index equals any column index.
//!
//! Faces are generated constructively rather than by filtering vertex
//! subsets: choose the `a` rows and `b` columns the face occupies (disjoint
//! by condition 3), then walk a monotone path through the `a × b` grid with
//! steps down, right, and diagonal, visiting exactly `m` cells. Each face
//! arises from exactly one such choice, which is what makes the counts exact.

use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use thiserror::Error;

use crate::matrix::int_det;
use crate::polyalg::FVector;

/// Faces are enumerated for ranks up to this by default; the face count grows
/// like `C(2n, n)` and beyond rank 8 a full sweep stops being interactive.
pub const DEFAULT_ENUMERATION_BUDGET: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex index {index} out of range (must be <= {bound})")]
    IndexOutOfRange { index: usize, bound: usize },
    #[error("the given vertex set is not a face of the staircase triangulation")]
    NotAFace,
    #[error("rank {n} exceeds the enumeration budget {budget}")]
    BudgetExceeded { n: usize, budget: usize },
}

/// A face of the staircase triangulation, held in canonical form: pairs
/// sorted lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StaircaseFace {
    pairs: Vec<(usize, usize)>,
}

impl StaircaseFace {
    /// Validate and canonicalize a vertex set given as `(i, j)` index pairs.
    pub fn new(n: usize, mut pairs: Vec<(usize, usize)>) -> Result<Self, Error> {
        pairs.sort_unstable();
        if !is_face(n, &pairs)? {
            return Err(Error::NotAFace);
        }
        Ok(StaircaseFace { pairs })
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// Number of vertices (the face has dimension one less).
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

impl fmt::Display for StaircaseFace {
    /// The dump format: `i1,j1 i2,j2 ...`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for &(i, j) in &self.pairs {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{i},{j}")?;
            first = false;
        }
        Ok(())
    }
}

/// Face predicate: true iff the (sorted) pairs satisfy the three staircase
/// conditions. The empty set is handled by the f-vector's `f_{-1}` slot, not
/// here; it returns false.
pub fn is_face(n: usize, pairs: &[(usize, usize)]) -> Result<bool, Error> {
    for &(i, j) in pairs {
        for index in [i, j] {
            if index > n {
                return Err(Error::IndexOutOfRange { index, bound: n });
            }
        }
    }
    if pairs.is_empty() {
        return Ok(false);
    }
    let mut sorted = pairs.to_vec();
    sorted.sort_unstable();
    // distinct positions, both coordinates weakly increasing
    for w in sorted.windows(2) {
        if w[0] == w[1] || w[0].1 > w[1].1 {
            return Ok(false);
        }
    }
    // no row label may reappear as a column label
    for &(i, _) in &sorted {
        for &(_, j) in &sorted {
            if i == j {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Walk every monotone path through an `a × b` grid that starts at the top
/// left, ends at the bottom right, uses steps down/right/diagonal, and visits
/// exactly `m` cells; `emit` receives the visited cells.
fn walk_paths(
    a: usize,
    b: usize,
    m: usize,
    cells: &mut Vec<(usize, usize)>,
    emit: &mut impl FnMut(&[(usize, usize)]),
) {
    let (r, c) = *cells.last().expect("walk starts from (0,0)");
    if r == a - 1 && c == b - 1 {
        if cells.len() == m {
            emit(cells);
        }
        return;
    }
    if cells.len() >= m {
        return; // budget spent short of the corner
    }
    let left = m - cells.len();
    let (dr, dc) = (a - 1 - r, b - 1 - c);
    // shortest completion is diagonal, longest down-then-right
    if left < dr.max(dc) || left > dr + dc {
        return;
    }
    for (nr, nc) in [(r + 1, c), (r, c + 1), (r + 1, c + 1)] {
        if nr < a && nc < b {
            cells.push((nr, nc));
            walk_paths(a, b, m, cells, emit);
            cells.pop();
        }
    }
}

/// Generate every staircase face with `m` vertices, in canonical (sorted)
/// pair order, invoking the visitor once per face. `m = 0` emits the empty
/// face once.
pub fn visit_faces(n: usize, m: usize, mut visitor: impl FnMut(&[(usize, usize)])) {
    if m == 0 {
        visitor(&[]);
        return;
    }
    let labels: Vec<usize> = (0..=n).collect();
    for a in 1..=m.min(n + 1) {
        let b_min = (m + 1).saturating_sub(a).max(1);
        let b_max = m.min(n + 1 - a);
        for b in b_min..=b_max {
            for rows in labels.iter().copied().combinations(a) {
                let rest: Vec<usize> = labels.iter().copied().filter(|x| !rows.contains(x)).collect();
                for cols in rest.iter().copied().combinations(b) {
                    let mut cells = vec![(0usize, 0usize)];
                    walk_paths(a, b, m, &mut cells, &mut |path| {
                        let pairs: Vec<(usize, usize)> =
                            path.iter().map(|&(r, c)| (rows[r], cols[c])).collect();
                        visitor(&pairs);
                    });
                }
            }
        }
    }
}

/// Number of faces with `m` vertices, counted by exhaustive generation.
pub fn count_faces(n: usize, m: usize) -> u64 {
    let mut count = 0u64;
    visit_faces(n, m, |_| count += 1);
    count
}

/// All faces with `m` vertices, sorted lexicographically.
pub fn collect_faces(n: usize, m: usize) -> Vec<StaircaseFace> {
    let mut out = Vec::new();
    visit_faces(n, m, |pairs| {
        out.push(StaircaseFace { pairs: pairs.to_vec() });
    });
    out.sort_unstable();
    out
}

/// f-vector `(1, f_0, ..., f_{n-1})` of the boundary triangulation, counted
/// by enumeration (complex dimension `n - 1`).
pub fn staircase_f_vector(n: usize) -> Result<FVector, Error> {
    staircase_f_vector_with_budget(n, DEFAULT_ENUMERATION_BUDGET)
}

pub fn staircase_f_vector_with_budget(n: usize, budget: usize) -> Result<FVector, Error> {
    assert!(n >= 1);
    if n > budget {
        return Err(Error::BudgetExceeded { n, budget });
    }
    let counts = (0..=n).map(|m| BigInt::from(count_faces(n, m))).collect();
    Ok(FVector::new(n - 1, counts))
}

/// Facet label: the subset `S` of `{0..n}` with the facet hyperplane
/// `Σ_{i∈S} x_i = 1`; the facet is the product of simplices on `S` and its
/// complement `T`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct FacetLabel {
    pub members: Vec<usize>,
}

/// All facets containing the face: every `S` with the face's row labels
/// inside `S` and its column labels inside the complement. The free labels
/// (used by neither side) can go either way, so a face with `t` unused
/// labels lies in `2^t` facets.
pub fn facet_of_face(n: usize, face: &StaircaseFace) -> Result<Vec<FacetLabel>, Error> {
    if !is_face(n, face.pairs())? {
        return Err(Error::NotAFace);
    }
    let rows: Vec<usize> = face.pairs().iter().map(|&(i, _)| i).unique().sorted().collect();
    let cols: Vec<usize> = face.pairs().iter().map(|&(_, j)| j).unique().sorted().collect();
    let free: Vec<usize> = (0..=n).filter(|x| !rows.contains(x) && !cols.contains(x)).collect();
    let mut labels = Vec::with_capacity(1 << free.len());
    for mask in 0u64..(1 << free.len()) {
        let mut members = rows.clone();
        for (bit, &x) in free.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                members.push(x);
            }
        }
        members.sort_unstable();
        labels.push(FacetLabel { members });
    }
    labels.sort_unstable();
    Ok(labels)
}

/// Outcome of the per-cell determinant check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellCheck {
    pub cells: u64,
    pub pass: bool,
    /// First cell (with its determinant) that failed, if any.
    pub witness: Option<(StaircaseFace, i128)>,
}

/// Check that every top cell of the triangulation, coned from the origin,
/// spans the lattice: the `n x n` matrix of its vertices written in the basis
/// `e_t - e_{t+1}` must have determinant ±1.
pub fn cell_unimodularity_check(n: usize) -> CellCheck {
    let mut cells = 0u64;
    let mut witness = None;
    visit_faces(n, n, |pairs| {
        cells += 1;
        if witness.is_some() {
            return;
        }
        let mat: Vec<Vec<i128>> = pairs.iter().map(|&(i, j)| basis_coords(n, i, j)).collect();
        let det = int_det(mat);
        if det.abs() != 1 {
            witness = Some((StaircaseFace { pairs: pairs.to_vec() }, det));
        }
    });
    CellCheck {
        cells,
        pass: witness.is_none(),
        witness,
    }
}

/// `e_i - e_j` in the lattice basis `{e_t - e_{t+1} : 0 <= t < n}`: the sum
/// of consecutive differences from `i` to `j`.
fn basis_coords(n: usize, i: usize, j: usize) -> Vec<i128> {
    let mut v = vec![0i128; n];
    if i < j {
        for t in i..j {
            v[t] = 1;
        }
    } else {
        for t in j..i {
            v[t] = -1;
        }
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comb::{binomial, multinomial3};
    use crate::coordinator::h_closed;
    use crate::lattices::{FamilyKind, LatticeFamily};
    use crate::polyalg::transform_f_to_h;
    use std::collections::HashSet;

    #[test]
    fn face_predicate_examples() {
        assert!(is_face(3, &[(0, 1)]).unwrap());
        // the worked staircase in the rank-6 polytope
        assert!(is_face(6, &[(0, 1), (0, 2), (4, 2), (4, 3), (4, 5), (6, 5)]).unwrap());
        // row label 1 reappears as a column label
        assert!(!is_face(3, &[(0, 1), (1, 2)]).unwrap());
        // unsorted input is sorted before checking
        assert!(is_face(3, &[(2, 3), (0, 1)]).unwrap());
        // duplicate position
        assert!(!is_face(3, &[(0, 1), (0, 1)]).unwrap());
        // diagonal position is excluded by condition 3
        assert!(!is_face(3, &[(1, 1)]).unwrap());
        // columns must be weakly increasing once rows are sorted
        assert!(!is_face(4, &[(0, 2), (1, 1)]).unwrap());
        assert!(matches!(
            is_face(3, &[(0, 4)]),
            Err(Error::IndexOutOfRange { index: 4, bound: 3 })
        ));
        assert!(!is_face(3, &[]).unwrap());
    }

    #[test]
    fn counts_match_multinomials() {
        for n in 1..=6 {
            for m in 0..=n {
                assert_eq!(
                    BigInt::from(count_faces(n, m)),
                    multinomial3((n + m) as u64, m as u64, m as u64, (n - m) as u64),
                    "n={n} m={m}"
                );
            }
        }
    }

    #[test]
    fn count_examples() {
        assert_eq!(count_faces(2, 1), 6);
        assert_eq!(count_faces(2, 2), 6);
        assert_eq!(count_faces(3, 3), 20);
    }

    #[test]
    fn generated_faces_are_valid_distinct_and_canonical() {
        for n in 1..=4 {
            for m in 1..=n {
                let mut seen = HashSet::new();
                visit_faces(n, m, |pairs| {
                    assert!(is_face(n, pairs).unwrap());
                    let mut sorted = pairs.to_vec();
                    sorted.sort_unstable();
                    assert_eq!(sorted, pairs, "emitted in canonical order");
                    assert!(seen.insert(pairs.to_vec()), "face emitted twice");
                });
            }
        }
    }

    #[test]
    fn downward_closure() {
        // dropping any vertex from a face leaves a face
        for n in 1..=4 {
            for m in 2..=n {
                visit_faces(n, m, |pairs| {
                    for skip in 0..pairs.len() {
                        let sub: Vec<(usize, usize)> = pairs
                            .iter()
                            .enumerate()
                            .filter(|&(t, _)| t != skip)
                            .map(|(_, &p)| p)
                            .collect();
                        assert!(is_face(n, &sub).unwrap());
                    }
                });
            }
        }
    }

    #[test]
    fn f_vectors() {
        assert_eq!(
            staircase_f_vector(1).unwrap(),
            FVector::from_u64(0, &[1, 2])
        );
        assert_eq!(
            staircase_f_vector(2).unwrap(),
            FVector::from_u64(1, &[1, 6, 6])
        );
        assert_eq!(
            staircase_f_vector(3).unwrap(),
            FVector::from_u64(2, &[1, 12, 30, 20])
        );
        assert!(matches!(
            staircase_f_vector_with_budget(5, 4),
            Err(Error::BudgetExceeded { n: 5, budget: 4 })
        ));
    }

    #[test]
    fn f_to_h_matches_coordinator() {
        for n in 1..=6 {
            let fv = staircase_f_vector(n).unwrap();
            let family = LatticeFamily::new(FamilyKind::A, n).unwrap();
            assert_eq!(transform_f_to_h(&fv), h_closed(&family).unwrap(), "n={n}");
        }
    }

    #[test]
    fn facets_of_faces() {
        let v01 = StaircaseFace::new(3, vec![(0, 1)]).unwrap();
        let labels = facet_of_face(3, &v01).unwrap();
        let expect: Vec<Vec<usize>> =
            vec![vec![0], vec![0, 2], vec![0, 2, 3], vec![0, 3]];
        assert_eq!(labels.iter().map(|l| l.members.clone()).collect::<Vec<_>>(), expect);

        // the worked example: rows {0,4,6} and columns {1,2,3,5} force S = {0,4,6}
        let face = StaircaseFace::new(6, vec![(0, 1), (0, 2), (4, 2), (4, 3), (4, 5), (6, 5)]).unwrap();
        let labels = facet_of_face(6, &face).unwrap();
        assert_eq!(labels.len(), 1);
        assert_eq!(labels[0].members, vec![0, 4, 6]);

        let forced = StaircaseFace::new(2, vec![(0, 1), (0, 2)]).unwrap();
        let labels = facet_of_face(2, &forced).unwrap();
        assert_eq!(labels.len(), 1);
        assert_eq!(labels[0].members, vec![0]);
    }

    #[test]
    fn every_face_lies_in_a_facet_top_cells_in_exactly_one() {
        for n in 1..=4 {
            for m in 1..=n {
                visit_faces(n, m, |pairs| {
                    let face = StaircaseFace { pairs: pairs.to_vec() };
                    let labels = facet_of_face(n, &face).unwrap();
                    assert!(!labels.is_empty());
                    if m == n {
                        assert_eq!(labels.len(), 1, "top cell in exactly one facet");
                    }
                });
            }
        }
    }

    #[test]
    fn cells_per_facet() {
        // the facet on S holds C(|S|+|T|-2, |S|-1) top cells; totals C(2n, n)
        for n in 1..=5 {
            let mut per_facet: std::collections::HashMap<Vec<usize>, u64> = Default::default();
            visit_faces(n, n, |pairs| {
                let face = StaircaseFace { pairs: pairs.to_vec() };
                let labels = facet_of_face(n, &face).unwrap();
                *per_facet.entry(labels[0].members.clone()).or_default() += 1;
            });
            let mut total = 0u64;
            for (s, cells) in &per_facet {
                let s_size = s.len() as u64;
                let t_size = (n + 1) as u64 - s_size;
                assert_eq!(
                    BigInt::from(*cells),
                    binomial(s_size + t_size - 2, s_size as i64 - 1),
                    "n={n} S={s:?}"
                );
                total += cells;
            }
            assert_eq!(BigInt::from(total), binomial(2 * n as u64, n as i64));
            assert_eq!(per_facet.len() as u64, (1 << (n + 1)) - 2);
        }
    }

    #[test]
    fn cell_determinants() {
        for n in 1..=4 {
            let check = cell_unimodularity_check(n);
            assert!(check.pass, "n={n}");
            assert_eq!(
                BigInt::from(check.cells),
                binomial(2 * n as u64, n as i64)
            );
        }
    }

    #[test]
    fn dump_format() {
        let face = StaircaseFace::new(6, vec![(0, 1), (0, 2), (4, 2)]).unwrap();
        assert_eq!(face.to_string(), "0,1 0,2 4,2");
    }
}
