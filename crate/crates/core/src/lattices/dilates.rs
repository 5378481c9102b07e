//! Lattice-point counts in dilates of the root polytopes, by direct
//! inequality enumeration over a bounding box, and h*-polynomial extraction
//! from the resulting Ehrhart data.
//!
//! The inequalities come from the facet descriptions of the polytopes, not
//! from the breadth-first oracle, so the two counts are independent:
//!
//! * `k·P_{A_n}`: coordinate sum 0 and positive-part sum `<= k`
//! * `k·P_{C_n}`: `Σ|x_i| <= 2k` (even coordinate sum)
//! * `k·P_{D_n}`: `Σ|x_i| <= 2k` and `max|x_i| <= k` (even coordinate sum)

use num_bigint::BigInt;
use num_traits::Zero;

use super::{thread_count, Error, FamilyKind, LatticeFamily};
use crate::comb::binomial;
use crate::polyalg::Poly;

/// Number of lattice points of the family's lattice inside the `k`-th dilate
/// of its root polytope.
pub fn dilate_point_count(family: &LatticeFamily, k: usize) -> u64 {
    if k == 0 {
        return 1;
    }
    let n = family.rank();
    let k = k as i64;
    // Work is split over the first coordinate; addition is associative and
    // commutative, so the split does not affect the total.
    let first_range: Vec<i64> = match family.kind() {
        FamilyKind::A | FamilyKind::D => (-k..=k).collect(),
        FamilyKind::C => (-2 * k..=2 * k).collect(),
    };
    let workers = thread_count().min(first_range.len().max(1));
    let chunk = first_range.len().div_ceil(workers);
    let count_for = |first_values: &[i64]| -> u64 {
        let mut count = 0u64;
        for &x0 in first_values {
            match family.kind() {
                FamilyKind::A => count_a(n + 1, k, 1, x0, x0.max(0), &mut count),
                FamilyKind::C | FamilyKind::D => {
                    let cap = if family.kind() == FamilyKind::C { 2 * k } else { k };
                    count_cd(n, 2 * k - x0.abs(), cap, 1, x0, &mut count)
                }
            }
        }
        count
    };
    if workers <= 1 {
        count_for(&first_range)
    } else {
        std::thread::scope(|scope| {
            first_range
                .chunks(chunk)
                .map(|vals| scope.spawn(move || count_for(vals)))
                .collect::<Vec<_>>()
                .into_iter()
                .map(|h| h.join().expect("dilate counting worker panicked"))
                .sum()
        })
    }
}

/// Recurse over coordinates `idx..dim-1` of an `A_n` point with running sum
/// and positive-part sum; the last coordinate is forced by the zero-sum
/// constraint.
fn count_a(dim: usize, k: i64, idx: usize, sum: i64, pos: i64, count: &mut u64) {
    if idx == dim - 1 {
        let last = -sum;
        if last.abs() <= k && pos + last.max(0) <= k {
            *count += 1;
        }
        return;
    }
    for x in -k..=k {
        let npos = pos + x.max(0);
        if npos > k {
            continue;
        }
        count_a(dim, k, idx + 1, sum + x, npos, count);
    }
}

/// Recurse over remaining coordinates of a `C_n`/`D_n` point with `abs_budget`
/// of `Σ|x_i|` left and per-coordinate bound `cap`; accept even coordinate sums.
fn count_cd(n: usize, abs_budget: i64, cap: i64, idx: usize, sum: i64, count: &mut u64) {
    if abs_budget < 0 {
        return;
    }
    if idx == n {
        if sum % 2 == 0 {
            *count += 1;
        }
        return;
    }
    let bound = cap.min(abs_budget);
    for x in -bound..=bound {
        count_cd(n, abs_budget - x.abs(), cap, idx + 1, sum + x, count);
    }
}

/// h*-polynomial of the root polytope from dilate counts: with `d = n`,
/// multiply the Ehrhart series `1 + Σ_{r>0} |rP ∩ L| t^r` by `(1-t)^{n+1}`.
/// One extra dilate is counted so the first coefficient beyond degree `n`
/// can be checked to vanish.
pub fn h_star_from_dilates(family: &LatticeFamily) -> Result<Poly, Error> {
    let n = family.rank();
    let counts: Vec<BigInt> = (0..=n + 1)
        .map(|r| BigInt::from(dilate_point_count(family, r)))
        .collect();
    let numer = |j: usize| -> BigInt {
        (0..=j.min(n + 1))
            .map(|i| {
                let sign = if i % 2 == 0 { 1 } else { -1 };
                BigInt::from(sign) * binomial(n as u64 + 1, i as i64) * &counts[j - i]
            })
            .sum()
    };
    let tail = numer(n + 1);
    if !tail.is_zero() {
        return Err(Error::NonPolynomialRemainder {
            index: n + 1,
            value: tail,
        });
    }
    Ok(Poly::from_coeffs((0..=n).map(numer).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coordinator::h_closed;
    use crate::lattices::growth_bfs;

    fn fam(kind: FamilyKind, n: usize) -> LatticeFamily {
        LatticeFamily::new(kind, n).unwrap()
    }

    #[test]
    fn zero_dilate_is_origin() {
        for (kind, n) in [(FamilyKind::A, 3), (FamilyKind::C, 2), (FamilyKind::D, 4)] {
            assert_eq!(dilate_point_count(&fam(kind, n), 0), 1);
        }
    }

    #[test]
    fn unit_dilates() {
        // roots plus the origin are the only lattice points of the polytope
        assert_eq!(dilate_point_count(&fam(FamilyKind::A, 2), 1), 7);
        assert_eq!(dilate_point_count(&fam(FamilyKind::C, 2), 1), 9);
        assert_eq!(dilate_point_count(&fam(FamilyKind::D, 3), 1), 13);
        assert_eq!(dilate_point_count(&fam(FamilyKind::A, 3), 1), 13);
    }

    #[test]
    fn a1_dilates_on_the_line() {
        // kP_{A_1} ∩ A_1 = {(t,-t) : |t| <= k}
        for k in 0..6 {
            assert_eq!(dilate_point_count(&fam(FamilyKind::A, 1), k), 2 * k as u64 + 1);
        }
    }

    #[test]
    fn dilates_match_bfs_balls() {
        // normality: the ball of word length k is exactly the k-th dilate
        for (kind, n, kmax) in [
            (FamilyKind::A, 2, 4),
            (FamilyKind::A, 3, 3),
            (FamilyKind::C, 2, 3),
            (FamilyKind::C, 3, 2),
            (FamilyKind::D, 3, 3),
            (FamilyKind::D, 4, 2),
        ] {
            let family = fam(kind, n);
            let r = growth_bfs(&family, kmax).unwrap();
            for k in 0..=kmax {
                assert_eq!(r.cumulative[k], dilate_point_count(&family, k), "{family} k={k}");
            }
        }
    }

    #[test]
    fn h_star_examples() {
        assert_eq!(
            h_star_from_dilates(&fam(FamilyKind::A, 1)).unwrap(),
            Poly::from_i64(&[1, 1])
        );
        assert_eq!(
            h_star_from_dilates(&fam(FamilyKind::A, 3)).unwrap(),
            Poly::from_i64(&[1, 9, 9, 1])
        );
        assert_eq!(
            h_star_from_dilates(&fam(FamilyKind::D, 3)).unwrap(),
            Poly::from_i64(&[1, 9, 9, 1])
        );
    }

    #[test]
    fn h_star_equals_coordinator() {
        for (kind, nmax) in [(FamilyKind::A, 4), (FamilyKind::C, 3), (FamilyKind::D, 3)] {
            let nmin = if kind == FamilyKind::A { 1 } else { 2 };
            for n in nmin..=nmax {
                let family = fam(kind, n);
                assert_eq!(
                    h_star_from_dilates(&family).unwrap(),
                    h_closed(&family).unwrap(),
                    "{family}"
                );
            }
        }
    }

    #[test]
    fn thread_count_does_not_change_counts() {
        let family = fam(FamilyKind::C, 3);
        let base = dilate_point_count(&family, 3);
        for threads in ["1", "2", "5"] {
            std::env::set_var("ROOTLAT_THREADS", threads);
            assert_eq!(dilate_point_count(&family, 3), base);
        }
        std::env::remove_var("ROOTLAT_THREADS");
    }
}
