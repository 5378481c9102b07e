//! Brute-force growth oracle: breadth-first expansion of the word-length ball
//! in the Cayley graph of the monoid generators.

use std::collections::HashSet;

use num_bigint::BigInt;

use super::{contains, generators, Error, FamilyKind, IntVec, LatticeFamily};

/// Refuse breadth-first searches whose ball could exceed this many points.
pub const BALL_POINT_LIMIT: u64 = 100_000_000;

/// Growth function values from breadth-first search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrowthReport {
    pub family: LatticeFamily,
    pub kmax: usize,
    /// `s[k]` = number of lattice vectors of word length exactly `k`.
    pub s: Vec<u64>,
    /// `cumulative[k]` = ball size `Σ_{i<=k} s[i]`.
    pub cumulative: Vec<u64>,
}

/// Upper bound on the number of lattice points in the word-length-`k` ball,
/// from the bounding box of the `k`-th polytope dilate.
fn ball_estimate(family: &LatticeFamily, k: usize) -> BigInt {
    let n = family.rank() as u32;
    let k = k as u64;
    match family.kind() {
        // zero-sum vectors with |x_i| <= k: the first n coordinates determine the last
        FamilyKind::A => BigInt::from(2 * k + 1).pow(n),
        FamilyKind::C => BigInt::from(4 * k + 1).pow(n),
        FamilyKind::D => BigInt::from(2 * k + 1).pow(n),
    }
}

/// `S(k)` for `k = 0..=kmax` by breadth-first search.
///
/// Each point is assigned the level of its first visit; since levels are
/// expanded strictly in order and any expression `u = Σ c_i g_i` of length `k`
/// walks to `u` in `k` generator steps, the first-visit level is exactly the
/// word length.
pub fn growth_bfs(family: &LatticeFamily, kmax: usize) -> Result<GrowthReport, Error> {
    let estimate = ball_estimate(family, kmax);
    if estimate > BigInt::from(BALL_POINT_LIMIT) {
        return Err(Error::BallTooLarge {
            estimate,
            limit: BALL_POINT_LIMIT,
        });
    }
    let gens = generators(family);
    let origin: IntVec = vec![0; family.ambient_dim()];
    let mut visited: HashSet<IntVec> = HashSet::new();
    visited.insert(origin.clone());
    let mut frontier = vec![origin];
    let mut s = vec![1u64];
    let mut cumulative = vec![1u64];
    for _ in 1..=kmax {
        let mut next = Vec::new();
        for p in &frontier {
            for g in &gens {
                let q: IntVec = p.iter().zip(g).map(|(a, b)| a + b).collect();
                if visited.insert(q.clone()) {
                    debug_assert!(contains(family, &q).unwrap());
                    next.push(q);
                }
            }
        }
        s.push(next.len() as u64);
        cumulative.push(cumulative.last().unwrap() + next.len() as u64);
        frontier = next;
    }
    Ok(GrowthReport {
        family: *family,
        kmax,
        s,
        cumulative,
    })
}
