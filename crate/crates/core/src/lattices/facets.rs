//! Facet census of the root polytopes against their explicit candidate
//! hyperplane lists:
//!
//! * `P_{A_n}`: `Σ_{i∈S} x_i = 1` for proper nonempty `S ⊆ {0..n}`; the facet
//!   is a product of simplices with `|S|·|T|` vertices, `T` the complement.
//! * `P_{D_n}`: `Σ σ_i x_i = 2` (hypersimplex facets, `C(n,2)` vertices) and
//!   `σ_i x_i = 1` (cross-polytope facets, `2(n-1)` vertices).
//! * `P_{C_n} = 2◇_n`: `Σ σ_i x_i = 2` (simplex facets, `n` vertices).
//!
//! Every candidate is also verified to be a supporting hyperplane. For `A_n`
//! the census additionally counts the polytope's edges: a vertex pair is an
//! edge exactly when the vertices lying on every facet common to the pair are
//! the pair itself, which only relies on the (complete) facet list.

use super::{generators, FamilyKind, IntVec, LatticeFamily};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FacetGroup {
    pub description: String,
    pub facets: u64,
    pub vertices_each: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FacetCensus {
    pub family: LatticeFamily,
    pub facet_count: u64,
    pub vertex_count: u64,
    /// Polytope edge count; computed for the A family only.
    pub edge_count: Option<u64>,
    pub groups: Vec<FacetGroup>,
    /// All candidate hyperplanes support the polytope and carry the expected
    /// number of vertices.
    pub pass: bool,
}

/// Vertices of the root polytope. For A and D these are all the generators;
/// for C only the `±2e_i` survive as vertices (the `±e_i±e_j` generators are
/// boundary lattice points of `2◇_n`).
fn polytope_vertices(family: &LatticeFamily) -> Vec<IntVec> {
    match family.kind() {
        FamilyKind::A | FamilyKind::D => generators(family),
        FamilyKind::C => generators(family)
            .into_iter()
            .filter(|v| v.iter().any(|&x| x.abs() == 2))
            .collect(),
    }
}

/// Candidate facet: inner normal coefficients and right-hand side, so the
/// facet hyperplane is `<a, x> = b` and validity means `<a, v> <= b` for all
/// vertices `v`.
struct Candidate {
    a: Vec<i64>,
    b: i64,
    expected_vertices: u64,
    group: usize,
}

fn dot(a: &[i64], v: &[i64]) -> i64 {
    a.iter().zip(v).map(|(x, y)| x * y).sum()
}

/// Sign vectors of length `n`, fixed order.
fn sign_vectors(n: usize) -> Vec<Vec<i64>> {
    (0..1u64 << n)
        .map(|mask| (0..n).map(|i| if mask >> i & 1 == 0 { 1 } else { -1 }).collect())
        .collect()
}

pub fn facet_census(family: &LatticeFamily) -> FacetCensus {
    let n = family.rank();
    let vertices = polytope_vertices(family);
    let mut groups: Vec<FacetGroup> = Vec::new();
    let mut candidates: Vec<Candidate> = Vec::new();

    match family.kind() {
        FamilyKind::A => {
            // group facets by |S|
            for s_size in 1..=n {
                groups.push(FacetGroup {
                    description: format!("simplex product, |S| = {s_size}"),
                    facets: 0,
                    vertices_each: (s_size * (n + 1 - s_size)) as u64,
                });
            }
            for mask in 1u64..(1 << (n + 1)) - 1 {
                let a: Vec<i64> = (0..=n).map(|i| (mask >> i & 1) as i64).collect();
                let s_size = mask.count_ones() as usize;
                candidates.push(Candidate {
                    a,
                    b: 1,
                    expected_vertices: (s_size * (n + 1 - s_size)) as u64,
                    group: s_size - 1,
                });
            }
        }
        FamilyKind::D => {
            groups.push(FacetGroup {
                description: "hypersimplex".to_string(),
                facets: 0,
                vertices_each: (n * (n - 1) / 2) as u64,
            });
            groups.push(FacetGroup {
                description: "cross-polytope".to_string(),
                facets: 0,
                vertices_each: 2 * (n as u64 - 1),
            });
            for sigma in sign_vectors(n) {
                candidates.push(Candidate {
                    a: sigma,
                    b: 2,
                    expected_vertices: (n * (n - 1) / 2) as u64,
                    group: 0,
                });
            }
            for i in 0..n {
                for s in [1i64, -1] {
                    let mut a = vec![0i64; n];
                    a[i] = s;
                    candidates.push(Candidate {
                        a,
                        b: 1,
                        expected_vertices: 2 * (n as u64 - 1),
                        group: 1,
                    });
                }
            }
        }
        FamilyKind::C => {
            groups.push(FacetGroup {
                description: "simplex".to_string(),
                facets: 0,
                vertices_each: n as u64,
            });
            for sigma in sign_vectors(n) {
                candidates.push(Candidate {
                    a: sigma,
                    b: 2,
                    expected_vertices: n as u64,
                    group: 0,
                });
            }
        }
    }

    let mut pass = true;
    // facet index sets per vertex, for the A edge count
    let mut vertex_facets: Vec<Vec<u32>> = vec![Vec::new(); vertices.len()];
    for (fi, cand) in candidates.iter().enumerate() {
        let mut on = 0u64;
        for (vi, v) in vertices.iter().enumerate() {
            let val = dot(&cand.a, v);
            if val > cand.b {
                pass = false; // not a supporting hyperplane
            }
            if val == cand.b {
                on += 1;
                vertex_facets[vi].push(fi as u32);
            }
        }
        if on != cand.expected_vertices {
            pass = false;
        }
        groups[cand.group].facets += 1;
    }

    let edge_count = match family.kind() {
        FamilyKind::A => Some(count_edges(&vertex_facets)),
        _ => None,
    };

    FacetCensus {
        family: *family,
        facet_count: candidates.len() as u64,
        vertex_count: vertices.len() as u64,
        edge_count,
        groups,
        pass,
    }
}

/// Pairs `{u, v}` whose minimal face (the vertices lying on every facet
/// containing both) is exactly the pair. `facets[v]` lists the facet indices
/// through vertex `v`, sorted ascending.
fn count_edges(facets: &[Vec<u32>]) -> u64 {
    let mut edges = 0u64;
    for u in 0..facets.len() {
        for v in u + 1..facets.len() {
            let common = intersect_sorted(&facets[u], &facets[v]);
            if common.is_empty() {
                continue;
            }
            let supporting = facets
                .iter()
                .filter(|fw| is_subset_sorted(&common, fw))
                .count();
            if supporting == 2 {
                edges += 1;
            }
        }
    }
    edges
}

fn intersect_sorted(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

fn is_subset_sorted(sub: &[u32], sup: &[u32]) -> bool {
    let mut j = 0;
    for &x in sub {
        while j < sup.len() && sup[j] < x {
            j += 1;
        }
        if j == sup.len() || sup[j] != x {
            return false;
        }
        j += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(kind: FamilyKind, n: usize) -> LatticeFamily {
        LatticeFamily::new(kind, n).unwrap()
    }

    #[test]
    fn a3_census() {
        let c = facet_census(&fam(FamilyKind::A, 3));
        assert!(c.pass);
        assert_eq!(c.facet_count, 14); // 2^4 - 2
        assert_eq!(c.vertex_count, 12);
        assert_eq!(c.edge_count, Some(24)); // (n-1)n(n+1)
        let per_size: Vec<(u64, u64)> = c.groups.iter().map(|g| (g.facets, g.vertices_each)).collect();
        assert_eq!(per_size, vec![(4, 3), (6, 4), (4, 3)]);
    }

    #[test]
    fn a_totals_up_to_6() {
        for n in 1..=6 {
            let c = facet_census(&fam(FamilyKind::A, n));
            assert!(c.pass, "n={n}");
            assert_eq!(c.facet_count, (1u64 << (n + 1)) - 2);
            assert_eq!(c.vertex_count, (n * (n + 1)) as u64);
            assert_eq!(c.edge_count, Some(((n - 1) * n * (n + 1)) as u64));
        }
    }

    #[test]
    fn hexagon_edges_are_facets() {
        let c = facet_census(&fam(FamilyKind::A, 2));
        assert_eq!(c.facet_count, 6);
        assert_eq!(c.edge_count, Some(6));
    }

    #[test]
    fn d3_census() {
        let c = facet_census(&fam(FamilyKind::D, 3));
        assert!(c.pass);
        assert_eq!(c.facet_count, 8 + 6);
        let hyper = &c.groups[0];
        assert_eq!((hyper.facets, hyper.vertices_each), (8, 3));
        let cross = &c.groups[1];
        assert_eq!((cross.facets, cross.vertices_each), (6, 4));
    }

    #[test]
    fn d4_census() {
        let c = facet_census(&fam(FamilyKind::D, 4));
        assert!(c.pass);
        assert_eq!(c.facet_count, 16 + 8);
        assert_eq!(c.vertex_count, 24);
    }

    #[test]
    fn c_census() {
        for n in 2..=5 {
            let c = facet_census(&fam(FamilyKind::C, n));
            assert!(c.pass, "n={n}");
            assert_eq!(c.facet_count, 1 << n);
            assert_eq!(c.vertex_count, 2 * n as u64);
        }
    }
}
