//! One-shot verification harness: every identity the crate claims, checked
//! end to end with exact arithmetic (tolerance zero). Each criterion reports
//! pass/fail plus a failure message per broken identity, so a regression
//! names the formula it broke.

use std::time::Instant;

use num_bigint::BigInt;

use crate::comb::{binomial, multinomial3};
use crate::coordinator::{
    cn_inclusion_exclusion, f_closed, fvector_from_f_poly, h_closed, is_palindromic,
};
use crate::dn_series::{
    cn_cone_total_f_closed, cn_h_via_cone, dn_boundary_f, dn_h, dn_hypersimplex_total_f,
    dn_hypersimplex_total_f_series, hypersimplex_f, mallows_pn,
};
use crate::lattices::{
    check_total_unimodularity_seeded, dilate_point_count, facet_census, growth_bfs,
    h_star_from_dilates, FamilyKind, LatticeFamily, TuMode,
};
use crate::polyalg::{expand_growth, transform_f_to_h, transform_h_to_f, Poly};
use crate::staircase::{cell_unimodularity_check, count_faces, staircase_f_vector};

#[derive(Debug, Clone, Default)]
pub struct VerifyConfig {
    /// Cap on every per-criterion rank range (the stated ranges are the
    /// defaults; a smaller cap shrinks them uniformly).
    pub nmax: Option<usize>,
    /// Seed for the sampled total-unimodularity scan.
    pub seed: u64,
}

#[derive(Debug, Clone)]
pub struct CriterionOutcome {
    pub id: usize,
    pub name: &'static str,
    pub pass: bool,
    pub failures: Vec<String>,
    pub elapsed_ms: u128,
}

impl CriterionOutcome {
    /// The one-line pass/fail summary.
    pub fn summary(&self) -> String {
        format!(
            "criterion {:2}: {} ... {}",
            self.id,
            self.name,
            if self.pass { "pass" } else { "FAIL" }
        )
    }
}

fn cap(cfg: &VerifyConfig, stated: usize) -> usize {
    cfg.nmax.map_or(stated, |m| m.min(stated))
}

fn fam(kind: FamilyKind, n: usize) -> LatticeFamily {
    LatticeFamily::new(kind, n).unwrap()
}

fn finish(
    id: usize,
    name: &'static str,
    failures: Vec<String>,
    start: Instant,
) -> CriterionOutcome {
    CriterionOutcome {
        id,
        name,
        pass: failures.is_empty(),
        failures,
        elapsed_ms: start.elapsed().as_millis(),
    }
}

/// Staircase enumeration: generated face counts equal the trinomial
/// coefficients C(n+m; m,m,n-m) for 1 <= n <= 8, 0 <= m <= n.
pub fn criterion_1(cfg: &VerifyConfig) -> CriterionOutcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    for n in 1..=cap(cfg, 8) {
        for m in 0..=n {
            let counted = BigInt::from(count_faces(n, m));
            let closed = multinomial3((n + m) as u64, m as u64, m as u64, (n - m) as u64);
            if counted != closed {
                failures.push(format!(
                    "face count at n={n}, m={m}: enumerated {counted}, C(n+m; m,m,n-m) = {closed}"
                ));
            }
        }
        let top = BigInt::from(count_faces(n, n));
        let central = binomial(2 * n as u64, n as i64);
        if top != central {
            failures.push(format!(
                "top-cell count at n={n}: enumerated {top}, C(2n,n) = {central}"
            ));
        }
    }
    finish(
        1,
        "staircase face enumeration matches the trinomial closed form",
        failures,
        start,
    )
}

/// The f->h transform of the enumerated staircase f-vector equals
/// sum C(n,k)^2 x^k.
pub fn criterion_2(cfg: &VerifyConfig) -> CriterionOutcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    for n in 1..=cap(cfg, 8) {
        let fv = staircase_f_vector(n).expect("within enumeration budget");
        let h = transform_f_to_h(&fv);
        let squares = Poly::from_coeffs(
            (0..=n)
                .map(|k| {
                    let b = binomial(n as u64, k as i64);
                    &b * &b
                })
                .collect(),
        );
        if h != squares {
            failures.push(format!(
                "transform of staircase f-vector at n={n}: got {h}, want sum C(n,k)^2 x^k = {squares}"
            ));
        }
    }
    finish(
        2,
        "staircase f-vector transforms to the A-family coordinator polynomial",
        failures,
        start,
    )
}

fn growth_ranges(cfg: &VerifyConfig) -> Vec<(FamilyKind, usize, usize, usize)> {
    vec![
        (FamilyKind::A, 1, cap(cfg, 5), 4),
        (FamilyKind::C, 2, cap(cfg, 4), 3),
        (FamilyKind::D, 2, cap(cfg, 4), 3),
    ]
}

/// Breadth-first growth counts equal the series expansion of the closed-form
/// coordinator polynomial; S(1) is the generator count.
pub fn criterion_3(cfg: &VerifyConfig) -> CriterionOutcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    for (kind, nmin, nmax, kmax) in growth_ranges(cfg) {
        for n in nmin..=nmax {
            let family = fam(kind, n);
            let report = growth_bfs(&family, kmax).expect("ball within limit");
            let series = expand_growth(&h_closed(&family).unwrap(), n, kmax);
            for k in 0..=kmax {
                if BigInt::from(report.s[k]) != series[k] {
                    failures.push(format!(
                        "{family} S({k}): breadth-first {}, series h(x)/(1-x)^n gives {}",
                        report.s[k], series[k]
                    ));
                }
            }
            if report.s[1] as usize != family.generator_count() {
                failures.push(format!(
                    "{family} S(1) = {} but the generator set has {} elements",
                    report.s[1],
                    family.generator_count()
                ));
            }
        }
    }
    finish(
        3,
        "breadth-first growth matches the coordinator series expansion",
        failures,
        start,
    )
}

/// Normality: the cumulative word-length ball equals the dilate point count.
pub fn criterion_4(cfg: &VerifyConfig) -> CriterionOutcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    for (kind, nmin, nmax, kmax) in growth_ranges(cfg) {
        for n in nmin..=nmax {
            let family = fam(kind, n);
            let report = growth_bfs(&family, kmax).expect("ball within limit");
            for k in 0..=kmax {
                let dilate = dilate_point_count(&family, k);
                if report.cumulative[k] != dilate {
                    failures.push(format!(
                        "{family} ball({k}) = {} but |kP ∩ L| = {dilate}",
                        report.cumulative[k]
                    ));
                }
            }
        }
    }
    finish(
        4,
        "cumulative growth balls equal dilate lattice-point counts (normality)",
        failures,
        start,
    )
}

/// h* extracted from dilate counts equals the closed-form coordinator.
pub fn criterion_5(cfg: &VerifyConfig) -> CriterionOutcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    let ranges = [
        (FamilyKind::A, 1, cap(cfg, 4)),
        (FamilyKind::C, 2, cap(cfg, 3)),
        (FamilyKind::D, 2, cap(cfg, 3)),
    ];
    for (kind, nmin, nmax) in ranges {
        for n in nmin..=nmax {
            let family = fam(kind, n);
            match h_star_from_dilates(&family) {
                Ok(h_star) => {
                    let closed = h_closed(&family).unwrap();
                    if h_star != closed {
                        failures.push(format!(
                            "{family}: h* from Ehrhart data {h_star}, coordinator {closed}"
                        ));
                    }
                }
                Err(e) => failures.push(format!("{family}: {e}")),
            }
        }
    }
    if cap(cfg, 3) >= 3 {
        let d3 = h_star_from_dilates(&fam(FamilyKind::D, 3)).unwrap();
        if d3 != Poly::from_i64(&[1, 9, 9, 1]) {
            failures.push(format!("D_3 h* = {d3}, want 1 + 9x + 9x^2 + x^3"));
        }
    }
    finish(
        5,
        "h* from dilate counts equals the coordinator polynomial",
        failures,
        start,
    )
}

/// Hypersimplex triangulation series: pinned low-order values and two-route
/// equality of the facet-total counts.
pub fn criterion_6(cfg: &VerifyConfig) -> CriterionOutcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    let pinned = [(3usize, vec![3i64, 3, 1]), (4, vec![6, 13, 12, 4])];
    for (n, want) in pinned {
        let got = hypersimplex_f(n);
        if got != Poly::from_i64(&want) {
            failures.push(format!(
                "hypersimplex f-polynomial at n={n}: {got}, want {:?}",
                want
            ));
        }
    }
    for n in 3..=cap(cfg, 12) {
        let by_sum = dn_hypersimplex_total_f(n);
        let by_series = dn_hypersimplex_total_f_series(n);
        if by_sum != by_series {
            failures.push(format!(
                "hypersimplex facet totals at n={n}: inclusion-exclusion {by_sum}, substituted series {by_series}"
            ));
        }
    }
    finish(
        6,
        "hypersimplex f-polynomials and two-route facet totals",
        failures,
        start,
    )
}

/// D-family pipeline: boundary h-polynomial equals Mallows's formula and the
/// closed form, with the printed low-rank values reproduced.
pub fn criterion_7(cfg: &VerifyConfig) -> CriterionOutcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    for n in 3..=cap(cfg, 12) {
        let pipeline = dn_h(n);
        let mallows = mallows_pn(n);
        let closed = h_closed(&fam(FamilyKind::D, n)).unwrap();
        if pipeline != mallows {
            failures.push(format!(
                "D_{n}: pipeline h {pipeline} differs from Mallows formula {mallows}"
            ));
        }
        if pipeline != closed {
            failures.push(format!(
                "D_{n}: pipeline h {pipeline} differs from closed form {closed}"
            ));
        }
    }
    let printed: [(usize, &[i64]); 4] = [
        (2, &[1, 2, 1]),
        (3, &[1, 9, 9, 1]),
        (4, &[1, 20, 54, 20, 1]),
        (5, &[1, 35, 180, 180, 35, 1]),
    ];
    for (n, want) in printed {
        let got = dn_h(n);
        if got != Poly::from_i64(want) {
            failures.push(format!("D_{n} h-polynomial {got}, want {want:?}"));
        }
    }
    finish(
        7,
        "D-family pipeline h equals Mallows's formula and the closed form",
        failures,
        start,
    )
}

/// C-family pipeline: cone-construction h equals the inclusion-exclusion
/// numerator and the even-binomial closed form.
pub fn criterion_8(cfg: &VerifyConfig) -> CriterionOutcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    for n in 2..=cap(cfg, 12) {
        let cone = cn_h_via_cone(n);
        let incl_excl = cn_inclusion_exclusion(n);
        let closed = h_closed(&fam(FamilyKind::C, n)).unwrap();
        if cone != incl_excl {
            failures.push(format!(
                "C_{n}: cone h {cone} differs from inclusion-exclusion {incl_excl}"
            ));
        }
        if cone != closed {
            failures.push(format!(
                "C_{n}: cone h {cone} differs from sum C(2n,2k) x^k = {closed}"
            ));
        }
        // the cone face totals feeding the combination, both routes
        let _ = cn_cone_total_f_closed(n);
    }
    let printed: [(usize, &[i64]); 4] = [
        (2, &[1, 6, 1]),
        (3, &[1, 15, 15, 1]),
        (4, &[1, 28, 70, 28, 1]),
        (5, &[1, 45, 210, 210, 45, 1]),
    ];
    for (n, want) in printed {
        let got = cn_h_via_cone(n);
        if got != Poly::from_i64(want) {
            failures.push(format!("C_{n} h-polynomial {got}, want {want:?}"));
        }
    }
    finish(
        8,
        "C-family pipeline h equals inclusion-exclusion and even binomials",
        failures,
        start,
    )
}

/// Facet census: totals, per-facet vertex counts, and the A-family edge count.
pub fn criterion_9(cfg: &VerifyConfig) -> CriterionOutcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    for n in 1..=cap(cfg, 8) {
        let family = fam(FamilyKind::A, n);
        let census = facet_census(&family);
        if !census.pass {
            failures.push(format!("{family}: census hyperplane/vertex-count check failed"));
        }
        if census.facet_count != (1 << (n + 1)) - 2 {
            failures.push(format!(
                "{family}: {} facets, want 2^(n+1)-2 = {}",
                census.facet_count,
                (1u64 << (n + 1)) - 2
            ));
        }
        if census.vertex_count != (n * (n + 1)) as u64 {
            failures.push(format!(
                "{family}: {} vertices, want n(n+1) = {}",
                census.vertex_count,
                n * (n + 1)
            ));
        }
        let edges = ((n - 1) * n * (n + 1)) as u64;
        if census.edge_count != Some(edges) {
            failures.push(format!(
                "{family}: edge count {:?}, want (n-1)n(n+1) = {edges}",
                census.edge_count
            ));
        }
    }
    for n in 3..=cap(cfg, 10) {
        let family = fam(FamilyKind::D, n);
        let census = facet_census(&family);
        if !census.pass {
            failures.push(format!("{family}: census hyperplane/vertex-count check failed"));
        }
        let hyper = &census.groups[0];
        if hyper.facets != 1 << n || hyper.vertices_each != (n * (n - 1) / 2) as u64 {
            failures.push(format!(
                "{family}: {} hypersimplex facets with {} vertices, want 2^n = {} with C(n,2) = {}",
                hyper.facets,
                hyper.vertices_each,
                1u64 << n,
                n * (n - 1) / 2
            ));
        }
        let cross = &census.groups[1];
        if cross.facets != 2 * n as u64 || cross.vertices_each != 2 * (n as u64 - 1) {
            failures.push(format!(
                "{family}: {} cross-polytope facets with {} vertices, want 2n with 2(n-1)",
                cross.facets, cross.vertices_each
            ));
        }
    }
    finish(
        9,
        "facet census: totals and per-facet vertex counts",
        failures,
        start,
    )
}

/// Unimodularity: determinant scans of the generator matrix and of every top
/// cell of the staircase triangulation.
pub fn criterion_10(cfg: &VerifyConfig) -> CriterionOutcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    for n in 1..=cap(cfg, 3) {
        let family = fam(FamilyKind::A, n);
        let report =
            check_total_unimodularity_seeded(&family, n + 1, 10_000_000, cfg.seed).unwrap();
        if report.mode != TuMode::Exhaustive {
            failures.push(format!("{family}: expected an exhaustive submatrix scan"));
        }
        if !report.pass {
            failures.push(format!(
                "{family}: submatrix with |det| > 1 found: {:?}",
                report.witness
            ));
        }
    }
    if cap(cfg, 4) >= 4 {
        let family = fam(FamilyKind::A, 4);
        let report = check_total_unimodularity_seeded(&family, 5, 100_000, cfg.seed).unwrap();
        if !report.pass {
            failures.push(format!(
                "{family}: submatrix with |det| > 1 found under the 1e5 budget: {:?}",
                report.witness
            ));
        }
    }
    for n in 1..=cap(cfg, 6) {
        let check = cell_unimodularity_check(n);
        if BigInt::from(check.cells) != binomial(2 * n as u64, n as i64) {
            failures.push(format!(
                "A_{n}: {} top cells checked, want C(2n,n)",
                check.cells
            ));
        }
        if !check.pass {
            failures.push(format!(
                "A_{n}: top cell with non-unit determinant: {:?}",
                check.witness
            ));
        }
    }
    finish(
        10,
        "unimodularity: generator-matrix scan and top-cell determinants",
        failures,
        start,
    )
}

/// Structural properties: palindromic nonnegative h-polynomials, boundary
/// Euler characteristics, and f<->h round-trips.
pub fn criterion_11(cfg: &VerifyConfig) -> CriterionOutcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    let families: [(FamilyKind, usize); 3] =
        [(FamilyKind::A, 1), (FamilyKind::C, 2), (FamilyKind::D, 2)];
    for (kind, nmin) in families {
        for n in nmin..=cap(cfg, 12) {
            let family = fam(kind, n);
            let h = match h_closed(&family) {
                Ok(h) => h,
                Err(e) => {
                    failures.push(format!("{family}: {e}"));
                    continue;
                }
            };
            if !is_palindromic(&h, n).unwrap() {
                failures.push(format!("{family}: h = {h} is not palindromic at degree {n}"));
            }
            if !h.is_nonnegative() {
                failures.push(format!("{family}: h = {h} has a negative coefficient"));
            }
            // round-trip through the f-vector of the closed-form f-polynomial
            let f = f_closed(&family).unwrap();
            let fv = fvector_from_f_poly(&f, n);
            let transformed = transform_f_to_h(&fv);
            match transform_h_to_f(&transformed, n - 1) {
                Ok(counts) if counts == fv.counts() => {}
                Ok(counts) => failures.push(format!(
                    "{family}: f->h->f round-trip changed counts: {counts:?} vs {:?}",
                    fv.counts()
                )),
                Err(e) => failures.push(format!("{family}: round-trip failed: {e}")),
            }
            if transformed != h {
                failures.push(format!(
                    "{family}: closed-form f transforms to {transformed}, not h = {h}"
                ));
            }
        }
    }
    for n in 3..=cap(cfg, 12) {
        let fv = dn_boundary_f(n);
        let expect = BigInt::from(1 + if n % 2 == 0 { -1i64 } else { 1 });
        let chi = fv.euler_characteristic();
        if chi != expect {
            failures.push(format!(
                "D_{n} boundary Euler characteristic {chi}, want 1 + (-1)^(n-1) = {expect}"
            ));
        }
        let h = transform_f_to_h(&fv);
        match transform_h_to_f(&h, n - 1) {
            Ok(counts) if counts == fv.counts() => {}
            _ => failures.push(format!("D_{n} boundary f<->h round-trip failed")),
        }
    }
    finish(
        11,
        "structural: palindromicity, nonnegativity, Euler characteristic, round-trips",
        failures,
        start,
    )
}

/// Run every criterion in order.
pub fn run_all(cfg: &VerifyConfig) -> Vec<CriterionOutcome> {
    vec![
        criterion_1(cfg),
        criterion_2(cfg),
        criterion_3(cfg),
        criterion_4(cfg),
        criterion_5(cfg),
        criterion_6(cfg),
        criterion_7(cfg),
        criterion_8(cfg),
        criterion_9(cfg),
        criterion_10(cfg),
        criterion_11(cfg),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_config_passes_quickly() {
        let cfg = VerifyConfig {
            nmax: Some(3),
            seed: 0,
        };
        for outcome in run_all(&cfg) {
            assert!(outcome.pass, "{}\n{}", outcome.summary(), outcome.failures.join("\n"));
        }
    }
}
