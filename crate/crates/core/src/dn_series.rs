//! Generating-function pipeline for the `D_n` boundary triangulation and the
//! `C_n` cone construction built on top of it.
//!
//! Face counts come from three sources that the tests and the verification
//! suite play against each other:
//!
//! * `F_Δ(z,x)`: f-vectors of the standard triangulation of the second
//!   hypersimplex `Δ_{2,n}`, as a rational function expanded exactly.
//! * interior faces of the cross-polytope facets, `f_k = n·2^k·C(n-2,k-1)`,
//!   with a rational closed form as the second route.
//! * an inclusion–exclusion over intersections of hypersimplex facets,
//!   `f_k = Σ_j (-1)^j C(n,j) 2^{n-j} f_k^{(n-j)}`, with the substitution
//!   `F_Δ(2z/(1+z), x)/(1+z)` as the second route.
//!
//! Adding the empty face gives the boundary f-vector of `P_{D_n}`; the f→h
//! transform then lands on the coordinator polynomial, which is checked
//! against Mallows's formula and against the closed generating functions
//! `H_D(z,x)` and `H_C(z,x)`.

use num_bigint::BigInt;
use thiserror::Error;

use crate::comb::binomial;
use crate::polyalg::{
    even_binomial_poly, series_expand_rational, transform_f_to_h, BiSeries, BivPoly, FVector, Poly,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("coefficient of z^{n} requested from a series truncated at order {order}")]
    OrderExceeded { n: usize, order: usize },
}

fn p(cs: &[i64]) -> Poly {
    Poly::from_i64(cs)
}

fn rows(rs: &[&[i64]]) -> BivPoly {
    BivPoly::from_rows(rs.iter().map(|r| Poly::from_i64(r)).collect())
}

/// `2xz + z - 1` squared is the denominator shared by the cross-polytope
/// closed forms.
fn cross_denominator() -> BivPoly {
    let u = rows(&[&[-1], &[1, 2]]);
    &u * &u
}

/// `F_Δ(z,x)` as a cleared fraction:
/// `z^2 (1 + (1+x)z(z+x-2))` over `(1-z)(xz+z-1)^2((1+x)z(z-2)+1)`.
fn fdelta_fraction() -> (BivPoly, BivPoly) {
    let inner = &BivPoly::one() + &rows(&[&[], &[-2, 1], &[1]]).mul_poly(&p(&[1, 1]));
    let num = inner.mul_zpow(2);
    let xz_z_m1 = rows(&[&[-1], &[1, 1]]);
    let den = &(&rows(&[&[1], &[-1]]) * &(&xz_z_m1 * &xz_z_m1)) * &rows(&[&[1], &[-2, -2], &[1, 1]]);
    (num, den)
}

/// Total interior faces of the triangulated cross-polytope facets of
/// `P_{D_n}`: `-2xz^2(2xz+z-2) / (2xz+z-1)^2`.
fn interior_total_fraction() -> (BivPoly, BivPoly) {
    let num = rows(&[&[-2], &[1, 2]]).mul_zpow(2).mul_poly(&p(&[0, -2]));
    (num, cross_denominator())
}

/// Total faces carried by the hypersimplex facets, as printed:
/// `4z^2 [2xz(x+1)(z-1) - (2xz+z-1)^2]` over `((z-1)^2-4xz)(2xz+z-1)^2(z-1)`.
fn hyper_total_fraction() -> (BivPoly, BivPoly) {
    let t1 = rows(&[&[], &[-1], &[1]]).mul_poly(&p(&[0, 2, 2]));
    let num = (&t1 - &cross_denominator()).mul_zpow(2).mul_poly(&p(&[4]));
    let d1 = rows(&[&[1], &[-2, -4], &[1]]);
    let den = &(&d1 * &cross_denominator()) * &rows(&[&[-1], &[1]]);
    (num, den)
}

/// Closed form of the coordinator generating function `H_D(z,x)`.
fn hd_fraction() -> (BivPoly, BivPoly) {
    let num = BivPoly::from_rows(vec![
        p(&[1, 2, 1]),
        p(&[-3, -3, -3, -3]),
        p(&[3, 0, 10, 0, 3]),
        p(&[-1, 1, 0, 0, 1, -1]),
    ])
    .mul_zpow(2);
    let xz_z_m1 = rows(&[&[-1], &[1, 1]]);
    let den = &(&xz_z_m1 * &xz_z_m1) * &rows(&[&[1], &[-2, -2], &[1, -2, 1]]);
    (num, den)
}

/// Closed form of `H_C(z,x)`:
/// `z^2 (1+6x+x^2 - (x-1)^2(x+1)z)` over `1 - 2(x+1)z + (x-1)^2 z^2`.
fn hc_fraction() -> (BivPoly, BivPoly) {
    let num = BivPoly::from_rows(vec![p(&[1, 6, 1]), p(&[-1, 1, 1, -1])]).mul_zpow(2);
    (num, rows(&[&[1], &[-2, -2], &[1, -2, 1]]))
}

/// Faces added by coning each cross-polytope facet of `P_{D_n}` from the
/// matching vertex of `2◇_n`: `-2(2x+1)z^2(2xz+z-2) / (2xz+z-1)^2`.
fn cn_cone_fraction() -> (BivPoly, BivPoly) {
    let num = rows(&[&[-2], &[1, 2]]).mul_zpow(2).mul_poly(&p(&[-2, -4]));
    (num, cross_denominator())
}

fn expand(fraction: (BivPoly, BivPoly), order: usize) -> BiSeries {
    series_expand_rational(&fraction.0, &fraction.1, order)
        .expect("transcribed denominator has unit constant term")
}

/// Expansion of `F_Δ(z,x)`; the `z^n` coefficient lists the face counts of
/// the standard triangulation of `Δ_{2,n}` (no empty-face term).
pub fn fdelta_series(order: usize) -> BiSeries {
    expand(fdelta_fraction(), order)
}

pub fn hd_series(order: usize) -> BiSeries {
    expand(hd_fraction(), order)
}

pub fn hc_series(order: usize) -> BiSeries {
    expand(hc_fraction(), order)
}

/// f-polynomial of the standard triangulation of the hypersimplex `Δ_{2,n}`.
pub fn hypersimplex_f(n: usize) -> Poly {
    assert!(n >= 2);
    fdelta_series(n).coeff(n).clone()
}

/// `Σ_k n·2^k·C(n-2,k-1) x^k`: total interior faces over all `2n` triangulated
/// cross-polytope facets. No `k = 0` term, since the centroids are excluded.
pub fn dn_interior_total_f(n: usize) -> Poly {
    assert!(n >= 2);
    let coeffs = (0..=n.saturating_sub(1))
        .map(|k| {
            if k == 0 {
                BigInt::from(0)
            } else {
                BigInt::from(n) * BigInt::from(2).pow(k as u32) * binomial(n as u64 - 2, k as i64 - 1)
            }
        })
        .collect();
    Poly::from_coeffs(coeffs)
}

/// Second route to [`dn_interior_total_f`]: `z^n` coefficient of the closed
/// rational form.
pub fn dn_interior_total_f_series(n: usize) -> Poly {
    assert!(n >= 2);
    expand(interior_total_fraction(), n).coeff(n).clone()
}

/// Inclusion–exclusion count of all faces lying in hypersimplex facets of
/// `P_{D_n}`: `Σ_j (-1)^j C(n,j) 2^{n-j} f^{(n-j)}(x)`.
pub fn dn_hypersimplex_total_f(n: usize) -> Poly {
    assert!(n >= 2);
    let fdelta = fdelta_series(n);
    let mut acc = Poly::zero();
    for j in 0..=n.saturating_sub(2) {
        let l = n - j; // f^(l) = 0 for l < 2, so the sum stops at j = n-2
        let scalar = BigInt::from(if j % 2 == 0 { 1 } else { -1 })
            * binomial(n as u64, j as i64)
            * BigInt::from(2).pow((n - j) as u32);
        acc += &fdelta.coeff(l).mul_scalar(&scalar);
    }
    acc
}

/// Second route to [`dn_hypersimplex_total_f`]: substitute `z -> 2z/(1+z)`
/// into the `F_Δ` fraction (clearing `(1+z)` powers keeps everything
/// polynomial) and divide by `1+z`; then take the `z^n` coefficient.
pub fn dn_hypersimplex_total_f_series(n: usize) -> Poly {
    assert!(n >= 2);
    let (num, den) = fdelta_fraction();
    let mut num_sub = substitute_2z_over_1pz(&num);
    let mut den_sub = substitute_2z_over_1pz(&den);
    // Clearing (1+z) powers leaves N~/(1+z)^{deg N} over D~/(1+z)^{deg D};
    // together with the extra 1/(1+z) the net factor is (1+z)^{deg D - deg N - 1}.
    let deg_num = num.z_degree().unwrap_or(0);
    let deg_den = den.z_degree().unwrap_or(0);
    let one_plus_z = rows(&[&[1], &[1]]);
    if deg_den > deg_num {
        num_sub = &num_sub * &one_plus_z.pow(deg_den - deg_num - 1);
    } else {
        den_sub = &den_sub * &one_plus_z.pow(deg_num + 1 - deg_den);
    }
    expand((num_sub, den_sub), n).coeff(n).clone()
}

/// `P(2z/(1+z), x) · (1+z)^{deg_z P}`, as a polynomial.
fn substitute_2z_over_1pz(poly: &BivPoly) -> BivPoly {
    let deg = poly.z_degree().unwrap_or(0);
    let one_plus_z = rows(&[&[1], &[1]]);
    let two_z = rows(&[&[], &[2]]);
    let mut acc = BivPoly::zero();
    for (r, row) in poly.rows().iter().enumerate() {
        if row.is_zero() {
            continue;
        }
        let term = &two_z.pow(r) * &one_plus_z.pow(deg - r);
        acc = &acc + &term.mul_poly(row);
    }
    acc
}

/// Boundary f-vector of `P_{D_n}`: the empty face, then interior-of-cross
/// plus hypersimplex face counts (complex dimension `n-1`).
pub fn dn_boundary_f(n: usize) -> FVector {
    assert!(n >= 2);
    let total = &dn_interior_total_f(n) + &dn_hypersimplex_total_f(n);
    let mut counts = vec![BigInt::from(1)];
    counts.extend((0..n).map(|k| total.coeff(k)));
    FVector::new(n - 1, counts)
}

/// h-polynomial of the `D_n` boundary triangulation. For `n >= 3` this runs
/// the face-count pipeline through the f→h transform; `n = 2` (where the
/// polytope degenerates to a square) comes from the closed `H_D` series.
pub fn dn_h(n: usize) -> Poly {
    assert!(n >= 2);
    if n == 2 {
        return hd_series(2).coeff(2).clone();
    }
    transform_f_to_h(&dn_boundary_f(n))
}

/// Mallows's closed form `((1+√x)^{2n} + (1-√x)^{2n})/2 - 2nx(1+x)^{n-2}`,
/// computed without radicals: the first summand is `Σ_k C(2n,2k) x^k`.
pub fn mallows_pn(n: usize) -> Poly {
    assert!(n >= 2);
    let correction = &p(&[0, 2 * n as i64]) * &p(&[1, 1]).pow(n - 2);
    &even_binomial_poly(n) - &correction
}

/// Total faces added by coning the cross-polytope facets of `P_{D_n}` from
/// the `2◇_n` vertices, via the `z^n` series coefficient. The equivalent
/// closed product `2n(1+2x)^{n-1}` is computed alongside and compared.
pub fn cn_cone_total_f(n: usize) -> Poly {
    assert!(n >= 2);
    let from_series = expand(cn_cone_fraction(), n).coeff(n).clone();
    let closed = cn_cone_total_f_closed(n);
    assert_eq!(
        from_series, closed,
        "cone face-count routes disagree at n = {n}"
    );
    from_series
}

/// `2n(1+2x)^{n-1}`: one `(1+2x)^{n-1}` block of cone faces per facet.
pub fn cn_cone_total_f_closed(n: usize) -> Poly {
    assert!(n >= 2);
    p(&[1, 2]).pow(n - 1).mul_scalar(&BigInt::from(2 * n))
}

/// `z^n` coefficient of the closed `H_C(z,x)`: the `C_n` coordinator
/// polynomial as produced by the cone construction.
pub fn cn_h_via_cone(n: usize) -> Poly {
    assert!(n >= 2);
    hc_series(n).coeff(n).clone()
}

/// All the pipeline series expanded once at a common truncation order.
#[derive(Debug, Clone)]
pub struct SeriesBundle {
    order: usize,
    /// Total interior faces of cross-polytope facets, `F_{D_n, total int ◇}`.
    pub fd_interior: BiSeries,
    /// Total faces in hypersimplex facets, `F_{D_n, total Δ}`.
    pub fd_hyper: BiSeries,
    /// Their sum: all boundary faces except the empty face.
    pub fd_boundary: BiSeries,
    /// Closed `H_D(z,x)`.
    pub hd: BiSeries,
    /// Closed `H_C(z,x)`.
    pub hc: BiSeries,
}

impl Default for SeriesBundle {
    /// Expand at [`crate::polyalg::DEFAULT_SERIES_ORDER`].
    fn default() -> Self {
        SeriesBundle::new(crate::polyalg::DEFAULT_SERIES_ORDER)
    }
}

impl SeriesBundle {
    pub fn new(order: usize) -> Self {
        let fd_interior = expand(interior_total_fraction(), order);
        let fd_hyper = expand(hyper_total_fraction(), order);
        let fd_boundary = fd_interior.add(&fd_hyper);
        SeriesBundle {
            order,
            fd_interior,
            fd_hyper,
            fd_boundary,
            hd: hd_series(order),
            hc: hc_series(order),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    fn check(&self, n: usize) -> Result<(), Error> {
        if n > self.order {
            return Err(Error::OrderExceeded { n, order: self.order });
        }
        Ok(())
    }

    pub fn hd_coeff(&self, n: usize) -> Result<&Poly, Error> {
        self.check(n)?;
        Ok(self.hd.coeff(n))
    }

    pub fn hc_coeff(&self, n: usize) -> Result<&Poly, Error> {
        self.check(n)?;
        Ok(self.hc.coeff(n))
    }

    pub fn boundary_coeff(&self, n: usize) -> Result<&Poly, Error> {
        self.check(n)?;
        Ok(self.fd_boundary.coeff(n))
    }
}
