//! Closed-form coordinator polynomials and boundary-triangulation
//! f-polynomials for the `A_n`, `C_n`, `D_n` generator sets, plus the
//! inclusion–exclusion derivation of the `C_n` polynomial from cross-polytope
//! face counts and second-Veronese Hilbert numerators.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::comb::{binomial, multinomial3};
use crate::lattices::{FamilyKind, LatticeFamily};
use crate::polyalg::{self, FVector, Poly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A closed-form term's division left a remainder; the formulas here are
    /// integral term by term, so this signals a transcription bug.
    #[error("inexact division {numerator}/{divisor} in closed-form term")]
    InexactDivision { numerator: BigInt, divisor: BigInt },
}

fn exact(numerator: BigInt, divisor: BigInt) -> Result<BigInt, Error> {
    if (&numerator % &divisor).is_zero() {
        Ok(numerator / divisor)
    } else {
        Err(Error::InexactDivision { numerator, divisor })
    }
}

/// Coordinator polynomial `h` of the growth series, in closed form.
///
/// * `A_n`: `Σ_k C(n,k)^2 x^k`
/// * `C_n`: `Σ_k C(2n,2k) x^k`
/// * `D_n`: `Σ_k [C(2n,2k) − 2k(n−k)/(n−1)·C(n,k)] x^k`
pub fn h_closed(family: &LatticeFamily) -> Result<Poly, Error> {
    let n = family.rank();
    let coeffs: Result<Vec<BigInt>, Error> = match family.kind() {
        FamilyKind::A => (0..=n)
            .map(|k| {
                let b = binomial(n as u64, k as i64);
                Ok(&b * &b)
            })
            .collect(),
        FamilyKind::C => (0..=n)
            .map(|k| Ok(binomial(2 * n as u64, 2 * k as i64)))
            .collect(),
        FamilyKind::D => (0..=n)
            .map(|k| {
                let even = binomial(2 * n as u64, 2 * k as i64);
                let correction = exact(
                    BigInt::from(2 * k * (n - k)) * binomial(n as u64, k as i64),
                    BigInt::from(n as i64 - 1),
                )?;
                Ok(even - correction)
            })
            .collect(),
    };
    Ok(Poly::from_coeffs(coeffs?))
}

/// f-polynomial of a unimodular boundary triangulation of the root polytope,
/// with the empty face at `x^n` (coefficient of `x^{n-m}` is `f_{m-1}`).
///
/// The `D_n` correction term is the printed `n(2n−m−1)2^{m−1}/(n−m)·C(n−2,m−1)`
/// rewritten with the identity `C(n−2,m−1)/(n−m) = C(n−1,m−1)/(n−1)`, which is
/// defined for every `1 ≤ m ≤ n` and resolves the `m = n` term (where the raw
/// quotient reads 0/0) to `n·2^{n−1}`, the value forced by the boundary count.
pub fn f_closed(family: &LatticeFamily) -> Result<Poly, Error> {
    let n = family.rank();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    for m in 0..=n {
        let term = match family.kind() {
            FamilyKind::A => multinomial3((n + m) as u64, m as u64, m as u64, (n - m) as u64),
            FamilyKind::C => cn_f_term(n, m)?,
            FamilyKind::D => {
                let c_part = cn_f_term(n, m)?;
                let correction = if m == 0 {
                    BigInt::zero()
                } else {
                    exact(
                        BigInt::from(n as i64 * (2 * n as i64 - m as i64 - 1))
                            * BigInt::from(2).pow(m as u32 - 1)
                            * binomial(n as u64 - 1, m as i64 - 1),
                        BigInt::from(n as i64 - 1),
                    )?
                };
                c_part - correction
            }
        };
        coeffs[n - m] = term;
    }
    Ok(Poly::from_coeffs(coeffs))
}

/// `n·2^{2m}/(n+m)·C(n+m,2m)`, the `C_n` f-polynomial term.
fn cn_f_term(n: usize, m: usize) -> Result<BigInt, Error> {
    exact(
        BigInt::from(n) * BigInt::from(2).pow(2 * m as u32) * binomial((n + m) as u64, 2 * m as i64),
        BigInt::from(n + m),
    )
}

/// Closed-form pair for one family, with the structural invariants checked.
#[derive(Debug, Clone)]
pub struct ClosedForm {
    pub family: LatticeFamily,
    pub h: Poly,
    pub f: Poly,
}

impl ClosedForm {
    pub fn new(family: LatticeFamily) -> Result<Self, Error> {
        let h = h_closed(&family)?;
        let f = f_closed(&family)?;
        let n = family.rank();
        debug_assert!(h.degree().is_none_or(|d| d <= n));
        debug_assert_eq!(f.degree(), Some(n));
        debug_assert!(f.coeff(n).is_one(), "empty face contributes 1 at x^n");
        Ok(ClosedForm { family, h, f })
    }
}

/// Read an f-polynomial (empty face at `x^n`) back into an [`FVector`] of
/// complex dimension `n - 1`.
pub fn fvector_from_f_poly(f: &Poly, n: usize) -> FVector {
    assert!(n >= 1);
    assert!(f.degree().is_some_and(|d| d == n), "f-polynomial must have degree n");
    FVector::new(n - 1, (0..=n).map(|k| f.coeff(n - k)).collect())
}

/// Numerator `Σ_i C(k,2i) x^i` of the Hilbert series of the degree-2 simplex
/// `V(2,k)` over `(1-x)^k`.
pub fn v2k_numerator(k: usize) -> Poly {
    let coeffs = (0..=k / 2).map(|i| binomial(k as u64, 2 * i as i64)).collect();
    Poly::from_coeffs(coeffs)
}

/// Inclusion–exclusion numerator for the `C_n` growth series:
/// `Σ_j (−1)^{n−j} (1−x)^{n−j} C(n,j) 2^j Σ_i C(j,2i) x^i`.
pub fn cn_inclusion_exclusion(n: usize) -> Poly {
    assert!(n >= 1);
    let one_minus_x = Poly::from_i64(&[1, -1]);
    let mut acc = Poly::zero();
    for j in 0..=n {
        let sign = if (n - j) % 2 == 0 { 1 } else { -1 };
        let scalar = BigInt::from(sign) * binomial(n as u64, j as i64) * BigInt::from(2).pow(j as u32);
        let term = &one_minus_x.pow(n - j) * &v2k_numerator(j);
        acc += &term.mul_scalar(&scalar);
    }
    acc
}

/// True iff the coefficient sequence of `p`, padded to length `d+1`, is its
/// own reversal.
pub fn is_palindromic(p: &Poly, d: usize) -> Result<bool, polyalg::Error> {
    Ok(&p.reverse(d)? == p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::even_binomial_poly;

    fn fam(kind: FamilyKind, n: usize) -> LatticeFamily {
        LatticeFamily::new(kind, n).unwrap()
    }

    fn p(cs: &[i64]) -> Poly {
        Poly::from_i64(cs)
    }

    #[test]
    fn h_closed_examples() {
        assert_eq!(h_closed(&fam(FamilyKind::A, 2)).unwrap(), p(&[1, 4, 1]));
        assert_eq!(h_closed(&fam(FamilyKind::A, 3)).unwrap(), p(&[1, 9, 9, 1]));
        assert_eq!(h_closed(&fam(FamilyKind::C, 4)).unwrap(), p(&[1, 28, 70, 28, 1]));
        assert_eq!(h_closed(&fam(FamilyKind::D, 4)).unwrap(), p(&[1, 20, 54, 20, 1]));
        assert_eq!(h_closed(&fam(FamilyKind::D, 3)).unwrap(), p(&[1, 9, 9, 1]));
        assert_eq!(h_closed(&fam(FamilyKind::D, 2)).unwrap(), p(&[1, 2, 1]));
    }

    #[test]
    fn f_closed_examples() {
        // top cells 20, then 30 edges, 12 vertices, empty face
        assert_eq!(f_closed(&fam(FamilyKind::A, 3)).unwrap(), p(&[20, 30, 12, 1]));
        assert_eq!(f_closed(&fam(FamilyKind::C, 2)).unwrap(), p(&[8, 8, 1]));
        // D_3 boundary: 20 triangles, 30 edges, 12 vertices
        assert_eq!(f_closed(&fam(FamilyKind::D, 3)).unwrap(), p(&[20, 30, 12, 1]));
        assert_eq!(f_closed(&fam(FamilyKind::D, 4)).unwrap(), p(&[96, 192, 120, 24, 1]));
        // x^n coefficient (the empty face) is 1 for every family
        for n in 2..=9 {
            for kind in [FamilyKind::A, FamilyKind::C, FamilyKind::D] {
                let f = f_closed(&fam(kind, n)).unwrap();
                assert!(f.coeff(n).is_one(), "{kind:?} n={n}");
            }
        }
    }

    #[test]
    fn f_transforms_to_h() {
        for kind in [FamilyKind::A, FamilyKind::C, FamilyKind::D] {
            let start = if kind == FamilyKind::A { 1 } else { 2 };
            for n in start..=12 {
                let family = fam(kind, n);
                let f = f_closed(&family).unwrap();
                let fv = fvector_from_f_poly(&f, n);
                assert_eq!(
                    polyalg::transform_f_to_h(&fv),
                    h_closed(&family).unwrap(),
                    "{kind:?} n={n}"
                );
            }
        }
    }

    #[test]
    fn h_at_one_counts_top_cells() {
        for n in 1..=10 {
            let h = h_closed(&fam(FamilyKind::A, n)).unwrap();
            assert_eq!(h.eval(&BigInt::one()), binomial(2 * n as u64, n as i64));
        }
        // h(1) is the number of top faces, the x^0 coefficient of f
        for kind in [FamilyKind::A, FamilyKind::C, FamilyKind::D] {
            let start = if kind == FamilyKind::A { 1 } else { 2 };
            for n in start..=10 {
                let family = fam(kind, n);
                let h = h_closed(&family).unwrap();
                let f = f_closed(&family).unwrap();
                assert_eq!(h.eval(&BigInt::one()), f.coeff(0), "{kind:?} n={n}");
            }
        }
    }

    #[test]
    fn closed_form_bundle() {
        for (kind, n) in [(FamilyKind::A, 5), (FamilyKind::C, 4), (FamilyKind::D, 6)] {
            let cf = ClosedForm::new(fam(kind, n)).unwrap();
            assert_eq!(cf.h, h_closed(&cf.family).unwrap());
            assert_eq!(cf.f.degree(), Some(n));
            assert!(cf.f.coeff(n).is_one());
        }
    }

    #[test]
    fn v2k_examples() {
        assert_eq!(v2k_numerator(0), Poly::one());
        assert_eq!(v2k_numerator(2), p(&[1, 1]));
        assert_eq!(v2k_numerator(4), p(&[1, 6, 1]));
    }

    #[test]
    fn cn_inclusion_exclusion_examples() {
        assert_eq!(cn_inclusion_exclusion(1), p(&[1, 1]));
        assert_eq!(cn_inclusion_exclusion(2), p(&[1, 6, 1]));
        assert_eq!(cn_inclusion_exclusion(3), p(&[1, 15, 15, 1]));
    }

    #[test]
    fn cn_three_way_equality() {
        for n in 2..=12 {
            let via_ie = cn_inclusion_exclusion(n);
            let closed = h_closed(&fam(FamilyKind::C, n)).unwrap();
            assert_eq!(via_ie, closed);
            assert_eq!(closed, even_binomial_poly(n));
        }
    }

    #[test]
    fn palindromicity() {
        assert!(is_palindromic(&p(&[1, 4, 1]), 2).unwrap());
        assert!(!is_palindromic(&p(&[1, 2]), 2).unwrap());
        assert!(is_palindromic(&h_closed(&fam(FamilyKind::D, 5)).unwrap(), 5).unwrap());
        assert!(is_palindromic(&p(&[1, 2]), 0).is_err());
    }

    #[test]
    fn closed_forms_palindromic_nonnegative() {
        for kind in [FamilyKind::A, FamilyKind::C, FamilyKind::D] {
            let start = if kind == FamilyKind::A { 1 } else { 2 };
            for n in start..=12 {
                let h = h_closed(&fam(kind, n)).unwrap();
                assert!(is_palindromic(&h, n).unwrap(), "{kind:?} n={n}");
                assert!(h.is_nonnegative(), "{kind:?} n={n}");
            }
        }
    }
}
