use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed};

use super::{Error, Poly};

/// Bivariate polynomial in `z` and `x`: `rows[r]` is the `z^r` coefficient,
/// itself a polynomial in `x`. Trailing zero rows are trimmed, and each row is
/// a normalized [`Poly`], so zero columns never linger either.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct BivPoly {
    rows: Vec<Poly>,
}

impl BivPoly {
    pub fn zero() -> Self {
        BivPoly { rows: Vec::new() }
    }

    pub fn one() -> Self {
        BivPoly::from_rows(vec![Poly::one()])
    }

    pub fn from_rows(mut rows: Vec<Poly>) -> Self {
        while rows.last().is_some_and(Poly::is_zero) {
            rows.pop();
        }
        BivPoly { rows }
    }

    /// A pure polynomial in `x`, viewed as the `z^0` row.
    pub fn from_poly(p: Poly) -> Self {
        BivPoly::from_rows(vec![p])
    }

    pub fn rows(&self) -> &[Poly] {
        &self.rows
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    /// Degree in `z`, or `None` when zero.
    pub fn z_degree(&self) -> Option<usize> {
        self.rows.len().checked_sub(1)
    }

    /// Coefficient of `z^r` (zero beyond the stored rows).
    pub fn z_coeff(&self, r: usize) -> Poly {
        self.rows.get(r).cloned().unwrap_or_else(Poly::zero)
    }

    /// Multiply by `z^k`.
    pub fn mul_zpow(&self, k: usize) -> BivPoly {
        if self.is_zero() {
            return BivPoly::zero();
        }
        let mut rows = vec![Poly::zero(); k];
        rows.extend_from_slice(&self.rows);
        BivPoly { rows }
    }

    pub fn mul_poly(&self, p: &Poly) -> BivPoly {
        BivPoly::from_rows(self.rows.iter().map(|r| r * p).collect())
    }

    pub fn pow(&self, e: usize) -> BivPoly {
        let mut acc = BivPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl fmt::Debug for BivPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .rows
            .iter()
            .enumerate()
            .filter(|(_, p)| !p.is_zero())
            .map(|(r, p)| format!("({p})z^{r}"))
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl Add for &BivPoly {
    type Output = BivPoly;
    fn add(self, rhs: &BivPoly) -> BivPoly {
        let n = self.rows.len().max(rhs.rows.len());
        BivPoly::from_rows((0..n).map(|r| &self.z_coeff(r) + &rhs.z_coeff(r)).collect())
    }
}

impl Sub for &BivPoly {
    type Output = BivPoly;
    fn sub(self, rhs: &BivPoly) -> BivPoly {
        let n = self.rows.len().max(rhs.rows.len());
        BivPoly::from_rows((0..n).map(|r| &self.z_coeff(r) - &rhs.z_coeff(r)).collect())
    }
}

impl Neg for &BivPoly {
    type Output = BivPoly;
    fn neg(self) -> BivPoly {
        BivPoly {
            rows: self.rows.iter().map(|p| -p).collect(),
        }
    }
}

impl Mul for &BivPoly {
    type Output = BivPoly;
    fn mul(self, rhs: &BivPoly) -> BivPoly {
        if self.is_zero() || rhs.is_zero() {
            return BivPoly::zero();
        }
        let mut rows = vec![Poly::zero(); self.rows.len() + rhs.rows.len() - 1];
        for (i, a) in self.rows.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.rows.iter().enumerate() {
                rows[i + j] = &rows[i + j] + &(a * b);
            }
        }
        BivPoly::from_rows(rows)
    }
}

/// Power series in `z` truncated at a fixed order, each `z`-coefficient a
/// polynomial in `x`. `coeffs.len() == order + 1` always; ring operations
/// truncate consistently, so the `z^r` output coefficient depends only on
/// input coefficients up to `z^r`.
#[derive(Clone, PartialEq, Eq)]
pub struct BiSeries {
    order: usize,
    coeffs: Vec<Poly>,
}

impl BiSeries {
    pub fn zero(order: usize) -> Self {
        BiSeries {
            order,
            coeffs: vec![Poly::zero(); order + 1],
        }
    }

    pub fn from_coeffs(order: usize, mut coeffs: Vec<Poly>) -> Self {
        coeffs.resize(order + 1, Poly::zero());
        BiSeries { order, coeffs }
    }

    /// Truncate a polynomial to a series.
    pub fn from_bivpoly(p: &BivPoly, order: usize) -> Self {
        BiSeries::from_coeffs(order, (0..=order).map(|r| p.z_coeff(r)).collect())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Coefficient of `z^r`; panics above the truncation order.
    pub fn coeff(&self, r: usize) -> &Poly {
        &self.coeffs[r]
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    /// Product truncated at the smaller of the two orders.
    pub fn mul(&self, rhs: &BiSeries) -> BiSeries {
        let order = self.order.min(rhs.order);
        let mut coeffs = vec![Poly::zero(); order + 1];
        for r in 0..=order {
            for i in 0..=r {
                if self.coeffs[i].is_zero() {
                    continue;
                }
                coeffs[r] = &coeffs[r] + &(&self.coeffs[i] * &rhs.coeffs[r - i]);
            }
        }
        BiSeries { order, coeffs }
    }

    pub fn mul_bivpoly(&self, rhs: &BivPoly) -> BiSeries {
        self.mul(&BiSeries::from_bivpoly(rhs, self.order))
    }

    pub fn sub(&self, rhs: &BiSeries) -> BiSeries {
        let order = self.order.min(rhs.order);
        BiSeries::from_coeffs(
            order,
            (0..=order).map(|r| &self.coeffs[r] - &rhs.coeffs[r]).collect(),
        )
    }

    pub fn add(&self, rhs: &BiSeries) -> BiSeries {
        let order = self.order.min(rhs.order);
        BiSeries::from_coeffs(
            order,
            (0..=order).map(|r| &self.coeffs[r] + &rhs.coeffs[r]).collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Poly::is_zero)
    }
}

impl fmt::Debug for BiSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, p)| !p.is_zero())
            .map(|(r, p)| format!("({p})z^{r}"))
            .collect();
        write!(f, "{} + O(z^{})", terms.join(" + "), self.order + 1)
    }
}

/// Expand `num/den` as a power series in `z` up to `z^order`, exactly.
///
/// Writing `S·den = num` and comparing `z^r` coefficients gives
/// `s_r·d_0 = num_r − Σ_{i≥1} d_i·s_{r−i}`, so each step is one exact
/// polynomial division by the `z^0` coefficient of the denominator. The
/// `z^0 x^0` entry must be ±1 for the inverse to exist over the integers;
/// if any per-step division is inexact the denominator is not invertible
/// within polynomial coefficients and the expansion is rejected.
pub fn series_expand_rational(
    num: &BivPoly,
    den: &BivPoly,
    order: usize,
) -> Result<BiSeries, Error> {
    let d0 = den.z_coeff(0);
    let unit = d0.coeff(0);
    if !(unit.abs().is_one()) {
        return Err(Error::NonInvertibleDenominator {
            constant_term: unit,
            division_exact: true,
        });
    }
    let d0_is_unit_constant = d0.degree() == Some(0);
    let mut coeffs: Vec<Poly> = Vec::with_capacity(order + 1);
    for r in 0..=order {
        let mut rhs = num.z_coeff(r);
        for i in 1..=r {
            let di = den.z_coeff(i);
            if di.is_zero() {
                continue;
            }
            rhs -= &(&di * &coeffs[r - i]);
        }
        let s_r = if d0_is_unit_constant {
            if unit.is_one() {
                rhs
            } else {
                -&rhs
            }
        } else {
            rhs.exact_div(&d0).ok_or_else(|| Error::NonInvertibleDenominator {
                constant_term: unit.clone(),
                division_exact: false,
            })?
        };
        coeffs.push(s_r);
    }
    Ok(BiSeries { order, coeffs })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> Poly {
        Poly::from_i64(cs)
    }

    #[test]
    fn polynomial_passthrough() {
        // num = z^2, den = 1, order 3 -> coefficients [0, 0, 1, 0]
        let num = BivPoly::one().mul_zpow(2);
        let s = series_expand_rational(&num, &BivPoly::one(), 3).unwrap();
        assert_eq!(s.coeffs(), &[Poly::zero(), Poly::zero(), Poly::one(), Poly::zero()]);
    }

    #[test]
    fn geometric_series() {
        // 1/(1-z) = 1 + z + z^2 + ...
        let den = BivPoly::from_rows(vec![p(&[1]), p(&[-1])]);
        let s = series_expand_rational(&BivPoly::one(), &den, 5).unwrap();
        for r in 0..=5 {
            assert_eq!(s.coeff(r), &Poly::one());
        }
    }

    #[test]
    fn remultiplication_recovers_numerator() {
        // den = 1 - (1+x)z - z^2, num = 1 + xz
        let den = BivPoly::from_rows(vec![p(&[1]), p(&[-1, -1]), p(&[-1])]);
        let num = BivPoly::from_rows(vec![p(&[1]), p(&[0, 1])]);
        let s = series_expand_rational(&num, &den, 8).unwrap();
        let back = s.mul_bivpoly(&den);
        let expect = BiSeries::from_bivpoly(&num, 8);
        assert_eq!(back, expect);
    }

    #[test]
    fn non_invertible_denominator() {
        let den = BivPoly::from_rows(vec![p(&[2]), p(&[1])]);
        let err = series_expand_rational(&BivPoly::one(), &den, 2).unwrap_err();
        assert!(matches!(err, Error::NonInvertibleDenominator { .. }));
    }

    #[test]
    fn unit_constant_term_with_higher_x_terms() {
        // den = (1 + x) ... constant term 1 but not a constant polynomial:
        // 1/(1+x) is not polynomial, so the expansion must be rejected,
        let den = BivPoly::from_poly(p(&[1, 1]));
        let err = series_expand_rational(&BivPoly::one(), &den, 2).unwrap_err();
        assert!(matches!(
            err,
            Error::NonInvertibleDenominator { division_exact: false, .. }
        ));
        // while (1+x)z/(1+x) is polynomial and must succeed.
        let num = BivPoly::from_rows(vec![Poly::zero(), p(&[1, 1])]);
        let s = series_expand_rational(&num, &den, 2).unwrap();
        assert_eq!(s.coeff(1), &Poly::one());
    }

    #[test]
    fn negative_unit() {
        // 1/(-1 + z) = -1 - z - z^2 - ...
        let den = BivPoly::from_rows(vec![p(&[-1]), p(&[1])]);
        let s = series_expand_rational(&BivPoly::one(), &den, 3).unwrap();
        for r in 0..=3 {
            assert_eq!(s.coeff(r), &p(&[-1]));
        }
    }

    #[test]
    fn bivpoly_algebra() {
        let a = BivPoly::from_rows(vec![p(&[-1]), p(&[1, 1])]); // (x+1)z - 1
        let sq = &a * &a;
        assert_eq!(sq.z_coeff(0), p(&[1]));
        assert_eq!(sq.z_coeff(1), p(&[-2, -2]));
        assert_eq!(sq.z_coeff(2), p(&[1, 2, 1]));
        assert_eq!(a.pow(2), sq);
        assert_eq!(&sq - &sq, BivPoly::zero());
    }
}
