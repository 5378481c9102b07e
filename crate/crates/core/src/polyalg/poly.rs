use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::Error;
use crate::comb::binomial;

/// Dense univariate polynomial with arbitrary-precision integer coefficients,
/// stored in ascending degree. The zero polynomial is the empty list; the
/// last stored coefficient is always nonzero.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Poly {
    coeffs: Vec<BigInt>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(BigInt::one())
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Poly::from_coeffs(vec![BigInt::zero(), BigInt::one()])
    }

    pub fn constant(c: BigInt) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// Build from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Poly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Ascending coefficient slice (no trailing zeros).
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero beyond the stored length).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial (conventionally −1).
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn mul_scalar(&self, s: &BigInt) -> Poly {
        if s.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    /// Multiply by `x^k`.
    pub fn mul_xpow(&self, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend_from_slice(&self.coeffs);
        Poly { coeffs }
    }

    pub fn pow(&self, e: usize) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Substitute another polynomial for the variable (Horner's rule).
    pub fn compose(&self, inner: &Poly) -> Poly {
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &Poly::constant(c.clone());
        }
        acc
    }

    /// Exact division; `None` when the divisor does not divide `self` in `Z[x]`.
    pub fn exact_div(&self, div: &Poly) -> Option<Poly> {
        if div.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Poly::zero());
        }
        let da = self.degree().unwrap();
        let db = div.degree().unwrap();
        if da < db {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); da - db + 1];
        let lead = &div.coeffs[db];
        for k in (0..=da - db).rev() {
            if rem[k + db].is_zero() {
                continue;
            }
            if !(&rem[k + db] % lead).is_zero() {
                return None;
            }
            let quot = &rem[k + db] / lead;
            for t in 0..=db {
                let delta = &quot * &div.coeffs[t];
                rem[k + t] -= delta;
            }
            q[k] = quot;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Poly::from_coeffs(q))
    }

    /// `x^d · p(1/x)`: the coefficient sequence reversed within length `d+1`.
    pub fn reverse(&self, d: usize) -> Result<Poly, Error> {
        if let Some(deg) = self.degree() {
            if deg > d {
                return Err(Error::DegreeTooLarge {
                    degree: deg,
                    bound: d,
                });
            }
        }
        let mut coeffs = vec![BigInt::zero(); d + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[d - k] = c.clone();
        }
        Ok(Poly::from_coeffs(coeffs))
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }
}

/// Taylor coefficients `S(0..=kmax)` of `h(x) / (1-x)^rank`.
///
/// Dividing by `(1-x)` is a running prefix sum, applied `rank` times; this is
/// exactly the convolution of `h` with the binomials `C(rank-1+j, rank-1)`.
pub fn expand_growth(h: &Poly, rank: usize, kmax: usize) -> Vec<BigInt> {
    assert!(rank >= 1, "rank must be positive");
    let mut s: Vec<BigInt> = (0..=kmax).map(|k| h.coeff(k)).collect();
    for _ in 0..rank {
        for k in 1..=kmax {
            let prev = s[k - 1].clone();
            s[k] += prev;
        }
    }
    s
}

/// Ascending-power pretty printer: `1 + 4x + x^2`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    if k == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        Poly::from_coeffs(coeffs)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect();
        Poly::from_coeffs(coeffs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::from_coeffs(coeffs)
    }
}

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Poly> for Poly {
    fn sub_assign(&mut self, rhs: &Poly) {
        *self = &*self - rhs;
    }
}

/// `(x - 1)^e` and friends come up constantly in f↔h transforms.
pub(crate) fn x_minus_one() -> Poly {
    Poly::from_i64(&[-1, 1])
}

/// `Σ_k C(2n, 2k) x^k`: the even-exponent part of `(1 + √x)^(2n)` written
/// without radicals.
pub fn even_binomial_poly(n: usize) -> Poly {
    let coeffs = (0..=n).map(|k| binomial(2 * n as u64, 2 * k as i64)).collect();
    Poly::from_coeffs(coeffs)
}
