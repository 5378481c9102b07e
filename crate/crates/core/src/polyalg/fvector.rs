use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::poly::x_minus_one;
use super::{Error, Poly};

/// Face-count sequence of a simplicial complex of dimension `d`:
/// `counts = (f_{-1}, f_0, ..., f_d)`, length `d + 2`. The empty face is
/// always counted once (`f_{-1} = 1`) and every entry is nonnegative, so the
/// Laurent bookkeeping for the empty face never needs a `1/x` term.
#[derive(Clone, PartialEq, Eq)]
pub struct FVector {
    d: usize,
    counts: Vec<BigInt>,
}

impl FVector {
    /// `counts` lists `f_{-1}, f_0, ..., f_d`.
    pub fn new(d: usize, counts: Vec<BigInt>) -> Self {
        assert_eq!(counts.len(), d + 2, "need d + 2 face counts (f_-1 .. f_d)");
        assert!(counts[0].is_one(), "f_-1 must be 1 (the empty face)");
        assert!(
            counts.iter().all(|c| !c.is_negative()),
            "face counts must be nonnegative"
        );
        FVector { d, counts }
    }

    pub fn from_u64(d: usize, counts: &[u64]) -> Self {
        FVector::new(d, counts.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Dimension of the complex (top faces have dimension `d`).
    pub fn dim(&self) -> usize {
        self.d
    }

    /// `f_i` for `-1 <= i <= d`.
    pub fn count(&self, i: isize) -> &BigInt {
        &self.counts[(i + 1) as usize]
    }

    /// `(f_{-1}, f_0, ..., f_d)`.
    pub fn counts(&self) -> &[BigInt] {
        &self.counts
    }

    /// The f-polynomial `Σ_{i=-1}^{d} f_i x^{d-i}` (empty face at `x^{d+1}`).
    pub fn f_poly(&self) -> Poly {
        let mut coeffs = self.counts.clone();
        coeffs.reverse();
        Poly::from_coeffs(coeffs)
    }

    /// Alternating sum `Σ_{i>=0} (-1)^i f_i`, the Euler characteristic.
    pub fn euler_characteristic(&self) -> BigInt {
        let mut acc = BigInt::from(0);
        for (i, c) in self.counts.iter().skip(1).enumerate() {
            if i % 2 == 0 {
                acc += c;
            } else {
                acc -= c;
            }
        }
        acc
    }
}

impl fmt::Debug for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "f({}) = ({})",
            self.d,
            self.counts
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        )
    }
}

/// h-polynomial of the complex: `h(x) = f(x-1) = Σ_{i=-1}^{d} f_i (x-1)^{d-i}`.
///
/// This is the substitution convention in which the empty face sits at the
/// top exponent; the coordinator/h*-polynomial is its reversal at degree
/// `d + 1`, which coincides with it whenever the h-polynomial is palindromic.
pub fn transform_f_to_h(f: &FVector) -> Poly {
    f.f_poly().compose(&x_minus_one())
}

/// Inverse of [`transform_f_to_h`]: substitute `x -> x + 1` and read the
/// face counts back off the coefficients. Fails when `h` has degree above
/// `d + 1` and therefore cannot come from a complex of dimension `d`.
pub fn transform_h_to_f(h: &Poly, d: usize) -> Result<Vec<BigInt>, Error> {
    if let Some(deg) = h.degree() {
        if deg > d + 1 {
            return Err(Error::DegreeTooLarge {
                degree: deg,
                bound: d + 1,
            });
        }
    }
    let f_poly = h.compose(&Poly::from_i64(&[1, 1]));
    Ok((0..=d + 1).map(|k| f_poly.coeff(d + 1 - k)).collect())
}
