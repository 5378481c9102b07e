//! Binomial and multinomial coefficients over arbitrary-precision integers.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Binomial coefficient `C(n, k)`, zero for `k < 0` or `k > n`.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut r = BigInt::one();
    for i in 0..k {
        // exact at every step: r holds C(n, i) before the update
        r = r * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    r
}

/// Trinomial coefficient `n! / (a! b! c!)` with `a + b + c = n`.
pub fn multinomial3(n: u64, a: u64, b: u64, c: u64) -> BigInt {
    assert_eq!(a + b + c, n, "multinomial parts must sum to n");
    binomial(n, a as i64) * binomial(n - a, b as i64)
}
