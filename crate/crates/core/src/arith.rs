//! Integer helpers shared by the closed forms: binomials with an extended
//! upper argument, signs, and powers of two.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// `C(n, k)` for any integer `n`, using the usual extension
/// `C(n, k) = (-1)^k C(k - n - 1, k)` when `n < 0`. Zero for `k < 0`.
pub fn binom(n: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    if n < 0 {
        let b = binom(k - n - 1, k);
        return if k % 2 == 0 { b } else { -b };
    }
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    if n <= 100 {
        let mut acc: u128 = 1;
        for i in 0..k {
            acc = acc * (n - i) as u128 / (i + 1) as u128;
        }
        return BigInt::from(acc);
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Convenience wrapper for index arithmetic done in `usize`.
pub fn binom_u(n: usize, k: usize) -> BigInt {
    binom(n as i64, k as i64)
}

/// `(-1)^e` for any integer exponent.
pub fn sign(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// `2^e` for `e >= 0`.
pub fn pow2(e: u32) -> BigInt {
    BigInt::one() << e
}
