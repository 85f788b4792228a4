//! Small exact helpers: factorials, binomials, falling factorials and powers.

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// `C(n, k)` for nonnegative `n`; zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `(x)_m = x (x-1) ... (x-m+1)`, with `(x)_0 = 1`.
pub fn falling(x: &BigInt, m: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..m {
        acc *= x - i;
    }
    acc
}

/// `x^e` with the convention `0^0 = 1`.
pub fn pow(x: &BigInt, e: usize) -> BigInt {
    num_traits::pow(x.clone(), e)
}
