//! Closed forms and initial values, independent of the table recurrences.
//!
//! Here `n` is the number of unrestricted elements, so the ground set has
//! `n + |r|` elements.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::chromatic::exact_div_factorial;
use crate::error::Result;
use crate::numbers::{binomial, falling, pow};

use super::{nonzero, r_stirling2};

/// `(1/k!) Σ_{j=0}^{k} (-1)^{k-j} C(k,j) f(j)`.
pub fn finite_difference(k: usize, f: impl Fn(usize) -> BigInt) -> Result<BigInt> {
    let sum = (0..=k).fold(BigInt::zero(), |acc, j| {
        let term = binomial(k, j) * f(j);
        if (k - j) % 2 == 0 {
            acc + term
        } else {
            acc - term
        }
    });
    exact_div_factorial(sum, k)
}

fn big(x: usize) -> BigInt {
    BigInt::from(x)
}

/// `{n+|r| brace k}_r` from `P(G, j) = j^n Π (j)_{ri}`.
pub fn multi_r(n: usize, k: usize, r: &[usize]) -> Result<BigInt> {
    finite_difference(k, |j| {
        r.iter()
            .fold(pow(&big(j), n), |acc, &ri| acc * falling(&big(j), ri))
    })
}

/// `{n+|r| brace k+max(r)}_r` via the shifted evaluation points
/// `(j+rp)^n Π_{i<p} (j+rp)_{ri}`, where `rp = max(r)` is left out of the
/// product once.
pub fn multi_r_shifted(n: usize, k: usize, r: &[usize]) -> Result<BigInt> {
    let mut r = nonzero(r);
    r.sort_unstable();
    let rp = r.pop().unwrap_or(0);
    finite_difference(k, |j| {
        let x = big(j + rp);
        r.iter().fold(pow(&x, n), |acc, &ri| acc * falling(&x, ri))
    })
}

/// `{n+|r| brace k}_{T(r)}` from `j^{n+p} (j-1)^{|r|-p}`, all `ri >= 1`.
pub fn t_family(n: usize, k: usize, r: &[usize]) -> Result<BigInt> {
    let r = nonzero(r);
    let p = r.len();
    let size: usize = r.iter().sum();
    finite_difference(k, |j| {
        pow(&big(j), n + p) * pow(&(big(j) - 1), size - p)
    })
}

/// `{n+|r| brace rp}_r = rp^n Π_{i<p} (rp)_{ri}` with `rp = max(r)`.
pub fn multi_r_first(n: usize, r: &[usize]) -> BigInt {
    let mut r = nonzero(r);
    r.sort_unstable();
    let rp = r.pop().unwrap_or(0);
    let x = big(rp);
    r.iter().fold(pow(&x, n), |acc, &ri| acc * falling(&x, ri))
}

/// `{n+|r| brace rp+1}_r = (rp+1)^n Π (rp+1)_{ri} - rp^n Π (rp)_{ri}`.
pub fn multi_r_second(n: usize, r: &[usize]) -> BigInt {
    let mut r = nonzero(r);
    r.sort_unstable();
    let rp = r.pop().unwrap_or(0);
    let x = big(rp + 1);
    let upper = r.iter().fold(pow(&x, n), |acc, &ri| acc * falling(&x, ri));
    upper - multi_r_first(n, &[r.as_slice(), &[rp]].concat())
}

/// `{|r| brace p+1}_{K(r)} = Σ 2^{rj-1} - p`.
pub fn k_second_base(r: &[usize]) -> BigInt {
    let r = nonzero(r);
    let sum: BigInt = r.iter().map(|&ri| pow(&big(2), ri - 1)).sum();
    sum - big(r.len())
}

/// `{N brace p}_{K(r)} = {N-|r|+p brace p}_p` for `N >= |r|`.
pub fn k_first(total: usize, r: &[usize]) -> BigInt {
    let r = nonzero(r);
    let (p, size) = (r.len(), r.iter().sum::<usize>());
    r_stirling2(total - size + p, p, p)
}

/// `{N brace p+1}_{K(r)} = {N-|r|+p brace p+1}_p
///   + {N-|r|+p+1 brace p+1}_{p+1} (Σ 2^{rj-1} - p)`.
pub fn k_second(total: usize, r: &[usize]) -> BigInt {
    let r = nonzero(r);
    let (p, size) = (r.len(), r.iter().sum::<usize>());
    let m = total - size + p;
    r_stirling2(m, p + 1, p) + r_stirling2(m + 1, p + 1, p + 1) * k_second_base(&r)
}

/// `{n+|r| brace 2}_{T(r)} = 2^{n+p-1}` when some `ri >= 2`.
pub fn t_second(n: usize, r: &[usize]) -> BigInt {
    let p = nonzero(r).len();
    pow(&big(2), n + p - 1)
}

/// `{n+|r| brace 3}_{T(r)} = 3^{n+p-1} 2^{|r|-p-1} - 2^{n+p-1}` when some
/// `ri >= 2`.
pub fn t_third(n: usize, r: &[usize]) -> BigInt {
    let r = nonzero(r);
    let (p, size) = (r.len(), r.iter().sum::<usize>());
    pow(&big(3), n + p - 1) * pow(&big(2), size - p - 1) - pow(&big(2), n + p - 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(multi_r(1, 3, &[2, 2]).unwrap(), BigInt::from(14));
        assert_eq!(multi_r_first(2, &[2, 3]), BigInt::from(54));
        assert_eq!(multi_r_shifted(2, 0, &[3, 2]).unwrap(), BigInt::from(54));
        assert_eq!(k_second_base(&[2, 3]), BigInt::from(4));
        assert_eq!(t_second(1, &[2, 2]), BigInt::from(4));
        assert_eq!(t_third(1, &[2, 2]), BigInt::from(14));
        assert_eq!(t_family(1, 3, &[2, 2]).unwrap(), BigInt::from(14));
    }

    #[test]
    fn classical_from_finite_difference() {
        // {4 brace 2} = 7
        assert_eq!(finite_difference(2, |j| pow(&big(j), 4)).unwrap(), BigInt::from(7));
    }
}
