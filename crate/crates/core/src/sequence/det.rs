//! Fraction-free (Bareiss) determinants.
//!
//! An `i128` pass with checked arithmetic covers almost every minor met in
//! practice; on overflow the same elimination is redone over `BigInt`.

use num_bigint::BigInt;
use num_traits::Zero;

pub fn determinant(m: &[Vec<BigInt>]) -> BigInt {
    let small: Option<Vec<Vec<i128>>> = m
        .iter()
        .map(|row| row.iter().map(|x| i128::try_from(x).ok()).collect())
        .collect();
    if let Some(mut small) = small {
        if let Some(d) = bareiss_i128(&mut small) {
            return BigInt::from(d);
        }
    }
    bareiss_big(m.to_vec())
}

fn bareiss_i128(a: &mut [Vec<i128>]) -> Option<i128> {
    let n = a.len();
    if n == 0 {
        return Some(1);
    }
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            let Some(swap) = (k + 1..n).find(|&i| a[i][k] != 0) else {
                return Some(0);
            };
            a.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[i][j]
                    .checked_mul(a[k][k])?
                    .checked_sub(a[i][k].checked_mul(a[k][j])?)?;
                a[i][j] = num / prev;
            }
        }
        prev = a[k][k];
    }
    a[n - 1][n - 1].checked_mul(sign)
}

fn bareiss_big(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::from(1);
    }
    let mut negate = false;
    let mut prev = BigInt::from(1);
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, swap);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = num / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    #[test]
    fn small_determinants() {
        assert_eq!(determinant(&m(&[])), BigInt::from(1));
        assert_eq!(determinant(&m(&[&[5]])), BigInt::from(5));
        assert_eq!(determinant(&m(&[&[0, 1], &[1, 0]])), BigInt::from(-1));
        assert_eq!(determinant(&m(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 2]])), BigInt::from(6));
        assert_eq!(determinant(&m(&[&[1, 2], &[2, 4]])), BigInt::from(0));
        assert_eq!(
            determinant(&m(&[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]])),
            BigInt::from(-1)
        );
    }

    #[test]
    fn overflow_falls_back() {
        let big = BigInt::from(i128::MAX / 2);
        let a = vec![vec![big.clone(), BigInt::from(1)], vec![BigInt::from(1), big.clone()]];
        assert_eq!(determinant(&a), &big * &big - 1);
        assert_eq!(bareiss_big(a.clone()), determinant(&a));
    }
}
