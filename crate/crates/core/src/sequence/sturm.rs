//! Sturm sequences over the rationals.

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::poly::RationalPolynomial;

/// Distinct real roots of `p` in `(-∞, 0)`, assuming `p(0) != 0`.
pub fn distinct_negative_roots(p: &RationalPolynomial) -> usize {
    let chain = sturm_chain(p);
    let at_minus_infinity: Vec<i8> = chain
        .iter()
        .map(|q| {
            let lead = q.leading().map_or(0, sign);
            let degree = q.degree().unwrap_or(0);
            if degree % 2 == 1 {
                -lead
            } else {
                lead
            }
        })
        .collect();
    let at_zero: Vec<i8> = chain
        .iter()
        .map(|q| sign(&q.eval(&BigRational::zero())))
        .collect();
    variations(&at_minus_infinity) - variations(&at_zero)
}

fn sturm_chain(p: &RationalPolynomial) -> Vec<RationalPolynomial> {
    let mut chain = vec![p.clone(), p.derivative()];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            return chain;
        }
        let r = chain[n - 2].rem(&chain[n - 1]).neg();
        chain.push(r);
    }
}

fn sign(x: &BigRational) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

fn variations(signs: &[i8]) -> usize {
    let nonzero: Vec<i8> = signs.iter().copied().filter(|&s| s != 0).collect();
    nonzero.windows(2).filter(|w| w[0] != w[1]).count()
}
