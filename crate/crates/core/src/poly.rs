//! Dense univariate polynomials with exact coefficients.
//!
//! [`IntegerPolynomial`] is the monomial basis, [`FallingFactorialForm`] the
//! basis `{(λ)_k}` with `(λ)_k = λ(λ-1)...(λ-k+1)`. Conversion between the
//! two is done by repeated synthetic division, so it does not depend on any
//! precomputed Stirling table. [`RationalPolynomial`] only exists for
//! Euclidean remainders in Sturm sequences.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::serde_util::decimal_vec;

fn trim<T: Zero>(v: &mut Vec<T>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

/// Integer polynomial in the monomial basis; `coeffs[i]` multiplies `λ^i`.
/// Serializes as an array of decimal strings.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IntegerPolynomial {
    #[serde(with = "decimal_vec")]
    coeffs: Vec<BigInt>,
}

impl IntegerPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        trim(&mut coeffs);
        IntegerPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `λ`.
    pub fn variable() -> Self {
        Self::monomial(1)
    }

    /// `λ^d`.
    pub fn monomial(d: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); d + 1];
        coeffs[d] = BigInt::one();
        IntegerPolynomial { coeffs }
    }

    /// `λ + c`.
    pub fn shifted_variable(c: impl Into<BigInt>) -> Self {
        Self::new(vec![c.into(), BigInt::one()])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `λ^i` (zero past the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_i64(&self, x: i64) -> BigInt {
        self.eval(&BigInt::from(x))
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * i)
                .collect(),
        )
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// `λ^k · self`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntegerPolynomial { coeffs }
    }

    /// Multiplicity of the root `λ = 0` (zero for the zero polynomial).
    pub fn zero_root_multiplicity(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Divides by `λ - a`, returning quotient and remainder.
    pub fn synthetic_division(&self, a: &BigInt) -> (Self, BigInt) {
        let Some(d) = self.degree() else {
            return (Self::zero(), BigInt::zero());
        };
        let mut quotient = vec![BigInt::zero(); d];
        let mut carry = BigInt::zero();
        for i in (0..=d).rev() {
            let value = &self.coeffs[i] + &carry * a;
            if i == 0 {
                return (Self::new(quotient), value);
            }
            quotient[i - 1] = value.clone();
            carry = value;
        }
        unreachable!()
    }

    /// Change of basis to falling factorials.
    ///
    /// Writes `p = a_0 + λ p_1`, `p_1 = a_1 + (λ-1) p_2`, ... so that
    /// `p = Σ a_k (λ)_k`; each `a_k` is the remainder of `p_k` at `λ = k`.
    pub fn to_falling_factorial(&self) -> FallingFactorialForm {
        let mut out = Vec::with_capacity(self.coeffs.len());
        let mut current = self.clone();
        let mut k = 0usize;
        while !current.is_zero() {
            let (q, r) = current.synthetic_division(&BigInt::from(k));
            out.push(r);
            current = q;
            k += 1;
        }
        FallingFactorialForm::new(out)
    }

    pub fn to_rational(&self) -> RationalPolynomial {
        RationalPolynomial::new(
            self.coeffs
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }
}

/// `(λ)_k = λ(λ-1)...(λ-k+1)` in the monomial basis; `(λ)_0 = 1`.
pub fn falling_factorial(k: usize) -> IntegerPolynomial {
    (0..k).fold(IntegerPolynomial::one(), |acc, i| {
        &acc * &IntegerPolynomial::shifted_variable(-(i as i64))
    })
}

/// `(λ + a)_m`, the falling factorial evaluated at a shifted argument.
pub fn shifted_falling_factorial(a: i64, m: usize) -> IntegerPolynomial {
    (0..m).fold(IntegerPolynomial::one(), |acc, i| {
        &acc * &IntegerPolynomial::shifted_variable(a - i as i64)
    })
}

impl<'a> Add<&'a IntegerPolynomial> for &'a IntegerPolynomial {
    type Output = IntegerPolynomial;

    fn add(self, rhs: &IntegerPolynomial) -> IntegerPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntegerPolynomial::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<'a> Sub<&'a IntegerPolynomial> for &'a IntegerPolynomial {
    type Output = IntegerPolynomial;

    fn sub(self, rhs: &IntegerPolynomial) -> IntegerPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntegerPolynomial::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<'a> Mul<&'a IntegerPolynomial> for &'a IntegerPolynomial {
    type Output = IntegerPolynomial;

    fn mul(self, rhs: &IntegerPolynomial) -> IntegerPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntegerPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntegerPolynomial::new(out)
    }
}

impl Neg for &IntegerPolynomial {
    type Output = IntegerPolynomial;

    fn neg(self) -> IntegerPolynomial {
        IntegerPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for IntegerPolynomial {
            type Output = IntegerPolynomial;
            fn $method(self, rhs: IntegerPolynomial) -> IntegerPolynomial {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Writes `c·name` terms joined with ` + ` / ` - `, skipping zeros.
fn render_terms<'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (usize, &'a BigInt)>,
    name: impl Fn(usize) -> Option<String>,
    spaced: bool,
) -> fmt::Result {
    let mut first = true;
    for (i, c) in terms {
        if c.is_zero() {
            continue;
        }
        let sign = if c.is_negative() { "-" } else { "+" };
        if first {
            if c.is_negative() {
                f.write_str("-")?;
            }
        } else if spaced {
            write!(f, " {sign} ")?;
        } else {
            f.write_str(sign)?;
        }
        first = false;
        let mag = c.abs();
        match name(i) {
            None => write!(f, "{mag}")?,
            Some(n) if mag.is_one() => f.write_str(&n)?,
            Some(n) => write!(f, "{mag}{n}")?,
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

/// Renders highest degree first with `l` for the variable, e.g.
/// `l^3 - 3l^2 + 2l`.
impl fmt::Display for IntegerPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        render_terms(
            f,
            self.coeffs.iter().enumerate().rev(),
            |i| match i {
                0 => None,
                1 => Some("l".to_string()),
                _ => Some(format!("l^{i}")),
            },
            true,
        )
    }
}

/// Coefficients in the falling-factorial basis; `coeffs[k]` multiplies
/// `(λ)_k`. Serializes as an array of decimal strings.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FallingFactorialForm {
    #[serde(with = "decimal_vec")]
    coeffs: Vec<BigInt>,
}

impl FallingFactorialForm {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        trim(&mut coeffs);
        FallingFactorialForm { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Largest `k` with a nonzero coefficient.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Back to the monomial basis, Horner style:
    /// `f_0 + λ(f_1 + (λ-1)(f_2 + ...))`.
    pub fn to_monomial(&self) -> IntegerPolynomial {
        let mut acc = IntegerPolynomial::zero();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            acc = &(&acc * &IntegerPolynomial::shifted_variable(-(k as i64)))
                + &IntegerPolynomial::constant(c.clone());
        }
        acc
    }
}

/// Renders lowest index first, e.g. `4ff(2)+5ff(3)+ff(4)`.
impl fmt::Display for FallingFactorialForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        render_terms(
            f,
            self.coeffs.iter().enumerate(),
            |k| Some(format!("ff({k})")),
            false,
        )
    }
}

pub fn to_falling_factorial(p: &IntegerPolynomial) -> FallingFactorialForm {
    p.to_falling_factorial()
}

pub fn from_falling_factorial(f: &FallingFactorialForm) -> IntegerPolynomial {
    f.to_monomial()
}

/// Polynomial over the rationals, used for Euclidean remainders.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RationalPolynomial {
    coeffs: Vec<BigRational>,
}

impl RationalPolynomial {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        trim(&mut coeffs);
        RationalPolynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(|c| -c).collect())
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigRational::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let shift = rem.len() - 1 - dd;
            let factor = rem.last().unwrap() / &lead;
            for (i, c) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] -= &factor * c;
            }
            quot[shift] = factor;
            rem.pop();
            trim(&mut rem);
        }
        (Self::new(quot), Self::new(rem))
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.div_rem(divisor).1
    }

    /// Monic greatest common divisor (zero if both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(l) => {
                let l = l.clone();
                Self::new(self.coeffs.iter().map(|c| c / &l).collect())
            }
        }
    }

    pub fn zero() -> Self {
        Self::default()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntegerPolynomial {
        IntegerPolynomial::from_i64s(c)
    }

    #[test]
    fn ring_operations() {
        // λ² - λ at 3
        assert_eq!(p(&[0, -1, 1]).eval_i64(3), BigInt::from(6));
        assert_eq!(&p(&[0, 1]) * &p(&[-1, 1]), p(&[0, -1, 1]));
        let q = p(&[3, 0, -2]);
        assert_eq!(&q + &IntegerPolynomial::zero(), q);
        assert_eq!(&q - &q, IntegerPolynomial::zero());
        assert_eq!(p(&[1, 2, 0, 0]), p(&[1, 2]));
        assert_eq!(p(&[0, 0]).degree(), None);
    }

    #[test]
    fn falling_factorials() {
        assert_eq!(falling_factorial(0), p(&[1]));
        assert_eq!(falling_factorial(2), p(&[0, -1, 1]));
        assert_eq!(falling_factorial(3), p(&[0, 2, -3, 1]));
        assert_eq!(shifted_falling_factorial(2, 2), p(&[2, 3, 1]));
    }

    #[test]
    fn to_falling_factorial_examples() {
        assert_eq!(p(&[0, 0, 1]).to_falling_factorial(), FallingFactorialForm::from_i64s(&[0, 1, 1]));
        // λ⁴ - λ³ = {4,k} - {3,k} = (0,0,4,5,1)
        assert_eq!(
            p(&[0, 0, 0, -1, 1]).to_falling_factorial(),
            FallingFactorialForm::from_i64s(&[0, 0, 4, 5, 1])
        );
        assert_eq!(
            falling_factorial(3).to_falling_factorial(),
            FallingFactorialForm::from_i64s(&[0, 0, 0, 1])
        );
        assert!(IntegerPolynomial::zero().to_falling_factorial().is_zero());
        assert_eq!(p(&[-7]).to_falling_factorial(), FallingFactorialForm::from_i64s(&[-7]));
    }

    #[test]
    fn from_falling_factorial_examples() {
        assert_eq!(FallingFactorialForm::from_i64s(&[0, 0, 0, 1]).to_monomial(), falling_factorial(3));
        assert!(FallingFactorialForm::default().to_monomial().is_zero());
        assert_eq!(FallingFactorialForm::from_i64s(&[0, 1, 3, 1]).to_monomial(), p(&[0, 0, 0, 1]));
    }

    #[test]
    fn derivatives() {
        assert_eq!(p(&[0, 0, 0, 1]).derivative(), p(&[0, 0, 3]));
        assert!(p(&[5]).derivative().is_zero());
        assert_eq!(p(&[0, 1, 3, 1]).derivative(), p(&[1, 6, 3]));
    }

    #[test]
    fn synthetic_division_matches_evaluation() {
        let q = p(&[5, -3, 0, 2]);
        let (quot, rem) = q.synthetic_division(&BigInt::from(2));
        assert_eq!(rem, q.eval_i64(2));
        assert_eq!(&(&quot * &p(&[-2, 1])) + &IntegerPolynomial::constant(rem), q);
    }

    #[test]
    fn rendering() {
        assert_eq!(p(&[0, 0, 0, -1, 1]).to_string(), "l^4 - l^3");
        assert_eq!(falling_factorial(3).to_string(), "l^3 - 3l^2 + 2l");
        assert_eq!(p(&[-1, 0, -2]).to_string(), "-2l^2 - 1");
        assert_eq!(IntegerPolynomial::zero().to_string(), "0");
        assert_eq!(
            FallingFactorialForm::from_i64s(&[0, 0, 4, 5, 1]).to_string(),
            "4ff(2)+5ff(3)+ff(4)"
        );
        assert_eq!(FallingFactorialForm::from_i64s(&[1, -2]).to_string(), "ff(0)-2ff(1)");
    }

    #[test]
    fn json_is_decimal_strings() {
        let q = p(&[0, -1, 1]);
        let s = serde_json::to_string(&q).unwrap();
        assert_eq!(s, r#"["0","-1","1"]"#);
        let back: IntegerPolynomial = serde_json::from_str(&s).unwrap();
        assert_eq!(back, q);
        assert!(serde_json::from_str::<IntegerPolynomial>(r#"["1.5"]"#).is_err());
    }

    #[test]
    fn rational_gcd() {
        // (λ+1)²(λ+2) and (λ+1)(λ+3)
        let a = (&p(&[1, 1]).pow(2) * &p(&[2, 1])).to_rational();
        let b = (&p(&[1, 1]) * &p(&[3, 1])).to_rational();
        assert_eq!(a.gcd(&b), p(&[1, 1]).to_rational());
        let (q, r) = a.div_rem(&b);
        assert!(r.degree().unwrap_or(0) < 2);
        let _ = q;
    }
}
