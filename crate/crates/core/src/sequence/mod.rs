//! Exact sequence properties: log-concavity, bounded-order Pólya frequency,
//! q-log-convexity, Newton's inequalities and real-rootedness.
//!
//! Each check returns a [`SequenceVerdict`]; a failing verdict carries a
//! witness that can be re-checked by hand.

mod det;
mod sturm;

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Serialize, Serializer};

pub use det::determinant;

use crate::error::{Error, Result};
use crate::poly::IntegerPolynomial;
use crate::serde_util::decimal;
use crate::stirling::RecurrenceSpec;

pub const DEFAULT_PF_ORDER: usize = 4;
pub const DEFAULT_PF_PAD: usize = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Property {
    LogConcave,
    PfUpToOrder(usize),
    QLogConvex,
    Newton,
    RealRootsNonpositive,
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Property::LogConcave => f.write_str("log_concave"),
            Property::PfUpToOrder(d) => write!(f, "pf_up_to_order({d})"),
            Property::QLogConvex => f.write_str("q_log_convex"),
            Property::Newton => f.write_str("newton"),
            Property::RealRootsNonpositive => f.write_str("real_roots_nonpositive"),
        }
    }
}

impl Serialize for Property {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Why a property fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// `u_{i-1} u_{i+1} = lhs > rhs = u_i^2`.
    Index {
        i: usize,
        #[serde(with = "decimal")]
        lhs: BigInt,
        #[serde(with = "decimal")]
        rhs: BigInt,
    },
    /// Toeplitz minor on the given rows and columns with negative
    /// determinant.
    Minor {
        rows: Vec<usize>,
        cols: Vec<usize>,
        #[serde(with = "decimal")]
        det: BigInt,
    },
    /// Negative coefficient of `q^degree` in the difference at index `n`.
    Coefficient {
        n: usize,
        degree: usize,
        #[serde(with = "decimal")]
        value: BigInt,
    },
    /// `a_k^2 k (m-k) = lhs < rhs = a_{k-1} a_{k+1} (k+1) (m-k+1)`.
    Newton {
        k: usize,
        #[serde(with = "decimal")]
        lhs: BigInt,
        #[serde(with = "decimal")]
        rhs: BigInt,
    },
    /// Only `counted` of `degree` roots are real and nonpositive.
    RootCount { counted: usize, degree: usize },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Index { i, lhs, rhs } => write!(f, "i={i}: {lhs} > {rhs}"),
            Witness::Minor { rows, cols, det } => {
                write!(f, "minor rows {rows:?} cols {cols:?} has determinant {det}")
            }
            Witness::Coefficient { n, degree, value } => {
                write!(f, "n={n}: coefficient of q^{degree} is {value}")
            }
            Witness::Newton { k, lhs, rhs } => write!(f, "k={k}: {lhs} < {rhs}"),
            Witness::RootCount { counted, degree } => {
                write!(f, "{counted} of {degree} roots are real and nonpositive")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SequenceVerdict {
    pub property: Property,
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl SequenceVerdict {
    fn from_witness(property: Property, witness: Option<Witness>) -> Self {
        SequenceVerdict {
            property,
            holds: witness.is_none(),
            witness,
        }
    }
}

fn check_nonnegative(seq: &[BigInt]) -> Result<()> {
    match seq.iter().position(Signed::is_negative) {
        Some(index) => Err(Error::NegativeInput { index }),
        None => Ok(()),
    }
}

/// `u_{i-1} u_{i+1} <= u_i^2` for every interior `i`.
pub fn is_log_concave(seq: &[BigInt]) -> Result<SequenceVerdict> {
    check_nonnegative(seq)?;
    let witness = (1..seq.len().saturating_sub(1)).find_map(|i| {
        let lhs = &seq[i - 1] * &seq[i + 1];
        let rhs = &seq[i] * &seq[i];
        (lhs > rhs).then_some(Witness::Index { i, lhs, rhs })
    });
    Ok(SequenceVerdict::from_witness(Property::LogConcave, witness))
}

/// `A[i][j] = u_{i-j}` truncated to `size x size`, zero outside `0..len`.
pub fn toeplitz(seq: &[BigInt], size: usize) -> Vec<Vec<BigInt>> {
    (0..size)
        .map(|i| {
            (0..size)
                .map(|j| {
                    i.checked_sub(j)
                        .and_then(|d| seq.get(d).cloned())
                        .unwrap_or_default()
                })
                .collect()
        })
        .collect()
}

/// Determinant of the minor of `a` on `rows` x `cols`.
pub fn minor(a: &[Vec<BigInt>], rows: &[usize], cols: &[usize]) -> BigInt {
    let sub: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|&i| cols.iter().map(|&j| a[i][j].clone()).collect())
        .collect();
    determinant(&sub)
}

fn combinations(n: usize, m: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, m: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for x in start..n {
            if n - x < m - cur.len() {
                break;
            }
            cur.push(x);
            rec(x + 1, n, m, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, m, &mut Vec::new(), &mut out);
    out
}

/// Every square minor of order at most `d` of the `(len + pad)`-square
/// Toeplitz truncation is nonnegative.
///
/// Minors are scanned by order, then row set, then column set, each in
/// lexicographic order; the witness is the first negative one.
pub fn is_pf_up_to_order(seq: &[BigInt], d: usize, pad: usize) -> Result<SequenceVerdict> {
    if d == 0 {
        return Err(Error::invalid("PF order must be at least 1"));
    }
    let size = seq.len() + pad;
    let a = toeplitz(seq, size);
    let mut witness = None;
    for m in 1..=d.min(size) {
        let combos = combinations(size, m);
        witness = combos.par_iter().find_map_first(|rows| {
            combos.iter().find_map(|cols| {
                let det = minor(&a, rows, cols);
                det.is_negative().then(|| Witness::Minor {
                    rows: rows.clone(),
                    cols: cols.clone(),
                    det,
                })
            })
        });
        if witness.is_some() {
            break;
        }
    }
    Ok(SequenceVerdict::from_witness(Property::PfUpToOrder(d), witness))
}

/// Which difference of a polynomial sequence must have nonnegative
/// coefficients.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum QlcDirection {
    /// `P_{n-1} P_{n+1} - P_n^2`.
    #[default]
    Standard,
    /// `P_n^2 - P_{n-1} P_{n+1}`.
    Reversed,
}

pub fn is_q_log_convex(polys: &[IntegerPolynomial], direction: QlcDirection) -> Result<SequenceVerdict> {
    if polys.len() < 3 {
        return Err(Error::invalid("q-log-convexity needs at least three polynomials"));
    }
    let witness = (1..polys.len() - 1).find_map(|n| {
        let outer = &polys[n - 1] * &polys[n + 1];
        let inner = &polys[n] * &polys[n];
        let diff = match direction {
            QlcDirection::Standard => &outer - &inner,
            QlcDirection::Reversed => &inner - &outer,
        };
        diff.coeffs()
            .iter()
            .position(Signed::is_negative)
            .map(|degree| Witness::Coefficient {
                n,
                degree,
                value: diff.coeff(degree),
            })
    });
    Ok(SequenceVerdict::from_witness(Property::QLogConvex, witness))
}

/// Newton's inequalities for `Σ a_k x^k` of formal degree `m = len - 1`:
/// `a_k^2 >= a_{k-1} a_{k+1} (1 + 1/k)(1 + 1/(m-k))`, checked cleared of
/// denominators.
pub fn newton_inequalities(seq: &[BigInt]) -> Result<SequenceVerdict> {
    check_nonnegative(seq)?;
    let m = seq.len().saturating_sub(1);
    let witness = (1..m).find_map(|k| {
        let lhs = &seq[k] * &seq[k] * (k * (m - k));
        let rhs = &seq[k - 1] * &seq[k + 1] * ((k + 1) * (m - k + 1));
        (lhs < rhs).then_some(Witness::Newton { k, lhs, rhs })
    });
    Ok(SequenceVerdict::from_witness(Property::Newton, witness))
}

/// Counts roots in `(-∞, 0]` with multiplicity; holds when that count equals
/// the degree.
///
/// The root at zero is factored out first. Negative roots of the rest `q`
/// are counted along `q, gcd(q, q'), gcd(gcd(q, q'), ...)`: a root of
/// multiplicity `μ` is a simple-or-higher root of the first `μ` members.
pub fn count_real_roots_nonpositive(p: &IntegerPolynomial) -> Result<SequenceVerdict> {
    let Some(degree) = p.degree() else {
        return Err(Error::invalid("the zero polynomial has no root count"));
    };
    let zeros = p.zero_root_multiplicity();
    let rest = IntegerPolynomial::new(p.coeffs()[zeros..].to_vec());
    let mut g = rest.to_rational();
    let mut counted = zeros;
    while g.degree().is_some_and(|d| d > 0) {
        counted += sturm::distinct_negative_roots(&g);
        g = g.gcd(&g.derivative());
    }
    let witness = (counted != degree).then_some(Witness::RootCount { counted, degree });
    Ok(SequenceVerdict::from_witness(Property::RealRootsNonpositive, witness))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Condition {
    pub text: String,
    pub holds: bool,
}

/// The sufficient conditions for row log-concavity, the Pólya-frequency
/// property and q-log-convexity of a triangular recurrence. A failing
/// condition does not refute the property.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionCertificate {
    pub lc_conditions: Vec<Condition>,
    pub pf_conditions: Vec<Condition>,
    pub qlc_conditions: Vec<Condition>,
}

impl ConditionCertificate {
    pub fn certifies_lc(&self) -> bool {
        self.lc_conditions.iter().all(|c| c.holds)
    }

    pub fn certifies_pf(&self) -> bool {
        self.certifies_lc() && self.pf_conditions.iter().all(|c| c.holds)
    }

    pub fn certifies_qlc(&self) -> bool {
        self.certifies_pf() && self.qlc_conditions.iter().all(|c| c.holds)
    }
}

/// Evaluates the conditions for `spec`; the `n,k`-dependent one is checked
/// on `0 < k <= n <= n_max`.
pub fn certify_recurrence_conditions(spec: &RecurrenceSpec, n_max: usize) -> ConditionCertificate {
    let zero = BigRational::zero();
    let RecurrenceSpec {
        a1, a2, a3, b1, b2, b3, seed,
    } = spec;
    let cond = |text: &str, holds: bool| Condition {
        text: text.to_string(),
        holds,
    };
    let lc_conditions = vec![
        cond("T(0,0) > 0", seed > &zero),
        cond("a1 >= 0", a1 >= &zero),
        cond("a1 + a2 >= 0", a1 + a2 >= zero),
        cond("a1 + a3 >= 0", a1 + a3 >= zero),
        cond("b1 >= 0", b1 >= &zero),
        cond("b1 + b2 >= 0", b1 + b2 >= zero),
        cond("b1 + b2 + b3 >= 0", b1 + b2 + b3 >= zero),
    ];
    let pf_conditions = vec![
        cond("a2 b1 >= a1 b2", a2 * b1 >= a1 * b2),
        cond("a2 (b1 + b2 + b3) >= (a1 + a3) b2", a2 * (b1 + b2 + b3) >= (a1 + a3) * b2),
    ];
    let slope = a2 * b1 - a1 * b2;
    let constant = a2 * b3 - a3 * b2;
    let qlc = (1..=n_max).all(|n| {
        (1..=n).all(|k| {
            let n = BigRational::from_integer(n.into());
            let k = BigRational::from_integer(k.into());
            &slope * n + a2 * b2 * k + &constant >= zero
        })
    });
    let qlc_conditions = vec![cond(
        &format!("(a2 b1 - a1 b2) n + a2 b2 k + a2 b3 - a3 b2 >= 0 for 0 < k <= n <= {n_max}"),
        qlc,
    )];
    ConditionCertificate {
        lc_conditions,
        pf_conditions,
        qlc_conditions,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn p(c: &[i64]) -> IntegerPolynomial {
        IntegerPolynomial::from_i64s(c)
    }

    #[test]
    fn log_concave_examples() {
        assert!(is_log_concave(&seq(&[1, 3, 3, 1])).unwrap().holds);
        let v = is_log_concave(&seq(&[1, 1, 2])).unwrap();
        assert!(!v.holds);
        assert!(matches!(v.witness, Some(Witness::Index { i: 1, .. })));
        assert!(is_log_concave(&seq(&[1, 15, 25, 10, 1])).unwrap().holds);
        assert!(is_log_concave(&seq(&[])).unwrap().holds);
        // an internal zero only fails when its neighbours are both positive
        assert!(!is_log_concave(&seq(&[1, 0, 1])).unwrap().holds);
        assert!(is_log_concave(&seq(&[0, 0, 1])).unwrap().holds);
        assert!(matches!(
            is_log_concave(&seq(&[1, -1])),
            Err(Error::NegativeInput { index: 1 })
        ));
    }

    #[test]
    fn pf_examples() {
        assert!(is_pf_up_to_order(&seq(&[1, 2, 1]), 3, 2).unwrap().holds);
        let v = is_pf_up_to_order(&seq(&[1, 0, 1]), 4, 2).unwrap();
        assert!(!v.holds);
        let Some(Witness::Minor { rows, cols, det }) = v.witness else {
            panic!("expected a minor witness");
        };
        assert_eq!(rows.len(), 2);
        let a = toeplitz(&seq(&[1, 0, 1]), 5);
        assert_eq!(minor(&a, &rows, &cols), det);
        assert!(is_pf_up_to_order(&seq(&[1, 15, 25, 10, 1]), 4, 2).unwrap().holds);
        assert!(is_pf_up_to_order(&seq(&[1]), 0, 2).is_err());
    }

    #[test]
    fn qlc_examples() {
        let polys = [p(&[1]), p(&[1, 1]), p(&[1, 3, 1])];
        assert!(is_q_log_convex(&polys, QlcDirection::Standard).unwrap().holds);
        assert!(!is_q_log_convex(&polys, QlcDirection::Reversed).unwrap().holds);
        let v = is_q_log_convex(&[p(&[1]), p(&[0, 1]), p(&[1])], QlcDirection::Standard).unwrap();
        assert_eq!(
            v.witness,
            Some(Witness::Coefficient {
                n: 1,
                degree: 2,
                value: BigInt::from(-1)
            })
        );
        let c = [p(&[4]), p(&[4]), p(&[4])];
        assert!(is_q_log_convex(&c, QlcDirection::Standard).unwrap().holds);
        assert!(is_q_log_convex(&c[..2], QlcDirection::Standard).is_err());
    }

    #[test]
    fn newton_examples() {
        assert!(newton_inequalities(&seq(&[1, 4, 6, 4, 1])).unwrap().holds);
        assert!(!newton_inequalities(&seq(&[1, 1, 1])).unwrap().holds);
        assert!(newton_inequalities(&seq(&[0, 1, 3, 1])).unwrap().holds);
    }

    #[test]
    fn root_examples() {
        assert!(count_real_roots_nonpositive(&p(&[1, 3, 1])).unwrap().holds);
        let v = count_real_roots_nonpositive(&p(&[1, 0, 1])).unwrap();
        assert_eq!(v.witness, Some(Witness::RootCount { counted: 0, degree: 2 }));
        // λ^2 (λ+1)^3
        assert!(count_real_roots_nonpositive(&p(&[0, 0, 1, 3, 3, 1])).unwrap().holds);
        // (λ-1)(λ+1)
        assert!(!count_real_roots_nonpositive(&p(&[-1, 0, 1])).unwrap().holds);
        assert!(count_real_roots_nonpositive(&p(&[7])).unwrap().holds);
        assert!(count_real_roots_nonpositive(&IntegerPolynomial::zero()).is_err());
    }

    #[test]
    fn certificates() {
        let u = certify_recurrence_conditions(&RecurrenceSpec::u(2), 10);
        assert!(u.certifies_qlc());
        let v = certify_recurrence_conditions(&RecurrenceSpec::v(1), 10);
        assert!(v.certifies_qlc());
        let w = certify_recurrence_conditions(&RecurrenceSpec::w(2), 10);
        assert!(!w.certifies_lc());
        assert!(!w.lc_conditions[1].holds);
    }

    #[test]
    fn verdict_json() {
        let v = is_log_concave(&seq(&[1, 1, 2])).unwrap();
        let json = serde_json::to_string(&v).unwrap();
        assert_eq!(
            json,
            r#"{"property":"log_concave","holds":false,"witness":{"kind":"index","i":1,"lhs":"2","rhs":"1"}}"#
        );
    }
}
