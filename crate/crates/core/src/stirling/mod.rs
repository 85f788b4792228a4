//! Restricted Stirling numbers of the second kind.
//!
//! Every table is indexed by the size `N` of the ground set, with `k` from
//! `0` to `N`. The graph-backed families start from the falling-factorial
//! coefficients of their defining graph at `N = |r|` and then grow by
//! `{N, k} = {N-1, k-1} + k {N-1, k}`:
//!
//! | family | base graph |
//! |---|---|
//! | multi-`r` | `K_{r1} ∪ ... ∪ K_{rp}` |
//! | `K(r)` | `K_{r1,...,rp}` |
//! | `T(r)` | star forest `T_{r1} ∪ ... ∪ T_{rp}` |
//!
//! Zero entries of `r` describe empty blocks and are dropped.

pub mod cache;
pub mod closed;
pub mod identities;

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::chromatic::Engine;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::IntegerPolynomial;
use crate::serde_util::{decimal_rows, rational};

/// A triangular family of numbers.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Classical,
    R(usize),
    MultiR(Vec<usize>),
    K(Vec<usize>),
    T(Vec<usize>),
    Custom(RecurrenceSpec),
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Classical => "classical",
            Family::R(_) => "r",
            Family::MultiR(_) => "multi",
            Family::K(_) => "k",
            Family::T(_) => "t",
            Family::Custom(_) => "custom",
        }
    }

    pub fn r_vec(&self) -> Vec<usize> {
        match self {
            Family::Classical | Family::Custom(_) => Vec::new(),
            Family::R(r) => vec![*r],
            Family::MultiR(r) | Family::K(r) | Family::T(r) => r.clone(),
        }
    }

    /// Rebuilds a family from its serialized name and parameters.
    pub fn from_parts(name: &str, r_vec: &[usize], recurrence: Option<RecurrenceSpec>) -> Result<Self> {
        let family = match name {
            "classical" => Family::Classical,
            "r" => match r_vec {
                [r] => Family::R(*r),
                _ => return Err(Error::invalid("family `r` takes exactly one parameter")),
            },
            "multi" => Family::MultiR(r_vec.to_vec()),
            "k" => Family::K(r_vec.to_vec()),
            "t" => Family::T(r_vec.to_vec()),
            "custom" => Family::Custom(
                recurrence.ok_or_else(|| Error::invalid("custom family needs a recurrence"))?,
            ),
            other => return Err(Error::invalid(format!("unknown family `{other}`"))),
        };
        Ok(family)
    }

    /// First row with a nonzero entry, and that row.
    fn base_row(&self, engine: &Engine) -> Result<(usize, Vec<BigInt>)> {
        let from_graph = |g: Graph| -> Result<(usize, Vec<BigInt>)> {
            let alpha = engine.alpha_coeffs(&g)?;
            let mut row = alpha.coeffs().to_vec();
            row.resize(g.order() + 1, BigInt::zero());
            Ok((g.order(), row))
        };
        match self {
            Family::Classical => Ok((0, vec![BigInt::from(1)])),
            Family::R(r) => {
                let mut row = vec![BigInt::zero(); r + 1];
                row[*r] = BigInt::from(1);
                Ok((*r, row))
            }
            Family::MultiR(r) => {
                let parts: Vec<Graph> = nonzero(r).into_iter().map(Graph::complete).collect();
                from_graph(Graph::union_all(&parts))
            }
            Family::K(r) => {
                let r = nonzero(r);
                if r.is_empty() {
                    return Family::Classical.base_row(engine);
                }
                from_graph(Graph::complete_multipartite(&r)?)
            }
            Family::T(r) => {
                let parts: Vec<Graph> = nonzero(r).into_iter().map(Graph::star).collect();
                from_graph(Graph::union_all(&parts))
            }
            Family::Custom(_) => unreachable!("custom triangles are not graph-backed"),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r: Vec<_> = self.r_vec().iter().map(|x| x.to_string()).collect();
        if r.is_empty() {
            write!(f, "{}", self.name())
        } else {
            write!(f, "{}({})", self.name(), r.join(","))
        }
    }
}

pub(crate) fn nonzero(r: &[usize]) -> Vec<usize> {
    r.iter().copied().filter(|&x| x > 0).collect()
}

/// `T(n,k) = (a1 n + a2 k + a3) T(n-1,k) + (b1 n + b2 k + b3) T(n-1,k-1)`
/// with `T(0,0) = seed` and `T(n,k) = 0` unless `0 <= k <= n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RecurrenceSpec {
    #[serde(with = "rational")]
    pub a1: BigRational,
    #[serde(with = "rational")]
    pub a2: BigRational,
    #[serde(with = "rational")]
    pub a3: BigRational,
    #[serde(with = "rational")]
    pub b1: BigRational,
    #[serde(with = "rational")]
    pub b2: BigRational,
    #[serde(with = "rational")]
    pub b3: BigRational,
    #[serde(with = "rational")]
    pub seed: BigRational,
}

impl RecurrenceSpec {
    pub fn from_integers(a: [i64; 3], b: [i64; 3]) -> Self {
        let q = |x: i64| BigRational::from_integer(BigInt::from(x));
        RecurrenceSpec {
            a1: q(a[0]),
            a2: q(a[1]),
            a3: q(a[2]),
            b1: q(b[0]),
            b2: q(b[1]),
            b3: q(b[2]),
            seed: q(1),
        }
    }

    /// `U(n,k) = α_{k+h}(O_n ∪ H)` for a graph `H` of order `h`.
    pub fn u(h: i64) -> Self {
        Self::from_integers([0, 1, h], [0, 0, 1])
    }

    /// `V(n,k) = α_{k+h}(T_n ∪ H)`.
    pub fn v(h: i64) -> Self {
        Self::from_integers([0, 1, h - 1], [0, 0, 1])
    }

    /// `W(n,k) = α_{k+h}(K_n ∪ H)`.
    pub fn w(h: i64) -> Self {
        Self::from_integers([-1, 1, h + 1], [0, 0, 1])
    }

    pub fn with_seed(mut self, seed: BigRational) -> Self {
        self.seed = seed;
        self
    }

    fn weights(&self, n: usize, k: usize) -> (BigRational, BigRational) {
        let n = BigRational::from_integer(BigInt::from(n));
        let k = BigRational::from_integer(BigInt::from(k));
        (
            &self.a1 * &n + &self.a2 * &k + &self.a3,
            &self.b1 * &n + &self.b2 * &k + &self.b3,
        )
    }
}

/// Rows `0..=n_max` of a triangular family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangleTable {
    family: Family,
    n_max: usize,
    rows: Vec<Vec<BigInt>>,
}

#[derive(Serialize, Deserialize)]
struct TableRepr {
    family: String,
    r_vec: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    recurrence: Option<RecurrenceSpec>,
    n_max: usize,
    #[serde(with = "decimal_rows")]
    rows: Vec<Vec<BigInt>>,
}

impl Serialize for TriangleTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let recurrence = match &self.family {
            Family::Custom(spec) => Some(spec.clone()),
            _ => None,
        };
        TableRepr {
            family: self.family.name().to_string(),
            r_vec: self.family.r_vec(),
            recurrence,
            n_max: self.n_max,
            rows: self.rows.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for TriangleTable {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = TableRepr::deserialize(d)?;
        let family = Family::from_parts(&repr.family, &repr.r_vec, repr.recurrence)
            .map_err(D::Error::custom)?;
        let table = TriangleTable {
            family,
            n_max: repr.n_max,
            rows: repr.rows,
        };
        table.check_shape().map_err(D::Error::custom)?;
        Ok(table)
    }
}

impl TriangleTable {
    /// Generates rows `0..=n_max` with the default engine.
    pub fn generate(family: &Family, n_max: usize) -> Result<Self> {
        Self::generate_with(family, n_max, &Engine::default())
    }

    pub fn generate_with(family: &Family, n_max: usize, engine: &Engine) -> Result<Self> {
        if let Family::Custom(spec) = family {
            return generate_custom_triangle(spec, n_max);
        }
        let (base_n, base) = family.base_row(engine)?;
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n_max + 1);
        for n in 0..=n_max {
            let row = if n < base_n {
                vec![BigInt::zero(); n + 1]
            } else if n == base_n {
                base.clone()
            } else {
                let prev = &rows[n - 1];
                (0..=n)
                    .map(|k| {
                        let stay = prev.get(k).map_or_else(BigInt::zero, |x| x * k);
                        let open = if k > 0 { prev[k - 1].clone() } else { BigInt::zero() };
                        stay + open
                    })
                    .collect()
            };
            rows.push(row);
        }
        let table = TriangleTable {
            family: family.clone(),
            n_max,
            rows,
        };
        #[cfg(debug_assertions)]
        if let Family::MultiR(r) = family {
            table.debug_check_multi_r(r);
        }
        Ok(table)
    }

    #[cfg(debug_assertions)]
    fn debug_check_multi_r(&self, r: &[usize]) {
        let size: usize = r.iter().sum();
        for n in size..=self.n_max {
            for k in 0..=n {
                let closed = closed::multi_r(n - size, k, r).expect("exact finite difference");
                debug_assert_eq!(self.rows[n][k], closed, "multi-r recurrence vs closed form at ({n},{k})");
            }
        }
    }

    fn check_shape(&self) -> Result<()> {
        if self.rows.len() != self.n_max + 1 {
            return Err(Error::invalid(format!(
                "table has {} rows, expected {}",
                self.rows.len(),
                self.n_max + 1
            )));
        }
        for (n, row) in self.rows.iter().enumerate() {
            if row.len() != n + 1 {
                return Err(Error::invalid(format!("row {n} has {} entries", row.len())));
            }
        }
        Ok(())
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub fn row(&self, n: usize) -> &[BigInt] {
        &self.rows[n]
    }

    /// Entry `(n, k)`; zero for `k > n`.
    pub fn get(&self, n: usize, k: usize) -> BigInt {
        assert!(n <= self.n_max, "row {n} beyond generated bound {}", self.n_max);
        self.rows[n].get(k).cloned().unwrap_or_default()
    }

    /// Row `n` shifted left by `offset`: entries `(n, k + offset)` for
    /// `k = 0..=n-offset`.
    pub fn shifted_row(&self, n: usize, offset: usize) -> Vec<BigInt> {
        self.rows[n].iter().skip(offset).cloned().collect()
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }
}

/// Fills the custom recurrence row by row in exact rationals.
///
/// The recurrence is applied for every `0 <= k <= n`, `n >= 1`. A negative
/// entry is reported as [`Error::NegativeEntry`]; a non-integral one as
/// [`Error::NonIntegralEntry`].
pub fn generate_custom_triangle(spec: &RecurrenceSpec, n_max: usize) -> Result<TriangleTable> {
    if !spec.seed.is_positive() {
        return Err(Error::invalid("recurrence seed must be positive"));
    }
    let mut prev = vec![spec.seed.clone()];
    let mut rows = Vec::with_capacity(n_max + 1);
    rows.push(vec![to_integer(&spec.seed, 0, 0)?]);
    for n in 1..=n_max {
        let mut row = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let (wa, wb) = spec.weights(n, k);
            let mut value = BigRational::zero();
            if let Some(t) = prev.get(k) {
                value += wa * t;
            }
            if k > 0 {
                value += wb * &prev[k - 1];
            }
            if value.is_negative() {
                return Err(Error::NegativeEntry {
                    n,
                    k,
                    value: value.to_string(),
                });
            }
            row.push(value);
        }
        rows.push(
            row.iter()
                .enumerate()
                .map(|(k, v)| to_integer(v, n, k))
                .collect::<Result<Vec<_>>>()?,
        );
        prev = row;
    }
    Ok(TriangleTable {
        family: Family::Custom(spec.clone()),
        n_max,
        rows,
    })
}

fn to_integer(v: &BigRational, n: usize, k: usize) -> Result<BigInt> {
    if !v.is_integer() {
        return Err(Error::NonIntegralEntry {
            n,
            k,
            value: v.to_string(),
        });
    }
    Ok(v.to_integer())
}

/// Classical Stirling number `{n brace k}`.
pub fn stirling2(n: usize, k: usize) -> BigInt {
    TriangleTable::generate(&Family::Classical, n)
        .expect("classical table is infallible")
        .get(n, k)
}

/// `r`-Stirling number `{n brace k}_r`.
pub fn r_stirling2(n: usize, k: usize, r: usize) -> BigInt {
    TriangleTable::generate(&Family::R(r), n)
        .expect("r table is infallible")
        .get(n, k)
}

/// `{n brace k}_{r1,...,rp}` with `n` the full ground-set size.
pub fn multi_r_stirling(n: usize, k: usize, r: &[usize]) -> Result<BigInt> {
    Ok(TriangleTable::generate(&Family::MultiR(r.to_vec()), n)?.get(n, k))
}

/// `{n brace k}_{K(r1,...,rp)}`.
pub fn k_stirling(n: usize, k: usize, r: &[usize]) -> Result<BigInt> {
    Ok(TriangleTable::generate(&Family::K(r.to_vec()), n)?.get(n, k))
}

/// `{n brace k}_{T(r1,...,rp)}`.
pub fn t_stirling(n: usize, k: usize, r: &[usize]) -> Result<BigInt> {
    Ok(TriangleTable::generate(&Family::T(r.to_vec()), n)?.get(n, k))
}

/// Classical Bell polynomial `B_n(λ) = Σ_k {n brace k} λ^k`.
pub fn bell_polynomial(n: usize) -> IntegerPolynomial {
    let table = TriangleTable::generate(&Family::Classical, n).expect("classical table is infallible");
    IntegerPolynomial::new(table.row(n).to_vec())
}

/// `polys[n] = B(λ; K_{n,r})`, the generating polynomial of row `n + |r|`
/// of the `K(r)` family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BellSequence {
    pub r_vec: Vec<usize>,
    pub polys: Vec<IntegerPolynomial>,
}

/// Starts from `B_{r1} ... B_{rp}` and applies `B ↦ λ (B + B')`.
pub fn bell_sequence(r: &[usize], n_max: usize) -> BellSequence {
    let mut current = r
        .iter()
        .fold(IntegerPolynomial::one(), |acc, &ri| &acc * &bell_polynomial(ri));
    let mut polys = Vec::with_capacity(n_max + 1);
    for _ in 0..n_max {
        let next = (&current + &current.derivative()).shift_up(1);
        polys.push(std::mem::replace(&mut current, next));
    }
    polys.push(current);
    BellSequence {
        r_vec: r.to_vec(),
        polys,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn row(t: &TriangleTable, n: usize) -> Vec<i64> {
        t.row(n).iter().map(|x| i64::try_from(x).unwrap()).collect()
    }

    #[test]
    fn classical_values() {
        assert_eq!(stirling2(4, 4), big(1));
        assert_eq!(stirling2(4, 2), big(7));
        assert_eq!(stirling2(5, 3), big(25));
        assert_eq!(stirling2(0, 0), big(1));
        assert_eq!(stirling2(3, 5), big(0));
    }

    #[test]
    fn r_values() {
        assert_eq!(r_stirling2(3, 3, 3), big(1));
        assert_eq!(r_stirling2(5, 2, 2), big(8));
        assert_eq!(r_stirling2(4, 2, 2), big(4));
        assert_eq!(r_stirling2(2, 2, 3), big(0));
    }

    #[test]
    fn multi_values() {
        assert_eq!(multi_r_stirling(5, 3, &[2, 2]).unwrap(), big(14));
        assert_eq!(multi_r_stirling(4, 2, &[2, 2]).unwrap(), big(2));
        assert_eq!(multi_r_stirling(7, 3, &[2, 3]).unwrap(), big(54));
        assert_eq!(multi_r_stirling(3, 1, &[2, 2]).unwrap(), big(0));
    }

    #[test]
    fn k_values() {
        assert_eq!(k_stirling(5, 2, &[2, 3]).unwrap(), big(1));
        assert_eq!(k_stirling(5, 3, &[2, 3]).unwrap(), big(4));
        assert_eq!(k_stirling(4, 2, &[1, 1]).unwrap(), big(4));
        let t = TriangleTable::generate(&Family::K(vec![2, 3]), 7).unwrap();
        assert_eq!(&row(&t, 5)[..4], &[0, 0, 1, 4]);
    }

    #[test]
    fn k_single_block_is_classical() {
        let k = TriangleTable::generate(&Family::K(vec![3]), 7).unwrap();
        let c = TriangleTable::generate(&Family::Classical, 7).unwrap();
        assert_eq!(k.rows()[3..], c.rows()[3..]);
        assert_eq!(row(&k, 2), [0, 0, 0]);
    }

    #[test]
    fn t_values() {
        assert_eq!(t_stirling(5, 2, &[2, 2]).unwrap(), big(4));
        assert_eq!(t_stirling(5, 3, &[2, 2]).unwrap(), big(14));
        let t = TriangleTable::generate(&Family::T(vec![1, 1, 1]), 7).unwrap();
        let c = TriangleTable::generate(&Family::Classical, 7).unwrap();
        assert_eq!(t.rows()[3..], c.rows()[3..]);
    }

    #[test]
    fn zeros_are_dropped() {
        let a = TriangleTable::generate(&Family::MultiR(vec![0, 2, 0, 3]), 8).unwrap();
        let b = TriangleTable::generate(&Family::MultiR(vec![2, 3]), 8).unwrap();
        assert_eq!(a.rows(), b.rows());
        let e = TriangleTable::generate(&Family::MultiR(vec![]), 6).unwrap();
        let c = TriangleTable::generate(&Family::Classical, 6).unwrap();
        assert_eq!(e.rows(), c.rows());
    }

    #[test]
    fn bell_examples() {
        let b3 = bell_sequence(&[3], 0);
        assert_eq!(b3.polys[0], IntegerPolynomial::from_i64s(&[0, 1, 3, 1]));
        let b1 = bell_sequence(&[1], 5);
        let bells = [1, 2, 5, 15, 52, 203];
        for (n, p) in b1.polys.iter().enumerate() {
            if n > 0 {
                assert_eq!(p.eval_i64(1), big(bells[n]));
            }
        }
        assert_eq!(bell_sequence(&[], 3).polys[3], bell_polynomial(3));
    }

    #[test]
    fn custom_triangles() {
        let u0 = generate_custom_triangle(&RecurrenceSpec::u(0), 6).unwrap();
        let c = TriangleTable::generate(&Family::Classical, 6).unwrap();
        // H with no vertices: U(n,k) = α_k(O_n)
        assert_eq!(u0.rows(), c.rows());
        let u2 = generate_custom_triangle(&RecurrenceSpec::u(2), 3).unwrap();
        assert_eq!(row(&u2, 1), [2, 1]);
        let w = generate_custom_triangle(&RecurrenceSpec::w(1), 3).unwrap();
        assert_eq!(w.get(2, 5), big(0));
        assert!(matches!(
            generate_custom_triangle(&RecurrenceSpec::v(0), 3),
            Err(Error::NegativeEntry { n: 1, k: 0, .. })
        ));
        let half = RecurrenceSpec::from_integers([0, 1, 0], [0, 0, 1])
            .with_seed(BigRational::new(big(1), big(2)));
        assert!(matches!(
            generate_custom_triangle(&half, 2),
            Err(Error::NonIntegralEntry { n: 0, k: 0, .. })
        ));
    }

    #[test]
    fn json_round_trip() {
        for family in [
            Family::Classical,
            Family::R(2),
            Family::MultiR(vec![2, 3]),
            Family::K(vec![1, 2]),
            Family::T(vec![2, 2]),
            Family::Custom(RecurrenceSpec::w(2)),
        ] {
            let t = TriangleTable::generate(&family, 9).unwrap();
            let json = t.to_json().unwrap();
            let back = TriangleTable::from_json(&json).unwrap();
            assert_eq!(back, t);
            assert_eq!(back.to_json().unwrap(), json);
        }
    }

    #[test]
    fn malformed_json_rejected() {
        let bad = r#"{"family":"classical","r_vec":[],"n_max":1,"rows":[["1"]]}"#;
        assert!(TriangleTable::from_json(bad).is_err());
        let bad = r#"{"family":"z","r_vec":[],"n_max":0,"rows":[["1"]]}"#;
        assert!(TriangleTable::from_json(bad).is_err());
        let bad = r#"{"family":"classical","r_vec":[],"n_max":0,"rows":[["x"]]}"#;
        assert!(TriangleTable::from_json(bad).is_err());
    }
}
