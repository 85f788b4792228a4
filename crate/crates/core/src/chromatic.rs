//! Chromatic polynomials by deletion–contraction.
//!
//! The recursion factors into connected components at every level and
//! closes edgeless, complete and tree components directly:
//! `P(O_n) = λ^n`, `P(K_n) = (λ)_n`, `P(T_n) = λ(λ-1)^{n-1}`. Otherwise the
//! first edge `e` in sorted order gives `P(G) = P(G - e) - P(G / e)`.
//!
//! Results for already-seen labeled graphs are memoised for the duration of
//! one top-level call; no isomorphism testing is done.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::numbers::{binomial, factorial};
use crate::poly::{falling_factorial, FallingFactorialForm, IntegerPolynomial};

pub const DEFAULT_VERTEX_CAP: usize = 15;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChromaticResult {
    pub poly: IntegerPolynomial,
    pub alpha: FallingFactorialForm,
    pub chromatic_number: usize,
}

/// Chromatic-polynomial engine with a vertex cap.
#[derive(Clone, Copy, Debug)]
pub struct Engine {
    pub vertex_cap: usize,
}

impl Default for Engine {
    fn default() -> Self {
        Engine {
            vertex_cap: DEFAULT_VERTEX_CAP,
        }
    }
}

impl Engine {
    pub fn with_cap(vertex_cap: usize) -> Self {
        Engine { vertex_cap }
    }

    fn check(&self, g: &Graph) -> Result<()> {
        if g.order() > self.vertex_cap {
            return Err(Error::CapExceeded {
                what: "vertex count",
                value: g.order(),
                cap: self.vertex_cap,
            });
        }
        Ok(())
    }

    pub fn chromatic_poly(&self, g: &Graph) -> Result<IntegerPolynomial> {
        self.check(g)?;
        let mut memo = HashMap::new();
        Ok(poly_rec(g, &mut memo))
    }

    /// `α_k(G)`: coefficients of `P(G, λ)` in the falling-factorial basis.
    pub fn alpha_coeffs(&self, g: &Graph) -> Result<FallingFactorialForm> {
        Ok(self.chromatic_poly(g)?.to_falling_factorial())
    }

    pub fn analyze(&self, g: &Graph) -> Result<ChromaticResult> {
        let poly = self.chromatic_poly(g)?;
        let alpha = poly.to_falling_factorial();
        let chromatic_number = first_positive(&alpha);
        Ok(ChromaticResult {
            poly,
            alpha,
            chromatic_number,
        })
    }

    pub fn chromatic_number(&self, g: &Graph) -> Result<usize> {
        Ok(self.analyze(g)?.chromatic_number)
    }

    /// `α_k(G) = (1/k!) Σ_j (-1)^{k-j} C(k,j) P(G, j)`, evaluated from the
    /// monomial form so it never touches the basis conversion.
    pub fn alpha_via_finite_difference(&self, g: &Graph, k: usize) -> Result<BigInt> {
        if k > g.order() {
            return Err(Error::invalid(format!(
                "index {k} exceeds the order {} of the graph",
                g.order()
            )));
        }
        let p = self.chromatic_poly(g)?;
        let sum = (0..=k).fold(BigInt::zero(), |acc, j| {
            let term = binomial(k, j) * p.eval_i64(j as i64);
            if (k - j) % 2 == 0 {
                acc + term
            } else {
                acc - term
            }
        });
        exact_div_factorial(sum, k)
    }
}

pub(crate) fn exact_div_factorial(sum: BigInt, k: usize) -> Result<BigInt> {
    let (q, r) = sum.div_rem(&factorial(k));
    if !r.is_zero() {
        return Err(Error::NonDivisible {
            sum: sum.to_string(),
            k,
        });
    }
    Ok(q)
}

/// Smallest `k` with `alpha_k > 0`; 0 for the empty-vertex graph.
fn first_positive(alpha: &FallingFactorialForm) -> usize {
    alpha
        .coeffs()
        .iter()
        .position(|c| c.is_positive())
        .unwrap_or(0)
}

fn poly_rec(g: &Graph, memo: &mut HashMap<Graph, IntegerPolynomial>) -> IntegerPolynomial {
    if let Some(p) = memo.get(g) {
        return p.clone();
    }
    let comps = g.connected_components();
    let result = if comps.len() > 1 {
        comps
            .iter()
            .fold(IntegerPolynomial::one(), |acc, c| &acc * &connected_poly(c, memo))
    } else {
        connected_poly(g, memo)
    };
    memo.insert(g.clone(), result.clone());
    result
}

fn connected_poly(g: &Graph, memo: &mut HashMap<Graph, IntegerPolynomial>) -> IntegerPolynomial {
    let (n, m) = (g.order(), g.size());
    if m == 0 {
        return IntegerPolynomial::monomial(n);
    }
    if g.is_complete() {
        return falling_factorial(n);
    }
    if m + 1 == n {
        // connected with n-1 edges: a tree
        return IntegerPolynomial::shifted_variable(-1)
            .pow(n - 1)
            .shift_up(1);
    }
    let e = g.edges().next().expect("graph has an edge");
    let deleted = poly_rec(&g.without_edge(e), memo);
    let contracted = poly_rec(&g.contract(e), memo);
    &deleted - &contracted
}

pub fn chromatic_poly(g: &Graph) -> Result<IntegerPolynomial> {
    Engine::default().chromatic_poly(g)
}

pub fn alpha_coeffs(g: &Graph) -> Result<FallingFactorialForm> {
    Engine::default().alpha_coeffs(g)
}

pub fn alpha_via_finite_difference(g: &Graph, k: usize) -> Result<BigInt> {
    Engine::default().alpha_via_finite_difference(g, k)
}

pub fn chromatic_number(g: &Graph) -> Result<usize> {
    Engine::default().chromatic_number(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntegerPolynomial {
        IntegerPolynomial::from_i64s(c)
    }

    fn g(s: &str) -> Graph {
        s.parse().unwrap()
    }

    #[test]
    fn closed_form_families() {
        assert_eq!(chromatic_poly(&g("K(3)")).unwrap(), falling_factorial(3));
        assert_eq!(chromatic_poly(&g("O(4)")).unwrap(), IntegerPolynomial::monomial(4));
        assert_eq!(chromatic_poly(&g("T(4)")).unwrap(), p(&[0, -1, 3, -3, 1]));
        assert_eq!(chromatic_poly(&Graph::empty(0)).unwrap(), IntegerPolynomial::one());
    }

    #[test]
    fn four_cycle() {
        // frozen from a brute-force coloring count at λ = 0..4 (0, 0, 2, 18, 84)
        let c4 = g("E(4;0-1,1-2,2-3,3-0)");
        let poly = chromatic_poly(&c4).unwrap();
        assert_eq!(poly, p(&[0, -3, 6, -4, 1]));
        let values: Vec<_> = (0..5).map(|x| poly.eval_i64(x)).collect();
        assert_eq!(values, [0, 0, 2, 18, 84].map(BigInt::from));
    }

    #[test]
    fn alpha_examples() {
        assert_eq!(alpha_coeffs(&g("O(3)")).unwrap(), FallingFactorialForm::from_i64s(&[0, 1, 3, 1]));
        assert_eq!(
            alpha_coeffs(&g("K(2)+O(2)")).unwrap(),
            FallingFactorialForm::from_i64s(&[0, 0, 4, 5, 1])
        );
        assert_eq!(alpha_coeffs(&g("K(3)")).unwrap(), FallingFactorialForm::from_i64s(&[0, 0, 0, 1]));
    }

    #[test]
    fn finite_difference_examples() {
        assert_eq!(alpha_via_finite_difference(&g("O(3)"), 2).unwrap(), BigInt::from(3));
        assert_eq!(alpha_via_finite_difference(&g("K(3)"), 3).unwrap(), BigInt::from(1));
        assert_eq!(alpha_via_finite_difference(&g("K(2)+O(2)"), 3).unwrap(), BigInt::from(5));
        assert!(alpha_via_finite_difference(&g("K(2)"), 3).is_err());
        assert!(exact_div_factorial(BigInt::from(3), 2).is_err());
    }

    #[test]
    fn chromatic_numbers() {
        assert_eq!(chromatic_number(&g("K(4)")).unwrap(), 4);
        assert_eq!(chromatic_number(&g("O(5)")).unwrap(), 1);
        assert_eq!(chromatic_number(&g("KM(2,3)")).unwrap(), 2);
        assert_eq!(chromatic_number(&Graph::empty(0)).unwrap(), 0);
        assert_eq!(chromatic_number(&g("E(5;0-1,1-2,2-3,3-4,4-0)")).unwrap(), 3);
    }

    #[test]
    fn cap_is_enforced() {
        let err = chromatic_poly(&Graph::empty(16)).unwrap_err();
        assert!(matches!(err, Error::CapExceeded { value: 16, cap: 15, .. }));
        assert!(Engine::with_cap(20).chromatic_poly(&Graph::empty(16)).is_ok());
    }

    #[test]
    fn petersen_graph() {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (i + 5, (i + 2) % 5 + 5));
        let pg = Graph::new(10, outer.chain(spokes).chain(inner)).unwrap();
        let poly = chromatic_poly(&pg).unwrap();
        // number of proper 3-colorings of the Petersen graph
        assert_eq!(poly.eval_i64(3), BigInt::from(120));
        assert_eq!(chromatic_number(&pg).unwrap(), 3);
    }
}
