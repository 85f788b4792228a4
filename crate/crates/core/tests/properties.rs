use chromatic_core::sequence::{
    count_real_roots_nonpositive, is_log_concave, is_pf_up_to_order, newton_inequalities,
};
use chromatic_core::{BigInt, Engine, FallingFactorialForm, Graph, IntegerPolynomial, TriangleTable};
use proptest::prelude::*;

fn graph() -> impl Strategy<Value = Graph> {
    (0usize..=7).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let m = pairs.len();
        proptest::collection::vec(any::<bool>(), m).prop_map(move |mask| {
            let edges = pairs.iter().zip(&mask).filter(|(_, &keep)| keep).map(|(&e, _)| e);
            Graph::new(n, edges).unwrap()
        })
    })
}

fn poly() -> impl Strategy<Value = IntegerPolynomial> {
    proptest::collection::vec(any::<i64>(), 0..=13)
        .prop_map(|c| IntegerPolynomial::new(c.into_iter().map(BigInt::from).collect()))
}

fn nonneg_seq(max_len: usize) -> impl Strategy<Value = Vec<BigInt>> {
    proptest::collection::vec(0i64..30, 0..=max_len).prop_map(|v| v.into_iter().map(BigInt::from).collect())
}

fn lambda() -> IntegerPolynomial {
    IntegerPolynomial::variable()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn basis_round_trip(p in poly()) {
        let ff = p.to_falling_factorial();
        prop_assert_eq!(ff.to_monomial(), p.clone());
        prop_assert_eq!(FallingFactorialForm::new(ff.coeffs().to_vec()), ff);
    }

    #[test]
    fn falling_factorial_form_evaluates_like_the_polynomial(p in poly(), x in -20i64..20) {
        let ff = p.to_falling_factorial();
        let at_x: BigInt = ff
            .coeffs()
            .iter()
            .enumerate()
            .map(|(k, c)| c * (0..k as i64).map(|i| BigInt::from(x - i)).product::<BigInt>())
            .sum();
        prop_assert_eq!(at_x, p.eval_i64(x));
    }

    #[test]
    fn product_over_disjoint_union(g in graph(), h in graph()) {
        let e = Engine::default();
        let union = e.chromatic_poly(&g.disjoint_union(&h)).unwrap();
        prop_assert_eq!(union, &e.chromatic_poly(&g).unwrap() * &e.chromatic_poly(&h).unwrap());
    }

    #[test]
    fn deletion_contraction_holds_on_every_edge(g in graph()) {
        let e = Engine::default();
        let p = e.chromatic_poly(&g).unwrap();
        for edge in g.edges() {
            let rhs = &e.chromatic_poly(&g.without_edge(edge)).unwrap()
                - &e.chromatic_poly(&g.contract(edge)).unwrap();
            prop_assert_eq!(&p, &rhs);
        }
    }

    #[test]
    fn chromatic_polynomial_shape(g in graph()) {
        let p = Engine::default().chromatic_poly(&g).unwrap();
        let n = g.order();
        prop_assert_eq!(p.degree(), Some(n));
        prop_assert_eq!(p.coeff(n), BigInt::from(1));
        if n > 0 {
            prop_assert_eq!(p.coeff(n - 1), -BigInt::from(g.size()));
            prop_assert_eq!(p.coeff(0), BigInt::from(0));
        }
        let alpha = Engine::default().alpha_coeffs(&g).unwrap();
        prop_assert!(alpha.coeffs().iter().all(|c| *c >= BigInt::from(0)));
    }

    /// One step of each theorem with `s = 1`, on the range where it holds.
    #[test]
    fn single_step_recurrences(h in graph(), n in 1usize..=5) {
        let e = Engine::default();
        let p = |g: &Graph| e.chromatic_poly(&g.disjoint_union(&h)).unwrap();
        prop_assert_eq!(p(&Graph::empty(n)), &lambda() * &p(&Graph::empty(n - 1)));
        let shifted = IntegerPolynomial::shifted_variable(-(n as i64 - 1));
        prop_assert_eq!(p(&Graph::complete(n)), &shifted * &p(&Graph::complete(n - 1)));
        if n >= 2 {
            let minus_one = IntegerPolynomial::shifted_variable(-1);
            prop_assert_eq!(p(&Graph::star(n)), &minus_one * &p(&Graph::star(n - 1)));
        }
    }

    #[test]
    fn pf_orders_are_monotone(seq in nonneg_seq(7), d in 2usize..=4) {
        let higher = is_pf_up_to_order(&seq, d, 2).unwrap().holds;
        let lower = is_pf_up_to_order(&seq, d - 1, 2).unwrap().holds;
        prop_assert!(!higher || lower);
    }

    /// For sequences without zeros, order-2 Toeplitz minors are
    /// nonnegative exactly when the sequence is log-concave.
    #[test]
    fn pf2_is_log_concavity_for_positive_sequences(v in proptest::collection::vec(1i64..30, 0..=8)) {
        let seq: Vec<BigInt> = v.into_iter().map(BigInt::from).collect();
        prop_assert_eq!(
            is_pf_up_to_order(&seq, 2, 2).unwrap().holds,
            is_log_concave(&seq).unwrap().holds
        );
    }

    #[test]
    fn pf_ignores_leading_zeros(seq in nonneg_seq(6), zeros in 0usize..3) {
        let mut shifted = vec![BigInt::from(0); zeros];
        shifted.extend(seq.iter().cloned());
        prop_assert_eq!(
            is_pf_up_to_order(&seq, 3, 2).unwrap().holds,
            is_pf_up_to_order(&shifted, 3, 2).unwrap().holds
        );
    }

    /// A polynomial with only real nonpositive roots has log-concave,
    /// Newton-satisfying coefficients.
    #[test]
    fn real_rooted_products(roots in proptest::collection::vec(0i64..6, 1..=6)) {
        let p = roots
            .iter()
            .fold(IntegerPolynomial::one(), |acc, &a| &acc * &IntegerPolynomial::shifted_variable(a));
        prop_assert!(count_real_roots_nonpositive(&p).unwrap().holds);
        prop_assert!(newton_inequalities(p.coeffs()).unwrap().holds);
        prop_assert!(is_log_concave(p.coeffs()).unwrap().holds);
        prop_assert!(is_pf_up_to_order(p.coeffs(), 4, 2).unwrap().holds);
    }

    #[test]
    fn json_round_trip_is_byte_identical(r in proptest::collection::vec(0usize..4, 1..=3), n in 0usize..12) {
        for family in [
            chromatic_core::Family::MultiR(r.clone()),
            chromatic_core::Family::K(r.clone()),
            chromatic_core::Family::T(r.clone()),
        ] {
            let table = TriangleTable::generate(&family, n).unwrap();
            let json = table.to_json().unwrap();
            let back = TriangleTable::from_json(&json).unwrap();
            prop_assert_eq!(&back, &table);
            prop_assert_eq!(back.to_json().unwrap(), json);
        }
    }
}

#[test]
fn star_step_fails_from_one_vertex() {
    // P(T_1) = λ but (λ-1) P(T_0) = λ-1: the s = 1 step needs n >= 2
    let e = Engine::default();
    let t1 = e.chromatic_poly(&Graph::star(1)).unwrap();
    let t0 = e.chromatic_poly(&Graph::star(0)).unwrap();
    assert_ne!(t1, &IntegerPolynomial::shifted_variable(-1) * &t0);
}

#[test]
fn complex_roots_are_detected() {
    // (λ^2 + 1)(λ + 2)
    let p = IntegerPolynomial::from_i64s(&[2, 1, 2, 1]);
    let v = count_real_roots_nonpositive(&p).unwrap();
    assert!(!v.holds);
    // λ^3 (λ+1)^2: zero roots and repeated roots both count
    let q = IntegerPolynomial::from_i64s(&[0, 0, 0, 1, 2, 1]);
    assert!(count_real_roots_nonpositive(&q).unwrap().holds);
}
