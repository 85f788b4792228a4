//! Exhaustive checks of the recurrence and closed-form identities relating
//! chromatic coefficients and the restricted Stirling families.
//!
//! Every check compares two independently computed exact integers. The
//! `a`-suffixed entries are amended forms of entries whose printed form does
//! not hold on part of its stated range; the literal form is kept as well so
//! that its failures stay visible.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::rc::Rc;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Serialize, Serializer};

use crate::chromatic::Engine;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::numbers::{binomial, falling};
use crate::poly::{shifted_falling_factorial, IntegerPolynomial};
use crate::serde_util::decimal;

use super::{bell_sequence, closed, nonzero, Family, TriangleTable};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdentityId {
    I1,
    I2,
    I2a,
    I3,
    I4,
    I5,
    I6,
    I6a,
    I7,
    I8,
    I9,
    I10,
    I11,
    I12,
    I12a,
    I13,
    I14,
}

impl IdentityId {
    /// The fourteen catalog entries followed by the amended forms.
    pub fn all() -> &'static [IdentityId] {
        use IdentityId::*;
        &[I1, I2, I3, I4, I5, I6, I7, I8, I9, I10, I11, I12, I13, I14, I2a, I6a, I12a]
    }

    pub fn catalog() -> &'static [IdentityId] {
        &Self::all()[..14]
    }

    pub fn amended() -> &'static [IdentityId] {
        &Self::all()[14..]
    }

    /// The amended entry replacing `self`, if its literal form is known to fail.
    pub fn amended_form(self) -> Option<IdentityId> {
        use IdentityId::*;
        match self {
            I2 => Some(I2a),
            I6 => Some(I6a),
            I12 => Some(I12a),
            _ => None,
        }
    }

    pub fn description(self) -> &'static str {
        use IdentityId::*;
        match self {
            I1 => "alpha_k(O_n + H) as an r-Stirling sum over alpha_j(O_{n-s} + H), 0 <= s <= n",
            I2 => "alpha_k(T_n + H) from (l-1)^s P(T_{n-s} + H), 0 <= s <= n",
            I2a => "I2 restricted to s < n or s = 0, where P(T_n + H) = (l-1)^s P(T_{n-s} + H) holds",
            I3 => "alpha_k(K_n + H) as a binomial/falling-factorial sum over alpha_j(K_{n-s} + H)",
            I4 => "multi-r: {n,k} = sum_j {s+j,k}_j {n-s,j}, all 0 <= s <= n-|r|",
            I5 => "multi-r: {n,k}_r = {n-1,k-1}_{r-e_i} + (k+1-r_i) {n-1,k}_{r-e_i}",
            I6 => "r-Stirling: {n,k}_r = (r+1) {n-1,k}_r + {n,k}_{r+1}, as printed",
            I6a => "r-Stirling: {n,k}_r = r {n-1,k}_r + {n,k}_{r+1}",
            I7 => "K(r): {n,k} = sum_j {s+j,k}_j {n-s,j}, all 0 <= s <= n-|r|",
            I8 => "(z+rp)_{r1}...(z+rp)_{r(p-1)} (z+rp)^n = sum_k {n+|r|,k+rp}_r (z)_k",
            I9 => "z^{n+p} (z-1)^{|r|-p} = sum_k {n+|r|,k}_T(r) (z)_k and T(r) = T(|r|-p+1)",
            I10 => "multi-r finite-difference closed forms and initial values",
            I11 => "multi-r, K(r) and T(r) tables are invariant under permuting r",
            I12 => "T(r): {N,k}_T(r) = (k-1) {N-1,k}_T(r-e_i) + {N-1,k-1}_T(r-e_i), r_i >= 1",
            I12a => "I12 restricted to r_i >= 2",
            I13 => "B(l; K_{n,r}) = l (B + B') recurrence matches K(r) rows",
            I14 => "T(r) finite-difference closed form and initial values",
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::all()
            .iter()
            .copied()
            .find(|id| id.to_string().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::UnknownIdentity(s.to_string()))
    }
}

impl Serialize for IdentityId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Parameter ranges for [`verify_identity`].
#[derive(Clone, Debug)]
pub struct IdentityParams {
    /// Unrestricted elements added to `|r|` in the family identities.
    pub n_max: usize,
    /// Restriction vectors for the family identities.
    pub r_vecs: Vec<Vec<usize>>,
    /// Largest `r` for the single-parameter identities.
    pub single_r_max: usize,
    /// Largest `n` in the `O_n`, `K_n`, `T_n` theorems.
    pub graph_n_max: usize,
    pub graph_count: usize,
    pub graph_order_max: usize,
    pub seed: u64,
}

impl IdentityParams {
    /// `n <= 8`, every sorted `r` with `p <= 3` and `|r| <= 5`, fifty random
    /// graphs on at most five vertices.
    pub fn desk() -> Self {
        IdentityParams {
            n_max: 8,
            r_vecs: r_vectors(3, 5),
            single_r_max: 4,
            graph_n_max: 5,
            graph_count: 50,
            graph_order_max: 5,
            seed: 1,
        }
    }

    pub fn quick() -> Self {
        IdentityParams {
            n_max: 5,
            r_vecs: r_vectors(3, 4),
            single_r_max: 3,
            graph_n_max: 4,
            graph_count: 10,
            graph_order_max: 4,
            seed: 1,
        }
    }

    pub fn with_r(mut self, r: Vec<usize>) -> Self {
        self.r_vecs = vec![r];
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    /// Random graphs `H`: order uniform in `0..=graph_order_max`, each edge
    /// present with probability 1/2.
    pub fn random_graphs(&self) -> Vec<Graph> {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        (0..self.graph_count)
            .map(|_| {
                let h = rng.gen_range(0..=self.graph_order_max);
                let mut edges = Vec::new();
                for u in 0..h {
                    for v in u + 1..h {
                        if rng.gen_bool(0.5) {
                            edges.push((u, v));
                        }
                    }
                }
                Graph::new(h, edges).expect("generated edges are valid")
            })
            .collect()
    }
}

/// Nondecreasing vectors of positive integers with `1 <= p <= p_max` and
/// sum at most `size_max`.
pub fn r_vectors(p_max: usize, size_max: usize) -> Vec<Vec<usize>> {
    fn rec(p_left: usize, min: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        if p_left == 0 {
            return;
        }
        for x in min..=left {
            cur.push(x);
            rec(p_left - 1, x, left - x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(p_max, 1, size_max, &mut Vec::new(), &mut out);
    out.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct Counterexample {
    pub params: BTreeMap<String, String>,
    #[serde(with = "decimal")]
    pub lhs: BigInt,
    #[serde(with = "decimal")]
    pub rhs: BigInt,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub identity: IdentityId,
    pub checked: usize,
    pub failures_total: usize,
    /// The first few failures in check order.
    pub counterexamples: Vec<Counterexample>,
}

impl VerificationReport {
    pub const MAX_COUNTEREXAMPLES: usize = 5;

    pub fn passed(&self) -> bool {
        self.failures_total == 0
    }

    fn new(identity: IdentityId) -> Self {
        VerificationReport {
            identity,
            checked: 0,
            failures_total: 0,
            counterexamples: Vec::new(),
        }
    }

    fn check<F>(&mut self, lhs: BigInt, rhs: BigInt, params: F)
    where
        F: FnOnce() -> Vec<(&'static str, String)>,
    {
        self.checked += 1;
        if lhs != rhs {
            self.failures_total += 1;
            if self.counterexamples.len() < Self::MAX_COUNTEREXAMPLES {
                let params = params().into_iter().map(|(k, v)| (k.to_string(), v)).collect();
                self.counterexamples.push(Counterexample { params, lhs, rhs });
            }
        }
    }
}

pub fn verify_identity(id: IdentityId, params: &IdentityParams) -> Result<VerificationReport> {
    let mut ctx = Ctx::default();
    let mut rep = VerificationReport::new(id);
    use IdentityId::*;
    match id {
        I1 => theorem_empty(params, &mut ctx, &mut rep)?,
        I2 => theorem_star(params, &mut ctx, &mut rep, false)?,
        I2a => theorem_star(params, &mut ctx, &mut rep, true)?,
        I3 => theorem_complete(params, &mut ctx, &mut rep)?,
        I4 => general_s(params, &mut ctx, &mut rep, Family::MultiR)?,
        I5 => multi_reduction(params, &mut ctx, &mut rep)?,
        I6 => r_shift(params, &mut ctx, &mut rep, 1)?,
        I6a => r_shift(params, &mut ctx, &mut rep, 0)?,
        I7 => general_s(params, &mut ctx, &mut rep, Family::K)?,
        I8 => multi_basis(params, &mut ctx, &mut rep)?,
        I9 => star_basis(params, &mut ctx, &mut rep)?,
        I10 => multi_closed(params, &mut ctx, &mut rep)?,
        I11 => permutations(params, &mut ctx, &mut rep)?,
        I12 => star_reduction(params, &mut ctx, &mut rep, 1)?,
        I12a => star_reduction(params, &mut ctx, &mut rep, 2)?,
        I13 => bell(params, &mut ctx, &mut rep)?,
        I14 => star_closed(params, &mut ctx, &mut rep)?,
    }
    Ok(rep)
}

#[derive(Default)]
struct Ctx {
    engine: Engine,
    tables: HashMap<(Family, usize), Rc<TriangleTable>>,
    broder: HashMap<(i64, i64, i64), BigInt>,
}

impl Ctx {
    fn table(&mut self, family: Family, n_max: usize) -> Result<Rc<TriangleTable>> {
        let key = (family, n_max);
        if let Some(t) = self.tables.get(&key) {
            return Ok(t.clone());
        }
        let t = Rc::new(TriangleTable::generate_with(&key.0, n_max, &self.engine)?);
        self.tables.insert(key, t.clone());
        Ok(t)
    }

    /// `{n brace k}_r` from the triangular recurrence with base
    /// `{r brace r}_r = 1`, for any `r >= -1`. At `r = -1` this is the
    /// signed extension in which `(λ-1)^s = Σ_k {s-1 brace k-1}_{-1} (λ)_k`.
    fn rs(&mut self, n: i64, k: i64, r: i64) -> BigInt {
        assert!(r >= -1);
        if n < r || k < r {
            return BigInt::zero();
        }
        if n == r {
            return if k == r { BigInt::one() } else { BigInt::zero() };
        }
        if let Some(v) = self.broder.get(&(n, k, r)) {
            return v.clone();
        }
        let v = self.rs(n - 1, k - 1, r) + self.rs(n - 1, k, r) * k;
        self.broder.insert((n, k, r), v.clone());
        v
    }

    fn alpha_row(&self, g: &Graph) -> Result<Vec<BigInt>> {
        let mut row = self.engine.alpha_coeffs(g)?.coeffs().to_vec();
        row.resize(g.order() + 1, BigInt::zero());
        Ok(row)
    }
}

fn at(row: &[BigInt], k: usize) -> BigInt {
    row.get(k).cloned().unwrap_or_default()
}

fn fmt_r(r: &[usize]) -> String {
    let parts: Vec<_> = r.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

fn graph_label(g: &Graph) -> String {
    let edges: Vec<_> = g.edges().map(|(u, v)| format!("{u}-{v}")).collect();
    if edges.is_empty() {
        format!("O({})", g.order())
    } else {
        format!("E({};{})", g.order(), edges.join(","))
    }
}

/// Rows `alpha(X_m ∪ H)` for `m = 0..=n_max`.
fn alpha_rows(ctx: &Ctx, h: &Graph, n_max: usize, make: fn(usize) -> Graph) -> Result<Vec<Vec<BigInt>>> {
    (0..=n_max).map(|m| ctx.alpha_row(&make(m).disjoint_union(h))).collect()
}

fn theorem_empty(p: &IdentityParams, ctx: &mut Ctx, rep: &mut VerificationReport) -> Result<()> {
    for h in p.random_graphs() {
        let chi = ctx.engine.chromatic_number(&h)?;
        let rows = alpha_rows(ctx, &h, p.graph_n_max, Graph::empty)?;
        for n in 0..=p.graph_n_max {
            for s in 0..=n {
                for k in 0..=n + h.order() {
                    let rhs = (chi..=k).fold(BigInt::zero(), |acc, j| {
                        acc + ctx.rs((s + j) as i64, k as i64, j as i64) * at(&rows[n - s], j)
                    });
                    rep.check(at(&rows[n], k), rhs, || {
                        vec![("H", graph_label(&h)), ("n", n.to_string()), ("s", s.to_string()), ("k", k.to_string())]
                    });
                }
            }
        }
    }
    Ok(())
}

fn theorem_star(
    p: &IdentityParams,
    ctx: &mut Ctx,
    rep: &mut VerificationReport,
    valid_domain: bool,
) -> Result<()> {
    for h in p.random_graphs() {
        let rows = alpha_rows(ctx, &h, p.graph_n_max, Graph::star)?;
        for n in 0..=p.graph_n_max {
            for s in 0..=n {
                if valid_domain && s == n && n >= 1 {
                    continue;
                }
                for k in 0..=n + h.order() {
                    let rhs = (k.saturating_sub(s)..=k).fold(BigInt::zero(), |acc, j| {
                        let w = ctx.rs((s + j) as i64 - 1, k as i64 - 1, j as i64 - 1);
                        acc + w * at(&rows[n - s], j)
                    });
                    rep.check(at(&rows[n], k), rhs, || {
                        vec![("H", graph_label(&h)), ("n", n.to_string()), ("s", s.to_string()), ("k", k.to_string())]
                    });
                }
            }
        }
    }
    Ok(())
}

fn theorem_complete(p: &IdentityParams, ctx: &mut Ctx, rep: &mut VerificationReport) -> Result<()> {
    for h in p.random_graphs() {
        let chi = ctx.engine.chromatic_number(&h)?;
        let rows = alpha_rows(ctx, &h, p.graph_n_max, Graph::complete)?;
        for n in 0..=p.graph_n_max {
            for s in 0..=n {
                for k in 0..=n + h.order() {
                    let lo = (n - s).max(chi);
                    let rhs = (lo..=k).filter(|&j| k - j <= s).fold(BigInt::zero(), |acc, j| {
                        let w = binomial(s, k - j) * falling(&BigInt::from(j + s - n), s + j - k);
                        acc + w * at(&rows[n - s], j)
                    });
                    rep.check(at(&rows[n], k), rhs, || {
                        vec![("H", graph_label(&h)), ("n", n.to_string()), ("s", s.to_string()), ("k", k.to_string())]
                    });
                }
            }
        }
    }
    Ok(())
}

/// `{N,k} = Σ_{j=lo}^{k} {s+j brace k}_j {N-s, j}` for `0 <= s <= N - |r|`,
/// with `lo = max(r)` for multi-`r` and `lo = p` for `K(r)`.
fn general_s(
    p: &IdentityParams,
    ctx: &mut Ctx,
    rep: &mut VerificationReport,
    make: fn(Vec<usize>) -> Family,
) -> Result<()> {
    for r in &p.r_vecs {
        let family = make(r.clone());
        let size: usize = r.iter().sum();
        let lo = match family {
            Family::K(_) => nonzero(r).len(),
            _ => r.iter().copied().max().unwrap_or(0),
        };
        let top = size + p.n_max;
        let t = ctx.table(family, top)?;
        for n in size..=top {
            for s in 0..=n - size {
                for k in 0..=n {
                    let rhs = (lo..=k).fold(BigInt::zero(), |acc, j| {
                        acc + ctx.rs((s + j) as i64, k as i64, j as i64) * t.get(n - s, j)
                    });
                    rep.check(t.get(n, k), rhs, || {
                        vec![("r", fmt_r(r)), ("n", n.to_string()), ("s", s.to_string()), ("k", k.to_string())]
                    });
                }
            }
        }
    }
    Ok(())
}

fn minus_e(r: &[usize], i: usize) -> Vec<usize> {
    let mut r = r.to_vec();
    r[i] -= 1;
    r
}

fn multi_reduction(p: &IdentityParams, ctx: &mut Ctx, rep: &mut VerificationReport) -> Result<()> {
    for r in &p.r_vecs {
        let size: usize = r.iter().sum();
        let top = size + p.n_max;
        let t = ctx.table(Family::MultiR(r.clone()), top)?;
        for i in 0..r.len() {
            let reduced = ctx.table(Family::MultiR(minus_e(r, i)), top)?;
            for n in size.max(1)..=top {
                for k in 0..=n {
                    let coeff = BigInt::from(k as i64 + 1 - r[i] as i64);
                    let open = if k > 0 { reduced.get(n - 1, k - 1) } else { BigInt::zero() };
                    let rhs = open + coeff * reduced.get(n - 1, k);
                    rep.check(t.get(n, k), rhs, || {
                        vec![("r", fmt_r(r)), ("i", (i + 1).to_string()), ("n", n.to_string()), ("k", k.to_string())]
                    });
                }
            }
        }
    }
    Ok(())
}

/// `{n,k}_r = (r + extra) {n-1,k}_r + {n,k}_{r+1}` for `n > r`.
fn r_shift(p: &IdentityParams, ctx: &mut Ctx, rep: &mut VerificationReport, extra: usize) -> Result<()> {
    for r in 0..=p.single_r_max {
        let top = r + 1 + p.n_max;
        let t = ctx.table(Family::R(r), top)?;
        let up = ctx.table(Family::R(r + 1), top)?;
        for n in r + 1..=top {
            for k in 0..=n {
                let rhs = t.get(n - 1, k) * (r + extra) + up.get(n, k);
                rep.check(t.get(n, k), rhs, || {
                    vec![("r", r.to_string()), ("n", n.to_string()), ("k", k.to_string())]
                });
            }
        }
    }
    Ok(())
}

fn multi_basis(p: &IdentityParams, ctx: &mut Ctx, rep: &mut VerificationReport) -> Result<()> {
    let singles: Vec<Vec<usize>> = (0..=p.single_r_max).map(|r| vec![r]).collect();
    for r in p.r_vecs.iter().chain(&singles) {
        let mut sorted = r.clone();
        sorted.sort_unstable();
        let rp = *sorted.last().unwrap_or(&0);
        let size: usize = sorted.iter().sum();
        let t = ctx.table(Family::MultiR(sorted.clone()), size + p.n_max)?;
        let prefix = sorted[..sorted.len() - 1]
            .iter()
            .fold(IntegerPolynomial::one(), |acc, &ri| &acc * &shifted_falling_factorial(rp as i64, ri));
        let linear = IntegerPolynomial::shifted_variable(rp as i64);
        for n in 0..=p.n_max {
            let ff = (&prefix * &linear.pow(n)).to_falling_factorial();
            for k in 0..=n + size - rp {
                rep.check(ff.coeff(k), t.get(n + size, k + rp), || {
                    vec![("r", fmt_r(r)), ("n", n.to_string()), ("k", k.to_string())]
                });
            }
        }
    }
    Ok(())
}

fn star_rs(p: &IdentityParams) -> impl Iterator<Item = &Vec<usize>> {
    p.r_vecs.iter().filter(|r| r.iter().all(|&x| x >= 1))
}

fn star_basis(p: &IdentityParams, ctx: &mut Ctx, rep: &mut VerificationReport) -> Result<()> {
    for r in star_rs(p) {
        let size: usize = r.iter().sum();
        let top = size + p.n_max;
        let t = ctx.table(Family::T(r.clone()), top)?;
        let collapsed = ctx.table(Family::T(vec![size - r.len() + 1]), top)?;
        let z_minus_1 = IntegerPolynomial::shifted_variable(-1);
        for n in 0..=p.n_max {
            let poly = &IntegerPolynomial::monomial(n + r.len()) * &z_minus_1.pow(size - r.len());
            let ff = poly.to_falling_factorial();
            for k in 0..=n + size {
                rep.check(ff.coeff(k), t.get(n + size, k), || {
                    vec![("form", "expansion".into()), ("r", fmt_r(r)), ("n", n.to_string()), ("k", k.to_string())]
                });
            }
        }
        for n in size..=top {
            for k in 0..=n {
                rep.check(t.get(n, k), collapsed.get(n, k), || {
                    vec![("form", "collapse".into()), ("r", fmt_r(r)), ("N", n.to_string()), ("k", k.to_string())]
                });
            }
        }
    }
    Ok(())
}

fn multi_closed(p: &IdentityParams, ctx: &mut Ctx, rep: &mut VerificationReport) -> Result<()> {
    for r in &p.r_vecs {
        let size: usize = r.iter().sum();
        let rp = r.iter().copied().max().unwrap_or(0);
        let t = ctx.table(Family::MultiR(r.clone()), size + p.n_max)?;
        for n in 0..=p.n_max {
            for k in 0..=n + size {
                rep.check(t.get(n + size, k), closed::multi_r(n, k, r)?, || {
                    vec![("form", "alpha".into()), ("r", fmt_r(r)), ("n", n.to_string()), ("k", k.to_string())]
                });
            }
            for k in 0..=n + size - rp {
                rep.check(t.get(n + size, k + rp), closed::multi_r_shifted(n, k, r)?, || {
                    vec![("form", "shifted".into()), ("r", fmt_r(r)), ("n", n.to_string()), ("k", k.to_string())]
                });
            }
            rep.check(t.get(n + size, rp), closed::multi_r_first(n, r), || {
                vec![("form", "first".into()), ("r", fmt_r(r)), ("n", n.to_string())]
            });
            if rp < n + size {
                rep.check(t.get(n + size, rp + 1), closed::multi_r_second(n, r), || {
                    vec![("form", "second".into()), ("r", fmt_r(r)), ("n", n.to_string())]
                });
            }
        }
    }
    Ok(())
}

/// Distinct permutations of `r` in lexicographic order, starting from the
/// sorted one.
pub fn permutations_of(r: &[usize]) -> Vec<Vec<usize>> {
    let mut cur = r.to_vec();
    cur.sort_unstable();
    let mut out = vec![cur.clone()];
    loop {
        let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
}

fn permutations(p: &IdentityParams, ctx: &mut Ctx, rep: &mut VerificationReport) -> Result<()> {
    let makers: [(&str, fn(Vec<usize>) -> Family); 3] =
        [("multi", Family::MultiR), ("k", Family::K), ("t", Family::T)];
    for r in p.r_vecs.iter().filter(|r| r.len() >= 2) {
        let size: usize = r.iter().sum();
        let top = size + p.n_max;
        for (name, make) in makers {
            let reference = ctx.table(make(r.clone()), top)?;
            for sigma in permutations_of(r).into_iter().skip(1) {
                let other = ctx.table(make(sigma.clone()), top)?;
                for n in 0..=top {
                    for k in 0..=n {
                        rep.check(reference.get(n, k), other.get(n, k), || {
                            vec![
                                ("family", name.to_string()),
                                ("r", fmt_r(r)),
                                ("sigma(r)", fmt_r(&sigma)),
                                ("N", n.to_string()),
                                ("k", k.to_string()),
                            ]
                        });
                    }
                }
            }
        }
    }
    Ok(())
}

/// `{N,k}_T(r) = (k-1) {N-1,k}_T(r-e_i) + {N-1,k-1}_T(r-e_i)` over
/// `N = n + |r|` and every `i` with `r_i >= min_ri`.
fn star_reduction(
    p: &IdentityParams,
    ctx: &mut Ctx,
    rep: &mut VerificationReport,
    min_ri: usize,
) -> Result<()> {
    for r in star_rs(p) {
        let size: usize = r.iter().sum();
        let top = size + p.n_max;
        let t = ctx.table(Family::T(r.clone()), top)?;
        for i in (0..r.len()).filter(|&i| r[i] >= min_ri) {
            let reduced = ctx.table(Family::T(minus_e(r, i)), top)?;
            for n in size..=top {
                for k in 0..=n {
                    let open = if k > 0 { reduced.get(n - 1, k - 1) } else { BigInt::zero() };
                    let rhs = reduced.get(n - 1, k) * BigInt::from(k as i64 - 1) + open;
                    rep.check(t.get(n, k), rhs, || {
                        vec![("r", fmt_r(r)), ("i", (i + 1).to_string()), ("N", n.to_string()), ("k", k.to_string())]
                    });
                }
            }
        }
    }
    Ok(())
}

fn bell(p: &IdentityParams, ctx: &mut Ctx, rep: &mut VerificationReport) -> Result<()> {
    for r in &p.r_vecs {
        let size: usize = r.iter().sum();
        let t = ctx.table(Family::K(r.clone()), size + p.n_max)?;
        let seq = bell_sequence(r, p.n_max);
        for (n, poly) in seq.polys.iter().enumerate() {
            for k in 0..=n + size {
                rep.check(poly.coeff(k), t.get(n + size, k), || {
                    vec![("r", fmt_r(r)), ("n", n.to_string()), ("k", k.to_string())]
                });
            }
        }
    }
    Ok(())
}

fn star_closed(p: &IdentityParams, ctx: &mut Ctx, rep: &mut VerificationReport) -> Result<()> {
    for r in star_rs(p) {
        let size: usize = r.iter().sum();
        let t = ctx.table(Family::T(r.clone()), size + p.n_max)?;
        for n in 0..=p.n_max {
            for k in 0..=n + size {
                rep.check(t.get(n + size, k), closed::t_family(n, k, r)?, || {
                    vec![("form", "closed".into()), ("r", fmt_r(r)), ("n", n.to_string()), ("k", k.to_string())]
                });
            }
            if size > r.len() {
                rep.check(t.get(n + size, 2), closed::t_second(n, r), || {
                    vec![("form", "k=2".into()), ("r", fmt_r(r)), ("n", n.to_string())]
                });
                rep.check(t.get(n + size, 3), closed::t_third(n, r), || {
                    vec![("form", "k=3".into()), ("r", fmt_r(r)), ("n", n.to_string())]
                });
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_ids() {
        assert_eq!("i5".parse::<IdentityId>().unwrap(), IdentityId::I5);
        assert_eq!("I12A".parse::<IdentityId>().unwrap(), IdentityId::I12a);
        assert!(matches!("I15".parse::<IdentityId>(), Err(Error::UnknownIdentity(_))));
        assert_eq!(IdentityId::catalog().len(), 14);
        assert_eq!(IdentityId::amended().len(), 3);
    }

    #[test]
    fn r_vector_enumeration() {
        let v = r_vectors(2, 3);
        assert_eq!(v, vec![vec![1], vec![2], vec![3], vec![1, 1], vec![1, 2]]);
        assert!(r_vectors(3, 5).iter().all(|r| r.len() <= 3 && r.iter().sum::<usize>() <= 5));
    }

    #[test]
    fn permutation_enumeration() {
        assert_eq!(permutations_of(&[2, 1, 2]), vec![vec![1, 2, 2], vec![2, 1, 2], vec![2, 2, 1]]);
        assert_eq!(permutations_of(&[3]).len(), 1);
    }

    #[test]
    fn signed_r_stirling() {
        let mut ctx = Ctx::default();
        // λ - 1 = (λ)_1 - (λ)_0
        assert_eq!(ctx.rs(0, -1, -1), BigInt::from(-1));
        assert_eq!(ctx.rs(0, 0, -1), BigInt::from(1));
        assert_eq!(ctx.rs(4, 2, 2), BigInt::from(4));
    }

    #[test]
    fn spec_examples_pass() {
        let p = IdentityParams::desk().with_r(vec![2, 2]);
        assert!(verify_identity(IdentityId::I5, &p).unwrap().passed());
        assert!(verify_identity(IdentityId::I9, &p).unwrap().passed());
        let p = IdentityParams::desk().with_r(vec![2, 3]);
        assert!(verify_identity(IdentityId::I11, &p).unwrap().passed());
    }

    #[test]
    fn failures_are_reported() {
        let rep = verify_identity(IdentityId::I6, &IdentityParams::quick()).unwrap();
        assert!(!rep.passed());
        assert!(rep.counterexamples.len() <= VerificationReport::MAX_COUNTEREXAMPLES);
        let first = &rep.counterexamples[0];
        assert_ne!(first.lhs, first.rhs);
        assert!(first.params.contains_key("r"));
    }
}
