//! Simple undirected graphs on vertices `0..n`.
//!
//! Only the isomorphism type of a graph matters for everything downstream,
//! so vertices carry no attributes. Edges are kept in a sorted set, which
//! makes iteration (and therefore the deletion–contraction trace)
//! deterministic.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawGraph")]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

#[derive(Deserialize)]
struct RawGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl TryFrom<RawGraph> for Graph {
    type Error = Error;

    fn try_from(raw: RawGraph) -> Result<Self> {
        Graph::new(raw.n, raw.edges)
    }
}

impl Graph {
    /// Builds a graph from an edge list, rejecting loops, duplicates and
    /// out-of-range endpoints. Pairs are stored as `(min, max)`.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::invalid(format!("self-loop at vertex {u}")));
            }
            if u >= n || v >= n {
                return Err(Error::invalid(format!(
                    "edge {u}-{v} has an endpoint outside 0..{n}"
                )));
            }
            if !set.insert((u.min(v), u.max(v))) {
                return Err(Error::invalid(format!("duplicate edge {u}-{v}")));
            }
        }
        Ok(Graph { n, edges: set })
    }

    /// `O_n`: `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: BTreeSet::new(),
        }
    }

    /// `K_n`.
    pub fn complete(n: usize) -> Self {
        let edges = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Graph { n, edges }
    }

    /// Star on `n` vertices with vertex 0 universal. This is the tree
    /// representative used everywhere a tree of order `n` is needed.
    pub fn star(n: usize) -> Self {
        let edges = (1..n).map(|v| (0, v)).collect();
        Graph { n, edges }
    }

    /// Complete multipartite graph `K_{r_1,...,r_p}`. Parts are laid out
    /// consecutively; every part must be nonempty.
    pub fn complete_multipartite(parts: &[usize]) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::invalid("complete multipartite graph needs at least one part"));
        }
        if let Some(i) = parts.iter().position(|&r| r == 0) {
            return Err(Error::invalid(format!("part {i} of a multipartite graph is empty")));
        }
        let mut block = Vec::new();
        for (i, &r) in parts.iter().enumerate() {
            block.extend(std::iter::repeat(i).take(r));
        }
        let n = block.len();
        let edges = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| block[u] != block[v])
            .collect();
        Ok(Graph { n, edges })
    }

    /// `g1 ∪ g2` with the second graph's labels shifted past the first's.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
        Graph {
            n: self.n + other.n,
            edges,
        }
    }

    /// Disjoint union of an arbitrary list of graphs.
    pub fn union_all<'a>(graphs: impl IntoIterator<Item = &'a Graph>) -> Graph {
        graphs
            .into_iter()
            .fold(Graph::empty(0), |acc, g| acc.disjoint_union(g))
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    pub fn is_complete(&self) -> bool {
        self.edges.len() == self.n * self.n.saturating_sub(1) / 2
    }

    /// Connected components, each relabeled `0..k` in increasing order of
    /// the original labels. Components are listed by smallest vertex.
    pub fn connected_components(&self) -> Vec<Graph> {
        let adj = self.adjacency();
        let mut comp = vec![usize::MAX; self.n];
        let mut members: Vec<Vec<usize>> = Vec::new();
        for start in 0..self.n {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = members.len();
            let mut stack = vec![start];
            let mut verts = Vec::new();
            comp[start] = id;
            while let Some(u) = stack.pop() {
                verts.push(u);
                for &w in &adj[u] {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        stack.push(w);
                    }
                }
            }
            verts.sort_unstable();
            members.push(verts);
        }

        let mut local = vec![0; self.n];
        for verts in &members {
            for (i, &v) in verts.iter().enumerate() {
                local[v] = i;
            }
        }
        let mut out: Vec<Graph> = members.iter().map(|m| Graph::empty(m.len())).collect();
        for &(u, v) in &self.edges {
            out[comp[u]].edges.insert((local[u], local[v]));
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.connected_components().len() == 1
    }

    /// `e` given as `(u, v)` with `u < v`; a no-op if absent.
    pub fn without_edge(&self, e: (usize, usize)) -> Graph {
        let mut g = self.clone();
        g.edges.remove(&e);
        g
    }

    /// Contracts the edge `(u, v)`, `u < v`: `v` is merged into `u`, labels
    /// above `v` shift down by one and parallel edges collapse.
    pub fn contract(&self, (u, v): (usize, usize)) -> Graph {
        debug_assert!(u < v);
        let relabel = |w: usize| match w.cmp(&v) {
            std::cmp::Ordering::Less => w,
            std::cmp::Ordering::Equal => u,
            std::cmp::Ordering::Greater => w - 1,
        };
        let edges = self
            .edges
            .iter()
            .filter_map(|&(a, b)| {
                let (a, b) = (relabel(a), relabel(b));
                (a != b).then(|| (a.min(b), a.max(b)))
            })
            .collect();
        Graph {
            n: self.n - 1,
            edges,
        }
    }
}

/// One constructor in a graph spec.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Term {
    Empty(usize),
    Complete(usize),
    Star(usize),
    Multipartite(Vec<usize>),
    Explicit { n: usize, edges: Vec<(usize, usize)> },
}

impl Term {
    pub fn to_graph(&self) -> Result<Graph> {
        match self {
            Term::Empty(n) => Ok(Graph::empty(*n)),
            Term::Complete(n) => Ok(Graph::complete(*n)),
            Term::Star(n) => Ok(Graph::star(*n)),
            Term::Multipartite(parts) => Graph::complete_multipartite(parts),
            Term::Explicit { n, edges } => Graph::new(*n, edges.iter().copied()),
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Empty(n) => write!(f, "O({n})"),
            Term::Complete(n) => write!(f, "K({n})"),
            Term::Star(n) => write!(f, "T({n})"),
            Term::Multipartite(parts) => {
                let parts: Vec<_> = parts.iter().map(|r| r.to_string()).collect();
                write!(f, "KM({})", parts.join(","))
            }
            Term::Explicit { n, edges } => {
                let edges: Vec<_> = edges.iter().map(|(u, v)| format!("{u}-{v}")).collect();
                write!(f, "E({n};{})", edges.join(","))
            }
        }
    }
}

/// Parsed graph expression: terms joined by `+` (disjoint union).
///
/// ```text
/// spec     := term ("+" term)*
/// term     := "O(" INT ")" | "K(" INT ")" | "T(" INT ")"
///           | "KM(" INT ("," INT)+ ")" | "E(" INT ";" edgelist ")"
/// edgelist := INT "-" INT ("," INT "-" INT)*
/// ```
///
/// Whitespace is ignored anywhere.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphSpec {
    pub terms: Vec<Term>,
}

impl GraphSpec {
    pub fn to_graph(&self) -> Result<Graph> {
        let mut g = Graph::empty(0);
        for t in &self.terms {
            g = g.disjoint_union(&t.to_graph()?);
        }
        Ok(g)
    }
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

impl FromStr for GraphSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let chars: Vec<(usize, char)> = s.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
        let mut p = Parser {
            chars,
            i: 0,
            len: s.len(),
        };
        let mut terms = vec![p.term()?];
        while p.eat('+') {
            terms.push(p.term()?);
        }
        if p.i < p.chars.len() {
            return Err(p.err("trailing input"));
        }
        Ok(GraphSpec { terms })
    }
}

impl FromStr for Graph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.parse::<GraphSpec>()?.to_graph()
    }
}

struct Parser {
    chars: Vec<(usize, char)>,
    i: usize,
    len: usize,
}

impl Parser {
    fn pos(&self) -> usize {
        self.chars.get(self.i).map_or(self.len, |&(p, _)| p)
    }

    fn err(&self, msg: &str) -> Error {
        Error::Parse {
            pos: self.pos(),
            msg: msg.to_string(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.i).map(|&(_, c)| c)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.i += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(&format!("expected `{c}`")))
        }
    }

    fn int(&mut self) -> Result<usize> {
        let start = self.i;
        let mut digits = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            digits.push(c);
            self.i += 1;
        }
        if digits.is_empty() {
            return Err(self.err("expected integer"));
        }
        digits.parse().map_err(|_| {
            self.i = start;
            self.err("integer out of range")
        })
    }

    fn term(&mut self) -> Result<Term> {
        let term = match self.peek() {
            Some('O') => {
                self.i += 1;
                self.expect('(')?;
                Term::Empty(self.int()?)
            }
            Some('T') => {
                self.i += 1;
                self.expect('(')?;
                Term::Star(self.int()?)
            }
            Some('K') => {
                self.i += 1;
                if self.eat('M') {
                    self.expect('(')?;
                    let mut parts = vec![self.int()?];
                    self.expect(',')?;
                    parts.push(self.int()?);
                    while self.eat(',') {
                        parts.push(self.int()?);
                    }
                    if parts.contains(&0) {
                        return Err(self.err("multipartite parts must be positive"));
                    }
                    Term::Multipartite(parts)
                } else {
                    self.expect('(')?;
                    Term::Complete(self.int()?)
                }
            }
            Some('E') => {
                self.i += 1;
                self.expect('(')?;
                let n = self.int()?;
                self.expect(';')?;
                let mut edges = Vec::new();
                loop {
                    let at = self.i;
                    let u = self.int()?;
                    self.expect('-')?;
                    let v = self.int()?;
                    if u == v || u >= n || v >= n {
                        self.i = at;
                        return Err(self.err(&format!("invalid edge {u}-{v} for {n} vertices")));
                    }
                    edges.push((u, v));
                    if !self.eat(',') {
                        break;
                    }
                }
                Graph::new(n, edges.iter().copied()).map_err(|e| self.err(&e.to_string()))?;
                Term::Explicit { n, edges }
            }
            _ => return Err(self.err("expected one of O, K, T, KM, E")),
        };
        self.expect(')')?;
        Ok(term)
    }
}
