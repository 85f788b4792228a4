//! Brute-force ground truth.
//!
//! Set partitions are enumerated as restricted growth strings: element `i`
//! either joins one of the blocks opened so far or opens the next one. Each
//! restriction mode compiles to a symmetric conflict relation between
//! elements, and a placement is pruned as soon as it puts two conflicting
//! elements in one block. Nothing here shares code with the recurrence or
//! deletion–contraction paths it is meant to check.

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_ELEMENT_CAP: usize = 12;
pub const DEFAULT_COLOR_CAP: usize = 8;

/// How the prescribed blocks constrain a partition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RestrictionMode {
    /// The elements of each block lie in pairwise distinct subsets.
    DistinctWithin,
    /// No subset contains elements from two different blocks.
    CrossDistinct,
    /// The minimum of each block shares its subset with no other element of
    /// that block.
    MinSeparated,
    /// Adjacent vertices (vertex `v` is element `v + 1`) lie in distinct
    /// subsets. The blocks are ignored.
    Graph(Graph),
}

/// A restriction on the partitions of `{1, ..., n}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RestrictionSpec {
    pub n: usize,
    /// Disjoint subsets of `{1, ..., n}` (1-based labels).
    pub blocks: Vec<Vec<usize>>,
    pub mode: RestrictionMode,
}

impl RestrictionSpec {
    pub fn new(n: usize, blocks: Vec<Vec<usize>>, mode: RestrictionMode) -> Result<Self> {
        let spec = RestrictionSpec { n, blocks, mode };
        spec.validate()?;
        Ok(spec)
    }

    pub fn unrestricted(n: usize) -> Self {
        RestrictionSpec {
            n,
            blocks: Vec::new(),
            mode: RestrictionMode::DistinctWithin,
        }
    }

    /// Consecutive blocks `{1..r1}, {r1+1..r1+r2}, ...` on a ground set of
    /// size `n`.
    pub fn consecutive(n: usize, sizes: &[usize], mode: RestrictionMode) -> Result<Self> {
        let mut blocks = Vec::with_capacity(sizes.len());
        let mut next = 1;
        for &r in sizes {
            blocks.push((next..next + r).collect());
            next += r;
        }
        Self::new(n, blocks, mode)
    }

    pub fn from_graph(g: &Graph) -> Self {
        RestrictionSpec {
            n: g.order(),
            blocks: Vec::new(),
            mode: RestrictionMode::Graph(g.clone()),
        }
    }

    fn validate(&self) -> Result<()> {
        let mut seen = vec![false; self.n + 1];
        for block in &self.blocks {
            for &x in block {
                if x == 0 || x > self.n {
                    return Err(Error::invalid(format!(
                        "block element {x} outside 1..={}",
                        self.n
                    )));
                }
                if seen[x] {
                    return Err(Error::invalid(format!("element {x} appears in two blocks")));
                }
                seen[x] = true;
            }
        }
        if let RestrictionMode::Graph(g) = &self.mode {
            if g.order() != self.n {
                return Err(Error::invalid(format!(
                    "conflict graph has {} vertices, expected {}",
                    g.order(),
                    self.n
                )));
            }
        }
        Ok(())
    }

    /// Bit `j` of entry `i` is set when 0-based elements `i` and `j` may not
    /// share a subset.
    fn conflicts(&self) -> Vec<u32> {
        let mut c = vec![0u32; self.n];
        let mut forbid = |a: usize, b: usize| {
            c[a] |= 1 << b;
            c[b] |= 1 << a;
        };
        match &self.mode {
            RestrictionMode::DistinctWithin => {
                for block in &self.blocks {
                    for (i, &x) in block.iter().enumerate() {
                        for &y in &block[i + 1..] {
                            forbid(x - 1, y - 1);
                        }
                    }
                }
            }
            RestrictionMode::CrossDistinct => {
                for (i, a) in self.blocks.iter().enumerate() {
                    for b in &self.blocks[i + 1..] {
                        for &x in a {
                            for &y in b {
                                forbid(x - 1, y - 1);
                            }
                        }
                    }
                }
            }
            RestrictionMode::MinSeparated => {
                for block in &self.blocks {
                    if let Some(&m) = block.iter().min() {
                        for &y in block.iter().filter(|&&y| y != m) {
                            forbid(m - 1, y - 1);
                        }
                    }
                }
            }
            RestrictionMode::Graph(g) => {
                for (u, v) in g.edges() {
                    forbid(u, v);
                }
            }
        }
        c
    }
}

/// Exhaustive counter with hard caps on ground-set size and color count.
#[derive(Clone, Copy, Debug)]
pub struct Oracle {
    pub element_cap: usize,
    pub color_cap: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle {
            element_cap: DEFAULT_ELEMENT_CAP,
            color_cap: DEFAULT_COLOR_CAP,
        }
    }
}

impl Oracle {
    fn check_elements(&self, n: usize) -> Result<()> {
        if n > self.element_cap {
            return Err(Error::CapExceeded {
                what: "oracle ground-set size",
                value: n,
                cap: self.element_cap,
            });
        }
        Ok(())
    }

    /// Number of admissible partitions with exactly `b` blocks, for every
    /// `b` in `0..=n`.
    pub fn restricted_partition_counts(&self, spec: &RestrictionSpec) -> Result<Vec<BigInt>> {
        self.check_elements(spec.n)?;
        spec.validate()?;
        let hist = histogram(spec.n, &spec.conflicts());
        Ok(hist.into_iter().map(BigInt::from).collect())
    }

    pub fn count_restricted_partitions(&self, spec: &RestrictionSpec, k: usize) -> Result<BigInt> {
        if k > spec.n {
            self.check_elements(spec.n)?;
            return Ok(BigInt::from(0));
        }
        Ok(self.restricted_partition_counts(spec)?.swap_remove(k))
    }

    /// Partitions of the vertex set into `b` independent sets, `b = 0..=n`.
    pub fn independent_partition_counts(&self, g: &Graph) -> Result<Vec<BigInt>> {
        self.restricted_partition_counts(&RestrictionSpec::from_graph(g))
    }

    pub fn count_independent_partitions(&self, g: &Graph, k: usize) -> Result<BigInt> {
        self.count_restricted_partitions(&RestrictionSpec::from_graph(g), k)
    }

    /// Proper colorings of `g` with `lambda` colors, by backtracking over
    /// all color assignments of each connected component.
    pub fn count_proper_colorings(&self, g: &Graph, lambda: usize) -> Result<BigInt> {
        self.check_elements(g.order())?;
        if lambda > self.color_cap {
            return Err(Error::CapExceeded {
                what: "oracle color count",
                value: lambda,
                cap: self.color_cap,
            });
        }
        let mut total = BigInt::from(1);
        for comp in g.connected_components() {
            let adj = comp.adjacency();
            let mut colors = vec![usize::MAX; comp.order()];
            total *= color_rec(&adj, &mut colors, 0, lambda);
        }
        Ok(total)
    }
}

fn color_rec(adj: &[Vec<usize>], colors: &mut [usize], v: usize, lambda: usize) -> u64 {
    if v == colors.len() {
        return 1;
    }
    let mut count = 0;
    for c in 0..lambda {
        if adj[v].iter().all(|&u| colors[u] != c) {
            colors[v] = c;
            count += color_rec(adj, colors, v + 1, lambda);
        }
    }
    colors[v] = usize::MAX;
    count
}

/// Elements placed before the search fans out over rayon.
const SPLIT_DEPTH: usize = 5;

fn histogram(n: usize, conflicts: &[u32]) -> Vec<u64> {
    let mut hist = vec![0u64; n + 1];
    if n == 0 {
        hist[0] = 1;
        return hist;
    }
    let mut prefixes = Vec::new();
    let mut blocks = Vec::with_capacity(n);
    collect_prefixes(n.min(SPLIT_DEPTH), conflicts, 0, &mut blocks, &mut prefixes);
    let parts: Vec<Vec<u64>> = prefixes
        .into_par_iter()
        .map(|mut blocks| {
            let mut local = vec![0u64; n + 1];
            let start = n.min(SPLIT_DEPTH);
            extend(n, conflicts, start, &mut blocks, &mut local);
            local
        })
        .collect();
    for part in parts {
        for (h, p) in hist.iter_mut().zip(part) {
            *h += p;
        }
    }
    hist
}

fn collect_prefixes(
    depth: usize,
    conflicts: &[u32],
    i: usize,
    blocks: &mut Vec<u32>,
    out: &mut Vec<Vec<u32>>,
) {
    if i == depth {
        out.push(blocks.clone());
        return;
    }
    for b in 0..blocks.len() {
        if blocks[b] & conflicts[i] == 0 {
            blocks[b] |= 1 << i;
            collect_prefixes(depth, conflicts, i + 1, blocks, out);
            blocks[b] &= !(1 << i);
        }
    }
    blocks.push(1 << i);
    collect_prefixes(depth, conflicts, i + 1, blocks, out);
    blocks.pop();
}

fn extend(n: usize, conflicts: &[u32], i: usize, blocks: &mut Vec<u32>, hist: &mut [u64]) {
    if i == n {
        hist[blocks.len()] += 1;
        return;
    }
    for b in 0..blocks.len() {
        if blocks[b] & conflicts[i] == 0 {
            blocks[b] |= 1 << i;
            extend(n, conflicts, i + 1, blocks, hist);
            blocks[b] &= !(1 << i);
        }
    }
    blocks.push(1 << i);
    extend(n, conflicts, i + 1, blocks, hist);
    blocks.pop();
}

pub fn count_restricted_partitions(spec: &RestrictionSpec, k: usize) -> Result<BigInt> {
    Oracle::default().count_restricted_partitions(spec, k)
}

pub fn count_independent_partitions(g: &Graph, k: usize) -> Result<BigInt> {
    Oracle::default().count_independent_partitions(g, k)
}

pub fn count_proper_colorings(g: &Graph, lambda: usize) -> Result<BigInt> {
    Oracle::default().count_proper_colorings(g, lambda)
}

#[cfg(test)]
mod tests {
    use super::*;
    use RestrictionMode::{CrossDistinct, DistinctWithin, MinSeparated};

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn restricted_examples() {
        let free = RestrictionSpec::unrestricted(3);
        assert_eq!(count_restricted_partitions(&free, 3).unwrap(), big(1));
        let r = RestrictionSpec::new(4, vec![vec![1, 2]], DistinctWithin).unwrap();
        assert_eq!(count_restricted_partitions(&r, 2).unwrap(), big(4));
        let k = RestrictionSpec::new(5, vec![vec![1, 2], vec![3, 4, 5]], CrossDistinct).unwrap();
        assert_eq!(count_restricted_partitions(&k, 3).unwrap(), big(4));
    }

    #[test]
    fn classical_rows() {
        let counts = Oracle::default()
            .restricted_partition_counts(&RestrictionSpec::unrestricted(5))
            .unwrap();
        assert_eq!(counts, [0, 1, 15, 25, 10, 1].map(big));
        let empty = Oracle::default()
            .restricted_partition_counts(&RestrictionSpec::unrestricted(0))
            .unwrap();
        assert_eq!(empty, vec![big(1)]);
    }

    #[test]
    fn bell_twelve() {
        let counts = Oracle::default()
            .restricted_partition_counts(&RestrictionSpec::unrestricted(12))
            .unwrap();
        let total: BigInt = counts.iter().sum();
        assert_eq!(total, big(4_213_597));
    }

    #[test]
    fn min_separated() {
        // {1,2,3} with 1 isolated from 2 and 3: partitions of [3] are
        // 1|23 and 1|2|3.
        let t = RestrictionSpec::new(3, vec![vec![1, 2, 3]], MinSeparated).unwrap();
        let counts = Oracle::default().restricted_partition_counts(&t).unwrap();
        assert_eq!(counts, [0, 0, 1, 1].map(big));
    }

    #[test]
    fn independent_examples() {
        let k3: Graph = "K(3)".parse().unwrap();
        let o3: Graph = "O(3)".parse().unwrap();
        let k2o2: Graph = "K(2)+O(2)".parse().unwrap();
        assert_eq!(count_independent_partitions(&k3, 3).unwrap(), big(1));
        assert_eq!(count_independent_partitions(&o3, 2).unwrap(), big(3));
        assert_eq!(count_independent_partitions(&k2o2, 3).unwrap(), big(5));
        assert_eq!(count_independent_partitions(&k2o2, 9).unwrap(), big(0));
    }

    #[test]
    fn coloring_examples() {
        let k3: Graph = "K(3)".parse().unwrap();
        let o2: Graph = "O(2)".parse().unwrap();
        let c4: Graph = "E(4;0-1,1-2,2-3,3-0)".parse().unwrap();
        assert_eq!(count_proper_colorings(&k3, 3).unwrap(), big(6));
        assert_eq!(count_proper_colorings(&o2, 5).unwrap(), big(25));
        assert_eq!(count_proper_colorings(&c4, 2).unwrap(), big(2));
        assert_eq!(count_proper_colorings(&Graph::empty(0), 3).unwrap(), big(1));
    }

    #[test]
    fn caps() {
        let big_spec = RestrictionSpec::unrestricted(13);
        assert!(matches!(
            count_restricted_partitions(&big_spec, 2),
            Err(Error::CapExceeded { .. })
        ));
        assert!(matches!(
            count_proper_colorings(&Graph::empty(2), 9),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn invalid_blocks() {
        assert!(RestrictionSpec::new(3, vec![vec![1, 4]], DistinctWithin).is_err());
        assert!(RestrictionSpec::new(3, vec![vec![1, 2], vec![2, 3]], CrossDistinct).is_err());
        assert!(RestrictionSpec::new(3, vec![vec![0]], CrossDistinct).is_err());
        assert!(RestrictionSpec::new(3, vec![], RestrictionMode::Graph(Graph::empty(2))).is_err());
    }
}
