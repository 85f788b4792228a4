//! Graph fixtures shared by the benchmarks.

use chromatic_core::Graph;

pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    Graph::new(10, outer.chain(spokes).chain(inner)).expect("valid edges")
}

/// Hub 0 joined to a cycle on `1..=rim`.
pub fn wheel(rim: usize) -> Graph {
    let spokes = (1..=rim).map(|i| (0, i));
    let cycle = (1..=rim).map(|i| (i, i % rim + 1));
    Graph::new(rim + 1, spokes.chain(cycle)).expect("valid edges")
}

/// Cycle with the chords `i -- i+2`, dense enough that components rarely split.
pub fn chorded_cycle(n: usize) -> Graph {
    let edges = (0..n).flat_map(|i| [(i, (i + 1) % n), (i, (i + 2) % n)]);
    Graph::new(n, edges).expect("valid edges")
}
