#![allow(dead_code)]

use chromatic_core::oracle::RestrictionSpec;
use chromatic_core::{BigInt, Family, Graph, RestrictionMode};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// `count` graphs with order uniform in `0..=max_order` and edge density
/// drawn per graph.
pub fn random_graphs(seed: u64, count: usize, max_order: usize) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(0..=max_order);
            let density: f64 = rng.gen_range(0.0..=1.0);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(density) {
                        edges.push((u, v));
                    }
                }
            }
            Graph::new(n, edges).unwrap()
        })
        .collect()
}

/// The brute-force restriction counted by `family` on `[total]`.
pub fn restriction(family: &Family, total: usize) -> RestrictionSpec {
    let spec = match family {
        Family::Classical => return RestrictionSpec::unrestricted(total),
        Family::R(r) => RestrictionSpec::consecutive(total, &[*r], RestrictionMode::DistinctWithin),
        Family::MultiR(r) => RestrictionSpec::consecutive(total, r, RestrictionMode::DistinctWithin),
        Family::K(r) => RestrictionSpec::consecutive(total, r, RestrictionMode::CrossDistinct),
        Family::T(r) => RestrictionSpec::consecutive(total, r, RestrictionMode::MinSeparated),
        Family::Custom(_) => panic!("custom recurrences have no combinatorial model"),
    };
    spec.unwrap()
}

pub fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

pub fn bigs(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}
