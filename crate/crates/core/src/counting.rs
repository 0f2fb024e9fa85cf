//! Exact subgraph-copy counts.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::graph::search::Matcher;
use crate::{Budget, Error, Graph, Limits, Result};

/// Number of injective homomorphisms `h → g`.
pub fn injective_hom_count(h: &Graph, g: &Graph, limits: &Limits) -> Result<u128> {
    if h.order() > g.order() || h.edge_count() > g.edge_count() {
        return Ok(0);
    }
    let mut budget = Budget::new("copy counting", limits.node_budget);
    Matcher::new(h, g, &[]).count(&mut budget)
}

/// `|Aut(h)|`; an injective homomorphism of `h` into itself is a bijection
/// on edges and hence an automorphism.
pub fn automorphism_count(h: &Graph) -> Result<u128> {
    automorphism_count_with(h, &Limits::default())
}

pub fn automorphism_count_with(h: &Graph, limits: &Limits) -> Result<u128> {
    injective_hom_count(h, h, limits)
}

pub fn count_copies(h: &Graph, g: &Graph) -> Result<BigUint> {
    count_copies_with(h, g, &Limits::default())
}

/// `N(h, g)`: distinct subgraphs of `g` isomorphic to `h`.
pub fn count_copies_with(h: &Graph, g: &Graph, limits: &Limits) -> Result<BigUint> {
    if h.order() == 0 {
        return Err(Error::param("pattern must have at least one vertex"));
    }
    let injective = injective_hom_count(h, g, limits)?;
    let aut = automorphism_count_with(h, limits)?;
    debug_assert_eq!(injective % aut, 0, "automorphisms act freely on embeddings");
    Ok(BigUint::from(injective / aut))
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `N(K_{a,b}, K_{s,t})`. A connected `K_{a,b}` lies across the host
/// bipartition, so its copies are pairs of subsets of the two sides.
pub fn closed_form_kab(a: u64, b: u64, s: u64, t: u64) -> Result<BigUint> {
    if a == 0 || b == 0 {
        return Err(Error::param("closed_form_kab needs a, b >= 1"));
    }
    Ok(if a == b {
        binomial(s, a) * binomial(t, a)
    } else {
        binomial(s, a) * binomial(t, b) + binomial(s, b) * binomial(t, a)
    })
}

/// `N(C_{2k+1}, blowup(C_{2k+1}, sizes))`: every copy is a transversal, so
/// the count is the product of the part sizes.
pub fn closed_form_odd_cycle_blowup(k: usize, part_sizes: &[u64]) -> Result<BigUint> {
    if k == 0 {
        return Err(Error::param("odd cycle blowup needs k >= 1"));
    }
    if part_sizes.len() != 2 * k + 1 {
        return Err(Error::param(format!(
            "C_{} has {} parts, got {} sizes",
            2 * k + 1,
            2 * k + 1,
            part_sizes.len()
        )));
    }
    Ok(part_sizes.iter().map(|&s| BigUint::from(s)).product())
}
