//! Fixtures shared by the benchmarks.

use vat_core::graph::{balanced_blowup, blowup, construct};
use vat_core::{Family, Graph};

pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((i + 5, (i + 2) % 5 + 5));
    }
    Graph::from_edges(10, &edges).expect("valid edges")
}

/// `g` with its vertices reversed, so canonical forms have work to do.
pub fn reversed(g: &Graph) -> Graph {
    let n = g.order();
    g.permuted(&(0..n).rev().collect::<Vec<_>>())
}

pub fn family(f: Family, params: &[i64]) -> Graph {
    construct(f, params).expect("valid parameters")
}

pub fn cycle_blowup(len: i64, n: usize) -> Graph {
    let base = family(Family::Cycle, &[len]);
    blowup(&balanced_blowup(&base, n).expect("non-empty base"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures() {
        let p = petersen();
        assert_eq!((p.order(), p.edge_count()), (10, 15));
        assert!(vat_core::graph::is_isomorphic(&p, &reversed(&p)));
        assert_eq!(cycle_blowup(5, 15).edge_count(), 45);
    }
}
