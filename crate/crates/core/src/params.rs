//! Exact graph parameters: chromatic number, `p(F)`, homomorphisms, `γ(F)`
//! and odd girth.

use std::collections::VecDeque;
use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::graph::search::search_order;
use crate::graph::{bits, construct, Family, Graph};
use crate::{Budget, Error, Limits, Result};

/// Proper 2-colouring of a bipartite graph. In every component the
/// smallest vertex sits on side 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bipartition {
    pub side: Vec<u8>,
}

impl Bipartition {
    pub fn is_proper(&self, g: &Graph) -> bool {
        g.edges().iter().all(|&(u, v)| self.side[u] != self.side[v])
    }
}

/// BFS 2-colouring; on failure returns an odd cycle as a vertex sequence.
pub fn bipartition(g: &Graph) -> Result<Bipartition> {
    let n = g.order();
    let mut side = vec![u8::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    for root in 0..n {
        if side[root] != u8::MAX {
            continue;
        }
        side[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for w in g.neighbors(u) {
                if side[w] == u8::MAX {
                    side[w] = 1 - side[u];
                    parent[w] = u;
                    depth[w] = depth[u] + 1;
                    queue.push_back(w);
                } else if side[w] == side[u] {
                    return Err(Error::NotBipartite {
                        cycle: odd_cycle(&parent, &depth, u, w),
                    });
                }
            }
        }
    }
    Ok(Bipartition { side })
}

/// Closes the two BFS-tree paths from `u` and `w` at their common ancestor.
fn odd_cycle(parent: &[usize], depth: &[usize], mut u: usize, mut w: usize) -> Vec<usize> {
    let mut left = vec![u];
    let mut right = vec![w];
    while depth[u] > depth[w] {
        u = parent[u];
        left.push(u);
    }
    while depth[w] > depth[u] {
        w = parent[w];
        right.push(w);
    }
    while u != w {
        u = parent[u];
        w = parent[w];
        left.push(u);
        right.push(w);
    }
    right.pop();
    left.extend(right.into_iter().rev());
    left
}

/// Sum over components of the smaller side of the component's bipartition.
/// Isolated vertices contribute 0.
pub fn p_value(f: &Graph) -> Result<usize> {
    let bip = bipartition(f)?;
    Ok(f.components()
        .iter()
        .map(|comp| {
            let ones = comp.iter().filter(|&&v| bip.side[v] == 1).count();
            ones.min(comp.len() - ones)
        })
        .sum())
}

pub fn chromatic_number(g: &Graph) -> Result<usize> {
    chromatic_number_with(g, &Limits::default())
}

/// Exact chromatic number by trying `k = 1, 2, ...` with backtracking
/// colouring (colours introduced in increasing order). The order cap in
/// `limits` applies once the graph is known not to be bipartite.
pub fn chromatic_number_with(g: &Graph, limits: &Limits) -> Result<usize> {
    let n = g.order();
    if n == 0 {
        return Ok(0);
    }
    if g.edge_count() == 0 {
        return Ok(1);
    }
    if bipartition(g).is_ok() {
        return Ok(2);
    }
    if n > limits.chromatic_order {
        return Err(Error::Budget {
            what: "chromatic number order",
            limit: limits.chromatic_order as u64,
        });
    }
    let order = search_order(g, &[]);
    let mut budget = Budget::new("chromatic number", limits.node_budget);
    for k in 3..=n {
        let mut colour = vec![usize::MAX; n];
        if colour_rec(g, &order, 0, k, 0, &mut colour, &mut budget)? {
            return Ok(k);
        }
    }
    Ok(n)
}

fn colour_rec(
    g: &Graph,
    order: &[usize],
    depth: usize,
    k: usize,
    used: usize,
    colour: &mut [usize],
    budget: &mut Budget,
) -> Result<bool> {
    budget.tick()?;
    let Some(&v) = order.get(depth) else {
        return Ok(true);
    };
    for c in 0..k.min(used + 1) {
        if g.neighbors(v).any(|w| colour[w] == c) {
            continue;
        }
        colour[v] = c;
        if colour_rec(g, order, depth + 1, k, used.max(c + 1), colour, budget)? {
            return Ok(true);
        }
        colour[v] = usize::MAX;
    }
    Ok(false)
}

pub fn hom_exists(f: &Graph, b: &Graph) -> Result<Option<Vec<usize>>> {
    hom_exists_with(f, b, &Limits::default())
}

/// Searches for a homomorphism `f → b`, i.e. a vertex map sending every edge
/// of `f` onto an edge of `b`.
pub fn hom_exists_with(f: &Graph, b: &Graph, limits: &Limits) -> Result<Option<Vec<usize>>> {
    if f.order() > 0 && b.order() == 0 {
        return Ok(None);
    }
    if f.edge_count() > 0 && b.edge_count() == 0 {
        return Ok(None);
    }
    let order = search_order(f, &[]);
    let mut pos = vec![0; f.order()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let earlier: Vec<Vec<usize>> = order
        .iter()
        .map(|&v| f.neighbors(v).filter(|&w| pos[w] < pos[v]).collect())
        .collect();
    let mut map = vec![usize::MAX; f.order()];
    let mut budget = Budget::new("homomorphism search", limits.node_budget);
    let flow = hom_rec(f, b, &order, &earlier, 0, &mut map, &mut budget)?;
    Ok(match flow {
        ControlFlow::Break(()) => Some(map),
        ControlFlow::Continue(()) => None,
    })
}

fn hom_rec(
    f: &Graph,
    b: &Graph,
    order: &[usize],
    earlier: &[Vec<usize>],
    depth: usize,
    map: &mut [usize],
    budget: &mut Budget,
) -> Result<ControlFlow<()>> {
    budget.tick()?;
    let Some(&v) = order.get(depth) else {
        return Ok(ControlFlow::Break(()));
    };
    let cands: Vec<usize> = match earlier[depth].split_first() {
        Some((&first, rest)) => {
            let mut row = b.row(map[first]).to_vec();
            for &w in rest {
                for (o, r) in row.iter_mut().zip(b.row(map[w])) {
                    *o &= r;
                }
            }
            bits(&row).collect()
        }
        None if f.degree(v) > 0 => (0..b.order()).filter(|&x| b.degree(x) > 0).collect(),
        None => vec![0],
    };
    for x in cands {
        map[v] = x;
        if hom_rec(f, b, order, earlier, depth + 1, map, budget)?.is_break() {
            return Ok(ControlFlow::Break(()));
        }
    }
    map[v] = usize::MAX;
    Ok(ControlFlow::Continue(()))
}

/// Length of the shortest odd cycle, or `None` for bipartite graphs.
pub fn odd_girth(g: &Graph) -> Option<usize> {
    let n = g.order();
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; n];
    for root in 0..n {
        dist.fill(usize::MAX);
        dist[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            if best.is_some_and(|b| 2 * dist[u] + 1 >= b) {
                break;
            }
            for w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                } else if dist[w] == dist[u] {
                    let len = 2 * dist[u] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

/// The odd cycle `C_{2k-1}` (with `C_3 = K_3`).
pub(crate) fn gamma_target(k: usize) -> Graph {
    construct(Family::Cycle, &[2 * k as i64 - 1]).expect("cycle length >= 3")
}

pub fn gamma(f: &Graph) -> Result<usize> {
    gamma_with(f, &Limits::default())
}

/// Largest `k` such that `f` maps homomorphically into `C_{2k-1}`; defined
/// for 3-chromatic graphs. An odd girth of `2m + 1` bounds the answer by
/// `m + 1`.
pub fn gamma_with(f: &Graph, limits: &Limits) -> Result<usize> {
    let chi = chromatic_number_with(f, limits)?;
    if chi != 3 {
        return Err(Error::NotThreeChromatic { chi });
    }
    let og = odd_girth(f).expect("3-chromatic graphs have odd cycles");
    let upper = (og - 1) / 2 + 1;
    let mut best = 2;
    for k in 3..=upper {
        if hom_exists_with(f, &gamma_target(k), limits)?.is_some() {
            best = k;
        } else {
            break;
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(f: Family, p: &[i64]) -> Graph {
        construct(f, p).unwrap()
    }

    fn is_hom(map: &[usize], f: &Graph, b: &Graph) -> bool {
        f.edges().iter().all(|&(u, v)| b.has_edge(map[u], map[v]))
    }

    #[test]
    fn chromatic_examples() {
        assert_eq!(chromatic_number(&g(Family::Cycle, &[5])).unwrap(), 3);
        assert_eq!(chromatic_number(&g(Family::CompleteBipartite, &[3, 3])).unwrap(), 2);
        assert_eq!(chromatic_number(&Graph::empty(0)).unwrap(), 0);
        assert_eq!(chromatic_number(&Graph::empty(4)).unwrap(), 1);
        assert_eq!(chromatic_number(&g(Family::Complete, &[6])).unwrap(), 6);
    }

    #[test]
    fn chromatic_order_budget() {
        let big = g(Family::Cycle, &[11]);
        assert!(matches!(chromatic_number(&big), Err(Error::Budget { .. })));
        let roomy = Limits {
            chromatic_order: 20,
            ..Limits::default()
        };
        assert_eq!(chromatic_number_with(&big, &roomy).unwrap(), 3);
        assert_eq!(chromatic_number(&g(Family::Cycle, &[40])).unwrap(), 2);
    }

    #[test]
    fn p_value_examples() {
        assert_eq!(p_value(&g(Family::CompleteBipartite, &[2, 3])).unwrap(), 2);
        assert_eq!(p_value(&g(Family::Cycle, &[4])).unwrap(), 2);
        let p3 = g(Family::Path, &[3]);
        assert_eq!(p_value(&p3.disjoint_union(&p3)).unwrap(), 2);
        assert_eq!(p_value(&Graph::empty(3)).unwrap(), 0);
    }

    #[test]
    fn p_value_reports_odd_cycle() {
        let c7 = g(Family::Cycle, &[7]);
        match p_value(&c7) {
            Err(Error::NotBipartite { cycle }) => {
                assert_eq!(cycle.len() % 2, 1);
                for i in 0..cycle.len() {
                    assert!(c7.has_edge(cycle[i], cycle[(i + 1) % cycle.len()]));
                }
            }
            other => panic!("expected odd cycle, got {other:?}"),
        }
    }

    #[test]
    fn hom_examples() {
        let c5 = g(Family::Cycle, &[5]);
        let k3 = g(Family::Complete, &[3]);
        let m = hom_exists(&c5, &k3).unwrap().unwrap();
        assert!(is_hom(&m, &c5, &k3));
        assert!(hom_exists(&k3, &c5).unwrap().is_none());
        let pet = g(Family::CompleteMultipartite, &[1, 2, 2]);
        let id = hom_exists(&pet, &pet).unwrap().unwrap();
        assert!(is_hom(&id, &pet, &pet));
        assert!(hom_exists(&Graph::empty(2), &Graph::empty(0)).unwrap().is_none());
        assert!(hom_exists(&Graph::empty(2), &Graph::empty(1)).unwrap().is_some());
    }

    #[test]
    fn odd_girth_examples() {
        assert_eq!(odd_girth(&g(Family::Cycle, &[5])), Some(5));
        assert_eq!(odd_girth(&g(Family::Complete, &[4])), Some(3));
        assert_eq!(odd_girth(&g(Family::CompleteBipartite, &[3, 3])), None);
        let c9_chord = g(Family::Cycle, &[9]).with_edge(0, 4).unwrap();
        assert_eq!(odd_girth(&c9_chord), Some(5));
    }

    #[test]
    fn gamma_examples() {
        assert_eq!(gamma(&g(Family::Complete, &[3])).unwrap(), 2);
        assert_eq!(gamma(&g(Family::Cycle, &[5])).unwrap(), 3);
        assert_eq!(gamma(&g(Family::Cycle, &[7])).unwrap(), 4);
        assert_eq!(
            gamma(&g(Family::Cycle, &[4])).unwrap_err(),
            Error::NotThreeChromatic { chi: 2 }
        );
        assert_eq!(
            gamma(&g(Family::Complete, &[4])).unwrap_err(),
            Error::NotThreeChromatic { chi: 4 }
        );
    }
}
