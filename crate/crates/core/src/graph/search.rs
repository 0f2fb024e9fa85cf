//! Backtracking embeddings of a pattern graph into a host graph.
//!
//! The same engine backs subgraph containment, injective-homomorphism
//! counting and (through [`Extension`]) rainbow-copy search.

use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use super::Graph;
use crate::{Budget, Limits, Result};

/// An injective, edge-preserving map from pattern vertices to host vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Embedding {
    pub map: Vec<usize>,
}

impl Embedding {
    /// Checks injectivity and that every pattern edge lands on a host edge.
    pub fn is_valid(&self, pattern: &Graph, host: &Graph) -> bool {
        if self.map.len() != pattern.order() || self.map.iter().any(|&h| h >= host.order()) {
            return false;
        }
        let mut seen = vec![false; host.order()];
        for &h in &self.map {
            if std::mem::replace(&mut seen[h], true) {
                return false;
            }
        }
        pattern
            .edges()
            .into_iter()
            .all(|(u, v)| host.has_edge(self.map[u], self.map[v]))
    }
}

/// Extra per-step constraint layered on top of plain embedding search.
pub(crate) trait Extension {
    /// Called when pattern vertex `pv` is tentatively mapped to host vertex
    /// `hv`; `earlier` lists the already-mapped pattern neighbours of `pv`.
    fn push(&mut self, pv: usize, hv: usize, earlier: &[usize], map: &[usize]) -> bool;
    /// Undoes the matching successful `push`.
    fn pop(&mut self, pv: usize, hv: usize, earlier: &[usize], map: &[usize]);
}

pub(crate) struct NoExtension;

impl Extension for NoExtension {
    fn push(&mut self, _: usize, _: usize, _: &[usize], _: &[usize]) -> bool {
        true
    }
    fn pop(&mut self, _: usize, _: usize, _: &[usize], _: &[usize]) {}
}

/// Orders pattern vertices so that each one (after the first of its
/// component) has as many earlier neighbours as possible; ties go to higher
/// degree, then smaller label. `start` vertices are placed first verbatim.
pub(crate) fn search_order(pattern: &Graph, start: &[usize]) -> Vec<usize> {
    let n = pattern.order();
    let mut placed = vec![false; n];
    let mut links = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    let place = |v: usize, placed: &mut Vec<bool>, links: &mut Vec<usize>, order: &mut Vec<usize>| {
        placed[v] = true;
        order.push(v);
        for w in pattern.neighbors(v) {
            links[w] += 1;
        }
    };
    for &v in start {
        place(v, &mut placed, &mut links, &mut order);
    }
    while order.len() < n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (links[v], pattern.degree(v), std::cmp::Reverse(v)))
            .expect("unplaced vertex");
        place(next, &mut placed, &mut links, &mut order);
    }
    order
}

pub(crate) struct Matcher<'a> {
    pattern: &'a Graph,
    host: &'a Graph,
    order: Vec<usize>,
    /// For each position, the earlier-placed pattern neighbours.
    earlier: Vec<Vec<usize>>,
    host_degree: Vec<usize>,
}

impl<'a> Matcher<'a> {
    pub(crate) fn new(pattern: &'a Graph, host: &'a Graph, start: &[usize]) -> Self {
        let order = search_order(pattern, start);
        let mut pos = vec![0; pattern.order()];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let earlier = order
            .iter()
            .map(|&v| pattern.neighbors(v).filter(|&w| pos[w] < pos[v]).collect())
            .collect();
        let host_degree = (0..host.order()).map(|v| host.degree(v)).collect();
        Matcher {
            pattern,
            host,
            order,
            earlier,
            host_degree,
        }
    }

    fn candidates(&self, depth: usize, map: &[usize], used: &[u64], out: &mut Vec<u64>) {
        let words = self.host.words();
        out.clear();
        let nbrs = &self.earlier[depth];
        if let Some((&first, rest)) = nbrs.split_first() {
            out.extend_from_slice(self.host.row(map[first]));
            for &w in rest {
                for (o, r) in out.iter_mut().zip(self.host.row(map[w])) {
                    *o &= r;
                }
            }
        } else {
            let n = self.host.order();
            out.resize(words, !0);
            if !n.is_multiple_of(64) {
                out[words - 1] = (1u64 << (n % 64)) - 1;
            }
        }
        for (o, u) in out.iter_mut().zip(used) {
            *o &= !u;
        }
    }

    /// Visits every embedding extending `fixed` (pattern → host pairs, which
    /// must be the first entries of the search order).
    pub(crate) fn run<E: Extension>(
        &self,
        fixed: &[(usize, usize)],
        ext: &mut E,
        budget: &mut Budget,
        visit: &mut dyn FnMut(&[usize]) -> ControlFlow<()>,
    ) -> Result<ControlFlow<()>> {
        let pn = self.pattern.order();
        let mut map = vec![usize::MAX; pn];
        let mut used = vec![0u64; self.host.words()];
        for (i, &(pv, hv)) in fixed.iter().enumerate() {
            debug_assert_eq!(self.order[i], pv);
            if hv >= self.host.order()
                || used[hv / 64] >> (hv % 64) & 1 == 1
                || self.host_degree[hv] < self.pattern.degree(pv)
                || !self.earlier[i].iter().all(|&w| self.host.has_edge(map[w], hv))
            {
                return Ok(ControlFlow::Continue(()));
            }
            if !ext.push(pv, hv, &self.earlier[i], &map) {
                return Ok(ControlFlow::Continue(()));
            }
            map[pv] = hv;
            used[hv / 64] |= 1 << (hv % 64);
        }
        let mut scratch = vec![Vec::new(); pn + 1];
        self.recurse(fixed.len(), &mut map, &mut used, ext, budget, visit, &mut scratch)
    }

    #[allow(clippy::too_many_arguments)]
    fn recurse<E: Extension>(
        &self,
        depth: usize,
        map: &mut [usize],
        used: &mut [u64],
        ext: &mut E,
        budget: &mut Budget,
        visit: &mut dyn FnMut(&[usize]) -> ControlFlow<()>,
        scratch: &mut [Vec<u64>],
    ) -> Result<ControlFlow<()>> {
        budget.tick()?;
        if depth == self.order.len() {
            return Ok(visit(map));
        }
        let pv = self.order[depth];
        let need = self.pattern.degree(pv);
        let (cur, rest) = scratch.split_first_mut().expect("scratch depth");
        self.candidates(depth, map, used, cur);
        let cands: Vec<usize> = super::bits(cur).collect();
        for hv in cands {
            if self.host_degree[hv] < need {
                continue;
            }
            if !ext.push(pv, hv, &self.earlier[depth], map) {
                continue;
            }
            map[pv] = hv;
            used[hv / 64] |= 1 << (hv % 64);
            let flow = self.recurse(depth + 1, map, used, ext, budget, visit, rest);
            used[hv / 64] &= !(1 << (hv % 64));
            map[pv] = usize::MAX;
            ext.pop(pv, hv, &self.earlier[depth], map);
            if let ControlFlow::Break(()) = flow? {
                return Ok(ControlFlow::Break(()));
            }
        }
        Ok(ControlFlow::Continue(()))
    }

    /// Number of injective homomorphisms pattern → host.
    pub(crate) fn count(&self, budget: &mut Budget) -> Result<u128> {
        let pn = self.pattern.order();
        if pn == 0 {
            return Ok(1);
        }
        let mut map = vec![usize::MAX; pn];
        let mut used = vec![0u64; self.host.words()];
        let mut scratch = vec![Vec::new(); pn + 1];
        self.count_rec(0, &mut map, &mut used, budget, &mut scratch)
    }

    fn count_rec(
        &self,
        depth: usize,
        map: &mut [usize],
        used: &mut [u64],
        budget: &mut Budget,
        scratch: &mut [Vec<u64>],
    ) -> Result<u128> {
        budget.tick()?;
        let pv = self.order[depth];
        let need = self.pattern.degree(pv);
        let (cur, rest) = scratch.split_first_mut().expect("scratch depth");
        self.candidates(depth, map, used, cur);
        let last = depth + 1 == self.order.len();
        let mut total = 0u128;
        let cands: Vec<usize> = super::bits(cur).collect();
        for hv in cands {
            if self.host_degree[hv] < need {
                continue;
            }
            if last {
                total += 1;
                continue;
            }
            map[pv] = hv;
            used[hv / 64] |= 1 << (hv % 64);
            total += self.count_rec(depth + 1, map, used, budget, rest)?;
            used[hv / 64] &= !(1 << (hv % 64));
            map[pv] = usize::MAX;
        }
        Ok(total)
    }
}

/// Finds a (not necessarily induced) copy of `pattern` in `host` under the
/// default search budget.
pub fn contains_subgraph(host: &Graph, pattern: &Graph) -> Result<Option<Embedding>> {
    contains_subgraph_with(host, pattern, &Limits::default())
}

pub fn contains_subgraph_with(
    host: &Graph,
    pattern: &Graph,
    limits: &Limits,
) -> Result<Option<Embedding>> {
    if pattern.order() > host.order() || pattern.edge_count() > host.edge_count() {
        return Ok(None);
    }
    let matcher = Matcher::new(pattern, host, &[]);
    let mut budget = Budget::new("subgraph search", limits.node_budget);
    let mut found = None;
    let _ = matcher.run(&[], &mut NoExtension, &mut budget, &mut |map| {
        found = Some(Embedding { map: map.to_vec() });
        ControlFlow::Break(())
    })?;
    Ok(found)
}
