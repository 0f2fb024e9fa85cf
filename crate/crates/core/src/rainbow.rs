//! Proper edge colourings and rainbow copies.
//!
//! A colouring is stored as one colour id per edge, indexed by the position
//! of the edge in [`Graph::edges`] (lexicographic order).

use std::ops::ControlFlow;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::graph::search::{Extension, Matcher};
use crate::graph::{blowup, construct, contains_subgraph_with, BlowupSpec, Embedding, Family};
use crate::params::bipartition;
use crate::{Budget, Error, Graph, Limits, Result};

const UNSET: u32 = u32::MAX;
/// Colour ids are tracked in 128-bit masks.
const MAX_COLOURS: usize = 128;

#[derive(Clone, PartialEq, Eq)]
pub struct EdgeColoring {
    graph: Graph,
    colors: Vec<u32>,
    /// `index[u * n + v]` is the edge position of `{u, v}`, or `u32::MAX`.
    index: Vec<u32>,
}

pub(crate) fn edge_index(g: &Graph) -> Vec<u32> {
    let n = g.order();
    let mut index = vec![UNSET; n * n];
    for (i, (u, v)) in g.edges().into_iter().enumerate() {
        index[u * n + v] = i as u32;
        index[v * n + u] = i as u32;
    }
    index
}

impl EdgeColoring {
    /// Validates totality and properness.
    pub fn new(graph: Graph, colors: Vec<u32>) -> Result<Self> {
        let m = graph.edge_count();
        if colors.len() != m {
            return Err(Error::param(format!(
                "colouring lists {} colours for {m} edges",
                colors.len()
            )));
        }
        let index = edge_index(&graph);
        let c = EdgeColoring {
            graph,
            colors,
            index,
        };
        if let Some((a, b)) = c.conflict() {
            return Err(Error::param(format!(
                "edges {a:?} and {b:?} share a vertex and a colour"
            )));
        }
        Ok(c)
    }

    fn conflict(&self) -> Option<((usize, usize), (usize, usize))> {
        let n = self.graph.order();
        for v in 0..n {
            let mut seen: Vec<(u32, usize)> = self
                .graph
                .neighbors(v)
                .map(|w| (self.colors[self.index[v * n + w] as usize], w))
                .collect();
            seen.sort_unstable();
            for pair in seen.windows(2) {
                if pair[0].0 == pair[1].0 {
                    return Some(((v, pair[0].1), (v, pair[1].1)));
                }
            }
        }
        None
    }

    pub fn is_proper(&self) -> bool {
        self.conflict().is_none()
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn color(&self, u: usize, v: usize) -> Option<u32> {
        let n = self.graph.order();
        if u >= n || v >= n {
            return None;
        }
        match self.index[u * n + v] {
            UNSET => None,
            i => Some(self.colors[i as usize]),
        }
    }

    pub fn num_colors(&self) -> usize {
        self.colors.iter().max().map_or(0, |&c| c as usize + 1)
    }
}

impl std::fmt::Debug for EdgeColoring {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("EdgeColoring")
            .field("graph", &self.graph)
            .field("colors", &self.colors)
            .finish()
    }
}

#[derive(Serialize, Deserialize)]
struct ColoringRepr {
    graph: Graph,
    colors: Vec<u32>,
}

impl Serialize for EdgeColoring {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ColoringRepr {
            graph: self.graph.clone(),
            colors: self.colors.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for EdgeColoring {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = ColoringRepr::deserialize(d)?;
        EdgeColoring::new(repr.graph, repr.colors).map_err(serde::de::Error::custom)
    }
}

/// A rainbow copy of a pattern: `colors[i]` is the colour of the image of
/// the `i`-th pattern edge (lexicographic order).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RainbowCopy {
    pub embedding: Embedding,
    pub colors: Vec<u32>,
}

impl RainbowCopy {
    fn from_map(coloring: &EdgeColoring, f: &Graph, map: &[usize]) -> Self {
        let colors = f
            .edges()
            .into_iter()
            .map(|(a, b)| coloring.color(map[a], map[b]).unwrap_or(UNSET))
            .collect();
        RainbowCopy {
            embedding: Embedding { map: map.to_vec() },
            colors,
        }
    }

    /// Valid embedding, colours read off the host, pairwise distinct.
    pub fn verify(&self, coloring: &EdgeColoring, f: &Graph) -> bool {
        if !self.embedding.is_valid(f, coloring.graph()) {
            return false;
        }
        let map = &self.embedding.map;
        let actual: Vec<u32> = f
            .edges()
            .into_iter()
            .map(|(a, b)| coloring.color(map[a], map[b]).unwrap_or(UNSET))
            .collect();
        if actual != self.colors {
            return false;
        }
        let mut sorted = actual;
        sorted.sort_unstable();
        sorted.windows(2).all(|w| w[0] != w[1])
    }
}

fn edge_budget_check(g: &Graph, limits: &Limits) -> Result<()> {
    let m = g.edge_count();
    if m > limits.edge_budget {
        return Err(Error::Budget {
            what: "edge colouring edge count",
            limit: limits.edge_budget as u64,
        });
    }
    if m > MAX_COLOURS {
        return Err(Error::param(format!(
            "colouring search supports at most {MAX_COLOURS} edges"
        )));
    }
    Ok(())
}

/// Restricted-growth search over partitions of the edge set into matchings.
struct ColoringSearch {
    edges: Vec<(usize, usize)>,
    colors: Vec<u32>,
    used_at: Vec<u128>,
    budget: Budget,
}

impl ColoringSearch {
    fn new(g: &Graph, limits: &Limits, what: &'static str) -> Self {
        let edges = g.edges();
        ColoringSearch {
            colors: vec![UNSET; edges.len()],
            edges,
            used_at: vec![0; g.order()],
            budget: Budget::new(what, limits.node_budget),
        }
    }

    /// `accept(i, colours)` is consulted after edge `i` is coloured; the
    /// branch is abandoned when it returns false.
    fn run(
        &mut self,
        accept: &mut dyn FnMut(usize, &[u32]) -> Result<bool>,
        visit: &mut dyn FnMut(&[u32]) -> ControlFlow<()>,
    ) -> Result<ControlFlow<()>> {
        self.rec(0, 0, accept, visit)
    }

    fn rec(
        &mut self,
        i: usize,
        fresh: u32,
        accept: &mut dyn FnMut(usize, &[u32]) -> Result<bool>,
        visit: &mut dyn FnMut(&[u32]) -> ControlFlow<()>,
    ) -> Result<ControlFlow<()>> {
        self.budget.tick()?;
        if i == self.edges.len() {
            return Ok(visit(&self.colors));
        }
        let (u, v) = self.edges[i];
        let blocked = self.used_at[u] | self.used_at[v];
        for c in 0..=fresh {
            if blocked >> c & 1 == 1 {
                continue;
            }
            self.colors[i] = c;
            self.used_at[u] |= 1 << c;
            self.used_at[v] |= 1 << c;
            let flow = if accept(i, &self.colors)? {
                self.rec(i + 1, fresh.max(c + 1), accept, visit)?
            } else {
                ControlFlow::Continue(())
            };
            self.used_at[u] &= !(1 << c);
            self.used_at[v] &= !(1 << c);
            self.colors[i] = UNSET;
            if flow.is_break() {
                return Ok(ControlFlow::Break(()));
            }
        }
        Ok(ControlFlow::Continue(()))
    }
}

/// Calls `visit` once per proper edge colouring up to renaming of colours.
pub fn for_each_proper_coloring(
    g: &Graph,
    limits: &Limits,
    visit: &mut dyn FnMut(&EdgeColoring) -> ControlFlow<()>,
) -> Result<()> {
    edge_budget_check(g, limits)?;
    let mut search = ColoringSearch::new(g, limits, "edge colouring enumeration");
    let index = edge_index(g);
    let _ = search.run(&mut |_, _| Ok(true), &mut |colors| {
        visit(&EdgeColoring {
            graph: g.clone(),
            colors: colors.to_vec(),
            index: index.clone(),
        })
    })?;
    Ok(())
}

pub fn enumerate_proper_colorings(g: &Graph, limits: &Limits) -> Result<Vec<EdgeColoring>> {
    let mut out = Vec::new();
    for_each_proper_coloring(g, limits, &mut |c| {
        out.push(c.clone());
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

/// Rejects a new vertex placement whose edges are uncoloured or repeat a
/// colour already on the partial copy.
struct RainbowExt<'a> {
    g: &'a Graph,
    index: &'a [u32],
    colors: &'a [u32],
    used: u128,
}

impl RainbowExt<'_> {
    fn color(&self, a: usize, b: usize) -> u32 {
        match self.index[a * self.g.order() + b] {
            UNSET => UNSET,
            i => self.colors[i as usize],
        }
    }
}

impl Extension for RainbowExt<'_> {
    fn push(&mut self, _pv: usize, hv: usize, earlier: &[usize], map: &[usize]) -> bool {
        let mut add = 0u128;
        for &w in earlier {
            let c = self.color(map[w], hv);
            if c == UNSET || c as usize >= MAX_COLOURS {
                return false;
            }
            let bit = 1u128 << c;
            if (self.used | add) & bit != 0 {
                return false;
            }
            add |= bit;
        }
        self.used |= add;
        true
    }

    fn pop(&mut self, _pv: usize, hv: usize, earlier: &[usize], map: &[usize]) {
        for &w in earlier {
            let c = self.color(map[w], hv);
            self.used &= !(1u128 << c);
        }
    }
}

pub fn find_rainbow_copy(coloring: &EdgeColoring, f: &Graph) -> Result<Option<RainbowCopy>> {
    find_rainbow_copy_with(coloring, f, &Limits::default())
}

pub fn find_rainbow_copy_with(
    coloring: &EdgeColoring,
    f: &Graph,
    limits: &Limits,
) -> Result<Option<RainbowCopy>> {
    let g = coloring.graph();
    if f.order() > g.order() || f.edge_count() > g.edge_count() {
        return Ok(None);
    }
    if coloring.num_colors() > MAX_COLOURS {
        return Err(Error::param(format!(
            "rainbow search supports at most {MAX_COLOURS} colours"
        )));
    }
    let matcher = Matcher::new(f, g, &[]);
    let mut ext = RainbowExt {
        g,
        index: &coloring.index,
        colors: &coloring.colors,
        used: 0,
    };
    let mut budget = Budget::new("rainbow search", limits.node_budget);
    let mut found = None;
    let _ = matcher.run(&[], &mut ext, &mut budget, &mut |map| {
        found = Some(RainbowCopy::from_map(coloring, f, map));
        ControlFlow::Break(())
    })?;
    Ok(found)
}

/// Greedy proper colouring in lexicographic edge order.
fn greedy_coloring(g: &Graph, order: &[(usize, usize)]) -> EdgeColoring {
    let index = edge_index(g);
    let n = g.order();
    let mut colors = vec![UNSET; order.len()];
    let mut used_at: Vec<Vec<bool>> = vec![Vec::new(); n];
    for &(u, v) in order {
        let c = (0..)
            .find(|&c: &usize| {
                !used_at[u].get(c).copied().unwrap_or(false)
                    && !used_at[v].get(c).copied().unwrap_or(false)
            })
            .expect("some colour is free");
        for x in [u, v] {
            if used_at[x].len() <= c {
                used_at[x].resize(c + 1, false);
            }
            used_at[x][c] = true;
        }
        colors[index[u * n + v] as usize] = c as u32;
    }
    EdgeColoring {
        graph: g.clone(),
        colors,
        index,
    }
}

/// Deterministic in `(g, seed)`: edges are visited in a seeded shuffle and
/// each takes the smallest colour free at both endpoints.
pub fn random_proper_coloring(g: &Graph, seed: u64) -> EdgeColoring {
    let mut order = g.edges();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    order.shuffle(&mut rng);
    greedy_coloring(g, &order)
}

/// Searches for a proper colouring of `g` without a rainbow `f`.
///
/// `Ok(None)` means every proper colouring of `g` contains a rainbow `f`.
/// Partial colourings are discarded as soon as a fully coloured rainbow copy
/// through the newest edge appears.
pub fn admits_coloring_without_rainbow(
    g: &Graph,
    f: &Graph,
    limits: &Limits,
) -> Result<Option<EdgeColoring>> {
    if contains_subgraph_with(g, f, limits)?.is_none() {
        return Ok(Some(greedy_coloring(g, &g.edges())));
    }
    if f.edge_count() == 0 {
        // a copy with no edges is rainbow
        return Ok(None);
    }
    edge_budget_check(g, limits)?;

    let index = edge_index(g);
    let f_edges = f.edges();
    let matchers: Vec<(Matcher, (usize, usize))> = f_edges
        .iter()
        .flat_map(|&(a, b)| [(a, b), (b, a)])
        .map(|(a, b)| (Matcher::new(f, g, &[a, b]), (a, b)))
        .collect();

    let mut search = ColoringSearch::new(g, limits, "rainbow-free colouring search");
    let edges = search.edges.clone();
    let mut probe_budget = Budget::new("rainbow probe", limits.node_budget);
    let mut found = None;
    let _ = search.run(
        &mut |i, colors| {
            let (u, v) = edges[i];
            for (matcher, (a, b)) in &matchers {
                let mut ext = RainbowExt {
                    g,
                    index: &index,
                    colors,
                    used: 0,
                };
                let flow = matcher.run(
                    &[(*a, u), (*b, v)],
                    &mut ext,
                    &mut probe_budget,
                    &mut |_| ControlFlow::Break(()),
                )?;
                if flow.is_break() {
                    return Ok(false);
                }
            }
            Ok(true)
        },
        &mut |colors| {
            found = Some(colors.to_vec());
            ControlFlow::Break(())
        },
    )?;
    Ok(found.map(|colors| EdgeColoring {
        graph: g.clone(),
        colors,
        index,
    }))
}

fn precondition(msg: impl Into<String>) -> Error {
    Error::Param(msg.into())
}

/// Greedy rainbow embedding of a bipartite `f` into a properly coloured
/// `K_{p,q}` with `p = p(f)`.
///
/// The smaller class of every component of `f` goes onto the `p`-side in
/// label order; the remaining vertices are placed one at a time on the
/// smallest free `q`-side vertex whose edges to the already placed
/// neighbours avoid every colour used so far. This cannot get stuck when
/// `q > |E(f)| · p`.
pub fn greedy_rainbow_embed_bipartite(
    coloring: &EdgeColoring,
    f: &Graph,
) -> Result<Option<RainbowCopy>> {
    let fbip = bipartition(f).map_err(|_| precondition("pattern is not bipartite"))?;
    let mut small = Vec::new();
    let mut large_conn = Vec::new();
    let mut large_iso = Vec::new();
    for comp in f.components() {
        let ones: Vec<usize> = comp.iter().copied().filter(|&v| fbip.side[v] == 1).collect();
        let zeros: Vec<usize> = comp.iter().copied().filter(|&v| fbip.side[v] == 0).collect();
        let (s, l) = if ones.len() < zeros.len() {
            (ones, zeros)
        } else {
            (zeros, ones)
        };
        small.extend(s);
        for v in l {
            if f.degree(v) > 0 {
                large_conn.push(v);
            } else {
                large_iso.push(v);
            }
        }
    }
    small.sort_unstable();
    large_conn.sort_unstable();
    large_iso.sort_unstable();
    let p = small.len();

    let host = coloring.graph();
    let (p_side, q_side) = complete_bipartite_sides(host, p)
        .ok_or_else(|| precondition(format!("host is not a complete bipartite K_{{{p},q}}")))?;

    let mut map = vec![usize::MAX; f.order()];
    for (&s, &h) in small.iter().zip(&p_side) {
        map[s] = h;
    }
    let mut used_vertex = vec![false; host.order()];
    let mut used_color = vec![false; coloring.num_colors()];
    for l in large_conn.into_iter().chain(large_iso) {
        let nbrs: Vec<usize> = f.neighbors(l).collect();
        let pick = q_side.iter().copied().find(|&y| {
            !used_vertex[y]
                && nbrs.iter().all(|&s| {
                    let c = coloring.color(map[s], y).expect("complete bipartite host");
                    !used_color[c as usize]
                })
        });
        let Some(y) = pick else {
            return Ok(None);
        };
        used_vertex[y] = true;
        for &s in &nbrs {
            used_color[coloring.color(map[s], y).expect("edge") as usize] = true;
        }
        map[l] = y;
    }
    let copy = RainbowCopy::from_map(coloring, f, &map);
    assert!(copy.verify(coloring, f), "greedy bipartite embedding is rainbow");
    Ok(Some(copy))
}

/// Sides of a complete bipartite host, the first one of size `p`.
fn complete_bipartite_sides(host: &Graph, p: usize) -> Option<(Vec<usize>, Vec<usize>)> {
    let n = host.order();
    if p == 0 {
        return (host.edge_count() == 0).then(|| (Vec::new(), (0..n).collect()));
    }
    let bip = bipartition(host).ok()?;
    if host.components().len() != 1 {
        return None;
    }
    let zeros: Vec<usize> = (0..n).filter(|&v| bip.side[v] == 0).collect();
    let ones: Vec<usize> = (0..n).filter(|&v| bip.side[v] == 1).collect();
    if host.edge_count() != zeros.len() * ones.len() {
        return None;
    }
    if zeros.len() == p {
        Some((zeros, ones))
    } else if ones.len() == p {
        Some((ones, zeros))
    } else {
        None
    }
}

/// Recovers the part sizes of a blowup of `base` whose parts occupy
/// consecutive labels and are all non-empty.
pub fn recognize_blowup(host: &Graph, base: &Graph) -> Option<BlowupSpec> {
    let n = host.order();
    let mut sizes = Vec::new();
    let mut start = 0;
    while start < n {
        let mut end = start + 1;
        while end < n && host.row(end) == host.row(start) {
            end += 1;
        }
        sizes.push(end - start);
        start = end;
    }
    let spec = BlowupSpec::new(base.clone(), sizes).ok()?;
    (blowup(&spec) == *host).then_some(spec)
}

/// Greedy rainbow embedding of the balanced blowup `C_{2k+1}⟨m⟩` (on `m`
/// vertices in total) into a properly coloured blowup of `C_{2k+1}` with the
/// given part sizes, respecting parts.
///
/// Each target vertex takes the smallest unused host vertex of its part
/// whose edges to already embedded neighbours avoid all colours on the
/// partial copy. Success is guaranteed when every part has at least `m³`
/// vertices.
pub fn greedy_rainbow_embed_cycle_blowup(
    coloring: &EdgeColoring,
    k: usize,
    part_sizes: &[usize],
    m: usize,
) -> Result<Option<(Graph, RainbowCopy)>> {
    if k == 0 || m == 0 {
        return Err(precondition("cycle blowup embedding needs k >= 1 and m >= 1"));
    }
    let base = construct(Family::Cycle, &[2 * k as i64 + 1])?;
    let host_spec = BlowupSpec::new(base.clone(), part_sizes.to_vec())?;
    if blowup(&host_spec) != *coloring.graph() {
        return Err(precondition(format!(
            "host is not the blowup of C_{} with parts {part_sizes:?}",
            2 * k + 1
        )));
    }
    let target_spec = crate::graph::balanced_blowup(&base, m)?;
    let target = blowup(&target_spec);
    let target_part = target_spec.part_of();

    let host = coloring.graph();
    let mut map = vec![usize::MAX; m];
    let mut used_vertex = vec![false; host.order()];
    let mut used_color = vec![false; coloring.num_colors()];
    for t in 0..m {
        let earlier: Vec<usize> = target.neighbors(t).filter(|&w| w < t).collect();
        let pick = host_spec.part_range(target_part[t]).find(|&y| {
            !used_vertex[y]
                && earlier.iter().all(|&w| {
                    let c = coloring.color(map[w], y).expect("blowup edge");
                    !used_color[c as usize]
                })
        });
        let Some(y) = pick else {
            return Ok(None);
        };
        used_vertex[y] = true;
        for &w in &earlier {
            used_color[coloring.color(map[w], y).expect("edge") as usize] = true;
        }
        map[t] = y;
    }
    let copy = RainbowCopy::from_map(coloring, &target, &map);
    assert!(copy.verify(coloring, &target), "greedy blowup embedding is rainbow");
    Ok(Some((target, copy)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(f: Family, p: &[i64]) -> Graph {
        construct(f, p).unwrap()
    }

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn enumeration_small_cases() {
        let p3 = g(Family::Path, &[3]);
        assert_eq!(enumerate_proper_colorings(&p3, &lim()).unwrap().len(), 1);
        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(enumerate_proper_colorings(&two_k2, &lim()).unwrap().len(), 2);
        // {ac}{bd}, {ac}{b}{d}, {a}{c}{bd}, {a}{b}{c}{d}
        let c4 = g(Family::Cycle, &[4]);
        let all = enumerate_proper_colorings(&c4, &lim()).unwrap();
        assert_eq!(all.len(), 4);
        assert!(all.iter().all(EdgeColoring::is_proper));
        assert_eq!(enumerate_proper_colorings(&Graph::empty(3), &lim()).unwrap().len(), 1);
    }

    #[test]
    fn edge_budget_is_enforced() {
        let k8 = g(Family::Complete, &[8]);
        let err = enumerate_proper_colorings(&k8, &lim()).unwrap_err();
        assert!(err.is_budget());
    }

    #[test]
    fn rejects_improper_colorings() {
        let p3 = g(Family::Path, &[3]);
        assert!(EdgeColoring::new(p3.clone(), vec![0, 0]).is_err());
        assert!(EdgeColoring::new(p3, vec![0]).is_err());
    }

    #[test]
    fn rainbow_examples() {
        let k3 = g(Family::Complete, &[3]);
        let c = EdgeColoring::new(k3.clone(), vec![0, 1, 2]).unwrap();
        let r = find_rainbow_copy(&c, &k3).unwrap().unwrap();
        assert!(r.verify(&c, &k3));

        let c4 = g(Family::Cycle, &[4]);
        // edges (0,1) (0,3) (1,2) (2,3)
        let alt = EdgeColoring::new(c4.clone(), vec![0, 1, 1, 0]).unwrap();
        assert!(find_rainbow_copy(&alt, &c4).unwrap().is_none());

        let k4 = g(Family::Complete, &[4]);
        for col in enumerate_proper_colorings(&k4, &lim()).unwrap() {
            assert!(find_rainbow_copy(&col, &k3).unwrap().is_some());
        }
    }

    #[test]
    fn membership_examples() {
        let c4 = g(Family::Cycle, &[4]);
        let w = admits_coloring_without_rainbow(&c4, &c4, &lim()).unwrap().unwrap();
        assert_eq!(w.num_colors(), 2);
        assert!(find_rainbow_copy(&w, &c4).unwrap().is_none());

        let k4 = g(Family::Complete, &[4]);
        let k3 = g(Family::Complete, &[3]);
        assert!(admits_coloring_without_rainbow(&k4, &k3, &lim()).unwrap().is_none());

        let star = g(Family::CompleteBipartite, &[1, 4]);
        assert!(admits_coloring_without_rainbow(&star, &c4, &lim()).unwrap().is_some());
    }

    #[test]
    fn random_coloring_contract() {
        let k3 = g(Family::Complete, &[3]);
        for seed in 0..5 {
            assert_eq!(random_proper_coloring(&k3, seed).num_colors(), 3);
        }
        let c4 = g(Family::Cycle, &[4]);
        let a = random_proper_coloring(&c4, 7);
        assert!(a.is_proper());
        assert!((2..=3).contains(&a.num_colors()));
        assert_eq!(a, random_proper_coloring(&c4, 7));
    }

    #[test]
    fn bipartite_embedder_examples() {
        let k13 = g(Family::CompleteBipartite, &[1, 3]);
        let p3 = g(Family::Path, &[3]);
        for seed in 0..10 {
            let c = random_proper_coloring(&k13, seed);
            let r = greedy_rainbow_embed_bipartite(&c, &p3).unwrap().unwrap();
            assert!(r.verify(&c, &p3));
        }
        let c4 = g(Family::Cycle, &[4]);
        let k22 = g(Family::CompleteBipartite, &[2, 2]);
        // edges (0,2) (0,3) (1,2) (1,3)
        let alt = EdgeColoring::new(k22, vec![0, 1, 1, 0]).unwrap();
        assert!(greedy_rainbow_embed_bipartite(&alt, &c4).unwrap().is_none());

        let k33 = g(Family::CompleteBipartite, &[3, 3]);
        let bad = random_proper_coloring(&k33, 0);
        assert!(greedy_rainbow_embed_bipartite(&bad, &c4).is_err());
        let k3 = g(Family::Complete, &[3]);
        assert!(greedy_rainbow_embed_bipartite(&bad, &k3).is_err());
    }

    #[test]
    fn bipartite_embedder_handles_isolated_vertices() {
        let f = g(Family::Path, &[3]).disjoint_union(&Graph::empty(1));
        let host = g(Family::CompleteBipartite, &[1, 5]);
        let c = random_proper_coloring(&host, 3);
        let r = greedy_rainbow_embed_bipartite(&c, &f).unwrap().unwrap();
        assert!(r.verify(&c, &f));
    }

    #[test]
    fn cycle_embedder_examples() {
        let k111 = g(Family::Complete, &[3]);
        let c = random_proper_coloring(&k111, 0);
        let (target, r) = greedy_rainbow_embed_cycle_blowup(&c, 1, &[1, 1, 1], 3)
            .unwrap()
            .unwrap();
        assert_eq!(target, k111);
        assert!(r.verify(&c, &target));

        let host = g(Family::CompleteMultipartite, &[4, 4, 4]);
        let c = random_proper_coloring(&host, 1);
        let (target, r) = greedy_rainbow_embed_cycle_blowup(&c, 1, &[4, 4, 4], 1)
            .unwrap()
            .unwrap();
        assert_eq!(target.order(), 1);
        assert_eq!(r.embedding.map, vec![0]);

        assert!(greedy_rainbow_embed_cycle_blowup(&c, 1, &[3, 4, 5], 3).is_err());
        assert!(greedy_rainbow_embed_cycle_blowup(&c, 2, &[4, 4, 4], 3).is_err());
    }

    #[test]
    fn recognizes_blowups() {
        let c5 = g(Family::Cycle, &[5]);
        let spec = BlowupSpec::new(c5.clone(), vec![2, 1, 3, 1, 2]).unwrap();
        let host = blowup(&spec);
        assert_eq!(recognize_blowup(&host, &c5), Some(spec));
        assert_eq!(recognize_blowup(&g(Family::Cycle, &[6]), &c5), None);
    }

    #[test]
    fn json_shape() {
        let c = EdgeColoring::new(g(Family::Path, &[3]), vec![1, 0]).unwrap();
        let s = serde_json::to_string(&c).unwrap();
        assert_eq!(s, r#"{"graph":"Bg","colors":[1,0]}"#);
        let back: EdgeColoring = serde_json::from_str(&s).unwrap();
        assert_eq!(back, c);
        assert!(serde_json::from_str::<EdgeColoring>(r#"{"graph":"Bg","colors":[0,0]}"#).is_err());
    }
}
