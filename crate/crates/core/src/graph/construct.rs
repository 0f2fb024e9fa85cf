use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::Graph;
use crate::{Error, Result};

/// Named graph families understood by [`construct`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Complete,
    Cycle,
    Path,
    CompleteBipartite,
    CompleteMultipartite,
    Turan,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::Complete,
        Family::Cycle,
        Family::Path,
        Family::CompleteBipartite,
        Family::CompleteMultipartite,
        Family::Turan,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Complete => "complete",
            Family::Cycle => "cycle",
            Family::Path => "path",
            Family::CompleteBipartite => "complete_bipartite",
            Family::CompleteMultipartite => "complete_multipartite",
            Family::Turan => "turan",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::param(format!("unknown graph family {s:?}")))
    }
}

fn sizes(params: &[i64]) -> Result<Vec<usize>> {
    params
        .iter()
        .map(|&p| {
            usize::try_from(p).map_err(|_| Error::param(format!("negative size {p}")))
        })
        .collect()
}

fn arity(family: Family, params: &[i64], want: usize) -> Result<Vec<usize>> {
    if params.len() != want {
        return Err(Error::param(format!(
            "{family} takes {want} parameter(s), got {}",
            params.len()
        )));
    }
    sizes(params)
}

/// Builds a named graph with a deterministic labelling.
///
/// Multipartite families place their parts on consecutive labels in part
/// order; `turan(n, r)` lists its larger parts first.
pub fn construct(family: Family, params: &[i64]) -> Result<Graph> {
    match family {
        Family::Complete => {
            let n = arity(family, params, 1)?[0];
            Ok(complete_multipartite(&vec![1; n]))
        }
        Family::Cycle => {
            let n = arity(family, params, 1)?[0];
            if n < 3 {
                return Err(Error::param(format!("cycle length {n} < 3")));
            }
            Ok(cycle(n))
        }
        Family::Path => {
            let n = arity(family, params, 1)?[0];
            let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
            Graph::from_edges(n, &edges)
        }
        Family::CompleteBipartite => Ok(complete_multipartite(&arity(family, params, 2)?)),
        Family::CompleteMultipartite => Ok(complete_multipartite(&sizes(params)?)),
        Family::Turan => {
            let nr = arity(family, params, 2)?;
            if nr[1] == 0 {
                return Err(Error::param("turan needs r >= 1"));
            }
            Ok(complete_multipartite(&turan_parts(nr[0], nr[1])))
        }
    }
}

pub(crate) fn cycle(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for v in 0..n {
        g.set_edge(v, (v + 1) % n);
    }
    g
}

/// Part sizes of `T(n, r)`: the `n mod r` larger parts come first.
pub(crate) fn turan_parts(n: usize, r: usize) -> Vec<usize> {
    let (q, rem) = (n / r, n % r);
    (0..r).map(|i| q + usize::from(i < rem)).collect()
}

pub(crate) fn complete_multipartite(parts: &[usize]) -> Graph {
    let n: usize = parts.iter().sum();
    let mut part_of = Vec::with_capacity(n);
    for (i, &s) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(i, s));
    }
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if part_of[u] != part_of[v] {
                g.set_edge(u, v);
            }
        }
    }
    g
}

/// A base graph together with the size of the independent set replacing
/// each base vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BlowupSpec {
    base: Graph,
    part_sizes: Vec<usize>,
}

impl BlowupSpec {
    pub fn new(base: Graph, part_sizes: Vec<usize>) -> Result<Self> {
        if part_sizes.len() != base.order() {
            return Err(Error::param(format!(
                "blowup of an order-{} base needs {} part sizes, got {}",
                base.order(),
                base.order(),
                part_sizes.len()
            )));
        }
        Ok(BlowupSpec { base, part_sizes })
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn part_sizes(&self) -> &[usize] {
        &self.part_sizes
    }

    pub fn order(&self) -> usize {
        self.part_sizes.iter().sum()
    }

    /// Base vertex owning each blown-up vertex.
    pub fn part_of(&self) -> Vec<usize> {
        self.part_sizes
            .iter()
            .enumerate()
            .flat_map(|(i, &s)| std::iter::repeat_n(i, s))
            .collect()
    }

    /// Label range of the part replacing base vertex `v`.
    pub fn part_range(&self, v: usize) -> std::ops::Range<usize> {
        let start: usize = self.part_sizes[..v].iter().sum();
        start..start + self.part_sizes[v]
    }
}

/// Realises a blowup; parts occupy consecutive labels in base-vertex order.
pub fn blowup(spec: &BlowupSpec) -> Graph {
    let part_of = spec.part_of();
    let n = part_of.len();
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if spec.base.has_edge(part_of[u], part_of[v]) {
                g.set_edge(u, v);
            }
        }
    }
    g
}

/// The balanced blowup of `base` on `n` vertices. The `n mod |base|` base
/// vertices with the smallest labels receive the larger parts.
pub fn balanced_blowup(base: &Graph, n: usize) -> Result<BlowupSpec> {
    let k = base.order();
    if k == 0 {
        if n > 0 {
            return Err(Error::param("cannot blow up the order-0 graph to n > 0"));
        }
        return BlowupSpec::new(base.clone(), Vec::new());
    }
    BlowupSpec::new(base.clone(), turan_parts(n, k))
}
