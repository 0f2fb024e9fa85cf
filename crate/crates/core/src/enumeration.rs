//! Isomorph-free generation of small graphs and brute-force maximisation of
//! Turán-type functions over constrained graph classes.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::counting::count_copies_with;
use crate::framework::{Class, Decomposition, Membership, Partition};
use crate::graph::{canonicalize, contains_subgraph_with};
use crate::{Error, Graph, Limits, Result};

/// No configuration may enumerate beyond this order.
pub const HARD_MAX_ORDER: usize = 10;

static SCANNED: AtomicU64 = AtomicU64::new(0);

/// Total graphs scanned by [`extremal_value`] in this process.
pub fn graphs_scanned_total() -> u64 {
    SCANNED.load(Ordering::Relaxed)
}

type Level = Arc<Vec<Graph>>;

fn level_cache() -> &'static Mutex<HashMap<usize, Level>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Level>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::from([(0, Arc::new(vec![Graph::empty(0)]))])))
}

/// Canonical representatives of every isomorphism class on `n - 1`
/// vertices, extended by a new vertex with every neighbourhood, then
/// canonicalised and deduplicated.
fn build_level(prev: &[Graph], n: usize) -> Vec<Graph> {
    let mut out: Vec<Graph> = prev
        .par_iter()
        .flat_map_iter(|parent| {
            let mut local: Vec<Graph> = (0u64..1 << (n - 1))
                .map(|mask| {
                    let mut g = Graph::empty(n);
                    for (u, v) in parent.edges() {
                        g.set_edge(u, v);
                    }
                    for u in 0..n - 1 {
                        if mask >> u & 1 == 1 {
                            g.set_edge(u, n - 1);
                        }
                    }
                    canonicalize(&g)
                })
                .collect();
            local.sort_unstable();
            local.dedup();
            local
        })
        .collect();
    out.par_sort_unstable();
    out.dedup();
    out
}

/// Representatives of order `n + 1` from the complete list of
/// representatives of order `n`, bypassing the level cache.
pub fn extend_level(previous: &[Graph]) -> Vec<Graph> {
    let n = previous.first().map_or(0, Graph::order);
    build_level(previous, n + 1)
}

/// One canonical representative per isomorphism class of graphs of order
/// `n`, in a fixed order.
pub fn enumerate_graphs(n: usize, limits: &Limits) -> Result<Arc<Vec<Graph>>> {
    let cap = limits.max_n.min(HARD_MAX_ORDER);
    if n > cap {
        return Err(Error::Budget {
            what: "enumeration order",
            limit: cap as u64,
        });
    }
    // the lock is not held while a level is built
    let (mut have, mut level) = {
        let cache = level_cache().lock().expect("enumeration cache poisoned");
        let have = (0..=n).rev().find(|k| cache.contains_key(k)).unwrap_or(0);
        (have, Arc::clone(&cache[&have]))
    };
    while have < n {
        let next = Arc::new(build_level(&level, have + 1));
        have += 1;
        let mut cache = level_cache().lock().expect("enumeration cache poisoned");
        level = Arc::clone(cache.entry(have).or_insert(next));
    }
    Ok(level)
}

/// All graphs of order `1..=max_order`.
pub fn graphs_up_to(max_order: usize, limits: &Limits) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in 1..=max_order {
        out.extend(enumerate_graphs(n, limits)?.iter().cloned());
    }
    Ok(out)
}

/// The graph parameter being maximised.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum TuranFunction {
    EdgeCount,
    /// Number of copies of a fixed pattern.
    CopyCount(Graph),
}

impl TuranFunction {
    pub fn name(&self) -> String {
        self.to_string()
    }

    pub fn evaluate(&self, g: &Graph, limits: &Limits) -> Result<BigUint> {
        match self {
            TuranFunction::EdgeCount => Ok(BigUint::from(g.edge_count())),
            TuranFunction::CopyCount(h) => count_copies_with(h, g, limits),
        }
    }
}

impl fmt::Display for TuranFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TuranFunction::EdgeCount => f.write_str("edges"),
            TuranFunction::CopyCount(h) => write!(f, "count:{h}"),
        }
    }
}

impl FromStr for TuranFunction {
    type Err = Error;

    /// `edges` or `count:<graph6>`.
    fn from_str(s: &str) -> Result<Self> {
        if s == "edges" {
            Ok(TuranFunction::EdgeCount)
        } else if let Some(g6) = s.strip_prefix("count:") {
            let h = Graph::from_graph6(g6)?;
            if h.order() == 0 {
                return Err(Error::param("count pattern must have a vertex"));
            }
            Ok(TuranFunction::CopyCount(h))
        } else {
            Err(Error::param(format!(
                "unknown function {s:?}; expected edges or count:<graph6>"
            )))
        }
    }
}

impl Serialize for TuranFunction {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Which graphs of the given order take part in the maximisation.
#[derive(Clone, Copy, Default)]
pub struct ClassConstraint<'a> {
    pub forbidden: &'a [Graph],
    pub membership: Option<&'a Partition>,
    pub discard: Option<&'a dyn Decomposition>,
}

impl<'a> ClassConstraint<'a> {
    pub fn forbid(patterns: &'a [Graph]) -> Self {
        ClassConstraint {
            forbidden: patterns,
            ..Default::default()
        }
    }

    /// `Some(true)` if `g` qualifies, `None` if a budget prevented deciding.
    pub fn qualifies(&self, g: &Graph, limits: &Limits) -> Option<bool> {
        if let Some(d) = self.discard {
            match d.classify(g, limits) {
                Ok(Class::Discard) => return Some(false),
                Ok(Class::Level(_)) => {}
                Err(_) => return None,
            }
        }
        for f in self.forbidden {
            match contains_subgraph_with(g, f, limits) {
                Ok(Some(_)) => return Some(false),
                Ok(None) => {}
                Err(_) => return None,
            }
        }
        if let Some(p) = self.membership {
            match p.allowed(g) {
                Membership::Allowed => {}
                Membership::Forbidden => return Some(false),
                Membership::Unknown => return None,
            }
        }
        Some(true)
    }
}

pub(crate) mod big_serde {
    use num_bigint::BigUint;
    use serde::Serializer;

    /// Integers that fit in `u64` serialise as JSON numbers, larger ones as
    /// decimal strings.
    pub fn serialize<S: Serializer>(v: &Option<BigUint>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            None => s.serialize_none(),
            Some(v) => match u64::try_from(v) {
                Ok(small) => s.serialize_u64(small),
                Err(_) => s.collect_str(v),
            },
        }
    }
}

mod big_de {
    use num_bigint::BigUint;
    use serde::{Deserialize, Deserializer};

    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Repr {
        Num(u64),
        Text(String),
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<BigUint>, D::Error> {
        Ok(match Option::<Repr>::deserialize(d)? {
            None => None,
            Some(Repr::Num(n)) => Some(n.into()),
            Some(Repr::Text(t)) => Some(t.parse().map_err(serde::de::Error::custom)?),
        })
    }
}

/// Result of a brute-force maximisation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalResult {
    pub n: usize,
    /// `None` when no graph of order `n` qualifies.
    #[serde(serialize_with = "big_serde::serialize", deserialize_with = "big_de::deserialize")]
    pub value: Option<BigUint>,
    /// Canonical graph6 strings of all maximisers, sorted.
    pub witnesses: Vec<String>,
    pub graphs_scanned: u64,
    /// When set, some graphs could not be decided and `value` is a lower bound.
    pub budget_hit: bool,
}

/// Maximum of `h` over qualifying graphs of order `n`, with every maximiser
/// up to isomorphism.
pub fn extremal_value(
    n: usize,
    h: &TuranFunction,
    constraint: &ClassConstraint<'_>,
    limits: &Limits,
) -> Result<ExtremalResult> {
    let graphs = enumerate_graphs(n, limits)?;
    let scored: Vec<Option<Option<BigUint>>> = graphs
        .par_iter()
        .map(|g| match constraint.qualifies(g, limits) {
            None => None,
            Some(false) => Some(None),
            Some(true) => h.evaluate(g, limits).ok().map(Some),
        })
        .collect();
    SCANNED.fetch_add(graphs.len() as u64, Ordering::Relaxed);

    let budget_hit = scored.iter().any(Option::is_none);
    let value = scored.iter().flatten().flatten().max().cloned();
    let mut witnesses: Vec<String> = match &value {
        None => Vec::new(),
        Some(best) => graphs
            .iter()
            .zip(&scored)
            .filter(|(_, s)| matches!(s, Some(Some(v)) if v == best))
            .map(|(g, _)| g.to_graph6())
            .collect(),
    };
    witnesses.sort();
    Ok(ExtremalResult {
        n,
        value,
        witnesses,
        graphs_scanned: graphs.len() as u64,
        budget_hit,
    })
}
