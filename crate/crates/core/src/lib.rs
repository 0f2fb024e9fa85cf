//! Exact, desk-scale machinery for Turán-type problems over blowup
//! decompositions.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`]: the [`Graph`] type, standard constructors, blowups,
//!   subgraph containment, canonical labelling and graph6 I/O.
//! * [`params`]: chromatic number, the bipartite parameter `p(F)`,
//!   homomorphism search, the odd-cycle parameter `γ(F)` and odd girth.
//! * [`counting`]: exact subgraph-copy counts `N(H, G)` and the closed forms
//!   for complete bipartite and odd-cycle-blowup hosts.
//! * [`enumeration`]: isomorph-free generation of all graphs of a given
//!   order and brute-force maximisation of Turán-type functions.
//! * [`rainbow`]: proper edge colourings, rainbow copies, rainbow partition
//!   membership and the two greedy rainbow embedders.
//! * [`framework`]: decompositions, generator families, partitions and the
//!   bounded-window evidence / niceness / transfer checks.
//!
//! Every exhaustive search runs under a [`Limits`] budget and reports
//! exhaustion explicitly instead of returning a guess.

pub mod counting;
pub mod enumeration;
mod error;
pub mod framework;
pub mod graph;
pub mod params;
pub mod rainbow;

pub use crate::error::{Error, Result};
pub use crate::graph::{BlowupSpec, Embedding, Family, Graph};

pub use num_bigint::BigUint;

/// Search budgets shared by every exhaustive routine.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of backtracking nodes a single search may visit.
    pub node_budget: u64,
    /// Largest edge count for which proper colourings are enumerated.
    pub edge_budget: usize,
    /// Largest order handed to the graph enumerator.
    pub max_n: usize,
    /// Largest order for which the chromatic number is computed.
    pub chromatic_order: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            node_budget: 100_000_000,
            edge_budget: 24,
            max_n: 8,
            chromatic_order: 10,
        }
    }
}

/// Counts backtracking nodes against [`Limits::node_budget`].
#[derive(Debug)]
pub(crate) struct Budget {
    what: &'static str,
    limit: u64,
    used: u64,
}

impl Budget {
    pub(crate) fn new(what: &'static str, limit: u64) -> Self {
        Budget {
            what,
            limit,
            used: 0,
        }
    }

    #[inline]
    pub(crate) fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.limit {
            Err(Error::Budget {
                what: self.what,
                limit: self.limit,
            })
        } else {
            Ok(())
        }
    }
}
