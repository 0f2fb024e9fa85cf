//! Decompositions, generator families, partitions, and the bounded-window
//! checks of the very abstract chromatic number machinery.
//!
//! Statements that hold "for all sufficiently large `n`" are replaced by an
//! explicit window of orders and a three-valued verdict, so every report is
//! finite evidence rather than a proof.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::{Serialize, Serializer};

use crate::enumeration::{extremal_value, graphs_up_to, ClassConstraint, ExtremalResult, TuranFunction};
use crate::graph::{balanced_blowup, blowup, canonicalize, construct, contains_subgraph_with, Family};
use crate::params::{bipartition, chromatic_number_with, gamma_with, hom_exists_with, p_value};
use crate::rainbow::admits_coloring_without_rainbow;
use crate::{Graph, Limits, Result};

/// Where a decomposition puts a graph: the discard family or a level.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Class {
    Discard,
    Level(i64),
}

/// Sends every graph to the discard family or to an integer level.
pub trait Decomposition: Send + Sync {
    fn name(&self) -> String;
    fn classify(&self, g: &Graph, limits: &Limits) -> Result<Class>;

    fn discard(&self, g: &Graph, limits: &Limits) -> Result<bool> {
        Ok(self.classify(g, limits)? == Class::Discard)
    }

    fn level(&self, g: &Graph, limits: &Limits) -> Result<Option<i64>> {
        Ok(match self.classify(g, limits)? {
            Class::Level(i) => Some(i),
            Class::Discard => None,
        })
    }
}

/// Chosen representatives `G_n(i)` of the levels.
pub trait GeneratorFamily: Send + Sync {
    fn name(&self) -> String;
    /// `G_n(level)`, or `None` where the family has no member of order `n`.
    fn generate(&self, n: usize, level: i64) -> Option<Graph>;
    /// Levels with a generator of order `n`, ascending.
    fn levels(&self, n: usize) -> Vec<i64>;
}

/// The two decompositions (with their generator families) used by the
/// worked examples.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Builtin {
    /// Bipartite graphs by `p(F)`; `G_n(i) = K_{i, n-i}`.
    B1,
    /// 3-chromatic graphs at level `-(γ(F) - 1)`;
    /// `G_n(-j)` is the balanced blowup `C_{2j+1}⟨n⟩`.
    B2,
}

pub fn builtin_decompositions() -> [Builtin; 2] {
    [Builtin::B1, Builtin::B2]
}

impl std::str::FromStr for Builtin {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "b1" | "B1" => Ok(Builtin::B1),
            "b2" | "B2" => Ok(Builtin::B2),
            _ => Err(crate::Error::param(format!("unknown decomposition {s:?}"))),
        }
    }
}

/// The one place where `γ` is translated into a `B2` level.
pub fn gamma_to_level(gamma: usize) -> i64 {
    -(gamma as i64 - 1)
}

/// `C_{2j+1}` for the `B2` level `-j`.
fn odd_cycle_for_level(level: i64) -> Option<Graph> {
    (level <= -1).then(|| construct(Family::Cycle, &[2 * (-level) + 1]).expect("valid cycle"))
}

impl Decomposition for Builtin {
    fn name(&self) -> String {
        match self {
            Builtin::B1 => "b1".into(),
            Builtin::B2 => "b2".into(),
        }
    }

    fn classify(&self, g: &Graph, limits: &Limits) -> Result<Class> {
        match self {
            Builtin::B1 => match bipartition(g) {
                Ok(_) => Ok(Class::Level(p_value(g)? as i64)),
                Err(_) => Ok(Class::Discard),
            },
            Builtin::B2 => {
                if chromatic_number_with(g, limits)? != 3 {
                    return Ok(Class::Discard);
                }
                Ok(Class::Level(gamma_to_level(gamma_with(g, limits)?)))
            }
        }
    }
}

impl GeneratorFamily for Builtin {
    fn name(&self) -> String {
        Decomposition::name(self)
    }

    fn generate(&self, n: usize, level: i64) -> Option<Graph> {
        match self {
            Builtin::B1 => {
                let i = usize::try_from(level).ok()?;
                (2 * i <= n).then(|| {
                    construct(Family::CompleteBipartite, &[i as i64, (n - i) as i64])
                        .expect("valid sizes")
                })
            }
            Builtin::B2 => {
                let base = odd_cycle_for_level(level)?;
                (n >= base.order()).then(|| blowup(&balanced_blowup(&base, n).expect("non-empty base")))
            }
        }
    }

    fn levels(&self, n: usize) -> Vec<i64> {
        match self {
            Builtin::B1 => (0..=(n / 2) as i64).collect(),
            Builtin::B2 => {
                let deepest = (n.saturating_sub(1) / 2) as i64;
                (1..=deepest).rev().map(|j| -j).collect()
            }
        }
    }
}

/// A blowup decomposition over an explicit finite list of base graphs:
/// a graph sits at the smallest level whose base admits a homomorphism from
/// it, and is discarded if no base does.
#[derive(Clone, Debug)]
pub struct BlowupDecomposition {
    pub name: String,
    bases: Vec<(i64, Graph)>,
}

impl BlowupDecomposition {
    pub fn new(name: impl Into<String>, mut bases: Vec<(i64, Graph)>) -> Self {
        bases.sort_by_key(|(level, _)| *level);
        BlowupDecomposition {
            name: name.into(),
            bases,
        }
    }

    pub fn bases(&self) -> &[(i64, Graph)] {
        &self.bases
    }
}

impl Decomposition for BlowupDecomposition {
    fn name(&self) -> String {
        self.name.clone()
    }

    fn classify(&self, g: &Graph, limits: &Limits) -> Result<Class> {
        for (level, base) in &self.bases {
            if hom_exists_with(g, base, limits)?.is_some() {
                return Ok(Class::Level(*level));
            }
        }
        Ok(Class::Discard)
    }
}

impl GeneratorFamily for BlowupDecomposition {
    fn name(&self) -> String {
        self.name.clone()
    }

    fn generate(&self, n: usize, level: i64) -> Option<Graph> {
        let (_, base) = self.bases.iter().find(|(l, _)| *l == level)?;
        (n >= base.order()).then(|| blowup(&balanced_blowup(base, n).expect("non-empty base")))
    }

    fn levels(&self, n: usize) -> Vec<i64> {
        self.bases
            .iter()
            .filter(|(_, b)| b.order() <= n && b.order() > 0)
            .map(|(l, _)| *l)
            .collect()
    }
}

/// Outcome of a partition membership query.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Membership {
    Allowed,
    Forbidden,
    /// A search budget ran out before membership was decided.
    Unknown,
}

type CustomPredicate = Arc<dyn Fn(&Graph, &Limits) -> Membership + Send + Sync>;

#[derive(Clone)]
pub enum PartitionKind {
    /// Allowed iff no forbidden pattern is a subgraph.
    Forbid(Vec<Graph>),
    /// Allowed iff some proper edge colouring has no rainbow copy.
    Rainbow(Graph),
    All,
    Custom(CustomPredicate),
}

impl fmt::Debug for PartitionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PartitionKind::Forbid(fs) => f.debug_tuple("Forbid").field(fs).finish(),
            PartitionKind::Rainbow(g) => f.debug_tuple("Rainbow").field(g).finish(),
            PartitionKind::All => f.write_str("All"),
            PartitionKind::Custom(_) => f.write_str("Custom(..)"),
        }
    }
}

/// A split of all graphs into allowed and forbidden ones. Membership is
/// memoised by canonical form.
pub struct Partition {
    name: String,
    kind: PartitionKind,
    monotone_claimed: bool,
    limits: Limits,
    memo: Mutex<HashMap<Graph, Membership>>,
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Partition")
            .field("name", &self.name)
            .field("kind", &self.kind)
            .field("monotone_claimed", &self.monotone_claimed)
            .finish()
    }
}

impl Partition {
    fn new(name: String, kind: PartitionKind, monotone_claimed: bool) -> Self {
        Partition {
            name,
            kind,
            monotone_claimed,
            limits: Limits::default(),
            memo: Mutex::new(HashMap::new()),
        }
    }

    pub fn forbid(f: Graph) -> Self {
        Partition::new(format!("forbid:{f}"), PartitionKind::Forbid(vec![f]), true)
    }

    pub fn rainbow(f: Graph) -> Self {
        Partition::new(format!("rainbow:{f}"), PartitionKind::Rainbow(f), true)
    }

    pub fn all() -> Self {
        Partition::new("all".into(), PartitionKind::All, true)
    }

    pub fn custom(
        name: impl Into<String>,
        monotone_claimed: bool,
        predicate: impl Fn(&Graph, &Limits) -> Membership + Send + Sync + 'static,
    ) -> Self {
        Partition::new(name.into(), PartitionKind::Custom(Arc::new(predicate)), monotone_claimed)
    }

    /// Replaces the search limits; clears the memo.
    pub fn with_limits(mut self, limits: Limits) -> Self {
        self.limits = limits;
        self.memo = Mutex::new(HashMap::new());
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> &PartitionKind {
        &self.kind
    }

    pub fn monotone_claimed(&self) -> bool {
        self.monotone_claimed
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    /// Number of memoised isomorphism classes.
    pub fn memo_len(&self) -> usize {
        self.memo.lock().expect("memo poisoned").len()
    }

    pub fn allowed(&self, g: &Graph) -> Membership {
        if let PartitionKind::All = self.kind {
            return Membership::Allowed;
        }
        let key = canonicalize(g);
        if let Some(&m) = self.memo.lock().expect("memo poisoned").get(&key) {
            return m;
        }
        let m = self.decide(&key);
        *self
            .memo
            .lock()
            .expect("memo poisoned")
            .entry(key)
            .or_insert(m)
    }

    fn decide(&self, g: &Graph) -> Membership {
        let limits = &self.limits;
        match &self.kind {
            PartitionKind::All => Membership::Allowed,
            PartitionKind::Forbid(fs) => {
                for f in fs {
                    match contains_subgraph_with(g, f, limits) {
                        Ok(Some(_)) => return Membership::Forbidden,
                        Ok(None) => {}
                        Err(_) => return Membership::Unknown,
                    }
                }
                Membership::Allowed
            }
            PartitionKind::Rainbow(f) => match admits_coloring_without_rainbow(g, f, limits) {
                Ok(Some(_)) => Membership::Allowed,
                Ok(None) => Membership::Forbidden,
                Err(_) => Membership::Unknown,
            },
            PartitionKind::Custom(pred) => pred(g, limits),
        }
    }
}

impl std::str::FromStr for Partition {
    type Err = crate::Error;

    /// `all`, `forbid:<graph6>` or `rainbow:<graph6>`.
    fn from_str(s: &str) -> Result<Self> {
        if s == "all" {
            Ok(Partition::all())
        } else if let Some(g6) = s.strip_prefix("forbid:") {
            Ok(Partition::forbid(Graph::from_graph6(g6)?))
        } else if let Some(g6) = s.strip_prefix("rainbow:") {
            Ok(Partition::rainbow(Graph::from_graph6(g6)?))
        } else {
            Err(crate::Error::param(format!("unknown partition {s:?}")))
        }
    }
}

/// `forbid(f)`, `rainbow(f)` and `all`.
pub fn builtin_partitions(f: &Graph) -> [Partition; 3] {
    [
        Partition::forbid(f.clone()),
        Partition::rainbow(f.clone()),
        Partition::all(),
    ]
}

/// A finite level or `∞`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Candidate {
    Finite(i64),
    Infinite,
}

impl fmt::Display for Candidate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Candidate::Finite(k) => write!(f, "{k}"),
            Candidate::Infinite => f.write_str("inf"),
        }
    }
}

impl std::str::FromStr for Candidate {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "inf" | "infinity" | "∞" => Ok(Candidate::Infinite),
            _ => s
                .parse()
                .map(Candidate::Finite)
                .map_err(|_| crate::Error::param(format!("bad level {s:?}"))),
        }
    }
}

impl Serialize for Candidate {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Candidate::Finite(k) => s.serialize_i64(*k),
            Candidate::Infinite => s.serialize_str("inf"),
        }
    }
}

/// Inclusive range of orders standing in for "sufficiently large `n`".
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Window {
    pub lo: usize,
    pub hi: usize,
}

impl Window {
    pub fn new(lo: usize, hi: usize) -> Result<Self> {
        if lo > hi {
            return Err(crate::Error::param(format!("empty window {lo}:{hi}")));
        }
        Ok(Window { lo, hi })
    }

    pub fn orders(&self) -> std::ops::RangeInclusive<usize> {
        self.lo..=self.hi
    }
}

impl std::str::FromStr for Window {
    type Err = crate::Error;

    /// `lo:hi`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || crate::Error::param(format!("bad window {s:?}, expected lo:hi"));
        let (lo, hi) = s.split_once(':').ok_or_else(bad)?;
        Window::new(lo.parse().map_err(|_| bad())?, hi.parse().map_err(|_| bad())?)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Fail,
    /// Some instance could not be decided within budget.
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub condition: String,
    pub instances: u64,
    pub status: CheckStatus,
    /// graph6 of the offending (or, for exclusion, the witnessing) graph.
    pub counterexample: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Supported,
    Refuted,
    InconclusiveBudget,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EvidenceReport {
    pub partition: String,
    pub decomposition: String,
    pub k: Candidate,
    pub window: Window,
    pub checks: Vec<Check>,
    pub verdict: Verdict,
}

fn verdict_of(checks: &[Check]) -> Verdict {
    if checks.iter().any(|c| c.status == CheckStatus::Fail) {
        Verdict::Refuted
    } else if checks
        .iter()
        .any(|c| c.status == CheckStatus::Inconclusive || c.instances == 0)
    {
        Verdict::InconclusiveBudget
    } else {
        Verdict::Supported
    }
}

/// Largest order of the enumerated sample used for the monotonicity check.
pub const MONOTONE_SAMPLE_ORDER: usize = 5;

/// Checks that every allowed graph of order at most `max_order` keeps all
/// its single-edge and single-vertex deletions allowed.
pub fn monotonicity_check(p: &Partition, max_order: usize, limits: &Limits) -> Result<Check> {
    let mut instances = 0;
    let mut status = CheckStatus::Pass;
    let mut counterexample = None;
    'graphs: for g in graphs_up_to(max_order, limits)? {
        match p.allowed(&g) {
            Membership::Allowed => {}
            Membership::Forbidden => continue,
            Membership::Unknown => {
                status = CheckStatus::Inconclusive;
                continue;
            }
        }
        let subs = g
            .edges()
            .into_iter()
            .map(|(u, v)| g.without_edge(u, v))
            .chain((0..g.order()).map(|v| g.without_vertex(v)));
        for sub in subs {
            instances += 1;
            match p.allowed(&sub) {
                Membership::Allowed => {}
                Membership::Forbidden => {
                    status = CheckStatus::Fail;
                    counterexample = Some(g.to_graph6());
                    break 'graphs;
                }
                Membership::Unknown => status = CheckStatus::Inconclusive,
            }
        }
    }
    Ok(Check {
        condition: format!("monotone on allowed graphs of order <= {max_order}"),
        instances,
        status,
        counterexample,
    })
}

/// Bounded-window evidence that `k` is the very abstract chromatic number
/// of `p` with respect to `(d, gf)`.
///
/// For finite `k`: every generator below level `k` in the window is
/// allowed, some `G_m(k)` in the window is not, and `p` is monotone on a
/// small enumerated sample (so no allowed graph contains that `G_m(k)`).
/// For `k = ∞`: every generator in the window is allowed.
pub fn very_abstract_evidence(
    p: &Partition,
    d: &dyn Decomposition,
    gf: &dyn GeneratorFamily,
    k: Candidate,
    window: Window,
    limits: &Limits,
) -> Result<EvidenceReport> {
    let mut checks = Vec::new();

    let mut gen_check = Check {
        condition: match k {
            Candidate::Finite(k) => format!("G_n(i) allowed for all i < {k}"),
            Candidate::Infinite => "G_n(i) allowed for all levels".into(),
        },
        instances: 0,
        status: CheckStatus::Pass,
        counterexample: None,
    };
    'orders: for n in window.orders() {
        for level in gf.levels(n) {
            if matches!(k, Candidate::Finite(k) if level >= k) {
                continue;
            }
            let Some(g) = gf.generate(n, level) else { continue };
            gen_check.instances += 1;
            match p.allowed(&g) {
                Membership::Allowed => {}
                Membership::Forbidden => {
                    gen_check.status = CheckStatus::Fail;
                    gen_check.counterexample = Some(g.to_graph6());
                    break 'orders;
                }
                Membership::Unknown => gen_check.status = CheckStatus::Inconclusive,
            }
        }
    }
    checks.push(gen_check);

    if let Candidate::Finite(k) = k {
        let mut excl = Check {
            condition: format!("some G_m({k}) in window is not allowed"),
            instances: 0,
            status: CheckStatus::Fail,
            counterexample: None,
        };
        let mut unknown = false;
        for m in window.orders() {
            let Some(g) = gf.generate(m, k) else { continue };
            excl.instances += 1;
            match p.allowed(&g) {
                Membership::Forbidden => {
                    excl.status = CheckStatus::Pass;
                    excl.counterexample = Some(g.to_graph6());
                    break;
                }
                Membership::Allowed => {}
                Membership::Unknown => unknown = true,
            }
        }
        if excl.status == CheckStatus::Fail && unknown {
            excl.status = CheckStatus::Inconclusive;
        }
        checks.push(excl);
        checks.push(monotonicity_check(p, MONOTONE_SAMPLE_ORDER, limits)?);
    }

    let verdict = verdict_of(&checks);
    Ok(EvidenceReport {
        partition: p.name().to_string(),
        decomposition: d.name(),
        k,
        window,
        checks,
        verdict,
    })
}

/// Scans the levels of `gf` upwards and returns the first one whose
/// generators leave the partition inside the window (or `∞`), together with
/// the evidence report for that candidate.
pub fn find_very_abstract_number(
    p: &Partition,
    d: &dyn Decomposition,
    gf: &dyn GeneratorFamily,
    window: Window,
    limits: &Limits,
) -> Result<EvidenceReport> {
    let mut levels: Vec<i64> = window.orders().flat_map(|n| gf.levels(n)).collect();
    levels.sort_unstable();
    levels.dedup();
    for level in levels {
        let excluded = window.orders().any(|m| {
            gf.generate(m, level)
                .is_some_and(|g| p.allowed(&g) == Membership::Forbidden)
        });
        if excluded {
            return very_abstract_evidence(p, d, gf, Candidate::Finite(level), window, limits);
        }
    }
    very_abstract_evidence(p, d, gf, Candidate::Infinite, window, limits)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LemmaStatus {
    Pass,
    Fail,
    /// Not contained at this `n`, but the hypothesis only asks for large
    /// `n`: either a larger tested `n` contains it, or `n` is the largest
    /// tested order and `i < k`.
    BelowThreshold,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaPair {
    pub i: i64,
    pub k: i64,
    pub m: usize,
    pub n: usize,
    pub status: LemmaStatus,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaReport {
    pub family: String,
    pub pairs: Vec<LemmaPair>,
    /// (i, k, m, n) tuples where `G_n(k)` fails to contain `G_m(i)`.
    pub failures: Vec<LemmaPair>,
    pub passed: bool,
}

/// Checks `G_m(i) ⊆ G_n(k)` for every `i ≤ k` in `levels` and `m ≤ n` in
/// `orders` where both generators exist.
///
/// Containment is only required for `n` large enough, so a miss counts as a
/// failure only when no larger tested `n` repairs it, and a miss with
/// `i < k` at the largest tested order is left undecided.
pub fn lemma_containment_check(
    gf: &dyn GeneratorFamily,
    levels: &[i64],
    orders: &[usize],
    limits: &Limits,
) -> LemmaReport {
    let mut orders = orders.to_vec();
    orders.sort_unstable();
    orders.dedup();
    let mut levels = levels.to_vec();
    levels.sort_unstable();
    levels.dedup();
    let Some(&largest) = orders.last() else {
        return LemmaReport {
            family: gf.name(),
            pairs: Vec::new(),
            failures: Vec::new(),
            passed: true,
        };
    };

    let mut pairs = Vec::new();
    for &k in &levels {
        for &i in levels.iter().filter(|&&i| i <= k) {
            for &m in &orders {
                let Some(small) = gf.generate(m, i) else { continue };
                let start = pairs.len();
                let mut repaired = false;
                // largest n first, so a later pass is known while walking down
                for &n in orders.iter().rev().filter(|&&n| n >= m) {
                    let Some(big) = gf.generate(n, k) else { continue };
                    let status = match contains_subgraph_with(&big, &small, limits) {
                        Ok(Some(_)) => {
                            repaired = true;
                            LemmaStatus::Pass
                        }
                        Ok(None) if repaired || (n == largest && i < k) => LemmaStatus::BelowThreshold,
                        Ok(None) => LemmaStatus::Fail,
                        Err(_) => LemmaStatus::Inconclusive,
                    };
                    pairs.push(LemmaPair { i, k, m, n, status });
                }
                pairs[start..].reverse();
            }
        }
    }
    let failures: Vec<LemmaPair> = pairs
        .iter()
        .filter(|p| p.status == LemmaStatus::Fail)
        .cloned()
        .collect();
    // an undecided search at the largest order with i < k could not count either way
    let passed = failures.is_empty()
        && pairs
            .iter()
            .all(|p| p.status != LemmaStatus::Inconclusive || (p.n == largest && p.i < p.k));
    LemmaReport {
        family: gf.name(),
        pairs,
        failures,
        passed,
    }
}

fn ratio(num: &BigUint, den: &BigUint) -> Option<f64> {
    if den == &BigUint::default() {
        return None;
    }
    Some(num.to_f64()? / den.to_f64()?)
}

fn big_opt<S: Serializer>(v: &Option<BigUint>, s: S) -> std::result::Result<S::Ok, S::Error> {
    crate::enumeration::big_serde::serialize(v, s)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NicenessMode {
    /// Assert `g_B(n, F) = h(G_n(k-1))`.
    Exact,
    /// Record `g_B(n, F) / h(G_n(k-1))`.
    Ratio,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EntryStatus {
    Pass,
    Fail,
    /// Ratio mode: value recorded, nothing asserted.
    Recorded,
    /// `g` undefined (no qualifying host) or no generator at this order.
    Degenerate,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NicenessEntry {
    pub f: String,
    pub n: usize,
    #[serde(serialize_with = "big_opt")]
    pub g: Option<BigUint>,
    #[serde(serialize_with = "big_opt")]
    pub h_generator: Option<BigUint>,
    pub ratio: Option<f64>,
    pub status: EntryStatus,
    pub witnesses: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NicenessReport {
    pub decomposition: String,
    pub h: TuranFunction,
    pub k: i64,
    pub mode: NicenessMode,
    pub window: Window,
    pub entries: Vec<NicenessEntry>,
    pub passed: bool,
}

/// Which members `F` of level `k` a niceness check runs over.
#[derive(Clone, Debug)]
pub enum Members {
    /// Every graph of order `1..=max_order` that classifies to level `k`.
    UpTo(usize),
    /// An explicit list; graphs outside level `k` are rejected.
    Given(Vec<Graph>),
}

/// Compares `g_B(n, F)` (hosts outside the discard family, `F`-free) with
/// `h(G_n(k-1))` for small members `F` of level `k`.
#[allow(clippy::too_many_arguments)]
pub fn niceness_check(
    d: &dyn Decomposition,
    gf: &dyn GeneratorFamily,
    h: &TuranFunction,
    k: i64,
    window: Window,
    mode: NicenessMode,
    members: &Members,
    limits: &Limits,
) -> Result<NicenessReport> {
    let candidates = match members {
        Members::UpTo(max) => graphs_up_to(*max, limits)?,
        Members::Given(list) => list.clone(),
    };
    let mut fs = Vec::new();
    for f in candidates {
        match d.classify(&f, limits)? {
            Class::Level(l) if l == k => fs.push(f),
            other => {
                if let Members::Given(_) = members {
                    return Err(crate::Error::param(format!(
                        "{f} is classified as {other:?}, not level {k}"
                    )));
                }
            }
        }
    }

    let mut entries = Vec::new();
    for f in &fs {
        for n in window.orders() {
            let forbidden = [f.clone()];
            let constraint = ClassConstraint {
                forbidden: &forbidden,
                membership: None,
                discard: Some(d),
            };
            let res = extremal_value(n, h, &constraint, limits)?;
            let h_gen = gf
                .generate(n, k - 1)
                .map(|g| h.evaluate(&g, limits))
                .transpose()?;
            let status = match (&res.value, &h_gen) {
                _ if res.budget_hit => EntryStatus::Inconclusive,
                (None, _) | (_, None) => EntryStatus::Degenerate,
                (Some(g), Some(hv)) => match mode {
                    NicenessMode::Exact if g == hv => EntryStatus::Pass,
                    NicenessMode::Exact => EntryStatus::Fail,
                    NicenessMode::Ratio => EntryStatus::Recorded,
                },
            };
            let r = match (&res.value, &h_gen) {
                (Some(g), Some(hv)) => ratio(g, hv),
                _ => None,
            };
            entries.push(NicenessEntry {
                f: f.to_graph6(),
                n,
                g: res.value,
                h_generator: h_gen,
                ratio: r,
                status,
                witnesses: res.witnesses,
            });
        }
    }
    let passed = entries
        .iter()
        .all(|e| !matches!(e.status, EntryStatus::Fail | EntryStatus::Inconclusive));
    Ok(NicenessReport {
        decomposition: d.name(),
        h: h.clone(),
        k,
        mode,
        window,
        entries,
        passed,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TransferEntry {
    pub n: usize,
    pub generator: Option<String>,
    pub generator_allowed: Membership,
    #[serde(serialize_with = "big_opt")]
    pub h_generator: Option<BigUint>,
    pub extremal: ExtremalResult,
    pub lower_bound_holds: bool,
    pub ratio: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TransferReport {
    pub partition: String,
    pub decomposition: String,
    pub h: TuranFunction,
    pub k: Candidate,
    pub window: Window,
    /// Why nothing was checked (`k = ∞`, or evidence not supported).
    pub skipped: Option<String>,
    pub entries: Vec<TransferEntry>,
    pub passed: bool,
}

/// For each `n` in the window, computes `g(n, (A, F))` over the allowed
/// graphs and checks the lower bound `g ≥ h(G_n(k-1))` together with
/// `G_n(k-1) ∈ A`.
pub fn transfer_check(
    p: &Partition,
    gf: &dyn GeneratorFamily,
    h: &TuranFunction,
    evidence: &EvidenceReport,
    window: Window,
    limits: &Limits,
) -> Result<TransferReport> {
    let mut report = TransferReport {
        partition: p.name().to_string(),
        decomposition: evidence.decomposition.clone(),
        h: h.clone(),
        k: evidence.k,
        window,
        skipped: None,
        entries: Vec::new(),
        passed: true,
    };
    if evidence.partition != p.name() {
        return Err(crate::Error::param("evidence belongs to a different partition"));
    }
    let k = match (evidence.k, evidence.verdict) {
        (Candidate::Infinite, _) => {
            report.skipped = Some("very abstract chromatic number is inf; nothing to transfer".into());
            return Ok(report);
        }
        (Candidate::Finite(_), v) if v != Verdict::Supported => {
            report.skipped = Some(format!("evidence verdict is {v:?}"));
            report.passed = false;
            return Ok(report);
        }
        (Candidate::Finite(k), _) => k,
    };

    for n in window.orders() {
        let generator = gf.generate(n, k - 1);
        let generator_allowed = generator.as_ref().map_or(Membership::Unknown, |g| p.allowed(g));
        let h_gen = generator.as_ref().map(|g| h.evaluate(g, limits)).transpose()?;
        let constraint = ClassConstraint {
            forbidden: &[],
            membership: Some(p),
            discard: None,
        };
        let extremal = extremal_value(n, h, &constraint, limits)?;
        let lower_bound_holds = generator_allowed == Membership::Allowed
            && matches!((&extremal.value, &h_gen), (Some(g), Some(hv)) if g >= hv);
        let r = match (&extremal.value, &h_gen) {
            (Some(g), Some(hv)) => ratio(g, hv),
            _ => None,
        };
        report.passed &= lower_bound_holds;
        report.entries.push(TransferEntry {
            n,
            generator: generator.map(|g| g.to_graph6()),
            generator_allowed,
            h_generator: h_gen,
            extremal,
            lower_bound_holds,
            ratio: r,
        });
    }
    Ok(report)
}
