//! The `verify` suites: each one replays a fixed list of desk-scale checks
//! and reports every assertion separately.

use std::time::{Duration, Instant};

use serde::Serialize;
use vat_core::counting::{binomial, closed_form_kab, closed_form_odd_cycle_blowup, count_copies_with};
use vat_core::enumeration::{enumerate_graphs, extremal_value, graphs_up_to, ClassConstraint, TuranFunction};
use vat_core::framework::{
    gamma_to_level, transfer_check, very_abstract_evidence, Builtin, Candidate, Membership, Partition, Verdict,
    Window,
};
use vat_core::graph::{balanced_blowup, blowup, construct, contains_subgraph_with, is_isomorphic};
use vat_core::params::{gamma_with, hom_exists_with, p_value};
use vat_core::rainbow::{
    admits_coloring_without_rainbow, find_rainbow_copy_with, greedy_rainbow_embed_bipartite,
    greedy_rainbow_embed_cycle_blowup, random_proper_coloring, EdgeColoring,
};
use vat_core::{BigUint, BlowupSpec, Error, Family, Graph, Limits};

use crate::config::Config;

pub const SUITES: [&str; 10] = [
    "counting",
    "homomorphism",
    "turan",
    "gerbner-patkos",
    "erdos-pentagon",
    "rainbow-threshold",
    "embedders",
    "evidence",
    "transfer",
    "formats",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    /// A search or time budget ran out.
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Assertion {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub assertions: Vec<Assertion>,
    pub passed: bool,
}

impl SuiteReport {
    pub fn budget_hit(&self) -> bool {
        self.assertions.iter().any(|a| a.status == Status::Inconclusive)
    }
}

struct Runner {
    limits: Limits,
    seed: u64,
    deadline: Instant,
    assertions: Vec<Assertion>,
    out_of_time: bool,
}

type Outcome = vat_core::Result<(bool, String)>;

impl Runner {
    fn check(&mut self, name: impl Into<String>, f: impl FnOnce(&Limits) -> Outcome) {
        let name = name.into();
        if self.out_of_time || Instant::now() > self.deadline {
            if !self.out_of_time {
                self.out_of_time = true;
                self.assertions.push(Assertion {
                    name,
                    status: Status::Inconclusive,
                    detail: "time budget exhausted; remaining assertions skipped".into(),
                });
            }
            return;
        }
        let (status, detail) = match f(&self.limits) {
            Ok((true, d)) => (Status::Pass, d),
            Ok((false, d)) => (Status::Fail, d),
            Err(e) if e.is_budget() => (Status::Inconclusive, e.to_string()),
            Err(e) => (Status::Fail, format!("error: {e}")),
        };
        self.assertions.push(Assertion { name, status, detail });
    }
}

fn graph(f: Family, p: &[i64]) -> Graph {
    construct(f, p).expect("fixed parameters are valid")
}

pub fn run_suite(name: &str, config: &Config) -> Result<SuiteReport, String> {
    let mut r = Runner {
        limits: config.limits(),
        seed: config.seed,
        deadline: Instant::now() + Duration::from_secs(config.time_budget_s),
        assertions: Vec::new(),
        out_of_time: false,
    };
    match name {
        "counting" => counting(&mut r),
        "homomorphism" => homomorphism(&mut r),
        "turan" => turan(&mut r),
        "gerbner-patkos" => gerbner_patkos(&mut r),
        "erdos-pentagon" => erdos_pentagon(&mut r),
        "rainbow-threshold" => rainbow_threshold(&mut r),
        "embedders" => embedders(&mut r),
        "evidence" => evidence(&mut r),
        "transfer" => transfer(&mut r),
        "formats" => formats(&mut r),
        _ => return Err(format!("unknown suite {name:?}; expected one of {} or all", SUITES.join(", "))),
    }
    let passed = r.assertions.iter().all(|a| a.status == Status::Pass);
    Ok(SuiteReport {
        suite: name.to_string(),
        assertions: r.assertions,
        passed,
    })
}

fn counting(r: &mut Runner) {
    for a in 1..=3u64 {
        for b in a..=3u64 {
            r.check(format!("closed form K_{{{a},{b}}} in K_{{s,t}}, s,t <= 5"), |l| {
                let pattern = graph(Family::CompleteBipartite, &[a as i64, b as i64]);
                let mut cases = 0;
                for s in 1..=5u64 {
                    for t in 1..=5u64 {
                        let host = graph(Family::CompleteBipartite, &[s as i64, t as i64]);
                        let brute = count_copies_with(&pattern, &host, l)?;
                        let closed = closed_form_kab(a, b, s, t)?;
                        // the swapped pattern is the same graph
                        let swapped = closed_form_kab(b, a, s, t)?;
                        if brute != closed || brute != swapped {
                            return Ok((false, format!("s={s} t={t}: search {brute}, closed form {closed}")));
                        }
                        cases += 2;
                    }
                }
                Ok((true, format!("{cases} cases")))
            });
        }
    }
}

fn homomorphism(r: &mut Runner) {
    let bases = [
        ("K_2", graph(Family::Complete, &[2])),
        ("K_3", graph(Family::Complete, &[3])),
        ("C_5", graph(Family::Cycle, &[5])),
        ("C_7", graph(Family::Cycle, &[7])),
    ];
    for (label, b) in bases {
        r.check(format!("hom into {label} iff contained in its blowup, order <= 6"), |l| {
            let mut homs = 0;
            let graphs = graphs_up_to(6, l)?;
            for f in graphs.iter().filter(|f| f.order() > 0) {
                let host = blowup(&BlowupSpec::new(b.clone(), vec![f.order(); b.order()])?);
                let hom = hom_exists_with(f, &b, l)?.is_some();
                let contained = contains_subgraph_with(&host, f, l)?.is_some();
                if hom != contained {
                    return Ok((false, format!("{f}: hom {hom}, containment {contained}")));
                }
                homs += hom as usize;
            }
            Ok((true, format!("{} graphs, {homs} map into {label}", graphs.len() - 1)))
        });
    }
}

fn turan(r: &mut Runner) {
    let k3 = [graph(Family::Complete, &[3])];
    for n in 3..=7usize {
        r.check(format!("ex({n}, K_3) = floor(n^2/4), witness T({n},2)"), |l| {
            let res = extremal_value(n, &TuranFunction::EdgeCount, &ClassConstraint::forbid(&k3), l)?;
            let expected = BigUint::from(n * n / 4);
            let t = graph(Family::Turan, &[n as i64, 2]);
            let witnesses_ok = !res.witnesses.is_empty()
                && res
                    .witnesses
                    .iter()
                    .all(|w| Graph::from_graph6(w).is_ok_and(|g| is_isomorphic(&g, &t)));
            let value = res.value.map_or("none".into(), |v| v.to_string());
            Ok((
                !res.budget_hit && value == expected.to_string() && witnesses_ok,
                format!("value {value}, witnesses {}", res.witnesses.join(",")),
            ))
        });
    }
}

fn gerbner_patkos(r: &mut Runner) {
    let forb = [graph(Family::CompleteBipartite, &[2, 2])];
    let star = TuranFunction::CopyCount(graph(Family::CompleteBipartite, &[1, 3]));
    for n in 5..=8usize {
        r.check(format!("ex({n}, K_{{1,3}}, K_{{2,2}}) >= C({}, 3)", n - 1), |l| {
            let res = extremal_value(n, &star, &ClassConstraint::forbid(&forb), l)?;
            let bound = binomial(n as u64 - 1, 3);
            let Some(value) = res.value else {
                return Ok((false, "no C_4-free graph".into()));
            };
            let ratio = ratio(&value, &bound);
            Ok((
                !res.budget_hit && value >= bound,
                format!("value {value}, bound {bound}, ratio {ratio}"),
            ))
        });
    }
}

fn ratio(a: &BigUint, b: &BigUint) -> String {
    let (a, b): (f64, f64) = (a.to_string().parse().unwrap_or(f64::NAN), b.to_string().parse().unwrap_or(f64::NAN));
    if b == 0.0 {
        "undefined".into()
    } else {
        format!("{:.6}", a / b)
    }
}

fn erdos_pentagon(r: &mut Runner) {
    r.check("ex(5, C_5, K_3) = 1, witness C_5", |l| {
        let c5 = graph(Family::Cycle, &[5]);
        let forb = [graph(Family::Complete, &[3])];
        let res = extremal_value(5, &TuranFunction::CopyCount(c5.clone()), &ClassConstraint::forbid(&forb), l)?;
        let ok = res.value == Some(BigUint::from(1u32))
            && res.witnesses.len() == 1
            && Graph::from_graph6(&res.witnesses[0]).is_ok_and(|g| is_isomorphic(&g, &c5));
        let value = res.value.map_or("none".into(), |v| v.to_string());
        Ok((ok, format!("value {value}, witnesses {}", res.witnesses.join(","))))
    });
    for (k, max_part) in [(1usize, 3usize), (2, 2)] {
        r.check(format!("closed form N(C_{0}, C_{0}<sizes>) matches search, parts <= {max_part}", 2 * k + 1), |l| {
            let base = graph(Family::Cycle, &[2 * k as i64 + 1]);
            let parts = 2 * k + 1;
            let mut cases = 0;
            let total = max_part.pow(parts as u32);
            for code in 0..total {
                let mut c = code;
                let sizes: Vec<usize> = (0..parts)
                    .map(|_| {
                        let s = c % max_part + 1;
                        c /= max_part;
                        s
                    })
                    .collect();
                let host = blowup(&BlowupSpec::new(base.clone(), sizes.clone())?);
                let brute = count_copies_with(&base, &host, l)?;
                let sizes64: Vec<u64> = sizes.iter().map(|&s| s as u64).collect();
                let closed = closed_form_odd_cycle_blowup(k, &sizes64)?;
                if brute != closed {
                    return Ok((false, format!("sizes {sizes:?}: search {brute}, closed form {closed}")));
                }
                cases += 1;
            }
            Ok((true, format!("{cases} part-size vectors")))
        });
    }
}

/// Smallest `m <= 11` such that every proper colouring of `K_{2,m}` has a
/// rainbow `C_4`, with a colouring of `K_{2,m-1}` that has none.
pub fn rainbow_threshold_witness(limits: &Limits) -> vat_core::Result<Option<(usize, EdgeColoring)>> {
    let c4 = graph(Family::Cycle, &[4]);
    let mut previous = None;
    for m in 1..=11usize {
        let host = graph(Family::CompleteBipartite, &[2, m as i64]);
        match admits_coloring_without_rainbow(&host, &c4, limits)? {
            Some(c) => previous = Some(c),
            None => return Ok(previous.map(|c| (m, c))),
        }
    }
    Ok(None)
}

fn rainbow_threshold(r: &mut Runner) {
    let k3 = graph(Family::Complete, &[3]);
    r.check("rainbow(K_3) forbids K_4", |l| {
        let k4 = graph(Family::Complete, &[4]);
        let member = admits_coloring_without_rainbow(&k4, &k3, l)?.is_some();
        Ok((!member, format!("member {member}")))
    });
    r.check("rainbow(K_3) allows every triangle-free graph of order <= 5", |l| {
        let mut count = 0;
        for g in graphs_up_to(5, l)? {
            if contains_subgraph_with(&g, &k3, l)?.is_some() {
                continue;
            }
            count += 1;
            if admits_coloring_without_rainbow(&g, &k3, l)?.is_none() {
                return Ok((false, format!("{g} not allowed")));
            }
        }
        Ok((true, format!("{count} triangle-free graphs")))
    });
    r.check("minimal m with every colouring of K_{2,m} rainbow-C_4 is <= 11", |l| {
        let c4 = graph(Family::Cycle, &[4]);
        Ok(match rainbow_threshold_witness(l)? {
            None => (false, "no threshold up to m = 11".into()),
            Some((m, witness)) => {
                let clean = witness.is_proper()
                    && witness.graph().order() == m + 1
                    && find_rainbow_copy_with(&witness, &c4, l)?.is_none();
                (
                    clean,
                    format!(
                        "m = {m}; K_{{2,{}}} colouring without rainbow C_4: {}",
                        m - 1,
                        witness.colors().iter().map(u32::to_string).collect::<Vec<_>>().join(",")
                    ),
                )
            }
        })
    });
}

fn embedders(r: &mut Runner) {
    let seed = r.seed;
    r.check("bipartite embedder: C_4 in 500 colourings of K_{2,9}", |_| {
        let host = graph(Family::CompleteBipartite, &[2, 9]);
        let c4 = graph(Family::Cycle, &[4]);
        let mut failures = Vec::new();
        for i in 0..500u64 {
            let s = seed.wrapping_add(i);
            let c = random_proper_coloring(&host, s);
            let ok = greedy_rainbow_embed_bipartite(&c, &c4)?.is_some_and(|copy| copy.verify(&c, &c4));
            if !ok {
                failures.push(s);
            }
        }
        Ok((failures.is_empty(), format!("500 seeds from {seed}, failures {failures:?}")))
    });
    r.check("cycle blowup embedder: C_3<3> in 100 colourings of C_3<81>", |_| {
        let spec = balanced_blowup(&graph(Family::Complete, &[3]), 81)?;
        let host = blowup(&spec);
        let mut failures = Vec::new();
        for i in 0..100u64 {
            let s = seed.wrapping_add(i);
            let c = random_proper_coloring(&host, s);
            let ok = greedy_rainbow_embed_cycle_blowup(&c, 1, spec.part_sizes(), 3)?
                .is_some_and(|(target, copy)| copy.verify(&c, &target));
            if !ok {
                failures.push(s);
            }
        }
        Ok((failures.is_empty(), format!("100 seeds from {seed}, failures {failures:?}")))
    });
}

fn report_detail(r: &vat_core::framework::EvidenceReport) -> String {
    let checks: Vec<String> = r
        .checks
        .iter()
        .map(|c| {
            format!(
                "{}: {:?} over {}{}",
                c.condition,
                c.status,
                c.instances,
                c.counterexample.as_ref().map_or(String::new(), |g| format!(" ({g})"))
            )
        })
        .collect();
    format!("k = {}, {:?}; {}", r.k, r.verdict, checks.join("; "))
}

fn c4_evidence(l: &Limits) -> vat_core::Result<(Partition, vat_core::framework::EvidenceReport)> {
    let c4 = graph(Family::Cycle, &[4]);
    let k = p_value(&c4)? as i64;
    let p = Partition::rainbow(c4).with_limits(*l);
    let report = very_abstract_evidence(&p, &Builtin::B1, &Builtin::B1, Candidate::Finite(k), Window { lo: 4, hi: 9 }, l)?;
    Ok((p, report))
}

fn evidence(r: &mut Runner) {
    r.check("rainbow(C_4) with B1: k = p(C_4) = 2 supported on n in 4..9", |l| {
        let (_, report) = c4_evidence(l)?;
        let mut ok = report.verdict == Verdict::Supported && report.k == Candidate::Finite(2);
        let mut detail = report_detail(&report);
        // the exclusion witness is the threshold graph of the rainbow-threshold suite
        if let Some((m, _)) = rainbow_threshold_witness(l)? {
            let threshold = graph(Family::CompleteBipartite, &[2, m as i64]);
            let excl = report.checks.get(1).and_then(|c| c.counterexample.as_deref());
            let same = excl.and_then(|g| Graph::from_graph6(g).ok()).is_some_and(|g| is_isomorphic(&g, &threshold));
            ok &= same;
            detail.push_str(&format!("; exclusion witness is K_{{2,{m}}}: {same}"));
        }
        Ok((ok, detail))
    });
    r.check("rainbow(K_3) with B2: level -(gamma(K_3) - 1) = -1 supported on n in 3..9", |l| {
        let k3 = graph(Family::Complete, &[3]);
        let k = gamma_to_level(gamma_with(&k3, l)?);
        let p = Partition::rainbow(k3).with_limits(*l);
        let report = very_abstract_evidence(&p, &Builtin::B2, &Builtin::B2, Candidate::Finite(k), Window { lo: 3, hi: 9 }, l)?;
        Ok((report.verdict == Verdict::Supported && k == -1, report_detail(&report)))
    });
}

fn transfer(r: &mut Runner) {
    r.check("transfer for rainbow(C_4), B1, h = N(K_{1,3}) on n in 5..7", |l| {
        let (p, ev) = c4_evidence(l)?;
        let h = TuranFunction::CopyCount(graph(Family::CompleteBipartite, &[1, 3]));
        let report = transfer_check(&p, &Builtin::B1, &h, &ev, Window { lo: 5, hi: 7 }, l)?;
        if report.entries.iter().any(|e| e.extremal.budget_hit || e.generator_allowed == Membership::Unknown) {
            return Err(Error::Budget {
                what: "rainbow membership",
                limit: l.node_budget,
            });
        }
        let mut ok = report.passed && report.entries.len() == 3;
        let mut parts = Vec::new();
        for e in &report.entries {
            let bound = binomial(e.n as u64 - 1, 3);
            ok &= e.h_generator.as_ref() == Some(&bound) && e.generator_allowed == Membership::Allowed;
            let g = e.extremal.value.clone().unwrap_or_default();
            parts.push(format!("n={}: g={g} >= C({},3)={bound}, ratio {}", e.n, e.n - 1, ratio(&g, &bound)));
        }
        Ok((ok, parts.join("; ")))
    });
}

fn formats(r: &mut Runner) {
    for n in 0..=6usize {
        r.check(format!("graph6 round trip, all graphs of order {n}"), |l| {
            let reps = enumerate_graphs(n, l)?;
            let pairs = n * n.saturating_sub(1) / 2;
            // every labelled graph as well as the class representatives
            let labelled = (0u64..1 << pairs).map(|mask| {
                let mut edges = Vec::new();
                let mut bit = 0;
                for v in 1..n {
                    for u in 0..v {
                        if mask >> bit & 1 == 1 {
                            edges.push((u, v));
                        }
                        bit += 1;
                    }
                }
                Graph::from_edges(n, &edges)
            });
            let mut count = 0;
            for g in reps.iter().cloned().map(Ok).chain(labelled) {
                let g = g?;
                let s = g.to_graph6();
                if Graph::from_graph6(&s).as_ref() != Ok(&g) {
                    return Ok((false, format!("{s} does not round-trip")));
                }
                count += 1;
            }
            Ok((true, format!("{} classes, {count} graphs", reps.len())))
        });
    }
}
