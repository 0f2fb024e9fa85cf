use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{ArgGroup, Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};
use vat_core::counting::count_copies_with;
use vat_core::enumeration::{extremal_value, ClassConstraint, TuranFunction};
use vat_core::framework::{
    find_very_abstract_number, niceness_check, transfer_check, very_abstract_evidence, Builtin, Candidate,
    CheckStatus, EntryStatus, EvidenceReport, Members, Membership, NicenessMode, Partition, Verdict, Window,
};
use vat_core::graph::{balanced_blowup, blowup, construct};
use vat_core::params::{chromatic_number_with, gamma_with, odd_girth, p_value};
use vat_core::rainbow::{
    admits_coloring_without_rainbow, find_rainbow_copy_with, greedy_rainbow_embed_bipartite,
    greedy_rainbow_embed_cycle_blowup, random_proper_coloring, recognize_blowup, EdgeColoring,
};
use vat_core::{BigUint, Error, Family, Graph, Limits};

use crate::cache::{digest, Cache};
use crate::config::Config;
use crate::exit;
use crate::render;
use crate::suites::{run_suite, Status, SuiteReport, SUITES};

#[derive(Parser, Debug)]
#[command(name = "vat", version, about = "Exact small-graph checks for generalized Turán problems")]
pub struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// Print JSON instead of TSV.
    #[arg(long, global = true)]
    json: bool,
    /// Config file (`key = value` lines); overrides $VAT_CONFIG.
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,
    /// Largest order enumerated exhaustively (at most 10).
    #[arg(long, global = true)]
    max_n: Option<usize>,
    /// Largest edge count for exhaustive colouring searches.
    #[arg(long, global = true)]
    edge_budget: Option<usize>,
    /// Search-tree node limit per backtracking search.
    #[arg(long, global = true)]
    node_budget: Option<u64>,
    /// Wall-clock limit for `verify`, in seconds.
    #[arg(long, global = true)]
    time_budget_s: Option<u64>,
    /// Seed for random colourings.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// JSON-lines result cache.
    #[arg(long, global = true, value_name = "PATH")]
    cache_path: Option<PathBuf>,
    /// Neither read nor write the result cache.
    #[arg(long, global = true)]
    no_cache: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Graph parameters: chromatic number, p, gamma, odd girth.
    Param(ParamArgs),
    /// Number of copies of a pattern in a host.
    Count(CountArgs),
    /// Construct a named graph or a balanced blowup.
    Gen(GenArgs),
    /// Brute-force maximum of a Turán-type function over all graphs of order n.
    Extremal(ExtremalArgs),
    /// Proper edge colourings and rainbow copies.
    Rainbow(RainbowArgs),
    /// Decomposition evidence, niceness and transfer checks.
    Framework(FrameworkArgs),
    /// Run an acceptance suite.
    Verify(VerifyArgs),
}

#[derive(Args, Debug, Serialize)]
#[command(group(ArgGroup::new("which").required(true).multiple(true).args(["chi", "p", "gamma", "odd_girth", "all"])))]
struct ParamArgs {
    #[arg(long)]
    graph: String,
    #[arg(long)]
    chi: bool,
    #[arg(long)]
    p: bool,
    #[arg(long)]
    gamma: bool,
    #[arg(long)]
    odd_girth: bool,
    #[arg(long)]
    all: bool,
}

#[derive(Args, Debug, Serialize)]
struct CountArgs {
    #[arg(long)]
    pattern: String,
    #[arg(long)]
    host: String,
}

#[derive(Args, Debug, Serialize)]
#[command(group(ArgGroup::new("base").required(true).args(["family", "blowup_of"])))]
struct GenArgs {
    #[arg(long, requires = "params")]
    family: Option<String>,
    /// Comma-separated integers.
    #[arg(long, allow_hyphen_values = true)]
    params: Option<String>,
    #[arg(long, value_name = "G6", conflicts_with = "family", requires = "n")]
    blowup_of: Option<String>,
    /// Order of the balanced blowup of the base graph.
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Args, Debug, Serialize)]
struct ExtremalArgs {
    #[arg(long)]
    n: usize,
    /// `edges` or `count:<g6>`.
    #[arg(long)]
    h: String,
    #[arg(long, value_name = "G6")]
    forbid: Vec<String>,
    /// `forbid:<g6>`, `rainbow:<g6>` or `all`.
    #[arg(long)]
    partition: Option<String>,
    /// Drop hosts in the discard family of `b1` or `b2`.
    #[arg(long)]
    discard: Option<String>,
}

#[derive(Args, Debug, Serialize)]
#[command(group(ArgGroup::new("mode").required(true).args(["member", "find_rainbow", "embed_bipartite", "embed_blowup"])))]
struct RainbowArgs {
    #[arg(long)]
    graph: String,
    #[arg(long)]
    pattern: String,
    /// Is there a proper colouring of the graph without a rainbow pattern?
    #[arg(long)]
    member: bool,
    /// Search a colouring for a rainbow copy.
    #[arg(long)]
    find_rainbow: bool,
    /// Greedily embed a rainbow copy of a bipartite pattern.
    #[arg(long)]
    embed_bipartite: bool,
    /// Greedily embed a rainbow balanced blowup of the pattern.
    #[arg(long, requires = "m")]
    embed_blowup: bool,
    /// Order of the balanced blowup of the pattern to embed.
    #[arg(long)]
    m: Option<usize>,
    /// Colour of each edge in lexicographic edge order; defaults to a
    /// seeded random proper colouring.
    #[arg(long)]
    colors: Option<String>,
}

#[derive(Args, Debug, Serialize)]
#[command(group(ArgGroup::new("check").required(true).args(["evidence", "niceness", "transfer"])))]
struct FrameworkArgs {
    /// Test a candidate level against the partition.
    #[arg(long)]
    evidence: bool,
    /// Compare extremal values with the generator at level `k - 1`.
    #[arg(long)]
    niceness: bool,
    /// Evidence for the partition, then niceness for `h` at that level.
    #[arg(long)]
    transfer: bool,
    /// `b1` or `b2`.
    #[arg(long)]
    decomp: String,
    /// `all`, `forbid:<g6>` or `rainbow:<g6>`.
    #[arg(long)]
    partition: Option<String>,
    /// Target graph (graph6) whose copies are counted.
    #[arg(long)]
    h: Option<String>,
    /// `lo:hi`.
    #[arg(long)]
    window: String,
    /// Candidate level (an integer or `inf`); searched for when omitted.
    #[arg(long, allow_hyphen_values = true)]
    k: Option<String>,
    /// Window for the evidence step of `--transfer`; defaults to `--window`.
    #[arg(long)]
    evidence_window: Option<String>,
    /// `exact` or `ratio`.
    #[arg(long, default_value = "exact")]
    mode: String,
    /// Members of the level for `--niceness`; defaults to all graphs of
    /// order at most `--members-max-order` at that level.
    #[arg(long, value_name = "G6")]
    member: Vec<String>,
    #[arg(long, default_value_t = 5)]
    members_max_order: usize,
}

#[derive(Args, Debug, Serialize)]
struct VerifyArgs {
    #[arg(long)]
    suite: String,
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Param(_) => "param",
            Command::Count(_) => "count",
            Command::Gen(_) => "gen",
            Command::Extremal(_) => "extremal",
            Command::Rainbow(_) => "rainbow",
            Command::Framework(_) => "framework",
            Command::Verify(_) => "verify",
        }
    }

    fn params(&self) -> Value {
        let v = match self {
            Command::Param(a) => serde_json::to_value(a),
            Command::Count(a) => serde_json::to_value(a),
            Command::Gen(a) => serde_json::to_value(a),
            Command::Extremal(a) => serde_json::to_value(a),
            Command::Rainbow(a) => serde_json::to_value(a),
            Command::Framework(a) => serde_json::to_value(a),
            Command::Verify(a) => serde_json::to_value(a),
        };
        v.expect("arguments serialise")
    }
}

enum Failure {
    Usage(String),
    Budget(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_budget() {
            Failure::Budget(e.to_string())
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

type CmdResult = Result<(i32, Value), Failure>;

fn parse_graph(flag: &str, s: &str) -> Result<Graph, Failure> {
    Graph::from_graph6(s).map_err(|e| Failure::Usage(format!("--{flag}: {e}")))
}

fn big(v: &BigUint) -> Value {
    match u64::try_from(v) {
        Ok(x) => json!(x),
        Err(_) => json!(v.to_string()),
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("reports serialise")
}

/// Runs the command line and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{text}");
                exit::OK
            } else {
                let _ = write!(err, "{text}");
                exit::USAGE
            };
        }
    };

    let config = match build_config(&cli.global) {
        Ok(c) => c,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            return exit::USAGE;
        }
    };

    let name = cli.command.name();
    let params = json!({
        "args": cli.command.params(),
        "max_n": config.max_n,
        "edge_budget": config.edge_budget,
        "node_budget": config.node_budget,
        "seed": config.seed,
    });
    let cache = (!cli.global.no_cache).then(|| Cache::new(&config.cache_path));
    let key = digest(name, &params);

    let cached = match &cache {
        Some(c) => match c.lookup(&key) {
            Ok(hit) => hit,
            Err(e) => {
                let _ = writeln!(err, "warning: cannot read cache {}: {e}", c.path().display());
                None
            }
        },
        None => None,
    };

    let (code, body) = match cached {
        Some(record) => (record.exit_code, record.result),
        None => match execute(&cli.command, &config) {
            Ok((code, body)) => {
                if code != exit::BUDGET {
                    if let Some(c) = &cache {
                        if let Err(e) = c.append(name, params, code, body.clone()) {
                            let _ = writeln!(err, "warning: cannot write cache {}: {e}", c.path().display());
                        }
                    }
                }
                (code, body)
            }
            Err(Failure::Usage(msg)) => {
                let _ = writeln!(err, "error: {msg}");
                return exit::USAGE;
            }
            Err(Failure::Budget(msg)) => {
                let _ = writeln!(err, "budget exhausted: {msg}");
                return exit::BUDGET;
            }
        },
    };

    let text = if cli.global.json {
        render::json(&body)
    } else if name == "verify" {
        verify_tsv(&body)
    } else {
        render::tsv(&body)
    };
    let _ = out.write_all(text.as_bytes());
    if code == exit::BUDGET {
        let _ = writeln!(err, "budget exhausted; report is partial");
    }
    code
}

fn build_config(g: &Global) -> Result<Config, String> {
    let mut c = match &g.config {
        Some(path) => {
            let mut c = Config::default();
            c.apply_file(path).map_err(|e| e.to_string())?;
            c
        }
        None => Config::from_env().map_err(|e| e.to_string())?,
    };
    let flags: [(&str, Option<String>); 6] = [
        ("max_n", g.max_n.map(|v| v.to_string())),
        ("edge_budget", g.edge_budget.map(|v| v.to_string())),
        ("node_budget", g.node_budget.map(|v| v.to_string())),
        ("time_budget_s", g.time_budget_s.map(|v| v.to_string())),
        ("seed", g.seed.map(|v| v.to_string())),
        ("cache_path", g.cache_path.as_ref().map(|p| p.display().to_string())),
    ];
    for (key, value) in flags {
        if let Some(v) = value {
            c.set(key, &v).map_err(|e| format!("--{}: {e}", key.replace('_', "-")))?;
        }
    }
    Ok(c)
}

fn execute(cmd: &Command, config: &Config) -> CmdResult {
    let limits = config.limits();
    match cmd {
        Command::Param(a) => param(a, &limits),
        Command::Count(a) => {
            let pattern = parse_graph("pattern", &a.pattern)?;
            let host = parse_graph("host", &a.host)?;
            Ok((exit::OK, json!({ "count": big(&count_copies_with(&pattern, &host, &limits)?) })))
        }
        Command::Gen(a) => gen(a),
        Command::Extremal(a) => extremal(a, &limits),
        Command::Rainbow(a) => rainbow(a, config.seed, &limits),
        Command::Framework(a) => framework(a, &limits),
        Command::Verify(a) => verify(a, config),
    }
}

fn param(a: &ParamArgs, limits: &Limits) -> CmdResult {
    let g = parse_graph("graph", &a.graph)?;
    let mut body = serde_json::Map::new();
    if a.chi || a.all {
        body.insert("chi".into(), json!(chromatic_number_with(&g, limits)?));
    }
    if a.p || a.all {
        let p = match p_value(&g) {
            Ok(p) => json!(p),
            Err(Error::NotBipartite { .. }) if a.all && !a.p => Value::Null,
            Err(e) => return Err(e.into()),
        };
        body.insert("p".into(), p);
    }
    if a.gamma || a.all {
        let gm = match gamma_with(&g, limits) {
            Ok(gm) => json!(gm),
            Err(Error::NotThreeChromatic { .. }) if a.all && !a.gamma => Value::Null,
            Err(e) => return Err(e.into()),
        };
        body.insert("gamma".into(), gm);
    }
    if a.odd_girth || a.all {
        body.insert("odd_girth".into(), json!(odd_girth(&g)));
    }
    Ok((exit::OK, Value::Object(body)))
}

fn parse_ints(s: &str) -> Result<Vec<i64>, Failure> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| Failure::Usage(format!("--params: {t:?} is not an integer")))
        })
        .collect()
}

fn gen(a: &GenArgs) -> CmdResult {
    let base = match (&a.family, &a.blowup_of) {
        (Some(fam), _) => {
            let family = Family::from_str(fam)?;
            construct(family, &parse_ints(a.params.as_deref().unwrap_or(""))?)?
        }
        (None, Some(g6)) => parse_graph("blowup-of", g6)?,
        (None, None) => return Err(Failure::Usage("give --family or --blowup-of".into())),
    };
    let mut body = serde_json::Map::new();
    let g = match a.n {
        Some(n) => {
            let spec = balanced_blowup(&base, n)?;
            body.insert("part_sizes".into(), json!(spec.part_sizes()));
            blowup(&spec)
        }
        None => base,
    };
    body.insert("graph6".into(), json!(g.to_graph6()));
    body.insert("order".into(), json!(g.order()));
    body.insert("edges".into(), json!(g.edge_count()));
    Ok((exit::OK, Value::Object(body)))
}

fn extremal(a: &ExtremalArgs, limits: &Limits) -> CmdResult {
    let h = TuranFunction::from_str(&a.h)?;
    let forbidden = a
        .forbid
        .iter()
        .map(|s| parse_graph("forbid", s))
        .collect::<Result<Vec<_>, _>>()?;
    let partition = a
        .partition
        .as_deref()
        .map(|s| Partition::from_str(s).map(|p| p.with_limits(*limits)))
        .transpose()?;
    let discard = a.discard.as_deref().map(Builtin::from_str).transpose()?;
    let constraint = ClassConstraint {
        forbidden: &forbidden,
        membership: partition.as_ref(),
        discard: discard.as_ref().map(|d| d as &dyn vat_core::framework::Decomposition),
    };
    let res = extremal_value(a.n, &h, &constraint, limits)?;
    let code = if res.budget_hit { exit::BUDGET } else { exit::OK };
    Ok((code, to_value(&res)))
}

fn coloring_for(a: &RainbowArgs, g: &Graph, seed: u64) -> Result<EdgeColoring, Failure> {
    match &a.colors {
        Some(s) => {
            let colors = s
                .split(',')
                .filter(|t| !t.trim().is_empty())
                .map(|t| t.trim().parse::<u32>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|_| Failure::Usage(format!("--colors: cannot parse {s:?}")))?;
            Ok(EdgeColoring::new(g.clone(), colors)?)
        }
        None => Ok(random_proper_coloring(g, seed)),
    }
}

fn odd_cycle_half_length(f: &Graph) -> Option<usize> {
    let n = f.order();
    let is_cycle = n >= 3 && n % 2 == 1 && f.edge_count() == n && (0..n).all(|v| f.degree(v) == 2) && f.components().len() == 1;
    is_cycle.then_some((n - 1) / 2)
}

fn rainbow(a: &RainbowArgs, seed: u64, limits: &Limits) -> CmdResult {
    let g = parse_graph("graph", &a.graph)?;
    let f = parse_graph("pattern", &a.pattern)?;
    if a.member {
        let witness = admits_coloring_without_rainbow(&g, &f, limits)?;
        return Ok((exit::OK, json!({ "member": witness.is_some(), "coloring": witness })));
    }
    let coloring = coloring_for(a, &g, seed)?;
    if a.find_rainbow {
        let copy = find_rainbow_copy_with(&coloring, &f, limits)?;
        return Ok((exit::OK, json!({ "coloring": coloring, "rainbow_copy": copy })));
    }
    if a.embed_bipartite {
        let copy = greedy_rainbow_embed_bipartite(&coloring, &f)?;
        return Ok((exit::OK, json!({ "coloring": coloring, "embedded": copy.is_some(), "copy": copy })));
    }
    let m = a.m.expect("clap requires --m");
    let k = odd_cycle_half_length(&f)
        .ok_or_else(|| Failure::Usage("--embed-blowup needs an odd cycle as --pattern".into()))?;
    let spec = recognize_blowup(&g, &f).ok_or_else(|| {
        Failure::Usage("--graph is not a blowup of --pattern with consecutive non-empty parts".into())
    })?;
    let found = greedy_rainbow_embed_cycle_blowup(&coloring, k, spec.part_sizes(), m)?;
    let (target, copy) = match found {
        Some((t, c)) => (Some(t.to_graph6()), Some(c)),
        None => (None, None),
    };
    Ok((
        exit::OK,
        json!({
            "coloring": coloring,
            "part_sizes": spec.part_sizes(),
            "embedded": copy.is_some(),
            "target": target,
            "copy": copy,
        }),
    ))
}

fn evidence_for(
    p: &Partition,
    d: Builtin,
    k: Option<&str>,
    window: Window,
    limits: &Limits,
) -> Result<EvidenceReport, Failure> {
    Ok(match k {
        Some(k) => very_abstract_evidence(p, &d, &d, Candidate::from_str(k)?, window, limits)?,
        None => find_very_abstract_number(p, &d, &d, window, limits)?,
    })
}

fn verdict_code(v: Verdict) -> i32 {
    match v {
        Verdict::Supported => exit::OK,
        Verdict::Refuted => exit::CHECK_FAILED,
        Verdict::InconclusiveBudget => exit::BUDGET,
    }
}

fn framework(a: &FrameworkArgs, limits: &Limits) -> CmdResult {
    let d = Builtin::from_str(&a.decomp)?;
    let window = Window::from_str(&a.window)?;
    let partition = || -> Result<Partition, Failure> {
        let s = a
            .partition
            .as_deref()
            .ok_or_else(|| Failure::Usage("--partition is required".into()))?;
        Ok(Partition::from_str(s)?.with_limits(*limits))
    };
    let h = || -> Result<TuranFunction, Failure> {
        Ok(TuranFunction::from_str(
            a.h.as_deref().ok_or_else(|| Failure::Usage("--h is required".into()))?,
        )?)
    };

    if a.evidence {
        let report = evidence_for(&partition()?, d, a.k.as_deref(), window, limits)?;
        return Ok((verdict_code(report.verdict), to_value(&report)));
    }

    if a.niceness {
        let k = match a.k.as_deref().map(Candidate::from_str).transpose()? {
            Some(Candidate::Finite(k)) => k,
            _ => return Err(Failure::Usage("--niceness needs a finite --k".into())),
        };
        let mode = match a.mode.as_str() {
            "exact" => NicenessMode::Exact,
            "ratio" => NicenessMode::Ratio,
            other => return Err(Failure::Usage(format!("--mode: expected exact or ratio, got {other:?}"))),
        };
        let members = if a.member.is_empty() {
            Members::UpTo(a.members_max_order)
        } else {
            Members::Given(a.member.iter().map(|s| parse_graph("member", s)).collect::<Result<_, _>>()?)
        };
        let report = niceness_check(&d, &d, &h()?, k, window, mode, &members, limits)?;
        let code = if report.passed {
            exit::OK
        } else if report.entries.iter().any(|e| e.status == EntryStatus::Inconclusive) {
            exit::BUDGET
        } else {
            exit::CHECK_FAILED
        };
        return Ok((code, to_value(&report)));
    }

    let p = partition()?;
    let ev_window = a
        .evidence_window
        .as_deref()
        .map(Window::from_str)
        .transpose()?
        .unwrap_or(window);
    let evidence = evidence_for(&p, d, a.k.as_deref(), ev_window, limits)?;
    let report = transfer_check(&p, &d, &h()?, &evidence, window, limits)?;
    let budget = evidence.checks.iter().any(|c| c.status == CheckStatus::Inconclusive)
        || report
            .entries
            .iter()
            .any(|e| e.extremal.budget_hit || e.generator_allowed == Membership::Unknown);
    let code = if budget {
        exit::BUDGET
    } else if report.passed || report.k == Candidate::Infinite {
        exit::OK
    } else {
        exit::CHECK_FAILED
    };
    Ok((code, json!({ "evidence": evidence, "transfer": report })))
}

fn suite_code(reports: &[SuiteReport]) -> i32 {
    let statuses = reports.iter().flat_map(|r| r.assertions.iter().map(|a| a.status));
    let mut code = exit::OK;
    for s in statuses {
        match s {
            Status::Fail => return exit::CHECK_FAILED,
            Status::Inconclusive => code = exit::BUDGET,
            Status::Pass => {}
        }
    }
    code
}

fn verify(a: &VerifyArgs, config: &Config) -> CmdResult {
    let names: Vec<&str> = if a.suite == "all" {
        SUITES.to_vec()
    } else {
        vec![a.suite.as_str()]
    };
    let mut reports = Vec::new();
    for name in names {
        reports.push(run_suite(name, config).map_err(Failure::Usage)?);
    }
    let passed = reports.iter().all(|r| r.passed);
    Ok((suite_code(&reports), json!({ "suites": reports, "passed": passed })))
}

/// One `suite<TAB>status<TAB>assertion<TAB>detail` line per assertion.
fn verify_tsv(body: &Value) -> String {
    let mut out = String::new();
    for suite in body["suites"].as_array().into_iter().flatten() {
        let name = suite["suite"].as_str().unwrap_or_default();
        for a in suite["assertions"].as_array().into_iter().flatten() {
            let status = a["status"].as_str().unwrap_or_default().to_uppercase();
            out.push_str(&format!(
                "{name}\t{status}\t{}\t{}\n",
                a["name"].as_str().unwrap_or_default(),
                a["detail"].as_str().unwrap_or_default()
            ));
        }
    }
    let overall = if body["passed"].as_bool() == Some(true) { "PASS" } else { "FAIL" };
    out.push_str(&format!("all\t{overall}\n"));
    out
}
