//! Command runners behind the `inertia` binary: stream graph6 corpora
//! through the checker registry, enumerate all labeled graphs of small
//! order, sample G(n, 1/2), build named constructions, and run the shipped
//! fixture catalogue.
//!
//! Runners write records through [`emit::Emitter`] and diagnostics to a
//! separate writer, so identical configuration and input produce
//! bitwise-identical report streams at any parallelism.

pub mod emit;
pub mod pool;

use emit::Emitter;
use inertia_core::checks::{
    check_main, check_signature_form, check_weaker, run_all_checks, run_spectrum_checks, CheckId,
    CheckResult, ConjectureReport, Limits, Verdict,
};
use inertia_core::constructions::{
    self, add_twin, complete, complete_bipartite, complete_multipartite, cycle, disjoint_union, h1,
    h2, join, kotlov_lovasz_double, line_graph, paley, path, petersen, star, tensor_product,
    triangular, validated_fixtures, ConstructionError,
};
use inertia_core::floatspec::float_spectrum;
use inertia_core::format::{parse_line_with_limit, write_graph6};
use inertia_core::generate::{
    gnp_half, graph_from_code, labeled_graph_count, BitStream, SplitMix64, RNG_ALGORITHM,
};
use inertia_core::graph::DEFAULT_MAX_ORDER;
use inertia_core::reduction::reduce;
use inertia_core::{Graph, Inertia};
use serde_json::json;
use std::collections::BTreeMap;
use std::io::{self, BufRead, Write};

/// Default order threshold above which exact arithmetic must be opted out
/// of explicitly.
pub const DEFAULT_EXACT_LIMIT: usize = 512;

/// Hard cap for the built-in labeled enumeration.
pub const ENUMERATE_MAX_ORDER: usize = 7;

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub checks: Vec<CheckId>,
    pub jobs: usize,
    pub limits: Limits,
    pub max_order: usize,
    pub exact_limit: usize,
    pub allow_approx: bool,
    pub fail_fast: bool,
}

impl Default for RunConfig {
    fn default() -> RunConfig {
        RunConfig {
            checks: CheckId::SELECTABLE.to_vec(),
            jobs: 1,
            limits: Limits::default(),
            max_order: DEFAULT_MAX_ORDER,
            exact_limit: DEFAULT_EXACT_LIMIT,
            allow_approx: false,
            fail_fast: false,
        }
    }
}

/// Counters accumulated by a run; the exit-code contract reads off them.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub records: u64,
    pub parse_errors: u64,
    pub skipped_above_exact_limit: u64,
    pub conjecture_violations: u64,
    pub proven_violations: u64,
    pub aborted: bool,
}

impl Outcome {
    /// 0 when no conjecture check reported "violated"; 2 on a discovery;
    /// 1 on operational errors or a violated proven-theorem check.
    pub fn exit_code(&self) -> i32 {
        if self.proven_violations > 0 || self.aborted {
            1
        } else if self.conjecture_violations > 0 {
            2
        } else {
            0
        }
    }

    fn absorb(&mut self, report: &ConjectureReport) {
        self.records += 1;
        self.conjecture_violations += report.violated_conjectures().count() as u64;
        self.proven_violations += report.violated_proven().count() as u64;
    }
}

/// Float-classified inertia for the opt-in approximate path: eigenvalues
/// within the residual cutoff of zero count as zero, and the record is
/// flagged so no exactness is implied.
fn approximate_report(g: &Graph, checks: &[CheckId]) -> Result<ConjectureReport, String> {
    let start = std::time::Instant::now();
    let spectrum = float_spectrum(&inertia_core::adjacency_matrix(g)).map_err(|e| e.to_string())?;
    let cutoff = (10.0 * spectrum.residual_bound).max(1e-9);
    let n_plus = spectrum.eigenvalues.iter().filter(|&&l| l > cutoff).count();
    let n_minus = spectrum
        .eigenvalues
        .iter()
        .filter(|&&l| l < -cutoff)
        .count();
    let i = Inertia::new(n_plus, g.order() - n_plus - n_minus, n_minus);
    let mut results = Vec::new();
    for id in checks {
        match id {
            CheckId::Main => results.push(check_main(&i)),
            CheckId::SignatureForm => results.push(check_signature_form(&i)),
            CheckId::Weaker => results.push(check_weaker(&i)),
            other => results.push(CheckResult {
                check: *other,
                verdict: Verdict::NotApplicable,
                lhs: 0.into(),
                rhs: 0.into(),
                margin: 0.into(),
                note: "approximate mode".into(),
            }),
        }
    }
    Ok(ConjectureReport {
        graph_id: write_graph6(g).expect("supported order"),
        order: g.order(),
        size: g.size(),
        inertia: i,
        signature: i.signature(),
        rank: i.rank(),
        reduced: None,
        results,
        elapsed: start.elapsed(),
        approximate: true,
    })
}

enum ScanItem {
    Report(Box<ConjectureReport>),
    ParseError(String),
    AboveExactLimit { order: usize },
}

/// Stream graph6/sparse6 lines through the enabled checks.
pub fn run_scan<R: BufRead + Send, W: Write, D: Write>(
    input: R,
    cfg: &RunConfig,
    emitter: &mut Emitter<W>,
    diag: &mut D,
) -> io::Result<Outcome> {
    let mut outcome = Outcome::default();
    let jobs = input
        .lines()
        .enumerate()
        .filter_map(|(idx, line)| match line {
            Ok(l) if l.trim().is_empty() => None,
            Ok(l) => Some((idx as u64 + 1, Ok(l))),
            Err(e) => Some((idx as u64 + 1, Err(format!("io error: {e}")))),
        });
    let cfg2 = cfg.clone();
    let work = move |(line_no, read): (u64, Result<String, String>)| -> (u64, ScanItem) {
        let raw = match read {
            Ok(raw) => raw,
            Err(msg) => return (line_no, ScanItem::ParseError(msg)),
        };
        match parse_line_with_limit(&raw, cfg2.max_order) {
            Err(e) => (line_no, ScanItem::ParseError(e.to_string())),
            Ok(g) => {
                if g.order() > cfg2.exact_limit {
                    if !cfg2.allow_approx {
                        return (line_no, ScanItem::AboveExactLimit { order: g.order() });
                    }
                    return match approximate_report(&g, &cfg2.checks) {
                        Ok(mut report) => {
                            report.graph_id = raw.trim().to_string();
                            (line_no, ScanItem::Report(Box::new(report)))
                        }
                        Err(e) => (line_no, ScanItem::ParseError(e)),
                    };
                }
                let mut report = run_all_checks(&g, &cfg2.checks, &cfg2.limits);
                report.graph_id = raw.trim().to_string();
                (line_no, ScanItem::Report(Box::new(report)))
            }
        }
    };

    let mut io_failure: Option<io::Error> = None;
    pool::ordered_map(jobs, cfg.jobs, work, |(line_no, item)| match item {
        ScanItem::Report(report) => {
            outcome.absorb(&report);
            if let Err(e) = emitter.record(line_no, &report) {
                io_failure = Some(e);
                outcome.aborted = true;
                return false;
            }
            let hit = report.violated_conjectures().next().is_some()
                || report.violated_proven().next().is_some();
            !(cfg.fail_fast && hit)
        }
        ScanItem::ParseError(msg) => {
            outcome.parse_errors += 1;
            let _ = writeln!(diag, "line {line_no}: {msg}");
            if cfg.fail_fast {
                outcome.aborted = true;
            }
            !cfg.fail_fast
        }
        ScanItem::AboveExactLimit { order } => {
            outcome.skipped_above_exact_limit += 1;
            let _ = writeln!(
                diag,
                "line {line_no}: order {order} above exact limit {}; rerun with --allow-approx",
                cfg.exact_limit
            );
            if cfg.fail_fast {
                outcome.aborted = true;
            }
            !cfg.fail_fast
        }
    });
    if let Some(e) = io_failure {
        return Err(e);
    }
    let _ = writeln!(
        diag,
        "scan: {} records, {} parse errors, {} above exact limit, {} conjecture violations, {} proven violations",
        outcome.records,
        outcome.parse_errors,
        outcome.skipped_above_exact_limit,
        outcome.conjecture_violations,
        outcome.proven_violations
    );
    emitter.flush()?;
    Ok(outcome)
}

#[derive(Clone, Copy, Debug, Default)]
pub struct VerdictCounts {
    pub holds: u64,
    pub tight: u64,
    pub violated: u64,
    pub not_applicable: u64,
}

impl VerdictCounts {
    fn absorb(&mut self, v: Verdict) {
        match v {
            Verdict::Holds => self.holds += 1,
            Verdict::Tight => self.tight += 1,
            Verdict::Violated => self.violated += 1,
            Verdict::NotApplicable => self.not_applicable += 1,
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct EnumerateSummary {
    pub graphs: u64,
    pub per_check: BTreeMap<&'static str, VerdictCounts>,
    pub tight_graphs: Vec<String>,
}

/// Exhaustively run the checks over every labeled graph of order 1..=max.
/// Records stream through `emitter` unless `quiet`.
pub fn run_enumerate<W: Write, D: Write>(
    max_order: usize,
    cfg: &RunConfig,
    emitter: &mut Emitter<W>,
    quiet: bool,
    diag: &mut D,
) -> io::Result<(Outcome, EnumerateSummary)> {
    if max_order > ENUMERATE_MAX_ORDER {
        return Err(io::Error::new(
            io::ErrorKind::InvalidInput,
            format!("labeled enumeration is capped at order {ENUMERATE_MAX_ORDER}"),
        ));
    }
    let mut outcome = Outcome::default();
    let mut summary = EnumerateSummary::default();
    let jobs = (1..=max_order).flat_map(|n| (0..labeled_graph_count(n)).map(move |c| (n, c)));
    let cfg2 = cfg.clone();
    let work = move |(n, code): (usize, u64)| {
        run_all_checks(&graph_from_code(n, code), &cfg2.checks, &cfg2.limits)
    };

    let mut io_failure: Option<io::Error> = None;
    pool::ordered_map(jobs, cfg.jobs, work, |report| {
        outcome.absorb(&report);
        summary.graphs += 1;
        let mut any_tight = false;
        for r in &report.results {
            summary
                .per_check
                .entry(r.check.as_str())
                .or_default()
                .absorb(r.verdict);
            any_tight |= r.verdict == Verdict::Tight;
        }
        if any_tight {
            summary.tight_graphs.push(report.graph_id.clone());
        }
        if !quiet {
            if let Err(e) = emitter.record(summary.graphs, &report) {
                io_failure = Some(e);
                outcome.aborted = true;
                return false;
            }
        }
        !(cfg.fail_fast
            && (report.violated_conjectures().next().is_some()
                || report.violated_proven().next().is_some()))
    });
    if let Some(e) = io_failure {
        return Err(e);
    }
    emitter.summary(&json!({
        "summary": {
            "graphs": summary.graphs,
            "max_order": max_order,
            "checks": summary
                .per_check
                .iter()
                .map(|(k, v)| {
                    (k.to_string(), json!({
                        "holds": v.holds,
                        "tight": v.tight,
                        "violated": v.violated,
                        "not_applicable": v.not_applicable,
                    }))
                })
                .collect::<serde_json::Map<_, _>>(),
            "tight_graphs": summary.tight_graphs,
        }
    }))?;
    emitter.flush()?;
    let _ = writeln!(
        diag,
        "enumerate: {} graphs, {} conjecture violations, {} proven violations",
        summary.graphs, outcome.conjecture_violations, outcome.proven_violations
    );
    Ok((outcome, summary))
}

#[derive(Clone, Debug, Default)]
pub struct SampleSummary {
    pub count: u64,
    pub order: usize,
    pub seed: u64,
    pub mean_n_plus_ratio: f64,
    pub mean_n_minus_ratio: f64,
    pub graphs_with_kernel: u64,
}

/// Check seeded G(n, 1/2) samples. Generation is sequential in the job
/// iterator, so the sampled graphs depend only on (n, count, seed).
pub fn run_sample<W: Write, D: Write>(
    n: usize,
    count: u64,
    seed: u64,
    cfg: &RunConfig,
    emitter: &mut Emitter<W>,
    diag: &mut D,
) -> io::Result<(Outcome, SampleSummary)> {
    let mut outcome = Outcome::default();
    let mut summary = SampleSummary {
        count,
        order: n,
        seed,
        ..SampleSummary::default()
    };
    let mut bits = BitStream::new(SplitMix64::new(seed));
    let jobs = (0..count).map(move |_| gnp_half(n, &mut bits));
    let cfg2 = cfg.clone();
    let work = move |g: Graph| run_all_checks(&g, &cfg2.checks, &cfg2.limits);

    let mut io_failure: Option<io::Error> = None;
    let mut emitted = 0u64;
    let (mut plus_sum, mut minus_sum) = (0f64, 0f64);
    pool::ordered_map(jobs, cfg.jobs, work, |report| {
        outcome.absorb(&report);
        emitted += 1;
        plus_sum += report.inertia.n_plus as f64 / n.max(1) as f64;
        minus_sum += report.inertia.n_minus as f64 / n.max(1) as f64;
        if report.inertia.n_zero > 0 {
            summary.graphs_with_kernel += 1;
        }
        if let Err(e) = emitter.record(emitted, &report) {
            io_failure = Some(e);
            outcome.aborted = true;
            return false;
        }
        !(cfg.fail_fast
            && (report.violated_conjectures().next().is_some()
                || report.violated_proven().next().is_some()))
    });
    if let Some(e) = io_failure {
        return Err(e);
    }
    summary.mean_n_plus_ratio = plus_sum / emitted.max(1) as f64;
    summary.mean_n_minus_ratio = minus_sum / emitted.max(1) as f64;
    emitter.summary(&json!({
        "summary": {
            "order": n,
            "count": emitted,
            "seed": seed,
            "rng": RNG_ALGORITHM,
            "mean_n_plus_ratio": summary.mean_n_plus_ratio,
            "mean_n_minus_ratio": summary.mean_n_minus_ratio,
            "graphs_with_kernel": summary.graphs_with_kernel,
        }
    }))?;
    emitter.flush()?;
    let _ = writeln!(
        diag,
        "sample: {} graphs of order {n}, seed {seed}, rng {RNG_ALGORITHM}",
        emitted
    );
    Ok((outcome, summary))
}

/// Buildable fixture graphs by name.
fn buildable_fixtures() -> Vec<(String, Graph)> {
    let mut out: Vec<(String, Graph)> = vec![
        ("K2".into(), complete(2).unwrap()),
        ("C5".into(), cycle(5).unwrap()),
        ("H1".into(), h1()),
        ("H2".into(), h2()),
        ("Paley(5)".into(), paley(5).unwrap()),
        ("Paley(13)".into(), paley(13).unwrap()),
    ];
    for k in 5..=9usize {
        out.push((format!("T({k})"), triangular(k).unwrap()));
    }
    out
}

/// Catalogued equality cases the fixture run must reproduce.
fn fixture_assertions(reports: &BTreeMap<String, ConjectureReport>) -> Vec<String> {
    let mut failures = Vec::new();
    let mut expect = |name: &str, check: CheckId, inertia: Option<Inertia>| {
        let Some(report) = reports.get(name) else {
            failures.push(format!("{name}: missing report"));
            return;
        };
        if let Some(want) = inertia {
            if report.inertia != want {
                failures.push(format!(
                    "{name}: inertia {} differs from required {want}",
                    report.inertia
                ));
            }
        }
        match report.result(check) {
            Some(r) if r.verdict == Verdict::Tight => {}
            Some(r) => failures.push(format!(
                "{name}: {} expected tight, got {}",
                check.as_str(),
                r.verdict.as_str()
            )),
            // the check was not enabled for this run
            None => {}
        }
    };
    expect("K2", CheckId::Main, Some(Inertia::new(1, 0, 1)));
    expect("C5", CheckId::Main, Some(Inertia::new(3, 0, 2)));
    expect("H1", CheckId::Main, Some(Inertia::new(6, 0, 3)));
    expect("H2", CheckId::Main, Some(Inertia::new(6, 0, 3)));
    expect("GQ(2,4)", CheckId::Main, Some(Inertia::new(21, 0, 6)));
    expect("GQ(2,4)", CheckId::AbsoluteBound, None);
    expect("McLaughlin", CheckId::Main, Some(Inertia::new(253, 0, 22)));
    expect("McLaughlin", CheckId::AbsoluteBound, None);
    expect(
        "Paley(13)",
        CheckId::SelfComplementary,
        Some(Inertia::new(7, 0, 6)),
    );
    failures
}

/// Run spectrum-level checks on the shipped table and graph-level checks on
/// the buildable fixtures, asserting the catalogued tight cases.
pub fn run_fixtures<W: Write, D: Write>(
    cfg: &RunConfig,
    emitter: &mut Emitter<W>,
    diag: &mut D,
) -> io::Result<Outcome> {
    let mut outcome = Outcome::default();
    let fixtures = match validated_fixtures() {
        Ok(f) => f,
        Err(e) => {
            let _ = writeln!(diag, "fixtures: {e}");
            outcome.aborted = true;
            return Ok(outcome);
        }
    };
    let mut line = 0u64;
    let mut reports: BTreeMap<String, ConjectureReport> = BTreeMap::new();
    for (meta, spec) in &fixtures {
        let report = run_spectrum_checks(meta.name, spec, &cfg.checks);
        line += 1;
        outcome.absorb(&report);
        emitter.record(line, &report)?;
        reports.insert(meta.name.to_string(), report);
    }
    for (name, g) in buildable_fixtures() {
        let mut report = run_all_checks(&g, &cfg.checks, &cfg.limits);
        report.graph_id = name.clone();
        line += 1;
        outcome.absorb(&report);
        emitter.record(line, &report)?;
        reports.insert(name, report);
    }
    for failure in fixture_assertions(&reports) {
        let _ = writeln!(diag, "fixture assertion failed: {failure}");
        outcome.proven_violations += 1;
    }
    emitter.flush()?;
    Ok(outcome)
}

/// Build a graph from a family spec plus a left-to-right transform chain,
/// e.g. `"complete 2 | kl_double | kl_double"`.
pub fn run_construct(spec: &str) -> Result<Graph, String> {
    let mut stages = spec.split('|').map(str::trim);
    let family = stages
        .next()
        .filter(|s| !s.is_empty())
        .ok_or("empty construction spec")?;
    let mut g = build_family(family)?;
    for stage in stages {
        g = apply_transform(&g, stage)?;
    }
    Ok(g)
}

fn parse_params(tokens: &[&str]) -> Result<Vec<usize>, String> {
    tokens
        .iter()
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| format!("bad parameter {t:?}"))
        })
        .collect()
}

fn build_family(spec: &str) -> Result<Graph, String> {
    let tokens: Vec<&str> = spec.split_whitespace().collect();
    let (name, rest) = tokens.split_first().ok_or("missing family name")?;
    let params = parse_params(rest)?;
    let wrong_arity =
        |want: &str| format!("family {name:?} expects parameters: {want}, got {params:?}");
    let built: Result<Graph, ConstructionError> =
        match (name.to_lowercase().as_str(), params.as_slice()) {
            ("path", [n]) => Ok(path(*n)),
            ("cycle", [n]) => cycle(*n),
            ("complete", [n]) => complete(*n),
            ("complete_bipartite", [p, q]) => complete_bipartite(*p, *q),
            ("complete_multipartite", parts) if !parts.is_empty() => complete_multipartite(parts),
            ("star", [k]) => star(*k),
            ("triangular", [k]) => triangular(*k),
            ("paley", [q]) => paley(*q),
            ("petersen", []) => Ok(petersen()),
            ("h1", []) => Ok(h1()),
            ("h2", []) => Ok(h2()),
            ("empty", [n]) => Ok(Graph::empty(*n)),
            ("path" | "cycle" | "complete" | "star" | "triangular" | "paley" | "empty", _) => {
                return Err(wrong_arity("n"))
            }
            ("complete_bipartite", _) => return Err(wrong_arity("p q")),
            ("complete_multipartite", _) => return Err(wrong_arity("p1 p2 ...")),
            ("petersen" | "h1" | "h2", _) => return Err(wrong_arity("none")),
            _ => return Err(format!("unknown family {name:?}")),
        };
    built.map_err(|e| e.to_string())
}

fn apply_transform(g: &Graph, spec: &str) -> Result<Graph, String> {
    let tokens: Vec<&str> = spec.split_whitespace().collect();
    let (name, rest) = tokens.split_first().ok_or("empty transform")?;
    match (name.to_lowercase().as_str(), rest) {
        ("complement", []) => Ok(g.complement()),
        ("line_graph", []) => Ok(line_graph(g)),
        ("kl_double", []) => kotlov_lovasz_double(g).map_err(|e| e.to_string()),
        ("reduce", []) => Ok(reduce(g)),
        ("add_twin", args) => {
            let (v, closed) = match args {
                [v] => (v, false),
                [v, mode] if *mode == "open" => (v, false),
                [v, mode] if *mode == "closed" => (v, true),
                _ => return Err("add_twin expects: v [open|closed]".into()),
            };
            let v: usize = v.parse().map_err(|_| format!("bad vertex {v:?}"))?;
            add_twin(g, v, closed).map_err(|e| e.to_string())
        }
        ("join", args) if !args.is_empty() => {
            let h = build_family(&args.join(" "))?;
            join(g, &h).map_err(|e| e.to_string())
        }
        ("union", args) if !args.is_empty() => {
            let h = build_family(&args.join(" "))?;
            disjoint_union(g, &h).map_err(|e| e.to_string())
        }
        ("tensor", args) if !args.is_empty() => {
            let h = build_family(&args.join(" "))?;
            tensor_product(g, &h).map_err(|e| e.to_string())
        }
        ("join" | "union" | "tensor", []) => Err(format!("{name} expects a family argument")),
        _ => Err(format!("unknown transform {name:?}")),
    }
}

/// Spectrum fixture metadata re-exported for the fixtures subcommand help.
pub fn spectrum_fixture_names() -> Vec<&'static str> {
    constructions::SPECTRUM_FIXTURES
        .iter()
        .map(|f| f.name)
        .collect()
}
