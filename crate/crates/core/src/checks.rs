//! Checker registry: every inequality the toolkit evaluates on a graph or
//! spectrum fixture, with structured holds / tight / violated verdicts and
//! integer margins.
//!
//! Checkers operate on the inertia triple wherever possible so spectrum
//! fixtures exercise the same code path as constructed graphs. Checks of
//! proven theorems are flagged [`is_proven_check`]; a "violated" verdict
//! from one of those signals a bug in this toolkit, not a discovery.

use crate::constructions::{line_graph, SpectrumSpec};
use crate::floatspec::{self, ENERGY_TOLERANCE};
use crate::format::write_graph6;
use crate::graph::Graph;
use crate::inertia::{count_eigenvalues_in_interval, inertia, shifted_inertia, Inertia};
use crate::matrix::{adjacency_matrix, laplacian_matrix};
use crate::reduction::{is_cograph, is_reduced, is_self_complementary_with_limit};
use num_bigint::BigInt;
use num_rational::Rational64;
use num_traits::{Signed, Zero};
use std::time::{Duration, Instant};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CheckError {
    #[error("unknown check id: {0}")]
    UnknownCheckId(String),
    #[error("order {order} above the cycle enumeration cap {cap}")]
    OrderAboveCycleCap { order: usize, cap: usize },
}

/// Stable check identifiers. The selectable vocabulary is
/// [`CheckId::SELECTABLE`]; `signature_c1` and `line_graph_floor` are
/// companion records emitted with `ma_yang_li` and `line_graph`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CheckId {
    Main,
    SignatureForm,
    Weaker,
    Torgasev,
    MohammadianOrder,
    RankOrder,
    MaYangLi,
    SignatureC1,
    LineGraph,
    LineGraphFloor,
    Energy,
    TreeLaplacian,
    CographInertia,
    SelfComplementary,
    AbsoluteBound,
}

impl CheckId {
    pub const SELECTABLE: [CheckId; 13] = [
        CheckId::Main,
        CheckId::SignatureForm,
        CheckId::Weaker,
        CheckId::Torgasev,
        CheckId::MohammadianOrder,
        CheckId::RankOrder,
        CheckId::MaYangLi,
        CheckId::LineGraph,
        CheckId::Energy,
        CheckId::TreeLaplacian,
        CheckId::CographInertia,
        CheckId::SelfComplementary,
        CheckId::AbsoluteBound,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            CheckId::Main => "main",
            CheckId::SignatureForm => "signature_form",
            CheckId::Weaker => "weaker",
            CheckId::Torgasev => "torgasev",
            CheckId::MohammadianOrder => "mohammadian_order",
            CheckId::RankOrder => "rank_order",
            CheckId::MaYangLi => "ma_yang_li",
            CheckId::SignatureC1 => "signature_c1",
            CheckId::LineGraph => "line_graph",
            CheckId::LineGraphFloor => "line_graph_floor",
            CheckId::Energy => "energy",
            CheckId::TreeLaplacian => "tree_laplacian",
            CheckId::CographInertia => "cograph_inertia",
            CheckId::SelfComplementary => "self_complementary",
            CheckId::AbsoluteBound => "absolute_bound",
        }
    }

    /// Parse a selectable id.
    pub fn parse(s: &str) -> Result<CheckId, CheckError> {
        CheckId::SELECTABLE
            .iter()
            .copied()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| CheckError::UnknownCheckId(s.to_string()))
    }
}

impl std::fmt::Display for CheckId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Whether a "violated" verdict from this check is an internal error (the
/// inequality is a proven theorem) rather than a discovery.
pub fn is_proven_check(id: CheckId) -> bool {
    matches!(
        id,
        CheckId::Torgasev
            | CheckId::SignatureC1
            | CheckId::LineGraphFloor
            | CheckId::Energy
            | CheckId::TreeLaplacian
            | CheckId::CographInertia
            | CheckId::SelfComplementary
            | CheckId::AbsoluteBound
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Tight,
    Violated,
    NotApplicable,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::Tight => "tight",
            Verdict::Violated => "violated",
            Verdict::NotApplicable => "not_applicable",
        }
    }
}

/// One evaluated inequality: lhs ≤ rhs with margin = rhs − lhs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub check: CheckId,
    pub verdict: Verdict,
    pub lhs: BigInt,
    pub rhs: BigInt,
    pub margin: BigInt,
    pub note: String,
}

impl CheckResult {
    fn from_le(check: CheckId, lhs: BigInt, rhs: BigInt, note: impl Into<String>) -> CheckResult {
        let margin = &rhs - &lhs;
        let verdict = if margin.is_negative() {
            Verdict::Violated
        } else if margin.is_zero() {
            Verdict::Tight
        } else {
            Verdict::Holds
        };
        CheckResult {
            check,
            verdict,
            lhs,
            rhs,
            margin,
            note: note.into(),
        }
    }

    /// Combine two inequalities under one id: the binding (smallest-margin)
    /// side supplies lhs/rhs, the note describes both.
    fn from_two(
        check: CheckId,
        first: (BigInt, BigInt),
        second: (BigInt, BigInt),
        note: impl Into<String>,
    ) -> CheckResult {
        let m1 = &first.1 - &first.0;
        let m2 = &second.1 - &second.0;
        let (lhs, rhs) = if m1 <= m2 { first } else { second };
        CheckResult::from_le(check, lhs, rhs, note)
    }

    fn not_applicable(check: CheckId, note: impl Into<String>) -> CheckResult {
        CheckResult {
            check,
            verdict: Verdict::NotApplicable,
            lhs: BigInt::zero(),
            rhs: BigInt::zero(),
            margin: BigInt::zero(),
            note: note.into(),
        }
    }

    pub fn is_violation(&self) -> bool {
        self.verdict == Verdict::Violated
    }
}

/// 2n⁺ ≤ n⁻(n⁻ + 1): the absolute bound extended to all graphs.
pub fn check_main(i: &Inertia) -> CheckResult {
    let nm = BigInt::from(i.n_minus);
    CheckResult::from_le(
        CheckId::Main,
        BigInt::from(2 * i.n_plus),
        &nm * (&nm + 1),
        "",
    )
}

/// Signature form of the same bound: s ≤ C(n⁻, 2).
pub fn check_signature_form(i: &Inertia) -> CheckResult {
    let nm = BigInt::from(i.n_minus);
    CheckResult::from_le(
        CheckId::SignatureForm,
        BigInt::from(i.signature()),
        &nm * (&nm - 1) / 2,
        "",
    )
}

/// 2n ≤ (n − n⁺)(n − n⁺ + 3).
pub fn check_weaker(i: &Inertia) -> CheckResult {
    let n = i.dim();
    let k = BigInt::from(n) - BigInt::from(i.n_plus);
    CheckResult::from_le(CheckId::Weaker, BigInt::from(2 * n), &k * (&k + 3), "")
}

/// Maximum order n(k) and maximum positive inertia n⁺(k) of reduced graphs
/// with k = n⁻ negative eigenvalues, for k ≤ 3.
pub fn check_torgasev(i: &Inertia, order: usize, reduced: Option<bool>) -> CheckResult {
    match reduced {
        Some(true) => {}
        Some(false) => return CheckResult::not_applicable(CheckId::Torgasev, "graph not reduced"),
        None => return CheckResult::not_applicable(CheckId::Torgasev, "reducedness unknown"),
    }
    let (max_order, max_plus) = match i.n_minus {
        1 => (2usize, 1usize),
        2 => (6, 3),
        3 => (14, 6),
        k => {
            return CheckResult::not_applicable(
                CheckId::Torgasev,
                format!("no table row for n_minus = {k}"),
            )
        }
    };
    CheckResult::from_two(
        CheckId::Torgasev,
        (BigInt::from(order), BigInt::from(max_order)),
        (BigInt::from(i.n_plus), BigInt::from(max_plus)),
        format!(
            "order {order} <= {max_order}; n_plus {} <= {max_plus}",
            i.n_plus
        ),
    )
}

/// Reduced graphs with k negative eigenvalues have order ≤ 2^(k+1) − 2.
pub fn check_mohammadian_order(i: &Inertia, order: usize, reduced: Option<bool>) -> CheckResult {
    match reduced {
        Some(true) => {}
        Some(false) => {
            return CheckResult::not_applicable(CheckId::MohammadianOrder, "graph not reduced")
        }
        None => {
            return CheckResult::not_applicable(CheckId::MohammadianOrder, "reducedness unknown")
        }
    }
    let bound = (BigInt::from(1) << (i.n_minus + 1)) - 2;
    CheckResult::from_le(CheckId::MohammadianOrder, BigInt::from(order), bound, "")
}

/// Reduced graphs of rank r have order ≤ m(r), with m(r) = 2^((r+2)/2) − 2
/// for even r and 5·2^((r−3)/2) − 2 for odd r.
pub fn check_rank_order(i: &Inertia, order: usize, reduced: Option<bool>) -> CheckResult {
    match reduced {
        Some(true) => {}
        Some(false) => return CheckResult::not_applicable(CheckId::RankOrder, "graph not reduced"),
        None => return CheckResult::not_applicable(CheckId::RankOrder, "reducedness unknown"),
    }
    let r = i.rank();
    if r < 2 {
        return CheckResult::not_applicable(CheckId::RankOrder, format!("rank {r} below 2"));
    }
    let bound = if r.is_multiple_of(2) {
        (BigInt::from(1) << ((r + 2) / 2)) - 2
    } else {
        BigInt::from(5) * (BigInt::from(1) << ((r - 3) / 2)) - 2
    };
    CheckResult::from_le(CheckId::RankOrder, BigInt::from(order), bound, "")
}

/// Counts of odd cycles: c1 total, split into lengths ≡ 3 and ≡ 1 (mod 4).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CycleCounts {
    pub c1: u64,
    pub c3: u64,
    pub c5: u64,
}

/// Default cap for exhaustive cycle enumeration (the count is potentially
/// exponential in the order).
pub const DEFAULT_CYCLE_CAP: usize = 16;

/// Enumerate all simple cycles, each counted once regardless of traversal
/// direction, and classify odd lengths mod 4.
pub fn count_cycles_mod4(g: &Graph, cap: usize) -> Result<CycleCounts, CheckError> {
    let n = g.order();
    if n > cap {
        return Err(CheckError::OrderAboveCycleCap { order: n, cap });
    }
    let adj: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v)).collect();
    let mut counts = CycleCounts {
        c1: 0,
        c3: 0,
        c5: 0,
    };

    fn dfs(
        adj: &[Vec<usize>],
        root: usize,
        on_path: &mut Vec<bool>,
        path: &mut Vec<usize>,
        counts: &mut CycleCounts,
    ) {
        let tip = *path.last().unwrap();
        for &w in &adj[tip] {
            if w == root && path.len() >= 3 {
                // count once: fix the orientation by requiring the second
                // vertex to be smaller than the tip
                if path[1] < tip {
                    match path.len() % 4 {
                        3 => {
                            counts.c1 += 1;
                            counts.c3 += 1;
                        }
                        1 => {
                            counts.c1 += 1;
                            counts.c5 += 1;
                        }
                        _ => {}
                    }
                }
            } else if w > root && !on_path[w] {
                on_path[w] = true;
                path.push(w);
                dfs(adj, root, on_path, path, counts);
                path.pop();
                on_path[w] = false;
            }
        }
    }

    for root in 0..n {
        let mut on_path = vec![false; n];
        on_path[root] = true;
        let mut path = vec![root];
        dfs(&adj, root, &mut on_path, &mut path, &mut counts);
    }
    Ok(counts)
}

/// The conjectured two-sided cycle bound −c3 ≤ s ≤ c5, paired with the
/// proven |s| ≤ c1.
pub fn check_ma_yang_li(g: &Graph, i: &Inertia, cycle_cap: usize) -> (CheckResult, CheckResult) {
    let counts = match count_cycles_mod4(g, cycle_cap) {
        Ok(c) => c,
        Err(e) => {
            return (
                CheckResult::not_applicable(CheckId::MaYangLi, e.to_string()),
                CheckResult::not_applicable(CheckId::SignatureC1, e.to_string()),
            )
        }
    };
    let s = i.signature();
    let conjectured = CheckResult::from_two(
        CheckId::MaYangLi,
        // −c3 ≤ s  ⇔  −s ≤ c3
        (BigInt::from(-s), BigInt::from(counts.c3)),
        (BigInt::from(s), BigInt::from(counts.c5)),
        format!(
            "-c3 <= s <= c5 with s={s}, c3={}, c5={}",
            counts.c3, counts.c5
        ),
    );
    let proven = CheckResult::from_le(
        CheckId::SignatureC1,
        BigInt::from(s.abs()),
        BigInt::from(counts.c1),
        format!("|s| <= c1 with c1={}", counts.c1),
    );
    (conjectured, proven)
}

/// Conjecture for connected graphs: n⁺(L(G)) ≤ n⁻(L(G)) + 1, paired with
/// the proven spectral floor of line graphs (λ_min ≥ −2 with multiplicity
/// of −2 at least m − n).
pub fn check_line_graph(g: &Graph) -> (CheckResult, CheckResult) {
    if !g.is_connected() {
        let note = "graph disconnected; the conjecture requires a connected line graph";
        return (
            CheckResult::not_applicable(CheckId::LineGraph, note),
            CheckResult::not_applicable(CheckId::LineGraphFloor, note),
        );
    }
    let lg = line_graph(g);
    let a = adjacency_matrix(&lg);
    let li = inertia(&a);
    let conjecture = CheckResult::from_le(
        CheckId::LineGraph,
        BigInt::from(li.n_plus),
        BigInt::from(li.n_minus + 1),
        format!("inertia of L(G) is {li}"),
    );
    let at_minus2 = shifted_inertia(&a, Rational64::new(-2, 1));
    let deficit = g.size() as i64 - g.order() as i64;
    let floor = CheckResult::from_two(
        CheckId::LineGraphFloor,
        (BigInt::from(at_minus2.n_minus), BigInt::zero()),
        (BigInt::from(deficit), BigInt::from(at_minus2.n_zero)),
        format!(
            "eigenvalues below -2: {}; mult(-2) = {} >= m - n = {deficit}",
            at_minus2.n_minus, at_minus2.n_zero
        ),
    );
    (conjecture, floor)
}

/// Energy inequalities with exact inertia on the integer sides:
/// E ≥ n⁺ + n⁻, E ≤ 2|λ_min|·n⁻, and n⁺ ≤ n⁻(2|λ_min| − 1).
pub fn check_energy(g: &Graph) -> CheckResult {
    if g.order() == 0 {
        return CheckResult::not_applicable(CheckId::Energy, "empty graph");
    }
    let report = match floatspec::check_energy_bounds(g) {
        Ok(r) => r,
        Err(e) => return CheckResult::not_applicable(CheckId::Energy, e.to_string()),
    };
    let i = report.inertia;
    let rhs_real = i.n_minus as f64 * (2.0 * report.min_eigenvalue.abs() - 1.0);
    let rhs = BigInt::from((rhs_real + ENERGY_TOLERANCE).floor() as i64);
    let note = format!(
        "energy {:.6}; lower {}; upper {}; lemma {}",
        report.energy,
        if report.holds_lower { "ok" } else { "VIOLATED" },
        if report.holds_upper { "ok" } else { "VIOLATED" },
        if report.holds_lemma { "ok" } else { "VIOLATED" },
    );
    let mut result = CheckResult::from_le(CheckId::Energy, BigInt::from(i.n_plus), rhs, note);
    if !report.all_hold() {
        result.verdict = Verdict::Violated;
    }
    result
}

/// Trees have at least ⌈n/2⌉ Laplacian eigenvalues in [0, 2).
pub fn check_tree_laplacian(g: &Graph) -> CheckResult {
    if !g.is_tree() {
        return CheckResult::not_applicable(CheckId::TreeLaplacian, "not a tree");
    }
    let n = g.order();
    let count = count_eigenvalues_in_interval(
        &laplacian_matrix(g),
        Rational64::new(0, 1),
        Rational64::new(2, 1),
        true,
        false,
    )
    .expect("0 <= 2");
    CheckResult::from_le(
        CheckId::TreeLaplacian,
        BigInt::from(n.div_ceil(2)),
        BigInt::from(count),
        format!("{count} Laplacian eigenvalues in [0,2)"),
    )
}

/// Cographs satisfy n⁺ ≤ n⁻ and have no eigenvalues in (−1, 0).
pub fn check_cograph_inertia(g: &Graph, i: &Inertia) -> CheckResult {
    if !is_cograph(g) {
        return CheckResult::not_applicable(CheckId::CographInertia, "not a cograph");
    }
    let gap = count_eigenvalues_in_interval(
        &adjacency_matrix(g),
        Rational64::new(-1, 1),
        Rational64::new(0, 1),
        false,
        false,
    )
    .expect("-1 <= 0");
    CheckResult::from_two(
        CheckId::CographInertia,
        (BigInt::from(i.n_plus), BigInt::from(i.n_minus)),
        (BigInt::from(gap), BigInt::zero()),
        format!("eigenvalues in (-1,0): {gap}"),
    )
}

/// Self-complementary graphs satisfy n⁺ ≤ n⁻ + 1.
pub fn check_self_complementary(g: &Graph, i: &Inertia, iso_limit: usize) -> CheckResult {
    match is_self_complementary_with_limit(g, iso_limit) {
        Err(e) => CheckResult::not_applicable(CheckId::SelfComplementary, e.to_string()),
        Ok(false) => {
            CheckResult::not_applicable(CheckId::SelfComplementary, "not self-complementary")
        }
        Ok(true) => CheckResult::from_le(
            CheckId::SelfComplementary,
            BigInt::from(i.n_plus),
            BigInt::from(i.n_minus + 1),
            "self-complementary",
        ),
    }
}

/// Absolute bound from the multiplicities of a three-eigenvalue spectrum
/// with a simple largest eigenvalue: 2n ≤ f(f+3) and 2n ≤ g(g+3).
pub fn check_absolute_bound_multiplicities(order: usize, f: usize, g: usize) -> CheckResult {
    let two_n = BigInt::from(2 * order);
    let fb = BigInt::from(f);
    let gb = BigInt::from(g);
    CheckResult::from_two(
        CheckId::AbsoluteBound,
        (two_n.clone(), &fb * (&fb + 3)),
        (two_n.clone(), &gb * (&gb + 3)),
        format!(
            "2n = {two_n}: f bound {} (f={f}), g bound {} (g={g})",
            &fb * (&fb + 3),
            &gb * (&gb + 3)
        ),
    )
}

pub fn check_absolute_bound(spec: &SpectrumSpec) -> CheckResult {
    match spec.three_eigenvalue_multiplicities() {
        Some((f, g)) => check_absolute_bound_multiplicities(spec.order(), f, g),
        None => CheckResult::not_applicable(
            CheckId::AbsoluteBound,
            "spectrum does not have three distinct eigenvalues with a simple largest",
        ),
    }
}

/// Per-run caps shared by the checkers.
#[derive(Clone, Copy, Debug)]
pub struct Limits {
    pub cycle_cap: usize,
    pub iso_limit: usize,
}

impl Default for Limits {
    fn default() -> Limits {
        Limits {
            cycle_cap: DEFAULT_CYCLE_CAP,
            iso_limit: crate::reduction::DEFAULT_ISO_LIMIT,
        }
    }
}

/// Per-graph verdict bundle.
#[derive(Clone, Debug)]
pub struct ConjectureReport {
    pub graph_id: String,
    pub order: usize,
    pub size: usize,
    pub inertia: Inertia,
    pub signature: i64,
    pub rank: usize,
    pub reduced: Option<bool>,
    pub results: Vec<CheckResult>,
    pub elapsed: Duration,
    /// Set when the inertia came from the float path (order above the
    /// exact limit with approximate mode opted in).
    pub approximate: bool,
}

impl ConjectureReport {
    pub fn violated_conjectures(&self) -> impl Iterator<Item = &CheckResult> {
        self.results
            .iter()
            .filter(|r| r.is_violation() && !is_proven_check(r.check))
    }

    pub fn violated_proven(&self) -> impl Iterator<Item = &CheckResult> {
        self.results
            .iter()
            .filter(|r| r.is_violation() && is_proven_check(r.check))
    }

    pub fn result(&self, id: CheckId) -> Option<&CheckResult> {
        self.results.iter().find(|r| r.check == id)
    }
}

/// Run every enabled check on a graph, computing the inertia once.
pub fn run_all_checks(g: &Graph, enabled: &[CheckId], limits: &Limits) -> ConjectureReport {
    let start = Instant::now();
    let i = inertia(&adjacency_matrix(g));
    let reduced = is_reduced(g);
    let graph_id = write_graph6(g).expect("supported orders encode");
    let mut results = Vec::new();
    for id in CheckId::SELECTABLE {
        if !enabled.contains(&id) {
            continue;
        }
        match id {
            CheckId::Main => results.push(check_main(&i)),
            CheckId::SignatureForm => results.push(check_signature_form(&i)),
            CheckId::Weaker => results.push(check_weaker(&i)),
            CheckId::Torgasev => results.push(check_torgasev(&i, g.order(), Some(reduced))),
            CheckId::MohammadianOrder => {
                results.push(check_mohammadian_order(&i, g.order(), Some(reduced)))
            }
            CheckId::RankOrder => results.push(check_rank_order(&i, g.order(), Some(reduced))),
            CheckId::MaYangLi => {
                let (a, b) = check_ma_yang_li(g, &i, limits.cycle_cap);
                results.push(a);
                results.push(b);
            }
            CheckId::LineGraph => {
                let (a, b) = check_line_graph(g);
                results.push(a);
                results.push(b);
            }
            CheckId::Energy => results.push(check_energy(g)),
            CheckId::TreeLaplacian => results.push(check_tree_laplacian(g)),
            CheckId::CographInertia => results.push(check_cograph_inertia(g, &i)),
            CheckId::SelfComplementary => {
                results.push(check_self_complementary(g, &i, limits.iso_limit))
            }
            CheckId::AbsoluteBound => results.push(CheckResult::not_applicable(
                CheckId::AbsoluteBound,
                "spectrum fixtures only",
            )),
            CheckId::SignatureC1 | CheckId::LineGraphFloor => {}
        }
    }
    ConjectureReport {
        graph_id,
        order: g.order(),
        size: g.size(),
        inertia: i,
        signature: i.signature(),
        rank: i.rank(),
        reduced: Some(reduced),
        results,
        elapsed: start.elapsed(),
        approximate: false,
    }
}

/// Run the spectrum-applicable checks on a fixture.
pub fn run_spectrum_checks(
    name: &str,
    spec: &SpectrumSpec,
    enabled: &[CheckId],
) -> ConjectureReport {
    let start = Instant::now();
    let i = crate::constructions::inertia_from_spectrum(spec);
    let mut results = Vec::new();
    for id in CheckId::SELECTABLE {
        if !enabled.contains(&id) {
            continue;
        }
        match id {
            CheckId::Main => results.push(check_main(&i)),
            CheckId::SignatureForm => results.push(check_signature_form(&i)),
            CheckId::Weaker => results.push(check_weaker(&i)),
            CheckId::AbsoluteBound => results.push(check_absolute_bound(spec)),
            other => results.push(CheckResult::not_applicable(
                other,
                "requires graph structure",
            )),
        }
    }
    ConjectureReport {
        graph_id: name.to_string(),
        order: spec.order(),
        size: 0,
        inertia: i,
        signature: i.signature(),
        rank: i.rank(),
        reduced: None,
        results,
        elapsed: start.elapsed(),
        approximate: false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{
        complete, cycle, disjoint_union, h1, h2, kotlov_lovasz_double, paley, path, SpectrumSpec,
    };

    fn inertia_of(g: &Graph) -> Inertia {
        inertia(&adjacency_matrix(g))
    }

    #[test]
    fn main_check_catalogue() {
        // K2, GQ(2,4), McLaughlin are the tight cases; an impossible
        // triple exercises the violated arm
        assert_eq!(check_main(&Inertia::new(1, 0, 1)).verdict, Verdict::Tight);
        assert_eq!(check_main(&Inertia::new(21, 0, 6)).verdict, Verdict::Tight);
        assert_eq!(
            check_main(&Inertia::new(253, 0, 22)).verdict,
            Verdict::Tight
        );
        let bad = check_main(&Inertia::new(4, 0, 2));
        assert_eq!(bad.verdict, Verdict::Violated);
        assert_eq!(bad.lhs, BigInt::from(8));
        assert_eq!(bad.rhs, BigInt::from(6));
    }

    #[test]
    fn signature_form_matches_main_verdict() {
        // the two forms are algebraically equivalent; exhaust small triples
        for n_plus in 0..=12usize {
            for n_zero in 0..=3usize {
                for n_minus in 0..=6usize {
                    let i = Inertia::new(n_plus, n_zero, n_minus);
                    assert_eq!(
                        check_main(&i).verdict,
                        check_signature_form(&i).verdict,
                        "{i}"
                    );
                }
            }
        }
        assert_eq!(
            check_signature_form(&Inertia::new(3, 0, 2)).verdict,
            Verdict::Tight
        );
        assert_eq!(
            check_signature_form(&Inertia::new(6, 0, 3)).verdict,
            Verdict::Tight
        );
        assert_eq!(
            check_signature_form(&Inertia::new(1, 1, 1)).verdict,
            Verdict::Tight
        );
    }

    #[test]
    fn weaker_check_values() {
        assert_eq!(check_weaker(&Inertia::new(1, 0, 1)).verdict, Verdict::Tight);
        assert_eq!(check_weaker(&Inertia::new(3, 0, 2)).verdict, Verdict::Tight);
        assert_eq!(
            check_weaker(&Inertia::new(21, 0, 6)).verdict,
            Verdict::Tight
        );
    }

    #[test]
    fn torgasev_rows() {
        let k2 = check_torgasev(&Inertia::new(1, 0, 1), 2, Some(true));
        assert_eq!(k2.verdict, Verdict::Tight);
        let c5 = check_torgasev(&Inertia::new(3, 0, 2), 5, Some(true));
        assert_eq!(c5.verdict, Verdict::Tight); // n⁺ = 3 is the binding bound
        let h2r = check_torgasev(&Inertia::new(6, 0, 3), 9, Some(true));
        assert_eq!(h2r.verdict, Verdict::Tight);
        assert_eq!(
            check_torgasev(&Inertia::new(1, 0, 1), 2, Some(false)).verdict,
            Verdict::NotApplicable
        );
        assert_eq!(
            check_torgasev(&Inertia::new(5, 0, 5), 10, Some(true)).verdict,
            Verdict::NotApplicable
        );
    }

    #[test]
    fn mohammadian_and_rank_order() {
        assert_eq!(
            check_mohammadian_order(&Inertia::new(1, 0, 1), 2, Some(true)).verdict,
            Verdict::Tight
        );
        // the doubling of K2 reduced: order 6 = 2^3 − 2
        let d = kotlov_lovasz_double(&complete(2).unwrap()).unwrap();
        let di = inertia_of(&d);
        assert!(is_reduced(&d));
        assert_eq!(
            check_mohammadian_order(&di, d.order(), Some(true)).verdict,
            Verdict::Tight
        );
        assert_eq!(
            check_mohammadian_order(&Inertia::new(3, 0, 2), 5, Some(true)).verdict,
            Verdict::Holds
        );

        assert_eq!(
            check_rank_order(&Inertia::new(1, 0, 1), 2, Some(true)).verdict,
            Verdict::Tight
        );
        assert_eq!(
            check_rank_order(&Inertia::new(1, 0, 2), 3, Some(true)).verdict,
            Verdict::Tight
        );
        let c5 = check_rank_order(&Inertia::new(3, 0, 2), 5, Some(true));
        assert_eq!(c5.verdict, Verdict::Holds);
        assert_eq!(c5.rhs, BigInt::from(8));
    }

    #[test]
    fn cycle_counts_known() {
        let c5 = count_cycles_mod4(&cycle(5).unwrap(), 16).unwrap();
        assert_eq!(
            c5,
            CycleCounts {
                c1: 1,
                c3: 0,
                c5: 1
            }
        );
        let k3 = count_cycles_mod4(&complete(3).unwrap(), 16).unwrap();
        assert_eq!(
            k3,
            CycleCounts {
                c1: 1,
                c3: 1,
                c5: 0
            }
        );
        // K4: four triangles; the three quadrilaterals are even
        let k4 = count_cycles_mod4(&complete(4).unwrap(), 16).unwrap();
        assert_eq!(
            k4,
            CycleCounts {
                c1: 4,
                c3: 4,
                c5: 0
            }
        );
        assert!(count_cycles_mod4(&Graph::empty(20), 16).is_err());
    }

    #[test]
    fn ma_yang_li_cases() {
        let c5 = cycle(5).unwrap();
        let (conj, proven) = check_ma_yang_li(&c5, &inertia_of(&c5), 16);
        assert_eq!(conj.verdict, Verdict::Tight); // s = 1 = c5
        assert_eq!(proven.verdict, Verdict::Tight); // |s| = 1 = c1
        let k3 = complete(3).unwrap();
        let (conj, _) = check_ma_yang_li(&k3, &inertia_of(&k3), 16);
        assert_eq!(conj.verdict, Verdict::Tight); // s = −1 = −c3
        let p4 = path(4);
        let (conj, proven) = check_ma_yang_li(&p4, &inertia_of(&p4), 16);
        assert_eq!(conj.verdict, Verdict::Tight); // s = 0, no cycles
        assert_eq!(proven.verdict, Verdict::Tight);
    }

    #[test]
    fn line_graph_conjecture_cases() {
        let c5 = cycle(5).unwrap();
        let (conj, floor) = check_line_graph(&c5);
        assert_eq!(conj.verdict, Verdict::Tight); // L(C5) = C5: 3 = 2 + 1
        assert_ne!(floor.verdict, Verdict::Violated);
        // trees: the conjecture holds (margin stays nonnegative)
        let p5 = path(5);
        let (conj, _) = check_line_graph(&p5);
        assert_eq!(conj.verdict, Verdict::Holds);
        assert_eq!(conj.margin, BigInt::from(1)); // L(P5) = P4 has s = 0
        let two_c5 = disjoint_union(&c5, &c5).unwrap();
        let (conj, floor) = check_line_graph(&two_c5);
        assert_eq!(conj.verdict, Verdict::NotApplicable);
        assert_eq!(floor.verdict, Verdict::NotApplicable);
    }

    #[test]
    fn energy_check_small() {
        assert_eq!(check_energy(&complete(2).unwrap()).verdict, Verdict::Tight);
        let r = check_energy(&complete(3).unwrap());
        assert_ne!(r.verdict, Verdict::Violated);
        assert_eq!(
            check_energy(&Graph::empty(0)).verdict,
            Verdict::NotApplicable
        );
    }

    #[test]
    fn tree_laplacian_check() {
        let p5 = path(5);
        let r = check_tree_laplacian(&p5);
        assert_ne!(r.verdict, Verdict::Violated);
        assert_eq!(
            check_tree_laplacian(&cycle(4).unwrap()).verdict,
            Verdict::NotApplicable
        );
    }

    #[test]
    fn cograph_check() {
        let c4 = cycle(4).unwrap();
        let r = check_cograph_inertia(&c4, &inertia_of(&c4));
        assert_ne!(r.verdict, Verdict::Violated);
        assert_eq!(
            check_cograph_inertia(&path(4), &inertia_of(&path(4))).verdict,
            Verdict::NotApplicable
        );
    }

    #[test]
    fn self_complementary_check() {
        let p13 = paley(13).unwrap();
        let r = check_self_complementary(&p13, &inertia_of(&p13), 32);
        assert_eq!(r.verdict, Verdict::Tight); // n⁺ = 7 = n⁻ + 1
        let c5 = cycle(5).unwrap();
        assert_eq!(
            check_self_complementary(&c5, &inertia_of(&c5), 32).verdict,
            Verdict::Tight
        );
        assert_eq!(
            check_self_complementary(&path(4), &inertia_of(&path(4)), 32).verdict,
            Verdict::Holds
        );
        assert_eq!(
            check_self_complementary(
                &complete(3).unwrap(),
                &inertia_of(&complete(3).unwrap()),
                32
            )
            .verdict,
            Verdict::NotApplicable
        );
    }

    #[test]
    fn absolute_bound_fixtures() {
        let gq = SpectrumSpec::from_i64(27, &[(10, 1), (1, 20), (-5, 6)]).unwrap();
        let r = check_absolute_bound(&gq);
        assert_eq!(r.verdict, Verdict::Tight); // g side: 54 = 6·9
        let mcl = SpectrumSpec::from_i64(275, &[(112, 1), (2, 252), (-28, 22)]).unwrap();
        assert_eq!(check_absolute_bound(&mcl).verdict, Verdict::Tight);
        let paley13 = check_absolute_bound_multiplicities(13, 6, 6);
        assert_eq!(paley13.verdict, Verdict::Holds); // 26 ≤ 54
        let twoval = SpectrumSpec::from_i64(2, &[(1, 1), (-1, 1)]).unwrap();
        assert_eq!(
            check_absolute_bound(&twoval).verdict,
            Verdict::NotApplicable
        );
    }

    #[test]
    fn full_report_on_c5() {
        let c5 = cycle(5).unwrap();
        let report = run_all_checks(&c5, &CheckId::SELECTABLE, &Limits::default());
        assert_eq!(report.inertia, Inertia::new(3, 0, 2));
        assert_eq!(report.reduced, Some(true));
        assert_eq!(
            report.result(CheckId::Main).unwrap().verdict,
            Verdict::Tight
        );
        assert_eq!(
            report.result(CheckId::LineGraph).unwrap().verdict,
            Verdict::Tight
        );
        assert_eq!(
            report.result(CheckId::MaYangLi).unwrap().verdict,
            Verdict::Tight
        );
        assert_eq!(report.violated_conjectures().count(), 0);
        assert_eq!(report.violated_proven().count(), 0);
        // every enabled check contributes at least one record
        assert!(report.results.len() >= CheckId::SELECTABLE.len());
    }

    #[test]
    fn full_report_on_k1_and_h1() {
        let k1 = complete(1).unwrap();
        let report = run_all_checks(&k1, &CheckId::SELECTABLE, &Limits::default());
        assert_eq!(
            report.result(CheckId::Main).unwrap().verdict,
            Verdict::Tight
        );
        assert_eq!(report.violated_conjectures().count(), 0);

        let report = run_all_checks(&h1(), &CheckId::SELECTABLE, &Limits::default());
        assert_eq!(report.inertia, Inertia::new(6, 0, 3));
        assert_eq!(
            report.result(CheckId::Main).unwrap().verdict,
            Verdict::Tight
        );
        assert_eq!(
            report.result(CheckId::Torgasev).unwrap().verdict,
            Verdict::Tight
        );
        let report = run_all_checks(&h2(), &CheckId::SELECTABLE, &Limits::default());
        assert_eq!(
            report.result(CheckId::Main).unwrap().verdict,
            Verdict::Tight
        );
    }

    #[test]
    fn spectrum_reports() {
        let gq = SpectrumSpec::from_i64(27, &[(10, 1), (1, 20), (-5, 6)]).unwrap();
        let report = run_spectrum_checks(
            "GQ(2,4)",
            &gq,
            &[CheckId::Main, CheckId::Weaker, CheckId::AbsoluteBound],
        );
        assert_eq!(report.inertia, Inertia::new(21, 0, 6));
        assert!(report.results.iter().all(|r| r.verdict == Verdict::Tight));
    }

    #[test]
    fn complements_of_triangular_graphs_hold_with_quadratic_growth() {
        // complement spectra put 1 + k(k−3)/2 eigenvalues above zero
        // against only k − 1 below: n⁺ grows quadratically in n⁻ while
        // the main bound keeps holding
        for k in 5..=9usize {
            let g = crate::constructions::triangular(k).unwrap().complement();
            let i = inertia(&adjacency_matrix(&g));
            assert_eq!(i.n_plus, 1 + k * (k - 3) / 2, "k={k}");
            assert_eq!(i.n_minus, k - 1, "k={k}");
            let r = check_main(&i);
            assert_eq!(r.verdict, Verdict::Holds, "k={k}");
            assert_eq!(r.margin, BigInt::from(2 * k as i64 - 2), "k={k}");
        }
    }

    #[test]
    fn check_id_parsing() {
        assert_eq!(CheckId::parse("main").unwrap(), CheckId::Main);
        assert_eq!(
            CheckId::parse("tree_laplacian").unwrap(),
            CheckId::TreeLaplacian
        );
        assert!(CheckId::parse("signature_c1").is_err()); // companion, not selectable
        assert!(CheckId::parse("bogus").is_err());
    }
}
