//! The verification suite: one check per published claim, each returning a
//! status line and the details behind it.

use std::fmt;
use std::io;
use std::time::{Duration, Instant};

use msq_core::constructions::{cycle_structured_witness, edge_cover_witness, squares_chain_witness, triangular_complete_witness};
use msq_core::graph::{all_graphs, families, EdgeCover};
use msq_core::invariants::{self, compute, cs_check, ms_check};
use msq_core::veronese::{best_snd, doubling_lower_bound, doubling_upper_formula, is_complete, min_doubling_set, snd_construction};
use msq_core::wlp::{has_wlp, ms_via_wlp_chain, squares_ms_formula, DEFAULT_WLP_TRIALS};
use msq_core::{FieldCtx, Graph, InvariantKind, InvariantReport, LinearForm, QuadForm, QuadIdeal, SearchMode, SearchOptions};
use rand::Rng;
use serde::Serialize;

use crate::campaign::{run_search, SearchConfig};
use crate::input::Input;

pub const CRITERIA: usize = 16;

/// Rows that depend on the prime are skipped below this size.
pub const MIN_FIELD_SENSITIVE_PRIME: u32 = 1000;

#[derive(Debug, Clone, Copy)]
pub struct VerifyConfig {
    pub prime: u32,
    pub seed: u64,
    pub trials: usize,
    /// Trials per campaign in the null-result row.
    pub campaign_budget: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { prime: FieldCtx::DEFAULT_PRIME, seed: 0, trials: invariants::DEFAULT_TRIALS, campaign_budget: 100_000 }
    }
}

impl VerifyConfig {
    fn ctx(&self) -> FieldCtx {
        FieldCtx::with_options(self.prime as u64, self.seed, true).expect("verified prime")
    }

    fn field_too_small(&self) -> bool {
        self.prime < MIN_FIELD_SENSITIVE_PRIME
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
    /// Values agree but a conditional hypothesis was not observed.
    Observation,
    /// A randomized search hit where none was expected.
    Finding,
}

impl Status {
    pub fn is_failure(self) -> bool {
        self == Status::Fail
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
            Status::Observation => "PASS (recorded observation)",
            Status::Finding => "FINDING",
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RowOutcome {
    pub id: usize,
    pub title: &'static str,
    pub status: Status,
    pub details: Vec<String>,
    pub seconds: f64,
}

impl RowOutcome {
    pub fn line(&self) -> String {
        format!("[{}] criterion {}: {} ({:.1}s)", self.status, self.id, self.title, self.seconds)
    }
}

impl fmt::Display for RowOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.line())?;
        for d in &self.details {
            writeln!(f, "    {d}")?;
        }
        Ok(())
    }
}

pub fn title(id: usize) -> &'static str {
    match id {
        1 => "complete graphs: ms = 1, cs = least r with C(r+1,2) >= n",
        2 => "triangular construction witnesses cs for K_t",
        3 => "squares ideals: cs = n - 1 with chain witness",
        4 => "n = 3 monomial ideals with t = 3 and t = 4",
        5 => "cs = 1 when one quadratic monomial survives",
        6 => "stars: cs = n, ms = n - 1",
        7 => "paths: cs = n, small ms values",
        8 => "cycles: odd cs, small ms values, structured ms witnesses up to n = 40",
        9 => "null campaigns on C8 (ms level 4, cs level 7)",
        10 => "Petersen graph: ms in [4,5], cs bounds, spoke cover",
        11 => "join law and complete multipartite graphs",
        12 => "kites, jellyfish, star plus complement",
        13 => "chordal complement law and mcn bound",
        14 => "doubling sets: exact minima, bounds, S(n,d) completeness",
        15 => "weak Lefschetz chain for squares ideals",
        16 => "property suites: dominance, GF(3) oracle, monotonicity, relabeling",
        _ => "unknown",
    }
}

/// Collects failures; the row passes when none were recorded.
#[derive(Default)]
struct Row {
    details: Vec<String>,
    failures: usize,
}

impl Row {
    fn check(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.failures += 1;
            self.details.push(format!("failed: {}", what.into()));
        }
    }

    fn note(&mut self, what: impl Into<String>) {
        self.details.push(what.into());
    }

    fn status(&self) -> Status {
        if self.failures > 0 {
            Status::Fail
        } else {
            Status::Pass
        }
    }
}

fn report(ctx: &FieldCtx, kind: InvariantKind, ideal: &QuadIdeal, alpha: Option<usize>, trials: usize) -> InvariantReport {
    let opts = SearchOptions { trials, alpha_hint: alpha, mode: SearchMode::Randomized };
    compute(ctx, kind, ideal, &opts).expect("search within guards")
}

fn graph_ms(ctx: &FieldCtx, g: &Graph, trials: usize) -> InvariantReport {
    report(ctx, InvariantKind::Ms, &g.edge_ideal(), g.independence_number().ok(), trials)
}

fn graph_cs(ctx: &FieldCtx, g: &Graph, trials: usize) -> InvariantReport {
    report(ctx, InvariantKind::Cs, &g.edge_ideal(), g.independence_number().ok(), trials)
}

fn show(r: &InvariantReport) -> String {
    match r.value {
        Some(v) => format!("{v}"),
        None => format!("[{}, {}]", r.lo, r.hi),
    }
}

/// Runs one criterion.
pub fn run_criterion(id: usize, cfg: &VerifyConfig) -> RowOutcome {
    let start = Instant::now();
    let field_sensitive = !matches!(id, 14 | 16);
    let (status, details) = if field_sensitive && cfg.field_too_small() {
        (Status::Skipped, vec![format!("skipped: randomized rows need p >= {MIN_FIELD_SENSITIVE_PRIME}, got {}", cfg.prime)])
    } else {
        match id {
            1 => finish(complete_graphs(cfg)),
            2 => finish(triangular(cfg)),
            3 => finish(squares(cfg)),
            4 => finish(three_variable_cases(cfg)),
            5 => finish(cs_one(cfg)),
            6 => finish(stars(cfg)),
            7 => finish(paths(cfg)),
            8 => finish(cycles(cfg)),
            9 => campaigns(cfg),
            10 => finish(petersen(cfg)),
            11 => finish(joins(cfg)),
            12 => finish(wedges(cfg)),
            13 => finish(chordal(cfg)),
            14 => finish(doubling()),
            15 => wlp_chain(cfg),
            16 => finish(properties(cfg)),
            _ => (Status::Fail, vec![format!("no criterion {id}")]),
        }
    };
    RowOutcome { id, title: title(id), status, details, seconds: elapsed(start) }
}

fn elapsed(start: Instant) -> f64 {
    Duration::as_secs_f64(&start.elapsed())
}

fn finish(row: Row) -> (Status, Vec<String>) {
    (row.status(), row.details)
}

pub fn run_all(cfg: &VerifyConfig) -> Vec<RowOutcome> {
    (1..=CRITERIA).map(|id| run_criterion(id, cfg)).collect()
}

fn least_triangular_index(n: usize) -> usize {
    (1..).find(|r| r * (r + 1) / 2 >= n).expect("exists")
}

fn complete_graphs(cfg: &VerifyConfig) -> Row {
    let ctx = cfg.ctx();
    let mut row = Row::default();
    for n in 2..=12 {
        let r = graph_ms(&ctx, &families::complete(n).unwrap(), cfg.trials);
        row.check(r.value == Some(1), format!("ms(K{n}) = {}", show(&r)));
    }
    let mut cs = Vec::new();
    for n in 2..=21 {
        let r = graph_cs(&ctx, &families::complete(n).unwrap(), cfg.trials);
        let want = least_triangular_index(n);
        row.check(r.value == Some(want), format!("cs(K{n}) = {}, expected {want}", show(&r)));
        cs.push(show(&r));
    }
    row.note(format!("cs(K2..K21) = {}", cs.join(" ")));
    row
}

fn triangular(cfg: &VerifyConfig) -> Row {
    let ctx = cfg.ctx();
    let mut row = Row::default();
    for r in 1..=6 {
        let (t, forms) = triangular_complete_witness(r).unwrap();
        let ok = cs_check(&ctx, &families::complete(t).unwrap().edge_ideal(), &forms).unwrap();
        row.check(ok, format!("r = {r}: cs check on K{t}"));
    }
    let (_, forms) = triangular_complete_witness(4).unwrap();
    let expected: [&[usize]; 4] = [&[1, 2, 3, 7], &[1, 4, 5, 8], &[2, 4, 6, 9], &[3, 5, 6, 10]];
    for (f, e) in forms.iter().zip(expected) {
        let want = LinearForm::sum_of(10, e).unwrap();
        row.check(*f == want, format!("r = 4 form {f} differs from {want}"));
    }
    row
}

fn squares(cfg: &VerifyConfig) -> Row {
    let ctx = cfg.ctx();
    let mut row = Row::default();
    for n in 2..=8 {
        let ideal = QuadIdeal::squares(n);
        let r = report(&ctx, InvariantKind::Cs, &ideal, None, cfg.trials);
        row.check(r.value == Some(n - 1), format!("cs(squares {n}) = {}", show(&r)));
        let ok = cs_check(&ctx, &ideal, &squares_chain_witness(n).unwrap()).unwrap();
        row.check(ok, format!("chain witness fails for n = {n}"));
    }
    row
}

const N3_MONOMIALS: [(usize, usize); 6] = [(1, 1), (1, 2), (1, 3), (2, 2), (2, 3), (3, 3)];

fn subsets(k: usize) -> Vec<Vec<(usize, usize)>> {
    (0u32..64)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| N3_MONOMIALS.iter().enumerate().filter(|(i, _)| m & (1 << i) != 0).map(|(_, &p)| p).collect())
        .collect()
}

fn three_variable_cases(cfg: &VerifyConfig) -> Row {
    let ctx = cfg.ctx();
    let mut row = Row::default();
    let special = |gens: &[(usize, usize)]| {
        (1..=3).any(|i| (i + 1..=3).any(|j| [(i, i), (j, j), (i, j)].iter().all(|p| gens.contains(p))))
    };
    let mut threes = 0;
    let t3 = subsets(3);
    for gens in &t3 {
        let ideal = QuadIdeal::from_monomials(3, gens).unwrap();
        let r = report(&ctx, InvariantKind::Cs, &ideal, None, cfg.trials);
        let want = if special(gens) { 3 } else { 2 };
        threes += usize::from(want == 3);
        row.check(r.settled() == Some(want), format!("cs{gens:?} = {}, expected {want}", show(&r)));
    }
    row.check(t3.len() == 20 && threes == 3, format!("{} ideals with t = 3, {threes} of the special shape", t3.len()));
    let t4 = subsets(4);
    for gens in &t4 {
        let ideal = QuadIdeal::from_monomials(3, gens).unwrap();
        let r = report(&ctx, InvariantKind::Cs, &ideal, None, cfg.trials);
        row.check(r.value == Some(2), format!("cs{gens:?} = {}, expected 2", show(&r)));
    }
    row.check(t4.len() == 15, "fifteen ideals with t = 4");
    row.note("special shapes are settled by excluding level 2 with randomized search");
    row
}

fn cs_one(cfg: &VerifyConfig) -> Row {
    let ctx = cfg.ctx();
    let mut row = Row::default();
    for n in 2..=3usize {
        let all: Vec<(usize, usize)> = (1..=n).flat_map(|i| (i..=n).map(move |j| (i, j))).collect();
        for skip in 0..all.len() {
            let gens: Vec<_> = all.iter().enumerate().filter(|(k, _)| *k != skip).map(|(_, &p)| p).collect();
            let r = report(&ctx, InvariantKind::Cs, &QuadIdeal::from_monomials(n, &gens).unwrap(), None, cfg.trials);
            row.check(r.value == Some(1), format!("n = {n} without x{}x{}: cs = {}", all[skip].0, all[skip].1, show(&r)));
        }
    }
    row
}

fn stars(cfg: &VerifyConfig) -> Row {
    let ctx = cfg.ctx();
    let mut row = Row::default();
    for n in 3..=8 {
        let g = families::star(n).unwrap();
        let cs = graph_cs(&ctx, &g, cfg.trials);
        let ms = graph_ms(&ctx, &g, cfg.trials);
        row.check(cs.value == Some(n), format!("cs(S{n}) = {}", show(&cs)));
        row.check(ms.value == Some(n - 1), format!("ms(S{n}) = {}", show(&ms)));
    }
    row
}

fn paths(cfg: &VerifyConfig) -> Row {
    let ctx = cfg.ctx();
    let mut row = Row::default();
    for n in 4..=8 {
        let r = graph_cs(&ctx, &families::path(n).unwrap(), cfg.trials);
        row.check(r.value == Some(n), format!("cs(P{n}) = {}", show(&r)));
    }
    for (n, want) in [(4, 2), (5, 3)] {
        let r = graph_ms(&ctx, &families::path(n).unwrap(), cfg.trials);
        row.check(r.value == Some(want), format!("ms(P{n}) = {}", show(&r)));
    }
    let r = graph_ms(&ctx, &families::path(6).unwrap(), cfg.trials);
    row.check(r.within(3, 4), format!("ms(P6) = {} not within [3, 4]", show(&r)));
    row.note(format!("ms(P6) = {}", show(&r)));
    row
}

fn cycles(cfg: &VerifyConfig) -> Row {
    let ctx = cfg.ctx();
    let mut row = Row::default();
    for n in [3, 5, 7, 9] {
        let r = graph_cs(&ctx, &families::cycle(n).unwrap(), cfg.trials);
        row.check(r.value == Some(n - 1), format!("cs(C{n}) = {}", show(&r)));
    }
    for (n, want) in [(3, 1), (4, 2), (6, 3)] {
        let r = graph_ms(&ctx, &families::cycle(n).unwrap(), cfg.trials);
        row.check(r.value == Some(want), format!("ms(C{n}) = {}", show(&r)));
    }
    for (n, lo, hi) in [(5, 2, 3), (7, 3, 4)] {
        let r = graph_ms(&ctx, &families::cycle(n).unwrap(), cfg.trials);
        row.check(r.within(lo, hi), format!("ms(C{n}) = {} not within [{lo}, {hi}]", show(&r)));
        row.note(format!("ms(C{n}) = {}", show(&r)));
    }
    for n in 8..=40 {
        let forms = cycle_structured_witness(&ctx, n).unwrap();
        let ok = ms_check(&ctx, &families::cycle(n).unwrap().edge_ideal(), &forms).unwrap();
        row.check(ok, format!("structured forms fail for C{n}"));
    }
    row
}

fn campaigns(cfg: &VerifyConfig) -> (Status, Vec<String>) {
    let ctx = cfg.ctx();
    let input = Input::from_graph("cycle:8", families::cycle(8).unwrap());
    let mut details = Vec::new();
    let mut hits = 0;
    for (kind, level) in [(InvariantKind::Ms, 4), (InvariantKind::Cs, 7)] {
        let sc = SearchConfig { kind, level, budget: cfg.campaign_budget, offset: 0 };
        let s = run_search(&ctx, &input, &sc, &mut io::sink()).expect("campaign");
        details.push(format!(
            "{} level {level} on C8: {} hits in {} trials (per-trial miss bound {}/{})",
            kind.name(),
            s.hits,
            s.trials,
            s.bound.num,
            s.bound.den
        ));
        if s.hits > 0 {
            details.push(format!("FINDING: first hit at trial {:?}; rerun with `msq search` to record it", s.first_hit));
        }
        hits += s.hits;
    }
    (if hits == 0 { Status::Pass } else { Status::Finding }, details)
}

fn petersen(cfg: &VerifyConfig) -> Row {
    let ctx = cfg.ctx();
    let mut row = Row::default();
    let p = families::petersen();
    row.check(p.independence_number().unwrap() == 4, "alpha(P) = 4");
    let ms = graph_ms(&ctx, &p, cfg.trials);
    row.check(ms.within(4, 5) && ms.lo == 4, format!("ms(P) = {}", show(&ms)));
    let alpha_used = ms.bounds_used.iter().any(|b| b.name == "dim R" && b.value == 4);
    row.check(alpha_used, "ms lower bound records dim R = 4");
    row.note(format!("ms(P) = {}", show(&ms)));
    let cs = graph_cs(&ctx, &p, cfg.trials);
    row.check(cs.within(8, 10), format!("cs(P) = {} not within [8, 10]", show(&cs)));
    row.check(cs.lo == 9, format!("cs lower bound {} (expected 9)", cs.lo));
    row.note(format!("cs(P) = {}", show(&cs)));
    let spokes = EdgeCover { edges: (1..=5).map(|i| (i, i + 5)).collect() };
    let covers = p.k_connected_edge_covers(5).unwrap();
    row.check(covers.contains(&spokes), "spoke cover among the 5-edge clique-adjacent covers");
    row.note(format!("{} clique-adjacent covers with 5 edges", covers.len()));
    let ok = ms_check(&ctx, &p.edge_ideal(), &edge_cover_witness(&p, &spokes).unwrap()).unwrap();
    row.check(ok, "spoke forms witness ms <= 5");
    row
}

fn partitions(n: usize, max: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in (1..=n.min(max)).rev() {
        for mut rest in partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn joins(cfg: &VerifyConfig) -> Row {
    let ctx = cfg.ctx();
    let mut row = Row::default();
    let graphs = [
        ("P3", families::path(3).unwrap()),
        ("C4", families::cycle(4).unwrap()),
        ("K3", families::complete(3).unwrap()),
        ("S4", families::star(4).unwrap()),
        ("E2", Graph::empty(2).unwrap()),
        ("E3", Graph::empty(3).unwrap()),
    ];
    let ms: Vec<usize> = graphs.iter().map(|(_, g)| graph_ms(&ctx, g, cfg.trials).settled().unwrap()).collect();
    for a in 0..graphs.len() {
        for b in a..graphs.len() {
            let j = graphs[a].1.join(&graphs[b].1).unwrap();
            let got = graph_ms(&ctx, &j, cfg.trials).settled();
            let want = ms[a].max(ms[b]);
            row.check(got == Some(want), format!("ms({} * {}) = {got:?}, expected {want}", graphs[a].0, graphs[b].0));
        }
    }
    let mut count = 0;
    for n in 1..=7 {
        for parts in partitions(n, n) {
            let g = families::complete_multipartite(&parts).unwrap();
            let r = graph_ms(&ctx, &g, cfg.trials);
            let want = *parts.iter().max().unwrap();
            row.check(r.value == Some(want), format!("ms(K{parts:?}) = {}", show(&r)));
            count += 1;
        }
    }
    row.note(format!("{count} complete multipartite graphs"));
    row
}

fn wedges(cfg: &VerifyConfig) -> Row {
    let ctx = cfg.ctx();
    let mut row = Row::default();
    for n in 5..=8 {
        let r = graph_ms(&ctx, &families::kite(n).unwrap(), cfg.trials);
        row.check(r.value == Some(2), format!("ms(T{n}) = {}", show(&r)));
    }
    for m in 1..=5 {
        for n in 1..=4 {
            let g = families::jellyfish(m, n).unwrap();
            let r = graph_ms(&ctx, &g, cfg.trials);
            row.check(r.value == Some(n + 1), format!("ms(J{m},{n}) = {}, expected {}", show(&r), n + 1));
        }
    }
    for n in 3..=7 {
        let s = families::star(n).unwrap();
        let a = graph_ms(&ctx, &s, cfg.trials).settled();
        let b = graph_ms(&ctx, &s.complement(), cfg.trials).settled();
        let sum = a.zip(b).map(|(a, b)| a + b);
        row.check(sum == Some(n + 1), format!("ms(S{n}) + ms(complement) = {sum:?}"));
    }
    row
}

fn random_graph<R: Rng>(rng: &mut R, max_n: usize) -> Graph {
    let n = rng.gen_range(1..=max_n);
    let density: f64 = rng.gen_range(0.1..0.9);
    let mut edges = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            if rng.gen_bool(density) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

fn chordal(cfg: &VerifyConfig) -> Row {
    let ctx = cfg.ctx();
    let mut row = Row::default();
    let mut rng = ctx.rng(0x4348_4f52_4441_4c00);
    let (mut chordal, mut other) = (0, 0);
    while chordal < 200 {
        let g = random_graph(&mut rng, 8);
        let alpha = g.independence_number().unwrap();
        let r = graph_ms(&ctx, &g, cfg.trials);
        match g.mcn().unwrap() {
            None => {
                chordal += 1;
                row.check(r.value == Some(alpha), format!("chordal complement {:?}: ms = {}, alpha = {alpha}", g.edges(), show(&r)));
            }
            Some(m) => {
                other += 1;
                let bound = g.n() + 3 - m;
                row.check(r.hi <= bound, format!("{:?}: ms = {} exceeds n - mcn + 3 = {bound}", g.edges(), show(&r)));
            }
        }
    }
    row.note(format!("{chordal} graphs with chordal complement, {other} without"));
    row
}

fn brute_min_doubling(n: usize) -> usize {
    let target: u64 = (1u64 << (2 * n + 1)) - 1;
    let mut best = n + 1;
    for mask in 0u64..(1 << (n + 1)) {
        let size = mask.count_ones() as usize;
        if size >= best {
            continue;
        }
        let mut sums = 0u64;
        let mut rest = mask;
        while rest != 0 {
            let a = rest.trailing_zeros();
            sums |= mask << a;
            rest &= rest - 1;
        }
        if sums & target == target {
            best = size;
        }
    }
    best
}

fn doubling() -> Row {
    let mut row = Row::default();
    for n in 1..=20 {
        let (k, s) = min_doubling_set(n).unwrap();
        let brute = brute_min_doubling(n);
        row.check(k == brute && s.is_complete(), format!("n = {n}: search {k}, enumeration {brute}"));
    }
    let mut sizes = Vec::new();
    for n in 1..=40 {
        let (k, s) = min_doubling_set(n).unwrap();
        let lower = doubling_lower_bound(n);
        let snd = best_snd(n).unwrap().len();
        let formula = doubling_upper_formula(n);
        row.check(s.is_complete(), format!("n = {n}: reported set incomplete"));
        row.check(lower <= k && k <= snd && snd <= formula, format!("n = {n}: {lower} <= {k} <= {snd} <= {formula}"));
        sizes.push(k.to_string());
    }
    row.note(format!("minimum sizes n = 1..40: {}", sizes.join(" ")));
    for n in 1..=200 {
        for d in 1..=n {
            let s = snd_construction(n, d).unwrap();
            row.check(is_complete(n, &s.members), format!("S({n}, {d}) incomplete"));
        }
    }
    row
}

fn wlp_chain(cfg: &VerifyConfig) -> (Status, Vec<String>) {
    let ctx = cfg.ctx();
    let mut row = Row::default();
    for n in 1..=6 {
        let ok = has_wlp(&ctx, &QuadIdeal::squares(n), DEFAULT_WLP_TRIALS).unwrap();
        row.check(ok, format!("WLP not observed for squares n = {n}"));
    }
    let mut unverified = Vec::new();
    for n in 2..=7 {
        let ideal = QuadIdeal::squares(n);
        let (chain_value, chain) = ms_via_wlp_chain(&ctx, &ideal).unwrap();
        let ms = report(&ctx, InvariantKind::Ms, &ideal, None, cfg.trials).settled();
        let formula = squares_ms_formula(n);
        row.check(
            ms == Some(chain_value) && chain_value == formula,
            format!("n = {n}: chain {chain_value}, search {ms:?}, formula {formula}"),
        );
        row.note(format!("n = {n}: ms = {chain_value}, h2 chain {:?}", chain.h2()));
        for s in chain.steps.iter().filter(|s| !s.wlp_verified) {
            unverified.push(format!(
                "n = {n}: step {} form is not a Lefschetz element; next Hilbert function {:?}",
                s.i, s.hilbert
            ));
        }
    }
    row.check(squares_ms_formula(3) == 1, "anchor ms = 1 at n = 3");
    let status = match row.status() {
        Status::Pass if !unverified.is_empty() => Status::Observation,
        s => s,
    };
    let mut details = row.details;
    details.extend(unverified);
    (status, details)
}

/// `ms` of every graph on at most five vertices, keyed by vertex count and
/// edge bitmask (in the order of `all_graphs`).
struct SmallTable {
    ms: Vec<Vec<usize>>,
}

fn edge_mask(g: &Graph) -> usize {
    let n = g.n();
    let mut mask = 0;
    let mut k = 0;
    for i in 1..=n {
        for j in i + 1..=n {
            if g.has_edge(i, j) {
                mask |= 1 << k;
            }
            k += 1;
        }
    }
    mask
}

impl SmallTable {
    fn build(ctx: &FieldCtx, trials: usize) -> Self {
        let ms = (0..=5)
            .map(|n| all_graphs(n).unwrap().iter().map(|g| graph_ms(ctx, g, trials).settled().unwrap()).collect())
            .collect();
        SmallTable { ms }
    }

    fn get(&self, g: &Graph) -> usize {
        self.ms[g.n()][edge_mask(g)]
    }
}

fn random_ideal<R: Rng>(ctx: &FieldCtx, rng: &mut R) -> QuadIdeal {
    let n = rng.gen_range(1..=5);
    let big = n * (n + 1) / 2;
    let t = rng.gen_range(0..=big);
    let sparse = rng.gen_bool(0.5);
    let forms: Vec<QuadForm> = (0..t)
        .map(|_| {
            let coeffs = (0..big)
                .map(|_| if sparse && rng.gen_bool(0.6) { 0 } else { rng.gen_range(0..ctx.p()) })
                .collect();
            QuadForm::from_coeffs(n, coeffs).unwrap()
        })
        .collect();
    QuadIdeal::span(ctx, n, &forms).unwrap()
}

fn random_form<R: Rng>(ctx: &FieldCtx, rng: &mut R, n: usize) -> LinearForm {
    LinearForm::new((0..n).map(|_| if rng.gen_bool(0.5) { 0 } else { rng.gen_range(0..ctx.p()) }).collect())
}

fn properties(cfg: &VerifyConfig) -> Row {
    let mut row = Row::default();
    let ctx = FieldCtx::with_options(cfg.prime as u64, cfg.seed, true).unwrap();
    let mut rng = ctx.rng(0x5052_4f50_0000_0000);

    // Dominance and monotonicity in the forms.
    let (mut cs_true, mut ms_true) = (0, 0);
    for _ in 0..1000 {
        let ideal = random_ideal(&ctx, &mut rng);
        let k = rng.gen_range(0..=ideal.n() + 1);
        let forms: Vec<LinearForm> = (0..k).map(|_| random_form(&ctx, &mut rng, ideal.n())).collect();
        let cs = cs_check(&ctx, &ideal, &forms).unwrap();
        let ms = ms_check(&ctx, &ideal, &forms).unwrap();
        cs_true += usize::from(cs);
        ms_true += usize::from(ms);
        row.check(!cs || ms, format!("cs passes but ms fails on n = {}", ideal.n()));
        let mut more = forms.clone();
        more.push(random_form(&ctx, &mut rng, ideal.n()));
        row.check(!ms || ms_check(&ctx, &ideal, &more).unwrap(), "adding a form broke an ms witness");
        row.check(!cs || cs_check(&ctx, &ideal, &more).unwrap(), "adding a form broke a cs witness");
    }
    row.note(format!("dominance: 1000 instances, {cs_true} cs passes, {ms_true} ms passes"));

    // Randomized against exhaustive over GF(3).
    let gf3 = FieldCtx::new(3, cfg.seed).unwrap();
    let mut compared = 0;
    for n in 1..=4 {
        for g in all_graphs(n).unwrap() {
            let ideal = g.edge_ideal();
            let alpha = g.independence_number().ok();
            let random = report(&gf3, InvariantKind::Ms, &ideal, alpha, 200);
            let exact = compute(&gf3, InvariantKind::Ms, &ideal, &SearchOptions { trials: 1, alpha_hint: alpha, mode: SearchMode::Exhaustive })
                .unwrap();
            row.check(random.settled() == exact.value, format!("GF(3) {:?}: randomized {}, exhaustive {:?}", g.edges(), show(&random), exact.value));
            compared += 1;
        }
    }
    row.note(format!("GF(3) oracle: {compared} graphs on at most 4 vertices"));

    if cfg.field_too_small() {
        row.note(format!("monotonicity and relabeling skipped for p = {}", cfg.prime));
        return row;
    }

    let table = SmallTable::build(&ctx, cfg.trials);
    let mut pairs = 0;
    for n in 1..=5 {
        for g in all_graphs(n).unwrap() {
            let base = table.get(&g);
            for i in 1..=n {
                for j in i + 1..=n {
                    if !g.has_edge(i, j) {
                        let up = table.get(&g.add_edge(i, j).unwrap());
                        row.check(base <= up + 1 && up <= base, format!("{:?} + {i}{j}: {base} -> {up}", g.edges()));
                        pairs += 1;
                    }
                }
            }
            for mask in 1u32..(1 << n) {
                let vs: Vec<usize> = (1..=n).filter(|v| mask & (1 << (v - 1)) != 0).collect();
                let h = g.induced_subgraph(&vs).unwrap();
                row.check(table.get(&h) <= base, format!("{:?} induced on {vs:?}", g.edges()));
            }
        }
    }
    row.note(format!("edge addition: {pairs} pairs; induced subgraphs of all graphs on at most 5 vertices"));

    let mut samples = 0;
    for _ in 0..40 {
        let g = random_graph(&mut rng, 7);
        let mut perm: Vec<usize> = (1..=g.n()).collect();
        for i in (1..perm.len()).rev() {
            perm.swap(i, rng.gen_range(0..=i));
        }
        let h = g.relabel(&perm).unwrap();
        let same = g.independence_number() == h.independence_number()
            && g.clique_cover_number() == h.clique_cover_number()
            && g.is_chordal() == h.is_chordal()
            && g.mcn() == h.mcn()
            && g.diameter() == h.diameter()
            && graph_ms(&ctx, &g, cfg.trials).settled() == graph_ms(&ctx, &h, cfg.trials).settled()
            && graph_cs(&ctx, &g, cfg.trials).settled() == graph_cs(&ctx, &h, cfg.trials).settled();
        row.check(same, format!("{:?} relabelled by {perm:?}", g.edges()));
        samples += 1;
    }
    row.note(format!("relabeling: {samples} samples on at most 7 vertices"));
    row
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (1..=7).map(|n| partitions(n, n).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11, 15]);
    }

    #[test]
    fn brute_doubling_small() {
        assert_eq!(brute_min_doubling(1), 2);
        assert_eq!(brute_min_doubling(2), 3);
        assert_eq!(brute_min_doubling(4), 4);
    }

    #[test]
    fn small_prime_skips() {
        let cfg = VerifyConfig { prime: 5, ..VerifyConfig::default() };
        let out = run_criterion(1, &cfg);
        assert_eq!(out.status, Status::Skipped);
        assert!(out.line().starts_with("[SKIP] criterion 1"));
    }
}
