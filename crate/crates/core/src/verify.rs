//! Exhaustive checks of the structural results about double-cycles against
//! brute-force transition graphs.
//!
//! Every case compares integers or configurations exactly. Sequence results
//! are never trusted alone: landing configurations are also looked up in the
//! transition graph.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::badc::{alternating, canonicalize, BadcSpec, Cycle, DoubleCycle, Kind, Layout};
use crate::dynamics::{AttractorKind, BuildOptions, Condensation, TransitionGraph};
use crate::network::{cycle_polarity, Configuration, LocalFunction, NetworkSpec, Sign};
use crate::seqdsl::{self, copy_property, sigma_forms, Trace};

pub const REPORT_SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Serialize)]
pub struct Case {
    pub id: String,
    pub n: usize,
    pub m: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kind: Option<Kind>,
    pub measured: BTreeMap<String, Value>,
    pub expected: BTreeMap<String, Value>,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Case {
    pub fn new(id: &str, n: usize, m: usize, kind: Option<Kind>) -> Self {
        Case {
            id: id.to_string(),
            n,
            m,
            kind,
            measured: BTreeMap::new(),
            expected: BTreeMap::new(),
            pass: false,
            note: None,
        }
    }

    pub fn measure(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.measured.insert(key.to_string(), value.into());
        self
    }

    pub fn expect(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.expected.insert(key.to_string(), value.into());
        self
    }

    pub fn note(mut self, text: impl Into<String>) -> Self {
        self.note = Some(text.into());
        self
    }

    pub fn verdict(mut self, pass: bool) -> Self {
        self.pass = pass;
        self
    }

    pub fn measured_i64(&self, key: &str) -> Option<i64> {
        self.measured.get(key).and_then(Value::as_i64)
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct VerificationReport {
    pub schema_version: u32,
    pub cases: Vec<Case>,
    pub summary: Summary,
}

impl Default for VerificationReport {
    fn default() -> Self {
        Self::from_cases(Vec::new())
    }
}

impl VerificationReport {
    pub fn from_cases(cases: Vec<Case>) -> Self {
        let passed = cases.iter().filter(|c| c.pass).count();
        VerificationReport {
            schema_version: REPORT_SCHEMA_VERSION,
            summary: Summary {
                passed,
                failed: cases.len() - passed,
            },
            cases,
        }
    }

    pub fn merge(reports: impl IntoIterator<Item = VerificationReport>) -> Self {
        Self::from_cases(reports.into_iter().flat_map(|r| r.cases).collect())
    }

    pub fn all_pass(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn cases_with_id<'a>(&'a self, id: &'a str) -> impl Iterator<Item = &'a Case> + 'a {
        self.cases.iter().filter(move |c| c.id == id)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.cases {
            let kind = c.kind.map(|k| k.to_string()).unwrap_or_else(|| "-".into());
            let _ = write!(
                out,
                "{} {:<32} n={:<2} m={:<2} {:<8}",
                if c.pass { "PASS" } else { "FAIL" },
                c.id,
                c.n,
                c.m,
                kind
            );
            let fmt = |map: &BTreeMap<String, Value>| {
                map.iter()
                    .map(|(k, v)| format!("{k}={v}"))
                    .collect::<Vec<_>>()
                    .join(" ")
            };
            let _ = write!(out, " {}", fmt(&c.measured));
            if !c.expected.is_empty() {
                let _ = write!(out, " | expected {}", fmt(&c.expected));
            }
            if let Some(note) = &c.note {
                let _ = write!(out, " ({note})");
            }
            out.push('\n');
        }
        let _ = writeln!(out, "{} passed, {} failed", self.summary.passed, self.summary.failed);
        out
    }
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    /// Sequence checks over every start configuration run only when the
    /// double-cycle has at most this many automata.
    pub exhaustive_max: usize,
    pub build: BuildOptions,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            exhaustive_max: 9,
            build: BuildOptions::default(),
        }
    }
}

/// All `(n, m)` with `min ≤ n, m` and `n + m - 1 ≤ max_automata`, in
/// lexicographic order.
pub fn size_pairs(min: usize, max_automata: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for n in min.max(1)..=max_automata {
        for m in min.max(1)..=max_automata {
            if n + m - 1 <= max_automata {
                out.push((n, m));
            }
        }
    }
    out
}

struct Explored {
    system: DoubleCycle,
    graph: TransitionGraph,
    condensation: Condensation,
}

impl Explored {
    fn new(kind: Kind, n: usize, m: usize, options: &VerifyOptions) -> Self {
        let system = DoubleCycle::canonical(kind, n, m).expect("valid sizes");
        let graph = TransitionGraph::build_with(system.network(), options.build).expect("within the cap");
        let condensation = graph.condensation();
        Explored {
            system,
            graph,
            condensation,
        }
    }

    fn layout(&self) -> Layout {
        self.system.layout()
    }

    fn fmt(&self, x: &Configuration) -> String {
        self.system.format(x)
    }

    fn recurrent(&self, x: &Configuration) -> bool {
        self.condensation.is_recurrent(x.bits() as u32)
    }

    fn all(&self) -> impl Iterator<Item = Configuration> {
        Configuration::all(self.layout().automata()).expect("within the cap")
    }

    fn attractor_members(&self) -> Vec<Vec<String>> {
        self.condensation
            .attractors(&self.graph)
            .iter()
            .map(|a| a.members.iter().map(|x| self.fmt(x)).collect())
            .collect()
    }
}

/// Aggregate of a sequence run over many starts.
#[derive(Default)]
struct SweepStats {
    starts: usize,
    wrong_landing: usize,
    over_bound: usize,
    not_recurrent: usize,
    max_effective: usize,
    first_failure: Option<String>,
}

impl SweepStats {
    fn record(&mut self, ex: &Explored, start: &Configuration, trace: &Trace, expected: &Configuration, bound: i64) {
        self.starts += 1;
        self.max_effective = self.max_effective.max(trace.effective);
        let landed = trace.final_config == *expected;
        let within = trace.effective as i64 <= bound;
        let recurrent = ex.recurrent(&trace.final_config);
        if !landed {
            self.wrong_landing += 1;
        }
        if !within {
            self.over_bound += 1;
        }
        if !recurrent {
            self.not_recurrent += 1;
        }
        if (!landed || !within || !recurrent) && self.first_failure.is_none() {
            self.first_failure = Some(format!(
                "from {} reached {} in {} effective updates",
                ex.fmt(start),
                ex.fmt(&trace.final_config),
                trace.effective
            ));
        }
    }

    fn into_case(self, case: Case) -> Case {
        let pass = self.wrong_landing == 0 && self.over_bound == 0 && self.not_recurrent == 0;
        let case = case
            .measure("starts", self.starts)
            .measure("maxEffective", self.max_effective)
            .measure("wrongLanding", self.wrong_landing)
            .measure("overBound", self.over_bound)
            .measure("notRecurrent", self.not_recurrent);
        match self.first_failure {
            Some(f) => case.note(f),
            None => case,
        }
        .verdict(pass)
    }
}

fn network_time_case(id: &str, ex: &Explored, kind: Kind, bound: i64) -> Case {
    let Layout { n, m } = ex.layout();
    let time = ex.graph.convergence_with(&ex.condensation).network_time;
    Case::new(id, n, m, Some(kind))
        .measure("networkTime", time)
        .expect("atMost", bound)
        .verdict(time as i64 <= bound)
}

fn positive_cases(n: usize, m: usize, options: &VerifyOptions) -> Vec<Case> {
    let ex = Explored::new(Kind::Positive, n, m, options);
    let layout = ex.layout();
    let (ni, mi) = (n as i64, m as i64);
    let zeros = layout.zeros();
    let ones = layout.ones();
    let attractors = ex.attractor_members();
    let expected = vec![vec![ex.fmt(&zeros)], vec![ex.fmt(&ones)]];
    let mut cases = vec![
        Case::new("positive.attractors", n, m, Some(Kind::Positive))
            .measure("attractors", json!(attractors))
            .expect("attractors", json!(expected))
            .verdict(attractors == expected),
        network_time_case("positive.convergence", &ex, Kind::Positive, 2 * (ni + mi) - 5),
    ];
    if layout.automata() <= options.exhaustive_max {
        let mut fix0 = SweepStats::default();
        let mut fix1 = SweepStats::default();
        for x in ex.all() {
            if x != ones {
                let t = seqdsl::fix0(&ex.system, x).expect("valid start");
                let mirrored = !t.annotations.is_empty();
                let bound = if mirrored { 2 * mi + ni - 3 } else { 2 * ni + mi - 3 };
                fix0.record(&ex, &x, &t, &zeros, bound);
            }
            let has_one = |c| layout.word(&x, c)[1..].iter().any(|&b| b);
            if x.get(0) || (has_one(Cycle::Left) && has_one(Cycle::Right)) {
                let t = seqdsl::fix1(&ex.system, x).expect("valid start");
                fix1.record(&ex, &x, &t, &ones, 2 * (ni + mi) - 5);
            }
        }
        cases.push(
            fix0.into_case(
                Case::new("positive.fix0", n, m, Some(Kind::Positive))
                    .expect("landing", ex.fmt(&zeros))
                    .expect("atMost", 2 * ni + mi - 3),
            ),
        );
        cases.push(
            fix1.into_case(
                Case::new("positive.fix1", n, m, Some(Kind::Positive))
                    .expect("landing", ex.fmt(&ones))
                    .expect("atMost", 2 * (ni + mi) - 5),
            ),
        );
    }
    cases
}

fn simp_case(id: &str, ex: &Explored, kind: Kind) -> Case {
    let Layout { n, m } = ex.layout();
    let zeros = ex.layout().zeros();
    let bound = 2 * n as i64 + m as i64 - 2;
    let mut stats = SweepStats::default();
    for x in ex.all() {
        let t = seqdsl::simp(&ex.system, x).expect("valid start");
        stats.record(ex, &x, &t, &zeros, bound);
    }
    stats.into_case(
        Case::new(id, n, m, Some(kind))
            .expect("landing", ex.fmt(&zeros))
            .expect("atMost", bound),
    )
}

fn mixed_cases(n: usize, m: usize, options: &VerifyOptions) -> Vec<Case> {
    let ex = Explored::new(Kind::Mixed, n, m, options);
    let zeros = ex.layout().zeros();
    let attractors = ex.attractor_members();
    let expected = vec![vec![ex.fmt(&zeros)]];
    let mut cases = vec![
        Case::new("mixed.attractors", n, m, Some(Kind::Mixed))
            .measure("attractors", json!(attractors))
            .expect("attractors", json!(expected))
            .verdict(attractors == expected),
        network_time_case("mixed.convergence", &ex, Kind::Mixed, 2 * n as i64 + m as i64 - 2),
    ];
    if ex.layout().automata() <= options.exhaustive_max {
        cases.push(simp_case("mixed.simp", &ex, Kind::Mixed));
    }
    cases
}

/// `0` when `k` is zero or odd, `1` otherwise.
pub fn alpha(k: usize) -> u64 {
    u64::from(k != 0 && k.is_multiple_of(2))
}

/// Size of the transient set with the two hub-adjacent terms added.
pub fn irreversible_count_sum(n: usize, m: usize) -> i64 {
    (alpha(n - 1) << (m - 1)) as i64 + (alpha(m - 1) << (n - 1)) as i64
}

/// The same expression with the second term subtracted.
pub fn irreversible_count_minus(n: usize, m: usize) -> i64 {
    (alpha(n - 1) << (m - 1)) as i64 - (alpha(m - 1) << (n - 1)) as i64
}

/// Whether `x` belongs to the predicted transient families of a negative
/// double-cycle: some odd cycle of size `k > 1` reads `(10)^{(k-1)/2}1`, or,
/// when both cycles are odd and larger than 1, `x` is
/// `((01)^{(n-1)/2}0,(01)^{(m-1)/2}0)`.
pub fn predicted_irreversible(layout: &Layout, x: &Configuration) -> bool {
    let pattern = |len: usize| {
        let mut w = alternating(true, len - 1);
        w.push(true);
        w
    };
    let hits = |c: Cycle| {
        let k = layout.size(c);
        k > 1 && k % 2 == 1 && layout.word(x, c) == pattern(k)
    };
    if hits(Cycle::Left) || hits(Cycle::Right) {
        return true;
    }
    let (n, m) = (layout.n, layout.m);
    if n > 1 && m > 1 && n % 2 == 1 && m % 2 == 1 {
        let tail = |len: usize| {
            let mut w = alternating(false, len - 1);
            w.push(false);
            w
        };
        return layout.word(x, Cycle::Left) == tail(n) && layout.word(x, Cycle::Right) == tail(m);
    }
    false
}

fn negative_cases(n: usize, m: usize, options: &VerifyOptions) -> Vec<Case> {
    let kind = Some(Kind::Negative);
    let ex = Explored::new(Kind::Negative, n, m, options);
    let layout = ex.layout();
    let total = 1i64 << layout.automata();
    let attractors = ex.condensation.attractors(&ex.graph);
    let sizes: Vec<usize> = attractors.iter().map(|a| a.size()).collect();
    let sum_form = irreversible_count_sum(n, m);
    let minus_form = irreversible_count_minus(n, m);
    let transient = total - sizes.iter().sum::<usize>() as i64;
    let mut cases = vec![Case::new("negative.attractors", n, m, kind)
        .measure("attractorCount", attractors.len())
        .measure("attractorSizes", json!(sizes))
        .measure("transientCount", transient)
        .measure("sumFormMatches", transient == sum_form)
        .measure("minusFormMatches", transient == minus_form)
        .expect("attractorCount", 1)
        .expect("attractorSize", total - sum_form)
        .expect("irreversibleSum", sum_form)
        .expect("irreversibleMinus", minus_form)
        .verdict(attractors.len() == 1 && sizes[0] as i64 == total - sum_form)];

    let mut unpredicted = Vec::new();
    let mut missed = Vec::new();
    let mut reversible = 0usize;
    for x in ex.all() {
        let is_transient = !ex.recurrent(&x);
        let predicted = predicted_irreversible(&layout, &x);
        if is_transient && !predicted {
            unpredicted.push(ex.fmt(&x));
        }
        if predicted && !is_transient {
            missed.push(ex.fmt(&x));
        }
        if is_transient && !ex.condensation.is_irreversible(x.bits() as u32) {
            reversible += 1;
        }
    }
    cases.push(
        Case::new("negative.transient-families", n, m, kind)
            .measure("unpredictedTransient", json!(unpredicted))
            .measure("predictedButRecurrent", json!(missed))
            .verdict(unpredicted.is_empty() && missed.is_empty()),
    );
    cases.push(
        Case::new("negative.irreversible", n, m, kind)
            .measure("transient", transient)
            .measure("reversibleTransient", reversible)
            .verdict(reversible == 0),
    );
    if n < 2 || m < 2 {
        return cases;
    }

    if layout.automata() <= options.exhaustive_max {
        cases.push(simp_case("negative.simp", &ex, Kind::Negative));
    }
    let zeros = layout.zeros();
    if n.is_multiple_of(2) && m.is_multiple_of(2) {
        cases.push(comp_case(&ex));
        cases.push(copy_p_case(&ex));
    } else {
        let (x0, x1) = sigma_forms(&layout).expect("an odd cycle");
        let (forward, back) = if n % 2 == 1 && m % 2 == 1 {
            (seqdsl::sigma_b(&ex.system, x0), seqdsl::sigma_b_inv(&ex.system, x1))
        } else {
            (seqdsl::sigma_a(&ex.system, x0), seqdsl::sigma_a_inv(&ex.system, x1))
        };
        let (forward, back) = (forward.expect("parity matches"), back.expect("parity matches"));
        cases.push(
            Case::new("negative.sigma", n, m, kind)
                .measure("forward", ex.fmt(&forward.final_config))
                .measure("back", ex.fmt(&back.final_config))
                .measure("bothRecurrent", ex.recurrent(&x0) && ex.recurrent(&x1))
                .expect("forward", ex.fmt(&x1))
                .expect("back", ex.fmt(&x0))
                .verdict(
                    forward.final_config == x1 && back.final_config == x0 && ex.recurrent(&x0) && ex.recurrent(&x1),
                ),
        );
        let c0 = seqdsl::comp_bit(&ex.system, zeros, false).expect("negative");
        let c1 = seqdsl::comp_bit(&ex.system, zeros, true).expect("negative");
        cases.push(
            Case::new("negative.comp-odd-landing", n, m, kind)
                .measure("compBit0", ex.fmt(&c0.final_config))
                .measure("compBit1", ex.fmt(&c1.final_config))
                .measure(
                    "landingsRecurrent",
                    ex.recurrent(&c0.final_config) && ex.recurrent(&c1.final_config),
                )
                .expect("compBit0", ex.fmt(&x0))
                .expect("compBit1", ex.fmt(&x1))
                .verdict(c0.final_config == x0 && c1.final_config == x1),
        );
        let (mut wrong, mut aborted, mut unmet) = (0usize, 0usize, 0usize);
        let mut max_effective = 0usize;
        let mut targets = 0usize;
        for y in ex.all() {
            if !ex.recurrent(&y) {
                continue;
            }
            targets += 1;
            let from = if y.get(0) { x1 } else { x0 };
            if [Cycle::Left, Cycle::Right]
                .iter()
                .any(|&c| copy_property(&layout, &from, &y, c).is_none())
            {
                unmet += 1;
            }
            match seqdsl::copy(&ex.system, from, &y) {
                Ok(t) => {
                    max_effective = max_effective.max(t.effective);
                    if t.final_config != y {
                        wrong += 1;
                    }
                }
                Err(_) => {
                    wrong += 1;
                    aborted += 1;
                }
            }
        }
        cases.push(
            Case::new("negative.copy-from-expressive", n, m, kind)
                .measure("targets", targets)
                .measure("preconditionUnmet", unmet)
                .measure("aborted", aborted)
                .measure("wrongLanding", wrong)
                .measure("maxEffective", max_effective)
                .verdict(wrong == 0),
        );
    }
    cases
}

fn comp_case(ex: &Explored) -> Case {
    let layout = ex.layout();
    let Layout { n, m } = layout;
    let (ni, mi) = (n as i64, m as i64);
    let zeros = layout.zeros();
    let mid = layout.pair(alternating(true, n), vec![true; m]).expect("layout sized");
    let goal = layout
        .pair(alternating(true, n), alternating(true, m))
        .expect("layout sized");
    let t1 = seqdsl::comp1(&ex.system, zeros).expect("negative");
    let t2 = seqdsl::comp2(&ex.system, t1.final_config).expect("negative");
    let t = seqdsl::comp(&ex.system, zeros).expect("negative");
    let b1 = (ni - 1) * (ni + mi - 2);
    let b2 = (mi - 2) * (ni + mi - 2) + (2 * mi - 1);
    let b = (ni + mi) * (ni + mi) - 5 * (ni - 1) - 3 * mi;
    let bfs = ex.graph.distance(&zeros, &goal);
    let pass = t1.final_config == mid
        && t2.final_config == goal
        && t.final_config == goal
        && t1.effective as i64 <= b1
        && t2.effective as i64 <= b2
        && t.effective as i64 <= b
        && bfs.is_some_and(|d| d as usize <= t.effective);
    Case::new("negative.comp", n, m, Some(Kind::Negative))
        .measure("comp1Landing", ex.fmt(&t1.final_config))
        .measure("comp2Landing", ex.fmt(&t2.final_config))
        .measure("comp1Effective", t1.effective)
        .measure("comp2Effective", t2.effective)
        .measure("compEffective", t.effective)
        .measure("bfsDistance", json!(bfs))
        .expect("comp1Landing", ex.fmt(&mid))
        .expect("comp2Landing", ex.fmt(&goal))
        .expect("comp1AtMost", b1)
        .expect("comp2AtMost", b2)
        .expect("compAtMost", b)
        .verdict(pass)
}

fn copy_p_case(ex: &Explored) -> Case {
    let layout = ex.layout();
    let Layout { n, m } = layout;
    let bound = 3 * (n as i64 + m as i64 - 4) - 1;
    let start = layout
        .pair(alternating(true, n), alternating(true, m))
        .expect("layout sized");
    let distances = ex.graph.distances_from(start.bits() as u32);
    let mut wrong = 0usize;
    let mut over = 0usize;
    let mut max_effective = 0usize;
    let mut worst = None;
    for y in ex.all() {
        let t = seqdsl::copy_p(&ex.system, start, &y).expect("canonical");
        if t.final_config != y {
            wrong += 1;
        }
        if t.effective as i64 > bound {
            over += 1;
        }
        if t.effective > max_effective {
            max_effective = t.effective;
            worst = Some(ex.fmt(&y));
        }
    }
    let bfs_max = distances
        .iter()
        .map(|d| d.map(i64::from).unwrap_or(-1))
        .max()
        .unwrap_or(0);
    Case::new("negative.copy_p", n, m, Some(Kind::Negative))
        .measure("start", ex.fmt(&start))
        .measure("targets", 1usize << layout.automata())
        .measure("wrongLanding", wrong)
        .measure("overBound", over)
        .measure("maxEffective", max_effective)
        .measure("worstTarget", json!(worst))
        .measure("bfsEccentricity", bfs_max)
        .expect("atMost", bound)
        .verdict(wrong == 0 && over == 0)
}

fn run_sizes(pairs: &[(usize, usize)], f: impl Fn(usize, usize) -> Vec<Case> + Sync) -> VerificationReport {
    let cases: Vec<Vec<Case>> = pairs.par_iter().map(|&(n, m)| f(n, m)).collect();
    VerificationReport::from_cases(cases.into_iter().flatten().collect())
}

pub fn verify_positive(pairs: &[(usize, usize)], options: &VerifyOptions) -> VerificationReport {
    run_sizes(pairs, |n, m| positive_cases(n, m, options))
}

pub fn verify_mixed(pairs: &[(usize, usize)], options: &VerifyOptions) -> VerificationReport {
    run_sizes(pairs, |n, m| mixed_cases(n, m, options))
}

pub fn verify_negative(pairs: &[(usize, usize)], options: &VerifyOptions) -> VerificationReport {
    run_sizes(pairs, |n, m| negative_cases(n, m, options))
}

/// Runs `copy` on every pair `(x, target)` with matching hubs whose cycles
/// each satisfy one of the copy properties.
pub fn verify_copy(n: usize, m: usize) -> VerificationReport {
    let system = DoubleCycle::canonical(Kind::Negative, n, m).expect("valid sizes");
    let layout = system.layout();
    let bound = 2 * (n as i64 + m as i64 - 6);
    let all: Vec<Configuration> = Configuration::all(layout.automata()).expect("small").collect();
    let rows: Vec<(usize, usize, usize, usize, Option<String>)> = all
        .par_iter()
        .map(|x| {
            let (mut pairs, mut wrong, mut over, mut max) = (0, 0, 0, 0);
            let mut example = None;
            for t in &all {
                if x.get(0) != t.get(0)
                    || copy_property(&layout, x, t, Cycle::Left).is_none()
                    || copy_property(&layout, x, t, Cycle::Right).is_none()
                {
                    continue;
                }
                pairs += 1;
                let trace = seqdsl::copy(&system, *x, t).expect("canonical");
                if trace.final_config != *t {
                    wrong += 1;
                }
                if trace.effective as i64 > bound {
                    over += 1;
                    if example.is_none() {
                        example = Some(format!(
                            "{} to {} takes {} effective updates",
                            system.format(x),
                            system.format(t),
                            trace.effective
                        ));
                    }
                }
                max = max.max(trace.effective);
            }
            (pairs, wrong, over, max, example)
        })
        .collect();
    let pairs: usize = rows.iter().map(|r| r.0).sum();
    let wrong: usize = rows.iter().map(|r| r.1).sum();
    let over: usize = rows.iter().map(|r| r.2).sum();
    let max = rows.iter().map(|r| r.3).max().unwrap_or(0);
    let example = rows.into_iter().find_map(|r| r.4);
    let mut case = Case::new("copy.exhaustive", n, m, None)
        .measure("pairs", pairs)
        .measure("wrongLanding", wrong)
        .measure("overBound", over)
        .measure("maxEffective", max)
        .expect("atMost", bound)
        .verdict(pairs > 0 && wrong == 0 && over == 0);
    if let Some(e) = example {
        case = case.note(e);
    }
    VerificationReport::from_cases(vec![case])
}

/// Exact shortest distance on a negative double-cycle with two cycles of size
/// `n` from all zeros to the alternating configuration with the hub at 1.
pub fn quadratic_distance(n: usize, options: &VerifyOptions) -> Option<u32> {
    let ex = Explored::new(Kind::Negative, n, n, options);
    let layout = ex.layout();
    let goal = layout
        .pair(alternating(true, n), alternating(true, n))
        .expect("layout sized");
    ex.graph.distance(&layout.zeros(), &goal)
}

pub fn verify_quadratic(sizes: &[usize], options: &VerifyOptions) -> VerificationReport {
    let distances: Vec<Option<u32>> = sizes.par_iter().map(|&n| quadratic_distance(n, options)).collect();
    let mut cases = Vec::new();
    for (&n, d) in sizes.iter().zip(&distances) {
        let delta = (n / 2) as i64;
        let lower = delta * (delta + 1);
        cases.push(
            Case::new("quadratic.distance", n, n, Some(Kind::Negative))
                .measure("distance", json!(d))
                .expect("atLeast", lower)
                .verdict(n % 2 == 0 && d.is_some_and(|d| d as i64 >= lower)),
        );
    }
    if sizes.len() >= 2 {
        let mut ratios = Vec::new();
        let mut superlinear = true;
        for k in 1..sizes.len() {
            let (a, b) = (sizes[k - 1] as u64, sizes[k] as u64);
            match (distances[k - 1], distances[k]) {
                (Some(da), Some(db)) if da > 0 => {
                    // db/da > b/a without floating point
                    superlinear &= (db as u64) * a > b * (da as u64);
                    ratios.push(json!([format!("{db}/{da}"), format!("{b}/{a}")]));
                }
                _ => superlinear = false,
            }
        }
        let (first, last) = (sizes[0], sizes[sizes.len() - 1]);
        cases.push(
            Case::new("quadratic.growth", first, last, Some(Kind::Negative))
                .measure("distances", json!(distances))
                .measure("ratioVsLinear", json!(ratios))
                .verdict(superlinear)
                .note("n and m columns hold the smallest and largest sizes"),
        );
    }
    VerificationReport::from_cases(cases)
}

/// Checks that canonicalising random arc-sign assignments yields an exact
/// isomorphism of transition graphs.
pub fn verify_canonicalization(samples: usize, n: usize, m: usize, seed: u64) -> VerificationReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let signs = |rng: &mut ChaCha8Rng, len: usize| -> Vec<Sign> {
        (0..len)
            .map(|_| {
                if rng.gen_bool(0.5) {
                    Sign::Negative
                } else {
                    Sign::Positive
                }
            })
            .collect()
    };
    let specs: Vec<BadcSpec> = (0..samples)
        .map(|_| {
            let l = signs(&mut rng, n);
            let r = signs(&mut rng, m);
            BadcSpec::with_signs(l, r).expect("sizes match")
        })
        .collect();
    let outcomes: Vec<(bool, Kind, bool)> = specs
        .par_iter()
        .map(|spec| {
            let net = spec.network().expect("valid");
            let (canon, relabel) = canonicalize(spec).expect("valid");
            let source = TransitionGraph::build(&net).expect("small");
            let target = TransitionGraph::build(canon.network()).expect("small");
            let map = |x: u32| relabel.apply(&source.configuration(x)).bits() as u32;
            let mut mapped: Vec<(u32, u32, u8)> = source
                .edge_list()
                .map(|(x, y, i)| (map(x), map(y), relabel.map_automaton(i as usize) as u8))
                .collect();
            let mut expected: Vec<(u32, u32, u8)> = target.edge_list().collect();
            mapped.sort_unstable();
            expected.sort_unstable();
            (mapped == expected, canon.kind(), relabel.is_identity())
        })
        .collect();
    let failures = outcomes.iter().filter(|o| !o.0).count();
    let count = |k: Kind| outcomes.iter().filter(|o| o.1 == k).count();
    let identity = outcomes.iter().filter(|o| o.2).count();
    VerificationReport::from_cases(vec![Case::new("canonical.isomorphism", n, m, None)
        .measure("samples", samples)
        .measure("failures", failures)
        .measure("positive", count(Kind::Positive))
        .measure("mixed", count(Kind::Mixed))
        .measure("negative", count(Kind::Negative))
        .measure("identityRelabelings", identity)
        .measure("seed", seed)
        .verdict(failures == 0)])
}

/// Random network on `size` automata. With `acyclic`, every automaton reads
/// only lower-indexed automata (automaton 0 holds a constant), so the
/// interaction graph has no cycle.
pub fn random_network(rng: &mut impl Rng, size: usize, acyclic: bool) -> NetworkSpec {
    let sign = |rng: &mut dyn rand::RngCore| {
        if rng.gen_bool(0.5) {
            Sign::Positive
        } else {
            Sign::Negative
        }
    };
    let functions = (0..size)
        .map(|i| {
            let pool: Vec<usize> = if acyclic { (0..i).collect() } else { (0..size).collect() };
            let roll = rng.gen_range(0..10);
            if pool.is_empty() || roll == 0 {
                // AND of a literal with its own negation: constant 0
                let a = if pool.is_empty() {
                    i
                } else {
                    *pool.choose(rng).expect("non-empty")
                };
                return LocalFunction::and(a, Sign::Positive, a, Sign::Negative);
            }
            if pool.len() >= 2 && roll >= 6 {
                let picked: Vec<usize> = pool.choose_multiple(rng, 2).copied().collect();
                let (pa, pb) = (sign(rng), sign(rng));
                return LocalFunction::and(picked[0], pa, picked[1], pb);
            }
            let a = *pool.choose(rng).expect("non-empty");
            if roll >= 3 {
                LocalFunction::Identity(a)
            } else {
                LocalFunction::Negation(a)
            }
        })
        .collect();
    NetworkSpec::new(functions).expect("sources in range")
}

#[derive(Default)]
struct CycleTally {
    acyclic: usize,
    acyclic_bad: usize,
    multistable: usize,
    multistable_bad: usize,
    oscillating: usize,
    oscillating_bad: usize,
    first_counterexample: Option<String>,
}

fn check_network(net: &NetworkSpec, tally: &mut CycleTally) {
    let arcs = net.interaction_graph().expect("small");
    let polarity = cycle_polarity(&arcs);
    let graph = TransitionGraph::build(net).expect("small");
    let attractors = graph.attractors();
    let stable = attractors
        .iter()
        .filter(|a| a.kind == AttractorKind::StableConfiguration)
        .count();
    let oscillations = attractors.len() - stable;
    let flag = |what: &str, tally: &mut CycleTally| {
        if tally.first_counterexample.is_none() {
            tally.first_counterexample = Some(format!("{what}: {:?}", net.functions()));
        }
    };
    if !polarity.positive && !polarity.negative {
        tally.acyclic += 1;
        if !(attractors.len() == 1 && stable == 1) {
            tally.acyclic_bad += 1;
            flag("acyclic network without a unique stable configuration", tally);
        }
    }
    if stable >= 2 {
        tally.multistable += 1;
        if !polarity.positive {
            tally.multistable_bad += 1;
            flag("several stable configurations without a positive cycle", tally);
        }
    }
    if oscillations >= 1 {
        tally.oscillating += 1;
        if !polarity.negative {
            tally.oscillating_bad += 1;
            flag("stable oscillation without a negative cycle", tally);
        }
    }
}

/// Fixed networks with known behaviour followed by `samples` seeded random
/// networks of at most `max_size` automata.
pub fn verify_cycle_theorems(samples: usize, max_size: usize, seed: u64) -> VerificationReport {
    let max_size = max_size.clamp(1, 10);
    let mut cases = Vec::new();
    let fixed: [(&str, Vec<LocalFunction>, usize, usize); 3] = [
        (
            "cycles.positive-three-cycle",
            vec![
                LocalFunction::Identity(2),
                LocalFunction::Identity(0),
                LocalFunction::Identity(1),
            ],
            2,
            0,
        ),
        (
            "cycles.negative-two-cycle",
            vec![LocalFunction::Negation(1), LocalFunction::Identity(0)],
            0,
            1,
        ),
        (
            "cycles.acyclic-chain",
            vec![
                LocalFunction::and(0, Sign::Positive, 0, Sign::Negative),
                LocalFunction::Negation(0),
                LocalFunction::Identity(1),
            ],
            1,
            0,
        ),
    ];
    for (id, functions, stable, oscillations) in fixed {
        let size = functions.len();
        let net = NetworkSpec::new(functions).expect("valid");
        let polarity = cycle_polarity(&net.interaction_graph().expect("small"));
        let attractors = TransitionGraph::build(&net).expect("small").attractors();
        let s = attractors
            .iter()
            .filter(|a| a.kind == AttractorKind::StableConfiguration)
            .count();
        let o = attractors.len() - s;
        let cycles_ok = match id {
            "cycles.positive-three-cycle" => polarity.positive,
            "cycles.negative-two-cycle" => polarity.negative,
            _ => !polarity.positive && !polarity.negative,
        };
        cases.push(
            Case::new(id, size, 0, None)
                .measure("stableConfigurations", s)
                .measure("stableOscillations", o)
                .measure("positiveCycle", polarity.positive)
                .measure("negativeCycle", polarity.negative)
                .expect("stableConfigurations", stable)
                .expect("stableOscillations", oscillations)
                .verdict(s == stable && o == oscillations && cycles_ok)
                .note("n holds the number of automata"),
        );
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let networks: Vec<NetworkSpec> = (0..samples)
        .map(|k| {
            let size = rng.gen_range(1..=max_size);
            random_network(&mut rng, size, k % 2 == 0)
        })
        .collect();
    let tallies: Vec<CycleTally> = networks
        .par_iter()
        .map(|net| {
            let mut t = CycleTally::default();
            check_network(net, &mut t);
            t
        })
        .collect();
    let mut total = CycleTally::default();
    for t in tallies {
        total.acyclic += t.acyclic;
        total.acyclic_bad += t.acyclic_bad;
        total.multistable += t.multistable;
        total.multistable_bad += t.multistable_bad;
        total.oscillating += t.oscillating;
        total.oscillating_bad += t.oscillating_bad;
        if total.first_counterexample.is_none() {
            total.first_counterexample = t.first_counterexample;
        }
    }
    let bad = total.acyclic_bad + total.multistable_bad + total.oscillating_bad;
    let mut case = Case::new("cycles.random", max_size, 0, None)
        .measure("samples", samples)
        .measure("seed", seed)
        .measure("acyclic", total.acyclic)
        .measure("multistable", total.multistable)
        .measure("oscillating", total.oscillating)
        .measure("counterexamples", bad)
        .verdict(bad == 0)
        .note("n holds the largest network size");
    if let Some(c) = total.first_counterexample {
        case = case.note(c);
    }
    cases.push(case);
    VerificationReport::from_cases(cases)
}

/// Parameters of a full verification run.
#[derive(Debug, Clone)]
pub struct SuiteConfig {
    /// Largest double-cycle (in automata) enumerated by the kind suites.
    pub max_size: usize,
    pub quadratic_sizes: Vec<usize>,
    pub copy_size: (usize, usize),
    pub samples: usize,
    pub canonical_samples: usize,
    pub cycle_max_size: usize,
    pub seed: u64,
    pub options: VerifyOptions,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            max_size: 9,
            quadratic_sizes: vec![2, 4, 6],
            copy_size: (4, 4),
            samples: 200,
            canonical_samples: 50,
            cycle_max_size: 8,
            seed: 0x0bad_c0de,
            options: VerifyOptions::default(),
        }
    }
}

pub fn verify_all(config: &SuiteConfig) -> VerificationReport {
    let two_up = size_pairs(2, config.max_size);
    let one_up = size_pairs(1, config.max_size);
    VerificationReport::merge([
        verify_positive(&two_up, &config.options),
        verify_mixed(&two_up, &config.options),
        verify_negative(&one_up, &config.options),
        verify_copy(config.copy_size.0, config.copy_size.1),
        verify_quadratic(&config.quadratic_sizes, &config.options),
        verify_canonicalization(config.canonical_samples, 3, 3, config.seed),
        verify_cycle_theorems(config.samples, config.cycle_max_size, config.seed),
    ])
}
