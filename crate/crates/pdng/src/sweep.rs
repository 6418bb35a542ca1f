//! Deterministic sweep harness: map a graph6 stream through `ng_report`,
//! fan chunks out to worker threads, and merge results in input order, so
//! the emitted stream is byte-identical for any worker count. Collects
//! red alerts (applicable checks that fail — implementation bugs, since
//! each would contradict a published theorem), per-check tallies, and
//! extremal attainers per hypothesis class.

use crate::graph::Graph;
use crate::graph6::Graph6Error;
use crate::ng::{ng_report, NGParams, NGReport};
use std::collections::BTreeMap;
use std::fmt;

/// Graphs per work unit. Large enough to amortize thread handoff, small
/// enough to keep memory flat on million-line streams.
const CHUNK: usize = 4096;

/// Cap on stored attainer/witness lists; counts keep running past it.
const WITNESS_CAP: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FindKey {
    Sum,
    Prod,
    P,
    PBar,
}

impl FindKey {
    pub fn parse(text: &str) -> Option<(FindKey, usize)> {
        let (key, val) = text.split_once('=')?;
        let val = val.parse().ok()?;
        let key = match key {
            "sum" => FindKey::Sum,
            "prod" => FindKey::Prod,
            "p" => FindKey::P,
            "p_bar" | "pbar" => FindKey::PBar,
            _ => return None,
        };
        Some((key, val))
    }

    fn get(self, r: &NGReport) -> usize {
        match self {
            FindKey::Sum => r.sum,
            FindKey::Prod => r.prod,
            FindKey::P => r.p,
            FindKey::PBar => r.p_bar,
        }
    }
}

#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub params: NGParams,
    pub jobs: usize,
    /// Abort on the first malformed line instead of recording and skipping.
    pub strict: bool,
    /// Hypothesis flags a report must carry to pass the filter.
    pub required_flags: Vec<String>,
    /// Exact-value requirement on one report field.
    pub find: Option<(FindKey, usize)>,
}

impl SweepConfig {
    pub fn new(params: NGParams) -> SweepConfig {
        SweepConfig { params, jobs: 1, strict: false, required_flags: Vec::new(), find: None }
    }

    fn passes(&self, r: &NGReport) -> bool {
        self.required_flags.iter().all(|f| r.has_flag(f))
            && self.find.is_none_or(|(key, want)| key.get(r) == want)
    }
}

/// An applicable check that failed: a contradiction with a published
/// theorem, i.e. an implementation bug somewhere.
#[derive(Debug, Clone)]
pub struct RedAlert {
    pub graph6: String,
    pub id: &'static str,
    pub observed: i64,
    pub bound: i64,
}

impl fmt::Display for RedAlert {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "RED ALERT: check {} failed on {} (observed {}, bound {})",
            self.id, self.graph6, self.observed, self.bound
        )
    }
}

#[derive(Debug)]
pub struct ParseFailure {
    pub line: usize,
    pub error: Graph6Error,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct CheckTally {
    pub applicable: u64,
    pub held: u64,
    pub violated: u64,
}

/// Running extremes of one value with capped witness lists.
#[derive(Debug, Clone, Default)]
pub struct Extreme {
    pub value: Option<usize>,
    pub witnesses: Vec<String>,
    pub witness_count: u64,
}

impl Extreme {
    fn offer(&mut self, value: usize, graph6: &str, better: impl Fn(usize, usize) -> bool) {
        match self.value {
            Some(cur) if better(cur, value) => {}
            Some(cur) if cur == value => {
                self.witness_count += 1;
                if self.witnesses.len() < WITNESS_CAP {
                    self.witnesses.push(graph6.to_string());
                }
            }
            _ => {
                self.value = Some(value);
                self.witnesses = vec![graph6.to_string()];
                self.witness_count = 1;
            }
        }
    }

    fn offer_max(&mut self, value: usize, graph6: &str) {
        self.offer(value, graph6, |cur, new| cur > new);
    }

    fn offer_min(&mut self, value: usize, graph6: &str) {
        self.offer(value, graph6, |cur, new| cur < new);
    }
}

/// Extremes of sum and product within one hypothesis class.
#[derive(Debug, Clone, Default)]
pub struct ClassExtremes {
    pub graphs: u64,
    pub max_sum: Extreme,
    pub min_sum: Extreme,
    pub max_prod: Extreme,
    pub min_prod: Extreme,
}

impl ClassExtremes {
    fn absorb(&mut self, r: &NGReport) {
        self.graphs += 1;
        self.max_sum.offer_max(r.sum, &r.graph6);
        self.min_sum.offer_min(r.sum, &r.graph6);
        self.max_prod.offer_max(r.prod, &r.graph6);
        self.min_prod.offer_min(r.prod, &r.graph6);
    }
}

#[derive(Debug, Default)]
pub struct SweepStats {
    /// Graphs that survived the filters (what the class stats describe).
    pub emitted: u64,
    /// All graphs successfully parsed and reported on.
    pub parsed: u64,
    pub checks: BTreeMap<&'static str, CheckTally>,
    /// "all" plus one entry per hypothesis flag observed.
    pub classes: BTreeMap<&'static str, ClassExtremes>,
    /// Graphs with every component of order >= 3 on both sides whose sum
    /// exceeds floor(n/3) + 2: the open-conjecture probe. At the theorem's
    /// exceptional orders these are legal; elsewhere they are red alerts.
    pub conjecture_exceeders: Extreme,
}

#[derive(Debug)]
pub struct SweepOutcome {
    pub stats: SweepStats,
    pub red_alerts: Vec<RedAlert>,
    pub parse_failures: Vec<ParseFailure>,
}

impl SweepOutcome {
    pub fn class(&self, name: &str) -> Option<&ClassExtremes> {
        self.stats.classes.get(name)
    }
}

#[derive(Debug)]
pub enum SweepError {
    /// Strict mode hit a malformed line.
    Parse(Graph6Error),
    /// The sink failed.
    Io(std::io::Error),
}

impl fmt::Display for SweepError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SweepError::Parse(e) => write!(f, "{e}"),
            SweepError::Io(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for SweepError {}

/// Known flag names, so class statistics have a stable key set.
pub const FLAG_NAMES: [&str; 15] = [
    "all-components-ge3",
    "both-connected",
    "diam-g-ge3",
    "diam-gbar-ge3",
    "diam-both-2",
    "kappa-g-le3",
    "kappa-gbar-le3",
    "planar-g",
    "planar-gbar",
    "not-super-lambda-g",
    "not-super-lambda-gbar",
    "cubic-no-k33-component",
    "has-small-components",
    "no-isolated-either",
    "tree-not-small-star",
];

fn intern_flag(flag: &str) -> Option<&'static str> {
    FLAG_NAMES.iter().copied().find(|&f| f == flag)
}

/// Run reports over a graph6 stream and hand filtered reports to `sink` in
/// input order. Red alerts are detected on every parsed graph, filtered or
/// not. Worker count changes wall time only, never output bytes.
pub fn sweep<I, F>(stream: I, cfg: &SweepConfig, mut sink: F) -> Result<SweepOutcome, SweepError>
where
    I: Iterator<Item = Result<(usize, Graph), Graph6Error>>,
    F: FnMut(&NGReport) -> std::io::Result<()>,
{
    let pool = (cfg.jobs > 1).then(|| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.jobs)
            .build()
            .expect("worker pool")
    });

    let mut outcome = SweepOutcome {
        stats: SweepStats::default(),
        red_alerts: Vec::new(),
        parse_failures: Vec::new(),
    };
    outcome.stats.classes.insert("all", ClassExtremes::default());

    let mut stream = stream.fuse();
    loop {
        // Pull one chunk, handling parse errors per strictness.
        let mut chunk: Vec<Graph> = Vec::with_capacity(CHUNK);
        for item in stream.by_ref().take(CHUNK) {
            match item {
                Ok((_, g)) => chunk.push(g),
                Err(e) if cfg.strict => return Err(SweepError::Parse(e)),
                Err(e) => {
                    let line = match &e {
                        Graph6Error::AtLine { line, .. } | Graph6Error::Io { line, .. } => *line,
                        _ => 0,
                    };
                    outcome.parse_failures.push(ParseFailure { line, error: e });
                }
            }
        }
        if chunk.is_empty() {
            break;
        }

        let params = cfg.params;
        let reports: Vec<NGReport> = match &pool {
            Some(pool) => pool.install(|| {
                use rayon::prelude::*;
                chunk.par_iter().map(|g| ng_report(g, params)).collect()
            }),
            None => chunk.iter().map(|g| ng_report(g, params)).collect(),
        };

        for r in &reports {
            outcome.stats.parsed += 1;
            for c in &r.checks {
                let tally = outcome.stats.checks.entry(c.id).or_default();
                if c.applicable {
                    tally.applicable += 1;
                    if c.holds {
                        tally.held += 1;
                    } else {
                        tally.violated += 1;
                        outcome.red_alerts.push(RedAlert {
                            graph6: r.graph6.clone(),
                            id: c.id,
                            observed: c.observed,
                            bound: c.bound,
                        });
                    }
                }
            }
            if r.has_flag("all-components-ge3") && r.sum > r.n / 3 + 2 {
                outcome.stats.conjecture_exceeders.offer_max(r.sum, &r.graph6);
            }
            if !cfg.passes(r) {
                continue;
            }
            outcome.stats.emitted += 1;
            outcome
                .stats
                .classes
                .get_mut("all")
                .expect("preseeded")
                .absorb(r);
            for flag in &r.flags {
                if let Some(name) = intern_flag(flag) {
                    outcome.stats.classes.entry(name).or_default().absorb(r);
                }
            }
            sink(r).map_err(SweepError::Io)?;
        }
    }
    Ok(outcome)
}

/// Adapter: sweep an in-memory graph list (e.g. from `enumerate_all`).
pub fn sweep_graphs<F>(
    graphs: &[Graph],
    cfg: &SweepConfig,
    sink: F,
) -> Result<SweepOutcome, SweepError>
where
    F: FnMut(&NGReport) -> std::io::Result<()>,
{
    sweep(
        graphs
            .iter()
            .enumerate()
            .map(|(i, g)| Ok((i + 1, g.clone()))),
        cfg,
        sink,
    )
}
