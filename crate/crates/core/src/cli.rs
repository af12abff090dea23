//! Library side of the `fnf` command-line tool: input parsing, output
//! documents, oracle verification and the scaling benchmark.

use std::fmt::Write as _;
use std::time::Instant;

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::error::FnfError;
use crate::fnf::{compute_fnf, BlockOrder, FnfResult};
use crate::oracle;
use crate::recovery::ComponentIndexSequence;
use crate::reduction::ReductionKind;
use crate::toeplitz::{FirstRow, OffsetSet};

pub mod exit {
    pub const SUCCESS: i32 = 0;
    pub const VERIFY_FAILED: i32 = 1;
    pub const INPUT_ERROR: i32 = 2;
    pub const INTERNAL_ERROR: i32 = 3;
}

pub const DEFAULT_VERIFY_BUDGET: usize = 20_000;
pub const DEFAULT_SEED: u64 = 0x5eed;

#[derive(Debug, Error)]
pub enum InputError {
    #[error("input is empty")]
    Empty,
    #[error("invalid JSON input: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid number {token:?} (entry {index})")]
    Number { token: String, index: usize },
    #[error("entry {index} is not finite")]
    NonFinite { index: usize },
    #[error("declared order {declared} does not match {found} entries")]
    OrderMismatch { declared: usize, found: usize },
    #[error("tolerance must be finite and non-negative, got {0}")]
    Tolerance(f64),
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
}

/// JSON input: `{"first_row": [...], "n": 7}` with `n` optional.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InputDocument {
    pub first_row: Vec<f64>,
    #[serde(default, alias = "order", skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
}

/// Parses a first row from plain text (whitespace separated decimals) or a
/// JSON object, chosen by the first non-whitespace byte. Entries with
/// `|a| <= tolerance` become exact zeros.
pub fn parse_input(text: &str, tolerance: f64) -> Result<FirstRow<f64>, InputError> {
    if !(tolerance.is_finite() && tolerance >= 0.0) {
        return Err(InputError::Tolerance(tolerance));
    }
    let trimmed = text.trim_start();
    let entries = if trimmed.starts_with('{') {
        let doc: InputDocument = serde_json::from_str(trimmed)?;
        if let Some(declared) = doc.n {
            if declared != doc.first_row.len() {
                return Err(InputError::OrderMismatch { declared, found: doc.first_row.len() });
            }
        }
        doc.first_row
    } else {
        trimmed
            .split_whitespace()
            .enumerate()
            .map(|(index, token)| {
                token.parse::<f64>().map_err(|_| InputError::Number { token: token.into(), index })
            })
            .collect::<Result<Vec<_>, _>>()?
    };
    if let Some(index) = entries.iter().position(|a| !a.is_finite()) {
        return Err(InputError::NonFinite { index });
    }
    let row = FirstRow::new(entries).map_err(|_| InputError::Empty)?;
    Ok(row.with_zero_tolerance(tolerance))
}

/// Reads `path`, or standard input when `path` is `-`.
pub fn read_source(path: &str) -> Result<String, InputError> {
    use std::io::Read;
    let mut text = String::new();
    let res = if path == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    res.map_err(|source| InputError::Io { path: path.into(), source })?;
    Ok(text)
}

/// A float written as a plain integer when integral and as the shortest
/// round-trip decimal otherwise.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Number(pub f64);

const EXACT_INT_LIMIT: f64 = 9_007_199_254_740_992.0;

impl Number {
    fn as_integer(self) -> Option<i64> {
        (self.0.fract() == 0.0 && self.0.abs() <= EXACT_INT_LIMIT).then_some(self.0 as i64)
    }
}

impl std::fmt::Display for Number {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.as_integer() {
            Some(i) => write!(f, "{i}"),
            None => write!(f, "{}", self.0),
        }
    }
}

impl Serialize for Number {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.as_integer() {
            Some(i) => s.serialize_i64(i),
            None => s.serialize_f64(self.0),
        }
    }
}

impl<'de> Deserialize<'de> for Number {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        f64::deserialize(d).map(Number)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BlockDocument {
    pub size: usize,
    pub first_row: Vec<Number>,
    pub vertices: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StepKind {
    Alpha,
    Beta,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepDocument {
    pub kind: StepKind,
    pub n_before: usize,
    pub n_after: usize,
    pub d: usize,
    pub c: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputDocument {
    pub order: usize,
    pub component_count: usize,
    pub cis: Vec<usize>,
    pub blocks: Vec<BlockDocument>,
    pub permutation: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trace: Option<Vec<StepDocument>>,
}

impl OutputDocument {
    pub fn from_result(fnf: &FnfResult<f64>, with_trace: bool) -> Self {
        let trace = with_trace.then(|| {
            fnf.trace
                .steps
                .iter()
                .map(|s| StepDocument {
                    kind: match s.kind {
                        ReductionKind::Alpha => StepKind::Alpha,
                        ReductionKind::Beta => StepKind::Beta,
                    },
                    n_before: s.n_before,
                    n_after: s.n_after,
                    d: s.d,
                    c: s.c,
                })
                .collect()
        });
        Self {
            order: fnf.n,
            component_count: fnf.block_count(),
            cis: fnf.cis.as_slice().to_vec(),
            blocks: fnf
                .blocks
                .iter()
                .map(|b| BlockDocument {
                    size: b.size(),
                    first_row: b.first_row.iter().copied().map(Number).collect(),
                    vertices: b.vertices.clone(),
                })
                .collect(),
            permutation: fnf.permutation.clone(),
            trace,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("output document serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let join = |xs: &mut dyn Iterator<Item = String>| xs.collect::<Vec<_>>().join(" ");
        let _ = writeln!(out, "order: {}", self.order);
        let _ = writeln!(out, "components: {}", self.component_count);
        for (k, b) in self.blocks.iter().enumerate() {
            let _ = writeln!(out, "block {} (size {})", k + 1, b.size);
            let _ = writeln!(
                out,
                "  first row: {}",
                join(&mut b.first_row.iter().map(Number::to_string))
            );
            let _ = writeln!(
                out,
                "  vertices:  {}",
                join(&mut b.vertices.iter().map(usize::to_string))
            );
        }
        let _ = writeln!(out, "permutation: {}", join(&mut self.permutation.iter().map(usize::to_string)));
        if let Some(trace) = &self.trace {
            let _ = writeln!(out, "trace:");
            for s in trace {
                let kind = match s.kind {
                    StepKind::Alpha => "alpha",
                    StepKind::Beta => "beta",
                };
                let _ = writeln!(
                    out,
                    "  {kind:<5} n {} -> {}  d = {}  c = {}",
                    s.n_before, s.n_after, s.d, s.c
                );
            }
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct ComputeOptions {
    pub order: BlockOrder,
    pub trace: bool,
    pub format: OutputFormat,
}

/// Runs the pipeline and renders the result.
pub fn cmd_compute(row: &FirstRow<f64>, opts: &ComputeOptions) -> Result<String, FnfError> {
    let fnf = compute_fnf(row, opts.order)?;
    let doc = OutputDocument::from_result(&fnf, opts.trace);
    Ok(match opts.format {
        OutputFormat::Json => doc.to_json() + "\n",
        OutputFormat::Text => doc.to_text(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub order: usize,
    pub blocks: usize,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            let _ = writeln!(out, "{status}  {:<24} {}", c.name, c.detail);
        }
        let overall = if self.passed() { "PASS" } else { "FAIL" };
        let _ = writeln!(out, "{overall}  n = {}, {} blocks", self.order, self.blocks);
        out
    }
}

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error(
        "order {n} exceeds the oracle budget of {budget}; \
         rerun with --budget {n} if the brute-force check is affordable"
    )]
    BudgetExceeded { n: usize, budget: usize },
    #[error(transparent)]
    Pipeline(#[from] FnfError),
}

/// Component partition of the implicit graph of `set` via union-find,
/// without materializing the edge list.
fn implicit_partition(set: &OffsetSet) -> oracle::Partition {
    let n = set.order();
    let mut uf = oracle::UnionFind::new(n);
    for s in set.iter() {
        for u in 0..n - s {
            uf.union(u, u + s);
        }
    }
    let roots: Vec<usize> = (0..n).map(|v| uf.find(v)).collect();
    oracle::partition_from_labels(&roots)
}

/// Cross-checks the fast path against brute force on one instance.
pub fn cmd_verify(row: &FirstRow<f64>, budget: usize) -> Result<VerifyReport, VerifyError> {
    let n = row.order();
    if n > budget {
        return Err(VerifyError::BudgetExceeded { n, budget });
    }
    let fnf = compute_fnf(row, BlockOrder::Canonical)?;
    let expected = implicit_partition(&row.offsets());
    let got = oracle::partition_from_labels(fnf.cis.as_slice());
    let mut checks = Vec::new();

    checks.push(Check {
        name: "component count",
        passed: expected.len() == fnf.block_count(),
        detail: format!("fast {} / oracle {}", fnf.block_count(), expected.len()),
    });
    checks.push(Check {
        name: "partition",
        passed: got == expected,
        detail: String::from(if got == expected { "identical" } else { "differs" }),
    });
    let cis_ok = ComponentIndexSequence::new(fnf.cis.as_slice().to_vec(), fnf.cis.count()).is_ok();
    checks.push(Check {
        name: "index sequence",
        passed: cis_ok,
        detail: format!("surjective onto [1, {}]", fnf.cis.count()),
    });
    let trace_ok = fnf.trace.validate().is_ok();
    checks.push(Check {
        name: "reduction trace",
        passed: trace_ok,
        detail: format!("{} steps", fnf.trace.steps.len()),
    });
    let recon = oracle::reconstruction_matches(row, &fnf.permutation, &fnf.block_rows(), 0.0);
    checks.push(Check {
        name: "block reconstruction",
        passed: recon,
        detail: String::from("P^T A P equals the block direct sum"),
    });
    let disconnected = fnf
        .blocks
        .iter()
        .filter(|b| {
            let block = FirstRow::new(b.first_row.clone()).expect("blocks are nonempty");
            implicit_partition(&block.offsets()).len() != 1
        })
        .count();
    checks.push(Check {
        name: "block connectivity",
        passed: disconnected == 0,
        detail: format!("{disconnected} reducible blocks"),
    });
    Ok(VerifyReport { order: n, blocks: fnf.block_count(), checks })
}

/// How benchmark offset sets are drawn.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BenchPolicy {
    /// `k` distinct offsets uniform in `[1, n - 1]`; `None` means `ceil(ln n)`.
    Uniform(Option<usize>),
    /// `ceil(ln n)` distinct offsets uniform in `[ceil(n / 3), n - 1]`, which
    /// mixes alpha steps with survivor-heavy beta steps.
    PaperLike,
}

impl std::str::FromStr for BenchPolicy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "uniform-k" | "uniform" => Ok(Self::Uniform(None)),
            "paper-like" => Ok(Self::PaperLike),
            _ => s
                .strip_prefix("uniform-")
                .and_then(|k| k.parse().ok())
                .map(|k| Self::Uniform(Some(k)))
                .ok_or_else(|| format!("unknown policy {s:?}; use uniform-k, uniform-<K> or paper-like")),
        }
    }
}

impl std::fmt::Display for BenchPolicy {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::Uniform(None) => f.write_str("uniform-k"),
            Self::Uniform(Some(k)) => write!(f, "uniform-{k}"),
            Self::PaperLike => f.write_str("paper-like"),
        }
    }
}

fn log_count(n: usize) -> usize {
    (n as f64).ln().ceil().max(1.0) as usize
}

/// Draws an offset set of order `n` under `policy`.
pub fn generate_offsets(n: usize, policy: BenchPolicy, rng: &mut ChaCha8Rng) -> OffsetSet {
    if n < 2 {
        return OffsetSet::empty(n.max(1));
    }
    let (low, k) = match policy {
        BenchPolicy::Uniform(k) => (1, k.unwrap_or_else(|| log_count(n))),
        BenchPolicy::PaperLike => (n.div_ceil(3).max(1), log_count(n)),
    };
    let span = n - low;
    let k = k.min(span);
    let offsets = sample(rng, span, k).into_iter().map(|i| i + low).collect();
    OffsetSet::from_unsorted(n, offsets).expect("sampled offsets are in range")
}

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub sizes: Vec<usize>,
    pub policy: BenchPolicy,
    pub seed: u64,
    pub reps: usize,
    /// Largest order for which the brute-force oracle is also timed.
    pub oracle_budget: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub n: usize,
    pub offsets: usize,
    pub median_ms: f64,
    pub min_ms: f64,
    pub max_ms: f64,
    pub oracle_median_ms: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchReport {
    pub seed: u64,
    pub policy: BenchPolicy,
    pub reps: usize,
    pub rows: Vec<BenchRow>,
    /// Least-squares slope of `ln(median)` against `ln(n)`.
    pub slope: Option<f64>,
}

fn median(xs: &mut [f64]) -> f64 {
    xs.sort_by(f64::total_cmp);
    let m = xs.len() / 2;
    if xs.len() % 2 == 1 {
        xs[m]
    } else {
        (xs[m - 1] + xs[m]) / 2.0
    }
}

/// Least-squares slope through `(ln x, ln y)`. `None` with fewer than two
/// distinct `x` values.
pub fn log_log_slope(points: &[(f64, f64)]) -> Option<f64> {
    if points.len() < 2 {
        return None;
    }
    let logs: Vec<(f64, f64)> = points.iter().map(|&(x, y)| (x.ln(), y.ln())).collect();
    let k = logs.len() as f64;
    let mx = logs.iter().map(|p| p.0).sum::<f64>() / k;
    let my = logs.iter().map(|p| p.1).sum::<f64>() / k;
    let sxx: f64 = logs.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = logs.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}

/// Times the full pipeline (row in, normal form out) for each size.
pub fn run_bench(config: &BenchConfig) -> Result<BenchReport, FnfError> {
    let reps = config.reps.max(1);
    let mut rows = Vec::with_capacity(config.sizes.len());
    for &n in &config.sizes {
        let mut rng = ChaCha8Rng::seed_from_u64(config.seed ^ (n as u64).wrapping_mul(0x9e37_79b9));
        let set = generate_offsets(n, config.policy, &mut rng);
        let mut entries = vec![0.0f64; n.max(1)];
        for s in set.iter() {
            entries[s] = 1.0;
        }
        let row = FirstRow::new(entries)?;

        let mut times = Vec::with_capacity(reps);
        for _ in 0..reps {
            let start = Instant::now();
            let fnf = compute_fnf(&row, BlockOrder::Canonical)?;
            times.push(start.elapsed().as_secs_f64() * 1e3);
            drop(std::hint::black_box(fnf));
        }
        let oracle_median_ms = (n <= config.oracle_budget).then(|| {
            let mut t: Vec<f64> = (0..reps)
                .map(|_| {
                    let start = Instant::now();
                    std::hint::black_box(implicit_partition(&set));
                    start.elapsed().as_secs_f64() * 1e3
                })
                .collect();
            median(&mut t)
        });
        let (min_ms, max_ms) = times
            .iter()
            .fold((f64::INFINITY, 0.0f64), |(lo, hi), &t| (lo.min(t), hi.max(t)));
        rows.push(BenchRow {
            n,
            offsets: set.len(),
            median_ms: median(&mut times),
            min_ms,
            max_ms,
            oracle_median_ms,
        });
    }
    let points: Vec<(f64, f64)> = rows.iter().map(|r| (r.n as f64, r.median_ms.max(1e-9))).collect();
    Ok(BenchReport {
        seed: config.seed,
        policy: config.policy,
        reps,
        slope: log_log_slope(&points),
        rows,
    })
}

impl BenchReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "policy {}  seed {}  reps {}", self.policy, self.seed, self.reps);
        let _ = writeln!(
            out,
            "{:>12} {:>6} {:>12} {:>12} {:>12} {:>12}",
            "n", "|S|", "median ms", "min ms", "max ms", "oracle ms"
        );
        for r in &self.rows {
            let oracle = r.oracle_median_ms.map_or_else(|| "-".to_string(), |t| format!("{t:.3}"));
            let _ = writeln!(
                out,
                "{:>12} {:>6} {:>12.3} {:>12.3} {:>12.3} {:>12}",
                r.n, r.offsets, r.median_ms, r.min_ms, r.max_ms, oracle
            );
        }
        match self.slope {
            Some(s) => {
                let _ = writeln!(out, "log-log slope: {s:.3}");
            }
            None => {
                let _ = writeln!(out, "log-log slope: n/a");
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_text_and_json() {
        let row = parse_input("0 0 3\n0 8 0\t9\n", 0.0).unwrap();
        assert_eq!(row.entries(), &[0.0, 0.0, 3.0, 0.0, 8.0, 0.0, 9.0]);
        let row = parse_input("  {\"first_row\": [0, 1.5, 0], \"n\": 3}", 0.0).unwrap();
        assert_eq!(row.entries(), &[0.0, 1.5, 0.0]);
        assert!(matches!(
            parse_input("{\"first_row\": [0, 1], \"n\": 3}", 0.0),
            Err(InputError::OrderMismatch { declared: 3, found: 2 })
        ));
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_input("  \n", 0.0), Err(InputError::Empty)));
        assert!(matches!(parse_input("{\"first_row\": []}", 0.0), Err(InputError::Empty)));
        assert!(matches!(parse_input("1 x 2", 0.0), Err(InputError::Number { index: 1, .. })));
        assert!(matches!(parse_input("1 inf", 0.0), Err(InputError::NonFinite { index: 1 })));
        assert!(matches!(parse_input("1 NaN", 0.0), Err(InputError::NonFinite { index: 1 })));
        assert!(matches!(parse_input("{\"first_row\": [1,", 0.0), Err(InputError::Json(_))));
        assert!(matches!(parse_input("1", -1.0), Err(InputError::Tolerance(_))));
    }

    #[test]
    fn tolerance_applies_at_parse_time() {
        let row = parse_input("2 1e-12 1", 1e-9).unwrap();
        assert_eq!(row.offsets().as_slice(), &[2]);
    }

    #[test]
    fn numbers_render_compactly() {
        let json = serde_json::to_string(&[Number(3.0), Number(-2.0), Number(0.1), Number(1e300)]).unwrap();
        assert_eq!(json, "[3,-2,0.1,1e+300]");
        assert_eq!(Number(2.5).to_string(), "2.5");
        assert_eq!(Number(8.0).to_string(), "8");
    }

    #[test]
    fn compute_json_for_weighted_row() {
        let row = parse_input("0 0 3 0 8 0 9", 0.0).unwrap();
        let out = cmd_compute(&row, &ComputeOptions::default()).unwrap();
        let doc: OutputDocument = serde_json::from_str(&out).unwrap();
        assert_eq!(doc.component_count, 2);
        assert_eq!(doc.blocks[0].first_row, vec![Number(0.0), Number(3.0), Number(8.0), Number(9.0)]);
        assert_eq!(doc.cis, vec![1, 2, 1, 2, 1, 2, 1]);
        assert!(doc.trace.is_none());
        assert!(out.contains("\"first_row\": [\n        0,\n        3,"));
    }

    #[test]
    fn compute_text_single_block() {
        let row = parse_input("0 1", 0.0).unwrap();
        let opts = ComputeOptions { format: OutputFormat::Text, ..Default::default() };
        let out = cmd_compute(&row, &opts).unwrap();
        assert_eq!(
            out,
            "order: 2\ncomponents: 1\nblock 1 (size 2)\n  first row: 0 1\n  vertices:  1 2\npermutation: 1 2\n"
        );
    }

    #[test]
    fn compute_trace_and_discovered_order() {
        let mut a = vec![0.0; 31];
        for s in [12, 18, 24, 29] {
            a[s] = 1.0;
        }
        let row = FirstRow::new(a).unwrap();
        let opts = ComputeOptions { order: BlockOrder::Discovered, trace: true, ..Default::default() };
        let doc: OutputDocument = serde_json::from_str(&cmd_compute(&row, &opts).unwrap()).unwrap();
        let trace = doc.trace.unwrap();
        assert_eq!(trace.len(), 4);
        assert_eq!(trace[1], StepDocument { kind: StepKind::Alpha, n_before: 7, n_after: 4, d: 5, c: 3 });
        assert_eq!(doc.blocks.iter().map(|b| b.size).collect::<Vec<_>>(), vec![16, 5, 5, 5]);
        assert_eq!(doc.cis[2], 2);
    }

    #[test]
    fn zero_row_gives_singletons() {
        let row = FirstRow::new(vec![0.0; 31]).unwrap();
        let out = cmd_compute(&row, &ComputeOptions::default()).unwrap();
        let doc: OutputDocument = serde_json::from_str(&out).unwrap();
        assert_eq!(doc.component_count, 31);
        assert!(doc.blocks.iter().all(|b| b.first_row == vec![Number(0.0)]));
    }

    #[test]
    fn verify_reports() {
        let row = parse_input("0 0 3 0 8 0 9", 0.0).unwrap();
        let report = cmd_verify(&row, DEFAULT_VERIFY_BUDGET).unwrap();
        assert!(report.passed(), "{}", report.to_text());
        assert_eq!(report.blocks, 2);
        let report = cmd_verify(&parse_input("4", 0.0).unwrap(), 10).unwrap();
        assert!(report.passed());
        assert!(matches!(
            cmd_verify(&row, 5),
            Err(VerifyError::BudgetExceeded { n: 7, budget: 5 })
        ));
    }

    #[test]
    fn policy_parsing() {
        assert_eq!("uniform-k".parse::<BenchPolicy>().unwrap(), BenchPolicy::Uniform(None));
        assert_eq!("uniform-5".parse::<BenchPolicy>().unwrap(), BenchPolicy::Uniform(Some(5)));
        assert_eq!("paper-like".parse::<BenchPolicy>().unwrap(), BenchPolicy::PaperLike);
        assert!("gaussian".parse::<BenchPolicy>().is_err());
        assert_eq!(BenchPolicy::Uniform(Some(5)).to_string(), "uniform-5");
    }

    #[test]
    fn generated_offsets_follow_policy() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let s = generate_offsets(1000, BenchPolicy::Uniform(None), &mut rng);
        assert_eq!(s.len(), 7);
        let s = generate_offsets(1000, BenchPolicy::PaperLike, &mut rng);
        assert!(s.iter().all(|x| x >= 334));
        let s = generate_offsets(4, BenchPolicy::Uniform(Some(10)), &mut rng);
        assert_eq!(s.as_slice(), &[1, 2, 3]);
        assert!(generate_offsets(1, BenchPolicy::PaperLike, &mut rng).is_empty());
    }

    #[test]
    fn slope_fit() {
        assert_eq!(log_log_slope(&[(10.0, 1.0)]), None);
        let s = log_log_slope(&[(10.0, 2.0), (100.0, 20.0), (1000.0, 200.0)]).unwrap();
        assert!((s - 1.0).abs() < 1e-12);
        let s = log_log_slope(&[(10.0, 1.0), (100.0, 100.0)]).unwrap();
        assert!((s - 2.0).abs() < 1e-12);
    }

    #[test]
    fn bench_single_size_has_no_slope() {
        let cfg = BenchConfig {
            sizes: vec![1000],
            policy: BenchPolicy::Uniform(None),
            seed: 3,
            reps: 5,
            oracle_budget: 1000,
        };
        let report = run_bench(&cfg).unwrap();
        assert_eq!(report.rows.len(), 1);
        assert!(report.slope.is_none());
        let r = &report.rows[0];
        assert!(r.min_ms <= r.median_ms && r.median_ms <= r.max_ms);
        assert!(r.oracle_median_ms.is_some());
        assert!(report.to_text().contains("log-log slope: n/a"));
    }
}
