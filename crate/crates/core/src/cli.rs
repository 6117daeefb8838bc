//! Cell computations, tables, cached verification sweeps and cofiber reports
//! behind the `grqn` binary.

use std::collections::BTreeMap;
use std::fmt;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::sync::mpsc;
use std::time::Instant;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::formulas::{self, FormulaError};
use crate::homology::{
    qn_homology, twisted_complex, CofiberSequence, GradedMap, HomologyError, HomologyProfile,
};
use crate::schubert::{derivation_qn_matrix, lenart_qn_matrix, Grid};

/// Default bound on `binom(m, d)` for a computed cell.
pub const DEFAULT_CELL_LIMIT: u64 = 5_000_000;
/// `both` is the default method up to this basis size.
pub const BOTH_METHOD_LIMIT: u64 = 10_000;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("basis of Gr_{d}(R^{m}) has {size} elements, above the limit {limit}")]
    CellTooLarge {
        d: u64,
        m: u64,
        size: BigUint,
        limit: u64,
    },
    #[error("lower bound violated at n={n} d={d} m={m}: computed {computed} < predicted {predicted}")]
    LowerBoundViolation {
        n: u32,
        d: u64,
        m: u64,
        computed: BigUint,
        predicted: BigUint,
    },
    #[error("Lenart and derivation matrices differ at n={n} d={d} m={m}")]
    MethodDisagreement { n: u32, d: u64, m: u64 },
    #[error("table is not symmetric: ({d},{c}) = {a} but ({c},{d}) = {b}")]
    SymmetryViolation {
        d: u64,
        c: u64,
        a: BigUint,
        b: BigUint,
    },
    #[error("cache {path}: line {line} is not a valid record: {reason}")]
    CacheCorrupt {
        path: PathBuf,
        line: usize,
        reason: String,
    },
    #[error("invalid range {0:?}; expected A, A..B or A..=B")]
    InvalidRange(String),
    #[error("invalid GRQN_CELL_LIMIT value {0:?}")]
    InvalidLimit(String),
    #[error(transparent)]
    Formula(#[from] FormulaError),
    #[error(transparent)]
    Homology(#[from] HomologyError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[derive(clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Lenart,
    Derivation,
    Both,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Lenart => "lenart",
            Method::Derivation => "derivation",
            Method::Both => "both",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    /// Computed value equals the prediction and a theorem covers the cell.
    Proven,
    /// Computed value equals the conjectured prediction.
    ConjectureMatch,
    /// Computed value exceeds the prediction.
    Mismatch,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Proven => "proven",
            Status::ConjectureMatch => "conjecture-match",
            Status::Mismatch => "mismatch",
        }
    }
}

mod bignum {
    use num_bigint::BigUint;
    use serde::{de::Error, Deserialize, Deserializer, Serialize, Serializer};
    use serde_json::Number;

    pub fn serialize<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        let n: Number = v.to_string().parse().map_err(serde::ser::Error::custom)?;
        n.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        let n = Number::deserialize(d)?;
        n.as_str()
            .parse()
            .map_err(|_| D::Error::custom(format!("not a nonnegative integer: {n}")))
    }
}

/// One computed table cell.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultRecord {
    pub n: u32,
    pub d: u64,
    pub m: u64,
    #[serde(with = "bignum")]
    pub computed_total: BigUint,
    /// `(degree, dimension)` for every degree with nonzero homology.
    pub per_degree: Vec<(usize, usize)>,
    #[serde(with = "bignum")]
    pub predicted: BigUint,
    pub status: Status,
    pub method: Method,
    pub elapsed_ms: u64,
}

impl ResultRecord {
    pub fn key(&self) -> CellKey {
        CellKey {
            n: self.n,
            d: self.d,
            m: self.m,
            method: self.method,
        }
    }

    pub fn c(&self) -> u64 {
        self.m - self.d
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CellKey {
    pub n: u32,
    pub d: u64,
    pub m: u64,
    pub method: Method,
}

/// `GRQN_CELL_LIMIT`, or the default.
pub fn cell_limit_from_env() -> Result<u64, CliError> {
    match std::env::var("GRQN_CELL_LIMIT") {
        Ok(v) => v.trim().parse().map_err(|_| CliError::InvalidLimit(v)),
        Err(_) => Ok(DEFAULT_CELL_LIMIT),
    }
}

/// `both` for small cells, otherwise `lenart`.
pub fn default_method(d: u64, m: u64) -> Method {
    if formulas::binomial(m as i64, d as i64) <= BigUint::from(BOTH_METHOD_LIMIT) {
        Method::Both
    } else {
        Method::Lenart
    }
}

fn check_size(d: u64, m: u64, limit: u64) -> Result<(), CliError> {
    if d > m {
        return Err(FormulaError::InvalidCell { d, m }.into());
    }
    let size = formulas::binomial(m as i64, d as i64);
    if size > BigUint::from(limit) {
        return Err(CliError::CellTooLarge { d, m, size, limit });
    }
    Ok(())
}

/// A theorem pins down the value: the collapse range, or `min(d, c) ≤ 2`.
pub fn is_proven_cell(n: u32, d: u64, m: u64) -> bool {
    m <= formulas::two_power(n) || d.min(m - d) <= 2
}

/// Builds the `Q_n` matrix on `Gr_d(R^m)` by the given method.
pub fn build_matrix(n: u32, d: u64, m: u64, method: Method) -> Result<GradedMap, CliError> {
    let grid = Grid::for_grassmannian(d as usize, m as usize);
    match method {
        Method::Lenart => Ok(lenart_qn_matrix(n, grid)),
        Method::Derivation => Ok(derivation_qn_matrix(n, grid)),
        Method::Both => {
            let (a, b) = rayon::join(|| lenart_qn_matrix(n, grid), || derivation_qn_matrix(n, grid));
            if a != b {
                return Err(CliError::MethodDisagreement { n, d, m });
            }
            Ok(a)
        }
    }
}

/// Computes one cell and classifies it against the prediction.
pub fn compute_cell(
    n: u32,
    d: u64,
    m: u64,
    method: Option<Method>,
    limit: u64,
) -> Result<ResultRecord, CliError> {
    check_size(d, m, limit)?;
    let method = method.unwrap_or_else(|| default_method(d, m));
    let start = Instant::now();
    let map = build_matrix(n, d, m, method)?;
    let profile = qn_homology(&map)?;
    let elapsed_ms = start.elapsed().as_millis() as u64;
    record_from_profile(n, d, m, method, &profile, elapsed_ms)
}

fn record_from_profile(
    n: u32,
    d: u64,
    m: u64,
    method: Method,
    profile: &HomologyProfile,
    elapsed_ms: u64,
) -> Result<ResultRecord, CliError> {
    let computed = BigUint::from(profile.total);
    let predicted = formulas::predicted_k(n, d, m)?;
    if computed < predicted {
        return Err(CliError::LowerBoundViolation {
            n,
            d,
            m,
            computed,
            predicted,
        });
    }
    let status = if computed != predicted {
        Status::Mismatch
    } else if is_proven_cell(n, d, m) {
        Status::Proven
    } else {
        Status::ConjectureMatch
    };
    Ok(ResultRecord {
        n,
        d,
        m,
        computed_total: computed,
        per_degree: profile
            .per_degree
            .iter()
            .enumerate()
            .filter(|(_, &k)| k > 0)
            .map(|(t, &k)| (t, k))
            .collect(),
        predicted,
        status,
        method,
        elapsed_ms,
    })
}

/// How a table cell was filled.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CellOutcome {
    Computed(ResultRecord),
    /// Too large to compute; the prediction stands in.
    PredictedOnly(BigUint),
    /// Computation failed; the message is kept in the row.
    Failed(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub d: u64,
    pub c: u64,
    pub outcome: CellOutcome,
}

impl TableRow {
    pub fn value(&self) -> Option<&BigUint> {
        match &self.outcome {
            CellOutcome::Computed(r) => Some(&r.computed_total),
            CellOutcome::PredictedOnly(v) => Some(v),
            CellOutcome::Failed(_) => None,
        }
    }

    fn csv_fields(&self) -> [String; 5] {
        let (value, status, method) = match &self.outcome {
            CellOutcome::Computed(r) => (
                r.computed_total.to_string(),
                r.status.as_str().to_string(),
                r.method.as_str().to_string(),
            ),
            CellOutcome::PredictedOnly(v) => {
                (v.to_string(), "predicted-only".into(), "formula".into())
            }
            CellOutcome::Failed(msg) => (String::new(), format!("error: {msg}"), String::new()),
        };
        [self.d.to_string(), self.c.to_string(), value, status, method]
    }
}

/// The `(d, c)` grid of `k_{Q_n}(Gr_d(R^{d+c}))` for `1 ≤ d ≤ d_max`,
/// `1 ≤ c ≤ c_max`, sorted by `(d, c)`. Fails if two computed mirror cells
/// disagree.
pub fn table(n: u32, d_max: u64, c_max: u64, limit: u64) -> Result<Vec<TableRow>, CliError> {
    let cells: Vec<(u64, u64)> = (1..=d_max)
        .flat_map(|d| (1..=c_max).map(move |c| (d, c)))
        .collect();
    let rows: Vec<TableRow> = cells
        .par_iter()
        .map(|&(d, c)| {
            let m = d + c;
            let outcome = match compute_cell(n, d, m, None, limit) {
                Ok(r) => CellOutcome::Computed(r),
                Err(CliError::CellTooLarge { .. }) => match formulas::predicted_k(n, d, m) {
                    Ok(v) => CellOutcome::PredictedOnly(v),
                    Err(e) => CellOutcome::Failed(e.to_string()),
                },
                Err(e) => CellOutcome::Failed(e.to_string()),
            };
            TableRow { d, c, outcome }
        })
        .collect();
    let computed: BTreeMap<(u64, u64), &BigUint> = rows
        .iter()
        .filter_map(|r| match &r.outcome {
            CellOutcome::Computed(rec) => Some(((r.d, r.c), &rec.computed_total)),
            _ => None,
        })
        .collect();
    for (&(d, c), &a) in &computed {
        if let Some(&b) = computed.get(&(c, d)) {
            if a != b {
                return Err(CliError::SymmetryViolation {
                    d,
                    c,
                    a: a.clone(),
                    b: b.clone(),
                });
            }
        }
    }
    Ok(rows)
}

/// Table rows as CSV with header `d,c,value,status,method` and LF endings.
pub fn table_csv(rows: &[TableRow]) -> Result<String, CliError> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    w.write_record(["d", "c", "value", "status", "method"])?;
    for row in rows {
        w.write_record(row.csv_fields())?;
    }
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("ascii output"))
}

/// One record as CSV (header plus row).
pub fn record_csv(r: &ResultRecord) -> Result<String, CliError> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    w.write_record(["n", "d", "m", "computed_total", "predicted", "status", "method"])?;
    w.write_record([
        r.n.to_string(),
        r.d.to_string(),
        r.m.to_string(),
        r.computed_total.to_string(),
        r.predicted.to_string(),
        r.status.as_str().to_string(),
        r.method.as_str().to_string(),
    ])?;
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("ascii output"))
}

/// An inclusive integer range written `A`, `A..B` or `A..=B`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InclusiveRange {
    pub start: u64,
    pub end: u64,
}

impl InclusiveRange {
    pub fn iter(self) -> impl Iterator<Item = u64> {
        self.start..=self.end
    }
}

impl FromStr for InclusiveRange {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        let bad = || CliError::InvalidRange(s.to_string());
        let parse = |x: &str| x.trim().parse::<u64>().map_err(|_| bad());
        let (start, end) = match s.split_once("..") {
            None => {
                let v = parse(s)?;
                (v, v)
            }
            Some((a, b)) => (parse(a)?, parse(b.strip_prefix('=').unwrap_or(b))?),
        };
        if start > end {
            return Err(bad());
        }
        Ok(InclusiveRange { start, end })
    }
}

impl fmt::Display for InclusiveRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..={}", self.start, self.end)
    }
}

/// Records in an append-only JSON-lines file, later lines winning.
pub fn load_cache(path: &Path) -> Result<BTreeMap<CellKey, ResultRecord>, CliError> {
    let mut out = BTreeMap::new();
    let file = match File::open(path) {
        Ok(f) => f,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(out),
        Err(e) => return Err(e.into()),
    };
    for (i, line) in BufReader::new(file).lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let rec: ResultRecord =
            serde_json::from_str(&line).map_err(|e| CliError::CacheCorrupt {
                path: path.to_path_buf(),
                line: i + 1,
                reason: e.to_string(),
            })?;
        out.insert(rec.key(), rec);
    }
    Ok(out)
}

/// Counts over every cell in the sweep, cached or fresh.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct VerifySummary {
    pub cells: usize,
    pub proven: usize,
    pub conjecture_match: usize,
    pub mismatch: usize,
    /// Cells answered from the cache.
    pub skipped: usize,
    /// Cells over the size limit.
    pub too_large: usize,
    pub lower_bound_violations: usize,
    /// Other failures (for instance a method disagreement).
    pub errors: usize,
    pub failures: Vec<String>,
}

impl VerifySummary {
    pub fn ok(&self) -> bool {
        self.mismatch == 0 && self.lower_bound_violations == 0 && self.errors == 0
    }

    fn tally(&mut self, status: Status) {
        match status {
            Status::Proven => self.proven += 1,
            Status::ConjectureMatch => self.conjecture_match += 1,
            Status::Mismatch => self.mismatch += 1,
        }
    }
}

impl fmt::Display for VerifySummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "cells={} proven={} conjecture-match={} mismatch={} skipped={} too-large={} lower-bound-violations={} errors={}",
            self.cells,
            self.proven,
            self.conjecture_match,
            self.mismatch,
            self.skipped,
            self.too_large,
            self.lower_bound_violations,
            self.errors
        )?;
        for msg in &self.failures {
            write!(f, "\n  {msg}")?;
        }
        Ok(())
    }
}

/// Sweeps every `(n, d, c)` in the ranges, reusing cached records and
/// appending new ones. Workers compute; this thread is the only writer.
pub fn verify(
    n_range: InclusiveRange,
    d_range: InclusiveRange,
    c_range: InclusiveRange,
    jobs: usize,
    cache_path: &Path,
    limit: u64,
) -> Result<VerifySummary, CliError> {
    let cache = load_cache(cache_path)?;
    let mut summary = VerifySummary::default();
    let mut todo = Vec::new();
    for n in n_range.iter() {
        let n = u32::try_from(n).map_err(|_| CliError::InvalidRange(n_range.to_string()))?;
        for d in d_range.iter() {
            for c in c_range.iter() {
                let m = d + c;
                summary.cells += 1;
                let key = CellKey {
                    n,
                    d,
                    m,
                    method: default_method(d, m),
                };
                match cache.get(&key) {
                    Some(rec) => {
                        summary.skipped += 1;
                        summary.tally(rec.status);
                    }
                    None => todo.push((n, d, m)),
                }
            }
        }
    }

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .expect("thread pool");
    let (tx, rx) = mpsc::channel();
    let mut file = BufWriter::new(
        OpenOptions::new()
            .create(true)
            .append(true)
            .open(cache_path)?,
    );
    let mut write_error = None;
    std::thread::scope(|scope| {
        scope.spawn(move || {
            pool.install(|| {
                todo.par_iter().for_each_with(tx, |tx, &(n, d, m)| {
                    let _ = tx.send(((n, d, m), compute_cell(n, d, m, None, limit)));
                });
            });
        });
        for ((n, d, m), result) in rx {
            match result {
                Ok(rec) => {
                    summary.tally(rec.status);
                    if rec.status == Status::Mismatch {
                        summary.failures.push(format!(
                            "mismatch at n={n} d={d} m={m}: computed {} predicted {}",
                            rec.computed_total, rec.predicted
                        ));
                    }
                    let written = serde_json::to_string(&rec)
                        .map_err(CliError::from)
                        .and_then(|line| writeln!(file, "{line}").map_err(CliError::from))
                        .and_then(|_| file.flush().map_err(CliError::from));
                    if let Err(e) = written {
                        write_error.get_or_insert(e);
                    }
                }
                Err(CliError::CellTooLarge { .. }) => summary.too_large += 1,
                Err(e @ CliError::LowerBoundViolation { .. }) => {
                    summary.lower_bound_violations += 1;
                    summary.failures.push(e.to_string());
                }
                Err(e) => {
                    summary.errors += 1;
                    summary.failures.push(format!("n={n} d={d} m={m}: {e}"));
                }
            }
        }
    });
    if let Some(e) = write_error {
        return Err(e);
    }
    summary.failures.sort();
    Ok(summary)
}

/// Everything known about `C_d(R^m)` for one `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CofiberReport {
    pub n: u32,
    pub d: u64,
    pub m: u64,
    pub reduced_k: usize,
    pub per_degree: Vec<(usize, usize)>,
    #[serde(with = "bignum")]
    pub predicted_cofiber_k: BigUint,
    pub connecting_rank: usize,
    #[serde(with = "bignum")]
    pub predicted_delta_rank: BigUint,
    /// Rank of `p^*` on `Q_n` homology.
    pub inclusion_rank: usize,
    /// The twisted complex on `Gr_{d-1}(R^{m-1})` has the same homology,
    /// shifted by `m - d`.
    pub twisted_agrees: bool,
}

impl CofiberReport {
    pub fn matches_predictions(&self) -> bool {
        self.predicted_cofiber_k.to_usize() == Some(self.reduced_k)
            && self.predicted_delta_rank.to_usize() == Some(self.connecting_rank)
    }
}

pub fn cofiber_report(n: u32, d: u64, m: u64, limit: u64) -> Result<CofiberReport, CliError> {
    check_size(d, m, limit)?;
    let seq = CofiberSequence::new(n, d as usize, m as usize)?;
    let (sub, _, _) = seq.profiles()?;
    let connecting_rank = seq.connecting_rank()?;
    let inclusion_rank = seq.inclusion_rank()?;
    let twisted = qn_homology(&twisted_complex(n, d as usize, m as usize)?)?;
    Ok(CofiberReport {
        n,
        d,
        m,
        reduced_k: sub.total,
        per_degree: sub
            .per_degree
            .iter()
            .enumerate()
            .filter(|(_, &k)| k > 0)
            .map(|(t, &k)| (t, k))
            .collect(),
        predicted_cofiber_k: formulas::predicted_cofiber_k(n, d, m)?,
        connecting_rank,
        predicted_delta_rank: formulas::predicted_delta_rank(n, d, m),
        inclusion_rank,
        twisted_agrees: twisted.shifted((m - d) as usize) == sub,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compute_examples() {
        let r = compute_cell(1, 3, 6, Some(Method::Both), DEFAULT_CELL_LIMIT).unwrap();
        assert_eq!(r.computed_total, BigUint::from(8u32));
        assert_eq!(r.predicted, BigUint::from(8u32));
        assert_eq!(r.status, Status::ConjectureMatch);
        let r = compute_cell(1, 2, 4, Some(Method::Both), DEFAULT_CELL_LIMIT).unwrap();
        assert_eq!(r.computed_total, BigUint::from(6u32));
        assert_eq!(r.status, Status::Proven);
    }

    #[test]
    fn trivial_cells() {
        for m in 0..5 {
            let r = compute_cell(1, 0, m, None, DEFAULT_CELL_LIMIT).unwrap();
            assert_eq!(r.computed_total, BigUint::from(1u32));
            assert_eq!(r.per_degree, vec![(0, 1)]);
        }
        assert!(matches!(
            compute_cell(1, 4, 3, None, DEFAULT_CELL_LIMIT),
            Err(CliError::Formula(FormulaError::InvalidCell { d: 4, m: 3 }))
        ));
    }

    #[test]
    fn too_large() {
        assert!(matches!(
            compute_cell(1, 5, 12, None, 100),
            Err(CliError::CellTooLarge { .. })
        ));
        let rows = table(1, 2, 6, 20).unwrap();
        let big = rows.iter().find(|r| (r.d, r.c) == (2, 6)).unwrap();
        assert_eq!(big.outcome, CellOutcome::PredictedOnly(BigUint::from(8u32)));
    }

    #[test]
    fn default_method_cutoff() {
        assert_eq!(default_method(3, 6), Method::Both);
        assert_eq!(default_method(7, 14), Method::Both);
        assert_eq!(default_method(5, 16), Method::Both);
        assert_eq!(default_method(6, 20), Method::Lenart);
    }

    #[test]
    fn ranges() {
        let r: InclusiveRange = "2..5".parse().unwrap();
        assert_eq!(r.iter().collect::<Vec<_>>(), vec![2, 3, 4, 5]);
        assert_eq!("3..=4".parse::<InclusiveRange>().unwrap(), InclusiveRange { start: 3, end: 4 });
        assert_eq!("7".parse::<InclusiveRange>().unwrap(), InclusiveRange { start: 7, end: 7 });
        assert!("5..2".parse::<InclusiveRange>().is_err());
        assert!("x".parse::<InclusiveRange>().is_err());
    }

    #[test]
    fn record_json_round_trip() {
        let mut r = compute_cell(1, 2, 5, None, DEFAULT_CELL_LIMIT).unwrap();
        r.computed_total = "123456789012345678901234567890".parse().unwrap();
        let line = serde_json::to_string(&r).unwrap();
        assert!(line.contains("\"computed_total\":123456789012345678901234567890"));
        assert!(line.contains("\"status\":\"proven\""));
        let back: ResultRecord = serde_json::from_str(&line).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn csv_layout() {
        let rows = table(1, 2, 2, DEFAULT_CELL_LIMIT).unwrap();
        let csv = table_csv(&rows).unwrap();
        assert_eq!(
            csv,
            "d,c,value,status,method\n1,1,2,proven,both\n1,2,3,proven,both\n2,1,3,proven,both\n2,2,6,proven,both\n"
        );
    }

    #[test]
    fn cofiber_examples() {
        let r = cofiber_report(1, 2, 7, DEFAULT_CELL_LIMIT).unwrap();
        assert_eq!((r.reduced_k, r.connecting_rank, r.inclusion_rank), (2, 2, 0));
        assert!(r.twisted_agrees && r.matches_predictions());
        let r = cofiber_report(1, 3, 8, DEFAULT_CELL_LIMIT).unwrap();
        assert_eq!(r.reduced_k, 5);
        assert!(r.matches_predictions());
        for m in 2..=4 {
            for d in 1..m {
                let r = cofiber_report(1, d, m, DEFAULT_CELL_LIMIT).unwrap();
                assert_eq!(
                    BigUint::from(r.reduced_k),
                    formulas::binomial(m as i64 - 1, d as i64 - 1)
                );
                assert_eq!(r.connecting_rank, 0);
            }
        }
    }
}
