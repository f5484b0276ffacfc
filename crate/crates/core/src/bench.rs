//! Random homogeneous loops and a batch harness reporting verdict counts and
//! decision times per dimension.

use std::fmt;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::arith::Rational;
use crate::decision::{decide, HomogeneousProgram, Verdict};
use crate::error::{Error, Result};
use crate::matrix::QMatrix;
use crate::witness::{check_witness, synthesize_witness};

pub const MIN_DIM: usize = 2;
pub const MAX_DIM: usize = 8;

/// Every `SPOT_CHECK_EVERY`-th program also has its certificate re-checked.
pub const SPOT_CHECK_EVERY: usize = 20;

/// Entries of `A` and `f` uniform in `[-magnitude, magnitude]`; `f` is
/// redrawn until nonzero.
pub fn random_program<R: Rng>(dim: usize, magnitude: i64, rng: &mut R) -> HomogeneousProgram {
    assert!(dim >= 1, "dimension must be positive");
    let m = magnitude.max(1);
    let mut draw = |k: usize| -> Vec<Rational> {
        (0..k)
            .map(|_| Rational::from_integer(rng.gen_range(-m..=m).into()))
            .collect()
    };
    let a = draw(dim * dim);
    let mut f = draw(dim);
    while f.iter().all(|x| *x == Rational::from_integer(0.into())) {
        f = draw(dim);
    }
    HomogeneousProgram::new(QMatrix::new(dim, dim, a), f).expect("shapes agree and f is nonzero")
}

/// Generator for program `index` of the set of dimension `dim`; independent of
/// scheduling order.
pub fn program_rng(seed: u64, dim: usize, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(((dim as u64) << 32) | index as u64);
    rng
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BenchConfig {
    pub dimensions: Vec<usize>,
    pub loops_per_set: usize,
    pub entry_magnitude: i64,
    pub seed: u64,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            dimensions: vec![3, 4, 5],
            loops_per_set: 100,
            entry_magnitude: 10,
            seed: 7,
        }
    }
}

impl BenchConfig {
    pub fn validate(&self) -> Result<()> {
        if self.dimensions.is_empty() {
            return Err(Error::DegenerateInput("no dimensions given"));
        }
        if self
            .dimensions
            .iter()
            .any(|d| !(MIN_DIM..=MAX_DIM).contains(d))
        {
            return Err(Error::DegenerateInput("dimensions must lie in [2, 8]"));
        }
        if self.loops_per_set == 0 {
            return Err(Error::DegenerateInput("loops_per_set must be at least 1"));
        }
        if self.entry_magnitude < 1 {
            return Err(Error::DegenerateInput("entry_magnitude must be at least 1"));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRow {
    pub dimension: usize,
    pub loops: usize,
    pub terminating: usize,
    pub nonterminating: usize,
    /// Programs whose decision returned an error.
    pub failures: usize,
    pub spot_checked: usize,
    pub spot_check_failures: usize,
    pub cpu_seconds_terminating: f64,
    pub cpu_seconds_nonterminating: f64,
    pub cpu_seconds_total: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchReport {
    pub format_version: u32,
    pub config: BenchConfig,
    pub rows: Vec<BenchRow>,
}

impl BenchReport {
    /// Verdict counts only, for comparing runs (timings vary).
    pub fn counts(&self) -> Vec<(usize, usize, usize, usize)> {
        self.rows
            .iter()
            .map(|r| (r.dimension, r.terminating, r.nonterminating, r.failures))
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

struct TaskResult {
    verdict: std::result::Result<Verdict, Error>,
    elapsed: Duration,
    spot: Option<bool>,
}

fn run_task(config: &BenchConfig, dim: usize, index: usize) -> TaskResult {
    let mut rng = program_rng(config.seed, dim, index);
    let program = random_program(dim, config.entry_magnitude, &mut rng);
    let start = Instant::now();
    let cert = decide(&program);
    let elapsed = start.elapsed();
    let spot = index.is_multiple_of(SPOT_CHECK_EVERY).then(|| match &cert {
        Ok(c) => spot_check(&program, c),
        Err(_) => false,
    });
    TaskResult {
        verdict: cert.map(|c| c.verdict),
        elapsed,
        spot,
    }
}

fn spot_check(program: &HomogeneousProgram, cert: &crate::decision::Certificate) -> bool {
    match cert.verdict {
        Verdict::Terminating => {
            cert.failing_eigenvalue.is_none() && cert.memberships.iter().all(|m| m.member)
        }
        Verdict::Nonterminating => match &cert.failing_eigenvalue {
            Some(ev) => synthesize_witness(program, ev)
                .and_then(|w| check_witness(program, &w))
                .map(|defects| defects.is_empty())
                .unwrap_or(false),
            None => false,
        },
    }
}

/// Decides `loops_per_set` random programs per dimension in parallel.
/// Per-verdict times are summed per task, so they measure CPU time rather
/// than wall time.
pub fn run_suite(config: &BenchConfig) -> Result<BenchReport> {
    config.validate()?;
    let rows = config
        .dimensions
        .iter()
        .map(|&dim| {
            let results: Vec<TaskResult> = (0..config.loops_per_set)
                .into_par_iter()
                .map(|i| run_task(config, dim, i))
                .collect();
            let mut row = BenchRow {
                dimension: dim,
                loops: config.loops_per_set,
                terminating: 0,
                nonterminating: 0,
                failures: 0,
                spot_checked: 0,
                spot_check_failures: 0,
                cpu_seconds_terminating: 0.0,
                cpu_seconds_nonterminating: 0.0,
                cpu_seconds_total: 0.0,
            };
            for r in &results {
                let secs = r.elapsed.as_secs_f64();
                match r.verdict {
                    Ok(Verdict::Terminating) => {
                        row.terminating += 1;
                        row.cpu_seconds_terminating += secs;
                    }
                    Ok(Verdict::Nonterminating) => {
                        row.nonterminating += 1;
                        row.cpu_seconds_nonterminating += secs;
                    }
                    Err(_) => row.failures += 1,
                }
                row.cpu_seconds_total += secs;
                if let Some(ok) = r.spot {
                    row.spot_checked += 1;
                    if !ok {
                        row.spot_check_failures += 1;
                    }
                }
            }
            row
        })
        .collect();
    Ok(BenchReport {
        format_version: 1,
        config: config.clone(),
        rows,
    })
}

impl fmt::Display for BenchReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{:>4} {:>7} {:>6} {:>6} {:>5} {:>10} {:>10} {:>13}",
            "Dim", "#Loops", "#T", "#NT", "#Err", "CPU/s[T]", "CPU/s[N]", "CPU/s[total]"
        )?;
        for r in &self.rows {
            writeln!(
                f,
                "{:>4} {:>7} {:>6} {:>6} {:>5} {:>10.4} {:>10.4} {:>13.4}",
                r.dimension,
                r.loops,
                r.terminating,
                r.nonterminating,
                r.failures,
                r.cpu_seconds_terminating,
                r.cpu_seconds_nonterminating,
                r.cpu_seconds_total
            )?;
        }
        let checked: usize = self.rows.iter().map(|r| r.spot_checked).sum();
        let bad: usize = self.rows.iter().map(|r| r.spot_check_failures).sum();
        write!(f, "spot-checked certificates: {checked}, failed: {bad}")
    }
}
