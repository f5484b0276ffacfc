//! Bounded exact execution of `while (f·x > 0) { x := A x }`.
//!
//! A run can show termination but never nontermination: `SurvivedBound` only
//! says the guard held for the first `B + 1` checks.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::{AlgebraicNumber, Field, NumberFieldElement, Rational, Rationals, Sign};
use crate::decision::HomogeneousProgram;
use crate::error::{Error, Result};
use crate::matrix::{dot, embed, mul_vec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RunOutcome {
    /// The guard held at iterations `0..k` and failed at `k`.
    TerminatedAt(u64),
    /// The guard held at every iteration `0..=bound`.
    SurvivedBound(u64),
}

impl RunOutcome {
    pub fn terminated(&self) -> bool {
        matches!(self, RunOutcome::TerminatedAt(_))
    }
}

/// Runs from a rational start for at most `bound` loop iterations.
pub fn run(program: &HomogeneousProgram, x: &[Rational], bound: u64) -> Result<RunOutcome> {
    check_dim(program, x.len())?;
    let q = Rationals;
    // Positive rescaling never changes a guard sign; keep an integer,
    // content-free state so the numbers grow only with the dynamics.
    let mut state = primitive_integer_vector(x);
    let a = program.update();
    for k in 0..=bound {
        if Sign::of(&dot(&q, program.guard(), &state)) != Sign::Positive {
            return Ok(RunOutcome::TerminatedAt(k));
        }
        if k == bound {
            break;
        }
        state = primitive_integer_vector(&mul_vec(&q, a, &state)?);
    }
    Ok(RunOutcome::SurvivedBound(bound))
}

/// Runs from a start in `Q(λ)`, deciding each guard sign under the embedding
/// given by `root`.
pub fn run_in_field(
    program: &HomogeneousProgram,
    x: &[NumberFieldElement],
    root: &AlgebraicNumber,
    bound: u64,
) -> Result<RunOutcome> {
    check_dim(program, x.len())?;
    let field = root.field();
    if x.iter().any(|e| *e.field() != field) {
        return Err(Error::FieldMismatch);
    }
    let a = embed(&field, program.update());
    let guard: Vec<_> = program
        .guard()
        .iter()
        .map(|g| field.from_rational(g))
        .collect();
    let mut root = root.clone();
    let mut state = x.to_vec();
    for k in 0..=bound {
        if root.sign_at(&dot(&field, &guard, &state))? != Sign::Positive {
            return Ok(RunOutcome::TerminatedAt(k));
        }
        if k == bound {
            break;
        }
        state = mul_vec(&field, &a, &state)?;
    }
    Ok(RunOutcome::SurvivedBound(bound))
}

/// Result of [`run_adaptive`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AdaptiveOutcome {
    Terminated(u64),
    /// Still running at the largest bound tried; needs a closer look.
    Inconclusive(u64),
}

pub const ADAPTIVE_START: u64 = 100;
pub const ADAPTIVE_LIMIT: u64 = 6400;

/// Bounds 100, 200, ..., 6400 until the run terminates.
pub fn run_adaptive(program: &HomogeneousProgram, x: &[Rational]) -> Result<AdaptiveOutcome> {
    // A run to bound 2B repeats the first B steps, so one run to the limit
    // answers every smaller bound at once.
    match run(program, x, ADAPTIVE_LIMIT)? {
        RunOutcome::TerminatedAt(k) => Ok(AdaptiveOutcome::Terminated(k)),
        RunOutcome::SurvivedBound(b) => Ok(AdaptiveOutcome::Inconclusive(b)),
    }
}

/// Deterministic rational vectors with `|numerator| <= magnitude` and
/// `1 <= denominator <= magnitude`.
pub fn sample_rational_inputs(
    program: &HomogeneousProgram,
    count: usize,
    magnitude: u32,
    seed: u64,
) -> Vec<Vec<Rational>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let m = i64::from(magnitude.max(1));
    (0..count)
        .map(|_| {
            (0..program.dimension())
                .map(|_| {
                    let num = rng.gen_range(-m..=m);
                    let den = rng.gen_range(1..=m);
                    Rational::new(num.into(), den.into())
                })
                .collect()
        })
        .collect()
}

fn check_dim(program: &HomogeneousProgram, len: usize) -> Result<()> {
    if len != program.dimension() {
        return Err(Error::DimensionMismatch {
            expected: program.dimension(),
            found: len,
        });
    }
    Ok(())
}

fn primitive_integer_vector(x: &[Rational]) -> Vec<Rational> {
    let lcm = x.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = x
        .iter()
        .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
        .collect();
    let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if content.is_zero() {
        return x.to_vec();
    }
    ints.into_iter()
        .map(|c| Rational::from_integer(c / &content))
        .collect()
}
