//! The termination decision: for every positive eigenvalue `λ` of `A`, test
//! whether the guard `f` lies in the row space of `(A − λI)^n` over `Q(λ)`.

use std::collections::HashMap;
use std::fmt;

use num_traits::Zero;

use crate::arith::{AlgebraicNumber, Field, NumberField, NumberFieldElement, Polynomial, Rational};
use crate::eigen::{char_poly, positive_roots_of, EigenRecord};
use crate::error::{Error, Result};
use crate::matrix::{embed, pow, rref_with_pivots, Matrix, QMatrix};

/// `while (f·x > 0) { x := A x }` with rational `A` and nonzero `f`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomogeneousProgram {
    update: QMatrix,
    guard: Vec<Rational>,
}

impl HomogeneousProgram {
    pub fn new(update: QMatrix, guard: Vec<Rational>) -> Result<Self> {
        if !update.is_square() || update.rows() == 0 {
            return Err(Error::DimensionMismatch {
                expected: update.rows(),
                found: update.cols(),
            });
        }
        if guard.len() != update.rows() {
            return Err(Error::DimensionMismatch {
                expected: update.rows(),
                found: guard.len(),
            });
        }
        if guard.iter().all(Zero::is_zero) {
            return Err(Error::DegenerateGuard);
        }
        Ok(Self { update, guard })
    }

    pub fn from_ints(update: &[&[i64]], guard: &[i64]) -> Result<Self> {
        Self::new(
            QMatrix::from_ints(update)?,
            guard
                .iter()
                .map(|&g| Rational::from_integer(g.into()))
                .collect(),
        )
    }

    pub fn dimension(&self) -> usize {
        self.update.rows()
    }

    pub fn update(&self) -> &QMatrix {
        &self.update
    }

    pub fn guard(&self) -> &[Rational] {
        &self.guard
    }

    /// Same update, guard multiplied by `c`.
    pub fn with_scaled_guard(&self, c: &Rational) -> Result<Self> {
        Self::new(
            self.update.clone(),
            self.guard.iter().map(|g| g * c).collect(),
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Terminating,
    Nonterminating,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Terminating => "TERMINATING",
            Verdict::Nonterminating => "NONTERMINATING",
        })
    }
}

/// Outcome of the row-space test for one eigenvalue.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MembershipResult {
    pub eigenvalue: EigenRecord,
    pub member: bool,
    /// Leading entry of the last row of the reduced augmented matrix; zero
    /// exactly when the guard is in the row space.
    pub pivot_entry: NumberFieldElement,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub verdict: Verdict,
    pub char_poly: Polynomial,
    /// Largest first.
    pub positive_eigenvalues: Vec<EigenRecord>,
    /// One entry per eigenvalue examined, in the order examined.
    pub memberships: Vec<MembershipResult>,
    pub failing_eigenvalue: Option<EigenRecord>,
}

/// Row-space membership evidence over some field.
#[derive(Debug, Clone, PartialEq)]
pub struct Membership<E> {
    pub member: bool,
    pub pivot_entry: E,
    /// `rref` of the nonzero rows of `rref(M)` with `v` appended.
    pub augmented: Matrix<E>,
}

/// Which power of `A − λI` the row-space test uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Exponent {
    /// The full dimension `n`.
    #[default]
    Dimension,
    /// The algebraic multiplicity of `λ`, which already reaches the
    /// stationary kernel.
    Multiplicity,
}

/// `(A − λI)^n` with entries in `Q(λ) = Q[t]/(minpoly λ)`.
pub fn generalized_eigenmatrix(
    a: &QMatrix,
    lambda: &AlgebraicNumber,
) -> Result<(NumberField, Matrix<NumberFieldElement>)> {
    generalized_eigenmatrix_pow(a, lambda, a.rows())
}

/// `(A − λI)^k` over `Q(λ)`.
pub fn generalized_eigenmatrix_pow(
    a: &QMatrix,
    lambda: &AlgebraicNumber,
    k: usize,
) -> Result<(NumberField, Matrix<NumberFieldElement>)> {
    let chi = char_poly(a)?;
    if !lambda.minpoly().divides(&chi) {
        return Err(Error::FieldMismatch);
    }
    let field = lambda.field();
    let shifted = shifted_matrix(&field, a);
    let m = pow(&field, &shifted, k)?;
    Ok((field, m))
}

/// `A − tI` over `field`, where `t` is the field generator.
pub(crate) fn shifted_matrix(field: &NumberField, a: &QMatrix) -> Matrix<NumberFieldElement> {
    let mut m = embed(field, a);
    let t = field.generator();
    for i in 0..a.rows() {
        let v = field.sub(m.get(i, i), &t);
        m.set(i, i, v);
    }
    m
}

pub fn rref<F: Field>(field: &F, m: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    crate::matrix::rref(field, m)
}

/// Is `v` in the span of the rows of `m`?
///
/// Reduce `m`, keep its nonzero rows, append `v` as the last row and reduce
/// again. The last row of the result is zero exactly when `v` is a member;
/// otherwise it starts with a pivot 1.
pub fn row_space_contains<F: Field>(
    field: &F,
    m: &Matrix<F::Elem>,
    v: &[F::Elem],
) -> Result<Membership<F::Elem>> {
    if v.len() != m.cols() {
        return Err(Error::DimensionMismatch {
            expected: m.cols(),
            found: v.len(),
        });
    }
    let mut basis = rref_with_pivots(field, m).basis();
    basis.push_row(v)?;
    let augmented = rref_with_pivots(field, &basis).matrix;
    let last = augmented.row(augmented.rows() - 1);
    let pivot_entry = last
        .iter()
        .find(|x| !field.is_zero(x))
        .cloned()
        .unwrap_or_else(|| field.zero());
    Ok(Membership {
        member: field.is_zero(&pivot_entry),
        pivot_entry,
        augmented,
    })
}

/// Decides termination over the reals.
pub fn decide(program: &HomogeneousProgram) -> Result<Certificate> {
    decide_with(program, Exponent::Dimension)
}

pub fn decide_with(program: &HomogeneousProgram, exponent: Exponent) -> Result<Certificate> {
    let a = program.update();
    let n = program.dimension();
    let chi = char_poly(a)?;
    let positive = positive_roots_of(&chi)?;
    if positive.is_empty() {
        return Ok(Certificate {
            verdict: Verdict::Terminating,
            char_poly: chi,
            positive_eigenvalues: positive,
            memberships: Vec::new(),
            failing_eigenvalue: None,
        });
    }

    // Zero-ness in Q[t]/(m) does not depend on which root of m t stands for,
    // so one test per irreducible factor covers all of its roots.
    let mut by_factor: HashMap<Polynomial, (bool, NumberFieldElement)> = HashMap::new();
    let mut memberships = Vec::new();
    let mut failing = None;
    for record in &positive {
        let minpoly = record.value.minpoly();
        let (member, pivot_entry) = match by_factor.get(minpoly) {
            Some(hit) => hit.clone(),
            None => {
                let field = record.value.field();
                let k = match exponent {
                    Exponent::Dimension => n,
                    Exponent::Multiplicity => record.multiplicity,
                };
                let m = pow(&field, &shifted_matrix(&field, a), k)?;
                let guard: Vec<_> = program
                    .guard()
                    .iter()
                    .map(|g| field.from_rational(g))
                    .collect();
                let test = row_space_contains(&field, &m, &guard)?;
                let hit = (test.member, test.pivot_entry);
                by_factor.insert(minpoly.clone(), hit.clone());
                hit
            }
        };
        memberships.push(MembershipResult {
            eigenvalue: record.clone(),
            member,
            pivot_entry,
        });
        if !member {
            failing = Some(record.clone());
            break;
        }
    }
    let verdict = if failing.is_some() {
        Verdict::Nonterminating
    } else {
        Verdict::Terminating
    };
    Ok(Certificate {
        verdict,
        char_poly: chi,
        positive_eigenvalues: positive,
        memberships,
        failing_eigenvalue: failing,
    })
}

/// Kernel-side check of the same condition: every basis vector of
/// `Ker((A − λI)^n)` is orthogonal to `f`.
pub fn kernel_orthogonal(program: &HomogeneousProgram, lambda: &AlgebraicNumber) -> Result<bool> {
    let (field, m) = generalized_eigenmatrix(program.update(), lambda)?;
    let guard: Vec<_> = program
        .guard()
        .iter()
        .map(|g| field.from_rational(g))
        .collect();
    Ok(crate::matrix::nullspace_basis(&field, &m)
        .iter()
        .all(|w| field.is_zero(&crate::matrix::dot(&field, &guard, w))))
}
