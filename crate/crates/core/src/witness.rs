//! Explicit nonterminating inputs.
//!
//! For a failing eigenvalue `λ`, let `r` be the least exponent with
//! `Ker((A − λI)^r)` not orthogonal to `f`. Any `x` in that kernel with
//! `f·x > 0`, after the layer below it has been checked orthogonal, satisfies
//! `f·A^k x = λ^k f·x > 0` for every `k`, so the loop never exits on `x`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::arith::{Field, NumberField, NumberFieldElement, Polynomial, Rational, Sign};
use crate::decision::{row_space_contains, shifted_matrix, HomogeneousProgram};
use crate::eigen::EigenRecord;
use crate::error::{Error, Result};
use crate::matrix::{dot, mul_vec, nullspace_basis, pow};
use crate::AlgebraicNumber;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub eigenvalue: AlgebraicNumber,
    /// Least `r` with `Ker((A − λI)^r)` not orthogonal to the guard.
    pub rank_r: usize,
    pub vector: Vec<NumberFieldElement>,
    /// `scale · vector`, every coordinate an integer polynomial in `λ`.
    pub scaled_vector: Vec<NumberFieldElement>,
    pub scale: BigInt,
}

impl Witness {
    pub fn field(&self) -> NumberField {
        self.eigenvalue.field()
    }
}

/// Builds a witness for an eigenvalue whose row-space test failed.
pub fn synthesize_witness(program: &HomogeneousProgram, lambda: &EigenRecord) -> Result<Witness> {
    let a = program.update();
    let n = program.dimension();
    let root = &lambda.value;
    let (field, full) = crate::decision::generalized_eigenmatrix(a, root)?;
    let guard: Vec<_> = program
        .guard()
        .iter()
        .map(|g| field.from_rational(g))
        .collect();
    if row_space_contains(&field, &full, &guard)?.member {
        return Err(Error::NotAFailure);
    }

    let shifted = shifted_matrix(&field, a);
    let mut refined = root.clone();
    for r in 1..=n {
        let m = pow(&field, &shifted, r)?;
        for w in nullspace_basis(&field, &m) {
            let value = dot(&field, &guard, &w);
            let vector = match refined.sign_at(&value)? {
                Sign::Zero => continue,
                Sign::Positive => w,
                Sign::Negative => w.iter().map(|x| field.neg(x)).collect(),
            };
            let (scale, scaled_vector) = clear_denominators(&field, &vector);
            return Ok(Witness {
                eigenvalue: root.clone(),
                rank_r: r,
                vector,
                scaled_vector,
                scale,
            });
        }
    }
    unreachable!("a failing eigenvalue has a kernel vector off the guard hyperplane")
}

fn clear_denominators(
    field: &NumberField,
    v: &[NumberFieldElement],
) -> (BigInt, Vec<NumberFieldElement>) {
    let scale = v
        .iter()
        .flat_map(|x| x.rep().coeffs().iter())
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let factor = Rational::from_integer(scale.clone());
    let scaled = v
        .iter()
        .map(|x| field.element(x.rep().scale(&factor)))
        .collect();
    (scale, scaled)
}

/// Failed invariant in [`check_witness`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WitnessDefect {
    GuardNotPositive,
    NotInKernel,
    InLowerKernel,
    ScaledNotIntegral,
    ScaledMismatch,
}

/// Re-checks the algebraic invariants of a witness against its program.
pub fn check_witness(program: &HomogeneousProgram, w: &Witness) -> Result<Vec<WitnessDefect>> {
    let field = w.field();
    let guard: Vec<_> = program
        .guard()
        .iter()
        .map(|g| field.from_rational(g))
        .collect();
    let mut defects = Vec::new();
    let mut root = w.eigenvalue.clone();
    if root.sign_at(&dot(&field, &guard, &w.vector))? != Sign::Positive {
        defects.push(WitnessDefect::GuardNotPositive);
    }
    let shifted = shifted_matrix(&field, program.update());
    let top = pow(&field, &shifted, w.rank_r)?;
    if !mul_vec(&field, &top, &w.vector)?
        .iter()
        .all(|x| x.is_zero())
    {
        defects.push(WitnessDefect::NotInKernel);
    }
    if w.rank_r > 1 {
        let below = pow(&field, &shifted, w.rank_r - 1)?;
        if mul_vec(&field, &below, &w.vector)?
            .iter()
            .all(|x| x.is_zero())
        {
            defects.push(WitnessDefect::InLowerKernel);
        }
    }
    let integral = w
        .scaled_vector
        .iter()
        .all(|x| x.rep().coeffs().iter().all(Rational::is_integer));
    if !integral {
        defects.push(WitnessDefect::ScaledNotIntegral);
    }
    let factor = Rational::from_integer(w.scale.clone());
    let matches = w
        .vector
        .iter()
        .zip(&w.scaled_vector)
        .all(|(x, y)| field.element(x.rep().scale(&factor)) == *y);
    if !matches || w.scale < BigInt::one() {
        defects.push(WitnessDefect::ScaledMismatch);
    }
    Ok(defects)
}

/// Coordinates rendered as polynomials in `λ`.
pub fn coordinate_strings(v: &[NumberFieldElement]) -> Vec<String> {
    v.iter().map(|x| x.display_in("λ")).collect()
}

/// Coefficient lists (lowest degree first) of each coordinate.
pub fn coordinate_coefficients(v: &[NumberFieldElement]) -> Vec<Vec<String>> {
    v.iter()
        .map(|x| x.rep().coeffs().iter().map(ToString::to_string).collect())
        .collect()
}

/// Rebuilds coordinates from coefficient lists.
pub fn coordinates_from_coefficients(
    field: &NumberField,
    coeffs: &[Vec<Rational>],
) -> Vec<NumberFieldElement> {
    coeffs
        .iter()
        .map(|c| field.element(Polynomial::new(c.clone())))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{nf_mul, nf_sub, rat};
    use crate::decision::decide;

    #[test]
    fn sqrt2_companion_witness() {
        let p = HomogeneousProgram::from_ints(&[&[0, 1], &[1, -2]], &[1, 0]).unwrap();
        let cert = decide(&p).unwrap();
        let failing = cert.failing_eigenvalue.unwrap();
        let w = synthesize_witness(&p, &failing).unwrap();
        assert_eq!(w.rank_r, 1);
        // Proportional to (1, λ): w2 = λ·w1.
        let lambda = w.field().generator();
        assert!(
            nf_sub(&w.vector[1], &nf_mul(&lambda, &w.vector[0]).unwrap())
                .unwrap()
                .is_zero()
        );
        assert!(check_witness(&p, &w).unwrap().is_empty());
    }

    #[test]
    fn jordan_witness_sits_in_second_layer() {
        let p = HomogeneousProgram::from_ints(&[&[1, 1, 0], &[0, 1, 0], &[0, 0, -1]], &[0, 1, 0])
            .unwrap();
        let cert = decide(&p).unwrap();
        let w = synthesize_witness(&p, &cert.failing_eigenvalue.unwrap()).unwrap();
        assert_eq!(w.rank_r, 2);
        let field = w.field();
        let e2: Vec<_> = [0, 1, 0].iter().map(|&c| field.rational(rat(c))).collect();
        assert_eq!(w.vector, e2);
        assert!(check_witness(&p, &w).unwrap().is_empty());
    }

    #[test]
    fn member_eigenvalue_has_no_witness() {
        let p = HomogeneousProgram::from_ints(&[&[1, 1, 0], &[0, 1, 0], &[0, 0, -1]], &[0, 0, 1])
            .unwrap();
        let ev = crate::eigen::positive_real_eigenvalues(p.update()).unwrap();
        assert_eq!(
            synthesize_witness(&p, &ev[0]).unwrap_err(),
            Error::NotAFailure
        );
    }
}
