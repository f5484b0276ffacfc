//! Characteristic polynomial and the strictly positive real eigenvalues.

use crate::arith::{
    irreducible_factors, isolate_positive_roots, AlgebraicNumber, Polynomial, Rational, Rationals,
};
use crate::error::{Error, Result};
use crate::matrix::{identity, mul, QMatrix};

/// A positive real eigenvalue with its algebraic multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenRecord {
    pub value: AlgebraicNumber,
    pub multiplicity: usize,
}

/// `det(tI − A)` by the Faddeev–LeVerrier trace recursion.
pub fn char_poly(a: &QMatrix) -> Result<Polynomial> {
    if !a.is_square() || a.rows() == 0 {
        return Err(Error::DimensionMismatch {
            expected: a.rows(),
            found: a.cols(),
        });
    }
    let q = Rationals;
    let n = a.rows();
    let mut coeffs = vec![Rational::from_integer(0.into()); n + 1];
    coeffs[n] = Rational::from_integer(1.into());
    // M_k = A M_{k-1} + c_{n-k+1} I,  c_{n-k} = -tr(A M_k) / k
    let mut m = QMatrix::filled(n, n, Rational::from_integer(0.into()));
    let id = identity(&q, n);
    for k in 1..=n {
        let am = mul(&q, a, &m)?;
        let c = &coeffs[n - k + 1];
        m = QMatrix::new(
            n,
            n,
            (0..n * n)
                .map(|idx| am.get(idx / n, idx % n) + c * id.get(idx / n, idx % n))
                .collect(),
        );
        let am = mul(&q, a, &m)?;
        let trace: Rational = (0..n).map(|i| am.get(i, i).clone()).sum();
        coeffs[n - k] = -trace / Rational::from_integer(k.into());
    }
    Ok(Polynomial::new(coeffs))
}

/// One record per strictly positive real root of `χ_A`, largest first.
pub fn positive_real_eigenvalues(a: &QMatrix) -> Result<Vec<EigenRecord>> {
    positive_roots_of(&char_poly(a)?)
}

/// Positive real roots of `chi` as algebraic numbers over its irreducible
/// factors, largest first.
pub fn positive_roots_of(chi: &Polynomial) -> Result<Vec<EigenRecord>> {
    let mut out = Vec::new();
    for (factor, multiplicity) in irreducible_factors(chi)? {
        for interval in isolate_positive_roots(&factor)? {
            out.push(EigenRecord {
                value: AlgebraicNumber::from_parts(factor.clone(), interval),
                multiplicity,
            });
        }
    }
    out.sort_by(|a, b| b.value.cmp_value(&a.value));
    Ok(out)
}
