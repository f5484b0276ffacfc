//! Exact scalar, polynomial and number-field arithmetic.
//!
//! Nothing in this module touches floating point. Scalars are arbitrary
//! precision rationals, polynomials are dense over `Q`, and real algebraic
//! numbers are a minimal polynomial together with an isolating interval.

mod factor;
mod field;
mod number_field;
mod poly;
mod rational;
mod real_root;

pub use factor::{irreducible_factors, squarefree_decomposition, squarefree_part};
pub use field::{Field, Rationals};
pub use number_field::{nf_add, nf_inv, nf_mul, nf_neg, nf_sub, NumberField, NumberFieldElement};
pub use poly::{poly_gcd, Polynomial};
pub use rational::{parse_rational, rat, rat_frac, Rational};
pub use real_root::{
    cauchy_bound, isolate_positive_roots, sign_of, sturm_sequence, AlgebraicNumber,
    IsolatingInterval, Sign, SturmSequence,
};
