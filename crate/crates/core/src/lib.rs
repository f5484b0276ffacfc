//! Exact termination analysis for homogeneous linear loops.
//!
//! A homogeneous linear loop has the shape
//!
//! ```text
//! while (f·x > 0) { x := A x }
//! ```
//!
//! with a rational `n × n` update matrix `A` and a nonzero rational guard
//! vector `f`. The loop terminates on every real input exactly when, for
//! each strictly positive real eigenvalue `λ` of `A`, the vector `f` lies in
//! the row space of `(A − λI)^n`. This crate decides that condition with
//! exact arithmetic in `Q(λ)`, produces a certificate, and for nonterminating
//! loops synthesizes an explicit input on which the loop runs forever.
//!
//! ```
//! use linloop::{decide, HomogeneousProgram, Verdict};
//!
//! let program = HomogeneousProgram::from_ints(&[&[3, -2], &[4, -1]], &[3, -1]).unwrap();
//! let certificate = decide(&program).unwrap();
//! assert_eq!(certificate.verdict, Verdict::Terminating);
//! assert!(certificate.positive_eigenvalues.is_empty());
//! ```

pub mod arith;
pub mod bench;
pub mod certificate;
pub mod cli;
pub mod decision;
pub mod eigen;
mod error;
pub mod frontend;
pub mod matrix;
pub mod simulate;
pub mod witness;

pub use arith::{
    AlgebraicNumber, IsolatingInterval, NumberField, NumberFieldElement, Polynomial, Rational, Sign,
};

pub use decision::{decide, Certificate, HomogeneousProgram, MembershipResult, Verdict};
pub use eigen::{char_poly, positive_real_eigenvalues, EigenRecord};
pub use error::{Error, Result};
pub use matrix::Matrix;
pub use simulate::RunOutcome;
pub use witness::{synthesize_witness, Witness};
