//! Loop DSL, propagation of sequential assignments, homogenization, and the
//! matrix-direct input format.

mod ast;
mod lexer;
mod matrix_doc;
mod parser;
mod system;

pub use ast::{AffineExpr, Assignment, Comparator, GuardAtom, SourceLoop, Term};
pub use matrix_doc::parse_matrix_document;
pub use parser::parse;
pub use system::{homogenize, lift_state, lifted_variables, propagate_sequential, AffineSystem};

use crate::decision::HomogeneousProgram;
use crate::error::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputFormat {
    Dsl,
    Matrix,
}

impl InputFormat {
    /// JSON objects are matrix documents; anything else is DSL.
    pub fn detect(text: &str) -> Self {
        if text.trim_start().starts_with('{') {
            InputFormat::Matrix
        } else {
            InputFormat::Dsl
        }
    }
}

/// Parses either input format into an affine system.
pub fn load_system(text: &str, format: InputFormat) -> Result<AffineSystem> {
    match format {
        InputFormat::Dsl => Ok(propagate_sequential(&parse(text)?)),
        InputFormat::Matrix => parse_matrix_document(text),
    }
}

/// Parses and homogenizes in one step.
pub fn load_program(text: &str, format: InputFormat) -> Result<HomogeneousProgram> {
    homogenize(&load_system(text, format)?)
}
