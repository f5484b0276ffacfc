//! JSON documents for decisions and witnesses, and an independent re-check of
//! a decision document that trusts none of its claims.
//!
//! Rationals are strings `p` or `p/q`; algebraic numbers are a minimal
//! polynomial coefficient list (lowest degree first) plus an isolating
//! interval. No decimals appear anywhere.

use std::cmp::Ordering;
use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::arith::{
    cauchy_bound, parse_rational, squarefree_part, sturm_sequence, AlgebraicNumber, Field,
    IsolatingInterval, NumberField, NumberFieldElement, Polynomial, Rational, Sign,
};
use crate::decision::{
    row_space_contains, shifted_matrix, Certificate, HomogeneousProgram, Verdict,
};
use crate::eigen::{char_poly, EigenRecord};
use crate::error::{Error, Result};
use crate::matrix::{pow, QMatrix};
use crate::simulate::RunOutcome;
use crate::witness::{coordinate_coefficients, coordinate_strings, Witness};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProgramDoc {
    pub n: usize,
    #[serde(rename = "A")]
    pub a: Vec<Vec<String>>,
    pub f: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialDoc {
    /// Lowest degree first.
    pub coefficients: Vec<String>,
    pub text: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraicDoc {
    pub minpoly: Vec<String>,
    pub interval: [String; 2],
    pub multiplicity: usize,
    pub description: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MembershipDoc {
    pub eigenvalue: AlgebraicDoc,
    pub member: bool,
    /// Element of `Q(λ)` as a polynomial in `λ`.
    pub pivot_entry: PolynomialDoc,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateDoc {
    pub format_version: u32,
    pub program: ProgramDoc,
    pub verdict: String,
    pub char_poly: PolynomialDoc,
    pub positive_eigenvalues: Vec<AlgebraicDoc>,
    pub memberships: Vec<MembershipDoc>,
    pub failing_eigenvalue: Option<AlgebraicDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimulationDoc {
    pub steps: u64,
    pub survived: bool,
    pub terminated_at: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessDoc {
    pub format_version: u32,
    pub program: ProgramDoc,
    pub eigenvalue: AlgebraicDoc,
    pub rank_r: usize,
    pub coordinates: Vec<PolynomialDoc>,
    pub scale: String,
    pub scaled_coordinates: Vec<PolynomialDoc>,
    pub simulation: Option<SimulationDoc>,
}

fn strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

pub fn program_doc(p: &HomogeneousProgram) -> ProgramDoc {
    ProgramDoc {
        n: p.dimension(),
        a: p.update().row_vecs().iter().map(|r| strings(r)).collect(),
        f: strings(p.guard()),
    }
}

fn polynomial_doc(p: &Polynomial, var: &str) -> PolynomialDoc {
    PolynomialDoc {
        coefficients: strings(p.coeffs()),
        text: p.display_in(var),
    }
}

fn element_docs(v: &[NumberFieldElement]) -> Vec<PolynomialDoc> {
    coordinate_coefficients(v)
        .into_iter()
        .zip(coordinate_strings(v))
        .map(|(coefficients, text)| PolynomialDoc { coefficients, text })
        .collect()
}

fn algebraic_doc(r: &EigenRecord) -> AlgebraicDoc {
    let iv = r.value.interval();
    AlgebraicDoc {
        minpoly: strings(r.value.minpoly().coeffs()),
        interval: [iv.low.to_string(), iv.high.to_string()],
        multiplicity: r.multiplicity,
        description: r.value.describe(),
    }
}

impl CertificateDoc {
    pub fn new(program: &HomogeneousProgram, cert: &Certificate) -> Self {
        CertificateDoc {
            format_version: FORMAT_VERSION,
            program: program_doc(program),
            verdict: cert.verdict.to_string(),
            char_poly: polynomial_doc(&cert.char_poly, "t"),
            positive_eigenvalues: cert
                .positive_eigenvalues
                .iter()
                .map(algebraic_doc)
                .collect(),
            memberships: cert
                .memberships
                .iter()
                .map(|m| MembershipDoc {
                    eigenvalue: algebraic_doc(&m.eigenvalue),
                    member: m.member,
                    pivot_entry: polynomial_doc(m.pivot_entry.rep(), "λ"),
                })
                .collect(),
            failing_eigenvalue: cert.failing_eigenvalue.as_ref().map(algebraic_doc),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Certificate(e.to_string()))
    }
}

impl WitnessDoc {
    pub fn new(program: &HomogeneousProgram, w: &Witness, run: Option<(u64, RunOutcome)>) -> Self {
        WitnessDoc {
            format_version: FORMAT_VERSION,
            program: program_doc(program),
            eigenvalue: algebraic_doc(&EigenRecord {
                value: w.eigenvalue.clone(),
                multiplicity: multiplicity_of(program, &w.eigenvalue),
            }),
            rank_r: w.rank_r,
            coordinates: element_docs(&w.vector),
            scale: w.scale.to_string(),
            scaled_coordinates: element_docs(&w.scaled_vector),
            simulation: run.map(|(steps, out)| SimulationDoc {
                steps,
                survived: !out.terminated(),
                terminated_at: match out {
                    RunOutcome::TerminatedAt(k) => Some(k),
                    RunOutcome::SurvivedBound(_) => None,
                },
            }),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("witness serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Certificate(e.to_string()))
    }
}

fn multiplicity_of(program: &HomogeneousProgram, lambda: &AlgebraicNumber) -> usize {
    let Ok(chi) = char_poly(program.update()) else {
        return 0;
    };
    let mut k = 0;
    let mut rest = chi;
    while let Some(q) = rest.exact_div(lambda.minpoly()) {
        k += 1;
        rest = q;
    }
    k
}

fn bad(message: impl Into<String>) -> Error {
    Error::Certificate(message.into())
}

fn rationals(v: &[String]) -> Result<Vec<Rational>> {
    v.iter().map(|s| parse_rational(s)).collect()
}

pub fn program_from_doc(doc: &ProgramDoc) -> Result<HomogeneousProgram> {
    if doc.a.len() != doc.n || doc.a.iter().any(|r| r.len() != doc.n) {
        return Err(bad("program matrix does not have shape n x n"));
    }
    let rows = doc
        .a
        .iter()
        .map(|r| rationals(r))
        .collect::<Result<Vec<_>>>()?;
    HomogeneousProgram::new(QMatrix::from_rows(rows)?, rationals(&doc.f)?)
}

fn algebraic_from_doc(doc: &AlgebraicDoc) -> Result<AlgebraicNumber> {
    let minpoly = Polynomial::new(rationals(&doc.minpoly)?);
    let low = parse_rational(&doc.interval[0])?;
    let high = parse_rational(&doc.interval[1])?;
    AlgebraicNumber::new(&minpoly, IsolatingInterval::new(low, high))
}

fn element_from_doc(field: &NumberField, doc: &PolynomialDoc) -> Result<NumberFieldElement> {
    Ok(field.element(Polynomial::new(rationals(&doc.coefficients)?)))
}

/// Re-checks a decision document from its program alone:
///
/// * `χ_A` is recomputed and compared;
/// * every listed eigenvalue is a positive root of `χ_A` with the listed
///   multiplicity, and the list is complete by a Sturm count of `χ_A` on
///   `(0, ∞)`;
/// * every membership claim is re-run over its eigenvalue's field;
/// * the verdict follows from the memberships.
///
/// Returns the list of problems found; empty means the document checks out.
pub fn verify(doc: &CertificateDoc) -> Result<Vec<String>> {
    if doc.format_version != FORMAT_VERSION {
        return Err(bad(format!(
            "unsupported format_version {}",
            doc.format_version
        )));
    }
    let program = program_from_doc(&doc.program)?;
    let mut problems = Vec::new();

    let chi = char_poly(program.update())?;
    if rationals(&doc.char_poly.coefficients)? != chi.coeffs() {
        problems.push(format!(
            "characteristic polynomial is {chi}, not {}",
            doc.char_poly.text
        ));
    }

    let mut listed = Vec::new();
    for e in &doc.positive_eigenvalues {
        let value = algebraic_from_doc(e)?;
        if value.sign() != Sign::Positive {
            problems.push(format!("{} may not be positive", e.description));
        }
        let mult = multiplicity_of(&program, &value);
        if mult == 0 {
            problems.push(format!("{} is not an eigenvalue", e.description));
        } else if mult != e.multiplicity {
            problems.push(format!(
                "{} has multiplicity {mult}, not {}",
                e.description, e.multiplicity
            ));
        }
        listed.push(value);
    }
    for i in 0..listed.len() {
        for j in i + 1..listed.len() {
            if listed[i].cmp_value(&listed[j]) == Ordering::Equal {
                problems.push("an eigenvalue is listed twice".into());
            }
        }
    }
    let sf = squarefree_part(&chi)?;
    let positive_count =
        sturm_sequence(&sf).count_roots(&Rational::from_integer(0.into()), &cauchy_bound(&sf));
    // (0, bound], so a root at zero is not counted
    if positive_count != listed.len() {
        problems.push(format!(
            "characteristic polynomial has {positive_count} positive roots, {} listed",
            listed.len()
        ));
    }

    let mut seen = HashSet::new();
    let mut any_fail = false;
    for m in &doc.memberships {
        let value = algebraic_from_doc(&m.eigenvalue)?;
        let is_listed = listed
            .iter()
            .any(|l| l.cmp_value(&value) == Ordering::Equal);
        if !is_listed {
            problems.push(format!(
                "membership for unlisted eigenvalue {}",
                m.eigenvalue.description
            ));
        }
        let field = value.field();
        let m_pow = pow(
            &field,
            &shifted_matrix(&field, program.update()),
            program.dimension(),
        )?;
        let guard: Vec<_> = program
            .guard()
            .iter()
            .map(|g| field.from_rational(g))
            .collect();
        let test = row_space_contains(&field, &m_pow, &guard)?;
        if test.member != m.member {
            problems.push(format!(
                "membership for {} is {}, document claims {}",
                m.eigenvalue.description, test.member, m.member
            ));
        }
        if test.pivot_entry != element_from_doc(&field, &m.pivot_entry)? {
            problems.push(format!(
                "pivot entry for {} differs",
                m.eigenvalue.description
            ));
        }
        any_fail |= !test.member;
        seen.insert(value.minpoly().clone());
    }

    let verdict = match doc.verdict.as_str() {
        "TERMINATING" => Verdict::Terminating,
        "NONTERMINATING" => Verdict::Nonterminating,
        other => return Err(bad(format!("unknown verdict `{other}`"))),
    };
    match verdict {
        Verdict::Terminating => {
            if any_fail {
                problems.push("a membership test failed but the verdict is TERMINATING".into());
            }
            if listed.iter().any(|l| !seen.contains(l.minpoly())) {
                problems.push("TERMINATING verdict leaves a positive eigenvalue untested".into());
            }
        }
        Verdict::Nonterminating => {
            if !any_fail {
                problems.push("NONTERMINATING verdict without a failed membership test".into());
            }
        }
    }
    Ok(problems)
}
