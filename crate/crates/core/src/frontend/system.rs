use num_traits::{One, Zero};

use super::ast::{Comparator, SourceLoop};
use crate::arith::{Rational, Rationals};
use crate::decision::HomogeneousProgram;
use crate::error::{Error, Result};
use crate::matrix::{dot, mul_vec, QMatrix};

/// `while (F x > b) { x := A x + c }`, one row of `F` per guard atom.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineSystem {
    pub variables: Vec<String>,
    pub a: QMatrix,
    pub c: Vec<Rational>,
    pub f: QMatrix,
    pub b: Vec<Rational>,
    /// `false` for rows that came from `>=` / `<=`.
    pub strict: Vec<bool>,
}

impl AffineSystem {
    pub fn dimension(&self) -> usize {
        self.variables.len()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.c.iter().all(Zero::is_zero) && self.b.iter().all(Zero::is_zero)
    }

    pub fn step(&self, x: &[Rational]) -> Result<Vec<Rational>> {
        let ax = mul_vec(&Rationals, &self.a, x)?;
        Ok(ax.iter().zip(&self.c).map(|(p, q)| p + q).collect())
    }

    pub fn guard_holds(&self, x: &[Rational]) -> bool {
        (0..self.f.rows()).all(|i| {
            let lhs = dot(&Rationals, self.f.row(i), x);
            if self.strict[i] {
                lhs > self.b[i]
            } else {
                lhs >= self.b[i]
            }
        })
    }
}

/// Rewrites the sequential body as one simultaneous affine update. Each
/// right-hand side is expressed over the pre-iteration state by substituting
/// the assignments above it; unassigned variables keep their value.
pub fn propagate_sequential(source: &SourceLoop) -> AffineSystem {
    let vars = &source.variables;
    let n = vars.len();
    // current[i] = (row over the old state, constant)
    let mut current: Vec<(Vec<Rational>, Rational)> = (0..n)
        .map(|i| {
            let mut row = vec![Rational::zero(); n];
            row[i] = Rational::one();
            (row, Rational::zero())
        })
        .collect();
    for assignment in &source.body {
        let (coeffs, constant) = assignment.expr.collect(vars);
        let mut row = vec![Rational::zero(); n];
        let mut k = constant;
        for (j, cj) in coeffs.iter().enumerate() {
            if cj.is_zero() {
                continue;
            }
            for (r, s) in row.iter_mut().zip(&current[j].0) {
                *r += cj * s;
            }
            k += cj * &current[j].1;
        }
        if let Some(t) = vars.iter().position(|v| *v == assignment.target) {
            current[t] = (row, k);
        }
    }

    let a = QMatrix::new(
        n,
        n,
        current
            .iter()
            .flat_map(|(row, _)| row.iter().cloned())
            .collect(),
    );
    let c = current.into_iter().map(|(_, k)| k).collect();

    let mut f_rows = Vec::new();
    let mut b = Vec::new();
    let mut strict = Vec::new();
    for atom in &source.guard {
        let (l, lc) = atom.lhs.collect(vars);
        let (r, rc) = atom.rhs.collect(vars);
        // lhs - rhs > 0, flipped for `<`, `<=`
        let flip = matches!(atom.cmp, Comparator::Lt | Comparator::Le);
        let row: Vec<Rational> = l
            .iter()
            .zip(&r)
            .map(|(p, q)| if flip { q - p } else { p - q })
            .collect();
        let bound = if flip { &lc - &rc } else { &rc - &lc };
        f_rows.extend(row);
        b.push(bound);
        strict.push(atom.cmp.is_strict());
    }
    AffineSystem {
        variables: vars.clone(),
        a,
        c,
        f: QMatrix::new(b.len(), n, f_rows),
        b,
        strict,
    }
}

/// Reduces a single-guard affine loop to `while (fᵀx > 0) { x := A x }`,
/// appending a constant variable when `c` or `b` is nonzero. Starts of the
/// affine loop correspond to starts with that variable set to 1.
pub fn homogenize(sys: &AffineSystem) -> Result<HomogeneousProgram> {
    if sys.f.rows() != 1 {
        return Err(Error::UnsupportedGuardCount(sys.f.rows()));
    }
    if !sys.strict[0] {
        return Err(Error::UnsupportedComparator);
    }
    let n = sys.dimension();
    if sys.is_homogeneous() {
        return HomogeneousProgram::new(sys.a.clone(), sys.f.row(0).to_vec());
    }
    let mut data = Vec::with_capacity((n + 1) * (n + 1));
    for i in 0..n {
        data.extend(sys.a.row(i).iter().cloned());
        data.push(sys.c[i].clone());
    }
    data.extend(std::iter::repeat_n(Rational::zero(), n));
    data.push(Rational::one());
    let mut guard = sys.f.row(0).to_vec();
    guard.push(-sys.b[0].clone());
    HomogeneousProgram::new(QMatrix::new(n + 1, n + 1, data), guard)
}

/// Start state of the homogenized program for an affine start `x`.
pub fn lift_state(sys: &AffineSystem, x: &[Rational]) -> Vec<Rational> {
    let mut out = x.to_vec();
    if !sys.is_homogeneous() {
        out.push(Rational::one());
    }
    out
}

/// Variable names of the homogenized program.
pub fn lifted_variables(sys: &AffineSystem) -> Vec<String> {
    let mut vars = sys.variables.clone();
    if !sys.is_homogeneous() {
        let mut name = String::from("z");
        while vars.contains(&name) {
            name.push('\'');
        }
        vars.push(name);
    }
    vars
}
