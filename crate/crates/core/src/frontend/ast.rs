use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::arith::Rational;

/// `coeff * var`, or a bare constant when `var` is `None`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub coeff: Rational,
    pub var: Option<String>,
}

/// Terms in source order; repeated variables are kept as written.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineExpr {
    pub terms: Vec<Term>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Comparator {
    Gt,
    Ge,
    Lt,
    Le,
}

impl Comparator {
    pub fn is_strict(self) -> bool {
        matches!(self, Comparator::Gt | Comparator::Lt)
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Comparator::Gt => ">",
            Comparator::Ge => ">=",
            Comparator::Lt => "<",
            Comparator::Le => "<=",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GuardAtom {
    pub lhs: AffineExpr,
    pub cmp: Comparator,
    pub rhs: AffineExpr,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Assignment {
    pub target: String,
    pub expr: AffineExpr,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SourceLoop {
    pub variables: Vec<String>,
    /// Conjunction of atoms.
    pub guard: Vec<GuardAtom>,
    pub body: Vec<Assignment>,
}

impl AffineExpr {
    pub fn constant(c: Rational) -> Self {
        AffineExpr {
            terms: vec![Term {
                coeff: c,
                var: None,
            }],
        }
    }

    /// `(coefficients over vars, constant)`; unknown names are ignored.
    pub fn collect(&self, vars: &[String]) -> (Vec<Rational>, Rational) {
        let mut coeffs = vec![Rational::zero(); vars.len()];
        let mut constant = Rational::zero();
        for t in &self.terms {
            match &t.var {
                Some(v) => {
                    if let Some(i) = vars.iter().position(|w| w == v) {
                        coeffs[i] += &t.coeff;
                    }
                }
                None => constant += &t.coeff,
            }
        }
        (coeffs, constant)
    }

    /// Value at a state given as `(name, value)` lookups over `vars`.
    pub fn eval(&self, vars: &[String], state: &[Rational]) -> Rational {
        let (coeffs, constant) = self.collect(vars);
        coeffs
            .iter()
            .zip(state)
            .fold(constant, |acc, (c, x)| acc + c * x)
    }
}

impl SourceLoop {
    /// One pass of the body, assignments applied in order.
    pub fn execute_body(&self, state: &[Rational]) -> Vec<Rational> {
        let mut s = state.to_vec();
        for a in &self.body {
            let value = a.expr.eval(&self.variables, &s);
            if let Some(i) = self.variables.iter().position(|v| *v == a.target) {
                s[i] = value;
            }
        }
        s
    }

    pub fn guard_holds(&self, state: &[Rational]) -> bool {
        self.guard.iter().all(|g| {
            let l = g.lhs.eval(&self.variables, state);
            let r = g.rhs.eval(&self.variables, state);
            match g.cmp {
                Comparator::Gt => l > r,
                Comparator::Ge => l >= r,
                Comparator::Lt => l < r,
                Comparator::Le => l <= r,
            }
        })
    }
}

fn write_magnitude(f: &mut fmt::Formatter<'_>, c: &Rational, var: &Option<String>) -> fmt::Result {
    match var {
        Some(v) if c.is_one() => write!(f, "{v}"),
        Some(v) => write!(f, "{c}*{v}"),
        None => write!(f, "{c}"),
    }
}

impl fmt::Display for AffineExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            let neg = t.coeff.is_negative();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            write_magnitude(f, &t.coeff.abs(), &t.var)?;
        }
        Ok(())
    }
}

impl fmt::Display for GuardAtom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.lhs, self.cmp.symbol(), self.rhs)
    }
}

impl fmt::Display for SourceLoop {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "vars {};", self.variables.join(", "))?;
        let guard: Vec<String> = self.guard.iter().map(ToString::to_string).collect();
        writeln!(f, "while ({}) {{", guard.join(" && "))?;
        for a in &self.body {
            writeln!(f, "    {} := {};", a.target, a.expr)?;
        }
        write!(f, "}}")
    }
}
