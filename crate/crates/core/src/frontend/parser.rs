use std::collections::BTreeSet;

use num_traits::Zero;

use super::ast::{AffineExpr, Assignment, Comparator, GuardAtom, SourceLoop, Term};
use super::lexer::{tokenize, Tok, Token};
use crate::arith::Rational;
use crate::error::{Error, Result};

/// Parses a loop in the DSL:
///
/// ```text
/// vars x, y;                       // optional
/// while (3*x - y > 0) {
///     x := 3x - 2y;
///     y := 4/3x - 5/3y;
/// }
/// ```
pub fn parse(text: &str) -> Result<SourceLoop> {
    let tokens = tokenize(text)?;
    let mut p = Parser { tokens, pos: 0 };
    p.program()
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

/// Identifier with the position it was written at.
struct Use {
    name: String,
    line: usize,
    column: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn next(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if t.tok != Tok::Eof {
            self.pos += 1;
        }
        t
    }

    fn error_at(t: &Token, message: String) -> Error {
        Error::Syntax {
            line: t.line,
            column: t.column,
            message,
        }
    }

    fn expect(&mut self, want: Tok) -> Result<Token> {
        let t = self.next();
        if t.tok != want {
            return Err(Self::error_at(
                &t,
                format!("expected {}, found {}", want.describe(), t.tok.describe()),
            ));
        }
        Ok(t)
    }

    fn ident(&mut self) -> Result<Use> {
        let t = self.next();
        match t.tok.clone() {
            Tok::Ident(name) => Ok(Use {
                name,
                line: t.line,
                column: t.column,
            }),
            other => Err(Self::error_at(
                &t,
                format!("expected identifier, found {}", other.describe()),
            )),
        }
    }

    fn program(&mut self) -> Result<SourceLoop> {
        let mut uses = Vec::new();
        let declared = if self.peek().tok == Tok::Vars {
            self.next();
            let mut names: Vec<String> = Vec::new();
            loop {
                let id = self.ident()?;
                if names.contains(&id.name) {
                    return Err(Error::Syntax {
                        line: id.line,
                        column: id.column,
                        message: format!("variable `{}` declared twice", id.name),
                    });
                }
                names.push(id.name);
                if self.peek().tok == Tok::Comma {
                    self.next();
                } else {
                    break;
                }
            }
            self.expect(Tok::Semi)?;
            Some(names)
        } else {
            None
        };

        self.expect(Tok::While)?;
        self.expect(Tok::LParen)?;
        let mut guard = vec![self.atom(&mut uses)?];
        while self.peek().tok == Tok::And {
            self.next();
            guard.push(self.atom(&mut uses)?);
        }
        self.expect(Tok::RParen)?;
        self.expect(Tok::LBrace)?;

        let mut body: Vec<Assignment> = Vec::new();
        let mut targets: Vec<Use> = Vec::new();
        while self.peek().tok != Tok::RBrace {
            let target = self.ident()?;
            if body.iter().any(|a| a.target == target.name) {
                return Err(Error::DuplicateAssignment {
                    name: target.name,
                    line: target.line,
                    column: target.column,
                });
            }
            self.expect(Tok::Assign)?;
            let expr = self.expr(&mut uses)?;
            body.push(Assignment {
                target: target.name.clone(),
                expr,
            });
            targets.push(target);
            match self.peek().tok {
                Tok::Semi => {
                    self.next();
                }
                Tok::RBrace => {}
                _ => {
                    let t = self.next();
                    return Err(Self::error_at(
                        &t,
                        format!("expected `;` or `}}`, found {}", t.tok.describe()),
                    ));
                }
            }
        }
        self.expect(Tok::RBrace)?;
        self.expect(Tok::Eof)?;
        if body.is_empty() {
            return Err(Error::DegenerateBody);
        }

        uses.extend(targets);
        let variables = match declared {
            Some(names) => {
                if let Some(u) = uses.iter().find(|u| !names.contains(&u.name)) {
                    return Err(Error::UndeclaredVariable {
                        name: u.name.clone(),
                        line: u.line,
                        column: u.column,
                    });
                }
                names
            }
            None => uses
                .iter()
                .map(|u| u.name.clone())
                .collect::<BTreeSet<_>>()
                .into_iter()
                .collect(),
        };
        Ok(SourceLoop {
            variables,
            guard,
            body,
        })
    }

    fn atom(&mut self, uses: &mut Vec<Use>) -> Result<GuardAtom> {
        let lhs = self.expr(uses)?;
        let t = self.next();
        let cmp = match t.tok.clone() {
            Tok::Gt => Comparator::Gt,
            Tok::Ge => Comparator::Ge,
            Tok::Lt => Comparator::Lt,
            Tok::Le => Comparator::Le,
            other => {
                return Err(Self::error_at(
                    &t,
                    format!("expected a comparison, found {}", other.describe()),
                ))
            }
        };
        let rhs = self.expr(uses)?;
        Ok(GuardAtom { lhs, cmp, rhs })
    }

    fn expr(&mut self, uses: &mut Vec<Use>) -> Result<AffineExpr> {
        let mut negate = match self.peek().tok {
            Tok::Minus => {
                self.next();
                true
            }
            Tok::Plus => {
                self.next();
                false
            }
            _ => false,
        };
        let mut terms = Vec::new();
        loop {
            let mut term = self.term(uses)?;
            if negate {
                term.coeff = -term.coeff;
            }
            terms.push(term);
            negate = match self.peek().tok {
                Tok::Plus => false,
                Tok::Minus => true,
                _ => break,
            };
            self.next();
        }
        Ok(AffineExpr { terms })
    }

    fn term(&mut self, uses: &mut Vec<Use>) -> Result<Term> {
        if let Tok::Ident(_) = self.peek().tok {
            let id = self.ident()?;
            let var = Some(id.name.clone());
            uses.push(id);
            return Ok(Term {
                coeff: Rational::from_integer(1.into()),
                var,
            });
        }
        let coeff = self.coefficient()?;
        let var = match self.peek().tok {
            Tok::Star => {
                self.next();
                let id = self.ident()?;
                let name = id.name.clone();
                uses.push(id);
                Some(name)
            }
            Tok::Ident(_) => {
                let id = self.ident()?;
                let name = id.name.clone();
                uses.push(id);
                Some(name)
            }
            _ => None,
        };
        Ok(Term { coeff, var })
    }

    fn coefficient(&mut self) -> Result<Rational> {
        let t = self.next();
        match t.tok.clone() {
            Tok::LParen => {
                let neg = if self.peek().tok == Tok::Minus {
                    self.next();
                    true
                } else {
                    false
                };
                let r = self.coefficient()?;
                self.expect(Tok::RParen)?;
                Ok(if neg { -r } else { r })
            }
            Tok::Int(n) => {
                if self.peek().tok != Tok::Slash {
                    return Ok(Rational::from_integer(n));
                }
                self.next();
                let d = self.next();
                match d.tok.clone() {
                    Tok::Int(den) if !den.is_zero() => Ok(Rational::new(n, den)),
                    Tok::Int(_) => Err(Self::error_at(&d, "zero denominator".into())),
                    other => Err(Self::error_at(
                        &d,
                        format!(
                            "expected a positive denominator, found {}",
                            other.describe()
                        ),
                    )),
                }
            }
            other => Err(Self::error_at(
                &t,
                format!("expected a term, found {}", other.describe()),
            )),
        }
    }
}
