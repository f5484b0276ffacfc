use std::fmt;
use std::sync::Arc;

use super::factor::irreducible_factors;
use super::field::Field;
use super::poly::Polynomial;
use super::rational::Rational;
use crate::error::{Error, Result};

/// `Q[t]/(m(t))` for a monic irreducible `m`. Cheap to clone.
#[derive(Clone)]
pub struct NumberField {
    modulus: Arc<Polynomial>,
}

impl NumberField {
    /// Builds the field after certifying that `modulus` is irreducible.
    pub fn new(modulus: &Polynomial) -> Result<Self> {
        if modulus.degree().unwrap_or(0) == 0 {
            return Err(Error::DegenerateInput(
                "number field modulus must have degree >= 1",
            ));
        }
        let factors = irreducible_factors(modulus)?;
        if factors.len() != 1 || factors[0].1 != 1 {
            return Err(Error::ReducibleModulus);
        }
        Ok(Self::from_irreducible(modulus))
    }

    /// Caller guarantees irreducibility (e.g. a factor returned by
    /// [`irreducible_factors`]).
    pub(crate) fn from_irreducible(modulus: &Polynomial) -> Self {
        Self {
            modulus: Arc::new(modulus.monic()),
        }
    }

    pub fn modulus(&self) -> &Polynomial {
        &self.modulus
    }

    pub fn degree(&self) -> usize {
        self.modulus.deg()
    }

    /// Reduces `rep` modulo the field polynomial.
    pub fn element(&self, rep: Polynomial) -> NumberFieldElement {
        NumberFieldElement {
            field: self.clone(),
            rep: self.reduce(rep),
        }
    }

    /// The class of `t`, i.e. the embedded algebraic number itself.
    pub fn generator(&self) -> NumberFieldElement {
        self.element(Polynomial::t())
    }

    pub fn rational(&self, r: Rational) -> NumberFieldElement {
        self.element(Polynomial::constant(r))
    }

    fn reduce(&self, rep: Polynomial) -> Polynomial {
        if rep.deg() < self.degree() {
            rep
        } else {
            rep.rem(&self.modulus).expect("modulus is nonzero")
        }
    }

    fn check(&self, e: &NumberFieldElement) -> Result<()> {
        if e.field == *self {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    fn raw_inv(&self, rep: &Polynomial) -> Option<Polynomial> {
        if rep.is_zero() {
            return None;
        }
        let (g, s, _) = rep.ext_gcd(&self.modulus);
        debug_assert!(g.is_one(), "modulus is irreducible");
        Some(self.reduce(s))
    }
}

impl PartialEq for NumberField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.modulus, &other.modulus) || self.modulus == other.modulus
    }
}

impl Eq for NumberField {}

impl fmt::Debug for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q[t]/({})", self.modulus)
    }
}

/// An element of a [`NumberField`], stored as its reduced representative.
#[derive(Clone, PartialEq, Eq)]
pub struct NumberFieldElement {
    field: NumberField,
    rep: Polynomial,
}

impl NumberFieldElement {
    pub fn field(&self) -> &NumberField {
        &self.field
    }

    /// The representative polynomial, of degree below the field degree.
    pub fn rep(&self) -> &Polynomial {
        &self.rep
    }

    pub fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }

    /// Rational value if the element lies in `Q`.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.rep.degree() {
            None => Some(Rational::from_integer(0.into())),
            Some(0) => Some(self.rep.coeff(0)),
            _ => None,
        }
    }

    /// Renders the element as a polynomial in `var`.
    pub fn display_in(&self, var: &str) -> String {
        self.rep.display_in(var)
    }
}

impl fmt::Debug for NumberFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.rep)
    }
}

impl fmt::Display for NumberFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.rep.display_in("λ"))
    }
}

pub fn nf_add(a: &NumberFieldElement, b: &NumberFieldElement) -> Result<NumberFieldElement> {
    a.field.check(b)?;
    Ok(a.field.add(a, b))
}

pub fn nf_sub(a: &NumberFieldElement, b: &NumberFieldElement) -> Result<NumberFieldElement> {
    a.field.check(b)?;
    Ok(a.field.sub(a, b))
}

pub fn nf_mul(a: &NumberFieldElement, b: &NumberFieldElement) -> Result<NumberFieldElement> {
    a.field.check(b)?;
    Ok(a.field.mul(a, b))
}

pub fn nf_neg(a: &NumberFieldElement) -> NumberFieldElement {
    a.field.neg(a)
}

pub fn nf_inv(a: &NumberFieldElement) -> Result<NumberFieldElement> {
    a.field.inv(a).ok_or(Error::DivisionByZero)
}

impl Field for NumberField {
    type Elem = NumberFieldElement;

    fn zero(&self) -> NumberFieldElement {
        self.element(Polynomial::zero())
    }

    fn one(&self) -> NumberFieldElement {
        self.element(Polynomial::one())
    }

    fn from_rational(&self, r: &Rational) -> NumberFieldElement {
        self.rational(r.clone())
    }

    fn add(&self, a: &NumberFieldElement, b: &NumberFieldElement) -> NumberFieldElement {
        debug_assert!(a.field == *self && b.field == *self);
        NumberFieldElement {
            field: self.clone(),
            rep: &a.rep + &b.rep,
        }
    }

    fn sub(&self, a: &NumberFieldElement, b: &NumberFieldElement) -> NumberFieldElement {
        debug_assert!(a.field == *self && b.field == *self);
        NumberFieldElement {
            field: self.clone(),
            rep: &a.rep - &b.rep,
        }
    }

    fn mul(&self, a: &NumberFieldElement, b: &NumberFieldElement) -> NumberFieldElement {
        debug_assert!(a.field == *self && b.field == *self);
        self.element(&a.rep * &b.rep)
    }

    fn neg(&self, a: &NumberFieldElement) -> NumberFieldElement {
        NumberFieldElement {
            field: self.clone(),
            rep: -&a.rep,
        }
    }

    fn inv(&self, a: &NumberFieldElement) -> Option<NumberFieldElement> {
        self.raw_inv(&a.rep).map(|rep| NumberFieldElement {
            field: self.clone(),
            rep,
        })
    }

    fn is_zero(&self, a: &NumberFieldElement) -> bool {
        a.rep.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, rat_frac};

    fn sqrt2() -> NumberField {
        NumberField::new(&Polynomial::from_ints(&[-2, 0, 1])).unwrap()
    }

    #[test]
    fn sqrt2_arithmetic() {
        let k = sqrt2();
        let t = k.generator();
        assert_eq!(nf_mul(&t, &t).unwrap(), k.rational(rat(2)));
        assert_eq!(
            nf_inv(&t).unwrap(),
            k.element(Polynomial::new(vec![rat(0), rat_frac(1, 2)]))
        );
        let one = k.one();
        let a = nf_add(&one, &t).unwrap();
        let b = nf_sub(&one, &t).unwrap();
        assert_eq!(nf_mul(&a, &b).unwrap(), k.rational(rat(-1)));
    }

    #[test]
    fn errors() {
        let k = sqrt2();
        assert_eq!(nf_inv(&k.zero()), Err(Error::DivisionByZero));
        let other = NumberField::new(&Polynomial::from_ints(&[-3, 0, 1])).unwrap();
        assert_eq!(
            nf_add(&k.generator(), &other.generator()),
            Err(Error::FieldMismatch)
        );
        assert_eq!(
            NumberField::new(&Polynomial::from_ints(&[-1, 0, 1])).unwrap_err(),
            Error::ReducibleModulus
        );
    }

    #[test]
    fn fields_compare_by_modulus() {
        assert_eq!(sqrt2(), sqrt2());
        let k = sqrt2();
        assert!(nf_add(&k.generator(), &sqrt2().generator()).is_ok());
    }
}
