//! Real roots of rational polynomials: Sturm sequences, isolation of the
//! positive roots, and exact sign decisions for elements of `Q(λ)`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::factor::squarefree_part;
use super::number_field::{NumberField, NumberFieldElement};
use super::poly::Polynomial;
use super::rational::Rational;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of(r: &Rational) -> Sign {
        if r.is_zero() {
            Sign::Zero
        } else if r.is_positive() {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    pub fn negate(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }
}

/// Sturm chain `p, p', -rem(p, p'), ...` of a squarefree polynomial.
#[derive(Debug, Clone)]
pub struct SturmSequence {
    chain: Vec<Polynomial>,
}

pub fn sturm_sequence(p: &Polynomial) -> SturmSequence {
    let mut chain = vec![p.clone()];
    let mut next = p.derivative();
    while !next.is_zero() {
        let prev = chain.last().expect("nonempty");
        let r = -&prev.rem(&next).expect("nonzero divisor");
        chain.push(next);
        next = r;
    }
    SturmSequence { chain }
}

impl SturmSequence {
    pub fn variations_at(&self, x: &Rational) -> usize {
        let mut count = 0;
        let mut last = Sign::Zero;
        for q in &self.chain {
            let s = Sign::of(&q.eval(x));
            if s == Sign::Zero {
                continue;
            }
            if last != Sign::Zero && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Number of distinct roots in `(low, high]`.
    pub fn count_roots(&self, low: &Rational, high: &Rational) -> usize {
        self.variations_at(low)
            .saturating_sub(self.variations_at(high))
    }
}

/// `1 + max |c_i / c_n|`, strictly larger than the modulus of every root.
pub fn cauchy_bound(p: &Polynomial) -> Rational {
    let lead = p.leading().abs();
    let n = p.deg();
    p.coeffs()[..n]
        .iter()
        .map(|c| c.abs() / &lead)
        .max()
        .unwrap_or_else(Rational::zero)
        + Rational::one()
}

/// Rational interval `(low, high)` holding exactly one root of some
/// polynomial, with neither endpoint a root.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IsolatingInterval {
    pub low: Rational,
    pub high: Rational,
}

impl IsolatingInterval {
    pub fn new(low: Rational, high: Rational) -> Self {
        debug_assert!(low < high);
        Self { low, high }
    }

    pub fn width(&self) -> Rational {
        &self.high - &self.low
    }

    pub fn midpoint(&self) -> Rational {
        (&self.low + &self.high) / Rational::from_integer(2.into())
    }

    pub fn is_disjoint(&self, other: &IsolatingInterval) -> bool {
        self.high <= other.low || other.high <= self.low
    }
}

impl fmt::Display for IsolatingInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.low, self.high)
    }
}

/// Disjoint isolating intervals for the strictly positive real roots of
/// `p`, in increasing order, all with positive lower endpoints and width at
/// most 1.
pub fn isolate_positive_roots(p: &Polynomial) -> Result<Vec<IsolatingInterval>> {
    if p.is_zero() {
        return Err(Error::DegenerateInput(
            "root isolation of the zero polynomial",
        ));
    }
    let mut q = squarefree_part(p)?;
    if q.coeff(0).is_zero() && !q.is_zero() {
        q = q.exact_div(&Polynomial::t()).expect("t divides q");
    }
    if q.deg() == 0 {
        return Ok(Vec::new());
    }
    let sturm = sturm_sequence(&q);
    let c0 = q.coeff(0).abs();
    let lower = Rational::one()
        / (q.coeffs()[1..]
            .iter()
            .map(|c| c.abs() / &c0)
            .max()
            .expect("degree >= 1")
            + Rational::one());
    let upper = cauchy_bound(&q);

    let mut out = Vec::new();
    let mut stack = vec![(lower, upper)];
    while let Some((lo, hi)) = stack.pop() {
        match sturm.count_roots(&lo, &hi) {
            0 => {}
            1 if &hi - &lo > Rational::one() => {
                let mid = split_point(&q, &lo, &hi);
                if sturm.count_roots(&lo, &mid) == 1 {
                    stack.push((lo, mid));
                } else {
                    stack.push((mid, hi));
                }
            }
            1 => out.push(IsolatingInterval::new(lo, hi)),
            _ => {
                let mid = split_point(&q, &lo, &hi);
                stack.push((mid.clone(), hi));
                stack.push((lo, mid));
            }
        }
    }
    out.sort_by(|a, b| a.low.cmp(&b.low));
    Ok(out)
}

/// A point strictly inside `(lo, hi)` that is not a root of `q`, preferring
/// the midpoint.
fn split_point(q: &Polynomial, lo: &Rational, hi: &Rational) -> Rational {
    let width = hi - lo;
    let mut mid = (lo + hi) / Rational::from_integer(2.into());
    let mut offset = &width / Rational::from_integer(4.into());
    while q.eval(&mid).is_zero() {
        mid = lo + &width / Rational::from_integer(2.into()) + &offset;
        offset /= Rational::from_integer(2.into());
    }
    mid
}

/// A real algebraic number: a monic irreducible polynomial and an interval
/// isolating one of its real roots.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AlgebraicNumber {
    minpoly: Polynomial,
    interval: IsolatingInterval,
}

impl AlgebraicNumber {
    /// Validates that `interval` isolates exactly one root of `minpoly` and
    /// that `minpoly` is irreducible.
    pub fn new(minpoly: &Polynomial, interval: IsolatingInterval) -> Result<Self> {
        let minpoly = minpoly.monic();
        if minpoly.deg() == 0 {
            return Err(Error::DegenerateInput(
                "minimal polynomial must have degree >= 1",
            ));
        }
        NumberField::new(&minpoly)?;
        if interval.low >= interval.high
            || minpoly.eval(&interval.low).is_zero()
            || minpoly.eval(&interval.high).is_zero()
            || sturm_sequence(&minpoly).count_roots(&interval.low, &interval.high) != 1
        {
            return Err(Error::DegenerateInput(
                "interval does not isolate a single root",
            ));
        }
        Ok(Self { minpoly, interval })
    }

    pub(crate) fn from_parts(minpoly: Polynomial, interval: IsolatingInterval) -> Self {
        Self { minpoly, interval }
    }

    pub fn minpoly(&self) -> &Polynomial {
        &self.minpoly
    }

    pub fn interval(&self) -> &IsolatingInterval {
        &self.interval
    }

    /// `Q[t]/(minpoly)`, in which `t` stands for this number.
    pub fn field(&self) -> NumberField {
        NumberField::from_irreducible(&self.minpoly)
    }

    pub fn degree(&self) -> usize {
        self.minpoly.deg()
    }

    pub fn as_rational(&self) -> Option<Rational> {
        (self.degree() == 1).then(|| -self.minpoly.coeff(0))
    }

    /// Halves the isolating interval.
    pub fn refine(&mut self) {
        let mid = self.interval.midpoint();
        let at_mid = self.minpoly.eval(&mid);
        if at_mid.is_zero() {
            // Only possible for a rational root.
            let two = Rational::from_integer(2.into());
            let low = (&self.interval.low + &mid) / &two;
            let high = (&mid + &self.interval.high) / &two;
            self.interval = IsolatingInterval::new(low, high);
            return;
        }
        let at_low = Sign::of(&self.minpoly.eval(&self.interval.low));
        if at_low != Sign::of(&at_mid) {
            self.interval.high = mid;
        } else {
            self.interval.low = mid;
        }
    }

    pub fn refine_to_width(&mut self, width: &Rational) {
        while &self.interval.width() > width {
            self.refine();
        }
    }

    /// Sign of the number itself.
    pub fn sign(&self) -> Sign {
        if self.minpoly == Polynomial::t() {
            return Sign::Zero;
        }
        let mut a = self.clone();
        loop {
            if a.interval.low >= Rational::zero() {
                return Sign::Positive;
            }
            if a.interval.high <= Rational::zero() {
                return Sign::Negative;
            }
            a.refine();
        }
    }

    /// Exact order of two real algebraic numbers.
    pub fn cmp_value(&self, other: &AlgebraicNumber) -> Ordering {
        if self.minpoly == other.minpoly && !self.interval.is_disjoint(&other.interval) {
            // Two intervals of one squarefree polynomial that overlap can only
            // isolate the same root if each holds exactly one root and they
            // share it; check via the intersection.
            let low = (&self.interval.low).max(&other.interval.low).clone();
            let high = (&self.interval.high).min(&other.interval.high).clone();
            if sturm_sequence(&self.minpoly).count_roots(&low, &high) == 1 {
                return Ordering::Equal;
            }
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        loop {
            if a.interval.high <= b.interval.low {
                return Ordering::Less;
            }
            if b.interval.high <= a.interval.low {
                return Ordering::Greater;
            }
            a.refine();
            b.refine();
        }
    }

    /// Sign of `e` under the embedding `t ↦ self`, refining `self` in place
    /// so that later calls start from a tighter interval.
    pub fn sign_at(&mut self, e: &NumberFieldElement) -> Result<Sign> {
        if *e.field().modulus() != self.minpoly {
            return Err(Error::FieldMismatch);
        }
        let rep = e.rep();
        if rep.is_zero() {
            return Ok(Sign::Zero);
        }
        if rep.deg() == 0 {
            return Ok(Sign::of(&rep.coeff(0)));
        }
        loop {
            let (low, high) = interval_eval(rep, &self.interval.low, &self.interval.high);
            if low.is_positive() {
                return Ok(Sign::Positive);
            }
            if high.is_negative() {
                return Ok(Sign::Negative);
            }
            self.refine();
        }
    }

    /// Closed form for rational and quadratic numbers, otherwise the
    /// polynomial and interval.
    pub fn describe(&self) -> String {
        if let Some(r) = self.as_rational() {
            return r.to_string();
        }
        if self.degree() == 2 {
            return self.describe_quadratic();
        }
        format!("root of {} in {}", self.minpoly, self.interval)
    }

    fn describe_quadratic(&self) -> String {
        let two = Rational::from_integer(2.into());
        let b = self.minpoly.coeff(1);
        let c = self.minpoly.coeff(0);
        let disc = &b * &b - Rational::from_integer(4.into()) * &c;
        let centre = -&b / &two;
        // sqrt(N/M) = sqrt(N·M)/M = s·sqrt(D)/M with N·M = s²·D.
        let radicand = disc.numer() * disc.denom();
        let (s, d) = extract_square(&radicand);
        let scale = Rational::new(s, disc.denom() * BigInt::from(2));
        let mut a = self.clone();
        while a.interval.low <= centre && centre <= a.interval.high {
            a.refine();
        }
        let plus = a.interval.low > centre;
        let radical = if scale.is_one() {
            format!("sqrt({d})")
        } else {
            format!("{scale}*sqrt({d})")
        };
        match (centre.is_zero(), plus) {
            (true, true) => radical,
            (true, false) => format!("-{radical}"),
            (false, true) => format!("{centre} + {radical}"),
            (false, false) => format!("{centre} - {radical}"),
        }
    }
}

impl fmt::Display for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe())
    }
}

/// Sign of `e(λ)` for the real root `λ` that `root` isolates.
pub fn sign_of(e: &NumberFieldElement, root: &AlgebraicNumber) -> Result<Sign> {
    root.clone().sign_at(e)
}

/// Splits `n > 0` as `s² · d` using trial division by small primes. `d` is
/// squarefree whenever `n` has no large repeated prime factor.
fn extract_square(n: &BigInt) -> (BigInt, BigInt) {
    let mut rest = n.clone();
    let mut s = BigInt::one();
    let mut p = BigInt::from(2);
    let limit = BigInt::from(100_000);
    while &p * &p <= rest && p < limit {
        let sq = &p * &p;
        while (&rest % &sq).is_zero() {
            rest /= &sq;
            s *= &p;
        }
        p += if p == BigInt::from(2) { 1 } else { 2 };
    }
    if rest.is_zero() {
        rest = BigInt::one();
    }
    let root = num_integer::Roots::sqrt(&rest);
    if &root * &root == rest {
        s *= &root;
        rest = BigInt::one();
    }
    (s, rest)
}

/// Range of `p` on `[low, high]` by interval Horner evaluation.
fn interval_eval(p: &Polynomial, low: &Rational, high: &Rational) -> (Rational, Rational) {
    let mut acc_lo = Rational::zero();
    let mut acc_hi = Rational::zero();
    for c in p.coeffs().iter().rev() {
        let products = [&acc_lo * low, &acc_lo * high, &acc_hi * low, &acc_hi * high];
        let lo = products.iter().min().expect("nonempty").clone();
        let hi = products.iter().max().expect("nonempty").clone();
        acc_lo = lo + c;
        acc_hi = hi + c;
    }
    (acc_lo, acc_hi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, rat_frac, Field};

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    #[test]
    fn isolates_sqrt2_minus_1() {
        let iv = isolate_positive_roots(&p(&[-1, 2, 1])).unwrap();
        assert_eq!(iv.len(), 1);
        assert!(iv[0].low > rat(0) && iv[0].high <= rat(1));
        assert!(isolate_positive_roots(&p(&[1, 0, 1])).unwrap().is_empty());
    }

    #[test]
    fn isolates_two_integer_roots() {
        let iv = isolate_positive_roots(&p(&[6, -5, 1])).unwrap();
        assert_eq!(iv.len(), 2);
        assert!(iv[0].is_disjoint(&iv[1]));
        assert!(iv[0].low < rat(2) && rat(2) < iv[0].high);
        assert!(iv[1].low < rat(3) && rat(3) < iv[1].high);
    }

    #[test]
    fn ignores_zero_and_negative_roots_and_multiplicity() {
        // t (t + 1) (t - 1/2)^2
        let f = &(&p(&[0, 1]) * &p(&[1, 1])) * &Polynomial::from_roots(&[rat_frac(1, 2)]).pow(2);
        let iv = isolate_positive_roots(&f).unwrap();
        assert_eq!(iv.len(), 1);
        assert!(iv[0].low > rat(0));
    }

    #[test]
    fn sign_decisions_in_sqrt2_field() {
        let m = p(&[-1, 2, 1]);
        let root = AlgebraicNumber::new(&m, IsolatingInterval::new(rat(0), rat(1))).unwrap();
        let k = root.field();
        assert_eq!(sign_of(&k.generator(), &root).unwrap(), Sign::Positive);
        assert_eq!(
            sign_of(&k.element(Polynomial::zero()), &root).unwrap(),
            Sign::Zero
        );
        assert_eq!(
            sign_of(&k.element(p(&[-2, 1])), &root).unwrap(),
            Sign::Negative
        );
        // 5λ - 2 = 5√2 - 7 ≈ 0.0711
        assert_eq!(
            sign_of(&k.element(p(&[-2, 5])), &root).unwrap(),
            Sign::Positive
        );
    }

    #[test]
    fn sign_of_tiny_power() {
        // λ^40 for λ = √2 - 1 is about 5e-16 but has huge coefficients.
        let m = p(&[-1, 2, 1]);
        let mut root = AlgebraicNumber::new(&m, IsolatingInterval::new(rat(0), rat(1))).unwrap();
        let k = root.field();
        let mut e = k.one();
        for _ in 0..40 {
            e = crate::arith::nf_mul(&e, &k.generator()).unwrap();
        }
        assert_eq!(root.sign_at(&e).unwrap(), Sign::Positive);
        let neg = crate::arith::nf_neg(&e);
        assert_eq!(root.sign_at(&neg).unwrap(), Sign::Negative);
    }

    #[test]
    fn rejects_bad_intervals() {
        let m = p(&[-2, 0, 1]);
        assert!(AlgebraicNumber::new(&m, IsolatingInterval::new(rat(-2), rat(2))).is_err());
        assert!(
            AlgebraicNumber::new(&p(&[-1, 0, 1]), IsolatingInterval::new(rat(0), rat(2))).is_err()
        );
    }

    #[test]
    fn ordering_and_description() {
        let m = p(&[2, -4, 1]);
        let iv = isolate_positive_roots(&m).unwrap();
        let lo = AlgebraicNumber::from_parts(m.clone(), iv[0].clone());
        let hi = AlgebraicNumber::from_parts(m.clone(), iv[1].clone());
        assert_eq!(lo.cmp_value(&hi), Ordering::Less);
        assert_eq!(hi.cmp_value(&hi.clone()), Ordering::Equal);
        assert_eq!(lo.describe(), "2 - sqrt(2)");
        assert_eq!(hi.describe(), "2 + sqrt(2)");
        let two = AlgebraicNumber::from_parts(p(&[-2, 1]), IsolatingInterval::new(rat(1), rat(3)));
        assert_eq!(two.cmp_value(&hi), Ordering::Less);
        assert_eq!(two.cmp_value(&lo), Ordering::Greater);
        assert_eq!(two.describe(), "2");
        let r = AlgebraicNumber::from_parts(p(&[-1, 2, 1]), IsolatingInterval::new(rat(0), rat(1)));
        assert_eq!(r.describe(), "-1 + sqrt(2)");
    }
}
