//! Squarefree decomposition and factorization over `Q`.
//!
//! Irreducible factors come from a Cantor–Zassenhaus factorization modulo a
//! single prime `p` that exceeds twice the Mignotte bound of the input, so
//! every true integer factor is visible in symmetric representation mod `p`
//! and no Hensel lifting is needed. Modular factors are then recombined by
//! subset search with exact trial division over `Z`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::poly::{poly_gcd, Polynomial};
use super::rational::Rational;
use crate::error::{Error, Result};

/// `p / gcd(p, p')`, made monic.
pub fn squarefree_part(p: &Polynomial) -> Result<Polynomial> {
    if p.is_zero() {
        return Err(Error::DegenerateInput(
            "squarefree part of the zero polynomial",
        ));
    }
    if p.degree() == Some(0) {
        return Ok(Polynomial::one());
    }
    let g = poly_gcd(p, &p.derivative())?;
    Ok(p.exact_div(&g).expect("gcd divides p").monic())
}

/// Yun's algorithm: monic pairwise coprime squarefree `(a_i, i)` with
/// `p = lc · ∏ a_i^i`. Factors of degree zero are omitted.
pub fn squarefree_decomposition(p: &Polynomial) -> Result<Vec<(Polynomial, usize)>> {
    if p.is_zero() {
        return Err(Error::DegenerateInput("squarefree decomposition of zero"));
    }
    let mut out = Vec::new();
    if p.deg() == 0 {
        return Ok(out);
    }
    let f = p.monic();
    let df = f.derivative();
    let a0 = poly_gcd(&f, &df)?;
    let mut b = f.exact_div(&a0).expect("gcd divides");
    let c = df.exact_div(&a0).expect("gcd divides");
    let mut d = &c - &b.derivative();
    let mut i = 1;
    while !b.is_one() {
        let a = poly_gcd(&b, &d)?;
        let nb = b.exact_div(&a).expect("gcd divides");
        let c = d.exact_div(&a).expect("gcd divides");
        d = &c - &nb.derivative();
        if a.deg() > 0 {
            out.push((a, i));
        }
        b = nb;
        i += 1;
    }
    Ok(out)
}

/// Monic irreducible factors over `Q` with multiplicities, sorted by degree
/// and then by coefficients. `p = lc(p) · ∏ factor^mult`.
pub fn irreducible_factors(p: &Polynomial) -> Result<Vec<(Polynomial, usize)>> {
    match p.degree() {
        None => return Err(Error::DegenerateInput("factorization of zero")),
        Some(0) => return Err(Error::DegenerateInput("factorization of a constant")),
        _ => {}
    }
    let mut out = Vec::new();
    for (part, mult) in squarefree_decomposition(p)? {
        for factor in factor_squarefree(&part) {
            out.push((factor, mult));
        }
    }
    out.sort_by(|(a, _), (b, _)| {
        a.deg()
            .cmp(&b.deg())
            .then_with(|| a.coeffs().cmp(b.coeffs()))
    });
    Ok(out)
}

fn factor_squarefree(f: &Polynomial) -> Vec<Polynomial> {
    if f.deg() <= 1 {
        return vec![f.monic()];
    }
    let mut ints = f.primitive_integer_coeffs();
    let mut out = Vec::new();
    if ints[0].is_zero() {
        out.push(Polynomial::t());
        ints.remove(0);
        if ints.len() <= 2 {
            out.push(Polynomial::from_bigints(&ints).monic());
            return out;
        }
    }
    out.extend(
        factor_primitive(&ints)
            .into_iter()
            .map(|g| Polynomial::from_bigints(&g).monic()),
    );
    out
}

/// Factors a primitive squarefree integer polynomial of degree >= 2 with
/// a nonzero constant term.
fn factor_primitive(f: &[BigInt]) -> Vec<Vec<BigInt>> {
    let n = f.len() - 1;
    let lc = f[n].abs();
    let norm = f.iter().map(|c| c * c).sum::<BigInt>().sqrt() + BigInt::one();
    let bound = &lc * (BigInt::one() << n) * norm;
    let threshold = bound * 2u32;

    for p in candidate_primes(&threshold) {
        let field = Fp::new(p);
        if (&f[n] % &field.p).is_zero() {
            continue;
        }
        let fm = field.monic(&field.reduce(f));
        let dfm = field.derivative(&fm);
        if field.gcd(&fm, &dfm).len() != 1 {
            continue;
        }
        let modular = field.factor(&fm);
        return recombine(&field, f.to_vec(), modular);
    }
    unreachable!("candidate primes are unbounded")
}

fn recombine(field: &Fp, mut f: Vec<BigInt>, mut modular: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
    let mut found = Vec::new();
    let mut size = 1;
    while 2 * size <= modular.len() {
        let mut hit = None;
        for subset in Combinations::new(modular.len(), size) {
            let lc = f.last().expect("nonempty").clone();
            let mut g = vec![field.reduce_scalar(&lc)];
            for &i in &subset {
                g = field.mul(&g, &modular[i]);
            }
            let g = primitive(&field.symmetric(&g));
            if let Some(q) = int_exact_div(&f, &g) {
                hit = Some((subset, g, q));
                break;
            }
        }
        match hit {
            Some((subset, g, q)) => {
                found.push(g);
                f = q;
                for i in subset.into_iter().rev() {
                    modular.remove(i);
                }
            }
            None => size += 1,
        }
    }
    if f.len() > 1 {
        found.push(primitive(&f));
    }
    found
}

fn primitive(g: &[BigInt]) -> Vec<BigInt> {
    let content = g.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let sign = if g.last().is_some_and(|c| c.is_negative()) {
        -BigInt::one()
    } else {
        BigInt::one()
    };
    g.iter().map(|c| c / &content * &sign).collect()
}

fn int_exact_div(f: &[BigInt], g: &[BigInt]) -> Option<Vec<BigInt>> {
    if g.len() > f.len() || g.len() < 2 {
        return None;
    }
    // Cheap necessary condition on constant terms before polynomial division.
    if !g[0].is_zero() && !(&f[0] % &g[0]).is_zero() {
        return None;
    }
    let (q, r) = Polynomial::from_bigints(f)
        .div_rem(&Polynomial::from_bigints(g))
        .ok()?;
    if !r.is_zero() || !q.coeffs().iter().all(Rational::is_integer) {
        return None;
    }
    Some(q.coeffs().iter().map(|c| c.to_integer()).collect())
}

struct Combinations {
    n: usize,
    idx: Vec<usize>,
    done: bool,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Self {
        Self {
            n,
            idx: (0..k).collect(),
            done: k > n,
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let current = self.idx.clone();
        let k = self.idx.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < self.n - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(current)
    }
}

const MERSENNE_EXPONENTS: [u32; 9] = [61, 89, 107, 127, 521, 607, 1279, 2203, 2281];

/// Primes above `threshold`: Mersenne primes first, then a Miller–Rabin
/// search upward.
fn candidate_primes(threshold: &BigInt) -> impl Iterator<Item = BigInt> + '_ {
    let mersenne = MERSENNE_EXPONENTS
        .iter()
        .map(|&e| (BigInt::one() << e) - 1u32)
        .filter(move |p| p > threshold);
    let mut next = threshold + 1u32;
    if next.is_even() {
        next += 1u32;
    }
    let searched = std::iter::from_fn(move || loop {
        let candidate = next.clone();
        next += 2u32;
        if is_probable_prime(&candidate) {
            return Some(candidate);
        }
    });
    mersenne.chain(searched)
}

fn is_probable_prime(n: &BigInt) -> bool {
    const BASES: [u32; 16] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53];
    if *n < BigInt::from(2) {
        return false;
    }
    for b in BASES {
        let b = BigInt::from(b);
        if *n == b {
            return true;
        }
        if (n % &b).is_zero() {
            return false;
        }
    }
    let n_minus_1 = n - 1u32;
    let mut d = n_minus_1.clone();
    let mut s = 0;
    while d.is_even() {
        d >>= 1;
        s += 1;
    }
    'bases: for b in BASES {
        let mut x = BigInt::from(b).modpow(&d, n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n_minus_1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// Dense polynomials over `F_p`, lowest degree first, entries in `[0, p)`,
/// no trailing zeros.
struct Fp {
    p: BigInt,
}

type ModPoly = Vec<BigInt>;

impl Fp {
    fn new(p: BigInt) -> Self {
        Self { p }
    }

    fn reduce_scalar(&self, c: &BigInt) -> BigInt {
        c.mod_floor(&self.p)
    }

    fn reduce(&self, f: &[BigInt]) -> ModPoly {
        trim(f.iter().map(|c| self.reduce_scalar(c)).collect())
    }

    fn symmetric(&self, f: &[BigInt]) -> Vec<BigInt> {
        let half = &self.p >> 1;
        f.iter()
            .map(|c| if *c > half { c - &self.p } else { c.clone() })
            .collect()
    }

    fn inv(&self, c: &BigInt) -> BigInt {
        c.modpow(&(&self.p - 2u32), &self.p)
    }

    fn monic(&self, f: &ModPoly) -> ModPoly {
        match f.last() {
            None => Vec::new(),
            Some(lc) if lc.is_one() => f.clone(),
            Some(lc) => {
                let inv = self.inv(lc);
                f.iter().map(|c| c * &inv % &self.p).collect()
            }
        }
    }

    fn sub(&self, a: &ModPoly, b: &ModPoly) -> ModPoly {
        let n = a.len().max(b.len());
        let zero = BigInt::zero();
        trim(
            (0..n)
                .map(|i| (a.get(i).unwrap_or(&zero) - b.get(i).unwrap_or(&zero)).mod_floor(&self.p))
                .collect(),
        )
    }

    fn mul(&self, a: &ModPoly, b: &ModPoly) -> ModPoly {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        self.reduce(&out)
    }

    fn div_rem(&self, a: &ModPoly, b: &ModPoly) -> (ModPoly, ModPoly) {
        assert!(!b.is_empty(), "division by zero polynomial mod p");
        if a.len() < b.len() {
            return (Vec::new(), a.clone());
        }
        let inv = self.inv(b.last().expect("nonempty"));
        let mut rem = a.clone();
        let db = b.len() - 1;
        let mut quot = vec![BigInt::zero(); a.len() - db];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + db] * &inv % &self.p;
            if c.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                rem[k + j] = (&rem[k + j] - &c * y).mod_floor(&self.p);
            }
            quot[k] = c;
        }
        rem.truncate(db);
        (trim(quot), trim(rem))
    }

    fn rem(&self, a: &ModPoly, b: &ModPoly) -> ModPoly {
        self.div_rem(a, b).1
    }

    fn gcd(&self, a: &ModPoly, b: &ModPoly) -> ModPoly {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_empty() {
            let r = self.rem(&a, &b);
            a = std::mem::replace(&mut b, r);
        }
        self.monic(&a)
    }

    fn derivative(&self, f: &ModPoly) -> ModPoly {
        self.reduce(
            &f.iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect::<Vec<_>>(),
        )
    }

    fn pow_mod(&self, base: &ModPoly, exp: &BigInt, modulus: &ModPoly) -> ModPoly {
        let mut result = vec![BigInt::one()];
        let mut base = self.rem(base, modulus);
        let bits = exp.bits();
        for i in 0..bits {
            if exp.bit(i) {
                result = self.rem(&self.mul(&result, &base), modulus);
            }
            if i + 1 < bits {
                base = self.rem(&self.mul(&base, &base), modulus);
            }
        }
        result
    }

    /// Monic irreducible factors of a monic squarefree polynomial.
    fn factor(&self, f: &ModPoly) -> Vec<ModPoly> {
        let x: ModPoly = vec![BigInt::zero(), BigInt::one()];
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        let mut f = f.clone();
        let mut out = Vec::new();
        let mut h = self.rem(&x, &f);
        let mut d = 1;
        while f.len() > 2 * d {
            h = self.pow_mod(&h, &self.p, &f);
            let g = self.gcd(&self.sub(&h, &x), &f);
            if g.len() > 1 {
                self.split_equal_degree(&g, d, &mut rng, &mut out);
                f = self.div_rem(&f, &g).0;
                h = self.rem(&h, &f);
            }
            d += 1;
        }
        if f.len() > 1 {
            out.push(f);
        }
        out
    }

    fn split_equal_degree(
        &self,
        g: &ModPoly,
        d: usize,
        rng: &mut ChaCha8Rng,
        out: &mut Vec<ModPoly>,
    ) {
        if g.len() - 1 == d {
            out.push(g.clone());
            return;
        }
        let exponent = (self.p.pow(d as u32) - 1u32) >> 1;
        let one: ModPoly = vec![BigInt::one()];
        loop {
            let a = self.random_poly(g.len() - 1, rng);
            if a.len() < 2 {
                continue;
            }
            let b = self.sub(&self.pow_mod(&a, &exponent, g), &one);
            let c = self.gcd(&b, g);
            if c.len() > 1 && c.len() < g.len() {
                let rest = self.div_rem(g, &c).0;
                self.split_equal_degree(&c, d, rng, out);
                self.split_equal_degree(&self.monic(&rest), d, rng, out);
                return;
            }
        }
    }

    fn random_poly(&self, len: usize, rng: &mut ChaCha8Rng) -> ModPoly {
        let words = (self.p.bits() / 32 + 2) as usize;
        let coeffs = (0..len)
            .map(|_| {
                let digits: Vec<u32> = (0..words).map(|_| rng.next_u32()).collect();
                BigInt::from_slice(num_bigint::Sign::Plus, &digits) % &self.p
            })
            .collect();
        trim(coeffs)
    }
}

fn trim(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    fn reconstruct(factors: &[(Polynomial, usize)]) -> Polynomial {
        factors
            .iter()
            .fold(Polynomial::one(), |acc, (f, m)| &acc * &f.pow(*m))
    }

    #[test]
    fn squarefree_examples() {
        // (t-1)^2 (t+1)
        let f = &p(&[-1, 1]).pow(2) * &p(&[1, 1]);
        assert_eq!(squarefree_part(&f).unwrap(), p(&[-1, 0, 1]));
        let g = p(&[-1, 2, 1]);
        assert_eq!(squarefree_part(&g).unwrap(), g);
        assert!(squarefree_part(&Polynomial::zero()).is_err());
    }

    #[test]
    fn yun_multiplicities() {
        // (t-1)^3 (t+2)^2 (t^2+1)
        let f = &(&p(&[-1, 1]).pow(3) * &p(&[2, 1]).pow(2)) * &p(&[1, 0, 1]);
        let dec = squarefree_decomposition(&f.scale(&Rational::from_integer(7.into()))).unwrap();
        assert_eq!(
            dec,
            vec![(p(&[1, 0, 1]), 1), (p(&[2, 1]), 2), (p(&[-1, 1]), 3)]
        );
    }

    #[test]
    fn factor_examples() {
        assert_eq!(
            irreducible_factors(&p(&[-1, 2, 1])).unwrap(),
            vec![(p(&[-1, 2, 1]), 1)]
        );
        assert_eq!(
            irreducible_factors(&p(&[-5, 1])).unwrap(),
            vec![(p(&[-5, 1]), 1)]
        );
        // (t-2)^2 (t^2-4t+2) expanded: t^4 - 8t^3 + 22t^2 - 24t + 8
        let chi = p(&[8, -24, 22, -8, 1]);
        assert_eq!(
            irreducible_factors(&chi).unwrap(),
            vec![(p(&[-2, 1]), 2), (p(&[2, -4, 1]), 1)]
        );
    }

    #[test]
    fn factors_swinnerton_dyer_like_cases() {
        // t^4 + 1 splits modulo every prime but is irreducible over Q.
        assert_eq!(irreducible_factors(&p(&[1, 0, 0, 0, 1])).unwrap().len(), 1);
        // (t^2 - 2)(t^2 - 3)(t^2 + t + 1)(t - 7)
        let f = &(&(&p(&[-2, 0, 1]) * &p(&[-3, 0, 1])) * &p(&[1, 1, 1])) * &p(&[-7, 1]);
        let factors = irreducible_factors(&f).unwrap();
        assert_eq!(factors.len(), 4);
        assert_eq!(reconstruct(&factors), f);
    }

    #[test]
    fn rational_coefficients_and_zero_root() {
        let f = Polynomial::new(vec![
            Rational::from_integer(0.into()),
            Rational::new((-1).into(), 3.into()),
            Rational::from_integer(0.into()),
            Rational::new(1.into(), 3.into()),
        ]);
        // t (t^2 - 1) / 3
        let factors = irreducible_factors(&f).unwrap();
        assert_eq!(
            factors,
            vec![(p(&[-1, 1]), 1), (p(&[0, 1]), 1), (p(&[1, 1]), 1)]
        );
    }

    #[test]
    fn miller_rabin() {
        assert!(is_probable_prime(&BigInt::from(1_000_000_007u64)));
        assert!(!is_probable_prime(&BigInt::from(1_000_000_007u64 * 3)));
        assert!(is_probable_prime(&((BigInt::one() << 127) - 1u32)));
    }

    #[test]
    fn combinations_enumerate_all() {
        assert_eq!(Combinations::new(4, 2).count(), 6);
        assert_eq!(Combinations::new(3, 3).count(), 1);
        assert_eq!(Combinations::new(2, 3).count(), 0);
    }
}
