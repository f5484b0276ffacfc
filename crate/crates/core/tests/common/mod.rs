//! Independent oracles shared by the integration and acceptance tests. None of
//! these reuse the library's elimination, determinant or factoring code.

#![allow(dead_code)]

use linloop::arith::{rat, Field};
use linloop::matrix::{Matrix, QMatrix};
use linloop::{Polynomial, Rational};
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// `det(tI − A)` by cofactor expansion along the first row.
pub fn cofactor_char_poly(a: &QMatrix) -> Polynomial {
    let n = a.rows();
    let m: Vec<Vec<Polynomial>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let entry = Polynomial::constant(-a.get(i, j).clone());
                    if i == j {
                        &entry + &Polynomial::t()
                    } else {
                        entry
                    }
                })
                .collect()
        })
        .collect();
    laplace(&m)
}

fn laplace(m: &[Vec<Polynomial>]) -> Polynomial {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = Polynomial::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Polynomial>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(k, _)| *k != j)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        let term = &m[0][j] * &laplace(&minor);
        acc = if j % 2 == 0 {
            &acc + &term
        } else {
            &acc - &term
        };
    }
    acc
}

/// Solves `yᵀ M = v` by forward elimination on the transposed system and
/// back substitution. `None` when inconsistent.
pub fn solve_left<F: Field>(field: &F, m: &Matrix<F::Elem>, v: &[F::Elem]) -> Option<Vec<F::Elem>> {
    let (rows, cols) = (m.rows(), m.cols());
    // Unknowns y_0..y_{rows-1}; one equation per column of m.
    let mut eqs: Vec<Vec<F::Elem>> = (0..cols)
        .map(|j| {
            let mut e: Vec<F::Elem> = (0..rows).map(|i| m.get(i, j).clone()).collect();
            e.push(v[j].clone());
            e
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in (0..rows).rev() {
        // eliminate right-to-left so the pivot order differs from rref's
        let Some(p) = (r..eqs.len()).find(|&k| !field.is_zero(&eqs[k][c])) else {
            continue;
        };
        eqs.swap(r, p);
        let inv = field.inv(&eqs[r][c]).expect("nonzero pivot");
        for k in r + 1..eqs.len() {
            if field.is_zero(&eqs[k][c]) {
                continue;
            }
            let factor = field.mul(&eqs[k][c], &inv);
            for t in 0..=rows {
                let sub = field.mul(&factor, &eqs[r][t]);
                eqs[k][t] = field.sub(&eqs[k][t], &sub);
            }
        }
        pivots.push(c);
        r += 1;
    }
    if eqs[r..].iter().any(|e| !field.is_zero(&e[rows])) {
        return None;
    }
    let mut y = vec![field.zero(); rows];
    for (k, &c) in pivots.iter().enumerate().rev() {
        let mut rhs = eqs[k][rows].clone();
        for t in 0..rows {
            if t != c && !field.is_zero(&eqs[k][t]) {
                rhs = field.sub(&rhs, &field.mul(&eqs[k][t], &y[t]));
            }
        }
        y[c] = field.mul(&rhs, &field.inv(&eqs[k][c]).expect("nonzero pivot"));
    }
    Some(y)
}

/// `yᵀ M`.
pub fn left_mul<F: Field>(field: &F, y: &[F::Elem], m: &Matrix<F::Elem>) -> Vec<F::Elem> {
    (0..m.cols())
        .map(|j| {
            (0..m.rows()).fold(field.zero(), |acc, i| {
                field.add(&acc, &field.mul(&y[i], m.get(i, j)))
            })
        })
        .collect()
}

/// Rational roots of an integer-coefficient polynomial by the rational root
/// theorem.
pub fn rational_roots(p: &Polynomial) -> Vec<Rational> {
    let c = p.primitive_integer_coeffs();
    if c.iter().all(Zero::is_zero) {
        return Vec::new();
    }
    let mut roots = Vec::new();
    let first = c.iter().position(|x| !x.is_zero()).unwrap();
    if first > 0 {
        roots.push(rat(0));
    }
    let a0 = c[first].abs();
    let an = c.last().unwrap().abs();
    let divisors = |n: &num_bigint::BigInt| -> Vec<i64> {
        let n: i64 = n.try_into().expect("small coefficients in tests");
        (1..=n).filter(|d| n % d == 0).collect()
    };
    for pnum in divisors(&a0) {
        for q in divisors(&an) {
            for s in [1, -1] {
                let r = Rational::new((s * pnum).into(), q.into());
                if p.eval(&r).is_zero() && !roots.contains(&r) {
                    roots.push(r);
                }
            }
        }
    }
    roots
}

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_int_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize, m: i64) -> QMatrix {
    QMatrix::new(
        rows,
        cols,
        (0..rows * cols)
            .map(|_| rat(rng.gen_range(-m..=m)))
            .collect(),
    )
}

/// Random `rows × cols` rational matrix of rank at most `rank`.
pub fn random_low_rank<R: Rng>(
    rng: &mut R,
    rows: usize,
    cols: usize,
    rank: usize,
    m: i64,
) -> QMatrix {
    let l = random_int_matrix(rng, rows, rank, m);
    let r = random_int_matrix(rng, rank, cols, m);
    linloop::matrix::mul(&linloop::arith::Rationals, &l, &r).unwrap()
}

pub fn is_positive(r: &Rational) -> bool {
    r.is_positive()
}

/// `p(A)` by Horner's rule.
pub fn poly_of_matrix(p: &Polynomial, a: &QMatrix) -> QMatrix {
    let n = a.rows();
    let q = linloop::arith::Rationals;
    let mut acc = QMatrix::filled(n, n, rat(0));
    for c in p.coeffs().iter().rev() {
        acc = linloop::matrix::mul(&q, &acc, a).unwrap();
        for i in 0..n {
            let d = acc.get(i, i) + c;
            acc.set(i, i, d);
        }
    }
    acc
}

/// A guard orthogonal to every generalized eigenspace of a positive
/// eigenvalue: `gᵀ Π m(A)^n` over the minimal polynomials `m` of those
/// eigenvalues. `None` when the product kills `g`.
pub fn orthogonal_guard(
    a: &QMatrix,
    minpolys: &[Polynomial],
    g: &[Rational],
) -> Option<Vec<Rational>> {
    let n = a.rows();
    let mut prod = Polynomial::one();
    for m in minpolys {
        prod = &prod * &m.pow(n);
    }
    let pa = poly_of_matrix(&prod, a);
    let f = left_mul(&linloop::arith::Rationals, g, &pa);
    f.iter().any(|x| !x.is_zero()).then_some(f)
}
