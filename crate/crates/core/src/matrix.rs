//! Dense matrices over an exact [`Field`] and the Gauss–Jordan machinery
//! built on them.

use std::fmt;

use crate::arith::{Field, Rational};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

pub type QMatrix = Matrix<Rational>;

impl<E: Clone> Matrix<E> {
    /// Row-major construction. Panics if `data.len() != rows * cols`.
    pub fn new(rows: usize, cols: usize, data: Vec<E>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data length");
        Self { rows, cols, data }
    }

    /// All rows must have one common length.
    pub fn from_rows(rows: Vec<Vec<E>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        for r in &rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
        }
        let n = rows.len();
        Ok(Self::new(n, cols, rows.into_iter().flatten().collect()))
    }

    pub fn filled(rows: usize, cols: usize, value: E) -> Self {
        Self::new(rows, cols, vec![value; rows * cols])
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: E) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[E] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<E>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn map<F, G: FnMut(&E) -> F>(&self, f: G) -> Matrix<F> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        Self::new(self.cols, self.rows, data)
    }

    /// Appends `row` at the bottom.
    pub fn push_row(&mut self, row: &[E]) -> Result<()> {
        if self.rows > 0 && row.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: row.len(),
            });
        }
        if self.rows == 0 {
            self.cols = row.len();
        }
        self.data.extend_from_slice(row);
        self.rows += 1;
        Ok(())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl QMatrix {
    pub fn from_ints(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| {
                    r.iter()
                        .map(|&x| Rational::from_integer(x.into()))
                        .collect()
                })
                .collect(),
        )
    }
}

impl<E: fmt::Display> fmt::Display for Matrix<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let cells: Vec<String> = (0..self.cols)
                .map(|j| self.data[i * self.cols + j].to_string())
                .collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

impl<E: fmt::Debug> fmt::Debug for Matrix<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<&[E]> = self.data.chunks(self.cols.max(1)).collect();
        f.debug_struct("Matrix")
            .field("rows", &self.rows)
            .field("cols", &self.cols)
            .field("data", &rows)
            .finish()
    }
}

pub fn identity<F: Field>(field: &F, n: usize) -> Matrix<F::Elem> {
    let mut m = Matrix::filled(n, n, field.zero());
    for i in 0..n {
        m.set(i, i, field.one());
    }
    m
}

/// Lifts a rational matrix into `field`.
pub fn embed<F: Field>(field: &F, m: &QMatrix) -> Matrix<F::Elem> {
    m.map(|x| field.from_rational(x))
}

pub fn mul<F: Field>(
    field: &F,
    a: &Matrix<F::Elem>,
    b: &Matrix<F::Elem>,
) -> Result<Matrix<F::Elem>> {
    if a.cols != b.rows {
        return Err(Error::DimensionMismatch {
            expected: a.cols,
            found: b.rows,
        });
    }
    let mut data = Vec::with_capacity(a.rows * b.cols);
    for i in 0..a.rows {
        for j in 0..b.cols {
            let mut acc = field.zero();
            for k in 0..a.cols {
                let x = a.get(i, k);
                if field.is_zero(x) {
                    continue;
                }
                acc = field.add(&acc, &field.mul(x, b.get(k, j)));
            }
            data.push(acc);
        }
    }
    Ok(Matrix::new(a.rows, b.cols, data))
}

pub fn mul_vec<F: Field>(field: &F, a: &Matrix<F::Elem>, v: &[F::Elem]) -> Result<Vec<F::Elem>> {
    if a.cols != v.len() {
        return Err(Error::DimensionMismatch {
            expected: a.cols,
            found: v.len(),
        });
    }
    Ok((0..a.rows).map(|i| dot(field, a.row(i), v)).collect())
}

/// Inner product of equal-length slices.
pub fn dot<F: Field>(field: &F, a: &[F::Elem], b: &[F::Elem]) -> F::Elem {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).fold(field.zero(), |acc, (x, y)| {
        field.add(&acc, &field.mul(x, y))
    })
}

/// `m^k` by `k - 1` successive multiplications (`k = 0` gives the identity).
pub fn pow<F: Field>(field: &F, m: &Matrix<F::Elem>, k: usize) -> Result<Matrix<F::Elem>> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch {
            expected: m.rows,
            found: m.cols,
        });
    }
    if k == 0 {
        return Ok(identity(field, m.rows));
    }
    let mut acc = m.clone();
    for _ in 1..k {
        acc = mul(field, &acc, m)?;
    }
    Ok(acc)
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Debug, Clone, PartialEq)]
pub struct Echelon<E> {
    pub matrix: Matrix<E>,
    pub pivots: Vec<usize>,
}

impl<E: Clone> Echelon<E> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// The nonzero rows, i.e. a basis of the row space.
    pub fn basis(&self) -> Matrix<E> {
        let cols = self.matrix.cols;
        let data = self.matrix.data[..self.rank() * cols].to_vec();
        Matrix::new(self.rank(), cols, data)
    }
}

/// Gauss–Jordan elimination. The pivot in each column is the first row at
/// or below the current one holding a nonzero entry; pivots are scaled to 1
/// and cleared above and below, zero rows end up last.
pub fn rref_with_pivots<F: Field>(field: &F, m: &Matrix<F::Elem>) -> Echelon<F::Elem> {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..a.cols {
        if row == a.rows {
            break;
        }
        let Some(p) = (row..a.rows).find(|&i| !field.is_zero(a.get(i, col))) else {
            continue;
        };
        a.swap_rows(row, p);
        let inv = field.inv(a.get(row, col)).expect("pivot is nonzero");
        for j in col..a.cols {
            let v = field.mul(a.get(row, j), &inv);
            a.set(row, j, v);
        }
        for i in 0..a.rows {
            if i == row {
                continue;
            }
            let factor = a.get(i, col).clone();
            if field.is_zero(&factor) {
                continue;
            }
            for j in col..a.cols {
                let v = field.sub(a.get(i, j), &field.mul(&factor, a.get(row, j)));
                a.set(i, j, v);
            }
        }
        pivots.push(col);
        row += 1;
    }
    Echelon { matrix: a, pivots }
}

pub fn rref<F: Field>(field: &F, m: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    rref_with_pivots(field, m).matrix
}

pub fn rank<F: Field>(field: &F, m: &Matrix<F::Elem>) -> usize {
    rref_with_pivots(field, m).rank()
}

/// Basis of `{x : m x = 0}` read off the reduced echelon form: one vector per
/// free column, with a 1 in that column.
pub fn nullspace_basis<F: Field>(field: &F, m: &Matrix<F::Elem>) -> Vec<Vec<F::Elem>> {
    let ech = rref_with_pivots(field, m);
    let free: Vec<usize> = (0..m.cols).filter(|c| !ech.pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![field.zero(); m.cols];
            v[fc] = field.one();
            for (r, &pc) in ech.pivots.iter().enumerate() {
                v[pc] = field.neg(ech.matrix.get(r, fc));
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, Rationals};

    #[test]
    fn rref_basics() {
        let q = Rationals;
        let id = identity(&q, 3);
        assert_eq!(rref(&q, &id), id);
        let m = QMatrix::from_ints(&[&[0, 2, 4], &[1, 1, 1], &[2, 4, 6]]).unwrap();
        let e = rref_with_pivots(&q, &m);
        assert_eq!(e.pivots, vec![0, 1]);
        assert_eq!(
            e.matrix,
            QMatrix::from_ints(&[&[1, 0, -1], &[0, 1, 2], &[0, 0, 0]]).unwrap()
        );
        assert_eq!(rref(&q, &e.matrix), e.matrix);
    }

    #[test]
    fn nullspace_examples() {
        let q = Rationals;
        let zero = Matrix::filled(3, 3, rat(0));
        assert_eq!(nullspace_basis(&q, &zero).len(), 3);
        assert!(nullspace_basis(&q, &identity(&q, 3)).is_empty());
        let m = QMatrix::from_ints(&[&[1, 2, 3], &[2, 4, 6]]).unwrap();
        for v in nullspace_basis(&q, &m) {
            assert!(mul_vec(&q, &m, &v).unwrap().iter().all(|x| *x == rat(0)));
        }
    }

    #[test]
    fn shape_errors() {
        let q = Rationals;
        let a = QMatrix::from_ints(&[&[1, 2]]).unwrap();
        assert!(mul(&q, &a, &a).is_err());
        assert!(mul_vec(&q, &a, &[rat(1)]).is_err());
        assert!(QMatrix::from_rows(vec![vec![rat(1)], vec![]]).is_err());
    }
}
