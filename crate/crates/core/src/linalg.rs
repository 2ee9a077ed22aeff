//! Dense exact matrices with fraction-free row reduction.
//!
//! Rows are scaled to primitive integer vectors before elimination; each
//! combination step `p·r_j − a·r_i` is followed by division by the row content,
//! which keeps entries small without ever leaving the integers. Pivots are the
//! first nonzero entry by row order.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    /// Builds a matrix with `rows` rows from column vectors.
    pub fn from_columns(rows: usize, columns: &[Vec<Rational>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix shape mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j) + a * b;
                        out.set(i, j, v);
                    }
                }
            }
        }
        out
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn augment(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows, "row count mismatch");
        let rows = (0..self.rows).map(|i| self.row(i).iter().chain(other.row(i)).cloned().collect()).collect();
        let mut m = Matrix::from_rows(rows);
        m.cols = self.cols + other.cols;
        m
    }

    /// Reduced row-echelon form and pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let (rows, pivots) = integer_rref(self);
        let mut out = Matrix::zeros(self.rows, self.cols);
        for (i, (row, &p)) in rows.iter().zip(&pivots).enumerate() {
            let lead = row[p].clone();
            for (j, v) in row.iter().enumerate() {
                if !v.is_zero() {
                    out.set(i, j, Rational::new(v.clone(), lead.clone()));
                }
            }
        }
        (out, pivots)
    }

    pub fn rank(&self) -> usize {
        integer_rref(self).1.len()
    }

    /// Basis of `{v : Av = 0}`, normalised so that the basis vectors, stacked as rows,
    /// are in reduced row-echelon form with unit leading coefficients.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|j| !pivots.contains(j)).collect();
        let raw: Vec<Vec<Rational>> = free
            .iter()
            .map(|&f| {
                let mut v = vec![Rational::zero(); self.cols];
                v[f] = Rational::one();
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = -r.get(i, f);
                }
                v
            })
            .collect();
        if raw.is_empty() {
            return raw;
        }
        let (canon, piv) = Matrix::from_rows(raw).rref();
        (0..piv.len()).map(|i| canon.row(i).to_vec()).collect()
    }

    /// One solution of `Ax = b` (free variables set to zero), or `None` if inconsistent.
    pub fn solve(&self, b: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(b.len(), self.rows, "right-hand side length mismatch");
        let rhs = Matrix::from_columns(self.rows, &[b.to_vec()]);
        let (r, pivots) = self.augment(&rhs).rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![Rational::zero(); self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = r.get(i, self.cols).clone();
        }
        Some(x)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

fn primitive(row: &mut [BigInt]) {
    let g = row.iter().fold(BigInt::zero(), |g, v| g.gcd(v));
    if !g.is_zero() && !g.is_one() {
        for v in row.iter_mut() {
            *v /= &g;
        }
    }
}

fn integer_row(row: &[Rational]) -> Vec<BigInt> {
    let l = row.iter().fold(BigInt::one(), |l, v| l.lcm(v.denom()));
    let mut out: Vec<BigInt> = row.iter().map(|v| v.numer() * (&l / v.denom())).collect();
    primitive(&mut out);
    out
}

/// Fully reduced integer echelon form: every pivot column is zero outside its pivot row.
/// Returns the nonzero rows (in pivot order) and their pivot columns.
fn integer_rref(m: &Matrix) -> (Vec<Vec<BigInt>>, Vec<usize>) {
    let mut rows: Vec<Vec<BigInt>> = (0..m.rows).map(|i| integer_row(m.row(i))).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..m.cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        if rows[r][c].is_negative() {
            for v in rows[r].iter_mut() {
                *v = -&*v;
            }
        }
        let (head, tail) = rows.split_at_mut(r + 1);
        let pivot_row = &head[r];
        let lead = &pivot_row[c];
        let reduce = |row: &mut Vec<BigInt>| {
            let a = row[c].clone();
            if a.is_zero() {
                return;
            }
            let g = lead.gcd(&a);
            let (pl, pa) = (lead / &g, &a / &g);
            for (v, w) in row.iter_mut().zip(pivot_row) {
                *v = &*v * &pl - w * &pa;
            }
            primitive(row);
        };
        tail.iter_mut().for_each(reduce);
        let (above, rest) = rows.split_at_mut(r);
        let pivot_row = &rest[0];
        let lead = &pivot_row[c];
        for row in above.iter_mut() {
            let a = row[c].clone();
            if a.is_zero() {
                continue;
            }
            let g = lead.gcd(&a);
            let (pl, pa) = (lead / &g, &a / &g);
            for (v, w) in row.iter_mut().zip(pivot_row) {
                *v = &*v * &pl - w * &pa;
            }
            primitive(row);
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    (rows, pivots)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect())
    }

    #[test]
    fn rank_and_nullspace() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(a.rank(), 2);
        let ns = a.nullspace();
        assert_eq!(ns.len(), 1);
        assert!(a.mul_vec(&ns[0]).iter().all(Zero::is_zero));
        assert_eq!(ns[0], vec![int(1), int(1), int(-1)]);
    }

    #[test]
    fn rref_has_unit_pivots() {
        let a = Matrix::from_rows(vec![vec![rat(1, 2), rat(1, 3)], vec![int(3), int(2)], vec![int(0), int(5)]]);
        let (r, p) = a.rref();
        assert_eq!(p, vec![0, 1]);
        assert_eq!(r.row(0), &[int(1), int(0)]);
        assert_eq!(r.row(1), &[int(0), int(1)]);
        assert_eq!(a.rank(), 2);
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let a = m(&[&[1, 1], &[1, -1]]);
        assert_eq!(a.solve(&[int(3), int(1)]), Some(vec![int(2), int(1)]));
        let b = m(&[&[1, 1], &[2, 2]]);
        assert_eq!(b.solve(&[int(1), int(3)]), None);
        let x = b.solve(&[int(1), int(2)]).unwrap();
        assert_eq!(b.mul_vec(&x), vec![int(1), int(2)]);
    }

    #[test]
    fn identity_and_product() {
        let a = m(&[&[1, 2], &[3, 4]]);
        assert_eq!(Matrix::identity(2).mul(&a), a);
        assert_eq!(a.transpose().transpose(), a);
        assert!(Matrix::identity(3).nullspace().is_empty());
        assert_eq!(Matrix::zeros(2, 3).nullspace().len(), 3);
    }
}
