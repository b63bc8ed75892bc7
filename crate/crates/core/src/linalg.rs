//! Dense exact linear algebra over `ℚ`.
//!
//! Square solves and determinants go through fraction-free (Bareiss)
//! elimination: each row is first scaled to integers by the lcm of its
//! denominators, so intermediate entries stay integral and every division
//! is exact.

use std::ops::Mul;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{AlbertError, Result};
use crate::rat::{self, Rat};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![rat::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { rat::one() } else { rat::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(AlbertError::Dimension { expected: c, got: row.len() });
            }
            data.extend(row);
        }
        Ok(Matrix { rows: r, cols: c, data })
    }

    /// Builds a matrix whose `j`-th column is `cols[j]`.
    pub fn from_columns(cols: &[Vec<Rat>]) -> Self {
        let rows = cols.first().map_or(0, Vec::len);
        Matrix::from_fn(rows, cols.len(), |i, j| cols[j][i].clone())
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

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Rat>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, t: &Rat) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| t * x).collect() }
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.cols, "matrix-vector dimension mismatch");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(rat::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    pub fn determinant(&self) -> Rat {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let (scaled, row_scale) = self.clear_denominators(&[]);
        let det = bareiss_determinant(scaled, self.rows);
        Rat::new(det, row_scale.iter().fold(BigInt::one(), |acc, s| acc * s))
    }

    pub fn inverse(&self) -> Result<Matrix> {
        let n = self.rows;
        let id: Vec<Vec<Rat>> = (0..n)
            .map(|j| (0..n).map(|i| if i == j { rat::one() } else { rat::zero() }).collect())
            .collect();
        let cols = solve_columns(self, &id)?;
        Ok(Matrix::from_columns(&cols))
    }

    /// Integer matrix `diag(λ)·[self | rhs columns]`, row-major with
    /// `cols + rhs.len()` entries per row, and the row scales `λ`.
    fn clear_denominators(&self, rhs: &[Vec<Rat>]) -> (Vec<Vec<BigInt>>, Vec<BigInt>) {
        let mut out = Vec::with_capacity(self.rows);
        let mut scales = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let entries: Vec<&Rat> = self.row(i).iter().chain(rhs.iter().map(|c| &c[i])).collect();
            let l = entries.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            out.push(entries.iter().map(|x| x.numer() * (&l / x.denom())).collect());
            scales.push(l);
        }
        (out, scales)
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, o: &Matrix) -> Matrix {
        assert_eq!(self.cols, o.rows, "matrix product dimension mismatch");
        let mut out = Matrix::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.data[idx] = &out.data[idx] + a * b;
                    }
                }
            }
        }
        out
    }
}

/// Fraction-free forward elimination on an `n × (n + extra)` integer
/// matrix. On success the matrix is upper triangular in its first `n`
/// columns and the returned value is the sign of the row permutation.
fn bareiss_forward(m: &mut [Vec<BigInt>], n: usize) -> std::result::Result<i32, usize> {
    let width = m.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut sign = 1;
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !m[r][k].is_zero()) else {
            return Err(k);
        };
        if p != k {
            m.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..width {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    Ok(sign)
}

fn bareiss_determinant(mut m: Vec<Vec<BigInt>>, n: usize) -> BigInt {
    if n == 0 {
        return BigInt::one();
    }
    match bareiss_forward(&mut m, n) {
        Ok(sign) => {
            let d = m[n - 1][n - 1].clone();
            if sign < 0 {
                -d
            } else {
                d
            }
        }
        Err(_) => BigInt::zero(),
    }
}

/// Solves `m · u = b` for every right-hand side column `b` in `rhs`.
pub fn solve_columns(m: &Matrix, rhs: &[Vec<Rat>]) -> Result<Vec<Vec<Rat>>> {
    let n = m.rows;
    if !m.is_square() {
        return Err(AlbertError::Dimension { expected: n, got: m.cols });
    }
    if let Some(bad) = rhs.iter().find(|c| c.len() != n) {
        return Err(AlbertError::Dimension { expected: n, got: bad.len() });
    }
    let (mut a, _) = m.clear_denominators(rhs);
    bareiss_forward(&mut a, n).map_err(|rank| AlbertError::SingularMatrix { rank, size: n })?;
    let mut sols = Vec::with_capacity(rhs.len());
    for c in 0..rhs.len() {
        let col = n + c;
        let mut u = vec![rat::zero(); n];
        for i in (0..n).rev() {
            let mut acc = Rat::from_integer(a[i][col].clone());
            for j in i + 1..n {
                if !a[i][j].is_zero() {
                    acc -= Rat::from_integer(a[i][j].clone()) * &u[j];
                }
            }
            u[i] = acc / Rat::from_integer(a[i][i].clone());
        }
        sols.push(u);
    }
    Ok(sols)
}

/// Exact solution of `m · u = rhs` for square invertible `m`.
pub fn solve_exact(m: &Matrix, rhs: &[Rat]) -> Result<Vec<Rat>> {
    let mut sols = solve_columns(m, &[rhs.to_vec()])?;
    Ok(sols.pop().expect("one column in, one column out"))
}

/// A square system factored once (via its exact inverse) and reused for
/// many right-hand sides.
#[derive(Clone, Debug)]
pub struct ExactSolver {
    inverse: Matrix,
}

impl ExactSolver {
    pub fn new(m: &Matrix) -> Result<Self> {
        Ok(ExactSolver { inverse: m.inverse()? })
    }

    pub fn solve(&self, rhs: &[Rat]) -> Vec<Rat> {
        self.inverse.mul_vec(rhs)
    }

    pub fn inverse(&self) -> &Matrix {
        &self.inverse
    }
}

/// Finds some `u` with `m · u = rhs` for a possibly rectangular, possibly
/// rank-deficient `m`, or `None` if the system is inconsistent. Free
/// variables are set to zero.
pub fn solve_consistent(m: &Matrix, rhs: &[Rat]) -> Option<Vec<Rat>> {
    assert_eq!(rhs.len(), m.rows, "right-hand side length mismatch");
    let (r, c) = (m.rows, m.cols);
    let mut a: Vec<Vec<Rat>> =
        (0..r).map(|i| m.row(i).iter().cloned().chain([rhs[i].clone()]).collect()).collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..c {
        let Some(p) = (row..r).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(p, row);
        let inv = a[row][col].recip();
        for x in a[row].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = a[row].clone();
        for (i, rw) in a.iter_mut().enumerate() {
            if i != row && !rw[col].is_zero() {
                let f = rw[col].clone();
                for (x, p) in rw[col..].iter_mut().zip(&pivot_row[col..]) {
                    *x -= &f * p;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == r {
            break;
        }
    }
    if a[row..].iter().any(|rw| !rw[c].is_zero()) {
        return None;
    }
    let mut u = vec![rat::zero(); c];
    for (i, &col) in pivots.iter().enumerate() {
        u[col] = a[i][c].clone();
    }
    Some(u)
}

/// Largest absolute numerator or denominator, a rough size measure used to
/// keep random test data bounded.
pub fn height(xs: &[Rat]) -> BigInt {
    xs.iter()
        .flat_map(|x| [x.numer().abs(), x.denom().clone()])
        .max()
        .unwrap_or_else(BigInt::zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{frac, int};

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()).unwrap()
    }

    /// Cofactor expansion, independent of the elimination path.
    fn det_cofactor(a: &Matrix) -> Rat {
        let n = a.rows();
        if n == 1 {
            return a.get(0, 0).clone();
        }
        (0..n)
            .map(|j| {
                let minor = Matrix::from_fn(n - 1, n - 1, |r, c| {
                    a.get(r + 1, if c < j { c } else { c + 1 }).clone()
                });
                let s = if j % 2 == 0 { int(1) } else { int(-1) };
                s * a.get(0, j) * det_cofactor(&minor)
            })
            .fold(rat::zero(), |acc, x| acc + x)
    }

    #[test]
    fn identity_solve() {
        let rhs: Vec<Rat> = (0..27).map(|i| frac(i, 7)).collect();
        assert_eq!(solve_exact(&Matrix::identity(27), &rhs).unwrap(), rhs);
    }

    #[test]
    fn singular_matrix_is_reported() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        let err = solve_exact(&a, &[int(1), int(2), int(3)]).unwrap_err();
        assert_eq!(err.kind(), "SingularMatrix");
        assert!(a.inverse().is_err());
        assert!(a.determinant().is_zero());
    }

    #[test]
    fn determinant_matches_cofactor_expansion() {
        let a = Matrix::from_fn(5, 5, |i, j| frac(((i * 7 + j * 3) % 11) as i64 - 5, (1 + (i + j) % 3) as i64));
        assert_eq!(a.determinant(), det_cofactor(&a));
        let p = m(&[&[0, 1], &[1, 0]]);
        assert_eq!(p.determinant(), int(-1));
    }

    #[test]
    fn inverse_and_solver() {
        let a = Matrix::from_fn(6, 6, |i, j| {
            if i == j { int(3) } else { frac((i as i64 - j as i64) % 4, 1 + j as i64) }
        });
        let inv = a.inverse().unwrap();
        assert_eq!(&a * &inv, Matrix::identity(6));
        let rhs: Vec<Rat> = (0..6).map(|i| frac(i * i - 2, 3)).collect();
        let u = solve_exact(&a, &rhs).unwrap();
        assert_eq!(a.mul_vec(&u), rhs);
        assert_eq!(ExactSolver::new(&a).unwrap().solve(&rhs), u);
    }

    #[test]
    fn consistent_rectangular_systems() {
        let a = m(&[&[1, 1], &[2, 2], &[1, -1]]);
        let u = solve_consistent(&a, &[int(3), int(6), int(1)]).unwrap();
        assert_eq!(u, vec![int(2), int(1)]);
        assert!(solve_consistent(&a, &[int(3), int(7), int(1)]).is_none());
        let b = m(&[&[1, 2], &[2, 4]]);
        let v = solve_consistent(&b, &[int(2), int(4)]).unwrap();
        assert_eq!(b.mul_vec(&v), vec![int(2), int(4)]);
    }
}
