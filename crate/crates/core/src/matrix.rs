//! Dense exact matrices: fraction-free determinants over the integers and
//! Gauss-Jordan inversion over the rationals.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Row-major matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type IntMatrix = Matrix<BigInt>;
pub type RatMatrix = Matrix<BigRational>;

impl<T: Clone> Matrix<T> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|row| row.len() != c) {
            return Err(Error::ShapeMismatch {
                left: (r, c),
                right: (1, bad.len()),
            });
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
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

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn map<U: Clone>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

impl<T: Clone + Zero + One> Matrix<T> {
    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }
}

impl<T> Matrix<T>
where
    T: Clone + Zero + for<'a> core::ops::AddAssign<&'a T>,
    for<'a> &'a T: core::ops::Mul<&'a T, Output = T>,
{
    pub fn mul(&self, rhs: &Matrix<T>) -> Result<Matrix<T>> {
        if self.cols != rhs.rows {
            return Err(Error::ShapeMismatch {
                left: (self.rows, self.cols),
                right: (rhs.rows, rhs.cols),
            });
        }
        let mut out = vec![T::zero(); self.rows * rhs.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    out[i * rhs.cols + j] += &(a * &rhs[(k, j)]);
                }
            }
        }
        Ok(Matrix {
            rows: self.rows,
            cols: rhs.cols,
            data: out,
        })
    }
}

impl IntMatrix {
    pub fn to_rational(&self) -> RatMatrix {
        self.map(|x| BigRational::from_integer(x.clone()))
    }
}

/// Determinant by Bareiss fraction-free elimination. The empty matrix has
/// determinant 1.
pub fn det_exact(m: &IntMatrix) -> Result<BigInt> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    let n = m.rows;
    let mut a = m.to_rows();
    let mut sign = false;
    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return Ok(BigInt::zero());
        };
        if p != k {
            a.swap(p, k);
            sign = !sign;
        }
        let (top, rest) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        for row in rest.iter_mut() {
            for j in k + 1..n {
                let v = &pivot_row[k] * &row[j] - &row[k] * &pivot_row[j];
                row[j] = v / &prev;
            }
            row[k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let det = if n == 0 { BigInt::one() } else { prev };
    Ok(if sign { -det } else { det })
}

/// Exact inverse by Gauss-Jordan elimination with the first nonzero entry
/// in each column as pivot.
pub fn invert_rational(m: &RatMatrix) -> Result<RatMatrix> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    let n = m.rows;
    let mut a = m.to_rows();
    let mut inv = RatMatrix::identity(n).to_rows();
    for col in 0..n {
        let p = (col..n)
            .find(|&i| !a[i][col].is_zero())
            .ok_or(Error::Singular { stage: col })?;
        a.swap(p, col);
        inv.swap(p, col);
        let scale = a[col][col].recip();
        for x in a[col].iter_mut().chain(inv[col].iter_mut()) {
            *x *= &scale;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for j in 0..n {
                let t = &f * &a[col][j];
                a[r][j] -= t;
                let t = &f * &inv[col][j];
                inv[r][j] -= t;
            }
        }
    }
    Matrix::from_rows(inv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn im(rows: &[&[i64]]) -> IntMatrix {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
        .unwrap()
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn det_examples() {
        assert_eq!(
            det_exact(&im(&[&[9, 3], &[3, 3]])).unwrap(),
            BigInt::from(18)
        );
        assert_eq!(det_exact(&IntMatrix::identity(5)).unwrap(), BigInt::one());
        assert_eq!(det_exact(&IntMatrix::identity(0)).unwrap(), BigInt::one());
        assert_eq!(
            det_exact(&im(&[&[0, 1], &[1, 0]])).unwrap(),
            BigInt::from(-1)
        );
        assert!(matches!(
            det_exact(&im(&[&[1, 2]])),
            Err(Error::NotSquare { .. })
        ));
    }

    #[test]
    fn inverse_examples() {
        let inv = invert_rational(&im(&[&[9, 3], &[3, 3]]).to_rational()).unwrap();
        assert_eq!(
            inv.to_rows(),
            vec![vec![q(1, 6), q(-1, 6)], vec![q(-1, 6), q(1, 2)]]
        );
        let id = RatMatrix::identity(3);
        assert_eq!(invert_rational(&id).unwrap(), id);
        assert_eq!(
            invert_rational(&im(&[&[1, 1], &[1, 1]]).to_rational()),
            Err(Error::Singular { stage: 1 })
        );
    }

    fn cofactor_det(a: &[Vec<i64>]) -> i64 {
        let n = a.len();
        if n == 0 {
            return 1;
        }
        (0..n)
            .map(|j| {
                let minor: Vec<Vec<i64>> = a[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(c, _)| c != j)
                            .map(|(_, &x)| x)
                            .collect()
                    })
                    .collect();
                let s = if j % 2 == 0 { 1 } else { -1 };
                s * a[0][j] * cofactor_det(&minor)
            })
            .sum()
    }

    fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
        (0usize..=4).prop_flat_map(|n| {
            proptest::collection::vec(proptest::collection::vec(-9i64..=9, n), n)
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(10_000))]

        #[test]
        fn bareiss_matches_cofactor_expansion(a in small_matrix()) {
            let m = Matrix::from_fn(a.len(), a.len(), |i, j| BigInt::from(a[i][j]));
            prop_assert_eq!(det_exact(&m).unwrap(), BigInt::from(cofactor_det(&a)));
        }
    }

    proptest! {
        #[test]
        fn inverse_is_two_sided(a in small_matrix()) {
            let m = Matrix::from_fn(a.len(), a.len(), |i, j| BigRational::from_integer(a[i][j].into()));
            if let Ok(inv) = invert_rational(&m) {
                let n = a.len();
                prop_assert_eq!(inv.mul(&m).unwrap(), RatMatrix::identity(n));
                prop_assert_eq!(m.mul(&inv).unwrap(), RatMatrix::identity(n));
            }
        }
    }
}
