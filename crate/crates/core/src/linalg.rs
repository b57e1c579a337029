//! Dense row-major matrices and a direct solver with row partial
//! pivoting. The collocation systems are fully dense, so no structure
//! is exploited.

use crate::error::Error;
use crate::{cast, Real};

/// Dense row-major matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Real> DenseMatrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        DenseMatrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, T::one());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> T {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn add_to(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = self.data[i * self.cols + j] + v;
    }

    /// First non-finite entry, if any, in row-major order.
    pub fn first_non_finite(&self) -> Option<(usize, usize)> {
        self.data
            .iter()
            .position(|v| !v.is_finite())
            .map(|k| (k / self.cols, k % self.cols))
    }

    pub fn matvec(&self, x: &[T]) -> Vec<T> {
        assert_eq!(x.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = T::zero();
                for j in 0..self.cols {
                    acc = acc + self.get(i, j) * x[j];
                }
                acc
            })
            .collect()
    }

    /// Maximum absolute row sum.
    pub fn inf_norm(&self) -> T {
        (0..self.rows)
            .map(|i| {
                let mut acc = T::zero();
                for j in 0..self.cols {
                    acc = acc + self.get(i, j).abs();
                }
                acc
            })
            .fold(T::zero(), |m, v| if v > m { v } else { m })
    }
}

/// Maximum absolute entry of a vector.
pub fn inf_norm_vec<T: Real>(x: &[T]) -> T {
    x.iter()
        .fold(T::zero(), |m, v| if v.abs() > m { v.abs() } else { m })
}

/// Solve `A x = b` by LU factorization with row partial pivoting
/// (largest-magnitude pivot in each column).
pub fn solve_dense<T: Real>(a: &DenseMatrix<T>, b: &[T]) -> Result<Vec<T>, Error> {
    assert_eq!(a.rows, a.cols, "matrix must be square");
    assert_eq!(b.len(), a.rows, "rhs length must match");
    let n = a.rows;
    let mut lu = a.data.clone();
    let mut x: Vec<T> = b.to_vec();

    let tiny = {
        let t = cast::<T>(1e-300);
        if t > T::zero() {
            t
        } else {
            T::min_positive_value()
        }
    };

    for col in 0..n {
        // pivot: largest magnitude in the column, first index on ties
        let mut piv = col;
        let mut piv_abs = lu[col * n + col].abs();
        for r in col + 1..n {
            let v = lu[r * n + col].abs();
            if v > piv_abs {
                piv = r;
                piv_abs = v;
            }
        }
        if piv_abs < tiny {
            return Err(Error::Singular {
                col,
                pivot: piv_abs.as_f64(),
                context: String::new(),
            });
        }
        if piv != col {
            for j in 0..n {
                lu.swap(col * n + j, piv * n + j);
            }
            x.swap(col, piv);
        }
        let d = lu[col * n + col];
        for r in col + 1..n {
            let factor = lu[r * n + col] / d;
            if factor == T::zero() {
                continue;
            }
            lu[r * n + col] = factor;
            for j in col + 1..n {
                lu[r * n + j] = lu[r * n + j] - factor * lu[col * n + j];
            }
            x[r] = x[r] - factor * x[col];
        }
    }

    // back substitution
    for i in (0..n).rev() {
        let mut acc = x[i];
        for j in i + 1..n {
            acc = acc - lu[i * n + j] * x[j];
        }
        x[i] = acc / lu[i * n + i];
    }
    Ok(x)
}
