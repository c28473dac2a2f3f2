//! Dense exact linear algebra on small rational matrices.

use super::{RatVector, Rational};
use crate::error::{Error, Result};

pub type RatMatrix = Vec<Vec<Rational>>;

pub fn identity(n: usize) -> RatMatrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        Rational::one()
                    } else {
                        Rational::zero()
                    }
                })
                .collect()
        })
        .collect()
}

pub fn from_ints(m: &[Vec<i64>]) -> RatMatrix {
    m.iter()
        .map(|row| row.iter().map(|&x| Rational::from_int(x)).collect())
        .collect()
}

pub fn mat_mul(a: &[Vec<Rational>], b: &[Vec<Rational>]) -> RatMatrix {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).fold(Rational::zero(), |acc, k| acc + &row[k] * &b[k][j]))
                .collect()
        })
        .collect()
}

pub fn mat_vec(a: &[Vec<Rational>], v: &RatVector) -> RatVector {
    RatVector(
        a.iter()
            .map(|row| {
                row.iter()
                    .zip(v.entries())
                    .fold(Rational::zero(), |acc, (x, y)| acc + x * y)
            })
            .collect(),
    )
}

/// Gauss-Jordan inversion with exact pivoting.
pub fn invert_matrix(m: &[Vec<Rational>]) -> Result<RatMatrix> {
    let n = m.len();
    if let Some(row) = m.iter().find(|r| r.len() != n) {
        return Err(Error::NotSquare {
            rows: n,
            cols: row.len(),
        });
    }
    let mut a: RatMatrix = m.to_vec();
    let mut inv = identity(n);
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .ok_or(Error::Singular)?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].recip()?;
        for j in 0..n {
            a[col][j] = &a[col][j] * &p;
            inv[col][j] = &inv[col][j] * &p;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for j in 0..n {
                let t = &f * &a[col][j];
                a[r][j] -= &t;
                let t = &f * &inv[col][j];
                inv[r][j] -= &t;
            }
        }
    }
    Ok(inv)
}

/// Exact determinant of an integer matrix (fraction-free Bareiss elimination).
pub fn int_determinant(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a: Vec<Vec<i128>> = m
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&r| a[r][k] != 0) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    (sign * a[n - 1][n - 1]) as i64
}
