//! Exact integer determinants (Bareiss fraction-free elimination).

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// Determinant of a square integer matrix, exact.
pub fn determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::from(1);
    }
    debug_assert!(m.iter().all(|r| r.len() == n));
    let mut sign = 1i64;
    let mut prev = BigInt::from(1);
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// |det|, convenience for torsion orders.
pub fn abs_determinant(m: Vec<Vec<BigInt>>) -> BigInt {
    determinant(m).abs()
}
