//! Independent oracles shared by the integration tests.

#![allow(dead_code)]

use num_bigint::BigInt;
use walkmat::rational::Rational;
use walkmat::ExactMatrix;

/// Laplace expansion along the first row. Exponential, fine up to order ~7.
pub fn cofactor_det(rows: &[Vec<i64>]) -> i128 {
    let n = rows.len();
    if n == 0 {
        return 1;
    }
    if n == 1 {
        return rows[0][0] as i128;
    }
    let mut total = 0i128;
    for c in 0..n {
        if rows[0][c] == 0 {
            continue;
        }
        let minor: Vec<Vec<i64>> = rows[1..]
            .iter()
            .map(|r| r.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, &v)| v).collect())
            .collect();
        let sign = if c % 2 == 0 { 1 } else { -1 };
        total += sign * rows[0][c] as i128 * cofactor_det(&minor);
    }
    total
}

/// Same expansion over exact rationals.
pub fn cofactor_det_exact(m: &ExactMatrix) -> Rational {
    fn go(rows: &[Vec<Rational>]) -> Rational {
        let n = rows.len();
        if n == 0 {
            return Rational::from_integer(BigInt::from(1));
        }
        let mut total = Rational::from_integer(BigInt::from(0));
        for c in 0..n {
            let minor: Vec<Vec<Rational>> = rows[1..]
                .iter()
                .map(|r| r.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, v)| v.clone()).collect())
                .collect();
            let term = &rows[0][c] * go(&minor);
            if c % 2 == 0 {
                total += term;
            } else {
                total -= term;
            }
        }
        total
    }
    let rows: Vec<Vec<Rational>> = (0..m.rows()).map(|i| m.row(i).to_vec()).collect();
    go(&rows)
}

/// `W_n(cos theta) = sin((n + 1/2) theta) / sin(theta / 2)`.
pub fn w4_trig(n: usize, theta: f64) -> f64 {
    ((n as f64 + 0.5) * theta).sin() / (theta / 2.0).sin()
}

/// `U_n(cos theta) = sin((n + 1) theta) / sin(theta)`.
pub fn u_trig(n: usize, theta: f64) -> f64 {
    ((n as f64 + 1.0) * theta).sin() / theta.sin()
}
