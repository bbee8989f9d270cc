//! Dense exact linear algebra over the rationals.
//!
//! Determinants go through fraction-free (Bareiss) elimination on integers:
//! rational rows are first scaled by the lcm of their denominators and the
//! product of those scale factors is divided back out at the end.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::poly::UniPoly;
use crate::rational::{self, format_exact, parse_rational, ParseRationalError, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("matrix dump line {line}: {source}")]
    Parse {
        line: usize,
        source: ParseRationalError,
    },
    #[error("matrix dump rows have unequal lengths")]
    Ragged,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactVector {
    entries: Vec<Rational>,
}

impl ExactVector {
    pub fn new(entries: Vec<Rational>) -> Self {
        Self { entries }
    }

    /// The all-one vector `e`.
    pub fn ones(dim: usize) -> Self {
        Self::new(vec![Rational::one(); dim])
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<Rational> {
        self.entries
    }
}

impl fmt::Debug for ExactVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.entries.iter().map(rational::format_short).collect();
        write!(f, "[{}]", items.join(", "))
    }
}

/// Row-major dense matrix of rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { Rational::one() } else { Rational::zero() })
    }

    pub fn diagonal(diag: &[Rational]) -> Self {
        let n = diag.len();
        Self::from_fn(n, n, |i, j| if i == j { diag[i].clone() } else { Rational::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, LinalgError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(LinalgError::Ragged);
        }
        Ok(Self {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Convenience constructor for integer literals. Panics on ragged input.
    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&v| rational::int(v)).collect())
                .collect(),
        )
        .expect("rectangular literal")
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

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> ExactVector {
        ExactVector::new((0..self.rows).map(|i| self.get(i, j).clone()).collect())
    }

    pub fn entries(&self) -> &[Rational] {
        &self.data
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn is_integral(&self) -> bool {
        self.data.iter().all(|v| v.is_integer())
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| v * s).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, LinalgError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(LinalgError::Shape(format!(
                "cannot add {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, LinalgError> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn mul(&self, other: &Self) -> Result<Self, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &ExactVector) -> Result<ExactVector, LinalgError> {
        if self.cols != v.dim() {
            return Err(LinalgError::Shape(format!(
                "cannot apply {}x{} to a vector of length {}",
                self.rows,
                self.cols,
                v.dim()
            )));
        }
        Ok(ExactVector::new(
            (0..self.rows)
                .map(|i| {
                    self.row(i)
                        .iter()
                        .zip(v.entries())
                        .filter(|(a, _)| !a.is_zero())
                        .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
                })
                .collect(),
        ))
    }

    pub fn to_f64_rows(&self) -> Vec<Vec<f64>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(rational::to_f64).collect())
            .collect()
    }

    /// One row per line, entries as `p/q` separated by single spaces.
    pub fn to_dump(&self) -> String {
        let mut out = String::new();
        for i in 0..self.rows {
            let line: Vec<String> = self.row(i).iter().map(format_exact).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn parse_dump(text: &str) -> Result<Self, LinalgError> {
        let mut rows = Vec::new();
        for (idx, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let row = line
                .split_whitespace()
                .map(parse_rational)
                .collect::<Result<Vec<_>, _>>()
                .map_err(|source| LinalgError::Parse { line: idx + 1, source })?;
            rows.push(row);
        }
        Self::from_rows(rows)
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ExactMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let items: Vec<String> = self.row(i).iter().map(rational::format_short).collect();
            writeln!(f, "  [{}]", items.join(", "))?;
        }
        write!(f, "]")
    }
}

/// `[a_ij * b]` block layout.
pub fn kronecker(a: &ExactMatrix, b: &ExactMatrix) -> ExactMatrix {
    let (p, q) = (b.rows, b.cols);
    ExactMatrix::from_fn(a.rows * p, a.cols * q, |i, j| {
        let outer = a.get(i / p, j / q);
        if outer.is_zero() {
            Rational::zero()
        } else {
            outer * b.get(i % p, j % q)
        }
    })
}

/// `[e, Me, ..., M^{n-1}e]`, built by repeated matrix-vector products.
pub fn walk_matrix(m: &ExactMatrix) -> Result<ExactMatrix, LinalgError> {
    require_square(m, "walk matrix")?;
    let n = m.rows;
    let mut out = ExactMatrix::zeros(n, n);
    let mut col = ExactVector::ones(n);
    for k in 0..n {
        for (i, v) in col.entries().iter().enumerate() {
            out.set(i, k, v.clone());
        }
        if k + 1 < n {
            col = m.mul_vec(&col)?;
        }
    }
    Ok(out)
}

pub fn det_exact(m: &ExactMatrix) -> Result<Rational, LinalgError> {
    require_square(m, "determinant")?;
    let n = m.rows;
    let mut correction = BigInt::one();
    let mut work: Vec<BigInt> = Vec::with_capacity(n * n);
    for i in 0..n {
        let row = m.row(i);
        let l = rational::denominator_lcm(row);
        for v in row {
            work.push(v.numer() * (&l / v.denom()));
        }
        correction *= l;
    }
    Ok(Rational::new(bareiss_det(n, work), correction))
}

/// Fraction-free elimination on a row-major `n x n` integer matrix.
///
/// Pivot is the first nonzero entry in the column; a zero column ends early
/// with determinant 0.
pub fn bareiss_det(n: usize, mut a: Vec<BigInt>) -> BigInt {
    assert_eq!(a.len(), n * n);
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        let Some(p) = (k..n).find(|&r| !a[r * n + k].is_zero()) else {
            return BigInt::zero();
        };
        if p != k {
            for j in 0..n {
                a.swap(k * n + j, p * n + j);
            }
            negate = !negate;
        }
        let pivot = a[k * n + k].clone();
        for i in k + 1..n {
            let lead = a[i * n + k].clone();
            for j in k + 1..n {
                let v = &pivot * &a[i * n + j] - &lead * &a[k * n + j];
                a[i * n + j] = if prev.is_one() { v } else { v.div_floor(&prev) };
            }
            a[i * n + k] = BigInt::zero();
        }
        prev = pivot;
    }
    let det = a[n * n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// `det(xI - m)`, monic of degree n.
///
/// The matrix is scaled to an integer matrix `N = d*m` first; Faddeev-LeVerrier
/// then runs over the integers (its divisions are exact there) and the
/// coefficients are rescaled by powers of `d`.
pub fn charpoly_exact(m: &ExactMatrix) -> Result<UniPoly, LinalgError> {
    require_square(m, "characteristic polynomial")?;
    let n = m.rows;
    let d = rational::denominator_lcm(m.entries());
    let int: Vec<BigInt> = m
        .entries()
        .iter()
        .map(|v| v.numer() * (&d / v.denom()))
        .collect();

    // c[k] is the coefficient of x^{n-k} in det(xI - N).
    let mut c = vec![BigInt::zero(); n + 1];
    c[0] = BigInt::one();
    let mut acc = vec![BigInt::zero(); n * n]; // M_0 = 0
    for k in 1..=n {
        // M_k = N M_{k-1} + c_{k-1} I
        let mut next = vec![BigInt::zero(); n * n];
        for i in 0..n {
            for l in 0..n {
                let a = &int[i * n + l];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &acc[l * n + j];
                    if !b.is_zero() {
                        next[i * n + j] += a * b;
                    }
                }
            }
        }
        for i in 0..n {
            next[i * n + i] += &c[k - 1];
        }
        // c_k = -tr(N M_k) / k
        let mut trace = BigInt::zero();
        for i in 0..n {
            for l in 0..n {
                trace += &int[i * n + l] * &next[l * n + i];
            }
        }
        let (q, r) = trace.div_rem(&BigInt::from(k));
        debug_assert!(r.is_zero());
        c[k] = -q;
        acc = next;
    }

    // det(xI - m) = d^{-n} det(dxI - N): coefficient of x^{n-k} is c_k / d^k.
    let mut coeffs = vec![Rational::zero(); n + 1];
    let mut scale = BigInt::one();
    for (k, ck) in c.into_iter().enumerate() {
        coeffs[n - k] = Rational::new(ck, scale.clone());
        scale *= &d;
    }
    Ok(UniPoly::new(coeffs))
}

fn require_square(m: &ExactMatrix, what: &str) -> Result<(), LinalgError> {
    if m.is_square() {
        Ok(())
    } else {
        Err(LinalgError::Shape(format!(
            "{what} needs a square matrix, got {}x{}",
            m.rows, m.cols
        )))
    }
}
