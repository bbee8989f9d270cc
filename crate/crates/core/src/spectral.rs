//! Floating-point eigenstructure of `A_tau(G)` and of its rooted products.
//!
//! Eigenpairs come from a self-contained cyclic Jacobi solver. The roots
//! `mu` of `Z_m + (tau - lambda) Z_{m-1}` are computed as the eigenvalues of
//! `A_tau(P_m) + lambda e_1 e_1^T`, whose characteristic polynomial is
//! exactly that pencil, so they come out real and sorted.

use thiserror::Error;

use crate::graph::Graph;
use crate::linalg::ExactMatrix;
use crate::rational::{self, Rational};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectralError {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is not symmetric at ({i}, {j})")]
    NotSymmetric { i: usize, j: usize },
    #[error("Z_(m-1)(mu) = {0:e} is numerically zero; eigenvalue data is inconsistent")]
    NumericallySingularScale(f64),
    #[error("eigen index {index} out of range for order {n}")]
    IndexOutOfRange { index: usize, n: usize },
}

const SYMMETRY_TOL: f64 = 1e-12;
const MAX_SWEEPS: usize = 100;

/// Eigenvalues ascending, with `vectors[k]` the unit eigenvector for `values[k]`.
#[derive(Debug, Clone)]
pub struct SymEigen {
    pub values: Vec<f64>,
    pub vectors: Vec<Vec<f64>>,
}

/// Full eigendecomposition of a real symmetric matrix by cyclic Jacobi
/// rotations. Exact ties keep the original column order.
#[allow(clippy::needless_range_loop)]
pub fn eigen_sym(rows: &[Vec<f64>]) -> Result<SymEigen, SpectralError> {
    let n = rows.len();
    if let Some(bad) = rows.iter().find(|r| r.len() != n) {
        return Err(SpectralError::NotSquare { rows: n, cols: bad.len() });
    }
    for i in 0..n {
        for j in 0..i {
            if (rows[i][j] - rows[j][i]).abs() > SYMMETRY_TOL {
                return Err(SpectralError::NotSymmetric { i, j });
            }
        }
    }
    let mut a: Vec<Vec<f64>> = rows.to_vec();
    let mut v: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
        .collect();

    let frob2: f64 = a.iter().flatten().map(|x| x * x).sum();
    for _ in 0..MAX_SWEEPS {
        let off2: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i][j] * a[i][j])
            .sum();
        if off2 <= f64::EPSILON * f64::EPSILON * frob2 * 1e-4 || off2 == 0.0 {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p][q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p][k];
                    let aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                a[p][q] = 0.0;
                a[q][p] = 0.0;
                for row in v.iter_mut() {
                    let vkp = row[p];
                    let vkq = row[q];
                    row[p] = c * vkp - s * vkq;
                    row[q] = s * vkp + c * vkq;
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&x, &y| a[x][x].total_cmp(&a[y][y]));
    Ok(SymEigen {
        values: order.iter().map(|&k| a[k][k]).collect(),
        vectors: order
            .iter()
            .map(|&k| (0..n).map(|i| v[i][k]).collect())
            .collect(),
    })
}

/// Eigen data of `A_tau(G)`: `lambda` ascending, `xi[i]` the unit
/// eigenvector for `lambda[i]`.
#[derive(Debug, Clone)]
pub struct SpectralData {
    pub n: usize,
    pub lambda: Vec<f64>,
    pub xi: Vec<Vec<f64>>,
    pub tau: Rational,
    matrix: Vec<Vec<f64>>,
}

impl SpectralData {
    pub fn of_graph(g: &Graph, tau: &Rational) -> Result<Self, SpectralError> {
        Self::of_matrix(&g.a_tau(tau), tau)
    }

    pub fn of_matrix(m: &ExactMatrix, tau: &Rational) -> Result<Self, SpectralError> {
        let rows = m.to_f64_rows();
        let eig = eigen_sym(&rows)?;
        Ok(Self {
            n: rows.len(),
            lambda: eig.values,
            xi: eig.vectors,
            tau: tau.clone(),
            matrix: rows,
        })
    }

    pub fn matrix(&self) -> &[Vec<f64>] {
        &self.matrix
    }

    /// Largest `||A xi_i - lambda_i xi_i||_2`.
    pub fn max_residual(&self) -> f64 {
        (0..self.n)
            .map(|i| {
                let ax = mat_vec(&self.matrix, &self.xi[i]);
                norm(&ax.iter().zip(&self.xi[i]).map(|(a, x)| a - self.lambda[i] * x).collect::<Vec<_>>())
            })
            .fold(0.0, f64::max)
    }

    /// Largest `|xi_i . xi_j - delta_ij|`.
    pub fn max_orthogonality_defect(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..self.n {
            for j in 0..self.n {
                let d = dot(&self.xi[i], &self.xi[j]) - if i == j { 1.0 } else { 0.0 };
                worst = worst.max(d.abs());
            }
        }
        worst
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.matrix.iter().flatten().map(|x| x * x).sum::<f64>().sqrt()
    }

    /// Smallest gap between consecutive eigenvalues (infinite for n = 1).
    pub fn min_gap(&self) -> f64 {
        self.lambda
            .windows(2)
            .map(|w| w[1] - w[0])
            .fold(f64::INFINITY, f64::min)
    }
}

/// `Z_0(x), ..., Z_k(x)` in floating point.
pub fn z_values(k: usize, tau: f64, x: f64) -> Vec<f64> {
    let mut out = Vec::with_capacity(k + 1);
    out.push(1.0);
    if k >= 1 {
        out.push(x - tau);
    }
    for j in 2..=k {
        let next = (x - 2.0 * tau) * out[j - 1] - out[j - 2];
        out.push(next);
    }
    out
}

/// `Z(x) = Z_0(x) + ... + Z_{m-1}(x)` in floating point.
pub fn z_sum_value(m: usize, tau: f64, x: f64) -> f64 {
    if m == 0 {
        return 0.0;
    }
    z_values(m - 1, tau, x).iter().sum()
}

/// The `m` roots of `Z_m + (tau - lam) Z_{m-1}`, ascending.
pub fn mu_roots(m: usize, tau: &Rational, lam: f64) -> Vec<f64> {
    assert!(m >= 1, "mu_roots needs m >= 1");
    let mut t = Graph::path(m).a_tau(tau).to_f64_rows();
    t[0][0] += lam;
    eigen_sym(&t).expect("tridiagonal matrix is symmetric").values
}

/// `mu[i]` holds the roots over `lambda[i]`.
#[derive(Debug, Clone)]
pub struct MuTable {
    pub m: usize,
    pub mu: Vec<Vec<f64>>,
}

impl MuTable {
    pub fn new(spec: &SpectralData, m: usize) -> Self {
        Self {
            m,
            mu: spec.lambda.iter().map(|&l| mu_roots(m, &spec.tau, l)).collect(),
        }
    }

    pub fn flattened_sorted(&self) -> Vec<f64> {
        let mut all: Vec<f64> = self.mu.iter().flatten().copied().collect();
        all.sort_by(f64::total_cmp);
        all
    }
}

/// `[Z_{m-1}(mu), ..., Z_0(mu)]^T / Z_{m-1}(mu)  (x)  xi_i`, in the level-major
/// layout used by [`Graph::rooted_product_path`].
pub fn eta_vector(spec: &SpectralData, i: usize, mu: f64, m: usize) -> Result<Vec<f64>, SpectralError> {
    if i >= spec.n {
        return Err(SpectralError::IndexOutOfRange { index: i, n: spec.n });
    }
    assert!(m >= 1, "eta_vector needs m >= 1");
    let z = z_values(m - 1, rational::to_f64(&spec.tau), mu);
    let scale = z[m - 1];
    if scale.abs() < 1e-12 {
        return Err(SpectralError::NumericallySingularScale(scale));
    }
    let xi = &spec.xi[i];
    let mut out = Vec::with_capacity(m * spec.n);
    for level in 1..=m {
        let f = if level == 1 { 1.0 } else { z[m - level] / scale };
        out.extend(xi.iter().map(|x| f * x));
    }
    Ok(out)
}

/// `det W_tau(G)` from eigen data:
/// `prod_{i<j}(lambda_j - lambda_i) prod_i (e^T xi_i) / det[xi_1 .. xi_n]`.
///
/// The sign depends on the eigenvector signs, so compare absolute values.
pub fn mao_walk_det(spec: &SpectralData) -> f64 {
    let mut vandermonde = 1.0;
    for i in 0..spec.n {
        for j in i + 1..spec.n {
            vandermonde *= spec.lambda[j] - spec.lambda[i];
        }
    }
    let sums: f64 = spec.xi.iter().map(|x| x.iter().sum::<f64>()).product();
    let cols: Vec<Vec<f64>> = (0..spec.n)
        .map(|r| spec.xi.iter().map(|x| x[r]).collect())
        .collect();
    vandermonde * sums / det_f64(cols)
}

/// `W_k(x)` by the three-term recurrence.
pub fn chebyshev_w4_value(k: usize, x: f64) -> f64 {
    let (mut prev, mut cur) = (1.0, 2.0 * x + 1.0);
    if k == 0 {
        return prev;
    }
    for _ in 1..k {
        let next = 2.0 * x * cur - prev;
        prev = cur;
        cur = next;
    }
    cur
}

pub fn mat_vec(m: &[Vec<f64>], v: &[f64]) -> Vec<f64> {
    m.iter().map(|row| dot(row, v)).collect()
}

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

/// LU with partial pivoting.
#[allow(clippy::needless_range_loop)]
pub fn det_f64(mut a: Vec<Vec<f64>>) -> f64 {
    let n = a.len();
    let mut det = 1.0;
    for k in 0..n {
        let p = (k..n)
            .max_by(|&x, &y| a[x][k].abs().total_cmp(&a[y][k].abs()))
            .expect("nonempty range");
        if a[p][k] == 0.0 {
            return 0.0;
        }
        if p != k {
            a.swap(p, k);
            det = -det;
        }
        det *= a[k][k];
        for i in k + 1..n {
            let f = a[i][k] / a[k][k];
            for j in k..n {
                a[i][j] -= f * a[k][j];
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{charpoly_exact, det_exact, walk_matrix};
    use crate::poly::mu_polynomial;
    use crate::rational::{int, ratio};

    #[test]
    fn diagonal_matrix() {
        let e = eigen_sym(&[vec![3.0, 0.0, 0.0], vec![0.0, 1.0, 0.0], vec![0.0, 0.0, 2.0]]).unwrap();
        assert_eq!(e.values, vec![1.0, 2.0, 3.0]);
        assert_eq!(e.vectors[0], vec![0.0, 1.0, 0.0]);
        assert_eq!(e.vectors[1], vec![0.0, 0.0, 1.0]);
        assert_eq!(e.vectors[2], vec![1.0, 0.0, 0.0]);
    }

    #[test]
    fn ties_keep_column_order() {
        let e = eigen_sym(&[vec![1.0, 0.0], vec![0.0, 1.0]]).unwrap();
        assert_eq!(e.vectors[0], vec![1.0, 0.0]);
        assert_eq!(e.vectors[1], vec![0.0, 1.0]);
    }

    #[test]
    fn path_two() {
        let e = eigen_sym(&[vec![0.0, 1.0], vec![1.0, 0.0]]).unwrap();
        assert!((e.values[0] + 1.0).abs() < 1e-14 && (e.values[1] - 1.0).abs() < 1e-14);
        let h = std::f64::consts::FRAC_1_SQRT_2;
        assert!((e.vectors[0][0].abs() - h).abs() < 1e-14);
        assert!((e.vectors[0][0] + e.vectors[0][1]).abs() < 1e-14);
        assert!((e.vectors[1][0] - e.vectors[1][1]).abs() < 1e-14);
    }

    #[test]
    fn rejects_asymmetric_input() {
        assert_eq!(
            eigen_sym(&[vec![0.0, 1.0], vec![0.5, 0.0]]).unwrap_err(),
            SpectralError::NotSymmetric { i: 1, j: 0 }
        );
        assert!(matches!(
            eigen_sym(&[vec![0.0, 1.0], vec![0.5]]),
            Err(SpectralError::NotSquare { .. })
        ));
    }

    #[test]
    fn q_p3_eigenvalues_are_charpoly_roots() {
        let q = Graph::path(3).signless_laplacian();
        let p = charpoly_exact(&q).unwrap();
        let spec = SpectralData::of_matrix(&q, &int(1)).unwrap();
        for &l in &spec.lambda {
            assert!(p.eval_f64(l).abs() < 1e-9, "{l}");
        }
        assert!(spec.max_residual() <= 1e-10 * spec.frobenius_norm());
        assert!(spec.max_orthogonality_defect() <= 1e-10);
    }

    #[test]
    fn mu_root_examples() {
        assert_eq!(mu_roots(1, &ratio(2, 3), 1.75), vec![1.75]);
        let r = mu_roots(2, &int(0), 0.0);
        assert!((r[0] + 1.0).abs() < 1e-14 && (r[1] - 1.0).abs() < 1e-14);
        let r = mu_roots(3, &int(1), 4.0);
        let p = mu_polynomial(3, &int(1), &int(4));
        assert!(r.windows(2).all(|w| w[0] < w[1]));
        for mu in r {
            assert!(p.eval_f64(mu).abs() <= 1e-8);
        }
    }

    #[test]
    fn eta_examples() {
        let g = Graph::cycle(4);
        let spec = SpectralData::of_graph(&g, &int(1)).unwrap();
        let eta = eta_vector(&spec, 2, 0.3, 1).unwrap();
        assert_eq!(eta, spec.xi[2]);

        let m = 3;
        let product = g.rooted_product_path(m).unwrap().a_tau(&int(1)).to_f64_rows();
        let table = MuTable::new(&spec, m);
        for i in 0..spec.n {
            for &mu in &table.mu[i] {
                let eta = eta_vector(&spec, i, mu, m).unwrap();
                assert_eq!(&eta[..4], &spec.xi[i][..]);
                let r: Vec<f64> = mat_vec(&product, &eta).iter().zip(&eta).map(|(a, e)| a - mu * e).collect();
                assert!(norm(&r) <= 1e-8);
            }
        }
        assert!(matches!(eta_vector(&spec, 9, 0.0, 2), Err(SpectralError::IndexOutOfRange { .. })));
        // Z_1(tau) = 0 for the scale factor
        assert!(matches!(
            eta_vector(&spec, 0, 1.0, 2),
            Err(SpectralError::NumericallySingularScale(_))
        ));
    }

    #[test]
    fn mao_formula() {
        // repeated eigenvalue of K_3 forces zero
        let spec = SpectralData::of_graph(&Graph::complete(3), &int(0)).unwrap();
        assert!(mao_walk_det(&spec).abs() < 1e-9);
        let spec = SpectralData::of_graph(&Graph::path(3), &int(1)).unwrap();
        assert!(mao_walk_det(&spec).abs() < 1e-8);

        // asymmetric 6-vertex graph
        let g = Graph::from_edges(6, [(1, 2), (1, 4), (1, 5), (1, 6), (2, 3), (2, 5), (3, 4)]).unwrap();
        let exact = det_exact(&walk_matrix(&g.signless_laplacian()).unwrap()).unwrap();
        assert_eq!(exact, int(-256));
        let exact = rational::to_f64(&exact);
        let spec = SpectralData::of_graph(&g, &int(1)).unwrap();
        let approx = mao_walk_det(&spec);
        assert!(((approx.abs() - exact.abs()) / exact.abs()).abs() < 1e-6, "{approx} vs {exact}");
    }

    #[test]
    fn fourth_kind_trig_form() {
        for step in 1..100 {
            let theta = step as f64 * 0.0621;
            for k in 0..12 {
                let lhs = chebyshev_w4_value(k, theta.cos());
                let rhs = ((k as f64 + 0.5) * theta).sin() / (theta / 2.0).sin();
                assert!((lhs - rhs).abs() <= 1e-10);
            }
        }
    }

    #[test]
    fn z_value_recurrence_matches_polynomials() {
        let tau = ratio(1, 2);
        let table = crate::poly::z_table(6, &tau);
        let vals = z_values(6, 0.5, 0.7);
        for (p, v) in table.iter().zip(vals) {
            assert!((p.eval_f64(0.7) - v).abs() < 1e-12);
        }
    }

    #[test]
    fn lu_determinant() {
        assert!((det_f64(vec![vec![0.0, 1.0], vec![1.0, 0.0]]) + 1.0).abs() < 1e-15);
        assert_eq!(det_f64(vec![vec![1.0, 2.0], vec![2.0, 4.0]]), 0.0);
    }
}
