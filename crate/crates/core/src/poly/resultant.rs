use num_traits::{One, Zero};

use super::{z_pencil, z_sum, PolyError, UniPoly};
use crate::linalg::{det_exact, ExactMatrix};
use crate::rational::{self, Rational};

/// Sylvester matrix of order `deg f + deg g`: `deg g` shifted rows of the
/// coefficients of `f` (leading first), then `deg f` shifted rows of `g`.
pub fn sylvester_matrix(f: &UniPoly, g: &UniPoly) -> Result<ExactMatrix, PolyError> {
    let (Some(n), Some(m)) = (f.degree(), g.degree()) else {
        return Err(PolyError::UndefinedResultant);
    };
    let size = n + m;
    let mut out = ExactMatrix::zeros(size, size);
    for row in 0..m {
        for (k, c) in f.coeffs().iter().enumerate() {
            out.set(row, row + n - k, c.clone());
        }
    }
    for row in 0..n {
        for (k, c) in g.coeffs().iter().enumerate() {
            out.set(m + row, row + m - k, c.clone());
        }
    }
    Ok(out)
}

/// `Res(f, g) = a_n^m b_m^n prod (alpha_i - beta_j)`, as the Sylvester
/// determinant. Two nonzero constants give 1.
pub fn sylvester_resultant(f: &UniPoly, g: &UniPoly) -> Result<Rational, PolyError> {
    let s = sylvester_matrix(f, g)?;
    Ok(det_exact(&s).expect("Sylvester matrix is square"))
}

/// Lagrange interpolation through `(x_i, y_i)`.
pub fn interpolate(points: &[(Rational, Rational)]) -> Result<UniPoly, PolyError> {
    let mut out = UniPoly::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        if yi.is_zero() {
            continue;
        }
        let mut basis = UniPoly::one();
        let mut denom = Rational::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            let diff = xi - xj;
            if diff.is_zero() {
                return Err(PolyError::RepeatedNode);
            }
            basis = &basis * &UniPoly::linear_root(xj);
            denom *= diff;
        }
        out = &out + &basis.scale(&(yi / denom));
    }
    Ok(out)
}

/// `Res(Z_m + t Z_{m-1}, Z_0 + ... + Z_{m-1})` as a polynomial in `t`.
///
/// `t` enters only the `m-1` Sylvester rows built from the first argument,
/// so the degree in `t` is at most `m-1`; sampling at `t = 0..m-1` and
/// interpolating recovers it exactly.
pub fn resultant_in_t(m: usize, tau: &Rational) -> Result<UniPoly, PolyError> {
    if m < 2 {
        return Err(PolyError::PreconditionViolation(format!("m must be at least 2, got {m}")));
    }
    let g = z_sum(m, tau);
    let points = (0..m)
        .map(|node| {
            let t = rational::int(node as i64);
            let f = z_pencil(m, tau, &t);
            sylvester_resultant(&f, &g).map(|r| (t, r))
        })
        .collect::<Result<Vec<_>, _>>()?;
    interpolate(&points)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{chebyshev_w4, conres_rhs, mu_polynomial, w4_sum, z_poly};
    use crate::rational::{int, ratio};
    use proptest::prelude::*;

    // Product of (alpha_i - beta_j) over explicitly given rational roots.
    fn root_product_resultant(lead_f: &Rational, alphas: &[Rational], lead_g: &Rational, betas: &[Rational]) -> Rational {
        let mut out = rational::pow(lead_f, betas.len()) * rational::pow(lead_g, alphas.len());
        for a in alphas {
            for b in betas {
                out *= a - b;
            }
        }
        out
    }

    fn from_roots(lead: &Rational, roots: &[Rational]) -> UniPoly {
        roots
            .iter()
            .fold(UniPoly::constant(lead.clone()), |acc, r| &acc * &UniPoly::linear_root(r))
    }

    #[test]
    fn linear_factors() {
        let f = UniPoly::linear_root(&int(5));
        let g = UniPoly::linear_root(&int(2));
        assert_eq!(sylvester_resultant(&f, &g).unwrap(), int(3));
    }

    #[test]
    fn chebyshev_fourth_kind_small_case() {
        let t = int(3);
        let f = &chebyshev_w4(2) + &chebyshev_w4(1).scale(&t);
        assert_eq!(f, UniPoly::from_i64(&[2, 8, 4]));
        let g = w4_sum(2);
        assert_eq!(g, UniPoly::from_i64(&[2, 2]));
        assert_eq!(sylvester_resultant(&f, &g).unwrap(), int(-8));
    }

    #[test]
    fn product_against_previous_z() {
        let p = mu_polynomial(2, &int(1), &int(4));
        assert_eq!(sylvester_resultant(&p, &z_poly(1, &int(1))).unwrap(), int(-1));
    }

    #[test]
    fn constants_and_zero() {
        let f = UniPoly::from_i64(&[1, 2, 3]);
        assert_eq!(sylvester_resultant(&f, &UniPoly::from_i64(&[5])).unwrap(), int(25));
        assert_eq!(sylvester_resultant(&UniPoly::from_i64(&[5]), &f).unwrap(), int(25));
        assert_eq!(
            sylvester_resultant(&UniPoly::from_i64(&[2]), &UniPoly::from_i64(&[7])).unwrap(),
            int(1)
        );
        assert_eq!(
            sylvester_resultant(&UniPoly::zero(), &UniPoly::zero()),
            Err(PolyError::UndefinedResultant)
        );
        assert_eq!(sylvester_resultant(&f, &UniPoly::zero()), Err(PolyError::UndefinedResultant));
    }

    #[test]
    fn shared_root_gives_zero() {
        let f = from_roots(&int(2), &[int(1), int(3)]);
        let g = from_roots(&int(-1), &[int(3), ratio(1, 2), int(0)]);
        assert_eq!(sylvester_resultant(&f, &g).unwrap(), int(0));
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let p = UniPoly::new(vec![ratio(1, 3), int(-2), int(0), ratio(5, 2)]);
        let pts: Vec<_> = (0..4).map(|x| (int(x), p.eval(&int(x)))).collect();
        assert_eq!(interpolate(&pts).unwrap(), p);
        assert_eq!(
            interpolate(&[(int(1), int(1)), (int(1), int(2))]),
            Err(PolyError::RepeatedNode)
        );
    }

    #[test]
    fn resultant_in_t_small_cases() {
        // m = 2: Res(Z_2 + t Z_1, x - tau + 1) = tau - t
        assert_eq!(resultant_in_t(2, &int(1)).unwrap(), UniPoly::from_i64(&[1, -1]));
        assert_eq!(resultant_in_t(2, &int(0)).unwrap(), UniPoly::from_i64(&[0, -1]));
        assert_eq!(resultant_in_t(3, &int(0)).unwrap(), UniPoly::from_i64(&[0, -1]));
        assert!(resultant_in_t(1, &int(0)).is_err());
    }

    #[test]
    fn resultant_in_t_agrees_off_the_nodes() {
        for m in 2..7 {
            for tau in [int(1), ratio(1, 2), int(-1)] {
                let poly = resultant_in_t(m, &tau).unwrap();
                assert!(poly.degree().is_none_or(|d| d < m));
                for t in [int(7), ratio(-5, 3), ratio(11, 4)] {
                    let direct = sylvester_resultant(&z_pencil(m, &tau, &t), &z_sum(m, &tau)).unwrap();
                    assert_eq!(poly.eval(&t), direct);
                }
            }
            assert_eq!(resultant_in_t(m, &int(1)).unwrap(), conres_rhs(m, &int(1)));
        }
    }

    fn roots(max: usize) -> impl Strategy<Value = Vec<Rational>> {
        proptest::collection::vec((-6i64..=6, 1i64..=3), 0..=max)
            .prop_map(|v| v.into_iter().map(|(p, q)| ratio(p, q)).collect())
    }

    fn nonzero_lead() -> impl Strategy<Value = Rational> {
        prop_oneof![(1i64..=3), (-3i64..=-1)].prop_map(int)
    }

    fn small_poly() -> impl Strategy<Value = UniPoly> {
        proptest::collection::vec(-5i64..=5, 1..=6)
            .prop_map(|v| UniPoly::from_i64(&v))
            .prop_filter("nonzero", |p| !p.is_zero())
    }

    proptest! {
        #[test]
        fn matches_root_product(lf in nonzero_lead(), a in roots(4), lg in nonzero_lead(), b in roots(4)) {
            let f = from_roots(&lf, &a);
            let g = from_roots(&lg, &b);
            prop_assert_eq!(sylvester_resultant(&f, &g).unwrap(), root_product_resultant(&lf, &a, &lg, &b));
        }

        #[test]
        fn swap_sign(f in small_poly(), g in small_poly()) {
            let n = f.degree().unwrap();
            let m = g.degree().unwrap();
            prop_assert_eq!(
                sylvester_resultant(&f, &g).unwrap(),
                rational::neg_one_pow(n * m) * sylvester_resultant(&g, &f).unwrap()
            );
        }

        #[test]
        fn affine_scaling(f in small_poly(), g in small_poly(), t in prop_oneof![(1i64..=3), (-3i64..=-1)], s in -3i64..=3) {
            let (t, s) = (int(t), int(s));
            let n = f.degree().unwrap();
            let m = g.degree().unwrap();
            let lhs = sylvester_resultant(&f.compose_affine(&t, &s).unwrap(), &g.compose_affine(&t, &s).unwrap()).unwrap();
            prop_assert_eq!(lhs, rational::pow(&t, n * m) * sylvester_resultant(&f, &g).unwrap());
        }
    }
}
