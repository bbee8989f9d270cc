use num_traits::{One, Zero};

use super::{PolyError, UniPoly};
use crate::linalg::ExactMatrix;
use crate::rational::{self, Rational};

/// `Z_0, ..., Z_kmax` for the recurrence
/// `Z_0 = 1`, `Z_1 = x - tau`, `Z_k = (x - 2 tau) Z_{k-1} - Z_{k-2}`.
pub fn z_table(k_max: usize, tau: &Rational) -> Vec<UniPoly> {
    let mut out = Vec::with_capacity(k_max + 1);
    out.push(UniPoly::one());
    if k_max == 0 {
        return out;
    }
    out.push(UniPoly::linear_root(tau));
    let step = UniPoly::linear_root(&(tau * rational::int(2)));
    for k in 2..=k_max {
        let next = &(&step * &out[k - 1]) - &out[k - 2];
        out.push(next);
    }
    out
}

pub fn z_poly(k: usize, tau: &Rational) -> UniPoly {
    z_table(k, tau).pop().expect("table is never empty")
}

/// `Z_0 + ... + Z_{m-1}`; the empty sum (zero polynomial) for `m = 0`.
pub fn z_sum(m: usize, tau: &Rational) -> UniPoly {
    if m == 0 {
        return UniPoly::zero();
    }
    z_table(m - 1, tau)
        .iter()
        .fold(UniPoly::zero(), |acc, z| &acc + z)
}

/// `Z_m + t Z_{m-1}` for `m >= 1`.
pub fn z_pencil(m: usize, tau: &Rational, t: &Rational) -> UniPoly {
    assert!(m >= 1, "z_pencil needs m >= 1");
    let table = z_table(m, tau);
    &table[m] + &table[m - 1].scale(t)
}

/// `Z_m + (tau - lambda) Z_{m-1}`, whose roots are the eigenvalues of the
/// rooted product lying over the eigenvalue `lambda` of the base graph.
pub fn mu_polynomial(m: usize, tau: &Rational, lambda: &Rational) -> UniPoly {
    z_pencil(m, tau, &(tau - lambda))
}

/// Characteristic polynomial of `A_tau(P_k)` in closed form, `Z_k + tau Z_{k-1}`.
pub fn path_charpoly(k: usize, tau: &Rational) -> UniPoly {
    z_pencil(k, tau, tau)
}

/// The tridiagonal matrix `A_tau(P_k) + diag(tau, 0, ..., 0)`:
/// diagonal `(2tau, ..., 2tau, tau)`, unit off-diagonals, `[tau]` for k = 1.
pub fn tridiagonal_b(k: usize, tau: &Rational) -> ExactMatrix {
    ExactMatrix::from_fn(k, k, |i, j| {
        if i == j {
            if i + 1 == k {
                tau.clone()
            } else {
                tau * rational::int(2)
            }
        } else if i.abs_diff(j) == 1 {
            Rational::one()
        } else {
            Rational::zero()
        }
    })
}

fn chebyshev_like(n: usize, first: UniPoly) -> Vec<UniPoly> {
    let mut out = vec![UniPoly::one()];
    if n == 0 {
        return out;
    }
    out.push(first);
    let two_x = UniPoly::from_i64(&[0, 2]);
    for k in 2..=n {
        let next = &(&two_x * &out[k - 1]) - &out[k - 2];
        out.push(next);
    }
    out
}

/// Chebyshev polynomial of the second kind, `U_0 = 1`, `U_1 = 2x`.
pub fn chebyshev_u(n: usize) -> UniPoly {
    chebyshev_like(n, UniPoly::from_i64(&[0, 2])).pop().unwrap()
}

/// Chebyshev polynomial of the fourth kind, `W_0 = 1`, `W_1 = 2x + 1`.
pub fn chebyshev_w4(n: usize) -> UniPoly {
    chebyshev_like(n, UniPoly::from_i64(&[1, 2])).pop().unwrap()
}

/// `U_0 + ... + U_{m-1}`.
pub fn u_sum(m: usize) -> UniPoly {
    if m == 0 {
        return UniPoly::zero();
    }
    chebyshev_like(m - 1, UniPoly::from_i64(&[0, 2]))
        .iter()
        .fold(UniPoly::zero(), |acc, p| &acc + p)
}

/// `W_0 + ... + W_{m-1}`.
pub fn w4_sum(m: usize) -> UniPoly {
    if m == 0 {
        return UniPoly::zero();
    }
    chebyshev_like(m - 1, UniPoly::from_i64(&[1, 2]))
        .iter()
        .fold(UniPoly::zero(), |acc, p| &acc + p)
}

/// Schur's closed form for the product of `p_{k-1}` over the zeros of `p_k`,
/// for a three-term family `p_k = (a_k x + b_k) p_{k-1} - c_k p_{k-2}`:
/// `(-1)^{k(k-1)/2} prod_j a_j^{k-2j+1} c_j^{j-1}`.
///
/// `a` and `c` are indexed from 1 in the formula and from 0 here; `c[0]` is
/// never used.
pub fn schur_rhs(k: usize, a: &[Rational], c: &[Rational]) -> Result<Rational, PolyError> {
    if k == 0 {
        return Err(PolyError::PreconditionViolation("k must be at least 1".into()));
    }
    if a.len() < k || c.len() < k {
        return Err(PolyError::PreconditionViolation(format!(
            "need {k} values of a and c, got {} and {}",
            a.len(),
            c.len()
        )));
    }
    let mut out = rational::neg_one_pow(k * (k - 1) / 2);
    for j in 1..=k {
        let aj = &a[j - 1];
        if aj.is_zero() {
            return Err(PolyError::PreconditionViolation(format!("a_{j} is zero")));
        }
        let exp = k as i64 - 2 * j as i64 + 1;
        out *= if exp >= 0 {
            rational::pow(aj, exp as usize)
        } else {
            rational::pow(&aj.recip(), (-exp) as usize)
        };
        if j > 1 {
            let cj = &c[j - 1];
            if cj.is_zero() {
                return Err(PolyError::PreconditionViolation(format!("c_{j} is zero")));
            }
            out *= rational::pow(cj, j - 1);
        }
    }
    Ok(out)
}

/// `(-1)^{m(m-1)} (tau - t)^{floor(m/2)} (1 - tau t)^{floor((m-1)/2)}` as a
/// polynomial in `t`.
pub fn conres_rhs(m: usize, tau: &Rational) -> UniPoly {
    let first = UniPoly::new(vec![tau.clone(), -Rational::one()]);
    let second = UniPoly::new(vec![Rational::one(), -tau.clone()]);
    let sign = rational::neg_one_pow(m * m.saturating_sub(1));
    (&first.pow(m / 2) * &second.pow(m.saturating_sub(1) / 2)).scale(&sign)
}

/// `(-1)^{m(m-1)} 2^{m(m-1)} (1 - t)^{m-1}`.
pub fn lemma44_rhs(m: usize, t: &Rational) -> Rational {
    let e = m * m.saturating_sub(1);
    rational::neg_one_pow(e)
        * rational::pow(&rational::int(2), e)
        * rational::pow(&(Rational::one() - t), m.saturating_sub(1))
}
