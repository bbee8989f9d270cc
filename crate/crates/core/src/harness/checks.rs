//! One checker per identity. Each returns a fully populated report.

use std::collections::BTreeMap;
use std::time::Instant;

use num_traits::{One, Zero};

use super::report::{IdentityId, Inputs, Sign, Verdict, VerificationReport};
use super::HarnessError;
use crate::graph::{kron_assemble_a_tau_product, Graph};
use crate::linalg::{charpoly_exact, det_exact, walk_matrix, ExactMatrix};
use crate::poly::{
    chebyshev_w4, conres_rhs, lemma44_rhs, mu_polynomial, path_charpoly, resultant_in_t, schur_rhs,
    sylvester_resultant, tridiagonal_b, w4_sum, z_pencil, z_poly, z_sum, UniPoly,
};
use crate::rational::{self, format_exact, Rational};
use crate::spectral::{self, eta_vector, mat_vec, norm, MuTable, SpectralData};

/// Absolute bound on `||A eta - mu eta||_2`.
pub const EIGEN_RESIDUAL_TOL: f64 = 1e-8;
/// Relative bound for determinant-scale floating comparisons.
pub const RELATIVE_DET_TOL: f64 = 1e-6;

/// Exact pieces of the unified walk-determinant formula for one `(G, m, tau)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalkDeterminants {
    pub det_a_tau: Rational,
    /// `det((1 - tau^2) I + tau A_tau(G))`
    pub det_middle: Rational,
    pub det_walk: Rational,
    pub det_walk_product: Rational,
    /// `det(A_tau)^{floor(m/2)} det(middle)^{floor((m-1)/2)} det(W_tau)^m`
    pub rhs: Rational,
}

pub fn walk_determinants(g: &Graph, m: usize, tau: &Rational) -> Result<WalkDeterminants, HarnessError> {
    require_m(m, 2)?;
    let a = g.a_tau(tau);
    let n = g.order();
    let det_a_tau = det_exact(&a)?;
    let middle = ExactMatrix::identity(n)
        .scale(&(Rational::one() - tau * tau))
        .add(&a.scale(tau))?;
    let det_middle = det_exact(&middle)?;
    let det_walk = det_exact(&walk_matrix(&a)?)?;
    let det_walk_product = product_walk_det(g, m, tau)?;
    let rhs = rational::pow(&det_a_tau, m / 2)
        * rational::pow(&det_middle, (m - 1) / 2)
        * rational::pow(&det_walk, m);
    Ok(WalkDeterminants { det_a_tau, det_middle, det_walk, det_walk_product, rhs })
}

/// `det W_tau(G o P_m)`.
pub fn product_walk_det(g: &Graph, m: usize, tau: &Rational) -> Result<Rational, HarnessError> {
    let p = g.rooted_product_path(m)?;
    Ok(det_exact(&walk_matrix(&p.a_tau(tau))?)?)
}

fn require_m(m: usize, min: usize) -> Result<(), HarnessError> {
    if m < min {
        Err(HarnessError::InvalidParameter(format!("m must be at least {min}, got {m}")))
    } else {
        Ok(())
    }
}

fn graph_inputs(g: &Graph, m: usize, tau: Option<&Rational>) -> Inputs {
    Inputs {
        graph_hash: Some(g.digest()),
        graph: Some(g.encode()),
        n: Some(g.order()),
        m: Some(m),
        tau: tau.map(format_exact),
        ..Inputs::default()
    }
}

fn plain_inputs(m: usize, tau: Option<&Rational>, params: &[(&str, &Rational)]) -> Inputs {
    Inputs {
        m: Some(m),
        tau: tau.map(format_exact),
        params: params.iter().map(|(k, v)| (k.to_string(), format_exact(v))).collect(),
        ..Inputs::default()
    }
}

/// `|lhs| = |rhs|` with the observed sign recorded.
fn compare_up_to_sign(lhs: &Rational, rhs: &Rational, mismatch: Verdict) -> (Sign, Verdict) {
    if rhs.is_zero() {
        return if lhs.is_zero() {
            (Sign::NotApplicable, Verdict::Pass)
        } else {
            (Sign::NotApplicable, mismatch)
        };
    }
    if lhs == rhs {
        (Sign::Plus, Verdict::Pass)
    } else if *lhs == -rhs.clone() {
        (Sign::Minus, Verdict::Pass)
    } else {
        (Sign::NotApplicable, mismatch)
    }
}

fn exact_equal(lhs: &Rational, rhs: &Rational) -> (Sign, Verdict) {
    if lhs == rhs {
        (Sign::Plus, Verdict::Pass)
    } else {
        (Sign::NotApplicable, Verdict::Fail)
    }
}

fn poly_equal(lhs: &UniPoly, rhs: &UniPoly, mismatch: Verdict) -> (Sign, Verdict) {
    if lhs == rhs {
        (Sign::Plus, Verdict::Pass)
    } else if *lhs == -rhs && !rhs.is_zero() {
        (Sign::Minus, mismatch)
    } else {
        (Sign::NotApplicable, mismatch)
    }
}

struct Draft {
    id: IdentityId,
    inputs: Inputs,
    started: Instant,
    detail: BTreeMap<String, String>,
}

impl Draft {
    fn new(id: IdentityId, inputs: Inputs) -> Self {
        Self { id, inputs, started: Instant::now(), detail: BTreeMap::new() }
    }

    fn note(&mut self, key: &str, value: impl Into<String>) {
        self.detail.insert(key.to_string(), value.into());
    }

    fn finish(
        self,
        lhs: String,
        rhs: String,
        tolerance: Option<f64>,
        (sign, verdict): (Sign, Verdict),
    ) -> VerificationReport {
        VerificationReport {
            identity_id: self.id,
            inputs: self.inputs,
            lhs,
            rhs,
            tolerance,
            sign,
            verdict,
            detail: self.detail,
            elapsed_ms: Some(self.started.elapsed().as_millis() as u64),
        }
    }
}

fn theorem_report(
    id: IdentityId,
    g: &Graph,
    m: usize,
    tau: &Rational,
    include_tau: bool,
) -> Result<VerificationReport, HarnessError> {
    let mut draft = Draft::new(id, graph_inputs(g, m, include_tau.then_some(tau)));
    let d = walk_determinants(g, m, tau)?;
    let mismatch = if id.is_conjectural() { Verdict::Counterexample } else { Verdict::Fail };
    let outcome = compare_up_to_sign(&d.det_walk_product, &d.rhs, mismatch);
    draft.note("det_a_tau", format_exact(&d.det_a_tau));
    draft.note("det_middle", format_exact(&d.det_middle));
    draft.note("det_walk", format_exact(&d.det_walk));
    draft.note("exp_a_tau", (m / 2).to_string());
    draft.note("exp_middle", ((m - 1) / 2).to_string());
    Ok(draft.finish(format_exact(&d.det_walk_product), format_exact(&d.rhs), None, outcome))
}

/// `det W_A(G o P_m) = +-(det A)^{floor(m/2)} (det W_A)^m`.
pub fn verify_thm_wa(g: &Graph, m: usize) -> Result<VerificationReport, HarnessError> {
    theorem_report(IdentityId::ThmWa, g, m, &Rational::zero(), false)
}

/// `det W_Q(G o P_m) = +-(det Q)^{m-1} (det W_Q)^m`.
pub fn verify_thm_wq(g: &Graph, m: usize) -> Result<VerificationReport, HarnessError> {
    theorem_report(IdentityId::ThmWq, g, m, &Rational::one(), false)
}

/// The unified `A_tau` formula. A mismatch is a counterexample, not a failure.
pub fn verify_conjecture(g: &Graph, m: usize, tau: &Rational) -> Result<VerificationReport, HarnessError> {
    theorem_report(IdentityId::ConjTau, g, m, tau, true)
}

/// `Res(Z_m + t Z_{m-1}, sum_k Z_k)` against
/// `(-1)^{m(m-1)} (tau - t)^{floor(m/2)} (1 - tau t)^{floor((m-1)/2)}`,
/// coefficientwise in `t`.
pub fn verify_conres(m: usize, tau: &Rational) -> Result<VerificationReport, HarnessError> {
    require_m(m, 2)?;
    let draft = Draft::new(IdentityId::Conres, plain_inputs(m, Some(tau), &[]));
    let lhs = resultant_in_t(m, tau)?;
    let rhs = conres_rhs(m, tau);
    let outcome = poly_equal(&lhs, &rhs, Verdict::Counterexample);
    Ok(draft.finish(lhs.to_string(), rhs.to_string(), None, outcome))
}

/// Floating cross-check of `|det W_tau(G o P_m)| = |det W_tau(G)|^m prod |Z(mu)|`.
///
/// Compared in log space, since both sides overflow `f64` quickly.
pub fn verify_prop32(g: &Graph, m: usize, tau: &Rational) -> Result<VerificationReport, HarnessError> {
    require_m(m, 1)?;
    let mut draft = Draft::new(IdentityId::Prop32, graph_inputs(g, m, Some(tau)));
    let lhs = product_walk_det(g, m, tau)?;
    let det_walk = det_exact(&walk_matrix(&g.a_tau(tau))?)?;
    draft.note("lhs_exact", format_exact(&lhs));
    draft.note("det_walk", format_exact(&det_walk));
    if lhs.is_zero() || det_walk.is_zero() {
        let outcome = if lhs.is_zero() {
            draft.note("note", "both sides zero");
            (Sign::NotApplicable, Verdict::SkippedZero)
        } else {
            (Sign::NotApplicable, Verdict::Fail)
        };
        return Ok(draft.finish("0".into(), "0".into(), Some(RELATIVE_DET_TOL), outcome));
    }
    let spec = SpectralData::of_graph(g, tau)?;
    let table = MuTable::new(&spec, m);
    let tau_f = rational::to_f64(tau);
    let ln_prod: f64 = table
        .mu
        .iter()
        .flatten()
        .map(|&mu| spectral::z_sum_value(m, tau_f, mu).abs().ln())
        .sum();
    let ln_rhs = m as f64 * rational::ln_abs(&det_walk) + ln_prod;
    let ln_lhs = rational::ln_abs(&lhs);
    let rel = (ln_lhs - ln_rhs).exp_m1().abs();
    draft.note("relative_error", format!("{rel:e}"));
    let verdict = if rel <= RELATIVE_DET_TOL { Verdict::Pass } else { Verdict::Fail };
    Ok(draft.finish(
        format_log_magnitude(ln_lhs),
        format_log_magnitude(ln_rhs),
        Some(RELATIVE_DET_TOL),
        (Sign::NotApplicable, verdict),
    ))
}

/// `Res(Z_m + (tau - lambda) Z_{m-1}, Z_{m-1}) = (-1)^{m(m-1)/2}`, which is
/// the product of `Z_{m-1}` over the roots of the monic first argument.
pub fn verify_cor34(m: usize, tau: &Rational, lambda: &Rational) -> Result<VerificationReport, HarnessError> {
    require_m(m, 1)?;
    let mut draft = Draft::new(IdentityId::Cor34, plain_inputs(m, Some(tau), &[("lambda", lambda)]));
    let p = mu_polynomial(m, tau, lambda);
    let lhs = sylvester_resultant(&p, &z_poly(m - 1, tau))?;
    let ones = vec![Rational::one(); m];
    let schur = schur_rhs(m, &ones, &ones)?;
    let rhs = rational::neg_one_pow(m * (m - 1) / 2);
    draft.note("schur_rhs", format_exact(&schur));
    let outcome = if lhs == rhs && schur == rhs {
        (Sign::Plus, Verdict::Pass)
    } else {
        (Sign::NotApplicable, Verdict::Fail)
    };
    Ok(draft.finish(format_exact(&lhs), format_exact(&rhs), None, outcome))
}

/// `Res(p(lambda2), p(lambda1)) = (-1)^{m(m-1)/2} (lambda2 - lambda1)^m`.
pub fn verify_cor35(
    m: usize,
    tau: &Rational,
    lambda1: &Rational,
    lambda2: &Rational,
) -> Result<VerificationReport, HarnessError> {
    require_m(m, 1)?;
    if lambda1 == lambda2 {
        return Err(HarnessError::InvalidParameter("lambda1 and lambda2 must differ".into()));
    }
    let draft = Draft::new(
        IdentityId::Cor35,
        plain_inputs(m, Some(tau), &[("lambda1", lambda1), ("lambda2", lambda2)]),
    );
    let lhs = sylvester_resultant(&mu_polynomial(m, tau, lambda2), &mu_polynomial(m, tau, lambda1))?;
    let rhs = rational::neg_one_pow(m * (m - 1) / 2) * rational::pow(&(lambda2 - lambda1), m);
    let outcome = exact_equal(&lhs, &rhs);
    Ok(draft.finish(format_exact(&lhs), format_exact(&rhs), None, outcome))
}

/// `Res(W_m + t W_{m-1}, sum_{k<m} W_k) = (-1)^{m(m-1)} 2^{m(m-1)} (1-t)^{m-1}`.
pub fn verify_lem44(m: usize, t: &Rational) -> Result<VerificationReport, HarnessError> {
    require_m(m, 1)?;
    let draft = Draft::new(IdentityId::Lem44, plain_inputs(m, None, &[("t", t)]));
    let f = &chebyshev_w4(m) + &chebyshev_w4(m - 1).scale(t);
    let lhs = sylvester_resultant(&f, &w4_sum(m))?;
    let rhs = lemma44_rhs(m, t);
    let outcome = exact_equal(&lhs, &rhs);
    Ok(draft.finish(format_exact(&lhs), format_exact(&rhs), None, outcome))
}

/// `prod_{i,j} Z^{(1)}(mu_i^{(j)}) = (-1)^{m(m-1)n} (det Q)^{m-1}`, exactly.
///
/// The left side is `Res(phi_Q(G o P_m), Z^{(1)})`: the characteristic
/// polynomial is monic with the `mu` as roots.
pub fn verify_prop45(g: &Graph, m: usize) -> Result<VerificationReport, HarnessError> {
    require_m(m, 2)?;
    let tau = Rational::one();
    let mut draft = Draft::new(IdentityId::Prop45, graph_inputs(g, m, None));
    let product = kron_assemble_a_tau_product(g, m, &tau)?;
    let phi = charpoly_exact(&product)?;
    let lhs = sylvester_resultant(&phi, &z_sum(m, &tau))?;
    let det_q = det_exact(&g.signless_laplacian())?;
    let n = g.order();
    let rhs = rational::neg_one_pow(m * (m - 1) * n) * rational::pow(&det_q, m - 1);
    draft.note("det_q", format_exact(&det_q));
    let outcome = exact_equal(&lhs, &rhs);
    Ok(draft.finish(format_exact(&lhs), format_exact(&rhs), None, outcome))
}

/// Largest residual `||A_tau(G o P_m) eta - mu eta||_2` over all `(i, j)`.
pub fn eigenvector_residual(g: &Graph, m: usize, tau: &Rational) -> Result<f64, HarnessError> {
    let spec = SpectralData::of_graph(g, tau)?;
    let table = MuTable::new(&spec, m);
    let product = kron_assemble_a_tau_product(g, m, tau)?.to_f64_rows();
    let mut worst: f64 = 0.0;
    for (i, roots) in table.mu.iter().enumerate() {
        for &mu in roots {
            let eta = eta_vector(&spec, i, mu, m)?;
            let r: Vec<f64> = mat_vec(&product, &eta)
                .iter()
                .zip(&eta)
                .map(|(a, e)| a - mu * e)
                .collect();
            worst = worst.max(norm(&r));
        }
    }
    Ok(worst)
}

/// Largest deviation between the sorted `mu` table and the eigenvalues of
/// the assembled product matrix.
pub fn spectrum_deviation(g: &Graph, m: usize, tau: &Rational) -> Result<f64, HarnessError> {
    let spec = SpectralData::of_graph(g, tau)?;
    let mus = MuTable::new(&spec, m).flattened_sorted();
    let product = kron_assemble_a_tau_product(g, m, tau)?;
    let direct = spectral::eigen_sym(&product.to_f64_rows())?.values;
    Ok(mus
        .iter()
        .zip(&direct)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max))
}

pub fn verify_lem29(g: &Graph, m: usize, tau: &Rational) -> Result<VerificationReport, HarnessError> {
    require_m(m, 1)?;
    let mut draft = Draft::new(IdentityId::Lem29, graph_inputs(g, m, Some(tau)));
    let worst = eigenvector_residual(g, m, tau)?;
    draft.note("spectrum_deviation", format!("{:e}", spectrum_deviation(g, m, tau)?));
    let verdict = if worst <= EIGEN_RESIDUAL_TOL { Verdict::Pass } else { Verdict::Fail };
    Ok(draft.finish(
        format!("{worst:e}"),
        "0".into(),
        Some(EIGEN_RESIDUAL_TOL),
        (Sign::NotApplicable, verdict),
    ))
}

/// `Z_k = det(xI - B_k)`.
pub fn verify_lem21(k: usize, tau: &Rational) -> Result<VerificationReport, HarnessError> {
    let draft = Draft::new(IdentityId::Lem21, plain_inputs(k, Some(tau), &[]));
    let lhs = z_poly(k, tau);
    let rhs = charpoly_exact(&tridiagonal_b(k, tau))?;
    let outcome = poly_equal(&lhs, &rhs, Verdict::Fail);
    Ok(draft.finish(lhs.to_string(), rhs.to_string(), None, outcome))
}

/// `phi_tau(P_k) = Z_k + tau Z_{k-1}`.
pub fn verify_lem25(k: usize, tau: &Rational) -> Result<VerificationReport, HarnessError> {
    require_m(k, 1)?;
    let draft = Draft::new(IdentityId::Lem25, plain_inputs(k, Some(tau), &[]));
    let lhs = charpoly_exact(&Graph::path(k).a_tau(tau))?;
    let rhs = path_charpoly(k, tau);
    let outcome = poly_equal(&lhs, &rhs, Verdict::Fail);
    Ok(draft.finish(lhs.to_string(), rhs.to_string(), None, outcome))
}

/// `Z_{m-1}^n phi_tau(G; (Z_m + tau Z_{m-1}) / Z_{m-1}) = phi_tau(G o P_m)`.
pub fn verify_lem28_factor(g: &Graph, m: usize, tau: &Rational) -> Result<VerificationReport, HarnessError> {
    require_m(m, 1)?;
    let draft = Draft::new(IdentityId::Lem28Factor, graph_inputs(g, m, Some(tau)));
    let lhs = lem28_substituted(g, m, tau)?;
    let rhs = charpoly_exact(&g.rooted_product_path(m)?.a_tau(tau))?;
    let outcome = poly_equal(&lhs, &rhs, Verdict::Fail);
    Ok(draft.finish(lhs.to_string(), rhs.to_string(), None, outcome))
}

/// `Z_{m-1}^n phi_tau(G; (Z_m + tau Z_{m-1}) / Z_{m-1})`.
pub fn lem28_substituted(g: &Graph, m: usize, tau: &Rational) -> Result<UniPoly, HarnessError> {
    let phi = charpoly_exact(&g.a_tau(tau))?;
    let num = z_pencil(m, tau, tau);
    let den = z_poly(m - 1, tau);
    Ok(phi.rational_substitution(&num, &den)?)
}

/// `1.234567890123e4567`-style text for a magnitude given by its log.
pub fn format_log_magnitude(ln: f64) -> String {
    if !ln.is_finite() {
        return if ln < 0.0 { "0".into() } else { "inf".into() };
    }
    let log10 = ln / std::f64::consts::LN_10;
    let mut exp = log10.floor();
    let mut mant = 10f64.powf(log10 - exp);
    if format!("{mant:.12}").starts_with("10") {
        mant /= 10.0;
        exp += 1.0;
    }
    format!("{mant:.12}e{exp}")
}
