//! Cartesian-product sweeps, evaluated in parallel and reported in input order.

use rayon::prelude::*;

use super::checks::*;
use super::corpus::{CorpusEntry, GraphCorpus};
use super::report::{IdentityId, Inputs, VerificationReport};
use super::HarnessError;
use crate::rational::{format_exact, int, ratio, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepConfig {
    /// Path length `m` for product checks, polynomial index for the others.
    pub m_values: Vec<usize>,
    pub taus: Vec<Rational>,
    pub identities: Vec<IdentityId>,
    /// `lambda` samples for the two corollaries; pairs use distinct entries.
    pub lambdas: Vec<Rational>,
    /// `t` samples for the fourth-kind resultant.
    pub t_values: Vec<Rational>,
    /// Worker cap; `None` uses rayon's default.
    pub threads: Option<usize>,
    /// Keep `elapsed_ms`. Off by default so report files are reproducible.
    pub timing: bool,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            m_values: vec![2, 3, 4, 5],
            taus: default_taus(),
            identities: vec![IdentityId::ThmWa, IdentityId::ThmWq, IdentityId::ConjTau],
            lambdas: vec![int(0), int(1), int(-3), ratio(5, 2)],
            t_values: vec![int(0), int(1), int(-1), int(3), ratio(1, 2), ratio(7, 3)],
            threads: None,
            timing: false,
        }
    }
}

pub fn default_taus() -> Vec<Rational> {
    vec![int(0), int(1), ratio(1, 2), int(2), int(-1), ratio(3, 7)]
}

#[derive(Debug, Clone)]
enum Case<'a> {
    Graph { id: IdentityId, entry: &'a CorpusEntry, m: usize, tau: Option<Rational> },
    Tau { id: IdentityId, m: usize, tau: Rational },
    Lambda { m: usize, tau: Rational, lambda: Rational },
    LambdaPair { m: usize, tau: Rational, l1: Rational, l2: Rational },
    T { m: usize, t: Rational },
}

fn uses_tau(id: IdentityId) -> bool {
    !matches!(id, IdentityId::ThmWa | IdentityId::ThmWq | IdentityId::Prop45 | IdentityId::Lem44)
}

fn enumerate<'a>(corpus: &'a GraphCorpus, cfg: &SweepConfig) -> Vec<Case<'a>> {
    let mut cases = Vec::new();
    for &id in &cfg.identities {
        let tau_list: Vec<Option<Rational>> =
            if uses_tau(id) { cfg.taus.iter().cloned().map(Some).collect() } else { vec![None] };
        if id.needs_graph() {
            for entry in &corpus.entries {
                for &m in &cfg.m_values {
                    for tau in &tau_list {
                        cases.push(Case::Graph { id, entry, m, tau: tau.clone() });
                    }
                }
            }
            continue;
        }
        for &m in &cfg.m_values {
            match id {
                IdentityId::Lem44 => {
                    for t in &cfg.t_values {
                        cases.push(Case::T { m, t: t.clone() });
                    }
                }
                IdentityId::Cor34 => {
                    for tau in &cfg.taus {
                        for l in &cfg.lambdas {
                            cases.push(Case::Lambda { m, tau: tau.clone(), lambda: l.clone() });
                        }
                    }
                }
                IdentityId::Cor35 => {
                    for tau in &cfg.taus {
                        for l1 in &cfg.lambdas {
                            for l2 in cfg.lambdas.iter().filter(|l| *l != l1) {
                                cases.push(Case::LambdaPair { m, tau: tau.clone(), l1: l1.clone(), l2: l2.clone() });
                            }
                        }
                    }
                }
                _ => {
                    for tau in &cfg.taus {
                        cases.push(Case::Tau { id, m, tau: tau.clone() });
                    }
                }
            }
        }
    }
    cases
}

fn run_case(case: &Case<'_>) -> VerificationReport {
    let (id, result, inputs) = match case {
        Case::Graph { id, entry, m, tau } => {
            let g = &entry.graph;
            let zero = int(0);
            let t = tau.as_ref().unwrap_or(&zero);
            let res = match id {
                IdentityId::ThmWa => verify_thm_wa(g, *m),
                IdentityId::ThmWq => verify_thm_wq(g, *m),
                IdentityId::ConjTau => verify_conjecture(g, *m, t),
                IdentityId::Prop32 => verify_prop32(g, *m, t),
                IdentityId::Prop45 => verify_prop45(g, *m),
                IdentityId::Lem29 => verify_lem29(g, *m, t),
                _ => verify_lem28_factor(g, *m, t),
            };
            let res = res.map(|mut r| {
                r.inputs.seed = entry.seed();
                r
            });
            let inputs = Inputs {
                graph_hash: Some(g.digest()),
                graph: Some(g.encode()),
                n: Some(g.order()),
                m: Some(*m),
                tau: tau.as_ref().map(format_exact),
                seed: entry.seed(),
                ..Inputs::default()
            };
            (*id, res, inputs)
        }
        Case::Tau { id, m, tau } => {
            let res = match id {
                IdentityId::Conres => verify_conres(*m, tau),
                IdentityId::Lem21 => verify_lem21(*m, tau),
                _ => verify_lem25(*m, tau),
            };
            (*id, res, plain(*m, Some(tau), &[]))
        }
        Case::Lambda { m, tau, lambda } => {
            (IdentityId::Cor34, verify_cor34(*m, tau, lambda), plain(*m, Some(tau), &[("lambda", lambda)]))
        }
        Case::LambdaPair { m, tau, l1, l2 } => (
            IdentityId::Cor35,
            verify_cor35(*m, tau, l1, l2),
            plain(*m, Some(tau), &[("lambda1", l1), ("lambda2", l2)]),
        ),
        Case::T { m, t } => (IdentityId::Lem44, verify_lem44(*m, t), plain(*m, None, &[("t", t)])),
    };
    result.unwrap_or_else(|e: HarnessError| VerificationReport::error(id, inputs, &e))
}

fn plain(m: usize, tau: Option<&Rational>, params: &[(&str, &Rational)]) -> Inputs {
    Inputs {
        m: Some(m),
        tau: tau.map(format_exact),
        params: params.iter().map(|(k, v)| (k.to_string(), format_exact(v))).collect(),
        ..Inputs::default()
    }
}

/// Runs every `(graph, m, tau, identity)` case. Failures of individual cases
/// become `ERROR` reports; the sweep itself only fails if the thread pool
/// cannot be built.
pub fn run_sweep(corpus: &GraphCorpus, cfg: &SweepConfig) -> Result<Vec<VerificationReport>, HarnessError> {
    let cases = enumerate(corpus, cfg);
    let work = || -> Vec<VerificationReport> {
        cases
            .par_iter()
            .map(|c| {
                let r = run_case(c);
                if cfg.timing { r } else { r.without_timing() }
            })
            .collect()
    };
    match cfg.threads {
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n.max(1))
                .build()
                .map_err(|e| HarnessError::InvalidParameter(format!("thread pool: {e}")))?;
            Ok(pool.install(work))
        }
        None => Ok(work()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::harness::corpus::{random_corpus, Provenance};
    use crate::harness::report::{write_jsonl, Verdict};

    fn one(id: IdentityId, m: Vec<usize>, taus: Vec<Rational>) -> SweepConfig {
        SweepConfig { m_values: m, taus, identities: vec![id], ..SweepConfig::default() }
    }

    #[test]
    fn empty_corpus_gives_no_graph_reports() {
        let r = run_sweep(&GraphCorpus::default(), &SweepConfig::default()).unwrap();
        assert!(r.is_empty());
    }

    #[test]
    fn single_case() {
        let mut c = GraphCorpus::default();
        c.push(Graph::path(3), Provenance::Named("P3".into()));
        let r = run_sweep(&c, &one(IdentityId::ThmWq, vec![2], vec![int(1)])).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].verdict, Verdict::Pass);
        assert_eq!(r[0].elapsed_ms, None);
    }

    #[test]
    fn errors_become_reports() {
        let mut c = GraphCorpus::default();
        c.push(Graph::path(3), Provenance::Named("P3".into()));
        let r = run_sweep(&c, &one(IdentityId::ThmWa, vec![1, 2], vec![])).unwrap();
        assert_eq!(r.len(), 2);
        assert_eq!(r[0].verdict, Verdict::Error);
        assert!(r[0].detail["error"].contains("m must be"));
        assert_eq!(r[1].verdict, Verdict::Pass);
    }

    #[test]
    fn order_is_independent_of_thread_count() {
        let corpus = random_corpus(8, 3, 5, &ratio(1, 2), 11).unwrap();
        let mut cfg = SweepConfig { m_values: vec![2, 3], ..SweepConfig::default() };
        cfg.identities.push(IdentityId::Lem44);
        cfg.threads = Some(1);
        let serial = run_sweep(&corpus, &cfg).unwrap();
        cfg.threads = Some(4);
        let parallel = run_sweep(&corpus, &cfg).unwrap();
        let bytes = |r: &[VerificationReport]| {
            let mut b = Vec::new();
            write_jsonl(r, &mut b).unwrap();
            b
        };
        assert_eq!(bytes(&serial), bytes(&parallel));
        assert_eq!(serial.len(), 8 * 2 * (1 + 1 + 6) + 2 * 6);
        assert_eq!(serial[0].inputs.seed, Some(11));
    }

    #[test]
    fn corollary_case_counts() {
        let cfg = SweepConfig {
            m_values: vec![3],
            taus: vec![int(0)],
            identities: vec![IdentityId::Cor34, IdentityId::Cor35],
            ..SweepConfig::default()
        };
        let r = run_sweep(&GraphCorpus::default(), &cfg).unwrap();
        assert_eq!(r.len(), 4 + 12);
        assert!(r.iter().all(|r| r.verdict == Verdict::Pass));
    }
}
