//! Probe the unified A_tau formula over a seeded random corpus.
//!
//! `cargo run --release --example conjecture_sweep -- 40 7` uses 40 graphs
//! of order up to 7.

use walkmat::harness::{named_corpus, random_corpus, run_sweep, tally, IdentityId, SweepConfig, Verdict};
use walkmat::rational::ratio;

fn main() {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<usize>().expect("integer argument"));
    let count = args.next().unwrap_or(30);
    let n_max = args.next().unwrap_or(6);

    let mut corpus = named_corpus().filter_max_order(n_max);
    corpus.extend(random_corpus(count, 2, n_max, &ratio(1, 2), 2024).unwrap());
    let cfg = SweepConfig {
        m_values: vec![2, 3, 4],
        identities: vec![IdentityId::ConjTau, IdentityId::Conres],
        threads: walkmat::cli::threads_from_env(),
        ..SweepConfig::default()
    };
    let reports = run_sweep(&corpus, &cfg).unwrap();
    for (id, counts) in tally(&reports) {
        println!("{id}: {counts:?}");
    }
    let nonzero = reports
        .iter()
        .filter(|r| r.identity_id == IdentityId::ConjTau && r.verdict == Verdict::Pass && r.rhs != "0/1")
        .count();
    println!("{nonzero} conjecture cases with nonzero sides");
    for r in reports.iter().filter(|r| r.verdict == Verdict::Counterexample) {
        println!("counterexample: {} {:?}", r.identity_id, r.inputs);
    }
}
