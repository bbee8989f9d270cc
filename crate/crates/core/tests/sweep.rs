use walkmat::harness::{default_corpus, run_sweep, write_csv, write_jsonl, IdentityId, SweepConfig, Verdict};

/// The default sweep: 25 graphs, m = 2..5, the six default tau values.
#[test]
fn default_sweep_completes_and_serializes() {
    let corpus = default_corpus();
    assert_eq!(corpus.len(), 25);
    let cfg = SweepConfig::default();
    let reports = run_sweep(&corpus, &cfg).unwrap();
    assert_eq!(reports.len(), 25 * 4 * (2 + 6));
    for r in &reports {
        match r.identity_id {
            IdentityId::ConjTau => assert!(matches!(r.verdict, Verdict::Pass | Verdict::Counterexample)),
            _ => assert_eq!(r.verdict, Verdict::Pass, "{r:?}"),
        }
    }
    let mut json = Vec::new();
    write_jsonl(&reports, &mut json).unwrap();
    let mut csv = Vec::new();
    write_csv(&reports, &mut csv).unwrap();
    assert_eq!(String::from_utf8(json).unwrap().lines().count(), reports.len());
    assert_eq!(String::from_utf8(csv).unwrap().lines().count(), reports.len() + 1);

    let again = run_sweep(&corpus, &SweepConfig { threads: Some(2), ..cfg }).unwrap();
    assert_eq!(again, reports);
}
