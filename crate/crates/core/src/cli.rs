//! The `walkmat` command line.
//!
//! Exit codes: 0 on success (including reported counterexamples), 1 when a
//! proven identity FAILs, 2 on usage, parse or per-case errors.

use std::fs;
use std::io::{self, Write};
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::graph::Graph;
use crate::harness::{
    self, default_corpus, named_graph, random_corpus, read_jsonl, tally, walk_determinants, write_csv, write_jsonl,
    GraphCorpus, IdentityId, Provenance, SweepConfig, Verdict, VerificationReport,
};
use crate::linalg::{charpoly_exact, det_exact, walk_matrix, ExactMatrix};
use crate::poly::{parse_poly_spec, sylvester_resultant};
use crate::rational::{format_exact, format_pretty, format_short, parse_rational, Rational};

pub const THREADS_ENV: &str = "WALKMAT_THREADS";

#[derive(Debug, Parser)]
#[command(name = "walkmat", version, about = "Exact walk-matrix determinants of rooted path products")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Walk determinants of a graph, and of its rooted product with P_m.
    Walkdet(WalkdetArgs),
    /// Check identities over a corpus and print reports.
    Verify(VerifyArgs),
    /// Full sweep over the default corpus, written as JSON lines.
    Sweep(SweepArgs),
    /// Exact Sylvester resultant of two polynomial specs.
    Resultant(ResultantArgs),
    /// Exact characteristic polynomial of A_tau(G), A_tau(G o P_m) or a matrix dump.
    Charpoly(CharpolyArgs),
    /// Summarize or convert a JSON-lines report file.
    Report(ReportArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Debug, Args)]
pub struct WalkdetArgs {
    /// Edge-list file (`n`, then `i j` lines) or a one-line `n bits` encoding.
    pub graph: PathBuf,
    #[arg(long, default_value = "0", value_parser = parse_tau)]
    pub tau: Rational,
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long, value_enum, default_value = "pretty")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct CorpusArgs {
    /// Named graphs, comma separated (P2, P3, P4, C4, C5, K3, K4, paw, star3, asym6, asym7).
    #[arg(long, value_delimiter = ',')]
    pub named: Vec<String>,
    /// Seeded random graphs: `n=6,p=1/2,count=20,seed=7` (`n` may be a range `2..7`).
    #[arg(long, value_parser = parse_random_spec)]
    pub random: Option<RandomSpec>,
    /// Corpus file with one `n bits` encoding or graph name per line.
    #[arg(long)]
    pub corpus: Option<PathBuf>,
    /// Edge-list graph file.
    #[arg(long)]
    pub graph: Vec<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Identities, comma separated (e.g. thm-wq, conj, conres, lem44).
    #[arg(long, value_delimiter = ',', required = true, value_parser = parse_identity)]
    pub identity: Vec<IdentityId>,
    #[command(flatten)]
    pub corpus: CorpusArgs,
    /// Single value or inclusive range `a..b`.
    #[arg(long, default_value = "3", value_parser = parse_range)]
    pub m: RangeInclusive<usize>,
    /// Exact rationals, comma separated. Defaults to 0,1,1/2,2,-1,3/7.
    #[arg(long, value_delimiter = ',', value_parser = parse_tau)]
    pub tau: Vec<Rational>,
    #[arg(long, value_enum, default_value = "pretty")]
    pub format: Format,
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Record per-case wall time (makes output non-reproducible).
    #[arg(long)]
    pub timing: bool,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Identities; defaults to thm-wa, thm-wq, conj.
    #[arg(long, value_delimiter = ',', value_parser = parse_identity)]
    pub identity: Vec<IdentityId>,
    /// Corpus file; defaults to the 25-graph default corpus.
    #[arg(long)]
    pub corpus: Option<PathBuf>,
    #[arg(long, default_value = "2..5", value_parser = parse_range)]
    pub m: RangeInclusive<usize>,
    #[arg(long, value_delimiter = ',', value_parser = parse_tau)]
    pub tau: Vec<Rational>,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(long)]
    pub timing: bool,
}

#[derive(Debug, Args)]
pub struct ResultantArgs {
    /// e.g. `1 + -3*x + x^2`, `Z:m=5,tau=1/2`, `W4:n=2 + t*W4:n=1`.
    pub f: String,
    pub g: String,
    /// Value bound to `t` in either spec.
    #[arg(long, value_parser = parse_tau)]
    pub t: Option<Rational>,
}

#[derive(Debug, Args)]
pub struct CharpolyArgs {
    #[arg(long, conflicts_with = "matrix", required_unless_present = "matrix")]
    pub graph: Option<PathBuf>,
    /// Matrix dump: one row per line, entries `p/q` separated by spaces.
    #[arg(long)]
    pub matrix: Option<PathBuf>,
    #[arg(long, default_value = "0", value_parser = parse_tau)]
    pub tau: Rational,
    #[arg(long)]
    pub m: Option<usize>,
}

#[derive(Debug, Args)]
pub struct ReportArgs {
    pub input: PathBuf,
    #[arg(long, value_enum, default_value = "pretty")]
    pub format: Format,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RandomSpec {
    pub n: RangeInclusive<usize>,
    pub p: Rational,
    pub count: usize,
    pub seed: u64,
}

fn parse_tau(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| format!("`{s}` is not an exact rational: {e}"))
}

fn parse_identity(s: &str) -> Result<IdentityId, String> {
    IdentityId::from_str(s).map_err(|e| e.to_string())
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("bad integer `{t}`"));
    let r = match s.split_once("..") {
        Some((a, b)) => num(a)?..=num(b.trim_start_matches('='))?,
        None => num(s)?..=num(s)?,
    };
    if r.is_empty() {
        return Err(format!("empty range `{s}`"));
    }
    Ok(r)
}

fn parse_random_spec(s: &str) -> Result<RandomSpec, String> {
    let mut spec = RandomSpec { n: 6..=6, p: crate::rational::ratio(1, 2), count: 20, seed: 0 };
    for part in s.split(',').filter(|p| !p.trim().is_empty()) {
        let (k, v) = part.split_once('=').ok_or_else(|| format!("expected key=value, got `{part}`"))?;
        match k.trim() {
            "n" => spec.n = parse_range(v)?,
            "p" => spec.p = parse_tau(v.trim())?,
            "count" => spec.count = v.trim().parse().map_err(|_| format!("bad count `{v}`"))?,
            "seed" => spec.seed = v.trim().parse().map_err(|_| format!("bad seed `{v}`"))?,
            other => return Err(format!("unknown key `{other}`")),
        }
    }
    Ok(spec)
}

/// `WALKMAT_THREADS`, if set to a positive integer.
pub fn threads_from_env() -> Option<usize> {
    std::env::var(THREADS_ENV).ok()?.trim().parse().ok().filter(|&n| n > 0)
}

struct CliError(String);

impl<E: std::fmt::Display> From<E> for CliError {
    fn from(e: E) -> Self {
        CliError(e.to_string())
    }
}

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{e}");
                return 2;
            }
            let _ = write!(out, "{e}");
            return 0;
        }
    };
    let result = match cli.command {
        Command::Walkdet(a) => cmd_walkdet(&a, out),
        Command::Verify(a) => cmd_verify(&a, out, err),
        Command::Sweep(a) => cmd_sweep(&a, out, err),
        Command::Resultant(a) => cmd_resultant(&a, out),
        Command::Charpoly(a) => cmd_charpoly(&a, out),
        Command::Report(a) => cmd_report(&a, out, err),
    };
    match result {
        Ok(code) => code,
        Err(CliError(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

pub fn read_graph(path: &Path) -> Result<Graph, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let trimmed = text.trim();
    if !trimmed.contains('\n') && trimmed.split_whitespace().count() == 2 {
        if let Ok(g) = Graph::decode(trimmed) {
            return Ok(g);
        }
    }
    Graph::parse_edge_list(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn names(tau: &Rational) -> (&'static str, &'static str) {
    if *tau == Rational::from_integer(0.into()) {
        ("A", "W_A")
    } else if *tau == Rational::from_integer(1.into()) {
        ("Q", "W_Q")
    } else {
        ("A_tau", "W_tau")
    }
}

fn cmd_walkdet(a: &WalkdetArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let g = read_graph(&a.graph)?;
    let (mat, walk) = names(&a.tau);
    let at = g.a_tau(&a.tau);
    let det_a = det_exact(&at)?;
    let det_w = det_exact(&walk_matrix(&at)?)?;
    let full = match a.m {
        Some(m) => Some((m, walk_determinants(&g, m, &a.tau)?)),
        None => None,
    };
    if a.format == Format::Json {
        let mut obj = json!({
            "graph": g.encode(),
            "graph_hash": g.digest(),
            "tau": format_exact(&a.tau),
            "det_a_tau": format_exact(&det_a),
            "det_walk": format_exact(&det_w),
        });
        if let Some((m, d)) = &full {
            obj["m"] = json!(m);
            obj["det_middle"] = json!(format_exact(&d.det_middle));
            obj["lhs"] = json!(format_exact(&d.det_walk_product));
            obj["rhs"] = json!(format_exact(&d.rhs));
        }
        writeln!(out, "{obj}")?;
        return Ok(0);
    }
    writeln!(out, "graph: n={} edges={} hash={}", g.order(), g.edge_count(), g.digest())?;
    writeln!(out, "tau = {}", format_short(&a.tau))?;
    writeln!(out, "det {mat} = {}", format_pretty(&det_a))?;
    writeln!(out, "det {walk} = {}", format_pretty(&det_w))?;
    if let Some((m, d)) = full {
        writeln!(out, "m = {m}")?;
        writeln!(out, "det {walk}(G o P_{m}) = {}", format_pretty(&d.det_walk_product))?;
        writeln!(out, "  det {mat}(G)^{} = {}^{}", m / 2, format_pretty(&d.det_a_tau), m / 2)?;
        writeln!(
            out,
            "  det((1-tau^2)I + tau A_tau(G))^{} = {}^{}",
            (m - 1) / 2,
            format_pretty(&d.det_middle),
            (m - 1) / 2
        )?;
        writeln!(out, "  det {walk}(G)^{m} = {}^{m}", format_pretty(&d.det_walk))?;
        writeln!(out, "rhs = {}", format_pretty(&d.rhs))?;
        let verdict = if d.rhs.is_integer() && d.rhs == Rational::from_integer(0.into()) {
            if d.det_walk_product == d.rhs { "|lhs| = |rhs| (both zero)".to_string() } else { "|lhs| != |rhs|".into() }
        } else if d.det_walk_product == d.rhs {
            "|lhs| = |rhs|, sign +1".into()
        } else if d.det_walk_product == -d.rhs.clone() {
            "|lhs| = |rhs|, sign -1".into()
        } else {
            "|lhs| != |rhs|".into()
        };
        writeln!(out, "{verdict}")?;
    }
    Ok(0)
}

fn build_corpus(c: &CorpusArgs) -> Result<Option<GraphCorpus>, CliError> {
    let mut corpus = GraphCorpus::default();
    let mut any = false;
    for name in &c.named {
        any = true;
        let g = named_graph(name).ok_or_else(|| CliError(format!("unknown named graph `{name}`")))?;
        corpus.push(g, Provenance::Named(name.clone()));
    }
    if let Some(r) = &c.random {
        any = true;
        corpus.extend(random_corpus(r.count, *r.n.start(), *r.n.end(), &r.p, r.seed)?);
    }
    if let Some(path) = &c.corpus {
        any = true;
        corpus.extend(read_corpus(path)?);
    }
    for path in &c.graph {
        any = true;
        corpus.push(read_graph(path)?, Provenance::Named(path.display().to_string()));
    }
    Ok(any.then_some(corpus))
}

fn read_corpus(path: &Path) -> Result<GraphCorpus, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError(format!("{}: {e}", path.display())))?;
    GraphCorpus::parse(&text).map_err(|e| CliError(format!("{}: {e}", path.display())))
}

fn emit(reports: &[VerificationReport], format: Format, output: Option<&Path>, out: &mut dyn Write) -> Result<(), CliError> {
    let mut buf = Vec::new();
    match format {
        Format::Json => write_jsonl(reports, &mut buf)?,
        Format::Csv => write_csv(reports, &mut buf)?,
        Format::Pretty => write_pretty(reports, &mut buf)?,
    }
    match output {
        Some(path) => fs::write(path, buf).map_err(|e| CliError(format!("{}: {e}", path.display())))?,
        None => out.write_all(&buf)?,
    }
    Ok(())
}

fn write_pretty(reports: &[VerificationReport], out: &mut dyn Write) -> io::Result<()> {
    for r in reports {
        let i = &r.inputs;
        let mut what = Vec::new();
        if let Some(g) = &i.graph {
            what.push(format!("G=[{g}]"));
        }
        if let Some(m) = i.m {
            what.push(format!("m={m}"));
        }
        if let Some(t) = &i.tau {
            what.push(format!("tau={}", shorten(t)));
        }
        for (k, v) in &i.params {
            what.push(format!("{k}={}", shorten(v)));
        }
        writeln!(out, "{:<13} {:<14} sign={:<3} {}", r.identity_id.as_str(), r.verdict.as_str(), r.sign.to_string(), what.join(" "))?;
        if matches!(r.verdict, Verdict::Fail | Verdict::Counterexample | Verdict::Error) {
            writeln!(out, "    lhs = {}", r.lhs)?;
            writeln!(out, "    rhs = {}", r.rhs)?;
            for (k, v) in &r.detail {
                writeln!(out, "    {k} = {v}")?;
            }
        }
    }
    write_tally(reports, out)
}

fn shorten(s: &str) -> String {
    s.strip_suffix("/1").unwrap_or(s).to_string()
}

fn write_tally(reports: &[VerificationReport], out: &mut dyn Write) -> io::Result<()> {
    writeln!(out, "-- {} report(s)", reports.len())?;
    for (id, counts) in tally(reports) {
        let parts: Vec<String> = counts.iter().map(|(v, c)| format!("{v}={c}")).collect();
        writeln!(out, "   {id}: {}", parts.join(" "))?;
    }
    Ok(())
}

/// 1 on FAIL, 2 on ERROR, else 0; counterexamples get a notice on `err`.
fn exit_code(reports: &[VerificationReport], err: &mut dyn Write) -> i32 {
    let count = |v: Verdict| reports.iter().filter(|r| r.verdict == v).count();
    let (fails, errors, cex) = (count(Verdict::Fail), count(Verdict::Error), count(Verdict::Counterexample));
    if cex > 0 {
        let _ = writeln!(err, "COUNTEREXAMPLE: {cex} case(s) contradict a conjectural identity; see the report payloads");
    }
    if fails > 0 {
        let _ = writeln!(err, "FAIL: {fails} case(s) of a proven identity did not hold");
        1
    } else if errors > 0 {
        let _ = writeln!(err, "ERROR: {errors} case(s) could not be evaluated");
        2
    } else {
        0
    }
}

fn sweep_config(
    identities: Vec<IdentityId>,
    m: &RangeInclusive<usize>,
    tau: &[Rational],
    timing: bool,
) -> SweepConfig {
    let mut cfg = SweepConfig {
        m_values: m.clone().collect(),
        threads: threads_from_env(),
        timing,
        ..SweepConfig::default()
    };
    if !identities.is_empty() {
        cfg.identities = identities;
    }
    if !tau.is_empty() {
        cfg.taus = tau.to_vec();
    }
    cfg
}

fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    let needs_graph = a.identity.iter().any(|id| id.needs_graph());
    let corpus = match build_corpus(&a.corpus)? {
        Some(c) => c,
        None if needs_graph => default_corpus(),
        None => GraphCorpus::default(),
    };
    let cfg = sweep_config(a.identity.clone(), &a.m, &a.tau, a.timing);
    let reports = harness::run_sweep(&corpus, &cfg)?;
    emit(&reports, a.format, a.output.as_deref(), out)?;
    Ok(exit_code(&reports, err))
}

fn cmd_sweep(a: &SweepArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    let corpus = match &a.corpus {
        Some(path) => read_corpus(path)?,
        None => default_corpus(),
    };
    let cfg = sweep_config(a.identity.clone(), &a.m, &a.tau, a.timing);
    let reports = harness::run_sweep(&corpus, &cfg)?;
    emit(&reports, a.format, a.output.as_deref(), out)?;
    if a.output.is_some() {
        write_tally(&reports, err)?;
    }
    Ok(exit_code(&reports, err))
}

fn cmd_resultant(a: &ResultantArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let f = parse_poly_spec(&a.f, a.t.as_ref())?;
    let g = parse_poly_spec(&a.g, a.t.as_ref())?;
    let r = sylvester_resultant(&f, &g)?;
    writeln!(out, "f = {f}")?;
    writeln!(out, "g = {g}")?;
    writeln!(out, "Res(f, g) = {}", format_pretty(&r))?;
    Ok(0)
}

fn cmd_charpoly(a: &CharpolyArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let matrix = match (&a.graph, &a.matrix) {
        (Some(path), _) => {
            let g = read_graph(path)?;
            match a.m {
                Some(m) => g.rooted_product_path(m)?.a_tau(&a.tau),
                None => g.a_tau(&a.tau),
            }
        }
        (None, Some(path)) => {
            let text = fs::read_to_string(path).map_err(|e| CliError(format!("{}: {e}", path.display())))?;
            ExactMatrix::parse_dump(&text)?
        }
        (None, None) => return Err(CliError("one of --graph or --matrix is required".into())),
    };
    writeln!(out, "{}", charpoly_exact(&matrix)?)?;
    Ok(0)
}

fn cmd_report(a: &ReportArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    let file = fs::File::open(&a.input).map_err(|e| CliError(format!("{}: {e}", a.input.display())))?;
    let reports = read_jsonl(io::BufReader::new(file))?;
    emit(&reports, a.format, a.output.as_deref(), out)?;
    Ok(exit_code(&reports, err))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("2..4").unwrap(), 2..=4);
        assert_eq!(parse_range("2..=4").unwrap(), 2..=4);
        assert_eq!(parse_range("3").unwrap(), 3..=3);
        assert!(parse_range("4..2").is_err());
        assert!(parse_range("x").is_err());
    }

    #[test]
    fn random_specs() {
        let s = parse_random_spec("n=6,p=1/2,count=20,seed=7").unwrap();
        assert_eq!(s, RandomSpec { n: 6..=6, p: crate::rational::ratio(1, 2), count: 20, seed: 7 });
        assert!(parse_random_spec("p=0.5").is_err());
        assert!(parse_random_spec("q=1").is_err());
    }

    #[test]
    fn tau_must_be_exact() {
        assert!(parse_tau("3/7").is_ok());
        assert!(parse_tau("0.5").is_err());
    }
}
