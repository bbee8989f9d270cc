//! Verification reports and their JSON-lines / CSV serializations.

use std::collections::BTreeMap;
use std::fmt;
use std::io::{BufRead, Write};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::HarnessError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum IdentityId {
    ThmWa,
    ThmWq,
    ConjTau,
    Conres,
    Prop32,
    Cor34,
    Cor35,
    Lem44,
    Prop45,
    Lem29,
    Lem21,
    Lem25,
    Lem28Factor,
}

impl IdentityId {
    pub const ALL: [IdentityId; 13] = [
        IdentityId::ThmWa,
        IdentityId::ThmWq,
        IdentityId::ConjTau,
        IdentityId::Conres,
        IdentityId::Prop32,
        IdentityId::Cor34,
        IdentityId::Cor35,
        IdentityId::Lem44,
        IdentityId::Prop45,
        IdentityId::Lem29,
        IdentityId::Lem21,
        IdentityId::Lem25,
        IdentityId::Lem28Factor,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            IdentityId::ThmWa => "THM_WA",
            IdentityId::ThmWq => "THM_WQ",
            IdentityId::ConjTau => "CONJ_TAU",
            IdentityId::Conres => "CONRES",
            IdentityId::Prop32 => "PROP32",
            IdentityId::Cor34 => "COR34",
            IdentityId::Cor35 => "COR35",
            IdentityId::Lem44 => "LEM44",
            IdentityId::Prop45 => "PROP45",
            IdentityId::Lem29 => "LEM29",
            IdentityId::Lem21 => "LEM21",
            IdentityId::Lem25 => "LEM25",
            IdentityId::Lem28Factor => "LEM28_FACTOR",
        }
    }

    /// Identities that run once per corpus graph.
    pub fn needs_graph(self) -> bool {
        matches!(
            self,
            IdentityId::ThmWa
                | IdentityId::ThmWq
                | IdentityId::ConjTau
                | IdentityId::Prop32
                | IdentityId::Prop45
                | IdentityId::Lem29
                | IdentityId::Lem28Factor
        )
    }

    /// Conjectural statements report mismatches as counterexamples.
    pub fn is_conjectural(self) -> bool {
        matches!(self, IdentityId::ConjTau | IdentityId::Conres)
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for IdentityId {
    type Err = HarnessError;

    /// Accepts the report id (`THM_WQ`) or its kebab-case form (`thm-wq`),
    /// plus `conj` as shorthand for `CONJ_TAU`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let norm = s.trim().to_ascii_uppercase().replace('-', "_");
        if norm == "CONJ" || norm == "CONJECTURE" {
            return Ok(IdentityId::ConjTau);
        }
        if norm == "LEM28" {
            return Ok(IdentityId::Lem28Factor);
        }
        IdentityId::ALL
            .into_iter()
            .find(|id| id.as_str() == norm)
            .ok_or_else(|| HarnessError::InvalidParameter(format!("unknown identity `{s}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Pass,
    Fail,
    SkippedZero,
    Counterexample,
    Error,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::SkippedZero => "SKIPPED_ZERO",
            Verdict::Counterexample => "COUNTEREXAMPLE",
            Verdict::Error => "ERROR",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Observed sign `lhs / rhs` for identities stated up to sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+1")]
    Plus,
    #[serde(rename = "-1")]
    Minus,
    #[serde(rename = "NA")]
    NotApplicable,
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
            Sign::NotApplicable => "NA",
        })
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Inputs {
    pub graph_hash: Option<String>,
    /// Compact `"n bits"` encoding of the base graph.
    pub graph: Option<String>,
    pub n: Option<usize>,
    pub m: Option<usize>,
    pub tau: Option<String>,
    pub seed: Option<u64>,
    /// Identity-specific parameters such as `lambda` or `t`.
    pub params: BTreeMap<String, String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub identity_id: IdentityId,
    pub inputs: Inputs,
    pub lhs: String,
    pub rhs: String,
    /// `None` for exact comparisons.
    pub tolerance: Option<f64>,
    pub sign: Sign,
    pub verdict: Verdict,
    /// Exact intermediate quantities, always kept for counterexamples.
    pub detail: BTreeMap<String, String>,
    pub elapsed_ms: Option<u64>,
}

impl VerificationReport {
    pub fn error(identity_id: IdentityId, inputs: Inputs, err: &HarnessError) -> Self {
        let mut detail = BTreeMap::new();
        detail.insert("error".to_string(), err.to_string());
        Self {
            identity_id,
            inputs,
            lhs: String::new(),
            rhs: String::new(),
            tolerance: None,
            sign: Sign::NotApplicable,
            verdict: Verdict::Error,
            detail,
            elapsed_ms: None,
        }
    }

    pub fn without_timing(mut self) -> Self {
        self.elapsed_ms = None;
        self
    }
}

pub fn write_jsonl<W: Write>(reports: &[VerificationReport], mut out: W) -> Result<(), HarnessError> {
    for r in reports {
        serde_json::to_writer(&mut out, r).map_err(|e| HarnessError::Io(e.to_string()))?;
        out.write_all(b"\n").map_err(|e| HarnessError::Io(e.to_string()))?;
    }
    Ok(())
}

pub fn read_jsonl<R: BufRead>(input: R) -> Result<Vec<VerificationReport>, HarnessError> {
    let mut out = Vec::new();
    for (idx, line) in input.lines().enumerate() {
        let line = line.map_err(|e| HarnessError::Io(e.to_string()))?;
        if line.trim().is_empty() {
            continue;
        }
        let report = serde_json::from_str(&line)
            .map_err(|e| HarnessError::InvalidParameter(format!("report line {}: {e}", idx + 1)))?;
        out.push(report);
    }
    Ok(out)
}

pub const CSV_HEADER: [&str; 10] = [
    "identity_id",
    "graph_hash",
    "n",
    "m",
    "tau",
    "seed",
    "params",
    "sign",
    "verdict",
    "elapsed_ms",
];

/// One summary row per report; the exact sides stay in the JSON lines.
pub fn write_csv<W: Write>(reports: &[VerificationReport], out: W) -> Result<(), HarnessError> {
    let io = |e: csv::Error| HarnessError::Io(e.to_string());
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER).map_err(io)?;
    for r in reports {
        let opt = |v: Option<String>| v.unwrap_or_default();
        let params: Vec<String> = r.inputs.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        w.write_record([
            r.identity_id.to_string(),
            opt(r.inputs.graph_hash.clone()),
            opt(r.inputs.n.map(|v| v.to_string())),
            opt(r.inputs.m.map(|v| v.to_string())),
            opt(r.inputs.tau.clone()),
            opt(r.inputs.seed.map(|v| v.to_string())),
            params.join(";"),
            r.sign.to_string(),
            r.verdict.to_string(),
            opt(r.elapsed_ms.map(|v| v.to_string())),
        ])
        .map_err(io)?;
    }
    w.flush().map_err(|e| HarnessError::Io(e.to_string()))
}

/// Verdict counts per identity, in identity order.
pub fn tally(reports: &[VerificationReport]) -> BTreeMap<IdentityId, BTreeMap<&'static str, usize>> {
    let mut out: BTreeMap<IdentityId, BTreeMap<&'static str, usize>> = BTreeMap::new();
    for r in reports {
        *out.entry(r.identity_id).or_default().entry(r.verdict.as_str()).or_default() += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> VerificationReport {
        let mut params = BTreeMap::new();
        params.insert("lambda".to_string(), "5/2".to_string());
        VerificationReport {
            identity_id: IdentityId::Lem28Factor,
            inputs: Inputs {
                graph_hash: Some("00ff".into()),
                graph: Some("3 110".into()),
                n: Some(3),
                m: Some(2),
                tau: Some("1/2".into()),
                seed: None,
                params,
            },
            lhs: "1/1".into(),
            rhs: "-1/1".into(),
            tolerance: None,
            sign: Sign::Minus,
            verdict: Verdict::SkippedZero,
            detail: BTreeMap::new(),
            elapsed_ms: Some(3),
        }
    }

    #[test]
    fn json_uses_spec_spellings() {
        let text = serde_json::to_string(&sample()).unwrap();
        assert!(text.starts_with("{\"identity_id\":\"LEM28_FACTOR\",\"inputs\":{\"graph_hash\""));
        assert!(text.contains("\"sign\":\"-1\""));
        assert!(text.contains("\"verdict\":\"SKIPPED_ZERO\""));
    }

    #[test]
    fn jsonl_round_trip() {
        let reports = vec![sample(), sample().without_timing()];
        let mut buf = Vec::new();
        write_jsonl(&reports, &mut buf).unwrap();
        let back = read_jsonl(buf.as_slice()).unwrap();
        assert_eq!(back, reports);
        assert!(read_jsonl("{not json}\n".as_bytes()).is_err());
    }

    #[test]
    fn csv_summary() {
        let mut buf = Vec::new();
        write_csv(&[sample()], &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next().unwrap(), CSV_HEADER.join(","));
        assert_eq!(lines.next().unwrap(), "LEM28_FACTOR,00ff,3,2,1/2,,lambda=5/2,-1,SKIPPED_ZERO,3");
    }

    #[test]
    fn identity_names() {
        assert_eq!("thm-wq".parse::<IdentityId>().unwrap(), IdentityId::ThmWq);
        assert_eq!("CONJ_TAU".parse::<IdentityId>().unwrap(), IdentityId::ConjTau);
        assert_eq!("conj".parse::<IdentityId>().unwrap(), IdentityId::ConjTau);
        assert_eq!("lem28-factor".parse::<IdentityId>().unwrap(), IdentityId::Lem28Factor);
        assert!("thm-xx".parse::<IdentityId>().is_err());
        for id in IdentityId::ALL {
            assert_eq!(serde_json::to_string(&id).unwrap(), format!("\"{id}\""));
        }
    }
}
