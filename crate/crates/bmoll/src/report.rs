//! Verdict records, scan reports, and the text/CSV/JSON emitters.
//!
//! Every verdict is decided by exact arithmetic before it reaches this
//! module; display strings are rendered here and carry no authority. Output
//! is deterministic: verdicts sort by `(check, m, i)`, summaries sort by
//! check, and nothing timestamped appears outside the wall-time footer
//! field (text/JSON only; CSV has none).

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::exact::Value;

/// Identifier of one check family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CheckId {
    /// Reverse ultra log-concavity: `c_i(m) < (m-i+1)(i+1)/((m-i)i)`.
    Rulc,
    /// Lower bound: `c_i(m) > (m-i+1)(i+1)(m+i)/((m-i)i(m+i+1))`.
    Lower,
    /// Log-concavity of `{i! d_i(m)}`: `c_i(m) > (i+1)/i`.
    FactorialLc,
    /// Two-sided bracket `(m+i)/(m+i+1) < c_i(m)/u_i(m) < 1`.
    Sandwich,
    /// Strict upper ratio bound `d_i(m+1)/d_i(m) < T(m,i)` on the interior.
    RatioUpper,
    /// Strict lower ratio bound `d_i(m+1)/d_i(m) > Q(m,i)` on the interior.
    RatioLower,
    /// Boundary equalities: the ratio equals `T` exactly at `i=0` and `i=m`.
    RatioBoundary,
    /// The auxiliary-bound ordering `T(m,i) < F(m,i)`.
    LemmaTf,
    /// Discriminant factorization of the upper-bound quadratic.
    DeltaRulc,
    /// Discriminant factorization of the lower-bound quadratic.
    DeltaLower,
    /// Factorization of `G^2 - H^2`, with positivity of each factor.
    G2H2,
    /// `X^2 - Y^2 = G - H` as a single-radicand identity.
    Xy,
    /// The larger root of the upper-bound quadratic coincides with `T`.
    X2T,
    /// The larger root of the lower-bound quadratic coincides with `Q`.
    X2Q,
    /// Closed form and positivity of the induction remainder `R(m,i)`.
    RPos,
    /// `U^2 - V^2 = 4m^2(4m+5)` with `U > V > 0` (the `i = m` step).
    Uv,
    /// Residual of the index-lowering companion recurrence is exactly zero.
    RecLowering,
    /// Residual of the three-row recurrence in m is exactly zero.
    RecThreeRow,
    /// Closed-form row equals the recurrence row element-wise.
    CrossPath,
    /// Conjecture: `{d_{i+1}d_{i-1}/d_i^2}` is log-concave.
    Conj1,
    /// Conjecture: the same sequence is reverse ultra log-concave.
    Conj2,
    /// Bessel rows are log-concave and reverse ultra log-concave.
    Bessel,
    /// Observation only: `c_i(m)/u_i(m)` increases in `i`.
    Mono,
}

impl CheckId {
    pub fn name(self) -> &'static str {
        match self {
            CheckId::Rulc => "rulc",
            CheckId::Lower => "lower",
            CheckId::FactorialLc => "factorial-lc",
            CheckId::Sandwich => "sandwich",
            CheckId::RatioUpper => "t",
            CheckId::RatioLower => "q",
            CheckId::RatioBoundary => "t-eq",
            CheckId::LemmaTf => "tf",
            CheckId::DeltaRulc => "delta-rulc",
            CheckId::DeltaLower => "delta-lower",
            CheckId::G2H2 => "g2h2",
            CheckId::Xy => "xy",
            CheckId::X2T => "x2-t",
            CheckId::X2Q => "x2-q",
            CheckId::RPos => "r-pos",
            CheckId::Uv => "uv",
            CheckId::RecLowering => "rec-lowering",
            CheckId::RecThreeRow => "rec-triple",
            CheckId::CrossPath => "crosspath",
            CheckId::Conj1 => "conj1",
            CheckId::Conj2 => "conj2",
            CheckId::Bessel => "bessel",
            CheckId::Mono => "mono",
        }
    }

    pub fn parse(name: &str) -> Option<CheckId> {
        ALL_CHECKS.iter().copied().find(|c| c.name() == name)
    }

    /// Observation checks record failures as findings, not errors.
    pub fn is_observation(self) -> bool {
        matches!(self, CheckId::Mono)
    }

    /// The proof-identity grid checks.
    pub fn identities() -> &'static [CheckId] {
        &[
            CheckId::DeltaRulc,
            CheckId::DeltaLower,
            CheckId::G2H2,
            CheckId::Xy,
            CheckId::X2T,
            CheckId::X2Q,
            CheckId::RPos,
            CheckId::Uv,
        ]
    }
}

pub const ALL_CHECKS: [CheckId; 23] = [
    CheckId::Rulc,
    CheckId::Lower,
    CheckId::FactorialLc,
    CheckId::Sandwich,
    CheckId::RatioUpper,
    CheckId::RatioLower,
    CheckId::RatioBoundary,
    CheckId::LemmaTf,
    CheckId::DeltaRulc,
    CheckId::DeltaLower,
    CheckId::G2H2,
    CheckId::Xy,
    CheckId::X2T,
    CheckId::X2Q,
    CheckId::RPos,
    CheckId::Uv,
    CheckId::RecLowering,
    CheckId::RecThreeRow,
    CheckId::CrossPath,
    CheckId::Conj1,
    CheckId::Conj2,
    CheckId::Bessel,
    CheckId::Mono,
];

impl Serialize for CheckId {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

/// One exact verdict at one `(check, m, i)` cell.
///
/// `pass` and `strict` come from exact arithmetic only. `margin_sign` is the
/// exact sign of the inequality slack (for equality claims it is the sign of
/// `rhs - lhs`, so zero means equality holds). Vacuous cells have no values.
#[derive(Debug, Clone)]
pub struct CellVerdict {
    pub check: CheckId,
    pub m: u32,
    pub i: Option<u32>,
    pub pass: bool,
    pub strict: bool,
    pub vacuous: bool,
    pub lhs: Option<Value>,
    pub rhs: Option<Value>,
    pub margin_sign: i8,
}

impl CellVerdict {
    /// A vacuous pass: the index range for this check is empty at `m`.
    pub fn vacuous(check: CheckId, m: u32) -> CellVerdict {
        CellVerdict {
            check,
            m,
            i: None,
            pass: true,
            strict: false,
            vacuous: true,
            lhs: None,
            rhs: None,
            margin_sign: 0,
        }
    }

    fn sort_key(&self) -> (CheckId, u32, u32, bool) {
        // i = None sorts before indexed cells at the same m
        (self.check, self.m, self.i.unwrap_or(0), self.i.is_some())
    }
}

/// Configuration echo carried in every report so runs are reproducible.
#[derive(Debug, Clone, Serialize, Default)]
pub struct ConfigEcho {
    pub command: String,
    pub m_min: u32,
    pub m_max: u32,
    pub checks: Vec<String>,
    pub float_digits: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cache_path: Option<String>,
    /// Binomial-parameter convention for the conjecture scan (the reindexed
    /// subsequence gets `n = m-4` unless overridden).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub conjecture_n: Option<String>,
}

/// Per-check tallies.
#[derive(Debug, Clone, Copy, Default, Serialize)]
pub struct CheckCount {
    pub cells: u64,
    pub passes: u64,
    pub failures: u64,
    pub vacuous: u64,
}

/// Aggregate over a scan: tallies, failing cells (with exact witnesses),
/// observation findings, and wall time.
#[derive(Debug, Clone)]
pub struct ScanReport {
    pub config: ConfigEcho,
    pub counts: BTreeMap<CheckId, CheckCount>,
    pub failures: Vec<CellVerdict>,
    pub findings: Vec<CellVerdict>,
    pub wall_time_ms: u64,
}

impl ScanReport {
    /// Build a report from raw verdicts: tally, split failures from
    /// observation findings, and sort deterministically.
    pub fn from_verdicts(config: ConfigEcho, verdicts: Vec<CellVerdict>) -> ScanReport {
        let mut counts: BTreeMap<CheckId, CheckCount> = BTreeMap::new();
        let mut failures = Vec::new();
        let mut findings = Vec::new();
        for v in verdicts {
            let entry = counts.entry(v.check).or_default();
            entry.cells += 1;
            if v.vacuous {
                entry.vacuous += 1;
            }
            if v.pass {
                entry.passes += 1;
            } else {
                entry.failures += 1;
                if v.check.is_observation() {
                    findings.push(v);
                } else {
                    failures.push(v);
                }
            }
        }
        failures.sort_by_key(|v| v.sort_key());
        findings.sort_by_key(|v| v.sort_key());
        ScanReport {
            config,
            counts,
            failures,
            findings,
            wall_time_ms: 0,
        }
    }

    /// True when no non-observation check failed.
    pub fn all_passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Consistency of the tallies with the failure list (used by tests).
    pub fn tallies_consistent(&self) -> bool {
        let failure_total: u64 = self
            .counts
            .iter()
            .filter(|(c, _)| !c.is_observation())
            .map(|(_, n)| n.failures)
            .sum();
        (failure_total == 0) == self.failures.is_empty()
            && failure_total == self.failures.len() as u64
    }

    /// Human-readable summary with one row per check and a wall-time footer.
    pub fn to_text(&self) -> String {
        let digits = self.config.float_digits;
        let mut out = String::new();
        let _ = writeln!(
            out,
            "# {} m={}..{} checks={}",
            self.config.command,
            self.config.m_min,
            self.config.m_max,
            self.config.checks.join(",")
        );
        if let Some(n) = &self.config.conjecture_n {
            let _ = writeln!(out, "# conjecture binomial parameter: n = {n}");
        }
        let _ = writeln!(
            out,
            "{:<12} {:>10} {:>10} {:>10} {:>8}",
            "check", "cells", "passes", "failures", "vacuous"
        );
        for (check, n) in &self.counts {
            let _ = writeln!(
                out,
                "{:<12} {:>10} {:>10} {:>10} {:>8}",
                check.name(),
                n.cells,
                n.passes,
                n.failures,
                n.vacuous
            );
        }
        for v in &self.failures {
            let _ = writeln!(out, "FAIL {}", verdict_line(v, digits));
        }
        for v in &self.findings {
            let _ = writeln!(out, "FINDING {}", verdict_line(v, digits));
        }
        let _ = writeln!(
            out,
            "result: {}",
            if self.all_passed() { "pass" } else { "FAIL" }
        );
        let _ = writeln!(out, "wall-time-ms: {}", self.wall_time_ms);
        out
    }

    /// CSV dump of every failing or finding cell plus per-check summary
    /// rows; excludes wall time so identical configs emit identical bytes.
    pub fn to_csv(&self) -> String {
        let digits = self.config.float_digits;
        let mut out = String::from("record,check,m,i,pass,strict,vacuous,margin_sign,lhs,rhs\n");
        for (check, n) in &self.counts {
            let _ = writeln!(
                out,
                "summary,{},,,{},,,,{},{}",
                check.name(),
                n.failures == 0,
                n.cells,
                n.passes
            );
        }
        for (label, list) in [("failure", &self.failures), ("finding", &self.findings)] {
            for v in list {
                let _ = writeln!(
                    out,
                    "{label},{},{},{},{},{},{},{},{},{}",
                    v.check.name(),
                    v.m,
                    v.i.map(|i| i.to_string()).unwrap_or_default(),
                    v.pass,
                    v.strict,
                    v.vacuous,
                    v.margin_sign,
                    v.lhs
                        .as_ref()
                        .map(|x| x.display(digits))
                        .unwrap_or_default(),
                    v.rhs
                        .as_ref()
                        .map(|x| x.display(digits))
                        .unwrap_or_default(),
                );
            }
        }
        out
    }

    /// Pretty JSON document; schema documented in `docs/report-schema.md`.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization") + "\n"
    }
}

impl Serialize for ScanReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let digits = self.config.float_digits;
        let mut st = serializer.serialize_struct("ScanReport", 6)?;
        st.serialize_field("config", &self.config)?;
        let summary: Vec<SummaryDoc> = self
            .counts
            .iter()
            .map(|(check, n)| SummaryDoc {
                check: check.name(),
                cells: n.cells,
                passes: n.passes,
                failures: n.failures,
                vacuous: n.vacuous,
            })
            .collect();
        st.serialize_field("summary", &summary)?;
        let failures: Vec<VerdictDoc> = self
            .failures
            .iter()
            .map(|v| VerdictDoc::new(v, digits))
            .collect();
        st.serialize_field("failures", &failures)?;
        let findings: Vec<VerdictDoc> = self
            .findings
            .iter()
            .map(|v| VerdictDoc::new(v, digits))
            .collect();
        st.serialize_field("findings", &findings)?;
        st.serialize_field("all_passed", &self.all_passed())?;
        st.serialize_field("wall_time_ms", &self.wall_time_ms)?;
        st.end()
    }
}

#[derive(Serialize)]
struct SummaryDoc {
    check: &'static str,
    cells: u64,
    passes: u64,
    failures: u64,
    vacuous: u64,
}

#[derive(Serialize)]
struct VerdictDoc {
    check: &'static str,
    m: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    i: Option<u32>,
    pass: bool,
    strict: bool,
    vacuous: bool,
    margin_sign: i8,
    #[serde(skip_serializing_if = "Option::is_none")]
    lhs: Option<ValueDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    rhs: Option<ValueDoc>,
}

impl VerdictDoc {
    fn new(v: &CellVerdict, digits: u32) -> VerdictDoc {
        VerdictDoc {
            check: v.check.name(),
            m: v.m,
            i: v.i,
            pass: v.pass,
            strict: v.strict,
            vacuous: v.vacuous,
            margin_sign: v.margin_sign,
            lhs: v.lhs.as_ref().map(|x| ValueDoc::new(x, digits)),
            rhs: v.rhs.as_ref().map(|x| ValueDoc::new(x, digits)),
        }
    }
}

/// Exact value rendering for JSON: rationals carry decimal-digit
/// numerator/denominator strings, surds carry their canonical exact form;
/// both carry the display rendering.
#[derive(Serialize)]
#[serde(untagged)]
enum ValueDoc {
    Rational {
        numerator: String,
        denominator: String,
        display: String,
    },
    Surd {
        exact: String,
        display: String,
    },
}

impl ValueDoc {
    fn new(v: &Value, digits: u32) -> ValueDoc {
        match v.as_fraction_strings() {
            Some((numerator, denominator)) => ValueDoc::Rational {
                numerator,
                denominator,
                display: v.display(digits),
            },
            None => ValueDoc::Surd {
                exact: v.exact(),
                display: v.display(digits),
            },
        }
    }
}

fn verdict_line(v: &CellVerdict, digits: u32) -> String {
    let cell = match v.i {
        Some(i) => format!("m={} i={i}", v.m),
        None => format!("m={}", v.m),
    };
    let values = match (&v.lhs, &v.rhs) {
        (Some(l), Some(r)) => format!(
            " lhs={} ({}) rhs={} ({})",
            l.display(digits),
            l.exact(),
            r.display(digits),
            r.exact()
        ),
        _ => String::new(),
    };
    format!(
        "{} {cell}{values} margin_sign={}{}",
        v.check.name(),
        v.margin_sign,
        if v.vacuous { " vacuous" } else { "" }
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn sample_verdict(pass: bool, check: CheckId) -> CellVerdict {
        CellVerdict {
            check,
            m: 2,
            i: Some(1),
            pass,
            strict: pass,
            vacuous: false,
            lhs: Some(Value::from(rat(25, 7))),
            rhs: Some(Value::from(rat(4, 1))),
            margin_sign: if pass { 1 } else { -1 },
        }
    }

    #[test]
    fn check_names_round_trip() {
        for check in ALL_CHECKS {
            assert_eq!(CheckId::parse(check.name()), Some(check));
        }
        assert_eq!(CheckId::parse("nope"), None);
    }

    #[test]
    fn tallies_and_failure_split() {
        let report = ScanReport::from_verdicts(
            ConfigEcho::default(),
            vec![
                sample_verdict(true, CheckId::Rulc),
                sample_verdict(false, CheckId::Rulc),
                sample_verdict(false, CheckId::Mono),
                CellVerdict::vacuous(CheckId::Conj1, 4),
            ],
        );
        assert_eq!(report.counts[&CheckId::Rulc].cells, 2);
        assert_eq!(report.counts[&CheckId::Rulc].failures, 1);
        assert_eq!(report.counts[&CheckId::Conj1].vacuous, 1);
        assert_eq!(report.failures.len(), 1, "observation failure is a finding");
        assert_eq!(report.findings.len(), 1);
        assert!(!report.all_passed());
        assert!(report.tallies_consistent());
    }

    #[test]
    fn emitters_are_deterministic() {
        let make = || {
            ScanReport::from_verdicts(
                ConfigEcho {
                    command: "verify".into(),
                    m_min: 2,
                    m_max: 3,
                    checks: vec!["rulc".into()],
                    float_digits: 6,
                    ..Default::default()
                },
                vec![
                    sample_verdict(true, CheckId::Rulc),
                    sample_verdict(false, CheckId::Lower),
                ],
            )
        };
        let a = make();
        let b = make();
        assert_eq!(a.to_json(), b.to_json());
        assert_eq!(a.to_csv(), b.to_csv());
        assert_eq!(a.to_text(), b.to_text());
        assert!(a.to_json().contains("\"numerator\": \"25\""));
        assert!(a.to_csv().starts_with("record,check,m,i,"));
    }
}
