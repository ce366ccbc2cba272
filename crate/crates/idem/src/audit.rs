//! Parallel theorem sweeps, JSON reports and oracle replay of findings.

use std::time::{Duration, Instant};

use idem_core::arith::{pow_mod, totient};
use idem_core::audit::{self, AuditReport, Finding, Outcome, Theorem, Val};
use idem_core::{oracle, Result};
use rayon::prelude::*;
use serde_json::{json, Map, Value};

/// An audit report plus wall-clock data, which is kept out of comparisons.
#[derive(Debug, Clone)]
pub struct TimedReport {
    pub report: AuditReport,
    pub elapsed: Duration,
    pub threads: usize,
}

/// Sweeps `lo..=hi` with the moduli spread over the rayon pool.
///
/// Outcomes are folded by [`audit::summarize`], which sorts findings, so the
/// report does not depend on scheduling.
pub fn run(lo: u64, hi: u64, theorems: &[&'static Theorem], cap: u64) -> Result<TimedReport> {
    let start = Instant::now();
    let per_modulus: Vec<Vec<Outcome>> =
        (lo.max(1)..=hi).into_par_iter().map(|m| audit::audit_modulus(m, theorems, cap)).collect::<Result<_>>()?;
    let mut outcomes: Vec<Outcome> = per_modulus.into_iter().flatten().collect();
    if lo <= hi {
        let n = audit::domain_bound(hi);
        let domain: Vec<Outcome> = theorems.par_iter().filter_map(|t| audit::audit_domain(n, t)).collect();
        outcomes.extend(domain);
    }
    let report = audit::summarize(lo, hi, theorems, outcomes);
    Ok(TimedReport { report, elapsed: start.elapsed(), threads: rayon::current_num_threads() })
}

/// How a finding was re-checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Replay {
    /// Recomputed from the brute-force oracle; the same discrepancy appears.
    Confirmed,
    /// Recomputed from the oracle but the values differ from the finding.
    Mismatch,
    /// No oracle recipe for this theorem; the single modulus was re-audited
    /// and produced the same finding.
    Reaudited,
    /// Re-auditing the modulus did not reproduce the finding.
    Lost,
}

impl Replay {
    pub fn as_str(self) -> &'static str {
        match self {
            Replay::Confirmed => "oracle-confirmed",
            Replay::Mismatch => "oracle-mismatch",
            Replay::Reaudited => "re-audited",
            Replay::Lost => "not-reproduced",
        }
    }

    pub fn reproduced(self) -> bool {
        matches!(self, Replay::Confirmed | Replay::Reaudited)
    }
}

fn int(f: &Finding, key: &str) -> Option<u64> {
    f.witness.iter().find(|(k, _)| *k == key).and_then(|(_, v)| match v {
        Val::Int(x) => u64::try_from(*x).ok(),
        _ => None,
    })
}

/// `a^k` in `1..=m`.
fn pw(m: u64, a: u64, k: u64) -> u64 {
    match pow_mod(a, k, m) {
        0 => m,
        x => x,
    }
}

/// `a^{-1} = a^{|a|-1}`, or `a` when `|a| = 1`.
fn inverse_raw(m: u64, a: u64) -> u64 {
    let n = oracle::order_raw(m, a);
    pw(m, a, if n == 1 { 1 } else { n - 1 })
}

/// `(expected, actual)` for the theorems with an oracle recipe.
fn oracle_values(f: &Finding) -> Option<(Val, Val)> {
    let m = f.m;
    match (f.theorem, f.claim) {
        ("fs05", _) => {
            let (e, k) = (int(f, "e")?, int(f, "k")?);
            let r = (1..=m)
                .filter(|&a| {
                    oracle::is_regular_raw(m, a) && oracle::idem_class_raw(m, a) == e && oracle::order_raw(m, a) == k
                })
                .count() as u64;
            let formula = k * r / totient(k);
            Some((formula.into(), oracle::union_size_raw(m, e, k).into()))
        }
        ("nn08", "(a^{-1})^{-1} ≡ a^{|a|+1}") => {
            let a = int(f, "a")?;
            let lhs = inverse_raw(m, inverse_raw(m, a));
            let rhs = pw(m, a, oracle::order_raw(m, a) + 1);
            Some((rhs.into(), lhs.into()))
        }
        ("rn17", _) => {
            let a = int(f, "a")?;
            let back = inverse_raw(m, inverse_raw(m, a));
            Some((oracle::is_regular_raw(m, a).into(), (back == a).into()))
        }
        _ => None,
    }
}

/// Re-checks one finding, through the oracle where a recipe exists.
pub fn replay(f: &Finding, cap: u64) -> Replay {
    if let Some((expected, actual)) = oracle_values(f) {
        return if expected == f.expected && actual == f.actual && expected != actual {
            Replay::Confirmed
        } else {
            Replay::Mismatch
        };
    }
    let Some(th) = audit::find(f.theorem) else { return Replay::Lost };
    let again = match th.scope() {
        audit::Scope::Modulus => audit::audit_modulus(f.m, &[th], cap).ok().into_iter().flatten().next(),
        audit::Scope::Domain => audit::audit_domain(f.m, th),
    };
    match again {
        Some(o) if o.findings.contains(f) => Replay::Reaudited,
        _ => Replay::Lost,
    }
}

pub fn val_json(v: &Val) -> Value {
    match v {
        Val::Int(x) => json!(x),
        Val::Bool(b) => json!(b),
        Val::Set(s) => json!(s),
        Val::Text(t) => json!(t),
    }
}

fn finding_json(f: &Finding, replayed: Option<Replay>) -> Value {
    let witness: Map<String, Value> = f.witness.iter().map(|(k, v)| (k.to_string(), val_json(v))).collect();
    let mut o = Map::new();
    o.insert("m".into(), json!(f.m));
    o.insert("claim".into(), json!(f.claim));
    o.insert("witness".into(), Value::Object(witness));
    o.insert("expected".into(), val_json(&f.expected));
    o.insert("actual".into(), val_json(&f.actual));
    if let Some(r) = replayed {
        o.insert("replay".into(), json!(r.as_str()));
    }
    Value::Object(o)
}

/// The report document. `timing` is the only field that varies between runs.
pub fn report_json(r: &TimedReport, cap: u64, with_replay: bool) -> Value {
    let rep = &r.report;
    let theorems: Vec<Value> = rep
        .theorems
        .iter()
        .map(|t| {
            let findings: Vec<Value> =
                t.findings.iter().map(|f| finding_json(f, with_replay.then(|| replay(f, cap)))).collect();
            json!({
                "id": t.id,
                "statement": t.statement,
                "status": t.status.as_str(),
                "instances": t.instances,
                "skipped": t.skipped,
                "violations": t.violations,
                "findings": findings,
            })
        })
        .collect();
    json!({
        "range": {"lo": rep.lo, "hi": rep.hi},
        "domain_bound": audit::domain_bound(rep.hi),
        "findings_per_modulus": audit::FINDINGS_PER_MODULUS,
        "theorems": theorems,
        "timing": {"elapsed_ms": r.elapsed.as_millis() as u64, "threads": r.threads},
    })
}

/// Parses `lo..hi`, `lo..=hi` (both inclusive) or a single modulus.
pub fn parse_range(s: &str) -> std::result::Result<(u64, u64), String> {
    let bad = || format!("invalid range `{s}`; expected LO..HI");
    let (lo, hi) = match s.split_once("..") {
        Some((lo, hi)) => (lo, hi.strip_prefix('=').unwrap_or(hi)),
        None => (s, s),
    };
    let lo: u64 = lo.trim().parse().map_err(|_| bad())?;
    let hi: u64 = hi.trim().parse().map_err(|_| bad())?;
    if lo == 0 || lo > hi {
        return Err(format!("range `{s}` must satisfy 1 ≤ LO ≤ HI"));
    }
    Ok((lo, hi))
}
