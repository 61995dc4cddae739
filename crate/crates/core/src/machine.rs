//! JSON records emitted by `--machine`, with parsers for each so that
//! scripts can round-trip them.
//!
//! ```text
//! number:  {"terms":[{"c":"<num>/<den>","p":"<num>/<den>"}, ...]}
//! verdict: {"verdict":"Prime|Composite|NotInteger|NotPositive|Unknown",
//!           "rule":"R1|R2|Finite"|null, "witness":<number>|null,
//!           "cofactor":<number>|null, "reason":<string>|null,
//!           "trace":[{"cite":<string>,"detail":<string>}, ...]}
//! report:  {"B":<int>,"p":<int>,"m_max":<int>,"N":"<decimal>",
//!           "cases":[{"m":<int>,"divisible":<bool>,"passed":<bool>,
//!                     "offending_prime":<int>|null,"offending_offset":-1|1|null}, ...]}
//! ```

use num_bigint::BigUint;
use serde_json::{json, Value};

use crate::number::GrossNumber;
use crate::oracle::{AnalogueCase, AnalogueReport};
use crate::prime::{Citation, PrimalityVerdict, PrimeRule, TraceStep};

pub use crate::parser::{from_machine as number_from_machine, to_machine as number_to_machine};

fn citation_name(c: Citation) -> String {
    c.to_string()
}

fn citation_from_name(s: &str) -> Result<Citation, String> {
    Ok(match s {
        "Infinite Unit Axiom" => Citation::InfiniteUnitAxiom,
        "Lemma 1" => Citation::Lemma1,
        "Theorem 1" => Citation::Theorem1,
        "Lemma 2" => Citation::Lemma2,
        "Lemma 3" => Citation::Lemma3,
        "Theorem 2" => Citation::Theorem2,
        "finite oracle" => Citation::FiniteOracle,
        _ => return Err(format!("unknown citation '{s}'")),
    })
}

pub fn trace_to_machine(trace: &[TraceStep]) -> Value {
    Value::Array(
        trace
            .iter()
            .map(|s| json!({"cite": citation_name(s.cite), "detail": s.detail}))
            .collect(),
    )
}

pub fn trace_from_machine(v: &Value) -> Result<Vec<TraceStep>, String> {
    v.as_array()
        .ok_or("trace must be an array")?
        .iter()
        .map(|s| {
            let cite = s
                .get("cite")
                .and_then(Value::as_str)
                .ok_or("step missing 'cite'")?;
            let detail = s
                .get("detail")
                .and_then(Value::as_str)
                .ok_or("step missing 'detail'")?;
            Ok(TraceStep {
                cite: citation_from_name(cite)?,
                detail: detail.to_string(),
            })
        })
        .collect()
}

pub fn verdict_to_machine(v: &PrimalityVerdict) -> Value {
    let mut rec = json!({
        "verdict": v.name(),
        "rule": Value::Null,
        "witness": Value::Null,
        "cofactor": Value::Null,
        "reason": Value::Null,
        "trace": trace_to_machine(v.trace()),
    });
    match v {
        PrimalityVerdict::Prime { rule, .. } => rec["rule"] = json!(rule.to_string()),
        PrimalityVerdict::Composite {
            witness, cofactor, ..
        } => {
            rec["witness"] = number_to_machine(witness);
            rec["cofactor"] = number_to_machine(cofactor);
        }
        PrimalityVerdict::Unknown { reason, .. } => rec["reason"] = json!(reason),
        PrimalityVerdict::NotInteger | PrimalityVerdict::NotPositive => {}
    }
    rec
}

pub fn verdict_from_machine(v: &Value) -> Result<PrimalityVerdict, String> {
    let name = v
        .get("verdict")
        .and_then(Value::as_str)
        .ok_or("missing 'verdict'")?;
    let trace = || trace_from_machine(v.get("trace").unwrap_or(&Value::Array(Vec::new())));
    let number = |k: &str| -> Result<GrossNumber, String> {
        number_from_machine(v.get(k).ok_or(format!("missing '{k}'"))?)
    };
    Ok(match name {
        "Prime" => {
            let rule = match v.get("rule").and_then(Value::as_str) {
                Some("R1") => PrimeRule::R1,
                Some("R2") => PrimeRule::R2,
                Some("Finite") => PrimeRule::Finite,
                other => return Err(format!("bad rule {other:?}")),
            };
            PrimalityVerdict::Prime {
                rule,
                trace: trace()?,
            }
        }
        "Composite" => PrimalityVerdict::Composite {
            witness: number("witness")?,
            cofactor: number("cofactor")?,
            trace: trace()?,
        },
        "NotInteger" => PrimalityVerdict::NotInteger,
        "NotPositive" => PrimalityVerdict::NotPositive,
        "Unknown" => PrimalityVerdict::Unknown {
            reason: v
                .get("reason")
                .and_then(Value::as_str)
                .ok_or("missing 'reason'")?
                .to_string(),
            trace: trace()?,
        },
        other => return Err(format!("unknown verdict '{other}'")),
    })
}

pub fn report_to_machine(r: &AnalogueReport) -> Value {
    let cases: Vec<Value> = r
        .cases
        .iter()
        .map(|c| {
            json!({
                "m": c.m,
                "divisible": c.divisible,
                "passed": c.passed,
                "offending_prime": c.offending_prime,
                "offending_offset": c.offending_offset,
            })
        })
        .collect();
    json!({
        "B": r.bound,
        "p": r.p,
        "m_max": r.m_max,
        "N": r.stand_in.to_string(),
        "cases": cases,
    })
}

pub fn report_from_machine(v: &Value) -> Result<AnalogueReport, String> {
    let uint = |v: &Value, k: &str| -> Result<u64, String> {
        v.get(k)
            .and_then(Value::as_u64)
            .ok_or(format!("missing integer '{k}'"))
    };
    let cases = v
        .get("cases")
        .and_then(Value::as_array)
        .ok_or("missing 'cases'")?
        .iter()
        .map(|c| {
            let flag = |k: &str| {
                c.get(k)
                    .and_then(Value::as_bool)
                    .ok_or(format!("missing '{k}'"))
            };
            Ok(AnalogueCase {
                m: uint(c, "m")?,
                divisible: flag("divisible")?,
                passed: flag("passed")?,
                offending_prime: c.get("offending_prime").and_then(Value::as_u64),
                offending_offset: c
                    .get("offending_offset")
                    .and_then(Value::as_i64)
                    .map(|o| o as i8),
            })
        })
        .collect::<Result<Vec<_>, String>>()?;
    let stand_in: BigUint = v
        .get("N")
        .and_then(Value::as_str)
        .ok_or("missing 'N'")?
        .parse()
        .map_err(|_| "bad 'N'".to_string())?;
    Ok(AnalogueReport {
        bound: uint(v, "B")?,
        stand_in,
        p: uint(v, "p")?,
        m_max: uint(v, "m_max")?,
        cases,
    })
}
