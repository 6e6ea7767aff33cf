//! Output records for the CLI: identical payloads rendered as JSON and as
//! fixed-width text.

use crate::classifier::{MFVerdict, WitnessCertificate};
use crate::engine::SchurExpansion;
use crate::partition::Partition;
use num_bigint::BigUint;
use serde_json::{json, Value};

pub struct OutputRecord {
    pub json: Value,
    pub human: String,
    pub exit_code: i32,
}

fn partition_json(p: &Partition) -> Value {
    json!(p.parts())
}

fn terms_json(x: &SchurExpansion) -> Value {
    let mut terms = Vec::new();
    for key in x.keys_lex_desc() {
        terms.push(json!({
            "lambda": partition_json(key),
            "coeff": x.coefficient(key).to_string(),
        }));
    }
    Value::Array(terms)
}

fn terms_table(x: &SchurExpansion, indent: &str) -> String {
    let keys = x.keys_lex_desc();
    let width = keys.iter().map(|k| k.to_string().len()).max().unwrap_or(6);
    let width = width.max("lambda".len());
    let mut out = format!("{indent}{:<width$}  coeff\n", "lambda");
    for key in keys {
        out.push_str(&format!(
            "{indent}{:<width$}  {}\n",
            key.to_string(),
            x.coefficient(key)
        ));
    }
    out
}

pub fn expand_record(
    nu: &Partition,
    mu: &Partition,
    x: &SchurExpansion,
    oracle_agrees: Option<bool>,
) -> OutputRecord {
    let json = json!({
        "command": "expand",
        "nu": partition_json(nu),
        "mu": partition_json(mu),
        "terms": terms_json(x),
        "oracle_agrees": oracle_agrees,
    });
    let mut human = format!("s_{nu} o s_{mu}: {} constituents\n", x.terms.len());
    human.push_str(&terms_table(x, "  "));
    match oracle_agrees {
        Some(true) => human.push_str("oracle agreement: yes\n"),
        Some(false) => human.push_str("oracle agreement: NO - INTERNAL INCONSISTENCY\n"),
        None => {}
    }
    let exit_code = if oracle_agrees == Some(false) { 4 } else { 0 };
    OutputRecord {
        json,
        human,
        exit_code,
    }
}

pub fn coeff_record(
    nu: &Partition,
    mu: &Partition,
    lambda: &Partition,
    coeff: &BigUint,
) -> OutputRecord {
    OutputRecord {
        json: json!({
            "command": "coeff",
            "nu": partition_json(nu),
            "mu": partition_json(mu),
            "lambda": partition_json(lambda),
            "coeff": coeff.to_string(),
            "oracle_agrees": Value::Null,
        }),
        human: format!("<s_{nu} o s_{mu} | s_{lambda}> = {coeff}\n"),
        exit_code: 0,
    }
}

pub fn mf_record(verdict: &MFVerdict) -> OutputRecord {
    OutputRecord {
        json: json!({
            "command": "mf",
            "nu": partition_json(&verdict.nu),
            "mu": partition_json(&verdict.mu),
            "verdict": verdict.verdict,
            "clause": verdict.clause.to_string(),
            "oracle_agrees": Value::Null,
        }),
        human: if verdict.verdict {
            format!(
                "s_{} o s_{} is multiplicity-free (clause {})\n",
                verdict.nu, verdict.mu, verdict.clause
            )
        } else {
            format!(
                "s_{} o s_{} is NOT multiplicity-free\n",
                verdict.nu, verdict.mu
            )
        },
        exit_code: i32::from(!verdict.verdict),
    }
}

pub fn witness_record(cert: &WitnessCertificate) -> OutputRecord {
    let steps: Vec<Value> = cert.steps.iter().map(|s| json!(s.to_string())).collect();
    let json = json!({
        "command": "witness",
        "nu": partition_json(&cert.nu),
        "mu": partition_json(&cert.mu),
        "witness": partition_json(&cert.witness),
        "at_least": cert.at_least.to_string(),
        "seed": {
            "nu": partition_json(&cert.seed.nu),
            "mu": partition_json(&cert.seed.mu),
            "lambda": partition_json(&cert.seed.lambda),
            "at_least": cert.seed.at_least.to_string(),
            "origin": cert.seed.origin,
        },
        "steps": steps,
        "engine_verified": cert.engine_verified,
        "oracle_agrees": Value::Null,
    });
    let mut human = format!(
        "<s_{} o s_{} | s_{}> >= {}\n",
        cert.nu, cert.mu, cert.witness, cert.at_least
    );
    human.push_str(&format!(
        "  seed: <s_{} o s_{} | s_{}> >= {}  ({})\n",
        cert.seed.nu, cert.seed.mu, cert.seed.lambda, cert.seed.at_least, cert.seed.origin
    ));
    for step in &cert.steps {
        human.push_str(&format!("  then: {step}\n"));
    }
    human.push_str(if cert.engine_verified {
        "  engine-verified\n"
    } else {
        "  growth-verified, not engine-verified\n"
    });
    OutputRecord {
        json,
        human,
        exit_code: 0,
    }
}

pub fn domino_record(
    mu: &Partition,
    plus: &SchurExpansion,
    minus: &SchurExpansion,
    renders: Option<(String, String)>,
) -> OutputRecord {
    let json = json!({
        "command": "domino",
        "mu": partition_json(mu),
        "even": terms_json(plus),
        "odd": terms_json(minus),
        "oracle_agrees": Value::Null,
    });
    let mut human = format!("s_2 o s_{mu} (even spin):\n");
    human.push_str(&terms_table(plus, "  "));
    human.push_str(&format!("s_1,1 o s_{mu} (odd spin):\n"));
    human.push_str(&terms_table(minus, "  "));
    if let Some((even, odd)) = renders {
        human.push_str("sample even-spin tableau:\n");
        human.push_str(&even);
        human.push_str("sample odd-spin tableau:\n");
        human.push_str(&odd);
    }
    OutputRecord {
        json,
        human,
        exit_code: 0,
    }
}

pub struct TableRow {
    pub nu: Partition,
    pub mu: Partition,
    pub max: BigUint,
}

pub fn table_record(size: u32, rows: &[TableRow]) -> OutputRecord {
    let json_rows: Vec<Value> = rows
        .iter()
        .map(|r| {
            json!({
                "nu": partition_json(&r.nu),
                "mu": partition_json(&r.mu),
                "p": r.max.to_string(),
            })
        })
        .collect();
    let json = json!({
        "command": "table",
        "max_total_size": size,
        "rows": json_rows,
        "oracle_agrees": Value::Null,
    });
    // Values 1 are suppressed in the rendered table, as in the source data.
    let mut human = String::new();
    let one = BigUint::from(1u32);
    for r in rows {
        if r.max == one {
            human.push_str(&format!("{}\t{}\t\n", r.nu, r.mu));
        } else {
            human.push_str(&format!("{}\t{}\t{}\n", r.nu, r.mu, r.max));
        }
    }
    OutputRecord {
        json,
        human,
        exit_code: 0,
    }
}
