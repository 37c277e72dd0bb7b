//! Command implementations behind the `quatcusp` binary. Every command
//! produces a JSON document whose integers are decimal strings; the
//! renderers turn it into text, canonical JSON or CSV.

use num_bigint::BigUint;
use serde_json::{json, Map, Value};
use thiserror::Error;

use quatcusp::numtheory::{relevant_places, square_free_part};
use quatcusp::{
    algebra_for_prime, boundary_descriptor, boundary_report, class_number, cusp_count, global_index,
    hilbert_symbol, hilbert_symbol_oracle, local_group_order, sl4_order_oracle, BoundaryDescriptor,
    CongruenceLevel, CuspCohomologyReport, IndexResult, Place, QuaternionAlgebra, QuaternionOrder,
};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Hypothesis(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Hypothesis(_) => 2,
        }
    }
}

impl From<quatcusp::Error> for CliError {
    fn from(e: quatcusp::Error) -> Self {
        if e.is_hypothesis_violation() {
            CliError::Hypothesis(e.to_string())
        } else {
            CliError::Usage(e.to_string())
        }
    }
}

pub type CliResult = Result<Value, CliError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

fn s(n: impl ToString) -> Value {
    Value::String(n.to_string())
}

fn places_json(places: impl Iterator<Item = Place>) -> Value {
    Value::Array(places.map(s).collect())
}

fn parse_place(text: &str) -> Result<Place, CliError> {
    match text {
        "inf" | "infinity" | "oo" => Ok(Place::Infinity),
        _ => {
            let p: u64 = text
                .parse()
                .map_err(|_| CliError::Usage(format!("place must be `inf` or a prime, got {text:?}")))?;
            Ok(Place::finite(p)?)
        }
    }
}

fn algebra_json(alg: &QuaternionAlgebra) -> Value {
    json!({ "a": s(alg.a()), "b": s(alg.b()) })
}

fn index_json(index: &IndexResult) -> Value {
    let factors: Vec<Value> = index
        .local_factors
        .iter()
        .map(|f| json!({ "p": s(f.p), "e": s(f.e), "index": s(&f.index) }))
        .collect();
    json!({ "value": s(&index.value), "local_factors": factors })
}

fn cohomology_json(r: &CuspCohomologyReport) -> Value {
    json!({
        "boundary_betti": r.boundary_betti.iter().map(s).collect::<Vec<_>>(),
        "r0": s(&r.r0),
        "r13_sum": s(&r.r13_sum),
        "r2": s(&r.r2),
        "r4": s(&r.r4),
        "half_dimension_check": r.satisfies_half_dimension(),
    })
}

fn boundary_json(d: &BoundaryDescriptor) -> Value {
    json!({
        "case": d.case.as_str(),
        "component_type": d.component_type.as_str(),
        "fibre_dim": s(d.fibre_dim),
        "base_dim": s(d.base_dim),
        "total_manifold_dim": s(d.total_manifold_dim),
    })
}

/// Fast symbol against the brute-force oracle at every relevant place of the
/// square-free parts of `a` and `b`.
fn hilbert_cross_check(a: i64, b: i64) -> Result<Value, CliError> {
    let (sa, sb) = (square_free_part(a)?, square_free_part(b)?);
    let mut rows = Vec::new();
    let mut agree = true;
    for v in relevant_places(sa, sb)? {
        let fast = hilbert_symbol(a, b, v)?;
        let slow = hilbert_symbol_oracle(sa, sb, v)?;
        agree &= fast == slow;
        rows.push(json!({ "place": s(v), "symbol": s(fast), "oracle": s(slow) }));
    }
    Ok(json!({ "places": rows, "agree": agree }))
}

fn sl4_cross_check(q: u64) -> Result<Value, CliError> {
    let count = sl4_order_oracle(q)?;
    let split = QuaternionAlgebra::new(1, 1)?;
    let formula = local_group_order(&split, q)?;
    Ok(json!({
        "q": s(q),
        "enumerated": s(count),
        "formula": s(&formula),
        "agree": formula == BigUint::from(count),
    }))
}

fn self_check(report: &CuspCohomologyReport) -> Result<(), CliError> {
    if report.satisfies_half_dimension() {
        Ok(())
    } else {
        Err(CliError::Hypothesis(format!(
            "half-dimension identity failed for {} cusps",
            report.cusp_count
        )))
    }
}

/// Full pipeline for the definite algebra of prime discriminant `p` at level
/// `level_p^e`.
pub fn cmd_report(p: u64, level_p: u64, e: u32, oracle: bool) -> CliResult {
    let alg = algebra_for_prime(p)?;
    let level = CongruenceLevel::prime_power(level_p, e)?;
    let h = class_number(p)?;
    let cusps = cusp_count(&alg, Some(h), level_p, e, None)?;
    let index = global_index(&alg, &level)?;
    let cohomology = boundary_report(&cusps)?;
    self_check(&cohomology)?;
    let boundary = boundary_descriptor(&alg)?;

    let mut doc = json!({
        "algebra": algebra_json(&alg),
        "ramification": places_json(alg.ramification_set().iter()),
        "definite": alg.is_definite(),
        "discriminant": s(alg.discriminant()),
        "class_number": s(h),
        "class_number_source": "eichler",
        "level": { "p": s(level_p), "e": s(e), "norm": s(level.norm()) },
        "index": index_json(&index),
        "cusp_count": s(&cusps),
        "cohomology": cohomology_json(&cohomology),
        "boundary": boundary_json(&boundary),
    });
    if oracle {
        let mut checks = Map::new();
        checks.insert("hilbert".into(), hilbert_cross_check(alg.a(), alg.b())?);
        if level_p <= 3 {
            checks.insert("sl4".into(), sl4_cross_check(level_p)?);
        }
        doc["oracle"] = Value::Object(checks);
    }
    Ok(doc)
}

/// Cusp count for an arbitrary division algebra `Q(a, b)`. `h` defaults to
/// the Eichler class number when the algebra is definite of prime
/// discriminant; `mu` is required for indefinite algebras.
pub fn cmd_cusps(a: i64, b: i64, h: Option<u64>, level_p: u64, e: u32, mu: Option<u64>) -> CliResult {
    let alg = QuaternionAlgebra::new(a, b)?;
    let level = CongruenceLevel::prime_power(level_p, e)?;
    let cusps = cusp_count(&alg, h, level_p, e, mu)?;
    let index = global_index(&alg, &level)?;
    let h_value = quatcusp::arithmetic_groups::resolve_class_number(&alg, h)?;
    let mut doc = json!({
        "algebra": algebra_json(&alg),
        "ramification": places_json(alg.ramification_set().iter()),
        "definite": alg.is_definite(),
        "discriminant": s(alg.discriminant()),
        "class_number": s(h_value),
        "class_number_source": if h.is_some() { "supplied" } else { "eichler" },
        "level": { "p": s(level_p), "e": s(e), "norm": s(level.norm()) },
        "index": index_json(&index),
        "cusp_count": s(&cusps),
        "boundary": boundary_json(&boundary_descriptor(&alg)?),
    });
    if let Some(mu) = mu {
        doc["mu"] = s(mu);
    }
    if alg.is_definite() {
        let cohomology = boundary_report(&cusps)?;
        self_check(&cohomology)?;
        doc["cohomology"] = cohomology_json(&cohomology);
    }
    Ok(doc)
}

pub fn cmd_hilbert(a: i64, b: i64, place: Option<&str>, oracle: bool) -> CliResult {
    let places = match place {
        Some(text) => vec![parse_place(text)?],
        None => relevant_places(a, b)?,
    };
    let (sa, sb) = if oracle {
        (square_free_part(a)?, square_free_part(b)?)
    } else {
        (a, b)
    };
    let mut rows = Vec::new();
    let mut product = 1i8;
    let mut agree = true;
    for v in places {
        let symbol = hilbert_symbol(a, b, v)?;
        product *= symbol;
        let mut row = json!({ "place": s(v), "symbol": s(symbol) });
        if oracle {
            let slow = hilbert_symbol_oracle(sa, sb, v)?;
            agree &= slow == symbol;
            row["oracle"] = s(slow);
        }
        rows.push(row);
    }
    let mut doc = json!({ "a": s(a), "b": s(b), "places": rows });
    if place.is_none() {
        doc["product"] = s(product);
    }
    if oracle {
        doc["oracle_agrees"] = Value::Bool(agree);
    }
    Ok(doc)
}

pub fn cmd_ramify(a: i64, b: i64) -> CliResult {
    let alg = QuaternionAlgebra::new(a, b)?;
    Ok(json!({
        "algebra": algebra_json(&alg),
        "ramification": places_json(alg.ramification_set().iter()),
        "definite": alg.is_definite(),
        "division": alg.is_division(),
        "discriminant": s(alg.discriminant()),
    }))
}

pub fn cmd_classnumber(p: u64) -> CliResult {
    let alg = algebra_for_prime(p)?;
    Ok(json!({
        "p": s(p),
        "algebra": algebra_json(&alg),
        "class_number": s(class_number(p)?),
    }))
}

pub fn cmd_maximalize(a: i64, b: i64) -> CliResult {
    let alg = QuaternionAlgebra::new(a, b)?;
    let seed = QuaternionOrder::standard(&alg);
    let max = seed.maximalize()?;
    let basis: Value = serde_json::from_str(&max.to_json()).expect("order JSON is valid");
    Ok(json!({
        "algebra": algebra_json(&alg),
        "discriminant": s(alg.discriminant()),
        "seed_reduced_discriminant": s(seed.reduced_discriminant()),
        "reduced_discriminant": s(max.reduced_discriminant()),
        "maximal": max.is_maximal(),
        "basis": basis,
    }))
}

/// `kind` is `sl4` (enumerate `SL_4(F_q)`) or `hilbert` (sweep all
/// square-free `a, b` in `[-20, 20]` at the place `q`).
pub fn cmd_oracle(kind: &str, q: u64) -> CliResult {
    match kind {
        "sl4" => sl4_cross_check(q),
        "hilbert" => {
            let v = Place::finite(q)?;
            let vals: Vec<i64> = (-20i64..=20)
                .filter(|&n| n != 0 && quatcusp::factorize(n).map(|f| f.is_square_free()).unwrap_or(false))
                .collect();
            let mut mismatches = 0u64;
            let mut checked = 0u64;
            for &a in &vals {
                for &b in &vals {
                    checked += 1;
                    if hilbert_symbol(a, b, v)? != hilbert_symbol_oracle(a, b, v)? {
                        mismatches += 1;
                    }
                }
            }
            Ok(json!({
                "place": s(v),
                "checked": s(checked),
                "mismatches": s(mismatches),
                "agree": mismatches == 0,
            }))
        }
        other => Err(CliError::Usage(format!("unknown oracle kind {other:?}; expected sl4 or hilbert"))),
    }
}

/// Depth-first `(path, scalar)` pairs. Object keys come out sorted.
fn flatten(prefix: &str, value: &Value, out: &mut Vec<(String, String)>) {
    let join = |k: &str| {
        if prefix.is_empty() {
            k.to_string()
        } else {
            format!("{prefix}.{k}")
        }
    };
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                flatten(&join(k), v, out);
            }
        }
        Value::Array(items) => {
            for (n, v) in items.iter().enumerate() {
                flatten(&join(&n.to_string()), v, out);
            }
        }
        Value::String(text) => out.push((prefix.to_string(), text.clone())),
        other => out.push((prefix.to_string(), other.to_string())),
    }
}

pub fn render(doc: &Value, format: Format) -> String {
    match format {
        Format::Json => {
            let mut text = serde_json::to_string_pretty(doc).expect("values serialize");
            text.push('\n');
            text
        }
        Format::Csv | Format::Text => {
            let mut rows = Vec::new();
            flatten("", doc, &mut rows);
            let mut text = String::new();
            if format == Format::Csv {
                text.push_str("field,value\n");
                for (k, v) in rows {
                    text.push_str(&format!("{k},{v}\n"));
                }
            } else {
                let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
                for (k, v) in rows {
                    text.push_str(&format!("{k:<width$}  {v}\n"));
                }
            }
            text
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn place_parsing() {
        assert_eq!(parse_place("inf"), Ok(Place::Infinity));
        assert_eq!(parse_place("7"), Ok(Place::Finite(7)));
        assert!(matches!(parse_place("8"), Err(CliError::Usage(_))));
        assert!(matches!(parse_place("x"), Err(CliError::Usage(_))));
    }

    #[test]
    fn flatten_sorts_and_indexes() {
        let doc = json!({ "b": ["x", "y"], "a": { "d": true, "c": "1" } });
        let mut rows = Vec::new();
        flatten("", &doc, &mut rows);
        let keys: Vec<&str> = rows.iter().map(|(k, _)| k.as_str()).collect();
        assert_eq!(keys, ["a.c", "a.d", "b.0", "b.1"]);
    }

    #[test]
    fn error_exit_codes() {
        assert_eq!(CliError::from(quatcusp::Error::NotPrime(4)).exit_code(), 1);
        assert_eq!(CliError::from(quatcusp::Error::RamifiedLevel { p: 2 }).exit_code(), 2);
        assert_eq!(CliError::from(quatcusp::Error::ZeroExponent).exit_code(), 1);
    }
}
