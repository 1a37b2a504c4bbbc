#![allow(dead_code)]

use serde_json::Value;
use superosc::prolate::{NodeGeometry, NodeSpec};
use superosc::xprec::{PrecisionContext, XReal};

pub fn oracle() -> Value {
    let text = include_str!("../fixtures/oracle_values.json");
    serde_json::from_str(text).expect("oracle fixture parses")
}

pub fn oracle_str(key: &str) -> String {
    match &oracle()[key] {
        Value::String(s) => s.clone(),
        Value::Number(n) => n.to_string(),
        other => panic!("oracle key {key}: unexpected {other}"),
    }
}

pub fn oracle_f64(key: &str) -> f64 {
    oracle_str(key).parse().expect("oracle value is numeric")
}

pub fn oracle_list(key: &str) -> Vec<String> {
    oracle()[key]
        .as_array()
        .unwrap_or_else(|| panic!("oracle key {key} is not a list"))
        .iter()
        .map(|v| match v {
            Value::String(s) => s.clone(),
            other => other.to_string(),
        })
        .collect()
}

/// p_max = π, ħ = 1, so λ_min = 2.
pub fn geometry(n: usize, dx: &str, ctx: &PrecisionContext) -> NodeGeometry {
    let dx = ctx.parse(dx).unwrap();
    NodeGeometry::equispaced(n, &dx, ctx.pi(), ctx.one()).unwrap()
}

pub fn alternating(n: usize, dx: &str, ctx: &PrecisionContext) -> NodeSpec {
    NodeSpec::alternating(geometry(n, dx, ctx))
}

/// Auto precision for spacing `dx` (absolute, λ_min = 2).
pub fn auto_ctx(n: usize, dx: &str) -> PrecisionContext {
    let probe = PrecisionContext::new(128).unwrap();
    let ratio = probe.parse(dx).unwrap() / 2u32;
    PrecisionContext::for_problem(n, &ratio, PrecisionContext::DEFAULT_GUARD_BITS).unwrap()
}

pub fn rel_err(got: &XReal, want: &XReal) -> f64 {
    ((got.clone() - want) / want).abs().to_f64()
}
