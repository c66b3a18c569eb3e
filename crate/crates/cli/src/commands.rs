use std::collections::BTreeSet;
use std::fmt::Write as _;

use plethysm_core::extrema::{self, lexmin_segments, lexmin_type_from_trace, PlethysmInstance, SegmentTrace};
use plethysm_core::family::enumerate_closed_families;
use plethysm_core::multiplicity;
use plethysm_core::oracle::{self, OracleBudget};
use plethysm_core::tableau::enumerate_cs;
use plethysm_core::{Error, Partition, Tableau};
use serde_json::{json, Value};

/// What a command produced: a JSON payload and the equivalent text.
pub struct Report {
    pub command: &'static str,
    pub inputs: Value,
    pub outputs: Value,
    pub text: String,
    pub failed: bool,
}

impl Report {
    fn new(command: &'static str, inputs: Value, outputs: Value, text: String) -> Self {
        Report { command, inputs, outputs, text, failed: false }
    }
}

fn names(ps: &[Partition]) -> Vec<String> {
    ps.iter().map(Partition::to_string).collect()
}

pub fn extrema(mu: &Partition, nu: &Partition, want_min: bool, want_max: bool) -> Result<Report, Error> {
    let inst = PlethysmInstance::new(mu.clone(), nu.clone())?;
    let mut outputs = serde_json::Map::new();
    let mut text = String::new();
    if want_min {
        let min = names(&extrema::minimal_constituents(&inst)?);
        writeln!(text, "minimal: {}", min.join("  ")).unwrap();
        outputs.insert("minimal".into(), json!(min));
    }
    if want_max {
        let max = names(&extrema::maximal_constituents(&inst)?);
        writeln!(text, "maximal: {}", max.join("  ")).unwrap();
        outputs.insert("maximal".into(), json!(max));
    }
    Ok(Report::new("extrema", json!({"mu": mu, "nu": nu}), Value::Object(outputs), text))
}

fn tableaux(ts: &[Tableau]) -> String {
    if ts.is_empty() {
        return "(none)".into();
    }
    ts.iter().map(Tableau::to_string).collect::<Vec<_>>().join(" ")
}

fn trace_text(trace: &SegmentTrace, ty: &Partition, text: &mut String) {
    writeln!(text, "families of {} tableaux of shape {}:", trace.n, trace.mu).unwrap();
    for (j, (k, tier)) in trace.k.iter().zip(&trace.tiers).enumerate() {
        writeln!(text, "  k_{} = {k}  T_{} = {}", j + 1, j + 1, tableaux(tier)).unwrap();
    }
    writeln!(text, "  S = {}", tableaux(&trace.pool)).unwrap();
    writeln!(text, "  choose {} of {}: {} completions", trace.extra, trace.pool.len(), trace.completion_count()).unwrap();
    writeln!(text, "  type {ty}").unwrap();
}

pub fn lex(mu: &Partition, nu: &Partition, greatest: bool, least: bool, trace: bool) -> Result<Report, Error> {
    let inst = PlethysmInstance::new(mu.clone(), nu.clone())?;
    let mut outputs = serde_json::Map::new();
    let mut text = String::new();
    if greatest {
        let (p, mult) = extrema::lex_greatest(&inst)?;
        writeln!(text, "greatest: {p} (multiplicity {mult})").unwrap();
        outputs.insert("greatest".into(), json!({"partition": p, "multiplicity": mult}));
    }
    if least {
        let p = extrema::lex_least(&inst)?;
        writeln!(text, "least: {p}").unwrap();
        outputs.insert("least".into(), json!(p));
    }
    if trace {
        let sizes: BTreeSet<usize> = inst.kappa().parts().iter().copied().collect();
        let mut traces = Vec::new();
        for &d in sizes.iter().rev() {
            let t = lexmin_segments(mu, d)?;
            let ty = lexmin_type_from_trace(&t)?;
            trace_text(&t, &ty, &mut text);
            traces.push(json!({
                "trace": t,
                "completions": t.completion_count().to_string(),
                "type": ty,
            }));
        }
        outputs.insert("traces".into(), json!(traces));
    }
    Ok(Report::new("lex", json!({"mu": mu, "nu": nu}), Value::Object(outputs), text))
}

pub fn closed(mu: &Partition, d: usize) -> Result<Report, Error> {
    let families = enumerate_closed_families(mu, d);
    let mut text = String::new();
    let mut list = Vec::with_capacity(families.len());
    for (i, f) in families.iter().enumerate() {
        let ty = f.family_type()?;
        writeln!(text, "{:>3}  {}  type {ty}", i + 1, tableaux(f.members())).unwrap();
        list.push(json!({"members": f, "weight": f.weight().to_string(), "type": ty}));
    }
    writeln!(text, "{} families", families.len()).unwrap();
    Ok(Report::new("closed", json!({"mu": mu, "d": d}), json!({"families": list}), text))
}

pub fn multiplicity(mu: &Partition, nu: &Partition, lambda: &Partition, with_oracle: bool) -> Result<Report, Error> {
    let b = multiplicity::bounds(mu, nu, lambda, with_oracle)?;
    let mut text = format!(
        "lower {}\nupper {} (ordered), {} (symmetrized)\n",
        b.lower, b.upper_ordered, b.upper_symmetrized
    );
    if let Some(e) = b.exact {
        writeln!(text, "exact {e}").unwrap();
    }
    let outputs = json!({
        "lower": b.lower,
        "upper_ordered": b.upper_ordered.to_string(),
        "upper_symmetrized": b.upper_symmetrized.to_string(),
        "exact": b.exact,
    });
    Ok(Report::new(
        "multiplicity",
        json!({"mu": mu, "nu": nu, "lambda": lambda, "oracle": with_oracle}),
        outputs,
        text,
    ))
}

pub fn decompose(nu: &Partition, mu: &Partition, budget: &OracleBudget) -> Result<Report, Error> {
    let e = oracle::full_decomposition_with(nu, mu, budget)?;
    let mut text = String::new();
    let mut list = Vec::new();
    for (p, m) in e.constituents() {
        writeln!(text, "{m:>6}  {p}").unwrap();
        list.push(json!({"partition": p, "multiplicity": m}));
    }
    let dim = oracle::expected_dimension(nu, mu).to_string();
    writeln!(text, "dimension {dim}").unwrap();
    Ok(Report::new(
        "oracle decompose",
        json!({"nu": nu, "mu": mu}),
        json!({"constituents": list, "dimension": dim}),
        text,
    ))
}

pub fn coefficient(nu: &Partition, mu: &Partition, lambda: &Partition, budget: &OracleBudget) -> Result<Report, Error> {
    let c = oracle::plethysm_coefficient_with(nu, mu, lambda, budget)?;
    Ok(Report::new(
        "oracle coeff",
        json!({"nu": nu, "mu": mu, "lambda": lambda}),
        json!({"coefficient": c}),
        format!("{c}\n"),
    ))
}

/// DOT digraph of the covering pairs, each edge pointing upwards.
pub fn poset(mu: &Partition, max_entry: usize, max_rank: Option<usize>) -> Result<Report, Error> {
    if mu.is_empty() {
        return Err(Error::InvalidArgument("the shape must be non-empty".into()));
    }
    let nodes: BTreeSet<Tableau> = enumerate_cs(mu, max_entry)
        .into_iter()
        .filter(|t| max_rank.map_or(true, |r| t.rank() <= r))
        .collect();
    let mut edges = Vec::new();
    for t in &nodes {
        let mut ups = t.upper_covers();
        ups.sort();
        for u in ups {
            if nodes.contains(&u) {
                edges.push((t.clone(), u));
            }
        }
    }
    let mut dot = String::from("digraph poset {\n  rankdir=BT;\n  node [shape=plaintext];\n");
    for t in &nodes {
        writeln!(dot, "  \"{t}\";").unwrap();
    }
    for (a, b) in &edges {
        writeln!(dot, "  \"{a}\" -> \"{b}\";").unwrap();
    }
    dot.push_str("}\n");
    Ok(Report::new(
        "poset",
        json!({"mu": mu, "max_entry": max_entry, "max_rank": max_rank}),
        json!({"nodes": nodes.len(), "edges": edges.len(), "dot": dot}),
        dot,
    ))
}
