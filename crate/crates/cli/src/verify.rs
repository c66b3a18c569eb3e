//! Reference checks with known answers, run by `verify-paper`.

use std::fmt::Write as _;

use plethysm_core::extrema::{
    lex_greatest, lex_least, lex_max_weight_family, lexmin_multiplicity_hook, lexmin_segments,
    lexmin_type_from_trace, least_n_attaining_max_hook_multiplicity, maximal_constituents,
    minimal_constituents, PlethysmInstance,
};
use plethysm_core::family::{count_tuples_of_type, enumerate_closed_families};
use plethysm_core::multiplicity::bounds;
use plethysm_core::oracle::{full_decomposition, plethysm_coefficient};
use plethysm_core::partition::count_partitions_in_box;
use plethysm_core::{Error, Partition, Tableau};
use serde::Serialize;
use serde_json::json;

use crate::commands::Report;

#[derive(Debug, Serialize)]
struct Check {
    name: String,
    expected: String,
    actual: String,
    passed: bool,
}

fn p(s: &str) -> Partition {
    s.parse().expect("literal partitions parse")
}

fn inst(mu: &str, nu: &str) -> PlethysmInstance {
    PlethysmInstance::new(p(mu), p(nu)).expect("literal instances are valid")
}

fn list(ps: &[Partition]) -> String {
    ps.iter().map(Partition::to_string).collect::<Vec<_>>().join(" ")
}

fn tableaux(ts: &[Tableau]) -> String {
    ts.iter().map(Tableau::to_string).collect::<Vec<_>>().join(" ")
}

struct Checks(Vec<Check>);

impl Checks {
    fn add(&mut self, name: impl Into<String>, expected: impl Into<String>, actual: Result<String, Error>) {
        let expected = expected.into();
        let actual = actual.unwrap_or_else(|e| format!("error: {e}"));
        let passed = expected == actual;
        self.0.push(Check { name: name.into(), expected, actual, passed });
    }
}

fn fast_checks(c: &mut Checks) {
    c.add(
        "closed families of four (2,1)-tableaux",
        "5,1^7 4,2^2,1^4 3^2,2^2,1^2 3^2,2^2,1^2 4,2^4",
        enumerate_closed_families(&p("2,1"), 4)
            .iter()
            .map(|f| f.family_type())
            .collect::<Result<Vec<_>, _>>()
            .map(|ts| list(&ts)),
    );

    for (nu, min, max) in [
        ("4", "5,1^7 4,2^2,1^4 3^2,2^2,1^2", "8,4"),
        ("3,1", "4,2,1^6 3,2^3,1^3", "8,3,1 7,5"),
    ] {
        let i = inst("2,1", nu);
        c.add(format!("minimal constituents for nu = {nu}"), min, minimal_constituents(&i).map(|v| list(&v)));
        c.add(format!("maximal constituents for nu = {nu}"), max, maximal_constituents(&i).map(|v| list(&v)));
    }

    c.add(
        "s_2[s_2] decomposition",
        "1 4, 1 2^2",
        full_decomposition(&p("2"), &p("2")).map(|e| {
            e.constituents().iter().map(|(l, m)| format!("{m} {l}")).collect::<Vec<_>>().join(", ")
        }),
    );

    for (nu, lambda) in [("4", "3^2,2^2,1^2"), ("4,1", "3^2,2^3,1^3")] {
        c.add(
            format!("multiplicity bounds of {lambda} for nu = {nu}"),
            "lower 2, upper 2, exact 2",
            bounds(&p("2,1"), &p(nu), &p(lambda), true).map(|b| {
                format!("lower {}, upper {}, exact {}", b.lower, b.upper_ordered, b.exact.unwrap_or(0))
            }),
        );
    }

    match lexmin_segments(&p("3,1"), 7) {
        Ok(t) => {
            c.add("segment bounds for (3,1), n = 7", "[3, 2, 1, 0]", Ok(format!("{:?}", t.k)));
            c.add(
                "segment tiers for (3,1), n = 7",
                "123/1 123/2 123/3 | 124/1 124/2 | 134/1 | ",
                Ok(t.tiers.iter().map(|x| tableaux(x)).collect::<Vec<_>>().join(" | ")),
            );
            c.add("segment pool for (3,1), n = 7", "123/4 124/3 134/2", Ok(tableaux(&t.pool)));
            c.add("segment completions for (3,1), n = 7", "3", Ok(t.completion_count().to_string()));
            c.add("least type for (3,1), n = 7", "4^4,3^2,2^2,1^2", lexmin_type_from_trace(&t).map(|x| x.to_string()));
        }
        Err(e) => c.add("segment construction for (3,1), n = 7", "ok", Err(e)),
    }
    c.add("hook multiplicity for m = 4, n = 7", "3", lexmin_multiplicity_hook(4, 7).map(|x| x.to_string()));
    c.add("least n with hook multiplicity 3 for m = 4", "7", least_n_attaining_max_hook_multiplicity(4).map(|x| x.to_string()));

    c.add(
        "lexicographically greatest for (2,1), (4)",
        "8,4 x1",
        lex_greatest(&inst("2,1", "4")).map(|(l, m)| format!("{l} x{m}")),
    );
    c.add("lexicographically least for (2,1), (4,1)", "3^2,2^3,1^3", lex_least(&inst("2,1", "4,1")).map(|l| l.to_string()));

    c.add(
        "weight of the greatest family of three (3,3)-tableaux",
        "(6,6,4,1,1)",
        lex_max_weight_family(&p("3,3"), 3).map(|f| f.weight().to_string()),
    );
    c.add(
        "weight of the least family of three (3,3)-tableaux",
        "(6,5,5,2)",
        lexmin_segments(&p("3,3"), 3).map(|t| t.canonical_family().weight().to_string()),
    );

    for (m, n) in [(2, 2), (2, 3), (3, 2), (3, 3), (2, 4)] {
        let mn = m * n;
        let expected: Vec<String> = (0..=mn / 2)
            .map(|d| {
                let below = if d == 0 { 0 } else { count_partitions_in_box(d - 1, n, m) };
                (count_partitions_in_box(d, n, m) - below).to_string()
            })
            .collect();
        let actual = full_decomposition(&Partition::new(vec![n]).unwrap(), &Partition::new(vec![m]).unwrap()).map(|e| {
            (0..=mn / 2)
                .map(|d| {
                    let lambda = Partition::from_unsorted(vec![mn - d, d]);
                    e.multiplicity(&lambda).to_string()
                })
                .collect::<Vec<_>>()
                .join(" ")
        });
        c.add(format!("two-row multiplicities of s_{n}[s_{m}]"), expected.join(" "), actual);
    }
}

fn full_checks(c: &mut Checks) {
    let mu = p("2,1");
    let nu = p("8,8");
    let lambda = p("4^4,3^5,2^5,1^7");
    c.add(
        "tuples of type 4^4,3^5,2^5,1^7 for nu = 8,8",
        "5",
        count_tuples_of_type(&mu, &nu, &lambda).map(|t| t.symmetrized.to_string()),
    );
    c.add(
        "coefficient of 4^4,3^5,2^5,1^7 in s_8,8[s_2,1]",
        "4",
        plethysm_coefficient(&nu, &mu, &lambda).map(|x| x.to_string()),
    );
}

pub fn run(full: bool) -> Report {
    let mut checks = Checks(Vec::new());
    fast_checks(&mut checks);
    if full {
        full_checks(&mut checks);
    }
    let mut text = String::new();
    for check in &checks.0 {
        if check.passed {
            writeln!(text, "PASS  {}", check.name).unwrap();
        } else {
            writeln!(text, "FAIL  {}: expected {}, got {}", check.name, check.expected, check.actual).unwrap();
        }
    }
    let failures = checks.0.iter().filter(|c| !c.passed).count();
    writeln!(text, "{} checks, {failures} failed", checks.0.len()).unwrap();
    Report {
        command: "verify-paper",
        inputs: json!({"full": full}),
        outputs: json!({"checks": checks.0, "failed": failures}),
        text,
        failed: failures > 0,
    }
}
