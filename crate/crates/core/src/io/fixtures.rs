//! The bundled fixture corpus and its expected-results sidecars.
//!
//! A sidecar line reads `label kind strategy value`:
//!
//! * `kind` is an algorithm selector (`auto`, `oracle`, `tree-leaf`, ...)
//!   meaning "solve the instance with it", or `check` meaning "evaluate the
//!   given strategy".
//! * `strategy` is a comma-separated list of edge ids, or `-` to leave the
//!   strategy unchecked (it is required for `check`).
//! * `value` is an integer or `INFEASIBLE`.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::graph::EdgeId;
use crate::instance::Instance;
use crate::interdiction::{solve, strategy_value, InterdictionStrategy, Selector};
use crate::io::format::parse;
use crate::median::MedianValue;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Fixture {
    pub name: &'static str,
    pub text: &'static str,
    pub expected: &'static str,
}

macro_rules! fixture {
    ($name:literal) => {
        Fixture {
            name: $name,
            text: include_str!(concat!("../../fixtures/", $name, ".txt")),
            expected: include_str!(concat!("../../fixtures/", $name, ".expected")),
        }
    };
}

pub const FIXTURES: [Fixture; 4] = [
    fixture!("p7"),
    fixture!("fig5"),
    fixture!("fig7"),
    fixture!("gadget"),
];

pub fn fixture(name: &str) -> Option<&'static Fixture> {
    FIXTURES.iter().find(|f| f.name == name)
}

impl Fixture {
    pub fn instance(&self) -> Result<Instance> {
        parse(self.text)
    }

    pub fn claims(&self) -> Result<Vec<Claim>> {
        parse_claims(self.expected)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClaimKind {
    Solve(Selector),
    Check,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Claim {
    pub label: String,
    pub kind: ClaimKind,
    pub strategy: Option<Vec<EdgeId>>,
    pub value: MedianValue,
}

/// What evaluating a claim produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClaimOutcome {
    pub strategy: Vec<EdgeId>,
    pub value: MedianValue,
    pub pass: bool,
}

pub fn parse_claims(text: &str) -> Result<Vec<Claim>> {
    let mut claims = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let bad = |message: String| Error::Parse {
            line: i + 1,
            column: 1,
            message,
        };
        let Some((label, kind, strategy, value)) = line.split_whitespace().collect_tuple() else {
            return Err(bad("expected `label kind strategy value`".into()));
        };
        let kind = if kind == "check" {
            ClaimKind::Check
        } else {
            ClaimKind::Solve(kind.parse().map_err(|e: Error| bad(e.to_string()))?)
        };
        let strategy = if strategy == "-" {
            None
        } else {
            Some(parse_edge_list(strategy).map_err(|e| bad(e.to_string()))?)
        };
        if kind == ClaimKind::Check && strategy.is_none() {
            return Err(bad("a check claim needs a strategy".into()));
        }
        let value = parse_value(value).map_err(|e| bad(e.to_string()))?;
        claims.push(Claim {
            label: label.to_string(),
            kind,
            strategy,
            value,
        });
    }
    Ok(claims)
}

/// Comma-separated edge ids, each optionally prefixed with `e`:
/// `3`, `e3,e4`, `1, 2`. An empty string is the empty strategy.
pub fn parse_edge_list(text: &str) -> Result<Vec<EdgeId>> {
    text.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            let digits = t.strip_prefix('e').unwrap_or(t);
            digits
                .parse::<EdgeId>()
                .map_err(|_| Error::Input(format!("bad edge id `{t}`")))
        })
        .collect()
}

pub fn parse_value(text: &str) -> Result<MedianValue> {
    if text == "INFEASIBLE" {
        return Ok(MedianValue::Infeasible);
    }
    text.parse()
        .map(MedianValue::Finite)
        .map_err(|_| Error::Input(format!("bad value `{text}`")))
}

pub fn evaluate_claim(instance: &Instance, claim: &Claim) -> Result<ClaimOutcome> {
    let (strategy, value) = match claim.kind {
        ClaimKind::Check => {
            let edges = claim.strategy.clone().unwrap_or_default();
            let s = InterdictionStrategy::new(&instance.graph, edges)?;
            let (_, value) = strategy_value(&instance.graph, &s, instance.p, instance.budget)?;
            (s.edges().to_vec(), value)
        }
        ClaimKind::Solve(selector) => {
            let r = solve(instance, selector)?;
            (r.strategy.edges().to_vec(), r.value)
        }
    };
    let strategy_ok = claim.strategy.as_ref().is_none_or(|s| {
        let mut s = s.clone();
        s.sort_unstable();
        s == strategy
    });
    Ok(ClaimOutcome {
        pass: strategy_ok && value == claim.value,
        strategy,
        value,
    })
}
