use std::collections::HashSet;
use std::fmt::Write as _;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::instance::Instance;
use crate::interdiction::{InterdictionStrategy, SolveResult};
use crate::median::{FacilitySet, MedianValue};

/// An integer token and where it starts (1-based line and column).
#[derive(Debug, Clone, Copy)]
struct Token<'a> {
    text: &'a str,
    line: usize,
    column: usize,
}

fn tokenize(text: &str) -> Vec<Token<'_>> {
    let mut tokens = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let content = raw.split('#').next().unwrap_or("");
        let mut rest = content;
        let mut offset = 0;
        while let Some(start) = rest.find(|c: char| !c.is_whitespace()) {
            let tail = &rest[start..];
            let len = tail.find(char::is_whitespace).unwrap_or(tail.len());
            tokens.push(Token {
                text: &tail[..len],
                line: i + 1,
                column: offset + start + 1,
            });
            offset += start + len;
            rest = &tail[len..];
        }
    }
    tokens
}

struct Reader<'a> {
    tokens: std::vec::IntoIter<Token<'a>>,
    last: (usize, usize),
}

impl<'a> Reader<'a> {
    fn next(&mut self, what: &str) -> Result<(u64, Token<'a>)> {
        let tok = self.tokens.next().ok_or_else(|| Error::Parse {
            line: self.last.0,
            column: self.last.1,
            message: format!("unexpected end of input, expected {what}"),
        })?;
        self.last = (tok.line, tok.column);
        let value = tok.text.parse::<u64>().map_err(|_| {
            at(
                tok,
                format!(
                    "expected {what} as a nonnegative integer, found `{}`",
                    tok.text
                ),
            )
        })?;
        Ok((value, tok))
    }
}

fn at(tok: Token<'_>, message: String) -> Error {
    Error::Parse {
        line: tok.line,
        column: tok.column,
        message,
    }
}

/// Parses the instance format: `n m`, then `p B`, then `m` records
/// `u v length cost`. Integers are whitespace separated and `#` starts a
/// comment running to the end of the line.
pub fn parse(text: &str) -> Result<Instance> {
    let mut r = Reader {
        tokens: tokenize(text).into_iter(),
        last: (1, 1),
    };
    let (n, n_tok) = r.next("vertex count n")?;
    let (m, _) = r.next("edge count m")?;
    let (p, p_tok) = r.next("facility count p")?;
    let (budget, _) = r.next("budget B")?;
    if n == 0 {
        return Err(at(n_tok, "vertex count must be at least 1".into()));
    }
    let n = usize::try_from(n).map_err(|_| at(n_tok, "vertex count too large".into()))?;
    if p == 0 || p > n as u64 {
        return Err(at(p_tok, format!("p = {p} must lie in 1..={n}")));
    }

    let mut edges = Vec::new();
    let mut seen = HashSet::new();
    for i in 1..=m {
        let (u, u_tok) = r.next(&format!("endpoint u of edge {i}"))?;
        let (v, v_tok) = r.next(&format!("endpoint v of edge {i}"))?;
        let (length, _) = r.next(&format!("length of edge {i}"))?;
        let (cost, cost_tok) = r.next(&format!("cost of edge {i}"))?;
        for (x, tok) in [(u, u_tok), (v, v_tok)] {
            if x == 0 || x > n as u64 {
                return Err(at(tok, format!("edge {i}: vertex {x} outside 1..={n}")));
            }
        }
        if u == v {
            return Err(at(u_tok, format!("edge {i}: self-loop at vertex {u}")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(at(
                u_tok,
                format!("edge {i}: parallel edge between {u} and {v}"),
            ));
        }
        if cost == 0 {
            return Err(at(
                cost_tok,
                format!("edge {i}: interdiction cost must be at least 1"),
            ));
        }
        edges.push(Edge::new(u as usize, v as usize, length, cost));
    }
    if let Some(extra) = r.tokens.next() {
        return Err(at(
            extra,
            format!("trailing token `{}` after {m} edge records", extra.text),
        ));
    }
    Instance::new(Graph::new(n, edges)?, p as usize, budget)
}

/// Canonical text of an instance, without comments.
pub fn serialize(instance: &Instance) -> String {
    let g = &instance.graph;
    let mut out = format!(
        "{} {}\n{} {}\n",
        g.vertex_count(),
        g.edge_count(),
        instance.p,
        instance.budget
    );
    for e in g.edges() {
        writeln!(out, "{} {} {} {}", e.u, e.v, e.length, e.cost).unwrap();
    }
    out
}

/// `comments` as `# ` lines followed by the canonical instance text.
pub fn serialize_with_comments(instance: &Instance, comments: &[String]) -> String {
    let mut out: String = comments.iter().map(|c| format!("# {c}\n")).collect();
    out.push_str(&serialize(instance));
    out
}

/// Machine-readable result: `strategy`, `facilities`, `value` and
/// `algorithm` lines. An empty strategy is written as `-`.
pub fn serialize_result(result: &SolveResult) -> String {
    let mut out = serialize_evaluation(&result.strategy, &result.locator_response, result.value);
    writeln!(out, "algorithm {}", result.algorithm).unwrap();
    out
}

/// The `strategy`, `facilities` and `value` lines of [`serialize_result`],
/// for a strategy evaluated directly rather than solved for.
pub fn serialize_evaluation(
    strategy: &InterdictionStrategy,
    facilities: &FacilitySet,
    value: MedianValue,
) -> String {
    let edges = if strategy.is_empty() {
        "-".to_string()
    } else {
        strategy.edges().iter().join(" ")
    };
    format!(
        "strategy {edges}\nfacilities {}\nvalue {value}\n",
        facilities.vertices().iter().join(" ")
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interdiction::Algorithm;

    const P7: &str = "7 6\n2 1\n1 2 1 1\n2 3 1 1\n3 4 1 1\n4 5 1 1\n5 6 1 1\n6 7 1 1\n";

    fn parse_err(text: &str) -> (usize, usize, String) {
        match parse(text) {
            Err(Error::Parse {
                line,
                column,
                message,
            }) => (line, column, message),
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn parses_unit_path() {
        let inst = parse(P7).unwrap();
        assert_eq!(inst.graph, Graph::unit_path(7));
        assert_eq!((inst.p, inst.budget), (2, 1));
        let one_line = "7 6 2 1\n1 2 1 1\n2 3 1 1\n3 4 1 1\n4 5 1 1\n5 6 1 1\n6 7 1 1\n";
        assert_eq!(parse(one_line).unwrap(), inst);
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = "# header\n\n3 2 # n m\n1 0\n1 2 4 1\n# middle\n2 3 0 2\n";
        let inst = parse(text).unwrap();
        assert_eq!(inst.graph.edge(1).length, 4);
        assert_eq!(inst.graph.edge(2).cost, 2);
        assert_eq!(serialize(&inst), "3 2\n1 0\n1 2 4 1\n2 3 0 2\n");
    }

    #[test]
    fn rejects_bad_records() {
        let (line, col, msg) = parse_err("2 1\n1 0\n1 1 1 1\n");
        assert_eq!((line, col), (3, 1));
        assert!(msg.contains("self-loop"));

        let (line, _, msg) = parse_err("3 2\n1 0\n1 2 1 1\n2 1 1 1\n");
        assert_eq!(line, 4);
        assert!(msg.contains("parallel"));

        let (line, col, msg) = parse_err("2 1\n1 0\n1 3 1 1\n");
        assert_eq!((line, col), (3, 3));
        assert!(msg.contains("outside"));

        let (_, col, msg) = parse_err("2 1\n1 0\n1 2 1 0\n");
        assert_eq!(col, 7);
        assert!(msg.contains("cost"));

        let (line, col, _) = parse_err("2 1\n1 0\n1 2 x 1\n");
        assert_eq!((line, col), (3, 5));

        assert!(parse_err("2 1\n3 0\n1 2 1 1\n").2.contains("p = 3"));
        assert!(parse_err("2 1\n1 0\n1 2 1\n").2.contains("end of input"));
        assert!(parse_err("2 1\n1 0\n1 2 1 1\n9\n").2.contains("trailing"));
        assert!(parse_err("0 0\n1 0\n").2.contains("at least 1"));
        assert!(parse_err("2 1\n1 -1\n1 2 1 1\n").2.contains("budget"));
    }

    #[test]
    fn round_trips() {
        for text in [
            P7,
            "1 0\n1 0\n",
            "7 6\n2 1\n1 3 10 1\n2 3 10 1\n3 4 1 1\n4 5 1 1\n5 6 10 1\n5 7 10 1\n",
        ] {
            let inst = parse(text).unwrap();
            assert_eq!(serialize(&inst), text);
            assert_eq!(parse(&serialize(&inst)).unwrap(), inst);
        }
    }

    #[test]
    fn result_text() {
        let g = Graph::unit_path(4);
        let r = SolveResult {
            strategy: InterdictionStrategy::new(&g, vec![3, 1]).unwrap(),
            locator_response: FacilitySet::new(vec![4, 1, 2]).unwrap(),
            value: MedianValue::Finite(1),
            algorithm: Algorithm::Oracle,
        };
        assert_eq!(
            serialize_result(&r),
            "strategy 1 3\nfacilities 1 2 4\nvalue 1\nalgorithm oracle\n"
        );
        let r = SolveResult {
            strategy: InterdictionStrategy::empty(),
            value: MedianValue::Infeasible,
            ..r
        };
        assert_eq!(
            serialize_result(&r),
            "strategy -\nfacilities 1 2 4\nvalue INFEASIBLE\nalgorithm oracle\n"
        );
    }
}
