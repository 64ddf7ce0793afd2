//! Plain-text edge lists.
//!
//! ```text
//! # comment
//! p 4 4          optional header: vertex and edge counts
//! 1 2            edge between vertices 1 and 2
//! 2 3 1/2        optional third column: length (1/2)·π
//! ```

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use super::{Graph, Metric, Q};
use crate::error::{ParseError, ParseErrorKind};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeList {
    pub graph: Graph,
    pub metric: Metric,
}

pub fn parse_edge_list(text: &str) -> Result<EdgeList, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut raw: Vec<(u64, u64, Option<Q>, usize)> = Vec::new();
    let mut seen = BTreeSet::new();
    let mut lengths_seen: Option<bool> = None;

    for (idx, line) in text.lines().enumerate() {
        let lineno = idx + 1;
        let content = line.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        if fields[0] == "p" {
            if header.is_some() || !raw.is_empty() || fields.len() != 3 {
                return Err(ParseError::new(lineno, ParseErrorKind::Malformed(line.into())));
            }
            let n = fields[1].parse().map_err(|_| malformed(lineno, line))?;
            let m = fields[2].parse().map_err(|_| malformed(lineno, line))?;
            header = Some((n, m));
            continue;
        }
        if fields.len() != 2 && fields.len() != 3 {
            return Err(malformed(lineno, line));
        }
        let a: u64 = fields[0].parse().map_err(|_| malformed(lineno, line))?;
        let b: u64 = fields[1].parse().map_err(|_| malformed(lineno, line))?;
        let len = if fields.len() == 3 {
            Some(parse_length(fields[2]).ok_or_else(|| {
                ParseError::new(lineno, ParseErrorKind::BadLength(fields[2].into()))
            })?)
        } else {
            None
        };
        match lengths_seen {
            None => lengths_seen = Some(len.is_some()),
            Some(prev) if prev != len.is_some() => {
                return Err(ParseError::new(
                    lineno,
                    ParseErrorKind::BadLength("length column must be given on every edge or none".into()),
                ))
            }
            _ => {}
        }
        if a == b {
            return Err(ParseError::new(lineno, ParseErrorKind::SelfLoop(a)));
        }
        if !seen.insert((a.min(b), a.max(b))) {
            return Err(ParseError::new(lineno, ParseErrorKind::DuplicateEdge(a, b)));
        }
        raw.push((a, b, len, lineno));
    }

    // Vertex ids: 1..=n with a header; otherwise the ids used, relabelled in
    // ascending order when they are not already exactly 1..=max.
    let (n, index, labels): (usize, BTreeMap<u64, usize>, Option<Vec<String>>) = match header {
        Some((n, m)) => {
            if m != raw.len() {
                return Err(ParseError::new(
                    raw.last().map_or(1, |r| r.3),
                    ParseErrorKind::EdgeCount {
                        declared: m,
                        found: raw.len(),
                    },
                ));
            }
            for &(a, b, _, lineno) in &raw {
                for v in [a, b] {
                    if v == 0 || v as usize > n {
                        return Err(ParseError::new(lineno, ParseErrorKind::VertexOutOfRange(v, n)));
                    }
                }
            }
            (n, (1..=n as u64).map(|v| (v, v as usize - 1)).collect(), None)
        }
        None => {
            let ids: BTreeSet<u64> = raw.iter().flat_map(|r| [r.0, r.1]).collect();
            let contiguous = ids.iter().enumerate().all(|(i, &v)| v == i as u64 + 1);
            let index = ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
            let labels = (!contiguous).then(|| ids.iter().map(|v| v.to_string()).collect());
            (ids.len(), index, labels)
        }
    };

    let mut edges = Vec::with_capacity(raw.len());
    for &(a, b, _, _) in &raw {
        edges.push((index[&a], index[&b]));
    }
    let mut graph = Graph::new(n, &edges).map_err(|e| ParseError::new(0, ParseErrorKind::Malformed(e.to_string())))?;
    if let Some(labels) = labels {
        graph = graph.with_labels(labels).expect("one label per vertex");
    }
    let metric = if lengths_seen == Some(true) {
        let mut lengths = vec![Q::from_integer(0); graph.edge_count()];
        for &(a, b, len, _) in &raw {
            let e = graph.edge_between(index[&a], index[&b]).expect("edge was inserted");
            lengths[e] = len.expect("length column present");
        }
        Metric::Angular(lengths)
    } else {
        Metric::Combinatorial
    };
    Ok(EdgeList { graph, metric })
}

fn malformed(line: usize, text: &str) -> ParseError {
    ParseError::new(line, ParseErrorKind::Malformed(text.trim().into()))
}

/// `p/q` or an integer; must be strictly positive.
pub(crate) fn parse_length(s: &str) -> Option<Q> {
    let q = match s.split_once('/') {
        Some((p, d)) => {
            let d: i64 = d.trim().parse().ok()?;
            if d == 0 {
                return None;
            }
            Q::new(p.trim().parse().ok()?, d)
        }
        None => Q::from_integer(s.trim().parse().ok()?),
    };
    (q > Q::from_integer(0)).then_some(q)
}

/// Writes `g` in the edge-list format with a header line.
pub fn to_edge_list(g: &Graph, m: &Metric) -> String {
    let mut out = format!("p {} {}\n", g.n(), g.edge_count());
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        match m {
            Metric::Combinatorial => writeln!(out, "{} {}", a + 1, b + 1),
            Metric::Angular(l) => writeln!(out, "{} {} {}", a + 1, b + 1, l[e]),
        }
        .expect("writing to a String cannot fail");
    }
    out
}
