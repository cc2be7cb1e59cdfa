// Copyright 2026 The pairdecomp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! Text formats for profiles and cost graphs.
//!
//! Profile files hold one ballot group per line, `COUNT: NAME > ... > NAME`.
//! Graph files start with `asym N` or `sym N`, then one `I J W` line per
//! pair with `1 <= I < J <= N`. In both, `#` starts a comment and blank
//! lines are skipped.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::pairspace::{pair_count, pair_index, pairs};
use crate::rational::Rational;
use crate::tsp::{CostGraph, GraphMode};
use crate::voting::{BallotGroup, Profile};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedProfile {
    pub profile: Profile,
    /// Alternative names in first-appearance order.
    pub names: Vec<String>,
}

/// Yields `(line number, content)` with comments stripped and blank lines dropped.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(k, raw)| {
        let line = raw.split('#').next().unwrap().trim();
        (!line.is_empty()).then_some((k + 1, line))
    })
}

pub fn parse_profile(text: &str) -> Result<NamedProfile> {
    let mut names: Vec<String> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut groups = Vec::new();
    let mut last_line = 0;
    for (line, content) in content_lines(text) {
        last_line = line;
        let (count, ballot) = content
            .split_once(':')
            .ok_or_else(|| Error::parse(line, "expected `COUNT: NAME > NAME > ...`"))?;
        let count: u64 = count.trim().parse().map_err(|_| {
            Error::parse(
                line,
                format!("count `{}` is not a non-negative integer", count.trim()),
            )
        })?;
        if count == 0 {
            return Err(Error::parse(line, "count must be positive"));
        }
        let first = groups.is_empty();
        let mut ranking = Vec::new();
        for name in ballot.split('>').map(str::trim) {
            if name.is_empty() || name.contains(char::is_whitespace) {
                return Err(Error::parse(line, format!("bad alternative name `{name}`")));
            }
            let id = match index.get(name) {
                Some(&id) => id,
                None if first => {
                    index.insert(name.to_string(), names.len());
                    names.push(name.to_string());
                    names.len() - 1
                }
                None => {
                    return Err(Error::parse(
                        line,
                        format!("`{name}` does not appear on the first ballot"),
                    ))
                }
            };
            if ranking.contains(&id) {
                return Err(Error::parse(line, format!("`{name}` ranked twice")));
            }
            ranking.push(id);
        }
        if ranking.len() != names.len() {
            return Err(Error::parse(
                line,
                format!(
                    "ballot ranks {} alternatives, the first ballot ranks {}",
                    ranking.len(),
                    names.len()
                ),
            ));
        }
        groups.push(BallotGroup { count, ranking });
    }
    if groups.is_empty() {
        return Err(Error::parse(last_line.max(1), "no ballots"));
    }
    let profile =
        Profile::new(names.len(), groups).map_err(|e| Error::parse(last_line, e.to_string()))?;
    Ok(NamedProfile { profile, names })
}

pub fn render_profile(p: &Profile, names: &[String]) -> String {
    let mut out = String::new();
    for g in p.groups() {
        let ballot: Vec<&str> = g.ranking.iter().map(|&a| names[a].as_str()).collect();
        writeln!(out, "{}: {}", g.count, ballot.join(" > ")).unwrap();
    }
    out
}

pub fn parse_graph(text: &str) -> Result<CostGraph> {
    let mut lines = content_lines(text);
    let (hline, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "empty graph file"))?;
    let mut words = header.split_whitespace();
    let mode = match words.next() {
        Some("asym") => GraphMode::Asymmetric,
        Some("sym") => GraphMode::Symmetric,
        _ => return Err(Error::parse(hline, "header must be `asym N` or `sym N`")),
    };
    let n: usize = match (words.next().map(str::parse), words.next()) {
        (Some(Ok(n)), None) if n >= 2 => n,
        _ => return Err(Error::parse(hline, "vertex count must be an integer >= 2")),
    };
    let mut weights: Vec<Option<Rational>> = vec![None; pair_count(n)];
    let mut last_line = hline;
    for (line, content) in lines {
        last_line = line;
        let fields: Vec<&str> = content.split_whitespace().collect();
        let [i, j, w] = fields[..] else {
            return Err(Error::parse(line, "expected `I J W`"));
        };
        let vertex = |s: &str| -> Result<usize> {
            match s.parse::<usize>() {
                Ok(v) if (1..=n).contains(&v) => Ok(v - 1),
                _ => Err(Error::parse(line, format!("vertex `{s}` not in 1..={n}"))),
            }
        };
        let (i, j) = (vertex(i)?, vertex(j)?);
        if i >= j {
            return Err(Error::parse(line, "pairs must be written with I < J"));
        }
        let w: Rational = w.parse().map_err(|e| Error::parse(line, format!("{e}")))?;
        let slot = &mut weights[pair_index(n, i, j)?];
        if slot.is_some() {
            return Err(Error::parse(
                line,
                format!("duplicate pair {} {}", i + 1, j + 1),
            ));
        }
        *slot = Some(w);
    }
    let weights = pairs(n)
        .zip(weights)
        .map(|((i, j), w)| {
            w.ok_or_else(|| Error::parse(last_line, format!("missing pair {} {}", i + 1, j + 1)))
        })
        .collect::<Result<Vec<_>>>()?;
    CostGraph::new(mode, n, weights)
}

pub fn render_graph(g: &CostGraph) -> String {
    let mut out = format!("{} {}\n", g.mode().keyword(), g.n());
    for ((i, j), w) in pairs(g.n()).zip(g.weights()) {
        writeln!(out, "{} {} {}", i + 1, j + 1, w).unwrap();
    }
    out
}

/// DOT text for a graph: one labelled edge per pair, oriented along the
/// positive direction for asymmetric graphs. Zero arcs are omitted.
pub fn render_dot(g: &CostGraph, name: &str) -> String {
    let (kind, op) = match g.mode() {
        GraphMode::Asymmetric => ("digraph", "->"),
        GraphMode::Symmetric => ("graph", "--"),
    };
    let mut out = format!("{kind} {name} {{\n");
    for (i, j) in pairs(g.n()) {
        let w = g.value(i, j);
        if w.is_zero() {
            continue;
        }
        let (a, b, w) = if g.mode() == GraphMode::Asymmetric && w.is_negative() {
            (j, i, -w)
        } else {
            (i, j, w)
        };
        writeln!(out, "  A{} {op} A{} [label=\"{w}\"];", a + 1, b + 1).unwrap();
    }
    out.push_str("}\n");
    out
}

/// True when the first content line is a graph header.
pub fn looks_like_graph(text: &str) -> bool {
    content_lines(text)
        .next()
        .is_some_and(|(_, l)| matches!(l.split_whitespace().next(), Some("asym" | "sym")))
}
