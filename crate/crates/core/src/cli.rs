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

//! Command-line front end. `run` parses arguments and returns the report
//! text with its exit code so that tests can drive it without a process.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::io::{
    looks_like_graph, parse_graph, parse_profile, render_dot, render_profile, NamedProfile,
};
use crate::pairspace::{
    condorcet_loser, condorcet_winner, decompose, default_names, is_transitive, pairs,
    PairwiseVector,
};
use crate::rational::Rational;
use crate::suites::{run_suite, Suite, SuiteConfig};
use crate::tsp::{
    decompose_symmetric, exact_hamiltonian_with_limit, heuristic_hamiltonian,
    lower_bound_symmetric, path_length, path_length_via_decomposition, CircuitResult, CostGraph,
    GraphMode, Objective, EXACT_DEFAULT_LIMIT,
};
use crate::voting::{
    borda_direct, borda_from_scores, dodgson_committee, dodgson_scores, iiia_tally, iiia_vector,
    kemeny, margins_from_profile, search_ratliff,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "pairdecomp",
    version,
    about = "Pairwise-difference decompositions for voting and circuits"
)]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Split a profile's margins or a graph into its transitive and cyclic parts.
    Decompose {
        file: PathBuf,
        /// Also emit DOT text of the components.
        #[arg(long)]
        dot: bool,
    },
    /// Apply a voting rule to a profile file.
    Vote {
        rule: Rule,
        file: PathBuf,
        /// Committee size for `committee`.
        #[arg(long, default_value_t = 2)]
        size: usize,
        /// Restrict `iiia` to one pair of names.
        #[arg(long, num_args = 2, value_names = ["A", "B"])]
        pair: Option<Vec<String>>,
    },
    /// Hamiltonian circuits and path lengths on a graph file.
    Tsp {
        action: TspAction,
        file: PathBuf,
        #[command(flatten)]
        objective: ObjectiveArgs,
        /// Vertices for `pathlen`, e.g. `1,2,4` or `A1 A2 A4`.
        #[arg(long)]
        path: Option<String>,
        /// Include the arc back to the first vertex for `pathlen`.
        #[arg(long)]
        closed: bool,
        /// With `heuristic`, also solve exactly and report the gap.
        #[arg(long)]
        compare: bool,
        /// Largest vertex count the exact solver accepts.
        #[arg(long, default_value_t = EXACT_DEFAULT_LIMIT)]
        limit: usize,
    },
    /// Run a seeded randomized property suite.
    Verify {
        #[arg(value_parser = parse_suite)]
        suite: Suite,
        /// Fixed size; defaults to cycling through the suite's sizes.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Look for a profile whose Dodgson winner sits at slot k of the Kemeny ranking.
    SearchRatliff {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 1_000_000)]
        trials: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Rule {
    Borda,
    Condorcet,
    Kemeny,
    Dodgson,
    Committee,
    Iiia,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TspAction {
    Exact,
    Heuristic,
    Bound,
    Pathlen,
}

#[derive(Debug, Clone, Copy, Args)]
#[group(multiple = false)]
pub struct ObjectiveArgs {
    #[arg(long)]
    longest: bool,
    #[arg(long)]
    shortest: bool,
}

impl ObjectiveArgs {
    fn objective(self) -> Objective {
        if self.longest {
            Objective::Longest
        } else {
            Objective::Shortest
        }
    }
}

fn parse_suite(s: &str) -> std::result::Result<Suite, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let (stdout, stderr) = if e.use_stderr() {
                (String::new(), text)
            } else {
                (text, String::new())
            };
            Output {
                stdout,
                stderr,
                code,
            }
        }
    }
}

pub fn execute(cli: &Cli) -> Output {
    match dispatch(cli) {
        Ok(report) => {
            let mut stdout = if cli.json {
                serde_json::to_string_pretty(&report.json).expect("reports serialize")
            } else {
                report.text
            };
            if !stdout.ends_with('\n') {
                stdout.push('\n');
            }
            Output {
                stdout,
                stderr: String::new(),
                code: report.code,
            }
        }
        Err(e) => Output {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            code: e.exit_code(),
        },
    }
}

struct Report {
    text: String,
    json: Value,
    code: i32,
}

impl Report {
    fn ok(text: String, json: Value) -> Self {
        Report {
            text,
            json,
            code: EXIT_OK,
        }
    }
}

fn dispatch(cli: &Cli) -> Result<Report> {
    match &cli.command {
        Command::Decompose { file, dot } => cmd_decompose(&read(file)?, *dot),
        Command::Vote {
            rule,
            file,
            size,
            pair,
        } => cmd_vote(*rule, &parse_profile(&read(file)?)?, *size, pair.as_deref()),
        Command::Tsp {
            action,
            file,
            objective,
            path,
            closed,
            compare,
            limit,
        } => {
            let g = parse_graph(&read(file)?)?;
            match action {
                TspAction::Exact => cmd_exact(&g, objective.objective(), *limit),
                TspAction::Heuristic => cmd_heuristic(&g, objective.objective(), *compare, *limit),
                TspAction::Bound => cmd_bound(&g),
                TspAction::Pathlen => {
                    let text = path
                        .as_deref()
                        .ok_or_else(|| Error::Domain("pathlen needs --path".into()))?;
                    cmd_pathlen(&g, &parse_path(text, g.n())?, *closed)
                }
            }
        }
        Command::Verify {
            suite,
            n,
            trials,
            seed,
        } => cmd_verify(
            *suite,
            &SuiteConfig {
                n: *n,
                trials: *trials,
                seed: *seed,
            },
        ),
        Command::SearchRatliff { n, k, trials, seed } => cmd_search_ratliff(*n, *k, *trials, *seed),
    }
}

fn read(path: &PathBuf) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::Domain(format!("cannot read {}: {e}", path.display())))
}

fn names_list(names: &[String], values: &[Rational]) -> String {
    names
        .iter()
        .zip(values)
        .map(|(a, v)| format!("{a} {v}"))
        .collect::<Vec<_>>()
        .join(", ")
}

fn named_values(names: &[String], values: &[Rational]) -> Value {
    Value::Array(
        names
            .iter()
            .zip(values)
            .map(|(a, v)| json!({ "name": a, "value": v }))
            .collect(),
    )
}

fn cmd_decompose(text: &str, dot: bool) -> Result<Report> {
    if !looks_like_graph(text) {
        let np = parse_profile(text)?;
        let d = margins_from_profile(&np.profile);
        return Ok(decompose_vector(&d, &np.names, "st", dot));
    }
    let g = parse_graph(text)?;
    match g.mode() {
        GraphMode::Asymmetric => Ok(decompose_vector(
            &g.to_pairwise()?,
            &default_names(g.n()),
            "cpi",
            dot,
        )),
        GraphMode::Symmetric => decompose_sym(&g),
    }
}

fn decompose_vector(d: &PairwiseVector, names: &[String], st_label: &str, dot: bool) -> Report {
    let dec = decompose(d);
    let mut text = String::new();
    writeln!(text, "n: {}", d.n()).unwrap();
    writeln!(text, "d: {d}").unwrap();
    writeln!(text, "{st_label}: {}", dec.st).unwrap();
    writeln!(text, "cyclic: {}", dec.cyclic).unwrap();
    writeln!(text, "scores: {}", names_list(names, &dec.scores)).unwrap();
    writeln!(text, "pairs:").unwrap();
    let mut rows = Vec::new();
    for (i, j) in pairs(d.n()) {
        let (v, s, c) = (d.value(i, j), dec.st.value(i, j), dec.cyclic.value(i, j));
        writeln!(
            text,
            "  {} {}: d {v}, {st_label} {s}, cyclic {c}",
            names[i], names[j]
        )
        .unwrap();
        rows.push(json!({ "pair": [names[i], names[j]], "d": v, st_label: s, "cyclic": c }));
    }
    writeln!(text, "three-cycles through {}:", names[0]).unwrap();
    let mut cycles = Vec::new();
    for ((j, k), c) in dec.cyclic_coefficients() {
        writeln!(
            text,
            "  {} > {} > {} > {}: {c}",
            names[0], names[j], names[k], names[0]
        )
        .unwrap();
        cycles.push(json!({ "cycle": [names[0], names[j], names[k]], "coefficient": c }));
    }
    let mut json = json!({
        "n": d.n(),
        "names": names,
        "d": d.entries(),
        st_label: dec.st.entries(),
        "cyclic": dec.cyclic.entries(),
        "scores": named_values(names, &dec.scores),
        "pairs": rows,
        "three_cycles": cycles,
    });
    if dot {
        let st_dot = render_dot(&CostGraph::from_pairwise(&dec.st), st_label);
        let cyc_dot = render_dot(&CostGraph::from_pairwise(&dec.cyclic), "cyclic");
        text.push_str(&st_dot);
        text.push_str(&cyc_dot);
        json["dot"] = json!({ st_label: st_dot, "cyclic": cyc_dot });
    }
    Report::ok(text, json)
}

fn decompose_sym(g: &CostGraph) -> Result<Report> {
    let dec = decompose_symmetric(g)?;
    let names = default_names(g.n());
    let sums = g.vertex_sums();
    let mut text = String::new();
    writeln!(text, "n: {}", g.n()).unwrap();
    writeln!(text, "T: {}", dec.t).unwrap();
    writeln!(text, "vertex sums: {}", names_list(&names, &sums)).unwrap();
    writeln!(text, "edges:").unwrap();
    let mut rows = Vec::new();
    for (i, j) in pairs(g.n()) {
        let (w, c) = (g.value(i, j), dec.cyclic.value(i, j));
        writeln!(text, "  {} {}: d {w}, cyclic {c}", names[i], names[j]).unwrap();
        rows.push(json!({ "pair": [names[i], names[j]], "d": w, "cyclic": c }));
    }
    Ok(Report::ok(
        text,
        json!({
            "n": g.n(),
            "T": dec.t,
            "vertex_sums": named_values(&names, &sums),
            "edges": rows,
        }),
    ))
}

fn cmd_vote(rule: Rule, np: &NamedProfile, size: usize, pair: Option<&[String]>) -> Result<Report> {
    let (p, names) = (&np.profile, &np.names);
    let d = margins_from_profile(p);
    let mut text = String::new();
    let json = match rule {
        Rule::Borda => {
            let direct = borda_direct(p);
            let via = borda_from_scores(&d, p.voters());
            writeln!(
                text,
                "Borda tallies: {}",
                names_list(names, &direct.tallies)
            )
            .unwrap();
            let agree = direct.tallies == via.tallies;
            writeln!(
                text,
                "from vertex scores: {}",
                if agree { "agrees" } else { "DISAGREES" }
            )
            .unwrap();
            json!({ "rule": "borda", "tallies": named_values(names, &direct.tallies), "via_scores": named_values(names, &via.tallies), "agree": agree })
        }
        Rule::Condorcet => {
            let (w, l) = (condorcet_winner(&d), condorcet_loser(&d));
            let why = if is_transitive(&d) { "tie" } else { "cycle" };
            match w {
                Some(w) => writeln!(text, "Condorcet winner: {}", names[w]).unwrap(),
                None => writeln!(text, "no Condorcet winner ({why})").unwrap(),
            }
            match l {
                Some(l) => writeln!(text, "Condorcet loser: {}", names[l]).unwrap(),
                None => writeln!(text, "no Condorcet loser ({why})").unwrap(),
            }
            writeln!(text, "margins: {d}").unwrap();
            json!({
                "rule": "condorcet",
                "winner": w.map(|w| &names[w]),
                "loser": l.map(|l| &names[l]),
                "transitive": is_transitive(&d),
                "margins": d.entries(),
            })
        }
        Rule::Kemeny => {
            let k = kemeny(&d)?;
            writeln!(text, "Kemeny score: {}", k.score).unwrap();
            writeln!(text, "optimal rankings ({}):", k.optima.len()).unwrap();
            let shown: Vec<String> = k.optima.iter().map(|r| r.display_with(names)).collect();
            for r in &shown {
                writeln!(text, "  {r}").unwrap();
            }
            json!({ "rule": "kemeny", "score": k.score, "optima": shown })
        }
        Rule::Dodgson => {
            let r = dodgson_scores(p)?;
            let scores: Vec<String> = names
                .iter()
                .zip(&r.scores)
                .map(|(a, s)| format!("{a} {s}"))
                .collect();
            writeln!(text, "Dodgson scores: {}", scores.join(", ")).unwrap();
            let winners: Vec<&String> = r.winners.iter().map(|&w| &names[w]).collect();
            writeln!(
                text,
                "winner{}: {}",
                if winners.len() > 1 { "s" } else { "" },
                winners
                    .iter()
                    .map(|s| s.as_str())
                    .collect::<Vec<_>>()
                    .join(", ")
            )
            .unwrap();
            json!({
                "rule": "dodgson",
                "scores": names.iter().zip(&r.scores).map(|(a, s)| json!({ "name": a, "value": s })).collect::<Vec<_>>(),
                "winners": winners,
            })
        }
        Rule::Committee => {
            let r = dodgson_committee(p, size)?;
            writeln!(text, "committee size {}: {} swaps", r.size, r.swaps).unwrap();
            let sets: Vec<Vec<&String>> = r
                .committees
                .iter()
                .map(|c| c.iter().map(|&a| &names[a]).collect())
                .collect();
            for c in &sets {
                writeln!(
                    text,
                    "  {{{}}}",
                    c.iter().map(|s| s.as_str()).collect::<Vec<_>>().join(", ")
                )
                .unwrap();
            }
            json!({ "rule": "committee", "size": r.size, "swaps": r.swaps, "committees": sets })
        }
        Rule::Iiia => match pair {
            Some([a, b]) => {
                let find = |x: &String| {
                    names
                        .iter()
                        .position(|n| n == x)
                        .ok_or_else(|| Error::Domain(format!("unknown alternative `{x}`")))
                };
                let (i, j) = (find(a)?, find(b)?);
                let t = iiia_tally(p, i, j)?;
                writeln!(text, "IIIA {a} vs {b}: {t}").unwrap();
                json!({ "rule": "iiia", "pair": [a, b], "tally": t })
            }
            _ => {
                let v = iiia_vector(p);
                let mut rows = Vec::new();
                for (i, j) in pairs(p.n()) {
                    writeln!(text, "IIIA {} vs {}: {}", names[i], names[j], v.value(i, j)).unwrap();
                    rows.push(json!({ "pair": [names[i], names[j]], "tally": v.value(i, j) }));
                }
                json!({ "rule": "iiia", "tallies": rows })
            }
        },
    };
    Ok(Report::ok(text, json))
}

fn tour_text(tour: &[usize]) -> String {
    let mut vs: Vec<String> = tour.iter().map(|v| format!("A{}", v + 1)).collect();
    vs.push(format!("A{}", tour[0] + 1));
    vs.join(" -> ")
}

fn circuit_json(r: &CircuitResult) -> Value {
    json!({
        "tour": r.tour.iter().map(|v| v + 1).collect::<Vec<_>>(),
        "length": r.length,
        "provenance": r.provenance,
    })
}

fn objective_name(o: Objective) -> &'static str {
    match o {
        Objective::Shortest => "shortest",
        Objective::Longest => "longest",
    }
}

fn cmd_exact(g: &CostGraph, objective: Objective, limit: usize) -> Result<Report> {
    let r = exact_hamiltonian_with_limit(g, objective, limit)?;
    let text = format!(
        "exact {} circuit: {}\nlength: {}\n",
        objective_name(objective),
        tour_text(&r.tour),
        r.length
    );
    Ok(Report::ok(
        text,
        json!({ "objective": objective_name(objective), "exact": circuit_json(&r) }),
    ))
}

fn cmd_heuristic(
    g: &CostGraph,
    objective: Objective,
    compare: bool,
    limit: usize,
) -> Result<Report> {
    let h = heuristic_hamiltonian(g, objective)?;
    let mut text = format!(
        "heuristic {} circuit: {}\nlength: {}\n",
        objective_name(objective),
        tour_text(&h.tour),
        h.length
    );
    let mut json = json!({ "objective": objective_name(objective), "heuristic": circuit_json(&h) });
    if compare {
        let e = exact_hamiltonian_with_limit(g, objective, limit)?;
        let gap = (h.length - e.length).abs();
        writeln!(
            text,
            "exact: {} ({})\ngap: {gap}",
            e.length,
            tour_text(&e.tour)
        )
        .unwrap();
        json["exact"] = circuit_json(&e);
        json["gap"] = json!(gap);
    }
    Ok(Report::ok(text, json))
}

fn cmd_bound(g: &CostGraph) -> Result<Report> {
    let b = lower_bound_symmetric(g)?;
    Ok(Report::ok(
        format!("lower bound on shortest circuit: {b}\n"),
        json!({ "lower_bound": b, "provenance": "bound" }),
    ))
}

fn cmd_pathlen(g: &CostGraph, path: &[usize], closed: bool) -> Result<Report> {
    let len = path_length(g, path, closed)?;
    let shown: Vec<String> = path.iter().map(|v| format!("A{}", v + 1)).collect();
    let mut text = format!(
        "{} path {}: length {len}\n",
        if closed { "closed" } else { "open" },
        shown.join(" -> ")
    );
    let mut json = json!({ "path": path.iter().map(|v| v + 1).collect::<Vec<_>>(), "closed": closed, "length": len });
    if g.mode() == GraphMode::Asymmetric && g.n() >= 3 {
        let b = path_length_via_decomposition(g, path, closed)?;
        writeln!(text, "cyclic part: {}\ncpi part: {}", b.cyclic, b.cpi).unwrap();
        json["cyclic"] = json!(b.cyclic);
        json["cpi"] = json!(b.cpi);
    }
    Ok(Report::ok(text, json))
}

/// Accepts `1,2,4`, `1 2 4`, `A1 -> A2 -> A4` and mixtures.
fn parse_path(text: &str, n: usize) -> Result<Vec<usize>> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty() && *t != "->")
        .map(|t| {
            let digits = t.strip_prefix('A').unwrap_or(t);
            match digits.parse::<usize>() {
                Ok(v) if (1..=n).contains(&v) => Ok(v - 1),
                _ => Err(Error::Index(format!("bad vertex `{t}` for n = {n}"))),
            }
        })
        .collect()
}

fn cmd_verify(suite: Suite, cfg: &SuiteConfig) -> Result<Report> {
    let r = run_suite(suite, cfg)?;
    let mut text = String::new();
    writeln!(text, "suite: {}", r.suite).unwrap();
    let sizes: Vec<String> = r.sizes.iter().map(ToString::to_string).collect();
    writeln!(text, "n: {}", sizes.join(" ")).unwrap();
    writeln!(text, "seed: {}", r.seed).unwrap();
    writeln!(text, "trials: {}", r.trials).unwrap();
    writeln!(text, "checked: {}", r.checked).unwrap();
    writeln!(text, "vacuous: {}", r.vacuous).unwrap();
    writeln!(text, "violations: {}", r.violations).unwrap();
    if r.exploratory {
        writeln!(text, "note: n = 5 is exploratory").unwrap();
    }
    if let Some(c) = &r.counterexample {
        writeln!(text, "counterexample (trial {}): {}", c.trial, c.message).unwrap();
        text.push_str(&c.file);
    }
    writeln!(text, "result: {}", if r.passed() { "pass" } else { "FAIL" }).unwrap();
    let code = if r.passed() { EXIT_OK } else { EXIT_VIOLATION };
    Ok(Report {
        text,
        json: serde_json::to_value(&r).expect("reports serialize"),
        code,
    })
}

fn cmd_search_ratliff(n: usize, k: usize, trials: u64, seed: u64) -> Result<Report> {
    let Some(w) = search_ratliff(n, k, trials, seed)? else {
        return Ok(Report::ok(
            format!("no witness for n = {n}, k = {k} in {trials} trials (seed {seed})\n"),
            json!({ "n": n, "k": k, "trials": trials, "seed": seed, "found": false }),
        ));
    };
    let names = default_names(n);
    let ranking = w.kemeny.optima[0].display_with(&names);
    let file = render_profile(&w.profile, &names);
    let scores: Vec<String> = names
        .iter()
        .zip(&w.dodgson_scores)
        .map(|(a, s)| format!("{a} {s}"))
        .collect();
    let text = format!(
        "witness at trial {}\nDodgson winner: {} (scores {})\nKemeny ranking: {ranking}\nposition: {}\nprofile:\n{file}",
        w.trial,
        names[w.dodgson_winner],
        scores.join(", "),
        w.position
    );
    Ok(Report::ok(
        text,
        json!({
            "n": n, "k": k, "trials": trials, "seed": seed, "found": true,
            "trial": w.trial,
            "dodgson_winner": names[w.dodgson_winner],
            "dodgson_scores": w.dodgson_scores,
            "kemeny_ranking": ranking,
            "position": w.position,
            "profile": file,
        }),
    ))
}
