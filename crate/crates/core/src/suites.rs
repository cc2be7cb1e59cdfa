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

//! Seeded randomized property suites behind `verify`.
//!
//! Trial `t` draws from `trial_rng(seed, t)` and, unless a size is fixed,
//! uses the `t mod k`-th size of the suite's default range, so a report is a
//! pure function of the configuration.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::io::render_graph;
use crate::pairspace::{
    cyclic_basis, decompose, is_strongly_transitive, vertex_scores, PairwiseVector,
};
use crate::random;
use crate::rational::Rational;
use crate::tsp::{
    decompose_asymmetric, decompose_symmetric, exact_hamiltonian, lower_bound_symmetric,
    path_length, path_length_via_decomposition, CostGraph, GraphMode, Objective,
};
use crate::voting::{self, verify_condorcet_borda, verify_kemeny_borda, Verdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Decomposition,
    CondorcetBorda,
    KemenyBorda,
    TopBottom,
    TspPaths,
    SymmetricShift,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Decomposition,
        Suite::CondorcetBorda,
        Suite::KemenyBorda,
        Suite::TopBottom,
        Suite::TspPaths,
        Suite::SymmetricShift,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Decomposition => "decomposition",
            Suite::CondorcetBorda => "condorcet-borda",
            Suite::KemenyBorda => "kemeny-borda",
            Suite::TopBottom => "top-bottom",
            Suite::TspPaths => "tsp-paths",
            Suite::SymmetricShift => "symmetric-shift",
        }
    }

    pub fn default_sizes(self) -> Vec<usize> {
        match self {
            Suite::Decomposition | Suite::CondorcetBorda => (3..=7).collect(),
            Suite::KemenyBorda => vec![4, 5],
            Suite::TopBottom => vec![3, 4],
            Suite::TspPaths => (3..=8).collect(),
            Suite::SymmetricShift => (4..=8).collect(),
        }
    }

    fn check_size(self, n: usize) -> Result<()> {
        let ok = match self {
            Suite::TopBottom => (3..=5).contains(&n),
            Suite::SymmetricShift => {
                if n > 9 {
                    return Err(Error::Capacity {
                        what: "vertices for exhaustive circuit enumeration",
                        got: n,
                        limit: 9,
                    });
                }
                n >= 3
            }
            _ => n >= 3,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::Domain(format!(
                "suite {} does not support n = {n}",
                self.name()
            )))
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Domain(format!("unknown suite `{s}`")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteConfig {
    /// Fixed size; `None` cycles through the suite's default sizes.
    pub n: Option<usize>,
    pub trials: u64,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub trial: u64,
    pub message: String,
    /// Graph or vector file reproducing the failure.
    pub file: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub sizes: Vec<usize>,
    pub seed: u64,
    /// Random instances drawn.
    pub trials: u64,
    /// Instances on which the property was actually exercised.
    pub checked: u64,
    pub vacuous: u64,
    pub violations: u64,
    /// Set when some size is not covered by a proof.
    pub exploratory: bool,
    pub counterexample: Option<Counterexample>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.violations == 0
    }
}

enum Outcome {
    Holds,
    Vacuous,
    Violated { message: String, file: String },
}

fn vector_file(d: &PairwiseVector) -> String {
    render_graph(&CostGraph::from_pairwise(d))
}

fn from_verdict(v: Verdict, d: &PairwiseVector) -> Outcome {
    match v {
        Verdict::Holds => Outcome::Holds,
        Verdict::Vacuous => Outcome::Vacuous,
        Verdict::Violated(message) => Outcome::Violated {
            message,
            file: vector_file(d),
        },
    }
}

fn check(ok: bool, what: &str, file: impl FnOnce() -> String) -> std::result::Result<(), Outcome> {
    if ok {
        Ok(())
    } else {
        Err(Outcome::Violated {
            message: what.to_string(),
            file: file(),
        })
    }
}

pub fn run_suite(suite: Suite, cfg: &SuiteConfig) -> Result<SuiteReport> {
    let sizes = match cfg.n {
        Some(n) => vec![n],
        None => suite.default_sizes(),
    };
    for &n in &sizes {
        suite.check_size(n)?;
    }
    if suite == Suite::KemenyBorda {
        if let Some(&n) = sizes.iter().find(|&&n| n > voting::KEMENY_DEFAULT_LIMIT) {
            return Err(Error::Capacity {
                what: "alternatives for Kemeny",
                got: n,
                limit: voting::KEMENY_DEFAULT_LIMIT,
            });
        }
    }
    let mut report = SuiteReport {
        suite,
        sizes: sizes.clone(),
        seed: cfg.seed,
        trials: 0,
        checked: 0,
        vacuous: 0,
        violations: 0,
        exploratory: suite == Suite::TopBottom && sizes.contains(&5),
        counterexample: None,
    };
    if suite == Suite::TopBottom {
        for &n in &sizes {
            let r = voting::verify_top_bottom(n, cfg.trials, cfg.seed)?;
            report.trials += r.attempts;
            report.checked += r.checked;
            report.violations += r.violations;
            if let (None, Some(d)) = (&report.counterexample, r.first_violation) {
                report.counterexample = Some(Counterexample {
                    trial: 0,
                    message: format!("transitive perturbation with A{n} above A1"),
                    file: vector_file(&d),
                });
            }
        }
        return Ok(report);
    }
    let bases: Vec<Vec<PairwiseVector>> = match suite {
        Suite::Decomposition => sizes
            .iter()
            .map(|&n| cyclic_basis(n))
            .collect::<Result<_>>()?,
        _ => Vec::new(),
    };
    for t in 0..cfg.trials {
        let slot = (t % sizes.len() as u64) as usize;
        let n = sizes[slot];
        let mut rng = random::trial_rng(cfg.seed, t);
        let outcome = match suite {
            Suite::Decomposition => {
                let d = if t % 2 == 0 {
                    random::pairwise_vector(&mut rng, n)
                } else {
                    random::integer_vector(&mut rng, n, 3)
                };
                decomposition_trial(&d, &bases[slot])
            }
            Suite::CondorcetBorda => {
                let d = match t % 3 {
                    0 => random::pairwise_vector(&mut rng, n),
                    1 => random::integer_vector(&mut rng, n, 2),
                    _ => planted_condorcet(&mut rng, n),
                };
                from_verdict(verify_condorcet_borda(&d), &d)
            }
            Suite::KemenyBorda => {
                let d = if t % 2 == 0 {
                    random::pairwise_vector(&mut rng, n)
                } else {
                    random::integer_vector(&mut rng, n, 2)
                };
                from_verdict(verify_kemeny_borda(&d)?, &d)
            }
            Suite::TspPaths => tsp_paths_trial(&mut rng, n)?,
            Suite::SymmetricShift => symmetric_shift_trial(&mut rng, n)?,
            Suite::TopBottom => unreachable!(),
        };
        report.trials += 1;
        match outcome {
            Outcome::Holds => report.checked += 1,
            Outcome::Vacuous => report.vacuous += 1,
            Outcome::Violated { message, file } => {
                report.checked += 1;
                report.violations += 1;
                report.counterexample.get_or_insert(Counterexample {
                    trial: t,
                    message,
                    file,
                });
            }
        }
    }
    Ok(report)
}

/// Random vector with a random alternative beating all others and another
/// losing to all others, so the Condorcet hypothesis always applies.
fn planted_condorcet(rng: &mut rand_chacha::ChaCha8Rng, n: usize) -> PairwiseVector {
    use rand::Rng;
    let mut d = random::pairwise_vector(rng, n);
    let w = rng.gen_range(0..n);
    let l = (w + rng.gen_range(1..n)) % n;
    for k in 0..n {
        let margin = |rng: &mut rand_chacha::ChaCha8Rng| {
            Rational::new(rng.gen_range(1..=60), rng.gen_range(1..=6))
        };
        if k != w {
            let m = margin(rng);
            d.set(w, k, m);
        }
        if k != l && k != w {
            let m = margin(rng);
            d.set(k, l, m);
        }
    }
    d
}

fn decomposition_trial(d: &PairwiseVector, basis: &[PairwiseVector]) -> Outcome {
    let file = || vector_file(d);
    let run = || -> std::result::Result<(), Outcome> {
        let dec = decompose(d);
        check(
            &dec.st + &dec.cyclic == *d,
            "st + cyclic does not reconstruct d",
            file,
        )?;
        check(
            dec.st.dot(&dec.cyclic).is_zero(),
            "st and cyclic parts are not orthogonal",
            file,
        )?;
        check(
            is_strongly_transitive(&dec.st),
            "st part is not strongly transitive",
            file,
        )?;
        check(
            vertex_scores(&dec.cyclic).iter().all(Rational::is_zero),
            "cyclic part has non-zero vertex scores",
            file,
        )?;
        let again = decompose(&dec.st);
        check(
            again.st == dec.st && again.cyclic.is_zero(),
            "projection is not idempotent",
            file,
        )?;
        let cyc = decompose(&dec.cyclic);
        check(
            cyc.st.is_zero() && cyc.cyclic == dec.cyclic,
            "cyclic part has an st component",
            file,
        )?;
        let rebuilt = dec
            .cyclic_coefficients()
            .iter()
            .zip(basis)
            .fold(PairwiseVector::zeros(d.n()).unwrap(), |acc, ((_, c), b)| {
                &acc + &b.scale(*c)
            });
        check(
            rebuilt == dec.cyclic,
            "three-cycle coefficients do not rebuild the cyclic part",
            file,
        )
    };
    match run() {
        Ok(()) => Outcome::Holds,
        Err(o) => o,
    }
}

fn walk_file(g: &CostGraph, walk: &[usize], closed: bool) -> String {
    let vs: Vec<String> = walk.iter().map(|v| (v + 1).to_string()).collect();
    format!(
        "# {} walk: {}\n{}",
        if closed { "closed" } else { "open" },
        vs.join(" "),
        render_graph(g)
    )
}

/// Closed walks on a strongly transitive graph have length zero, and on a
/// random graph every walk length splits over the cpi and cyclic parts.
fn tsp_paths_trial(rng: &mut rand_chacha::ChaCha8Rng, n: usize) -> Result<Outcome> {
    use rand::Rng;
    let cpi = CostGraph::from_pairwise(&random::st_vector(rng, n));
    let len = rng.gen_range(2..=2 * n);
    let walk = random::closed_walk(rng, n, len);
    if !path_length(&cpi, &walk, true)?.is_zero() {
        return Ok(Outcome::Violated {
            message: "closed walk on a strongly transitive graph has non-zero length".into(),
            file: walk_file(&cpi, &walk, true),
        });
    }
    let g = random::cost_graph(rng, n, GraphMode::Asymmetric);
    let dec = decompose_asymmetric(&g)?;
    let len = rng.gen_range(2..=2 * n);
    let walk = random::closed_walk(rng, n, len);
    for closed in [false, true] {
        let direct = path_length(&g, &walk, closed)?;
        let split =
            path_length(&dec.cpi, &walk, closed)? + path_length(&dec.cyclic, &walk, closed)?;
        let via = path_length_via_decomposition(&g, &walk, closed)?;
        if direct != split || direct != via.total {
            return Ok(Outcome::Violated {
                message: format!(
                    "walk length {direct} but parts give {split} and {}",
                    via.total
                ),
                file: walk_file(&g, &walk, closed),
            });
        }
    }
    Ok(Outcome::Holds)
}

/// Every Hamiltonian circuit of a random symmetric graph is `T` longer than
/// in its cyclic part; also checks the average, the vertex sums, the
/// negative-arc claim, the lower bound and the exact solver.
fn symmetric_shift_trial(rng: &mut rand_chacha::ChaCha8Rng, n: usize) -> Result<Outcome> {
    let g = random::cost_graph(rng, n, GraphMode::Symmetric);
    let dec = decompose_symmetric(&g)?;
    let bad = |message: String| {
        Ok(Outcome::Violated {
            message,
            file: render_graph(&g),
        })
    };
    let mut rest: Vec<usize> = (1..n).collect();
    let (mut total, mut count) = (Rational::ZERO, 0i128);
    let mut shortest: Option<Rational> = None;
    loop {
        // Each undirected circuit once.
        if rest[0] < rest[n - 2] {
            let tour: Vec<usize> = std::iter::once(0).chain(rest.iter().copied()).collect();
            let len = path_length(&g, &tour, true)?;
            let shifted = path_length(&dec.cyclic, &tour, true)? + dec.t;
            if len != shifted {
                let vs: Vec<String> = tour.iter().map(|v| (v + 1).to_string()).collect();
                return bad(format!(
                    "circuit {} has length {len}, cyclic + T gives {shifted}",
                    vs.join("-")
                ));
            }
            total += len;
            count += 1;
            shortest = Some(shortest.map_or(len, |s| s.min(len)));
        }
        if !voting::next_permutation(&mut rest) {
            break;
        }
    }
    let mean = total / Rational::from_integer(count);
    if mean != dec.t {
        return bad(format!(
            "mean circuit length {mean} differs from T = {}",
            dec.t
        ));
    }
    let c = &dec.cyclic;
    for v in 0..n {
        let arcs: Vec<Rational> = (0..n).filter(|&u| u != v).map(|u| c.value(v, u)).collect();
        if !arcs.iter().copied().sum::<Rational>().is_zero() {
            return bad(format!("cyclic vertex sum at A{} is not zero", v + 1));
        }
        if !arcs.iter().all(Rational::is_zero) && !arcs.iter().any(Rational::is_negative) {
            return bad(format!("cyclic vertex A{} has no negative arc", v + 1));
        }
    }
    let shortest = shortest.unwrap();
    let bound = lower_bound_symmetric(&g)?;
    if bound > shortest {
        return bad(format!(
            "lower bound {bound} exceeds shortest circuit {shortest}"
        ));
    }
    let exact = exact_hamiltonian(&g, Objective::Shortest)?.length;
    if exact != shortest {
        return bad(format!(
            "exact solver gives {exact}, enumeration gives {shortest}"
        ));
    }
    Ok(Outcome::Holds)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(suite: Suite, n: Option<usize>, trials: u64) -> SuiteReport {
        run_suite(suite, &SuiteConfig { n, trials, seed: 3 }).unwrap()
    }

    #[test]
    fn every_suite_passes_briefly() {
        for suite in Suite::ALL {
            let r = run(suite, None, 40);
            assert!(r.passed(), "{suite}: {:?}", r.counterexample);
            assert!(r.checked > 0, "{suite}");
        }
    }

    #[test]
    fn reports_are_deterministic() {
        assert_eq!(
            run(Suite::KemenyBorda, Some(4), 50),
            run(Suite::KemenyBorda, Some(4), 50)
        );
    }

    #[test]
    fn names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("borda".parse::<Suite>().is_err());
    }

    #[test]
    fn size_limits() {
        let cfg = |n| SuiteConfig {
            n: Some(n),
            trials: 1,
            seed: 0,
        };
        assert!(matches!(
            run_suite(Suite::KemenyBorda, &cfg(9)),
            Err(Error::Capacity { .. })
        ));
        assert!(run_suite(Suite::KemenyBorda, &cfg(6)).is_ok());
        assert!(run_suite(Suite::TopBottom, &cfg(6)).is_err());
        assert!(matches!(
            run_suite(Suite::SymmetricShift, &cfg(10)),
            Err(Error::Capacity { .. })
        ));
        assert!(run_suite(Suite::Decomposition, &cfg(2)).is_err());
    }

    #[test]
    fn top_bottom_n5_is_exploratory() {
        assert!(run(Suite::TopBottom, Some(5), 5).exploratory);
        assert!(!run(Suite::TopBottom, Some(4), 5).exploratory);
    }
}
