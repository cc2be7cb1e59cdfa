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

//! Checkers for the ranking relations between Condorcet, Borda, Kemeny and
//! Dodgson outcomes, and the randomized searches built on them.

use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::pairspace::{
    condorcet_loser, condorcet_winner, cyclic_basis, is_transitive, vertex_scores, PairwiseVector,
    Ranking,
};
use crate::random;
use crate::rational::Rational;
use crate::voting::{
    dodgson_scores, kemeny, margins_from_profile, BallotGroup, KemenyResult, Profile,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", content = "detail", rename_all = "kebab-case")]
pub enum Verdict {
    Holds,
    /// The hypothesis does not apply to this instance.
    Vacuous,
    Violated(String),
}

impl Verdict {
    pub fn is_violation(&self) -> bool {
        matches!(self, Verdict::Violated(_))
    }
}

/// With a unique Condorcet winner `w` and loser `l`, checks `S(w) > S(l)`.
pub fn verify_condorcet_borda(d: &PairwiseVector) -> Verdict {
    let (Some(w), Some(l)) = (condorcet_winner(d), condorcet_loser(d)) else {
        return Verdict::Vacuous;
    };
    let s = vertex_scores(d);
    if s[w] > s[l] {
        Verdict::Holds
    } else {
        Verdict::Violated(format!(
            "Condorcet winner A{} scores {} but Condorcet loser A{} scores {}",
            w + 1,
            s[w],
            l + 1,
            s[l]
        ))
    }
}

/// Kemeny and Borda agree on their extremes.
///
/// 1. Some Kemeny-optimal ranking puts a Borda maximizer before every Borda
///    minimizer (whenever the two scores differ). With a unique optimum and
///    unique Borda extremes this is the plain "winner above loser" claim; the
///    universal reading over tied optima or tied extremes is false.
/// 2. Each alternative topping some optimal ranking has Borda score at least
///    that of each alternative ending one, strictly when the Kemeny top and
///    bottom are each unique across all optima.
pub fn verify_kemeny_borda(d: &PairwiseVector) -> Result<Verdict> {
    let k = kemeny(d)?;
    Ok(kemeny_borda_verdict(d, &k))
}

fn kemeny_borda_verdict(d: &PairwiseVector, k: &KemenyResult) -> Verdict {
    let s = vertex_scores(d);
    let max = *s.iter().max().unwrap();
    let min = *s.iter().min().unwrap();
    if max > min {
        let winners: Vec<usize> = (0..d.n()).filter(|&a| s[a] == max).collect();
        let losers: Vec<usize> = (0..d.n()).filter(|&a| s[a] == min).collect();
        let separates = |r: &Ranking| {
            let order = r.order();
            let pos = |a: usize| order.iter().position(|&x| x == a).unwrap();
            let lowest_loser = losers.iter().map(|&l| pos(l)).min().unwrap();
            winners.iter().any(|&w| pos(w) < lowest_loser)
        };
        if !k.optima.iter().any(separates) {
            return Verdict::Violated(format!(
                "no Kemeny ranking puts a Borda winner above every Borda loser; first optimum {}",
                k.optima[0]
            ));
        }
    }
    let tops = k.tops();
    let bottoms = k.bottoms();
    let strict = tops.len() == 1 && bottoms.len() == 1;
    for &t in &tops {
        for &b in &bottoms {
            if t == b {
                continue;
            }
            let ok = if strict { s[t] > s[b] } else { s[t] >= s[b] };
            if !ok {
                return Verdict::Violated(format!(
                    "Kemeny top A{} has Borda score {} against Kemeny bottom A{} with {}",
                    t + 1,
                    s[t],
                    b + 1,
                    s[b]
                ));
            }
        }
    }
    if max == min {
        Verdict::Vacuous
    } else {
        Verdict::Holds
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RatliffWitness {
    /// Trial index at which the witness was drawn.
    pub trial: u64,
    pub profile: Profile,
    pub dodgson_winner: usize,
    pub dodgson_scores: Vec<u64>,
    pub kemeny: KemenyResult,
    /// 1-based slot of the Dodgson winner in the Kemeny ranking.
    pub position: usize,
}

/// Unique Dodgson winner, its scores, the unique Kemeny result and the winner's slot.
type Placement = (usize, Vec<u64>, KemenyResult, usize);

fn ratliff_position(p: &Profile) -> Result<Option<Placement>> {
    let dodgson = dodgson_scores(p)?;
    let [winner] = dodgson.winners[..] else {
        return Ok(None);
    };
    let k = kemeny(&margins_from_profile(p))?;
    if k.optima.len() != 1 {
        return Ok(None);
    }
    let position = k.optima[0]
        .order()
        .iter()
        .position(|&a| a == winner)
        .unwrap()
        + 1;
    Ok(Some((winner, dodgson.scores, k, position)))
}

/// Samples random profiles until one has a unique Dodgson winner sitting at
/// slot `k` (1-based) of a unique Kemeny ranking. `None` after `trials`
/// misses.
pub fn search_ratliff(
    n: usize,
    k: usize,
    trials: u64,
    seed: u64,
) -> Result<Option<RatliffWitness>> {
    if n < 4 {
        return Err(Error::Domain(format!(
            "Dodgson/Kemeny divergence search needs n >= 4, got {n}"
        )));
    }
    if k == 0 || k > n {
        return Err(Error::Domain(format!(
            "Kemeny rank must be in 1..={n}, got {k}"
        )));
    }
    if n > crate::voting::DODGSON_MAX_ALTERNATIVES {
        return Err(Error::Capacity {
            what: "Dodgson alternative count",
            got: n,
            limit: crate::voting::DODGSON_MAX_ALTERNATIVES,
        });
    }
    for trial in 0..trials {
        let mut rng = random::trial_rng(seed, trial);
        let p = random::profile(&mut rng, n, 7, 9);
        let Some((winner, scores, kem, position)) = ratliff_position(&p)? else {
            continue;
        };
        if position != k {
            continue;
        }
        // Re-derive both outcomes from the voter-by-voter expansion.
        let expanded = Profile::new(
            n,
            p.groups()
                .iter()
                .flat_map(|g| {
                    std::iter::repeat_n(
                        BallotGroup {
                            count: 1,
                            ranking: g.ranking.clone(),
                        },
                        g.count as usize,
                    )
                })
                .collect(),
        )?;
        let again = ratliff_position(&expanded)?;
        assert_eq!(
            again
                .as_ref()
                .map(|(w, s, kk, pos)| (*w, s.clone(), kk.clone(), *pos)),
            Some((winner, scores.clone(), kem.clone(), position)),
            "witness failed re-verification"
        );
        return Ok(Some(RatliffWitness {
            trial,
            profile: p,
            dodgson_winner: winner,
            dodgson_scores: scores,
            kemeny: kem,
            position,
        }));
    }
    Ok(None)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TopBottomReport {
    pub n: usize,
    /// Perturbed vectors drawn.
    pub attempts: u64,
    /// Draws that stayed transitive and were checked.
    pub checked: u64,
    pub violations: u64,
    /// Only n = 3, 4 are covered by a proof; n = 5 runs report findings.
    pub exploratory: bool,
    pub first_violation: Option<PairwiseVector>,
}

/// Draws a strongly transitive vector with `A1` strictly on top and `An`
/// strictly at the bottom, adds a random combination of the three-cycle
/// basis, and whenever the sum is still transitive checks that `A1` beats
/// `An`. Stops after `trials` checked draws or `50 * trials` attempts.
pub fn verify_top_bottom(n: usize, trials: u64, seed: u64) -> Result<TopBottomReport> {
    if !(3..=5).contains(&n) {
        return Err(Error::Domain(format!(
            "top/bottom check supports n in 3..=5, got {n}"
        )));
    }
    let basis = cyclic_basis(n)?;
    let mut report = TopBottomReport {
        n,
        attempts: 0,
        checked: 0,
        violations: 0,
        exploratory: n == 5,
        first_violation: None,
    };
    let cap = trials.saturating_mul(50);
    while report.checked < trials && report.attempts < cap {
        let mut rng = random::trial_rng(seed, report.attempts);
        report.attempts += 1;
        let d = top_bottom_sample(&mut rng, n, &basis);
        if !is_transitive(&d) {
            continue;
        }
        report.checked += 1;
        if !d.value(0, n - 1).is_positive() {
            report.violations += 1;
            report.first_violation.get_or_insert(d);
        }
    }
    Ok(report)
}

fn top_bottom_sample<R: Rng>(rng: &mut R, n: usize, basis: &[PairwiseVector]) -> PairwiseVector {
    let middle: Vec<Rational> = (0..n - 2).map(|_| random::rational(rng, 30, 4)).collect();
    let hi = *middle.iter().max().unwrap() + Rational::new(rng.gen_range(1..=40), 4);
    let lo = *middle.iter().min().unwrap() - Rational::new(rng.gen_range(1..=40), 4);
    let mut potentials = vec![hi];
    potentials.extend(middle);
    potentials.push(lo);
    let st = PairwiseVector::from_potentials(&potentials).expect("n >= 3");
    // Perturbations on the scale of the largest strongly transitive margin.
    let span = st.value(0, n - 1);
    basis.iter().fold(st, |acc, b| {
        let alpha = span * Rational::new(rng.gen_range(-48..=48), 32);
        &acc + &b.scale(alpha)
    })
}
