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

//! Voting rules over strict-ranking profiles.
//!
//! Margins, Borda tallies (directly and through vertex scores), IIIA
//! intensity tallies, Kemeny, Dodgson and Dodgson committees, plus checkers
//! for the randomized checks relating them.

mod checks;
mod dodgson;
mod kemeny;

pub use checks::{
    search_ratliff, verify_condorcet_borda, verify_kemeny_borda, verify_top_bottom, RatliffWitness,
    TopBottomReport, Verdict,
};
pub use dodgson::{
    dodgson_committee, dodgson_scores, CommitteeResult, DodgsonResult, DODGSON_MAX_ALTERNATIVES,
    DODGSON_MAX_VOTERS,
};
pub(crate) use kemeny::next_permutation;
pub use kemeny::{kemeny, kemeny_with_limit, ranking_score, KemenyResult, KEMENY_DEFAULT_LIMIT};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::pairspace::{vertex_scores, PairwiseVector};
use crate::rational::Rational;

/// `count` voters sharing one strict ranking, best first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct BallotGroup {
    pub count: u64,
    pub ranking: Vec<usize>,
}

impl BallotGroup {
    /// `position[a]` is the rank slot of alternative `a`, 0 for the top.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.ranking.len()];
        for (slot, &a) in self.ranking.iter().enumerate() {
            pos[a] = slot;
        }
        pos
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Profile {
    n: usize,
    groups: Vec<BallotGroup>,
}

impl Profile {
    pub fn new(n: usize, groups: Vec<BallotGroup>) -> Result<Self> {
        if n < 3 {
            return Err(Error::Domain(format!(
                "need at least 3 alternatives, got {n}"
            )));
        }
        if groups.is_empty() {
            return Err(Error::Domain("profile has no voters".into()));
        }
        for g in &groups {
            if g.count == 0 {
                return Err(Error::Domain("ballot group with zero voters".into()));
            }
            let mut seen = vec![false; n];
            if g.ranking.len() != n
                || !g
                    .ranking
                    .iter()
                    .all(|&a| a < n && !std::mem::replace(&mut seen[a], true))
            {
                return Err(Error::Domain(format!(
                    "ballot {:?} is not a strict ranking of {n} alternatives",
                    g.ranking
                )));
            }
        }
        Ok(Profile { n, groups })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn groups(&self) -> &[BallotGroup] {
        &self.groups
    }

    /// Total number of voters `N`.
    pub fn voters(&self) -> u64 {
        self.groups.iter().map(|g| g.count).sum()
    }

    /// `support[i][j]`: voters ranking `i` above `j`.
    pub fn support(&self) -> Vec<Vec<u64>> {
        let mut s = vec![vec![0u64; self.n]; self.n];
        for g in &self.groups {
            for (a, &hi) in g.ranking.iter().enumerate() {
                for &lo in &g.ranking[a + 1..] {
                    s[hi][lo] += g.count;
                }
            }
        }
        s
    }

    /// Same voters with alternative `a` renamed to `perm[a]`.
    pub fn relabel(&self, perm: &[usize]) -> Profile {
        Profile {
            n: self.n,
            groups: self
                .groups
                .iter()
                .map(|g| BallotGroup {
                    count: g.count,
                    ranking: g.ranking.iter().map(|&a| perm[a]).collect(),
                })
                .collect(),
        }
    }
}

/// `d(i, j) = (voters ranking i above j) - N/2`.
pub fn margins_from_profile(p: &Profile) -> PairwiseVector {
    let support = p.support();
    let half = Rational::new(p.voters() as i128, 2);
    PairwiseVector::from_fn(p.n, |i, j| {
        Rational::from_integer(support[i][j] as i128) - half
    })
    .expect("n >= 3")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BordaMethod {
    Direct,
    ViaScores,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BordaTally {
    pub tallies: Vec<Rational>,
    pub method: BordaMethod,
}

/// `n - 1 - slot` points per ballot, summed over voters.
pub fn borda_direct(p: &Profile) -> BordaTally {
    let mut tallies = vec![0u64; p.n];
    for g in &p.groups {
        for (slot, &a) in g.ranking.iter().enumerate() {
            tallies[a] += g.count * (p.n - 1 - slot) as u64;
        }
    }
    BordaTally {
        tallies: tallies
            .into_iter()
            .map(|t| Rational::from_integer(t as i128))
            .collect(),
        method: BordaMethod::Direct,
    }
}

/// `B(A_j) = (n - 1) N / 2 + S(A_j)` from the margins of an `N`-voter profile.
pub fn borda_from_scores(d: &PairwiseVector, voters: u64) -> BordaTally {
    let base = Rational::new(((d.n() - 1) as i128) * voters as i128, 2);
    BordaTally {
        tallies: vertex_scores(d).into_iter().map(|s| base + s).collect(),
        method: BordaMethod::ViaScores,
    }
}

/// Intensity-weighted tally of `i` against `j`: each voter contributes the
/// number of slots by which it ranks `i` above `j` (negative when below).
pub fn iiia_tally(p: &Profile, i: usize, j: usize) -> Result<Rational> {
    if i == j {
        return Err(Error::Domain(
            "IIIA tally needs two distinct alternatives".into(),
        ));
    }
    if i >= p.n || j >= p.n {
        return Err(Error::Index(format!(
            "alternative out of range for n = {}",
            p.n
        )));
    }
    let total: i128 = p
        .groups
        .iter()
        .map(|g| {
            let pos = g.positions();
            g.count as i128 * (pos[j] as i128 - pos[i] as i128)
        })
        .sum();
    Ok(Rational::from_integer(total))
}

/// IIIA tallies over every pair, as a pairwise vector.
pub fn iiia_vector(p: &Profile) -> PairwiseVector {
    PairwiseVector::from_fn(p.n, |i, j| {
        iiia_tally(p, i, j).expect("distinct in-range pair")
    })
    .expect("n >= 3")
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    /// 25 A1>A2>A3, 23 A2>A3>A1, 22 A3>A1>A2.
    pub fn three_city_profile() -> Profile {
        Profile::new(
            3,
            vec![
                BallotGroup {
                    count: 25,
                    ranking: vec![0, 1, 2],
                },
                BallotGroup {
                    count: 23,
                    ranking: vec![1, 2, 0],
                },
                BallotGroup {
                    count: 22,
                    ranking: vec![2, 0, 1],
                },
            ],
        )
        .unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::three_city_profile;
    use super::*;
    use crate::pairspace::{is_strongly_transitive, project_st};
    use crate::random;
    use crate::rational::rat;

    fn ints(xs: &[i128]) -> Vec<Rational> {
        xs.iter().map(|&x| rat(x, 1)).collect()
    }

    #[test]
    fn margins_examples() {
        let d = margins_from_profile(&three_city_profile());
        assert_eq!(d.entries(), ints(&[12, -10, 13]).as_slice());
        let one = Profile::new(
            3,
            vec![BallotGroup {
                count: 1,
                ranking: vec![0, 1, 2],
            }],
        )
        .unwrap();
        assert_eq!(margins_from_profile(&one).entries(), &[rat(1, 2); 3]);
        let two = Profile::new(
            3,
            vec![
                BallotGroup {
                    count: 1,
                    ranking: vec![0, 1, 2],
                },
                BallotGroup {
                    count: 1,
                    ranking: vec![2, 1, 0],
                },
            ],
        )
        .unwrap();
        assert!(margins_from_profile(&two).is_zero());
    }

    #[test]
    fn odd_electorate_never_ties() {
        for t in 0..50 {
            let mut rng = random::trial_rng(3, t);
            let p = random::profile_with_voters(&mut rng, 5, 7);
            let d = margins_from_profile(&p);
            assert!(d.entries().iter().all(|x| !x.is_zero() && x.denom() == 2));
        }
    }

    #[test]
    fn profile_validation() {
        assert!(Profile::new(3, vec![]).is_err());
        assert!(Profile::new(
            3,
            vec![BallotGroup {
                count: 0,
                ranking: vec![0, 1, 2]
            }]
        )
        .is_err());
        assert!(Profile::new(
            3,
            vec![BallotGroup {
                count: 1,
                ranking: vec![0, 0, 2]
            }]
        )
        .is_err());
        assert!(Profile::new(
            3,
            vec![BallotGroup {
                count: 1,
                ranking: vec![0, 1]
            }]
        )
        .is_err());
    }

    #[test]
    fn borda_examples() {
        let p = three_city_profile();
        assert_eq!(borda_direct(&p).tallies, ints(&[72, 71, 67]));
        assert_eq!(
            borda_from_scores(&margins_from_profile(&p), 70).tallies,
            ints(&[72, 71, 67])
        );
        let one = Profile::new(
            4,
            vec![BallotGroup {
                count: 1,
                ranking: vec![1, 0, 2, 3],
            }],
        )
        .unwrap();
        assert_eq!(borda_direct(&one).tallies, ints(&[2, 3, 1, 0]));
        let unanimous = Profile::new(
            4,
            vec![BallotGroup {
                count: 5,
                ranking: vec![3, 1, 0, 2],
            }],
        )
        .unwrap();
        assert_eq!(borda_direct(&unanimous).tallies, ints(&[5, 10, 0, 15]));
        assert_eq!(
            borda_from_scores(&PairwiseVector::zeros(3).unwrap(), 2).tallies,
            ints(&[2, 2, 2])
        );
    }

    #[test]
    fn borda_direct_sums_to_total_points() {
        let mut rng = random::trial_rng(11, 0);
        let p = random::profile(&mut rng, 5, 6, 9);
        let total: Rational = borda_direct(&p).tallies.iter().sum();
        assert_eq!(total, Rational::from_integer((p.voters() * 10) as i128));
    }

    #[test]
    fn borda_routes_and_score_identity() {
        for t in 0..200 {
            let mut rng = random::trial_rng(5, t);
            let n = 3 + (t as usize % 4);
            let p = random::profile(&mut rng, n, 6, 9);
            let d = margins_from_profile(&p);
            let direct = borda_direct(&p).tallies;
            assert_eq!(direct, borda_from_scores(&d, p.voters()).tallies);
            let st = project_st(&d);
            let scores = vertex_scores(&d);
            let nn = Rational::from(n);
            for j in 0..n {
                for k in 0..n {
                    assert_eq!(direct[j] - direct[k], scores[j] - scores[k]);
                    assert_eq!(scores[j] - scores[k], nn * st.value(j, k));
                }
            }
        }
    }

    #[test]
    fn iiia_examples() {
        let p = three_city_profile();
        assert_eq!(iiia_tally(&p, 0, 2).unwrap(), rat(5, 1));
        assert_eq!(iiia_tally(&p, 1, 2).unwrap(), rat(4, 1));
        assert!(matches!(iiia_tally(&p, 1, 1), Err(Error::Domain(_))));
        let unanimous = Profile::new(
            4,
            vec![BallotGroup {
                count: 6,
                ranking: vec![2, 0, 3, 1],
            }],
        )
        .unwrap();
        assert_eq!(iiia_tally(&unanimous, 2, 1).unwrap(), rat(18, 1));
        assert_eq!(iiia_tally(&unanimous, 1, 0).unwrap(), rat(-12, 1));
    }

    #[test]
    fn iiia_matches_borda_and_is_strongly_transitive() {
        for t in 0..200 {
            let mut rng = random::trial_rng(8, t);
            let p = random::profile(&mut rng, 3 + (t as usize % 4), 6, 9);
            let b = borda_direct(&p).tallies;
            let v = iiia_vector(&p);
            assert!(is_strongly_transitive(&v));
            for i in 0..p.n() {
                for j in 0..p.n() {
                    if i != j {
                        assert_eq!(iiia_tally(&p, i, j).unwrap(), b[i] - b[j]);
                    }
                }
            }
        }
    }

    #[test]
    fn relabel_permutes_borda() {
        let mut rng = random::trial_rng(2, 0);
        let p = random::profile(&mut rng, 5, 6, 9);
        let perm = random::permutation(&mut rng, 5);
        let b = borda_direct(&p).tallies;
        let b2 = borda_direct(&p.relabel(&perm)).tallies;
        for a in 0..5 {
            assert_eq!(b[a], b2[perm[a]]);
        }
        assert_eq!(
            margins_from_profile(&p).relabel(&perm),
            margins_from_profile(&p.relabel(&perm))
        );
    }
}
