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

//! Seeded generators for the randomized suites.
//!
//! Every generator draws from a caller-supplied RNG. The suites seed a
//! [`ChaCha8Rng`] per trial so output depends only on `(seed, trial)`.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::pairspace::{pair_count, PairwiseVector};
use crate::rational::Rational;
use crate::tsp::{CostGraph, GraphMode};
use crate::voting::{BallotGroup, Profile};

/// RNG for trial `trial` of a run seeded with `seed`.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// Uniform numerator in `-max_numer..=max_numer` over a denominator in `1..=max_denom`.
pub fn rational<R: Rng + ?Sized>(rng: &mut R, max_numer: i128, max_denom: i128) -> Rational {
    let p = rng.gen_range(-max_numer..=max_numer);
    let q = rng.gen_range(1..=max_denom);
    Rational::new(p, q)
}

pub fn pairwise_vector<R: Rng + ?Sized>(rng: &mut R, n: usize) -> PairwiseVector {
    let entries = (0..pair_count(n)).map(|_| rational(rng, 20, 6)).collect();
    PairwiseVector::from_entries(n, entries).expect("n >= 3")
}

/// Integer-valued vector; ties and small margins are common.
pub fn integer_vector<R: Rng + ?Sized>(rng: &mut R, n: usize, max_abs: i128) -> PairwiseVector {
    let entries = (0..pair_count(n))
        .map(|_| Rational::from_integer(rng.gen_range(-max_abs..=max_abs)))
        .collect();
    PairwiseVector::from_entries(n, entries).expect("n >= 3")
}

/// Random strongly transitive vector built from potentials.
pub fn st_vector<R: Rng + ?Sized>(rng: &mut R, n: usize) -> PairwiseVector {
    let p: Vec<Rational> = (0..n).map(|_| rational(rng, 20, 6)).collect();
    PairwiseVector::from_potentials(&p).expect("n >= 3")
}

/// Uniform strict permutation of `0..n`.
pub fn permutation<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

/// `1..=max_groups` ballot groups, each a uniform strict ranking with a count
/// uniform in `1..=max_count`. Repeated rankings stay as separate groups.
pub fn profile<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    max_groups: usize,
    max_count: u64,
) -> Profile {
    let groups = rng.gen_range(1..=max_groups);
    let groups = (0..groups)
        .map(|_| BallotGroup {
            count: rng.gen_range(1..=max_count),
            ranking: permutation(rng, n),
        })
        .collect();
    Profile::new(n, groups).expect("generated profile is valid")
}

/// Profile with exactly `voters` voters, each an independent uniform ranking.
pub fn profile_with_voters<R: Rng + ?Sized>(rng: &mut R, n: usize, voters: u64) -> Profile {
    let groups = (0..voters)
        .map(|_| BallotGroup {
            count: 1,
            ranking: permutation(rng, n),
        })
        .collect();
    Profile::new(n, groups).expect("generated profile is valid")
}

pub fn cost_graph<R: Rng + ?Sized>(rng: &mut R, n: usize, mode: GraphMode) -> CostGraph {
    let weights = (0..pair_count(n))
        .map(|_| match mode {
            GraphMode::Asymmetric => rational(rng, 12, 4),
            GraphMode::Symmetric => Rational::new(rng.gen_range(0..=40), rng.gen_range(1..=2)),
        })
        .collect();
    CostGraph::new(mode, n, weights).expect("generated graph is valid")
}

/// Random closed walk of `len` steps; repeats allowed, consecutive vertices distinct.
pub fn closed_walk<R: Rng + ?Sized>(rng: &mut R, n: usize, len: usize) -> Vec<usize> {
    let mut walk = vec![rng.gen_range(0..n)];
    while walk.len() < len {
        let last = *walk.last().unwrap();
        let mut next = rng.gen_range(0..n - 1);
        if next >= last {
            next += 1;
        }
        walk.push(next);
    }
    // Closing arc must not be a self loop.
    if walk.len() > 1 && walk[0] == *walk.last().unwrap() {
        walk.pop();
    }
    walk
}
