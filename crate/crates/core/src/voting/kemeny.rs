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

//! Kemeny-Young by exhaustive enumeration of strict rankings.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::pairspace::{PairwiseVector, Ranking};
use crate::rational::Rational;

pub const KEMENY_DEFAULT_LIMIT: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KemenyResult {
    /// Every maximizing strict ranking, in lexicographic order of the permutation.
    pub optima: Vec<Ranking>,
    pub score: Rational,
}

impl KemenyResult {
    /// Alternatives at the top of at least one optimal ranking.
    pub fn tops(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.optima.iter().map(|r| r.order()[0]).collect();
        t.sort_unstable();
        t.dedup();
        t
    }

    pub fn bottoms(&self) -> Vec<usize> {
        let mut b: Vec<usize> = self
            .optima
            .iter()
            .map(|r| *r.order().last().unwrap())
            .collect();
        b.sort_unstable();
        b.dedup();
        b
    }
}

/// `sum over i ranked before j of d(i, j)`.
pub fn ranking_score(d: &PairwiseVector, order: &[usize]) -> Rational {
    let mut total = Rational::ZERO;
    for (a, &i) in order.iter().enumerate() {
        for &j in &order[a + 1..] {
            total += d.value(i, j);
        }
    }
    total
}

pub fn kemeny(d: &PairwiseVector) -> Result<KemenyResult> {
    kemeny_with_limit(d, KEMENY_DEFAULT_LIMIT)
}

pub fn kemeny_with_limit(d: &PairwiseVector, limit: usize) -> Result<KemenyResult> {
    let n = d.n();
    if n > limit {
        return Err(Error::Capacity {
            what: "Kemeny alternative count",
            got: n,
            limit,
        });
    }
    let matrix: Vec<Vec<Rational>> = (0..n)
        .map(|i| (0..n).map(|j| d.value(i, j)).collect())
        .collect();
    let mut order: Vec<usize> = (0..n).collect();
    let mut best: Option<Rational> = None;
    let mut optima: Vec<Vec<usize>> = Vec::new();
    loop {
        let mut score = Rational::ZERO;
        for a in 0..n {
            let row = &matrix[order[a]];
            for &j in &order[a + 1..] {
                score += row[j];
            }
        }
        match best {
            Some(b) if score < b => {}
            Some(b) if score == b => optima.push(order.clone()),
            _ => {
                best = Some(score);
                optima.clear();
                optima.push(order.clone());
            }
        }
        if !next_permutation(&mut order) {
            break;
        }
    }
    Ok(KemenyResult {
        optima: optima.into_iter().map(Ranking::strict).collect(),
        score: best.expect("at least one ranking"),
    })
}

/// Advances to the next permutation in lexicographic order; false after the last.
pub(crate) fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}
