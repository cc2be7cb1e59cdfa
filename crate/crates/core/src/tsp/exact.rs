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

//! Held-Karp dynamic programme over vertex subsets.

use super::{CircuitResult, CostGraph, Objective, Provenance};
use crate::error::{Error, Result};
use crate::rational::Rational;

pub const EXACT_DEFAULT_LIMIT: usize = 14;

pub fn exact_hamiltonian(g: &CostGraph, objective: Objective) -> Result<CircuitResult> {
    exact_hamiltonian_with_limit(g, objective, EXACT_DEFAULT_LIMIT)
}

/// Optimal Hamiltonian circuit; among ties, the lexicographically smallest
/// tour starting at vertex 0.
pub fn exact_hamiltonian_with_limit(
    g: &CostGraph,
    objective: Objective,
    limit: usize,
) -> Result<CircuitResult> {
    let n = g.n();
    if n > limit {
        return Err(Error::Capacity {
            what: "vertices for exact circuit search",
            got: n,
            limit,
        });
    }
    // rest[mask][v]: best cost from v through every vertex outside `mask`
    // and back to 0. `mask` always contains 0 and v.
    let full = (1usize << n) - 1;
    let mut rest: Vec<Vec<Option<Rational>>> = vec![vec![None; n]; 1 << n];
    for (v, slot) in rest[full].iter_mut().enumerate().skip(1) {
        *slot = Some(g.value(v, 0));
    }
    for mask in (1..full).rev() {
        if mask & 1 == 0 {
            continue;
        }
        for v in 0..n {
            if mask >> v & 1 == 0 || (v == 0 && mask != 1) {
                continue;
            }
            let mut best: Option<Rational> = None;
            for u in 1..n {
                if mask >> u & 1 == 1 {
                    continue;
                }
                if let Some(tail) = rest[mask | 1 << u][u] {
                    let c = g.value(v, u) + tail;
                    if best.is_none_or(|b| objective.better(c, b)) {
                        best = Some(c);
                    }
                }
            }
            rest[mask][v] = best;
        }
    }
    let length = rest[1][0].expect("complete graph always has a circuit");
    let mut tour = vec![0];
    let (mut mask, mut v) = (1usize, 0usize);
    while mask != full {
        let target = rest[mask][v].unwrap();
        let u = (1..n)
            .find(|&u| {
                mask >> u & 1 == 0
                    && rest[mask | 1 << u][u].map(|t| g.value(v, u) + t) == Some(target)
            })
            .unwrap();
        tour.push(u);
        mask |= 1 << u;
        v = u;
    }
    Ok(CircuitResult {
        tour,
        length,
        provenance: Provenance::Exact,
    })
}
