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

//! Greedy circuit construction on the cyclic part of a graph.

use std::cmp::Ordering;

use super::{canonical_tour, decompose_asymmetric, decompose_symmetric, path_length};
use super::{CircuitResult, CostGraph, GraphMode, Objective, Provenance};
use crate::error::Result;
use crate::pairspace::pairs;
use crate::rational::Rational;

struct Arc {
    tail: usize,
    head: usize,
    cyclic: Rational,
    original: Rational,
}

/// Builds a circuit by taking arcs (edges, for symmetric graphs) in order of
/// cyclic weight, best first, skipping any that would give a vertex a second
/// outgoing or incoming arc (a third edge) or close a cycle early.
///
/// Ties in cyclic weight go to the better original weight, then to the
/// lexicographically smaller `(tail, head)`. The reported length is measured
/// on the original graph.
pub fn heuristic_hamiltonian(g: &CostGraph, objective: Objective) -> Result<CircuitResult> {
    let n = g.n();
    if n < 3 {
        return finish(g, (0..n).collect());
    }
    let cyclic = match g.mode() {
        GraphMode::Asymmetric => decompose_asymmetric(g)?.cyclic,
        GraphMode::Symmetric => decompose_symmetric(g)?.cyclic,
    };
    let mut arcs: Vec<Arc> = match g.mode() {
        GraphMode::Asymmetric => pairs(n)
            .flat_map(|(i, j)| [(i, j), (j, i)])
            .map(|(t, h)| Arc {
                tail: t,
                head: h,
                cyclic: cyclic.value(t, h),
                original: g.value(t, h),
            })
            .collect(),
        GraphMode::Symmetric => pairs(n)
            .map(|(t, h)| Arc {
                tail: t,
                head: h,
                cyclic: cyclic.value(t, h),
                original: g.value(t, h),
            })
            .collect(),
    };
    let rank = |a: &Arc, b: &Arc| -> Ordering {
        let by_weight = |x: Rational, y: Rational| match objective {
            Objective::Shortest => x.cmp(&y),
            Objective::Longest => y.cmp(&x),
        };
        by_weight(a.cyclic, b.cyclic)
            .then(by_weight(a.original, b.original))
            .then((a.tail, a.head).cmp(&(b.tail, b.head)))
    };
    arcs.sort_by(rank);

    let mut links = Links::new(n, g.mode());
    while links.count < n {
        let before = links.count;
        for a in &arcs {
            links.try_add(a.tail, a.head);
            if links.count == n {
                break;
            }
        }
        assert!(links.count > before, "greedy pass made no progress");
    }
    finish(g, links.tour())
}

fn finish(g: &CostGraph, tour: Vec<usize>) -> Result<CircuitResult> {
    let tour = canonical_tour(tour, g.mode());
    let length = path_length(g, &tour, true)?;
    Ok(CircuitResult {
        tour,
        length,
        provenance: Provenance::Heuristic,
    })
}

/// Partial circuit as vertex-disjoint paths.
struct Links {
    mode: GraphMode,
    /// For symmetric graphs, `adj[v]` holds up to two neighbours; for
    /// asymmetric ones `adj[v][0]` is the successor.
    adj: Vec<Vec<usize>>,
    has_pred: Vec<bool>,
    parent: Vec<usize>,
    count: usize,
}

impl Links {
    fn new(n: usize, mode: GraphMode) -> Self {
        Links {
            mode,
            adj: vec![Vec::new(); n],
            has_pred: vec![false; n],
            parent: (0..n).collect(),
            count: 0,
        }
    }

    fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] != v {
            self.parent[v] = self.parent[self.parent[v]];
            v = self.parent[v];
        }
        v
    }

    fn try_add(&mut self, t: usize, h: usize) {
        let n = self.adj.len();
        let free = match self.mode {
            GraphMode::Asymmetric => self.adj[t].is_empty() && !self.has_pred[h],
            GraphMode::Symmetric => {
                self.adj[t].len() < 2 && self.adj[h].len() < 2 && !self.adj[t].contains(&h)
            }
        };
        if !free {
            return;
        }
        let (rt, rh) = (self.find(t), self.find(h));
        if rt == rh && self.count != n - 1 {
            return;
        }
        self.parent[rt] = rh;
        self.adj[t].push(h);
        match self.mode {
            GraphMode::Asymmetric => self.has_pred[h] = true,
            GraphMode::Symmetric => self.adj[h].push(t),
        }
        self.count += 1;
    }

    fn tour(&self) -> Vec<usize> {
        let n = self.adj.len();
        let mut tour = vec![0];
        let mut prev = usize::MAX;
        let mut v = 0;
        while tour.len() < n {
            let next = *self.adj[v].iter().find(|&&u| u != prev).unwrap();
            tour.push(next);
            prev = v;
            v = next;
        }
        tour
    }
}
