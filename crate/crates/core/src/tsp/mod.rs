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

//! Complete cost graphs and Hamiltonian circuits.
//!
//! An asymmetric graph stores `d(i, j)` for `i < j` and reads `d(j, i)` as
//! `-d(i, j)`: it is a [`PairwiseVector`] viewed as arc costs. Its strongly
//! transitive part (the cpi graph) contributes nothing to any closed path, so
//! circuit questions reduce to the cyclic part. A symmetric graph reads
//! `d(j, i) = d(i, j)`; it splits into a cyclic graph whose circuits are
//! shifted copies of the original ones, offset by the average circuit
//! length `T`.

mod exact;
mod heuristic;

pub use exact::{exact_hamiltonian, exact_hamiltonian_with_limit, EXACT_DEFAULT_LIMIT};
pub use heuristic::heuristic_hamiltonian;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::pairspace::{decompose, pair_count, pairs, PairwiseVector};
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GraphMode {
    Asymmetric,
    Symmetric,
}

impl GraphMode {
    pub fn keyword(self) -> &'static str {
        match self {
            GraphMode::Asymmetric => "asym",
            GraphMode::Symmetric => "sym",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CostGraph {
    mode: GraphMode,
    n: usize,
    /// `d(i, j)` for `i < j` in lexicographic pair order.
    weights: Vec<Rational>,
}

impl CostGraph {
    pub fn new(mode: GraphMode, n: usize, weights: Vec<Rational>) -> Result<Self> {
        if n < 2 {
            return Err(Error::Domain(format!(
                "graph needs at least 2 vertices, got {n}"
            )));
        }
        if weights.len() != pair_count(n) {
            return Err(Error::Domain(format!(
                "complete graph on {n} vertices needs {} weights, got {}",
                pair_count(n),
                weights.len()
            )));
        }
        Ok(CostGraph { mode, n, weights })
    }

    pub fn from_fn(
        mode: GraphMode,
        n: usize,
        mut f: impl FnMut(usize, usize) -> Rational,
    ) -> Result<Self> {
        Self::new(mode, n, pairs(n).map(|(i, j)| f(i, j)).collect())
    }

    pub fn from_pairwise(d: &PairwiseVector) -> Self {
        CostGraph {
            mode: GraphMode::Asymmetric,
            n: d.n(),
            weights: d.entries().to_vec(),
        }
    }

    /// The asymmetric graph as a pairwise vector.
    pub fn to_pairwise(&self) -> Result<PairwiseVector> {
        self.require(GraphMode::Asymmetric)?;
        PairwiseVector::from_entries(self.n, self.weights.clone())
    }

    pub fn mode(&self) -> GraphMode {
        self.mode
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Stored `d(i, j)`, `i < j`, in pair order.
    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    fn require(&self, mode: GraphMode) -> Result<()> {
        if self.mode != mode {
            return Err(Error::Mode {
                expected: match mode {
                    GraphMode::Asymmetric => "asymmetric",
                    GraphMode::Symmetric => "symmetric",
                },
            });
        }
        Ok(())
    }

    /// Cost of the arc `i -> j`. Panics on out-of-range or equal vertices.
    pub fn value(&self, i: usize, j: usize) -> Rational {
        assert!(i < self.n && j < self.n && i != j, "invalid arc ({i}, {j})");
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        let w = self.weights[a * (2 * self.n - a - 1) / 2 + (b - a - 1)];
        if i > j && self.mode == GraphMode::Asymmetric {
            -w
        } else {
            w
        }
    }

    /// `S(A_j)`: for asymmetric graphs the sum of outgoing arc costs, for
    /// symmetric graphs the sum of incident edge weights.
    pub fn vertex_sums(&self) -> Vec<Rational> {
        (0..self.n)
            .map(|j| {
                (0..self.n)
                    .filter(|&k| k != j)
                    .map(|k| self.value(j, k))
                    .sum()
            })
            .collect()
    }

    fn with_weights(&self, weights: Vec<Rational>) -> CostGraph {
        CostGraph {
            mode: self.mode,
            n: self.n,
            weights,
        }
    }
}

fn check_walk(g: &CostGraph, vertices: &[usize]) -> Result<()> {
    if vertices.len() < 2 {
        return Err(Error::Domain("a path needs at least two vertices".into()));
    }
    if let Some(&v) = vertices.iter().find(|&&v| v >= g.n) {
        return Err(Error::Index(format!(
            "vertex {} out of range for n = {}",
            v + 1,
            g.n
        )));
    }
    if vertices.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::Domain("consecutive vertices must differ".into()));
    }
    Ok(())
}

/// Sum of arc costs along `vertices`, plus the return arc when `closed`.
/// Vertices may repeat.
pub fn path_length(g: &CostGraph, vertices: &[usize], closed: bool) -> Result<Rational> {
    check_walk(g, vertices)?;
    let last = *vertices.last().unwrap();
    if closed && last == vertices[0] {
        return Err(Error::Domain("closing arc would be a self loop".into()));
    }
    let mut total: Rational = vertices.windows(2).map(|w| g.value(w[0], w[1])).sum();
    if closed {
        total += g.value(last, vertices[0]);
    }
    Ok(total)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AsymmetricDecomposition {
    /// Strongly transitive part: every closed path in it has length zero.
    pub cpi: CostGraph,
    pub cyclic: CostGraph,
}

pub fn decompose_asymmetric(g: &CostGraph) -> Result<AsymmetricDecomposition> {
    let dec = decompose(&g.to_pairwise()?);
    Ok(AsymmetricDecomposition {
        cpi: CostGraph::from_pairwise(&dec.st),
        cyclic: CostGraph::from_pairwise(&dec.cyclic),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PathBreakdown {
    pub cyclic: Rational,
    /// The direct first-to-last cpi arc for open paths; zero for closed ones.
    pub cpi: Rational,
    pub total: Rational,
}

/// Length of a path as its cyclic-graph length plus the cpi cost of going
/// straight from its first to its last vertex.
pub fn path_length_via_decomposition(
    g: &CostGraph,
    vertices: &[usize],
    closed: bool,
) -> Result<PathBreakdown> {
    let dec = decompose_asymmetric(g)?;
    let cyclic = path_length(&dec.cyclic, vertices, closed)?;
    let (first, last) = (vertices[0], *vertices.last().unwrap());
    let cpi = if closed || first == last {
        Rational::ZERO
    } else {
        dec.cpi.value(first, last)
    };
    Ok(PathBreakdown {
        cyclic,
        cpi,
        total: cyclic + cpi,
    })
}

/// Average Hamiltonian circuit length of a symmetric graph: `sum_j S(A_j) / (n - 1)`.
pub fn symmetric_t(g: &CostGraph) -> Result<Rational> {
    g.require(GraphMode::Symmetric)?;
    if g.n < 3 {
        return Err(Error::Domain(format!(
            "average circuit length needs n >= 3, got {}",
            g.n
        )));
    }
    let total: Rational = g.vertex_sums().into_iter().sum();
    Ok(total / Rational::from(g.n - 1))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SymmetricDecomposition {
    pub cyclic: CostGraph,
    /// Average Hamiltonian circuit length of the input.
    pub t: Rational,
}

/// `c(i, j) = d(i, j) - (S(A_i) + S(A_j) - T) / (n - 2)`.
///
/// Summed over the n edges of any Hamiltonian circuit the correction totals
/// exactly `T`, because each vertex meets two circuit edges and
/// `sum_j S(A_j) = (n - 1) T`.
pub fn decompose_symmetric(g: &CostGraph) -> Result<SymmetricDecomposition> {
    g.require(GraphMode::Symmetric)?;
    if g.n < 3 {
        return Err(Error::Domain(format!(
            "symmetric decomposition needs n >= 3, got {}",
            g.n
        )));
    }
    let t = symmetric_t(g)?;
    let s = g.vertex_sums();
    let denom = Rational::from(g.n - 2);
    let weights = pairs(g.n)
        .zip(&g.weights)
        .map(|((i, j), &w)| w - (s[i] + s[j] - t) / denom)
        .collect();
    Ok(SymmetricDecomposition {
        cyclic: g.with_weights(weights),
        t,
    })
}

/// `T` plus the `n` smallest cyclic edge weights; never above the shortest circuit.
pub fn lower_bound_symmetric(g: &CostGraph) -> Result<Rational> {
    let dec = decompose_symmetric(g)?;
    let mut w = dec.cyclic.weights.clone();
    w.sort_unstable();
    Ok(dec.t + w.into_iter().take(g.n).sum())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Objective {
    Shortest,
    Longest,
}

impl Objective {
    /// True when `a` is strictly preferable to `b`.
    pub(crate) fn better(self, a: Rational, b: Rational) -> bool {
        match self {
            Objective::Shortest => a < b,
            Objective::Longest => a > b,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    Exact,
    Heuristic,
    Bound,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CircuitResult {
    /// Each vertex once; the return to the first vertex is implicit.
    pub tour: Vec<usize>,
    pub length: Rational,
    pub provenance: Provenance,
}

/// Rotates a tour to start at vertex 0; for symmetric graphs also picks the
/// lexicographically smaller direction.
pub(crate) fn canonical_tour(mut tour: Vec<usize>, mode: GraphMode) -> Vec<usize> {
    if let Some(p) = tour.iter().position(|&v| v == 0) {
        tour.rotate_left(p);
    }
    if mode == GraphMode::Symmetric && tour.len() > 2 {
        let mut back = tour.clone();
        back[1..].reverse();
        if back < tour {
            return back;
        }
    }
    tour
}
