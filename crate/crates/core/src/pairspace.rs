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

//! Antisymmetric pairwise vectors and their orthogonal split into a strongly
//! transitive part and a cyclic part.
//!
//! A [`PairwiseVector`] over `n` alternatives stores one rational `d(i, j)` per
//! unordered pair `i < j`, in lexicographic pair order
//! `(0,1), (0,2), .., (0,n-1), (1,2), .., (n-2,n-1)`. Reading `d(j, i)` for
//! `j > i` yields `-d(i, j)`; the diagonal reads as zero.
//!
//! Indices are 0-based here. Reports add one when printing.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Position of the pair `(i, j)`, `i < j`, in lexicographic storage order.
pub fn pair_index(n: usize, i: usize, j: usize) -> Result<usize> {
    if i >= j || j >= n {
        return Err(Error::Index(format!(
            "pair ({}, {}) is not a valid i < j pair for n = {n}",
            i + 1,
            j + 1
        )));
    }
    Ok(unchecked_index(n, i, j))
}

#[inline]
fn unchecked_index(n: usize, i: usize, j: usize) -> usize {
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

/// Number of unordered pairs over `n` alternatives.
pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Iterates `(i, j)` with `i < j` in storage order.
pub fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
}

#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct PairwiseVector {
    n: usize,
    entries: Vec<Rational>,
}

impl PairwiseVector {
    fn check_n(n: usize) -> Result<()> {
        if n < 3 {
            return Err(Error::Domain(format!(
                "need at least 3 alternatives, got {n}"
            )));
        }
        Ok(())
    }

    pub fn zeros(n: usize) -> Result<Self> {
        Self::check_n(n)?;
        Ok(PairwiseVector {
            n,
            entries: vec![Rational::ZERO; pair_count(n)],
        })
    }

    /// Takes entries in storage order.
    pub fn from_entries(n: usize, entries: Vec<Rational>) -> Result<Self> {
        Self::check_n(n)?;
        if entries.len() != pair_count(n) {
            return Err(Error::Domain(format!(
                "expected {} entries for n = {n}, got {}",
                pair_count(n),
                entries.len()
            )));
        }
        Ok(PairwiseVector { n, entries })
    }

    /// Builds the vector from `f(i, j)` evaluated on every pair `i < j`.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Result<Self> {
        Self::check_n(n)?;
        Ok(PairwiseVector {
            n,
            entries: pairs(n).map(|(i, j)| f(i, j)).collect(),
        })
    }

    /// `d(i, j) = p[i] - p[j]`; always strongly transitive.
    pub fn from_potentials(potentials: &[Rational]) -> Result<Self> {
        Self::from_fn(potentials.len(), |i, j| potentials[i] - potentials[j])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    /// Antisymmetric accessor. Panics if an index is out of range.
    pub fn value(&self, i: usize, j: usize) -> Rational {
        assert!(i < self.n && j < self.n, "alternative index out of range");
        match i.cmp(&j) {
            std::cmp::Ordering::Less => self.entries[unchecked_index(self.n, i, j)],
            std::cmp::Ordering::Greater => -self.entries[unchecked_index(self.n, j, i)],
            std::cmp::Ordering::Equal => Rational::ZERO,
        }
    }

    /// Sets `d(i, j) = v`, which also fixes `d(j, i) = -v`.
    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        assert!(i != j, "diagonal is fixed at zero");
        assert!(i < self.n && j < self.n, "alternative index out of range");
        if i < j {
            self.entries[unchecked_index(self.n, i, j)] = v;
        } else {
            self.entries[unchecked_index(self.n, j, i)] = -v;
        }
    }

    /// Dot product over the stored upper-triangle entries.
    pub fn dot(&self, other: &PairwiseVector) -> Rational {
        assert_eq!(self.n, other.n, "dimension mismatch");
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| *a * *b)
            .sum()
    }

    pub fn scale(&self, factor: Rational) -> PairwiseVector {
        self.map(|x| x * factor)
    }

    pub fn map(&self, f: impl Fn(Rational) -> Rational) -> PairwiseVector {
        PairwiseVector {
            n: self.n,
            entries: self.entries.iter().map(|&x| f(x)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Rational::is_zero)
    }

    /// Relabels alternatives: entry `(perm[i], perm[j])` of the result is `d(i, j)`.
    pub fn relabel(&self, perm: &[usize]) -> PairwiseVector {
        assert_eq!(perm.len(), self.n);
        let mut out = PairwiseVector {
            n: self.n,
            entries: vec![Rational::ZERO; self.entries.len()],
        };
        for (i, j) in pairs(self.n) {
            out.set(perm[i], perm[j], self.value(i, j));
        }
        out
    }

    fn zip_with(
        &self,
        other: &PairwiseVector,
        f: impl Fn(Rational, Rational) -> Rational,
    ) -> PairwiseVector {
        assert_eq!(self.n, other.n, "dimension mismatch");
        PairwiseVector {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }
}

impl fmt::Debug for PairwiseVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for PairwiseVector {
    /// Compact notation: semicolons separate runs with the same first index.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for i in 0..self.n - 1 {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in i + 1..self.n {
                if j > i + 1 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.value(i, j))?;
            }
        }
        write!(f, ")")
    }
}

impl Add for &PairwiseVector {
    type Output = PairwiseVector;
    fn add(self, rhs: &PairwiseVector) -> PairwiseVector {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &PairwiseVector {
    type Output = PairwiseVector;
    fn sub(self, rhs: &PairwiseVector) -> PairwiseVector {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Neg for &PairwiseVector {
    type Output = PairwiseVector;
    fn neg(self) -> PairwiseVector {
        self.map(|x| -x)
    }
}

/// `S(A_j) = sum over k != j of d(j, k)`.
pub fn vertex_scores(d: &PairwiseVector) -> Vec<Rational> {
    let mut scores = vec![Rational::ZERO; d.n];
    for (idx, (i, j)) in pairs(d.n).enumerate() {
        let v = d.entries[idx];
        scores[i] += v;
        scores[j] -= v;
    }
    scores
}

/// Orthogonal projection onto the strongly transitive subspace:
/// `st(i, j) = (S(A_i) - S(A_j)) / n`.
pub fn project_st(d: &PairwiseVector) -> PairwiseVector {
    let scores = vertex_scores(d);
    let n = Rational::from(d.n);
    PairwiseVector {
        n: d.n,
        entries: pairs(d.n)
            .map(|(i, j)| (scores[i] - scores[j]) / n)
            .collect(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub st: PairwiseVector,
    pub cyclic: PairwiseVector,
    /// Vertex scores of the input, which are also those of `st`.
    pub scores: Vec<Rational>,
}

impl Decomposition {
    /// Coefficients of `cyclic` in [`cyclic_basis`] order.
    ///
    /// The basis vector for `(0, j, k)` is the only one touching the pair
    /// `(j, k)`, so its coefficient is read off directly.
    pub fn cyclic_coefficients(&self) -> Vec<((usize, usize), Rational)> {
        let n = self.cyclic.n;
        pairs(n)
            .filter(|&(j, _)| j > 0)
            .map(|(j, k)| ((j, k), self.cyclic.value(j, k)))
            .collect()
    }
}

pub fn decompose(d: &PairwiseVector) -> Decomposition {
    let st = project_st(d);
    let cyclic = d - &st;
    Decomposition {
        st,
        cyclic,
        scores: vertex_scores(d),
    }
}

/// Three-cycle basis of the cyclic subspace: for each `0 < j < k`, the vector
/// with `d(0, j) = d(j, k) = d(k, 0) = 1` and zeros elsewhere.
pub fn cyclic_basis(n: usize) -> Result<Vec<PairwiseVector>> {
    let zero = PairwiseVector::zeros(n)?;
    Ok(pairs(n)
        .filter(|&(j, _)| j > 0)
        .map(|(j, k)| {
            let mut v = zero.clone();
            v.set(0, j, Rational::ONE);
            v.set(j, k, Rational::ONE);
            v.set(k, 0, Rational::ONE);
            v
        })
        .collect())
}

/// `d(i, j) + d(j, k) = d(i, k)` for every triple.
///
/// Only triples through alternative 0 are checked: they force
/// `d(j, k) = d(0, k) - d(0, j)` for all pairs, which implies the rest.
pub fn is_strongly_transitive(d: &PairwiseVector) -> bool {
    pairs(d.n)
        .filter(|&(j, _)| j > 0)
        .all(|(j, k)| d.value(0, j) + d.value(j, k) == d.value(0, k))
}

/// Whether the majority relation (`i` beats `j` iff `d(i, j) > 0`, tie iff
/// zero) is a weak order.
///
/// Ties are merged into classes; the relation is transitive iff no strict
/// edge lies inside a class, every pair of classes is ordered the same way by
/// all of its cross edges, and the resulting class tournament is acyclic.
pub fn is_transitive(d: &PairwiseVector) -> bool {
    let n = d.n;
    let mut class: Vec<usize> = (0..n).collect();
    fn find(class: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while class[r] != r {
            r = class[r];
        }
        let mut y = x;
        while class[y] != r {
            let next = class[y];
            class[y] = r;
            y = next;
        }
        r
    }
    for (i, j) in pairs(n) {
        if d.value(i, j).is_zero() {
            let (a, b) = (find(&mut class, i), find(&mut class, j));
            class[a] = b;
        }
    }
    let roots: Vec<usize> = (0..n).map(|x| find(&mut class, x)).collect();
    let mut reps: Vec<usize> = roots.clone();
    reps.sort_unstable();
    reps.dedup();
    let m = reps.len();
    let pos = |r: usize| reps.binary_search(&r).unwrap();
    // beats[a][b]: Some(true) when class a beats class b.
    let mut beats: Vec<Vec<Option<bool>>> = vec![vec![None; m]; m];
    for (i, j) in pairs(n) {
        let v = d.value(i, j);
        let (a, b) = (pos(roots[i]), pos(roots[j]));
        if a == b {
            if !v.is_zero() {
                return false;
            }
            continue;
        }
        let a_wins = v.is_positive();
        match beats[a][b] {
            None => {
                beats[a][b] = Some(a_wins);
                beats[b][a] = Some(!a_wins);
            }
            Some(prev) if prev != a_wins => return false,
            Some(_) => {}
        }
    }
    // A tournament is acyclic iff its win counts are exactly 0..m-1.
    let mut wins: Vec<usize> = (0..m)
        .map(|a| (0..m).filter(|&b| beats[a][b] == Some(true)).count())
        .collect();
    wins.sort_unstable();
    wins.iter().enumerate().all(|(k, &w)| k == w)
}

/// The alternative beating every other one strictly, if any.
pub fn condorcet_winner(d: &PairwiseVector) -> Option<usize> {
    (0..d.n).find(|&j| (0..d.n).all(|k| k == j || d.value(j, k).is_positive()))
}

/// The alternative losing to every other one strictly, if any.
pub fn condorcet_loser(d: &PairwiseVector) -> Option<usize> {
    (0..d.n).find(|&j| (0..d.n).all(|k| k == j || d.value(j, k).is_negative()))
}

/// A weak order over alternatives, best group first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Ranking {
    groups: Vec<Vec<usize>>,
}

impl Ranking {
    /// A strict ranking from a permutation, best first.
    pub fn strict(order: Vec<usize>) -> Self {
        Ranking {
            groups: order.into_iter().map(|x| vec![x]).collect(),
        }
    }

    pub fn from_groups(groups: Vec<Vec<usize>>) -> Self {
        Ranking { groups }
    }

    pub fn groups(&self) -> &[Vec<usize>] {
        &self.groups
    }

    /// Flattened order, best first; tied alternatives stay in ascending index order.
    pub fn order(&self) -> Vec<usize> {
        self.groups.iter().flatten().copied().collect()
    }

    pub fn is_strict(&self) -> bool {
        self.groups.iter().all(|g| g.len() == 1)
    }

    pub fn top(&self) -> &[usize] {
        self.groups.first().map_or(&[], Vec::as_slice)
    }

    pub fn bottom(&self) -> &[usize] {
        self.groups.last().map_or(&[], Vec::as_slice)
    }

    /// Group position of each alternative, `0` for the best group.
    pub fn levels(&self) -> Vec<usize> {
        let n = self.groups.iter().map(Vec::len).sum();
        let mut level = vec![0; n];
        for (g, members) in self.groups.iter().enumerate() {
            for &m in members {
                level[m] = g;
            }
        }
        level
    }

    pub fn reversed(&self) -> Ranking {
        Ranking {
            groups: self.groups.iter().rev().cloned().collect(),
        }
    }

    /// Renders with the given names, e.g. `A1 ~ A2 > A3`.
    pub fn display_with(&self, names: &[String]) -> String {
        self.groups
            .iter()
            .map(|g| {
                g.iter()
                    .map(|&x| names[x].as_str())
                    .collect::<Vec<_>>()
                    .join(" ~ ")
            })
            .collect::<Vec<_>>()
            .join(" > ")
    }
}

impl fmt::Display for Ranking {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.groups.iter().map(Vec::len).sum();
        write!(f, "{}", self.display_with(&default_names(n)))
    }
}

/// `A1, A2, ..` labels.
pub fn default_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("A{i}")).collect()
}

/// Sorts by descending score; equal scores form one group in ascending index order.
pub fn ranking_from_scores(scores: &[Rational]) -> Ranking {
    let mut idx: Vec<usize> = (0..scores.len()).collect();
    idx.sort_by(|&a, &b| scores[b].cmp(&scores[a]).then(a.cmp(&b)));
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for i in idx {
        match groups.last_mut() {
            Some(g) if scores[g[0]] == scores[i] => g.push(i),
            _ => groups.push(vec![i]),
        }
    }
    Ranking { groups }
}
