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

//! Small dense linear algebra over [`Rational`], by Gaussian elimination.

use crate::rational::Rational;

/// Reduces `rows` to row echelon form in place and returns the pivot columns.
fn eliminate(rows: &mut [Vec<Rational>]) -> Vec<usize> {
    let width = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..width {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let lead = rows[r][col];
        for x in rows[r].iter_mut() {
            *x = *x / lead;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let factor = row[col];
            for (x, &p) in row[col..width].iter_mut().zip(&pivot_row[col..width]) {
                *x -= factor * p;
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}

/// Rank of a set of equal-length vectors.
pub fn rank(vectors: &[Vec<Rational>]) -> usize {
    let mut rows = vectors.to_vec();
    eliminate(&mut rows).len()
}

/// Finds coefficients `c` with `sum_i c[i] * columns[i] = target`, if any exist.
///
/// When the columns are dependent the free coefficients are set to zero.
pub fn solve_combination(columns: &[Vec<Rational>], target: &[Rational]) -> Option<Vec<Rational>> {
    let m = target.len();
    let k = columns.len();
    if columns.iter().any(|c| c.len() != m) {
        return None;
    }
    // Augmented system: one row per coordinate, one column per vector plus rhs.
    let mut rows: Vec<Vec<Rational>> = (0..m)
        .map(|row| {
            let mut r: Vec<Rational> = columns.iter().map(|c| c[row]).collect();
            r.push(target[row]);
            r
        })
        .collect();
    let pivots = eliminate(&mut rows);
    if pivots.contains(&k) {
        return None;
    }
    let mut coeffs = vec![Rational::ZERO; k];
    for (r, &col) in pivots.iter().enumerate() {
        coeffs[col] = rows[r][k];
    }
    Some(coeffs)
}
