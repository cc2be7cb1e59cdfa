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

//! Dodgson scores and Dodgson committees by exact search over ballot edits.
//!
//! A committee `M` is reached when every member strictly beats every
//! non-member pairwise (more than `N/2` voters). The cost of an edited
//! ballot is its adjacent-transposition distance from the original. Only
//! edits that move members up past non-members are worth making, so each
//! ballot's candidate edits are the order-preserving merges of its member and
//! non-member subsequences, costing one swap per member/non-member pair
//! they invert. A single candidate (`|M| = 1`) gives the classical Dodgson
//! score: lifting it by `k` slots passes the `k` candidates directly above.
//!
//! The minimum over all voters is found by depth-first branch and bound.
//! Voters sharing a ballot are handled as a group by choosing how many of
//! them take each edit.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::voting::Profile;

pub const DODGSON_MAX_ALTERNATIVES: usize = 6;
pub const DODGSON_MAX_VOTERS: u64 = 100;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DodgsonResult {
    /// Swap count per alternative.
    pub scores: Vec<u64>,
    /// Alternatives attaining the minimum score, ascending.
    pub winners: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CommitteeResult {
    pub size: usize,
    pub swaps: u64,
    /// Every optimal committee, each sorted ascending, in lexicographic order.
    pub committees: Vec<Vec<usize>>,
}

fn check_limits(p: &Profile) -> Result<()> {
    if p.n() > DODGSON_MAX_ALTERNATIVES {
        return Err(Error::Capacity {
            what: "Dodgson alternative count",
            got: p.n(),
            limit: DODGSON_MAX_ALTERNATIVES,
        });
    }
    if p.voters() > DODGSON_MAX_VOTERS {
        return Err(Error::Capacity {
            what: "Dodgson voter count",
            got: p.voters() as usize,
            limit: DODGSON_MAX_VOTERS as usize,
        });
    }
    Ok(())
}

pub fn dodgson_scores(p: &Profile) -> Result<DodgsonResult> {
    check_limits(p)?;
    let n = p.n();
    let support = p.support();
    let scores: Vec<u64> = (0..n)
        .map(|c| {
            let mut members = vec![false; n];
            members[c] = true;
            min_swaps(p, &support, &members)
        })
        .collect();
    let best = *scores.iter().min().expect("n >= 3");
    let winners = (0..n).filter(|&c| scores[c] == best).collect();
    Ok(DodgsonResult { scores, winners })
}

pub fn dodgson_committee(p: &Profile, size: usize) -> Result<CommitteeResult> {
    check_limits(p)?;
    let n = p.n();
    if size == 0 || size >= n {
        return Err(Error::Domain(format!(
            "committee size must be in 1..{n}, got {size}"
        )));
    }
    let support = p.support();
    let mut best: Option<u64> = None;
    let mut committees = Vec::new();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize != size {
            continue;
        }
        let members: Vec<bool> = (0..n).map(|a| mask & (1 << a) != 0).collect();
        let cost = min_swaps(p, &support, &members);
        let set: Vec<usize> = (0..n).filter(|&a| members[a]).collect();
        match best {
            Some(b) if cost > b => {}
            Some(b) if cost == b => committees.push(set),
            _ => {
                best = Some(cost);
                committees = vec![set];
            }
        }
    }
    committees.sort();
    Ok(CommitteeResult {
        size,
        swaps: best.expect("at least one committee"),
        committees,
    })
}

/// An edit of one ballot: its swap cost and the bitmask of deficit pairs it fixes.
#[derive(Debug, Clone, Copy)]
struct Edit {
    cost: u64,
    gains: u32,
}

struct Group {
    count: u64,
    edits: Vec<Edit>,
    /// `suffix_min[o][t]`: cheapest edit at index `>= o` fixing target `t`.
    suffix_min: Vec<Vec<Option<u64>>>,
}

fn ballot_edits(
    ranking: &[usize],
    members: &[bool],
    target_id: &[Vec<Option<usize>>],
) -> Vec<Edit> {
    // For member number t (in ballot order): `above[t]` non-members sit above it.
    let mut above = Vec::new();
    let mut nonmembers = Vec::new();
    for &a in ranking {
        if members[a] {
            above.push(nonmembers.len());
        } else {
            nonmembers.push(a);
        }
    }
    let member_list: Vec<usize> = ranking.iter().copied().filter(|&a| members[a]).collect();
    let mut best: HashMap<u32, u64> = HashMap::new();
    let mut choice = vec![0usize; above.len()];
    // Enumerate non-decreasing `choice[t] <= above[t]`: how many non-members
    // stay above member t after the edit.
    fn walk(
        t: usize,
        floor: usize,
        above: &[usize],
        choice: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[usize]),
    ) {
        if t == above.len() {
            visit(choice);
            return;
        }
        for c in floor..=above[t] {
            choice[t] = c;
            walk(t + 1, c, above, choice, visit);
        }
    }
    walk(0, 0, &above, &mut choice, &mut |ch: &[usize]| {
        let mut cost = 0u64;
        let mut gains = 0u32;
        for (t, &kept) in ch.iter().enumerate() {
            cost += (above[t] - kept) as u64;
            for &x in &nonmembers[kept..above[t]] {
                if let Some(id) = target_id[member_list[t]][x] {
                    gains |= 1 << id;
                }
            }
        }
        if cost > 0 && gains != 0 {
            let e = best.entry(gains).or_insert(cost);
            *e = (*e).min(cost);
        }
    });
    let edits: Vec<Edit> = best
        .into_iter()
        .map(|(gains, cost)| Edit { cost, gains })
        .collect();
    // Drop edits dominated by a cheaper-or-equal edit fixing a superset.
    let mut kept: Vec<Edit> = edits
        .iter()
        .filter(|e| {
            !edits
                .iter()
                .any(|f| f.gains != e.gains && f.gains & e.gains == e.gains && f.cost <= e.cost)
        })
        .copied()
        .collect();
    kept.sort_by_key(|e| (e.cost, std::cmp::Reverse(e.gains.count_ones()), e.gains));
    kept
}

struct Search<'a> {
    groups: &'a [Group],
    targets: usize,
    best: u64,
    seen: HashMap<(usize, usize, u64, Vec<u32>), u64>,
}

impl Search<'_> {
    /// Lower bound on the cost still needed: for each target, the cheapest
    /// way to supply its deficit ignoring all other targets.
    fn lower_bound(&self, g: usize, o: usize, remaining: u64, deficits: &[u32]) -> Option<u64> {
        let mut bound = 0u64;
        let mut offers: Vec<(u64, u64)> = Vec::with_capacity(self.groups.len() + 1);
        for t in 0..self.targets {
            let need = deficits[t] as u64;
            if need == 0 {
                continue;
            }
            offers.clear();
            if let Some(c) = self.groups[g].suffix_min.get(o).and_then(|m| m[t]) {
                offers.push((c, remaining));
            }
            for grp in &self.groups[g + 1..] {
                if let Some(c) = grp.suffix_min[0][t] {
                    offers.push((c, grp.count));
                }
            }
            offers.sort_unstable();
            let mut left = need;
            let mut cost = 0u64;
            for &(c, avail) in &offers {
                let take = avail.min(left);
                cost += take * c;
                left -= take;
                if left == 0 {
                    break;
                }
            }
            if left > 0 {
                return None;
            }
            bound = bound.max(cost);
        }
        // Each unit of an edit lowers the total deficit by at most the number
        // of live targets it touches, so the best cost-per-unit ratio bounds
        // the remaining cost from below.
        let live = deficits
            .iter()
            .enumerate()
            .filter(|&(_, &d)| d > 0)
            .fold(0u32, |m, (t, _)| m | (1 << t));
        let total: u64 = deficits.iter().map(|&d| d as u64).sum();
        let here = self.groups[g].edits.get(o..).unwrap_or(&[]);
        let later = self.groups[g + 1..].iter().flat_map(|grp| grp.edits.iter());
        let mut ratio: Option<(u64, u64)> = None;
        for e in here.iter().chain(later) {
            let eff = (e.gains & live).count_ones() as u64;
            if eff == 0 {
                continue;
            }
            match ratio {
                Some((c, f)) if e.cost * f >= c * eff => {}
                _ => ratio = Some((e.cost, eff)),
            }
        }
        let (c, f) = ratio?;
        Some(bound.max((total * c).div_ceil(f)))
    }

    fn dfs(&mut self, g: usize, o: usize, remaining: u64, deficits: &mut Vec<u32>, cost: u64) {
        if deficits.iter().all(|&d| d == 0) {
            self.best = self.best.min(cost);
            return;
        }
        if g == self.groups.len() {
            return;
        }
        match self.lower_bound(g, o, remaining, deficits) {
            Some(lb) if cost + lb < self.best => {}
            _ => return,
        }
        let key = (g, o, remaining, deficits.clone());
        match self.seen.get(&key) {
            Some(&prev) if prev <= cost => return,
            _ => {
                self.seen.insert(key, cost);
            }
        }
        let group = &self.groups[g];
        if o == group.edits.len() {
            let next_count = self.groups.get(g + 1).map_or(0, |grp| grp.count);
            self.dfs(g + 1, 0, next_count, deficits, cost);
            return;
        }
        let edit = group.edits[o];
        let max_useful = (0..self.targets)
            .filter(|&t| edit.gains & (1 << t) != 0)
            .map(|t| deficits[t] as u64)
            .max()
            .unwrap_or(0);
        let saved = deficits.clone();
        for take in (0..=remaining.min(max_useful)).rev() {
            for t in 0..self.targets {
                if edit.gains & (1 << t) != 0 {
                    deficits[t] = saved[t].saturating_sub(take as u32);
                }
            }
            self.dfs(
                g,
                o + 1,
                remaining - take,
                deficits,
                cost + take * edit.cost,
            );
        }
        deficits.copy_from_slice(&saved);
    }
}

/// Minimum total adjacent swaps after which every member strictly beats every non-member.
fn min_swaps(p: &Profile, support: &[Vec<u64>], members: &[bool]) -> u64 {
    let n = p.n();
    let need = p.voters() / 2 + 1;
    let mut target_id = vec![vec![None; n]; n];
    let mut deficits = Vec::new();
    for m in (0..n).filter(|&a| members[a]) {
        for x in (0..n).filter(|&a| !members[a]) {
            if support[m][x] < need {
                target_id[m][x] = Some(deficits.len());
                deficits.push((need - support[m][x]) as u32);
            }
        }
    }
    if deficits.is_empty() {
        return 0;
    }
    let targets = deficits.len();
    let groups: Vec<Group> = p
        .groups()
        .iter()
        .filter_map(|bg| {
            let edits = ballot_edits(&bg.ranking, members, &target_id);
            if edits.is_empty() {
                return None;
            }
            let mut suffix_min = vec![vec![None; targets]; edits.len() + 1];
            for o in (0..edits.len()).rev() {
                let next = suffix_min[o + 1].clone();
                for (t, slot) in suffix_min[o].iter_mut().enumerate() {
                    let here = (edits[o].gains & (1 << t) != 0).then_some(edits[o].cost);
                    *slot = match (here, next[t]) {
                        (Some(a), Some(b)) => Some(a.min(b)),
                        (a, b) => a.or(b),
                    };
                }
            }
            Some(Group {
                count: bg.count,
                edits,
                suffix_min,
            })
        })
        .collect();
    // Lifting every member to the top of every ballot always succeeds.
    let ceiling: u64 = p
        .groups()
        .iter()
        .map(|bg| {
            let mut nonmembers_above = 0u64;
            let mut total = 0u64;
            for &a in &bg.ranking {
                if members[a] {
                    total += nonmembers_above;
                } else {
                    nonmembers_above += 1;
                }
            }
            total * bg.count
        })
        .sum();
    let mut search = Search {
        groups: &groups,
        targets,
        best: ceiling + 1,
        seen: HashMap::new(),
    };
    let first = groups.first().map_or(0, |g| g.count);
    search.dfs(0, 0, first, &mut deficits, 0);
    debug_assert!(search.best <= ceiling);
    search.best
}
