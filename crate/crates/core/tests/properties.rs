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

//! Invariants that hold for every input, checked with proptest.

use pairdecomp::io::{parse_graph, parse_profile, render_graph, render_profile};
use pairdecomp::pairspace::{
    condorcet_winner, decompose, default_names, is_strongly_transitive, pair_count, vertex_scores,
    PairwiseVector,
};
use pairdecomp::tsp::{
    decompose_asymmetric, decompose_symmetric, exact_hamiltonian, heuristic_hamiltonian,
    lower_bound_symmetric, path_length, CostGraph, GraphMode, Objective,
};
use pairdecomp::voting::{
    borda_direct, borda_from_scores, dodgson_scores, iiia_vector, kemeny, margins_from_profile,
    ranking_score, BallotGroup, Profile,
};
use pairdecomp::Rational;
use proptest::collection::vec;
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-60i128..=60, 1i128..=6).prop_map(|(p, q)| Rational::new(p, q))
}

fn vector(sizes: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = PairwiseVector> {
    sizes.prop_flat_map(|n| {
        vec(rational(), pair_count(n))
            .prop_map(move |e| PairwiseVector::from_entries(n, e).unwrap())
    })
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

fn profile(
    sizes: std::ops::RangeInclusive<usize>,
    max_count: u64,
) -> impl Strategy<Value = Profile> {
    sizes.prop_flat_map(move |n| {
        vec((1..=max_count, permutation(n)), 1..6).prop_map(move |gs| {
            let groups = gs
                .into_iter()
                .map(|(count, ranking)| BallotGroup { count, ranking })
                .collect();
            Profile::new(n, groups).unwrap()
        })
    })
}

fn graph(
    mode: GraphMode,
    sizes: std::ops::RangeInclusive<usize>,
) -> impl Strategy<Value = CostGraph> {
    sizes.prop_flat_map(move |n| {
        vec(rational(), pair_count(n)).prop_map(move |w| CostGraph::new(mode, n, w).unwrap())
    })
}

fn any_graph() -> impl Strategy<Value = CostGraph> {
    prop_oneof![
        graph(GraphMode::Asymmetric, 3..=7),
        graph(GraphMode::Symmetric, 3..=7)
    ]
}

fn reversed_tour(tour: &[usize]) -> Vec<usize> {
    let mut t = tour.to_vec();
    t[1..].reverse();
    t
}

proptest! {
    #[test]
    fn decomposition_is_an_orthogonal_split(d in vector(3..=7)) {
        let dec = decompose(&d);
        prop_assert_eq!(&(&dec.st + &dec.cyclic), &d);
        prop_assert!(dec.st.dot(&dec.cyclic).is_zero());
        prop_assert!(is_strongly_transitive(&dec.st));
        prop_assert!(vertex_scores(&dec.cyclic).iter().all(Rational::is_zero));
        prop_assert_eq!(decompose(&dec.st).st, dec.st.clone());
        prop_assert!(decompose(&dec.cyclic).st.is_zero());
    }

    #[test]
    fn decomposition_is_linear(
        (a, b) in (3usize..=6).prop_flat_map(|n| {
            let v = move || vec(rational(), pair_count(n)).prop_map(move |e| PairwiseVector::from_entries(n, e).unwrap());
            (v(), v())
        }),
        k in rational(),
    ) {
        let sum = decompose(&(&a + &b.scale(k)));
        let (da, db) = (decompose(&a), decompose(&b));
        prop_assert_eq!(sum.st, &da.st + &db.st.scale(k));
        prop_assert_eq!(sum.cyclic, &da.cyclic + &db.cyclic.scale(k));
    }

    #[test]
    fn decomposition_commutes_with_relabelling((d, perm) in vector(3..=6).prop_flat_map(|d| {
        let n = d.n();
        (Just(d), permutation(n))
    })) {
        let dec = decompose(&d);
        let relabelled = decompose(&d.relabel(&perm));
        prop_assert_eq!(relabelled.st, dec.st.relabel(&perm));
        prop_assert_eq!(relabelled.cyclic, dec.cyclic.relabel(&perm));
    }

    #[test]
    fn borda_equals_shifted_vertex_scores(p in profile(3..=5, 10)) {
        let d = margins_from_profile(&p);
        prop_assert_eq!(borda_direct(&p).tallies, borda_from_scores(&d, p.voters()).tallies);
    }

    #[test]
    fn iiia_is_borda_differences(p in profile(3..=5, 10)) {
        let v = iiia_vector(&p);
        let b = borda_direct(&p).tallies;
        prop_assert!(is_strongly_transitive(&v));
        for i in 0..p.n() {
            for j in 0..p.n() {
                if i != j {
                    prop_assert_eq!(v.value(i, j), b[i] - b[j]);
                }
            }
        }
    }

    #[test]
    fn kemeny_optima_are_maximal_and_flip_under_negation(d in vector(3..=5)) {
        let k = kemeny(&d).unwrap();
        for r in &k.optima {
            prop_assert_eq!(ranking_score(&d, &r.order()), k.score);
        }
        let neg = kemeny(&d.scale(Rational::from(-1))).unwrap();
        let mut flipped: Vec<_> = k.optima.iter().map(|r| r.reversed()).collect();
        flipped.sort_by_key(|r| r.order());
        prop_assert_eq!(neg.optima, flipped);
    }

    #[test]
    fn dodgson_zero_exactly_for_condorcet_winner(p in profile(3..=5, 8)) {
        let r = dodgson_scores(&p).unwrap();
        let w = condorcet_winner(&margins_from_profile(&p));
        let zeros: Vec<usize> = (0..p.n()).filter(|&a| r.scores[a] == 0).collect();
        prop_assert_eq!(zeros, w.into_iter().collect::<Vec<_>>());
    }

    #[test]
    fn walk_lengths_split_over_components(
        (g, walk) in graph(GraphMode::Asymmetric, 3..=7).prop_flat_map(|g| {
            let n = g.n();
            (Just(g), vec(0..n, 2..12).prop_filter("consecutive distinct", |w| w.windows(2).all(|p| p[0] != p[1])))
        }),
    ) {
        let dec = decompose_asymmetric(&g).unwrap();
        let open = path_length(&g, &walk, false).unwrap();
        prop_assert_eq!(open, path_length(&dec.cpi, &walk, false).unwrap() + path_length(&dec.cyclic, &walk, false).unwrap());
        if walk[0] != *walk.last().unwrap() {
            prop_assert!(path_length(&dec.cpi, &walk, true).unwrap().is_zero());
        }
    }

    #[test]
    fn exact_longest_reverses_shortest(g in graph(GraphMode::Asymmetric, 3..=7)) {
        let long = exact_hamiltonian(&g, Objective::Longest).unwrap();
        let short = exact_hamiltonian(&g, Objective::Shortest).unwrap();
        prop_assert_eq!(long.length, -short.length);
        prop_assert_eq!(path_length(&g, &reversed_tour(&long.tour), true).unwrap(), short.length);
    }

    #[test]
    fn heuristic_never_beats_exact(g in any_graph(), longest in any::<bool>()) {
        let obj = if longest { Objective::Longest } else { Objective::Shortest };
        let h = heuristic_hamiltonian(&g, obj).unwrap();
        let e = exact_hamiltonian(&g, obj).unwrap();
        let mut sorted = h.tour.clone();
        sorted.sort_unstable();
        prop_assert_eq!(sorted, (0..g.n()).collect::<Vec<_>>());
        prop_assert_eq!(h.length, path_length(&g, &h.tour, true).unwrap());
        match obj {
            Objective::Longest => prop_assert!(h.length <= e.length),
            Objective::Shortest => prop_assert!(h.length >= e.length),
        }
    }

    #[test]
    fn symmetric_bound_and_shift(g in graph(GraphMode::Symmetric, 3..=7)) {
        let dec = decompose_symmetric(&g).unwrap();
        let e = exact_hamiltonian(&g, Objective::Shortest).unwrap();
        prop_assert!(lower_bound_symmetric(&g).unwrap() <= e.length);
        prop_assert_eq!(path_length(&dec.cyclic, &e.tour, true).unwrap() + dec.t, e.length);
        prop_assert!(dec.cyclic.vertex_sums().iter().all(Rational::is_zero));
        prop_assert!(reversed_tour(&e.tour) >= e.tour);
    }

    #[test]
    fn graph_files_round_trip(g in any_graph()) {
        prop_assert_eq!(parse_graph(&render_graph(&g)).unwrap(), g);
    }

    #[test]
    fn profile_files_round_trip(p in profile(3..=6, 50)) {
        let names = default_names(p.n());
        let back = parse_profile(&render_profile(&p, &names)).unwrap();
        // Parsing renumbers alternatives by first appearance.
        let first = &p.groups()[0].ranking;
        let mut perm = vec![0; p.n()];
        for (slot, &a) in first.iter().enumerate() {
            perm[a] = slot;
        }
        prop_assert_eq!(back.profile, p.relabel(&perm));
        let expect: Vec<String> = first.iter().map(|&a| names[a].clone()).collect();
        prop_assert_eq!(back.names, expect);
    }
}
