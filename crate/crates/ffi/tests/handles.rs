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

use std::ffi::{CStr, CString};
use std::ptr;

use pairdecomp_ffi::*;

fn r(numer: i64, denom: i64) -> PdRational {
    PdRational { numer, denom }
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(pd_last_error_message()) }
        .to_string_lossy()
        .into_owned()
}

#[test]
fn vector_decomposition_round_trip() {
    let entries = [r(12, 1), r(-10, 1), r(13, 1)];
    let mut v = ptr::null_mut();
    unsafe {
        assert_eq!(pd_vector_new(3, entries.as_ptr(), 3, &mut v), PdStatus::Ok);
        assert_eq!(pd_vector_n(v), 3);
        let mut scores = [r(0, 1); 3];
        assert_eq!(pd_vector_scores(v, scores.as_mut_ptr(), 3), PdStatus::Ok);
        assert_eq!(scores, [r(2, 1), r(1, 1), r(-3, 1)]);

        let (mut st, mut cyc) = (ptr::null_mut(), ptr::null_mut());
        assert_eq!(pd_vector_decompose(v, &mut st, &mut cyc), PdStatus::Ok);
        let mut x = r(0, 1);
        assert_eq!(pd_vector_value(st, 0, 1, &mut x), PdStatus::Ok);
        assert_eq!(x, r(1, 3));
        assert_eq!(pd_vector_value(cyc, 0, 1, &mut x), PdStatus::Ok);
        assert_eq!(x, r(35, 3));
        assert_eq!(pd_vector_value(cyc, 1, 0, &mut x), PdStatus::Ok);
        assert_eq!(x, r(-35, 3));
        pd_vector_free(st);
        pd_vector_free(cyc);
        pd_vector_free(v);
    }
}

#[test]
fn vector_errors() {
    let mut v = ptr::null_mut();
    unsafe {
        assert_eq!(
            pd_vector_new(3, [r(1, 1)].as_ptr(), 1, &mut v),
            PdStatus::Domain
        );
        assert!(v.is_null());
        assert!(!last_error().is_empty());
        assert_eq!(
            pd_vector_new(3, [r(1, 0); 3].as_ptr(), 3, &mut v),
            PdStatus::Domain
        );
        assert_eq!(
            pd_vector_new(3, ptr::null(), 3, &mut v),
            PdStatus::NullPointer
        );
        assert_eq!(
            pd_vector_new(3, [r(1, 1); 3].as_ptr(), 3, &mut v),
            PdStatus::Ok
        );
        assert!(last_error().is_empty());
        let mut x = r(0, 1);
        assert_eq!(pd_vector_value(v, 1, 1, &mut x), PdStatus::Index);
        assert_eq!(pd_vector_value(v, 0, 3, &mut x), PdStatus::Index);
        let mut short = [r(0, 1); 2];
        assert_eq!(
            pd_vector_scores(v, short.as_mut_ptr(), 2),
            PdStatus::BufferTooSmall
        );
        assert_eq!(
            pd_vector_scores(ptr::null(), short.as_mut_ptr(), 2),
            PdStatus::NullPointer
        );
        pd_vector_free(v);
        pd_vector_free(ptr::null_mut());
        assert_eq!(pd_vector_n(ptr::null()), 0);
    }
}

#[test]
fn profile_rules() {
    let text = CString::new("25: A1 > A2 > A3\n23: A2 > A3 > A1\n22: A3 > A1 > A2\n").unwrap();
    let mut p = ptr::null_mut();
    unsafe {
        assert_eq!(pd_profile_parse(text.as_ptr(), &mut p), PdStatus::Ok);
        assert_eq!((pd_profile_alternatives(p), pd_profile_voters(p)), (3, 70));
        let mut borda = [r(0, 1); 3];
        assert_eq!(pd_profile_borda(p, borda.as_mut_ptr(), 3), PdStatus::Ok);
        assert_eq!(borda, [r(72, 1), r(71, 1), r(67, 1)]);
        let mut dodgson = [0u64; 3];
        assert_eq!(pd_profile_dodgson(p, dodgson.as_mut_ptr(), 3), PdStatus::Ok);
        assert_eq!(dodgson, [11, 13, 14]);
        let mut d = ptr::null_mut();
        assert_eq!(pd_profile_margins(p, &mut d), PdStatus::Ok);
        let mut x = r(0, 1);
        assert_eq!(pd_vector_value(d, 1, 2, &mut x), PdStatus::Ok);
        assert_eq!(x, r(13, 1));
        pd_vector_free(d);
        pd_profile_free(p);
    }
}

#[test]
fn profile_parse_errors() {
    let bad = CString::new("3: a > b\n0: b > a\n").unwrap();
    let mut p = ptr::null_mut();
    unsafe {
        assert_eq!(pd_profile_parse(bad.as_ptr(), &mut p), PdStatus::Parse);
        assert!(last_error().contains("line 2"), "{}", last_error());
        assert_eq!(pd_profile_parse(ptr::null(), &mut p), PdStatus::NullPointer);
        let not_utf8 = [0xffu8, 0];
        assert_eq!(
            pd_profile_parse(not_utf8.as_ptr().cast(), &mut p),
            PdStatus::InvalidUtf8
        );
    }
}

const SYM6: &str = "sym 6\n1 2 1\n1 3 5\n1 4 3\n1 5 4\n1 6 1\n2 3 7\n2 4 7\n2 5 3\n2 6 4\n\
                    3 4 2\n3 5 3\n3 6 5\n4 5 1\n4 6 7\n5 6 7\n";

#[test]
fn graph_circuits() {
    let text = CString::new(SYM6).unwrap();
    let mut g = ptr::null_mut();
    unsafe {
        assert_eq!(pd_graph_parse(text.as_ptr(), &mut g), PdStatus::Ok);
        assert_eq!(pd_graph_n(g), 6);
        let mut tour = [0usize; 6];
        let mut len = r(0, 1);
        assert_eq!(
            pd_graph_circuit(g, PdMethod::Exact, false, tour.as_mut_ptr(), 6, &mut len),
            PdStatus::Ok
        );
        assert_eq!(len, r(13, 1));
        let mut again = r(0, 1);
        assert_eq!(
            pd_graph_path_length(g, tour.as_ptr(), 6, true, &mut again),
            PdStatus::Ok
        );
        assert_eq!(again, len);
        assert_eq!(
            pd_graph_circuit(
                g,
                PdMethod::Heuristic,
                false,
                tour.as_mut_ptr(),
                6,
                &mut len
            ),
            PdStatus::Ok
        );
        assert_eq!(tour, [0, 1, 4, 3, 2, 5]);
        assert_eq!(len, r(13, 1));
        assert_eq!(pd_graph_lower_bound(g, &mut len), PdStatus::Ok);
        assert_eq!(len, r(12, 1));
        assert_eq!(
            pd_graph_circuit(g, PdMethod::Exact, true, tour.as_mut_ptr(), 5, &mut len),
            PdStatus::BufferTooSmall
        );
        assert_eq!(
            pd_graph_path_length(g, [0usize, 9].as_ptr(), 2, false, &mut len),
            PdStatus::Index
        );
        pd_graph_free(g);
    }
}

#[test]
fn graph_mode_and_capacity_errors() {
    let asym = CString::new("asym 3\n1 2 1\n1 3 2\n2 3 3\n").unwrap();
    let mut g = ptr::null_mut();
    let mut x = r(0, 1);
    unsafe {
        assert_eq!(pd_graph_parse(asym.as_ptr(), &mut g), PdStatus::Ok);
        assert_eq!(pd_graph_lower_bound(g, &mut x), PdStatus::Mode);
        pd_graph_free(g);

        let mut big = String::from("sym 15\n");
        for i in 1..=15 {
            for j in i + 1..=15 {
                big.push_str(&format!("{i} {j} 1\n"));
            }
        }
        let big = CString::new(big).unwrap();
        assert_eq!(pd_graph_parse(big.as_ptr(), &mut g), PdStatus::Ok);
        let mut tour = [0usize; 15];
        assert_eq!(
            pd_graph_circuit(g, PdMethod::Exact, false, tour.as_mut_ptr(), 15, &mut x),
            PdStatus::Capacity
        );
        assert_eq!(
            pd_graph_circuit(g, PdMethod::Heuristic, false, tour.as_mut_ptr(), 15, &mut x),
            PdStatus::Ok
        );
        assert_eq!(x, r(15, 1));
        pd_graph_free(g);
    }
}
