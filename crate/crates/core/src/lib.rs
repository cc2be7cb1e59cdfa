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

//! Orthogonal decomposition of pairwise-difference vectors, with the voting
//! rules and Hamiltonian-circuit tools built on it.
//!
//! Library indices are 0-based throughout; files, CLI output and names such
//! as `A1` are 1-based.

pub mod cli;
pub mod error;
pub mod io;
pub mod linalg;
pub mod pairspace;
pub mod random;
pub mod rational;
pub mod suites;
pub mod tsp;
pub mod voting;

pub use error::{Error, Result};
pub use rational::Rational;
