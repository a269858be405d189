// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! Decimation recursions for class minima and MEDS counts.
//!
//! Both families are self-similar: generation `n + 1` is three copies of
//! generation `n` glued at anchors, so every class minimum at `n + 1` is the
//! minimum of three-term sums of class minima at `n`. The term lists live in
//! [`tables`] as data; [`sfw`] and [`sg`] iterate them from the generation-3
//! seeds.

pub mod sfw;
pub mod sg;
pub mod tables;

use crate::error::{input_err, Result};
use crate::generators::Generation;
use crate::scalar::{add, Exact};
use tables::Term;

/// Generation at which every recursion is seeded.
pub const BASE_GENERATION: u32 = 3;

/// Minimum over `terms` of the sum of the three named fields.
pub(crate) fn min_over<F: Copy, T: Exact>(terms: &[Term<F>], get: impl Fn(F) -> T) -> Result<T> {
    let mut best: Option<T> = None;
    for term in terms {
        let sum = add(&add(&get(term[0]), &get(term[1]))?, &get(term[2]))?;
        best = match best {
            Some(b) if b <= sum => Some(b),
            _ => Some(sum),
        };
    }
    Ok(best.expect("term lists are non-empty"))
}

/// Number of recursion steps from the seed to generation `n`.
pub(crate) fn steps_from_base(n: Generation) -> Result<u32> {
    match n.get().checked_sub(BASE_GENERATION) {
        Some(steps) => Ok(steps),
        None => input_err(format!(
            "the recursions start at generation {BASE_GENERATION}, got {n}; use the brute-force oracle below it"
        )),
    }
}
