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

//! Edge domination on two self-similar graph families with the same vertex
//! and edge counts: the pseudofractal scale-free web `G_n` and the
//! Sierpinski gasket `S_n`.
//!
//! * [`generators`] builds both families.
//! * [`oracle`] computes edge domination numbers, MEDS counts and anchor
//!   class minima by exhaustive search on small graphs.
//! * [`recursion`] holds the decimation recursions that carry these values
//!   to arbitrary generations.
//!
//! Recursion code is generic over [`Exact`] integers; the aliases below fix
//! the usual choices (`u64` class minima, arbitrary-precision counts).

pub mod error;
pub mod generators;
pub mod graph;
pub mod oracle;
pub mod recursion;
pub mod scalar;

pub use error::{Error, Result};
pub use generators::{build_gasket, build_web_iterative, build_web_merge, Family, Generation};
pub use graph::{Edge, EdgeSet, Graph, VertexId};
pub use oracle::{
    AnchorState, AnchorStateVector, ClassEntry, ClassKey, ClassReport, MinEds, Oracle,
};
pub use recursion::sfw::{SfwCounts, SfwState, WebField};
pub use recursion::sg::{SgCounts, SgField, SgState};
pub use scalar::{Count, Exact};

/// Machine-word scalar for class minima and domination numbers.
pub type Cardinal = u64;
/// Web class minima over [`Cardinal`].
pub type WebState = SfwState<Cardinal>;
/// Web MEDS counts over [`Count`].
pub type WebCounts = SfwCounts<Count>;
/// Gasket class minima over [`Cardinal`].
pub type GasketState = SgState<Cardinal>;
/// Gasket MEDS counts over [`Count`].
pub type GasketCounts = SgCounts<Count>;
