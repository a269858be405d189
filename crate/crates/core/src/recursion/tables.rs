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

//! Min-plus term lists of the decimation recursions, one list per class
//! minimum. Each term names the three generation-n class minima whose sum is
//! one candidate for the generation-(n+1) value. Terms keep the order in which
//! the source equations print them, repeats included.

pub type Term<F> = [F; 3];

pub mod web {
    use super::Term;
    use crate::recursion::sfw::WebField::{self, *};

    pub const C0_TERMS: &[Term<WebField>] =
        &[[C0, C0, C0], [C0, C0, D0], [C0, C0, B2], [C0, C0, C1]];

    pub const D0_TERMS: &[Term<WebField>] = &[
        [C0, C0, C0],
        [C0, C0, D0],
        [C0, C0, B2],
        [C0, C0, C1],
        [C1, C1, C1],
        [C0, D0, D0],
        [C0, C1, C1],
        [C0, D0, C1],
        [D0, D0, C1],
        [C0, C1, B2],
        [D0, D0, D0],
        [D0, D0, B2],
        [C0, D0, B2],
        [D0, B2, C1],
        [D0, C1, C1],
    ];

    pub const C1_TERMS: &[Term<WebField>] = &[
        [C1, C1, C1],
        [C1, C1, C0],
        [C1, C1, D0],
        [C1, C0, C0],
        [C1, C0, D0],
        [B2, C0, C1],
        [B2, C0, D0],
        [B2, C0, C0],
        [B2, B2, C0],
        [B2, B2, D0],
        [B2, C1, C1],
        [B2, C1, D0],
    ];

    pub const B2_TERMS: &[Term<WebField>] =
        &[[C0, C0, B2], [C0, B2, C1], [B2, B2, C1], [B2, C1, C1]];

    /// Every list, keyed by the class minimum it defines.
    pub const ALL: [(WebField, &[Term<WebField>]); 4] = [
        (C0, C0_TERMS),
        (D0, D0_TERMS),
        (C1, C1_TERMS),
        (B2, B2_TERMS),
    ];
}

pub mod gasket {
    use super::Term;
    use crate::recursion::sg::SgField::{self, *};

    pub const A0_TERMS: &[Term<SgField>] = &[
        [A0, A0, B0],
        [A0, A0, C0],
        [A0, A1, B0],
        [A0, B0, B0],
        [A0, A1, C0],
        [A0, B0, B1],
        [A0, B0, C0],
        [A0, A0, A0],
        [A0, B1, C0],
        [A1, A1, C0],
        [A1, B0, B0],
        [A1, B0, B1],
        [A1, B1, C0],
        [A1, C0, C0],
        [A2, B0, B0],
        [A2, B0, C0],
        [A2, B1, C0],
        [A2, C0, C0],
        [B0, B0, B0],
        [B0, B0, B1],
        [B0, B0, C0],
        [B0, B1, B1],
        [B0, B1, C0],
        [B0, C0, C0],
        [B1, B1, B1],
        [B1, B1, C0],
        [B1, C0, C0],
        [C0, C0, C0],
        [A1, B0, C0],
        [A0, C0, C0],
    ];

    pub const A1_TERMS: &[Term<SgField>] = &[
        [A0, A0, A1],
        [A0, A0, B1],
        [A0, A0, C1],
        [A0, A1, B0],
        [A0, B0, B2],
        [A0, B0, C1],
        [A0, B1, B1],
        [A1, A1, C1],
        [A0, B1, C1],
        [A1, A1, B0],
        [A1, A1, C0],
        [A0, B1, C0],
        [A1, A2, B0],
        [A1, A2, C0],
        [A1, B0, B0],
        [A1, C0, C0],
        [A2, B0, B0],
        [A2, B0, B1],
        [A2, B0, C0],
        [A1, B1, B1],
        [B1, B2, C0],
        [B1, C0, C0],
        [B1, C0, C1],
        [C0, C0, C1],
        [B0, B2, C0],
        [B0, C0, C1],
        [B1, B1, C0],
        [B2, C0, C0],
        [A2, B1, C1],
        [A2, C0, C0],
        [A3, B0, B0],
        [A3, C0, C0],
        [A0, A1, B1],
        [A0, A1, C0],
        [A0, A1, C1],
        [A0, A2, B0],
        [A0, A2, C0],
        [A0, B0, B1],
        [A1, B0, B1],
        [A1, B0, C0],
        [A1, B0, C1],
        [A1, B1, C0],
        [A1, B1, C1],
        [A2, B0, C1],
        [B0, B0, B1],
        [B0, B0, C1],
        [B0, B1, B1],
        [B0, B1, C0],
    ];

    pub const A2_TERMS: &[Term<SgField>] = &[
        [A0, A1, A1],
        [A0, A1, B1],
        [A0, A1, C1],
        [A0, A2, B1],
        [A0, A2, C1],
        [A0, B1, B1],
        [A1, A1, B1],
        [A0, B1, C1],
        [A0, C1, C1],
        [A1, A1, B0],
        [A0, B1, B2],
        [A1, A1, C0],
        [A1, A1, C1],
        [A1, A2, B0],
        [A2, B2, C0],
        [A1, C1, C1],
        [A2, A2, C0],
        [A2, B0, B1],
        [A2, B0, B2],
        [A2, B0, C1],
        [A2, B1, B1],
        [A2, B1, C0],
        [C0, C1, C1],
        [A2, C1, C1],
        [A3, B1, C0],
        [A3, B2, C0],
        [A1, B1, B1],
        [B0, B1, B1],
        [B0, B1, B2],
        [B0, B1, C1],
        [B0, C1, C1],
        [B1, B1, C0],
        [B1, B1, C1],
        [B1, B2, C1],
        [B0, B2, C1],
        [A1, B1, C0],
        [B1, B1, B1],
        [A1, B1, C1],
        [A1, B2, C0],
        [A1, A2, C0],
        [A1, A2, C1],
        [A1, B0, B1],
        [A1, B0, B2],
        [A1, B0, C1],
        [A1, B1, B2],
        [B1, C0, C1],
        [B1, C1, C1],
        [B2, C0, C1],
    ];

    pub const A3_TERMS: &[Term<SgField>] = &[
        [A1, A1, A1],
        [A1, A1, B1],
        [A1, A1, C1],
        [A1, A2, B1],
        [C1, C1, C1],
        [A1, A2, C1],
        [A1, B1, B1],
        [A1, B1, C1],
        [A2, B1, B1],
        [A1, B2, C1],
        [A1, C1, C1],
        [A2, A2, C1],
        [A1, B1, B2],
        [A2, B1, B2],
        [A2, B1, C1],
        [A2, C1, C1],
        [B2, C1, C1],
        [A3, B1, B1],
        [A3, B1, C1],
        [A3, B2, C1],
        [A3, C1, C1],
        [B1, B1, B1],
        [B1, B1, B2],
        [B1, B1, C1],
        [B1, B2, B2],
        [B1, B2, C1],
        [B1, C1, C1],
        [B2, B2, B2],
        [B2, B2, C1],
        [A2, B2, C1],
    ];

    pub const B0_TERMS: &[Term<SgField>] = &[
        [A0, A0, B0],
        [A0, A0, C0],
        [A0, A0, D0],
        [A0, A1, C0],
        [C0, C0, C0],
        [A2, B0, D0],
        [A2, B1, D0],
        [A1, B1, D0],
        [B0, B0, B1],
        [A0, B0, C1],
        [A0, B0, D0],
        [A0, B1, C0],
        [C0, C0, C1],
        [B0, B0, B2],
        [B0, B0, C0],
        [B0, B0, D0],
        [B0, B1, B1],
        [B0, C0, C1],
        [C0, C0, D0],
        [B0, B1, C0],
        [B0, C0, C0],
        [B2, C0, C0],
        [A0, C0, C0],
        [A1, A1, D0],
        [A1, B0, B0],
        [A1, B0, B1],
        [A0, B1, D0],
        [B0, B0, B0],
        [A1, B0, C0],
        [A1, B0, D0],
        [A1, B1, C0],
        [A1, C0, C0],
        [A0, A1, D0],
        [A0, B0, B0],
        [A0, B0, B1],
        [A0, B0, C0],
        [B1, C0, C0],
        [B1, C0, C1],
        [B0, C0, D0],
        [B1, C0, D0],
    ];

    pub const B1_TERMS: &[Term<SgField>] = &[
        [A0, A1, B0],
        [A0, A1, C0],
        [A0, A1, D0],
        [A0, A2, C0],
        [A0, A2, D0],
        [A0, B0, B1],
        [A0, B1, B1],
        [A0, B0, C1],
        [A0, B1, C0],
        [A0, B1, C1],
        [A1, A1, C0],
        [A0, B2, C0],
        [A0, B2, D0],
        [A0, C0, C1],
        [A1, A1, D0],
        [A1, A2, D0],
        [A1, B0, B0],
        [A0, B1, D0],
        [A0, C1, D0],
        [A1, B0, B1],
        [A1, B0, C0],
        [A1, B0, C1],
        [A1, C1, C1],
        [A1, B1, C0],
        [A1, B1, C1],
        [A1, B1, D0],
        [A2, C0, C0],
        [A1, B2, D0],
        [A1, C0, C0],
        [A1, C0, C1],
        [A1, C0, D0],
        [A1, C1, D0],
        [A2, B0, B0],
        [A2, B0, C0],
        [A1, B0, D0],
        [A2, B0, C1],
        [A2, B0, D0],
        [A2, B1, C0],
        [A2, C1, C1],
        [A2, B2, D0],
        [A2, C0, C1],
        [A2, C0, D0],
        [B0, B0, B1],
        [A2, B1, D0],
        [A2, C1, D0],
        [A3, B0, C0],
        [A3, C0, C0],
        [A3, B1, D0],
        [A3, C0, C1],
        [A3, C0, D0],
        [B0, B0, B2],
        [B0, B1, B1],
        [B0, B1, B2],
        [A3, B0, D0],
        [A1, B2, C0],
        [B0, B0, C1],
        [B0, B1, C0],
        [B0, B1, C1],
        [B0, B1, D0],
        [B0, B2, C0],
        [B0, B2, C1],
        [B0, B2, D0],
        [B0, C1, C1],
        [B0, C0, C1],
        [B0, C1, D0],
        [B1, B1, B1],
        [B1, B1, C0],
        [B1, B1, C1],
        [B1, B1, D0],
        [B1, B2, C0],
        [B1, B2, C1],
        [B1, B2, D0],
        [B2, C0, D0],
        [B1, C0, C1],
        [B1, C0, D0],
        [B1, C1, C1],
        [B1, C1, D0],
        [B2, B2, C0],
        [B2, C0, C0],
        [B2, C0, C1],
        [B1, C0, C0],
        [C0, C0, C1],
        [C0, C1, C1],
        [C0, C1, D0],
    ];

    pub const B2_TERMS: &[Term<SgField>] = &[
        [A1, A1, B0],
        [A1, A1, C0],
        [A1, A1, D0],
        [A1, A2, C0],
        [A1, A2, D0],
        [A1, B0, B1],
        [A1, B0, C1],
        [A1, B1, B1],
        [A1, B1, C0],
        [A1, B1, C1],
        [A1, B1, D0],
        [A2, A2, D0],
        [A1, B2, D0],
        [A1, C0, C1],
        [A2, B0, B1],
        [B0, B1, B1],
        [A2, B0, C1],
        [A2, B1, C0],
        [A2, B1, C1],
        [C1, C1, D0],
        [A2, B1, D0],
        [A2, B2, C0],
        [A2, B2, D0],
        [B0, C1, C1],
        [A3, B1, D0],
        [A3, B2, D0],
        [B0, B1, B2],
        [B1, B1, B2],
        [A2, C0, C1],
        [A1, B2, C0],
        [B0, B1, C1],
        [B1, C1, C1],
        [B1, B1, C0],
        [B1, B1, C1],
        [B1, B1, D0],
        [B1, B2, C0],
        [B1, B1, B1],
        [C1, C1, C1],
        [B1, C0, C1],
        [B1, C1, D0],
        [B2, C0, C1],
        [B2, C1, C1],
        [B2, C1, D0],
        [C0, C1, C1],
    ];

    pub const C0_TERMS: &[Term<SgField>] = &[
        [A0, B0, B0],
        [A0, B0, C0],
        [A0, B0, D0],
        [B0, B0, B0],
        [A0, B1, C0],
        [A0, B1, D0],
        [A0, C0, C0],
        [A0, C0, C1],
        [A0, C0, D0],
        [A0, D0, D0],
        [A1, B0, C0],
        [A1, B0, D0],
        [A1, C0, C0],
        [A1, C0, C1],
        [A1, C0, D0],
        [A1, B1, D0],
        [A1, D0, D0],
        [A2, C0, C0],
        [A2, D0, D0],
        [B0, B0, C0],
        [B0, C0, D0],
        [B0, B0, C1],
        [B0, B0, D0],
        [B0, B1, C0],
        [B0, C0, C0],
        [C0, D0, D0],
        [B2, C0, C0],
        [B2, C0, C1],
        [C0, C0, C0],
        [C0, C0, D0],
        [C0, C1, D0],
        [B0, B1, C1],
        [B0, B1, D0],
        [B0, C0, C1],
        [B0, B0, B1],
        [B1, C0, C1],
        [B1, C0, D0],
        [B1, C1, D0],
        [B1, D0, D0],
        [B0, C1, D0],
        [B0, D0, D0],
        [B1, B1, C0],
        [B1, C0, C0],
    ];

    pub const C1_TERMS: &[Term<SgField>] = &[
        [A1, B0, B0],
        [A1, B0, C0],
        [A1, B0, D0],
        [A1, B1, C0],
        [A1, B1, D0],
        [A1, C0, C0],
        [A1, C0, C1],
        [A1, C0, D0],
        [A1, D0, D0],
        [A2, B0, C0],
        [A2, B0, D0],
        [A2, B1, D0],
        [A2, C0, C0],
        [A2, C0, C1],
        [A2, C0, D0],
        [B0, B1, B1],
        [B0, B1, C0],
        [B0, B1, C1],
        [B1, C0, C1],
        [B0, B2, C0],
        [B0, C0, C1],
        [B0, C1, C1],
        [C0, C1, D0],
        [B1, C0, D0],
        [B1, C1, C1],
        [B1, C1, D0],
        [B0, B1, D0],
        [A2, D0, D0],
        [A3, C0, C0],
        [A3, D0, D0],
        [B0, B0, B1],
        [B0, B0, C1],
        [B1, B1, C1],
        [B1, B1, D0],
        [B2, D0, D0],
        [B1, C0, C0],
        [B1, D0, D0],
        [B2, C0, C0],
        [B2, C0, C1],
        [B2, C0, D0],
        [B2, C1, C1],
        [B2, C1, D0],
        [B1, B2, C0],
        [C0, C0, C1],
        [B1, B1, C0],
        [C1, C1, D0],
        [C1, D0, D0],
    ];

    pub const D0_TERMS: &[Term<SgField>] = &[
        [B0, B0, B0],
        [B0, B0, C0],
        [B0, B1, C0],
        [B0, C1, D0],
        [B0, B1, D0],
        [B0, C0, C0],
        [B0, C0, C1],
        [B0, C0, D0],
        [B0, D0, D0],
        [B1, B1, D0],
        [B1, C0, C0],
        [B1, C0, C1],
        [B2, D0, D0],
        [B1, C0, D0],
        [B1, C1, D0],
        [B1, D0, D0],
        [B2, C0, C0],
        [C1, C1, C1],
        [B2, C0, D0],
        [B2, C1, D0],
        [C0, C0, C0],
        [C0, C0, C1],
        [C0, C0, D0],
        [C0, C1, C1],
        [C0, C1, D0],
        [C0, D0, D0],
        [C1, C1, D0],
        [D0, D0, D0],
        [C1, D0, D0],
        [B0, B0, D0],
    ];

    /// Every list, keyed by the class minimum it defines.
    pub const ALL: [(SgField, &[Term<SgField>]); 10] = [
        (A0, A0_TERMS),
        (A1, A1_TERMS),
        (A2, A2_TERMS),
        (A3, A3_TERMS),
        (B0, B0_TERMS),
        (B1, B1_TERMS),
        (B2, B2_TERMS),
        (C0, C0_TERMS),
        (C1, C1_TERMS),
        (D0, D0_TERMS),
    ];
}
