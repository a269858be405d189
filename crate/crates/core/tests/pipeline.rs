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

//! End-to-end use of the public API: build a graph, search it exhaustively,
//! seed the recursions from the search and iterate.

use edomset::generators::MAX_BUILD_GENERATION;
use edomset::oracle::{is_eds, min_eds};
use edomset::recursion::{sfw, sg};
use edomset::{
    Count, EdgeSet, Error, Family, GasketCounts, GasketState, Generation, Oracle, WebCounts,
    WebState,
};

fn gen(n: u32) -> Generation {
    Generation::new(n).unwrap()
}

#[test]
fn families_parse_and_build() {
    for (name, family) in [("web", Family::Web), ("gasket", Family::Gasket)] {
        assert_eq!(name.parse::<Family>().unwrap(), family);
        assert_eq!(family.to_string(), name);
        let g = family.build(gen(4)).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (42, 81));
        assert!(g.is_connected());
    }
    assert!(matches!("ring".parse::<Family>(), Err(Error::Input(_))));
    assert!(matches!(Generation::new(0), Err(Error::Input(_))));
    assert!(matches!(
        Family::Web.build(gen(MAX_BUILD_GENERATION + 1)),
        Err(Error::Capacity(_))
    ));
}

#[test]
fn full_edge_set_dominates_and_oracle_respects_cap() {
    let g = Family::Gasket.build(gen(4)).unwrap();
    assert!(is_eds(&g, &EdgeSet::full(g.edge_count())).unwrap());
    assert!(!is_eds(&g, &g.empty_set()).unwrap());
    assert!(matches!(min_eds(&g), Err(Error::Capacity(_))));
}

#[test]
fn oracle_seeds_drive_the_web_recursion() {
    let g = Family::Web.build(gen(3)).unwrap();
    let oracle = Oracle::default();
    let meds = oracle.min_eds(&g).unwrap();
    let report = oracle.class_minima(&g).unwrap();
    let seed = WebState::from_report(&report).unwrap();
    assert_eq!(seed, WebState::new(5, 3, 3, 3));
    for n in 3..=12 {
        let s = sfw::state_at(&seed, gen(n)).unwrap();
        assert_eq!(s.gamma(), sfw::gamma::<u64>(gen(n)).unwrap(), "n = {n}");
        assert_eq!(s.b2, s.d0, "n = {n}");
    }
    let counts = WebCounts::from_oracle(&meds, &report).unwrap();
    assert_eq!(counts, WebCounts::new(Count::from(2u64), Count::from(8u64)));
}

#[test]
fn oracle_seeds_drive_the_gasket_recursion() {
    let g = Family::Gasket.build(gen(3)).unwrap();
    let oracle = Oracle::default();
    let meds = oracle.min_eds(&g).unwrap();
    let report = oracle.class_minima(&g).unwrap();
    let seed = GasketState::from_report(&report).unwrap();
    assert_eq!(seed.to_array(), [5, 5, 4, 4, 5, 5, 5, 5, 5, 6]);
    assert_eq!(seed.gamma() as usize, meds.gamma);
    let got: Vec<u64> = (3..=7)
        .map(|n| sg::state_at(&seed, gen(n)).unwrap().gamma())
        .collect();
    assert_eq!(got, [5, 14, 41, 122, 365]);
    let counts = GasketCounts::from_oracle(&meds, &report).unwrap();
    let as_text = [counts.x, counts.y, counts.z, counts.w].map(|c| c.to_string());
    assert_eq!(as_text, ["66", "37", "12", "70"]);
}

#[test]
fn scalar_choice_does_not_change_values() {
    for n in 3..=25 {
        assert_eq!(
            sg::gamma::<u64>(gen(n)).unwrap().to_string(),
            sg::gamma::<Count>(gen(n)).unwrap().to_string()
        );
        assert_eq!(
            sfw::gamma::<u128>(gen(n)).unwrap().to_string(),
            sfw::gamma::<Count>(gen(n)).unwrap().to_string()
        );
    }
    assert_eq!(
        sfw::meds_count::<u128>(gen(6)).unwrap().to_string(),
        sfw::meds_count::<Count>(gen(6)).unwrap().to_string()
    );
}
