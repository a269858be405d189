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

//! Cross-check of exhaustive-search values against the recursion seeds and
//! closed forms.

use std::fmt::{Display, Write};

use edomset::recursion::{sfw, sg, BASE_GENERATION};
use edomset::{
    ClassReport, Count, Error, Family, Generation, MinEds, Oracle, SfwCounts, SfwState, SgCounts,
    SgState,
};

use crate::Outcome;

pub struct Report {
    pub text: String,
    pub failures: usize,
}

struct Checks {
    text: String,
    failures: usize,
}

impl Checks {
    fn check<T: PartialEq + Display>(&mut self, name: &str, oracle: T, expected: T) {
        let ok = oracle == expected;
        if !ok {
            self.failures += 1;
        }
        let status = if ok { "PASS" } else { "FAIL" };
        let _ = writeln!(
            self.text,
            "{status} {name}: oracle={oracle} expected={expected}"
        );
    }

    fn info(&mut self, line: impl Display) {
        let _ = writeln!(self.text, "INFO {line}");
    }
}

/// Runs the exhaustive oracle on both families at generation `n <= 3`.
///
/// Below generation 3 only the oracle values are recorded; at generation 3
/// they are compared against the recursion seeds, the iterated domination
/// numbers and counts, and the closed forms.
pub fn run(n: Generation) -> Outcome<Report> {
    if n.get() > BASE_GENERATION {
        return Err(Error::Capacity(format!(
            "verification enumerates edge subsets and stops at generation {BASE_GENERATION}, got {n}"
        ))
        .into());
    }
    let oracle = Oracle::default();
    let mut checks = Checks {
        text: String::new(),
        failures: 0,
    };
    for family in [Family::Web, Family::Gasket] {
        let g = family.build(n)?;
        let meds = oracle.min_eds(&g)?;
        let report = oracle.class_minima(&g)?;
        checks.info(format!(
            "{family} n={n} gamma={} meds={}",
            meds.gamma, meds.count
        ));
        for (key, entry) in report.inhabited() {
            checks.info(format!(
                "{family} n={n} class {} min={} count={}",
                key.label(),
                entry.min_cardinality,
                entry.count_at_min
            ));
        }
        if n.get() == BASE_GENERATION {
            match family {
                Family::Web => web_checks(&mut checks, n, &meds, &report)?,
                Family::Gasket => gasket_checks(&mut checks, n, &meds, &report)?,
            }
        }
    }
    Ok(Report {
        text: checks.text,
        failures: checks.failures,
    })
}

fn show<T: Display>(v: Option<T>) -> String {
    v.map_or_else(|| "uninhabited".into(), |v| v.to_string())
}

fn web_checks(c: &mut Checks, n: Generation, meds: &MinEds, report: &ClassReport) -> Outcome<()> {
    c.check(
        "web gamma vs recursion",
        meds.gamma as u64,
        sfw::gamma::<u64>(n)?,
    );
    c.check(
        "web gamma vs closed form",
        meds.gamma as u64,
        sfw::gamma_closed_form::<u64>(n)?,
    );
    c.check(
        "web meds count vs recursion",
        meds.count.clone(),
        sfw::meds_count::<Count>(n)?,
    );
    let seed = SfwState::<u64>::base()?;
    c.check(
        "web class minima (c0,d0,c1,b2)",
        show(
            SfwState::from_report(report).map(|s| format!("({},{},{},{})", s.c0, s.d0, s.c1, s.b2)),
        ),
        format!("({},{},{},{})", seed.c0, seed.d0, seed.c1, seed.b2),
    );
    let counts = SfwCounts::<Count>::base();
    c.check(
        "web count seed (x,y)",
        show(SfwCounts::from_oracle(meds, report).map(|s| format!("({},{})", s.x, s.y))),
        format!("({},{})", counts.x, counts.y),
    );
    Ok(())
}

fn gasket_checks(
    c: &mut Checks,
    n: Generation,
    meds: &MinEds,
    report: &ClassReport,
) -> Outcome<()> {
    c.check(
        "gasket gamma vs recursion",
        meds.gamma as u64,
        sg::gamma::<u64>(n)?,
    );
    c.check(
        "gasket gamma vs closed form",
        meds.gamma as u64,
        sg::gamma_closed_form::<u64>(n)?,
    );
    c.check(
        "gasket meds count vs recursion",
        meds.count.clone(),
        sg::meds_count::<Count>(n)?,
    );
    let tuple = |s: &SgState<u64>| {
        let v = s.to_array().map(|x| x.to_string());
        format!("({})", v.join(","))
    };
    c.check(
        "gasket class minima (a0,a1,a2,a3,b0,b1,b2,c0,c1,d0)",
        show(SgState::from_report(report).as_ref().map(tuple)),
        tuple(&SgState::base()?),
    );
    let counts = SgCounts::<Count>::base()?;
    c.check(
        "gasket count seed (x,y,z,w)",
        show(
            SgCounts::from_oracle(meds, report)
                .map(|s| format!("({},{},{},{})", s.x, s.y, s.z, s.w)),
        ),
        format!("({},{},{},{})", counts.x, counts.y, counts.z, counts.w),
    );
    Ok(())
}
