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

//! Acceptance criteria for graph construction, the exhaustive oracle and the
//! recursions. Each criterion is an exact check with a pinned runtime limit;
//! [`CRITERIA`] lists them in order and the `acceptance` test target runs
//! them.

use std::time::{Duration, Instant};

use edomset::generators::{edge_count, vertex_count};
use edomset::recursion::{sfw, sg};
use edomset::{
    build_gasket, build_web_iterative, build_web_merge, Count, Generation, Oracle, SfwCounts,
    SfwState, SgCounts, SgState,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// `Err` carries a one-line description of the first mismatch.
pub type Outcome = Result<(), String>;

/// A named check and the wall-clock time it must finish within.
pub struct Criterion {
    pub name: &'static str,
    pub limit: Duration,
    pub check: fn() -> Outcome,
}

pub const CRITERIA: [Criterion; 8] = [
    Criterion {
        name: "graph vertex and edge counts",
        limit: Duration::from_secs(1),
        check: graph_counts,
    },
    Criterion {
        name: "edge domination numbers",
        limit: Duration::from_secs(5),
        check: domination_numbers,
    },
    Criterion {
        name: "MEDS count table",
        limit: Duration::from_secs(1),
        check: table_reproduction,
    },
    Criterion {
        name: "oracle agrees with recursion seeds",
        limit: Duration::from_secs(360),
        check: oracle_agreement,
    },
    Criterion {
        name: "term lists reproduce closed forms",
        limit: Duration::from_secs(1),
        check: transcription,
    },
    Criterion {
        name: "reduced web step",
        limit: Duration::from_secs(1),
        check: reduced_step,
    },
    Criterion {
        name: "web construction equivalence",
        limit: Duration::from_secs(60),
        check: construction_equivalence,
    },
    Criterion {
        name: "MEDS count growth",
        limit: Duration::from_secs(1),
        check: growth,
    },
];

impl Criterion {
    /// Runs the check; exceeding the limit is a failure.
    pub fn run(&self) -> (Outcome, Duration) {
        let start = Instant::now();
        let result = (self.check)();
        let elapsed = start.elapsed();
        let verdict = match result {
            Ok(()) if elapsed > self.limit => {
                Err(format!("took {elapsed:.2?}, limit {:?}", self.limit))
            }
            other => other,
        };
        (verdict, elapsed)
    }
}

fn gen(n: u32) -> Generation {
    Generation::new(n).expect("n >= 1")
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn fail<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

/// |V| = (3^n + 3) / 2 and |E| = 3^n for n = 1..6, both families.
pub fn graph_counts() -> Outcome {
    for n in 1..=6 {
        let e = 3usize.pow(n);
        let v = (e + 3) / 2;
        ensure(edge_count(gen(n)).map_err(fail)? as usize == e, || {
            format!("edge_count({n})")
        })?;
        ensure(vertex_count(gen(n)).map_err(fail)? as usize == v, || {
            format!("vertex_count({n})")
        })?;
        for (name, g) in [
            (
                "web (iterative)",
                build_web_iterative(gen(n)).map_err(fail)?,
            ),
            ("web (merge)", build_web_merge(gen(n)).map_err(fail)?),
            ("gasket", build_gasket(gen(n)).map_err(fail)?),
        ] {
            ensure(g.vertex_count() == v && g.edge_count() == e, || {
                format!(
                    "{name} n={n}: |V|={} |E|={}, expected {v}, {e}",
                    g.vertex_count(),
                    g.edge_count()
                )
            })?;
        }
    }
    Ok(())
}

/// Oracle gamma at n = 3; recursion and closed forms for n = 3..20; ratio 3/5.
pub fn domination_numbers() -> Outcome {
    let oracle = Oracle::default();
    let web3 = oracle
        .min_eds(&build_web_iterative(gen(3)).map_err(fail)?)
        .map_err(fail)?
        .gamma;
    let sg3 = oracle
        .min_eds(&build_gasket(gen(3)).map_err(fail)?)
        .map_err(fail)?
        .gamma;
    ensure(web3 == 3, || {
        format!("oracle gamma(G_3) = {web3}, expected 3")
    })?;
    ensure(sg3 == 5, || {
        format!("oracle gamma(S_3) = {sg3}, expected 5")
    })?;
    let mut problems = Vec::new();
    for n in 3..=20 {
        let p = 3u64.pow(n - 3);
        let (web_expected, sg_expected) = (3 * p, 5 * p);
        let web_rec: u64 = sfw::gamma(gen(n)).map_err(fail)?;
        let web_closed: u64 = sfw::gamma_closed_form(gen(n)).map_err(fail)?;
        let sg_rec: u64 = sg::gamma(gen(n)).map_err(fail)?;
        let sg_closed: u64 = sg::gamma_closed_form(gen(n)).map_err(fail)?;
        if web_rec != web_expected || web_closed != web_expected {
            problems.push(format!(
                "web n={n}: recursion {web_rec}, closed form {web_closed}, expected {web_expected}"
            ));
        }
        if sg_rec != sg_expected || sg_closed != sg_expected {
            problems.push(format!(
                "gasket n={n}: recursion {sg_rec}, closed form {sg_closed}, expected {sg_expected}"
            ));
        }
        if web_rec * 5 != sg_rec * 3 {
            problems.push(format!("ratio n={n}: {web_rec}/{sg_rec} is not 3/5"));
        }
    }
    ensure(problems.is_empty(), || summarize(&problems))
}

/// The count table for n = 3..6.
pub fn table_reproduction() -> Outcome {
    let expected = [
        (3, "1", "2"),
        (4, "5", "737"),
        (5, "223", "60406401428"),
        (6, "12853595", "11968284390834034602027534554922752"),
    ];
    for (n, web, gasket) in expected {
        let w = sfw::meds_count::<Count>(gen(n)).map_err(fail)?.to_string();
        let g = sg::meds_count::<Count>(gen(n)).map_err(fail)?.to_string();
        ensure(w == web && g == gasket, || {
            format!("n={n}: ({w}, {g}), expected ({web}, {gasket})")
        })?;
    }
    Ok(())
}

/// Oracle values at n = 3 against the recursion seeds, with one engine.
fn seed_agreement(oracle: Oracle) -> Outcome {
    let n = gen(3);
    let mut problems = Vec::new();

    let web = build_web_iterative(n).map_err(fail)?;
    let meds = oracle.min_eds(&web).map_err(fail)?;
    let report = oracle.class_minima(&web).map_err(fail)?;
    let rec = sfw::meds_count::<Count>(n).map_err(fail)?;
    if meds.count != rec {
        problems.push(format!(
            "web MEDS count: oracle {}, recursion {rec}",
            meds.count
        ));
    }
    let seed = SfwState::<u64>::base().map_err(fail)?;
    match SfwState::from_report(&report) {
        Some(s) if s == seed => {}
        got => problems.push(format!("web class minima: oracle {got:?}, seed {seed:?}")),
    }
    let counts = SfwCounts::<Count>::base();
    match SfwCounts::from_oracle(&meds, &report) {
        Some(c) if c == counts => {}
        got => problems.push(format!("web (x, y): oracle {got:?}, seed {counts:?}")),
    }

    let gasket = build_gasket(n).map_err(fail)?;
    let meds = oracle.min_eds(&gasket).map_err(fail)?;
    let report = oracle.class_minima(&gasket).map_err(fail)?;
    let rec = sg::meds_count::<Count>(n).map_err(fail)?;
    if meds.count != rec {
        problems.push(format!(
            "gasket MEDS count: oracle {}, recursion {rec}",
            meds.count
        ));
    }
    let seed = SgState::<u64>::base().map_err(fail)?;
    match SgState::from_report(&report) {
        Some(s) if s == seed => {}
        got => problems.push(format!(
            "gasket class minima: oracle {:?}, seed {:?}",
            got.map(|s| s.to_array()),
            seed.to_array()
        )),
    }
    let counts = SgCounts::<Count>::base().map_err(fail)?;
    match SgCounts::from_oracle(&meds, &report) {
        Some(c) if c == counts => {}
        got => problems.push(format!(
            "gasket (x, y, z, w): oracle {got:?}, seed {counts:?}"
        )),
    }
    ensure(problems.is_empty(), || problems.join("; "))
}

/// Both engines, each inside its own limit, reporting the same values.
pub fn oracle_agreement() -> Outcome {
    let mut runs = Vec::new();
    for (label, oracle, limit) in [
        ("parallel", Oracle::default(), Duration::from_secs(60)),
        (
            "single-threaded",
            Oracle::sequential(),
            Duration::from_secs(300),
        ),
    ] {
        let start = Instant::now();
        let result = seed_agreement(oracle);
        let elapsed = start.elapsed();
        ensure(elapsed <= limit, || {
            format!("{label} oracle took {elapsed:.2?}, limit {limit:?}")
        })?;
        runs.push(result);
    }
    ensure(runs[0] == runs[1], || {
        format!("engines disagree: {:?} vs {:?}", runs[0], runs[1])
    })?;
    runs[0].clone()
}

/// Iterated states match the closed forms for n = 3..30.
pub fn transcription() -> Outcome {
    let mut problems = Vec::new();
    let mut s = SgState::<u64>::base().map_err(fail)?;
    let mut w = SfwState::<u64>::base().map_err(fail)?;
    for n in 3..=30 {
        let chain = sg::closed_chain::<u64>(gen(n)).map_err(fail)?;
        if s != chain && problems.len() < 3 {
            problems.push(format!(
                "gasket n={n}: iterate {:?}, chain {:?}",
                s.to_array(),
                chain.to_array()
            ));
        }
        let closed = sfw::closed_form::<u64>(gen(n)).map_err(fail)?;
        if w != closed {
            problems.push(format!("web n={n}: iterate {w:?}, closed form {closed:?}"));
        }
        s = s.step().map_err(fail)?;
        w = w.step().map_err(fail)?;
    }
    ensure(problems.is_empty(), || summarize(&problems))
}

/// Full and reduced web steps agree on 1000 sampled ordered states.
pub fn reduced_step() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x00ed_d5e7);
    for i in 0..1000 {
        // c0 > b2 > c1 = d0, every field <= 10^6
        let d = rng.gen_range(0..=999_998u64);
        let b2 = rng.gen_range(d + 1..=999_999);
        let c0 = rng.gen_range(b2 + 1..=1_000_000);
        let s = SfwState::new(c0, d, d, b2);
        ensure(s.satisfies_ordering(), || {
            format!("sample {i} {s:?} is not ordered")
        })?;
        let full = s.step().map_err(fail)?;
        let reduced = s.step_reduced().map_err(fail)?;
        ensure(full == reduced, || {
            format!("sample {i} {s:?}: full {full:?}, reduced {reduced:?}")
        })?;
    }
    Ok(())
}

/// Both web constructions agree on counts and degrees (n = 1..6) and on
/// gamma and the MEDS count (n = 1..3).
pub fn construction_equivalence() -> Outcome {
    let oracle = Oracle::default();
    for n in 1..=6 {
        let a = build_web_iterative(gen(n)).map_err(fail)?;
        let b = build_web_merge(gen(n)).map_err(fail)?;
        ensure(
            a.vertex_count() == b.vertex_count() && a.edge_count() == b.edge_count(),
            || format!("n={n}: sizes differ"),
        )?;
        ensure(a.degree_multiset() == b.degree_multiset(), || {
            format!("n={n}: degree multisets differ")
        })?;
        if n <= 3 {
            let (ma, mb) = (
                oracle.min_eds(&a).map_err(fail)?,
                oracle.min_eds(&b).map_err(fail)?,
            );
            ensure(ma == mb, || format!("n={n}: oracle {ma:?} vs {mb:?}"))?;
        }
    }
    Ok(())
}

/// x_{n+1} >= x_n^3 for n = 3..15, both families.
pub fn growth() -> Outcome {
    let mut web = SfwCounts::<Count>::base();
    let mut gasket = SgCounts::<Count>::base().map_err(fail)?;
    for n in 3..=15 {
        let (web_next, gasket_next) = (web.step().map_err(fail)?, gasket.step().map_err(fail)?);
        let cube = |x: &Count| x.clone() * x.clone() * x.clone();
        ensure(web_next.x >= cube(&web.x), || format!("web n={n}"))?;
        ensure(gasket_next.x >= cube(&gasket.x), || format!("gasket n={n}"))?;
        web = web_next;
        gasket = gasket_next;
    }
    Ok(())
}

fn summarize(problems: &[String]) -> String {
    match problems {
        [] => String::new(),
        [one] => one.clone(),
        [first, rest @ ..] => format!("{first} (and {} more)", rest.len()),
    }
}
