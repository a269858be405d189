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

//! Text renderings of graphs, class reports and the count table.

use std::fmt::Write;

use edomset::{ClassReport, Family, Graph};
use serde_json::{json, Map, Value};

use crate::{OutputFormat, Row};

pub fn graph(family: Family, n: u32, g: &Graph, format: OutputFormat) -> String {
    let anchors = g.anchors().map(|a| a.0);
    let pairs: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .map(|e| {
            let (u, v) = e.endpoints();
            (u.0, v.0)
        })
        .collect();
    let mut out = String::new();
    match format {
        OutputFormat::Edgelist => {
            let _ = writeln!(
                out,
                "# family={family} n={n} vertices={} edges={} anchors={},{},{}",
                g.vertex_count(),
                g.edge_count(),
                anchors[0],
                anchors[1],
                anchors[2]
            );
            for (u, v) in pairs {
                let _ = writeln!(out, "{u} {v}");
            }
        }
        OutputFormat::Csv => {
            out.push_str("u,v\n");
            for (u, v) in pairs {
                let _ = writeln!(out, "{u},{v}");
            }
        }
        OutputFormat::Dot => {
            let _ = writeln!(out, "graph {family}_{n} {{");
            for (i, a) in anchors.iter().enumerate() {
                let _ = writeln!(out, "  {a} [anchor={i}, shape=doublecircle];");
            }
            for (u, v) in pairs {
                let _ = writeln!(out, "  {u} -- {v};");
            }
            out.push_str("}\n");
        }
        OutputFormat::Json => {
            let doc = json!({
                "family": family.name(),
                "n": n,
                "vertices": g.vertex_count(),
                "anchors": anchors,
                "edges": pairs.iter().map(|&(u, v)| [u, v]).collect::<Vec<_>>(),
            });
            out = format!("{doc}\n");
        }
    }
    out
}

pub fn classes(family: Family, n: u32, report: &ClassReport) -> String {
    let classes: Vec<Value> = report
        .classes
        .iter()
        .map(|(key, entry)| {
            let mut obj = Map::new();
            obj.insert("filled".into(), json!(key.filled()));
            obj.insert("cross".into(), json!(key.cross()));
            obj.insert("label".into(), json!(key.label()));
            obj.insert("inhabited".into(), json!(entry.is_some()));
            if let Some(e) = entry {
                obj.insert("min_cardinality".into(), json!(e.min_cardinality));
                obj.insert("count_at_min".into(), json!(e.count_at_min.to_string()));
                let by_states: Map<String, Value> = e
                    .by_states
                    .iter()
                    .map(|(v, c)| (v.to_string(), json!(c.to_string())))
                    .collect();
                obj.insert("by_states".into(), Value::Object(by_states));
            }
            Value::Object(obj)
        })
        .collect();
    let doc = json!({ "family": family.name(), "n": n, "classes": classes });
    format!(
        "{}\n",
        serde_json::to_string_pretty(&doc).expect("json values serialize")
    )
}

pub fn table_csv(rows: &[Row]) -> String {
    let mut out = String::from("n,E_n,meds_web,meds_gasket\n");
    for r in rows {
        let _ = writeln!(out, "{},{},{},{}", r.n, r.edges, r.web, r.gasket);
    }
    out
}

/// Counts are strings so that values beyond 64 bits survive JSON readers.
pub fn table_json(rows: &[Row]) -> String {
    let rows: Vec<Value> = rows
        .iter()
        .map(|r| {
            json!({
                "n": r.n,
                "E_n": r.edges.to_string(),
                "meds_web": r.web.to_string(),
                "meds_gasket": r.gasket.to_string(),
            })
        })
        .collect();
    format!(
        "{}\n",
        serde_json::to_string_pretty(&json!({ "rows": rows })).expect("json values serialize")
    )
}
