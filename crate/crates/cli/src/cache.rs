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

//! Optional JSON cache of computed values: a flat object mapping
//! `family/n/quantity/method` keys to decimal strings.

use std::collections::BTreeMap;
use std::fs;
use std::io::ErrorKind;
use std::path::Path;

use edomset::{Family, Generation};

use crate::{Failure, Outcome};

pub fn key(family: Family, n: Generation, quantity: &str, method: &str) -> String {
    format!("{family}/{n}/{quantity}/{method}")
}

#[derive(Debug, Default)]
pub struct Cache {
    entries: BTreeMap<String, String>,
}

impl Cache {
    /// Reads the cache; a missing file is an empty cache.
    pub fn load(path: &Path) -> Outcome<Cache> {
        let text = match fs::read_to_string(path) {
            Ok(t) => t,
            Err(e) if e.kind() == ErrorKind::NotFound => return Ok(Cache::default()),
            Err(e) => return Err(e.into()),
        };
        let entries = serde_json::from_str(&text).map_err(|e| {
            Failure::Usage(format!(
                "cache {} is not a JSON object of strings: {e}",
                path.display()
            ))
        })?;
        Ok(Cache { entries })
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries.get(key).map(String::as_str)
    }

    pub fn insert(&mut self, key: String, value: String) {
        self.entries.insert(key, value);
    }

    pub fn save(&self, path: &Path) -> Outcome<()> {
        let text = serde_json::to_string_pretty(&self.entries).expect("string map serializes");
        fs::write(path, text + "\n")?;
        Ok(())
    }
}
