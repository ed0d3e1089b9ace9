//! Run manifest: the resolved parameters behind an output file. Reruns with
//! an identical manifest produce byte-identical outputs (all randomness is
//! seeded, all formatting is locale-free).

use serde::Serialize;
use sha2::{Digest, Sha256};
use std::collections::BTreeMap;

#[derive(Debug, Clone, Serialize)]
pub struct RunManifest {
    pub command: String,
    /// Resolved parameters, sorted by name for stable serialization.
    pub params: BTreeMap<String, serde_json::Value>,
    pub seed: Option<u64>,
    pub version: String,
    pub input_digest: Option<String>,
}

impl RunManifest {
    pub fn new(command: &str, seed: Option<u64>, input_digest: Option<String>) -> Self {
        RunManifest {
            command: command.to_string(),
            params: BTreeMap::new(),
            seed,
            version: env!("CARGO_PKG_VERSION").to_string(),
            input_digest,
        }
    }

    pub fn param(mut self, name: &str, value: impl Serialize) -> Self {
        self.params.insert(
            name.to_string(),
            serde_json::to_value(value).expect("serializable param"),
        );
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("manifest json")
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}
