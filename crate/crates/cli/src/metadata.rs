//! Run metadata embedded in every output file.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

/// Version stamped into outputs; consumers refuse mismatched files.
pub const ARTIFACT_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Version of all CSV schemas produced by the harness.
pub const CSV_SCHEMA_VERSION: u32 = 1;

/// Provenance block carried by every output file. For deterministic
/// artifacts (sampled networks, CSV bundles) the wall time is omitted so
/// reruns with identical parameters are byte-identical; reports that carry
/// timing information include it explicitly.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct RunMetadata {
    pub artifact_version: String,
    pub rng: String,
    pub seed: u64,
    pub stream: u64,
    /// Parameter echo, ordered by key for stable serialization.
    pub parameters: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<f64>,
}

impl RunMetadata {
    pub fn new(seed: u64, stream: u64) -> Self {
        RunMetadata {
            artifact_version: ARTIFACT_VERSION.to_string(),
            rng: sortnet_core::rng::RNG_NAME.to_string(),
            seed,
            stream,
            parameters: BTreeMap::new(),
            wall_time_ms: None,
        }
    }

    pub fn with_param(mut self, key: &str, value: impl ToString) -> Self {
        self.parameters.insert(key.to_string(), value.to_string());
        self
    }

    pub fn with_wall_time(mut self, ms: f64) -> Self {
        self.wall_time_ms = Some(ms);
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wall_time_is_omitted_when_absent() {
        let meta = RunMetadata::new(7, 0).with_param("n", 5);
        let js = serde_json::to_string(&meta).unwrap();
        assert!(!js.contains("wall_time"));
        let timed = meta.clone().with_wall_time(12.5);
        assert!(serde_json::to_string(&timed).unwrap().contains("wall_time_ms"));
        // identical parameters serialize identically
        let again = RunMetadata::new(7, 0).with_param("n", 5);
        assert_eq!(js, serde_json::to_string(&again).unwrap());
    }
}
