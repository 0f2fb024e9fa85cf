//! Append-only JSON-lines result cache.

use std::fs::OpenOptions;
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CacheRecord {
    pub command: String,
    /// SHA-256 of the canonical parameter JSON, hex encoded.
    pub digest: String,
    pub params: Value,
    pub exit_code: i32,
    pub result: Value,
    pub witnesses: Vec<String>,
    /// Seconds since the Unix epoch.
    pub timestamp: u64,
}

/// serde_json objects keep keys sorted, so the serialisation is canonical.
pub fn digest(command: &str, params: &Value) -> String {
    let canonical = serde_json::to_string(&serde_json::json!({ "command": command, "params": params }))
        .expect("JSON values serialise");
    Sha256::digest(canonical.as_bytes())
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

/// Every graph6 string found under a `witnesses` or `counterexample` key.
pub fn collect_witnesses(v: &Value, out: &mut Vec<String>) {
    match v {
        Value::Object(map) => {
            for (k, child) in map {
                match (k.as_str(), child) {
                    ("witnesses", Value::Array(items)) => {
                        out.extend(items.iter().filter_map(|w| w.as_str().map(String::from)))
                    }
                    ("counterexample", Value::String(s)) => out.push(s.clone()),
                    _ => collect_witnesses(child, out),
                }
            }
        }
        Value::Array(items) => items.iter().for_each(|i| collect_witnesses(i, out)),
        _ => {}
    }
}

pub struct Cache {
    path: PathBuf,
}

impl Cache {
    pub fn new(path: impl Into<PathBuf>) -> Self {
        Cache { path: path.into() }
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    /// First record with the given digest. Unreadable lines are skipped.
    pub fn lookup(&self, digest: &str) -> std::io::Result<Option<CacheRecord>> {
        let file = match std::fs::File::open(&self.path) {
            Ok(f) => f,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(e),
        };
        for line in BufReader::new(file).lines() {
            let line = line?;
            let Ok(record) = serde_json::from_str::<CacheRecord>(&line) else {
                continue;
            };
            if record.digest == digest {
                return Ok(Some(record));
            }
        }
        Ok(None)
    }

    pub fn append(&self, command: &str, params: Value, exit_code: i32, result: Value) -> std::io::Result<CacheRecord> {
        let mut witnesses = Vec::new();
        collect_witnesses(&result, &mut witnesses);
        let record = CacheRecord {
            command: command.to_string(),
            digest: digest(command, &params),
            params,
            exit_code,
            result,
            witnesses,
            timestamp: SystemTime::now()
                .duration_since(UNIX_EPOCH)
                .map_or(0, |d| d.as_secs()),
        };
        let mut line = serde_json::to_string(&record).expect("JSON values serialise");
        line.push('\n');
        // one write call per record keeps concurrent appends line-atomic
        let mut file = OpenOptions::new().create(true).append(true).open(&self.path)?;
        file.write_all(line.as_bytes())?;
        Ok(record)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn digest_ignores_key_order() {
        let a: Value = serde_json::from_str(r#"{"n": 5, "h": "edges"}"#).unwrap();
        let b: Value = serde_json::from_str(r#"{"h": "edges", "n": 5}"#).unwrap();
        assert_eq!(digest("extremal", &a), digest("extremal", &b));
        assert_ne!(digest("extremal", &a), digest("count", &a));
        assert_eq!(digest("x", &a).len(), 64);
    }

    #[test]
    fn append_then_lookup() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::new(dir.path().join("c.jsonl"));
        let params = json!({"n": 5});
        assert!(cache.lookup(&digest("extremal", &params)).unwrap().is_none());
        let rec = cache
            .append("extremal", params.clone(), 0, json!({"value": 6, "witnesses": ["DFw"]}))
            .unwrap();
        assert_eq!(rec.witnesses, vec!["DFw".to_string()]);
        let hit = cache.lookup(&digest("extremal", &params)).unwrap().unwrap();
        assert_eq!(hit.result, json!({"value": 6, "witnesses": ["DFw"]}));
        std::fs::write(cache.path(), format!("garbage\n{}", std::fs::read_to_string(cache.path()).unwrap())).unwrap();
        assert!(cache.lookup(&rec.digest).unwrap().is_some());
    }
}
