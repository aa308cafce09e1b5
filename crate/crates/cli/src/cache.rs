//! Content-addressed result cache: one JSON file per key, named by the
//! SHA-256 of the key, written through a temporary file and a rename.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::CliError;

#[derive(Debug, Clone)]
pub struct Cache {
    dir: PathBuf,
    /// Recompute even on a hit, and compare with the stored entry.
    verify_only: bool,
}

/// Where a returned value came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Source {
    Hit,
    Computed,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>, verify_only: bool) -> Self {
        Cache {
            dir: dir.into(),
            verify_only,
        }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path_for(&self, key: &str) -> PathBuf {
        let digest = Sha256::digest(key.as_bytes());
        let hex: String = digest.iter().map(|b| format!("{b:02x}")).collect();
        self.dir.join(format!("{hex}.json"))
    }

    fn encode(key: &str, value: &Value) -> String {
        let mut s = serde_json::to_string_pretty(&json!({ "key": key, "value": value }))
            .expect("JSON values serialize");
        s.push('\n');
        s
    }

    /// Reads a stored value; `Err` carries the reason a present file was rejected.
    fn read(&self, path: &Path, key: &str) -> Option<Result<(String, Value), String>> {
        let text = match fs::read_to_string(path) {
            Ok(t) => t,
            Err(e) if e.kind() == io::ErrorKind::NotFound => return None,
            Err(e) => return Some(Err(e.to_string())),
        };
        let parsed: Value = match serde_json::from_str(&text) {
            Ok(v) => v,
            Err(e) => return Some(Err(e.to_string())),
        };
        match (
            parsed.get("key").and_then(Value::as_str),
            parsed.get("value"),
        ) {
            (Some(k), Some(v)) if k == key => Some(Ok((text.clone(), v.clone()))),
            (Some(_), Some(_)) => Some(Err("entry belongs to a different key".into())),
            _ => Some(Err("entry lacks \"key\" or \"value\"".into())),
        }
    }

    fn write(&self, path: &Path, contents: &str) -> Result<(), CliError> {
        fs::create_dir_all(&self.dir)?;
        let name = path.file_name().and_then(|n| n.to_str()).unwrap_or("entry");
        let tmp = self.dir.join(format!(".{name}.{}.tmp", std::process::id()));
        fs::write(&tmp, contents)?;
        fs::rename(&tmp, path)?;
        Ok(())
    }

    /// Returns the cached value for `key`, computing and storing it on a miss
    /// or a corrupt entry. In verify-only mode the value is always
    /// recomputed and must match any valid stored entry byte for byte.
    pub fn get_or_compute(
        &self,
        key: &str,
        warn: &mut dyn Write,
        compute: impl FnOnce() -> Result<Value, CliError>,
    ) -> Result<(Value, Source), CliError> {
        let path = self.path_for(key);
        let stored = match self.read(&path, key) {
            Some(Err(reason)) => {
                let _ = writeln!(
                    warn,
                    "warning: ignoring corrupt cache entry {}: {reason}",
                    path.display()
                );
                None
            }
            Some(Ok(entry)) => Some(entry),
            None => None,
        };
        if let (Some((_, value)), false) = (&stored, self.verify_only) {
            return Ok((value.clone(), Source::Hit));
        }
        let value = compute()?;
        let encoded = Self::encode(key, &value);
        match stored {
            Some((text, _)) if text != encoded => return Err(CliError::CacheMismatch(path)),
            Some(_) => {}
            None => self.write(&path, &encoded)?,
        }
        Ok((value, Source::Computed))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn miss_then_hit_then_verify() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::new(dir.path(), false);
        let mut warn = Vec::new();
        let (v, s) = cache
            .get_or_compute("k", &mut warn, || Ok(json!([1, 2])))
            .unwrap();
        assert_eq!((v, s), (json!([1, 2]), Source::Computed));
        let (v, s) = cache
            .get_or_compute("k", &mut warn, || panic!("should hit"))
            .unwrap();
        assert_eq!((v, s), (json!([1, 2]), Source::Hit));
        let verify = Cache::new(dir.path(), true);
        assert!(verify
            .get_or_compute("k", &mut warn, || Ok(json!([1, 2])))
            .is_ok());
        assert!(matches!(
            verify.get_or_compute("k", &mut warn, || Ok(json!([3]))),
            Err(CliError::CacheMismatch(_))
        ));
        assert!(warn.is_empty());
    }

    #[test]
    fn corrupt_entry_is_replaced() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::new(dir.path(), false);
        fs::write(cache.path_for("k"), "{not json").unwrap();
        let mut warn = Vec::new();
        let (_, s) = cache
            .get_or_compute("k", &mut warn, || Ok(json!(7)))
            .unwrap();
        assert_eq!(s, Source::Computed);
        assert!(String::from_utf8(warn)
            .unwrap()
            .contains("corrupt cache entry"));
        let (v, s) = cache
            .get_or_compute("k", &mut Vec::new(), || panic!("should hit"))
            .unwrap();
        assert_eq!((v, s), (json!(7), Source::Hit));
    }

    #[test]
    fn distinct_keys_use_distinct_files() {
        let cache = Cache::new("/tmp/unused", false);
        assert_ne!(cache.path_for("a"), cache.path_for("b"));
        assert!(cache.path_for("a").to_str().unwrap().ends_with(".json"));
    }
}
