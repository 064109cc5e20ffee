use std::io::{BufRead, Write};

use serde::{Deserialize, Serialize};

use super::engine::{Engine, Family, HurwitzKey, RecursionForm};
use crate::arith::{format_rational, serde_rational, Rational};
use crate::error::{Error, Result};

/// One line of the JSON-lines cache file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheRecord {
    pub variant: Family,
    pub a: usize,
    pub g: usize,
    pub mu: Vec<usize>,
    #[serde(with = "serde_rational")]
    pub value: Rational,
}

impl CacheRecord {
    pub fn key(&self) -> Result<HurwitzKey> {
        if self.a == 0 || self.mu.is_empty() || self.mu.contains(&0) {
            return Err(Error::Parse(format!("invalid cache key a={} mu={:?}", self.a, self.mu)));
        }
        let key = HurwitzKey::new(self.a, self.g, &self.mu);
        if key.family != self.variant {
            return Err(Error::Parse(format!("variant {:?} does not match a={}", self.variant, self.a)));
        }
        Ok(key)
    }
}

/// Writes every memoised pruned value, one record per line, in key order.
pub fn export_cache<W: Write>(engine: &Engine, mut out: W) -> Result<usize> {
    let entries = engine.entries();
    for (key, value) in &entries {
        let record = CacheRecord { variant: key.family, a: key.a, g: key.g, mu: key.mu.clone(), value: value.clone() };
        let line = serde_json::to_string(&record).map_err(|e| Error::Parse(e.to_string()))?;
        writeln!(out, "{line}").map_err(|e| Error::Parse(format!("cache write failed: {e}")))?;
    }
    Ok(entries.len())
}

/// Reads a cache file into `engine`. With `verify`, every record is first
/// recomputed on a fresh engine and a mismatch aborts the load.
pub fn import_cache<R: BufRead>(engine: &Engine, input: R, verify: bool) -> Result<usize> {
    let reference = verify.then(|| Engine::new(RecursionForm::Corrected));
    let mut records = Vec::new();
    for (lineno, line) in input.lines().enumerate() {
        let line = line.map_err(|e| Error::Parse(format!("cache read failed: {e}")))?;
        if line.trim().is_empty() {
            continue;
        }
        let record: CacheRecord =
            serde_json::from_str(&line).map_err(|e| Error::Parse(format!("cache line {}: {e}", lineno + 1)))?;
        let key = record.key()?;
        if let Some(reference) = &reference {
            let expected = reference.pruned(key.a, key.g, &key.mu);
            if expected != record.value {
                return Err(Error::Inconsistent(format!(
                    "cache line {}: stored {} but recomputed {} for a={} g={} mu={:?}",
                    lineno + 1,
                    format_rational(&record.value),
                    format_rational(&expected),
                    key.a,
                    key.g,
                    key.mu
                )));
            }
        }
        records.push((key, record.value));
    }
    let count = records.len();
    for (key, value) in records {
        engine.insert(key, value);
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn round_trip() {
        let engine = Engine::default();
        engine.pruned(1, 1, &[2, 1]);
        engine.pruned(2, 0, &[2, 1, 1]);
        let mut buf = Vec::new();
        let written = export_cache(&engine, &mut buf).unwrap();
        let fresh = Engine::default();
        assert_eq!(import_cache(&fresh, buf.as_slice(), true).unwrap(), written);
        assert_eq!(fresh.entries(), engine.entries());
    }

    #[test]
    fn record_format() {
        let line = r#"{"variant":"pruned-simple","a":1,"g":0,"mu":[1,1,2],"value":"2"}"#;
        let record: CacheRecord = serde_json::from_str(line).unwrap();
        assert_eq!(record.value, rat(2, 1));
        assert_eq!(serde_json::to_string(&record).unwrap(), line);
    }

    #[test]
    fn tampered_value_is_caught() {
        let line = r#"{"variant":"pruned-simple","a":1,"g":0,"mu":[1,1,2],"value":"21/10"}"#;
        let engine = Engine::default();
        assert!(matches!(import_cache(&engine, line.as_bytes(), true), Err(Error::Inconsistent(_))));
        assert_eq!(import_cache(&engine, line.as_bytes(), false).unwrap(), 1);
    }

    #[test]
    fn variant_must_match() {
        let line = r#"{"variant":"pruned-orbifold","a":1,"g":0,"mu":[1,1,1],"value":"1"}"#;
        assert!(import_cache(&Engine::default(), line.as_bytes(), false).is_err());
    }
}
