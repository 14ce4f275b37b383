//! Content-addressed on-disk cache for computed results.
//!
//! An entry is a file `<key>.qc` holding a header line
//! `QCHAR-CACHE <version>`, one line of JSON metadata and the payload.
//! Entries are written to a temporary file and renamed into place, so
//! readers never see a partial entry. Anything that fails validation is
//! treated as a miss.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicU64, Ordering};

use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::cartan::CartanDatum;
use crate::error::Result;
use crate::io::parse::parse_poly;
use crate::io::serialize::poly_text;
use crate::qchar::{fm_expand, QCharacter, DEFAULT_STEP_CAP};
use crate::rings::YMonomial;
use crate::ENGINE_VERSION;

pub const CACHE_ENV: &str = "QCHAR_CACHE_DIR";
const MAGIC: &str = "QCHAR-CACHE";

static TMP_COUNTER: AtomicU64 = AtomicU64::new(0);

fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// Key of a request: hash of engine version, datum and request text.
pub fn cache_key(version: &str, datum: &CartanDatum, request: &str) -> String {
    let mut h = Sha256::new();
    for part in [version, &datum.type_label.to_string(), request] {
        h.update((part.len() as u64).to_le_bytes());
        h.update(part.as_bytes());
    }
    hex::encode(h.finalize())
}

#[derive(Debug, Clone)]
pub struct Cache {
    dir: PathBuf,
    version: String,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Self::with_version(dir, ENGINE_VERSION)
    }

    pub fn with_version(dir: impl Into<PathBuf>, version: &str) -> Self {
        Cache {
            dir: dir.into(),
            version: version.to_string(),
        }
    }

    /// Cache rooted at `$QCHAR_CACHE_DIR`, if set.
    pub fn from_env() -> Option<Self> {
        std::env::var_os(CACHE_ENV)
            .filter(|v| !v.is_empty())
            .map(Cache::new)
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn key(&self, datum: &CartanDatum, request: &str) -> String {
        cache_key(&self.version, datum, request)
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.qc"))
    }

    /// Payload stored under `key`; corrupt or stale entries are misses.
    pub fn get(&self, key: &str) -> Option<String> {
        let path = self.path(key);
        let raw = fs::read_to_string(&path).ok()?;
        match self.decode(key, &raw) {
            Ok(payload) => Some(payload),
            Err(why) => {
                log::warn!("ignoring cache entry {}: {why}", path.display());
                None
            }
        }
    }

    fn decode(&self, key: &str, raw: &str) -> std::result::Result<String, String> {
        let mut parts = raw.splitn(3, '\n');
        let header = parts.next().unwrap_or_default();
        let meta = parts.next().ok_or("missing metadata line")?;
        let payload = parts.next().ok_or("missing payload")?;
        let version = header
            .strip_prefix(MAGIC)
            .and_then(|v| v.strip_prefix(' '))
            .ok_or("bad header")?;
        if version != self.version {
            return Err(format!(
                "engine version {version} differs from {}",
                self.version
            ));
        }
        let meta: Value = serde_json::from_str(meta).map_err(|e| format!("bad metadata: {e}"))?;
        if meta["key"] != key {
            return Err("key mismatch".into());
        }
        if meta["payload_sha256"] != sha256_hex(payload.as_bytes()) {
            return Err("payload checksum mismatch".into());
        }
        Ok(payload.to_string())
    }

    /// Stores `payload` under `key`. A valid existing entry is left alone.
    pub fn put(&self, key: &str, payload: &str, meta: Value) -> Result<()> {
        if self.get(key).is_some() {
            return Ok(());
        }
        fs::create_dir_all(&self.dir)?;
        let mut meta = match meta {
            Value::Object(m) => m,
            Value::Null => Default::default(),
            other => [("info".to_string(), other)].into_iter().collect(),
        };
        let now = std::time::SystemTime::now()
            .duration_since(std::time::UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0);
        meta.entry("created_unix").or_insert(json!(now));
        meta.insert("key".into(), json!(key));
        meta.insert(
            "payload_sha256".into(),
            json!(sha256_hex(payload.as_bytes())),
        );
        let body = format!(
            "{MAGIC} {}\n{}\n{payload}",
            self.version,
            Value::Object(meta)
        );
        let tmp = self.dir.join(format!(
            ".{key}.{}.{}.tmp",
            std::process::id(),
            TMP_COUNTER.fetch_add(1, Ordering::Relaxed)
        ));
        let mut f = fs::File::create(&tmp)?;
        f.write_all(body.as_bytes())?;
        f.sync_all()?;
        drop(f);
        fs::rename(&tmp, self.path(key)).inspect_err(|_| {
            let _ = fs::remove_file(&tmp);
        })?;
        Ok(())
    }

    /// Returns the cached payload or computes, stores and returns it.
    pub fn get_or_compute(
        &self,
        key: &str,
        meta: Value,
        compute: impl FnOnce() -> Result<String>,
    ) -> Result<String> {
        if let Some(p) = self.get(key) {
            log::debug!("cache hit {key}");
            return Ok(p);
        }
        let payload = compute()?;
        self.put(key, &payload, meta)?;
        Ok(payload)
    }

    /// Keys of all entries currently on disk.
    pub fn entries(&self) -> Result<Vec<String>> {
        let mut out = Vec::new();
        match fs::read_dir(&self.dir) {
            Ok(rd) => {
                for e in rd {
                    let name = e?.file_name().to_string_lossy().into_owned();
                    if let Some(k) = name.strip_suffix(".qc") {
                        out.push(k.to_string());
                    }
                }
            }
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => {}
            Err(e) => return Err(e.into()),
        }
        out.sort();
        Ok(out)
    }

    /// Removes every entry; returns how many were deleted.
    pub fn clear(&self) -> Result<usize> {
        let keys = self.entries()?;
        for k in &keys {
            fs::remove_file(self.path(k))?;
        }
        Ok(keys.len())
    }
}

/// `fm_expand(head)` through an optional cache, so KR characters are shared
/// between sweeps for different `w`.
pub fn fm_expand_cached(
    cache: Option<&Cache>,
    datum: &CartanDatum,
    head: &YMonomial,
) -> Result<QCharacter> {
    let Some(cache) = cache else {
        return fm_expand(datum, head, DEFAULT_STEP_CAP);
    };
    let key = cache.key(datum, &format!("qchar fm head={head}"));
    if let Some(text) = cache.get(&key) {
        match parse_poly::<YMonomial>(&text, datum) {
            Ok(poly) => {
                return Ok(QCharacter {
                    poly,
                    head: head.clone(),
                })
            }
            Err(e) => log::warn!("unreadable cached q-character {key}: {e}"),
        }
    }
    let q = fm_expand(datum, head, DEFAULT_STEP_CAP)?;
    let text = poly_text(&q.poly, datum.rank());
    if let Err(e) = cache.put(
        &key,
        &text,
        json!({"kind": "qchar", "head": head.to_string()}),
    ) {
        log::warn!("could not write cache entry {key}: {e}");
    }
    Ok(q)
}
