//! Content-addressed on-disk cache of [`ReportRecord`]s.
//!
//! Each record lives in `<dir>/<key>.json` as an envelope holding the record
//! text and its SHA-256. Writes go to a temporary file in the same directory
//! and are renamed into place, so readers never see a partial record.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::report::{analyze, cache_key, ReportRecord};

/// Environment variable naming the cache directory.
pub const CACHE_ENV: &str = "PLATLINK_CACHE_DIR";

#[derive(Serialize, Deserialize)]
struct Envelope {
    checksum: String,
    payload: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CacheStatus {
    Hit,
    Miss,
    /// A corrupt record was found, recomputed and overwritten.
    Repaired,
}

#[derive(Debug, Clone)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Result<Self> {
        let dir = dir.into();
        fs::create_dir_all(&dir)?;
        Ok(Cache { dir })
    }

    /// The explicit directory if given, else the environment variable, else none.
    pub fn configured(explicit: Option<&Path>) -> Result<Option<Self>> {
        match explicit {
            Some(p) => Cache::new(p).map(Some),
            None => match std::env::var_os(CACHE_ENV) {
                Some(p) if !p.is_empty() => Cache::new(PathBuf::from(p)).map(Some),
                _ => Ok(None),
            },
        }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.json"))
    }

    pub fn get(&self, key: &str) -> Result<Option<ReportRecord>> {
        let text = match fs::read_to_string(self.path(key)) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(e.into()),
        };
        let corrupt = || Error::CorruptCache { key: key.to_string() };
        let env: Envelope = serde_json::from_str(&text).map_err(|_| corrupt())?;
        if hex::encode(Sha256::digest(env.payload.as_bytes())) != env.checksum {
            return Err(corrupt());
        }
        let record: ReportRecord = serde_json::from_str(&env.payload).map_err(|_| corrupt())?;
        if record.key != key {
            return Err(corrupt());
        }
        Ok(Some(record))
    }

    pub fn put(&self, record: &ReportRecord) -> Result<()> {
        let payload = serde_json::to_string(record).map_err(|e| Error::Io(e.to_string()))?;
        let env = Envelope { checksum: hex::encode(Sha256::digest(payload.as_bytes())), payload };
        let text = serde_json::to_string(&env).map_err(|e| Error::Io(e.to_string()))?;
        let tmp = self.dir.join(format!(".{}.{}.{:?}.tmp", record.key, std::process::id(), std::thread::current().id()));
        {
            let mut f = fs::File::create(&tmp)?;
            f.write_all(text.as_bytes())?;
            f.sync_all()?;
        }
        fs::rename(&tmp, self.path(&record.key))?;
        Ok(())
    }

    /// Cached record for `w`, computing and storing it on a miss or after
    /// finding a corrupt entry.
    pub fn get_or_compute(&self, w: &BraidWord) -> Result<(ReportRecord, CacheStatus)> {
        let key = cache_key(w);
        let status = match self.get(&key) {
            Ok(Some(r)) => return Ok((r, CacheStatus::Hit)),
            Ok(None) => CacheStatus::Miss,
            Err(Error::CorruptCache { .. }) => CacheStatus::Repaired,
            Err(e) => return Err(e),
        };
        let record = analyze(w)?;
        self.put(&record)?;
        Ok((record, status))
    }
}
