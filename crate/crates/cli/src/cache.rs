//! On-disk report cache keyed by the equivalence class of the input.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};
use tempfile::NamedTempFile;

/// Everything a cached report depends on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CacheKey {
    pub tag: String,
    /// Canonical vertex cycle, or the raw one when `f` pins coordinates.
    pub vertices: String,
    pub primes: Vec<u64>,
    pub version: &'static str,
    /// Remaining parameters that change the payload (seed, trials, f, ...).
    pub extra: String,
}

impl CacheKey {
    pub fn digest(&self) -> String {
        let mut h = Sha256::new();
        for part in [
            self.version,
            &self.tag,
            &self.vertices,
            &format!("{:?}", self.primes),
            &self.extra,
        ] {
            h.update((part.len() as u64).to_le_bytes());
            h.update(part.as_bytes());
        }
        h.finalize().iter().map(|b| format!("{b:02x}")).collect()
    }
}

#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path(&self, key: &CacheKey) -> PathBuf {
        self.dir.join(format!("{}.json", key.digest()))
    }

    pub fn load(&self, key: &CacheKey) -> Option<String> {
        fs::read_to_string(self.path(key)).ok()
    }

    /// Writes to a temporary file in the cache directory, then renames.
    pub fn store(&self, key: &CacheKey, payload: &str) -> io::Result<()> {
        fs::create_dir_all(&self.dir)?;
        let mut tmp = NamedTempFile::new_in(&self.dir)?;
        tmp.write_all(payload.as_bytes())?;
        tmp.flush()?;
        tmp.persist(self.path(key)).map_err(|e| e.error)?;
        Ok(())
    }
}
