//! Line-delimited JSON result cache.
//!
//! Each line is one [`CacheRecord`]. Records are re-checked on load: bounds must
//! be ordered, exact records must have equal bounds, and the witness must have
//! `s_lower` members and pass the t-free test. Anything else is dropped.

use std::collections::BTreeMap;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use freeset::zn::{is_t_free, CyclicContext, ResidueSet};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CacheRecord {
    pub n: u64,
    pub t: u32,
    pub s_lower: u64,
    pub s_upper: u64,
    pub exact: bool,
    pub witness: Vec<u64>,
    pub method: String,
    pub elapsed_ms: u64,
}

impl CacheRecord {
    pub fn to_line(&self) -> String {
        serde_json::to_string(self).expect("record serializes")
    }

    /// Checks every invariant, including re-certifying the witness.
    pub fn verify(&self) -> bool {
        if self.s_lower > self.s_upper || (self.exact && self.s_lower != self.s_upper) {
            return false;
        }
        if self.n == 0 || self.t == 0 || self.witness.iter().any(|&a| a >= self.n) {
            return false;
        }
        let Ok(set) = ResidueSet::new(self.n, self.witness.iter().copied()) else {
            return false;
        };
        if set.len() != self.witness.len() || set.len() as u64 != self.s_lower {
            return false;
        }
        let Ok(ctx) = CyclicContext::new(self.n, self.t) else {
            return false;
        };
        is_t_free(&ctx, &set).is_ok_and(|c| c.is_t_free())
    }
}

#[derive(Debug, Default)]
pub struct Cache {
    path: Option<PathBuf>,
    records: BTreeMap<(u64, u32), CacheRecord>,
    /// Lines dropped on load because they failed to parse or verify.
    pub discarded: usize,
}

impl Cache {
    pub fn load(path: &Path) -> io::Result<Self> {
        let mut cache = Cache { path: Some(path.to_path_buf()), ..Default::default() };
        let text = match fs::read_to_string(path) {
            Ok(text) => text,
            Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(cache),
            Err(e) => return Err(e),
        };
        for line in text.lines().filter(|l| !l.trim().is_empty()) {
            match serde_json::from_str::<CacheRecord>(line) {
                Ok(rec) if rec.verify() => {
                    cache.records.insert((rec.n, rec.t), rec);
                }
                _ => cache.discarded += 1,
            }
        }
        Ok(cache)
    }

    pub fn get(&self, n: u64, t: u32) -> Option<&CacheRecord> {
        self.records.get(&(n, t))
    }

    pub fn insert(&mut self, rec: CacheRecord) {
        self.records.insert((rec.n, rec.t), rec);
    }

    pub fn records(&self) -> impl Iterator<Item = &CacheRecord> {
        self.records.values()
    }

    /// Rewrites the whole file, one record per line ordered by `(n, t)`.
    pub fn save(&self) -> io::Result<()> {
        let Some(path) = &self.path else { return Ok(()) };
        let tmp = path.with_extension("tmp");
        {
            let mut f = io::BufWriter::new(fs::File::create(&tmp)?);
            for rec in self.records.values() {
                writeln!(f, "{}", rec.to_line())?;
            }
            f.flush()?;
        }
        fs::rename(tmp, path)
    }
}
