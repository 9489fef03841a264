//! On-disk cache of diamond entries, one JSON file per `(type, rank, levi)`.
//!
//! Files are rewritten whole through a temporary file and an atomic rename, so
//! concurrent writers of the same record only ever leave a complete file.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Mutex;

use serde::{Deserialize, Serialize};

use crate::chevalley::{ChevalleyBasis, ParabolicSplit};
use crate::cohomology::{hodge_diamond_with, DiamondEntry, HodgeDiamond, DIAMOND_SCHEMA_VERSION};
use crate::error::{Error, Result};
use crate::rootsys::{CartanType, RootSystem};

pub const CACHE_ENV: &str = "QCENTER_CACHE";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheRecord {
    pub schema_version: u32,
    #[serde(rename = "type")]
    pub kind: CartanType,
    pub rank: usize,
    pub levi: Vec<usize>,
    pub dim_x: usize,
    pub entries: Vec<DiamondEntry>,
}

impl CacheRecord {
    pub fn is_complete(&self) -> bool {
        self.entries.len() == HodgeDiamond::positions(self.dim_x).len()
    }

    pub fn to_diamond(&self) -> Result<HodgeDiamond> {
        HodgeDiamond::from_entries(self.kind, self.rank, &self.levi, self.dim_x, self.entries.clone())
    }
}

#[derive(Clone, Debug)]
pub struct DiamondCache {
    dir: PathBuf,
}

impl DiamondCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        DiamondCache { dir: dir.into() }
    }

    /// `$QCENTER_CACHE`, else `$XDG_CACHE_HOME/qcenter`, else `~/.cache/qcenter`.
    pub fn default_dir() -> PathBuf {
        if let Some(d) = std::env::var_os(CACHE_ENV) {
            return d.into();
        }
        if let Some(d) = std::env::var_os("XDG_CACHE_HOME") {
            return Path::new(&d).join("qcenter");
        }
        match std::env::var_os("HOME") {
            Some(h) => Path::new(&h).join(".cache").join("qcenter"),
            None => PathBuf::from(".qcenter-cache"),
        }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path(&self, kind: CartanType, rank: usize, levi: &[usize]) -> PathBuf {
        let levi: Vec<String> = normalize(levi).iter().map(|x| x.to_string()).collect();
        let levi = if levi.is_empty() {
            "borel".to_string()
        } else {
            levi.join("-")
        };
        self.dir.join(format!("{}{}_{}.json", kind.letter(), rank, levi))
    }

    /// `Ok(None)` if absent; corrupt or mismatched files are errors.
    pub fn load(&self, kind: CartanType, rank: usize, levi: &[usize]) -> Result<Option<CacheRecord>> {
        let path = self.path(kind, rank, levi);
        let text = match std::fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(Error::Cache(format!("{}: {e}", path.display()))),
        };
        let rec: CacheRecord =
            serde_json::from_str(&text).map_err(|e| Error::Cache(format!("{}: {e}", path.display())))?;
        if rec.schema_version != DIAMOND_SCHEMA_VERSION
            || rec.kind != kind
            || rec.rank != rank
            || rec.levi != normalize(levi)
        {
            return Err(Error::Cache(format!(
                "{}: record does not match its key",
                path.display()
            )));
        }
        let positions = HodgeDiamond::positions(rec.dim_x);
        if rec.entries.iter().any(|e| !positions.contains(&(e.i, e.j))) {
            return Err(Error::Cache(format!(
                "{}: entry outside the diamond",
                path.display()
            )));
        }
        Ok(Some(rec))
    }

    pub fn store(&self, rec: &CacheRecord) -> Result<()> {
        std::fs::create_dir_all(&self.dir)
            .map_err(|e| Error::Cache(format!("{}: {e}", self.dir.display())))?;
        let path = self.path(rec.kind, rec.rank, &rec.levi);
        let mut rec = rec.clone();
        rec.entries.sort_by_key(|e| (e.i + e.j, e.j));
        let text = serde_json::to_string_pretty(&rec)?;
        let io = |e: std::io::Error| Error::Cache(format!("{}: {e}", path.display()));
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir).map_err(io)?;
        tmp.write_all(text.as_bytes()).map_err(io)?;
        tmp.persist(&path).map_err(|e| io(e.error))?;
        Ok(())
    }
}

impl DiamondCache {
    /// Diamond through the cache: complete records are returned as is, partial
    /// ones are resumed, and every new entry is written back as it finishes.
    /// Unreadable records are recomputed and reported in `warnings`.
    pub fn diamond(
        &self,
        rs: &RootSystem,
        basis: &ChevalleyBasis,
        levi: &[usize],
        warnings: &mut Vec<String>,
    ) -> Result<HodgeDiamond> {
        let levi = normalize(levi);
        let dim_x = ParabolicSplit::new(basis, &levi)?.dim_x();
        let (kind, rank) = (rs.kind(), rs.rank());
        let known = match self.load(kind, rank, &levi) {
            Ok(Some(rec)) if rec.dim_x == dim_x => rec.entries,
            Ok(Some(_)) => {
                warnings.push(format!(
                    "{}: wrong dimension, recomputing",
                    self.path(kind, rank, &levi).display()
                ));
                Vec::new()
            }
            Ok(None) => Vec::new(),
            Err(e) => {
                warnings.push(format!("{e}; recomputing"));
                Vec::new()
            }
        };
        let record = Mutex::new(CacheRecord {
            schema_version: DIAMOND_SCHEMA_VERSION,
            kind,
            rank,
            levi: levi.clone(),
            dim_x,
            entries: known.clone(),
        });
        if record.lock().unwrap().is_complete() {
            return record.into_inner().unwrap().to_diamond();
        }
        let failure: Mutex<Option<Error>> = Mutex::new(None);
        let d = hodge_diamond_with(rs, basis, &levi, &known, |e| {
            let mut rec = record.lock().unwrap();
            rec.entries.push(e.clone());
            if let Err(err) = self.store(&rec) {
                failure.lock().unwrap().get_or_insert(err);
            }
        })?;
        if let Some(err) = failure.into_inner().unwrap() {
            return Err(err);
        }
        self.store(&CacheRecord {
            schema_version: DIAMOND_SCHEMA_VERSION,
            kind,
            rank,
            levi,
            dim_x,
            entries: d.entries.clone(),
        })?;
        Ok(d)
    }
}

pub fn normalize(levi: &[usize]) -> Vec<usize> {
    let mut v = levi.to_vec();
    v.sort_unstable();
    v.dedup();
    v
}
