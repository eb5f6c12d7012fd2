//! Append-only JSON-lines counterexample store.

use std::fs::{File, OpenOptions};
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use super::claims::ClaimId;

/// One line of the store.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CounterexampleRecord {
    pub claim_id: ClaimId,
    pub n: usize,
    /// Edge-list text, parseable by [`crate::format::parse_instance`].
    pub instance: String,
    pub details: Value,
    pub tool_version: String,
    pub rng_seed: Option<u64>,
}

#[derive(Debug, Error)]
pub enum StoreError {
    #[error("store {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
    #[error("store {} line {line}: {source}", path.display())]
    Json {
        path: PathBuf,
        line: usize,
        #[source]
        source: serde_json::Error,
    },
}

/// Single writer; opening never truncates.
pub struct CounterexampleStore {
    path: PathBuf,
    out: BufWriter<File>,
    written: usize,
}

impl CounterexampleStore {
    pub fn open(path: impl AsRef<Path>) -> Result<Self, StoreError> {
        let path = path.as_ref().to_path_buf();
        let file = OpenOptions::new()
            .create(true)
            .append(true)
            .open(&path)
            .map_err(|source| StoreError::Io {
                path: path.clone(),
                source,
            })?;
        Ok(Self {
            path,
            out: BufWriter::new(file),
            written: 0,
        })
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    /// Records appended through this handle.
    pub fn written(&self) -> usize {
        self.written
    }

    pub fn append(&mut self, record: &CounterexampleRecord) -> Result<(), StoreError> {
        let io_err = |source| StoreError::Io {
            path: self.path.clone(),
            source,
        };
        serde_json::to_writer(&mut self.out, record).map_err(|e| io_err(e.into()))?;
        self.out.write_all(b"\n").map_err(io_err)?;
        self.written += 1;
        Ok(())
    }

    pub fn flush(&mut self) -> Result<(), StoreError> {
        self.out.flush().map_err(|source| StoreError::Io {
            path: self.path.clone(),
            source,
        })
    }
}

impl Drop for CounterexampleStore {
    fn drop(&mut self) {
        let _ = self.out.flush();
    }
}

/// Reads every record; blank lines are skipped.
pub fn load(path: impl AsRef<Path>) -> Result<Vec<CounterexampleRecord>, StoreError> {
    let path = path.as_ref();
    let io_err = |source| StoreError::Io {
        path: path.to_path_buf(),
        source,
    };
    let reader = BufReader::new(File::open(path).map_err(io_err)?);
    let mut records = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line.map_err(io_err)?;
        if line.trim().is_empty() {
            continue;
        }
        let record = serde_json::from_str(&line).map_err(|source| StoreError::Json {
            path: path.to_path_buf(),
            line: i + 1,
            source,
        })?;
        records.push(record);
    }
    Ok(records)
}
