//! JSON-lines census checkpoint: one record per completed Frobenius value,
//! written in ascending order so that two runs produce identical files.
//! Resuming skips every Frobenius value already present.

use std::collections::BTreeMap;
use std::fs::{File, OpenOptions};
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use cyclosemi_core::enumeration::{CensusRecord, FrobeniusSlice};
use cyclosemi_core::structure::Classification;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckpointLine {
    #[serde(rename = "F")]
    pub frobenius: u64,
    pub symmetric: u64,
    pub cyclotomic: u64,
    pub records: Vec<RecordJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RecordJson {
    pub min_gens: Vec<u64>,
    pub frobenius: u64,
    pub genus: u64,
    pub length: u64,
    pub ci: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classification: Option<String>,
}

impl RecordJson {
    pub fn from_record(r: &CensusRecord) -> Self {
        RecordJson {
            min_gens: r.min_gens.clone(),
            frobenius: r.frobenius,
            genus: r.genus,
            length: r.length,
            ci: r.complete_intersection,
            classification: r.classification.map(|c| c.to_string()),
        }
    }

    pub fn into_record(self) -> io::Result<CensusRecord> {
        let classification = match self.classification {
            None => None,
            Some(text) => Some(text.parse::<Classification>().map_err(|e| {
                io::Error::new(io::ErrorKind::InvalidData, format!("bad checkpoint tag: {e}"))
            })?),
        };
        Ok(CensusRecord {
            min_gens: self.min_gens,
            frobenius: self.frobenius,
            genus: self.genus,
            length: self.length,
            complete_intersection: self.ci,
            classification,
        })
    }
}

impl CheckpointLine {
    pub fn from_slice(slice: &FrobeniusSlice) -> Self {
        CheckpointLine {
            frobenius: slice.frobenius,
            symmetric: slice.symmetric_count,
            cyclotomic: slice.records.len() as u64,
            records: slice.records.iter().map(RecordJson::from_record).collect(),
        }
    }

    pub fn into_slice(self) -> io::Result<FrobeniusSlice> {
        let mut records = Vec::with_capacity(self.records.len());
        for r in self.records {
            records.push(r.into_record()?);
        }
        Ok(FrobeniusSlice {
            frobenius: self.frobenius,
            symmetric_count: self.symmetric,
            records,
            counterexamples: BTreeMap::new(),
        })
    }
}

/// Parses a checkpoint file back into census slices; a missing file means
/// nothing was completed yet.
pub fn read_checkpoint(path: &Path) -> io::Result<Vec<FrobeniusSlice>> {
    let file = match File::open(path) {
        Ok(f) => f,
        Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(Vec::new()),
        Err(e) => return Err(e),
    };
    let mut slices = Vec::new();
    for line in BufReader::new(file).lines() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let parsed: CheckpointLine = serde_json::from_str(&line)
            .map_err(|e| io::Error::new(io::ErrorKind::InvalidData, e))?;
        slices.push(parsed.into_slice()?);
    }
    Ok(slices)
}

/// Streams completed slices to disk in ascending Frobenius order, buffering
/// slices that finish out of order. Each line is flushed as soon as it is
/// written, so an interrupted run loses at most the still-buffered slices.
pub struct CheckpointWriter {
    out: BufWriter<File>,
    pending: Vec<u64>,
    buffered: BTreeMap<u64, CheckpointLine>,
}

impl CheckpointWriter {
    /// `pending` is the ascending list of Frobenius values this run will
    /// produce; values already checkpointed are appended to, not rewritten.
    pub fn create(path: &Path, append: bool, mut pending: Vec<u64>) -> io::Result<Self> {
        pending.sort_unstable();
        pending.reverse(); // pop() yields the next expected value
        let file = OpenOptions::new()
            .create(true)
            .append(append)
            .write(true)
            .truncate(!append)
            .open(path)?;
        Ok(CheckpointWriter { out: BufWriter::new(file), pending, buffered: BTreeMap::new() })
    }

    pub fn submit(&mut self, slice: &FrobeniusSlice) -> io::Result<()> {
        self.buffered.insert(slice.frobenius, CheckpointLine::from_slice(slice));
        while let Some(&next) = self.pending.last() {
            let Some(line) = self.buffered.remove(&next) else { break };
            self.pending.pop();
            serde_json::to_writer(&mut self.out, &line)?;
            self.out.write_all(b"\n")?;
            self.out.flush()?;
        }
        Ok(())
    }
}
