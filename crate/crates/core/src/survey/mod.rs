//! Exhaustive sweeps over every HP string of a given length.
//!
//! Chain indices run over `0..2^n`; the bits of an index, most significant
//! first, are the labels with H = 0 and P = 1. The index space is cut into
//! contiguous blocks which are searched in parallel waves and appended to the
//! checkpoint in index order, so tallies do not depend on the worker count
//! and a sweep can resume from any checkpoint it wrote.

pub mod checkpoint;

use crate::chain::{Chain, Topology};
use crate::error::{Error, Result};
use crate::search::{enumerate_optimal, SearchOptions};
use crate::ENGINE_VERSION;
use checkpoint::{BlockRecord, Checkpoint};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::fs::OpenOptions;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

/// Longest chain a sweep accepts.
pub const MAX_SWEEP_LEN: usize = 30;
/// Longest chain for which per-chain CSV detail may be written.
pub const MAX_DETAIL_LEN: usize = 14;

#[derive(Debug, Clone)]
pub struct SurveyOptions {
    pub block_size: u32,
    /// Worker threads; zero uses the global rayon pool.
    pub workers: usize,
    pub checkpoint: Option<PathBuf>,
    /// CSV of `n,chain,optimum,class_count` rows.
    pub detail_csv: Option<PathBuf>,
    /// Stop after this many new blocks, leaving an incomplete record.
    pub max_blocks: Option<u64>,
    pub progress: bool,
    pub search: SearchOptions,
}

impl Default for SurveyOptions {
    fn default() -> Self {
        SurveyOptions {
            block_size: 256,
            workers: 0,
            checkpoint: None,
            detail_csv: None,
            max_blocks: None,
            progress: false,
            search: SearchOptions { store_limit: 1, ..SearchOptions::default() },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SurveyRecord {
    pub n: usize,
    pub topology: Topology,
    pub unique_count: u64,
    /// Chains tallied so far; `2^n` once complete.
    pub total_count: u64,
    pub percentage: f64,
    pub engine_version: String,
    pub elapsed_ms: f64,
    /// Next chain index to process.
    pub cursor: u64,
    pub complete: bool,
}

#[derive(Debug, Clone)]
struct ChainOutcome {
    optimum: usize,
    class_count: u64,
}

fn check_sweep_len(n: usize, topology: Topology) -> Result<()> {
    if n == 0 || n > MAX_SWEEP_LEN {
        return Err(Error::TooLong { len: n, limit: MAX_SWEEP_LEN });
    }
    if topology == Topology::Closed && (n < 4 || n % 2 == 1) {
        return Err(Error::BadClosedLength(n));
    }
    Ok(())
}

fn search_block(n: usize, topology: Topology, start: u64, len: u32, opts: &SearchOptions) -> Result<Vec<ChainOutcome>> {
    (start..start + len as u64)
        .map(|i| {
            let r = enumerate_optimal(&Chain::from_index(i, n, topology)?, opts)?;
            Ok(ChainOutcome { optimum: r.optimum, class_count: r.class_count })
        })
        .collect()
}

pub fn sweep(n: usize, topology: Topology, options: &SurveyOptions) -> Result<SurveyRecord> {
    check_sweep_len(n, topology)?;
    if options.detail_csv.is_some() && n > MAX_DETAIL_LEN {
        return Err(Error::TooLong { len: n, limit: MAX_DETAIL_LEN });
    }
    if options.block_size == 0 {
        return Err(Error::BadParameter { min: 1, got: 0 });
    }
    let pool = if options.workers > 0 {
        Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(options.workers)
                .build()
                .map_err(|e| Error::Io(e.to_string()))?,
        )
    } else {
        None
    };
    match &pool {
        Some(p) => p.install(|| sweep_in_pool(n, topology, options)),
        None => sweep_in_pool(n, topology, options),
    }
}

fn sweep_in_pool(n: usize, topology: Topology, options: &SurveyOptions) -> Result<SurveyRecord> {
    let start = Instant::now();
    let total = 1u64 << n;
    let mut cp = match &options.checkpoint {
        Some(path) => Checkpoint::load(path)?.unwrap_or_else(|| Checkpoint::new(n as u8, topology)),
        None => Checkpoint::new(n as u8, topology),
    };
    if cp.n as usize != n || cp.topology != topology {
        return Err(Error::Checkpoint(format!("checkpoint is for n={} {}, not n={n} {topology}", cp.n, cp.topology)));
    }
    let mut csv = match &options.detail_csv {
        Some(path) => {
            let fresh = cp.cursor() == 0;
            let mut f = OpenOptions::new().create(true).write(true).append(!fresh).truncate(fresh).open(path)?;
            if fresh {
                writeln!(f, "n,chain,optimum,class_count")?;
            }
            Some(f)
        }
        None => None,
    };
    let wave = (rayon::current_num_threads() * 4).max(1) as u64;
    let mut blocks_done = 0u64;
    while cp.cursor() < total {
        if options.max_blocks.is_some_and(|m| blocks_done >= m) {
            break;
        }
        let mut this_wave = wave;
        if let Some(m) = options.max_blocks {
            this_wave = this_wave.min(m - blocks_done);
        }
        let starts: Vec<(u64, u32)> = (0..this_wave)
            .map(|b| cp.cursor() + b * options.block_size as u64)
            .take_while(|&s| s < total)
            .map(|s| (s, (total - s).min(options.block_size as u64) as u32))
            .collect();
        let results: Vec<Vec<ChainOutcome>> = starts
            .par_iter()
            .map(|&(s, len)| search_block(n, topology, s, len, &options.search))
            .collect::<Result<_>>()?;
        for (&(s, len), outcomes) in starts.iter().zip(&results) {
            let unique = outcomes.iter().filter(|o| o.class_count == 1).count() as u32;
            cp.records.push(BlockRecord { start: s, len, unique });
            if let Some(f) = csv.as_mut() {
                for (i, o) in outcomes.iter().enumerate() {
                    let chain = Chain::from_index(s + i as u64, n, topology)?;
                    writeln!(f, "{n},{chain},{},{}", o.optimum, o.class_count)?;
                }
            }
        }
        blocks_done += starts.len() as u64;
        if let Some(f) = csv.as_mut() {
            f.flush()?;
        }
        if let Some(path) = &options.checkpoint {
            cp.store(path)?;
        }
        if options.progress {
            eprintln!("survey n={n}: {}/{total} chains, {} unique", cp.cursor(), cp.unique());
        }
    }
    let cursor = cp.cursor();
    let unique_count = cp.unique();
    Ok(SurveyRecord {
        n,
        topology,
        unique_count,
        total_count: cursor,
        percentage: if cursor == 0 { 0.0 } else { 100.0 * unique_count as f64 / cursor as f64 },
        engine_version: ENGINE_VERSION.to_string(),
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
        cursor,
        complete: cursor == total,
    })
}

/// The first `limit` open chains of length `n`, in index order, whose
/// optimum is unique.
pub fn find_unique_examples(n: usize, limit: usize, options: &SearchOptions) -> Result<Vec<Chain>> {
    check_sweep_len(n, Topology::Open)?;
    let mut out = Vec::new();
    for i in 0..1u64 << n {
        if out.len() >= limit {
            break;
        }
        let chain = Chain::from_index(i, n, Topology::Open)?;
        if enumerate_optimal(&chain, options)?.class_count == 1 {
            out.push(chain);
        }
    }
    Ok(out)
}

/// `(k, class_count)` for `Z_k`, odd `k` from 1 to `k_max`.
pub fn verify_odd_z(k_max: usize, options: &SearchOptions) -> Result<Vec<(usize, u64)>> {
    (1..=k_max)
        .step_by(2)
        .map(|k| {
            let r = enumerate_optimal(&crate::families::gen_z(k)?, options)?;
            Ok((k, r.class_count))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts() -> SurveyOptions {
        SurveyOptions { block_size: 64, ..SurveyOptions::default() }
    }

    #[test]
    fn n1_both_chains_unique() {
        let r = sweep(1, Topology::Open, &opts()).unwrap();
        assert_eq!((r.unique_count, r.total_count), (2, 2));
        assert!(r.complete);
        assert_eq!(r.percentage, 100.0);
    }

    #[test]
    fn rejects_bad_lengths() {
        assert!(sweep(0, Topology::Open, &opts()).is_err());
        assert!(sweep(5, Topology::Closed, &opts()).is_err());
        assert!(sweep(MAX_SWEEP_LEN + 1, Topology::Open, &opts()).is_err());
    }

    #[test]
    fn worker_count_does_not_change_tallies() {
        let a = sweep(8, Topology::Open, &SurveyOptions { workers: 1, ..opts() }).unwrap();
        let b = sweep(8, Topology::Open, &SurveyOptions { workers: 3, block_size: 7, ..opts() }).unwrap();
        assert_eq!((a.unique_count, a.total_count), (b.unique_count, b.total_count));
    }

    #[test]
    fn resumes_from_checkpoint() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("n9.cp");
        let full = sweep(9, Topology::Open, &opts()).unwrap();
        let partial = SurveyOptions { checkpoint: Some(path.clone()), max_blocks: Some(3), block_size: 50, ..opts() };
        let first = sweep(9, Topology::Open, &partial).unwrap();
        assert!(!first.complete);
        assert_eq!(first.cursor, 150);
        let resumed = sweep(9, Topology::Open, &SurveyOptions { max_blocks: None, ..partial }).unwrap();
        assert!(resumed.complete);
        assert_eq!((resumed.unique_count, resumed.total_count), (full.unique_count, 512));
    }

    #[test]
    fn mismatched_checkpoint_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cp");
        sweep(4, Topology::Open, &SurveyOptions { checkpoint: Some(path.clone()), ..opts() }).unwrap();
        let err = sweep(5, Topology::Open, &SurveyOptions { checkpoint: Some(path.clone()), ..opts() });
        assert!(matches!(err, Err(Error::Checkpoint(_))));
        std::fs::write(&path, b"garbage").unwrap();
        let err = sweep(4, Topology::Open, &SurveyOptions { checkpoint: Some(path), ..opts() });
        assert!(matches!(err, Err(Error::Checkpoint(_))));
    }

    #[test]
    fn detail_csv_rows() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("d.csv");
        sweep(3, Topology::Open, &SurveyOptions { detail_csv: Some(path.clone()), ..opts() }).unwrap();
        let text = std::fs::read_to_string(&path).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 9);
        assert_eq!(lines[0], "n,chain,optimum,class_count");
        assert_eq!(lines[1], "3,HHH,0,2");
    }

    #[test]
    fn small_length_exceptions() {
        let o = SearchOptions::default();
        assert!(find_unique_examples(3, 5, &o).unwrap().is_empty());
        assert!(find_unique_examples(5, 5, &o).unwrap().is_empty());
        assert!(!find_unique_examples(4, 1, &o).unwrap().is_empty());
    }

    #[test]
    fn odd_z_small() {
        let t = verify_odd_z(5, &SearchOptions::default()).unwrap();
        assert_eq!(t, vec![(1, 1), (3, 1), (5, 2)]);
    }
}
