//! Binary checkpoint file for resumable sweeps.
//!
//! All integers are little-endian.
//!
//! ```text
//! header, 32 bytes
//!   0  [u8; 8]  magic "HPSURVEY"
//!   8  u16      format version (1)
//!  10  u8       chain length n
//!  11  u8       topology: 0 open, 1 closed
//!  12  u32      reserved, zero
//!  16  u64      cursor: chains [0, cursor) are tallied
//!  24  u64      record count
//! record, 24 bytes each, contiguous and in index order
//!   0  u64      first chain index of the block
//!   8  u32      block length
//!  12  u32      chains in the block with a unique optimum
//!  16  u64      FNV-1a 64 of bytes 0..16 of the record
//! ```

use crate::chain::Topology;
use crate::error::{Error, Result};
use std::fs;
use std::io::Write;
use std::path::Path;

pub const MAGIC: &[u8; 8] = b"HPSURVEY";
pub const VERSION: u16 = 1;
pub const HEADER_LEN: usize = 32;
pub const RECORD_LEN: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BlockRecord {
    pub start: u64,
    pub len: u32,
    pub unique: u32,
}

impl BlockRecord {
    fn payload(&self) -> [u8; 16] {
        let mut b = [0u8; 16];
        b[0..8].copy_from_slice(&self.start.to_le_bytes());
        b[8..12].copy_from_slice(&self.len.to_le_bytes());
        b[12..16].copy_from_slice(&self.unique.to_le_bytes());
        b
    }

    pub fn end(&self) -> u64 {
        self.start + self.len as u64
    }
}

fn fnv1a64(bytes: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Checkpoint {
    pub n: u8,
    pub topology: Topology,
    pub records: Vec<BlockRecord>,
}

fn corrupt(msg: impl Into<String>) -> Error {
    Error::Checkpoint(msg.into())
}

impl Checkpoint {
    pub fn new(n: u8, topology: Topology) -> Self {
        Checkpoint { n, topology, records: Vec::new() }
    }

    pub fn cursor(&self) -> u64 {
        self.records.last().map_or(0, BlockRecord::end)
    }

    pub fn unique(&self) -> u64 {
        self.records.iter().map(|r| r.unique as u64).sum()
    }

    pub fn encode(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(HEADER_LEN + RECORD_LEN * self.records.len());
        out.extend_from_slice(MAGIC);
        out.extend_from_slice(&VERSION.to_le_bytes());
        out.push(self.n);
        out.push(match self.topology {
            Topology::Open => 0,
            Topology::Closed => 1,
        });
        out.extend_from_slice(&0u32.to_le_bytes());
        out.extend_from_slice(&self.cursor().to_le_bytes());
        out.extend_from_slice(&(self.records.len() as u64).to_le_bytes());
        for r in &self.records {
            let p = r.payload();
            out.extend_from_slice(&p);
            out.extend_from_slice(&fnv1a64(&p).to_le_bytes());
        }
        out
    }

    pub fn decode(bytes: &[u8]) -> Result<Checkpoint> {
        let u64_at = |b: &[u8], i: usize| u64::from_le_bytes(b[i..i + 8].try_into().expect("8 bytes"));
        let u32_at = |b: &[u8], i: usize| u32::from_le_bytes(b[i..i + 4].try_into().expect("4 bytes"));
        if bytes.len() < HEADER_LEN {
            return Err(corrupt("truncated header"));
        }
        if &bytes[0..8] != MAGIC {
            return Err(corrupt("bad magic"));
        }
        let version = u16::from_le_bytes([bytes[8], bytes[9]]);
        if version != VERSION {
            return Err(corrupt(format!("unsupported version {version}")));
        }
        let n = bytes[10];
        let topology = match bytes[11] {
            0 => Topology::Open,
            1 => Topology::Closed,
            t => return Err(corrupt(format!("bad topology byte {t}"))),
        };
        if u32_at(bytes, 12) != 0 {
            return Err(corrupt("reserved bytes set"));
        }
        let cursor = u64_at(bytes, 16);
        let count = u64_at(bytes, 24) as usize;
        if bytes.len() != HEADER_LEN + count.saturating_mul(RECORD_LEN) {
            return Err(corrupt("length does not match record count"));
        }
        let mut records = Vec::with_capacity(count);
        let mut expect_start = 0;
        for i in 0..count {
            let b = &bytes[HEADER_LEN + i * RECORD_LEN..HEADER_LEN + (i + 1) * RECORD_LEN];
            if fnv1a64(&b[0..16]) != u64_at(b, 16) {
                return Err(corrupt(format!("checksum mismatch in record {i}")));
            }
            let r = BlockRecord { start: u64_at(b, 0), len: u32_at(b, 8), unique: u32_at(b, 12) };
            if r.start != expect_start || r.unique > r.len || r.len == 0 {
                return Err(corrupt(format!("record {i} out of sequence")));
            }
            expect_start = r.end();
            records.push(r);
        }
        if n < 64 && expect_start > 1u64 << n {
            return Err(corrupt("records run past 2^n"));
        }
        let cp = Checkpoint { n, topology, records };
        if cp.cursor() != cursor {
            return Err(corrupt("cursor disagrees with records"));
        }
        Ok(cp)
    }

    pub fn load(path: &Path) -> Result<Option<Checkpoint>> {
        match fs::read(path) {
            Ok(bytes) => Checkpoint::decode(&bytes).map(Some),
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(None),
            Err(e) => Err(e.into()),
        }
    }

    /// Writes to a sibling temporary file and renames it over `path`.
    pub fn store(&self, path: &Path) -> Result<()> {
        let mut tmp = path.as_os_str().to_owned();
        tmp.push(".tmp");
        let tmp = Path::new(&tmp);
        let mut f = fs::File::create(tmp)?;
        f.write_all(&self.encode())?;
        f.sync_all()?;
        fs::rename(tmp, path)?;
        Ok(())
    }
}
