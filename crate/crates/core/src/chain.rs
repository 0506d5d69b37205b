//! HP chains: a sequence of hydrophobic/polar labels plus a topology.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Label {
    H,
    P,
}

impl Label {
    pub const fn as_char(self) -> char {
        match self {
            Label::H => 'H',
            Label::P => 'P',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Topology {
    Open,
    Closed,
}

impl fmt::Display for Topology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Topology::Open => "open",
            Topology::Closed => "closed",
        })
    }
}

impl FromStr for Topology {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "open" => Ok(Topology::Open),
            "closed" => Ok(Topology::Closed),
            other => Err(format!("unknown topology {other:?}")),
        }
    }
}

/// A labeled chain. Serialized as `{"sequence": "HPPH", "topology": "open"}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "ChainRepr", into = "ChainRepr")]
pub struct Chain {
    labels: Vec<Label>,
    topology: Topology,
}

#[derive(Serialize, Deserialize)]
struct ChainRepr {
    sequence: String,
    topology: Topology,
}

impl TryFrom<ChainRepr> for Chain {
    type Error = Error;

    fn try_from(r: ChainRepr) -> Result<Chain> {
        Chain::parse(&r.sequence, r.topology)
    }
}

impl From<Chain> for ChainRepr {
    fn from(c: Chain) -> ChainRepr {
        ChainRepr { sequence: c.to_string(), topology: c.topology }
    }
}

impl Chain {
    /// Parses an uppercase `H`/`P` string.
    pub fn parse(text: &str, topology: Topology) -> Result<Chain> {
        let labels = text
            .chars()
            .enumerate()
            .map(|(pos, ch)| match ch {
                'H' => Ok(Label::H),
                'P' => Ok(Label::P),
                _ => Err(Error::InvalidLabel { ch, pos }),
            })
            .collect::<Result<Vec<_>>>()?;
        Chain::new(labels, topology)
    }

    pub fn new(labels: Vec<Label>, topology: Topology) -> Result<Chain> {
        if labels.is_empty() {
            return Err(Error::EmptyChain);
        }
        if topology == Topology::Closed && (labels.len() < 4 || labels.len() % 2 == 1) {
            return Err(Error::BadClosedLength(labels.len()));
        }
        Ok(Chain { labels, topology })
    }

    /// Chain whose labels are the bits of `index`, most significant first,
    /// with H = 0 and P = 1.
    pub fn from_index(index: u64, n: usize, topology: Topology) -> Result<Chain> {
        let labels = (0..n).map(|i| if (index >> (n - 1 - i)) & 1 == 0 { Label::H } else { Label::P }).collect();
        Chain::new(labels, topology)
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn topology(&self) -> Topology {
        self.topology
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn is_closed(&self) -> bool {
        self.topology == Topology::Closed
    }

    pub fn is_h(&self, i: usize) -> bool {
        self.labels[i] == Label::H
    }

    pub fn h_count(&self) -> usize {
        self.labels.iter().filter(|&&l| l == Label::H).count()
    }

    /// Number of steps in a folding of this chain.
    pub fn step_count(&self) -> usize {
        match self.topology {
            Topology::Open => self.labels.len() - 1,
            Topology::Closed => self.labels.len(),
        }
    }

    /// True when nodes `i` and `j` are joined by a chain edge.
    pub fn chain_adjacent(&self, i: usize, j: usize) -> bool {
        let d = i.abs_diff(j);
        d == 1 || (self.is_closed() && d == self.len() - 1)
    }

    /// Label-preserving relabelings of the chain, as maps from new index to
    /// old index. The identity is always first. Open chains admit reversal;
    /// closed chains admit rotations and reflections of the cycle.
    pub fn automorphisms(&self) -> Vec<ChainMap> {
        let n = self.len();
        let mut out = vec![ChainMap { shift: 0, reversed: false }];
        let candidates: Vec<ChainMap> = match self.topology {
            Topology::Open => vec![ChainMap { shift: 0, reversed: true }],
            Topology::Closed => (0..n)
                .flat_map(|s| [ChainMap { shift: s, reversed: false }, ChainMap { shift: s, reversed: true }])
                .filter(|m| !(m.shift == 0 && !m.reversed))
                .collect(),
        };
        for m in candidates {
            if (0..n).all(|i| self.labels[m.source(i, n, self.topology)] == self.labels[i]) {
                out.push(m);
            }
        }
        out
    }
}

/// A relabeling of chain nodes: new node `i` is old node `source(i)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChainMap {
    pub shift: usize,
    pub reversed: bool,
}

impl ChainMap {
    pub fn source(self, i: usize, n: usize, topology: Topology) -> usize {
        match (topology, self.reversed) {
            (Topology::Open, false) => i,
            (Topology::Open, true) => n - 1 - i,
            (Topology::Closed, false) => (self.shift + i) % n,
            (Topology::Closed, true) => (self.shift + n - i) % n,
        }
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.labels {
            write!(f, "{}", l.as_char())?;
        }
        Ok(())
    }
}
