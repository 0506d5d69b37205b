//! Missing-bond accounting for H nodes.
//!
//! A lattice neighbor of an H node that holds neither a chain neighbor nor an
//! H node is a missing bond. It is external when the lattice edge leaves the
//! bounding box of the embedding and internal otherwise; an external missing
//! bond is charged to the wall it crosses, which at a corner is the wall the
//! edge is perpendicular to.

use crate::chain::Chain;
use crate::contacts::point_index;
use crate::error::Result;
use crate::folding::{embed, Embedding, Folding};
use crate::lattice::Point;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Wall {
    N,
    S,
    E,
    W,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeMissing {
    pub node: usize,
    pub bond_degree: usize,
    pub internal_missing: usize,
    pub external_missing: usize,
    /// One wall per external missing bond.
    pub external_walls: Vec<Wall>,
}

impl NodeMissing {
    pub fn missing(&self) -> usize {
        self.internal_missing + self.external_missing
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MissingBondReport {
    pub nodes: Vec<NodeMissing>,
}

impl MissingBondReport {
    pub fn internal(&self) -> usize {
        self.nodes.iter().map(|n| n.internal_missing).sum()
    }

    pub fn external(&self) -> usize {
        self.nodes.iter().map(|n| n.external_missing).sum()
    }

    pub fn total(&self) -> usize {
        self.internal() + self.external()
    }

    pub fn get(&self, node: usize) -> Option<&NodeMissing> {
        self.nodes.iter().find(|n| n.node == node)
    }
}

/// Number of neighbor slots an H node has for bonds and missing bonds.
pub fn slot_count(chain: &Chain, node: usize) -> usize {
    let n = chain.len();
    if n == 1 {
        4
    } else if !chain.is_closed() && (node == 0 || node == n - 1) {
        3
    } else {
        2
    }
}

pub fn missing_bonds_of_embedding(chain: &Chain, emb: &Embedding) -> MissingBondReport {
    let at = point_index(emb);
    let (lo, hi) = emb.bounding_box();
    let inside = |q: Point| q.x >= lo.x && q.x <= hi.x && q.y >= lo.y && q.y <= hi.y;
    let mut nodes = Vec::new();
    for (v, &p) in emb.points.iter().enumerate() {
        if !chain.is_h(v) {
            continue;
        }
        let mut rec = NodeMissing {
            node: v,
            bond_degree: 0,
            internal_missing: 0,
            external_missing: 0,
            external_walls: Vec::new(),
        };
        for q in p.neighbors() {
            match at.get(&q) {
                Some(&u) if chain.chain_adjacent(u, v) => {}
                Some(&u) if chain.is_h(u) => rec.bond_degree += 1,
                _ if inside(q) => rec.internal_missing += 1,
                _ => {
                    rec.external_missing += 1;
                    rec.external_walls.push(if q.x > hi.x {
                        Wall::E
                    } else if q.x < lo.x {
                        Wall::W
                    } else if q.y > hi.y {
                        Wall::N
                    } else {
                        Wall::S
                    });
                }
            }
        }
        nodes.push(rec);
    }
    MissingBondReport { nodes }
}

pub fn missing_bonds(chain: &Chain, folding: &Folding) -> Result<MissingBondReport> {
    let emb = embed(chain, folding)?;
    Ok(missing_bonds_of_embedding(chain, &emb))
}
