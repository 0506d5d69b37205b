//! H–H contacts (bonds) of an embedded chain and the structure of the bond graph.

use crate::chain::{Chain, Topology};
use crate::error::Result;
use crate::folding::{embed, Embedding, Folding};
use crate::lattice::Point;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap, HashSet};

/// Contact pairs `(i, j)` with `i < j`, sorted.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct BondGraph {
    pub contacts: Vec<(usize, usize)>,
}

impl BondGraph {
    pub fn len(&self) -> usize {
        self.contacts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.contacts.is_empty()
    }

    pub fn degree(&self, node: usize) -> usize {
        self.contacts.iter().filter(|&&(i, j)| i == node || j == node).count()
    }
}

pub(crate) fn point_index(emb: &Embedding) -> HashMap<Point, usize> {
    emb.points.iter().enumerate().map(|(i, &p)| (p, i)).collect()
}

pub fn contacts_of_embedding(chain: &Chain, emb: &Embedding) -> BondGraph {
    let at = point_index(emb);
    let mut contacts = Vec::new();
    for (i, &p) in emb.points.iter().enumerate() {
        if !chain.is_h(i) {
            continue;
        }
        for q in p.neighbors() {
            if let Some(&j) = at.get(&q) {
                if j > i && chain.is_h(j) && !chain.chain_adjacent(i, j) {
                    contacts.push((i, j));
                }
            }
        }
    }
    contacts.sort_unstable();
    BondGraph { contacts }
}

pub fn contacts(chain: &Chain, folding: &Folding) -> Result<BondGraph> {
    let emb = embed(chain, folding)?;
    Ok(contacts_of_embedding(chain, &emb))
}

/// Degree-counting upper bound on the contact count: `h + 1` for open chains,
/// `h` for closed ones, where `h` is the number of H nodes.
pub fn max_contact_bound(chain: &Chain) -> usize {
    match chain.topology() {
        Topology::Open => chain.h_count() + 1,
        Topology::Closed => chain.h_count(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ShapeKind {
    /// Empty, or a single simple path.
    AcyclicPath,
    /// Nonempty union of vertex-disjoint cycles, all of even length.
    DisjointEvenCycles,
    Other,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BondGraphShape {
    pub kind: ShapeKind,
    /// Node count of each connected component with at least one edge, ascending.
    pub component_sizes: Vec<usize>,
    pub edge_count: usize,
}

pub fn bond_graph_shape(bonds: &BondGraph) -> BondGraphShape {
    let mut adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &(i, j) in &bonds.contacts {
        adj.entry(i).or_default().push(j);
        adj.entry(j).or_default().push(i);
    }
    let mut seen = HashSet::new();
    // (nodes, edges, max degree) per component
    let mut comps = Vec::new();
    for &start in adj.keys() {
        if seen.contains(&start) {
            continue;
        }
        let mut stack = vec![start];
        seen.insert(start);
        let (mut nodes, mut deg_sum, mut max_deg) = (0usize, 0usize, 0usize);
        while let Some(v) = stack.pop() {
            nodes += 1;
            let nb = &adj[&v];
            deg_sum += nb.len();
            max_deg = max_deg.max(nb.len());
            for &w in nb {
                if seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        comps.push((nodes, deg_sum / 2, max_deg));
    }
    let mut component_sizes: Vec<usize> = comps.iter().map(|c| c.0).collect();
    component_sizes.sort_unstable();
    let single_path = comps.len() == 1 && comps[0].1 + 1 == comps[0].0 && comps[0].2 <= 2;
    let kind = if comps.is_empty() || single_path {
        ShapeKind::AcyclicPath
    } else if comps.iter().all(|&(n, e, d)| n == e && d == 2 && n % 2 == 0) {
        ShapeKind::DisjointEvenCycles
    } else {
        ShapeKind::Other
    };
    BondGraphShape { kind, component_sizes, edge_count: bonds.len() }
}
