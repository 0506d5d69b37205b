//! Lattice trees, their brute-force enumeration, and the gadget construction
//! that turns a tree on `k` points into a ground state of `(PHP)^{4k}`.

use crate::chain::Topology;
use crate::error::{Error, Result};
use crate::folding::Folding;
use crate::lattice::{Dir, Point};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeSet, HashMap, HashSet};

/// Largest tree size accepted by [`enumerate_lattice_trees`].
pub const MAX_TREE_NODES: usize = 8;

/// A tree embedded in the square lattice. Nodes are sorted and edges are
/// stored with their smaller endpoint first, so equal trees compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LatticeTree {
    pub nodes: Vec<Point>,
    pub edges: Vec<(Point, Point)>,
}

impl LatticeTree {
    pub fn new(nodes: Vec<Point>, edges: Vec<(Point, Point)>) -> Result<Self> {
        let node_set: BTreeSet<Point> = nodes.iter().copied().collect();
        if node_set.is_empty() {
            return Err(Error::MalformedTree("no nodes".into()));
        }
        if node_set.len() != nodes.len() {
            return Err(Error::MalformedTree("repeated node".into()));
        }
        let mut edge_set = BTreeSet::new();
        for &(a, b) in &edges {
            if !a.is_adjacent(b) {
                return Err(Error::MalformedTree(format!("edge {a:?}-{b:?} is not a unit edge")));
            }
            if !node_set.contains(&a) || !node_set.contains(&b) {
                return Err(Error::MalformedTree(format!("edge {a:?}-{b:?} leaves the node set")));
            }
            edge_set.insert((a.min(b), a.max(b)));
        }
        if edge_set.len() + 1 != node_set.len() {
            return Err(Error::MalformedTree("edge count must be node count minus one".into()));
        }
        let tree = LatticeTree { nodes: node_set.into_iter().collect(), edges: edge_set.into_iter().collect() };
        if !tree.is_connected() {
            return Err(Error::MalformedTree("not connected".into()));
        }
        Ok(tree)
    }

    /// Tree whose edges join consecutive points of `path`.
    pub fn from_path(path: &[Point]) -> Result<Self> {
        LatticeTree::new(path.to_vec(), path.windows(2).map(|w| (w[0], w[1])).collect())
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    fn is_connected(&self) -> bool {
        let mut adj: HashMap<Point, Vec<Point>> = HashMap::new();
        for &(a, b) in &self.edges {
            adj.entry(a).or_default().push(b);
            adj.entry(b).or_default().push(a);
        }
        let mut seen = HashSet::from([self.nodes[0]]);
        let mut stack = vec![self.nodes[0]];
        while let Some(p) = stack.pop() {
            for &q in adj.get(&p).into_iter().flatten() {
                if seen.insert(q) {
                    stack.push(q);
                }
            }
        }
        seen.len() == self.nodes.len()
    }

    /// Translate so the least point is the origin.
    pub fn normalized(&self) -> LatticeTree {
        let base = self.nodes[0];
        let shift = |p: Point| Point::new(p.x - base.x, p.y - base.y);
        LatticeTree {
            nodes: self.nodes.iter().map(|&p| shift(p)).collect(),
            edges: self.edges.iter().map(|&(a, b)| (shift(a), shift(b))).collect(),
        }
    }

    fn with_leaf(&self, at: Point, leaf: Point) -> LatticeTree {
        let mut nodes = self.nodes.clone();
        nodes.push(leaf);
        nodes.sort_unstable();
        let mut edges = self.edges.clone();
        edges.push((at.min(leaf), at.max(leaf)));
        edges.sort_unstable();
        LatticeTree { nodes, edges }.normalized()
    }
}

/// All lattice trees on `k` points up to translation, sorted.
pub fn enumerate_lattice_trees(k: usize) -> Result<Vec<LatticeTree>> {
    if k > MAX_TREE_NODES {
        return Err(Error::TooLong { len: k, limit: MAX_TREE_NODES });
    }
    if k == 0 {
        return Err(Error::BadParameter { min: 1, got: 0 });
    }
    let mut level: BTreeSet<LatticeTree> = BTreeSet::from([LatticeTree { nodes: vec![Point::ORIGIN], edges: vec![] }]);
    for _ in 1..k {
        let mut next = BTreeSet::new();
        for t in &level {
            let occupied: HashSet<Point> = t.nodes.iter().copied().collect();
            for &p in &t.nodes {
                for q in p.neighbors() {
                    if !occupied.contains(&q) {
                        next.insert(t.with_leaf(p, q));
                    }
                }
            }
        }
        level = next;
    }
    Ok(level.into_iter().collect())
}

/// The `2^(k-1)` paths on `k` points that step only north or east.
pub fn staircase_paths(k: usize) -> Vec<LatticeTree> {
    (0..1u32 << (k.saturating_sub(1)))
        .map(|mask| {
            let mut p = Point::ORIGIN;
            let mut path = vec![p];
            for i in 0..k.saturating_sub(1) {
                p = p.step(if mask >> i & 1 == 0 { Dir::E } else { Dir::N });
                path.push(p);
            }
            LatticeTree::from_path(&path).expect("staircase is a path")
        })
        .collect()
}

/// Gadget spacing: tree points are scaled by this factor.
const SCALE: i32 = 4;

/// Builds a folding of `(PHP)^{4k}` from a tree on `k` points.
///
/// Every tree point becomes a gadget: four H nodes on a unit square, each
/// flanked by its two P neighbors on the square's outer sides, so that the
/// gadget's twelve nodes form a ring with one P–P edge per side. For every
/// tree edge the two facing P–P edges of the neighboring gadgets are removed
/// and their endpoints joined straight across, which merges the rings into
/// one cycle. Closed chains walk that cycle; open chains drop the P–P edge
/// that closes it.
pub fn tree_to_folding(tree: &LatticeTree, topology: Topology) -> Result<Folding> {
    let tree = LatticeTree::new(tree.nodes.clone(), tree.edges.clone())?;
    let at = |c: Point, dx: i32, dy: i32| Point::new(SCALE * c.x + dx, SCALE * c.y + dy);
    // side P–P edges of a gadget, keyed by the direction the side faces
    let side = |c: Point, d: Dir| -> (Point, Point) {
        match d {
            Dir::W => (at(c, -1, 0), at(c, -1, 1)),
            Dir::S => (at(c, 0, -1), at(c, 1, -1)),
            Dir::E => (at(c, 2, 0), at(c, 2, 1)),
            Dir::N => (at(c, 0, 2), at(c, 1, 2)),
        }
    };
    let mut adj: HashMap<Point, Vec<Point>> = HashMap::new();
    let mut link = |a: Point, b: Point| {
        adj.entry(a).or_default().push(b);
        adj.entry(b).or_default().push(a);
    };
    let tree_nbrs: HashSet<(Point, Dir)> = tree
        .edges
        .iter()
        .flat_map(|&(a, b)| {
            let d = a.dir_to(b).expect("unit edge");
            [(a, d), (b, d.opposite())]
        })
        .collect();
    for &c in &tree.nodes {
        // H squares with their flanking P nodes
        link(at(c, 0, 0), at(c, -1, 0));
        link(at(c, 0, 0), at(c, 0, -1));
        link(at(c, 1, 0), at(c, 1, -1));
        link(at(c, 1, 0), at(c, 2, 0));
        link(at(c, 1, 1), at(c, 2, 1));
        link(at(c, 1, 1), at(c, 1, 2));
        link(at(c, 0, 1), at(c, 0, 2));
        link(at(c, 0, 1), at(c, -1, 1));
        for d in Dir::ALL {
            if !tree_nbrs.contains(&(c, d)) {
                let (a, b) = side(c, d);
                link(a, b);
            }
        }
    }
    for &(a, b) in &tree.edges {
        let d = a.dir_to(b).expect("unit edge");
        let (a0, a1) = side(a, d);
        let (b0, b1) = side(b, d.opposite());
        link(a0, b0);
        link(a1, b1);
    }

    // start on the P west of the first gadget's south-west H, heading into it
    let first = tree.nodes[0];
    let start = at(first, -1, 0);
    let mut prev = start;
    let mut cur = at(first, 0, 0);
    let mut walk = vec![start, cur];
    while cur != start {
        let nbrs = &adj[&cur];
        let next = if nbrs[0] == prev { nbrs[1] } else { nbrs[0] };
        prev = cur;
        cur = next;
        walk.push(cur);
    }
    let n = 12 * tree.len();
    if walk.len() != n + 1 {
        return Err(Error::MalformedTree(format!("gadget cycle has {} nodes, expected {n}", walk.len() - 1)));
    }
    if topology == Topology::Open {
        walk.pop();
    }
    let steps = walk.windows(2).map(|w| w[0].dir_to(w[1]).expect("unit step")).collect();
    Ok(Folding::new(steps))
}
