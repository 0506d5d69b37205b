//! Exact folding engine for HP chains on the two-dimensional square lattice.
//!
//! A chain of hydrophobic (`H`) and polar (`P`) nodes is folded as a
//! self-avoiding walk; its score is the number of H–H lattice contacts
//! between nodes that are not chain neighbors. The engine enumerates every
//! optimal folding up to rotation and reflection, decides whether the optimum
//! is unique, generates chain families with known ground states, and sweeps
//! all chains of a given length.

pub mod chain;
pub mod contacts;
pub mod error;
pub mod families;
pub mod folding;
pub mod lattice;
pub mod lattice_tree;
pub mod missing;
pub mod render;
pub mod search;
pub mod survey;
pub mod verify;

pub use chain::{Chain, Label, Topology};
pub use contacts::{bond_graph_shape, contacts, max_contact_bound, BondGraph, BondGraphShape, ShapeKind};
pub use error::{Error, Result};
pub use folding::{canonicalize, embed, isometric, Embedding, Folding};
pub use lattice::{Dir, Point, Symmetry};
pub use lattice_tree::{enumerate_lattice_trees, tree_to_folding, LatticeTree};
pub use missing::{missing_bonds, MissingBondReport, Wall};
pub use search::{enumerate_optimal, is_unique, naive_oracle, SearchOptions, SearchResult};

/// Reported in survey records and checkpoints.
pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");
