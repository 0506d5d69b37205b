//! Chain families with known ground states and their named foldings.

use crate::chain::{Chain, Label, Topology};
use crate::error::{Error, Result};
use crate::folding::Folding;
use crate::lattice::Dir;
use crate::lattice::Point;
use crate::lattice_tree::{tree_to_folding, LatticeTree};

fn check_positive(k: usize) -> Result<()> {
    if k < 1 {
        return Err(Error::BadParameter { min: 1, got: k });
    }
    Ok(())
}

fn hp(m: usize) -> impl Iterator<Item = Label> {
    std::iter::repeat_n([Label::H, Label::P], m).flatten()
}

fn ph(m: usize) -> impl Iterator<Item = Label> {
    std::iter::repeat_n([Label::P, Label::H], m).flatten()
}

fn repeat_dirs(pair: [Dir; 2], m: usize) -> impl Iterator<Item = Dir> {
    std::iter::repeat_n(pair, m).flatten()
}

/// Closed chain `P (HP)^u P (HP)^d` with `u = ceil(k/2)`, `d = floor(k/2)`.
pub fn gen_s(k: usize) -> Result<Chain> {
    check_positive(k)?;
    let (u, d) = (k.div_ceil(2), k / 2);
    let labels = std::iter::once(Label::P).chain(hp(u)).chain(std::iter::once(Label::P)).chain(hp(d)).collect();
    Chain::new(labels, Topology::Closed)
}

/// Two-sided staircase folding of [`gen_s`]: `E (ES)^d W (WN)^u` for even k,
/// `E (ES)^d S (WN)^u` for odd k.
pub fn gen_f(k: usize) -> Result<Folding> {
    check_positive(k)?;
    let (u, d) = (k.div_ceil(2), k / 2);
    let turn = if k.is_multiple_of(2) { Dir::W } else { Dir::S };
    let steps = std::iter::once(Dir::E)
        .chain(repeat_dirs([Dir::E, Dir::S], d))
        .chain(std::iter::once(turn))
        .chain(repeat_dirs([Dir::W, Dir::N], u))
        .collect();
    Ok(Folding::new(steps))
}

/// Open chain `(HP)^u (PH)^d` with `u = ceil(k/2)`, `d = floor(k/2)`.
pub fn gen_z(k: usize) -> Result<Chain> {
    check_positive(k)?;
    let (u, d) = (k.div_ceil(2), k / 2);
    Chain::new(hp(u).chain(ph(d)).collect(), Topology::Open)
}

/// Standard embedding of `Z_{2j}`: the P–P edge runs east along the top,
/// both arms hang south from it and descend as parallel staircases until the
/// two H endpoints meet side by side. Written as `(WN)^(j-1) N E S (ES)^(j-1)`.
pub fn standard_z_embedding(j: usize) -> Result<Folding> {
    check_positive(j)?;
    let steps = repeat_dirs([Dir::W, Dir::N], j - 1)
        .chain([Dir::N, Dir::E, Dir::S])
        .chain(repeat_dirs([Dir::E, Dir::S], j - 1))
        .collect();
    Ok(Folding::new(steps))
}

/// `(PHP)^(4k)`, length `12k`.
pub fn gen_php(k: usize, topology: Topology) -> Result<Chain> {
    check_positive(k)?;
    let labels = std::iter::repeat_n([Label::P, Label::H, Label::P], 4 * k).flatten().collect();
    Chain::new(labels, topology)
}

/// The family folding of `chain` when it is `S_k`, `Z_{2j}` or `(PHP)^{4k}`.
pub fn recognized_folding(chain: &Chain) -> Option<Folding> {
    let n = chain.len();
    match chain.topology() {
        Topology::Closed => {
            let k = (n - 2) / 2;
            if k >= 1 && gen_s(k).ok().as_ref() == Some(chain) {
                return gen_f(k).ok();
            }
        }
        Topology::Open => {
            if n.is_multiple_of(4) && gen_z(n / 2).ok().as_ref() == Some(chain) {
                return standard_z_embedding(n / 4).ok();
            }
        }
    }
    if n.is_multiple_of(12) && gen_php(n / 12, chain.topology()).ok().as_ref() == Some(chain) {
        let line: Vec<Point> = (0..(n / 12) as i32).map(|x| Point::new(x, 0)).collect();
        let tree = LatticeTree::from_path(&line).ok()?;
        return tree_to_folding(&tree, chain.topology()).ok();
    }
    None
}
