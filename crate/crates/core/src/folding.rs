//! Direction-string foldings, their lattice embeddings, and canonical forms
//! under the dihedral group.

use crate::chain::{Chain, ChainMap, Topology};
use crate::error::{Error, Result};
use crate::lattice::{Dir, Point, Symmetry};
use serde::{Deserialize, Serialize};
use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

/// A walk encoded as unit steps. Serialized as a plain `"EENW..."` string.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Folding {
    steps: Vec<Dir>,
}

impl Folding {
    pub fn new(steps: Vec<Dir>) -> Self {
        Folding { steps }
    }

    pub fn empty() -> Self {
        Folding { steps: Vec::new() }
    }

    pub fn parse(text: &str) -> Result<Folding> {
        text.parse()
    }

    pub fn steps(&self) -> &[Dir] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn transform(&self, g: Symmetry) -> Folding {
        Folding { steps: self.steps.iter().map(|&d| g.apply_dir(d)).collect() }
    }

    /// The eight dihedral images, in `Symmetry::all()` order.
    pub fn images(&self) -> [Folding; 8] {
        Symmetry::all().map(|g| self.transform(g))
    }

    /// Lattice points visited by the walk starting at the origin, without any
    /// validity check. Has `len() + 1` entries.
    pub fn trace(&self) -> Vec<Point> {
        let mut pts = Vec::with_capacity(self.steps.len() + 1);
        let mut p = Point::ORIGIN;
        pts.push(p);
        for &d in &self.steps {
            p = p.step(d);
            pts.push(p);
        }
        pts
    }
}

impl FromStr for Folding {
    type Err = Error;

    fn from_str(s: &str) -> Result<Folding> {
        let steps = s
            .chars()
            .enumerate()
            .map(|(pos, ch)| Dir::from_char(ch).ok_or(Error::InvalidDirection { ch, pos }))
            .collect::<Result<Vec<_>>>()?;
        Ok(Folding { steps })
    }
}

impl TryFrom<String> for Folding {
    type Error = Error;

    fn try_from(s: String) -> Result<Folding> {
        s.parse()
    }
}

impl From<Folding> for String {
    fn from(f: Folding) -> String {
        f.to_string()
    }
}

impl fmt::Display for Folding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in &self.steps {
            write!(f, "{}", d.as_char())?;
        }
        Ok(())
    }
}

/// One lattice point per chain node; node 0 sits at the origin.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Embedding {
    pub points: Vec<Point>,
}

impl Embedding {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Inclusive bounding box as `(min, max)` corners.
    pub fn bounding_box(&self) -> (Point, Point) {
        let mut lo = self.points[0];
        let mut hi = self.points[0];
        for p in &self.points {
            lo.x = lo.x.min(p.x);
            lo.y = lo.y.min(p.y);
            hi.x = hi.x.max(p.x);
            hi.y = hi.y.max(p.y);
        }
        (lo, hi)
    }
}

/// Checks a walk against a topology and node count and returns its points,
/// one per node.
pub fn embed_steps(steps: &Folding, n: usize, topology: Topology) -> Result<Embedding> {
    let expected = match topology {
        Topology::Open => n.saturating_sub(1),
        Topology::Closed => n,
    };
    if steps.len() != expected {
        return Err(Error::LengthMismatch { expected, got: steps.len() });
    }
    let mut pts = steps.trace();
    if topology == Topology::Closed {
        if pts.last() != Some(&Point::ORIGIN) {
            return Err(Error::NotClosed);
        }
        pts.pop();
    }
    let mut seen = HashSet::with_capacity(pts.len());
    for (i, p) in pts.iter().enumerate() {
        if !seen.insert(*p) {
            return Err(Error::SelfIntersection { node: i });
        }
    }
    Ok(Embedding { points: pts })
}

pub fn embed(chain: &Chain, folding: &Folding) -> Result<Embedding> {
    embed_steps(folding, chain.len(), chain.topology())
}

/// Lexicographically least of the eight dihedral images (order E < N < W < S).
pub fn canonicalize(folding: &Folding, topology: Topology) -> Result<Folding> {
    let n = match topology {
        Topology::Open => folding.len() + 1,
        Topology::Closed => folding.len(),
    };
    embed_steps(folding, n, topology)?;
    Ok(canonical_unchecked(folding))
}

pub(crate) fn canonical_unchecked(folding: &Folding) -> Folding {
    folding.images().into_iter().min().expect("eight images")
}

pub fn isometric(a: &Folding, b: &Folding, topology: Topology) -> Result<bool> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch { expected: a.len(), got: b.len() });
    }
    Ok(canonicalize(a, topology)? == canonicalize(b, topology)?)
}

/// Re-reads an embedding under a chain relabeling and returns the walk of the
/// relabeled chain, translated so that its node 0 is at the origin.
pub fn relabel(points: &[Point], map: ChainMap, topology: Topology) -> Folding {
    let n = points.len();
    let order: Vec<Point> = (0..n).map(|i| points[map.source(i, n, topology)]).collect();
    let mut steps: Vec<Dir> =
        order.windows(2).map(|w| w[0].dir_to(w[1]).expect("relabeled chain edges stay unit length")).collect();
    if topology == Topology::Closed {
        steps.push(order[n - 1].dir_to(order[0]).expect("closing edge"));
    }
    Folding::new(steps)
}

/// Least canonical form over every label-preserving relabeling of the chain:
/// the class key when chain automorphisms are quotiented as well.
pub fn orbit_key(chain: &Chain, folding: &Folding) -> Result<Folding> {
    let emb = embed(chain, folding)?;
    Ok(orbit_key_of_points(&emb.points, &chain.automorphisms(), chain.topology()))
}

pub(crate) fn orbit_key_of_points(points: &[Point], maps: &[ChainMap], topology: Topology) -> Folding {
    maps.iter().map(|&m| canonical_unchecked(&relabel(points, m, topology))).min().expect("identity map present")
}

/// Same class up to lattice isometry and chain automorphism.
pub fn equivalent(chain: &Chain, a: &Folding, b: &Folding) -> Result<bool> {
    Ok(orbit_key(chain, a)? == orbit_key(chain, b)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(s: &str) -> Folding {
        s.parse().unwrap()
    }

    #[test]
    fn embeds_s2_rectangle() {
        let chain = Chain::parse("PHPPHP", Topology::Closed).unwrap();
        let e = embed(&chain, &f("EESWWN")).unwrap();
        assert_eq!(e.len(), 6);
        let (lo, hi) = e.bounding_box();
        assert_eq!((hi.x - lo.x, hi.y - lo.y), (2, 1));
    }

    #[test]
    fn embeds_single_edge() {
        let chain = Chain::parse("HH", Topology::Open).unwrap();
        let e = embed(&chain, &f("E")).unwrap();
        assert_eq!(e.points, vec![Point::new(0, 0), Point::new(1, 0)]);
    }

    #[test]
    fn embed_errors() {
        let chain = Chain::parse("HPH", Topology::Open).unwrap();
        assert_eq!(embed(&chain, &f("EW")), Err(Error::SelfIntersection { node: 2 }));
        assert!(matches!(embed(&chain, &f("E")), Err(Error::LengthMismatch { .. })));
        let closed = Chain::parse("HPHP", Topology::Closed).unwrap();
        assert_eq!(embed(&closed, &f("EENW")), Err(Error::NotClosed));
        assert!(embed(&closed, &f("ENWS")).is_ok());
        assert!(matches!("EX".parse::<Folding>(), Err(Error::InvalidDirection { ch: 'X', pos: 1 })));
    }

    #[test]
    fn canonical_examples() {
        assert_eq!(canonicalize(&f("N"), Topology::Open).unwrap(), f("E"));
        let c = canonicalize(&f("EESWWN"), Topology::Closed).unwrap();
        assert_eq!(canonicalize(&c, Topology::Closed).unwrap(), c);
        assert_eq!(c, f("EENWWS"));
    }

    #[test]
    fn f3_images_share_canonical_form() {
        let f3 = f("EESSWNWN");
        let forms: HashSet<_> = f3.images().iter().map(|g| canonicalize(g, Topology::Closed).unwrap()).collect();
        assert_eq!(forms.len(), 1);
    }

    #[test]
    fn isometry_examples() {
        assert!(isometric(&f("E"), &f("S"), Topology::Open).unwrap());
        assert!(isometric(&f("EN"), &f("ES"), Topology::Open).unwrap());
        assert!(!isometric(&f("EEN"), &f("ENE"), Topology::Open).unwrap());
        assert!(isometric(&f("EE"), &f("E"), Topology::Open).is_err());
    }

    #[test]
    fn reversal_relabel_of_open_walk() {
        let pts = f("EEN").trace();
        let rev = relabel(&pts, ChainMap { shift: 0, reversed: true }, Topology::Open);
        assert_eq!(rev, f("SWW"));
    }

    #[test]
    fn reversal_equivalence_of_palindrome() {
        let z4 = Chain::parse("HPHPPHPH", Topology::Open).unwrap();
        let a = f("ENENWWS");
        let b = f("ENNWSWS");
        assert!(!isometric(&a, &b, Topology::Open).unwrap());
        assert!(equivalent(&z4, &a, &b).unwrap());
        let asym = Chain::parse("HPHPPHPP", Topology::Open).unwrap();
        assert!(!equivalent(&asym, &a, &b).unwrap());
    }

    #[test]
    fn json_is_plain_string() {
        assert_eq!(serde_json::to_string(&f("ENW")).unwrap(), "\"ENW\"");
        assert_eq!(serde_json::from_str::<Folding>("\"ES\"").unwrap(), f("ES"));
    }
}
