//! Square-lattice primitives: points, unit steps and the dihedral group.

use serde::{Deserialize, Serialize};
use std::fmt;

/// Integer lattice point, x grows to the east and y to the north.
/// Serialized as an `[x, y]` pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "(i32, i32)", into = "(i32, i32)")]
pub struct Point {
    pub x: i32,
    pub y: i32,
}

impl Point {
    pub const ORIGIN: Point = Point { x: 0, y: 0 };

    pub const fn new(x: i32, y: i32) -> Self {
        Point { x, y }
    }

    pub fn step(self, dir: Dir) -> Point {
        let (dx, dy) = dir.offset();
        Point::new(self.x + dx, self.y + dy)
    }

    pub fn neighbors(self) -> [Point; 4] {
        Dir::ALL.map(|d| self.step(d))
    }

    pub fn is_adjacent(self, other: Point) -> bool {
        (self.x - other.x).abs() + (self.y - other.y).abs() == 1
    }

    /// Direction of the unit step from `self` to `other`, if they are adjacent.
    pub fn dir_to(self, other: Point) -> Option<Dir> {
        Dir::ALL.into_iter().find(|&d| self.step(d) == other)
    }
}

impl From<(i32, i32)> for Point {
    fn from((x, y): (i32, i32)) -> Self {
        Point { x, y }
    }
}

impl From<Point> for (i32, i32) {
    fn from(p: Point) -> Self {
        (p.x, p.y)
    }
}

/// A unit lattice step. The declaration order E < N < W < S is the
/// order used for canonical direction strings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Dir {
    E,
    N,
    W,
    S,
}

impl Dir {
    pub const ALL: [Dir; 4] = [Dir::E, Dir::N, Dir::W, Dir::S];

    pub const fn index(self) -> usize {
        self as usize
    }

    pub const fn from_index(i: usize) -> Dir {
        match i & 3 {
            0 => Dir::E,
            1 => Dir::N,
            2 => Dir::W,
            _ => Dir::S,
        }
    }

    pub const fn offset(self) -> (i32, i32) {
        match self {
            Dir::E => (1, 0),
            Dir::N => (0, 1),
            Dir::W => (-1, 0),
            Dir::S => (0, -1),
        }
    }

    pub const fn opposite(self) -> Dir {
        Dir::from_index(self.index() + 2)
    }

    pub fn from_char(c: char) -> Option<Dir> {
        match c {
            'E' => Some(Dir::E),
            'N' => Some(Dir::N),
            'W' => Some(Dir::W),
            'S' => Some(Dir::S),
            _ => None,
        }
    }

    pub const fn as_char(self) -> char {
        match self {
            Dir::E => 'E',
            Dir::N => 'N',
            Dir::W => 'W',
            Dir::S => 'S',
        }
    }
}

impl fmt::Display for Dir {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// Element of the dihedral group of order 8 acting on the lattice:
/// an optional reflection across the x-axis followed by `quarter_turns`
/// counter-clockwise rotations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Symmetry {
    pub reflect: bool,
    pub quarter_turns: u8,
}

impl Symmetry {
    pub const IDENTITY: Symmetry = Symmetry { reflect: false, quarter_turns: 0 };

    pub fn all() -> [Symmetry; 8] {
        let mut out = [Symmetry::IDENTITY; 8];
        for (i, s) in out.iter_mut().enumerate() {
            *s = Symmetry { reflect: i >= 4, quarter_turns: (i % 4) as u8 };
        }
        out
    }

    pub fn apply_dir(self, d: Dir) -> Dir {
        let i = d.index();
        let i = if self.reflect { (4 - i) & 3 } else { i };
        Dir::from_index(i + self.quarter_turns as usize)
    }

    pub fn apply_point(self, p: Point) -> Point {
        let (x, y) = if self.reflect { (p.x, -p.y) } else { (p.x, p.y) };
        match self.quarter_turns & 3 {
            0 => Point::new(x, y),
            1 => Point::new(-y, x),
            2 => Point::new(-x, -y),
            _ => Point::new(y, -x),
        }
    }
}
