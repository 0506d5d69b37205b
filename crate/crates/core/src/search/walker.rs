//! Incremental self-avoiding walk on a bounded grid with running contact
//! counts and the admissible overestimate used for pruning.

use crate::chain::{Chain, ChainMap, Topology};
use crate::folding::{orbit_key_of_points, Folding};
use crate::lattice::{Dir, Point};
use std::collections::HashSet;
use std::sync::atomic::{AtomicU32, Ordering};

#[derive(Debug, Default, Clone)]
pub(crate) struct Tally {
    pub best: u32,
    pub count: u64,
    /// Canonical step strings in discovery order (lexicographic within a task).
    pub reps: Vec<Vec<u8>>,
    /// Orbit keys under chain automorphisms, only filled in quotient mode.
    pub keys: HashSet<Vec<u8>>,
    pub nodes: u64,
    pub pruned: u64,
}

pub(crate) struct Walker<'a> {
    n: usize,
    closed: bool,
    h: Vec<bool>,
    width: usize,
    origin: usize,
    offsets: [isize; 4],
    grid: Vec<u8>,
    cells: Vec<usize>,
    steps: Vec<u8>,
    first_turn: Option<usize>,
    placed: usize,
    contacts: u32,
    /// Empty lattice neighbors of placed H nodes, by index parity.
    free: [i32; 2],
    /// `unplaced_cap[k]`: bond capacity of H nodes `k..n`, by index parity.
    unplaced_cap: Vec<[i32; 2]>,
    pruning: bool,
    store_limit: usize,
    automorphisms: Option<Vec<ChainMap>>,
    shared_best: &'a AtomicU32,
    pub tally: Tally,
}

impl<'a> Walker<'a> {
    pub fn new(
        chain: &Chain,
        pruning: bool,
        store_limit: usize,
        quotient: bool,
        seed: u32,
        shared_best: &'a AtomicU32,
    ) -> Self {
        let n = chain.len();
        let closed = chain.is_closed();
        let h: Vec<bool> = (0..n).map(|i| chain.is_h(i)).collect();
        let width = 2 * n + 3;
        let origin = (n + 1) * width + (n + 1);
        let mut unplaced_cap = vec![[0i32; 2]; n + 1];
        for k in (0..n).rev() {
            let mut c = unplaced_cap[k + 1];
            if h[k] {
                c[k & 1] += if !closed && k == n - 1 && n > 1 { 3 } else { 2 };
            }
            unplaced_cap[k] = c;
        }
        let automorphisms = if quotient { Some(chain.automorphisms()).filter(|maps| maps.len() > 1) } else { None };
        let mut w = Walker {
            n,
            closed,
            h,
            width,
            origin,
            offsets: [1, width as isize, -1, -(width as isize)],
            grid: vec![0; width * width],
            cells: vec![0; n],
            steps: Vec::with_capacity(n),
            first_turn: None,
            placed: 0,
            contacts: 0,
            free: [0; 2],
            unplaced_cap,
            pruning,
            store_limit,
            automorphisms,
            shared_best,
            tally: Tally { best: seed, ..Tally::default() },
        };
        w.place(origin);
        w
    }

    fn chain_adjacent(&self, a: usize, b: usize) -> bool {
        let d = a.abs_diff(b);
        d == 1 || (self.closed && d == self.n - 1)
    }

    fn neighbor(&self, cell: usize, d: usize) -> usize {
        (cell as isize + self.offsets[d]) as usize
    }

    fn place(&mut self, cell: usize) {
        let k = self.placed;
        self.grid[cell] = (k + 1) as u8;
        self.cells[k] = cell;
        let mut gain = 0;
        let mut empty = 0;
        for d in 0..4 {
            let o = self.grid[self.neighbor(cell, d)];
            if o == 0 {
                empty += 1;
                continue;
            }
            let m = (o - 1) as usize;
            if self.h[m] {
                self.free[m & 1] -= 1;
                if self.h[k] && !self.chain_adjacent(m, k) {
                    gain += 1;
                }
            }
        }
        if self.h[k] {
            self.free[k & 1] += empty;
        }
        self.contacts += gain;
        self.placed += 1;
    }

    fn unplace(&mut self) {
        self.placed -= 1;
        let k = self.placed;
        let cell = self.cells[k];
        let mut gain = 0;
        let mut empty = 0;
        for d in 0..4 {
            let o = self.grid[self.neighbor(cell, d)];
            if o == 0 {
                empty += 1;
                continue;
            }
            let m = (o - 1) as usize;
            if self.h[m] {
                self.free[m & 1] += 1;
                if self.h[k] && !self.chain_adjacent(m, k) {
                    gain += 1;
                }
            }
        }
        if self.h[k] {
            self.free[k & 1] -= empty;
        }
        self.contacts -= gain;
        self.grid[cell] = 0;
    }

    fn push_step(&mut self, d: usize) {
        let cell = self.neighbor(self.cells[self.placed - 1], d);
        if d != 0 && self.first_turn.is_none() {
            self.first_turn = Some(self.steps.len());
        }
        self.steps.push(d as u8);
        self.place(cell);
    }

    fn pop_step(&mut self) {
        self.unplace();
        self.steps.pop();
        if self.first_turn == Some(self.steps.len()) {
            self.first_turn = None;
        }
    }

    /// Replays a prefix produced by [`Walker::prefixes`].
    pub fn replay(&mut self, prefix: &[u8]) {
        for &d in prefix {
            self.push_step(d as usize);
        }
    }

    /// Admissible overestimate of the contacts still obtainable. Every future
    /// contact joins an even and an odd H node, at least one of them unplaced.
    fn future_bound(&self) -> i32 {
        let [eu, ou] = self.unplaced_cap[self.placed];
        let mut fp = self.free;
        let last = self.placed - 1;
        if self.placed < self.n {
            if self.h[last] {
                fp[last & 1] -= 1;
            }
            if self.closed && self.h[0] {
                fp[0] -= 1;
            }
        }
        (eu + ou).min(eu + fp[0]).min(ou + fp[1]).max(0)
    }

    fn threshold(&self) -> u32 {
        self.tally.best.max(self.shared_best.load(Ordering::Relaxed))
    }

    fn record_leaf(&mut self) {
        let value = self.contacts;
        if value < self.threshold() {
            return;
        }
        if value > self.tally.best {
            self.tally.best = value;
            self.tally.count = 0;
            self.tally.reps.clear();
            self.tally.keys.clear();
            self.shared_best.fetch_max(value, Ordering::Relaxed);
        }
        self.tally.count += 1;
        match &self.automorphisms {
            None => {
                if self.tally.reps.len() < self.store_limit {
                    let mut steps = self.steps.clone();
                    if self.closed {
                        steps.push(self.closing_step());
                    }
                    self.tally.reps.push(steps);
                }
            }
            Some(maps) => {
                let key = orbit_key(&self.points(), maps, self.closed);
                self.tally.keys.insert(key);
            }
        }
    }

    fn closing_step(&self) -> u8 {
        let last = self.cells[self.n - 1];
        (0..4).find(|&d| self.neighbor(last, d) == self.origin).expect("closed walk ends next to the origin") as u8
    }

    fn points(&self) -> Vec<Point> {
        let w = self.width as i64;
        let (ox, oy) = ((self.origin as i64) % w, (self.origin as i64) / w);
        self.cells[..self.placed]
            .iter()
            .map(|&c| Point::new(((c as i64) % w - ox) as i32, ((c as i64) / w - oy) as i32))
            .collect()
    }

    /// Step indices allowed next under the first-step/first-turn rule.
    fn allowed(&self) -> &'static [usize] {
        if self.placed == 1 {
            &[0]
        } else if self.first_turn.is_none() {
            &[0, 1]
        } else {
            match self.steps[self.steps.len() - 1] {
                0 => &[0, 1, 3],
                1 => &[0, 1, 2],
                2 => &[1, 2, 3],
                _ => &[0, 2, 3],
            }
        }
    }

    fn manhattan_to_origin(&self, cell: usize) -> usize {
        let w = self.width;
        let (x, y) = (cell % w, cell / w);
        let (ox, oy) = (self.origin % w, self.origin / w);
        x.abs_diff(ox) + y.abs_diff(oy)
    }

    /// Depth-first search below the current partial walk.
    pub fn search(&mut self) {
        if self.placed == self.n {
            self.record_leaf();
            return;
        }
        self.tally.nodes += 1;
        if self.pruning && (self.contacts as i32 + self.future_bound()) < self.threshold() as i32 {
            self.tally.pruned += 1;
            return;
        }
        let here = self.cells[self.placed - 1];
        if self.closed && self.manhattan_to_origin(here) > self.n - (self.placed - 1) {
            return;
        }
        for &d in self.allowed() {
            let next = self.neighbor(here, d);
            if self.grid[next] != 0 {
                continue;
            }
            if self.closed && self.placed == self.n - 1 && self.manhattan_to_origin(next) != 1 {
                continue;
            }
            self.push_step(d);
            self.search();
            self.pop_step();
        }
    }

    /// All symmetry-reduced partial walks with `depth` steps (or complete
    /// walks, if shorter), in lexicographic order.
    pub fn prefixes(&mut self, depth: usize, out: &mut Vec<Vec<u8>>) {
        if self.placed == self.n || self.steps.len() == depth {
            out.push(self.steps.clone());
            return;
        }
        let here = self.cells[self.placed - 1];
        if self.closed && self.manhattan_to_origin(here) > self.n - (self.placed - 1) {
            return;
        }
        for &d in self.allowed() {
            let next = self.neighbor(here, d);
            if self.grid[next] != 0 {
                continue;
            }
            if self.closed && self.placed == self.n - 1 && self.manhattan_to_origin(next) != 1 {
                continue;
            }
            self.push_step(d);
            self.prefixes(depth, out);
            self.pop_step();
        }
    }
}

pub(crate) fn steps_to_folding(steps: &[u8]) -> Folding {
    Folding::new(steps.iter().map(|&d| Dir::from_index(d as usize)).collect())
}

fn orbit_key(points: &[Point], maps: &[ChainMap], closed: bool) -> Vec<u8> {
    let topology = if closed { Topology::Closed } else { Topology::Open };
    orbit_key_of_points(points, maps, topology).steps().iter().map(|d| d.index() as u8).collect()
}
