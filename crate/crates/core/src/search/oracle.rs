//! Reference enumerator: every self-avoiding walk with its first step fixed
//! to E, no pruning, classes found by canonicalizing into a set.

use super::{SearchOptions, SearchResult, SearchStats};
use crate::chain::Chain;
use crate::contacts::contacts;
use crate::error::{Error, Result};
use crate::folding::{canonicalize, embed, relabel, Folding};
use crate::lattice::{Dir, Point};
use std::collections::{BTreeSet, HashSet};
use std::time::Instant;

/// Default length ceiling for [`naive_oracle`].
pub const NAIVE_LIMIT: usize = 14;

pub fn naive_oracle(chain: &Chain) -> Result<SearchResult> {
    naive_oracle_with(chain, &SearchOptions::default(), NAIVE_LIMIT)
}

pub fn naive_oracle_with(chain: &Chain, options: &SearchOptions, limit: usize) -> Result<SearchResult> {
    if chain.len() > limit {
        return Err(Error::TooLong { len: chain.len(), limit });
    }
    let start = Instant::now();
    let mut walks = Vec::new();
    let mut path = vec![Point::ORIGIN];
    let mut seen = HashSet::from([Point::ORIGIN]);
    let mut steps = Vec::new();
    collect_walks(chain, &mut path, &mut seen, &mut steps, &mut walks);

    let mut optimum = 0;
    let mut optimal: Vec<Folding> = Vec::new();
    for f in walks.iter() {
        let c = contacts(chain, f)?.len();
        if c > optimum || optimal.is_empty() {
            if c > optimum {
                optimum = c;
            }
            optimal.clear();
        }
        if c == optimum {
            optimal.push(f.clone());
        }
    }

    let maps = chain.automorphisms();
    let mut classes = BTreeSet::new();
    for f in &optimal {
        let key = if options.quotient_chain_automorphisms {
            let pts = embed(chain, f)?.points;
            maps.iter()
                .map(|&m| canonicalize(&relabel(&pts, m, chain.topology()), chain.topology()))
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .min()
                .expect("identity map present")
        } else {
            canonicalize(f, chain.topology())?
        };
        classes.insert(key);
    }
    Ok(SearchResult {
        chain: chain.clone(),
        optimum,
        class_count: classes.len() as u64,
        representatives: classes.iter().take(options.store_limit).cloned().collect(),
        stats: SearchStats {
            nodes_expanded: walks.len() as u64,
            branches_pruned: 0,
            wall_time_ms: start.elapsed().as_secs_f64() * 1e3,
        },
    })
}

fn collect_walks(
    chain: &Chain,
    path: &mut Vec<Point>,
    seen: &mut HashSet<Point>,
    steps: &mut Vec<Dir>,
    out: &mut Vec<Folding>,
) {
    let n = chain.len();
    if path.len() == n {
        if !chain.is_closed() {
            out.push(Folding::new(steps.clone()));
        } else if let Some(d) = path[n - 1].dir_to(path[0]) {
            let mut closed = steps.clone();
            closed.push(d);
            out.push(Folding::new(closed));
        }
        return;
    }
    let dirs: &[Dir] = if steps.is_empty() { &[Dir::E] } else { &Dir::ALL };
    for &d in dirs {
        let p = path[path.len() - 1].step(d);
        if !seen.insert(p) {
            continue;
        }
        path.push(p);
        steps.push(d);
        collect_walks(chain, path, seen, steps, out);
        steps.pop();
        path.pop();
        seen.remove(&p);
    }
}
