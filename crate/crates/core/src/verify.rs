//! Named verification suites: each checks a family of reference claims by
//! exhaustive search and reports expected against observed values.

use crate::chain::Topology;
use crate::contacts::{bond_graph_shape, contacts, ShapeKind};
use crate::error::Result;
use crate::families::{gen_f, gen_php, gen_s, gen_z, standard_z_embedding};
use crate::folding::equivalent;
use crate::search::{enumerate_optimal, SearchOptions};
use crate::survey::{find_unique_examples, sweep, SurveyOptions};
use serde::{Deserialize, Serialize};
use std::str::FromStr;

/// Reference counts `(n, unique, total, percentage)` of open chains with a
/// unique optimal folding.
pub const UNIQUE_COUNTS: [(usize, u64, u64, f64); 10] = [
    (11, 65, 2_048, 3.174),
    (12, 88, 4_096, 2.148),
    (13, 179, 8_192, 2.185),
    (14, 387, 16_384, 2.362),
    (15, 864, 32_768, 2.637),
    (16, 1_547, 65_536, 2.361),
    (17, 3_420, 131_072, 2.609),
    (18, 6_363, 262_144, 2.427),
    (19, 13_486, 524_288, 2.572),
    (20, 24_925, 1_048_576, 2.377),
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Sk,
    ZEven,
    ZOdd,
    Php,
    Table1Small,
    Exceptions,
}

impl Suite {
    pub const ALL: [Suite; 6] = [Suite::Sk, Suite::ZEven, Suite::ZOdd, Suite::Php, Suite::Table1Small, Suite::Exceptions];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Sk => "sk",
            Suite::ZEven => "z-even",
            Suite::ZOdd => "z-odd",
            Suite::Php => "php",
            Suite::Table1Small => "table1-small",
            Suite::Exceptions => "exceptions",
        }
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Claim {
    pub claim: String,
    pub expected: String,
    pub observed: String,
    pub pass: bool,
}

impl Claim {
    fn new(claim: impl Into<String>, expected: impl ToString, observed: impl ToString) -> Self {
        let (expected, observed) = (expected.to_string(), observed.to_string());
        Claim { claim: claim.into(), pass: expected == observed, expected, observed }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub claims: Vec<Claim>,
    pub passed: bool,
}

pub fn run_suite(suite: Suite, options: &SearchOptions) -> Result<Report> {
    let claims = match suite {
        Suite::Sk => sk(options)?,
        Suite::ZEven => z_even(options)?,
        Suite::ZOdd => z_odd(options)?,
        Suite::Php => php(options)?,
        Suite::Table1Small => table1_small(options)?,
        Suite::Exceptions => exceptions(options)?,
    };
    let passed = claims.iter().all(|c| c.pass);
    Ok(Report { suite: suite.name().to_string(), claims, passed })
}

fn sk(options: &SearchOptions) -> Result<Vec<Claim>> {
    let mut out = Vec::new();
    for k in 1..=7 {
        let chain = gen_s(k)?;
        let r = enumerate_optimal(&chain, options)?;
        out.push(Claim::new(format!("S_{k} optimum"), k - 1, r.optimum));
        out.push(Claim::new(format!("S_{k} optimal classes"), 1, r.class_count));
        let same = r.representatives.first().map(|f| equivalent(&chain, f, &gen_f(k)?)).transpose()?;
        out.push(Claim::new(format!("S_{k} optimum is F_{k}"), true, same.unwrap_or(false)));
    }
    Ok(out)
}

fn z_even(options: &SearchOptions) -> Result<Vec<Claim>> {
    let mut out = Vec::new();
    for j in 1..=4 {
        let chain = gen_z(2 * j)?;
        let r = enumerate_optimal(&chain, options)?;
        out.push(Claim::new(format!("Z_{} optimal classes", 2 * j), 1, r.class_count));
        let same = r.representatives.first().map(|f| equivalent(&chain, f, &standard_z_embedding(j)?)).transpose()?;
        out.push(Claim::new(format!("Z_{} optimum is the standard embedding", 2 * j), true, same.unwrap_or(false)));
    }
    Ok(out)
}

fn z_odd(options: &SearchOptions) -> Result<Vec<Claim>> {
    [(1, 1), (3, 1), (5, 2), (7, 2)]
        .into_iter()
        .map(|(k, expected)| {
            let r = enumerate_optimal(&gen_z(k)?, options)?;
            Ok(Claim::new(format!("Z_{k} optimal classes"), expected, r.class_count))
        })
        .collect()
}

fn php(options: &SearchOptions) -> Result<Vec<Claim>> {
    let mut out = Vec::new();
    let all = SearchOptions { store_limit: usize::MAX, ..*options };
    for topology in [Topology::Open, Topology::Closed] {
        let chain = gen_php(1, topology)?;
        let r = enumerate_optimal(&chain, &all)?;
        out.push(Claim::new(format!("(PHP)^4 {topology} optimum"), 4, r.optimum));
        let mut all_square = r.representatives.len() as u64 == r.class_count;
        for f in &r.representatives {
            let shape = bond_graph_shape(&contacts(&chain, f)?);
            all_square &= shape.kind == ShapeKind::DisjointEvenCycles && shape.component_sizes == [4];
        }
        out.push(Claim::new(format!("(PHP)^4 {topology} bond graphs are one 4-cycle"), true, all_square));
        out.push(Claim::new(format!("(PHP)^4 {topology} has several optimal classes"), true, r.class_count >= 2));
    }
    let r = enumerate_optimal(&gen_php(2, Topology::Open)?, options)?;
    out.push(Claim::new("(PHP)^8 open has several optimal classes", true, r.class_count >= 2));
    Ok(out)
}

fn table1_small(options: &SearchOptions) -> Result<Vec<Claim>> {
    let mut out = Vec::new();
    for &(n, unique, total, pct) in &UNIQUE_COUNTS[..2] {
        let rec = sweep(n, Topology::Open, &SurveyOptions { search: *options, ..SurveyOptions::default() })?;
        out.push(Claim::new(
            format!("n={n} unique/total"),
            format!("{unique}/{total}"),
            format!("{}/{}", rec.unique_count, rec.total_count),
        ));
        out.push(Claim::new(format!("n={n} percentage"), format!("{pct:.3}"), format!("{:.3}", rec.percentage)));
    }
    Ok(out)
}

fn exceptions(options: &SearchOptions) -> Result<Vec<Claim>> {
    (1..=12)
        .map(|n| {
            let found = !find_unique_examples(n, 1, options)?.is_empty();
            Ok(Claim::new(format!("n={n} has a uniquely folding chain"), n != 3 && n != 5, found))
        })
        .collect()
}
