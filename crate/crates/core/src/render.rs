//! ASCII and SVG drawings of a folded chain.

use crate::chain::Chain;
use crate::contacts::contacts_of_embedding;
use crate::error::Result;
use crate::folding::{embed, Folding};
use std::fmt::Write;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenderFormat {
    Ascii,
    Svg,
}

impl FromStr for RenderFormat {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "ascii" | "text" => Ok(RenderFormat::Ascii),
            "svg" => Ok(RenderFormat::Svg),
            other => Err(format!("unknown render format {other:?}")),
        }
    }
}

mod style {
    pub const CELL: f64 = 40.0;
    pub const MARGIN: f64 = 30.0;
    pub const NODE_RADIUS: f64 = 9.0;
    pub const H_FILL: &str = "#b0b0b0";
    pub const P_FILL: &str = "#202020";
    pub const CHAIN_STROKE: &str = "#000000";
    pub const CHAIN_WIDTH: f64 = 4.0;
    pub const BOND_STROKE: &str = "#a0a0a0";
    pub const BOND_WIDTH: f64 = 3.0;
    pub const BOND_DASH: &str = "6 4";
}

pub fn render(chain: &Chain, folding: &Folding, format: RenderFormat) -> Result<String> {
    match format {
        RenderFormat::Ascii => render_ascii(chain, folding),
        RenderFormat::Svg => render_svg(chain, folding),
    }
}

/// Nodes are drawn as their labels on even rows and columns; chain edges are
/// `-` and `|`, bonds are `.` and `:`. North is up.
pub fn render_ascii(chain: &Chain, folding: &Folding) -> Result<String> {
    let emb = embed(chain, folding)?;
    let bonds = contacts_of_embedding(chain, &emb);
    let (lo, hi) = emb.bounding_box();
    let cols = (2 * (hi.x - lo.x) + 1) as usize;
    let rows = (2 * (hi.y - lo.y) + 1) as usize;
    let mut grid = vec![vec![' '; cols]; rows];
    let cell = |x: i32, y: i32| ((2 * (hi.y - y)) as usize, (2 * (x - lo.x)) as usize);
    let mut mark = |a: usize, b: usize, horiz: char, vert: char| {
        let (pa, pb) = (emb.points[a], emb.points[b]);
        let (ra, ca) = cell(pa.x, pa.y);
        let (rb, cb) = cell(pb.x, pb.y);
        grid[(ra + rb) / 2][(ca + cb) / 2] = if ra == rb { horiz } else { vert };
    };
    let n = chain.len();
    for i in 0..chain.step_count() {
        mark(i, (i + 1) % n, '-', '|');
    }
    for &(i, j) in &bonds.contacts {
        mark(i, j, '.', ':');
    }
    for (i, p) in emb.points.iter().enumerate() {
        let (r, c) = cell(p.x, p.y);
        grid[r][c] = chain.labels()[i].as_char();
    }
    let mut out = String::new();
    for row in grid {
        let line: String = row.into_iter().collect();
        out.push_str(line.trim_end());
        out.push('\n');
    }
    Ok(out)
}

pub fn render_svg(chain: &Chain, folding: &Folding) -> Result<String> {
    use style::*;
    let emb = embed(chain, folding)?;
    let bonds = contacts_of_embedding(chain, &emb);
    let (lo, hi) = emb.bounding_box();
    let width = 2.0 * MARGIN + CELL * (hi.x - lo.x) as f64;
    let height = 2.0 * MARGIN + CELL * (hi.y - lo.y) as f64;
    let pos = |i: usize| {
        let p = emb.points[i];
        (MARGIN + CELL * (p.x - lo.x) as f64, MARGIN + CELL * (hi.y - p.y) as f64)
    };
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(s, "<title>{} ({}) folded as {}</title>", chain, chain.topology(), folding);
    let _ = writeln!(
        s,
        r#"<g class="bonds" stroke="{BOND_STROKE}" stroke-width="{BOND_WIDTH}" stroke-dasharray="{BOND_DASH}">"#
    );
    for &(i, j) in &bonds.contacts {
        let ((x1, y1), (x2, y2)) = (pos(i), pos(j));
        let _ = writeln!(s, r#"<line class="bond" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>"#);
    }
    let _ = writeln!(s, "</g>");
    let _ = writeln!(s, r#"<g class="chain" stroke="{CHAIN_STROKE}" stroke-width="{CHAIN_WIDTH}">"#);
    let n = chain.len();
    for i in 0..chain.step_count() {
        let ((x1, y1), (x2, y2)) = (pos(i), pos((i + 1) % n));
        let _ = writeln!(s, r#"<line class="edge" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>"#);
    }
    let _ = writeln!(s, "</g>");
    let _ = writeln!(s, r#"<g class="nodes">"#);
    for i in 0..n {
        let (cx, cy) = pos(i);
        let (class, fill) = if chain.is_h(i) { ("node h", H_FILL) } else { ("node p", P_FILL) };
        let _ = writeln!(
            s,
            r#"<circle class="{class}" data-index="{i}" cx="{cx}" cy="{cy}" r="{NODE_RADIUS}" fill="{fill}"/>"#
        );
    }
    let _ = writeln!(s, "</g>");
    s.push_str("</svg>\n");
    Ok(s)
}
