//! Graph ingestion, layout serialization, and SVG book drawings.
//!
//! Edge-list format: an optional header line `p <n> <m>`, then one `u v`
//! pair per line; `#` starts a comment; blank lines and stray whitespace are
//! fine. Without a header, the vertex count is one past the largest id.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hamiltonian::CyclicOrder;
use crate::layout::{verify_layout, BookLayout, PipelineStats};

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut declared: Option<(usize, usize)> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut max_id = None::<usize>;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut fields = line.split_whitespace();
        let first = fields.next().expect("nonempty line");
        if first == "p" {
            if declared.is_some() || !edges.is_empty() {
                return Err(Error::ParseError {
                    line: line_no,
                    msg: "header must come first and appear once".into(),
                });
            }
            let n = parse_field(fields.next(), line_no, "vertex count")?;
            let m = parse_field(fields.next(), line_no, "edge count")?;
            if fields.next().is_some() {
                return Err(Error::ParseError {
                    line: line_no,
                    msg: "header has extra fields".into(),
                });
            }
            declared = Some((n, m));
            continue;
        }
        let u: usize = first.parse().map_err(|_| Error::ParseError {
            line: line_no,
            msg: format!("bad vertex id {first:?}"),
        })?;
        let v = parse_field(fields.next(), line_no, "second endpoint")?;
        if fields.next().is_some() {
            return Err(Error::ParseError { line: line_no, msg: "edge line has extra fields".into() });
        }
        max_id = Some(max_id.map_or(u.max(v), |m: usize| m.max(u).max(v)));
        edges.push((u, v));
    }
    let n = match declared {
        Some((n, m)) => {
            if m != edges.len() {
                return Err(Error::ParseError {
                    line: 1,
                    msg: format!("header declares {m} edges, found {}", edges.len()),
                });
            }
            n
        }
        None => max_id.map_or(0, |m| m + 1),
    };
    Graph::new(n, &edges)
}

fn parse_field(field: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let s = field.ok_or_else(|| Error::ParseError { line, msg: format!("missing {what}") })?;
    s.parse().map_err(|_| Error::ParseError { line, msg: format!("bad {what} {s:?}") })
}

/// Renders a graph in the edge-list format, with header.
pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("p {} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Pipeline counters carried in a layout report.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportProvenance {
    pub augmentation_vertices: usize,
    pub blocks: usize,
    pub search_nodes: u64,
}

impl From<&PipelineStats> for ReportProvenance {
    fn from(s: &PipelineStats) -> Self {
        Self {
            augmentation_vertices: s.augmentation_vertices,
            blocks: s.blocks,
            search_nodes: s.search_nodes,
        }
    }
}

/// A self-contained, serializable record of a layout: the graph, the spine,
/// the page of every edge, and how the layout was produced.
///
/// Keys serialize in the declared (alphabetical) order and the spine is the
/// canonical rotation, so emission is byte-deterministic.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LayoutReport {
    pub edges: Vec<(usize, usize)>,
    pub n: usize,
    pub page_count: usize,
    /// edge "u-v" (u < v) -> page index
    pub pages: BTreeMap<String, usize>,
    pub provenance: ReportProvenance,
    pub spine: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub spine_crossings: Option<usize>,
}

impl LayoutReport {
    pub fn new(g: &Graph, layout: &BookLayout, provenance: ReportProvenance) -> Self {
        let pages = layout
            .pages
            .iter()
            .map(|(&(u, v), &p)| (format!("{u}-{v}"), p))
            .collect();
        Self {
            edges: g.edge_vec(),
            n: g.vertex_count(),
            page_count: layout.page_count,
            pages,
            provenance,
            spine: layout.spine.as_slice().to_vec(),
            spine_crossings: None,
        }
    }

    /// Rebuilds the graph and layout the report describes.
    pub fn reconstruct(&self) -> Result<(Graph, BookLayout)> {
        let g = Graph::new(self.n, &self.edges)?;
        let mut pages = BTreeMap::new();
        for (key, &page) in &self.pages {
            let (a, b) = key.split_once('-').ok_or_else(|| Error::ParseError {
                line: 0,
                msg: format!("bad edge key {key:?}"),
            })?;
            let u: usize = a.parse().map_err(|_| Error::ParseError {
                line: 0,
                msg: format!("bad edge key {key:?}"),
            })?;
            let v: usize = b.parse().map_err(|_| Error::ParseError {
                line: 0,
                msg: format!("bad edge key {key:?}"),
            })?;
            pages.insert((u.min(v), u.max(v)), page);
        }
        let layout = BookLayout {
            spine: CyclicOrder::new(&self.spine),
            pages,
            page_count: self.page_count,
        };
        Ok((g, layout))
    }
}

/// Deterministic JSON for a report: fixed key order, two-space indent,
/// trailing newline.
pub fn emit_layout_json(report: &LayoutReport) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("report serializes");
    s.push('\n');
    s
}

pub fn parse_layout_json(text: &str) -> Result<LayoutReport> {
    serde_json::from_str(text).map_err(|e| Error::ParseError {
        line: e.line(),
        msg: format!("bad layout json: {e}"),
    })
}

const PAGE_COLORS: [&str; 6] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"];
const SPACING: f64 = 60.0;
const MARGIN: f64 = 40.0;

/// Draws the book: vertices as labeled points on a horizontal spine in spine
/// order, page-1 edges as semicircular arcs above, page-2 arcs below, and
/// further pages above in distinct colors with growing heights. Valid
/// layouts yield drawings whose same-page arcs never cross.
pub fn emit_svg(g: &Graph, layout: &BookLayout) -> Result<String> {
    let violations = verify_layout(g, layout)?;
    if !violations.is_empty() {
        return Err(Error::InvalidLayout(violations.len()));
    }

    let n = g.vertex_count();
    let spine_len = SPACING * n.saturating_sub(1) as f64;
    let max_radius = spine_len / 2.0;
    let page_scale = |p: usize| if p <= 2 { 1.0 } else { 1.0 + 0.35 * (p - 2) as f64 };
    let max_scale = layout.pages.values().map(|&p| page_scale(p)).fold(1.0, f64::max);
    let height_above = max_radius * max_scale + MARGIN;
    let height_below = if layout.pages.values().any(|&p| p == 2) {
        max_radius + MARGIN
    } else {
        MARGIN
    };
    let width = spine_len + 2.0 * MARGIN;
    let baseline = height_above;
    let total_height = height_above + height_below;

    let pos: BTreeMap<usize, f64> = layout
        .spine
        .as_slice()
        .iter()
        .enumerate()
        .map(|(i, &v)| (v, MARGIN + SPACING * i as f64))
        .collect();

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.1}" height="{total_height:.1}" viewBox="0 0 {width:.1} {total_height:.1}">"#
    );
    let _ = writeln!(
        svg,
        r##"  <line x1="{:.1}" y1="{baseline:.1}" x2="{:.1}" y2="{baseline:.1}" stroke="#444" stroke-width="1"/>"##,
        MARGIN - 10.0,
        MARGIN + spine_len + 10.0
    );
    for (u, v) in g.edges() {
        let page = layout.pages[&(u, v)];
        let (x1, x2) = (pos[&u].min(pos[&v]), pos[&u].max(pos[&v]));
        let rx = (x2 - x1) / 2.0;
        let ry = rx * page_scale(page);
        let sweep = if page == 2 { 0 } else { 1 };
        let color = PAGE_COLORS[(page - 1) % PAGE_COLORS.len()];
        let _ = writeln!(
            svg,
            r#"  <path d="M {x1:.1} {baseline:.1} A {rx:.1} {ry:.1} 0 0 {sweep} {x2:.1} {baseline:.1}" fill="none" stroke="{color}" stroke-width="1.5"/>"#
        );
    }
    for &v in layout.spine.as_slice() {
        let x = pos[&v];
        let _ = writeln!(svg, r##"  <circle cx="{x:.1}" cy="{baseline:.1}" r="4" fill="#000"/>"##);
        let _ = writeln!(
            svg,
            r#"  <text x="{x:.1}" y="{:.1}" font-size="12" text-anchor="middle" font-family="monospace">{v}</text>"#,
            baseline + 18.0
        );
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}
