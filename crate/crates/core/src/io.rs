//! External formats: graph JSON, partition syntax and serialized weight tables.
//!
//! Graph JSON:
//!
//! ```json
//! { "vertices": ["v1", "v2"], "edges": [ { "id": "l1", "ends": ["v1", "v2"] } ] }
//! ```
//!
//! Partition syntax: blocks separated by `|`, members by `,`, whitespace
//! ignored, e.g. `v1|v2|v3,v4`.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Multigraph;
use crate::partition::Partition;
use crate::rational::Rational;
use crate::weights::WeightReport;

/// Version of the JSON output schema.
pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphFile {
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeRecord {
    pub id: String,
    pub ends: [String; 2],
}

impl GraphFile {
    pub fn into_graph(self) -> Result<Multigraph> {
        Multigraph::new(
            self.vertices,
            self.edges.into_iter().map(|e| {
                let [a, b] = e.ends;
                (e.id, a, b)
            }),
        )
    }

    pub fn from_graph(g: &Multigraph) -> Self {
        GraphFile {
            vertices: g.vertices().to_vec(),
            edges: g
                .edges()
                .iter()
                .map(|e| EdgeRecord {
                    id: e.id.clone(),
                    ends: [
                        g.vertex_id(e.ends[0]).to_string(),
                        g.vertex_id(e.ends[1]).to_string(),
                    ],
                })
                .collect(),
        }
    }
}

pub fn parse_graph_str(text: &str) -> Result<Multigraph> {
    let file: GraphFile = serde_json::from_str(text).map_err(|e| {
        Error::Parse(format!("line {}, column {}: {}", e.line(), e.column(), e))
    })?;
    file.into_graph()
}

pub fn parse_graph(path: impl AsRef<Path>) -> Result<Multigraph> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_graph_str(&text)
}

pub fn graph_to_json(g: &Multigraph) -> String {
    serde_json::to_string_pretty(&GraphFile::from_graph(g)).expect("graph serializes")
}

pub fn parse_partition(spec: &str, g: &Multigraph) -> Result<Partition> {
    let compact: String = spec.chars().filter(|c| !c.is_whitespace()).collect();
    let blocks: Vec<Vec<&str>> = compact
        .split('|')
        .map(|block| {
            if block.is_empty() {
                Vec::new()
            } else {
                block.split(',').collect()
            }
        })
        .collect();
    if blocks.iter().flatten().any(|v| v.is_empty()) {
        return Err(Error::Parse(format!("empty vertex name in `{spec}`")));
    }
    Partition::from_named_blocks(g, &blocks)
}

pub fn format_partition(p: &Partition, g: &Multigraph) -> String {
    p.blocks()
        .iter()
        .map(|b| {
            b.iter()
                .map(|&v| g.vertex_id(v))
                .collect::<Vec<_>>()
                .join(",")
        })
        .collect::<Vec<_>>()
        .join("|")
}

/// Decimal rendering with six significant digits, for display only.
pub fn decimal6(r: &Rational) -> String {
    let x = r.to_f64();
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let decimals = (5 - x.abs().log10().floor() as i32).max(0) as usize;
    format!("{x:.decimals$}")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderingRow {
    pub order: Vec<String>,
    pub k: Vec<usize>,
    pub weight: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightRow {
    pub edges: Vec<String>,
    pub weight: String,
    pub decimal: String,
    pub orderings: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub breakdown: Option<Vec<OrderingRow>>,
}

/// Serialized form of a [`WeightReport`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightTable {
    pub format: u32,
    pub partition: String,
    pub trees: Vec<WeightRow>,
    pub total: String,
}

impl WeightTable {
    pub fn new(g: &Multigraph, report: &WeightReport, breakdown: bool) -> Self {
        let ids = |edges: &[usize]| g.edge_ids(edges).into_iter().map(String::from).collect();
        let trees = report
            .rows
            .iter()
            .map(|row| WeightRow {
                edges: ids(row.tree.edges()),
                weight: row.weight.to_string(),
                decimal: decimal6(&row.weight),
                orderings: row.orderings.len(),
                breakdown: breakdown.then(|| {
                    row.orderings
                        .iter()
                        .map(|o| OrderingRow {
                            order: ids(o.order.order()),
                            k: o.k.clone(),
                            weight: o.weight.to_string(),
                        })
                        .collect()
                }),
            })
            .collect();
        WeightTable {
            format: FORMAT_VERSION,
            partition: format_partition(&report.partition, g),
            trees,
            total: report.total().to_string(),
        }
    }

    /// Re-parses the fraction column and sums it exactly.
    pub fn exact_total(&self) -> Result<Rational> {
        self.trees
            .iter()
            .map(|r| r.weight.parse::<Rational>())
            .sum::<Result<Rational>>()
    }
}
