use serde::Serialize;
use treeweights_core::fixtures::{TRIANGLE_JSON, KITE_JSON};
use treeweights_core::io::{decimal6, parse_graph_str, parse_partition, WeightTable};
use treeweights_core::psd::{contact_matrix_direct, contact_matrix_recursion, min_eigenvalue};
use treeweights_core::sector::sector_census;
use treeweights_core::weights::{symmetric_via_partition, weight_distribution};
use treeweights_core::{build_trace, Error, Multigraph, Partition, Result};

const EIGEN_TOLERANCE: f64 = 1e-10;

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("demo output serializes")
}

fn partition_or_singletons(spec: &str, g: &Multigraph) -> Result<Partition> {
    if spec.trim().is_empty() {
        Ok(Partition::singletons(g.vertex_count()))
    } else {
        parse_partition(spec, g)
    }
}

pub fn example_graph(name: &str) -> Result<String> {
    match name {
        "triangle" => Ok(TRIANGLE_JSON.to_string()),
        "kite" => Ok(KITE_JSON.to_string()),
        other => Err(Error::Parse(format!("no example named `{other}`"))),
    }
}

pub fn partition_weights(graph_json: &str, partition: &str) -> Result<String> {
    let g = parse_graph_str(graph_json)?;
    let p = partition_or_singletons(partition, &g)?;
    let report = weight_distribution(&g, &p)?;
    Ok(to_json(&WeightTable::new(&g, &report, true)))
}

#[derive(Serialize)]
struct SymmetricRow {
    edges: Vec<String>,
    sectors: u64,
    census: String,
    partition: String,
    decimal: String,
}

#[derive(Serialize)]
struct SymmetricOut {
    sectors: u64,
    trees: Vec<SymmetricRow>,
    agree: bool,
}

pub fn symmetric_weights(graph_json: &str, guard: usize) -> Result<String> {
    let g = parse_graph_str(graph_json)?;
    let census = sector_census(&g, guard)?;
    let report = symmetric_via_partition(&g)?;
    let mut agree = census.counts.len() == report.rows.len();
    let trees = census
        .counts
        .iter()
        .map(|(t, &count)| {
            let w = census.weight(t).expect("census tree");
            let other = report.weight_of(t).cloned().unwrap_or_default();
            agree &= w == other;
            SymmetricRow {
                edges: g.edge_ids(t.edges()).into_iter().map(String::from).collect(),
                sectors: count,
                decimal: decimal6(&w),
                census: w.to_string(),
                partition: other.to_string(),
            }
        })
        .collect();
    Ok(to_json(&SymmetricOut {
        sectors: census.total,
        trees,
        agree,
    }))
}

#[derive(Serialize)]
struct MatrixOut {
    vertices: Vec<String>,
    /// Row-major entries of the direct construction.
    matrix: Vec<Vec<f64>>,
    /// Contact index pair `(i, j)` per entry.
    contacts: Vec<Vec<[i64; 2]>>,
    k: Vec<usize>,
    weight: String,
    recursion_max_diff: f64,
    min_eigenvalue: f64,
}

/// `order` lists edge ids separated by commas, e.g. `l1,l2,l5`.
pub fn contact_matrix(graph_json: &str, partition: &str, order: &str, u: &[f64]) -> Result<String> {
    let g = parse_graph_str(graph_json)?;
    let p = partition_or_singletons(partition, &g)?;
    let ids: Vec<&str> = order
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .collect();
    let ordered = g.ordered_from_ids(&ids)?;
    let trace = build_trace(&g, &p, &ordered)?;
    let direct = contact_matrix_direct(&trace, u)?;
    let recursive = contact_matrix_recursion(&trace, u)?;
    let n = g.vertex_count();
    let mut contacts = vec![vec![[0i64; 2]; n]; n];
    for (v, row) in contacts.iter_mut().enumerate() {
        for (w, slot) in row.iter_mut().enumerate() {
            let c = trace.contact_indices(v, w)?;
            *slot = [c.i, c.j];
        }
    }
    Ok(to_json(&MatrixOut {
        vertices: g.vertices().to_vec(),
        matrix: (0..n)
            .map(|v| (0..n).map(|w| direct.values[(v, w)]).collect())
            .collect(),
        contacts,
        k: trace.k_values().to_vec(),
        weight: trace.weight().to_string(),
        recursion_max_diff: direct.max_abs_diff(&recursive),
        min_eigenvalue: min_eigenvalue(&direct.values, EIGEN_TOLERANCE)?,
    }))
}
