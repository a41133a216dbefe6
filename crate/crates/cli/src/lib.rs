//! The `treeweights` command line: argument model, command dispatch and
//! output rendering. `main.rs` only wires [`run`] to the process.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use serde::Serialize;
use treeweights_core::io::{decimal6, format_partition, parse_graph, parse_partition, WeightTable};
use treeweights_core::psd::{verify_constructive, PsdConfig, PsdReport};
use treeweights_core::sector::{sector_census, DEFAULT_GUARD};
use treeweights_core::weights::{symmetric_via_partition, weight_distribution};
use treeweights_core::{build_trace, Error, Multigraph, Partition, Rational, WeightReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CHECK_FAILED: i32 = 3;
pub const EXIT_GUARD: i32 = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// List the spanning trees
    Trees,
    /// Symmetric weights by sector census, cross-checked against the all-singletons partition
    Symmetric,
    /// Partition tree weights
    Weights,
    /// Check normalization and the monomial identity exactly
    Verify,
    /// Sample contact matrices and check positive semidefiniteness
    Psd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

/// Exact probability measures on the spanning trees of a multigraph.
#[derive(Clone, Debug, Parser)]
#[command(name = "treeweights", version)]
pub struct RunConfig {
    #[arg(value_enum)]
    pub command: Command,
    /// Graph JSON file
    #[arg(long)]
    pub graph: PathBuf,
    /// Vertex partition, e.g. "v1|v2|v3,v4" (default: all singletons)
    #[arg(long)]
    pub partition: Option<String>,
    #[arg(long, value_enum, default_value = "table")]
    pub format: Format,
    /// Largest edge count allowed for exhaustive sector census
    #[arg(long, default_value_t = DEFAULT_GUARD,
          value_parser = clap::builder::RangedU64ValueParser::<usize>::new().range(1..))]
    pub guard: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 20)]
    pub samples: usize,
    #[arg(long, default_value_t = treeweights_core::psd::DEFAULT_TOLERANCE)]
    pub tol: f64,
    /// Include per-ordering contributions
    #[arg(long)]
    pub breakdown: bool,
}

/// A failure surfaced to the user: exit code plus the underlying error.
#[derive(Debug)]
pub struct CliError {
    pub exit_code: i32,
    pub error: Error,
}

impl From<Error> for CliError {
    fn from(error: Error) -> Self {
        let exit_code = match error {
            Error::EnumerationGuardExceeded { .. } => EXIT_GUARD,
            _ => EXIT_INPUT,
        };
        CliError { exit_code, error }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "error[{}]: {}", self.error.code(), self.error)
    }
}

/// Runs one command, writing the report to `out`. Returns the exit code:
/// `EXIT_OK`, or `EXIT_CHECK_FAILED` when a verification did not hold.
pub fn run(config: &RunConfig, out: &mut dyn Write) -> Result<i32, CliError> {
    let g = parse_graph(&config.graph)?;
    let partition = match &config.partition {
        Some(spec) => parse_partition(spec, &g)?,
        None => Partition::singletons(g.vertex_count()),
    };
    let (text, code) = match config.command {
        Command::Trees => (trees(&g, config.format)?, EXIT_OK),
        Command::Symmetric => symmetric(&g, config)?,
        Command::Weights => {
            let report = weight_distribution(&g, &partition)?;
            (render_weights(&g, &report, config), EXIT_OK)
        }
        Command::Verify => verify(&g, &partition, config.format)?,
        Command::Psd => {
            let cfg = PsdConfig {
                samples: config.samples,
                tolerance: config.tol,
                seed: config.seed,
            };
            let report = verify_constructive(&g, &partition, &cfg)?;
            let code = if report.passed { EXIT_OK } else { EXIT_CHECK_FAILED };
            (render_psd(&g, &partition, &report, config.format), code)
        }
    };
    out.write_all(text.as_bytes())
        .map_err(|e| CliError::from(Error::Io(e.to_string())))?;
    Ok(code)
}

fn csv_string(rows: Vec<Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.write_record(&row).expect("in-memory csv write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf8")
}

fn json_string<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

fn ids(g: &Multigraph, edges: &[usize]) -> Vec<String> {
    g.edge_ids(edges).into_iter().map(String::from).collect()
}

#[derive(Serialize)]
struct TreesJson {
    format: u32,
    command: &'static str,
    count: usize,
    trees: Vec<Vec<String>>,
}

fn trees(g: &Multigraph, format: Format) -> Result<String, CliError> {
    let trees: Vec<Vec<String>> = g
        .spanning_trees()?
        .iter()
        .map(|t| ids(g, t.edges()))
        .collect();
    Ok(match format {
        Format::Json => json_string(&TreesJson {
            format: 1,
            command: "trees",
            count: trees.len(),
            trees,
        }),
        Format::Csv => {
            let mut rows = vec![vec!["tree".to_string()]];
            rows.extend(trees.iter().map(|t| vec![t.join(" ")]));
            csv_string(rows)
        }
        Format::Table => {
            let mut s = format!("spanning trees: {}\n", trees.len());
            for t in &trees {
                let _ = writeln!(s, "  {{{}}}", t.join(","));
            }
            s
        }
    })
}

#[derive(Serialize)]
struct SymmetricRow {
    edges: Vec<String>,
    sectors: u64,
    weight: String,
    partition_weight: String,
    decimal: String,
    agree: bool,
}

#[derive(Serialize)]
struct SymmetricJson {
    format: u32,
    command: &'static str,
    sectors: u64,
    trees: Vec<SymmetricRow>,
    total: String,
    routes_agree: bool,
}

fn symmetric(g: &Multigraph, config: &RunConfig) -> Result<(String, i32), CliError> {
    let census = sector_census(g, config.guard)?;
    let by_partition = symmetric_via_partition(g)?;
    let mut rows = Vec::new();
    let mut all_agree = census.counts.len() == by_partition.rows.len();
    for (tree, &count) in &census.counts {
        let weight = census.weight(tree).expect("tree is in census");
        let other = by_partition.weight_of(tree).cloned().unwrap_or_default();
        let agree = weight == other;
        all_agree &= agree;
        rows.push(SymmetricRow {
            edges: ids(g, tree.edges()),
            sectors: count,
            decimal: decimal6(&weight),
            weight: weight.to_string(),
            partition_weight: other.to_string(),
            agree,
        });
    }
    let total: Rational = census.weights().values().sum();
    let code = if all_agree { EXIT_OK } else { EXIT_CHECK_FAILED };
    let text = match config.format {
        Format::Json => json_string(&SymmetricJson {
            format: 1,
            command: "symmetric",
            sectors: census.total,
            trees: rows,
            total: total.to_string(),
            routes_agree: all_agree,
        }),
        Format::Csv => {
            let mut out = vec![vec![
                "tree".into(),
                "sectors".into(),
                "weight".into(),
                "partition_weight".into(),
                "decimal".into(),
                "agree".into(),
            ]];
            out.extend(rows.into_iter().map(|r| {
                vec![
                    r.edges.join(" "),
                    r.sectors.to_string(),
                    r.weight,
                    r.partition_weight,
                    r.decimal,
                    r.agree.to_string(),
                ]
            }));
            csv_string(out)
        }
        Format::Table => {
            let mut s = format!("sectors: {}\n", census.total);
            let width = rows.iter().map(|r| r.edges.join(",").len()).max().unwrap_or(0) + 2;
            let _ = writeln!(
                s,
                "{:<width$} {:>10} {:>12} {:>12} {:>10}",
                "tree", "sectors", "census", "partition", "decimal"
            );
            for r in &rows {
                let _ = writeln!(
                    s,
                    "{:<width$} {:>10} {:>12} {:>12} {:>10}{}",
                    format!("{{{}}}", r.edges.join(",")),
                    r.sectors,
                    r.weight,
                    r.partition_weight,
                    r.decimal,
                    if r.agree { "" } else { "  MISMATCH" }
                );
            }
            let _ = writeln!(s, "total: {total}");
            let _ = writeln!(
                s,
                "routes agree: {}",
                if all_agree { "yes" } else { "no" }
            );
            s
        }
    };
    Ok((text, code))
}

fn render_weights(g: &Multigraph, report: &WeightReport, config: &RunConfig) -> String {
    let table = WeightTable::new(g, report, config.breakdown);
    match config.format {
        Format::Json => json_string(&table),
        Format::Csv => {
            let mut rows = vec![vec![
                "tree".to_string(),
                "weight".into(),
                "decimal".into(),
                "orderings".into(),
            ]];
            if config.breakdown {
                rows[0].extend(["order".to_string(), "k".into(), "ordered_weight".into()]);
            }
            for row in &table.trees {
                let base = vec![
                    row.edges.join(" "),
                    row.weight.clone(),
                    row.decimal.clone(),
                    row.orderings.to_string(),
                ];
                match &row.breakdown {
                    Some(parts) => {
                        for o in parts {
                            let mut r = base.clone();
                            r.push(o.order.join(" "));
                            r.push(o.k.iter().map(|k| k.to_string()).collect::<Vec<_>>().join(" "));
                            r.push(o.weight.clone());
                            rows.push(r);
                        }
                    }
                    None => rows.push(base),
                }
            }
            csv_string(rows)
        }
        Format::Table => {
            let mut s = format!("partition: {}\n", report.partition.display(g));
            let width = table
                .trees
                .iter()
                .map(|r| r.edges.join(",").len())
                .max()
                .unwrap_or(0)
                + 2;
            let _ = writeln!(
                s,
                "{:<width$} {:>12} {:>10} {:>9}",
                "tree", "weight", "decimal", "orderings"
            );
            for row in &table.trees {
                let _ = writeln!(
                    s,
                    "{:<width$} {:>12} {:>10} {:>9}",
                    format!("{{{}}}", row.edges.join(",")),
                    row.weight,
                    row.decimal,
                    row.orderings
                );
                for o in row.breakdown.iter().flatten() {
                    let k: Vec<String> = o.k.iter().map(|k| k.to_string()).collect();
                    let _ = writeln!(
                        s,
                        "    ({}) k=({}) {}",
                        o.order.join(","),
                        k.join(","),
                        o.weight
                    );
                }
            }
            let _ = writeln!(s, "total: {}", table.total);
            s
        }
    }
}

#[derive(Serialize)]
struct VerifyJson {
    format: u32,
    command: &'static str,
    partition: String,
    total: String,
    normalized: bool,
    ordered_trees: usize,
    exponent_law: bool,
    routes_agree: bool,
    passed: bool,
}

fn verify(g: &Multigraph, partition: &Partition, format: Format) -> Result<(String, i32), CliError> {
    let report = weight_distribution(g, partition)?;
    let total = report.total();
    let normalized = total.is_one();
    let mut exponent_law = true;
    let mut routes_agree = true;
    for row in &report.rows {
        for o in &row.orderings {
            let trace = build_trace(g, partition, &o.order)?;
            let monomial = trace.edge_monomial()?;
            exponent_law &= monomial
                .exponents
                .iter()
                .zip(trace.k_values())
                .all(|(&e, &k)| e as usize + 1 == k);
            routes_agree &= monomial.integrate() == o.weight;
        }
    }
    let passed = normalized && exponent_law && routes_agree;
    let summary = VerifyJson {
        format: 1,
        command: "verify",
        partition: format_partition(partition, g),
        total: total.to_string(),
        normalized,
        ordered_trees: report.ordered_count(),
        exponent_law,
        routes_agree,
        passed,
    };
    let ok = |b: bool| if b { "ok" } else { "FAILED" };
    let text = match format {
        Format::Json => json_string(&summary),
        Format::Csv => csv_string(vec![
            vec!["check".into(), "result".into()],
            vec!["normalization".into(), ok(normalized).into()],
            vec!["exponent_law".into(), ok(exponent_law).into()],
            vec!["routes_agree".into(), ok(routes_agree).into()],
        ]),
        Format::Table => format!(
            "partition: {}\nnormalization: {} (sum = {})\nexponent law: {} ({} ordered trees)\nk-product = monomial integral: {}\n",
            partition.display(g),
            ok(normalized),
            total,
            ok(exponent_law),
            summary.ordered_trees,
            ok(routes_agree)
        ),
    };
    let code = if passed { EXIT_OK } else { EXIT_CHECK_FAILED };
    Ok((text, code))
}

#[derive(Serialize)]
struct PsdJson<'a> {
    format: u32,
    command: &'static str,
    partition: String,
    #[serde(flatten)]
    report: &'a PsdReport,
}

fn render_psd(g: &Multigraph, partition: &Partition, report: &PsdReport, format: Format) -> String {
    match format {
        Format::Json => json_string(&PsdJson {
            format: 1,
            command: "psd",
            partition: format_partition(partition, g),
            report,
        }),
        Format::Csv => {
            let mut rows = vec![vec![
                "tree".to_string(),
                "order".into(),
                "u".into(),
                "min_eigenvalue".into(),
                "discrepancy".into(),
            ]];
            for p in &report.points {
                let u: Vec<String> = p.u.iter().map(|x| x.to_string()).collect();
                rows.push(vec![
                    p.tree.join(" "),
                    p.order.join(" "),
                    u.join(" "),
                    p.min_eigenvalue.to_string(),
                    p.discrepancy.to_string(),
                ]);
            }
            csv_string(rows)
        }
        Format::Table => format!(
            "partition: {}\nordered trees: {}\nsamples per tree: {} (seed {})\nminimum eigenvalue: {:.3e}\nmax |direct - recursion|: {:.3e}\nunit diagonal, entries in [0,1], endpoints: {}\ntree measures normalized: {}\nresult: {}\n",
            partition.display(g),
            report.ordered_trees,
            report.samples,
            report.seed,
            report.min_eigenvalue,
            report.max_discrepancy,
            if report.structure_ok { "ok" } else { "FAILED" },
            if report.tree_measures_normalized { "ok" } else { "FAILED" },
            if report.passed { "pass" } else { "FAIL" },
        ),
    }
}
