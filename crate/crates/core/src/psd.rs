//! Contact matrices and numerical checks of their positivity.
//!
//! This is the only floating-point module. A contact matrix is built two
//! ways: directly from contact indices, and by the barycentric recursion
//! `X_p = u_p X_{p-1} + (1 - u_p) X_{p-1}^{Π_{p-1}}` starting from the
//! all-ones matrix. Both must agree, and the result must be positive
//! semidefinite for every `u ∈ [0,1]^{|V|-1}`.

use nalgebra::{DMatrix, SymmetricEigen};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Multigraph, OrderedTree};
use crate::partition::Partition;
use crate::rational::Rational;
use crate::trace::{build_trace, ContractionTrace};
use crate::weights::weight_distribution;

pub const DEFAULT_TOLERANCE: f64 = 1e-10;

/// Contact matrix at one interpolation point, indexed by original vertices.
#[derive(Clone, Debug, PartialEq)]
pub struct ContactMatrix {
    pub values: DMatrix<f64>,
    pub u: Vec<f64>,
}

impl ContactMatrix {
    pub fn size(&self) -> usize {
        self.values.nrows()
    }

    pub fn max_abs_diff(&self, other: &ContactMatrix) -> f64 {
        (&self.values - &other.values).amax()
    }
}

fn check_u(trace: &ContractionTrace<'_>, u: &[f64]) -> Result<()> {
    let expected = trace.order().len();
    if u.len() != expected {
        return Err(Error::BadDimension {
            expected,
            got: u.len(),
        });
    }
    if let Some((index, &value)) = u
        .iter()
        .enumerate()
        .find(|(_, x)| !(0.0..=1.0).contains(*x))
    {
        return Err(Error::OutOfRange { index, value });
    }
    Ok(())
}

/// Entry `(v, w)` is `∏ u_k` over `i(v,w) < k ≤ j(v,w)`.
pub fn contact_matrix_direct(trace: &ContractionTrace<'_>, u: &[f64]) -> Result<ContactMatrix> {
    check_u(trace, u)?;
    let n = trace.graph().vertex_count();
    let steps = u.len();
    let mut values = DMatrix::from_element(n, n, 1.0);
    for v in 0..n {
        for w in (v + 1)..n {
            let range = trace.contact_indices(v, w)?.x_range(steps);
            let x: f64 = range.map(|k| u[k - 1]).product();
            values[(v, w)] = x;
            values[(w, v)] = x;
        }
    }
    Ok(ContactMatrix {
        values,
        u: u.to_vec(),
    })
}

/// Builds the same matrix through the projection recursion. The projection
/// at step `p` keeps `(v, w)` iff their images share a block of `Π_p`.
pub fn contact_matrix_recursion(trace: &ContractionTrace<'_>, u: &[f64]) -> Result<ContactMatrix> {
    check_u(trace, u)?;
    let n = trace.graph().vertex_count();
    let mut x = DMatrix::from_element(n, n, 1.0);
    for (p, &up) in u.iter().enumerate() {
        let step = trace.step(p);
        let mut projected = x.clone();
        for v in 0..n {
            for w in 0..n {
                if !step.same_block(v, w) {
                    projected[(v, w)] = 0.0;
                }
            }
        }
        x = x * up + projected * (1.0 - up);
    }
    Ok(ContactMatrix {
        values: x,
        u: u.to_vec(),
    })
}

/// Smallest eigenvalue of a symmetric matrix.
pub fn min_eigenvalue(m: &DMatrix<f64>, tol: f64) -> Result<f64> {
    if !m.is_square() || (m - m.transpose()).amax() > tol {
        return Err(Error::NotSymmetric);
    }
    if m.nrows() == 0 {
        return Ok(0.0);
    }
    Ok(SymmetricEigen::new(m.clone()).eigenvalues.min())
}

/// True iff every eigenvalue is at least `-tol`.
pub fn check_psd(m: &DMatrix<f64>, tol: f64) -> Result<bool> {
    Ok(min_eigenvalue(m, tol)? >= -tol)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PsdConfig {
    pub samples: usize,
    pub tolerance: f64,
    pub seed: u64,
}

impl Default for PsdConfig {
    fn default() -> Self {
        PsdConfig {
            samples: 20,
            tolerance: DEFAULT_TOLERANCE,
            seed: 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SamplePoint {
    pub tree: Vec<String>,
    pub order: Vec<String>,
    pub u: Vec<f64>,
    pub min_eigenvalue: f64,
    pub discrepancy: f64,
}

/// Outcome of [`verify_constructive`].
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PsdReport {
    pub seed: u64,
    pub samples: usize,
    pub tolerance: f64,
    pub ordered_trees: usize,
    pub points: Vec<SamplePoint>,
    pub min_eigenvalue: f64,
    pub max_discrepancy: f64,
    /// Diagonals exactly one, entries in `[0, 1]`, and the `u = 1` / `u = 0`
    /// endpoints exactly all-ones / identity, on every trace.
    pub structure_ok: bool,
    /// For each tree `T`, the measure on `G = T` has total mass exactly one.
    pub tree_measures_normalized: bool,
    pub passed: bool,
}

/// Seed for one trace, derived from the run seed and the trace position.
fn trace_seed(seed: u64, tree: usize, order: usize) -> u64 {
    let mut z = seed ^ ((tree as u64) << 32 | order as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn structure_holds(m: &ContactMatrix) -> bool {
    let n = m.size();
    (0..n).all(|v| m.values[(v, v)] == 1.0)
        && m.values.iter().all(|&x| (0.0..=1.0).contains(&x))
}

fn endpoints_hold(trace: &ContractionTrace<'_>) -> Result<bool> {
    let steps = trace.order().len();
    let n = trace.graph().vertex_count();
    let ones = vec![1.0; steps];
    let zeros = vec![0.0; steps];
    let all_ones = DMatrix::from_element(n, n, 1.0);
    let identity = DMatrix::identity(n, n);
    Ok(contact_matrix_direct(trace, &ones)?.values == all_ones
        && contact_matrix_recursion(trace, &ones)?.values == all_ones
        && contact_matrix_direct(trace, &zeros)?.values == identity
        && contact_matrix_recursion(trace, &zeros)?.values == identity)
}

/// Checks constructive positivity of the weights of `g` for `partition` on
/// every admissible ordered tree at `config.samples` seeded random points.
pub fn verify_constructive(
    g: &Multigraph,
    partition: &Partition,
    config: &PsdConfig,
) -> Result<PsdReport> {
    let report = weight_distribution(g, partition)?;
    let tol = config.tolerance;
    let mut points = Vec::new();
    let mut min_eig = f64::INFINITY;
    let mut max_diff: f64 = 0.0;
    let mut structure_ok = true;
    let mut normalized = true;
    let mut ordered_trees = 0;

    for (ti, row) in report.rows.iter().enumerate() {
        let skeleton = g.edge_subgraph(row.tree.edges());
        let tree_mass = weight_distribution(&skeleton, partition)?.total();
        normalized &= tree_mass == Rational::one();

        for (oi, ordered) in row.orderings.iter().enumerate() {
            ordered_trees += 1;
            let trace = build_trace(g, partition, &ordered.order)?;
            structure_ok &= endpoints_hold(&trace)?;
            let mut rng = ChaCha8Rng::seed_from_u64(trace_seed(config.seed, ti, oi));
            for _ in 0..config.samples {
                let u: Vec<f64> = (0..trace.order().len()).map(|_| rng.gen::<f64>()).collect();
                let direct = contact_matrix_direct(&trace, &u)?;
                let recursive = contact_matrix_recursion(&trace, &u)?;
                let discrepancy = direct.max_abs_diff(&recursive);
                let eig = min_eigenvalue(&direct.values, tol)?;
                structure_ok &= structure_holds(&direct);
                min_eig = min_eig.min(eig);
                max_diff = max_diff.max(discrepancy);
                points.push(SamplePoint {
                    tree: g.edge_ids(row.tree.edges()).iter().map(|s| s.to_string()).collect(),
                    order: g.edge_ids(ordered.order.order()).iter().map(|s| s.to_string()).collect(),
                    u,
                    min_eigenvalue: eig,
                    discrepancy,
                });
            }
        }
    }
    if !min_eig.is_finite() {
        min_eig = 0.0;
    }
    let passed = structure_ok && normalized && min_eig >= -tol && max_diff <= tol;
    Ok(PsdReport {
        seed: config.seed,
        samples: config.samples,
        tolerance: tol,
        ordered_trees,
        points,
        min_eigenvalue: min_eig,
        max_discrepancy: max_diff,
        structure_ok,
        tree_measures_normalized: normalized,
        passed,
    })
}

/// Convenience for one ordered tree.
pub fn contact_matrix_for(
    g: &Multigraph,
    partition: &Partition,
    tree: &OrderedTree,
    u: &[f64],
) -> Result<ContactMatrix> {
    contact_matrix_direct(&build_trace(g, partition, tree)?, u)
}
