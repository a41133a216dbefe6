//! Partition tree weights.
//!
//! An admissible ordered tree contributes `∏ 1/k_p`; a tree's weight sums the
//! contributions of its admissible orderings. The same value is available
//! through the edge monomial of the trace, integrated in closed form.

use crate::error::{Error, Result};
use crate::graph::{Multigraph, OrderedTree, Tree};
use crate::partition::Partition;
use crate::rational::Rational;
use crate::trace::{build_trace, for_each_admissible};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedWeight {
    pub order: OrderedTree,
    pub k: Vec<usize>,
    pub weight: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeWeight {
    pub tree: Tree,
    pub weight: Rational,
    pub orderings: Vec<OrderedWeight>,
}

/// Weights of every spanning tree, sorted by edge set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightReport {
    pub partition: Partition,
    pub rows: Vec<TreeWeight>,
}

impl WeightReport {
    pub fn total(&self) -> Rational {
        self.rows.iter().map(|r| &r.weight).sum()
    }

    pub fn get(&self, tree: &Tree) -> Option<&TreeWeight> {
        self.rows
            .binary_search_by(|r| r.tree.cmp(tree))
            .ok()
            .map(|i| &self.rows[i])
    }

    pub fn weight_of(&self, tree: &Tree) -> Option<&Rational> {
        self.get(tree).map(|r| &r.weight)
    }

    pub fn ordered_count(&self) -> usize {
        self.rows.iter().map(|r| r.orderings.len()).sum()
    }
}

fn check_inputs(g: &Multigraph, partition: &Partition) -> Result<()> {
    partition.check_against(g)?;
    if partition.is_trivial() {
        return Err(Error::TrivialPartition);
    }
    g.require_connected()
}

/// `∏ 1/k_p` along the trace of an admissible ordered tree.
pub fn ordered_weight(g: &Multigraph, partition: &Partition, tree: &OrderedTree) -> Result<Rational> {
    let trace = build_trace(g, partition, tree)?;
    let weight = trace.weight();
    debug_assert_eq!(
        Some(&weight),
        trace.edge_monomial().ok().map(|m| m.integrate()).as_ref()
    );
    Ok(weight)
}

/// The same weight by integrating the trace's edge monomial.
pub fn ordered_weight_by_integration(
    g: &Multigraph,
    partition: &Partition,
    tree: &OrderedTree,
) -> Result<Rational> {
    Ok(build_trace(g, partition, tree)?.edge_monomial()?.integrate())
}

fn tree_row(g: &Multigraph, partition: &Partition, tree: &Tree) -> TreeWeight {
    let mut orderings = Vec::new();
    for_each_admissible(g, partition, tree, |order, k| {
        orderings.push(OrderedWeight {
            order: OrderedTree::new(order.to_vec()),
            k: k.to_vec(),
            weight: Rational::reciprocal_product(k.iter().map(|&x| x as u64)),
        });
    });
    let weight = orderings.iter().map(|o| &o.weight).sum();
    TreeWeight {
        tree: tree.clone(),
        weight,
        orderings,
    }
}

/// Sum of ordered weights over all admissible orderings of `tree`.
pub fn tree_weight(g: &Multigraph, partition: &Partition, tree: &Tree) -> Result<Rational> {
    check_inputs(g, partition)?;
    g.check_spanning_tree(tree.edges())?;
    Ok(tree_row(g, partition, tree).weight)
}

/// Weights of all spanning trees of `g` for `partition`. They sum to one.
pub fn weight_distribution(g: &Multigraph, partition: &Partition) -> Result<WeightReport> {
    check_inputs(g, partition)?;
    let trees = g.spanning_trees()?;
    #[cfg(feature = "parallel")]
    let rows = {
        use rayon::prelude::*;
        trees
            .par_iter()
            .map(|t| tree_row(g, partition, t))
            .collect()
    };
    #[cfg(not(feature = "parallel"))]
    let rows = trees.iter().map(|t| tree_row(g, partition, t)).collect();
    Ok(WeightReport {
        partition: partition.clone(),
        rows,
    })
}

/// Weights for the all-singletons partition, which reproduce the symmetric
/// (Hepp sector) weights.
pub fn symmetric_via_partition(g: &Multigraph) -> Result<WeightReport> {
    weight_distribution(g, &Partition::singletons(g.vertex_count()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{triangle, kite};
    use crate::io::parse_partition;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn kite_ordered_weights_of_t125() {
        let g = kite();
        let p = parse_partition("v1|v2|v3,v4", &g).unwrap();
        let t = g.ordered_from_ids(&["l1", "l2", "l5"]).unwrap();
        assert_eq!(ordered_weight(&g, &p, &t).unwrap(), r(1, 40));
        assert_eq!(ordered_weight_by_integration(&g, &p, &t).unwrap(), r(1, 40));

        let tree = g.tree_from_ids(&["l1", "l2", "l5"]).unwrap();
        let report = weight_distribution(&g, &p).unwrap();
        let row = report.get(&tree).unwrap();
        let mut got: Vec<Rational> = row.orderings.iter().map(|o| o.weight.clone()).collect();
        got.sort();
        let mut want = vec![r(1, 40), r(1, 80), r(1, 50), r(1, 100), r(1, 100), r(1, 100)];
        want.sort();
        assert_eq!(got, want);
        assert_eq!(row.weight, r(7, 80));
    }

    #[test]
    fn kite_tree_weights() {
        let g = kite();
        let p = parse_partition("v1|v2|v3,v4", &g).unwrap();
        let w = |ids: &[&str]| tree_weight(&g, &p, &g.tree_from_ids(ids).unwrap()).unwrap();
        assert_eq!(w(&["l1", "l2", "l5"]), r(7, 80));
        assert_eq!(w(&["l1", "l5", "l6"]), r(17, 400));
    }

    #[test]
    fn triangle_weights() {
        let g = triangle();
        let p1 = parse_partition("v1|v2,v3", &g).unwrap();
        assert_eq!(
            tree_weight(&g, &p1, &g.tree_from_ids(&["l1", "l3"]).unwrap()).unwrap(),
            r(1, 6)
        );
        let p2 = parse_partition("v2|v1,v3", &g).unwrap();
        let t12 = g.ordered_from_ids(&["l1", "l2"]).unwrap();
        assert_eq!(ordered_weight(&g, &p2, &t12).unwrap(), r(1, 9));

        let report = weight_distribution(&g, &p1).unwrap();
        let weights: Vec<Rational> = report.rows.iter().map(|row| row.weight.clone()).collect();
        assert_eq!(weights, vec![r(1, 3), r(1, 6), r(1, 6), r(1, 6), r(1, 6)]);
        assert!(report.total().is_one());
    }

    #[test]
    fn single_edge_and_parallel_pair() {
        let g = Multigraph::new(["v1", "v2"], [("l1", "v1", "v2")]).unwrap();
        let report = weight_distribution(&g, &Partition::singletons(2)).unwrap();
        assert_eq!(report.rows.len(), 1);
        assert!(report.rows[0].weight.is_one());

        let g = Multigraph::new(["v1", "v2"], [("l1", "v1", "v2"), ("l2", "v1", "v2")]).unwrap();
        let report = symmetric_via_partition(&g).unwrap();
        let weights: Vec<Rational> = report.rows.iter().map(|row| row.weight.clone()).collect();
        assert_eq!(weights, vec![r(1, 2), r(1, 2)]);
    }

    #[test]
    fn input_errors() {
        let g = triangle();
        assert_eq!(
            weight_distribution(&g, &Partition::trivial(3)).unwrap_err(),
            Error::TrivialPartition
        );
        let single = Multigraph::new(["v1"], [("l1", "v1", "v1")]).unwrap();
        assert_eq!(
            symmetric_via_partition(&single).unwrap_err(),
            Error::TrivialPartition
        );
        let split = Multigraph::new(["a", "b", "c"], [("x", "a", "b")]).unwrap();
        assert_eq!(
            weight_distribution(&split, &Partition::singletons(3)).unwrap_err(),
            Error::Disconnected
        );
        let p = Partition::singletons(3);
        let cyc = g.tree_from_ids(&["l3", "l4"]).unwrap();
        assert_eq!(tree_weight(&g, &p, &cyc).unwrap_err().code(), "NotASpanningTree");
    }

    #[test]
    fn self_loops_do_not_change_weights() {
        let g = triangle();
        let looped = Multigraph::new(
            ["v1", "v2", "v3"],
            [
                ("l1", "v1", "v2"),
                ("l2", "v1", "v3"),
                ("l3", "v2", "v3"),
                ("l4", "v2", "v3"),
                ("t1", "v2", "v2"),
                ("t2", "v3", "v3"),
            ],
        )
        .unwrap();
        for spec in ["v1|v2,v3", "v2|v1,v3", "v1|v2|v3"] {
            let a = weight_distribution(&g, &parse_partition(spec, &g).unwrap()).unwrap();
            let b = weight_distribution(&looped, &parse_partition(spec, &looped).unwrap()).unwrap();
            assert_eq!(a.rows, b.rows, "partition {spec}");
        }
    }
}
