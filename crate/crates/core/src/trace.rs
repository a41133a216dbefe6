//! Contraction sequences of (graph, partition) pairs along an ordered forest,
//! and the quantities read off them: trans-block counts `k_p`, contact
//! indices and the edge monomials of the weight integrand.
//!
//! A trace does not materialize the intermediate graphs. Each step keeps the
//! map from original vertices to reduced vertices of `G_p` and the partition
//! `Π_p` over those reduced vertices; [`ContractionTrace::graph_at`] rebuilds
//! `G_p` on demand through [`Multigraph::contract`].

use std::ops::Range;

use crate::error::{Error, Result};
use crate::graph::{contraction_map, Multigraph, OrderedTree, Tree};
use crate::partition::Partition;
use crate::rational::Rational;

/// One contraction state: the original-to-reduced vertex map and the
/// partition of the reduced vertex set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStep {
    pub vertex_map: Vec<usize>,
    pub partition: Partition,
}

impl TraceStep {
    pub fn initial(partition: &Partition) -> Self {
        TraceStep {
            vertex_map: (0..partition.vertex_count()).collect(),
            partition: partition.clone(),
        }
    }

    pub fn reduced_vertex_count(&self) -> usize {
        self.partition.vertex_count()
    }

    /// Ends of `e` in the reduced graph.
    fn reduced_ends(&self, g: &Multigraph, e: usize) -> (usize, usize) {
        let [a, b] = g.edge(e).ends;
        (self.vertex_map[a], self.vertex_map[b])
    }

    pub fn is_trans_block(&self, g: &Multigraph, e: usize) -> bool {
        let (a, b) = self.reduced_ends(g, e);
        !self.partition.same_block(a, b)
    }

    pub fn trans_block_count(&self, g: &Multigraph) -> usize {
        (0..g.edge_count())
            .filter(|&e| self.is_trans_block(g, e))
            .count()
    }

    /// Whether original vertices `v`, `w` sit in one block of the lifted
    /// partition (coinciding images count as one block).
    pub fn same_block(&self, v: usize, w: usize) -> bool {
        self.partition
            .same_block(self.vertex_map[v], self.vertex_map[w])
    }

    pub fn coincide(&self, v: usize, w: usize) -> bool {
        self.vertex_map[v] == self.vertex_map[w]
    }

    /// Contracts `e`, which the caller has checked is trans-block.
    fn contract(&self, g: &Multigraph, e: usize) -> TraceStep {
        let (a, b) = self.reduced_ends(g, e);
        let local = contraction_map(self.reduced_vertex_count(), a, b);
        TraceStep {
            vertex_map: self.vertex_map.iter().map(|&r| local[r]).collect(),
            partition: self.partition.contract_vertices(a, b),
        }
    }
}

/// First and second contact index of a vertex pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ContactIndexPair {
    pub i: i64,
    pub j: i64,
}

impl ContactIndexPair {
    pub const DIAGONAL: ContactIndexPair = ContactIndexPair { i: -1, j: 0 };

    /// Steps `k` with `i < k <= j`, restricted to `1..=steps`.
    pub fn x_range(&self, steps: usize) -> Range<usize> {
        let lo = (self.i + 1).max(1) as usize;
        let hi = (self.j.max(0) as usize).min(steps);
        lo..(hi + 1).max(lo)
    }

    /// Steps `k` with `i < k < j`, restricted to `1..=steps`.
    pub fn y_range(&self, steps: usize) -> Range<usize> {
        let lo = (self.i + 1).max(1) as usize;
        let hi = (self.j.max(0) as usize).min(steps + 1);
        lo..hi.max(lo)
    }
}

/// Exponent vector of a monomial in `u_1 … u_n`; `exponents[p - 1]` is the
/// power of `u_p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Monomial {
    pub exponents: Vec<u32>,
}

impl Monomial {
    pub fn one(vars: usize) -> Self {
        Monomial {
            exponents: vec![0; vars],
        }
    }

    /// Multiplies in `∏_{k ∈ range} u_k`.
    pub fn mul_range(&mut self, range: Range<usize>) {
        for k in range {
            self.exponents[k - 1] += 1;
        }
    }

    /// `∫_{[0,1]^n} ∏ u_p^{e_p} du = ∏ 1/(e_p + 1)`.
    pub fn integrate(&self) -> Rational {
        Rational::reciprocal_product(self.exponents.iter().map(|&e| u64::from(e) + 1))
    }

    pub fn eval(&self, u: &[f64]) -> f64 {
        self.exponents
            .iter()
            .zip(u)
            .map(|(&e, &x)| x.powi(e as i32))
            .product()
    }
}

/// The sequence `{G_p, Π_p}` produced by contracting an ordered forest.
#[derive(Clone, Debug)]
pub struct ContractionTrace<'g> {
    graph: &'g Multigraph,
    order: Vec<usize>,
    steps: Vec<TraceStep>,
    k: Vec<usize>,
}

impl<'g> ContractionTrace<'g> {
    pub fn graph(&self) -> &'g Multigraph {
        self.graph
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// States `0..=order.len()`.
    pub fn steps(&self) -> &[TraceStep] {
        &self.steps
    }

    pub fn step(&self, p: usize) -> &TraceStep {
        &self.steps[p]
    }

    /// `k_p` for `p = 0 … order.len() - 1`.
    pub fn k_values(&self) -> &[usize] {
        &self.k
    }

    pub fn partition_at(&self, p: usize) -> &Partition {
        &self.steps[p].partition
    }

    pub fn final_partition(&self) -> &Partition {
        &self.steps[self.steps.len() - 1].partition
    }

    /// Rebuilds `G_p` by contracting the first `p` edges of the order.
    pub fn graph_at(&self, p: usize) -> Multigraph {
        let mut g = self.graph.clone();
        let mut current: Vec<usize> = (0..g.edge_count()).collect();
        for &e in &self.order[..p] {
            let pos = current.iter().position(|&x| x == e).expect("edge present");
            let (h, _) = g.contract(pos).expect("trace edges are never loops");
            current.remove(pos);
            g = h;
        }
        g
    }

    /// `∏ 1/k_p`.
    pub fn weight(&self) -> Rational {
        Rational::reciprocal_product(self.k.iter().map(|&k| k as u64))
    }

    pub fn contact_indices(&self, v: usize, w: usize) -> Result<ContactIndexPair> {
        let n = self.graph.vertex_count();
        for x in [v, w] {
            if x >= n {
                return Err(Error::UnknownVertex(format!("#{x}")));
            }
        }
        if v == w {
            return Ok(ContactIndexPair::DIAGONAL);
        }
        let i = self.steps.iter().position(|s| !s.same_block(v, w));
        let j = self.steps.iter().position(|s| s.coincide(v, w));
        match (i, j) {
            (Some(i), Some(j)) => Ok(ContactIndexPair {
                i: i as i64,
                j: j as i64,
            }),
            _ => Err(Error::NotASpanningTree(
                "contact indices need a complete trace".into(),
            )),
        }
    }

    pub fn contact_indices_by_id(&self, v: &str, w: &str) -> Result<ContactIndexPair> {
        self.contact_indices(self.graph.vertex_index(v)?, self.graph.vertex_index(w)?)
    }

    /// The `u` range of the factor contributed by edge `e`: `Y` (strict upper
    /// bound) for tree edges, `X` otherwise.
    pub fn edge_factor_range(&self, e: usize) -> Result<Range<usize>> {
        let [a, b] = self.graph.edge(e).ends;
        let pair = self.contact_indices(a, b)?;
        let steps = self.order.len();
        Ok(if self.order.contains(&e) {
            pair.y_range(steps)
        } else {
            pair.x_range(steps)
        })
    }

    /// `∏_{ℓ ∈ T} Y_ℓ ∏_{ℓ ∉ T} X_ℓ` as one exponent vector.
    pub fn edge_monomial(&self) -> Result<Monomial> {
        let mut m = Monomial::one(self.order.len());
        for e in 0..self.graph.edge_count() {
            m.mul_range(self.edge_factor_range(e)?);
        }
        Ok(m)
    }
}

fn check_nontrivial(g: &Multigraph, partition: &Partition) -> Result<()> {
    partition.check_against(g)?;
    if partition.is_trivial() {
        return Err(Error::TrivialPartition);
    }
    Ok(())
}

/// Contracts the edges of `order` one by one, requiring each to be
/// trans-block at its step. `order` may be any ordered forest; see
/// [`build_trace`] for spanning trees.
pub fn trace_forest<'g>(
    g: &'g Multigraph,
    partition: &Partition,
    order: &[usize],
) -> Result<ContractionTrace<'g>> {
    partition.check_against(g)?;
    let mut steps = vec![TraceStep::initial(partition)];
    let mut k = Vec::with_capacity(order.len());
    for (p, &e) in order.iter().enumerate() {
        if e >= g.edge_count() {
            return Err(Error::UnknownEdge(format!("#{e}")));
        }
        let current = &steps[p];
        if !current.is_trans_block(g, e) {
            return Err(Error::NotAdmissible { step: p });
        }
        k.push(current.trans_block_count(g));
        let next = current.contract(g, e);
        steps.push(next);
    }
    Ok(ContractionTrace {
        graph: g,
        order: order.to_vec(),
        steps,
        k,
    })
}

/// Full trace of an ordered spanning tree for a non-trivial partition.
pub fn build_trace<'g>(
    g: &'g Multigraph,
    partition: &Partition,
    tree: &OrderedTree,
) -> Result<ContractionTrace<'g>> {
    check_nontrivial(g, partition)?;
    g.check_spanning_tree(tree.order())?;
    trace_forest(g, partition, tree.order())
}

/// Depth-first walk over the admissible orderings of `tree`, calling `visit`
/// with each ordering and its `k` sequence. Only edges that are trans-block
/// at the current step are extended.
pub(crate) fn for_each_admissible<F>(g: &Multigraph, partition: &Partition, tree: &Tree, mut visit: F)
where
    F: FnMut(&[usize], &[usize]),
{
    fn go<F: FnMut(&[usize], &[usize])>(
        g: &Multigraph,
        tree: &[usize],
        used: &mut [bool],
        state: &TraceStep,
        order: &mut Vec<usize>,
        k: &mut Vec<usize>,
        visit: &mut F,
    ) {
        if order.len() == tree.len() {
            visit(order, k);
            return;
        }
        let count = state.trans_block_count(g);
        for (slot, &e) in tree.iter().enumerate() {
            if used[slot] || !state.is_trans_block(g, e) {
                continue;
            }
            used[slot] = true;
            order.push(e);
            k.push(count);
            let next = state.contract(g, e);
            go(g, tree, used, &next, order, k, visit);
            k.pop();
            order.pop();
            used[slot] = false;
        }
    }
    let edges = tree.edges();
    let mut used = vec![false; edges.len()];
    let mut order = Vec::with_capacity(edges.len());
    let mut k = Vec::with_capacity(edges.len());
    go(
        g,
        edges,
        &mut used,
        &TraceStep::initial(partition),
        &mut order,
        &mut k,
        &mut visit,
    );
}

/// Orderings of `tree` that are trans-block at every step. Only the edges of
/// `tree` are consulted, so the result depends on `tree` and `partition`
/// alone; `g` supplies their endpoints.
pub fn admissible_orderings(
    g: &Multigraph,
    tree: &Tree,
    partition: &Partition,
) -> Result<Vec<OrderedTree>> {
    check_nontrivial(g, partition)?;
    g.check_spanning_tree(tree.edges())?;
    let skeleton = g.edge_subgraph(tree.edges());
    let local = Tree::new((0..tree.len()).collect());
    let mut out = Vec::new();
    for_each_admissible(&skeleton, partition, &local, |order, _| {
        out.push(OrderedTree::new(
            order.iter().map(|&i| tree.edges()[i]).collect(),
        ));
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{triangle, kite};

    fn pi(g: &Multigraph, spec: &str) -> Partition {
        crate::io::parse_partition(spec, g).unwrap()
    }

    #[test]
    fn kite_trace_k_values() {
        let g = kite();
        let p = pi(&g, "v1|v2|v3,v4");
        let t = g.ordered_from_ids(&["l1", "l2", "l5"]).unwrap();
        let trace = build_trace(&g, &p, &t).unwrap();
        assert_eq!(trace.k_values(), &[5, 4, 2]);
        assert!(trace.final_partition().is_trivial());
        assert_eq!(trace.weight(), Rational::new(1, 40));
    }

    #[test]
    fn triangle_inadmissible_and_admissible() {
        let g = triangle();
        let p2 = pi(&g, "v2|v1,v3");
        let bad = g.ordered_from_ids(&["l2", "l1"]).unwrap();
        assert_eq!(
            build_trace(&g, &p2, &bad).unwrap_err(),
            Error::NotAdmissible { step: 0 }
        );
        let good = g.ordered_from_ids(&["l3", "l1"]).unwrap();
        assert_eq!(build_trace(&g, &p2, &good).unwrap().k_values(), &[3, 2]);
    }

    #[test]
    fn build_trace_rejects_non_trees_and_trivial_partitions() {
        let g = triangle();
        let p = pi(&g, "v1|v2,v3");
        let cyc = g.ordered_from_ids(&["l3", "l4"]).unwrap();
        assert_eq!(build_trace(&g, &p, &cyc).unwrap_err().code(), "NotASpanningTree");
        let t = g.ordered_from_ids(&["l1", "l2"]).unwrap();
        assert_eq!(
            build_trace(&g, &Partition::trivial(3), &t).unwrap_err(),
            Error::TrivialPartition
        );
    }

    #[test]
    fn contact_indices_examples() {
        let g = triangle();
        let t = g.ordered_from_ids(&["l1", "l2"]).unwrap();
        let trace = build_trace(&g, &pi(&g, "v1|v2,v3"), &t).unwrap();
        assert_eq!(
            trace.contact_indices_by_id("v2", "v3").unwrap(),
            ContactIndexPair { i: 1, j: 2 }
        );
        assert_eq!(
            trace.contact_indices_by_id("v1", "v1").unwrap(),
            ContactIndexPair::DIAGONAL
        );

        let g = kite();
        let t = g.ordered_from_ids(&["l1", "l2", "l5"]).unwrap();
        let trace = build_trace(&g, &pi(&g, "v1|v2|v3,v4"), &t).unwrap();
        assert_eq!(
            trace.contact_indices_by_id("v1", "v4").unwrap(),
            ContactIndexPair { i: 0, j: 3 }
        );
        // l6 = (v3, v4) separates only once v3 is absorbed at step 2
        assert_eq!(
            trace.contact_indices_by_id("v3", "v4").unwrap(),
            ContactIndexPair { i: 2, j: 3 }
        );
        assert_eq!(trace.contact_indices(0, 9).unwrap_err().code(), "UnknownVertex");
    }

    #[test]
    fn monomials_of_kite_orderings() {
        let g = kite();
        let t = g.ordered_from_ids(&["l1", "l2", "l5"]).unwrap();
        let trace = build_trace(&g, &pi(&g, "v1|v2|v3,v4"), &t).unwrap();
        let m = trace.edge_monomial().unwrap();
        assert_eq!(m.exponents, vec![4, 3, 1]);
        assert_eq!(m.integrate(), Rational::new(1, 40));

        let g = triangle();
        let t = g.ordered_from_ids(&["l1", "l2"]).unwrap();
        let trace = build_trace(&g, &pi(&g, "v1|v2,v3"), &t).unwrap();
        assert_eq!(trace.edge_monomial().unwrap().exponents, vec![1, 2]);

        let g = Multigraph::new(["v1", "v2"], [("l1", "v1", "v2")]).unwrap();
        let t = g.ordered_from_ids(&["l1"]).unwrap();
        let trace = build_trace(&g, &Partition::singletons(2), &t).unwrap();
        assert_eq!(trace.edge_monomial().unwrap().exponents, vec![0]);
    }

    #[test]
    fn admissible_counts_kite() {
        let g = kite();
        let p = pi(&g, "v1|v2|v3,v4");
        let count = |ids: &[&str]| {
            admissible_orderings(&g, &g.tree_from_ids(ids).unwrap(), &p)
                .unwrap()
                .len()
        };
        assert_eq!(count(&["l1", "l2", "l5"]), 6);
        assert_eq!(count(&["l2", "l5", "l6"]), 4);
        assert_eq!(count(&["l1", "l5", "l6"]), 3);
    }

    #[test]
    fn admissible_requires_nontrivial() {
        let g = triangle();
        let t = g.tree_from_ids(&["l1", "l2"]).unwrap();
        assert_eq!(
            admissible_orderings(&g, &t, &Partition::trivial(3)).unwrap_err(),
            Error::TrivialPartition
        );
    }

    #[test]
    fn graph_at_matches_iterated_contraction() {
        let g = kite();
        let p = pi(&g, "v1|v2|v3,v4");
        let t = g.ordered_from_ids(&["l1", "l2", "l5"]).unwrap();
        let trace = build_trace(&g, &p, &t).unwrap();
        let mut current = g.clone();
        let mut part = p.clone();
        for (step, &e) in t.order().iter().enumerate() {
            assert_eq!(trace.graph_at(step), current);
            assert_eq!(trace.partition_at(step), &part);
            let local = current.edge_index(&g.edge(e).id).unwrap();
            part = crate::partition::contract_partition(&part, local, &current).unwrap();
            current = current.contract(local).unwrap().0;
        }
        assert_eq!(trace.graph_at(3), current);
        assert_eq!(trace.final_partition(), &part);
    }

    #[test]
    fn ranges_clip_to_parameters() {
        let d = ContactIndexPair::DIAGONAL;
        assert!(d.x_range(3).is_empty());
        assert!(d.y_range(3).is_empty());
        let p = ContactIndexPair { i: 0, j: 3 };
        assert_eq!(p.x_range(3), 1..4);
        assert_eq!(p.y_range(3), 1..3);
        let p = ContactIndexPair { i: 0, j: 1 };
        assert!(p.y_range(3).is_empty());
        assert_eq!(p.x_range(3), 1..2);
    }
}
