//! Shared generators and brute-force oracles for the integration tests.
//!
//! The oracles deliberately avoid the library's trace machinery: contraction
//! is tracked with per-vertex component and block labels over the original
//! vertex set, and spanning trees come from plain subset enumeration.

#![allow(dead_code)]

use std::collections::BTreeMap;

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use treeweights_core::partition::all_partitions;
use treeweights_core::{Multigraph, Partition, Rational, Tree};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// A random connected multigraph with `n` vertices and `m >= n - 1` edges.
/// A random spanning tree guarantees connectivity; the remaining edges are
/// uniform vertex pairs, so self-loops and parallel edges occur.
pub fn random_connected(rng: &mut StdRng, n: usize, m: usize) -> Multigraph {
    assert!(n >= 1 && m + 1 >= n);
    let mut ends = Vec::with_capacity(m);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    for i in 1..n {
        let parent = order[rng.gen_range(0..i)];
        ends.push((order[i], parent));
    }
    while ends.len() < m {
        ends.push((rng.gen_range(0..n), rng.gen_range(0..n)));
    }
    ends.shuffle(rng);
    let vertices: Vec<String> = (1..=n).map(|i| format!("v{i}")).collect();
    let edges: Vec<(String, String, String)> = ends
        .iter()
        .enumerate()
        .map(|(i, &(a, b))| (format!("l{}", i + 1), vertices[a].clone(), vertices[b].clone()))
        .collect();
    Multigraph::new(vertices.clone(), edges).unwrap()
}

/// Random graph with `1 <= |V| <= max_v` (at least `min_v`) and `|E| <= max_e`.
pub fn random_graph(rng: &mut StdRng, min_v: usize, max_v: usize, max_e: usize) -> Multigraph {
    let n = rng.gen_range(min_v..=max_v);
    let m = rng.gen_range((n - 1).max(1)..=max_e);
    random_connected(rng, n, m)
}

pub fn nontrivial_partitions(n: usize) -> Vec<Partition> {
    all_partitions(n).into_iter().filter(|p| !p.is_trivial()).collect()
}

/// Union-find free acyclicity check over an edge subset.
fn acyclic_spanning(g: &Multigraph, edges: &[usize]) -> bool {
    let n = g.vertex_count();
    let mut label: Vec<usize> = (0..n).collect();
    for &e in edges {
        let [a, b] = g.edge(e).ends;
        let (la, lb) = (label[a], label[b]);
        if la == lb {
            return false;
        }
        for l in label.iter_mut() {
            if *l == lb {
                *l = la;
            }
        }
    }
    edges.len() + 1 == n
}

/// Every `(|V|-1)`-subset of edges that is acyclic and spanning.
pub fn brute_force_trees(g: &Multigraph) -> Vec<Tree> {
    let m = g.edge_count();
    let need = g.vertex_count() - 1;
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << m) {
        if mask.count_ones() as usize != need {
            continue;
        }
        let edges: Vec<usize> = (0..m).filter(|e| mask >> e & 1 == 1).collect();
        if acyclic_spanning(g, &edges) {
            out.push(Tree::new(edges));
        }
    }
    out.sort();
    out
}

pub fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.is_empty() {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

/// Lifted contraction state: component and block label per original vertex.
struct Lifted {
    comp: Vec<usize>,
    block: Vec<usize>,
    fresh: usize,
}

impl Lifted {
    fn new(p: &Partition) -> Self {
        let n = p.vertex_count();
        Lifted {
            comp: (0..n).collect(),
            block: (0..n).map(|v| p.block_of(v)).collect(),
            fresh: 2 * n + 1,
        }
    }

    fn crosses(&self, g: &Multigraph, e: usize) -> bool {
        let [a, b] = g.edge(e).ends;
        self.block[a] != self.block[b]
    }

    fn k(&self, g: &Multigraph) -> usize {
        (0..g.edge_count()).filter(|&e| self.crosses(g, e)).count()
    }

    fn contract(&mut self, g: &Multigraph, e: usize) {
        let [a, b] = g.edge(e).ends;
        let (ca, cb) = (self.comp[a], self.comp[b]);
        self.fresh += 1;
        let (c, bl) = (self.fresh, self.fresh);
        for v in 0..self.comp.len() {
            if self.comp[v] == ca || self.comp[v] == cb {
                self.comp[v] = c;
                self.block[v] = bl;
            }
        }
    }
}

/// `k` sequence of an ordering, or `None` if some step is not trans-block.
pub fn oracle_k(g: &Multigraph, p: &Partition, order: &[usize]) -> Option<Vec<usize>> {
    let mut state = Lifted::new(p);
    let mut ks = Vec::new();
    for &e in order {
        if !state.crosses(g, e) {
            return None;
        }
        ks.push(state.k(g));
        state.contract(g, e);
    }
    Some(ks)
}

/// Partition weights by brute force over all trees and all orderings.
pub fn oracle_weights(g: &Multigraph, p: &Partition) -> BTreeMap<Tree, Rational> {
    let mut out = BTreeMap::new();
    for t in brute_force_trees(g) {
        let mut w = Rational::zero();
        for order in permutations(t.edges()) {
            if let Some(ks) = oracle_k(g, p, &order) {
                w += Rational::reciprocal_product(ks.iter().map(|&k| k as u64));
            }
        }
        out.insert(t, w);
    }
    out
}

/// Tree from edge numbers, e.g. `[1, 2, 5]` for `{l1, l2, l5}`.
pub fn tree(g: &Multigraph, labels: &[u32]) -> Tree {
    let ids: Vec<String> = labels.iter().map(|l| format!("l{l}")).collect();
    let refs: Vec<&str> = ids.iter().map(String::as_str).collect();
    g.tree_from_ids(&refs).unwrap()
}
