//! Labeled multigraphs with self-loops and parallel edges.
//!
//! Vertex and edge ids are strings externally and dense indices internally.
//! Edge endpoints are unordered; they are stored as `[min, max]` by index.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub id: String,
    pub ends: [usize; 2],
}

impl Edge {
    pub fn is_self_loop(&self) -> bool {
        self.ends[0] == self.ends[1]
    }
}

/// An immutable multigraph. Construction validates every invariant, so any
/// value of this type has distinct ids and no dangling endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multigraph {
    vertices: Vec<String>,
    edges: Vec<Edge>,
}

/// Structural facts reported by [`Multigraph::validate`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GraphSummary {
    pub self_loops: Vec<usize>,
    /// Classes of two or more non-loop edges sharing the same endpoint pair.
    pub parallel_classes: Vec<Vec<usize>>,
}

/// A set of edge indices, kept sorted. Used for spanning trees and forests.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tree(Vec<usize>);

impl Tree {
    pub fn new(mut edges: Vec<usize>) -> Self {
        edges.sort_unstable();
        edges.dedup();
        Tree(edges)
    }

    pub fn edges(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, edge: usize) -> bool {
        self.0.binary_search(&edge).is_ok()
    }

    pub fn mask(&self) -> u64 {
        self.0.iter().fold(0u64, |m, &e| m | (1u64 << e))
    }

    pub fn from_mask(mask: u64) -> Self {
        Tree((0..64).filter(|e| mask & (1u64 << e) != 0).collect())
    }
}

/// Tree edges listed in contraction order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrderedTree(Vec<usize>);

impl OrderedTree {
    pub fn new(order: Vec<usize>) -> Self {
        OrderedTree(order)
    }

    pub fn order(&self) -> &[usize] {
        &self.0
    }

    pub fn tree(&self) -> Tree {
        Tree::new(self.0.clone())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

#[derive(Clone, Debug)]
pub(crate) struct DisjointSet {
    parent: Vec<usize>,
}

impl DisjointSet {
    pub(crate) fn new(n: usize) -> Self {
        DisjointSet {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn reset(&mut self) {
        for (i, p) in self.parent.iter_mut().enumerate() {
            *p = i;
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when `a` and `b` were already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[rb] = ra;
        true
    }
}

/// Index map for contracting vertices `a != b` of an `n`-vertex graph: the
/// survivors keep their relative order and the merged vertex goes last.
pub(crate) fn contraction_map(n: usize, a: usize, b: usize) -> Vec<usize> {
    debug_assert!(a != b && a < n && b < n);
    let mut map = vec![0; n];
    let mut next = 0;
    for (v, slot) in map.iter_mut().enumerate() {
        if v == a || v == b {
            *slot = n - 2;
        } else {
            *slot = next;
            next += 1;
        }
    }
    map
}

impl Multigraph {
    /// Builds and validates a graph from string ids. Edges are
    /// `(edge id, end, end)` triples.
    pub fn new<V, E, S, T>(vertices: V, edges: E) -> Result<Self>
    where
        V: IntoIterator<Item = S>,
        S: Into<String>,
        E: IntoIterator<Item = (T, T, T)>,
        T: Into<String>,
    {
        let vertices: Vec<String> = vertices.into_iter().map(Into::into).collect();
        let mut index = BTreeMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if index.insert(v.clone(), i).is_some() {
                return Err(Error::DuplicateId {
                    kind: "vertex",
                    id: v.clone(),
                });
            }
        }
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for (id, a, b) in edges {
            let (id, a, b) = (id.into(), a.into(), b.into());
            if !seen.insert(id.clone()) {
                return Err(Error::DuplicateId { kind: "edge", id });
            }
            let lookup = |v: &String| {
                index.get(v).copied().ok_or_else(|| Error::DanglingEndpoint {
                    edge: id.clone(),
                    vertex: v.clone(),
                })
            };
            let (ia, ib) = (lookup(&a)?, lookup(&b)?);
            out.push(Edge {
                id,
                ends: [ia.min(ib), ia.max(ib)],
            });
        }
        Ok(Multigraph {
            vertices,
            edges: out,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> &Edge {
        &self.edges[e]
    }

    pub fn vertex_id(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn vertex_index(&self, id: &str) -> Result<usize> {
        self.vertices
            .iter()
            .position(|v| v == id)
            .ok_or_else(|| Error::UnknownVertex(id.to_string()))
    }

    pub fn edge_index(&self, id: &str) -> Result<usize> {
        self.edges
            .iter()
            .position(|e| e.id == id)
            .ok_or_else(|| Error::UnknownEdge(id.to_string()))
    }

    /// Edge set from edge ids.
    pub fn tree_from_ids(&self, ids: &[&str]) -> Result<Tree> {
        let edges = ids
            .iter()
            .map(|id| self.edge_index(id))
            .collect::<Result<Vec<_>>>()?;
        Ok(Tree::new(edges))
    }

    pub fn ordered_from_ids(&self, ids: &[&str]) -> Result<OrderedTree> {
        let order = ids
            .iter()
            .map(|id| self.edge_index(id))
            .collect::<Result<Vec<_>>>()?;
        Ok(OrderedTree::new(order))
    }

    pub fn edge_ids(&self, edges: &[usize]) -> Vec<&str> {
        edges.iter().map(|&e| self.edges[e].id.as_str()).collect()
    }

    /// Identifies self-loops and classes of parallel edges. Invariants are
    /// already enforced at construction.
    pub fn validate(&self) -> GraphSummary {
        let mut classes: BTreeMap<[usize; 2], Vec<usize>> = BTreeMap::new();
        let mut self_loops = Vec::new();
        for (i, e) in self.edges.iter().enumerate() {
            if e.is_self_loop() {
                self_loops.push(i);
            } else {
                classes.entry(e.ends).or_default().push(i);
            }
        }
        GraphSummary {
            self_loops,
            parallel_classes: classes.into_values().filter(|c| c.len() > 1).collect(),
        }
    }

    /// A graph with at most one vertex counts as connected.
    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n <= 1 {
            return true;
        }
        let mut ds = DisjointSet::new(n);
        let mut components = n;
        for e in &self.edges {
            if ds.union(e.ends[0], e.ends[1]) {
                components -= 1;
            }
        }
        components == 1
    }

    pub(crate) fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    /// `|E| - |V| + 1` for a connected graph.
    pub fn nullity(&self) -> isize {
        self.edge_count() as isize - self.vertex_count() as isize + 1
    }

    /// Contracts edge `e`. The merged vertex is appended last, named by the
    /// sorted concatenation `a+b` of its endpoints' ids. Parallel copies of
    /// `e` become self-loops. Returns the old-to-new vertex index map.
    pub fn contract(&self, e: usize) -> Result<(Multigraph, Vec<usize>)> {
        let edge = self
            .edges
            .get(e)
            .ok_or_else(|| Error::UnknownEdge(format!("#{e}")))?;
        if edge.is_self_loop() {
            return Err(Error::SelfLoopContraction(edge.id.clone()));
        }
        let [a, b] = edge.ends;
        let n = self.vertex_count();
        let map = contraction_map(n, a, b);

        let mut vertices: Vec<String> = (0..n)
            .filter(|&v| v != a && v != b)
            .map(|v| self.vertices[v].clone())
            .collect();
        let (x, y) = {
            let (x, y) = (&self.vertices[a], &self.vertices[b]);
            if x <= y {
                (x, y)
            } else {
                (y, x)
            }
        };
        let mut merged = format!("{x}+{y}");
        while vertices.contains(&merged) {
            merged.push('\'');
        }
        vertices.push(merged);

        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != e)
            .map(|(_, ed)| {
                let (p, q) = (map[ed.ends[0]], map[ed.ends[1]]);
                Edge {
                    id: ed.id.clone(),
                    ends: [p.min(q), p.max(q)],
                }
            })
            .collect();
        Ok((Multigraph { vertices, edges }, map))
    }

    /// True iff `edges` is acyclic, free of self-loops, and has `|V| - 1` edges.
    pub fn is_spanning_tree(&self, edges: &[usize]) -> bool {
        self.check_spanning_tree(edges).is_ok()
    }

    pub(crate) fn check_spanning_tree(&self, edges: &[usize]) -> Result<()> {
        let n = self.vertex_count();
        let mut sorted = edges.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != edges.len() {
            return Err(Error::NotASpanningTree("repeated edge".into()));
        }
        if edges.len() + 1 != n {
            return Err(Error::NotASpanningTree(format!(
                "{} edges for {} vertices",
                edges.len(),
                n
            )));
        }
        let mut ds = DisjointSet::new(n);
        for &e in edges {
            let ed = self
                .edges
                .get(e)
                .ok_or_else(|| Error::UnknownEdge(format!("#{e}")))?;
            if !ds.union(ed.ends[0], ed.ends[1]) {
                return Err(Error::NotASpanningTree(format!("edge `{}` closes a cycle", ed.id)));
            }
        }
        Ok(())
    }

    /// All spanning trees in lexicographic order of their sorted edge indices.
    /// A single-vertex graph has exactly one, the empty tree.
    pub fn spanning_trees(&self) -> Result<Vec<Tree>> {
        self.require_connected()?;
        let n = self.vertex_count();
        let candidates: Vec<usize> = (0..self.edge_count())
            .filter(|&e| !self.edges[e].is_self_loop())
            .collect();
        let mut out = Vec::new();
        let mut chosen = Vec::with_capacity(n.saturating_sub(1));
        let labels: Vec<usize> = (0..n).collect();
        self.grow_trees(&candidates, 0, &labels, &mut chosen, &mut out);
        Ok(out)
    }

    fn grow_trees(
        &self,
        candidates: &[usize],
        next: usize,
        labels: &[usize],
        chosen: &mut Vec<usize>,
        out: &mut Vec<Tree>,
    ) {
        let need = labels.len() - 1;
        if chosen.len() == need {
            out.push(Tree(chosen.clone()));
            return;
        }
        if candidates.len() - next < need - chosen.len() {
            return;
        }
        let e = candidates[next];
        let [a, b] = self.edges[e].ends;
        let (la, lb) = (labels[a], labels[b]);
        if la != lb {
            let merged: Vec<usize> = labels
                .iter()
                .map(|&l| if l == lb { la } else { l })
                .collect();
            chosen.push(e);
            self.grow_trees(candidates, next + 1, &merged, chosen, out);
            chosen.pop();
        }
        self.grow_trees(candidates, next + 1, labels, chosen, out);
    }

    /// Number of spanning trees.
    pub fn complexity(&self) -> Result<usize> {
        Ok(self.spanning_trees()?.len())
    }

    /// The graph restricted to the given edges, same vertex set.
    pub fn edge_subgraph(&self, edges: &[usize]) -> Multigraph {
        Multigraph {
            vertices: self.vertices.clone(),
            edges: edges.iter().map(|&e| self.edges[e].clone()).collect(),
        }
    }

    /// Applies a vertex relabeling: vertex `v` gets id `names[v]`.
    pub fn relabel(&self, names: &[String]) -> Result<Multigraph> {
        Multigraph::new(
            names.iter().cloned(),
            self.edges.iter().map(|e| {
                (
                    e.id.clone(),
                    names[e.ends[0]].clone(),
                    names[e.ends[1]].clone(),
                )
            }),
        )
    }

    /// Same graph with the vertex list permuted: new position `i` holds old
    /// vertex `perm[i]`. Ids are kept.
    pub fn permute_vertices(&self, perm: &[usize]) -> Multigraph {
        let mut inverse = vec![0; perm.len()];
        for (i, &old) in perm.iter().enumerate() {
            inverse[old] = i;
        }
        Multigraph {
            vertices: perm.iter().map(|&v| self.vertices[v].clone()).collect(),
            edges: self
                .edges
                .iter()
                .map(|e| {
                    let (p, q) = (inverse[e.ends[0]], inverse[e.ends[1]]);
                    Edge {
                        id: e.id.clone(),
                        ends: [p.min(q), p.max(q)],
                    }
                })
                .collect(),
        }
    }

    pub fn display_edges(&self, edges: &[usize]) -> String {
        self.edge_ids(edges).join(",")
    }
}

impl fmt::Display for Multigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}", self.vertices.join(","))?;
        let edges: Vec<String> = self
            .edges
            .iter()
            .map(|e| {
                format!(
                    "{}:({},{})",
                    e.id, self.vertices[e.ends[0]], self.vertices[e.ends[1]]
                )
            })
            .collect();
        if !edges.is_empty() {
            write!(f, "; {}", edges.join(", "))?;
        }
        write!(f, "}}")
    }
}
