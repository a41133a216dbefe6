//! Hepp sectors, Kruskal leading trees and the symmetric weights obtained by
//! counting, over all `|E|!` sectors, how often each tree leads.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::graph::{DisjointSet, Multigraph, OrderedTree, Tree};
use crate::rational::Rational;

/// Default upper bound on `|E|` for exhaustive census (10! = 3 628 800 sectors).
pub const DEFAULT_GUARD: usize = 10;

/// Counts are `u64`; 20! is the largest factorial that fits.
pub const MAX_GUARD: usize = 20;

/// A complete ordering of the edges of a graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HeppSector(Vec<usize>);

impl HeppSector {
    pub fn new(g: &Multigraph, order: Vec<usize>) -> Result<Self> {
        let m = g.edge_count();
        if order.len() != m {
            return Err(Error::MalformedSector(format!(
                "{} entries for {} edges",
                order.len(),
                m
            )));
        }
        let mut seen = vec![false; m];
        for &e in &order {
            if e >= m || std::mem::replace(&mut seen[e], true) {
                return Err(Error::MalformedSector(format!("edge #{e} out of range or repeated")));
            }
        }
        Ok(HeppSector(order))
    }

    pub fn from_ids(g: &Multigraph, ids: &[&str]) -> Result<Self> {
        let order = ids
            .iter()
            .map(|id| g.edge_index(id))
            .collect::<Result<Vec<_>>>()?;
        HeppSector::new(g, order)
    }

    pub fn order(&self) -> &[usize] {
        &self.0
    }

    /// Rank of each edge in the sector.
    pub fn ranks(&self) -> Vec<usize> {
        let mut r = vec![0; self.0.len()];
        for (pos, &e) in self.0.iter().enumerate() {
            r[e] = pos;
        }
        r
    }
}

fn kruskal(g: &Multigraph, order: &[usize], ds: &mut DisjointSet, accepted: &mut Vec<usize>) {
    ds.reset();
    accepted.clear();
    let need = g.vertex_count().saturating_sub(1);
    for &e in order {
        if accepted.len() == need {
            break;
        }
        let [a, b] = g.edge(e).ends;
        if a != b && ds.union(a, b) {
            accepted.push(e);
        }
    }
}

/// Edges of the leading tree in the order Kruskal accepts them.
pub fn induced_ordering(g: &Multigraph, sector: &HeppSector) -> Result<OrderedTree> {
    g.require_connected()?;
    if sector.0.len() != g.edge_count() {
        return Err(Error::MalformedSector("sector does not match graph".into()));
    }
    let mut ds = DisjointSet::new(g.vertex_count());
    let mut accepted = Vec::new();
    kruskal(g, &sector.0, &mut ds, &mut accepted);
    Ok(OrderedTree::new(accepted))
}

/// The spanning tree of minimal rank sum under `sector`.
pub fn leading_tree(g: &Multigraph, sector: &HeppSector) -> Result<Tree> {
    Ok(induced_ordering(g, sector)?.tree())
}

/// Advances `xs` to its lexicographic successor; false after the last one.
pub fn next_permutation<T: Ord>(xs: &mut [T]) -> bool {
    if xs.len() < 2 {
        return false;
    }
    let mut i = xs.len() - 1;
    while i > 0 && xs[i - 1] >= xs[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = xs.len() - 1;
    while xs[j] <= xs[i - 1] {
        j -= 1;
    }
    xs.swap(i - 1, j);
    xs[i..].reverse();
    true
}

/// Leading-tree counts over all Hepp sectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectorCensus {
    pub counts: BTreeMap<Tree, u64>,
    pub total: u64,
}

impl SectorCensus {
    pub fn weight(&self, tree: &Tree) -> Option<Rational> {
        let c = *self.counts.get(tree)?;
        Some(Rational::new(c as i64, 1) / Rational::from_integer(self.total as i64))
    }

    pub fn weights(&self) -> BTreeMap<Tree, Rational> {
        let total = Rational::from_integer(self.total as i64);
        self.counts
            .iter()
            .map(|(t, &c)| (t.clone(), Rational::from_integer(c as i64) / total.clone()))
            .collect()
    }

    fn merge(mut self, other: SectorCensus) -> SectorCensus {
        for (t, c) in other.counts {
            *self.counts.entry(t).or_default() += c;
        }
        self.total += other.total;
        self
    }
}

/// How the sector range is processed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Schedule {
    Sequential,
    /// Chunks by leading edge, processed concurrently when the `parallel`
    /// feature is enabled.
    Chunked,
}

fn census_chunk(g: &Multigraph, first: usize) -> SectorCensus {
    let m = g.edge_count();
    let mut rest: Vec<usize> = (0..m).filter(|&e| e != first).collect();
    let mut order = Vec::with_capacity(m);
    let mut ds = DisjointSet::new(g.vertex_count());
    let mut accepted = Vec::with_capacity(g.vertex_count());
    let mut counts: HashMap<u64, u64> = HashMap::new();
    let mut total = 0u64;
    loop {
        order.clear();
        order.push(first);
        order.extend_from_slice(&rest);
        kruskal(g, &order, &mut ds, &mut accepted);
        let mask = accepted.iter().fold(0u64, |acc, &e| acc | (1 << e));
        *counts.entry(mask).or_default() += 1;
        total += 1;
        if !next_permutation(&mut rest) {
            break;
        }
    }
    SectorCensus {
        counts: counts
            .into_iter()
            .map(|(mask, c)| (Tree::from_mask(mask), c))
            .collect(),
        total,
    }
}

/// Counts, for every spanning tree, the sectors whose leading tree it is.
/// Sectors are streamed in lexicographic order; none are stored.
pub fn sector_census(g: &Multigraph, guard: usize) -> Result<SectorCensus> {
    sector_census_with(g, guard, Schedule::Chunked)
}

pub fn sector_census_with(g: &Multigraph, guard: usize, schedule: Schedule) -> Result<SectorCensus> {
    g.require_connected()?;
    let m = g.edge_count();
    let limit = guard.min(MAX_GUARD);
    if m > limit {
        return Err(Error::EnumerationGuardExceeded { edges: m, guard: limit });
    }
    let empty = SectorCensus {
        counts: BTreeMap::new(),
        total: 0,
    };
    if m == 0 {
        // one vertex, one empty sector
        return Ok(SectorCensus {
            counts: BTreeMap::from([(Tree::default(), 1)]),
            total: 1,
        });
    }
    let census = match schedule {
        Schedule::Sequential => (0..m).fold(empty, |acc, first| acc.merge(census_chunk(g, first))),
        Schedule::Chunked => {
            #[cfg(feature = "parallel")]
            {
                use rayon::prelude::*;
                (0..m)
                    .into_par_iter()
                    .map(|first| census_chunk(g, first))
                    .reduce(
                        || SectorCensus {
                            counts: BTreeMap::new(),
                            total: 0,
                        },
                        SectorCensus::merge,
                    )
            }
            #[cfg(not(feature = "parallel"))]
            {
                (0..m).fold(empty, |acc, first| acc.merge(census_chunk(g, first)))
            }
        }
    };
    Ok(census)
}

/// Fraction of sectors led by `tree`.
pub fn symmetric_weight(g: &Multigraph, tree: &Tree, guard: usize) -> Result<Rational> {
    g.check_spanning_tree(tree.edges())?;
    let census = sector_census(g, guard)?;
    Ok(census.weight(tree).unwrap_or_else(Rational::zero))
}
