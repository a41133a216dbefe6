//! Vertex partitions and the trans-block operations on them.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{contraction_map, Multigraph};

/// A partition of the vertex indices `0..n` into non-empty blocks.
///
/// Stored as a block label per vertex, canonicalized so that labels appear
/// in order of first occurrence. Two partitions are therefore equal exactly
/// when they group the vertices the same way.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    block_of: Vec<usize>,
    blocks: usize,
}

impl Partition {
    /// From arbitrary per-vertex labels.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut remap: Vec<Option<usize>> = Vec::new();
        let mut blocks = 0;
        let block_of = labels
            .iter()
            .map(|&l| {
                if l >= remap.len() {
                    remap.resize(l + 1, None);
                }
                *remap[l].get_or_insert_with(|| {
                    blocks += 1;
                    blocks - 1
                })
            })
            .collect();
        Partition { block_of, blocks }
    }

    /// From explicit blocks over `0..n`.
    pub fn from_blocks(n: usize, blocks: &[Vec<usize>]) -> Result<Self> {
        let mut labels = vec![usize::MAX; n];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::EmptyBlock);
            }
            for &v in block {
                if v >= n {
                    return Err(Error::BadPartition(format!("vertex #{v} out of range")));
                }
                if labels[v] != usize::MAX {
                    return Err(Error::BadPartition(format!("vertex #{v} listed twice")));
                }
                labels[v] = b;
            }
        }
        if let Some(v) = labels.iter().position(|&l| l == usize::MAX) {
            return Err(Error::BadPartition(format!("vertex #{v} not covered")));
        }
        Ok(Partition::from_labels(&labels))
    }

    /// From blocks of vertex ids of `g`.
    pub fn from_named_blocks<S: AsRef<str>>(g: &Multigraph, blocks: &[Vec<S>]) -> Result<Self> {
        let mut labels = vec![usize::MAX; g.vertex_count()];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::EmptyBlock);
            }
            for name in block {
                let v = g.vertex_index(name.as_ref())?;
                if labels[v] != usize::MAX {
                    return Err(Error::DuplicateVertex(name.as_ref().to_string()));
                }
                labels[v] = b;
            }
        }
        if let Some(v) = labels.iter().position(|&l| l == usize::MAX) {
            return Err(Error::MissingVertex(g.vertex_id(v).to_string()));
        }
        Ok(Partition::from_labels(&labels))
    }

    /// Every vertex in its own block.
    pub fn singletons(n: usize) -> Self {
        Partition {
            block_of: (0..n).collect(),
            blocks: n,
        }
    }

    /// One block holding everything.
    pub fn trivial(n: usize) -> Self {
        Partition {
            block_of: vec![0; n],
            blocks: usize::from(n > 0),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.block_of.len()
    }

    pub fn block_count(&self) -> usize {
        self.blocks
    }

    pub fn is_trivial(&self) -> bool {
        self.blocks <= 1
    }

    pub fn block_of(&self, v: usize) -> usize {
        self.block_of[v]
    }

    pub fn labels(&self) -> &[usize] {
        &self.block_of
    }

    pub fn same_block(&self, a: usize, b: usize) -> bool {
        self.block_of[a] == self.block_of[b]
    }

    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.blocks];
        for (v, &b) in self.block_of.iter().enumerate() {
            out[b].push(v);
        }
        out
    }

    /// The partition left after merging vertices `a` and `b` (in distinct
    /// blocks) into a new singleton block. Indices follow
    /// [`Multigraph::contract`]: survivors in order, merged vertex last.
    pub(crate) fn contract_vertices(&self, a: usize, b: usize) -> Partition {
        let n = self.vertex_count();
        let map = contraction_map(n, a, b);
        let mut labels = vec![0; n - 1];
        for v in 0..n {
            if v != a && v != b {
                labels[map[v]] = self.block_of[v];
            }
        }
        labels[n - 2] = self.blocks;
        Partition::from_labels(&labels)
    }

    pub(crate) fn check_against(&self, g: &Multigraph) -> Result<()> {
        if self.vertex_count() != g.vertex_count() {
            return Err(Error::BadPartition(format!(
                "partition covers {} vertices, graph has {}",
                self.vertex_count(),
                g.vertex_count()
            )));
        }
        Ok(())
    }

    /// Renders with vertex ids, e.g. `[{v1},{v2},{v3,v4}]`.
    pub fn display<'a>(&'a self, g: &'a Multigraph) -> impl fmt::Display + 'a {
        DisplayPartition { p: self, g }
    }
}

struct DisplayPartition<'a> {
    p: &'a Partition,
    g: &'a Multigraph,
}

impl fmt::Display for DisplayPartition<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks: Vec<String> = self
            .p
            .blocks()
            .iter()
            .map(|b| {
                let ids: Vec<&str> = b.iter().map(|&v| self.g.vertex_id(v)).collect();
                format!("{{{}}}", ids.join(","))
            })
            .collect();
        write!(f, "[{}]", blocks.join(","))
    }
}

/// True iff the ends of `e` lie in distinct blocks. Self-loops never are.
pub fn is_trans_block(g: &Multigraph, partition: &Partition, e: usize) -> Result<bool> {
    partition.check_against(g)?;
    let edge = g
        .edges()
        .get(e)
        .ok_or_else(|| Error::UnknownEdge(format!("#{e}")))?;
    Ok(!partition.same_block(edge.ends[0], edge.ends[1]))
}

/// Number of trans-block edges, parallel edges counted separately.
pub fn trans_block_count(g: &Multigraph, partition: &Partition) -> Result<usize> {
    partition.check_against(g)?;
    Ok(g
        .edges()
        .iter()
        .filter(|e| !partition.same_block(e.ends[0], e.ends[1]))
        .count())
}

/// The partition induced on `g / e`: the two ends leave their blocks, empty
/// blocks vanish and the merged vertex forms a new singleton block.
pub fn contract_partition(partition: &Partition, e: usize, g: &Multigraph) -> Result<Partition> {
    if !is_trans_block(g, partition, e)? {
        return Err(Error::NotTransBlock(g.edge(e).id.clone()));
    }
    let [a, b] = g.edge(e).ends;
    Ok(partition.contract_vertices(a, b))
}

/// All set partitions of `0..n` as restricted growth strings.
pub fn all_partitions(n: usize) -> Vec<Partition> {
    fn extend(labels: &mut Vec<usize>, n: usize, max: usize, out: &mut Vec<Partition>) {
        if labels.len() == n {
            out.push(Partition::from_labels(labels));
            return;
        }
        let limit = if labels.is_empty() { 0 } else { max + 1 };
        for l in 0..=limit {
            labels.push(l);
            extend(labels, n, max.max(l), out);
            labels.pop();
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::with_capacity(n), n, 0, &mut out);
    out
}
