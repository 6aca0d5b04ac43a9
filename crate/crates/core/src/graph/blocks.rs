//! Cut vertices, biconnected blocks and gluing decompositions.

use super::{bit, components_in, mask_vertices, Graph, Subgraph};
use crate::error::{Error, Result};

/// Biconnected components of a graph. Isolated vertices belong to no block; a bridge
/// is a block with two vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub blocks: Vec<Vec<usize>>,
    pub cut_vertices: Vec<usize>,
}

struct LowPoint<'a> {
    adj: &'a [u64],
    mask: u64,
    disc: [u32; 65],
    low: [u32; 65],
    clock: u32,
    stack: Vec<usize>,
    blocks: Vec<u64>,
    cuts: u64,
}

impl LowPoint<'_> {
    fn visit(&mut self, u: usize, parent: usize) {
        self.clock += 1;
        self.disc[u] = self.clock;
        self.low[u] = self.clock;
        self.stack.push(u);
        let mut children = 0;
        for v in mask_vertices(self.adj[u - 1] & self.mask) {
            if self.disc[v] == 0 {
                children += 1;
                self.visit(v, u);
                self.low[u] = self.low[u].min(self.low[v]);
                if self.low[v] >= self.disc[u] {
                    if parent != 0 || children > 1 {
                        self.cuts |= bit(u);
                    }
                    let mut block = bit(u);
                    while let Some(w) = self.stack.pop() {
                        block |= bit(w);
                        if w == v {
                            break;
                        }
                    }
                    self.blocks.push(block);
                }
            } else if v != parent {
                self.low[u] = self.low[u].min(self.disc[v]);
            }
        }
    }
}

/// Blocks (as vertex masks, in discovery order) and the cut-vertex mask of the
/// subgraph induced on `mask`.
pub(crate) fn biconnected(adj: &[u64], mask: u64) -> (Vec<u64>, u64) {
    let mut lp = LowPoint {
        adj,
        mask,
        disc: [0; 65],
        low: [0; 65],
        clock: 0,
        stack: Vec::new(),
        blocks: Vec::new(),
        cuts: 0,
    };
    for root in mask_vertices(mask) {
        if lp.disc[root] == 0 {
            lp.visit(root, 0);
            lp.stack.clear();
        }
    }
    (lp.blocks, lp.cuts)
}

fn sorted_lists(masks: impl IntoIterator<Item = u64>) -> Vec<Vec<usize>> {
    let mut lists: Vec<Vec<usize>> = masks
        .into_iter()
        .map(|m| mask_vertices(m).collect())
        .collect();
    lists.sort();
    lists
}

impl Graph {
    /// Vertices whose deletion increases the number of connected components.
    pub fn cut_vertices(&self) -> Vec<usize> {
        mask_vertices(biconnected(self.adj(), self.all_mask()).1).collect()
    }

    pub fn blocks(&self) -> BlockDecomposition {
        let (blocks, cuts) = biconnected(self.adj(), self.all_mask());
        BlockDecomposition {
            blocks: sorted_lists(blocks),
            cut_vertices: mask_vertices(cuts).collect(),
        }
    }

    /// Splits a connected graph at cut vertices that are free on both sides, until no
    /// such split remains. Factors are returned as induced subgraphs, sorted by their
    /// original vertex lists.
    ///
    /// At each step the lowest-labeled eligible vertex is used.
    pub fn decompose(&self) -> Result<Vec<Subgraph>> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        let mut pending = vec![self.all_mask()];
        let mut done = Vec::new();
        while let Some(part) = pending.pop() {
            match self.gluing_split(part) {
                Some((a, b)) => {
                    pending.push(b);
                    pending.push(a);
                }
                None => done.push(part),
            }
        }
        done.sort_by(|&a, &b| super::lex_cmp_masks(a, b));
        Ok(done.into_iter().map(|m| self.induced_by_mask(m)).collect())
    }

    /// The first split `G[part] = G1 ∪_v G2` with `v` free in both sides.
    pub(crate) fn gluing_split(&self, part: u64) -> Option<(u64, u64)> {
        self.gluing_splits(part).next()
    }

    /// Every vertex `v` at which `G[part]` is a gluing, in increasing order, with the
    /// two sides.
    pub(crate) fn gluing_splits(&self, part: u64) -> impl Iterator<Item = (u64, u64)> + '_ {
        let (_, cuts) = biconnected(self.adj(), part);
        mask_vertices(cuts).filter_map(move |v| {
            let rest = part & !bit(v);
            let comps = components_in(self.adj(), rest);
            if comps.len() != 2 {
                return None;
            }
            let nbhd = self.neighbor_mask(v);
            let free_in = |side: u64| self.is_clique_mask(nbhd & side);
            if free_in(comps[0]) && free_in(comps[1]) {
                Some((comps[0] | bit(v), comps[1] | bit(v)))
            } else {
                None
            }
        })
    }
}
