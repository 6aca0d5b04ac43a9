//! Labeled simple graphs on the vertex set `1..=n`.
//!
//! Adjacency is stored as one `u64` neighbor mask per vertex, which caps graphs at
//! [`MAX_VERTICES`] vertices. Every operation returns a new graph; when the vertex set
//! changes, the result is a [`Subgraph`] that remembers the original labels.

mod blocks;
mod cliques;
mod io;

pub use blocks::BlockDecomposition;
pub use io::GraphJson;

pub(crate) use blocks::biconnected;

use crate::error::{Error, Result};

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 64;

/// A simple undirected graph with vertices `1..=n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    // adj[v - 1] has bit (u - 1) set iff {u, v} is an edge
    adj: Vec<u64>,
}

/// An induced subgraph relabeled to `1..=k`, with `labels[i]` the original label of
/// vertex `i + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgraph {
    pub graph: Graph,
    pub labels: Vec<usize>,
}

impl Subgraph {
    /// Original label of a vertex of the subgraph.
    pub fn original(&self, v: usize) -> usize {
        self.labels[v - 1]
    }

    /// Edges of the subgraph expressed in the original labels.
    pub fn original_edges(&self) -> Vec<(usize, usize)> {
        let mut edges: Vec<_> = self
            .graph
            .edges()
            .into_iter()
            .map(|(u, v)| {
                let (a, b) = (self.original(u), self.original(v));
                (a.min(b), a.max(b))
            })
            .collect();
        edges.sort_unstable();
        edges
    }
}

#[inline]
pub(crate) fn bit(v: usize) -> u64 {
    1u64 << (v - 1)
}

#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates the 1-based vertices in a mask, in increasing order.
pub(crate) fn mask_vertices(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize + 1;
            mask &= mask - 1;
            Some(v)
        }
    })
}

/// Compares two vertex masks as sorted label lists, lexicographically.
pub(crate) fn lex_cmp_masks(a: u64, b: u64) -> std::cmp::Ordering {
    mask_vertices(a).cmp(mask_vertices(b))
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::cap("graph vertex count", MAX_VERTICES, n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            if u == v {
                return Err(Error::InvalidEdge(u, v));
            }
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if g.has_edge(u, v) {
                return Err(Error::InvalidEdge(u.min(v), u.max(v)));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n).expect("complete graph within cap");
        for u in 1..=n {
            for v in u + 1..=n {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// The path `1 - 2 - ... - n`.
    pub fn path(n: usize) -> Self {
        Graph::from_edges(n, (1..n).map(|i| (i, i + 1))).expect("path within cap")
    }

    /// The cycle `1 - 2 - ... - n - 1`, `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        Graph::from_edges(n, (1..n).map(|i| (i, i + 1)).chain([(1, n)])).expect("cycle within cap")
    }

    pub(crate) fn from_adjacency(adj: Vec<u64>) -> Self {
        Graph { n: adj.len(), adj }
    }

    fn add_edge(&mut self, u: usize, v: usize) {
        self.adj[u - 1] |= bit(v);
        self.adj[v - 1] |= bit(u);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.n
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.n {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        } else {
            Ok(())
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && u >= 1 && u <= self.n && v >= 1 && v <= self.n && self.adj[u - 1] & bit(v) != 0
    }

    /// Edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 1..=self.n {
            for v in mask_vertices(self.adj[u - 1] & !full_mask(u)) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|m| m.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        mask_vertices(self.adj[v - 1]).collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v - 1].count_ones() as usize
    }

    pub(crate) fn adj(&self) -> &[u64] {
        &self.adj
    }

    pub(crate) fn neighbor_mask(&self, v: usize) -> u64 {
        self.adj[v - 1]
    }

    pub(crate) fn all_mask(&self) -> u64 {
        full_mask(self.n)
    }

    fn mask_of(&self, vertices: &[usize]) -> Result<u64> {
        let mut mask = 0;
        for &v in vertices {
            self.check_vertex(v)?;
            if mask & bit(v) != 0 {
                return Err(Error::DuplicateVertex(v));
            }
            mask |= bit(v);
        }
        Ok(mask)
    }

    /// `G[T]`: the induced subgraph on `vertices`, relabeled in increasing label order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Subgraph> {
        let mut mask = 0;
        for &v in vertices {
            self.check_vertex(v)?;
            mask |= bit(v);
        }
        Ok(self.induced_by_mask(mask))
    }

    /// `G \ W`.
    pub fn delete_vertices(&self, removed: &[usize]) -> Result<Subgraph> {
        let mut mask = 0;
        for &v in removed {
            self.check_vertex(v)?;
            mask |= bit(v);
        }
        Ok(self.induced_by_mask(self.all_mask() & !mask))
    }

    pub(crate) fn induced_by_mask(&self, mask: u64) -> Subgraph {
        let labels: Vec<usize> = mask_vertices(mask).collect();
        let mut position = [0usize; MAX_VERTICES + 1];
        for (i, &v) in labels.iter().enumerate() {
            position[v] = i + 1;
        }
        let adj = labels
            .iter()
            .map(|&v| {
                mask_vertices(self.adj[v - 1] & mask).fold(0u64, |acc, u| acc | bit(position[u]))
            })
            .collect();
        Subgraph {
            graph: Graph::from_adjacency(adj),
            labels,
        }
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        components_in(&self.adj, self.all_mask())
            .into_iter()
            .map(|m| mask_vertices(m).collect())
            .collect()
    }

    /// True for the empty graph and for any graph with one component.
    pub fn is_connected(&self) -> bool {
        components_in(&self.adj, self.all_mask()).len() <= 1
    }

    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    pub(crate) fn is_clique_mask(&self, mask: u64) -> bool {
        mask_vertices(mask).all(|v| (self.adj[v - 1] | bit(v)) & mask == mask)
    }

    /// A vertex is free when its neighborhood induces a complete graph.
    pub fn is_free_vertex(&self, v: usize) -> Result<bool> {
        self.check_vertex(v)?;
        Ok(self.is_clique_mask(self.adj[v - 1]))
    }

    /// `G_v`: adds every edge between two neighbors of `v`.
    pub fn neighbor_completion(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        let nbhd = self.adj[v - 1];
        let mut adj = self.adj.clone();
        for u in mask_vertices(nbhd) {
            adj[u - 1] |= nbhd & !bit(u);
        }
        Ok(Graph::from_adjacency(adj))
    }

    /// `cone(v, G)`: a new vertex `n + 1` adjacent to every vertex of `G`.
    pub fn cone(&self) -> Result<Graph> {
        let apex = self.n + 1;
        let mut g = Graph::empty(apex)?;
        g.adj[..self.n].copy_from_slice(&self.adj);
        for u in 1..=self.n {
            g.add_edge(u, apex);
        }
        Ok(g)
    }

    /// Attaches a pendant vertex to each anchor; the pendant of `anchors[i]` is `n + 1 + i`.
    pub fn whisker(&self, anchors: &[usize]) -> Result<Graph> {
        self.mask_of(anchors)?;
        let mut g = Graph::empty(self.n + anchors.len())?;
        g.adj[..self.n].copy_from_slice(&self.adj);
        for (i, &w) in anchors.iter().enumerate() {
            g.add_edge(w, self.n + 1 + i);
        }
        Ok(g)
    }

    /// Cycle rank `|E| - |V| + 1` of a connected graph.
    pub fn cycle_rank(&self) -> Result<usize> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok((self.edge_count() + 1).saturating_sub(self.n.max(1)))
    }

    /// Disjoint union, with `other`'s vertices shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let mut g = Graph::empty(self.n + other.n)?;
        g.adj[..self.n].copy_from_slice(&self.adj);
        for (i, &m) in other.adj.iter().enumerate() {
            g.adj[self.n + i] = m << self.n;
        }
        Ok(g)
    }

    /// Glues `other` onto `self` by identifying `other`'s vertex `at_other` with
    /// `self`'s vertex `at_self`. The remaining vertices of `other` follow in order.
    pub fn glue(&self, at_self: usize, other: &Graph, at_other: usize) -> Result<Graph> {
        self.check_vertex(at_self)?;
        other.check_vertex(at_other)?;
        let mut next = self.n;
        let map: Vec<usize> = (0..=other.n)
            .map(|v| {
                if v == at_other {
                    at_self
                } else if v == 0 {
                    0
                } else {
                    next += 1;
                    next
                }
            })
            .collect();
        let edges = self
            .edges()
            .into_iter()
            .chain(other.edges().into_iter().map(|(u, v)| (map[u], map[v])));
        Graph::from_edges(next, edges)
    }

    /// Applies a relabeling `perm[v - 1] = new label of v` (a permutation of `1..=n`).
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::Precondition(
                "relabeling must cover every vertex".into(),
            ));
        }
        let mut seen = 0u64;
        for &p in perm {
            self.check_vertex(p)?;
            if seen & bit(p) != 0 {
                return Err(Error::DuplicateVertex(p));
            }
            seen |= bit(p);
        }
        Graph::from_edges(
            self.n,
            self.edges()
                .into_iter()
                .map(|(u, v)| (perm[u - 1], perm[v - 1])),
        )
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}

/// Connected components of the subgraph induced on `mask`, as masks.
pub(crate) fn components_in(adj: &[u64], mask: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut rest = mask;
    while rest != 0 {
        let start = rest & rest.wrapping_neg();
        let mut comp = start;
        let mut frontier = start;
        while frontier != 0 {
            let mut next = 0;
            for v in mask_vertices(frontier) {
                next |= adj[v - 1];
            }
            frontier = next & mask & !comp;
            comp |= frontier;
        }
        out.push(comp);
        rest &= !comp;
    }
    out
}
