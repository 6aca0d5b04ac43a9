//! Block graphs, the Cohen-Macaulay criterion for them, and the invariant `b(G)`.

use std::cmp::Ordering;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::{validate_setup, ChainSpec};
use crate::graph::{biconnected, bit, lex_cmp_masks, mask_vertices, Graph, Subgraph};

pub const GENERAL_MODE_CAP: usize = 20;
pub const CUT_MODE_CAP: usize = 20;

/// Which induced subgraphs count as candidates for `b(G)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    /// `G \ W` for `W` a set of cut vertices of `G`.
    CutVertex,
    /// Every induced subgraph of `G`.
    General,
}

impl std::str::FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cut_vertex" | "cut-vertex" | "cut" => Ok(Mode::CutVertex),
            "general" => Ok(Mode::General),
            _ => Err(Error::Parse(format!(
                "unknown mode {s:?}, expected cut_vertex or general"
            ))),
        }
    }
}

/// Lexicographic BFS order, first visited first.
fn lex_bfs(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut labels: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    let mut visited = vec![false; n + 1];
    let mut order = Vec::with_capacity(n);
    for step in 0..n {
        let v = (1..=n)
            .filter(|&v| !visited[v])
            .max_by(|&a, &b| labels[a].cmp(&labels[b]).then(b.cmp(&a)))
            .expect("unvisited vertex");
        visited[v] = true;
        order.push(v);
        for u in g.neighbors(v) {
            if !visited[u] {
                labels[u].push(n - step);
            }
        }
    }
    order
}

/// True iff `g` has no induced cycle of length at least four.
pub fn is_chordal(g: &Graph) -> bool {
    let order = lex_bfs(g);
    let mut pos = vec![0; g.n() + 1];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    // reverse LexBFS is a perfect elimination ordering iff g is chordal
    for &v in &order {
        let earlier: Vec<usize> = g
            .neighbors(v)
            .into_iter()
            .filter(|&u| pos[u] < pos[v])
            .collect();
        let Some(&parent) = earlier.iter().max_by_key(|&&u| pos[u]) else {
            continue;
        };
        if earlier
            .iter()
            .any(|&u| u != parent && !g.has_edge(u, parent))
        {
            return false;
        }
    }
    true
}

fn clique_mask(adj: &[u64], m: u64) -> bool {
    mask_vertices(m).all(|v| adj[v - 1] & m == m & !bit(v))
}

/// Block count of `G[mask]` when it is a block graph.
fn block_graph_blocks(adj: &[u64], mask: u64) -> Option<Vec<u64>> {
    let (blocks, _) = biconnected(adj, mask);
    blocks
        .iter()
        .all(|&b| clique_mask(adj, b))
        .then_some(blocks)
}

/// Block count of `G[mask]` when it is a Cohen-Macaulay block graph.
pub(crate) fn cm_block_count(adj: &[u64], mask: u64) -> Option<usize> {
    let (blocks, _) = biconnected(adj, mask);
    let (mut once, mut twice) = (0u64, 0u64);
    for &b in &blocks {
        if twice & b != 0 || !clique_mask(adj, b) {
            return None;
        }
        twice |= once & b;
        once |= b;
    }
    Some(blocks.len())
}

/// Chordal with every maximal clique meeting any other in at most one vertex.
pub fn is_block_graph(g: &Graph) -> bool {
    is_chordal(g) && block_graph_blocks(g.adj(), g.all_mask()).is_some()
}

/// A block graph in which no vertex lies in more than two maximal cliques.
pub fn is_cm_block_graph(g: &Graph) -> bool {
    is_block_graph(g) && cm_block_count(g.adj(), g.all_mask()).is_some()
}

/// Number of blocks with at least one edge.
pub fn block_count(h: &Graph) -> Result<usize> {
    if !is_chordal(h) {
        return Err(Error::Precondition(
            "block_count needs a block graph; input is not chordal".into(),
        ));
    }
    block_graph_blocks(h.adj(), h.all_mask())
        .map(|b| b.len())
        .ok_or_else(|| {
            Error::Precondition(
                "block_count needs a block graph; some block is not a clique".into(),
            )
        })
}

/// A member of `CMB(G)`: the deleted vertices and the number of blocks left.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CmbWitness {
    pub removed: Vec<usize>,
    #[serde(rename = "blocks")]
    pub block_count: usize,
}

impl CmbWitness {
    fn from_mask(removed: u64, block_count: usize) -> Self {
        CmbWitness {
            removed: mask_vertices(removed).collect(),
            block_count,
        }
    }

    /// `G \ W`.
    pub fn subgraph(&self, g: &Graph) -> Result<Subgraph> {
        g.delete_vertices(&self.removed)
    }
}

/// `b(G)` with the witness realizing it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BInvariant {
    pub mode: Mode,
    pub value: usize,
    pub witness: CmbWitness,
}

struct Space {
    all: u64,
    /// Deletable vertices; subset index bit `k` selects `pool[k]`.
    pool: Vec<usize>,
}

impl Space {
    fn new(g: &Graph, mode: Mode) -> Result<Self> {
        let pool = match mode {
            Mode::CutVertex => {
                if !g.is_connected() {
                    return Err(Error::Disconnected);
                }
                let cuts = g.cut_vertices();
                if cuts.len() > CUT_MODE_CAP {
                    return Err(Error::cap(
                        "cut vertices for cut_vertex mode",
                        CUT_MODE_CAP,
                        cuts.len(),
                    ));
                }
                cuts
            }
            Mode::General => {
                if g.n() > GENERAL_MODE_CAP {
                    return Err(Error::cap(
                        "vertices for general mode",
                        GENERAL_MODE_CAP,
                        g.n(),
                    ));
                }
                g.vertices().collect()
            }
        };
        Ok(Space {
            all: g.all_mask(),
            pool,
        })
    }

    fn size(&self) -> u64 {
        1u64 << self.pool.len()
    }

    fn removed(&self, idx: u64) -> u64 {
        if self.pool.len() == 64 || self.pool.iter().enumerate().all(|(k, &v)| v == k + 1) {
            return idx & self.all;
        }
        let mut m = 0;
        for (k, &v) in self.pool.iter().enumerate() {
            if idx >> k & 1 == 1 {
                m |= bit(v);
            }
        }
        m
    }
}

fn better(a: (usize, u64), b: (usize, u64)) -> (usize, u64) {
    match a.0.cmp(&b.0).then_with(|| lex_cmp_masks(b.1, a.1)) {
        Ordering::Less => b,
        _ => a,
    }
}

/// All members of `CMB(G)` under `mode`, best first: decreasing block count, then
/// lexicographically smallest removed set.
pub fn enumerate_cmb(g: &Graph, mode: Mode) -> Result<Vec<CmbWitness>> {
    let space = Space::new(g, mode)?;
    let adj = g.adj();
    let mut found: Vec<(usize, u64)> = (0..space.size())
        .into_par_iter()
        .filter_map(|idx| {
            let removed = space.removed(idx);
            cm_block_count(adj, space.all & !removed).map(|b| (b, removed))
        })
        .collect();
    found.sort_by(|a, b| b.0.cmp(&a.0).then_with(|| lex_cmp_masks(a.1, b.1)));
    Ok(found
        .into_iter()
        .map(|(b, m)| CmbWitness::from_mask(m, b))
        .collect())
}

/// `b(G) = max { b(H) : H ∈ CMB(G) }`.
pub fn b_invariant(g: &Graph, mode: Mode) -> Result<BInvariant> {
    let space = Space::new(g, mode)?;
    let adj = g.adj();
    let best = (0..space.size())
        .into_par_iter()
        .filter_map(|idx| {
            let removed = space.removed(idx);
            cm_block_count(adj, space.all & !removed).map(|b| (b, removed))
        })
        .reduce_with(better);
    match best {
        Some((value, removed)) => Ok(BInvariant {
            mode,
            value,
            witness: CmbWitness::from_mask(removed, value),
        }),
        None => Err(Error::Precondition(
            "no Cohen-Macaulay block graph arises by deleting cut vertices; try general mode"
                .into(),
        )),
    }
}

/// 1-based indices of the segments holding exactly one whiskered vertex.
pub fn s_of_g(spec: &ChainSpec) -> Result<Vec<usize>> {
    let violations = validate_setup(spec);
    if !violations.is_empty() {
        let list: Vec<String> = violations
            .iter()
            .map(|v| format!("({}) {}", v.condition, v.detail))
            .collect();
        return Err(Error::InvalidChain(list.join("; ")));
    }
    let layout = spec.layout()?;
    let anchors: u64 = spec.whiskers.iter().fold(0, |m, &v| m | bit(v));
    Ok(layout
        .segments
        .iter()
        .enumerate()
        .filter(|(_, seg)| seg.iter().filter(|&&v| anchors & bit(v) != 0).count() == 1)
        .map(|(i, _)| i + 1)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{whiskered_star, Join, Segment, StarParams};

    fn diamond() -> Graph {
        Graph::from_edges(4, [(1, 2), (1, 3), (2, 3), (1, 4), (2, 4)]).unwrap()
    }

    #[test]
    fn chordality() {
        assert!(is_chordal(&Graph::path(5)));
        assert!(!is_chordal(&Graph::cycle(4)));
        assert!(!is_chordal(&Graph::cycle(6)));
        assert!(is_chordal(&diamond()));
        assert!(is_chordal(&Graph::complete(5)));
        assert!(is_chordal(&Graph::empty(3).unwrap()));
    }

    #[test]
    fn block_graphs() {
        assert!(is_block_graph(&Graph::path(4)));
        assert!(is_block_graph(&Graph::complete(4)));
        assert!(!is_block_graph(&Graph::cycle(4)));
        assert!(!is_block_graph(&diamond()));
        let claw = Graph::from_edges(4, [(1, 2), (1, 3), (1, 4)]).unwrap();
        assert!(is_block_graph(&claw));
        assert!(!is_cm_block_graph(&claw));
        let bowtie = Graph::complete(3).glue(3, &Graph::complete(3), 1).unwrap();
        assert!(is_cm_block_graph(&bowtie));
        assert!(is_cm_block_graph(&Graph::path(6)));
    }

    #[test]
    fn counts() {
        assert_eq!(block_count(&Graph::complete(2)).unwrap(), 1);
        assert_eq!(block_count(&Graph::path(4)).unwrap(), 3);
        let paw = Graph::complete(3).whisker(&[3]).unwrap();
        assert_eq!(block_count(&paw).unwrap(), 2);
        assert_eq!(block_count(&Graph::empty(3).unwrap()).unwrap(), 0);
        assert!(block_count(&Graph::cycle(4)).is_err());
        assert!(block_count(&diamond()).is_err());
    }

    #[test]
    fn b_of_small_graphs() {
        for n in 2..7 {
            assert_eq!(
                b_invariant(&Graph::complete(n), Mode::General)
                    .unwrap()
                    .value,
                1
            );
            assert_eq!(
                b_invariant(&Graph::path(n), Mode::General).unwrap().value,
                n - 1
            );
        }
        let c4 = b_invariant(&Graph::cycle(4), Mode::General).unwrap();
        assert_eq!(c4.value, 2);
        assert_eq!(c4.witness.removed, vec![1]);
        assert!(b_invariant(&Graph::cycle(4), Mode::CutVertex).is_err());
        let k3 = enumerate_cmb(&Graph::complete(3), Mode::General).unwrap();
        assert_eq!(
            k3[0],
            CmbWitness {
                removed: vec![],
                block_count: 1
            }
        );
    }

    #[test]
    fn whiskered_square() {
        let g = whiskered_star(&StarParams::new(2, 2, 2)).unwrap();
        let all = enumerate_cmb(&g, Mode::CutVertex).unwrap();
        let removed: Vec<_> = all.iter().map(|w| w.removed.clone()).collect();
        assert!(removed.contains(&vec![1]) && removed.contains(&vec![3]));
        let b = b_invariant(&g, Mode::CutVertex).unwrap();
        assert_eq!(b.value, 3);
        assert_eq!(b.witness.removed, vec![1]);
        assert_eq!(b_invariant(&g, Mode::General).unwrap().value, 3);
        let h = b.witness.subgraph(&g).unwrap();
        assert!(is_cm_block_graph(&h.graph));
        assert_eq!(block_count(&h.graph).unwrap(), 3);
    }

    #[test]
    fn s_of_chains() {
        use Segment::*;
        let k4 = ChainSpec::new(vec![Complete(4)], vec![], vec![1]);
        assert_eq!(s_of_g(&k4).unwrap(), vec![1]);
        let two = ChainSpec::new(vec![C3, C3], vec![Join::EDGE], vec![2]);
        assert_eq!(s_of_g(&two).unwrap(), vec![1, 2]);
        let bad = ChainSpec::new(vec![C3, C3], vec![Join::EDGE], vec![3]);
        assert!(s_of_g(&bad).is_err());
        let chain = crate::families::seven_segment_chain();
        let s = s_of_g(&chain).unwrap();
        assert_eq!(s, vec![1, 3, 4, 6]);
        for i in s {
            assert_ne!(chain.segments[i - 1], C4);
        }
    }

    #[test]
    fn witness_json() {
        let w = CmbWitness {
            removed: vec![1, 3],
            block_count: 4,
        };
        assert_eq!(
            serde_json::to_string(&w).unwrap(),
            r#"{"removed":[1,3],"blocks":4}"#
        );
    }
}
