//! The graphs `K_m ⋆_r K_n` built from two cliques joined by `r` disjoint rungs.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Labeling {
    /// `K_m` on `1..=m`, `K_n` on `m+1..=m+n`, rungs `{i, m+i}`.
    #[default]
    Original,
    /// Rung endpoints interleaved as `{2i-1, 2i}` so that the rungs come first in the
    /// term order.
    Groebner,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StarParams {
    pub m: usize,
    pub n: usize,
    pub r: usize,
    #[serde(default)]
    pub labeling: Labeling,
}

impl StarParams {
    pub fn new(m: usize, n: usize, r: usize) -> Self {
        StarParams {
            m,
            n,
            r,
            labeling: Labeling::Original,
        }
    }

    pub fn groebner(self) -> Self {
        StarParams {
            labeling: Labeling::Groebner,
            ..self
        }
    }

    pub fn validate(&self) -> Result<()> {
        let StarParams { m, n, r, .. } = *self;
        if m < 2 || n < 2 || r < 2 || r > m.min(n) {
            return Err(Error::InvalidFamily(format!(
                "need 2 <= r <= min(m, n), got m = {m}, n = {n}, r = {r}"
            )));
        }
        Ok(())
    }

    /// Vertex sets of the two cliques.
    pub fn cliques(&self) -> (Vec<usize>, Vec<usize>) {
        let StarParams { m, n, r, labeling } = *self;
        match labeling {
            Labeling::Original => ((1..=m).collect(), (m + 1..=m + n).collect()),
            Labeling::Groebner => {
                let left = (1..=r)
                    .map(|i| 2 * i - 1)
                    .chain(2 * r + 1..=2 * r + (m - r));
                let right = (1..=r).map(|i| 2 * i).chain(2 * r + (m - r) + 1..=m + n);
                (left.collect(), right.collect())
            }
        }
    }

    pub fn rungs(&self) -> Vec<(usize, usize)> {
        let StarParams { m, r, labeling, .. } = *self;
        match labeling {
            Labeling::Original => (1..=r).map(|i| (i, m + i)).collect(),
            Labeling::Groebner => (1..=r).map(|i| (2 * i - 1, 2 * i)).collect(),
        }
    }

    /// Anchors of the `2r - 2` whiskers, in pendant order.
    pub fn whisker_anchors(&self) -> Vec<usize> {
        let StarParams { m, r, labeling, .. } = *self;
        match labeling {
            Labeling::Original => (1..r).chain((1..r).map(|i| m + i)).collect(),
            Labeling::Groebner => (1..=2 * r - 2).map(|i| i + 2).collect(),
        }
    }
}

/// `K_m ⋆_r K_n`.
pub fn star_product(p: &StarParams) -> Result<Graph> {
    p.validate()?;
    let (left, right) = p.cliques();
    let mut edges = Vec::new();
    for side in [&left, &right] {
        for (a, &x) in side.iter().enumerate() {
            for &y in &side[a + 1..] {
                edges.push((x, y));
            }
        }
    }
    edges.extend(p.rungs());
    Graph::from_edges(p.m + p.n, edges)
}

/// `K_m ⋆_r K_n` with `2r - 2` whiskers, pendants labeled from `m + n + 1`.
pub fn whiskered_star(p: &StarParams) -> Result<Graph> {
    star_product(p)?.whisker(&p.whisker_anchors())
}
