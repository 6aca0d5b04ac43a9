use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::ideal::{Monomial, MonomialIdeal};
use crate::error::{Error, Result};
use crate::graph::{bit, Graph};

/// A path `i = i_0, ..., i_k = j` with `i < j`, every interior vertex outside `[i, j]`,
/// and no chords.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct AdmissiblePath {
    pub vertices: Vec<usize>,
}

impl AdmissiblePath {
    pub fn endpoints(&self) -> (usize, usize) {
        (
            self.vertices[0],
            *self.vertices.last().expect("nonempty path"),
        )
    }

    pub fn interior(&self) -> &[usize] {
        &self.vertices[1..self.vertices.len() - 1]
    }

    /// Checks the defining conditions against `g`.
    pub fn is_admissible_in(&self, g: &Graph) -> bool {
        let v = &self.vertices;
        if v.len() < 2 || v.iter().any(|&x| x == 0 || x > g.n()) {
            return false;
        }
        let (i, j) = self.endpoints();
        let mut seen = 0u64;
        for &x in v {
            if seen & bit(x) != 0 {
                return false;
            }
            seen |= bit(x);
        }
        i < j
            && v.windows(2).all(|w| g.has_edge(w[0], w[1]))
            && self.interior().iter().all(|&x| x < i || x > j)
            && g.induced_by_mask(seen).graph.edge_count() == v.len() - 1
    }
}

/// `u_π x_i y_j`, with `u_π` the product of `x_v` over interior `v > j` and `y_v` over
/// interior `v < i`.
pub fn path_monomial(n: usize, path: &AdmissiblePath) -> Monomial {
    let (i, j) = path.endpoints();
    let mut m: Monomial = 1 << (i - 1) | 1 << (n + j - 1);
    for &v in path.interior() {
        m |= if v > j {
            1 << (v - 1)
        } else {
            1 << (n + v - 1)
        };
    }
    m
}

fn paths_between(g: &Graph, i: usize, j: usize, out: &mut Vec<AdmissiblePath>) {
    fn extend(
        g: &Graph,
        i: usize,
        j: usize,
        path: &mut Vec<usize>,
        used: u64,
        out: &mut Vec<AdmissiblePath>,
    ) {
        let last = *path.last().expect("nonempty");
        let allowed = |v: usize| v < i || v > j;
        for v in g.neighbors(last) {
            if used & bit(v) != 0 {
                continue;
            }
            // a chord from v back into the path would survive to the end
            if g.neighbor_mask(v) & used != bit(last) {
                continue;
            }
            if v == j {
                path.push(v);
                out.push(AdmissiblePath {
                    vertices: path.clone(),
                });
                path.pop();
            } else if allowed(v) {
                path.push(v);
                extend(g, i, j, path, used | bit(v), out);
                path.pop();
            }
        }
    }
    let mut path = vec![i];
    extend(g, i, j, &mut path, bit(i), out);
}

/// All admissible paths of `g`, ordered by endpoints and then by vertex sequence.
pub fn enumerate_admissible_paths(g: &Graph) -> Vec<AdmissiblePath> {
    let n = g.n();
    let pairs: Vec<(usize, usize)> = (1..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
        .collect();
    let mut all: Vec<AdmissiblePath> = pairs
        .into_par_iter()
        .flat_map_iter(|(i, j)| {
            let mut out = Vec::new();
            paths_between(g, i, j, &mut out);
            out.sort();
            out
        })
        .collect();
    all.sort_by(|a, b| a.endpoints().cmp(&b.endpoints()).then_with(|| a.cmp(b)));
    all
}

/// `in(J_G)` under lex `x_1 > ... > x_n > y_1 > ... > y_n`, generated by the
/// admissible-path monomials.
///
/// Fails with [`Error::Internal`] if those monomials are not already minimal.
pub fn initial_ideal(g: &Graph) -> Result<MonomialIdeal> {
    let paths = enumerate_admissible_paths(g);
    let monomials: Vec<Monomial> = paths.iter().map(|p| path_monomial(g.n(), p)).collect();
    MonomialIdeal::new_minimal(g.n(), monomials).map_err(|e| match e {
        Error::Internal(msg) => {
            Error::Internal(format!("admissible-path monomials are not minimal: {msg}"))
        }
        other => other,
    })
}
