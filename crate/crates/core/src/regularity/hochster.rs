use std::sync::atomic::{AtomicUsize, Ordering as AtomicOrdering};

use rayon::prelude::*;

use super::homology::{betti_top_down, Faces};
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::groebner::{max_induced_matching, Monomial, MonomialIdeal};

/// Largest number of ring variables handled by the exact computation.
pub const HOCHSTER_MAX_VARS: usize = 22;

/// The Stanley-Reisner complex of a squarefree ideal restricted to its support: a set
/// is a face iff it contains no generator.
#[derive(Debug, Clone)]
pub struct SimplicialView {
    /// Global variable index of each local vertex.
    pub vars: Vec<usize>,
    /// Generators over local vertices.
    pub forbidden: Vec<u64>,
    /// `containing[v]`: generators through local vertex `v`.
    containing: Vec<Vec<u64>>,
}

impl SimplicialView {
    pub fn new(ideal: &MonomialIdeal) -> Self {
        let support = ideal.support();
        let vars: Vec<usize> = (0..128).filter(|&i| support >> i & 1 == 1).collect();
        let local = |m: Monomial| -> u64 {
            vars.iter()
                .enumerate()
                .filter(|(_, &g)| m >> g & 1 == 1)
                .fold(0, |a, (k, _)| a | 1 << k)
        };
        let forbidden: Vec<u64> = ideal.generators().iter().map(|&g| local(g)).collect();
        let containing = (0..vars.len())
            .map(|v| {
                forbidden
                    .iter()
                    .copied()
                    .filter(|g| g >> v & 1 == 1)
                    .collect()
            })
            .collect();
        SimplicialView {
            vars,
            forbidden,
            containing,
        }
    }

    pub fn is_face(&self, sigma: u64) -> bool {
        self.forbidden.iter().all(|&g| g & !sigma != 0)
    }

    /// Maps a local vertex set back to a monomial.
    pub fn global(&self, sigma: u64) -> Monomial {
        let mut m: Monomial = 0;
        for (k, &g) in self.vars.iter().enumerate() {
            if sigma >> k & 1 == 1 {
                m |= 1 << g;
            }
        }
        m
    }

    /// Faces of the restriction to `sigma`, grouped by size.
    pub(crate) fn faces_within(&self, sigma: u64) -> Faces {
        let mut by_size: Vec<Vec<u64>> = vec![vec![0]];
        let mut stack: Vec<(u64, u64)> = vec![(0, sigma)];
        while let Some((face, candidates)) = stack.pop() {
            let mut rest = candidates;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                let next = face | 1 << v;
                if self.containing[v].iter().any(|&g| g & !next == 0) {
                    continue;
                }
                let size = next.count_ones() as usize;
                if by_size.len() <= size {
                    by_size.push(Vec::new());
                }
                by_size[size].push(next);
                stack.push((next, rest));
            }
        }
        for level in &mut by_size {
            level.sort_unstable();
        }
        Faces { by_size }
    }

    /// An upper bound for the `d + 1` with `H̃_d(Δ|σ) ≠ 0`: a nonzero Betti number in
    /// degree `σ` and homological degree `i` needs `i` generators covering `σ`, and
    /// vertices pairwise apart from every common generator need distinct ones.
    fn taylor_bound(&self, sigma: u64) -> usize {
        let inside: Vec<u64> = self
            .forbidden
            .iter()
            .copied()
            .filter(|&g| g & !sigma == 0)
            .collect();
        let mut order: Vec<(usize, usize)> = Vec::new();
        let mut rest = sigma;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            order.push((inside.iter().filter(|&&g| g >> v & 1 == 1).count(), v));
        }
        order.sort_unstable();
        let mut blocked = 0u64;
        let mut packed = 0;
        for (_, v) in order {
            if blocked >> v & 1 == 1 {
                continue;
            }
            packed += 1;
            blocked |= inside
                .iter()
                .filter(|&&g| g >> v & 1 == 1)
                .fold(0, |a, &g| a | g);
        }
        sigma.count_ones() as usize - packed
    }

    /// True if some `v ∈ σ` has a link in `Δ|σ` that is a cone with apex `u ∈ σ`. Then
    /// `Δ|σ` and `Δ|σ∖v` have the same homology.
    ///
    /// The link of `v` is a cone on `u` iff for every generator `g ⊆ σ` through `u`, the
    /// set `(g ∖ u) ∪ v` contains a generator, necessarily one through `v`.
    fn has_dominated_vertex(&self, sigma: u64) -> bool {
        let inside: Vec<u64> = self
            .forbidden
            .iter()
            .copied()
            .filter(|&g| g & !sigma == 0)
            .collect();
        let mut rest = sigma;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let vb = 1u64 << v;
            let through_v: Vec<u64> = inside
                .iter()
                .filter(|&&h| h & vb != 0)
                .map(|&h| h & !vb)
                .collect();
            let partners = sigma
                & !vb
                & !inside
                    .iter()
                    .filter(|&&g| g & vb != 0)
                    .fold(0, |a, &g| a | g);
            let mut us = partners;
            while us != 0 {
                let u = us.trailing_zeros() as usize;
                us &= us - 1;
                let ub = 1u64 << u;
                let cone = inside
                    .iter()
                    .filter(|&&g| g & ub != 0)
                    .all(|&g| through_v.iter().any(|&h| h & !(g & !ub) == 0));
                if cone {
                    return true;
                }
            }
        }
        false
    }

    /// `σ` is relevant only if it is the union of the generators inside it; otherwise
    /// some vertex of `σ` is a cone point of the restriction.
    fn is_generator_union(&self, sigma: u64) -> bool {
        let u = self
            .forbidden
            .iter()
            .filter(|&&g| g & !sigma == 0)
            .fold(0, |a, &g| a | g);
        u == sigma
    }
}

/// The maximum `d + 1` with `H̃_d(Δ|σ) ≠ 0`, and the lexicographically smallest `σ` (as
/// a monomial) without a dominated vertex realizing it, with its `d`.
pub(crate) fn hochster(ideal: &MonomialIdeal, field: PrimeField) -> Result<(usize, Monomial, i64)> {
    if ideal.num_vars() > HOCHSTER_MAX_VARS {
        return Err(Error::cap(
            "ring variables for Hochster's formula",
            HOCHSTER_MAX_VARS,
            ideal.num_vars(),
        ));
    }
    let view = SimplicialView::new(ideal);
    let k = view.vars.len();
    // any induced matching bounds reg from below, so homology under it need not be computed
    let seed = max_induced_matching(ideal).map_or(0, |m| m.bound);
    let best = AtomicUsize::new(seed);
    let found = (1u64..1 << k)
        .into_par_iter()
        .filter(|&sigma| view.is_generator_union(sigma))
        .filter_map(|sigma| {
            let floor = best.load(AtomicOrdering::Relaxed);
            if view.taylor_bound(sigma) < floor {
                return None;
            }
            if view.has_dominated_vertex(sigma) {
                return None;
            }
            let faces = view.faces_within(sigma);
            if faces.max_size() < floor {
                return None;
            }
            let (&d, _) = betti_top_down(&faces, field, floor as i64 - 1, true)
                .iter()
                .next()?;
            let value = (d + 1) as usize;
            best.fetch_max(value, AtomicOrdering::Relaxed);
            Some((value, view.global(sigma), d))
        })
        .reduce_with(|a, b| {
            let order =
                a.0.cmp(&b.0)
                    .then_with(|| crate::groebner::bits(b.1).cmp(crate::groebner::bits(a.1)));
            if order.is_lt() {
                b
            } else {
                a
            }
        });
    // the empty restriction has H̃_{-1} = k
    Ok(match found {
        Some(hit) if hit.0 > 0 => hit,
        _ => (0, 0, -1),
    })
}
