//! Induced matchings of the clutter of a squarefree monomial ideal.

use serde::{Serialize, Serializer};

use super::ideal::{Monomial, MonomialIdeal};
use crate::error::{Error, Result};
use crate::families::{Labeling, StarParams};

/// Largest generator count accepted by the exact search.
pub const MATCHING_CAP: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedMatching {
    pub n: usize,
    pub edges: Vec<Monomial>,
    /// `Σ (|e| - 1)` over the matching.
    pub bound: usize,
}

impl Serialize for InducedMatching {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Out {
            matching: Vec<Vec<String>>,
            bound: usize,
        }
        Out {
            matching: self
                .edges
                .iter()
                .map(|&e| super::ideal::names(self.n, e))
                .collect(),
            bound: self.bound,
        }
        .serialize(s)
    }
}

fn weight(e: Monomial) -> usize {
    e.count_ones() as usize - 1
}

/// Pairwise disjoint generators whose union contains no further generator.
pub fn verify_induced_matching(ideal: &MonomialIdeal, matching: &[Monomial]) -> Result<bool> {
    if let Some(&bad) = matching.iter().find(|&&m| !ideal.contains_generator(m)) {
        return Err(Error::Precondition(format!(
            "{} is not a generator of the ideal",
            ideal.names(bad).concat()
        )));
    }
    let mut union: Monomial = 0;
    for &e in matching {
        if union & e != 0 {
            return Ok(false);
        }
        union |= e;
    }
    let inside = ideal
        .generators()
        .iter()
        .filter(|&&g| g & !union == 0)
        .count();
    Ok(inside == matching.len())
}

struct Search<'a> {
    gens: &'a [Monomial],
    max_size: usize,
    best: (usize, Vec<usize>),
    chosen: Vec<usize>,
}

impl Search<'_> {
    fn contained(&self, union: Monomial) -> usize {
        self.gens.iter().filter(|&&g| g & !union == 0).count()
    }

    fn run(&mut self, start: usize, union: Monomial, w: usize) {
        if w > self.best.0 {
            self.best = (w, self.chosen.clone());
        }
        let candidates: Vec<usize> = (start..self.gens.len())
            .filter(|&k| self.gens[k] & union == 0)
            .collect();
        // greedy bound: the candidates' weights, and the free variables they can cover
        let sum: usize = candidates.iter().map(|&k| weight(self.gens[k])).sum();
        let free = candidates
            .iter()
            .fold(0 as Monomial, |a, &k| a | self.gens[k])
            .count_ones() as usize;
        let by_vars = free * (self.max_size - 1) / self.max_size;
        if w + sum.min(by_vars) <= self.best.0 {
            return;
        }
        for &k in &candidates {
            let e = self.gens[k];
            let next = union | e;
            if self.contained(next) != self.chosen.len() + 1 {
                continue;
            }
            self.chosen.push(k);
            self.run(k + 1, next, w + weight(e));
            self.chosen.pop();
        }
    }
}

/// A maximum-weight induced matching and its weight `Σ (|e| - 1)`, a lower bound for
/// `reg(S/I)`. Ties go to the lexicographically first generator list.
pub fn max_induced_matching(ideal: &MonomialIdeal) -> Result<InducedMatching> {
    let gens = ideal.generators();
    if gens.len() > MATCHING_CAP {
        return Err(Error::cap(
            "generators for exact induced matching",
            MATCHING_CAP,
            gens.len(),
        ));
    }
    let max_size = gens
        .iter()
        .map(|g| g.count_ones() as usize)
        .max()
        .unwrap_or(1)
        .max(1);
    let mut search = Search {
        gens,
        max_size,
        best: (0, Vec::new()),
        chosen: Vec::new(),
    };
    search.run(0, 0, 0);
    let edges = search.best.1.iter().map(|&k| gens[k]).collect();
    Ok(InducedMatching {
        n: ideal.n(),
        edges,
        bound: search.best.0,
    })
}

/// The matching `{x_1 y_2} ∪ {x_{i+2} y_{m+n+i} : 1 <= i <= 2r-2}` of a whiskered star in
/// its Gröbner labeling.
pub fn paper_matching(p: &StarParams) -> Result<Vec<Monomial>> {
    p.validate()?;
    if p.labeling != Labeling::Groebner {
        return Err(Error::InvalidFamily(
            "the explicit matching needs the groebner labeling".into(),
        ));
    }
    let total = p.m + p.n + 2 * p.r - 2;
    let x = |i: usize| -> Monomial { 1 << (i - 1) };
    let y = |i: usize| -> Monomial { 1 << (total + i - 1) };
    let mut out = vec![x(1) | y(2)];
    out.extend((1..=2 * p.r - 2).map(|i| x(i + 2) | y(p.m + p.n + i)));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::groebner::initial_ideal;

    #[test]
    fn p3_matching() {
        let i = initial_ideal(&Graph::path(3)).unwrap();
        let m = max_induced_matching(&i).unwrap();
        assert_eq!(m.bound, 2);
        assert_eq!(m.edges.len(), 2);
        assert!(verify_induced_matching(&i, &m.edges).unwrap());
        assert_eq!(
            serde_json::to_string(&m).unwrap(),
            r#"{"matching":[["x1","y2"],["x2","y3"]],"bound":2}"#
        );
    }

    #[test]
    fn single_generator() {
        let i = MonomialIdeal::new(2, [0b1001]).unwrap();
        assert_eq!(max_induced_matching(&i).unwrap().bound, 1);
        let empty = MonomialIdeal::new(2, []).unwrap();
        assert_eq!(max_induced_matching(&empty).unwrap().bound, 0);
    }

    #[test]
    fn triangle_pair_is_not_induced() {
        let i = initial_ideal(&Graph::complete(3)).unwrap();
        let m = [i.x(1) | i.y(2), i.x(2) | i.y(3)];
        assert!(!verify_induced_matching(&i, &m).unwrap());
        assert!(verify_induced_matching(&i, &[i.x(1) | i.y(3) | i.x(2)]).is_err());
    }

    #[test]
    fn paper_matching_shape() {
        let m = paper_matching(&StarParams::new(2, 2, 2).groebner()).unwrap();
        let i = MonomialIdeal::new(6, m.clone()).unwrap();
        let names: Vec<String> = m.iter().map(|&e| i.names(e).concat()).collect();
        assert_eq!(names, vec!["x1y2", "x3y5", "x4y6"]);
        assert_eq!(
            paper_matching(&StarParams::new(3, 3, 3).groebner())
                .unwrap()
                .len(),
            5
        );
        assert!(paper_matching(&StarParams::new(3, 3, 3)).is_err());
    }
}
