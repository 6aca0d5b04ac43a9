//! A small Buchberger implementation, used as an independent check of the
//! admissible-path description.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use super::ideal::{Monomial, MonomialIdeal};
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::graph::Graph;

pub const ORACLE_MAX_VERTICES: usize = 6;
const VARS: usize = 2 * ORACLE_MAX_VERTICES;

/// Exponent vector; index 0 is `x_1`. Array order is lex with `x_1` largest.
type Exps = [u8; VARS];

#[derive(Debug, Clone, PartialEq, Eq)]
struct Poly {
    /// Terms in strictly decreasing monomial order, nonzero coefficients.
    terms: Vec<(Exps, u32)>,
}

fn divides(a: &Exps, b: &Exps) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn lcm(a: &Exps, b: &Exps) -> Exps {
    std::array::from_fn(|k| a[k].max(b[k]))
}

fn quotient(a: &Exps, b: &Exps) -> Exps {
    std::array::from_fn(|k| a[k] - b[k])
}

fn times(a: &Exps, b: &Exps) -> Exps {
    std::array::from_fn(|k| a[k] + b[k])
}

fn degree(a: &Exps) -> u32 {
    a.iter().map(|&e| e as u32).sum()
}

impl Poly {
    fn lead(&self) -> Option<&(Exps, u32)> {
        self.terms.first()
    }

    /// `self - c * t * other`.
    fn sub_scaled(&self, c: u32, t: &Exps, other: &Poly, f: PrimeField) -> Poly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other
            .terms
            .iter()
            .map(|(m, k)| (times(m, t), f.neg(f.mul(c, *k))))
            .peekable();
        loop {
            match (a.peek(), b.peek()) {
                (Some(x), Some(y)) => match x.0.cmp(&y.0) {
                    Ordering::Greater => out.push(*a.next().expect("peeked")),
                    Ordering::Less => out.push(b.next().expect("peeked")),
                    Ordering::Equal => {
                        let (m, k1) = *a.next().expect("peeked");
                        let (_, k2) = b.next().expect("peeked");
                        let s = f.add(k1, k2);
                        if s != 0 {
                            out.push((m, s));
                        }
                    }
                },
                (Some(_), None) => out.push(*a.next().expect("peeked")),
                (None, Some(_)) => out.push(b.next().expect("peeked")),
                (None, None) => break,
            }
        }
        Poly { terms: out }
    }

    fn monic(mut self, f: PrimeField) -> Poly {
        if let Some(&(_, c)) = self.lead() {
            let inv = f.inv(c);
            for t in &mut self.terms {
                t.1 = f.mul(t.1, inv);
            }
        }
        self
    }
}

/// Full reduction of `h` by `basis` (all monic).
fn reduce(mut h: Poly, basis: &[Poly], f: PrimeField) -> Poly {
    let mut rest = Vec::new();
    while let Some(&(m, c)) = h.lead() {
        match basis
            .iter()
            .find(|g| divides(&g.lead().expect("nonzero").0, &m))
        {
            Some(g) => {
                let t = quotient(&m, &g.lead().expect("nonzero").0);
                h = h.sub_scaled(c, &t, g, f);
            }
            None => {
                rest.push((m, c));
                h.terms.remove(0);
            }
        }
    }
    Poly { terms: rest }
}

fn s_poly(a: &Poly, b: &Poly, f: PrimeField) -> Poly {
    let (la, lb) = (&a.lead().expect("nonzero").0, &b.lead().expect("nonzero").0);
    let l = lcm(la, lb);
    let ta = quotient(&l, la);
    let tb = quotient(&l, lb);
    let scaled_a = Poly { terms: Vec::new() }.sub_scaled(f.neg(1), &ta, a, f);
    scaled_a.sub_scaled(1, &tb, b, f)
}

/// `x_i y_j - x_j y_i` for `i < j`; `x_i y_j` leads.
fn generator(i: usize, j: usize, minus_one: u32) -> Poly {
    let mut xi_yj = [0u8; VARS];
    xi_yj[i - 1] = 1;
    xi_yj[ORACLE_MAX_VERTICES + j - 1] = 1;
    let mut xj_yi = [0u8; VARS];
    xj_yi[j - 1] = 1;
    xj_yi[ORACLE_MAX_VERTICES + i - 1] = 1;
    Poly {
        terms: vec![(xi_yj, 1), (xj_yi, minus_one)],
    }
}

/// Minimal generators of `in(J_G)` under lex `x_1 > ... > x_n > y_1 > ... > y_n`,
/// computed by Buchberger's algorithm over `field` with the product and chain criteria.
pub fn buchberger_oracle(g: &Graph, field: PrimeField) -> Result<MonomialIdeal> {
    let n = g.n();
    if n > ORACLE_MAX_VERTICES {
        return Err(Error::cap(
            "vertices for the Buchberger oracle",
            ORACLE_MAX_VERTICES,
            n,
        ));
    }
    let minus_one = field.neg(1);
    let mut basis: Vec<Poly> = g
        .edges()
        .into_iter()
        .map(|(i, j)| generator(i, j, minus_one))
        .collect();
    // pending pairs keyed by (degree of lcm, i, j)
    let mut pending: BTreeSet<(u32, usize, usize)> = BTreeSet::new();
    let lead = |p: &Poly| p.lead().expect("nonzero").0;
    for j in 0..basis.len() {
        for i in 0..j {
            pending.insert((degree(&lcm(&lead(&basis[i]), &lead(&basis[j]))), i, j));
        }
    }
    let pair = |a: usize, b: usize| (a.min(b), a.max(b));
    let mut done: BTreeSet<(usize, usize)> = BTreeSet::new();
    while let Some(key) = pending.pop_first() {
        let (_, i, j) = key;
        done.insert((i, j));
        let (li, lj) = (lead(&basis[i]), lead(&basis[j]));
        if times(&li, &lj) == lcm(&li, &lj) {
            continue;
        }
        let l = lcm(&li, &lj);
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && divides(&lead(&basis[k]), &l)
                && done.contains(&pair(i, k))
                && done.contains(&pair(j, k))
        });
        if chain {
            continue;
        }
        let h = reduce(s_poly(&basis[i], &basis[j], field), &basis, field);
        if h.lead().is_none() {
            continue;
        }
        let h = h.monic(field);
        let k = basis.len();
        let lh = lead(&h);
        basis.push(h);
        for (a, f) in basis[..k].iter().enumerate() {
            pending.insert((degree(&lcm(&lead(f), &lh)), a, k));
        }
    }
    let mut gens: Vec<Monomial> = Vec::new();
    for p in &basis {
        let m = lead(p);
        if m.iter().any(|&e| e > 1) {
            // a non-squarefree leading term is only acceptable if it is redundant
            if basis.iter().any(|q| {
                let lq = lead(q);
                lq != m && divides(&lq, &m) && lq.iter().all(|&e| e <= 1)
            }) {
                continue;
            }
            return Err(Error::Internal(
                "initial ideal has a non-squarefree minimal generator".into(),
            ));
        }
        let mut bits: Monomial = 0;
        for (k, &e) in m.iter().enumerate() {
            if e == 1 {
                let idx = if k < ORACLE_MAX_VERTICES {
                    k
                } else {
                    n + k - ORACLE_MAX_VERTICES
                };
                bits |= 1 << idx;
            }
        }
        gens.push(bits);
    }
    MonomialIdeal::new(n, gens)
}
