//! Reproduction suites for the regularity results, each instance reported as a
//! [`VerifyOutcome`].

use std::fmt;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::cm_block::{b_invariant, Mode};
use crate::error::{Error, Result};
use crate::families::{
    chain_corpus, expected_regularity, first_cut_vertex, whiskered_chain, whiskered_star, Family,
    StarParams,
};
use crate::field::PrimeField;
use crate::graph::Graph;
use crate::groebner::{buchberger_oracle, initial_ideal, paper_matching, verify_induced_matching};
use crate::regularity::regularity_bei;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Chain,
    Star,
    Lemma37,
    Matching,
    Oracle,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::Chain,
        Suite::Star,
        Suite::Lemma37,
        Suite::Matching,
        Suite::Oracle,
    ];
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Chain => "chain",
            Suite::Star => "star",
            Suite::Lemma37 => "lemma37",
            Suite::Matching => "matching",
            Suite::Oracle => "oracle",
        })
    }
}

impl std::str::FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.to_string() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

/// How `computed` must compare with `expected`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    Eq,
    Lt,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyOutcome {
    pub theorem: String,
    pub instance: String,
    pub expected: i64,
    pub computed: i64,
    pub relation: Relation,
    pub pass: bool,
    pub ms: u64,
}

impl VerifyOutcome {
    fn new(
        theorem: &str,
        instance: String,
        expected: i64,
        computed: i64,
        relation: Relation,
        start: Instant,
    ) -> Self {
        let pass = match relation {
            Relation::Eq => computed == expected,
            Relation::Lt => computed < expected,
        };
        VerifyOutcome {
            theorem: theorem.to_string(),
            instance,
            expected,
            computed,
            relation,
            pass,
            ms: start.elapsed().as_millis() as u64,
        }
    }
}

/// The star instances: the four `r = 2` cases and `(3, 3, 3)`.
pub const STAR_INSTANCES: [(usize, usize, usize); 5] =
    [(2, 2, 2), (3, 2, 2), (2, 3, 2), (3, 3, 2), (3, 3, 3)];

/// Instances for the explicit induced matching.
pub const MATCHING_INSTANCES: [(usize, usize, usize); 3] = [(2, 2, 2), (3, 3, 3), (4, 3, 3)];

pub const ORACLE_RANDOM_COUNT: usize = 200;
pub const ORACLE_SEED: u64 = 0x5eed_0b5e;

pub fn run_suite(suite: Suite, field: PrimeField) -> Result<Vec<VerifyOutcome>> {
    match suite {
        Suite::Chain => chain_suite(field),
        Suite::Star => star_suite(field),
        Suite::Lemma37 => lemma37_suite(),
        Suite::Matching => matching_suite(),
        Suite::Oracle => oracle_suite(),
    }
}

fn chain_suite(field: PrimeField) -> Result<Vec<VerifyOutcome>> {
    let mut out = Vec::new();
    for c in chain_corpus() {
        let start = Instant::now();
        let g = whiskered_chain(&c.spec)?;
        let b_cut = b_invariant(&g, Mode::CutVertex)?.value as i64;
        let reg = regularity_bei(&g, field)?.reg as i64;
        out.push(VerifyOutcome::new(
            "reg = b(G)",
            c.name.clone(),
            b_cut,
            reg,
            Relation::Eq,
            start,
        ));
        let start = Instant::now();
        let b_gen = b_invariant(&g, Mode::General)?.value as i64;
        out.push(VerifyOutcome::new(
            "b cut_vertex = b general",
            c.name,
            b_cut,
            b_gen,
            Relation::Eq,
            start,
        ));
    }
    Ok(out)
}

fn star_suite(field: PrimeField) -> Result<Vec<VerifyOutcome>> {
    STAR_INSTANCES
        .iter()
        .map(|&(m, n, r)| {
            let start = Instant::now();
            let p = StarParams::new(m, n, r);
            let expected =
                expected_regularity(&Family::Star(p))?.expect("stars always predict") as i64;
            let reg = regularity_bei(&whiskered_star(&p)?, field)?.reg as i64;
            let theorem = if r == 2 {
                "star r = 2"
            } else {
                "star reg = 2r - 1"
            };
            Ok(VerifyOutcome::new(
                theorem,
                format!("({m},{n},{r})"),
                expected,
                reg,
                Relation::Eq,
                start,
            ))
        })
        .collect()
}

fn lemma37_suite() -> Result<Vec<VerifyOutcome>> {
    let mut out = Vec::new();
    for c in chain_corpus() {
        let Some(w) = first_cut_vertex(&c.spec)? else {
            continue;
        };
        let g = whiskered_chain(&c.spec)?;
        let gw = g.neighbor_completion(w)?;
        for mode in [Mode::CutVertex, Mode::General] {
            let start = Instant::now();
            let b = b_invariant(&g, mode)?.value as i64;
            let bw = b_invariant(&gw, mode)?.value as i64;
            let tag = match mode {
                Mode::CutVertex => "cut_vertex",
                Mode::General => "general",
            };
            out.push(VerifyOutcome::new(
                "b(G_w) < b(G)",
                format!("{} w={w} {tag}", c.name),
                b,
                bw,
                Relation::Lt,
                start,
            ));
        }
    }
    Ok(out)
}

fn matching_suite() -> Result<Vec<VerifyOutcome>> {
    MATCHING_INSTANCES
        .iter()
        .map(|&(m, n, r)| {
            let start = Instant::now();
            let p = StarParams::new(m, n, r).groebner();
            let ideal = initial_ideal(&whiskered_star(&p)?)?;
            let matching = paper_matching(&p)?;
            let induced = verify_induced_matching(&ideal, &matching)?;
            let bound: usize = matching.iter().map(|e| e.count_ones() as usize - 1).sum();
            let computed = if induced { bound as i64 } else { -1 };
            Ok(VerifyOutcome::new(
                "explicit induced matching",
                format!("({m},{n},{r})"),
                (2 * r - 1) as i64,
                computed,
                Relation::Eq,
                start,
            ))
        })
        .collect()
}

fn oracle_suite() -> Result<Vec<VerifyOutcome>> {
    let mut out = Vec::new();
    for n in 1..=4 {
        let start = Instant::now();
        let graphs = connected_graphs(n);
        let agree = count_agreeing(&graphs)?;
        out.push(VerifyOutcome::new(
            "initial ideal = Buchberger",
            format!("all connected, n={n}"),
            graphs.len() as i64,
            agree as i64,
            Relation::Eq,
            start,
        ));
    }
    let start = Instant::now();
    let graphs = random_connected_graphs(ORACLE_RANDOM_COUNT, 5..=6, ORACLE_SEED);
    let agree = count_agreeing(&graphs)?;
    out.push(VerifyOutcome::new(
        "initial ideal = Buchberger",
        format!("{ORACLE_RANDOM_COUNT} random connected, n=5..6"),
        graphs.len() as i64,
        agree as i64,
        Relation::Eq,
        start,
    ));
    Ok(out)
}

fn count_agreeing(graphs: &[Graph]) -> Result<usize> {
    use rayon::prelude::*;
    let flags = graphs
        .par_iter()
        .map(|g| Ok(initial_ideal(g)? == buchberger_oracle(g, PrimeField::GF32003)?))
        .collect::<Result<Vec<bool>>>()?;
    Ok(flags.into_iter().filter(|&b| b).count())
}

/// Every connected labeled graph on `n` vertices.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (1..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
        .collect();
    (0u64..1 << pairs.len())
        .map(|m| {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(k, _)| m >> k & 1 == 1)
                .map(|(_, &e)| e);
            Graph::from_edges(n, edges).expect("valid edges")
        })
        .filter(Graph::is_connected)
        .collect()
}

/// `count` connected labeled graphs with vertex counts drawn from `sizes`, each edge
/// present with probability one half, reproducible from `seed`.
pub fn random_connected_graphs(
    count: usize,
    sizes: std::ops::RangeInclusive<usize>,
    seed: u64,
) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.gen_range(sizes.clone());
        let mut edges = Vec::new();
        for i in 1..=n {
            for j in i + 1..=n {
                if rng.gen_bool(0.5) {
                    edges.push((i, j));
                }
            }
        }
        let g = Graph::from_edges(n, edges).expect("valid edges");
        if g.is_connected() {
            out.push(g);
        }
    }
    out
}

/// A fixed-width pass/fail table.
pub fn format_table(outcomes: &[VerifyOutcome]) -> String {
    let mut s = String::new();
    for o in outcomes {
        let rel = match o.relation {
            Relation::Eq => "=",
            Relation::Lt => "<",
        };
        s.push_str(&format!(
            "{:4}  {:28} {:32} computed {:>4} {} expected {:>4}  {:>7} ms\n",
            if o.pass { "PASS" } else { "FAIL" },
            o.theorem,
            o.instance,
            o.computed,
            rel,
            o.expected,
            o.ms
        ));
    }
    s
}
