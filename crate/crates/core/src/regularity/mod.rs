//! Castelnuovo-Mumford regularity `reg(S/I)` of squarefree monomial ideals, and of
//! binomial edge ideals through their initial ideals.

mod hochster;
mod homology;

pub use hochster::{SimplicialView, HOCHSTER_MAX_VARS};
pub use homology::reduced_homology_dims;

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::cm_block::{block_count, is_cm_block_graph};
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::graph::Graph;
use crate::groebner::{initial_ideal, MonomialIdeal};

/// Largest graph handled by [`regularity_bei`].
pub const BEI_MAX_VERTICES: usize = HOCHSTER_MAX_VARS / 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Hochster,
    BlockClosedForm,
    GluingSum,
}

impl std::str::FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "hochster" => Ok(Method::Hochster),
            "block_closed_form" | "closed-form" | "block" => Ok(Method::BlockClosedForm),
            "gluing" | "gluing_sum" => Ok(Method::GluingSum),
            _ => Err(Error::Parse(format!("unknown method {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    /// Variables of `σ`.
    pub sigma: Vec<String>,
    /// Homological degree `d` with `H̃_d(Δ|σ) ≠ 0` and `reg = d + 1`.
    pub dim: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegularityReport {
    pub reg: usize,
    pub method: Method,
    /// Coefficient field characteristic; absent for the characteristic-free closed form.
    #[serde(rename = "char")]
    pub characteristic: Option<u32>,
    pub witness: Option<Witness>,
    /// Per-factor values for a gluing sum.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub parts: Vec<usize>,
    pub ms: u64,
}

impl RegularityReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

fn elapsed_ms(start: Instant) -> u64 {
    start.elapsed().as_millis() as u64
}

/// `reg(S/I)` by Hochster's formula: the largest `d + 1` with `H̃_d(Δ|σ) ≠ 0` for some
/// set `σ` of variables.
pub fn regularity_squarefree(ideal: &MonomialIdeal, field: PrimeField) -> Result<RegularityReport> {
    let start = Instant::now();
    let (reg, sigma, dim) = hochster::hochster(ideal, field)?;
    Ok(RegularityReport {
        reg,
        method: Method::Hochster,
        characteristic: Some(field.characteristic()),
        witness: Some(Witness {
            sigma: ideal.names(sigma),
            dim,
        }),
        parts: Vec::new(),
        ms: elapsed_ms(start),
    })
}

/// `reg(S/J_G) = reg(S/in(J_G))`.
pub fn regularity_bei(g: &Graph, field: PrimeField) -> Result<RegularityReport> {
    if g.n() > BEI_MAX_VERTICES {
        return Err(Error::cap(
            "graph vertices for Hochster's formula",
            BEI_MAX_VERTICES,
            g.n(),
        ));
    }
    let start = Instant::now();
    let mut report = regularity_squarefree(&initial_ideal(g)?, field)?;
    report.ms = elapsed_ms(start);
    Ok(report)
}

/// `reg(S/J_H) = b(H)` for a Cohen-Macaulay block graph `H`.
pub fn regularity_block_closed_form(h: &Graph) -> Result<RegularityReport> {
    let start = Instant::now();
    if !is_cm_block_graph(h) {
        return Err(Error::Precondition(
            "closed form needs a Cohen-Macaulay block graph".into(),
        ));
    }
    Ok(RegularityReport {
        reg: block_count(h)?,
        method: Method::BlockClosedForm,
        characteristic: None,
        witness: None,
        parts: Vec::new(),
        ms: elapsed_ms(start),
    })
}

/// Sum of the regularities of the indecomposable factors of every component. Each
/// factor uses the closed form when it applies and Hochster's formula otherwise.
pub fn regularity_via_gluing(g: &Graph, field: PrimeField) -> Result<RegularityReport> {
    let start = Instant::now();
    let mut parts = Vec::new();
    for comp in g.components() {
        let sub = g.induced_subgraph(&comp)?;
        for factor in sub.graph.decompose()? {
            let f = &factor.graph;
            let value = if is_cm_block_graph(f) {
                block_count(f)?
            } else {
                regularity_bei(f, field)?.reg
            };
            parts.push(value);
        }
    }
    Ok(RegularityReport {
        reg: parts.iter().sum(),
        method: Method::GluingSum,
        characteristic: Some(field.characteristic()),
        witness: None,
        parts,
        ms: elapsed_ms(start),
    })
}

/// Closed form if `g` is a Cohen-Macaulay block graph, else a gluing sum if `g` splits,
/// else Hochster's formula.
pub fn regularity_auto(g: &Graph, field: PrimeField) -> Result<RegularityReport> {
    if is_cm_block_graph(g) {
        return regularity_block_closed_form(g);
    }
    let splits = !g.is_connected() || g.decompose()?.len() > 1;
    if splits {
        regularity_via_gluing(g, field)
    } else {
        regularity_bei(g, field)
    }
}
