//! The two graph families: whiskered chains of cycles and whiskered `K_m ⋆_r K_n`.

mod chain;
mod star;

pub use chain::{
    chain_of_cycles, first_cut_vertex, validate_setup, violated_conditions, whiskered_chain,
    ChainLayout, ChainSpec, Condition, Join, Segment, Violation,
};
pub use star::{star_product, whiskered_star, Labeling, StarParams};

use serde::{Deserialize, Serialize};

use crate::cm_block::{b_invariant, Mode};
use crate::error::Result;
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "lowercase")]
pub enum Family {
    Chain(ChainSpec),
    Star(StarParams),
}

impl Family {
    pub fn graph(&self) -> Result<Graph> {
        match self {
            Family::Chain(spec) => whiskered_chain(spec),
            Family::Star(p) => whiskered_star(p),
        }
    }
}

/// The predicted `reg(S/J_G)` for a family member.
///
/// Returns `Ok(None)` for a chain that fails the structural conditions, where no
/// prediction applies.
pub fn expected_regularity(family: &Family) -> Result<Option<usize>> {
    match family {
        Family::Star(p) => {
            p.validate()?;
            let v = match p.r {
                2 if p.m == 2 && p.n == 2 => 3,
                2 => 4,
                r => 2 * r - 1,
            };
            Ok(Some(v))
        }
        Family::Chain(spec) => {
            spec.layout()?;
            if !validate_setup(spec).is_empty() {
                return Ok(None);
            }
            let g = whiskered_chain(spec)?;
            Ok(Some(b_invariant(&g, Mode::CutVertex)?.value))
        }
    }
}

/// A named fixture.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedChain {
    pub name: String,
    pub spec: ChainSpec,
}

/// Setup-valid whiskered chains on at most nine vertices.
pub fn chain_corpus() -> Vec<NamedChain> {
    use Segment::*;
    let e = Join::EDGE;
    let rail = |segments: Vec<Segment>, joins: Vec<Join>| {
        ChainSpec::on_rail(segments, joins).expect("corpus chain")
    };
    let items = [
        ("K3+w", ChainSpec::new(vec![Complete(3)], vec![], vec![1])),
        ("K4+w", ChainSpec::new(vec![Complete(4)], vec![], vec![1])),
        ("C4", rail(vec![C4], vec![])),
        ("K3.C3", rail(vec![Complete(3), C3], vec![e])),
        ("K4.C3", rail(vec![Complete(4), C3], vec![e])),
        ("C4.C3", rail(vec![C4, C3], vec![e])),
        ("K3.C4", rail(vec![Complete(3), C4], vec![e])),
        (
            "K3.C3w.C3",
            rail(vec![Complete(3), C3, C3], vec![Join::W, e]),
        ),
        (
            "K3.C3u.C3",
            rail(vec![Complete(3), C3, C3], vec![Join::U, e]),
        ),
        ("K3.C4.C3", rail(vec![Complete(3), C4, C3], vec![e, e])),
        ("C4.C3w.C3", rail(vec![C4, C3, C3], vec![Join::W, e])),
        (
            "K3.C3w.C4",
            rail(vec![Complete(3), C3, C4], vec![Join::W, e]),
        ),
        ("K4.C4.C3", rail(vec![Complete(4), C4, C3], vec![e, e])),
        (
            "K3.C3w.C3w.C3",
            rail(vec![Complete(3), C3, C3, C3], vec![Join::W, Join::W, e]),
        ),
    ];
    items
        .into_iter()
        .map(|(name, spec)| NamedChain {
            name: name.to_string(),
            spec,
        })
        .collect()
}

/// A sixteen-vertex whiskered chain of seven segments using every join kind.
pub fn seven_segment_chain() -> ChainSpec {
    use Segment::*;
    let e = Join::EDGE;
    ChainSpec::new(
        vec![Complete(4), C4, C3, C3, C3, C3, C4],
        vec![e, Join::W, Join::W, Join::U, Join::W, e],
        vec![3, 5, 9, 11],
    )
}
