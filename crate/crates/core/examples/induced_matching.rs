//! Induced matchings of `in(J_G)` bound the regularity from below.

use bei_core::families::{whiskered_star, StarParams};
use bei_core::groebner::{
    initial_ideal, max_induced_matching, paper_matching, verify_induced_matching,
};
use bei_core::regularity::regularity_bei;
use bei_core::{Graph, PrimeField};

fn main() -> bei_core::Result<()> {
    let g = Graph::cycle(6);
    let ideal = initial_ideal(&g)?;
    let best = max_induced_matching(&ideal)?;
    println!(
        "C6: {} generators, matching bound {}, reg {}",
        ideal.len(),
        best.bound,
        regularity_bei(&g, PrimeField::GF2)?.reg
    );
    println!("{}", serde_json::to_string(&best).unwrap());

    for (m, n, r) in [(3, 3, 3), (4, 3, 3), (4, 4, 4), (5, 5, 5)] {
        let p = StarParams::new(m, n, r).groebner();
        let ideal = initial_ideal(&whiskered_star(&p)?)?;
        let matching = paper_matching(&p)?;
        let bound: usize = matching.iter().map(|e| e.count_ones() as usize - 1).sum();
        let names: Vec<String> = matching.iter().map(|&e| ideal.names(e).concat()).collect();
        println!(
            "({m},{n},{r}): induced {} bound {bound} = 2r - 1: {}",
            verify_induced_matching(&ideal, &matching)?,
            names.join(" ")
        );
    }
    Ok(())
}
