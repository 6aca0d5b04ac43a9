//! Regularity of `S/J_G` by Hochster's formula, by gluing, and by the block-graph
//! closed form.

use bei_core::parallel::with_threads;
use bei_core::regularity::{
    regularity_auto, regularity_bei, regularity_block_closed_form, regularity_via_gluing,
};
use bei_core::{Graph, PrimeField};

fn main() -> bei_core::Result<()> {
    let theta = Graph::from_edges(6, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 6), (1, 4)])?;
    let report = regularity_bei(&theta, PrimeField::GF2)?;
    let w = report.witness.as_ref().unwrap();
    println!(
        "theta graph: reg {} from H_{} on {:?}",
        report.reg, w.dim, w.sigma
    );

    let triangles = Graph::from_edges(6, [(1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5), (5, 6)])?;
    println!(
        "two triangles and an edge, closed form: {}",
        regularity_block_closed_form(&triangles)?.reg
    );
    println!(
        "two triangles and an edge, Hochster: {}",
        regularity_bei(&triangles, PrimeField::GF2)?.reg
    );

    let glued = Graph::cycle(5)
        .whisker(&[1])?
        .glue(6, &Graph::complete(4), 1)?;
    let sum = regularity_via_gluing(&glued, PrimeField::GF2)?;
    println!("C5 + whisker + K4: parts {:?} sum {}", sum.parts, sum.reg);
    println!(
        "auto picks {:?}",
        regularity_auto(&glued, PrimeField::GF2)?.method
    );

    for p in [2, 3, 32003] {
        let r = regularity_bei(&Graph::cycle(7), PrimeField::new(p)?)?;
        println!("C7 over GF({p}): {}", r.reg);
    }
    let single = with_threads(Some(1), || regularity_bei(&theta, PrimeField::GF3))??;
    println!("{}", single.to_json());
    Ok(())
}
