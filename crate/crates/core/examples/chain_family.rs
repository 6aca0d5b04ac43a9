//! Chains of cycles: layouts, structural validation and the whiskered graph.

use bei_core::cm_block::s_of_g;
use bei_core::families::{
    chain_corpus, chain_of_cycles, seven_segment_chain, validate_setup, whiskered_chain, ChainSpec,
    Join, Segment,
};

fn main() -> bei_core::Result<()> {
    let spec = seven_segment_chain();
    let layout = spec.layout()?;
    let block = chain_of_cycles(&spec)?;
    println!("segments {:?}", spec.segments);
    for (i, seg) in layout.segments.iter().enumerate() {
        println!("  D{} = {seg:?}", i + 1);
    }
    println!("w rail {:?}, u rail {:?}", layout.w_rail(), layout.u_rail());
    println!(
        "block: {} vertices, cycle rank {}",
        block.n(),
        block.cycle_rank()?
    );
    let g = whiskered_chain(&spec)?;
    println!(
        "whiskered: {} vertices, cut vertices {:?}",
        g.n(),
        g.cut_vertices()
    );
    println!("segments with exactly one cut vertex: {:?}", s_of_g(&spec)?);

    // whiskers off the rail and a merge-free interior triangle
    let bad = ChainSpec::new(
        vec![Segment::Complete(3), Segment::C3, Segment::C3],
        vec![Join::EDGE; 2],
        vec![1, 3],
    );
    for v in validate_setup(&bad) {
        println!("violation ({}): {}", v.condition, v.detail);
    }

    println!("corpus:");
    for c in chain_corpus() {
        let g = whiskered_chain(&c.spec)?;
        println!(
            "  {:<14} {} vertices  {}",
            c.name,
            g.n(),
            serde_json::to_string(&c.spec).unwrap()
        );
    }
    Ok(())
}
