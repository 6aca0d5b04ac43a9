//! `b(G)`: the most blocks left after deleting vertices down to a Cohen-Macaulay block
//! graph.

use bei_core::cm_block::{b_invariant, enumerate_cmb, is_cm_block_graph, Mode};
use bei_core::families::{chain_corpus, first_cut_vertex, whiskered_chain};
use bei_core::Graph;

fn main() -> bei_core::Result<()> {
    let bowtie = Graph::from_edges(5, [(1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5)])?;
    println!("bowtie is a CM block graph: {}", is_cm_block_graph(&bowtie));

    let c5 = Graph::cycle(5).whisker(&[1, 3])?;
    let b = b_invariant(&c5, Mode::General)?;
    println!(
        "C5 with two whiskers: b = {}, delete {:?}",
        b.value, b.witness.removed
    );
    for w in enumerate_cmb(&c5, Mode::CutVertex)? {
        println!(
            "  cut-vertex member: delete {:?} -> {} blocks",
            w.removed, w.block_count
        );
    }

    for c in chain_corpus().into_iter().take(8) {
        let g = whiskered_chain(&c.spec)?;
        let cut = b_invariant(&g, Mode::CutVertex)?;
        let general = b_invariant(&g, Mode::General)?;
        let completed = match first_cut_vertex(&c.spec)? {
            Some(w) => format!(
                "b(G_{w}) = {}",
                b_invariant(&g.neighbor_completion(w)?, Mode::CutVertex)?.value
            ),
            None => "no cut vertex".into(),
        };
        println!(
            "{:<12} b = {} / {}  ({completed})",
            c.name, cut.value, general.value
        );
    }
    println!(
        "{}",
        serde_json::to_string(&b_invariant(&c5, Mode::CutVertex)?).unwrap()
    );
    Ok(())
}
