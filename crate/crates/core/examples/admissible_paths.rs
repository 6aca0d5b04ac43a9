//! Admissible paths give the initial ideal of `J_G` directly; Buchberger's algorithm
//! agrees on small graphs.

use bei_core::groebner::{
    buchberger_oracle, enumerate_admissible_paths, initial_ideal, path_monomial,
};
use bei_core::{Graph, PrimeField};

fn main() -> bei_core::Result<()> {
    let g = Graph::from_edges(5, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5), (2, 5)])?;
    let ideal = initial_ideal(&g)?;
    for p in enumerate_admissible_paths(&g) {
        let (i, j) = p.endpoints();
        println!(
            "{i} -> {j} via {:?}: {}",
            p.interior(),
            ideal.names(path_monomial(g.n(), &p)).concat()
        );
    }
    println!("in(J_G) = {ideal}");
    let oracle = buchberger_oracle(&g, PrimeField::GF32003)?;
    println!("Buchberger agrees: {}", oracle == ideal);
    println!("{}", ideal.to_json());
    Ok(())
}
