//! Whiskered `K_m ⋆_r K_n` under both labelings and the regularity each should have.

use bei_core::families::{expected_regularity, star_product, whiskered_star, Family, StarParams};
use bei_core::regularity::regularity_bei;
use bei_core::PrimeField;

fn main() -> bei_core::Result<()> {
    for (m, n, r) in [(2, 2, 2), (3, 3, 2), (4, 3, 3)] {
        let p = StarParams::new(m, n, r);
        let bare = star_product(&p)?;
        let g = whiskered_star(&p)?;
        let interleaved = whiskered_star(&p.groebner())?;
        println!(
            "K{m} *{r} K{n}: {} vertices / {} edges bare, {} / {} whiskered, expected reg {}",
            bare.n(),
            bare.edge_count(),
            g.n(),
            g.edge_count(),
            expected_regularity(&Family::Star(p))?.unwrap()
        );
        println!(
            "  original rungs {:?}, interleaved rungs {:?}",
            p.rungs(),
            p.groebner().rungs()
        );
        if g.n() <= 10 {
            let a = regularity_bei(&g, PrimeField::GF2)?.reg;
            let b = regularity_bei(&interleaved, PrimeField::GF2)?.reg;
            println!("  computed reg {a} (original), {b} (interleaved)");
        }
    }
    let p = StarParams::new(2, 2, 2);
    println!("{}", whiskered_star(&p)?.to_json());
    println!(
        "{}",
        serde_json::to_string(&Family::Star(p.groebner())).unwrap()
    );
    Ok(())
}
