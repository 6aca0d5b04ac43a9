//! Runs every reproduction suite and prints the outcome table.

use bei_core::verify::{format_table, run_suite, Suite};
use bei_core::PrimeField;

fn main() -> bei_core::Result<()> {
    let mut failed = 0;
    for suite in Suite::ALL {
        let outcomes = run_suite(suite, PrimeField::GF2)?;
        failed += outcomes.iter().filter(|o| !o.pass).count();
        print!("{}", format_table(&outcomes));
    }
    println!("{failed} failed");
    std::process::exit(if failed == 0 { 0 } else { 1 });
}
