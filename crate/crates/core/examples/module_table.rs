// Irreducible-module table and Wedderburn signature predicted from the
// cycle structure of `π` (orders 5 and up).

use latin_terwilliger::corpus;
use latin_terwilliger::subconstituent::{module_table, pi_of, CycleStructure};

pub fn run_example() -> latin_terwilliger::Result<()> {
    let fig2 = corpus::square("fig2")?;
    let cycles = pi_of(&fig2, &fig2.point(1, 1)?)?.cycle_structure();
    print(8, &cycles)?;
    // tables need only n and a cycle structure of degree n − 1
    print(10, &"3 6".parse().expect("valid cycle notation"))?;
    print(7, &"2^3".parse().expect("valid cycle notation"))
}

fn print(n: usize, cycles: &CycleStructure) -> latin_terwilliger::Result<()> {
    let table = module_table(n, cycles)?;
    println!("n = {n}, π of type {cycles}: U has {} roots", table.roots.len());
    for e in &table.entries {
        println!("  dim {} × {:>3}  {}", e.dimension, e.multiplicity, e.label);
    }
    let sig = table.signature();
    println!(
        "  balance {} = {}², signature {sig}, dim T = {}",
        table.balance(),
        n,
        sig.algebra_dimension()
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> latin_terwilliger::Result<()> {
    run_example()
}
