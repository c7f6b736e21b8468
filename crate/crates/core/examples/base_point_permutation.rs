// The permutation a base point induces on the other columns, computed by
// walking the orthogonal array, by division, and (for right Bol loops)
// by the closed form `π(c) = (c_p c⁻¹) c_p`.
//
//     cargo run --example base_point_permutation -- fig2 1 2

use latin_terwilliger::corpus;
use latin_terwilliger::subconstituent::{bol_pi_formula, pi_of, pi_via_division};

pub fn run_example() -> latin_terwilliger::Result<()> {
    show("fig1", 1, 1)?;
    show("fig2", 1, 1)?;
    show("fig2", 1, 2)
}

fn show(name: &str, row: usize, column: usize) -> latin_terwilliger::Result<()> {
    let square = corpus::square(name)?;
    let base = square.point(row, column)?;
    let walk = pi_of(&square, &base)?;
    let division = pi_via_division(&square, &base)?;
    println!("{name} at {base}: π = {walk}  [{}]", walk.cycle_structure());
    println!("  division agrees: {}", walk == division);
    match bol_pi_formula(&square, &base) {
        Ok(formula) => println!("  Bol formula agrees: {}", walk == formula),
        Err(e) => println!("  Bol formula n/a: {e}"),
    }
    println!("  involution: {}, fixed columns {:?}", walk.is_involution(), walk.fixed_points());
    Ok(())
}

#[allow(dead_code)]
fn main() -> latin_terwilliger::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    match args.as_slice() {
        [name, r, c] => show(name, r.parse().unwrap_or(1), c.parse().unwrap_or(1)),
        _ => run_example(),
    }
}
