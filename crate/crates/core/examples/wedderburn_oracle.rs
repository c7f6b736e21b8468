// Builds the Terwilliger algebra at a base point as explicit integer
// matrices, closes it under multiplication exactly, and compares its
// dimension and centre with the prediction.
//
//     cargo run --release --example wedderburn_oracle -- fig3 3 1

use latin_terwilliger::corpus;
use latin_terwilliger::oracle::verify_wedderburn;

pub fn run_example() -> latin_terwilliger::Result<()> {
    check("fig2", 1, 1)?;
    check("fig3", 3, 1)?;
    // below order 5 there is no prediction, only the computed dimension
    check("z4", 1, 1)
}

fn check(name: &str, row: usize, column: usize) -> latin_terwilliger::Result<()> {
    let square = corpus::square(name)?;
    let base = square.point(row, column)?;
    let result = verify_wedderburn(&square, &base, true)?;
    let predicted = result.prediction.as_ref().map(|p| p.dimension);
    println!(
        "{name} at {base}: predicted {predicted:?}, oracle {}, centre {:?}, consistent {}",
        result.oracle_dimension,
        result.center_dimension,
        result.consistent()
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> latin_terwilliger::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    match args.as_slice() {
        [name, r, c] => check(name, r.parse().unwrap_or(1), c.parse().unwrap_or(1)),
        _ => run_example(),
    }
}
