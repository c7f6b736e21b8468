// Fixed-point counts of `π` over every base point. In a right Bol loop
// the count depends only on the column; in a Moufang loop it is `s − 1`
// everywhere, `s` being the number of self-inverse elements.

use latin_terwilliger::corpus;
use latin_terwilliger::subconstituent::{fixed_point_profile, moufang_fixed_prediction};

pub fn run_example() -> latin_terwilliger::Result<()> {
    for name in ["fig2", "fig3", "z2^3", "z6"] {
        let square = corpus::square(name)?;
        let profile = fixed_point_profile(&square, None)?;
        println!("{name}: row constant {}", profile.row_constant());
        for row in profile.fixed_counts().iter().take(2) {
            println!("  {row:?}");
        }
        let columns: Vec<String> = (1..=square.order())
            .map(|c| profile.column_structure(c).map_or("varies".into(), |s| s.to_string()))
            .collect();
        println!("  columns: {}", columns.join(" | "));
        if let Ok(s_minus_one) = moufang_fixed_prediction(&square) {
            println!("  Moufang prediction s − 1 = {s_minus_one}");
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> latin_terwilliger::Result<()> {
    run_example()
}
