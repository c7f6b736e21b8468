// The intersection numbers `p^h_{ij}` of the four-class scheme, which
// depend only on the order, checked against the matrix identity
// `A_i A_j = Σ_h p^h_{ij} A_h`.

use latin_terwilliger::corpus;
use latin_terwilliger::oracle::verify_intersection_identity;
use latin_terwilliger::scheme::{intersection_numbers, order_invariance_violation, subconstituent_partition, Relation};

pub fn run_example() -> latin_terwilliger::Result<()> {
    let fig2 = corpus::square("fig2")?;
    let t = intersection_numbers(&fig2)?;
    for h in 0..5 {
        println!("p^{h}:");
        for i in 0..5 {
            let row: Vec<String> = (0..5).map(|j| format!("{:>3}", t.get(h, i, j))).collect();
            println!("  {}", row.join(""));
        }
    }
    println!("matrix identity holds: {}", verify_intersection_identity(&fig2)?);
    let others = [corpus::square("z8")?, corpus::square("z2^3")?];
    let violation = order_invariance_violation(&[&fig2, &others[0], &others[1]])?;
    println!("same tensor for all order-8 corpus squares: {}", violation.is_none());

    let cells = subconstituent_partition(&fig2, &fig2.point(1, 1)?)?;
    let sizes: Vec<String> = Relation::ALL
        .iter()
        .map(|r| format!("{r:?} {}", cells.cell(*r).len()))
        .collect();
    println!("subconstituents of (1,1,1): {}", sizes.join(", "));
    Ok(())
}

#[allow(dead_code)]
fn main() -> latin_terwilliger::Result<()> {
    run_example()
}
