// Deciding right-Bolness from `π`: a loop with the right inverse property
// whose every `π` is the involution `c ↦ (c_p c⁻¹) c_p` is right Bol.

use latin_terwilliger::corpus;
use latin_terwilliger::subconstituent::{pi_square_criteria, right_bol_certificate};
use latin_terwilliger::transforms::{apply_conjugacy, Conjugacy};

pub fn run_example() -> latin_terwilliger::Result<()> {
    for name in ["fig2", "fig3", "z6"] {
        let square = corpus::square(name)?;
        println!("{name}: {:?}", right_bol_certificate(&square));
    }
    // the transpose of a right Bol loop is left Bol, and not certified
    let left = apply_conjugacy(&corpus::square("fig2")?, &Conjugacy::TRANSPOSE);
    println!("fig2 transposed: {:?}", right_bol_certificate(&left));

    let fig2 = corpus::square("fig2")?;
    let base = fig2.point(1, 2)?;
    for (c, crit) in pi_square_criteria(&fig2, &base)? {
        println!("  column {c}: identity {} π² fixes {}", crit.identity_holds, crit.pi_squared_fixes);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> latin_terwilliger::Result<()> {
    run_example()
}
