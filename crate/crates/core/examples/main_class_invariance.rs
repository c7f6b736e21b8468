// Isotopies and conjugacies carry base points to base points and keep the
// cycle structure of `π`.

use latin_terwilliger::corpus;
use latin_terwilliger::scheme::orthogonal_array;
use latin_terwilliger::subconstituent::pi_of;
use latin_terwilliger::transforms::{apply_conjugacy, apply_isotopy, Conjugacy, Isotopy};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn run_example() -> latin_terwilliger::Result<()> {
    let square = corpus::square("fig3")?;
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let iso = Isotopy::random(square.order(), &mut rng);
    let image = apply_isotopy(&square, &iso)?;
    println!("isotopy:\n{iso}\nimage of fig3:\n{image}");

    let mut preserved = 0;
    for p in orthogonal_array(&square) {
        let before = pi_of(&square, &p)?.cycle_structure();
        let after = pi_of(&image, &iso.map_point(&p))?.cycle_structure();
        preserved += usize::from(before == after);
    }
    println!("cycle structure preserved at {preserved}/49 base points");

    for conj in Conjugacy::all() {
        let image = apply_conjugacy(&square, &conj);
        let same = orthogonal_array(&square).iter().all(|p| {
            pi_of(&square, p).map(|pi| pi.cycle_structure()).ok()
                == pi_of(&image, &conj.map_point(p)).map(|pi| pi.cycle_structure()).ok()
        });
        println!("conjugacy {conj}: preserved everywhere {same}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> latin_terwilliger::Result<()> {
    run_example()
}
