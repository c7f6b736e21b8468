// Loop, Bol, Moufang and inverse-property flags of a square.
//
//     cargo run --example classify -- fig3
//     cargo run --example classify -- path/to/square.txt

use latin_terwilliger::cli::load_input;
use latin_terwilliger::quasigroup::{loop_properties, loop_structure, Property};

pub fn run_example() -> latin_terwilliger::Result<()> {
    classify("fig2")?;
    classify("fig3")
}

fn classify(source: &str) -> latin_terwilliger::Result<()> {
    let square = load_input(&resolve(source))?;
    let rec = loop_properties(&square);
    println!("{source}: order {}", square.order());
    println!("  loop {}  group {}  commutative {}", rec.is_loop, rec.is_group, rec.is_commutative);
    println!("  right Bol {}  left Bol {}  Moufang {}", rec.is_right_bol, rec.is_left_bol, rec.is_moufang);
    println!("  RIP {}  LIP {}  AAIP {}", rec.has_rip, rec.has_lip, rec.has_aaip);
    if let Some(reason) = rec.reason(Property::RightBol) {
        println!("  right Bol fails: {reason:?}");
    }
    if let Some(lp) = loop_structure(&square) {
        println!(
            "  identity {}, {} self-inverse elements, inverses two-sided: {}",
            lp.identity(),
            lp.self_inverse_count(),
            lp.all_two_sided()
        );
    }
    Ok(())
}

/// Bare corpus names are accepted as well as `corpus:NAME` and paths.
fn resolve(source: &str) -> String {
    if latin_terwilliger::corpus::names().contains(&source) {
        format!("corpus:{source}")
    } else {
        source.to_string()
    }
}

#[allow(dead_code)]
fn main() -> latin_terwilliger::Result<()> {
    match std::env::args().nth(1) {
        Some(source) => classify(&source),
        None => run_example(),
    }
}
