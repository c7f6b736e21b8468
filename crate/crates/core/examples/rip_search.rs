// Random loops with the right inverse property, searched for a base point
// where `π` is not an involution.
//
//     cargo run --release --example rip_search -- 100 42

use latin_terwilliger::subconstituent::search::{search_rip_loops, SearchConfig};

pub fn run_example() -> latin_terwilliger::Result<()> {
    search(SearchConfig {
        loops: 10,
        ..SearchConfig::default()
    })
}

fn search(config: SearchConfig) -> latin_terwilliger::Result<()> {
    let report = search_rip_loops(&config);
    println!(
        "{} RIP loops ({} not right Bol), {} criteria checked, {} disagreements",
        report.loops_found, report.non_bol_loops, report.criteria_checked, report.disagreements
    );
    if let Some(v) = report.violation {
        println!("π² ≠ id at base {} column {}:\n{}", v.base, v.column, v.square);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> latin_terwilliger::Result<()> {
    let mut args = std::env::args().skip(1);
    let mut config = SearchConfig::default();
    if let Some(loops) = args.next().and_then(|a| a.parse().ok()) {
        config.loops = loops;
    }
    if let Some(seed) = args.next().and_then(|a| a.parse().ok()) {
        config.seed = seed;
    }
    search(config)
}
