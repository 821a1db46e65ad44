//! Parallel sweep of a parameter box, cross-checking the classifier against
//! the oracle. Usage: `sweep_box [max] [depth]`.

use std::time::Instant;

use sdseq::{filter_hs, sweep, Family, SearchBox};

fn main() -> sdseq::Result<()> {
    let mut args = std::env::args()
        .skip(1)
        .map(|s| s.parse().expect("integer argument"));
    let max = args.next().unwrap_or(6) as u32;
    let depth = args.next().unwrap_or(60) as usize;
    let search_box = SearchBox::new(max, max, max, depth)?;

    let start = Instant::now();
    let report = sweep(&search_box);
    println!(
        "box |P|,|Q|,|R| <= {max}, depth {depth}: {} tested, {} survivors, {} mismatches ({:.2?})",
        report.stats.tested,
        report.survivors.len(),
        report.mismatches.len(),
        start.elapsed()
    );
    for family in [
        Family::LucasCoprime,
        Family::PulseFamily,
        Family::NullQFamily,
        Family::PeriodSixFamily,
    ] {
        let count = report
            .survivors
            .iter()
            .filter(|s| s.classification.contains(family))
            .count();
        println!("  {family:?}: {count}");
    }
    println!(
        "index-10 criterion survivors: {}",
        filter_hs(&search_box).len()
    );
    Ok(())
}
