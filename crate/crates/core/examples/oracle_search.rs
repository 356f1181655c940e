//! Exhaustive search for RS_{t,m}(n), with the extremal witness.
//!
//!     cargo run --release --example oracle_search -- 6 2 6

use rainbow_schur::oracle::{ColoringSearch, SearchBudget};

fn main() -> rainbow_schur::Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<u32>().expect("integer"));
    let m = args.next().unwrap_or(6) as usize;
    let t = args.next().unwrap_or(2) as usize;
    let n = args.next().unwrap_or(6);

    let search = ColoringSearch::new(m, t, n)?;
    let found = search.min_colors(&SearchBudget::default())?;
    match found.number.value {
        Some(v) => println!("RS_{{{t},{m}}}({n}) = {v}"),
        None => println!("no solution in [1, {n}] can carry {t} colors"),
    }
    for c in &found.counterexamples {
        println!("  {} colors: {}", c.r(), c.class_summary());
    }
    println!("{} nodes in {:?}", found.nodes_explored, found.elapsed);

    let r = found.number.value.map_or(2, |v| v as u32);
    let full = search
        .with_pruning(false)
        .all_colorings_good(r, &SearchBudget::default())?;
    println!("without pruning, {} exact {r}-colorings were visited", full.leaves);
    Ok(())
}
