//! The same search on one thread and on several, with a node budget.
//!
//!     cargo run --release --example parallel_search -- 3 3 24

use std::time::Duration;

use rainbow_schur::oracle::{ColoringSearch, SearchBudget};
use rainbow_schur::Error;

fn main() -> rainbow_schur::Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<u32>().expect("integer"));
    let m = args.next().unwrap_or(3) as usize;
    let t = args.next().unwrap_or(3) as usize;
    let n = args.next().unwrap_or(24);

    let search = ColoringSearch::new(m, t, n)?;
    for threads in [1, 4] {
        let budget = SearchBudget {
            threads,
            time_limit: Some(Duration::from_secs(60)),
            ..SearchBudget::default()
        };
        let found = search.min_colors(&budget)?;
        println!(
            "{threads} thread(s): value {:?}, {} nodes, {:?}",
            found.number.value, found.nodes_explored, found.elapsed
        );
    }

    let tight = SearchBudget {
        max_nodes: 50,
        ..SearchBudget::default()
    };
    match search.min_colors(&tight) {
        Err(e @ Error::BudgetExceeded { .. }) => println!("with 50 nodes: {e}"),
        other => println!("with 50 nodes: {:?}", other.map(|s| s.number.value)),
    }
    Ok(())
}
