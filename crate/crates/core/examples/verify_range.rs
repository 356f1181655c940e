//! Compare formula and search over a range of n, in the CLI's TSV layout.
//!
//!     cargo run --release --example verify_range -- 5 4 8 16

use rainbow_schur::cli::{verification_row, TSV_HEADER};
use rainbow_schur::numbers::ProblemParams;
use rainbow_schur::oracle::SearchBudget;

fn main() -> rainbow_schur::Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<u64>().expect("integer"));
    let m = args.next().unwrap_or(5);
    let t = args.next().unwrap_or(4);
    let from = args.next().unwrap_or(8);
    let to = args.next().unwrap_or(16);

    println!("{TSV_HEADER}");
    let budget = SearchBudget::default();
    let mut failed = 0;
    for n in from..=to {
        let (row, _witness) = verification_row(&ProblemParams::new(m, t, n)?, &budget)?;
        failed += usize::from(!row.passed());
        println!("{}", row.tsv());
    }
    eprintln!("{failed} mismatches");
    Ok(())
}
