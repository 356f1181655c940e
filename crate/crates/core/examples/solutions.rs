//! Enumerate solutions of x1 + ... + x_{m-1} = x_m inside [1, n].
//!
//!     cargo run --example solutions -- 4 7

use rainbow_schur::solutions::{count_solutions, enumerate_solutions, index_solutions_by_total};

fn main() -> rainbow_schur::Result<()> {
    let mut args = std::env::args().skip(1);
    let m: usize = args.next().map_or(4, |a| a.parse().expect("m"));
    let n: u32 = args.next().map_or(7, |a| a.parse().expect("n"));

    for sol in enumerate_solutions(m, n, false)? {
        let mark = if sol.is_distinct() { "  (distinct)" } else { "" };
        println!("{sol}{mark}");
    }
    println!(
        "{} solutions, {} with distinct values",
        count_solutions(m, n, false)?,
        count_solutions(m, n, true)?
    );

    let index = index_solutions_by_total(m, n, false)?;
    for x in 1..=n {
        println!("total {x:>3}: {}", index.bucket_len(x));
    }
    Ok(())
}
