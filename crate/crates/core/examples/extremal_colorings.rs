//! Block colorings that avoid qualifying solutions with one color fewer
//! than the formula value.
//!
//!     cargo run --example extremal_colorings -- 5 20

use rainbow_schur::coloring::{
    construct_rainbow_lower, construct_weak_lower, has_t_colored_solution,
};
use rainbow_schur::numbers::{evaluate, ProblemParams};

fn main() -> rainbow_schur::Result<()> {
    let mut args = std::env::args().skip(1);
    let m: u64 = args.next().map_or(5, |a| a.parse().expect("m"));
    let n: u64 = args.next().map_or(20, |a| a.parse().expect("n"));

    for t in 3..=m {
        let p = ProblemParams::new(m, t, n)?;
        let Ok((value, _)) = evaluate(&p) else {
            println!("t = {t}: n below threshold");
            continue;
        };
        let c = if t == m {
            construct_rainbow_lower(m, n)?
        } else {
            construct_weak_lower(t, m, n)?
        };
        let avoided = has_t_colored_solution(&c, m as usize, t as usize)?.is_none();
        println!(
            "t = {t}: value {value}, {} colors, avoids {t}-colored solutions: {avoided}",
            c.r()
        );
        println!("    {}", c.class_summary());
    }
    Ok(())
}
