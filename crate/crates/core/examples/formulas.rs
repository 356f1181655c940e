//! Closed-form values of RS_m(n) and RS_{t,m}(n).
//!
//!     cargo run --example formulas -- 6 40

use rainbow_schur::numbers::{evaluate, min_n_weak, ProblemParams};
use rainbow_schur::Error;

fn main() -> Result<(), Error> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<u64>().expect("integer argument"));
    let m = args.next().unwrap_or(5);
    let n = args.next().unwrap_or(30);

    println!("m = {m}, n = {n}");
    for t in 2..=m {
        let p = ProblemParams::new(m, t, n)?;
        match evaluate(&p) {
            Ok((value, kind)) => println!("  t = {t:>2}: {value:>6}   {}", kind.describe()),
            Err(Error::OutsideTheoremDomain { min_n, .. }) => {
                println!("  t = {t:>2}: no closed form below n = {min_n}")
            }
            Err(e) => return Err(e),
        }
    }

    if m >= 4 {
        println!("\nRS_{m}(n) from its threshold:");
        let start = min_n_weak(m, m)?;
        let row: Vec<String> = (start..start + 12)
            .map(|k| evaluate(&ProblemParams::rainbow(m, k)?).map(|(v, _)| format!("{k}:{v}")))
            .collect::<Result<_, _>>()?;
        println!("  {}", row.join(" "));
    }
    Ok(())
}
