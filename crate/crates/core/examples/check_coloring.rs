//! Inspect a coloring given as JSON or as a row of labels.
//!
//!     cargo run --example check_coloring -- '{"n":6,"colors":[1,1,2,3,1,1]}' 6

use rainbow_schur::coloring::{max_solution_colors, parse_coloring};

fn main() -> rainbow_schur::Result<()> {
    let mut args = std::env::args().skip(1);
    let text = args.next().unwrap_or_else(|| "1 1 2 3 1 1".to_string());
    let m: usize = args.next().map_or(6, |a| a.parse().expect("m"));

    let c = parse_coloring(&text)?;
    println!("canonical: {c}");
    println!("classes:   {}", c.class_summary());
    println!("surplus:   {:?}", c.surplus_integers());
    let best = max_solution_colors(&c, m, None)?;
    match best.witness {
        Some(sol) => println!("max colors on a solution: {} ({sol})", best.colors),
        None => println!("no solutions of the {m}-term equation in [1, {}]", c.n()),
    }

    for a in 1..=c.r() {
        for b in a + 1..=c.r() {
            let merged = c.merge_classes(a, b)?;
            let k = max_solution_colors(&merged, m, None)?.colors;
            println!("merge {a},{b}: {} -> max {k}", merged.to_json());
        }
    }
    Ok(())
}
