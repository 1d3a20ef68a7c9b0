//! Seeded verification of every statement.
//!
//! Run with `cargo run --release --example verify_suite -- [trials] [seed]`.

use std::time::Instant;

use equal_figures::axioms::{verify_all, Model};

fn main() {
    let mut args = std::env::args().skip(1);
    let trials = args.next().map_or(100, |s| s.parse().expect("trials"));
    let seed = args.next().map_or(0, |s| s.parse().expect("seed"));

    let start = Instant::now();
    let runs = verify_all(trials, seed, &Model::standard());
    let mut violations = 0;
    for run in &runs {
        let c = &run.counts;
        let kind = if run.statement.is_axiom() { "axiom" } else { "lemma" };
        println!(
            "{:<30} {kind}  holds {:>5}  unconstructible {:>3}  VIOLATED {}",
            run.statement.name(),
            c.holds,
            c.hypothesis_unconstructible,
            c.violated
        );
        violations += c.violated;
    }
    println!(
        "{} statements x {trials} trials, seed {seed}: {violations} violations in {:.1?}",
        runs.len(),
        start.elapsed()
    );
}
