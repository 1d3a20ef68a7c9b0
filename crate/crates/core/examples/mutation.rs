//! A deliberately broken equal-triangles relation is caught by the harness.
//!
//! Run with `cargo run --example mutation`.

use equal_figures::axioms::{check_assignment, verify, Model, StatementId, TrialReport, Verdict};

fn main() {
    let broken = Model::mismatched_base();
    let reports = verify(StatementId::EtForward, 200, 42, &broken);
    let caught = reports.iter().filter(|r| r.verdict == Verdict::Violated).count();
    println!("{} of {} trials of ETforward violated under `{}`", caught, reports.len(), broken.name);

    let Some(first) = reports.iter().find(|r| r.verdict == Verdict::Violated) else {
        println!("the mutant survived");
        return;
    };
    let line = first.to_json_line();
    println!("witness: {line}");

    let reloaded = TrialReport::from_json_line(&line).expect("report parses");
    let witness = reloaded.witness.expect("violations carry a witness");
    println!("reloaded, broken model: {}", check_assignment(StatementId::EtForward, &broken, &witness));
    println!("reloaded, standard model: {}", check_assignment(StatementId::EtForward, &Model::standard(), &witness));
}
