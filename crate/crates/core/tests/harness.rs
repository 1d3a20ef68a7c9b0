use equal_figures::axioms::{
    check_assignment, generate_case, verify, verify_all, Counts, Model, StatementId, TrialReport, Verdict,
    APPENDIX_AXIOMS,
};

/// The axiom names as listed in the appendix, copied independently of the library.
const LISTED: &str = "congruentequal ETpermutation ETsymmetric ETtransitive EFpermutation EFsymmetric \
                      EFtransitive halvesofequals cutoff1 cutoff2 paste1 paste2 paste3 paste4 deZolt1 deZolt2";

#[test]
fn every_listed_axiom_is_a_statement() {
    let listed: Vec<&str> = LISTED.split_whitespace().collect();
    assert_eq!(listed.len(), 16);
    assert_eq!(listed, APPENDIX_AXIOMS.to_vec());
    for name in listed {
        let id = StatementId::from_name(name).unwrap_or_else(|| panic!("{name} missing"));
        assert!(id.is_axiom());
    }
}

#[test]
fn named_lemmas_are_statements() {
    let names = [
        "ERproportion", "ERequivalence", "ER1", "ER2", "ER3", "ER4", "ER5", "ETforward", "I.35", "I.37",
        "I.42-doubles", "I.43", "addequals", "I.45", "paste5helper", "halvesofrectangles",
        "equalrectanglesequalfigures", "area_completeness", "area_additivity", "interchange", "fundamental",
        "pascal_kupffer", "cyclic_quad", "parallelpasch", "orthocenter_concurrence",
    ];
    for name in names {
        assert!(StatementId::from_name(name).is_some(), "{name}");
    }
}

#[test]
fn reports_are_bit_identical_across_runs() {
    for id in [StatementId::Paste3, StatementId::HalvesOfEquals, StatementId::AreaAdditivity] {
        let lines = |r: Vec<TrialReport>| r.iter().map(TrialReport::to_json_line).collect::<Vec<_>>();
        let a = lines(verify(id, 60, 7, &Model::standard()));
        let b = lines(verify(id, 60, 7, &Model::standard()));
        assert_eq!(a, b);
        let other_seed = lines(verify(id, 60, 8, &Model::standard()));
        assert_eq!(other_seed.len(), 60);
        for (i, line) in a.iter().enumerate() {
            assert!(line.contains(&format!("\"trial\":{i},")), "{line}");
        }
    }
}

#[test]
fn generated_cases_pass_an_independent_hypothesis_check() {
    let m = Model::standard();
    for &id in StatementId::ALL {
        for trial in 0..8 {
            if let Some(a) = generate_case(id, 3, trial, &m) {
                assert_ne!(check_assignment(id, &m, &a), Verdict::HypothesisUnconstructible, "{id} #{trial}");
            }
        }
    }
}

#[test]
fn smoke_run_of_the_whole_suite() {
    let runs = verify_all(1, 0, &Model::standard());
    assert_eq!(runs.len(), StatementId::ALL.len());
    for run in runs {
        assert_eq!(run.counts.violated, 0, "{}", run.statement);
    }
}

#[test]
fn de_zolt_negations_hold() {
    let c = Counts::of(&verify(StatementId::DeZolt1, 1000, 1, &Model::standard()));
    assert_eq!((c.holds, c.violated), (1000, 0));
}

#[test]
fn witnesses_reproduce_after_reloading() {
    let broken = Model::mismatched_base();
    let reports = verify(StatementId::EtForward, 40, 5, &broken);
    let violated: Vec<&TrialReport> = reports.iter().filter(|r| r.verdict == Verdict::Violated).collect();
    assert!(!violated.is_empty());
    for r in violated {
        let back = TrialReport::from_json_line(&r.to_json_line()).unwrap();
        assert_eq!(&back, r);
        let w = back.witness.unwrap();
        assert_eq!(check_assignment(StatementId::EtForward, &broken, &w), Verdict::Violated);
    }
}

#[test]
fn malformed_report_lines_are_rejected() {
    let bad = [
        "",
        "{}",
        r#"{"statement":"nope","seed":0,"trial":0,"verdict":"holds"}"#,
        r#"{"statement":"paste1","seed":0,"trial":0,"verdict":"maybe"}"#,
        r#"{"statement":"paste1","seed":0,"trial":0,"verdict":"VIOLATED","witness":{"A":["1.5","0"]}}"#,
    ];
    for line in bad {
        assert!(TrialReport::from_json_line(line).is_err(), "{line}");
    }
}
