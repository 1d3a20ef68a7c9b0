//! Acceptance criteria, one printed line each.
//!
//! Built with `harness = false`: `cargo test --test acceptance` runs `main`,
//! which evaluates every criterion, prints `PASS`/`FAIL` per line and exits
//! nonzero if any criterion failed.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use equal_figures::axioms::{
    check_assignment, generate_case, run_trial, verify, Counts, Model, StatementId, TrialReport, Verdict,
    APPENDIX_AXIOMS,
};
use equal_figures::exact::{raw, BinOp, ExactNumber};
use equal_figures::figures::{classify_quadrilateral, equal_rectangles, QuadKind, Quadrilateral, RectWH};

const SEED: u64 = 42;
const SUITE_BUDGET: Duration = Duration::from_secs(600);

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

/// Trials `0..` until `need` of them were constructed and checked.
fn constructed(id: StatementId, need: u64, seed: u64, model: &Model) -> Vec<TrialReport> {
    let mut reports = verify(id, need, seed, model);
    let mut next = need;
    while Counts::of(&reports).holds + Counts::of(&reports).violated < need && next < 4 * need {
        reports.push(run_trial(id, seed, next, model));
        next += 1;
    }
    reports
}

fn summary(id: StatementId, reports: &[TrialReport]) -> (bool, String) {
    let c = Counts::of(reports);
    let ok = c.violated == 0 && c.holds >= 1000.min(reports.len() as u64);
    (ok, format!("{id}: {} holds, {} unconstructible, {} violated", c.holds, c.hypothesis_unconstructible, c.violated))
}

fn enough(id: StatementId, reports: &[TrialReport], need: u64) -> (bool, String) {
    let c = Counts::of(reports);
    let ok = c.violated == 0 && c.holds >= need;
    (ok, format!("{id} {}/{} holds, {} violated", c.holds, reports.len(), c.violated))
}

fn all_enough(ids: &[StatementId], need: u64) -> Outcome {
    let mut pass = true;
    let mut parts = Vec::new();
    for &id in ids {
        let reports = constructed(id, need, SEED, &Model::standard());
        let (ok, text) = enough(id, &reports, need);
        pass &= ok;
        parts.push(text);
    }
    outcome(pass, parts.join("; "))
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut pass = true;
    let mut total = 0;
    let mut failures = Vec::new();
    for name in APPENDIX_AXIOMS {
        let id = StatementId::from_name(name).expect("axiom is a statement");
        let reports = constructed(id, 1000, SEED, &Model::standard());
        let (ok, text) = summary(id, &reports);
        total += Counts::of(&reports).holds;
        // a second, shorter run must reproduce the same report lines
        let again = verify(id, 50, SEED, &Model::standard());
        let same = again.iter().zip(&reports).all(|(a, b)| a.to_json_line() == b.to_json_line());
        if !ok || !same {
            pass = false;
            failures.push(format!("{text}, deterministic: {same}"));
        }
    }
    let elapsed = start.elapsed();
    pass &= elapsed < SUITE_BUDGET;
    let mut detail = format!("16 axioms, {total} constructed cases, {:.1?}", elapsed);
    if !failures.is_empty() {
        detail = format!("{detail}; {}", failures.join("; "));
    }
    outcome(pass, detail)
}

fn criterion_2() -> Outcome {
    all_enough(&[StatementId::EtForward, StatementId::EtPermutation], 1000)
}

fn criterion_3() -> Outcome {
    let id = StatementId::ErProportion;
    let reports = constructed(id, 1000, SEED, &Model::standard());
    let (ok, text) = enough(id, &reports, 1000);
    // how many of the pairs were equal: both sides of the biconditional get exercised
    let mut equal = 0;
    for r in &reports {
        if let Some(a) = generate_case(id, SEED, r.trial, &Model::standard()) {
            let rect = |n: &str| {
                let p = a.get(n).expect("rectangle point");
                RectWH::new(p.x.clone(), p.y.clone()).expect("positive sides")
            };
            equal += equal_rectangles(&rect("R"), &rect("S")) as u64;
        }
    }
    let unequal = reports.len() as u64 - equal;
    outcome(ok && equal > 0 && unequal > 0, format!("{text}; {equal} equal pairs, {unequal} unequal"))
}

fn quad_kind(a: &equal_figures::axioms::Assignment, prefix: &str) -> &'static str {
    let p = |i: usize| a.get(&format!("{prefix}{i}")).expect("vertex").clone();
    match classify_quadrilateral(&Quadrilateral::new(p(0), p(1), p(2), p(3))) {
        QuadKind::Convex(_) => "convex",
        QuadKind::ReallyTriangle(_) => "triangle",
        QuadKind::Invalid => "invalid",
    }
}

fn criterion_4() -> Outcome {
    let id = StatementId::AreaCompleteness;
    let reports = constructed(id, 500, SEED, &Model::standard());
    let (ok, text) = enough(id, &reports, 500);
    let mut combos = std::collections::BTreeMap::new();
    for r in reports.iter().filter(|r| r.verdict == Verdict::Holds) {
        let a = generate_case(id, SEED, r.trial, &Model::standard()).expect("constructed before");
        *combos.entry((quad_kind(&a, "X"), quad_kind(&a, "Y"))).or_insert(0u64) += 1;
    }
    let kinds = ["convex", "triangle"];
    let covered = kinds.iter().all(|x| kinds.iter().all(|y| combos.contains_key(&(*x, *y))));
    let combos: Vec<String> = combos.iter().map(|((x, y), n)| format!("{x}/{y} {n}")).collect();
    outcome(ok && covered, format!("{text}; {}", combos.join(", ")))
}

fn criterion_5() -> Outcome {
    let id = StatementId::AreaAdditivity;
    let reports = verify(id, 1000, SEED, &Model::standard());
    let names = ["triangle+triangle", "triangle+quad", "quad+triangle", "quad+quad"];
    let mut pass = true;
    let mut parts = Vec::new();
    for (case, name) in names.iter().enumerate() {
        let of_case: Vec<TrialReport> = reports.iter().filter(|r| r.trial % 4 == case as u64).cloned().collect();
        let c = Counts::of(&of_case);
        pass &= c.violated == 0 && c.holds >= 250;
        parts.push(format!("{name} {} holds, {} violated", c.holds, c.violated));
    }
    outcome(pass, parts.join("; "))
}

fn criterion_6() -> Outcome {
    all_enough(
        &[
            StatementId::PascalKupffer,
            StatementId::Interchange,
            StatementId::Fundamental,
            StatementId::OrthocenterConcurrence,
        ],
        1000,
    )
}

fn criterion_7() -> Outcome {
    all_enough(&[StatementId::DeZolt1, StatementId::DeZolt2], 1000)
}

/// Identities `lhs = rhs` in prefix form; every one is zero exactly.
const IDENTITIES: [(&str, &str); 24] = [
    ("(add (sqrt 2) (sqrt 3))", "(sqrt (add 5 (mul 2 (sqrt 6))))"),
    ("(sqrt (add 3 (mul 2 (sqrt 2))))", "(add 1 (sqrt 2))"),
    ("(sqrt (sub 3 (mul 2 (sqrt 2))))", "(sub (sqrt 2) 1)"),
    ("(sqrt (add 7 (mul 4 (sqrt 3))))", "(add 2 (sqrt 3))"),
    ("(sqrt (add 2 (sqrt 3)))", "(div (add (sqrt 6) (sqrt 2)) 2)"),
    ("(sqrt (sub 2 (sqrt 3)))", "(div (sub (sqrt 6) (sqrt 2)) 2)"),
    ("(sub (sqrt (add 5 (mul 2 (sqrt 6)))) (sqrt (sub 5 (mul 2 (sqrt 6)))))", "(mul 2 (sqrt 2))"),
    ("(sqrt (add 11 (mul 6 (sqrt 2))))", "(add 3 (sqrt 2))"),
    ("(sqrt (sub 9 (mul 4 (sqrt 5))))", "(sub (sqrt 5) 2)"),
    ("(sqrt (add 6 (mul 2 (sqrt 5))))", "(add 1 (sqrt 5))"),
    ("(sqrt (add 14 (mul 6 (sqrt 5))))", "(add 3 (sqrt 5))"),
    ("(mul (sqrt 2) (sqrt 3))", "(sqrt 6)"),
    ("(sqrt 8)", "(mul 2 (sqrt 2))"),
    ("(div 1 (add (sqrt 2) 1))", "(sub (sqrt 2) 1)"),
    ("(div 1 (sub (sqrt 3) (sqrt 2)))", "(add (sqrt 3) (sqrt 2))"),
    ("(mul (add 1 (sqrt 2)) (add 1 (sqrt 2)))", "(add 3 (mul 2 (sqrt 2)))"),
    ("(sqrt (add 4 (sqrt 15)))", "(div (add (sqrt 10) (sqrt 6)) 2)"),
    ("(sqrt (add 12 (mul 2 (sqrt 35))))", "(add (sqrt 5) (sqrt 7))"),
    (
        "(mul (div (add (sqrt 5) 1) 2) (div (add (sqrt 5) 1) 2))",
        "(add (div (add (sqrt 5) 1) 2) 1)",
    ),
    ("(sqrt (add (sqrt 2) (sqrt 2)))", "(mul (sqrt 2) (sqrt (sqrt 2)))"),
    (
        "(mul (sqrt (add 2 (sqrt (add 2 (sqrt 2))))) (sqrt (add 2 (sqrt (add 2 (sqrt 2))))))",
        "(add 2 (sqrt (add 2 (sqrt 2))))",
    ),
    (
        "(sqrt (add 10 (add (sqrt 24) (add (sqrt 40) (sqrt 60)))))",
        "(add (sqrt 2) (add (sqrt 3) (sqrt 5)))",
    ),
    ("(mul (sqrt (add 3 (sqrt 5))) (sqrt (sub 3 (sqrt 5))))", "2"),
    ("(sqrt (mul (sqrt 3) (sqrt 12)))", "(sqrt 6)"),
];

/// Builds a prefix term either through the folding constructors or the raw ones.
fn build(text: &str, folded: bool) -> ExactNumber {
    fn term(toks: &mut std::iter::Peekable<std::vec::IntoIter<String>>, folded: bool) -> ExactNumber {
        let tok = toks.next().expect("term");
        if tok != "(" {
            return tok.parse().expect("rational literal");
        }
        let op = toks.next().expect("operator");
        let a = term(toks, folded);
        let out = if op == "sqrt" {
            if folded {
                a.sqrt().expect("nonnegative")
            } else {
                raw::sqrt(&a)
            }
        } else {
            let b = term(toks, folded);
            let op = match op.as_str() {
                "add" => BinOp::Add,
                "sub" => BinOp::Sub,
                "mul" => BinOp::Mul,
                "div" => BinOp::Div,
                other => panic!("unknown operator {other}"),
            };
            if folded {
                a.arith(&b, op).expect("defined")
            } else {
                raw::binary(op, &a, &b)
            }
        };
        assert_eq!(toks.next().as_deref(), Some(")"));
        out
    }
    let spaced = text.replace('(', " ( ").replace(')', " ) ");
    let toks: Vec<String> = spaced.split_whitespace().map(str::to_string).collect();
    term(&mut toks.into_iter().peekable(), folded)
}

fn criterion_8() -> Outcome {
    let eps = ExactNumber::from_ratio(1, 1_000_000_000).unwrap();
    let mut wrong = Vec::new();
    let mut checked = 0;
    for (i, (lhs, rhs)) in IDENTITIES.iter().enumerate() {
        for folded in [true, false] {
            let diff = if folded {
                &build(lhs, true) - &build(rhs, true)
            } else {
                raw::binary(BinOp::Sub, &build(lhs, false), &build(rhs, false))
            };
            let up = if folded { &diff + &eps } else { raw::binary(BinOp::Add, &diff, &eps) };
            let down = if folded { &diff - &eps } else { raw::binary(BinOp::Sub, &diff, &eps) };
            let signs = (diff.sign(), up.sign(), down.sign());
            checked += 1;
            if signs != (0, 1, -1) {
                wrong.push(format!("#{i} {} gave {signs:?}", if folded { "folded" } else { "raw" }));
            }
        }
    }
    let banned = banned_tokens();
    let mut pass = wrong.is_empty() && IDENTITIES.len() >= 20;
    let mut detail = format!("{} identities, {checked} sign checks x3", IDENTITIES.len());
    if !wrong.is_empty() {
        detail = format!("{detail}; wrong: {}", wrong.join(", "));
    }
    if !banned.is_empty() {
        pass = false;
        detail = format!("{detail}; approximate-comparison tokens in {}", banned.join(", "));
    }
    outcome(pass, detail)
}

/// Source files under the crate that mention an approximate comparison.
fn banned_tokens() -> Vec<String> {
    // assembled at runtime so this file does not match itself
    let tokens: Vec<String> = [["eps", "ilon"], ["toler", "ance"], ["abs_", "diff"], ["relative", "_eq"], ["ul", "ps"]]
        .iter()
        .map(|p| p.concat())
        .collect();
    let root = std::path::Path::new(env!("CARGO_MANIFEST_DIR"));
    let mut hits = Vec::new();
    let mut stack: Vec<std::path::PathBuf> = ["src", "tests", "examples"].iter().map(|d| root.join(d)).collect();
    while let Some(dir) = stack.pop() {
        let Ok(entries) = std::fs::read_dir(&dir) else { continue };
        for entry in entries.flatten() {
            let path = entry.path();
            if path.is_dir() {
                stack.push(path);
            } else if path.extension().is_some_and(|e| e == "rs") {
                let text = std::fs::read_to_string(&path).unwrap_or_default().to_lowercase();
                if tokens.iter().any(|t| text.contains(t.as_str())) {
                    hits.push(path.strip_prefix(root).unwrap_or(&path).display().to_string());
                }
            }
        }
    }
    hits.sort();
    hits
}

fn criterion_9() -> Outcome {
    let broken = Model::mismatched_base();
    let mut parts = Vec::new();
    let mut pass = true;
    for id in [StatementId::EtForward, StatementId::EtPermutation] {
        let reports = verify(id, 1000, SEED, &broken);
        let c = Counts::of(&reports);
        parts.push(format!("{id} under mutant: {} violated", c.violated));
        if id != StatementId::EtForward {
            continue;
        }
        let Some(first) = reports.iter().find(|r| r.verdict == Verdict::Violated) else {
            pass = false;
            continue;
        };
        let line = first.to_json_line();
        let reloaded = TrialReport::from_json_line(&line).expect("report parses");
        let witness = reloaded.witness.as_ref().expect("violations carry a witness");
        let reproduces = check_assignment(id, &broken, witness) == Verdict::Violated;
        let standard = check_assignment(id, &Model::standard(), witness);
        pass &= reloaded == *first && reproduces && standard == Verdict::Holds;
        parts.push(format!(
            "witness of trial {} reloads ({} bytes), re-check {}, standard model {}",
            first.trial,
            line.len(),
            if reproduces { "VIOLATED" } else { "passes" },
            standard
        ));
    }
    outcome(pass, parts.join("; "))
}

fn main() -> ExitCode {
    // `cargo test` passes harness flags; a name filter that excludes us is honoured
    let filters: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    if !filters.is_empty() && !filters.iter().any(|f| "acceptance".contains(f.as_str())) {
        return ExitCode::SUCCESS;
    }
    let criteria: [Criterion; 9] = [
        ("appendix axiom suite", criterion_1),
        ("ABC equal to BCA, ET under permutation", criterion_2),
        ("ERproportion biconditional", criterion_3),
        ("area completeness", criterion_4),
        ("area additivity, four cases", criterion_5),
        ("Pascal-Kupffer, interchange, fundamental, orthocenter", criterion_6),
        ("de Zolt lemmas", criterion_7),
        ("exact kernel signs", criterion_8),
        ("mutation check", criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = run();
        let verdict = if o.pass { "PASS" } else { "FAIL" };
        println!("criterion {} [{verdict}] {name} ({:.1?}): {}", i + 1, start.elapsed(), o.detail);
        failed += !o.pass as usize;
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
