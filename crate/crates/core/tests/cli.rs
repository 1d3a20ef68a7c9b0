use std::path::{Path, PathBuf};

use equal_figures::axioms::{Counts, TrialReport};
use equal_figures::cli::run;
use equal_figures::cli::scene::Scene;
use tempfile::TempDir;

const SCENE: &str = r#"
[points]
A = [0, 0]
B = [4, 0]
C = [1, 3]
P = [0, 0]
Q = [2, 0]
R = [2, 3]
S = [0, 3]
P2 = [0, 0]
Q2 = [2, 0]
R2 = [2, 4]
S2 = [0, 4]
W = [0, 0]
X = [6, 0]
Y = [6, 1]
V = [0, 1]
O = [0, 0]
L2 = [2, 0]
L3 = [0, 3]
L4 = [4, 0]
L6 = [0, 6]
L7 = [0, 7]
M = ["1/2", "(sqrt 2)"]

[figures]
ABC = ["A", "B", "C"]
BCA = ["B", "C", "A"]
R23 = ["P", "Q", "R", "S"]
R24 = ["P2", "Q2", "R2", "S2"]
R61 = ["W", "X", "Y", "V"]
"#;

struct Run {
    code: i32,
    out: String,
    err: String,
}

fn cli(args: &[&str]) -> Run {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let mut full = vec!["equal-figures"];
    full.extend_from_slice(args);
    let code = run(full, &mut out, &mut err);
    Run {
        code,
        out: String::from_utf8(out).unwrap(),
        err: String::from_utf8(err).unwrap(),
    }
}

fn scene(dir: &TempDir, text: &str) -> String {
    let path = dir.path().join("scene.toml");
    std::fs::write(&path, text).unwrap();
    path.to_string_lossy().into_owned()
}

fn check(path: &str, relation: &str, names: &[&str]) -> Run {
    let mut args = vec!["check", "--scene", path, "--relation", relation];
    args.extend_from_slice(names);
    cli(&args)
}

#[test]
fn triangle_and_its_rotation() {
    let dir = TempDir::new().unwrap();
    let s = scene(&dir, SCENE);
    let r = check(&s, "ET", &["ABC", "BCA"]);
    assert_eq!(r.code, 0, "{}", r.err);
    assert!(r.out.ends_with("holds\n"));
    assert!(r.out.contains("triangle 1: rectangle 4 by 3"), "{}", r.out);
    // point names work as well as figure names
    assert_eq!(check(&s, "ET", &["A", "B", "C", "B", "C", "A"]).code, 0);
}

#[test]
fn rectangles() {
    let dir = TempDir::new().unwrap();
    let s = scene(&dir, SCENE);
    let r = check(&s, "ER", &["R23", "R24"]);
    assert_eq!(r.code, 1);
    assert!(r.out.ends_with("fails\n"));
    assert_eq!(check(&s, "ER", &["R23", "R61"]).code, 0);
    assert_eq!(check(&s, "EF", &["R23", "R61"]).code, 0);
    assert_eq!(check(&s, "EF", &["R23", "R24"]).code, 1);
}

#[test]
fn other_relations() {
    let dir = TempDir::new().unwrap();
    let s = scene(&dir, SCENE);
    assert_eq!(check(&s, "between", &["A", "L2", "B"]).code, 0);
    assert_eq!(check(&s, "between", &["A", "B", "L2"]).code, 1);
    assert_eq!(check(&s, "congruent", &["A", "L3", "Q", "R"]).code, 0);
    assert_eq!(check(&s, "parallel", &["A", "B", "S", "R"]).code, 0);
    assert_eq!(check(&s, "concyclic", &["P", "Q", "R", "S"]).code, 0);
    assert_eq!(check(&s, "proportion", &["O", "L2", "O", "L3", "O", "L4", "O", "L6"]).code, 0);
    assert_eq!(check(&s, "proportion", &["O", "L2", "O", "L3", "O", "L4", "O", "L7"]).code, 1);
}

#[test]
fn errors_exit_with_two() {
    let dir = TempDir::new().unwrap();
    let s = scene(&dir, SCENE);
    let r = check(&s, "between", &["A", "Nowhere", "B"]);
    assert_eq!(r.code, 2);
    assert!(r.err.contains("Nowhere"));
    assert_eq!(check(&s, "between", &["A", "B"]).code, 2);
    assert_eq!(check(&s, "ET", &["ABC", "R23"]).code, 2);
    assert_eq!(check(&s, "ER", &["ABC", "C", "R23"]).code, 2);
    assert_eq!(check(&s, "sideways", &["A"]).code, 2);
    assert_eq!(check("/nonexistent/scene.toml", "between", &["A", "B", "C"]).code, 2);

    let float = scene(&dir, "[points]\nA = [0.5, 0]\nB = [1, 1]\nC = [2, 2]\n");
    let r = check(&float, "between", &["A", "B", "C"]);
    assert_eq!(r.code, 2);
    assert!(r.err.contains("floating-point"), "{}", r.err);
}

#[test]
fn verify_writes_a_report_that_agrees_with_the_summary() {
    let dir = TempDir::new().unwrap();
    let report = dir.path().join("report.jsonl");
    let r = cli(&[
        "verify",
        "--statements",
        "deZolt1,deZolt2",
        "--trials",
        "1000",
        "--seed",
        "0",
        "--report",
        report.to_str().unwrap(),
    ]);
    assert_eq!(r.code, 0, "{}", r.err);
    let reports: Vec<TrialReport> = std::fs::read_to_string(&report)
        .unwrap()
        .lines()
        .map(|l| TrialReport::from_json_line(l).unwrap())
        .collect();
    assert_eq!(reports.len(), 2000);
    for name in ["deZolt1", "deZolt2"] {
        let mine: Vec<TrialReport> = reports.iter().filter(|r| r.statement.name() == name).cloned().collect();
        let c = Counts::of(&mine);
        let line = r.out.lines().find(|l| l.starts_with(name)).unwrap();
        let numbers: Vec<u64> = line.split_whitespace().filter_map(|w| w.parse().ok()).collect();
        assert_eq!(numbers, vec![c.holds, c.hypothesis_unconstructible, c.violated], "{line}");
    }
    assert!(r.out.contains("0 violations"));
}

#[test]
fn verify_everything_briefly() {
    let r = cli(&["verify", "--statements", "all", "--trials", "100", "--seed", "0"]);
    assert_eq!(r.code, 0, "{}", r.out);
}

#[test]
fn unknown_statements_are_errors() {
    let r = cli(&["verify", "--statements", "bogus"]);
    assert_eq!(r.code, 2);
    assert!(r.err.contains("bogus"));
    assert_eq!(cli(&["verify", "--statements", "paste1,", "--trials", "0"]).code, 2);
    assert_eq!(cli(&["frobnicate"]).code, 2);
    assert_eq!(cli(&["--help"]).code, 0);
}

fn render(dir: &TempDir, scene_path: &str, construction: &str, names: &[&str]) -> (i32, String, PathBuf) {
    let out = dir.path().join(format!("{construction}.svg"));
    let mut args = vec!["render", "--scene", scene_path, construction];
    args.extend_from_slice(names);
    args.extend(["--out", out.to_str().unwrap()]);
    let r = cli(&args);
    let svg = std::fs::read_to_string(&out).unwrap_or_default();
    (r.code, svg, out)
}

/// `(x, y)` of the label drawn for `name`, as printed.
fn label(svg: &str, name: &str) -> (String, String) {
    let lines: Vec<&str> = svg.lines().collect();
    let i = lines.iter().position(|l| l.ends_with(&format!(">{name}</text>"))).expect("label");
    let circle = lines[i - 1];
    let attr = |key: &str| circle.split(&format!("{key}=\"")).nth(1).unwrap().split('"').next().unwrap().to_string();
    (attr("cx"), attr("cy"))
}

fn well_formed(svg: &str) -> bool {
    svg.starts_with("<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=") && svg.trim_end().ends_with("</svg>")
}

#[test]
fn renders_constructions() {
    let dir = TempDir::new().unwrap();
    let s = scene(&dir, SCENE);

    let (code, svg, _) = render(&dir, &s, "ER-placement", &["R23", "R61"]);
    assert_eq!(code, 0);
    assert!(well_formed(&svg));
    // H, B, K: (-6, 3), (0, 0), (2, -1), y flipped on screen
    assert_eq!(label(&svg, "H"), ("-6.000000".into(), "-3.000000".into()));
    assert_eq!(label(&svg, "B"), ("0.000000".into(), "0.000000".into()));
    assert_eq!(label(&svg, "K"), ("2.000000".into(), "1.000000".into()));

    let (code, svg, _) = render(&dir, &s, "circumscribed", &["ABC"]);
    assert_eq!(code, 0);
    assert!(svg.contains(r#"points="0.000000,0.000000 4.000000,0.000000 4.000000,-3.000000 0.000000,-3.000000""#));
    assert_eq!(label(&svg, "C").1, label(&svg, "D").1);
    assert_eq!(label(&svg, "C").1, label(&svg, "K").1);

    let (code, svg, _) = render(&dir, &s, "proportion", &["O", "L2", "O", "L3", "O", "L4", "O", "L6"]);
    assert_eq!(code, 0);
    assert_eq!(svg.matches("stroke=\"red\"").count(), 2);

    let (code, svg, _) = render(&dir, &s, "orthocenter", &["ABC"]);
    assert_eq!(code, 0);
    assert_eq!(label(&svg, "H"), ("1.000000".into(), "-1.000000".into()));
}

#[test]
fn render_rejects_bad_input() {
    let dir = TempDir::new().unwrap();
    let s = scene(&dir, SCENE);
    let (code, _, out) = render(&dir, &s, "ER-placement", &["ABC", "A", "R23"]);
    assert_eq!(code, 2);
    assert!(!Path::new(&out).exists());
    assert_eq!(render(&dir, &s, "circumscribed", &["A"]).0, 2);
    assert_eq!(render(&dir, &s, "orthocenter", &["A", "L2", "B"]).0, 2);
}

#[test]
fn scene_round_trip_keeps_exact_values() {
    let s = Scene::parse(SCENE).unwrap();
    let again = Scene::parse(&s.to_toml()).unwrap();
    assert_eq!(s, again);
    assert_eq!(again.points["M"].y, "(sqrt 2)".parse().unwrap());
    assert_eq!(again.figures["R61"], vec!["W", "X", "Y", "V"]);
}
