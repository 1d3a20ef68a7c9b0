//! Writes the four construction diagrams as SVG through the command-line front end.
//!
//! Run with `cargo run --example render -- [out_dir]`.

use std::path::PathBuf;

const SCENE: &str = r#"
[points]
A = [0, 0]
B = [4, 0]
C = [1, 3]
P = [0, 0]
Q = [2, 0]
R = [2, 3]
S = [0, 3]
W = [0, 0]
X = [6, 0]
Y = [6, 1]
V = [0, 1]
O = [0, 0]
U2 = [2, 0]
U3 = [0, 3]
U4 = [4, 0]
U6 = [0, 6]

[figures]
T = ["A", "B", "C"]
R23 = ["P", "Q", "R", "S"]
R61 = ["W", "X", "Y", "V"]
"#;

fn main() {
    let dir: PathBuf = std::env::args().nth(1).map_or_else(std::env::temp_dir, PathBuf::from);
    let scene = dir.join("diagrams.toml");
    std::fs::write(&scene, SCENE).expect("scene written");
    let scene = scene.to_string_lossy().into_owned();

    let jobs: [(&str, &[&str]); 4] = [
        ("ER-placement", &["R23", "R61"]),
        ("circumscribed", &["T"]),
        ("proportion", &["O", "U2", "O", "U3", "O", "U4", "O", "U6"]),
        ("orthocenter", &["T"]),
    ];
    for (construction, names) in jobs {
        let out = dir.join(format!("{construction}.svg")).to_string_lossy().into_owned();
        let mut args = vec!["equal-figures", "render", "--scene", &scene, construction];
        args.extend_from_slice(names);
        args.extend(["--out", &out]);
        let code = equal_figures::cli::run(args, &mut std::io::stdout(), &mut std::io::stderr());
        assert_eq!(code, 0, "{construction} failed");
    }
}
