//! Command-line front end: `check`, `verify` and `render`.
//!
//! Exit codes: 0 when the relation holds or no statement is violated, 1
//! when a relation fails or a violation was found, 2 on any error.

pub mod scene;
pub mod svg;

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::axioms::{verify_many, Model, StatementId, StatementRun};
use crate::exact::ExactNumber;
use crate::figures::{
    circumscribed_rectangles, equal_quadrilaterals, equal_rectangles, equal_triangles, er_placement,
    figure_rectangles, rect_of_points, Figure, Quadrilateral, RectWH, Triangle,
};
use crate::plane::{between, concyclic, congruent, foot_of_perpendicular, orthocenter, parallel, Point, Segment};
use crate::proportion::{proportion_figure, proportion_holds};
use scene::Scene;
use svg::Drawing;

#[derive(Parser, Debug)]
#[command(name = "equal-figures", version, about = "Exact checks of equal figures and proportion")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate one relation on named points or figures of a scene.
    Check {
        #[arg(long)]
        scene: PathBuf,
        #[arg(long, value_enum)]
        relation: Relation,
        /// Point or figure names; figures expand to their vertices.
        #[arg(required = true)]
        names: Vec<String>,
    },
    /// Run the randomized verification suite.
    Verify {
        /// `all`, or a comma-separated list of statement names.
        #[arg(long, default_value = "all")]
        statements: String,
        #[arg(long, default_value_t = 100)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write one JSON line per trial here.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Draw a construction as SVG.
    Render {
        #[arg(long)]
        scene: PathBuf,
        #[arg(value_enum)]
        construction: Construction,
        names: Vec<String>,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Relation {
    #[value(name = "ET")]
    Et,
    #[value(name = "EF")]
    Ef,
    #[value(name = "ER")]
    Er,
    #[value(name = "proportion")]
    Proportion,
    #[value(name = "between")]
    Between,
    #[value(name = "congruent")]
    Congruent,
    #[value(name = "parallel")]
    Parallel,
    #[value(name = "concyclic")]
    Concyclic,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Construction {
    #[value(name = "ER-placement")]
    ErPlacement,
    #[value(name = "circumscribed")]
    Circumscribed,
    #[value(name = "proportion")]
    Proportion,
    #[value(name = "orthocenter")]
    Orthocenter,
}

type CliResult<T> = Result<T, String>;

/// Parse `args` (program name first) and run; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = match cli.command {
        Command::Check { scene, relation, names } => check(&scene, relation, &names, out),
        Command::Verify {
            statements,
            trials,
            seed,
            report,
        } => verify(&statements, trials, seed, report.as_deref(), out),
        Command::Render {
            scene,
            construction,
            names,
            out: path,
        } => render(&scene, construction, &names, &path, out),
    };
    match result {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn load(path: &Path) -> CliResult<Scene> {
    Scene::load(path).map_err(|e| format!("{}: {e}", path.display()))
}

/// All points named by `names`, figures expanded, with the expected count.
fn points(scene: &Scene, names: &[String], want: usize, what: &str) -> CliResult<Vec<Point>> {
    let mut pts = Vec::new();
    for n in names {
        pts.extend(scene.resolve(n).map_err(|e| e.to_string())?);
    }
    if pts.len() != want {
        return Err(format!("{what} needs {want} points, got {}", pts.len()));
    }
    Ok(pts)
}

fn show(x: &ExactNumber) -> String {
    if x.is_rational() {
        x.to_string()
    } else {
        format!("{x} ~ {}", x.to_decimal(6))
    }
}

fn show_rect(r: &RectWH) -> String {
    format!("{} by {}", show(&r.width), show(&r.height))
}

fn verdict(holds: bool, out: &mut dyn Write) -> CliResult<i32> {
    writeln!(out, "{}", if holds { "holds" } else { "fails" }).map_err(|e| e.to_string())?;
    Ok(if holds { 0 } else { 1 })
}

fn check(path: &Path, relation: Relation, names: &[String], out: &mut dyn Write) -> CliResult<i32> {
    let scene = load(path)?;
    let geom = |e: crate::plane::GeomError| e.to_string();
    let io = |e: std::io::Error| e.to_string();
    let holds = match relation {
        Relation::Et => {
            let p = points(&scene, names, 6, "ET")?;
            let t1 = Triangle::new(p[0].clone(), p[1].clone(), p[2].clone());
            let t2 = Triangle::new(p[3].clone(), p[4].clone(), p[5].clone());
            for (i, t) in [&t1, &t2].into_iter().enumerate() {
                let rects = figure_rectangles(&Figure::Triangle(t.clone())).map_err(geom)?;
                writeln!(out, "triangle {}: rectangle {}", i + 1, show_rect(&rects[0].rect)).map_err(io)?;
            }
            equal_triangles(&t1, &t2).map_err(geom)?
        }
        Relation::Ef => {
            let p = points(&scene, names, 8, "EF")?;
            let q1 = Quadrilateral::new(p[0].clone(), p[1].clone(), p[2].clone(), p[3].clone());
            let q2 = Quadrilateral::new(p[4].clone(), p[5].clone(), p[6].clone(), p[7].clone());
            for (i, q) in [&q1, &q2].into_iter().enumerate() {
                for r in circumscribed_rectangles(q).map_err(geom)? {
                    writeln!(out, "quadrilateral {}: rectangle {}", i + 1, show_rect(&r.rect)).map_err(io)?;
                }
            }
            equal_quadrilaterals(&q1, &q2).map_err(geom)?
        }
        Relation::Er => {
            let p = points(&scene, names, 8, "ER")?;
            let r1 = rect_of_points(&p[0], &p[1], &p[2], &p[3]).map_err(geom)?;
            let r2 = rect_of_points(&p[4], &p[5], &p[6], &p[7]).map_err(geom)?;
            writeln!(out, "rectangle 1: {}\nrectangle 2: {}", show_rect(&r1), show_rect(&r2)).map_err(io)?;
            equal_rectangles(&r1, &r2)
        }
        Relation::Proportion => {
            let p = points(&scene, names, 8, "proportion")?;
            let s = |i: usize| Segment::new(p[i].clone(), p[i + 1].clone());
            proportion_holds(&s(0), &s(2), &s(4), &s(6)).map_err(geom)?
        }
        Relation::Between => {
            let p = points(&scene, names, 3, "between")?;
            between(&p[0], &p[1], &p[2])
        }
        Relation::Congruent => {
            let p = points(&scene, names, 4, "congruent")?;
            congruent(&p[0], &p[1], &p[2], &p[3])
        }
        Relation::Parallel => {
            let p = points(&scene, names, 4, "parallel")?;
            parallel(&p[0], &p[1], &p[2], &p[3]).map_err(geom)?.holds()
        }
        Relation::Concyclic => {
            let p = points(&scene, names, 4, "concyclic")?;
            concyclic(&p[0], &p[1], &p[2], &p[3]).map_err(geom)?
        }
    };
    verdict(holds, out)
}

fn parse_statements(spec: &str) -> CliResult<Vec<StatementId>> {
    if spec == "all" {
        return Ok(StatementId::ALL.to_vec());
    }
    let ids: CliResult<Vec<StatementId>> = spec
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<StatementId>())
        .collect();
    let ids = ids?;
    if ids.is_empty() {
        return Err("no statements given".into());
    }
    Ok(ids)
}

fn verify(
    statements: &str,
    trials: u64,
    seed: u64,
    report: Option<&Path>,
    out: &mut dyn Write,
) -> CliResult<i32> {
    let ids = parse_statements(statements)?;
    if trials == 0 {
        return Err("--trials must be at least 1".into());
    }
    let runs = verify_many(&ids, trials, seed, &Model::standard());
    if let Some(path) = report {
        write_report(path, &runs).map_err(|e| format!("{}: {e}", path.display()))?;
    }
    let io = |e: std::io::Error| e.to_string();
    let width = ids.iter().map(|id| id.name().len()).max().unwrap_or(0);
    let mut violated = 0;
    for run in &runs {
        let c = &run.counts;
        writeln!(
            out,
            "{:<width$}  holds {:>6}  unconstructible {:>6}  VIOLATED {:>6}",
            run.statement.name(),
            c.holds,
            c.hypothesis_unconstructible,
            c.violated
        )
        .map_err(io)?;
        if let Some(v) = run.first_violation() {
            writeln!(out, "  first witness (trial {}): {}", v.trial, v.to_json_line()).map_err(io)?;
        }
        violated += c.violated;
    }
    writeln!(
        out,
        "{} statements, {} trials each, seed {}: {} violations",
        runs.len(),
        trials,
        seed,
        violated
    )
    .map_err(io)?;
    Ok(if violated == 0 { 0 } else { 1 })
}

fn write_report(path: &Path, runs: &[StatementRun]) -> std::io::Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    for run in runs {
        for r in &run.reports {
            writeln!(w, "{}", r.to_json_line())?;
        }
    }
    w.flush()
}

fn render(
    path: &Path,
    construction: Construction,
    names: &[String],
    out_path: &Path,
    out: &mut dyn Write,
) -> CliResult<i32> {
    let scene = load(path)?;
    let geom = |e: crate::plane::GeomError| e.to_string();
    let mut d = Drawing::default();
    match construction {
        Construction::ErPlacement => {
            let p = points(&scene, names, 8, "ER-placement")?;
            let r = rect_of_points(&p[0], &p[1], &p[2], &p[3]).map_err(geom)?;
            let s = rect_of_points(&p[4], &p[5], &p[6], &p[7]).map_err(geom)?;
            let pl = er_placement(&r, &s);
            d.polygon(&[pl.f.clone(), pl.e.clone(), pl.b.clone(), pl.g.clone()], "black");
            d.polygon(&[pl.b.clone(), pl.m.clone(), pl.l.clone(), pl.a.clone()], "black");
            d.segment(&pl.h, &pl.g, "gray");
            d.segment(&pl.h, &pl.a, "gray");
            d.segment(&pl.k, &pl.e, "gray");
            d.segment(&pl.k, &pl.m, "gray");
            d.segment(&pl.h, &pl.k, "red");
            let named = [
                ("B", &pl.b),
                ("E", &pl.e),
                ("G", &pl.g),
                ("F", &pl.f),
                ("M", &pl.m),
                ("A", &pl.a),
                ("L", &pl.l),
                ("H", &pl.h),
                ("K", &pl.k),
            ];
            for (n, p) in named {
                d.label(p, n);
            }
        }
        Construction::Circumscribed => {
            let [name] = names else {
                return Err("circumscribed needs exactly one figure name".into());
            };
            let fig = scene.figure(name).map_err(|e| e.to_string())?;
            let rects = figure_rectangles(&fig).map_err(geom)?;
            let vertices = scene.figures[name].clone();
            let pts = scene.resolve(name).map_err(|e| e.to_string())?;
            for r in &rects {
                d.polygon(&r.corners, "blue");
            }
            d.polygon(&pts, "black");
            for (n, p) in vertices.iter().zip(&pts) {
                d.label(p, n);
            }
            if let Figure::Triangle(_) = fig {
                d.label(&rects[0].corners[2], "D");
                d.label(&rects[0].corners[3], "K");
            }
        }
        Construction::Proportion => {
            let p = points(&scene, names, 8, "proportion")?;
            let s = |i: usize| Segment::new(p[i].clone(), p[i + 1].clone());
            let f = proportion_figure(&s(0), &s(2), &s(4), &s(6)).map_err(geom)?;
            let far_x = if f.big_b.x > f.small_b.x { &f.big_b } else { &f.small_b };
            let far_y = if f.big_c.y > f.small_c.y { &f.big_c } else { &f.small_c };
            d.segment(&f.vertex, far_x, "black");
            d.segment(&f.vertex, far_y, "black");
            d.segment(&f.big_b, &f.big_c, "red");
            d.segment(&f.small_b, &f.small_c, "red");
            for (n, q) in [("A", &f.vertex), ("B", &f.big_b), ("C", &f.big_c), ("b", &f.small_b), ("c", &f.small_c)] {
                d.label(q, n);
            }
        }
        Construction::Orthocenter => {
            let p = points(&scene, names, 3, "orthocenter")?;
            let h = orthocenter(&p[0], &p[1], &p[2]).map_err(geom)?;
            d.polygon(&p, "black");
            for i in 0..3 {
                let (a, b, c) = (&p[i], &p[(i + 1) % 3], &p[(i + 2) % 3]);
                let foot = foot_of_perpendicular(a, b, c).map_err(geom)?;
                d.segment(a, &foot, "gray");
                d.segment(&foot, &h, "gray");
            }
            for (n, q) in ["A", "B", "C"].into_iter().zip(&p) {
                d.label(q, n);
            }
            d.label(&h, "H");
        }
    }
    std::fs::write(out_path, d.to_svg()).map_err(|e| format!("{}: {e}", out_path.display()))?;
    writeln!(out, "wrote {}", out_path.display()).map_err(|e| e.to_string())?;
    Ok(0)
}
