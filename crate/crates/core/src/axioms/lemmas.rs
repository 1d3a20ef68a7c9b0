//! Generators and checks for the lemmas and theorems.
//!
//! Rectangles are stored as the point `(width, height)` and bare lengths as
//! `(length, 0)`, so every witness is a map of named points.
//!
//! Recipes beyond the obvious ones:
//!
//! * equal rectangle pairs: the second width is free, the second height is
//!   `w h / w'`;
//! * `I.43`: parallelogram `A, A+u, A+u+v, A+v` with `K = A + k (u + v)` on
//!   the diagonal and the four side points at parameter `k`; with
//!   probability 1/4 `v` is perpendicular to `u` so the rectangle case runs;
//! * `I.42-doubles`: `D = A + B - C + t (B - A)`, or `D = 2A - C` / `2B - C`
//!   (probability 1/8 each) for the really-a-triangle cases;
//! * `addequals`: the parallelogram sides are solved from the cross product
//!   of its edge directions;
//! * `area_additivity`: the trial index selects triangle+triangle,
//!   triangle+quadrilateral, quadrilateral+triangle, quadrilateral+quadrilateral;
//! * `cyclic_quad`: `C = O - k (A - O)` and `D = O - (k |OA|^2 / |OB|^2)(B - O)`,
//!   i.e. equal powers of `O`;
//! * `pascal_kupffer`: perpendicular axes through `O` with `b' = a a' / b`,
//!   `c' = a a' / c`.

use crate::exact::ExactNumber;
use crate::figures::{
    area, area_sum, circumscribed_rectangles_agree, classify_quadrilateral, equal_figures,
    equal_quadrilaterals, equal_rectangles, figure_rectangles, oracle::oracle_area,
    rect_of_points, Figure, QuadKind, RectWH,
};
use crate::plane::{
    angles_equal, between, collinear, cross, dot, line_intersection, on_ray, opposite_side,
    orthocenter, parallel, right_angle, GeomResult, Parallelism, Point, Segment,
};
use crate::proportion::{
    check_fundamental, check_interchange, cyclic_quad_check, fourth_proportional,
    pascal_kupffer_check, proportion_holds,
};

use super::gen::{twice_area, Sampler};
use super::{all, be, ef, et, Assignment, Model};

fn rect_pt(w: &ExactNumber, h: &ExactNumber) -> Point {
    Point::new(w.clone(), h.clone())
}

fn len_pt(l: &ExactNumber) -> Point {
    Point::new(l.clone(), 0.into())
}

fn er(a: &Assignment, x: &str, y: &str) -> GeomResult<bool> {
    Ok(equal_rectangles(&a.rect(x)?, &a.rect(y)?))
}

fn equal_partner(s: &mut Sampler, w: &ExactNumber, h: &ExactNumber) -> (ExactNumber, ExactNumber) {
    let w2 = s.length();
    let h2 = (w * h).checked_div(&w2).expect("positive");
    (w2, h2)
}

pub(super) fn gen_er_proportion(s: &mut Sampler, _: u64) -> Option<Assignment> {
    let (b, a, c) = (s.length(), s.length(), s.length());
    let d = if s.chance(1, 2) {
        (&b * &a).checked_div(&c).ok()?
    } else {
        s.length()
    };
    Some(Assignment::new().with("R", rect_pt(&b, &a)).with("S", rect_pt(&c, &d)))
}

pub(super) fn hyp_rects(a: &Assignment, names: &[&str]) -> GeomResult<bool> {
    for n in names {
        a.rect(n)?;
    }
    Ok(true)
}

pub(super) fn hyp_er_proportion(_: &Model, a: &Assignment) -> GeomResult<bool> {
    hyp_rects(a, &["R", "S"])
}

pub(super) fn concl_er_proportion(_: &Model, a: &Assignment) -> GeomResult<bool> {
    let (r, s) = (a.rect("R")?, a.rect("S")?);
    let seg = |x: &ExactNumber| Segment::of_length(x.clone());
    let (b, h, c, d) = (seg(&r.width), seg(&r.height), seg(&s.width), seg(&s.height));
    let equal = equal_rectangles(&r, &s);
    let first = proportion_holds(&b, &c, &d, &h)?;
    let second = proportion_holds(&b, &d, &c, &h)?;
    Ok(equal == first && first == second)
}

pub(super) fn gen_er_triple(s: &mut Sampler, _: u64) -> Option<Assignment> {
    let (w, h) = (s.length(), s.length());
    let (w2, h2) = equal_partner(s, &w, &h);
    let (w3, h3) = equal_partner(s, &w2, &h2);
    Some(
        Assignment::new()
            .with("R", rect_pt(&w, &h))
            .with("S", rect_pt(&w2, &h2))
            .with("T", rect_pt(&w3, &h3)),
    )
}

pub(super) fn hyp_er_equivalence(_: &Model, a: &Assignment) -> GeomResult<bool> {
    all([er(a, "R", "S"), er(a, "S", "T")])
}

pub(super) fn concl_er_equivalence(_: &Model, a: &Assignment) -> GeomResult<bool> {
    all([er(a, "R", "R"), er(a, "S", "R"), er(a, "R", "T")])
}

pub(super) fn hyp_any_rect(_: &Model, a: &Assignment) -> GeomResult<bool> {
    hyp_rects(a, &["R"])
}

pub(super) fn concl_er1(_: &Model, a: &Assignment) -> GeomResult<bool> {
    let r = a.rect("R")?;
    Ok(equal_rectangles(&r, &r.transposed()))
}

pub(super) fn gen_er2(s: &mut Sampler, _: u64) -> Option<Assignment> {
    let (w, h) = (s.length(), s.length());
    let w2 = if s.chance(1, 2) { w.clone() } else { s.length() };
    Some(Assignment::new().with("R", rect_pt(&w, &h)).with("S", rect_pt(&w2, &h)))
}

pub(super) fn hyp_er2(_: &Model, a: &Assignment) -> GeomResult<bool> {
    Ok(hyp_rects(a, &["R", "S"])? && a.p("R")?.y == a.p("S")?.y)
}

pub(super) fn concl_er2(_: &Model, a: &Assignment) -> GeomResult<bool> {
    Ok(er(a, "R", "S")? == (a.p("R")?.x == a.p("S")?.x))
}

pub(super) fn gen_er3(s: &mut Sampler, _: u64) -> Option<Assignment> {
    let (w, h) = (s.length(), s.length());
    let (w2, h2) = (&w + &s.length(), &h + &s.length());
    Some(Assignment::new().with("R", rect_pt(&w, &h)).with("S", rect_pt(&w2, &h2)))
}

pub(super) fn hyp_er3(_: &Model, a: &Assignment) -> GeomResult<bool> {
    let (r, s) = (a.rect("R")?, a.rect("S")?);
    Ok(r.width < s.width && r.height < s.height)
}

pub(super) fn concl_er3(_: &Model, a: &Assignment) -> GeomResult<bool> {
    Ok(!er(a, "R", "S")?)
}

/// Equal `R`, `S` and equal pieces `P` (height of `R`) and `Q` (height of `S`)
/// narrower than them.
pub(super) fn gen_er_pieces(s: &mut Sampler, _: u64) -> Option<Assignment> {
    let (w, h) = (s.length(), s.length());
    let (w2, h2) = equal_partner(s, &w, &h);
    let c = &w * &s.unit_ratio();
    let c2 = (&c * &h).checked_div(&h2).ok()?;
    Some(
        Assignment::new()
            .with("R", rect_pt(&w, &h))
            .with("S", rect_pt(&w2, &h2))
            .with("P", rect_pt(&c, &h))
            .with("Q", rect_pt(&c2, &h2)),
    )
}

pub(super) fn hyp_er_pieces(_: &Model, a: &Assignment) -> GeomResult<bool> {
    let (r, s, p, q) = (a.rect("R")?, a.rect("S")?, a.rect("P")?, a.rect("Q")?);
    Ok(equal_rectangles(&r, &s)
        && equal_rectangles(&p, &q)
        && p.height == r.height
        && q.height == s.height
        && p.width < r.width
        && q.width < s.width)
}

fn combined(a: &Assignment, whole: &str, piece: &str, sign: i64) -> GeomResult<RectWH> {
    let (w, p) = (a.rect(whole)?, a.rect(piece)?);
    RectWH::new(&w.width + &(&p.width * &ExactNumber::from(sign)), w.height)
}

pub(super) fn concl_er4(_: &Model, a: &Assignment) -> GeomResult<bool> {
    Ok(equal_rectangles(&combined(a, "R", "P", -1)?, &combined(a, "S", "Q", -1)?))
}

pub(super) fn concl_er5(_: &Model, a: &Assignment) -> GeomResult<bool> {
    Ok(equal_rectangles(&combined(a, "R", "P", 1)?, &combined(a, "S", "Q", 1)?))
}

pub(super) fn gen_triangle(s: &mut Sampler, _: u64) -> Option<Assignment> {
    let mut t = s.triangle();
    if s.chance(1, 4) {
        t = s.isometry().apply_all(&t);
    }
    Some(Assignment::new().with_all(&["A", "B", "C"], &t))
}

pub(super) fn hyp_triangle(_: &Model, a: &Assignment) -> GeomResult<bool> {
    Ok(!a.tri("A", "B", "C")?.is_degenerate())
}

pub(super) fn concl_et_forward(m: &Model, a: &Assignment) -> GeomResult<bool> {
    let t = a.tri("A", "B", "C")?;
    for p in t.permutations() {
        if !(m.equal_triangles)(&t, &p)? {
            return Ok(false);
        }
    }
    Ok(true)
}

pub(super) fn gen_i35(s: &mut Sampler, _: u64) -> Option<Assignment> {
    let [b, c, a] = s.triangle();
    let side = &c - &b;
    let d = &a + &side;
    let e = &a + &side.scale(&s.coord());
    let f = &e + &side;
    Some(Assignment::new().with_all(&["A", "B", "C", "D", "E", "F"], &[a, b, c, d, e, f]))
}

pub(super) fn hyp_i35(_: &Model, a: &Assignment) -> GeomResult<bool> {
    let (pa, pb, pc, pd, pe, pf) = (a.p("A")?, a.p("B")?, a.p("C")?, a.p("D")?, a.p("E")?, a.p("F")?);
    let side = &pc - &pb;
    Ok(parallel(&pa, &pd, &pb, &pc)? == Parallelism::Strict
        && &pd - &pa == side
        && &pf - &pe == side
        && collinear(&pa, &pd, &pe))
}

pub(super) fn concl_i35(_: &Model, a: &Assignment) -> GeomResult<bool> {
    ef(a, ["A", "B", "C", "D"], ["E", "B", "C", "F"])
}

pub(super) fn gen_i37(s: &mut Sampler, _: u64) -> Option<Assignment> {
    let [b, c, a] = s.triangle();
    let mut t = s.coord();
    if t.is_zero() {
        t = 1.into();
    }
    let d = &a + &(&c - &b).scale(&t);
    let mut pts = [a, b, c, d];
    if s.chance(1, 4) {
        pts = s.isometry().apply_all(&pts);
    }
    Some(Assignment::new().with_all(&["A", "B", "C", "D"], &pts))
}

pub(super) fn hyp_i37(_: &Model, a: &Assignment) -> GeomResult<bool> {
    Ok(parallel(&a.p("A")?, &a.p("D")?, &a.p("B")?, &a.p("C")?)? == Parallelism::Strict)
}

pub(super) fn concl_i37(m: &Model, a: &Assignment) -> GeomResult<bool> {
    et(m, a, ["A", "B", "C"], ["D", "B", "C"])
}

/// Fourth vertex across `AB` from `C` with `ABD` equal to `ABC`.
fn double_vertex(s: &mut Sampler, a: &Point, b: &Point, c: &Point) -> Point {
    match s.int(0, 7) {
        0 => &a.scale(&2.into()) - c,
        1 => &b.scale(&2.into()) - c,
        _ => {
            let t = &(&s.unit_ratio() * &2.into()) - &1.into();
            &(&(a + b) - c) + &(b - a).scale(&t)
        }
    }
}

pub(super) fn gen_doubles(s: &mut Sampler, _: u64) -> Option<Assignment> {
    let [pa, pb, pc] = s.triangle();
    let pd = double_vertex(s, &pa, &pb, &pc);
    let [a, b, c] = s.equal_triangle(&[pa.clone(), pb.clone(), pc.clone()]);
    let d = double_vertex(s, &a, &b, &c);
    Some(
        Assignment::new()
            .with_all(&["A", "B", "C", "D"], &[pa, pb, pc, pd])
            .with_all(&["a", "b", "c", "d"], &[a, b, c, d]),
    )
}

pub(super) fn hyp_doubles(m: &Model, a: &Assignment) -> GeomResult<bool> {
    let os = |c: &str, d: &str, x: &str, y: &str| -> GeomResult<bool> {
        opposite_side(&a.p(c)?, &a.p(d)?, &a.p(x)?, &a.p(y)?)
    };
    let valid = |n: [&str; 4]| -> GeomResult<bool> {
        Ok(classify_quadrilateral(&a.quad(n[0], n[1], n[2], n[3])?) != QuadKind::Invalid)
    };
    all([
        et(m, a, ["A", "B", "C"], ["A", "B", "D"]),
        et(m, a, ["a", "b", "c"], ["a", "b", "d"]),
        et(m, a, ["A", "B", "C"], ["a", "b", "c"]),
        os("C", "D", "A", "B"),
        os("c", "d", "a", "b"),
        valid(["A", "C", "B", "D"]),
        valid(["a", "c", "b", "d"]),
    ])
}

pub(super) fn concl_doubles(_: &Model, a: &Assignment) -> GeomResult<bool> {
    ef(a, ["A", "C", "B", "D"], ["a", "c", "b", "d"])
}

pub(super) fn gen_i43(s: &mut Sampler, _: u64) -> Option<Assignment> {
    let origin = s.point();
    let u = s.direction();
    let v = if s.chance(1, 4) {
        u.perp().scale(&s.positive())
    } else {
        loop {
            let v = s.direction();
            if !cross(&u, &v).is_zero() {
                break v;
            }
        }
    };
    let k = s.unit_ratio();
    let at = |x: ExactNumber, y: ExactNumber| &origin + &(&u.scale(&x) + &v.scale(&y));
    let one = ExactNumber::one;
    let pts = [
        at(0.into(), 0.into()),
        at(one(), 0.into()),
        at(one(), one()),
        at(0.into(), one()),
        at(k.clone(), k.clone()),
        at(k.clone(), 0.into()),
        at(k.clone(), one()),
        at(one(), k.clone()),
        at(0.into(), k),
    ];
    Some(Assignment::new().with_all(&["A", "B", "C", "D", "K", "E", "F", "G", "H"], &pts))
}

pub(super) fn hyp_i43(_: &Model, a: &Assignment) -> GeomResult<bool> {
    let p = |n: &str| a.p(n);
    Ok(&p("B")? - &p("A")? == &p("C")? - &p("D")?
        && !collinear(&p("A")?, &p("B")?, &p("D")?)
        && be(a, "A", "K", "C")?
        && be(a, "A", "E", "B")?
        && be(a, "B", "G", "C")?
        && be(a, "D", "F", "C")?
        && be(a, "A", "H", "D")?
        && be(a, "E", "K", "F")?
        && be(a, "H", "K", "G")?
        && parallel(&p("E")?, &p("F")?, &p("A")?, &p("D")?)?.holds()
        && parallel(&p("H")?, &p("G")?, &p("A")?, &p("B")?)?.holds())
}

pub(super) fn concl_i43(_: &Model, a: &Assignment) -> GeomResult<bool> {
    let complements = ef(a, ["E", "B", "G", "K"], ["H", "K", "F", "D"])?;
    if !right_angle(&a.p("D")?, &a.p("A")?, &a.p("B")?)? {
        return Ok(complements);
    }
    let r1 = rect_of_points(&a.p("E")?, &a.p("B")?, &a.p("G")?, &a.p("K")?)?;
    let r2 = rect_of_points(&a.p("H")?, &a.p("K")?, &a.p("F")?, &a.p("D")?)?;
    Ok(complements && equal_rectangles(&r1, &r2))
}

pub(super) fn gen_addequals(s: &mut Sampler, _: u64) -> Option<Assignment> {
    let [a, b, c, d] = s.convex_quad();
    let t1 = twice_area(&[a.clone(), d.clone(), b.clone()]);
    let t2 = twice_area(&[c.clone(), b.clone(), d.clone()]);
    let f = s.point();
    let (u, v) = loop {
        let (u, v) = (s.direction(), s.direction());
        if !cross(&u, &v).is_zero() {
            break (u, v);
        }
    };
    let twice_cell = &cross(&u, &v).abs() * &2.into();
    let g = &f + &u.scale(&t1.checked_div(&twice_cell).ok()?);
    let l = &g + &u.scale(&t2.checked_div(&twice_cell).ok()?);
    let (k, h, m) = (&f + &v, &g + &v, &l + &v);
    Some(
        Assignment::new()
            .with_all(&["A", "B", "C", "D"], &[a, b, c, d])
            .with_all(&["F", "G", "H", "K", "L", "M"], &[f, g, h, k, l, m]),
    )
}

pub(super) fn hyp_addequals(_: &Model, a: &Assignment) -> GeomResult<bool> {
    let p = |n: &str| a.p(n);
    let convex = matches!(classify_quadrilateral(&a.quad("A", "B", "C", "D")?), QuadKind::Convex(_));
    Ok(convex
        && &p("G")? - &p("F")? == &p("H")? - &p("K")?
        && &p("L")? - &p("G")? == &p("M")? - &p("H")?
        && be(a, "F", "G", "L")?
        && be(a, "K", "H", "M")?
        && equal_figures(&a.tri_fig("A", "D", "B")?, &a.quad_fig("F", "G", "H", "K")?)?
        && equal_figures(&a.tri_fig("C", "B", "D")?, &a.quad_fig("G", "L", "M", "H")?)?)
}

pub(super) fn concl_addequals(_: &Model, a: &Assignment) -> GeomResult<bool> {
    ef(a, ["A", "B", "C", "D"], ["F", "L", "M", "K"])
}

/// A figure named `X0, X1, X2[, X3]`.
fn figure(a: &Assignment, prefix: &str) -> GeomResult<Figure> {
    let n = |i: usize| format!("{prefix}{i}");
    if a.get(&n(3)).is_ok() {
        a.quad_fig(&n(0), &n(1), &n(2), &n(3))
    } else {
        a.tri_fig(&n(0), &n(1), &n(2))
    }
}

fn with_figure(a: Assignment, prefix: &str, pts: &[Point]) -> Assignment {
    let names: Vec<String> = (0..pts.len()).map(|i| format!("{prefix}{i}")).collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    a.with_all(&refs, pts)
}

fn figure_valid(f: &Figure) -> bool {
    match f {
        Figure::Triangle(t) => !t.is_degenerate(),
        Figure::Quad(q) => classify_quadrilateral(q) != QuadKind::Invalid,
    }
}

pub(super) fn gen_paste5helper(s: &mut Sampler, trial: u64) -> Option<Assignment> {
    let pts: Vec<Point> = match trial % 3 {
        0 => s.triangle().to_vec(),
        1 => s.convex_quad().to_vec(),
        _ => s.really_triangle().to_vec(),
    };
    Some(with_figure(Assignment::new(), "X", &pts))
}

pub(super) fn hyp_figure_x(_: &Model, a: &Assignment) -> GeomResult<bool> {
    Ok(figure_valid(&figure(a, "X")?))
}

/// The two halves of a rectangle cut along its midlines.
fn halves(c: &[Point; 4]) -> [Figure; 2] {
    let mid = Point::midpoint;
    let quad = |p: [Point; 4]| Figure::Quad(crate::figures::Quadrilateral { v: p });
    [
        quad([c[0].clone(), c[1].clone(), mid(&c[1], &c[2]), mid(&c[0], &c[3])]),
        quad([c[0].clone(), mid(&c[0], &c[1]), mid(&c[3], &c[2]), c[3].clone()]),
    ]
}

pub(super) fn concl_paste5helper(_: &Model, a: &Assignment) -> GeomResult<bool> {
    let f = figure(a, "X")?;
    for r in figure_rectangles(&f)? {
        for h in halves(&r.corners) {
            if !equal_figures(&f, &h)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Two equal rectangles realised as point quadruples `X*` and `Y*`.
pub(super) fn gen_equal_rect_figures(s: &mut Sampler, _: u64) -> Option<Assignment> {
    let (w, h) = (s.positive(), s.positive());
    let w2 = s.positive();
    let h2 = (&w * &h).checked_div(&w2).ok()?;
    let r = RectWH::new(w, h).ok()?;
    let r2 = RectWH::new(w2, h2).ok()?;
    let x = s.isometry().apply_all(&r.corners());
    let y = s.isometry().apply_all(&r2.corners());
    Some(with_figure(with_figure(Assignment::new(), "X", &x), "Y", &y))
}

fn corners(a: &Assignment, prefix: &str) -> GeomResult<[Point; 4]> {
    let n = |i: usize| a.p(&format!("{prefix}{i}"));
    Ok([n(0)?, n(1)?, n(2)?, n(3)?])
}

pub(super) fn hyp_equal_rect_figures(_: &Model, a: &Assignment) -> GeomResult<bool> {
    let [x0, x1, x2, x3] = corners(a, "X")?;
    let [y0, y1, y2, y3] = corners(a, "Y")?;
    Ok(equal_rectangles(&rect_of_points(&x0, &x1, &x2, &x3)?, &rect_of_points(&y0, &y1, &y2, &y3)?))
}

pub(super) fn concl_halves_of_rectangles(_: &Model, a: &Assignment) -> GeomResult<bool> {
    let (x, y) = (corners(a, "X")?, corners(a, "Y")?);
    for hx in halves(&x) {
        for hy in halves(&y) {
            if !equal_figures(&hx, &hy)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub(super) fn concl_equal_rect_figures(_: &Model, a: &Assignment) -> GeomResult<bool> {
    ef(a, ["X0", "X1", "X2", "X3"], ["Y0", "Y1", "Y2", "Y3"])
}

fn quad_of_kind(s: &mut Sampler, convex: bool) -> [Point; 4] {
    if convex {
        s.convex_quad()
    } else {
        s.really_triangle()
    }
}

/// Kinds cycle through the four convex / really-a-triangle combinations by trial.
pub(super) fn gen_completeness(s: &mut Sampler, trial: u64) -> Option<Assignment> {
    let (k1, k2) = (trial.is_multiple_of(2), (trial / 2).is_multiple_of(2));
    let x = quad_of_kind(s, k1);
    let mut y = quad_of_kind(s, k2);
    if s.chance(1, 2) {
        y = s.rescaled(&y, &twice_area(&x));
    }
    if s.chance(1, 4) {
        y = s.isometry().apply_all(&y);
    }
    let len = s.length();
    let unit = s.segment_of(&len);
    let a = with_figure(with_figure(Assignment::new(), "X", &x), "Y", &y);
    Some(a.with("U", unit.p).with("V", unit.q))
}

pub(super) fn hyp_completeness(_: &Model, a: &Assignment) -> GeomResult<bool> {
    Ok(figure_valid(&figure(a, "X")?) && figure_valid(&figure(a, "Y")?) && a.p("U")? != a.p("V")?)
}

pub(super) fn concl_completeness(_: &Model, a: &Assignment) -> GeomResult<bool> {
    let (fx, fy) = (figure(a, "X")?, figure(a, "Y")?);
    let (Figure::Quad(qx), Figure::Quad(qy)) = (&fx, &fy) else {
        return Ok(false);
    };
    let unit = a.seg("U", "V")?;
    let equal = equal_quadrilaterals(qx, qy)?;
    let same_area = area(&fx, &unit)?.width == area(&fy, &unit)?.width;
    let same_oracle = oracle_area(&fx) == oracle_area(&fy);
    Ok(equal == same_area
        && same_area == same_oracle
        && circumscribed_rectangles_agree(qx)?
        && circumscribed_rectangles_agree(qy)?)
}

/// Whole `W*` composed of parts `G*` and `D*` sharing an edge.
pub(super) fn gen_additivity(s: &mut Sampler, trial: u64) -> Option<Assignment> {
    let (whole, first, second): (Vec<Point>, Vec<Point>, Vec<Point>) = match trial % 4 {
        0 => {
            if s.chance(1, 2) {
                let [a, b, c, d] = s.convex_quad();
                (
                    vec![a.clone(), b.clone(), c.clone(), d.clone()],
                    vec![a.clone(), b, c.clone()],
                    vec![a, c, d],
                )
            } else {
                // cevian split; the whole is the really-a-triangle ABDC
                let [a, b, c] = s.triangle();
                let d = Point::lerp(&b, &c, &s.unit_ratio());
                (
                    vec![a.clone(), b.clone(), d.clone(), c.clone()],
                    vec![a.clone(), b, d.clone()],
                    vec![a, d, c],
                )
            }
        }
        1 | 2 => {
            let [a, b, d, e] = s.convex_quad();
            let c = Point::lerp(&b, &d, &s.unit_ratio());
            let tri = vec![a.clone(), b.clone(), c.clone()];
            let quad = vec![a.clone(), c, d.clone(), e.clone()];
            let whole = vec![a, b, d, e];
            if trial % 4 == 1 {
                (whole, tri, quad)
            } else {
                (whole, quad, tri)
            }
        }
        _ => {
            let [a, c, d, f] = s.convex_quad();
            let b = Point::lerp(&a, &c, &s.unit_ratio());
            let e = Point::lerp(&d, &f, &s.unit_ratio());
            (
                vec![a.clone(), c.clone(), d.clone(), f.clone()],
                vec![a, b.clone(), e.clone(), f],
                vec![b, c, d, e],
            )
        }
    };
    let len = s.length();
    let unit = s.segment_of(&len);
    let a = with_figure(Assignment::new(), "W", &whole);
    let a = with_figure(with_figure(a, "G", &first), "D", &second);
    Some(a.with("U", unit.p).with("V", unit.q))
}

pub(super) fn hyp_additivity(_: &Model, a: &Assignment) -> GeomResult<bool> {
    let (w, g, d) = (figure(a, "W")?, figure(a, "G")?, figure(a, "D")?);
    // the parts tile the whole: their areas add up and each part is valid
    let pts = |f: &Figure| -> Vec<Point> {
        match f {
            Figure::Triangle(t) => vec![t.a.clone(), t.b.clone(), t.c.clone()],
            Figure::Quad(q) => q.v.to_vec(),
        }
    };
    Ok(figure_valid(&w)
        && figure_valid(&g)
        && figure_valid(&d)
        && twice_area(&pts(&w)) == &twice_area(&pts(&g)) + &twice_area(&pts(&d)))
}

pub(super) fn concl_additivity(_: &Model, a: &Assignment) -> GeomResult<bool> {
    let unit = a.seg("U", "V")?;
    let whole = area(&figure(a, "W")?, &unit)?;
    let parts = area_sum(&area(&figure(a, "G")?, &unit)?, &area(&figure(a, "D")?, &unit)?)?;
    Ok(whole.width == parts.width)
}

pub(super) fn gen_interchange(s: &mut Sampler, _: u64) -> Option<Assignment> {
    let seg = |s: &mut Sampler| loop {
        let (p, q) = (s.point(), s.point());
        if p != q {
            return Segment::new(p, q);
        }
    };
    let (a, b, p) = (seg(s), seg(s), seg(s));
    let q_len = (&b.length_sq() * &p.length_sq()).checked_div(&a.length_sq()).ok()?.sqrt().ok()?;
    let q = s.segment_of(&q_len);
    let names = ["A0", "A1", "B0", "B1", "P0", "P1", "Q0", "Q1"];
    Some(Assignment::new().with_all(&names, &[a.p, a.q, b.p, b.q, p.p, p.q, q.p, q.q]))
}

pub(super) fn hyp_interchange(_: &Model, a: &Assignment) -> GeomResult<bool> {
    proportion_holds(&a.seg("A0", "A1")?, &a.seg("B0", "B1")?, &a.seg("P0", "P1")?, &a.seg("Q0", "Q1")?)
}

pub(super) fn concl_interchange(_: &Model, a: &Assignment) -> GeomResult<bool> {
    check_interchange(&a.seg("A0", "A1")?, &a.seg("B0", "B1")?, &a.seg("P0", "P1")?, &a.seg("Q0", "Q1")?)
}

pub(super) fn gen_fundamental(s: &mut Sampler, _: u64) -> Option<Assignment> {
    let [a, u, v] = s.triangle();
    let (k, k2, t) = (s.positive(), s.positive(), s.positive());
    let b = Point::lerp(&a, &u, &k);
    let b2 = Point::lerp(&a, &u, &k2);
    let c = Point::lerp(&a, &v, &t);
    let c2 = Point::lerp(&a, &v, &(&t * &k2.checked_div(&k).ok()?));
    let mut pts = [a, b, c, b2, c2];
    if s.chance(1, 4) {
        pts = s.isometry().apply_all(&pts);
    }
    Some(Assignment::new().with_all(&["A", "B", "C", "b", "c"], &pts))
}

pub(super) fn hyp_fundamental(_: &Model, a: &Assignment) -> GeomResult<bool> {
    let (pa, pb, pc, b2, c2) = (a.p("A")?, a.p("B")?, a.p("C")?, a.p("b")?, a.p("c")?);
    Ok(!collinear(&pa, &pb, &pc)
        && on_ray(&pa, &pb, &b2)
        && on_ray(&pa, &pc, &c2)
        && parallel(&pb, &pc, &b2, &c2)?.holds())
}

pub(super) fn concl_fundamental(_: &Model, a: &Assignment) -> GeomResult<bool> {
    check_fundamental(&a.p("A")?, &a.p("B")?, &a.p("C")?, &a.p("b")?, &a.p("c")?)
}

pub(super) fn gen_pascal_kupffer(s: &mut Sampler, _: u64) -> Option<Assignment> {
    let o = s.point();
    let u = s.direction();
    let v = u.perp();
    let sign: ExactNumber = if s.chance(1, 2) { 1.into() } else { (-1).into() };
    let (a, b, c) = (s.positive(), s.positive(), s.positive());
    if a == b || b == c || a == c {
        return None;
    }
    let ap = s.positive();
    let bp = (&a * &ap).checked_div(&b).ok()?;
    let cp = (&a * &ap).checked_div(&c).ok()?;
    let on_u = |k: &ExactNumber| &o + &u.scale(&(k * &sign));
    let on_v = |k: &ExactNumber| &o + &v.scale(k);
    let pts = [o.clone(), on_u(&a), on_u(&b), on_u(&c), on_v(&ap), on_v(&bp), on_v(&cp)];
    Some(Assignment::new().with_all(&["O", "A", "B", "C", "A'", "B'", "C'"], &pts))
}

pub(super) fn hyp_pascal_kupffer(_: &Model, a: &Assignment) -> GeomResult<bool> {
    let p = |n: &str| a.p(n);
    let (o, pa, pb, pc, ap, bp, cp) = (p("O")?, p("A")?, p("B")?, p("C")?, p("A'")?, p("B'")?, p("C'")?);
    let distinct = |x: &Point, y: &Point, z: &Point| x != y && y != z && x != z;
    Ok(distinct(&pa, &pb, &pc)
        && distinct(&ap, &bp, &cp)
        && [&pa, &pb, &pc].iter().all(|x| **x != o)
        && collinear(&o, &pa, &pb)
        && collinear(&o, &pa, &pc)
        && right_angle(&pa, &o, &ap)?
        && on_ray(&o, &ap, &bp)
        && on_ray(&o, &ap, &cp)
        && parallel(&pa, &bp, &pb, &ap)?.holds()
        && parallel(&pb, &cp, &pc, &bp)?.holds())
}

pub(super) fn concl_pascal_kupffer(_: &Model, a: &Assignment) -> GeomResult<bool> {
    let p = |n: &str| a.p(n);
    pascal_kupffer_check(&p("O")?, &p("A")?, &p("B")?, &p("C")?, &p("A'")?, &p("B'")?, &p("C'")?)
}

pub(super) fn gen_cyclic_quad(s: &mut Sampler, _: u64) -> Option<Assignment> {
    let o = s.point();
    let (u, w) = (s.direction(), s.direction());
    if cross(&u, &w).is_zero() {
        return None;
    }
    let k = if s.chance(1, 4) {
        s.positive().sqrt().ok()?
    } else {
        s.positive()
    };
    let a = &o + &u;
    let b = &o + &w;
    let c = &o - &u.scale(&k);
    let d = &o - &w.scale(&(&k * &u.norm_sq()).checked_div(&w.norm_sq()).ok()?);
    Some(Assignment::new().with_all(&["A", "B", "C", "D", "O"], &[a, b, c, d, o]))
}

pub(super) fn hyp_cyclic_quad(_: &Model, a: &Assignment) -> GeomResult<bool> {
    let p = |n: &str| a.p(n);
    let o = line_intersection(&p("A")?, &p("C")?, &p("B")?, &p("D")?)?;
    Ok(between(&p("A")?, &o, &p("C")?)
        && between(&p("B")?, &o, &p("D")?)
        && angles_equal(&o, &p("A")?, &p("B")?, &o, &p("D")?, &p("C")?)?)
}

pub(super) fn concl_cyclic_quad(_: &Model, a: &Assignment) -> GeomResult<bool> {
    cyclic_quad_check(&a.p("A")?, &a.p("B")?, &a.p("C")?, &a.p("D")?)
}

pub(super) fn gen_parallelpasch(s: &mut Sampler, _: u64) -> Option<Assignment> {
    let [e, b, g] = s.triangle();
    let f = &(&e + &g) - &b;
    let a = Point::lerp(&e, &b, &(&ExactNumber::one() + &s.positive()));
    Some(Assignment::new().with_all(&["E", "B", "G", "F", "A"], &[e, b, g, f, a]))
}

pub(super) fn hyp_parallelpasch(_: &Model, a: &Assignment) -> GeomResult<bool> {
    let p = |n: &str| a.p(n);
    Ok(!collinear(&p("E")?, &p("B")?, &p("G")?)
        && &p("F")? - &p("E")? == &p("G")? - &p("B")?
        && be(a, "E", "B", "A")?)
}

pub(super) fn concl_parallelpasch(_: &Model, a: &Assignment) -> GeomResult<bool> {
    let p = |n: &str| a.p(n);
    let x = line_intersection(&p("A")?, &p("F")?, &p("B")?, &p("G")?)?;
    Ok(between(&p("B")?, &x, &p("G")?) && between(&p("A")?, &x, &p("F")?))
}

pub(super) fn concl_orthocenter(_: &Model, a: &Assignment) -> GeomResult<bool> {
    let (pa, pb, pc) = (a.p("A")?, a.p("B")?, a.p("C")?);
    let h = orthocenter(&pa, &pb, &pc)?;
    Ok(dot(&(&h - &pa), &(&pc - &pb)).is_zero()
        && dot(&(&h - &pb), &(&pc - &pa)).is_zero()
        && dot(&(&h - &pc), &(&pb - &pa)).is_zero())
}

fn random_segment(s: &mut Sampler) -> Segment {
    loop {
        let (p, q) = (s.point(), s.point());
        if p != q {
            return Segment::new(p, q);
        }
    }
}

/// `|b| |c| / |a|` as a segment in a random position.
fn fourth_segment(s: &mut Sampler, a: &Segment, b: &Segment, c: &Segment) -> Option<Segment> {
    let len = (&b.length_sq() * &c.length_sq()).checked_div(&a.length_sq()).ok()?.sqrt().ok()?;
    Some(s.segment_of(&len))
}

fn with_segments(names: &[&str], segs: &[Segment]) -> Assignment {
    let mut a = Assignment::new();
    for (n, sg) in names.iter().zip(segs) {
        a.set(&format!("{n}0"), sg.p.clone());
        a.set(&format!("{n}1"), sg.q.clone());
    }
    a
}

fn seg_named(a: &Assignment, n: &str) -> GeomResult<Segment> {
    a.seg(&format!("{n}0"), &format!("{n}1"))
}

pub(super) fn gen_proportion_flip(s: &mut Sampler, _: u64) -> Option<Assignment> {
    let (a, b, c) = (random_segment(s), random_segment(s), random_segment(s));
    let d = if s.chance(1, 2) {
        fourth_segment(s, &a, &b, &c)?
    } else {
        random_segment(s)
    };
    Some(with_segments(&["A", "B", "C", "D"], &[a, b, c, d]))
}

pub(super) fn hyp_always(_: &Model, _: &Assignment) -> GeomResult<bool> {
    Ok(true)
}

pub(super) fn concl_proportion_flip(_: &Model, a: &Assignment) -> GeomResult<bool> {
    let [sa, sb, sc, sd] = ["A", "B", "C", "D"].map(|n| seg_named(a, n));
    let (sa, sb, sc, sd) = (sa?, sb?, sc?, sd?);
    let direct = proportion_holds(&sa, &sb, &sc, &sd)?;
    let swapped = proportion_holds(&sc, &sd, &sa, &sb)?;
    let flipped = proportion_holds(&sd, &sc, &sb, &sa)?;
    Ok(direct == swapped && swapped == flipped)
}

pub(super) fn gen_proportion_transitive(s: &mut Sampler, _: u64) -> Option<Assignment> {
    let (a, b, c, e) = (random_segment(s), random_segment(s), random_segment(s), random_segment(s));
    let d = fourth_segment(s, &a, &b, &c)?;
    let f = fourth_segment(s, &c, &d, &e)?;
    Some(with_segments(&["A", "B", "C", "D", "E", "F"], &[a, b, c, d, e, f]))
}

pub(super) fn hyp_proportion_transitive(_: &Model, a: &Assignment) -> GeomResult<bool> {
    let g = |n: &str| seg_named(a, n);
    Ok(proportion_holds(&g("A")?, &g("B")?, &g("C")?, &g("D")?)?
        && proportion_holds(&g("C")?, &g("D")?, &g("E")?, &g("F")?)?)
}

pub(super) fn concl_proportion_transitive(_: &Model, a: &Assignment) -> GeomResult<bool> {
    let g = |n: &str| seg_named(a, n);
    proportion_holds(&g("A")?, &g("B")?, &g("E")?, &g("F")?)
}

pub(super) fn gen_fourth_unique(s: &mut Sampler, _: u64) -> Option<Assignment> {
    let (a, b, c) = (random_segment(s), random_segment(s), random_segment(s));
    let delta = s.positive();
    let a = with_segments(&["A", "B", "C"], &[a, b, c]);
    Some(a.with("O", s.point()).with("W", s.direction()).with("delta", len_pt(&delta)))
}

pub(super) fn concl_fourth_unique(_: &Model, a: &Assignment) -> GeomResult<bool> {
    let g = |n: &str| seg_named(a, n);
    let (sa, sb, sc) = (g("A")?, g("B")?, g("C")?);
    let x = fourth_proportional(&sa, &sb, &sc)?;
    let again = fourth_proportional(&Segment::new(sa.q.clone(), sa.p.clone()), &sb, &sc)?;
    let o = a.p("O")?;
    let toward = &o + &a.p("W")?;
    let place = |len: ExactNumber| -> GeomResult<Segment> {
        let end = crate::plane::lay_off(&o, &toward, &Segment::of_length(len))?;
        Ok(Segment::new(o.clone(), end))
    };
    let off = &x * &(&ExactNumber::one() + &a.p("delta")?.x);
    Ok(x == again
        && proportion_holds(&sa, &sb, &sc, &place(x.clone())?)?
        && !proportion_holds(&sa, &sb, &sc, &place(off.abs())?)?)
}

/// Two similar right triangles `A1 B1 C1`, `A2 B2 C2` with right angles at `C`.
pub(super) fn gen_similar_right(s: &mut Sampler, _: u64) -> Option<Assignment> {
    let (r1, r2) = (s.positive(), s.positive());
    let k = s.length();
    let (c1, u) = (s.point(), s.direction());
    let (c2, w) = (s.point(), s.direction());
    let mirror: ExactNumber = if s.chance(1, 2) { 1.into() } else { (-1).into() };
    let a1 = &c1 + &u.scale(&r1);
    let b1 = &c1 + &u.perp().scale(&r2);
    let a2 = &c2 + &w.scale(&(&k * &r1));
    let b2 = &c2 + &w.perp().scale(&(&(&k * &r2) * &mirror));
    Some(Assignment::new().with_all(&["A1", "B1", "C1", "A2", "B2", "C2"], &[a1, b1, c1, a2, b2, c2]))
}

fn right_pair(a: &Assignment) -> GeomResult<bool> {
    Ok(right_angle(&a.p("A1")?, &a.p("C1")?, &a.p("B1")?)? && right_angle(&a.p("A2")?, &a.p("C2")?, &a.p("B2")?)?)
}

fn corresponding_angles(a: &Assignment) -> GeomResult<bool> {
    let p = |n: &str| a.p(n);
    Ok(angles_equal(&p("C1")?, &p("A1")?, &p("B1")?, &p("C2")?, &p("A2")?, &p("B2")?)?
        && angles_equal(&p("C1")?, &p("B1")?, &p("A1")?, &p("C2")?, &p("B2")?, &p("A2")?)?)
}

pub(super) fn hyp_proportional_legs(_: &Model, a: &Assignment) -> GeomResult<bool> {
    Ok(right_pair(a)?
        && proportion_holds(&a.seg("C1", "A1")?, &a.seg("C1", "B1")?, &a.seg("C2", "A2")?, &a.seg("C2", "B2")?)?)
}

pub(super) fn concl_proportional_legs(_: &Model, a: &Assignment) -> GeomResult<bool> {
    corresponding_angles(a)
}

pub(super) fn hyp_hypotenuse_leg(_: &Model, a: &Assignment) -> GeomResult<bool> {
    Ok(right_pair(a)?
        && proportion_holds(&a.seg("A1", "B1")?, &a.seg("C1", "A1")?, &a.seg("A2", "B2")?, &a.seg("C2", "A2")?)?)
}

pub(super) fn concl_hypotenuse_leg(_: &Model, a: &Assignment) -> GeomResult<bool> {
    Ok(corresponding_angles(a)?
        && proportion_holds(&a.seg("C1", "A1")?, &a.seg("C1", "B1")?, &a.seg("C2", "A2")?, &a.seg("C2", "B2")?)?)
}
