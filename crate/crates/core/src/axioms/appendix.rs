//! Generators and checks for the sixteen equal-figures axioms.
//!
//! Recipes:
//!
//! * `congruentequal`: a random triangle and its image under a random
//!   isometry (Pythagorean or irrational rotation, optional reflection).
//! * `ETpermutation`, `ETsymmetric`, `ETtransitive`: a random triangle and
//!   equal-area companions from [`Sampler::equal_triangle`]; the EF
//!   counterparts do the same with [`Sampler::equal_quad`].
//! * `halvesofequals`: `D = B + C - A + t (C - B)` with `|t| < 1`, which keeps
//!   `ABDC` convex and `BCD` the same area as `ABC`; the second configuration
//!   is an unrelated triangle rescaled to the same area.
//! * `cutoff1`, `paste1`: triangle `ACE` with `B = C + l (A - C)` and
//!   `D = C + u (E - C)`; the copy has `l' u' = l u` with `l'` drawn from
//!   `(l u, 1)`.
//! * `cutoff2`, `paste2`: convex `ABDE` with `C` on `BD`; in the equal copy `c`
//!   is placed so that `cde` has the area of `CDE`, and `M`, `m` are the
//!   diagonal crossings.
//! * `paste3`: segment `AB` with `M` on it (forced to `A` or to `B` with
//!   probability 1/8 each), `C`, `D` on a line through `M`; heights in the
//!   copy are solved from the cross product with the chosen direction.
//! * `paste4`: convex `ABCD` split along `BD`; a convex `FKML` of the total
//!   area with `G` on `FL` and `H` on `KM` solved linearly so that `FKHG` has
//!   the area of `ABD`.
//! * `deZolt1`, `deZolt2`: points strictly inside segments.

use crate::exact::ExactNumber;
use crate::plane::{between, collinear, line_intersection, opposite_side, GeomResult, Point};

use super::gen::{signed_twice_area, twice_area, Sampler};
use super::{all, be, ef, et, Assignment, Model};

fn isometric(s: &mut Sampler, pts: &mut [Point]) {
    if s.chance(1, 4) {
        let iso = s.isometry();
        for p in pts.iter_mut() {
            *p = iso.apply(p);
        }
    }
}

pub(super) fn gen_congruent(s: &mut Sampler, _: u64) -> Option<Assignment> {
    let t = s.triangle();
    let image = s.isometry().apply_all(&t);
    Some(Assignment::new().with_all(&["A", "B", "C"], &t).with_all(&["a", "b", "c"], &image))
}

pub(super) fn hyp_congruent(_: &Model, a: &Assignment) -> GeomResult<bool> {
    crate::plane::triangle_congruent(&a.p("A")?, &a.p("B")?, &a.p("C")?, &a.p("a")?, &a.p("b")?, &a.p("c")?)
}

pub(super) fn concl_congruent(m: &Model, a: &Assignment) -> GeomResult<bool> {
    et(m, a, ["A", "B", "C"], ["a", "b", "c"])
}

pub(super) fn gen_equal_triangles(s: &mut Sampler, _: u64) -> Option<Assignment> {
    let t = s.triangle();
    let u = s.equal_triangle(&t);
    let w = s.equal_triangle(&u);
    Some(
        Assignment::new()
            .with_all(&["A", "B", "C"], &t)
            .with_all(&["a", "b", "c"], &u)
            .with_all(&["P", "Q", "R"], &w),
    )
}

pub(super) fn hyp_et_pair(m: &Model, a: &Assignment) -> GeomResult<bool> {
    et(m, a, ["A", "B", "C"], ["a", "b", "c"])
}

pub(super) fn concl_et_permutation(m: &Model, a: &Assignment) -> GeomResult<bool> {
    let lhs = ["A", "B", "C"];
    all([
        et(m, a, lhs, ["b", "c", "a"]),
        et(m, a, lhs, ["a", "c", "b"]),
        et(m, a, lhs, ["b", "a", "c"]),
        et(m, a, lhs, ["c", "b", "a"]),
        et(m, a, lhs, ["c", "a", "b"]),
    ])
}

pub(super) fn concl_et_symmetric(m: &Model, a: &Assignment) -> GeomResult<bool> {
    et(m, a, ["a", "b", "c"], ["A", "B", "C"])
}

pub(super) fn hyp_et_chain(m: &Model, a: &Assignment) -> GeomResult<bool> {
    all([
        et(m, a, ["A", "B", "C"], ["a", "b", "c"]),
        et(m, a, ["a", "b", "c"], ["P", "Q", "R"]),
    ])
}

pub(super) fn concl_et_transitive(m: &Model, a: &Assignment) -> GeomResult<bool> {
    et(m, a, ["A", "B", "C"], ["P", "Q", "R"])
}

pub(super) fn gen_equal_quads(s: &mut Sampler, _: u64) -> Option<Assignment> {
    let v = s.quad();
    let w = s.equal_quad(&v);
    let x = s.equal_quad(&w);
    Some(
        Assignment::new()
            .with_all(&["A", "B", "C", "D"], &v)
            .with_all(&["a", "b", "c", "d"], &w)
            .with_all(&["P", "Q", "R", "S"], &x),
    )
}

pub(super) fn hyp_ef_pair(_: &Model, a: &Assignment) -> GeomResult<bool> {
    ef(a, ["A", "B", "C", "D"], ["a", "b", "c", "d"])
}

pub(super) fn concl_ef_permutation(_: &Model, a: &Assignment) -> GeomResult<bool> {
    let lhs = ["A", "B", "C", "D"];
    let perms = [
        ["b", "c", "d", "a"],
        ["d", "c", "b", "a"],
        ["c", "d", "a", "b"],
        ["b", "a", "d", "c"],
        ["d", "a", "b", "c"],
        ["c", "b", "a", "d"],
        ["a", "d", "c", "b"],
    ];
    all(perms.map(|p| ef(a, lhs, p)))
}

pub(super) fn concl_ef_symmetric(_: &Model, a: &Assignment) -> GeomResult<bool> {
    ef(a, ["a", "b", "c", "d"], ["A", "B", "C", "D"])
}

pub(super) fn hyp_ef_chain(_: &Model, a: &Assignment) -> GeomResult<bool> {
    all([
        ef(a, ["A", "B", "C", "D"], ["a", "b", "c", "d"]),
        ef(a, ["a", "b", "c", "d"], ["P", "Q", "R", "S"]),
    ])
}

pub(super) fn concl_ef_transitive(_: &Model, a: &Assignment) -> GeomResult<bool> {
    ef(a, ["A", "B", "C", "D"], ["P", "Q", "R", "S"])
}

/// `D` across `BC` from `A` with `BCD` of the same area.
fn across(s: &mut Sampler, a: &Point, b: &Point, c: &Point) -> Point {
    let t = &(&s.unit_ratio() * &2.into()) - &1.into();
    &(&(b + c) - a) + &(c - b).scale(&t)
}

pub(super) fn gen_halves_of_equals(s: &mut Sampler, _: u64) -> Option<Assignment> {
    let mut big = s.triangle().to_vec();
    big.push(across(s, &big[0], &big[1], &big[2]));
    let fresh = s.triangle();
    let t = s.rescaled(&fresh, &twice_area(&big[..3]));
    let mut small = t.to_vec();
    small.push(across(s, &t[0], &t[1], &t[2]));
    isometric(s, &mut small);
    Some(
        Assignment::new()
            .with_all(&["A", "B", "C", "D"], &big)
            .with_all(&["a", "b", "c", "d"], &small),
    )
}

pub(super) fn hyp_halves_of_equals(m: &Model, a: &Assignment) -> GeomResult<bool> {
    let os = |x: &str, y: &str, z: &str, w: &str| -> GeomResult<bool> {
        opposite_side(&a.p(x)?, &a.p(w)?, &a.p(y)?, &a.p(z)?)
    };
    all([
        et(m, a, ["A", "B", "C"], ["B", "C", "D"]),
        os("A", "B", "C", "D"),
        et(m, a, ["a", "b", "c"], ["b", "c", "d"]),
        os("a", "b", "c", "d"),
        ef(a, ["A", "B", "D", "C"], ["a", "b", "d", "c"]),
    ])
}

pub(super) fn concl_halves_of_equals(m: &Model, a: &Assignment) -> GeomResult<bool> {
    et(m, a, ["A", "B", "C"], ["a", "b", "c"])
}

/// Triangle `ACE` with `B` on `CA` and `D` on `CE`, and an equal copy.
pub(super) fn gen_cut_triangle(s: &mut Sampler, _: u64) -> Option<Assignment> {
    let [big_a, big_c, big_e] = s.triangle();
    let (l, u) = (s.unit_ratio(), s.unit_ratio());
    let big_b = Point::lerp(&big_c, &big_a, &l);
    let big_d = Point::lerp(&big_c, &big_e, &u);
    let [a, c, e] = s.equal_triangle(&[big_a.clone(), big_c.clone(), big_e.clone()]);
    let lu = &l * &u;
    let l2 = &lu + &(&(&ExactNumber::one() - &lu) * &s.unit_ratio());
    let u2 = lu.checked_div(&l2).ok()?;
    let b = Point::lerp(&c, &a, &l2);
    let d = Point::lerp(&c, &e, &u2);
    Some(
        Assignment::new()
            .with_all(&["A", "B", "C", "D", "E"], &[big_a, big_b, big_c, big_d, big_e])
            .with_all(&["a", "b", "c", "d", "e"], &[a, b, c, d, e]),
    )
}

fn cut_betweens(a: &Assignment) -> [GeomResult<bool>; 4] {
    [
        be(a, "A", "B", "C"),
        be(a, "a", "b", "c"),
        be(a, "E", "D", "C"),
        be(a, "e", "d", "c"),
    ]
}

pub(super) fn hyp_cutoff1(m: &Model, a: &Assignment) -> GeomResult<bool> {
    all(cut_betweens(a).into_iter().chain([
        et(m, a, ["B", "C", "D"], ["b", "c", "d"]),
        et(m, a, ["A", "C", "E"], ["a", "c", "e"]),
    ]))
}

pub(super) fn concl_cutoff1(_: &Model, a: &Assignment) -> GeomResult<bool> {
    ef(a, ["A", "B", "D", "E"], ["a", "b", "d", "e"])
}

pub(super) fn hyp_paste1(m: &Model, a: &Assignment) -> GeomResult<bool> {
    all(cut_betweens(a).into_iter().chain([
        et(m, a, ["B", "C", "D"], ["b", "c", "d"]),
        ef(a, ["A", "B", "D", "E"], ["a", "b", "d", "e"]),
    ]))
}

pub(super) fn concl_paste1(m: &Model, a: &Assignment) -> GeomResult<bool> {
    et(m, a, ["A", "C", "E"], ["a", "c", "e"])
}

/// Convex `ABDE` with `C` on `BD`, an equal convex `abde` with `c` placed so
/// that `cde` matches `CDE`, and the diagonal crossings `M`, `m`.
pub(super) fn gen_cut_quad(s: &mut Sampler, _: u64) -> Option<Assignment> {
    let big = s.convex_quad();
    let [big_a, big_b, big_d, big_e] = big.clone();
    let big_c = Point::lerp(&big_b, &big_d, &s.unit_ratio());
    let small = if s.chance(1, 2) {
        s.area_map().apply_all(&big)
    } else {
        let fresh = s.convex_quad();
        s.rescaled(&fresh, &twice_area(&big))
    };
    let [a, b, d, e] = small;
    let cde = twice_area(&[big_c.clone(), big_d.clone(), big_e.clone()]);
    let t = &ExactNumber::one() - &cde.checked_div(&twice_area(&[b.clone(), d.clone(), e.clone()])).ok()?;
    if !t.is_positive() || t >= ExactNumber::one() {
        return None;
    }
    let c = Point::lerp(&b, &d, &t);
    let big_m = line_intersection(&big_a, &big_d, &big_b, &big_e).ok()?;
    let m = line_intersection(&a, &d, &b, &e).ok()?;
    Some(
        Assignment::new()
            .with_all(&["A", "B", "C", "D", "E", "M"], &[big_a, big_b, big_c, big_d, big_e, big_m])
            .with_all(&["a", "b", "c", "d", "e", "m"], &[a, b, c, d, e, m]),
    )
}

pub(super) fn hyp_cutoff2(m: &Model, a: &Assignment) -> GeomResult<bool> {
    all([
        be(a, "B", "C", "D"),
        be(a, "b", "c", "d"),
        et(m, a, ["C", "D", "E"], ["c", "d", "e"]),
        ef(a, ["A", "B", "D", "E"], ["a", "b", "d", "e"]),
    ])
}

pub(super) fn concl_cutoff2(_: &Model, a: &Assignment) -> GeomResult<bool> {
    ef(a, ["A", "B", "C", "E"], ["a", "b", "c", "e"])
}

pub(super) fn hyp_paste2(m: &Model, a: &Assignment) -> GeomResult<bool> {
    all([
        be(a, "B", "C", "D"),
        be(a, "b", "c", "d"),
        et(m, a, ["C", "D", "E"], ["c", "d", "e"]),
        ef(a, ["A", "B", "C", "E"], ["a", "b", "c", "e"]),
        be(a, "A", "M", "D"),
        be(a, "B", "M", "E"),
        be(a, "a", "m", "d"),
        be(a, "b", "m", "e"),
    ])
}

pub(super) fn concl_paste2(_: &Model, a: &Assignment) -> GeomResult<bool> {
    ef(a, ["A", "B", "D", "E"], ["a", "b", "d", "e"])
}

/// `M` on segment `AB`, at an endpoint with probability 1/8 each.
fn point_on_base(s: &mut Sampler, a: &Point, b: &Point) -> Point {
    match s.int(0, 7) {
        0 => a.clone(),
        1 => b.clone(),
        _ => Point::lerp(a, b, &s.unit_ratio()),
    }
}

fn direction_off(s: &mut Sampler, base: &Point) -> Point {
    loop {
        let w = s.direction();
        if !crate::plane::cross(base, &w).is_zero() {
            return w;
        }
    }
}

pub(super) fn gen_paste3(s: &mut Sampler, _: u64) -> Option<Assignment> {
    let [big_a, big_b, _] = s.triangle();
    let big_m = point_on_base(s, &big_a, &big_b);
    let v = direction_off(s, &(&big_b - &big_a));
    let big_c = &big_m + &v.scale(&s.positive());
    let big_d = &big_m - &v.scale(&s.positive());
    let abc = twice_area(&[big_a.clone(), big_b.clone(), big_c.clone()]);
    let abd = twice_area(&[big_a.clone(), big_b.clone(), big_d.clone()]);

    let [a, b, _] = s.triangle();
    let m = point_on_base(s, &a, &b);
    let w = direction_off(s, &(&b - &a));
    let k = crate::plane::cross(&(&b - &a), &w).abs();
    let c = &m + &w.scale(&abc.checked_div(&k).ok()?);
    let d = &m - &w.scale(&abd.checked_div(&k).ok()?);
    let mut small = [a, b, c, d, m];
    isometric(s, &mut small);
    Some(
        Assignment::new()
            .with_all(&["A", "B", "C", "D", "M"], &[big_a, big_b, big_c, big_d, big_m])
            .with_all(&["a", "b", "c", "d", "m"], &small),
    )
}

/// `BE(x, y, z) \/ EQ(x, y) \/ EQ(y, z)`.
fn weak_between(a: &Assignment, x: &str, y: &str, z: &str) -> GeomResult<bool> {
    let (px, py, pz) = (a.p(x)?, a.p(y)?, a.p(z)?);
    Ok(between(&px, &py, &pz) || px == py || py == pz)
}

pub(super) fn hyp_paste3(m: &Model, a: &Assignment) -> GeomResult<bool> {
    all([
        et(m, a, ["A", "B", "C"], ["a", "b", "c"]),
        et(m, a, ["A", "B", "D"], ["a", "b", "d"]),
        be(a, "C", "M", "D"),
        weak_between(a, "A", "M", "B"),
        be(a, "c", "m", "d"),
        weak_between(a, "a", "m", "b"),
    ])
}

pub(super) fn concl_paste3(_: &Model, a: &Assignment) -> GeomResult<bool> {
    ef(a, ["A", "C", "B", "D"], ["a", "c", "b", "d"])
}

pub(super) fn gen_paste4(s: &mut Sampler, _: u64) -> Option<Assignment> {
    let [a, b, c, d] = s.convex_quad();
    let p = line_intersection(&a, &c, &b, &d).ok()?;
    let m = Point::lerp(&b, &d, &s.unit_ratio());
    let e = Point::lerp(&b, &c, &s.unit_ratio());
    let t1 = twice_area(&[a.clone(), b.clone(), d.clone()]);
    let t2 = twice_area(&[b.clone(), c.clone(), d.clone()]);

    let fresh = s.convex_quad();
    let [f, k, big_m, l] = s.rescaled(&fresh, &(&t1 + &t2));
    let j = line_intersection(&f, &big_m, &k, &l).ok()?;
    let g = Point::lerp(&f, &l, &s.unit_ratio());
    // signed area of FKHG is affine in the position of H along KM
    let sigma = ExactNumber::from(signed_twice_area(&[f.clone(), k.clone(), big_m.clone(), l.clone()]).sign() as i64);
    let at = |h: &Point| signed_twice_area(&[f.clone(), k.clone(), h.clone(), g.clone()]);
    let (s0, s1) = (at(&k), at(&big_m));
    let eta = (&(&sigma * &t1) - &s0).checked_div(&(&s1 - &s0)).ok()?;
    if !eta.is_positive() || eta >= ExactNumber::one() {
        return None;
    }
    let h = Point::lerp(&k, &big_m, &eta);
    let mut right = [f, g, h, j, k, l, big_m];
    isometric(s, &mut right);
    Some(
        Assignment::new()
            .with_all(&["A", "B", "C", "D", "P", "m", "e"], &[a, b, c, d, p, m, e])
            .with_all(&["F", "G", "H", "J", "K", "L", "M"], &right),
    )
}

pub(super) fn hyp_paste4(_: &Model, a: &Assignment) -> GeomResult<bool> {
    all([
        ef(a, ["A", "B", "m", "D"], ["F", "K", "H", "G"]),
        ef(a, ["D", "B", "e", "C"], ["G", "H", "M", "L"]),
        be(a, "A", "P", "C"),
        be(a, "B", "P", "D"),
        be(a, "K", "H", "M"),
        be(a, "F", "G", "L"),
        be(a, "B", "m", "D"),
        be(a, "B", "e", "C"),
        be(a, "F", "J", "M"),
        be(a, "K", "J", "L"),
    ])
}

pub(super) fn concl_paste4(_: &Model, a: &Assignment) -> GeomResult<bool> {
    ef(a, ["A", "B", "C", "D"], ["F", "K", "M", "L"])
}

pub(super) fn gen_dezolt1(s: &mut Sampler, _: u64) -> Option<Assignment> {
    let [b, d, c] = s.triangle();
    let e = Point::lerp(&b, &d, &s.unit_ratio());
    let mut pts = [b, c, d, e];
    isometric(s, &mut pts);
    Some(Assignment::new().with_all(&["B", "C", "D", "E"], &pts))
}

pub(super) fn hyp_dezolt1(_: &Model, a: &Assignment) -> GeomResult<bool> {
    Ok(be(a, "B", "E", "D")? && !collinear(&a.p("B")?, &a.p("D")?, &a.p("C")?))
}

pub(super) fn concl_dezolt1(m: &Model, a: &Assignment) -> GeomResult<bool> {
    Ok(!et(m, a, ["D", "B", "C"], ["E", "B", "C"])?)
}

pub(super) fn gen_dezolt2(s: &mut Sampler, _: u64) -> Option<Assignment> {
    let [a, b, c] = s.triangle();
    let e = Point::lerp(&b, &a, &s.unit_ratio());
    let f = Point::lerp(&b, &c, &s.unit_ratio());
    let mut pts = [a, b, c, e, f];
    isometric(s, &mut pts);
    Some(Assignment::new().with_all(&["A", "B", "C", "E", "F"], &pts))
}

pub(super) fn hyp_dezolt2(_: &Model, a: &Assignment) -> GeomResult<bool> {
    Ok(!collinear(&a.p("A")?, &a.p("B")?, &a.p("C")?) && be(a, "B", "E", "A")? && be(a, "B", "F", "C")?)
}

pub(super) fn concl_dezolt2(m: &Model, a: &Assignment) -> GeomResult<bool> {
    Ok(!et(m, a, ["A", "B", "C"], ["E", "B", "F"])?)
}
