//! Proportion between segments, decided by construction.
//!
//! `PQ:RS = pq:rs` is tested the way it is defined: copies of `PQ` and `pq`
//! are laid off along one leg of a right angle at a fixed vertex, copies of
//! `RS` and `rs` along the other, and the proportion holds iff the two
//! hypotenuse lines are parallel (coincidence allowed). No cross-multiplied
//! shortcut is used here.

use crate::exact::ExactNumber;
use crate::plane::{
    angles_equal, between, collinear, concyclic, lay_off, line_intersection, on_ray, parallel,
    right_angle, GeomError, GeomResult, Point, Segment,
};

#[derive(Clone, Debug)]
pub struct ProportionQuery {
    pub pq: Segment,
    pub rs: Segment,
    pub pq_small: Segment,
    pub rs_small: Segment,
}

impl ProportionQuery {
    pub fn holds(&self) -> GeomResult<bool> {
        proportion_holds(&self.pq, &self.rs, &self.pq_small, &self.rs_small)
    }
}

fn x_ray() -> Point {
    Point::int(1, 0)
}

fn y_ray() -> Point {
    Point::int(0, 1)
}

/// The right-angle construction behind [`proportion_holds`], vertex at the origin.
#[derive(Clone, Debug)]
pub struct ProportionFigure {
    pub vertex: Point,
    /// Copies of `a` and `c` on the x-axis.
    pub big_b: Point,
    pub small_b: Point,
    /// Copies of `b` and `d` on the y-axis.
    pub big_c: Point,
    pub small_c: Point,
}

pub fn proportion_figure(a: &Segment, b: &Segment, c: &Segment, d: &Segment) -> GeomResult<ProportionFigure> {
    if [a, b, c, d].iter().any(|s| s.is_degenerate()) {
        return Err(GeomError::Degenerate("proportion of a zero-length segment"));
    }
    let vertex = Point::origin();
    Ok(ProportionFigure {
        big_b: lay_off(&vertex, &x_ray(), a)?,
        small_b: lay_off(&vertex, &x_ray(), c)?,
        big_c: lay_off(&vertex, &y_ray(), b)?,
        small_c: lay_off(&vertex, &y_ray(), d)?,
        vertex,
    })
}

/// `a:b = c:d`, i.e. `PQ:RS = pq:rs` with `(PQ, RS, pq, rs) = (a, b, c, d)`.
pub fn proportion_holds(a: &Segment, b: &Segment, c: &Segment, d: &Segment) -> GeomResult<bool> {
    let f = proportion_figure(a, b, c, d)?;
    Ok(parallel(&f.big_b, &f.big_c, &f.small_b, &f.small_c)?.holds())
}

/// The length `x` with `a:b = c:x`: parallel to the first hypotenuse through
/// the copy of `c`, intersected with the other leg.
pub fn fourth_proportional(a: &Segment, b: &Segment, c: &Segment) -> GeomResult<ExactNumber> {
    if [a, b, c].iter().any(|s| s.is_degenerate()) {
        return Err(GeomError::Degenerate("fourth proportional of a zero-length segment"));
    }
    let vertex = Point::origin();
    let big_b = lay_off(&vertex, &x_ray(), a)?;
    let big_c = lay_off(&vertex, &y_ray(), b)?;
    let small_b = lay_off(&vertex, &x_ray(), c)?;
    let direction = &big_c - &big_b;
    let far = &small_b + &direction;
    let x = line_intersection(&small_b, &far, &vertex, &y_ray())?;
    Ok(x.y)
}

/// Same as [`fourth_proportional`] with the three inputs given as lengths.
pub fn fourth_proportional_len(
    a: &ExactNumber,
    b: &ExactNumber,
    c: &ExactNumber,
) -> GeomResult<ExactNumber> {
    fourth_proportional(
        &Segment::of_length(a.clone()),
        &Segment::of_length(b.clone()),
        &Segment::of_length(c.clone()),
    )
}

/// Given `a:b = p:q`, reports whether `a:p = b:q`.
pub fn check_interchange(a: &Segment, b: &Segment, p: &Segment, q: &Segment) -> GeomResult<bool> {
    if !proportion_holds(a, b, p, q)? {
        return Err(GeomError::Precondition("a:b = p:q does not hold"));
    }
    proportion_holds(a, p, b, q)
}

/// `B, b` on one side of the angle at `A`, `C, c` on the other, `BC || bc`;
/// reports whether `AB:Ab = AC:Ac`.
pub fn check_fundamental(a: &Point, b: &Point, c: &Point, b2: &Point, c2: &Point) -> GeomResult<bool> {
    if collinear(a, b, c) {
        return Err(GeomError::Precondition("the angle at A is degenerate"));
    }
    if !on_ray(a, b, b2) || !on_ray(a, c, c2) {
        return Err(GeomError::Precondition("points are not on the rays of the angle"));
    }
    if !parallel(b, c, b2, c2)?.holds() {
        return Err(GeomError::Precondition("BC is not parallel to bc"));
    }
    let seg = |p: &Point| Segment::new(a.clone(), p.clone());
    proportion_holds(&seg(b), &seg(b2), &seg(c), &seg(c2))
}

/// Right-angle Pascal configuration: `A, B, C` on one line through `O`,
/// `A', B', C'` on the perpendicular through `O` on one side of it, with
/// `AB' || BA'` and `BC' || CB'`; reports whether `AC' || CA'`.
#[allow(clippy::too_many_arguments)]
pub fn pascal_kupffer_check(
    o: &Point,
    a: &Point,
    b: &Point,
    c: &Point,
    ap: &Point,
    bp: &Point,
    cp: &Point,
) -> GeomResult<bool> {
    let distinct = |x: &Point, y: &Point, z: &Point| x != y && y != z && x != z;
    if !distinct(a, b, c) || !distinct(ap, bp, cp) {
        return Err(GeomError::Precondition("points on each line must be distinct"));
    }
    if [a, b, c, ap, bp, cp].contains(&o) {
        return Err(GeomError::Precondition("points must differ from O"));
    }
    if !collinear(o, a, b) || !collinear(o, a, c) {
        return Err(GeomError::Precondition("A, B, C are not on a line through O"));
    }
    if !right_angle(a, o, ap)? || !on_ray(o, ap, bp) || !on_ray(o, ap, cp) {
        return Err(GeomError::Precondition("A', B', C' are not on one perpendicular ray"));
    }
    if !parallel(a, bp, b, ap)?.holds() || !parallel(b, cp, c, bp)?.holds() {
        return Err(GeomError::Precondition("hypothesis parallels do not hold"));
    }
    Ok(parallel(a, cp, c, ap)?.holds())
}

/// Convex `ABCD` whose diagonals meet at `O` with angle `OAB` equal to angle
/// `ODC`; reports whether the four vertices are concyclic.
pub fn cyclic_quad_check(a: &Point, b: &Point, c: &Point, d: &Point) -> GeomResult<bool> {
    let o = line_intersection(a, c, b, d)
        .map_err(|_| GeomError::Precondition("diagonals do not meet"))?;
    if !between(a, &o, c) || !between(b, &o, d) {
        return Err(GeomError::Precondition("quadrilateral is not convex"));
    }
    if !angles_equal(&o, a, b, &o, d, c)? {
        return Err(GeomError::Precondition("angles OAB and ODC differ"));
    }
    concyclic(a, b, c, d)
}
