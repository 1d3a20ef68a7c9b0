//! Points, segments and the Book I predicates and constructions over them.
//!
//! A line is always an ordered pair of distinct points. Degenerate input
//! (coincident points where a line is needed, collinear triples where a
//! triangle is needed) is reported as [`GeomError::Degenerate`] rather than
//! silently answering `false`.

use std::fmt;
use std::ops::{Add, Sub};

use thiserror::Error;

use crate::exact::{ExactError, ExactNumber};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeomError {
    #[error("degenerate input: {0}")]
    Degenerate(&'static str),
    #[error("precondition violated: {0}")]
    Precondition(&'static str),
    #[error("invalid quadrilateral")]
    InvalidQuadrilateral,
    #[error("unit mismatch in area sum")]
    UnitMismatch,
    #[error(transparent)]
    Exact(#[from] ExactError),
}

pub type GeomResult<T> = Result<T, GeomError>;

#[derive(Clone, PartialEq)]
pub struct Point {
    pub x: ExactNumber,
    pub y: ExactNumber,
}

impl Point {
    pub fn new(x: ExactNumber, y: ExactNumber) -> Self {
        Point { x, y }
    }

    pub fn int(x: i64, y: i64) -> Self {
        Point::new(x.into(), y.into())
    }

    pub fn origin() -> Self {
        Point::int(0, 0)
    }

    pub fn scale(&self, k: &ExactNumber) -> Point {
        Point::new(&self.x * k, &self.y * k)
    }

    /// `a + t (b - a)`.
    pub fn lerp(a: &Point, b: &Point, t: &ExactNumber) -> Point {
        a + &(b - a).scale(t)
    }

    pub fn midpoint(a: &Point, b: &Point) -> Point {
        let half = ExactNumber::from_ratio(1, 2).expect("nonzero denominator");
        Point::lerp(a, b, &half)
    }

    /// The vector rotated a quarter turn counterclockwise.
    pub fn perp(&self) -> Point {
        Point::new(-&self.y, self.x.clone())
    }

    pub fn norm_sq(&self) -> ExactNumber {
        dot(self, self)
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl Add for &Point {
    type Output = Point;
    fn add(self, o: &Point) -> Point {
        Point::new(&self.x + &o.x, &self.y + &o.y)
    }
}

impl Sub for &Point {
    type Output = Point;
    fn sub(self, o: &Point) -> Point {
        Point::new(&self.x - &o.x, &self.y - &o.y)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Segment {
    pub p: Point,
    pub q: Point,
}

impl Segment {
    pub fn new(p: Point, q: Point) -> Self {
        Segment { p, q }
    }

    /// Segment from the origin along the x-axis, for building segments of a given length.
    pub fn of_length(len: ExactNumber) -> Self {
        Segment::new(Point::origin(), Point::new(len, 0.into()))
    }

    pub fn length_sq(&self) -> ExactNumber {
        dist_sq(&self.p, &self.q)
    }

    pub fn length(&self) -> ExactNumber {
        self.length_sq().sqrt().expect("squared length is nonnegative")
    }

    pub fn is_degenerate(&self) -> bool {
        self.p == self.q
    }
}

pub fn dot(u: &Point, v: &Point) -> ExactNumber {
    &u.x * &v.x + &u.y * &v.y
}

pub fn cross(u: &Point, v: &Point) -> ExactNumber {
    &u.x * &v.y - &u.y * &v.x
}

/// `(b - a) x (c - a)`: twice the signed area of `abc`.
pub fn orient(a: &Point, b: &Point, c: &Point) -> ExactNumber {
    cross(&(b - a), &(c - a))
}

pub fn dist_sq(a: &Point, b: &Point) -> ExactNumber {
    (b - a).norm_sq()
}

pub fn collinear(a: &Point, b: &Point, c: &Point) -> bool {
    orient(a, b, c).is_zero()
}

/// Strict betweenness: `b` lies in the open segment `ac`.
pub fn between(a: &Point, b: &Point, c: &Point) -> bool {
    if a == c || a == b || b == c || !collinear(a, b, c) {
        return false;
    }
    let ab = b - a;
    let ac = c - a;
    let t = dot(&ab, &ac);
    t.is_positive() && t < ac.norm_sq()
}

/// `p` and `q` both on the open ray from `vertex` through `p`.
pub fn on_ray(vertex: &Point, p: &Point, q: &Point) -> bool {
    p != vertex && q != vertex && collinear(vertex, p, q) && dot(&(p - vertex), &(q - vertex)).is_positive()
}

pub fn congruent(a: &Point, b: &Point, c: &Point, d: &Point) -> bool {
    dist_sq(a, b) == dist_sq(c, d)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parallelism {
    Strict,
    Coincident,
    Neither,
}

impl Parallelism {
    /// Parallel in the sense that admits coincident lines.
    pub fn holds(self) -> bool {
        self != Parallelism::Neither
    }
}

pub fn parallel(a: &Point, b: &Point, c: &Point, d: &Point) -> GeomResult<Parallelism> {
    if a == b || c == d {
        return Err(GeomError::Degenerate("parallel needs two proper lines"));
    }
    if !cross(&(b - a), &(d - c)).is_zero() {
        return Ok(Parallelism::Neither);
    }
    Ok(if collinear(a, b, c) {
        Parallelism::Coincident
    } else {
        Parallelism::Strict
    })
}

/// Whether the angle at `b` is right.
pub fn right_angle(a: &Point, b: &Point, c: &Point) -> GeomResult<bool> {
    if a == b || c == b {
        return Err(GeomError::Degenerate("right angle needs two proper rays"));
    }
    Ok(dot(&(a - b), &(c - b)).is_zero())
}

/// Whether angle `abc` equals angle `def` (unsigned, in `[0, pi]`).
///
/// Compares cosines exactly: signs of the dot products must agree and
/// `dot1^2 |v2|^2 |w2|^2 = dot2^2 |v1|^2 |w1|^2`.
pub fn angles_equal(
    a: &Point,
    b: &Point,
    c: &Point,
    d: &Point,
    e: &Point,
    f: &Point,
) -> GeomResult<bool> {
    if a == b || c == b || d == e || f == e {
        return Err(GeomError::Degenerate("angle needs two proper rays"));
    }
    let (v1, w1, v2, w2) = (a - b, c - b, d - e, f - e);
    let (d1, d2) = (dot(&v1, &w1), dot(&v2, &w2));
    if d1.sign() != d2.sign() {
        return Ok(false);
    }
    let lhs = d1.square() * v2.norm_sq() * w2.norm_sq();
    let rhs = d2.square() * v1.norm_sq() * w1.norm_sq();
    Ok(lhs == rhs)
}

fn side_of(p: &Point, a: &Point, b: &Point) -> GeomResult<i8> {
    if a == b {
        return Err(GeomError::Degenerate("side test needs a proper line"));
    }
    match orient(a, b, p).sign() {
        0 => Err(GeomError::Degenerate("point lies on the line")),
        s => Ok(s),
    }
}

pub fn same_side(p: &Point, q: &Point, a: &Point, b: &Point) -> GeomResult<bool> {
    Ok(side_of(p, a, b)? == side_of(q, a, b)?)
}

pub fn opposite_side(p: &Point, q: &Point, a: &Point, b: &Point) -> GeomResult<bool> {
    Ok(!same_side(p, q, a, b)?)
}

/// Side-side-side congruence of `abc` and `def` with the given vertex correspondence.
pub fn triangle_congruent(
    a: &Point,
    b: &Point,
    c: &Point,
    d: &Point,
    e: &Point,
    f: &Point,
) -> GeomResult<bool> {
    if collinear(a, b, c) || collinear(d, e, f) {
        return Err(GeomError::Degenerate("triangle congruence needs genuine triangles"));
    }
    Ok(congruent(a, b, d, e) && congruent(b, c, e, f) && congruent(c, a, f, d))
}

pub fn foot_of_perpendicular(p: &Point, a: &Point, b: &Point) -> GeomResult<Point> {
    if a == b {
        return Err(GeomError::Degenerate("projection needs a proper line"));
    }
    let d = b - a;
    let t = dot(&(p - a), &d).checked_div(&d.norm_sq())?;
    Ok(a + &d.scale(&t))
}

pub fn line_intersection(a: &Point, b: &Point, c: &Point, d: &Point) -> GeomResult<Point> {
    if a == b || c == d {
        return Err(GeomError::Degenerate("intersection needs two proper lines"));
    }
    let (d1, d2) = (b - a, d - c);
    let denom = cross(&d1, &d2);
    if denom.is_zero() {
        return Err(GeomError::Degenerate("lines are parallel"));
    }
    let t = cross(&(c - a), &d2).checked_div(&denom)?;
    Ok(a + &d1.scale(&t))
}

/// The point `x` on ray `origin -> toward` with `|origin x| = |length_of|`.
pub fn lay_off(origin: &Point, toward: &Point, length_of: &Segment) -> GeomResult<Point> {
    if origin == toward || length_of.is_degenerate() {
        return Err(GeomError::Degenerate("lay-off needs a proper ray and length"));
    }
    let d = toward - origin;
    let k = length_of.length_sq().checked_div(&d.norm_sq())?.sqrt()?;
    Ok(origin + &d.scale(&k))
}

/// Intersection of the altitudes from `a` and from `b`.
pub fn orthocenter(a: &Point, b: &Point, c: &Point) -> GeomResult<Point> {
    if collinear(a, b, c) {
        return Err(GeomError::Degenerate("orthocenter needs a genuine triangle"));
    }
    let from_a = a + &(c - b).perp();
    let from_b = b + &(c - a).perp();
    line_intersection(a, &from_a, b, &from_b)
}

/// Circle through three noncollinear points, as `(center, squared radius)`.
pub fn circumcircle(a: &Point, b: &Point, c: &Point) -> GeomResult<(Point, ExactNumber)> {
    if collinear(a, b, c) {
        return Err(GeomError::Degenerate("circumcircle needs a genuine triangle"));
    }
    let (u, v) = (b - a, c - a);
    let (uu, vv) = (u.norm_sq(), v.norm_sq());
    let det = ExactNumber::from(2) * cross(&u, &v);
    let ox = (&v.y * &uu - &u.y * &vv).checked_div(&det)?;
    let oy = (&u.x * &vv - &v.x * &uu).checked_div(&det)?;
    let offset = Point::new(ox, oy);
    let r2 = offset.norm_sq();
    Ok((a + &offset, r2))
}

pub fn concyclic(a: &Point, b: &Point, c: &Point, d: &Point) -> GeomResult<bool> {
    let (center, r2) = circumcircle(a, b, c)?;
    Ok(dist_sq(&center, d) == r2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64, y: i64) -> Point {
        Point::int(x, y)
    }

    fn q(n: i64, d: i64) -> ExactNumber {
        ExactNumber::from_ratio(n, d).unwrap()
    }

    #[test]
    fn collinearity() {
        assert!(collinear(&p(0, 0), &p(1, 1), &p(3, 3)));
        assert!(!collinear(&p(0, 0), &p(1, 0), &p(0, 1)));
        assert!(collinear(&p(0, 0), &p(0, 0), &p(5, 7)));
    }

    #[test]
    fn strict_betweenness() {
        assert!(between(&p(0, 0), &p(1, 0), &p(2, 0)));
        assert!(!between(&p(0, 0), &p(2, 0), &p(1, 0)));
        assert!(between(&p(0, 0), &p(1, 1), &p(3, 3)));
        assert!(!between(&p(0, 0), &p(0, 0), &p(3, 3)));
    }

    #[test]
    fn segment_congruence() {
        assert!(congruent(&p(0, 0), &p(3, 4), &p(1, 1), &p(1, 6)));
        assert!(congruent(&p(0, 0), &p(1, 0), &p(0, 0), &p(0, 1)));
        assert!(!congruent(&p(0, 0), &p(1, 0), &p(0, 0), &p(2, 0)));
    }

    #[test]
    fn parallel_kinds() {
        assert_eq!(parallel(&p(0, 0), &p(1, 0), &p(0, 1), &p(1, 1)).unwrap(), Parallelism::Strict);
        assert_eq!(parallel(&p(0, 0), &p(1, 0), &p(2, 0), &p(3, 0)).unwrap(), Parallelism::Coincident);
        assert_eq!(parallel(&p(0, 0), &p(1, 0), &p(0, 0), &p(1, 1)).unwrap(), Parallelism::Neither);
        assert!(parallel(&p(0, 0), &p(0, 0), &p(0, 0), &p(1, 1)).is_err());
    }

    #[test]
    fn right_angles() {
        assert!(right_angle(&p(1, 0), &p(0, 0), &p(0, 1)).unwrap());
        assert!(!right_angle(&p(1, 0), &p(0, 0), &p(1, 1)).unwrap());
        assert!(right_angle(&p(3, 4), &p(0, 0), &p(-4, 3)).unwrap());
        assert!(right_angle(&p(0, 0), &p(0, 0), &p(1, 1)).is_err());
    }

    #[test]
    fn sides() {
        let (a, b) = (p(0, 0), p(1, 0));
        assert!(same_side(&p(0, 1), &p(1, 1), &a, &b).unwrap());
        assert!(!same_side(&p(0, 1), &p(0, -1), &a, &b).unwrap());
        assert!(opposite_side(&p(2, 5), &p(3, -7), &a, &b).unwrap());
        assert!(same_side(&p(5, 0), &p(1, 1), &a, &b).is_err());
    }

    #[test]
    fn sss_congruence() {
        let (a, b, c) = (p(0, 0), p(1, 0), p(0, 1));
        assert!(triangle_congruent(&a, &b, &c, &p(5, 5), &p(6, 5), &p(5, 6)).unwrap());
        assert!(triangle_congruent(&a, &b, &c, &p(0, 0), &p(0, 1), &p(1, 0)).unwrap());
        assert!(!triangle_congruent(&a, &b, &c, &p(0, 0), &p(2, 0), &p(0, 2)).unwrap());
    }

    #[test]
    fn feet() {
        assert_eq!(foot_of_perpendicular(&p(1, 3), &p(0, 0), &p(4, 0)).unwrap(), p(1, 0));
        assert_eq!(foot_of_perpendicular(&p(2, 0), &p(0, 0), &p(4, 0)).unwrap(), p(2, 0));
        // ((P.d)/(d.d)) d with P = (0,2), d = (1,1): (2/2)(1,1)
        assert_eq!(foot_of_perpendicular(&p(0, 2), &p(0, 0), &p(1, 1)).unwrap(), p(1, 1));
    }

    #[test]
    fn intersections() {
        assert_eq!(line_intersection(&p(0, 0), &p(2, 2), &p(0, 2), &p(2, 0)).unwrap(), p(1, 1));
        assert_eq!(line_intersection(&p(0, 0), &p(1, 0), &p(5, -1), &p(5, 1)).unwrap(), p(5, 0));
        // y = x/2 and y = 3 - x/2 meet at x = 3
        assert_eq!(
            line_intersection(&p(0, 0), &p(4, 2), &p(0, 3), &p(6, 0)).unwrap(),
            Point::new(3.into(), q(3, 2))
        );
        assert!(line_intersection(&p(0, 0), &p(1, 0), &p(0, 1), &p(1, 1)).is_err());
    }

    #[test]
    fn laying_off() {
        let five = Segment::new(p(0, 0), p(0, 5));
        assert_eq!(lay_off(&p(0, 0), &p(1, 0), &five).unwrap(), p(5, 0));
        assert_eq!(lay_off(&p(0, 0), &p(3, 4), &five).unwrap(), p(3, 4));
        let unit = Segment::new(p(0, 0), p(1, 0));
        let x = lay_off(&p(0, 0), &p(1, 1), &unit).unwrap();
        assert!(congruent(&p(0, 0), &x, &unit.p, &unit.q));
        assert_eq!(x.x.square(), q(1, 2));
        assert_eq!(x.x, x.y);
    }

    #[test]
    fn orthocenters() {
        assert_eq!(orthocenter(&p(0, 0), &p(4, 0), &p(1, 3)).unwrap(), p(1, 1));
        assert_eq!(orthocenter(&p(0, 0), &p(1, 0), &p(0, 1)).unwrap(), p(0, 0));
        assert_eq!(
            orthocenter(&p(-1, 0), &p(1, 0), &p(0, 2)).unwrap(),
            Point::new(0.into(), q(1, 2))
        );
        assert!(orthocenter(&p(0, 0), &p(1, 1), &p(2, 2)).is_err());
    }

    #[test]
    fn circles() {
        let (c, r2) = circumcircle(&p(0, 0), &p(4, 0), &p(0, 2)).unwrap();
        assert_eq!(c, p(2, 1));
        assert_eq!(r2, ExactNumber::from(5));
        let (c, r2) = circumcircle(&p(0, 0), &p(2, 0), &p(1, 1)).unwrap();
        assert_eq!(c, p(1, 0));
        assert_eq!(r2, ExactNumber::one());
        let apex = Point::new(q(1, 2), 5.into());
        let (c, _) = circumcircle(&p(0, 0), &p(1, 0), &apex).unwrap();
        assert_eq!(c.x, q(1, 2));
        assert_eq!(dist_sq(&c, &p(0, 0)), dist_sq(&c, &apex));

        assert!(concyclic(&p(0, 0), &p(1, 0), &p(1, 1), &p(0, 1)).unwrap());
        assert!(concyclic(&p(0, 0), &p(4, 0), &p(0, 2), &p(4, 2)).unwrap());
        assert!(!concyclic(&p(0, 0), &p(1, 0), &p(0, 1), &p(5, 5)).unwrap());
    }

    #[test]
    fn angle_equality() {
        // 45 degrees two ways, and its supplement
        assert!(angles_equal(&p(1, 0), &p(0, 0), &p(1, 1), &p(0, 3), &p(0, 0), &p(3, 3)).unwrap());
        assert!(!angles_equal(&p(1, 0), &p(0, 0), &p(1, 1), &p(1, 0), &p(0, 0), &p(-1, 1)).unwrap());
    }
}
