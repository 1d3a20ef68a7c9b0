//! Equal rectangles, equal triangles and equal quadrilaterals as defined
//! relations, plus rectangle-valued area.
//!
//! Every relation here bottoms out in one executed test: two rectangles are
//! placed corner to corner and the outer corners `H`, `K` must have the shared
//! vertex strictly between them. Triangles are compared through their first
//! circumscribed rectangle (the one on base `AB`), quadrilaterals through the
//! rectangles built on their diagonals.

pub mod oracle;

use crate::exact::ExactNumber;
use crate::plane::{
    between, collinear, foot_of_perpendicular, line_intersection, right_angle, GeomError,
    GeomResult, Point, Segment,
};
use crate::proportion::fourth_proportional_len;

#[derive(Clone, Debug, PartialEq)]
pub struct Triangle {
    pub a: Point,
    pub b: Point,
    pub c: Point,
}

impl Triangle {
    pub fn new(a: Point, b: Point, c: Point) -> Self {
        Triangle { a, b, c }
    }

    pub fn is_degenerate(&self) -> bool {
        collinear(&self.a, &self.b, &self.c)
    }

    /// `BCA`.
    pub fn rotated(&self) -> Triangle {
        Triangle::new(self.b.clone(), self.c.clone(), self.a.clone())
    }

    /// All six vertex orders, starting with the identity.
    pub fn permutations(&self) -> [Triangle; 6] {
        let (a, b, c) = (&self.a, &self.b, &self.c);
        let t = |x: &Point, y: &Point, z: &Point| Triangle::new(x.clone(), y.clone(), z.clone());
        [t(a, b, c), t(a, c, b), t(b, a, c), t(b, c, a), t(c, a, b), t(c, b, a)]
    }

    pub fn vertices(&self) -> [&Point; 3] {
        [&self.a, &self.b, &self.c]
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Quadrilateral {
    pub v: [Point; 4],
}

impl Quadrilateral {
    pub fn new(a: Point, b: Point, c: Point, d: Point) -> Self {
        Quadrilateral { v: [a, b, c, d] }
    }

    /// Vertices reordered as `v[order[0]], ..., v[order[3]]`.
    pub fn reordered(&self, order: [usize; 4]) -> Quadrilateral {
        let v = &self.v;
        Quadrilateral::new(
            v[order[0]].clone(),
            v[order[1]].clone(),
            v[order[2]].clone(),
            v[order[3]].clone(),
        )
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum QuadKind {
    /// Diagonals meet at the given point, strictly inside both.
    Convex(Point),
    /// The vertex at this index lies strictly between its neighbours.
    ReallyTriangle(usize),
    Invalid,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Figure {
    Triangle(Triangle),
    Quad(Quadrilateral),
}

/// A rectangle up to congruence.
#[derive(Clone, Debug)]
pub struct RectWH {
    pub width: ExactNumber,
    pub height: ExactNumber,
}

impl RectWH {
    pub fn new(width: ExactNumber, height: ExactNumber) -> GeomResult<Self> {
        if !width.is_positive() || !height.is_positive() {
            return Err(GeomError::Degenerate("rectangle sides must be positive"));
        }
        Ok(RectWH { width, height })
    }

    pub fn int(width: i64, height: i64) -> GeomResult<Self> {
        RectWH::new(width.into(), height.into())
    }

    /// The same rectangle with its sides swapped.
    pub fn transposed(&self) -> RectWH {
        RectWH {
            width: self.height.clone(),
            height: self.width.clone(),
        }
    }

    /// Corner points of a copy with one corner at the origin, sides on the axes.
    pub fn corners(&self) -> [Point; 4] {
        let z = ExactNumber::zero();
        [
            Point::new(z.clone(), z.clone()),
            Point::new(self.width.clone(), z.clone()),
            Point::new(self.width.clone(), self.height.clone()),
            Point::new(z, self.height.clone()),
        ]
    }
}

/// The corner-to-corner placement of two rectangles: `R = FEBG` above and to
/// the right of the shared vertex `B`, `S = BMLA` below and to the left.
#[derive(Clone, Debug)]
pub struct ErPlacement {
    pub b: Point,
    pub e: Point,
    pub g: Point,
    pub f: Point,
    pub m: Point,
    pub a: Point,
    pub l: Point,
    pub h: Point,
    pub k: Point,
}

pub fn er_placement(r: &RectWH, s: &RectWH) -> ErPlacement {
    let z = ExactNumber::zero();
    let neg = |x: &ExactNumber| -x;
    let pt = |x: &ExactNumber, y: &ExactNumber| Point::new(x.clone(), y.clone());
    ErPlacement {
        b: pt(&z, &z),
        e: pt(&r.width, &z),
        g: pt(&z, &r.height),
        f: pt(&r.width, &r.height),
        m: pt(&z, &neg(&s.height)),
        a: pt(&neg(&s.width), &z),
        l: pt(&neg(&s.width), &neg(&s.height)),
        h: pt(&neg(&s.width), &r.height),
        k: pt(&r.width, &neg(&s.height)),
    }
}

pub fn equal_rectangles(r: &RectWH, s: &RectWH) -> bool {
    let pl = er_placement(r, s);
    between(&pl.h, &pl.b, &pl.k)
}

pub fn rect_of_points(p: &Point, q: &Point, r: &Point, s: &Point) -> GeomResult<RectWH> {
    let not_rect = |_| GeomError::Degenerate("points do not form a rectangle");
    let corners = [(s, p, q), (p, q, r), (q, r, s), (r, s, p)];
    for (x, y, z) in corners {
        if !right_angle(x, y, z).map_err(not_rect)? {
            return Err(GeomError::Degenerate("points do not form a rectangle"));
        }
    }
    RectWH::new(Segment::new(p.clone(), q.clone()).length(), Segment::new(q.clone(), r.clone()).length())
}

/// A circumscribed rectangle together with the corner points it was built from.
#[derive(Clone, Debug)]
pub struct CircumscribedRect {
    pub rect: RectWH,
    pub corners: [Point; 4],
}

/// Rectangle `ABDK` on base `AB` whose side `DK` lies on the parallel to `AB` through `C`.
pub fn first_circumscribed_rectangle(t: &Triangle) -> GeomResult<CircumscribedRect> {
    if t.is_degenerate() {
        return Err(GeomError::Degenerate("triangle is collinear"));
    }
    let (a, b, c) = (&t.a, &t.b, &t.c);
    let along = c + &(b - a);
    let d = foot_of_perpendicular(b, c, &along)?;
    let k = foot_of_perpendicular(a, c, &along)?;
    let rect = rect_of_points(a, b, &d, &k)?;
    Ok(CircumscribedRect {
        rect,
        corners: [a.clone(), b.clone(), d, k],
    })
}

pub fn equal_triangles(t1: &Triangle, t2: &Triangle) -> GeomResult<bool> {
    let r1 = first_circumscribed_rectangle(t1)?;
    let r2 = first_circumscribed_rectangle(t2)?;
    Ok(equal_rectangles(&r1.rect, &r2.rect))
}

pub fn classify_quadrilateral(q: &Quadrilateral) -> QuadKind {
    let v = &q.v;
    if let Ok(e) = line_intersection(&v[0], &v[2], &v[1], &v[3]) {
        if between(&v[0], &e, &v[2]) && between(&v[1], &e, &v[3]) {
            return QuadKind::Convex(e);
        }
    }
    for i in 0..4 {
        let (prev, next, opposite) = (&v[(i + 3) % 4], &v[(i + 1) % 4], &v[(i + 2) % 4]);
        if between(prev, &v[i], next) && !collinear(prev, next, opposite) {
            return QuadKind::ReallyTriangle(i);
        }
    }
    QuadKind::Invalid
}

/// The triangle left after dropping the straight vertex, in boundary order.
fn underlying_triangle(q: &Quadrilateral, straight: usize) -> Triangle {
    let v = &q.v;
    Triangle::new(
        v[(straight + 1) % 4].clone(),
        v[(straight + 2) % 4].clone(),
        v[(straight + 3) % 4].clone(),
    )
}

/// Rectangle with two sides parallel to diagonal `km`, `k` and `m` on the
/// other two sides, and `j`, `l` on the parallels.
fn diagonal_rectangle(k: &Point, m: &Point, j: &Point, l: &Point) -> GeomResult<CircumscribedRect> {
    let d = m - k;
    let (j2, l2) = (j + &d, l + &d);
    let corners = [
        foot_of_perpendicular(k, j, &j2)?,
        foot_of_perpendicular(k, l, &l2)?,
        foot_of_perpendicular(m, l, &l2)?,
        foot_of_perpendicular(m, j, &j2)?,
    ];
    let rect = rect_of_points(&corners[0], &corners[1], &corners[2], &corners[3])?;
    Ok(CircumscribedRect { rect, corners })
}

/// Two rectangles (one per diagonal) for a convex quadrilateral, three (one
/// per base of the underlying triangle) for one that is really a triangle.
pub fn circumscribed_rectangles(q: &Quadrilateral) -> GeomResult<Vec<CircumscribedRect>> {
    let v = &q.v;
    match classify_quadrilateral(q) {
        QuadKind::Convex(_) => Ok(vec![
            diagonal_rectangle(&v[1], &v[3], &v[0], &v[2])?,
            diagonal_rectangle(&v[0], &v[2], &v[1], &v[3])?,
        ]),
        QuadKind::ReallyTriangle(i) => {
            let t = underlying_triangle(q, i);
            let rots = [t.clone(), t.rotated(), t.rotated().rotated()];
            rots.iter().map(first_circumscribed_rectangle).collect()
        }
        QuadKind::Invalid => Err(GeomError::InvalidQuadrilateral),
    }
}

fn some_pair_equal(xs: &[CircumscribedRect], ys: &[CircumscribedRect]) -> bool {
    xs.iter()
        .any(|x| ys.iter().any(|y| equal_rectangles(&x.rect, &y.rect)))
}

pub fn equal_quadrilaterals(q1: &Quadrilateral, q2: &Quadrilateral) -> GeomResult<bool> {
    Ok(some_pair_equal(
        &circumscribed_rectangles(q1)?,
        &circumscribed_rectangles(q2)?,
    ))
}

/// Whether every pair of circumscribed rectangles of `q` is equal.
pub fn circumscribed_rectangles_agree(q: &Quadrilateral) -> GeomResult<bool> {
    let rs = circumscribed_rectangles(q)?;
    Ok(rs
        .iter()
        .all(|x| rs.iter().all(|y| equal_rectangles(&x.rect, &y.rect))))
}

/// Circumscribed rectangles of a figure; a triangle contributes its first one only.
pub fn figure_rectangles(f: &Figure) -> GeomResult<Vec<CircumscribedRect>> {
    match f {
        Figure::Triangle(t) => Ok(vec![first_circumscribed_rectangle(t)?]),
        Figure::Quad(q) => circumscribed_rectangles(q),
    }
}

/// Equality of figures, triangles and quadrilaterals mixed.
pub fn equal_figures(f1: &Figure, f2: &Figure) -> GeomResult<bool> {
    Ok(some_pair_equal(&figure_rectangles(f1)?, &figure_rectangles(f2)?))
}

/// Area relative to a unit segment: the rectangle with one side the unit,
/// identified by its other side.
#[derive(Clone, Debug)]
pub struct AreaValue {
    pub width: ExactNumber,
    unit: ExactNumber,
}

impl AreaValue {
    pub fn zero(unit: &Segment) -> GeomResult<Self> {
        if unit.is_degenerate() {
            return Err(GeomError::Degenerate("unit segment has zero length"));
        }
        Ok(AreaValue {
            width: ExactNumber::zero(),
            unit: unit.length(),
        })
    }

    pub fn unit_length(&self) -> &ExactNumber {
        &self.unit
    }

    pub fn as_rect(&self) -> GeomResult<RectWH> {
        RectWH::new(self.width.clone(), self.unit.clone())
    }
}

/// The width `w` with `(w, |unit|)` equal to the figure's first circumscribed
/// rectangle `(W, H)`: `|unit| : W = H : w`.
pub fn area(f: &Figure, unit: &Segment) -> GeomResult<AreaValue> {
    let zero = AreaValue::zero(unit)?;
    let rects = figure_rectangles(f)?;
    let r = &rects[0].rect;
    let width = fourth_proportional_len(&zero.unit, &r.width, &r.height)?;
    Ok(AreaValue { width, ..zero })
}

/// Rectangles on the same unit placed end to end.
pub fn area_sum(a: &AreaValue, b: &AreaValue) -> GeomResult<AreaValue> {
    if a.unit != b.unit {
        return Err(GeomError::UnitMismatch);
    }
    Ok(AreaValue {
        width: &a.width + &b.width,
        unit: a.unit.clone(),
    })
}
