//! Shoelace area, kept apart from the defined relations so tests can use it
//! as an independent reference. Nothing outside tests and the verification
//! harness's cross-checks calls into this module.

use crate::exact::ExactNumber;
use crate::plane::Point;

use super::Figure;

pub fn oracle_area(f: &Figure) -> ExactNumber {
    let pts: Vec<&Point> = match f {
        Figure::Triangle(t) => vec![&t.a, &t.b, &t.c],
        Figure::Quad(q) => q.v.iter().collect(),
    };
    let mut twice = ExactNumber::zero();
    for i in 0..pts.len() {
        let (p, q) = (pts[i], pts[(i + 1) % pts.len()]);
        twice = twice + (&p.x * &q.y - &p.y * &q.x);
    }
    let half = ExactNumber::from_ratio(1, 2).expect("nonzero denominator");
    twice.abs() * half
}
