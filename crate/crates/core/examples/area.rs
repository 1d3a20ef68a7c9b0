//! Rectangle-valued area against a unit segment.
//!
//! Run with `cargo run --example area`.

use equal_figures::figures::{area, area_sum, equal_figures, Figure, Quadrilateral, Triangle};
use equal_figures::plane::{Point, Segment};

fn main() {
    let unit = Segment::new(Point::int(0, 0), Point::int(1, 0));
    let half = Segment::new(Point::int(0, 0), Point::int(0, 2));

    let t = Figure::Triangle(Triangle::new(Point::int(0, 0), Point::int(4, 0), Point::int(1, 3)));
    println!("triangle: width {} over unit 1", area(&t, &unit).unwrap().width);
    println!("triangle: width {} over unit 2", area(&t, &half).unwrap().width);

    // a square cut along its diagonal: the halves add up to the whole
    let (a, b, c, d) = (Point::int(0, 0), Point::int(2, 0), Point::int(2, 2), Point::int(0, 2));
    let whole = Figure::Quad(Quadrilateral::new(a.clone(), b.clone(), c.clone(), d.clone()));
    let lower = Figure::Triangle(Triangle::new(a.clone(), b, c.clone()));
    let upper = Figure::Triangle(Triangle::new(a, c, d));
    let sum = area_sum(&area(&lower, &unit).unwrap(), &area(&upper, &unit).unwrap()).unwrap();
    println!("halves sum to {}, whole is {}", sum.width, area(&whole, &unit).unwrap().width);

    // equal figures have equal areas
    let other = Figure::Triangle(Triangle::new(Point::int(0, 0), Point::int(6, 0), Point::int(0, 2)));
    println!(
        "triangle 6 by 2 equal to the first? {}, area {}",
        equal_figures(&t, &other).unwrap(),
        area(&other, &unit).unwrap().width
    );
}
