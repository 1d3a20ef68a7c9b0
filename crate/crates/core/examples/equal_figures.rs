//! Equal rectangles, triangles and quadrilaterals.
//!
//! Run with `cargo run --example equal_figures`.

use equal_figures::figures::{
    circumscribed_rectangles, equal_quadrilaterals, equal_rectangles, equal_triangles, er_placement,
    first_circumscribed_rectangle, Quadrilateral, RectWH, Triangle,
};
use equal_figures::plane::{between, Point};

fn main() {
    let r = RectWH::int(2, 3).unwrap();
    let s = RectWH::int(6, 1).unwrap();
    let pl = er_placement(&r, &s);
    println!("2x3 vs 6x1: H, B, K collinear and B between: {}", between(&pl.h, &pl.b, &pl.k));
    println!("2x3 vs 2x4 equal? {}", equal_rectangles(&r, &RectWH::int(2, 4).unwrap()));

    // a triangle and its rotation have different first rectangles but are equal
    let t = Triangle::new(Point::int(0, 0), Point::int(4, 0), Point::int(1, 3));
    for tri in [t.clone(), t.rotated()] {
        let c = first_circumscribed_rectangle(&tri).unwrap();
        println!("rectangle on base {:?}{:?}: {} by {}", tri.a, tri.b, c.rect.width, c.rect.height);
    }
    println!("ABC equal to BCA? {}", equal_triangles(&t, &t.rotated()).unwrap());

    let q = Quadrilateral::new(Point::int(0, 0), Point::int(4, 0), Point::int(5, 3), Point::int(1, 2));
    // a triangle with an extra vertex on its base counts as a quadrilateral
    let flat = Quadrilateral::new(Point::int(0, 0), Point::int(10, 0), Point::int(19, 0), Point::int(0, 1));
    let square = Quadrilateral::new(Point::int(0, 0), Point::int(3, 0), Point::int(3, 3), Point::int(0, 3));
    for c in circumscribed_rectangles(&q).unwrap() {
        println!("quadrilateral rectangle {} by {}", c.rect.width, c.rect.height);
    }
    println!("equal to the 19 by 1 triangle? {}", equal_quadrilaterals(&q, &flat).unwrap());
    println!("equal to the 3 by 3 square? {}", equal_quadrilaterals(&q, &square).unwrap());
}
