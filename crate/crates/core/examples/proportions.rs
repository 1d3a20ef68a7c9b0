//! Proportion between segments, decided by a parallel-lines construction.
//!
//! Run with `cargo run --example proportions`.

use equal_figures::exact::ExactNumber;
use equal_figures::plane::{Point, Segment};
use equal_figures::proportion::{check_fundamental, fourth_proportional_len, proportion_holds};

fn len(x: i64) -> Segment {
    Segment::of_length(x.into())
}

fn main() {
    println!("2:3 = 4:6 ? {}", proportion_holds(&len(2), &len(3), &len(4), &len(6)).unwrap());
    println!("2:3 = 4:7 ? {}", proportion_holds(&len(2), &len(3), &len(4), &len(7)).unwrap());

    // segments anywhere in the plane, with irrational lengths
    let diag = Segment::new(Point::int(1, 1), Point::int(2, 2));
    let side = Segment::new(Point::int(-3, 0), Point::int(-3, 1));
    println!(
        "|diag| : |side| = sqrt 8 : 2 ? {}",
        proportion_holds(&diag, &side, &Segment::of_length(ExactNumber::from(8).sqrt().unwrap()), &len(2)).unwrap()
    );

    let x = fourth_proportional_len(&3.into(), &5.into(), &(ExactNumber::from(2).sqrt().unwrap())).unwrap();
    println!("3:5 = sqrt 2 : x gives x = {x}");

    // a line parallel to one side of a triangle cuts the other two proportionally
    let (a, b, c) = (Point::int(0, 0), Point::int(6, 0), Point::int(2, 5));
    let t = ExactNumber::from_ratio(2, 3).unwrap();
    let (b2, c2) = (Point::lerp(&a, &b, &t), Point::lerp(&a, &c, &t));
    println!("AB:Ab = AC:Ac for bc || BC ? {}", check_fundamental(&a, &b, &c, &b2, &c2).unwrap());
}
