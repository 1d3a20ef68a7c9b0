//! Exact sign decisions on nested square roots.
//!
//! Run with `cargo run --example exact_signs`.

use equal_figures::exact::ExactNumber;

fn n(s: &str) -> ExactNumber {
    s.parse().expect("valid literal")
}

fn main() {
    let sqrt = |x: &ExactNumber| x.sqrt().expect("nonnegative");
    let two = ExactNumber::from(2);
    let three = ExactNumber::from(3);

    // sqrt 2 + sqrt 3 and sqrt(5 + 2 sqrt 6) are the same number
    let lhs = &sqrt(&two) + &sqrt(&three);
    let rhs = sqrt(&n("(add 5 (mul 2 (sqrt 6)))"));
    let diff = &lhs - &rhs;
    println!("sqrt 2 + sqrt 3 - sqrt(5 + 2 sqrt 6) has sign {}", diff.sign());

    // a perturbation far below f64 resolution is still seen
    let tiny = ExactNumber::from_ratio(1, 1_000_000_000_000_000).unwrap();
    println!("... plus 10^-18 has sign {}", (&diff + &tiny).sign());
    println!("... minus 10^-18 has sign {}", (&diff - &tiny).sign());

    // sqrt 2 + sqrt 3 against sqrt 10: 5 + 2 sqrt 6 < 10
    let ten = ExactNumber::from(10);
    println!("sqrt 2 + sqrt 3 vs sqrt 10: {:?}", lhs.cmp_exact(&sqrt(&ten)));

    // textual form round-trips
    for text in ["-7/3", "(div 1 (sqrt 2))", "(sqrt (add 3 (sqrt 2)))"] {
        let x = n(text);
        println!("{text:>26} reads back as {x}, about {}", x.to_decimal(6));
    }
}
