//! Random configurations for the generators.
//!
//! Base coordinates are rationals `n/d` with `n` in `[-12, 12]` and `d` in
//! `[1, 4]`. Equal figures are produced by area-preserving affine maps
//! (rational or Pythagorean rotations, shears, `diag(s, 1/s)`, reflections,
//! translations), by rotations through angles with irrational cosine, or by
//! rescaling an unrelated shape along one axis until its area matches.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::exact::ExactNumber;
use crate::plane::{cross, lay_off, Point, Segment};

pub(crate) fn q(n: i64, d: i64) -> ExactNumber {
    ExactNumber::from_ratio(n, d).expect("nonzero denominator")
}

/// Twice the signed area of a polygon, for sizing constructions.
pub(crate) fn signed_twice_area(pts: &[Point]) -> ExactNumber {
    let mut s = ExactNumber::zero();
    for i in 0..pts.len() {
        let (a, b) = (&pts[i], &pts[(i + 1) % pts.len()]);
        s = s + cross(a, b);
    }
    s
}

pub(crate) fn twice_area(pts: &[Point]) -> ExactNumber {
    signed_twice_area(pts).abs()
}

/// `x -> m x + t`.
#[derive(Clone, Debug)]
pub(crate) struct Affine {
    m: [[ExactNumber; 2]; 2],
    t: Point,
}

impl Affine {
    pub fn linear(m: [[ExactNumber; 2]; 2]) -> Self {
        Affine { m, t: Point::origin() }
    }

    pub fn scale_x(r: ExactNumber) -> Self {
        Affine::linear([[r, 0.into()], [0.into(), 1.into()]])
    }

    pub fn apply(&self, p: &Point) -> Point {
        let m = &self.m;
        Point::new(
            &m[0][0] * &p.x + &m[0][1] * &p.y + &self.t.x,
            &m[1][0] * &p.x + &m[1][1] * &p.y + &self.t.y,
        )
    }

    pub fn apply_all<const N: usize>(&self, ps: &[Point; N]) -> [Point; N] {
        std::array::from_fn(|i| self.apply(&ps[i]))
    }

    /// `self` after `other`.
    pub fn compose(&self, other: &Affine) -> Affine {
        let (a, b) = (&self.m, &other.m);
        let m = std::array::from_fn(|i| {
            std::array::from_fn(|j| &a[i][0] * &b[0][j] + &a[i][1] * &b[1][j])
        });
        Affine { m, t: self.apply(&other.t) }
    }

    pub fn then_translate(mut self, t: Point) -> Affine {
        self.t = &self.t + &t;
        self
    }
}

const TRIPLES: [(i64, i64, i64); 5] = [(3, 4, 5), (5, 12, 13), (8, 15, 17), (7, 24, 25), (20, 21, 29)];

pub(crate) struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(rng: ChaCha8Rng) -> Self {
        Sampler { rng }
    }

    pub fn int(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.gen_range(lo..=hi)
    }

    pub fn chance(&mut self, num: u32, den: u32) -> bool {
        self.rng.gen_ratio(num, den)
    }

    pub fn pick<T: Clone>(&mut self, xs: &[T]) -> T {
        xs[self.rng.gen_range(0..xs.len())].clone()
    }

    pub fn coord(&mut self) -> ExactNumber {
        let (n, d) = (self.int(-12, 12), self.int(1, 4));
        q(n, d)
    }

    pub fn point(&mut self) -> Point {
        Point::new(self.coord(), self.coord())
    }

    /// Nonzero rational vector.
    pub fn direction(&mut self) -> Point {
        loop {
            let p = self.point();
            if !p.norm_sq().is_zero() {
                return p;
            }
        }
    }

    /// Rational strictly inside `(0, 1)`.
    pub fn unit_ratio(&mut self) -> ExactNumber {
        let d = self.int(2, 12);
        q(self.int(1, d - 1), d)
    }

    /// Positive rational in `(0, 12]`.
    pub fn positive(&mut self) -> ExactNumber {
        let (n, d) = (self.int(1, 48), self.int(1, 4));
        q(n, d)
    }

    /// Positive length: rational, or the square root of a rational.
    pub fn length(&mut self) -> ExactNumber {
        let r = self.positive();
        if self.chance(1, 2) {
            r
        } else {
            r.sqrt().expect("positive")
        }
    }

    pub fn segment_of(&mut self, len: &ExactNumber) -> Segment {
        let from = self.point();
        let toward = &from + &self.direction();
        let to = lay_off(&from, &toward, &Segment::of_length(len.clone())).expect("proper ray");
        Segment::new(from, to)
    }

    pub fn triangle(&mut self) -> [Point; 3] {
        loop {
            let t = [self.point(), self.point(), self.point()];
            if !twice_area(&t).is_zero() {
                return t;
            }
        }
    }

    /// Vertices around a random interior diagonal crossing point.
    pub fn convex_quad(&mut self) -> [Point; 4] {
        let center = self.point();
        let (u, w) = loop {
            let (u, w) = (self.direction(), self.direction());
            if !cross(&u, &w).is_zero() {
                break (u, w);
            }
        };
        let mut at = |v: &Point, sign: i64| {
            let k = &self.unit_ratio() * &ExactNumber::from(sign * self.int(1, 3));
            &center + &v.scale(&k)
        };
        let quad = [at(&u, -1), at(&w, -1), at(&u, 1), at(&w, 1)];
        self.rotate_order(quad)
    }

    /// A triangle with an extra vertex strictly inside one side.
    pub fn really_triangle(&mut self) -> [Point; 4] {
        let [x, y, z] = self.triangle();
        let s = Point::lerp(&x, &y, &self.unit_ratio());
        self.rotate_order([x, s, y, z])
    }

    pub fn quad(&mut self) -> [Point; 4] {
        if self.chance(3, 4) {
            self.convex_quad()
        } else {
            self.really_triangle()
        }
    }

    fn rotate_order(&mut self, mut v: [Point; 4]) -> [Point; 4] {
        let k = self.int(0, 3) as usize;
        v.rotate_left(k);
        if self.chance(1, 2) {
            v.reverse();
        }
        v
    }

    /// Rotation with cosine and sine from a Pythagorean triple.
    pub fn rational_rotation(&mut self) -> Affine {
        let (a, b, c) = self.pick(&TRIPLES);
        let (a, b) = if self.chance(1, 2) { (a, b) } else { (b, a) };
        let (cos, sin) = (q(a * self.sign(), c), q(b * self.sign(), c));
        Affine::linear([[cos.clone(), -&sin], [sin, cos]])
    }

    /// Rotation whose cosine is irrational: `(a, b) / sqrt(a^2 + b^2)`.
    pub fn radical_rotation(&mut self) -> Affine {
        let (a, b) = loop {
            let (a, b) = (self.int(1, 6), self.int(1, 6));
            let n = a * a + b * b;
            let r = (n as f64).sqrt() as i64;
            if r * r != n && (r + 1) * (r + 1) != n {
                break (a * self.sign(), b * self.sign());
            }
        };
        let norm = ExactNumber::from(a * a + b * b).sqrt().expect("positive");
        let cos = ExactNumber::from(a).checked_div(&norm).expect("nonzero");
        let sin = ExactNumber::from(b).checked_div(&norm).expect("nonzero");
        Affine::linear([[cos.clone(), -&sin], [sin, cos]])
    }

    fn sign(&mut self) -> i64 {
        if self.chance(1, 2) {
            1
        } else {
            -1
        }
    }

    /// Random isometry: rotation, optional reflection, translation.
    pub fn isometry(&mut self) -> Affine {
        let mut m = if self.chance(1, 4) {
            self.radical_rotation()
        } else {
            self.rational_rotation()
        };
        if self.chance(1, 2) {
            m = m.compose(&Affine::linear([[1.into(), 0.into()], [0.into(), (-1).into()]]));
        }
        m.then_translate(self.point())
    }

    /// Random map with determinant `+-1`.
    pub fn area_map(&mut self) -> Affine {
        let s = self.positive();
        let stretch = Affine::linear([[s.clone(), 0.into()], [0.into(), ExactNumber::one().checked_div(&s).expect("positive")]]);
        let shear = Affine::linear([[1.into(), self.coord()], [0.into(), 1.into()]]);
        self.isometry().compose(&stretch).compose(&shear)
    }

    /// `pts` rescaled along x so that its twice-area becomes `target`.
    pub fn rescaled<const N: usize>(&mut self, pts: &[Point; N], target: &ExactNumber) -> [Point; N] {
        let r = target.checked_div(&twice_area(pts)).expect("nondegenerate");
        Affine::scale_x(r).apply_all(pts)
    }

    /// A triangle with the same area as `t`, by one of several constructions.
    pub fn equal_triangle(&mut self, t: &[Point; 3]) -> [Point; 3] {
        let target = twice_area(t);
        match self.int(0, 3) {
            0 => self.area_map().apply_all(t),
            1 => {
                let fresh = self.triangle();
                self.rescaled(&fresh, &target)
            }
            2 => self.triangle_on_radical_base(&target),
            _ => {
                let fresh = self.triangle();
                let scaled = self.rescaled(&fresh, &target);
                self.isometry().apply_all(&scaled)
            }
        }
    }

    /// Triangle of the given twice-area whose base has irrational length.
    pub fn triangle_on_radical_base(&mut self, twice: &ExactNumber) -> [Point; 3] {
        let a = self.point();
        let toward = &a + &self.direction();
        let len = self.positive().sqrt().expect("positive");
        let b = lay_off(&a, &toward, &Segment::of_length(len)).expect("proper ray");
        let base = &b - &a;
        let h = twice.checked_div(&base.norm_sq()).expect("nonzero base");
        let c = &Point::lerp(&a, &b, &self.coord()) + &base.perp().scale(&h);
        [a, b, c]
    }

    /// A quadrilateral of either kind with the same area as `v`.
    pub fn equal_quad(&mut self, v: &[Point; 4]) -> [Point; 4] {
        if self.chance(1, 2) {
            self.area_map().apply_all(v)
        } else {
            let target = twice_area(v);
            let fresh = self.quad();
            let scaled = self.rescaled(&fresh, &target);
            self.isometry().apply_all(&scaled)
        }
    }
}
