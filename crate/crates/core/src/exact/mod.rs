//! Exact constructible numbers.
//!
//! An [`ExactNumber`] is a shared, immutable expression DAG over rational
//! leaves, `+ - * /` and square roots. Construction folds whatever can be
//! folded exactly:
//!
//! * purely rational subexpressions collapse to a rational leaf;
//! * sums of rational multiples of square roots of integers form a
//!   multiquadratic field, kept as a canonical DAG `c1 sqrt(m1) + c2 sqrt(m2) + ...`
//!   whose sign is decided algebraically;
//! * the square root of such a field element is kept as `alpha * sqrt(x)`;
//!   products and quotients of these stay in that shape, and two of them
//!   added together have a sign decidable by comparing squares.
//!
//! Anything else becomes a plain DAG node. [`ExactNumber::sign`] then decides
//! the sign by refining a certified dyadic enclosure with doubling precision
//! until it excludes zero, or until its width drops below a constructive root
//! separation bound, in which case the value is exactly zero.
//!
//! Values are `Send + Sync`; the per-node approximation cache sits behind a
//! mutex and the memoised sign behind a `OnceLock`, so concurrent `sign()`
//! calls on shared values are safe.

mod field;
mod interval;
mod radical;
mod text;

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use field::Quadratic;
use interval::Interval;
pub use text::ParseError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("zero denominator in rational literal")]
    ZeroDenominator,
    #[error("division by exact zero")]
    DivisionByZero,
    #[error("square root of a negative value")]
    NegativeSqrt,
}

const START_PRECISION: u32 = 64;

#[derive(Clone)]
pub struct ExactNumber(Arc<Node>);

struct Node {
    kind: Kind,
    measure: Measure,
    form: Form,
    sign: OnceLock<i8>,
    radicals: OnceLock<u32>,
    approx: Mutex<Option<Interval>>,
}

pub(crate) enum Kind {
    Rational(BigRational),
    Add(ExactNumber, ExactNumber),
    Sub(ExactNumber, ExactNumber),
    Mul(ExactNumber, ExactNumber),
    Div(ExactNumber, ExactNumber),
    Sqrt(ExactNumber),
}

/// What construction knows about a node's value beyond its DAG.
enum Form {
    /// An element of a multiquadratic field (rationals included).
    Field(Arc<Quadratic>),
    /// `alpha * sqrt(x)` with field elements `alpha != 0` and `x > 0` irrational.
    Root(Arc<Quadratic>, Arc<Quadratic>),
    Opaque,
}

/// Binary operator tags, shared with the textual form.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Upper bounds (in bits) on the BFMSS `u` and `l` measures: the value is
/// `alpha / beta` with algebraic integers whose conjugates are bounded by
/// `2^u_bits` and `2^l_bits` respectively.
#[derive(Clone, Copy, Debug)]
struct Measure {
    u_bits: u64,
    l_bits: u64,
}

fn bit_len(n: &BigInt) -> u64 {
    n.bits()
}

impl Measure {
    fn rational(q: &BigRational) -> Self {
        Measure {
            u_bits: bit_len(q.numer()),
            l_bits: bit_len(q.denom()),
        }
    }

    fn combine(op: BinOp, a: Measure, b: Measure) -> Self {
        match op {
            BinOp::Add | BinOp::Sub => Measure {
                u_bits: (a.u_bits + b.l_bits).max(a.l_bits + b.u_bits) + 1,
                l_bits: a.l_bits + b.l_bits,
            },
            BinOp::Mul => Measure {
                u_bits: a.u_bits + b.u_bits,
                l_bits: a.l_bits + b.l_bits,
            },
            BinOp::Div => Measure {
                u_bits: a.u_bits + b.l_bits,
                l_bits: a.l_bits + b.u_bits,
            },
        }
    }

    // sqrt(alpha/beta) = sqrt(alpha*beta) / beta
    fn sqrt(a: Measure) -> Self {
        Measure {
            u_bits: (a.u_bits + a.l_bits).div_ceil(2),
            l_bits: a.l_bits,
        }
    }
}

impl ExactNumber {
    fn from_kind(kind: Kind, form: Form) -> Self {
        let measure = match &kind {
            Kind::Rational(q) => Measure::rational(q),
            Kind::Add(a, b) => Measure::combine(BinOp::Add, a.0.measure, b.0.measure),
            Kind::Sub(a, b) => Measure::combine(BinOp::Sub, a.0.measure, b.0.measure),
            Kind::Mul(a, b) => Measure::combine(BinOp::Mul, a.0.measure, b.0.measure),
            Kind::Div(a, b) => Measure::combine(BinOp::Div, a.0.measure, b.0.measure),
            Kind::Sqrt(a) => Measure::sqrt(a.0.measure),
        };
        let sign = OnceLock::new();
        if let Kind::Rational(q) = &kind {
            let _ = sign.set(signum_of(q));
        }
        ExactNumber(Arc::new(Node {
            kind,
            measure,
            form,
            sign,
            radicals: OnceLock::new(),
            approx: Mutex::new(None),
        }))
    }

    pub fn rational(q: BigRational) -> Self {
        let form = Form::Field(Arc::new(Quadratic::rational(q.clone())));
        Self::from_kind(Kind::Rational(q), form)
    }

    /// `numerator / denominator`, reduced with the sign on the numerator.
    pub fn from_rational(numerator: BigInt, denominator: BigInt) -> Result<Self, ExactError> {
        if denominator.is_zero() {
            return Err(ExactError::ZeroDenominator);
        }
        Ok(Self::rational(BigRational::new(numerator, denominator)))
    }

    pub fn from_ratio(numerator: i64, denominator: i64) -> Result<Self, ExactError> {
        Self::from_rational(numerator.into(), denominator.into())
    }

    pub fn zero() -> Self {
        Self::from(0)
    }

    pub fn one() -> Self {
        Self::from(1)
    }

    pub(crate) fn kind(&self) -> &Kind {
        &self.0.kind
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.0.kind {
            Kind::Rational(q) => Some(q),
            _ => None,
        }
    }

    pub fn is_rational(&self) -> bool {
        self.as_rational().is_some()
    }

    /// Whether two handles share the same DAG node.
    pub fn ptr_eq(a: &Self, b: &Self) -> bool {
        Arc::ptr_eq(&a.0, &b.0)
    }

    /// Canonical DAG for a field element: a left-nested sum of `c sqrt(m)` terms.
    fn from_field(x: Quadratic) -> Self {
        if let Some(q) = x.as_rational() {
            return Self::rational(q);
        }
        let mut acc: Option<(Self, Quadratic)> = None;
        for (m, c) in x.terms() {
            let part = Quadratic::surd(c.clone(), m.clone());
            let term = if m.is_one() {
                Self::rational(c.clone())
            } else {
                let unit = Quadratic::surd(BigRational::one(), m.clone());
                let root = Self::from_kind(
                    Kind::Sqrt(Self::rational(BigRational::from_integer(m.clone()))),
                    Form::Field(Arc::new(unit)),
                );
                if c.is_one() {
                    root
                } else {
                    Self::from_kind(Kind::Mul(Self::rational(c.clone()), root), Form::Field(Arc::new(part.clone())))
                }
            };
            acc = Some(match acc {
                None => (term, part),
                Some((node, sum)) => {
                    let sum = sum.add(&part);
                    let form = Form::Field(Arc::new(sum.clone()));
                    (Self::from_kind(Kind::Add(node, term), form), sum)
                }
            });
        }
        acc.expect("irrational element has terms").0
    }

    /// `alpha * sqrt(x)` for a nonnegative field element `x`, with the
    /// radicand scaled so that its leading coefficient is a square-free integer.
    fn from_root(alpha: Quadratic, x: Quadratic) -> Self {
        if alpha.is_zero() || x.is_zero() {
            return Self::zero();
        }
        if let Some(q) = x.as_rational() {
            let (c, m) = radical::sqrt_rational(&q);
            return Self::from_field(alpha.mul(&Quadratic::surd(c, m)));
        }
        if let Some(root) = radical::denest(&x) {
            return Self::from_field(alpha.mul(&root));
        }
        let lead = x.leading().expect("irrational element has terms").abs();
        let (s, _) = radical::sqrt_rational(&lead);
        let x = x.scale(&(&s * &s).recip());
        let alpha = alpha.scale(&s);
        let radicand = Self::from_field(x.clone());
        let unit = Form::Root(Arc::new(Quadratic::rational(BigRational::one())), Arc::new(x.clone()));
        let root = Self::from_kind(Kind::Sqrt(radicand), unit);
        if alpha.as_rational().is_some_and(|a| a.is_one()) {
            return root;
        }
        let form = Form::Root(Arc::new(alpha.clone()), Arc::new(x));
        Self::from_kind(Kind::Mul(Self::from_field(alpha), root), form)
    }

    /// The value as `alpha * sqrt(x)` with field elements `alpha`, `x` (`x = 1` for field values).
    fn root_view(&self) -> Option<(Arc<Quadratic>, Arc<Quadratic>)> {
        match &self.0.form {
            Form::Field(f) => Some((f.clone(), Arc::new(Quadratic::rational(BigRational::one())))),
            Form::Root(a, x) => Some((a.clone(), x.clone())),
            Form::Opaque => None,
        }
    }

    fn binary(op: BinOp, a: &Self, b: &Self) -> Self {
        if let (Some(x), Some(y)) = (a.as_rational(), b.as_rational()) {
            return Self::rational(match op {
                BinOp::Add => x + y,
                BinOp::Sub => x - y,
                BinOp::Mul => x * y,
                BinOp::Div => x / y,
            });
        }
        if let (Form::Field(x), Form::Field(y)) = (&a.0.form, &b.0.form) {
            match op {
                BinOp::Add => return Self::from_field(x.add(y)),
                BinOp::Sub => return Self::from_field(x.sub(y)),
                BinOp::Mul => return Self::from_field(x.mul(y)),
                BinOp::Div => {
                    if let Some(inv) = y.inverse() {
                        return Self::from_field(x.mul(&inv));
                    }
                }
            }
        }
        if let (Some((a1, x1)), Some((a2, x2))) = (a.root_view(), b.root_view()) {
            match op {
                BinOp::Add if x1 == x2 => return Self::from_root(a1.add(&a2), (*x1).clone()),
                BinOp::Sub if x1 == x2 => return Self::from_root(a1.sub(&a2), (*x1).clone()),
                BinOp::Mul if x1 == x2 => return Self::from_field(a1.mul(&a2).mul(&x1)),
                BinOp::Mul => return Self::from_root(a1.mul(&a2), x1.mul(&x2)),
                BinOp::Div => {
                    // a1 sqrt(x1) / (a2 sqrt(x2)) = a1 / (a2 x2) * sqrt(x1 x2)
                    if let Some(inv) = a2.mul(&x2).inverse() {
                        if x1 == x2 {
                            return Self::from_field(a1.mul(&inv).mul(&x1));
                        }
                        return Self::from_root(a1.mul(&inv), x1.mul(&x2));
                    }
                }
                _ => {}
            }
        }
        let is_zero = |x: &Self| x.as_rational().is_some_and(Zero::is_zero);
        let is_one = |x: &Self| x.as_rational().is_some_and(One::is_one);
        match op {
            BinOp::Add if is_zero(a) => return b.clone(),
            BinOp::Add | BinOp::Sub if is_zero(b) => return a.clone(),
            BinOp::Mul if is_zero(a) || is_zero(b) => return Self::zero(),
            BinOp::Mul if is_one(a) => return b.clone(),
            BinOp::Mul | BinOp::Div if is_one(b) => return a.clone(),
            BinOp::Div if is_zero(a) => return Self::zero(),
            _ => {}
        }
        Self::raw_binary(op, a, b)
    }

    fn raw_binary(op: BinOp, a: &Self, b: &Self) -> Self {
        let (a, b) = (a.clone(), b.clone());
        let kind = match op {
            BinOp::Add => Kind::Add(a, b),
            BinOp::Sub => Kind::Sub(a, b),
            BinOp::Mul => Kind::Mul(a, b),
            BinOp::Div => Kind::Div(a, b),
        };
        Self::from_kind(kind, Form::Opaque)
    }

    /// Checked arithmetic; only division can fail.
    pub fn arith(&self, other: &Self, op: BinOp) -> Result<Self, ExactError> {
        if op == BinOp::Div && other.sign() == 0 {
            return Err(ExactError::DivisionByZero);
        }
        Ok(Self::binary(op, self, other))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, ExactError> {
        self.arith(other, BinOp::Div)
    }

    pub fn sqrt(&self) -> Result<Self, ExactError> {
        match self.sign() {
            -1 => return Err(ExactError::NegativeSqrt),
            0 => return Ok(Self::zero()),
            _ => {}
        }
        if let Form::Field(x) = &self.0.form {
            return Ok(Self::from_root(Quadratic::rational(BigRational::one()), (**x).clone()));
        }
        Ok(Self::from_kind(Kind::Sqrt(self.clone()), Form::Opaque))
    }

    pub fn square(&self) -> Self {
        self * self
    }

    pub fn abs(&self) -> Self {
        if self.sign() < 0 {
            -self
        } else {
            self.clone()
        }
    }

    pub fn is_zero(&self) -> bool {
        self.sign() == 0
    }

    pub fn is_positive(&self) -> bool {
        self.sign() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.sign() < 0
    }

    /// Exact comparison.
    pub fn cmp_exact(&self, other: &Self) -> Ordering {
        (self - other).sign().cmp(&0)
    }

    /// Exact sign: `-1`, `0` or `1`.
    pub fn sign(&self) -> i8 {
        if let Some(s) = self.0.sign.get() {
            return *s;
        }
        let s = self.compute_sign();
        let _ = self.0.sign.set(s);
        s
    }

    fn compute_sign(&self) -> i8 {
        match &self.0.form {
            Form::Field(x) => return x.sign(),
            Form::Root(alpha, _) => return alpha.sign(),
            Form::Opaque => {}
        }
        if let Some(s) = self.two_root_sign() {
            return s;
        }
        self.sign_by_refinement()
    }

    /// `a1 sqrt(x1) +- a2 sqrt(x2)` has a sign decidable by comparing squares.
    fn two_root_sign(&self) -> Option<i8> {
        let (a, b, negate) = match &self.0.kind {
            Kind::Add(a, b) => (a, b, false),
            Kind::Sub(a, b) => (a, b, true),
            _ => return None,
        };
        let (a1, x1) = a.root_view()?;
        let (a2, x2) = b.root_view()?;
        let a2 = if negate { a2.neg() } else { (*a2).clone() };
        let (s1, s2) = (a1.sign(), a2.sign());
        if s1 == 0 {
            return Some(s2);
        }
        if s2 == 0 || s1 == s2 {
            return Some(s1);
        }
        let diff = a1.square().mul(&x1).sub(&a2.square().mul(&x2));
        Some(match diff.sign() {
            1 => s1,
            -1 => s2,
            _ => 0,
        })
    }

    /// Sign through interval refinement alone (no algebraic shortcut at this node).
    pub(crate) fn sign_by_refinement(&self) -> i8 {
        let bound = self.separation_bits();
        let mut prec = START_PRECISION;
        loop {
            if let Some(iv) = self.approx(prec) {
                if iv.lo.is_positive() {
                    return 1;
                }
                if iv.hi.is_negative() {
                    return -1;
                }
                // 0 is enclosed; width < 2^-bound forces the value to be 0.
                if iv.lo.is_zero() && iv.hi.is_zero() {
                    return 0;
                }
                if u64::from(prec) > bound {
                    let shift = u64::from(prec) - bound;
                    if shift < u64::from(u32::MAX) && iv.width() < (BigInt::one() << shift) {
                        return 0;
                    }
                }
            }
            prec = prec.checked_mul(2).expect("precision overflow in sign determination");
        }
    }

    /// Number of bits `b` such that a nonzero value has magnitude at least `2^-b`.
    pub(crate) fn separation_bits(&self) -> u64 {
        let k = self.distinct_radicals();
        let m = self.0.measure;
        let degree_minus_one = if k >= 63 { u64::MAX } else { (1u64 << k) - 1 };
        m.u_bits
            .saturating_mul(degree_minus_one)
            .saturating_add(m.l_bits)
            .saturating_add(1)
    }

    /// Count of distinct square-root values in the DAG; bounds the algebraic degree by `2^k`.
    fn distinct_radicals(&self) -> u32 {
        *self.0.radicals.get_or_init(|| {
            #[derive(Hash, PartialEq, Eq)]
            enum Key {
                Radicand(BigRational),
                Node(usize),
            }
            let mut seen_nodes = HashSet::new();
            let mut radicals = HashSet::new();
            let mut stack = vec![self.clone()];
            while let Some(e) = stack.pop() {
                if !seen_nodes.insert(Arc::as_ptr(&e.0) as usize) {
                    continue;
                }
                match &e.0.kind {
                    Kind::Rational(_) => {}
                    Kind::Add(a, b) | Kind::Sub(a, b) | Kind::Mul(a, b) | Kind::Div(a, b) => {
                        stack.push(a.clone());
                        stack.push(b.clone());
                    }
                    Kind::Sqrt(a) => {
                        let key = match a.as_rational() {
                            Some(q) => Key::Radicand(q.clone()),
                            None => Key::Node(Arc::as_ptr(&e.0) as usize),
                        };
                        radicals.insert(key);
                        stack.push(a.clone());
                    }
                }
            }
            radicals.len() as u32
        })
    }

    /// Certified enclosure at `prec` fractional bits, or `None` if a divisor
    /// cannot yet be separated from zero at this precision.
    fn approx(&self, prec: u32) -> Option<Interval> {
        let node = &self.0;
        if let Kind::Rational(q) = &node.kind {
            return Some(Interval::of_rational(q, prec));
        }
        if node.sign.get() == Some(&0) {
            return Some(Interval::point_zero(prec));
        }
        if let Some(hit) = self.cached(prec) {
            return Some(hit);
        }
        let fresh = match &node.kind {
            Kind::Rational(_) => unreachable!(),
            Kind::Add(a, b) => a.approx(prec)?.add(&b.approx(prec)?),
            Kind::Sub(a, b) => a.approx(prec)?.sub(&b.approx(prec)?),
            Kind::Mul(a, b) => a.approx(prec)?.mul(&b.approx(prec)?),
            Kind::Div(a, b) => a.approx(prec)?.div(&b.approx(prec)?)?,
            Kind::Sqrt(a) => a.approx(prec)?.sqrt(),
        };
        let mut cache = node.approx.lock().unwrap_or_else(|e| e.into_inner());
        let merged = match cache.as_ref() {
            Some(old) if old.prec >= prec => return Some(old.coarsen(prec)),
            Some(old) => fresh.intersect(&old.refine_to(prec)),
            None => fresh,
        };
        *cache = Some(merged.clone());
        Some(merged)
    }

    fn cached(&self, prec: u32) -> Option<Interval> {
        let cache = self.0.approx.lock().unwrap_or_else(|e| e.into_inner());
        cache
            .as_ref()
            .filter(|c| c.prec >= prec)
            .map(|c| c.coarsen(prec))
    }

    /// Width of the cached enclosure in units of `2^-prec` at the cached precision,
    /// as `(width, prec)`.
    pub fn cached_width(&self) -> Option<(BigInt, u32)> {
        let cache = self.0.approx.lock().unwrap_or_else(|e| e.into_inner());
        cache.as_ref().map(|c| (c.width(), c.prec))
    }

    /// Midpoint of a certified enclosure of width at most `2^-40`; display only.
    pub fn to_f64(&self) -> f64 {
        if let Some(q) = self.as_rational() {
            return q.to_f64().unwrap_or(f64::NAN);
        }
        let mut prec = START_PRECISION;
        loop {
            if let Some(iv) = self.approx(prec) {
                if iv.width() <= (BigInt::one() << (prec - 40)) {
                    return iv.midpoint_f64();
                }
            }
            prec *= 2;
        }
    }

    /// Fixed-point decimal rendering with `digits` fractional digits; display only.
    pub fn to_decimal(&self, digits: usize) -> String {
        format!("{:.*}", digits, self.to_f64())
    }
}

fn signum_of(q: &BigRational) -> i8 {
    if q.is_positive() {
        1
    } else if q.is_negative() {
        -1
    } else {
        0
    }
}

/// Unfolded constructors; they skip the rational and surd short-circuits so
/// that tests can force the interval path on expressions that would
/// otherwise be folded.
#[doc(hidden)]
pub mod raw {
    use super::*;

    pub fn binary(op: BinOp, a: &ExactNumber, b: &ExactNumber) -> ExactNumber {
        ExactNumber::raw_binary(op, a, b)
    }

    pub fn sqrt(a: &ExactNumber) -> ExactNumber {
        ExactNumber::from_kind(Kind::Sqrt(a.clone()), Form::Opaque)
    }

    pub fn sign_by_refinement(a: &ExactNumber) -> i8 {
        a.sign_by_refinement()
    }
}

impl From<i64> for ExactNumber {
    fn from(n: i64) -> Self {
        Self::rational(BigRational::from_integer(n.into()))
    }
}

impl From<BigRational> for ExactNumber {
    fn from(q: BigRational) -> Self {
        Self::rational(q)
    }
}

impl PartialEq for ExactNumber {
    fn eq(&self, other: &Self) -> bool {
        self.cmp_exact(other) == Ordering::Equal
    }
}

impl PartialOrd for ExactNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp_exact(other))
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $op:expr) => {
        impl $trait<&ExactNumber> for &ExactNumber {
            type Output = ExactNumber;
            fn $method(self, rhs: &ExactNumber) -> ExactNumber {
                ExactNumber::binary($op, self, rhs)
            }
        }
        impl $trait<ExactNumber> for ExactNumber {
            type Output = ExactNumber;
            fn $method(self, rhs: ExactNumber) -> ExactNumber {
                ExactNumber::binary($op, &self, &rhs)
            }
        }
        impl $trait<&ExactNumber> for ExactNumber {
            type Output = ExactNumber;
            fn $method(self, rhs: &ExactNumber) -> ExactNumber {
                ExactNumber::binary($op, &self, rhs)
            }
        }
        impl $trait<ExactNumber> for &ExactNumber {
            type Output = ExactNumber;
            fn $method(self, rhs: ExactNumber) -> ExactNumber {
                ExactNumber::binary($op, self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, BinOp::Add);
forward_binop!(Sub, sub, BinOp::Sub);
forward_binop!(Mul, mul, BinOp::Mul);

impl Neg for &ExactNumber {
    type Output = ExactNumber;
    fn neg(self) -> ExactNumber {
        ExactNumber::binary(BinOp::Sub, &ExactNumber::zero(), self)
    }
}

impl Neg for ExactNumber {
    type Output = ExactNumber;
    fn neg(self) -> ExactNumber {
        -&self
    }
}

impl fmt::Display for ExactNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        text::write_term(self, f)
    }
}

impl fmt::Debug for ExactNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Exact({self})")
    }
}

impl std::str::FromStr for ExactNumber {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        text::parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> ExactNumber {
        ExactNumber::from_ratio(n, d).unwrap()
    }

    fn sqrt(x: &ExactNumber) -> ExactNumber {
        x.sqrt().unwrap()
    }

    #[test]
    fn from_rational_canonicalizes() {
        assert_eq!(q(-2, -4).to_string(), "1/2");
        assert_eq!(q(0, 7).to_string(), "0");
        assert_eq!(q(1, 3).to_string(), "1/3");
        assert_eq!(
            ExactNumber::from_rational(1.into(), 0.into()).unwrap_err(),
            ExactError::ZeroDenominator
        );
    }

    #[test]
    fn rational_sums_fold() {
        let s = q(1, 3) + q(1, 6);
        assert_eq!(s.as_rational(), Some(&BigRational::new(1.into(), 2.into())));
        assert_eq!((q(1, 3) - q(33, 100)).sign(), 1);
    }

    #[test]
    fn sqrt_identities() {
        let two = ExactNumber::from(2);
        let r2 = sqrt(&two);
        assert_eq!((&r2 * &r2 - &two).sign(), 0);
        let inv = ExactNumber::one().checked_div(&r2).unwrap();
        assert_eq!((&inv * &inv - q(1, 2)).sign(), 0);
        assert_eq!((sqrt(&ExactNumber::from(4)) - ExactNumber::from(2)).sign(), 0);
        assert!(sqrt(&ExactNumber::zero()).is_zero());
    }

    #[test]
    fn sqrt_two_exceeds_its_eight_digit_truncation() {
        // Long division gives sqrt(2) = 1.41421356237...; the truncation is below it.
        let r2 = sqrt(&ExactNumber::from(2));
        assert_eq!(r2.cmp_exact(&q(141421356, 100000000)), Ordering::Greater);
        assert_eq!(r2.cmp_exact(&q(141421357, 100000000)), Ordering::Less);
    }

    fn raw_sqrt(n: i64) -> ExactNumber {
        raw::sqrt(&n.into())
    }

    #[test]
    fn nested_radical_zero() {
        let (r2, r3) = (sqrt(&2.into()), sqrt(&3.into()));
        let inner = ExactNumber::from(5) + ExactNumber::from(2) * sqrt(&6.into());
        let e = &r2 + &r3 - sqrt(&inner);
        assert_eq!(e.sign(), 0);
        assert_eq!((&r2 * &r3 - sqrt(&6.into())).sign(), 0);
        // the same identity with every fold disabled
        let add = |a: &ExactNumber, b: &ExactNumber| raw::binary(BinOp::Add, a, b);
        let mul = |a: &ExactNumber, b: &ExactNumber| raw::binary(BinOp::Mul, a, b);
        let inner = add(&5.into(), &mul(&2.into(), &raw_sqrt(6)));
        let e = raw::binary(BinOp::Sub, &add(&raw_sqrt(2), &raw_sqrt(3)), &raw::sqrt(&inner));
        assert!(!e.is_rational());
        assert_eq!(e.sign(), 0);
    }

    #[test]
    fn field_elements_fold() {
        let (r2, r3) = (sqrt(&2.into()), sqrt(&3.into()));
        let x = &r2 + &r3;
        let inv = ExactNumber::one().checked_div(&x).unwrap();
        // 1 / (sqrt 2 + sqrt 3) = sqrt 3 - sqrt 2
        assert_eq!(inv.to_string(), (&r3 - &r2).to_string());
        assert!((&x * &inv - ExactNumber::one()).is_rational());
        // sqrt(3 + sqrt 2) squared folds back into the field
        let root = sqrt(&(ExactNumber::from(3) + &r2));
        assert_eq!((&root * &root).to_string(), (ExactNumber::from(3) + &r2).to_string());
        let other = sqrt(&(ExactNumber::from(12) + ExactNumber::from(4) * &r2));
        // sqrt(12 + 4 sqrt 2) = 2 sqrt(3 + sqrt 2)
        assert!((&other - ExactNumber::from(2) * &root).is_rational());
    }

    #[test]
    fn domain_errors() {
        let z = ExactNumber::zero();
        assert_eq!(ExactNumber::one().checked_div(&z).unwrap_err(), ExactError::DivisionByZero);
        let hidden_zero = sqrt(&2.into()) * sqrt(&2.into()) - ExactNumber::from(2);
        assert_eq!(
            ExactNumber::one().checked_div(&hidden_zero).unwrap_err(),
            ExactError::DivisionByZero
        );
        assert_eq!(ExactNumber::from(-1).sqrt().unwrap_err(), ExactError::NegativeSqrt);
    }

    #[test]
    fn surds_share_radicands() {
        let a = sqrt(&q(8, 1));
        let b = sqrt(&q(1, 2));
        // 2 sqrt(2) * sqrt(2)/2 = 2
        assert_eq!((&a * &b).as_rational(), Some(&BigRational::from_integer(2.into())));
        assert_eq!((a.checked_div(&b).unwrap()).as_rational(), Some(&BigRational::from_integer(4.into())));
    }

    #[test]
    fn two_surd_sign_matches_refinement() {
        let cases = [(3, 2, 2, 5), (1, 2, -1, 3), (-7, 2, 5, 3), (2, 3, -3, 2), (-1, 2, -1, 3), (0, 1, -2, 7)];
        for (c1, m1, c2, m2) in cases {
            let a = ExactNumber::from(c1) * sqrt(&m1.into());
            let b = ExactNumber::from(c2) * sqrt(&m2.into());
            let folded = (&a + &b).sign();
            let forced = raw::binary(BinOp::Add, &a, &b).sign_by_refinement();
            assert_eq!(folded, forced, "{c1}√{m1} + {c2}√{m2}");
        }
    }

    #[test]
    fn refinement_never_widens_the_cache() {
        let inner = || raw::binary(BinOp::Add, &raw_sqrt(2), &3.into());
        let e = raw::sqrt(&inner());
        let before = {
            raw::sign_by_refinement(&e);
            e.cached_width()
        };
        let x = raw::binary(BinOp::Sub, &e, &raw::sqrt(&inner()));
        assert_eq!(x.sign(), 0);
        let after = e.cached_width();
        let (Some((w0, p0)), Some((w1, p1))) = (before, after) else {
            panic!("cache should be populated");
        };
        assert!(p1 >= p0);
        assert!(w1 <= (w0 << (p1 - p0)));
    }

    #[test]
    fn concurrent_sign_calls_agree() {
        let inner = raw::binary(BinOp::Add, &5.into(), &raw::binary(BinOp::Mul, &2.into(), &raw_sqrt(6)));
        let sum = raw::binary(BinOp::Add, &raw_sqrt(2), &raw_sqrt(3));
        let e = raw::binary(BinOp::Sub, &sum, &raw::sqrt(&inner));
        let signs: Vec<i8> = std::thread::scope(|s| {
            let hs: Vec<_> = (0..4).map(|_| s.spawn(|| e.clone().sign())).collect();
            hs.into_iter().map(|h| h.join().unwrap()).collect()
        });
        assert!(signs.iter().all(|&s| s == 0));
    }
}
