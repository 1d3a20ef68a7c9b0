//! Dyadic intervals: `[lo, hi] * 2^-prec` with arbitrary-precision integer endpoints.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Interval {
    pub lo: BigInt,
    pub hi: BigInt,
    pub prec: u32,
}

pub(crate) fn floor_shr(x: &BigInt, n: u32) -> BigInt {
    x.div_floor(&(BigInt::one() << n))
}

pub(crate) fn ceil_shr(x: &BigInt, n: u32) -> BigInt {
    -((-x).div_floor(&(BigInt::one() << n)))
}

fn ceil_sqrt(x: &BigInt) -> BigInt {
    let r = x.sqrt();
    if &r * &r == *x {
        r
    } else {
        r + 1
    }
}

impl Interval {
    pub fn point_zero(prec: u32) -> Self {
        Interval {
            lo: BigInt::zero(),
            hi: BigInt::zero(),
            prec,
        }
    }

    pub fn of_rational(q: &BigRational, prec: u32) -> Self {
        let scaled = q.numer() << prec;
        let (lo, rem) = scaled.div_mod_floor(q.denom());
        let hi = if rem.is_zero() { lo.clone() } else { &lo + 1 };
        Interval { lo, hi, prec }
    }

    /// Width in units of `2^-prec`.
    pub fn width(&self) -> BigInt {
        &self.hi - &self.lo
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    /// Re-express at a lower precision, rounding outward.
    pub fn coarsen(&self, prec: u32) -> Interval {
        debug_assert!(prec <= self.prec);
        let shift = self.prec - prec;
        Interval {
            lo: floor_shr(&self.lo, shift),
            hi: ceil_shr(&self.hi, shift),
            prec,
        }
    }

    /// Re-express at a higher precision (exact).
    pub fn refine_to(&self, prec: u32) -> Interval {
        debug_assert!(prec >= self.prec);
        let shift = prec - self.prec;
        Interval {
            lo: &self.lo << shift,
            hi: &self.hi << shift,
            prec,
        }
    }

    /// Intersection of two enclosures of the same value at the same precision.
    pub fn intersect(&self, other: &Interval) -> Interval {
        debug_assert_eq!(self.prec, other.prec);
        let lo = if self.lo > other.lo { &self.lo } else { &other.lo };
        let hi = if self.hi < other.hi { &self.hi } else { &other.hi };
        // Both enclose the true value, so they overlap.
        debug_assert!(lo <= hi);
        Interval {
            lo: lo.clone(),
            hi: hi.clone(),
            prec: self.prec,
        }
    }

    pub fn add(&self, o: &Interval) -> Interval {
        Interval {
            lo: &self.lo + &o.lo,
            hi: &self.hi + &o.hi,
            prec: self.prec,
        }
    }

    pub fn sub(&self, o: &Interval) -> Interval {
        Interval {
            lo: &self.lo - &o.hi,
            hi: &self.hi - &o.lo,
            prec: self.prec,
        }
    }

    pub fn mul(&self, o: &Interval) -> Interval {
        let p = self.prec;
        let c = [&self.lo * &o.lo, &self.lo * &o.hi, &self.hi * &o.lo, &self.hi * &o.hi];
        let min = c.iter().min().expect("four candidates");
        let max = c.iter().max().expect("four candidates");
        Interval {
            lo: floor_shr(min, p),
            hi: ceil_shr(max, p),
            prec: p,
        }
    }

    /// `None` when the divisor's enclosure still straddles zero.
    pub fn div(&self, o: &Interval) -> Option<Interval> {
        if o.contains_zero() {
            return None;
        }
        let p = self.prec;
        let mut lo: Option<BigInt> = None;
        let mut hi: Option<BigInt> = None;
        for a in [&self.lo, &self.hi] {
            let scaled = a << p;
            for b in [&o.lo, &o.hi] {
                let (q, r) = scaled.div_mod_floor(b);
                let up = if r.is_zero() { q.clone() } else { &q + 1 };
                if lo.as_ref().is_none_or(|l| q < *l) {
                    lo = Some(q);
                }
                if hi.as_ref().is_none_or(|h| up > *h) {
                    hi = Some(up);
                }
            }
        }
        Some(Interval {
            lo: lo.expect("candidates"),
            hi: hi.expect("candidates"),
            prec: p,
        })
    }

    /// Enclosure of the square root, for an operand known to be nonnegative.
    pub fn sqrt(&self) -> Interval {
        let p = self.prec;
        let clamp = |x: &BigInt| if x.is_negative() { BigInt::zero() } else { x.clone() };
        Interval {
            lo: (clamp(&self.lo) << p).sqrt(),
            hi: ceil_sqrt(&(clamp(&self.hi) << p)),
            prec: p,
        }
    }

    pub fn midpoint_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        let mid = BigRational::new(&self.lo + &self.hi, BigInt::one() << (self.prec + 1));
        mid.to_f64().unwrap_or(f64::NAN)
    }
}
