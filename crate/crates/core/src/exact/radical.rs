//! Square-factor extraction for radicands, so that `sqrt(p/q)` is stored as
//! `c * sqrt(m)` with `m` a square-free integer, and denesting of
//! `sqrt(a + b sqrt(m))` where it stays inside the field.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::field::Quadratic;

const TRIAL_LIMIT: usize = 100_000;

fn small_primes() -> &'static [u64] {
    use std::sync::OnceLock;
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let mut sieve = vec![true; TRIAL_LIMIT + 1];
        let mut out = Vec::new();
        for i in 2..=TRIAL_LIMIT {
            if sieve[i] {
                out.push(i as u64);
                let mut j = i * i;
                while j <= TRIAL_LIMIT {
                    sieve[j] = false;
                    j += i;
                }
            }
        }
        out
    })
}

/// Writes a positive integer `n` as `s^2 * m`.
///
/// After trial division by the primes below `10^5` the cofactor is checked for
/// being a perfect square, so `m` is square-free whenever the cofactor is
/// below `10^15`; larger cofactors are left as they are.
pub(crate) fn split_square(n: &BigInt) -> (BigInt, BigInt) {
    debug_assert!(n.is_positive());
    if let Some(small) = n.to_u64() {
        let (s, m) = split_square_u64(small);
        return (BigInt::from(s), BigInt::from(m));
    }
    let (mut s, mut free, mut m) = (BigInt::one(), BigInt::one(), n.clone());
    for &p in small_primes() {
        let p = BigInt::from(p);
        if &p * &p > m {
            break;
        }
        let mut e = 0u32;
        while m.is_multiple_of(&p) {
            m /= &p;
            e += 1;
        }
        s *= p.pow(e / 2);
        if e % 2 == 1 {
            free *= &p;
        }
    }
    let root = m.sqrt();
    if &root * &root == m {
        s *= root;
    } else {
        free *= m;
    }
    (s, free)
}

fn split_square_u64(mut m: u64) -> (u64, u64) {
    let (mut s, mut free) = (1u64, 1u64);
    for &p in small_primes() {
        if p.saturating_mul(p) > m {
            break;
        }
        let mut e = 0;
        while m.is_multiple_of(p) {
            m /= p;
            e += 1;
        }
        s *= p.pow(e / 2);
        if e % 2 == 1 {
            free *= p;
        }
    }
    let root = m.isqrt();
    if root * root == m {
        s *= root;
    } else {
        free *= m;
    }
    (s, free)
}

/// `sqrt(q) = c * sqrt(m)` for a nonnegative rational `q`; `m == 1` means rational.
pub(crate) fn sqrt_rational(q: &BigRational) -> (BigRational, BigInt) {
    if q.is_zero() {
        return (BigRational::zero(), BigInt::one());
    }
    debug_assert!(q.is_positive());
    // sqrt(p/d) = sqrt(p*d) / d
    let pd = q.numer() * q.denom();
    let (s, m) = split_square(&pd);
    (BigRational::new(s, q.denom().clone()), m)
}

/// `sqrt(a + b sqrt(m))` as an element of the same field when `a^2 - b^2 m`
/// is a rational square `d^2`: it is `sqrt((a + d) / 2) + sgn(b) sqrt((a - d) / 2)`.
pub(crate) fn denest(x: &Quadratic) -> Option<Quadratic> {
    let (a, b, m) = match x.terms() {
        [(one, a), (m, b)] if one.is_one() => (a.clone(), b.clone(), m.clone()),
        [(m, b)] => (BigRational::zero(), b.clone(), m.clone()),
        _ => return None,
    };
    let norm = &a * &a - &b * &b * BigRational::from_integer(m);
    if norm.is_negative() {
        return None;
    }
    let (d, rest) = sqrt_rational(&norm);
    if !rest.is_one() || !a.is_positive() {
        return None;
    }
    let two = BigRational::from_integer(2.into());
    let half_sum = sqrt_rational(&((&a + &d) / &two));
    let half_diff = sqrt_rational(&((&a - &d) / &two));
    let p = Quadratic::surd(half_sum.0, half_sum.1);
    let q = Quadratic::surd(half_diff.0, half_diff.1);
    Some(if b.is_positive() { p.add(&q) } else { p.sub(&q) })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn splits_small_composites() {
        assert_eq!(split_square(&BigInt::from(72)), (BigInt::from(6), BigInt::from(2)));
        assert_eq!(split_square(&BigInt::from(49)), (BigInt::from(7), BigInt::one()));
        assert_eq!(split_square(&BigInt::from(15)), (BigInt::one(), BigInt::from(15)));
    }

    #[test]
    fn large_prime_square_is_caught_by_perfect_square_check() {
        // 100003^2 is beyond trial division but the cofactor check sees it.
        let n = BigInt::from(100_003u64 * 100_003 * 3);
        assert_eq!(split_square(&n), (BigInt::from(100_003), BigInt::from(3)));
        let big = BigInt::from(100_003u64 * 100_003 * 3) << 71;
        let (s, m) = split_square(&big);
        assert_eq!(&s * &s * &m, big);
        assert_eq!(m, BigInt::from(6));
    }

    #[test]
    fn denests_single_radicals() {
        let r = |n: i64| BigRational::from_integer(n.into());
        // sqrt(5 + 2 sqrt 6) = sqrt 2 + sqrt 3
        let x = Quadratic::rational(r(5)).add(&Quadratic::surd(r(2), 6.into()));
        let expect = Quadratic::surd(r(1), 2.into()).add(&Quadratic::surd(r(1), 3.into()));
        assert_eq!(denest(&x), Some(expect));
        // sqrt(3 - 2 sqrt 2) = sqrt 2 - 1
        let x = Quadratic::rational(r(3)).sub(&Quadratic::surd(r(2), 2.into()));
        let expect = Quadratic::surd(r(1), 2.into()).sub(&Quadratic::rational(r(1)));
        assert_eq!(denest(&x), Some(expect));
        let x = Quadratic::rational(r(3)).add(&Quadratic::surd(r(1), 2.into()));
        assert_eq!(denest(&x), None);
    }

    #[test]
    fn sqrt_of_fraction() {
        let (c, m) = sqrt_rational(&BigRational::new(1.into(), 2.into()));
        assert_eq!(c, BigRational::new(1.into(), 2.into()));
        assert_eq!(m, BigInt::from(2));
        let (c, m) = sqrt_rational(&BigRational::new(9.into(), 4.into()));
        assert_eq!(c, BigRational::new(3.into(), 2.into()));
        assert_eq!(m, BigInt::one());
    }
}
