//! Elements of multiquadratic fields `Q(sqrt m1, sqrt m2, ...)`.
//!
//! An element is a sum `c_1 sqrt(n_1) + ... + c_k sqrt(n_k)` over distinct
//! square-free positive integers `n_i` (`n = 1` is the rational part). Square
//! roots of distinct square-free integers are linearly independent over the
//! rationals, so this form is canonical and an element is zero exactly when
//! it has no terms.
//!
//! Sign and inversion split off one generator at a time: with `g` a member of
//! a pairwise coprime base of the radicands, `x = u + v sqrt(g)` where `u`, `v`
//! no longer involve `g`, and `u^2 - g v^2` involves one generator fewer.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub(crate) struct Quadratic {
    /// Sorted by radicand, no zero coefficients.
    terms: Vec<(BigInt, BigRational)>,
}

impl Quadratic {
    pub fn rational(q: BigRational) -> Self {
        Quadratic::surd(q, BigInt::one())
    }

    /// `c sqrt(m)` for a square-free `m >= 1`.
    pub fn surd(c: BigRational, m: BigInt) -> Self {
        let mut out = Quadratic::default();
        out.push(m, c);
        out
    }

    pub fn terms(&self) -> &[(BigInt, BigRational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        match self.terms.as_slice() {
            [] => Some(BigRational::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    /// Coefficient of the term with the smallest radicand.
    pub fn leading(&self) -> Option<&BigRational> {
        self.terms.first().map(|(_, c)| c)
    }

    fn push(&mut self, m: BigInt, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.binary_search_by(|(n, _)| n.cmp(&m)) {
            Ok(i) => {
                self.terms[i].1 += c;
                if self.terms[i].1.is_zero() {
                    self.terms.remove(i);
                }
            }
            Err(i) => self.terms.insert(i, (m, c)),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.push(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        Quadratic {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        if q.is_zero() {
            return Quadratic::default();
        }
        Quadratic {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * q)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Quadratic::default();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                // sqrt(g a) sqrt(g b) = g sqrt(a b), and a b stays square-free
                let g = m1.gcd(m2);
                let radicand = (m1 / &g) * (m2 / &g);
                out.push(radicand, c1 * c2 * BigRational::from_integer(g));
            }
        }
        out
    }

    pub fn square(&self) -> Self {
        self.mul(self)
    }

    /// `u + v sqrt(g)` for the first generator `g` of a coprime base of the radicands.
    fn split(&self) -> Option<(Self, Self, BigInt)> {
        let base = coprime_base(self.terms.iter().map(|(m, _)| m));
        let g = base.into_iter().next()?;
        let (mut u, mut v) = (Quadratic::default(), Quadratic::default());
        for (m, c) in &self.terms {
            let (q, r) = m.div_rem(&g);
            if r.is_zero() {
                v.push(q, c.clone());
            } else {
                u.push(m.clone(), c.clone());
            }
        }
        Some((u, v, g))
    }

    pub fn sign(&self) -> i8 {
        if let Some(q) = self.as_rational() {
            return signum(&q);
        }
        if let [(_, c)] = self.terms.as_slice() {
            return signum(c);
        }
        let (u, v, g) = self.split().expect("irrational element has a generator");
        let (su, sv) = (u.sign(), v.sign());
        if su == 0 {
            return sv;
        }
        if sv == 0 || su == sv {
            return su;
        }
        let diff = u.square().sub(&v.square().scale(&BigRational::from_integer(g)));
        match diff.sign().cmp(&0) {
            Ordering::Greater => su,
            Ordering::Less => sv,
            Ordering::Equal => 0,
        }
    }

    pub fn inverse(&self) -> Option<Self> {
        if let Some(q) = self.as_rational() {
            return (!q.is_zero()).then(|| Quadratic::rational(q.recip()));
        }
        if let [(m, c)] = self.terms.as_slice() {
            // 1 / (c sqrt(m)) = sqrt(m) / (c m)
            return Some(Quadratic::surd((c * BigRational::from_integer(m.clone())).recip(), m.clone()));
        }
        let (u, v, g) = self.split()?;
        let root = Quadratic::surd(BigRational::one(), g.clone());
        let conjugate = u.sub(&v.mul(&root));
        let norm = u.square().sub(&v.square().scale(&BigRational::from_integer(g)));
        Some(conjugate.mul(&norm.inverse()?))
    }
}

fn signum(q: &BigRational) -> i8 {
    if q.is_positive() {
        1
    } else if q.is_negative() {
        -1
    } else {
        0
    }
}

/// Pairwise coprime integers `> 1` whose products give every input.
fn coprime_base<'a>(ms: impl Iterator<Item = &'a BigInt>) -> Vec<BigInt> {
    let mut base: Vec<BigInt> = Vec::new();
    let mut pending: Vec<BigInt> = ms.filter(|m| !m.is_one()).cloned().collect();
    'next: while let Some(x) = pending.pop() {
        if x.is_one() {
            continue;
        }
        for i in 0..base.len() {
            let g = x.gcd(&base[i]);
            if g.is_one() {
                continue;
            }
            if g == x && g == base[i] {
                continue 'next;
            }
            let b = base.swap_remove(i);
            pending.push(&b / &g);
            pending.push(&x / &g);
            pending.push(g);
            continue 'next;
        }
        base.push(x);
    }
    base.sort();
    base
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn s(c: i64, m: i64) -> Quadratic {
        Quadratic::surd(r(c), m.into())
    }

    #[test]
    fn products_reduce_radicands() {
        // sqrt 6 * sqrt 10 = 2 sqrt 15
        assert_eq!(s(1, 6).mul(&s(1, 10)), s(2, 15));
        assert_eq!(s(1, 2).mul(&s(1, 2)), s(2, 1));
        let x = s(1, 1).add(&s(1, 2));
        // (1 + sqrt 2)^2 = 3 + 2 sqrt 2
        assert_eq!(x.square(), s(3, 1).add(&s(2, 2)));
    }

    #[test]
    fn signs_without_approximation() {
        // sqrt 2 + sqrt 3 - sqrt 10 < 0 since 5 + 2 sqrt 6 < 10
        let x = s(1, 2).add(&s(1, 3)).sub(&s(1, 10));
        assert_eq!(x.sign(), -1);
        // sqrt 2 + sqrt 3 - sqrt 5 > 0
        assert_eq!(s(1, 2).add(&s(1, 3)).sub(&s(1, 5)).sign(), 1);
        assert_eq!(s(3, 1).sub(&s(2, 2)).sign(), 1);
        assert_eq!(s(1, 1).sub(&s(1, 2)).sign(), -1);
        assert_eq!(s(1, 2).sub(&s(1, 2)).sign(), 0);
    }

    #[test]
    fn inverses() {
        let xs = [
            s(1, 1).add(&s(1, 2)),
            s(1, 2).add(&s(1, 3)).add(&s(1, 5)),
            s(2, 6).sub(&s(1, 1)).add(&s(3, 10)),
        ];
        for x in xs {
            assert_eq!(x.mul(&x.inverse().unwrap()), s(1, 1));
        }
        assert!(Quadratic::default().inverse().is_none());
    }

    #[test]
    fn coprime_bases() {
        let ms: Vec<BigInt> = [6, 10, 15].iter().map(|&m| BigInt::from(m)).collect();
        let base = coprime_base(ms.iter());
        assert_eq!(base, vec![BigInt::from(2), BigInt::from(3), BigInt::from(5)]);
        let ms: Vec<BigInt> = [6, 6, 35].iter().map(|&m| BigInt::from(m)).collect();
        assert_eq!(coprime_base(ms.iter()), vec![BigInt::from(6), BigInt::from(35)]);
    }
}
