//! Exact coefficient arithmetic over ℚ and 𝔽_p.
//!
//! A [`CoefficientField`] is a lightweight description of the field; the
//! elements themselves are [`Coeff`] values. All arithmetic goes through the
//! field so that prime-field reduction always knows the modulus.
//!
//! Invariants maintained by every constructor and operation:
//! * rationals are stored reduced with a positive denominator
//!   (guaranteed by `num_rational::BigRational`);
//! * prime-field elements lie in `[0, p)`;
//! * the characteristic is 0 or a prime.

use crate::{CaError, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use std::fmt;

/// An exact coefficient field: the rationals or a prime field 𝔽_p.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum CoefficientField {
    /// Arbitrary-precision rational numbers (characteristic 0).
    Rationals,
    /// The prime field with `p` elements.
    Prime(u64),
}

impl CoefficientField {
    /// Builds a field description, verifying primality of `p` when `p != 0`.
    pub fn new(characteristic: u64) -> Result<Self> {
        if characteristic == 0 {
            return Ok(CoefficientField::Rationals);
        }
        if !is_prime(characteristic) {
            return Err(CaError::NotPrime(characteristic));
        }
        Ok(CoefficientField::Prime(characteristic))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            CoefficientField::Rationals => 0,
            CoefficientField::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Coeff {
        match self {
            CoefficientField::Rationals => Coeff::Rat(BigRational::zero()),
            CoefficientField::Prime(_) => Coeff::Fp(0),
        }
    }

    pub fn one(&self) -> Coeff {
        match self {
            CoefficientField::Rationals => Coeff::Rat(BigRational::one()),
            CoefficientField::Prime(_) => Coeff::Fp(1),
        }
    }

    pub fn from_i64(&self, n: i64) -> Coeff {
        match self {
            CoefficientField::Rationals => Coeff::Rat(BigRational::from(BigInt::from(n))),
            CoefficientField::Prime(p) => {
                let r = n.rem_euclid(*p as i64) as u64;
                Coeff::Fp(r)
            }
        }
    }

    /// Element from an unsigned residue (handy for random sampling).
    pub fn from_u64(&self, n: u64) -> Coeff {
        match self {
            CoefficientField::Rationals => Coeff::Rat(BigRational::from(BigInt::from(n))),
            CoefficientField::Prime(p) => Coeff::Fp(n % p),
        }
    }

    pub fn is_zero(&self, a: &Coeff) -> bool {
        match a {
            Coeff::Rat(r) => r.is_zero(),
            Coeff::Fp(v) => *v == 0,
        }
    }

    pub fn add(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (CoefficientField::Rationals, Coeff::Rat(x), Coeff::Rat(y)) => Coeff::Rat(x + y),
            (CoefficientField::Prime(p), Coeff::Fp(x), Coeff::Fp(y)) => {
                let s = x + y;
                Coeff::Fp(if s >= *p { s - *p } else { s })
            }
            _ => panic!("coefficient does not belong to this field"),
        }
    }

    pub fn sub(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &Coeff) -> Coeff {
        match (self, a) {
            (CoefficientField::Rationals, Coeff::Rat(x)) => Coeff::Rat(-x),
            (CoefficientField::Prime(p), Coeff::Fp(x)) => {
                Coeff::Fp(if *x == 0 { 0 } else { *p - *x })
            }
            _ => panic!("coefficient does not belong to this field"),
        }
    }

    pub fn mul(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (CoefficientField::Rationals, Coeff::Rat(x), Coeff::Rat(y)) => Coeff::Rat(x * y),
            (CoefficientField::Prime(p), Coeff::Fp(x), Coeff::Fp(y)) => {
                Coeff::Fp(((*x as u128 * *y as u128) % (*p as u128)) as u64)
            }
            _ => panic!("coefficient does not belong to this field"),
        }
    }

    /// Multiplicative inverse of a nonzero element.
    pub fn inv(&self, a: &Coeff) -> Result<Coeff> {
        if self.is_zero(a) {
            return Err(CaError::DivisionByZero);
        }
        Ok(match (self, a) {
            (CoefficientField::Rationals, Coeff::Rat(x)) => Coeff::Rat(x.recip()),
            (CoefficientField::Prime(p), Coeff::Fp(x)) => Coeff::Fp(mod_inverse(*x, *p)),
            _ => panic!("coefficient does not belong to this field"),
        })
    }

    pub fn div(&self, a: &Coeff, b: &Coeff) -> Result<Coeff> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    pub fn eq(&self, a: &Coeff, b: &Coeff) -> bool {
        a == b
    }
}

/// An element of a coefficient field. Always interpret through the owning
/// [`CoefficientField`]; elements of different fields never mix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Coeff {
    Rat(BigRational),
    Fp(u64),
}

impl Coeff {
    /// Renders the coefficient; rationals as `a/b` (or `a`), prime-field
    /// elements as their canonical residue.
    pub fn render(&self) -> String {
        match self {
            Coeff::Rat(r) => {
                if r.denom().is_one() {
                    r.numer().to_string()
                } else {
                    format!("{}/{}", r.numer(), r.denom())
                }
            }
            Coeff::Fp(v) => v.to_string(),
        }
    }

    /// True when the coefficient prints with a leading minus sign.
    pub fn is_display_negative(&self) -> bool {
        match self {
            Coeff::Rat(r) => r.is_negative(),
            Coeff::Fp(_) => false,
        }
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

/// Deterministic trial-division primality test; moduli used here are small.
fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Inverse of `a` modulo prime `p` via the extended Euclidean algorithm.
fn mod_inverse(a: u64, p: u64) -> u64 {
    let (mut old_r, mut r) = (a as i128, p as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    debug_assert_eq!(old_r, 1, "inverse of a nonunit");
    old_s.rem_euclid(p as i128) as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_construction_rejects_composites() {
        assert!(CoefficientField::new(0).is_ok());
        assert!(CoefficientField::new(2).is_ok());
        assert!(CoefficientField::new(32003).is_ok());
        assert_eq!(CoefficientField::new(4), Err(CaError::NotPrime(4)));
        assert_eq!(CoefficientField::new(1), Err(CaError::NotPrime(1)));
    }

    #[test]
    fn rational_arithmetic_is_reduced() {
        let q = CoefficientField::Rationals;
        let half = q.div(&q.from_i64(1), &q.from_i64(2)).unwrap();
        let third = q.div(&q.from_i64(1), &q.from_i64(3)).unwrap();
        let sum = q.add(&half, &third);
        assert_eq!(sum.render(), "5/6");
        // Denominator stays positive after negation.
        assert_eq!(q.neg(&sum).render(), "-5/6");
        assert_eq!(q.mul(&sum, &q.from_i64(6)).render(), "5");
    }

    #[test]
    fn prime_field_elements_stay_reduced() {
        let f7 = CoefficientField::new(7).unwrap();
        let a = f7.from_i64(-3);
        assert_eq!(a, Coeff::Fp(4));
        let b = f7.from_i64(12);
        assert_eq!(b, Coeff::Fp(5));
        assert_eq!(f7.add(&a, &b), Coeff::Fp(2));
        assert_eq!(f7.mul(&a, &b), Coeff::Fp(6));
        let inv = f7.inv(&b).unwrap();
        assert_eq!(f7.mul(&b, &inv), Coeff::Fp(1));
    }

    #[test]
    fn inverse_in_large_prime_field() {
        let f = CoefficientField::new(32003).unwrap();
        for v in [1u64, 2, 1234, 32002] {
            let c = Coeff::Fp(v);
            let inv = f.inv(&c).unwrap();
            assert_eq!(f.mul(&c, &inv), Coeff::Fp(1));
        }
        assert_eq!(f.inv(&Coeff::Fp(0)), Err(CaError::DivisionByZero));
    }
}
