//! Exact scalars over the rationals or a prime field.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The coefficient field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Field {
    Rational,
    Prime { p: u64 },
}

impl Field {
    /// GF(p), rejecting composite or oversized moduli.
    pub fn prime(p: u64) -> Result<Field> {
        if !(2..(1 << 32)).contains(&p) || !is_prime(p) {
            return Err(Error::Schema(format!("{p} is not a supported prime modulus")));
        }
        Ok(Field::Prime { p })
    }

    /// Number of elements, if finite.
    pub fn size(&self) -> Option<u64> {
        match self {
            Field::Rational => None,
            Field::Prime { p } => Some(*p),
        }
    }

    pub fn zero(&self) -> FieldScalar {
        FieldScalar::from_int(*self, 0)
    }

    pub fn one(&self) -> FieldScalar {
        FieldScalar::from_int(*self, 1)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime { p } => write!(f, "GF({p})"),
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact field element. Rationals are kept in lowest terms with a
/// positive denominator; residues lie in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldScalar {
    Rational(BigRational),
    Prime { value: u64, p: u64 },
}

impl FieldScalar {
    pub fn from_int(field: Field, v: i64) -> FieldScalar {
        match field {
            Field::Rational => FieldScalar::Rational(BigRational::from_integer(BigInt::from(v))),
            Field::Prime { p } => FieldScalar::Prime { value: v.rem_euclid(p as i64) as u64, p },
        }
    }

    /// The rational `num/den`; fails on a zero denominator.
    pub fn rational(num: i64, den: i64) -> Result<FieldScalar> {
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(FieldScalar::Rational(BigRational::new(BigInt::from(num), BigInt::from(den))))
    }

    pub fn field(&self) -> Field {
        match self {
            FieldScalar::Rational(_) => Field::Rational,
            FieldScalar::Prime { p, .. } => Field::Prime { p: *p },
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldScalar::Rational(r) => r.is_zero(),
            FieldScalar::Prime { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldScalar::Rational(r) => r.is_one(),
            FieldScalar::Prime { value, .. } => *value == 1,
        }
    }

    fn same_field(&self, other: &FieldScalar) -> Result<()> {
        if self.field() == other.field() {
            Ok(())
        } else {
            Err(Error::FieldMismatch { left: self.field(), right: other.field() })
        }
    }

    pub fn checked_add(&self, other: &FieldScalar) -> Result<FieldScalar> {
        self.same_field(other)?;
        Ok(match (self, other) {
            (FieldScalar::Rational(a), FieldScalar::Rational(b)) => FieldScalar::Rational(a + b),
            (FieldScalar::Prime { value: a, p }, FieldScalar::Prime { value: b, .. }) => {
                FieldScalar::Prime { value: (a + b) % p, p: *p }
            }
            _ => unreachable!(),
        })
    }

    pub fn checked_sub(&self, other: &FieldScalar) -> Result<FieldScalar> {
        self.checked_add(&other.neg_ref())
    }

    pub fn checked_mul(&self, other: &FieldScalar) -> Result<FieldScalar> {
        self.same_field(other)?;
        Ok(match (self, other) {
            (FieldScalar::Rational(a), FieldScalar::Rational(b)) => FieldScalar::Rational(a * b),
            (FieldScalar::Prime { value: a, p }, FieldScalar::Prime { value: b, .. }) => {
                FieldScalar::Prime { value: ((*a as u128 * *b as u128) % *p as u128) as u64, p: *p }
            }
            _ => unreachable!(),
        })
    }

    pub fn checked_div(&self, other: &FieldScalar) -> Result<FieldScalar> {
        self.checked_mul(&other.inv()?)
    }

    /// Multiplicative inverse.
    pub fn inv(&self) -> Result<FieldScalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            FieldScalar::Rational(r) => FieldScalar::Rational(r.recip()),
            FieldScalar::Prime { value, p } => FieldScalar::Prime { value: pow_mod(*value, p - 2, *p), p: *p },
        })
    }

    fn neg_ref(&self) -> FieldScalar {
        match self {
            FieldScalar::Rational(r) => FieldScalar::Rational(-r),
            FieldScalar::Prime { value, p } => FieldScalar::Prime { value: (p - value) % p, p: *p },
        }
    }

    pub fn pow(&self, mut e: u64) -> FieldScalar {
        let mut base = self.clone();
        let mut acc = self.field().one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Literal form: `"a/b"` or `"a"` for rationals, the residue for GF(p).
    pub fn to_literal(&self) -> String {
        self.to_string()
    }

    /// Parses `"a/b"`, `"a"` or a signed integer into `field`.
    pub fn parse_literal(field: Field, s: &str) -> Result<FieldScalar> {
        let s = s.trim();
        let bad = || Error::Schema(format!("invalid scalar literal {s:?}"));
        match field {
            Field::Rational => {
                let (n, d) = match s.split_once('/') {
                    Some((n, d)) => (n.trim(), d.trim()),
                    None => (s, "1"),
                };
                let n: BigInt = n.parse().map_err(|_| bad())?;
                let d: BigInt = d.parse().map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                Ok(FieldScalar::Rational(BigRational::new(n, d)))
            }
            Field::Prime { p } => {
                if let Some((n, d)) = s.split_once('/') {
                    let n = FieldScalar::parse_literal(field, n)?;
                    let d = FieldScalar::parse_literal(field, d)?;
                    return n.checked_div(&d);
                }
                let v: BigInt = s.parse().map_err(|_| bad())?;
                let r = ((v % BigInt::from(p)) + BigInt::from(p)) % BigInt::from(p);
                let value: u64 = r.try_into().map_err(|_| bad())?;
                Ok(FieldScalar::Prime { value, p })
            }
        }
    }
}

fn pow_mod(b: u64, mut e: u64, p: u64) -> u64 {
    let m = p as u128;
    let mut acc = 1u128;
    let mut base = b as u128 % m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        e >>= 1;
    }
    acc as u64
}

impl fmt::Display for FieldScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldScalar::Rational(r) => {
                if r.is_integer() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            FieldScalar::Prime { value, .. } => write!(f, "{value}"),
        }
    }
}

// Operator forms panic on mixed fields; every structure in the crate keeps a
// single field, so a mismatch here is a programming error. Use the
// `checked_*` methods at trust boundaries.
macro_rules! binop {
    ($tr:ident, $m:ident, $checked:ident) => {
        impl $tr<&FieldScalar> for &FieldScalar {
            type Output = FieldScalar;
            fn $m(self, rhs: &FieldScalar) -> FieldScalar {
                self.$checked(rhs).expect("scalar operands from different fields")
            }
        }
        impl $tr<FieldScalar> for FieldScalar {
            type Output = FieldScalar;
            fn $m(self, rhs: FieldScalar) -> FieldScalar {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&FieldScalar> for FieldScalar {
            type Output = FieldScalar;
            fn $m(self, rhs: &FieldScalar) -> FieldScalar {
                (&self).$m(rhs)
            }
        }
        impl $tr<FieldScalar> for &FieldScalar {
            type Output = FieldScalar;
            fn $m(self, rhs: FieldScalar) -> FieldScalar {
                self.$m(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl Neg for FieldScalar {
    type Output = FieldScalar;
    fn neg(self) -> FieldScalar {
        self.neg_ref()
    }
}

impl Neg for &FieldScalar {
    type Output = FieldScalar;
    fn neg(self) -> FieldScalar {
        self.neg_ref()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_addition() {
        let a = FieldScalar::rational(1, 2).unwrap();
        let b = FieldScalar::rational(1, 3).unwrap();
        assert_eq!(a + b, FieldScalar::rational(5, 6).unwrap());
    }

    #[test]
    fn prime_inverse() {
        let f = Field::prime(7).unwrap();
        assert_eq!(FieldScalar::from_int(f, 3).inv().unwrap(), FieldScalar::from_int(f, 5));
    }

    #[test]
    fn mixed_fields_rejected() {
        let a = FieldScalar::from_int(Field::Rational, 1);
        let b = FieldScalar::from_int(Field::prime(7).unwrap(), 1);
        assert!(matches!(a.checked_add(&b), Err(Error::FieldMismatch { .. })));
    }

    #[test]
    fn zero_has_no_inverse() {
        assert_eq!(Field::Rational.zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn literals_round_trip() {
        let q = FieldScalar::parse_literal(Field::Rational, "-6/4").unwrap();
        assert_eq!(q.to_literal(), "-3/2");
        let f = Field::prime(7).unwrap();
        assert_eq!(FieldScalar::parse_literal(f, "-1").unwrap().to_literal(), "6");
        assert_eq!(FieldScalar::parse_literal(f, "1/3").unwrap().to_literal(), "5");
    }

    #[test]
    fn composite_modulus_rejected() {
        assert!(Field::prime(9).is_err());
    }
}
