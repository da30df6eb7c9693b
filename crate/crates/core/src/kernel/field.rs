//! Base fields: the rationals and prime fields, both carried on `BigRational`.
//!
//! Prime-field elements are stored as integers in `[0, p)`. Every value that
//! enters arithmetic goes through [`BaseField::reduce`], so the two fields
//! share one scalar type and one linear-algebra path.

use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::KernelError;

pub type Scalar = BigRational;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum BaseField {
    Rationals,
    Prime(u64),
}

impl BaseField {
    /// Builds `F_p`, rejecting composite or tiny moduli.
    pub fn prime(p: u64) -> Result<Self, KernelError> {
        if p < 2 || (2..).take_while(|d| d * d <= p).any(|d| p.is_multiple_of(d)) {
            return Err(KernelError::NotPrime(p));
        }
        Ok(BaseField::Prime(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            BaseField::Rationals => 0,
            BaseField::Prime(p) => *p,
        }
    }

    /// Maps an arbitrary rational into the field.
    ///
    /// For `F_p` the denominator must be prime to `p`.
    pub fn reduce(&self, q: &BigRational) -> Result<Scalar, KernelError> {
        match self {
            BaseField::Rationals => Ok(q.clone()),
            BaseField::Prime(p) => {
                let p = BigInt::from(*p);
                let den = q.denom().mod_floor(&p);
                if den.is_zero() {
                    return Err(KernelError::NotInvertible);
                }
                let num = q.numer().mod_floor(&p);
                let inv = mod_inverse(&den, &p);
                Ok(BigRational::from_integer((num * inv).mod_floor(&p)))
            }
        }
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        self.reduce(&BigRational::from_integer(v.into())).expect("integers always reduce")
    }

    pub fn zero(&self) -> Scalar {
        Scalar::zero()
    }

    pub fn one(&self) -> Scalar {
        Scalar::one()
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.wrap(a + b)
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.wrap(a - b)
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        self.wrap(-a)
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.wrap(a * b)
    }

    pub fn inv(&self, a: &Scalar) -> Option<Scalar> {
        if a.is_zero() {
            return None;
        }
        match self {
            BaseField::Rationals => Some(a.recip()),
            BaseField::Prime(p) => {
                let p = BigInt::from(*p);
                Some(BigRational::from_integer(mod_inverse(a.numer(), &p)))
            }
        }
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Option<Scalar> {
        self.inv(b).map(|ib| self.mul(a, &ib))
    }

    // Sums and products of reduced F_p values stay integral, so only a mod is needed.
    fn wrap(&self, v: BigRational) -> Scalar {
        match self {
            BaseField::Rationals => v,
            BaseField::Prime(p) => {
                debug_assert!(v.is_integer());
                BigRational::from_integer(v.to_integer().mod_floor(&BigInt::from(*p)))
            }
        }
    }

    /// Whether `v` is a canonical element of this field.
    pub fn is_canonical(&self, v: &Scalar) -> bool {
        match self {
            BaseField::Rationals => true,
            BaseField::Prime(p) => v.is_integer() && !v.is_negative() && v.to_integer() < BigInt::from(*p),
        }
    }
}

impl fmt::Display for BaseField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseField::Rationals => write!(f, "Q"),
            BaseField::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

fn mod_inverse(a: &BigInt, p: &BigInt) -> BigInt {
    let e = a.mod_floor(p).extended_gcd(p);
    debug_assert!(e.gcd.is_one());
    e.x.mod_floor(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn prime_field_reduces_fractions() {
        let f5 = BaseField::prime(5).unwrap();
        // 1/2 = 3 in F_5
        assert_eq!(f5.reduce(&q(1, 2)).unwrap(), q(3, 1));
        assert_eq!(f5.reduce(&q(-1, 1)).unwrap(), q(4, 1));
        assert!(f5.reduce(&q(1, 5)).is_err());
    }

    #[test]
    fn prime_field_inverse() {
        let f7 = BaseField::prime(7).unwrap();
        for a in 1..7 {
            let x = f7.from_i64(a);
            let y = f7.inv(&x).unwrap();
            assert_eq!(f7.mul(&x, &y), f7.one());
        }
        assert!(f7.inv(&f7.zero()).is_none());
    }

    #[test]
    fn composite_modulus_rejected() {
        assert!(BaseField::prime(9).is_err());
        assert!(BaseField::prime(1).is_err());
        assert!(BaseField::prime(2).is_ok());
    }
}
