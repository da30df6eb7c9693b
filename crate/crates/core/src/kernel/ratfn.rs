//! Nonzero rational functions over a [`BaseField`].

use core::fmt;

use super::field::BaseField;
use super::poly::Poly;

/// Nonzero rational function `num/den` with coprime parts and monic `den`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFn {
    num: Poly,
    den: Poly,
}

impl RatFn {
    pub fn new(num: Poly, den: Poly, field: &BaseField) -> Option<Self> {
        if num.is_zero() || den.is_zero() {
            return None;
        }
        let g = num.gcd(&den, field);
        let (num, den) = (num.div_exact(&g, field)?, den.div_exact(&g, field)?);
        let lead = den.leading()?.clone();
        let inv = field.inv(&lead)?;
        Some(RatFn { num: num.scale(&inv, field), den: den.scale(&inv, field) })
    }

    pub fn poly(p: Poly) -> Option<Self> {
        (!p.is_zero()).then(|| RatFn { num: p, den: Poly::one() })
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn mul(&self, other: &RatFn, field: &BaseField) -> RatFn {
        RatFn::new(self.num.mul(&other.num, field), self.den.mul(&other.den, field), field).expect("nonzero")
    }

    pub fn div(&self, other: &RatFn, field: &BaseField) -> RatFn {
        RatFn::new(self.num.mul(&other.den, field), self.den.mul(&other.num, field), field).expect("nonzero")
    }

    /// The polynomial `num/den`, if `den` is constant.
    pub fn as_poly(&self) -> Option<&Poly> {
        (self.den.degree() == Some(0)).then_some(&self.num)
    }

    /// Same function with the numerator made monic.
    pub fn monic(&self, field: &BaseField) -> RatFn {
        RatFn { num: self.num.monic(field), den: self.den.clone() }
    }
}

impl fmt::Display for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.degree() == Some(0) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}
