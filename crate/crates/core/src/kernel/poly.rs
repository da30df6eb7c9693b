//! Univariate polynomials over a [`BaseField`], coefficients lowest degree first.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use super::field::{BaseField, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<Scalar>,
}

impl Poly {
    /// Coefficients must already be canonical in the intended field.
    pub fn new(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly { coeffs: vec![Scalar::one()] }
    }

    pub fn x_pow(field: &BaseField, n: usize) -> Self {
        let mut coeffs = vec![field.zero(); n + 1];
        coeffs[n] = field.one();
        Poly { coeffs }
    }

    pub fn constant(c: Scalar) -> Self {
        Self::new(vec![c])
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Scalar {
        self.coeffs.get(i).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &Poly, field: &BaseField) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..n).map(|i| field.add(&self.coeff(i), &other.coeff(i))).collect())
    }

    pub fn sub(&self, other: &Poly, field: &BaseField) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..n).map(|i| field.sub(&self.coeff(i), &other.coeff(i))).collect())
    }

    pub fn scale(&self, c: &Scalar, field: &BaseField) -> Poly {
        Poly::new(self.coeffs.iter().map(|x| field.mul(x, c)).collect())
    }

    pub fn mul(&self, other: &Poly, field: &BaseField) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = field.add(&out[i + j], &field.mul(a, b));
            }
        }
        Poly::new(out)
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn div_rem(&self, divisor: &Poly, field: &BaseField) -> (Poly, Poly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead_inv = field.inv(divisor.leading().expect("nonzero")).expect("nonzero");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![field.zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let top = rem.len() - 1;
            let c = field.mul(&rem[top], &lead_inv);
            let shift = top - dd;
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] = field.sub(&rem[shift + i], &field.mul(&c, d));
            }
            quot[shift] = c;
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        (Poly::new(quot), Poly::new(rem))
    }

    pub fn rem(&self, divisor: &Poly, field: &BaseField) -> Poly {
        self.div_rem(divisor, field).1
    }

    /// Exact quotient; `None` if `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Poly, field: &BaseField) -> Option<Poly> {
        let (q, r) = self.div_rem(divisor, field);
        r.is_zero().then_some(q)
    }

    pub fn monic(&self, field: &BaseField) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some(l) => self.scale(&field.inv(l).expect("nonzero leading coefficient"), field),
        }
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly, field: &BaseField) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b, field);
            a = b;
            b = r;
        }
        a.monic(field)
    }

    pub fn eval(&self, x: &Scalar, field: &BaseField) -> Scalar {
        self.coeffs.iter().rev().fold(field.zero(), |acc, c| field.add(&field.mul(&acc, x), c))
    }

    /// First `n` coefficients, zero padded.
    pub fn truncated_coeffs(&self, n: usize) -> Vec<Scalar> {
        (0..n).map(|i| self.coeff(i)).collect()
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = *c < Scalar::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = i == 0 || !mag.is_one();
            if show_coeff {
                if mag.is_integer() {
                    write!(f, "{mag}")?;
                } else {
                    write!(f, "({mag})")?;
                }
            }
            match i {
                0 => {}
                1 => write!(f, "{}X", if show_coeff { "*" } else { "" })?,
                _ => write!(f, "{}X^{i}", if show_coeff { "*" } else { "" })?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn p(field: &BaseField, cs: &[i64]) -> Poly {
        Poly::new(cs.iter().map(|&c| field.from_i64(c)).collect())
    }

    #[test]
    fn gcd_of_example_generators() {
        let q = BaseField::Rationals;
        let g = p(&q, &[-1, 0, 1]).gcd(&p(&q, &[-1, 0, 0, 1]), &q);
        assert_eq!(g, p(&q, &[-1, 1]));
    }

    #[test]
    fn division_identity() {
        let q = BaseField::Rationals;
        let a = p(&q, &[3, -2, 0, 5, 1]);
        let b = p(&q, &[1, 2, 2]);
        let (quot, rem) = a.div_rem(&b, &q);
        assert_eq!(quot.mul(&b, &q).add(&rem, &q), a);
        assert!(rem.degree().unwrap() < 2);
    }

    #[test]
    fn gcd_over_f5() {
        let f = BaseField::prime(5).unwrap();
        // X^2 - 1 = (X-1)(X+1), X^2 + 3X + 2 = (X+1)(X+2)
        let g = p(&f, &[-1, 0, 1]).gcd(&p(&f, &[2, 3, 1]), &f);
        assert_eq!(g, p(&f, &[1, 1]));
    }

    #[test]
    fn display_is_readable() {
        let q = BaseField::Rationals;
        assert_eq!(p(&q, &[-1, 0, 1]).to_string(), "X^2 - 1");
        assert_eq!(p(&q, &[0, 2, 0, -1]).to_string(), "-X^3 + 2*X");
        assert_eq!(Poly::zero().to_string(), "0");
    }
}
