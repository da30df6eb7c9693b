//! `R = D + X·Q[X]` with `D = Z_(p)`, a pullback of `Q[X]` over a DVR.
//!
//! With `J_a = p^a·D + X·Q[X]` every nonzero fractional ideal is `h·J_a` for
//! a rational function `h`; `J_a·J_b = J_{a+b}` and `(J_a : J_b) = J_{a−b}`.
//! Scalars fold into the exponent, so `h` is kept with monic numerator.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::kernel::{BaseField, KernelError, Poly, RatFn, Scalar};
use crate::regularity::{ring_verdict, IdealArithmetic, RegularityReport, RingVerdict};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DvrRing {
    p: u64,
}

/// `h·(p^a·Z_(p) + X·Q[X])`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DvrIdeal {
    pub h: RatFn,
    pub a: i64,
}

fn valuation(n: &BigInt, p: &BigInt) -> i64 {
    let mut n = n.abs();
    let mut v = 0;
    while !n.is_zero() && (&n % p).is_zero() {
        n /= p;
        v += 1;
    }
    v
}

impl DvrRing {
    pub fn new(p: u64) -> Result<Self, KernelError> {
        BaseField::prime(p)?;
        Ok(DvrRing { p })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// `v_p` of a nonzero rational.
    pub fn valuation(&self, x: &Scalar) -> i64 {
        let p = BigInt::from(self.p);
        valuation(x.numer(), &p) - valuation(x.denom(), &p)
    }

    fn p_power(&self, a: i64) -> Scalar {
        let p = Scalar::from_integer(BigInt::from(self.p));
        if a >= 0 {
            num_traits::pow(p, a as usize)
        } else {
            num_traits::pow(p.recip(), (-a) as usize)
        }
    }

    pub fn ideal(&self, h: &RatFn, a: i64) -> DvrIdeal {
        let q = BaseField::Rationals;
        let lead = h.num().leading().expect("nonzero").clone();
        DvrIdeal { h: h.monic(&q), a: a + self.valuation(&lead) }
    }

    /// Generator `h·p^a`.
    pub fn generator(&self, ideal: &DvrIdeal) -> RatFn {
        let q = BaseField::Rationals;
        ideal.h.mul(&RatFn::poly(Poly::constant(self.p_power(ideal.a))).expect("nonzero"), &q)
    }

    /// `I = h·J_a` for `a ∈ 0..=max_a` and a fixed list of `h`.
    pub fn battery(&self, max_a: i64) -> Vec<DvrIdeal> {
        let q = BaseField::Rationals;
        let p = |c: &[i64]| Poly::new(c.iter().map(|&v| q.from_i64(v)).collect());
        let hs = [
            RatFn::poly(Poly::one()).expect("nonzero"),
            RatFn::poly(p(&[0, 1])).expect("nonzero"),
            RatFn::poly(p(&[1, 1])).expect("nonzero"),
            RatFn::poly(p(&[3, 0, 1])).expect("nonzero"),
            RatFn::new(p(&[1, 1]), p(&[0, 1]), &q).expect("nonzero"),
            RatFn::poly(p(&[6, -2])).expect("nonzero"),
        ];
        let mut out = Vec::new();
        for h in &hs {
            for a in 0..=max_a {
                out.push(self.ideal(h, a));
            }
        }
        out
    }
}

impl fmt::Display for DvrIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})*J_{}", self.h, self.a)
    }
}

impl IdealArithmetic for DvrRing {
    type Ideal = DvrIdeal;
    type Element = RatFn;

    fn one(&self) -> DvrIdeal {
        DvrIdeal { h: RatFn::poly(Poly::one()).expect("nonzero"), a: 0 }
    }

    fn product(&self, a: &DvrIdeal, b: &DvrIdeal) -> DvrIdeal {
        self.ideal(&a.h.mul(&b.h, &BaseField::Rationals), a.a + b.a)
    }

    fn colon(&self, a: &DvrIdeal, b: &DvrIdeal) -> DvrIdeal {
        self.ideal(&a.h.div(&b.h, &BaseField::Rationals), a.a - b.a)
    }

    /// `q·J_s ⊆ J_b` with `q = h_s/h_b` iff `q ∈ Q[X]` and `v_p(q(0)) ≥ b − s`.
    fn contains(&self, big: &DvrIdeal, small: &DvrIdeal) -> bool {
        let q = small.h.div(&big.h, &BaseField::Rationals);
        let Some(q) = q.as_poly() else { return false };
        let q0 = q.coeff(0);
        q0.is_zero() || self.valuation(&q0) >= big.a - small.a
    }

    fn find_scaling(&self, from: &DvrIdeal, to: &DvrIdeal) -> Option<RatFn> {
        let q = BaseField::Rationals;
        let ratio = to.h.div(&from.h, &q);
        let c = RatFn::poly(Poly::constant(self.p_power(to.a - from.a))).expect("nonzero");
        Some(ratio.mul(&c, &q))
    }

    fn scale(&self, c: &RatFn, a: &DvrIdeal) -> DvrIdeal {
        self.ideal(&a.h.mul(c, &BaseField::Rationals), a.a)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct DvrVerdict {
    pub p: u64,
    pub ideals: Vec<DvrIdeal>,
    pub verdict: RingVerdict,
    pub reports: Vec<RegularityReport<DvrIdeal, RatFn>>,
}

/// Regularity of the battery `h·J_a`, `0 ≤ a ≤ 3`.
pub fn dvr_coefficient_instance(p: u64) -> Result<DvrVerdict, KernelError> {
    let ring = DvrRing::new(p)?;
    let ideals = ring.battery(3);
    let (verdict, reports) = ring_verdict(&ring, &ideals, false, true).expect("nonempty battery");
    Ok(DvrVerdict { p, ideals, verdict, reports })
}
