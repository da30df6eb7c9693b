//! Elements and full-rank lattices of an imaginary quadratic field, in
//! coordinates on the maximal-order basis `(1, ω)` with `ω = (d_K + √d_K)/2`.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::kernel::hnf::{self, IntMat2};
use crate::kernel::hnf2;

use super::QuadError;

/// `x + y·ω` with rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadElement {
    pub x: BigRational,
    pub y: BigRational,
}

impl QuadElement {
    pub fn new(x: BigRational, y: BigRational) -> Self {
        QuadElement { x, y }
    }

    pub fn integer(x: i64, y: i64) -> Self {
        QuadElement::new(BigRational::from_integer(x.into()), BigRational::from_integer(y.into()))
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }
}

impl fmt::Display for QuadElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.x.is_zero(), self.y.is_zero()) {
            (_, true) => write!(f, "{}", self.x),
            (true, false) => write!(f, "{}w", self.y),
            (false, false) => write!(f, "{}{}{}w", self.x, if self.y.is_negative() { "" } else { "+" }, self.y),
        }
    }
}

/// Multiplication data of `Q(√d_K)`: `ω² = d_K·ω − n_K` with `n_K = (d_K² − d_K)/4`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadField {
    dk: BigInt,
    nk: BigInt,
}

impl QuadField {
    pub fn new(dk: i64) -> Self {
        let dk = BigInt::from(dk);
        let nk = (&dk * &dk - &dk) / 4;
        QuadField { dk, nk }
    }

    pub fn dk(&self) -> &BigInt {
        &self.dk
    }

    pub fn mul(&self, a: &QuadElement, b: &QuadElement) -> QuadElement {
        let yy = &a.y * &b.y;
        let nk = BigRational::from_integer(self.nk.clone());
        let dk = BigRational::from_integer(self.dk.clone());
        QuadElement { x: &a.x * &b.x - &yy * nk, y: &a.x * &b.y + &a.y * &b.x + yy * dk }
    }

    /// Galois conjugate: `ω ↦ d_K − ω`.
    pub fn conj(&self, a: &QuadElement) -> QuadElement {
        QuadElement { x: &a.x + &a.y * BigRational::from_integer(self.dk.clone()), y: -a.y.clone() }
    }

    /// `N(x + yω) = x² + d_K·xy + n_K·y²`, nonnegative for `d_K < 0`.
    pub fn norm(&self, a: &QuadElement) -> BigRational {
        let dk = BigRational::from_integer(self.dk.clone());
        let nk = BigRational::from_integer(self.nk.clone());
        &a.x * &a.x + dk * &a.x * &a.y + nk * &a.y * &a.y
    }

    pub fn inverse(&self, a: &QuadElement) -> Option<QuadElement> {
        let n = self.norm(a);
        if n.is_zero() {
            return None;
        }
        let c = self.conj(a);
        Some(QuadElement { x: c.x / &n, y: c.y / n })
    }

    /// Product of two lattices: HNF of the four basis products.
    pub fn product(&self, a: &QuadLattice, b: &QuadLattice) -> QuadLattice {
        let ea = a.basis_elements();
        let eb = b.basis_elements();
        let gens: Vec<QuadElement> =
            ea.iter().flat_map(|x| eb.iter().map(move |y| (x, y))).map(|(x, y)| self.mul(x, y)).collect();
        QuadLattice::from_elements(&gens).expect("product of full-rank lattices has full rank")
    }

    /// `(a : b) = {x : x·b ⊆ a}`, the intersection of `β⁻¹·a` over a basis `β` of `b`.
    pub fn colon(&self, a: &QuadLattice, b: &QuadLattice) -> QuadLattice {
        let pieces: Vec<QuadLattice> = b
            .basis_elements()
            .iter()
            .map(|beta| {
                let inv = self.inverse(beta).expect("basis elements are nonzero");
                a.scaled(self, &inv)
            })
            .collect();
        pieces[0].intersect(&pieces[1])
    }

    /// All elements of `lattice` with norm exactly `target`.
    ///
    /// With `q = (X + Yω)/e`, `4N = (2X + d_K Y)² + |d_K| Y²`, so `Y` and then
    /// `X` range over a finite set.
    pub fn elements_of_norm(&self, lattice: &QuadLattice, target: &BigRational) -> Vec<QuadElement> {
        let e = &lattice.denom;
        let scaled = target * BigRational::from_integer(e * e);
        if !scaled.is_integer() || scaled.is_negative() {
            return Vec::new();
        }
        let t = scaled.to_integer();
        if t.is_zero() {
            return Vec::new();
        }
        let (a, b, d) = (lattice.basis.a(), lattice.basis.b(), lattice.basis.d());
        let abs_dk = self.dk.abs();
        let four_t: BigInt = &t * 4;
        let y_max = (&four_t / &abs_dk).sqrt();
        let v_max = &y_max / d;
        let mut out = Vec::new();
        let mut v = -v_max.clone();
        while v <= v_max {
            let y = &v * d;
            let r = &four_t - &abs_dk * &y * &y;
            if !r.is_negative() {
                let s = r.sqrt();
                if &s * &s == r {
                    let mut roots = alloc::vec![s.clone()];
                    if !s.is_zero() {
                        roots.push(-s);
                    }
                    for root in roots {
                        let two_x = -&self.dk * &y + root;
                        if two_x.is_odd() {
                            continue;
                        }
                        let x: BigInt = two_x / 2;
                        if ((&x - &v * b) % a).is_zero() {
                            out.push(QuadElement::new(
                                BigRational::new(x, e.clone()),
                                BigRational::new(y.clone(), e.clone()),
                            ));
                        }
                    }
                }
            }
            v += 1;
        }
        out
    }

    /// Some `c` with `c·from = to`.
    pub fn find_scaling(&self, from: &QuadLattice, to: &QuadLattice) -> Option<QuadElement> {
        let candidates = self.colon(to, from);
        let target = to.determinant() / from.determinant();
        self.elements_of_norm(&candidates, &target).into_iter().find(|c| &from.scaled(self, c) == to)
    }
}

/// `(1/denom)·L` with `L` an integer lattice in HNF and `gcd(denom, content(L)) = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuadLattice {
    denom: BigInt,
    basis: IntMat2,
}

impl QuadLattice {
    fn normalized(denom: BigInt, basis: IntMat2) -> Self {
        let g = basis.content().gcd(&denom);
        if g.is_one() {
            QuadLattice { denom, basis }
        } else {
            QuadLattice { denom: denom / &g, basis: basis.divided(&g) }
        }
    }

    /// Lattice with integral HNF basis `(a, 0), (b, d)`.
    pub fn from_hnf(basis: IntMat2) -> Self {
        Self::normalized(BigInt::one(), basis)
    }

    /// The order of conductor `f`: `Z + f·ω·Z`.
    pub fn order(f: i64) -> Self {
        Self::from_hnf(IntMat2::upper(BigInt::one(), BigInt::zero(), f.into()))
    }

    pub fn from_elements(gens: &[QuadElement]) -> Result<Self, QuadError> {
        let denom = gens.iter().fold(BigInt::one(), |acc, g| acc.lcm(g.x.denom()).lcm(g.y.denom()));
        let d = BigRational::from_integer(denom.clone());
        let pairs: Vec<(BigInt, BigInt)> =
            gens.iter().map(|g| ((&g.x * &d).to_integer(), (&g.y * &d).to_integer())).collect();
        let basis = hnf2(&pairs).map_err(|_| QuadError::ZeroIdeal)?;
        Ok(Self::normalized(denom, basis))
    }

    pub fn denom(&self) -> &BigInt {
        &self.denom
    }

    pub fn basis(&self) -> &IntMat2 {
        &self.basis
    }

    pub fn basis_elements(&self) -> [QuadElement; 2] {
        let e = &self.denom;
        let [c1, c2] = self.basis.columns();
        [
            QuadElement::new(BigRational::new(c1.0, e.clone()), BigRational::new(c1.1, e.clone())),
            QuadElement::new(BigRational::new(c2.0, e.clone()), BigRational::new(c2.1, e.clone())),
        ]
    }

    /// Covolume in `(1, ω)` coordinates.
    pub fn determinant(&self) -> BigRational {
        BigRational::new(self.basis.determinant(), &self.denom * &self.denom)
    }

    pub fn contains(&self, q: &QuadElement) -> bool {
        let e = BigRational::from_integer(self.denom.clone());
        let (x, y) = (&q.x * &e, &q.y * &e);
        x.is_integer() && y.is_integer() && self.basis.contains(&x.to_integer(), &y.to_integer())
    }

    /// Every basis element of `other` lies in `self`.
    pub fn contains_lattice(&self, other: &QuadLattice) -> bool {
        other.basis_elements().iter().all(|q| self.contains(q))
    }

    pub fn scaled(&self, field: &QuadField, c: &QuadElement) -> QuadLattice {
        let gens: Vec<QuadElement> = self.basis_elements().iter().map(|q| field.mul(q, c)).collect();
        QuadLattice::from_elements(&gens).expect("scaling by a nonzero element")
    }

    pub fn intersect(&self, other: &QuadLattice) -> QuadLattice {
        let e = self.denom.lcm(&other.denom);
        let l1 = self.basis.scaled(&(&e / &self.denom));
        let l2 = other.basis.scaled(&(&e / &other.denom));
        Self::normalized(e, hnf::intersect(&l1, &l2))
    }

    pub fn is_integral(&self) -> bool {
        self.denom.is_one()
    }
}

impl fmt::Display for QuadLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b, d) = (self.basis.a(), self.basis.b(), self.basis.d());
        if self.denom.is_one() {
            write!(f, "<{a}, {b}+{d}w>")
        } else {
            write!(f, "(1/{})<{a}, {b}+{d}w>", self.denom)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lat(a: i64, b: i64, d: i64) -> QuadLattice {
        QuadLattice::from_hnf(IntMat2::upper(a.into(), b.into(), d.into()))
    }

    #[test]
    fn norm_and_inverse() {
        let k = QuadField::new(-3);
        // ω = (-3 + √-3)/2 has norm (9 + 3)/4 = 3
        let w = QuadElement::integer(0, 1);
        assert_eq!(k.norm(&w), BigRational::from_integer(3.into()));
        let z = QuadElement::integer(2, 3);
        let inv = k.inverse(&z).unwrap();
        assert_eq!(k.mul(&z, &inv), QuadElement::integer(1, 0));
    }

    #[test]
    fn scaling_law_for_products() {
        let k = QuadField::new(-15);
        let i = lat(2, 0, 1);
        let j = lat(3, 1, 1);
        let q = QuadElement::new(BigRational::new(1.into(), 3.into()), BigRational::from_integer(1.into()));
        assert_eq!(k.product(&i.scaled(&k, &q), &j), k.product(&i, &j).scaled(&k, &q));
    }

    #[test]
    fn elements_of_norm_in_maximal_order() {
        let k = QuadField::new(-4);
        // ω = i; norm-5 elements of Z[i] are ±1±2i, ±2±i: 8 of them
        let found = k.elements_of_norm(&lat(1, 0, 1), &BigRational::from_integer(5.into()));
        assert_eq!(found.len(), 8);
        for q in &found {
            assert_eq!(k.norm(q), BigRational::from_integer(5.into()));
        }
    }

    #[test]
    fn colon_contains_and_is_maximal() {
        let k = QuadField::new(-3);
        let i = lat(2, 1, 2);
        let j = lat(4, 0, 2);
        let c = k.colon(&i, &j);
        assert!(i.contains_lattice(&k.product(&c, &j)));
        // Any strictly larger lattice c + Z·(v/2) fails containment.
        for v in c.basis_elements() {
            let half =
                QuadElement::new(v.x / BigRational::from_integer(2.into()), v.y / BigRational::from_integer(2.into()));
            let bigger =
                QuadLattice::from_elements(&[c.basis_elements()[0].clone(), c.basis_elements()[1].clone(), half])
                    .unwrap();
            assert!(!i.contains_lattice(&k.product(&bigger, &j)));
        }
    }
}
