//! Subrings `R = {h ∈ k[X] : h mod c ∈ D}` of a polynomial ring cut out by a
//! monic conductor `c` and a unital subalgebra `D ⊆ k[X]/(c)`.
//!
//! Since `c·k[X] ⊆ R`, every nonzero fractional ideal satisfies
//! `g·c·k[X] ⊆ I ⊆ g·k[X]` where `g·k[X] = I·k[X]`, so `I` is the pair
//! `(g, S)` with `S = (I/g) mod c`, a `D`-submodule of `k[X]/(c)`. The pair is
//! canonical once `g` is a monic rational function and the lifts of `S`
//! generate the unit ideal together with `c`.

use alloc::string::String;
use alloc::vec::Vec;

use crate::kernel::{Algebra, BaseField, KernelError, Poly, RatFn, Scalar, Subspace};
use crate::regularity::IdealArithmetic;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum WindowError {
    #[error("conductor must be monic of positive degree")]
    BadConductor,
    #[error("D is not a unital subalgebra of k[X]/(c)")]
    NotSubalgebra,
    #[error("the zero ideal has no class")]
    ZeroIdeal,
    #[error(transparent)]
    Kernel(#[from] KernelError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WindowRing {
    field: BaseField,
    conductor: Poly,
    quotient: Algebra,
    d: Subspace,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WindowIdeal {
    /// Monic generator of `I·k[X]`.
    pub g: RatFn,
    /// `(I/g) mod c`.
    pub subspace: Subspace,
}

impl WindowRing {
    pub fn new(field: &BaseField, conductor: &Poly, d: Subspace) -> Result<Self, WindowError> {
        if conductor.degree().unwrap_or(0) == 0 || conductor.leading() != Some(&field.one()) {
            return Err(WindowError::BadConductor);
        }
        let quotient = Algebra::polynomial_quotient(field, conductor.coeffs())?;
        if !quotient.is_unital_subalgebra(&d)? {
            return Err(WindowError::NotSubalgebra);
        }
        Ok(WindowRing { field: field.clone(), conductor: conductor.clone(), quotient, d })
    }

    /// `k + c·k[X]`.
    pub fn constants(field: &BaseField, conductor: &Poly) -> Result<Self, WindowError> {
        let m = conductor.degree().unwrap_or(0);
        Self::new(field, conductor, Subspace::coordinate(field, m, &[0]))
    }

    /// `D` spanned by the given polynomials reduced mod `c`.
    pub fn from_polys(field: &BaseField, conductor: &Poly, d: &[Poly]) -> Result<Self, WindowError> {
        let m = conductor.degree().unwrap_or(0);
        if m == 0 {
            return Err(WindowError::BadConductor);
        }
        let rows = d.iter().map(|p| p.rem(conductor, field).truncated_coeffs(m)).collect();
        Self::new(field, conductor, Subspace::span(field, m, rows)?)
    }

    pub fn field(&self) -> &BaseField {
        &self.field
    }

    pub fn conductor(&self) -> &Poly {
        &self.conductor
    }

    pub fn window_dim(&self) -> usize {
        self.quotient.dim()
    }

    pub fn quotient(&self) -> &Algebra {
        &self.quotient
    }

    pub fn d(&self) -> &Subspace {
        &self.d
    }

    fn reduce(&self, p: &Poly) -> Vec<Scalar> {
        p.rem(&self.conductor, &self.field).truncated_coeffs(self.window_dim())
    }

    fn lift(v: &[Scalar]) -> Poly {
        Poly::new(v.to_vec())
    }

    /// Whether `h` lies in `R`.
    pub fn contains_poly(&self, h: &Poly) -> bool {
        self.d.contains_vector(&self.reduce(h))
    }

    /// Brings `(g, S)` to canonical form by moving `gcd(c, lifts of S)` into `g`.
    fn normalize(&self, mut g: RatFn, mut s: Subspace) -> WindowIdeal {
        let f = &self.field;
        let m = self.window_dim();
        loop {
            let p = s.basis().iter().fold(self.conductor.clone(), |acc, v| acc.gcd(&Self::lift(v), f));
            if p.is_one() {
                return WindowIdeal { g: g.monic(f), subspace: s };
            }
            let cofactor = self.conductor.div_exact(&p, f).expect("p divides c");
            let mut rows: Vec<Vec<Scalar>> = s
                .basis()
                .iter()
                .map(|v| Self::lift(v).div_exact(&p, f).expect("p divides every lift").truncated_coeffs(m))
                .collect();
            for j in 0..p.degree().unwrap_or(0) {
                rows.push(self.reduce(&cofactor.mul(&Poly::x_pow(f, j), f)));
            }
            s = Subspace::span(f, m, rows).expect("rows have window dimension");
            g = g.mul(&RatFn::poly(p).expect("nonzero"), f);
        }
    }

    /// The ideal `Σ R·gᵢ`.
    pub fn ideal_from_generators(&self, gens: &[Poly]) -> Result<WindowIdeal, WindowError> {
        let f = &self.field;
        let gens: Vec<&Poly> = gens.iter().filter(|p| !p.is_zero()).collect();
        if gens.is_empty() {
            return Err(WindowError::ZeroIdeal);
        }
        let g = gens.iter().fold(Poly::zero(), |acc, p| acc.gcd(p, f));
        // D is an algebra, so D·span{hᵢ} is already D-closed.
        let mut rows = Vec::new();
        for p in gens {
            let h = self.reduce(&p.div_exact(&g, f).expect("gcd divides"));
            for d in self.d.basis() {
                rows.push(self.quotient.mul(d, &h));
            }
        }
        let s = Subspace::span(f, self.window_dim(), rows)?;
        Ok(self.normalize(RatFn::poly(g).expect("nonzero"), s))
    }

    pub fn unit_ideal(&self) -> WindowIdeal {
        WindowIdeal { g: RatFn::poly(Poly::one()).expect("nonzero"), subspace: self.d.clone() }
    }

    /// The overring `k[X]` as a fractional ideal.
    pub fn closure(&self) -> WindowIdeal {
        WindowIdeal {
            g: RatFn::poly(Poly::one()).expect("nonzero"),
            subspace: Subspace::full(&self.field, self.window_dim()),
        }
    }

    pub fn wproduct(&self, a: &WindowIdeal, b: &WindowIdeal) -> WindowIdeal {
        let s = self.quotient.module_product(&a.subspace, &b.subspace).expect("same window");
        self.normalize(a.g.mul(&b.g, &self.field), s)
    }

    pub fn wcolon(&self, a: &WindowIdeal, b: &WindowIdeal) -> WindowIdeal {
        let s = self.quotient.colon(&a.subspace, &b.subspace).expect("normalized subspaces are nonzero");
        self.normalize(a.g.div(&b.g, &self.field), s)
    }

    /// Whether the rational function `x` lies in `I`.
    pub fn contains_element(&self, ideal: &WindowIdeal, x: &RatFn) -> bool {
        match x.div(&ideal.g, &self.field).as_poly() {
            Some(h) => ideal.subspace.contains_vector(&self.reduce(h)),
            None => false,
        }
    }

    /// `small ⊆ big`.
    pub fn contains(&self, big: &WindowIdeal, small: &WindowIdeal) -> bool {
        let f = &self.field;
        let q = small.g.div(&big.g, f);
        let Some(q) = q.as_poly() else { return false };
        small.subspace.basis().iter().all(|v| big.subspace.contains_vector(&self.reduce(&q.mul(&Self::lift(v), f))))
    }

    /// Generator `q` with `q·T = I` for `T = (I:I)`, if any.
    pub fn is_principal_in(&self, ideal: &WindowIdeal, t: &WindowIdeal) -> Option<RatFn> {
        self.find_scaling(t, ideal)
    }

    /// Elements of the ideal of the form `g·(lift(s) + c·r)`.
    pub fn element(&self, ideal: &WindowIdeal, window_coords: &[Scalar], tail: &Poly) -> RatFn {
        let f = &self.field;
        let mut h = Poly::zero();
        for (coef, v) in window_coords.iter().zip(ideal.subspace.basis()) {
            h = h.add(&Self::lift(v).scale(coef, f), f);
        }
        h = h.add(&self.conductor.mul(tail, f), f);
        RatFn::poly(h).map(|h| h.mul(&ideal.g, f)).unwrap_or_else(|| ideal.g.clone())
    }
}

impl IdealArithmetic for WindowRing {
    type Ideal = WindowIdeal;
    type Element = RatFn;

    fn one(&self) -> WindowIdeal {
        self.unit_ideal()
    }

    fn product(&self, a: &WindowIdeal, b: &WindowIdeal) -> WindowIdeal {
        self.wproduct(a, b)
    }

    fn colon(&self, a: &WindowIdeal, b: &WindowIdeal) -> WindowIdeal {
        self.wcolon(a, b)
    }

    fn contains(&self, big: &WindowIdeal, small: &WindowIdeal) -> bool {
        WindowRing::contains(self, big, small)
    }

    /// Units of `k(X)` mapping `g_F·k[X]` onto `g_G·k[X]` are `λ·g_G/g_F`, and
    /// `λ ∈ k*` acts trivially, so the classes agree exactly when `S_F = S_G`.
    fn find_scaling(&self, from: &WindowIdeal, to: &WindowIdeal) -> Option<RatFn> {
        (from.subspace == to.subspace).then(|| to.g.div(&from.g, &self.field))
    }

    fn scale(&self, c: &RatFn, a: &WindowIdeal) -> WindowIdeal {
        WindowIdeal { g: a.g.mul(c, &self.field).monic(&self.field), subspace: a.subspace.clone() }
    }
}

impl WindowIdeal {
    /// Human-readable description, e.g. `(X - 1)·span{(1, 1)}`.
    pub fn describe(&self) -> String {
        alloc::format!("({})*{}", self.g, self.subspace)
    }
}
