//! Orders in imaginary quadratic fields and their class semigroups.

mod classes;
mod forms;
mod lattice;

pub use classes::{enumerate_class_semigroup, exhaustive_sublattice_oracle, ClassRep, ClassTable};
pub use forms::{reduced_form_count, reduced_forms};
pub use lattice::{QuadElement, QuadField, QuadLattice};

use alloc::vec::Vec;

use crate::kernel::KernelError;
use crate::regularity::IdealArithmetic;
use crate::semigroup::SemigroupError;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum QuadError {
    #[error("{0} is not a valid discriminant")]
    BadDiscriminant(i64),
    #[error("{0} is not a fundamental discriminant")]
    NotFundamental(i64),
    #[error("real quadratic orders are not supported")]
    RealQuadraticUnsupported,
    #[error("conductor must be positive, got {0}")]
    BadConductor(i64),
    #[error("the zero ideal has no class")]
    ZeroIdeal,
    #[error("ideal has multiplier conductor {found}, expected {expected}")]
    WrongMultiplier { expected: i64, found: i64 },
    #[error("internal invariant violated: {0}")]
    InternalInvariant(&'static str),
    #[error("norm bound {bound} too small to close the multiplication table")]
    BoundTooSmall { bound: u64 },
    #[error(transparent)]
    Kernel(#[from] KernelError),
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
}

pub(crate) fn is_squarefree(n: i64) -> bool {
    let n = n.unsigned_abs();
    (2..).take_while(|p| p * p <= n).all(|p| !n.is_multiple_of(p * p))
}

pub fn is_fundamental_discriminant(d: i64) -> bool {
    match d.rem_euclid(4) {
        1 => d != 1 && is_squarefree(d),
        0 => {
            let m = d / 4;
            matches!(m.rem_euclid(4), 2 | 3) && is_squarefree(m)
        }
        _ => false,
    }
}

/// The order `O = Z + f·ω·Z` of conductor `f` in `Q(√d_K)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticOrder {
    dk: i64,
    f: i64,
    field: QuadField,
}

impl QuadraticOrder {
    pub fn new(dk: i64, f: i64) -> Result<Self, QuadError> {
        if dk > 0 && is_fundamental_discriminant(dk) {
            return Err(QuadError::RealQuadraticUnsupported);
        }
        if !matches!(dk.rem_euclid(4), 0 | 1) || dk >= 0 {
            return Err(QuadError::BadDiscriminant(dk));
        }
        if !is_fundamental_discriminant(dk) {
            return Err(QuadError::NotFundamental(dk));
        }
        if f < 1 {
            return Err(QuadError::BadConductor(f));
        }
        Ok(QuadraticOrder { dk, f, field: QuadField::new(dk) })
    }

    pub fn fundamental_discriminant(&self) -> i64 {
        self.dk
    }

    pub fn conductor(&self) -> i64 {
        self.f
    }

    /// `D = f²·d_K`.
    pub fn discriminant(&self) -> i64 {
        self.f * self.f * self.dk
    }

    pub fn field(&self) -> &QuadField {
        &self.field
    }

    /// Divisors of the conductor, ascending.
    pub fn conductor_divisors(&self) -> Vec<i64> {
        (1..=self.f).filter(|d| self.f % d == 0).collect()
    }

    /// The overorder of conductor `fp`, as a lattice.
    pub fn overorder(&self, fp: i64) -> QuadLattice {
        QuadLattice::order(fp)
    }

    pub fn unit_ideal(&self) -> QuadLattice {
        QuadLattice::order(self.f)
    }

    /// Whether `lattice` is a module over the order of conductor `fp`.
    pub fn is_module_over(&self, lattice: &QuadLattice, fp: i64) -> bool {
        let omega = QuadElement::integer(0, fp);
        lattice.basis_elements().iter().all(|q| lattice.contains(&self.field.mul(q, &omega)))
    }

    pub fn ideal_product(&self, a: &QuadLattice, b: &QuadLattice) -> QuadLattice {
        self.field.product(a, b)
    }

    pub fn colon(&self, a: &QuadLattice, b: &QuadLattice) -> QuadLattice {
        self.field.colon(a, b)
    }

    /// Conductor `f'` of the multiplier ring `(I:I) = O_{f'}`.
    pub fn multiplier_order(&self, ideal: &QuadLattice) -> Result<i64, QuadError> {
        let t = self.colon(ideal, ideal);
        let basis = t.basis();
        if !t.is_integral() || !num_traits::One::is_one(basis.a()) || !num_traits::Zero::is_zero(basis.b()) {
            return Err(QuadError::InternalInvariant("multiplier ring is not an order"));
        }
        let fp: i64 = i64::try_from(basis.d()).map_err(|_| QuadError::InternalInvariant("conductor overflow"))?;
        if self.f % fp != 0 {
            return Err(QuadError::InternalInvariant("multiplier ring does not contain the order"));
        }
        Ok(fp)
    }

    /// Index-norm of `ideal` relative to the order of conductor `fp`.
    pub fn norm_over(&self, ideal: &QuadLattice, fp: i64) -> num_rational::BigRational {
        ideal.determinant() / num_rational::BigRational::from_integer(fp.into())
    }

    /// Generator `q` with `q·O_{fp} = ideal`, when `O_{fp}` is the multiplier ring.
    pub fn is_principal_over(&self, ideal: &QuadLattice, fp: i64) -> Result<Option<QuadElement>, QuadError> {
        let found = self.multiplier_order(ideal)?;
        if found != fp {
            return Err(QuadError::WrongMultiplier { expected: fp, found });
        }
        Ok(self.field.find_scaling(&QuadLattice::order(fp), ideal))
    }

    /// `q` with `J = q·I`, if the two lattices are isomorphic.
    pub fn is_isomorphic(&self, i: &QuadLattice, j: &QuadLattice) -> Result<Option<QuadElement>, QuadError> {
        if self.multiplier_order(i)? != self.multiplier_order(j)? {
            return Ok(None);
        }
        Ok(self.field.find_scaling(i, j))
    }
}

impl IdealArithmetic for QuadraticOrder {
    type Ideal = QuadLattice;
    type Element = QuadElement;

    fn one(&self) -> QuadLattice {
        self.unit_ideal()
    }

    fn product(&self, a: &QuadLattice, b: &QuadLattice) -> QuadLattice {
        self.field.product(a, b)
    }

    fn colon(&self, a: &QuadLattice, b: &QuadLattice) -> QuadLattice {
        self.field.colon(a, b)
    }

    fn contains(&self, big: &QuadLattice, small: &QuadLattice) -> bool {
        big.contains_lattice(small)
    }

    fn find_scaling(&self, from: &QuadLattice, to: &QuadLattice) -> Option<QuadElement> {
        self.field.find_scaling(from, to)
    }

    fn scale(&self, c: &QuadElement, a: &QuadLattice) -> QuadLattice {
        a.scaled(&self.field, c)
    }
}
