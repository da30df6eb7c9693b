//! Exact arithmetic foundations shared by every ring family.

pub mod algebra;
pub mod field;
pub mod hnf;
pub mod linalg;
pub mod poly;
pub mod ratfn;
pub mod subspace;

pub use algebra::{Algebra, FieldTower};
pub use field::{BaseField, Scalar};
pub use hnf::{hnf2, IntMat2};
pub use poly::Poly;
pub use ratfn::RatFn;
pub use subspace::Subspace;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum KernelError {
    #[error("generators span a lattice of rank < 2")]
    RankDeficient,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("operands live over different base fields")]
    FieldMismatch,
    #[error("colon by the zero subspace")]
    ZeroDivisor,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("value is not invertible in the base field")]
    NotInvertible,
    #[error("algebra has dimension zero")]
    EmptyAlgebra,
    #[error("structure constants have the wrong shape")]
    BadStructureConstants,
    #[error("basis vector 0 is not a multiplicative identity")]
    NoIdentity,
    #[error("multiplication is not commutative at basis pair ({i}, {j})")]
    NotCommutative { i: usize, j: usize },
    #[error("multiplication is not associative at basis triple ({i}, {j}, {k})")]
    NotAssociative { i: usize, j: usize, k: usize },
    #[error("algebra has a nonzero non-invertible element")]
    NotAField,
    #[error("modulus must be monic of positive degree")]
    BadModulus,
}
