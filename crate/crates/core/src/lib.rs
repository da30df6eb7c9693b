//! Exact class-semigroup computations for concretely representable domains.
//!
//! The crate builds the semigroup of isomorphy classes of nonzero fractional
//! ideals for three ring families and decides, ideal by ideal, whether each
//! class is regular, stable, strongly stable and L-stable:
//!
//! * [`quadratic`]: orders in imaginary quadratic fields, ideals as 2×2
//!   integer lattices in Hermite normal form;
//! * [`window`]: subrings `{h ∈ k[X] : h mod c ∈ D}` of a polynomial ring,
//!   ideals as a scaling polynomial plus a subspace of `k[X]/(c)`;
//! * [`pvd`]: pullbacks `k + X·K[[X]]` and `D + X·K[X]`, ideals in closed
//!   `(level, residue module)` form.
//!
//! [`semigroup`] analyses finite commutative semigroups given by tables and
//! [`regularity`] evaluates the verdicts over any family implementing
//! [`regularity::IdealArithmetic`].
//!
//! Everything is exact (`num-bigint` integers and rationals) and `no_std`
//! with `alloc`.
#![no_std]

extern crate alloc;

pub mod kernel;
pub mod pvd;
pub mod quadratic;
pub mod regularity;
pub mod semigroup;
pub mod window;
