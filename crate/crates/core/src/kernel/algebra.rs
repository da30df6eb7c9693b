//! Finite-dimensional commutative algebras given by structure constants.
//!
//! [`Algebra`] is any commutative associative unital algebra (used for the
//! quotient rings `k[X]/(c)`), and [`FieldTower`] is an algebra that has
//! additionally been checked to be a field.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use super::field::{BaseField, Scalar};
use super::linalg::{dot, nullspace, rref, solve};
use super::subspace::{unit_vector, Subspace};
use super::KernelError;

/// Structure-constant algebra; `table[i][j]` holds the coordinates of `e_i e_j`.
/// The basis vector `e_0` is the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    field: BaseField,
    dim: usize,
    table: Vec<Vec<Vec<Scalar>>>,
    labels: Vec<String>,
}

impl Algebra {
    /// Validates shape, commutativity, associativity and that `e_0` is a unit.
    pub fn new(field: BaseField, labels: Vec<String>, table: Vec<Vec<Vec<Scalar>>>) -> Result<Self, KernelError> {
        let dim = labels.len();
        if dim == 0 {
            return Err(KernelError::EmptyAlgebra);
        }
        if table.len() != dim || table.iter().any(|r| r.len() != dim || r.iter().any(|c| c.len() != dim)) {
            return Err(KernelError::BadStructureConstants);
        }
        let table = table
            .into_iter()
            .map(|r| {
                r.into_iter()
                    .map(|c| c.iter().map(|x| field.reduce(x)).collect::<Result<Vec<_>, _>>())
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        let alg = Algebra { field, dim, table, labels };
        alg.validate()?;
        Ok(alg)
    }

    fn validate(&self) -> Result<(), KernelError> {
        let n = self.dim;
        for i in 0..n {
            if self.table[0][i] != self.basis_vector(i) {
                return Err(KernelError::NoIdentity);
            }
            for j in 0..n {
                if self.table[i][j] != self.table[j][i] {
                    return Err(KernelError::NotCommutative { i, j });
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let left = self.mul(&self.table[i][j], &self.basis_vector(k));
                    let right = self.mul(&self.basis_vector(i), &self.table[j][k]);
                    if left != right {
                        return Err(KernelError::NotAssociative { i, j, k });
                    }
                }
            }
        }
        Ok(())
    }

    /// `k[X]/(c)` with basis `1, X, …, X^{m-1}`; `modulus` lists the
    /// coefficients of the monic `c` from the constant term upwards.
    pub fn polynomial_quotient(field: &BaseField, modulus: &[Scalar]) -> Result<Self, KernelError> {
        let m = modulus.len().checked_sub(1).filter(|&m| m > 0).ok_or(KernelError::BadModulus)?;
        let modulus: Vec<Scalar> = modulus.iter().map(|x| field.reduce(x)).collect::<Result<_, _>>()?;
        if modulus[m] != field.one() {
            return Err(KernelError::BadModulus);
        }
        // powers[t] = X^t reduced, for t < 2m - 1
        let mut powers: Vec<Vec<Scalar>> = (0..m).map(|i| unit_vector(field, m, i)).collect();
        while powers.len() < 2 * m - 1 {
            let prev = powers.last().expect("nonempty");
            // X * prev: shift up, then replace X^m by -(c_0 + … + c_{m-1} X^{m-1})
            let top = prev[m - 1].clone();
            let mut next = vec![field.zero(); m];
            next[1..m].clone_from_slice(&prev[..m - 1]);
            for i in 0..m {
                next[i] = field.sub(&next[i], &field.mul(&top, &modulus[i]));
            }
            powers.push(next);
        }
        let table = (0..m).map(|i| (0..m).map(|j| powers[i + j].clone()).collect()).collect();
        let labels = (0..m)
            .map(|i| match i {
                0 => String::from("1"),
                1 => String::from("X"),
                _ => format!("X^{i}"),
            })
            .collect();
        Ok(Algebra { field: field.clone(), dim: m, table, labels })
    }

    pub fn field(&self) -> &BaseField {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn table(&self) -> &[Vec<Vec<Scalar>>] {
        &self.table
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        unit_vector(&self.field, self.dim, i)
    }

    pub fn one(&self) -> Vec<Scalar> {
        self.basis_vector(0)
    }

    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let f = &self.field;
        let mut out = vec![f.zero(); self.dim];
        for (i, ai) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, bj) in b.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                let coeff = f.mul(ai, bj);
                for (o, t) in out.iter_mut().zip(self.table[i][j].iter()) {
                    if !t.is_zero() {
                        *o = f.add(o, &f.mul(&coeff, t));
                    }
                }
            }
        }
        out
    }

    /// Rows of the matrix of `y ↦ a·y` (row `k` gives output coordinate `k`).
    pub fn mul_matrix(&self, a: &[Scalar]) -> Vec<Vec<Scalar>> {
        let cols: Vec<Vec<Scalar>> = (0..self.dim).map(|j| self.mul(a, &self.basis_vector(j))).collect();
        (0..self.dim).map(|k| cols.iter().map(|c| c[k].clone()).collect()).collect()
    }

    pub fn inverse(&self, a: &[Scalar]) -> Option<Vec<Scalar>> {
        solve(&self.field, &self.mul_matrix(a), &self.one())
    }

    pub fn is_invertible(&self, a: &[Scalar]) -> bool {
        rref(&self.field, self.mul_matrix(a), self.dim).len() == self.dim
    }

    fn check_subspace(&self, s: &Subspace) -> Result<(), KernelError> {
        if s.ambient_dim() != self.dim {
            return Err(KernelError::DimensionMismatch { expected: self.dim, found: s.ambient_dim() });
        }
        if s.field() != &self.field {
            return Err(KernelError::FieldMismatch);
        }
        Ok(())
    }

    /// Span of all products `a_i b_j` of basis vectors.
    pub fn module_product(&self, a: &Subspace, b: &Subspace) -> Result<Subspace, KernelError> {
        self.check_subspace(a)?;
        self.check_subspace(b)?;
        let products = a.basis().iter().flat_map(|x| b.basis().iter().map(move |y| self.mul(x, y))).collect();
        Ok(Subspace::from_reduced(self.field.clone(), self.dim, products))
    }

    /// `{x : x·b ⊆ a}`, solved as one linear system.
    pub fn colon(&self, a: &Subspace, b: &Subspace) -> Result<Subspace, KernelError> {
        self.check_subspace(a)?;
        self.check_subspace(b)?;
        if b.is_zero() {
            return Err(KernelError::ZeroDivisor);
        }
        let ann = a.annihilator();
        let mut constraints = Vec::with_capacity(ann.len() * b.rank());
        for bj in b.basis() {
            let m = self.mul_matrix(bj);
            // y . (M x) = (y^T M) . x
            for y in &ann {
                let row: Vec<Scalar> = (0..self.dim)
                    .map(|i| {
                        let col: Vec<Scalar> = m.iter().map(|r| r[i].clone()).collect();
                        dot(&self.field, y, &col)
                    })
                    .collect();
                constraints.push(row);
            }
        }
        let solutions = nullspace(&self.field, constraints, self.dim);
        Ok(Subspace::from_reduced(self.field.clone(), self.dim, solutions))
    }

    /// Whether the subspace contains 1 and is closed under multiplication.
    pub fn is_unital_subalgebra(&self, s: &Subspace) -> Result<bool, KernelError> {
        self.check_subspace(s)?;
        Ok(s.contains_vector(&self.one()) && s.contains(&self.module_product(s, s)?)?)
    }
}

/// An [`Algebra`] verified to be a field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldTower {
    algebra: Algebra,
}

/// Largest element count for which invertibility is checked exhaustively.
const EXHAUSTIVE_LIMIT: u64 = 20_000;

impl FieldTower {
    /// Checks that every nonzero element is invertible: exhaustively over a
    /// small finite field, otherwise on all coordinate vectors in `{-2..2}^dim`.
    pub fn new(algebra: Algebra) -> Result<Self, KernelError> {
        let field = algebra.field().clone();
        let dim = algebra.dim();
        let range: Vec<i64> = match field {
            BaseField::Prime(p) if p.checked_pow(dim as u32).is_some_and(|n| n <= EXHAUSTIVE_LIMIT) => {
                (0..p as i64).collect()
            }
            _ => (-2..=2).collect(),
        };
        let mut digits = vec![0usize; dim];
        loop {
            let v: Vec<Scalar> = digits.iter().map(|&d| field.from_i64(range[d])).collect();
            if v.iter().any(|x| !x.is_zero()) && !algebra.is_invertible(&v) {
                return Err(KernelError::NotAField);
            }
            let mut pos = 0;
            loop {
                if pos == dim {
                    return Ok(FieldTower { algebra });
                }
                digits[pos] += 1;
                if digits[pos] < range.len() {
                    break;
                }
                digits[pos] = 0;
                pos += 1;
            }
        }
    }

    /// `base[t]/(minpoly)`; coefficients from the constant term up, monic.
    pub fn simple_extension(field: &BaseField, minpoly: &[Scalar], generator: &str) -> Result<Self, KernelError> {
        let mut alg = Algebra::polynomial_quotient(field, minpoly)?;
        alg.labels = (0..alg.dim)
            .map(|i| match i {
                0 => String::from("1"),
                1 => String::from(generator),
                _ => format!("{generator}^{i}"),
            })
            .collect();
        Self::new(alg)
    }

    /// `Q(√d)` with basis `1, √d`.
    pub fn quadratic(d: i64) -> Result<Self, KernelError> {
        let q = BaseField::Rationals;
        let alg = Algebra::polynomial_quotient(&q, &[q.from_i64(-d), q.zero(), q.one()])?;
        let alg = Algebra { labels: vec![String::from("1"), format!("√{d}")], ..alg };
        Self::new(alg)
    }

    /// `Q(√a, √b)` with basis `1, √a, √b, √(ab)`.
    pub fn biquadratic(a: i64, b: i64) -> Result<Self, KernelError> {
        let q = BaseField::Rationals;
        // e1 = √a, e2 = √b, e3 = √(ab)
        let e = |i: usize, c: i64| -> Vec<Scalar> {
            let mut v = vec![q.zero(); 4];
            v[i] = q.from_i64(c);
            v
        };
        let table = vec![
            vec![e(0, 1), e(1, 1), e(2, 1), e(3, 1)],
            vec![e(1, 1), e(0, a), e(3, 1), e(2, a)],
            vec![e(2, 1), e(3, 1), e(0, b), e(1, b)],
            vec![e(3, 1), e(2, a), e(1, b), e(0, a * b)],
        ];
        let labels = vec![String::from("1"), format!("√{a}"), format!("√{b}"), format!("√{}", a * b)];
        Self::new(Algebra::new(q, labels, table)?)
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn field(&self) -> &BaseField {
        self.algebra.field()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        self.algebra.mul(a, b)
    }

    pub fn inverse(&self, a: &[Scalar]) -> Option<Vec<Scalar>> {
        self.algebra.inverse(a)
    }

    pub fn module_product(&self, a: &Subspace, b: &Subspace) -> Result<Subspace, KernelError> {
        self.algebra.module_product(a, b)
    }

    pub fn field_colon(&self, a: &Subspace, b: &Subspace) -> Result<Subspace, KernelError> {
        self.algebra.colon(a, b)
    }

    /// Whether `s` is a subfield: contains 1, closed under products and inverses.
    pub fn is_subfield(&self, s: &Subspace) -> Result<bool, KernelError> {
        if !self.algebra.is_unital_subalgebra(s)? {
            return Ok(false);
        }
        Ok(s.basis().iter().all(|v| self.inverse(v).is_some_and(|inv| s.contains_vector(&inv))))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vecq(xs: &[i64]) -> Vec<Scalar> {
        let q = BaseField::Rationals;
        xs.iter().map(|&x| q.from_i64(x)).collect()
    }

    fn span(dim: usize, rows: &[&[i64]]) -> Subspace {
        Subspace::span(&BaseField::Rationals, dim, rows.iter().map(|r| vecq(r)).collect()).unwrap()
    }

    #[test]
    fn sqrt2_times_sqrt2() {
        let k = FieldTower::quadratic(2).unwrap();
        let line = span(2, &[&[0, 1]]);
        assert_eq!(k.module_product(&line, &line).unwrap(), span(2, &[&[1, 0]]));
    }

    #[test]
    fn subfield_is_closed_in_biquadratic() {
        // Oracle: e1^2 = 2 e0, so span{e0,e1}·span{e0,e1} = span{e0,e1,2e0}.
        let k = FieldTower::biquadratic(2, 3).unwrap();
        let w = span(4, &[&[1, 0, 0, 0], &[0, 1, 0, 0]]);
        assert_eq!(k.module_product(&w, &w).unwrap(), w);
        assert!(k.is_subfield(&w).unwrap());
    }

    #[test]
    fn colon_of_full_field_and_constants() {
        let k = FieldTower::biquadratic(2, 3).unwrap();
        let full = Subspace::full(&BaseField::Rationals, 4);
        let consts = span(4, &[&[1, 0, 0, 0]]);
        assert_eq!(k.field_colon(&full, &full).unwrap(), full);
        // x·e_i ∈ Q for all i forces x = 0 (x = x·e0 ∈ Q, then x·e1 = x e1 ∈ Q only if x = 0).
        assert!(k.field_colon(&consts, &full).unwrap().is_zero());
        assert!(matches!(
            k.field_colon(&full, &Subspace::zero(&BaseField::Rationals, 4)),
            Err(KernelError::ZeroDivisor)
        ));
    }

    #[test]
    fn colon_of_k_plus_xk_is_k() {
        // x = √2 + √3 has x^2 = 5 + 2√6 outside Q + Qx.
        let k = FieldTower::biquadratic(2, 3).unwrap();
        let w = span(4, &[&[1, 0, 0, 0], &[0, 1, 1, 0]]);
        assert_eq!(k.field_colon(&w, &w).unwrap(), span(4, &[&[1, 0, 0, 0]]));
    }

    #[test]
    fn reducible_quotient_is_not_a_field() {
        let q = BaseField::Rationals;
        // X^2 - 1 = (X-1)(X+1)
        let alg = Algebra::polynomial_quotient(&q, &vecq(&[-1, 0, 1])).unwrap();
        assert!(matches!(FieldTower::new(alg), Err(KernelError::NotAField)));
        // X^2 + 1 over F_5 splits since 2^2 = -1
        let f5 = BaseField::prime(5).unwrap();
        let m = [f5.one(), f5.zero(), f5.one()];
        assert!(FieldTower::simple_extension(&f5, &m, "t").is_err());
        let m = [f5.from_i64(-2), f5.zero(), f5.one()];
        assert!(FieldTower::simple_extension(&f5, &m, "t").is_ok());
    }

    #[test]
    fn non_associative_table_rejected() {
        let q = BaseField::Rationals;
        let e = |i: usize| {
            let mut v = vec![q.zero(); 2];
            v[i] = q.one();
            v
        };
        // e1 e1 = e1 + e0 would be fine; make e1 e1 = e0 but break identity instead.
        let table = vec![vec![e(0), e(1)], vec![e(0), e(0)]];
        assert!(matches!(
            Algebra::new(q.clone(), vec!["1".into(), "x".into()], table),
            Err(KernelError::NotCommutative { .. })
        ));
        let table = vec![vec![e(1), e(1)], vec![e(1), e(0)]];
        assert!(Algebra::new(q, vec!["1".into(), "x".into()], table).is_err());
    }

    #[test]
    fn inverse_round_trip() {
        let k = FieldTower::biquadratic(2, 3).unwrap();
        let x = vecq(&[1, 1, 1, 1]);
        let y = k.inverse(&x).unwrap();
        assert_eq!(k.mul(&x, &y), vecq(&[1, 0, 0, 0]));
    }
}
