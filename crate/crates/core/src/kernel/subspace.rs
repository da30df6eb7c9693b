use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use super::field::{BaseField, Scalar};
use super::linalg::{dot, nullspace, rref};
use super::KernelError;

/// A subspace of `field^dim`, stored in reduced row echelon form.
///
/// Because the echelon form is canonical, `==` is subspace equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: BaseField,
    dim: usize,
    rows: Vec<Vec<Scalar>>,
}

impl Subspace {
    /// Span of `vectors`, which must all have length `dim`.
    pub fn span(field: &BaseField, dim: usize, vectors: Vec<Vec<Scalar>>) -> Result<Self, KernelError> {
        let mut reduced = Vec::with_capacity(vectors.len());
        for v in vectors {
            if v.len() != dim {
                return Err(KernelError::DimensionMismatch { expected: dim, found: v.len() });
            }
            reduced.push(v.iter().map(|x| field.reduce(x)).collect::<Result<Vec<_>, _>>()?);
        }
        Ok(Self::from_reduced(field.clone(), dim, reduced))
    }

    // Entries already canonical in `field`.
    pub(crate) fn from_reduced(field: BaseField, dim: usize, vectors: Vec<Vec<Scalar>>) -> Self {
        let rows = rref(&field, vectors, dim);
        Subspace { field, dim, rows }
    }

    pub fn zero(field: &BaseField, dim: usize) -> Self {
        Subspace { field: field.clone(), dim, rows: Vec::new() }
    }

    pub fn full(field: &BaseField, dim: usize) -> Self {
        let rows = (0..dim).map(|i| unit_vector(field, dim, i)).collect();
        Subspace { field: field.clone(), dim, rows }
    }

    /// Span of the standard basis vectors at `indices`.
    pub fn coordinate(field: &BaseField, dim: usize, indices: &[usize]) -> Self {
        let vectors = indices.iter().map(|&i| unit_vector(field, dim, i)).collect();
        Self::from_reduced(field.clone(), dim, vectors)
    }

    pub fn field(&self) -> &BaseField {
        &self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.dim
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    fn check(&self, other: &Subspace) -> Result<(), KernelError> {
        if self.dim != other.dim {
            return Err(KernelError::DimensionMismatch { expected: self.dim, found: other.dim });
        }
        if self.field != other.field {
            return Err(KernelError::FieldMismatch);
        }
        Ok(())
    }

    /// Row vectors `y` with `y . v = 0` exactly for `v` in this subspace.
    pub fn annihilator(&self) -> Vec<Vec<Scalar>> {
        nullspace(&self.field, self.rows.clone(), self.dim)
    }

    pub fn contains_vector(&self, v: &[Scalar]) -> bool {
        v.len() == self.dim && self.annihilator().iter().all(|y| dot(&self.field, y, v).is_zero())
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &Subspace) -> Result<bool, KernelError> {
        self.check(other)?;
        let ann = self.annihilator();
        Ok(other.rows.iter().all(|v| ann.iter().all(|y| dot(&self.field, y, v).is_zero())))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, KernelError> {
        self.check(other)?;
        let mut all = self.rows.clone();
        all.extend(other.rows.iter().cloned());
        Ok(Self::from_reduced(self.field.clone(), self.dim, all))
    }

    /// Intersection by the Zassenhaus construction: reduce `[a | a]` stacked
    /// on `[b | 0]`; rows vanishing on the left half span `a ∩ b` on the right.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, KernelError> {
        self.check(other)?;
        let n = self.dim;
        let mut stacked = Vec::with_capacity(self.rank() + other.rank());
        for r in &self.rows {
            let mut v = r.clone();
            v.extend(r.iter().cloned());
            stacked.push(v);
        }
        for r in &other.rows {
            let mut v = r.clone();
            v.extend(core::iter::repeat_n(Scalar::zero(), n));
            stacked.push(v);
        }
        let echelon = rref(&self.field, stacked, 2 * n);
        let meet = echelon.into_iter().filter(|r| r[..n].iter().all(Zero::is_zero)).map(|r| r[n..].to_vec()).collect();
        Ok(Self::from_reduced(self.field.clone(), n, meet))
    }
}

pub(crate) fn unit_vector(field: &BaseField, dim: usize, i: usize) -> Vec<Scalar> {
    (0..dim).map(|j| if i == j { field.one() } else { field.zero() }).collect()
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "span{{")?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "(")?;
            for (j, x) in r.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn v(q: &BaseField, xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| q.from_i64(x)).collect()
    }

    #[test]
    fn complementary_lines_sum_to_full() {
        let q = BaseField::Rationals;
        let a = Subspace::span(&q, 2, vec![v(&q, &[1, 0])]).unwrap();
        let b = Subspace::span(&q, 2, vec![v(&q, &[0, 1])]).unwrap();
        assert!(a.sum(&b).unwrap().is_full());
    }

    #[test]
    fn intersection_is_idempotent() {
        let q = BaseField::Rationals;
        let a = Subspace::span(&q, 3, vec![v(&q, &[1, 2, 0]), v(&q, &[0, 1, 1])]).unwrap();
        assert_eq!(a.intersect(&a).unwrap(), a);
    }

    #[test]
    fn intersection_of_plane_pair() {
        // Oracle: (x,y,z) = s(1,1,0) + t(0,0,1) lies in span{e1,e2} iff t = 0,
        // so the meet is span{(1,1,0)}.
        let q = BaseField::Rationals;
        let a = Subspace::span(&q, 3, vec![v(&q, &[1, 1, 0]), v(&q, &[0, 0, 1])]).unwrap();
        let b = Subspace::span(&q, 3, vec![v(&q, &[1, 0, 0]), v(&q, &[0, 1, 0])]).unwrap();
        let expected = Subspace::span(&q, 3, vec![v(&q, &[1, 1, 0])]).unwrap();
        assert_eq!(a.intersect(&b).unwrap(), expected);
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let q = BaseField::Rationals;
        let a = Subspace::full(&q, 2);
        let b = Subspace::full(&q, 3);
        assert!(matches!(a.sum(&b), Err(KernelError::DimensionMismatch { .. })));
        assert!(Subspace::span(&q, 2, vec![v(&q, &[1, 2, 3])]).is_err());
    }

    #[test]
    fn echelon_form_is_canonical() {
        let q = BaseField::Rationals;
        let a = Subspace::span(&q, 2, vec![v(&q, &[2, 4])]).unwrap();
        let b = Subspace::span(&q, 2, vec![v(&q, &[-1, -2]), v(&q, &[3, 6])]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.basis()[0], v(&q, &[1, 2]));
    }
}
