//! Gaussian elimination over a [`BaseField`].

use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use super::field::{BaseField, Scalar};

/// Reduced row echelon form: nonzero rows only, leading ones, pivot columns
/// cleared in every other row. Pivots are taken at the lowest column first.
pub fn rref(field: &BaseField, mut rows: Vec<Vec<Scalar>>, ncols: usize) -> Vec<Vec<Scalar>> {
    let mut pivot_row = 0;
    for col in 0..ncols {
        let Some(found) = (pivot_row..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(pivot_row, found);
        let inv = field.inv(&rows[pivot_row][col]).expect("nonzero pivot");
        for v in rows[pivot_row].iter_mut() {
            *v = field.mul(v, &inv);
        }
        let pivot = rows[pivot_row].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == pivot_row || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, p) in row.iter_mut().zip(pivot.iter()) {
                if !p.is_zero() {
                    *x = field.sub(x, &field.mul(&factor, p));
                }
            }
        }
        pivot_row += 1;
        if pivot_row == rows.len() {
            break;
        }
    }
    rows.truncate(pivot_row);
    rows
}

/// Column index of the leading entry of each row of an echelon matrix.
pub fn pivots(rows: &[Vec<Scalar>]) -> Vec<usize> {
    rows.iter().map(|r| r.iter().position(|x| !x.is_zero()).expect("echelon rows are nonzero")).collect()
}

/// Basis of `{x : A x = 0}` where `A` has the given rows.
pub fn nullspace(field: &BaseField, rows: Vec<Vec<Scalar>>, ncols: usize) -> Vec<Vec<Scalar>> {
    let echelon = rref(field, rows, ncols);
    let piv = pivots(&echelon);
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !piv.contains(c)) {
        let mut v = vec![Scalar::zero(); ncols];
        v[free] = field.one();
        for (row, &pc) in echelon.iter().zip(piv.iter()) {
            v[pc] = field.neg(&row[free]);
        }
        basis.push(v);
    }
    basis
}

/// Solves `A x = b` for square invertible `A` given by rows; `None` if singular.
pub fn solve(field: &BaseField, rows: &[Vec<Scalar>], rhs: &[Scalar]) -> Option<Vec<Scalar>> {
    let n = rows.len();
    let augmented: Vec<Vec<Scalar>> = rows
        .iter()
        .zip(rhs.iter())
        .map(|(r, b)| {
            let mut r = r.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let echelon = rref(field, augmented, n + 1);
    if echelon.len() < n || pivots(&echelon).iter().any(|&p| p >= n) {
        return None;
    }
    Some(echelon.iter().map(|r| r[n].clone()).collect())
}

pub fn dot(field: &BaseField, a: &[Scalar], b: &[Scalar]) -> Scalar {
    a.iter()
        .zip(b.iter())
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .fold(Scalar::zero(), |acc, (x, y)| field.add(&acc, &field.mul(x, y)))
}
