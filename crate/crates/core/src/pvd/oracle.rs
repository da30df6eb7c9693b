//! Brute-force model of `K((X))` truncated to a few consecutive `X`-levels.
//!
//! Ideals are spanned by explicit truncated series over the base field and
//! products/colons are computed coefficient by coefficient, without using the
//! residue-module closed forms.

use alloc::vec;
use alloc::vec::Vec;

use crate::kernel::linalg::{dot, nullspace};
use crate::kernel::{Scalar, Subspace};

use super::{PvdIdeal, PvdRing};

/// Truncation depth used by the test suites.
pub const DEFAULT_DEPTH: usize = 4;

/// `depth` consecutive coefficients in `K`, flattened over the base field.
type Series = Vec<Vec<Scalar>>;

fn generators(ring: &PvdRing, ideal: &PvdIdeal, depth: usize) -> Vec<Series> {
    let field = ring.tower.field();
    let d = ring.dim();
    let zero = vec![field.zero(); d];
    let mut out = Vec::new();
    for w in ideal.w.basis() {
        let mut s = vec![zero.clone(); depth];
        s[0] = w.clone();
        out.push(s);
    }
    for level in 1..depth {
        for i in 0..d {
            let mut s = vec![zero.clone(); depth];
            s[level][i] = field.one();
            out.push(s);
        }
    }
    out
}

fn series_mul(ring: &PvdRing, a: &Series, b: &Series, depth: usize) -> Vec<Scalar> {
    let field = ring.tower.field();
    let d = ring.dim();
    let mut out = vec![field.zero(); depth * d];
    for (i, ai) in a.iter().enumerate() {
        for (j, bj) in b.iter().enumerate().take(depth - i) {
            let prod = ring.tower.mul(ai, bj);
            for (k, v) in prod.iter().enumerate() {
                let slot = &mut out[(i + j) * d + k];
                *slot = field.add(slot, v);
            }
        }
    }
    out
}

/// Reads `X^{start+t}·(W + M)` off a span of flattened series, requiring every
/// block after the first nonzero one to be full.
fn read_off(ring: &PvdRing, start: i64, span: &Subspace, depth: usize) -> Option<PvdIdeal> {
    let field = ring.tower.field();
    let d = ring.dim();
    let first = span.basis().first()?;
    let t0 = first.iter().position(|x| !num_traits::Zero::is_zero(x))? / d;
    let rows = span.basis().iter().map(|r| r[t0 * d..(t0 + 1) * d].to_vec()).collect();
    let w = Subspace::span(field, d, rows).ok()?;
    for t in t0 + 1..depth {
        for i in 0..d {
            let mut v = vec![field.zero(); depth * d];
            v[t * d + i] = field.one();
            if !span.contains_vector(&v) {
                return None;
            }
        }
    }
    Some(PvdIdeal { level: start + t0 as i64, w })
}

/// `I·J` from pairwise products of truncated generators.
pub fn truncated_product(ring: &PvdRing, a: &PvdIdeal, b: &PvdIdeal, depth: usize) -> Option<PvdIdeal> {
    let ga = generators(ring, a, depth);
    let gb = generators(ring, b, depth);
    let products = ga.iter().flat_map(|x| gb.iter().map(move |y| (x, y))).map(|(x, y)| series_mul(ring, x, y, depth));
    let span = Subspace::span(ring.tower.field(), depth * ring.dim(), products.collect()).ok()?;
    read_off(ring, a.level + b.level, &span, depth)
}

/// `(I:J)` solved for an unknown series on levels `a−b−2 ..= a−b+1` (depth 4):
/// every product with a generator of `J` must vanish below level `a` and lie
/// in `W_I` at level `a`.
pub fn truncated_colon(ring: &PvdRing, a: &PvdIdeal, b: &PvdIdeal, depth: usize) -> Option<PvdIdeal> {
    let field = ring.tower.field();
    let d = ring.dim();
    let lo = a.level - b.level - (depth as i64 - 2);
    let target = (a.level - lo - b.level) as usize;
    let ann = a.w.annihilator();
    let mut constraints: Vec<Vec<Scalar>> = Vec::new();
    for y in generators(ring, b, depth) {
        // row k of `x_i ↦ (x_i · y_j)` for every pair landing on a level <= a
        let mats: Vec<Vec<Vec<Scalar>>> = y.iter().map(|yj| ring.tower.algebra().mul_matrix(yj)).collect();
        for s in 0..=target {
            let coefficient_row = |k: usize| {
                let mut row = vec![field.zero(); depth * d];
                for i in 0..=s.min(depth - 1) {
                    let j = s - i;
                    if j >= depth {
                        continue;
                    }
                    for c in 0..d {
                        row[i * d + c] = field.add(&row[i * d + c], &mats[j][k][c]);
                    }
                }
                row
            };
            if s < target {
                constraints.extend((0..d).map(coefficient_row));
            } else {
                let rows: Vec<Vec<Scalar>> = (0..d).map(coefficient_row).collect();
                for alpha in &ann {
                    let combined = (0..depth * d)
                        .map(|col| {
                            let column: Vec<Scalar> = rows.iter().map(|r| r[col].clone()).collect();
                            dot(field, alpha, &column)
                        })
                        .collect();
                    constraints.push(combined);
                }
            }
        }
    }
    let solutions = nullspace(field, constraints, depth * d);
    let span = Subspace::span(field, depth * d, solutions).ok()?;
    read_off(ring, lo, &span, depth)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{BaseField, FieldTower};

    fn q_vec(v: &[i64]) -> Vec<Scalar> {
        v.iter().map(|&x| BaseField::Rationals.from_i64(x)).collect()
    }

    #[test]
    fn oracle_matches_closed_forms_on_biquadratic_shapes() {
        let r = PvdRing::over_base(FieldTower::biquadratic(2, 3).unwrap()).unwrap();
        let shapes = [
            r.unit_ideal(),
            r.maximal_ideal(),
            r.valuation_overring(),
            r.ideal_from_residues(1, vec![q_vec(&[1, 0, 0, 0]), q_vec(&[0, 1, 0, 0]), q_vec(&[0, 0, 1, 0])]).unwrap(),
            r.ideal_from_residues(-1, vec![q_vec(&[1, 1, 0, 0])]).unwrap(),
            r.ideal_from_residues(0, vec![q_vec(&[1, 0, 0, 0]), q_vec(&[0, 1, 1, 0])]).unwrap(),
        ];
        for a in &shapes {
            for b in &shapes {
                assert_eq!(
                    truncated_product(&r, a, b, DEFAULT_DEPTH).as_ref(),
                    Some(&r.pvd_product(a, b)),
                    "{a} * {b}"
                );
                assert_eq!(truncated_colon(&r, a, b, DEFAULT_DEPTH).as_ref(), Some(&r.pvd_colon(a, b)), "({a} : {b})");
            }
        }
    }

    #[test]
    fn maximal_ideal_colon() {
        let r = PvdRing::over_base(FieldTower::quadratic(2).unwrap()).unwrap();
        let m = r.maximal_ideal();
        assert_eq!(truncated_colon(&r, &m, &m, DEFAULT_DEPTH), Some(r.valuation_overring()));
    }
}
