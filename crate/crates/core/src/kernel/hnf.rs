//! Integer lattices in `Z^2`: Hermite normal form and intersections.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::KernelError;

/// A 2×2 integer matrix whose columns are a lattice basis.
///
/// Produced by [`hnf2`] it is upper triangular: columns `(a, 0)` and `(b, d)`
/// with `a, d > 0` and `0 <= b < a`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntMat2 {
    pub entries: [[BigInt; 2]; 2],
}

impl IntMat2 {
    pub fn upper(a: BigInt, b: BigInt, d: BigInt) -> Self {
        IntMat2 { entries: [[a, b], [BigInt::zero(), d]] }
    }

    pub fn identity() -> Self {
        Self::upper(BigInt::one(), BigInt::zero(), BigInt::one())
    }

    pub fn a(&self) -> &BigInt {
        &self.entries[0][0]
    }

    pub fn b(&self) -> &BigInt {
        &self.entries[0][1]
    }

    pub fn d(&self) -> &BigInt {
        &self.entries[1][1]
    }

    /// The two basis vectors.
    pub fn columns(&self) -> [(BigInt, BigInt); 2] {
        let e = &self.entries;
        [(e[0][0].clone(), e[1][0].clone()), (e[0][1].clone(), e[1][1].clone())]
    }

    pub fn determinant(&self) -> BigInt {
        let e = &self.entries;
        &e[0][0] * &e[1][1] - &e[0][1] * &e[1][0]
    }

    /// gcd of the entries.
    pub fn content(&self) -> BigInt {
        self.entries.iter().flatten().fold(BigInt::zero(), |g, x| g.gcd(x))
    }

    /// Membership for an HNF basis.
    pub fn contains(&self, x: &BigInt, y: &BigInt) -> bool {
        let (a, b, d) = (self.a(), self.b(), self.d());
        if !(y % d).is_zero() {
            return false;
        }
        let t = y / d;
        ((x - b * t) % a).is_zero()
    }

    pub fn scaled(&self, k: &BigInt) -> Self {
        let e = &self.entries;
        IntMat2 { entries: [[&e[0][0] * k, &e[0][1] * k], [&e[1][0] * k, &e[1][1] * k]] }
    }

    pub fn divided(&self, k: &BigInt) -> Self {
        let e = &self.entries;
        IntMat2 { entries: [[&e[0][0] / k, &e[0][1] / k], [&e[1][0] / k, &e[1][1] / k]] }
    }
}

impl fmt::Display for IntMat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e = &self.entries;
        write!(f, "[[{}, {}], [{}, {}]]", e[0][0], e[0][1], e[1][0], e[1][1])
    }
}

/// Hermite normal form of the lattice generated by `generators`.
pub fn hnf2(generators: &[(BigInt, BigInt)]) -> Result<IntMat2, KernelError> {
    let mut vs: Vec<(BigInt, BigInt)> =
        generators.iter().filter(|(x, y)| !x.is_zero() || !y.is_zero()).cloned().collect();
    // Euclid on the second coordinate until one vector carries it.
    loop {
        let nonzero: Vec<usize> = (0..vs.len()).filter(|&i| !vs[i].1.is_zero()).collect();
        if nonzero.len() <= 1 {
            break;
        }
        let p = *nonzero.iter().min_by_key(|&&i| vs[i].1.abs()).expect("nonempty");
        let (px, py) = vs[p].clone();
        for &i in &nonzero {
            if i == p {
                continue;
            }
            let q = vs[i].1.div_floor(&py);
            vs[i].0 -= &q * &px;
            vs[i].1 -= &q * &py;
        }
    }
    let pivot = vs.iter().position(|v| !v.1.is_zero()).ok_or(KernelError::RankDeficient)?;
    let (mut bx, mut d) = vs.swap_remove(pivot);
    if d.is_negative() {
        bx = -bx;
        d = -d;
    }
    let a = vs.iter().fold(BigInt::zero(), |g, v| g.gcd(&v.0));
    if a.is_zero() {
        return Err(KernelError::RankDeficient);
    }
    let b = bx.mod_floor(&a);
    Ok(IntMat2::upper(a, b, d))
}

/// Integer vectors `u` with `Σ u_i rows_i = 0`, as a basis of that kernel.
fn left_kernel(rows: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = rows.len();
    let m = rows.first().map_or(0, Vec::len);
    let mut aug: Vec<Vec<BigInt>> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut v = r.clone();
            v.extend((0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }));
            v
        })
        .collect();
    let mut top = 0;
    for col in 0..m {
        loop {
            let nonzero: Vec<usize> = (top..n).filter(|&i| !aug[i][col].is_zero()).collect();
            if nonzero.len() <= 1 {
                if let Some(&i) = nonzero.first() {
                    aug.swap(top, i);
                    top += 1;
                }
                break;
            }
            let p = *nonzero.iter().min_by_key(|&&i| aug[i][col].abs()).expect("nonempty");
            let pivot = aug[p].clone();
            for &i in &nonzero {
                if i == p {
                    continue;
                }
                let q = aug[i][col].div_floor(&pivot[col]);
                for (x, y) in aug[i].iter_mut().zip(pivot.iter()) {
                    *x -= &q * y;
                }
            }
        }
    }
    aug[top..].iter().map(|r| r[m..].to_vec()).collect()
}

/// HNF of `L1 ∩ L2` for two full-rank lattices.
pub fn intersect(l1: &IntMat2, l2: &IntMat2) -> IntMat2 {
    let [c1, c2] = l1.columns();
    let [c3, c4] = l2.columns();
    let rows = [
        alloc::vec![c1.0.clone(), c1.1.clone()],
        alloc::vec![c2.0.clone(), c2.1.clone()],
        alloc::vec![-c3.0, -c3.1],
        alloc::vec![-c4.0, -c4.1],
    ];
    let gens: Vec<(BigInt, BigInt)> =
        left_kernel(&rows).iter().map(|u| (&u[0] * &c1.0 + &u[1] * &c2.0, &u[0] * &c1.1 + &u[1] * &c2.1)).collect();
    hnf2(&gens).expect("intersection of full-rank lattices has full rank")
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn pairs(v: &[(i64, i64)]) -> Vec<(BigInt, BigInt)> {
        v.iter().map(|&(x, y)| (x.into(), y.into())).collect()
    }

    fn upper(a: i64, b: i64, d: i64) -> IntMat2 {
        IntMat2::upper(a.into(), b.into(), d.into())
    }

    /// Oracle: lattice membership on a grid by enumerating small combinations.
    fn grid_members(gens: &[(i64, i64)], radius: i64, window: i64) -> Vec<(i64, i64)> {
        let mut pts = Vec::new();
        let mut coeffs = vec![-radius; gens.len()];
        loop {
            let p = gens.iter().zip(coeffs.iter()).fold((0, 0), |acc, (g, c)| (acc.0 + c * g.0, acc.1 + c * g.1));
            if p.0.abs() <= window && p.1.abs() <= window && !pts.contains(&p) {
                pts.push(p);
            }
            let mut i = 0;
            loop {
                if i == coeffs.len() {
                    pts.sort();
                    return pts;
                }
                coeffs[i] += 1;
                if coeffs[i] <= radius {
                    break;
                }
                coeffs[i] = -radius;
                i += 1;
            }
        }
    }

    fn hnf_members(h: &IntMat2, window: i64) -> Vec<(i64, i64)> {
        let mut pts = Vec::new();
        for x in -window..=window {
            for y in -window..=window {
                if h.contains(&x.into(), &y.into()) {
                    pts.push((x, y));
                }
            }
        }
        pts
    }

    #[test]
    fn hnf_of_three_generators() {
        let gens = [(4, 0), (2, 2), (-2, 2)];
        let h = hnf2(&pairs(&gens)).unwrap();
        assert_eq!(h, upper(4, 2, 2));
        assert_eq!(grid_members(&gens, 8, 6), hnf_members(&h, 6));
    }

    #[test]
    fn hnf_identity_and_checkerboard() {
        assert_eq!(hnf2(&pairs(&[(1, 0), (0, 1)])).unwrap(), IntMat2::identity());
        let gens = [(2, 0), (0, 2), (1, 1)];
        let h = hnf2(&pairs(&gens)).unwrap();
        assert_eq!(h, upper(2, 1, 1));
        assert_eq!(grid_members(&gens, 8, 5), hnf_members(&h, 5));
    }

    #[test]
    fn rank_deficient_rejected() {
        assert_eq!(hnf2(&pairs(&[(1, 2), (2, 4)])), Err(KernelError::RankDeficient));
        assert_eq!(hnf2(&pairs(&[(3, 0)])), Err(KernelError::RankDeficient));
        assert_eq!(hnf2(&[]), Err(KernelError::RankDeficient));
    }

    #[test]
    fn intersection_matches_grid() {
        let l1 = upper(4, 1, 3);
        let l2 = upper(6, 4, 2);
        let meet = intersect(&l1, &l2);
        let expect: Vec<(i64, i64)> =
            hnf_members(&l1, 30).into_iter().filter(|(x, y)| l2.contains(&(*x).into(), &(*y).into())).collect();
        assert_eq!(hnf_members(&meet, 30), expect);
    }

    #[test]
    fn hnf_is_idempotent_on_examples() {
        for gens in [vec![(4, 0), (2, 2), (-2, 2)], vec![(6, 9), (3, -3), (12, 0)], vec![(5, 1), (1, 5)]] {
            let h = hnf2(&pairs(&gens)).unwrap();
            let again = hnf2(&h.columns()).unwrap();
            assert_eq!(h, again);
        }
    }
}
