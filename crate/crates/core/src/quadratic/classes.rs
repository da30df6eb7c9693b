//! Enumeration of the class semigroup `S(O)` of a quadratic order.
//!
//! Every nonzero fractional `O`-ideal is invertible over its multiplier ring
//! `O_{f'}` for some `f' | f`, so `S(O)` is the disjoint union of the Picard
//! groups `Pic(O_{f'})`. Each Picard class contains an integral proper ideal
//! of norm at most `√(|f'²d_K|/3)` (the leading coefficient of a reduced form).

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::kernel::IntMat2;
use crate::semigroup::FiniteSemigroup;

use super::{QuadError, QuadLattice, QuadraticOrder};

/// Doublings of the norm bound attempted before giving up.
const MAX_DOUBLINGS: u32 = 4;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassRep {
    pub label: String,
    pub lattice: QuadLattice,
    /// Conductor `f'` of the multiplier ring `(I:I)`.
    pub multiplier_conductor: i64,
    /// Index of the lattice in its multiplier ring.
    pub norm: BigRational,
}

#[derive(Clone, Debug)]
pub struct ClassTable {
    pub order: QuadraticOrder,
    pub reps: Vec<ClassRep>,
    pub table: Vec<Vec<usize>>,
    pub semigroup: FiniteSemigroup,
    /// Norm bound that closed the table.
    pub bound: u64,
}

impl ClassTable {
    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    /// Index of the class isomorphic to `lattice`, if any.
    pub fn class_of(&self, lattice: &QuadLattice) -> Result<Option<usize>, QuadError> {
        find_class(&self.order, &self.reps, lattice)
    }

    /// Representative indices carrying multiplier conductor `fp`.
    pub fn classes_with_multiplier(&self, fp: i64) -> Vec<usize> {
        (0..self.reps.len()).filter(|&i| self.reps[i].multiplier_conductor == fp).collect()
    }

    /// Matches classes by isomorphism; returns `perm` with
    /// `self.reps[i] ≅ other.reps[perm[i]]` when both class sets and both
    /// multiplication tables agree under that bijection.
    pub fn matches(&self, other: &ClassTable) -> Result<Option<Vec<usize>>, QuadError> {
        if self.len() != other.len() || self.order != other.order {
            return Ok(None);
        }
        let mut perm = Vec::with_capacity(self.len());
        for rep in &self.reps {
            match other.class_of(&rep.lattice)? {
                Some(j) if !perm.contains(&j) => perm.push(j),
                _ => return Ok(None),
            }
        }
        for i in 0..self.len() {
            for j in 0..self.len() {
                if perm[self.table[i][j]] != other.table[perm[i]][perm[j]] {
                    return Ok(None);
                }
            }
        }
        Ok(Some(perm))
    }
}

fn find_class(order: &QuadraticOrder, reps: &[ClassRep], lattice: &QuadLattice) -> Result<Option<usize>, QuadError> {
    let fp = order.multiplier_order(lattice)?;
    for (k, rep) in reps.iter().enumerate() {
        if rep.multiplier_conductor == fp && order.field().find_scaling(&rep.lattice, lattice).is_some() {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

/// Integral sublattices of `Z + step·ω·Z` with index at most `bound` that are
/// modules over `O_{module_fp}`, ordered by index and then by HNF.
fn sublattices(order: &QuadraticOrder, step: i64, module_fp: i64, bound: u64) -> Vec<(u64, QuadLattice)> {
    let mut out = Vec::new();
    for n in 1..=bound {
        for alpha in (1..=n).filter(|a| n % a == 0) {
            let delta = n / alpha;
            for beta in 0..alpha {
                let basis = IntMat2::upper(alpha.into(), beta.into(), BigInt::from(delta) * step);
                let lattice = QuadLattice::from_hnf(basis);
                if order.is_module_over(&lattice, module_fp) {
                    out.push((n, lattice));
                }
            }
        }
    }
    out
}

/// Groups lattices into isomorphy classes, keeping the first of each as representative.
fn classify(
    order: &QuadraticOrder,
    lattices: Vec<(u64, QuadLattice)>,
    reps: &mut Vec<ClassRep>,
) -> Result<(), QuadError> {
    for (_, lattice) in lattices {
        if find_class(order, reps, &lattice)?.is_none() {
            let fp = order.multiplier_order(&lattice)?;
            let b = lattice.basis();
            let label = format!("T{fp}:<{},{}+{}w>", b.a(), b.b(), b.d());
            let norm = order.norm_over(&lattice, fp);
            reps.push(ClassRep { label, lattice, multiplier_conductor: fp, norm });
        }
    }
    Ok(())
}

fn fill_table(order: &QuadraticOrder, reps: &[ClassRep], bound: u64) -> Result<Vec<Vec<usize>>, QuadError> {
    let n = reps.len();
    let mut table = alloc::vec![alloc::vec![0usize; n]; n];
    for i in 0..n {
        for j in i..n {
            let product = order.ideal_product(&reps[i].lattice, &reps[j].lattice);
            let k = find_class(order, reps, &product)?.ok_or(QuadError::BoundTooSmall { bound })?;
            table[i][j] = k;
            table[j][i] = k;
        }
    }
    Ok(table)
}

fn finish(
    order: &QuadraticOrder,
    reps: Vec<ClassRep>,
    table: Vec<Vec<usize>>,
    bound: u64,
) -> Result<ClassTable, QuadError> {
    let labels = reps.iter().map(|r| r.label.clone()).collect();
    let semigroup = FiniteSemigroup::new(labels, table.clone())?;
    Ok(ClassTable { order: order.clone(), reps, table, semigroup, bound })
}

/// Minkowski-style bound `max{a : 3a² ≤ |disc|}`, at least 1.
fn reduced_bound(disc: i64) -> u64 {
    let mut a: u64 = 1;
    while 3 * (a + 1) * (a + 1) <= disc.unsigned_abs() {
        a += 1;
    }
    a
}

/// Structural enumeration of `S(O)`: proper ideals of every overorder
/// `O_{f'}`, classified by isomorphism, largest `f'` (the class of `O`) first.
///
/// `norm_bound` overrides the per-divisor bound; either way the bound is
/// doubled if the multiplication table fails to close.
pub fn enumerate_class_semigroup(order: &QuadraticOrder, norm_bound: Option<u64>) -> Result<ClassTable, QuadError> {
    let mut scale = 1u64;
    let mut last_bound = 0;
    for _ in 0..=MAX_DOUBLINGS {
        let mut reps = Vec::new();
        for fp in order.conductor_divisors().into_iter().rev() {
            let bound = norm_bound.unwrap_or_else(|| reduced_bound(fp * fp * order.fundamental_discriminant())) * scale;
            last_bound = last_bound.max(bound);
            let proper: Vec<(u64, QuadLattice)> = sublattices(order, fp, fp, bound)
                .into_iter()
                .filter(|(_, l)| order.multiplier_order(l) == Ok(fp))
                .collect();
            classify(order, proper, &mut reps)?;
        }
        match fill_table(order, &reps, last_bound) {
            Ok(table) => return finish(order, reps, table, last_bound),
            Err(QuadError::BoundTooSmall { .. }) => scale *= 2,
            Err(e) => return Err(e),
        }
    }
    Err(QuadError::BoundTooSmall { bound: last_bound })
}

/// Independent enumeration: every `O`-submodule of `O` with index at most
/// `index_bound`, classified by isomorphism. Fails with `BoundTooSmall` when
/// the classes found are not closed under multiplication.
pub fn exhaustive_sublattice_oracle(order: &QuadraticOrder, index_bound: u64) -> Result<ClassTable, QuadError> {
    let f = order.conductor();
    let mut reps = Vec::new();
    classify(order, sublattices(order, f, f, index_bound.max(1)), &mut reps)?;
    reps.sort_by_key(|r| core::cmp::Reverse(r.multiplier_conductor));
    let table = fill_table(order, &reps, index_bound)?;
    finish(order, reps, table, index_bound)
}
