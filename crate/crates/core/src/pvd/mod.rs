//! Pseudo-valuation pullbacks `R = k + M ⊆ V = K + M`, `M = X·K[[X]]`.
//!
//! Every nonzero fractional ideal has the shape `I = Xⁿ·(W + M)` with `W` a
//! nonzero `k`-submodule of `K`; `W = K` gives `Xⁿ·V`. Because `K·M ⊆ M`,
//! products and colons only see the residue modules, so no power series are
//! ever formed here. [`oracle`] holds a truncated brute-force model used to
//! check these closed forms.

pub mod dvr;
pub mod oracle;

use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::kernel::{FieldTower, KernelError, Scalar, Subspace};
use crate::regularity::{regularity_report, IdealArithmetic, RegularityReport};
use crate::semigroup::FiniteSemigroup;

pub use dvr::{dvr_coefficient_instance, DvrIdeal, DvrRing};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum PvdError {
    #[error("k must be a proper subfield of K")]
    BadTower,
    #[error("k is not a subfield of K")]
    NotSubfield,
    #[error("W is not a nonzero k-submodule of K")]
    NotModule,
    #[error("case analysis supports [K:k] in 2..=4, got {0}")]
    UnsupportedDegree(usize),
    #[error(transparent)]
    Kernel(#[from] KernelError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PvdRing {
    tower: FieldTower,
    k: Subspace,
    degree: usize,
}

/// `Xⁿ·(W + M)` with `W ≠ 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PvdIdeal {
    pub level: i64,
    pub w: Subspace,
}

/// `u·X^shift`; the higher-order tail of a scaling element is an `R`-unit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PvdElement {
    pub shift: i64,
    pub unit: Vec<Scalar>,
}

impl PvdRing {
    pub fn new(tower: FieldTower, k: Subspace) -> Result<Self, PvdError> {
        if !tower.is_subfield(&k)? {
            return Err(PvdError::NotSubfield);
        }
        if k.rank() == tower.dim() {
            return Err(PvdError::BadTower);
        }
        let degree = tower.dim() / k.rank();
        Ok(PvdRing { tower, k, degree })
    }

    /// `k` = the base field of the tower.
    pub fn over_base(tower: FieldTower) -> Result<Self, PvdError> {
        let k = Subspace::coordinate(tower.field(), tower.dim(), &[0]);
        Self::new(tower, k)
    }

    pub fn tower(&self) -> &FieldTower {
        &self.tower
    }

    pub fn k(&self) -> &Subspace {
        &self.k
    }

    /// `[K:k]`.
    pub fn degree(&self) -> usize {
        self.degree
    }

    fn dim(&self) -> usize {
        self.tower.dim()
    }

    /// `[W:k]`.
    pub fn relative_dim(&self, w: &Subspace) -> usize {
        w.rank() / self.k.rank()
    }

    pub fn is_k_module(&self, w: &Subspace) -> bool {
        !w.is_zero() && self.tower.module_product(&self.k, w).and_then(|kw| w.contains(&kw)).unwrap_or(false)
    }

    pub fn ideal(&self, level: i64, w: Subspace) -> Result<PvdIdeal, PvdError> {
        if w.ambient_dim() != self.dim() || !self.is_k_module(&w) {
            return Err(PvdError::NotModule);
        }
        Ok(PvdIdeal { level, w })
    }

    /// `Xⁿ·(k·span(gens) + M)`.
    pub fn ideal_from_residues(&self, level: i64, gens: Vec<Vec<Scalar>>) -> Result<PvdIdeal, PvdError> {
        let span = Subspace::span(self.tower.field(), self.dim(), gens)?;
        let w = self.tower.module_product(&self.k, &span)?;
        self.ideal(level, w)
    }

    pub fn full(&self) -> Subspace {
        Subspace::full(self.tower.field(), self.dim())
    }

    pub fn unit_ideal(&self) -> PvdIdeal {
        PvdIdeal { level: 0, w: self.k.clone() }
    }

    /// `V = K + M`.
    pub fn valuation_overring(&self) -> PvdIdeal {
        PvdIdeal { level: 0, w: self.full() }
    }

    /// `M = X·V`.
    pub fn maximal_ideal(&self) -> PvdIdeal {
        PvdIdeal { level: 1, w: self.full() }
    }

    /// `φ⁻¹(W) = W + M`.
    pub fn preimage(&self, w: &Subspace) -> Result<PvdIdeal, PvdError> {
        self.ideal(0, w.clone())
    }

    /// Ideal at `level` whose residue module may be zero, in which case it is `X^{level+1}·V`.
    fn normalized(&self, level: i64, w: Subspace) -> PvdIdeal {
        if w.is_zero() {
            PvdIdeal { level: level + 1, w: self.full() }
        } else {
            PvdIdeal { level, w }
        }
    }

    pub fn pvd_product(&self, a: &PvdIdeal, b: &PvdIdeal) -> PvdIdeal {
        let w = self.tower.module_product(&a.w, &b.w).expect("same tower");
        self.normalized(a.level + b.level, w)
    }

    pub fn pvd_colon(&self, a: &PvdIdeal, b: &PvdIdeal) -> PvdIdeal {
        let u = self.tower.field_colon(&a.w, &b.w).expect("divisor residue module is nonzero");
        self.normalized(a.level - b.level, u)
    }

    /// `small ⊆ big`.
    pub fn contains(&self, big: &PvdIdeal, small: &PvdIdeal) -> bool {
        match small.level.cmp(&big.level) {
            core::cmp::Ordering::Greater => true,
            core::cmp::Ordering::Equal => big.w.contains(&small.w).unwrap_or(false),
            core::cmp::Ordering::Less => false,
        }
    }

    pub fn format_element(&self, v: &[Scalar]) -> String {
        format_in_basis(self.tower.algebra().labels(), v)
    }

    /// Checks `x² ∈ k + xk`.
    pub fn is_quadratic_like(&self, x: &[Scalar]) -> bool {
        let kx = self.k_plus_xk(x);
        kx.contains_vector(&self.tower.mul(x, x))
    }

    fn k_plus_xk(&self, x: &[Scalar]) -> Subspace {
        let field = self.tower.field();
        let xk = Subspace::span(field, self.dim(), self.k.basis().iter().map(|b| self.tower.mul(x, b)).collect())
            .expect("dimension");
        self.k.sum(&xk).expect("dimension")
    }

    /// Scan order: basis vectors, then `e_i ± e_j` for `i < j`.
    pub fn scan_candidates(&self) -> Vec<Vec<Scalar>> {
        let field = self.tower.field();
        let n = self.dim();
        let e = |i: usize| {
            let mut v = vec![field.zero(); n];
            v[i] = field.one();
            v
        };
        let mut out: Vec<Vec<Scalar>> = (0..n).map(e).collect();
        for i in 0..n {
            for j in i + 1..n {
                for sign in [1i64, -1] {
                    let mut v = e(i);
                    v[j] = field.from_i64(sign);
                    out.push(v);
                }
            }
        }
        out
    }

    /// Non-regular ideal `X·(W + M)` with `(W:W) = k` when `[K:k] > 2`.
    pub fn non_regular_witness(&self) -> Option<NonRegularWitness> {
        if self.degree <= 2 {
            return None;
        }
        let candidates = self.scan_candidates();
        let (x, z, w) = match candidates.iter().find(|x| !self.is_quadratic_like(x)) {
            Some(x) => (x.clone(), None, self.k_plus_xk(x)),
            None => {
                // Every element is quadratic over k: use k + xk + zk instead.
                let x = candidates.iter().find(|x| !self.k.contains_vector(x))?.clone();
                let kx = self.k_plus_xk(&x);
                let z = candidates.iter().find(|z| !kx.contains_vector(z))?.clone();
                let w = kx.sum(&self.k_plus_xk(&z)).ok()?;
                (x, Some(z), w)
            }
        };
        let ideal = self.ideal(1, w.clone()).ok()?;
        let endomorphism = self.tower.field_colon(&w, &w).ok()?;
        let report = regularity_report(self, &ideal, 4);
        Some(NonRegularWitness { x, z, w, endomorphism, ideal, report })
    }

    /// Classes of `S(R)` by the dimension of `W`: complete when `[K:k] = 2`,
    /// a non-regular witness when `[K:k] ∈ {3, 4}`.
    pub fn pvd_class_analysis(&self) -> Result<PvdClassVerdict, PvdError> {
        match self.degree {
            2 => Ok(PvdClassVerdict::Classified(self.quadratic_classes())),
            3 | 4 => {
                self.non_regular_witness().map(|w| PvdClassVerdict::NotClifford(Box::new(w))).ok_or(PvdError::BadTower)
            }
            d => Err(PvdError::UnsupportedDegree(d)),
        }
    }

    fn quadratic_classes(&self) -> PvdClassTable {
        let reps = vec![self.unit_ideal(), self.valuation_overring()];
        let class_of = |i: &PvdIdeal| reps.iter().position(|r| self.find_scaling(r, i).is_some());
        let mut shapes = Vec::new();
        for x in self.scan_candidates() {
            for level in [-1, 0, 2] {
                if let Ok(i) = self.ideal_from_residues(level, vec![x.clone()]) {
                    shapes.push(i);
                }
            }
        }
        shapes.push(self.maximal_ideal());
        shapes.push(PvdIdeal { level: -3, w: self.full() });
        let shapes_classified = shapes.iter().all(|s| class_of(s).is_some());
        let table: Vec<Vec<usize>> = reps
            .iter()
            .map(|a| reps.iter().map(|b| class_of(&self.pvd_product(a, b)).expect("closed")).collect())
            .collect();
        let semigroup =
            FiniteSemigroup::new(vec![String::from("[R]"), String::from("[V]")], table.clone()).expect("valid table");
        let reports = shapes.iter().chain(reps.iter()).map(|i| (i.clone(), regularity_report(self, i, 4))).collect();
        PvdClassTable { reps, table, semigroup, shapes_classified, reports }
    }
}

pub fn format_in_basis(labels: &[String], v: &[Scalar]) -> String {
    use alloc::format;
    use num_traits::{One, Signed, Zero};
    let mut out = String::new();
    for (x, label) in v.iter().zip(labels) {
        if x.is_zero() {
            continue;
        }
        let neg = x.is_negative();
        let mag = x.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        match (mag.is_one(), label.as_str()) {
            (_, "1") => out.push_str(&format!("{mag}")),
            (true, l) => out.push_str(l),
            (false, l) => out.push_str(&format!("{mag}*{l}")),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for PvdIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "X^{}*({} + M)", self.level, self.w)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct NonRegularWitness {
    pub x: Vec<Scalar>,
    /// Second generator when every element is quadratic over `k`.
    pub z: Option<Vec<Scalar>>,
    pub w: Subspace,
    /// `(W:W)`, equal to `k`.
    pub endomorphism: Subspace,
    pub ideal: PvdIdeal,
    pub report: RegularityReport<PvdIdeal, PvdElement>,
}

impl NonRegularWitness {
    /// `I²(I:I²) ⊊ I`.
    pub fn strict(&self) -> bool {
        !self.report.regular.holds && self.report.regular.recomputed.level > self.ideal.level
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct PvdClassTable {
    /// `[R]` then `[V]`.
    pub reps: Vec<PvdIdeal>,
    pub table: Vec<Vec<usize>>,
    pub semigroup: FiniteSemigroup,
    /// Every sampled shape fell into one of the two classes.
    pub shapes_classified: bool,
    pub reports: Vec<(PvdIdeal, RegularityReport<PvdIdeal, PvdElement>)>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum PvdClassVerdict {
    Classified(PvdClassTable),
    NotClifford(Box<NonRegularWitness>),
}

impl PvdClassVerdict {
    pub fn is_boolean(&self) -> bool {
        matches!(self, PvdClassVerdict::Classified(t) if t.semigroup.is_boolean().holds() && t.shapes_classified)
    }

    pub fn is_clifford(&self) -> bool {
        matches!(self, PvdClassVerdict::Classified(t) if t.semigroup.is_clifford().holds() && t.shapes_classified)
    }
}

impl IdealArithmetic for PvdRing {
    type Ideal = PvdIdeal;
    type Element = PvdElement;

    fn one(&self) -> PvdIdeal {
        self.unit_ideal()
    }

    fn product(&self, a: &PvdIdeal, b: &PvdIdeal) -> PvdIdeal {
        self.pvd_product(a, b)
    }

    fn colon(&self, a: &PvdIdeal, b: &PvdIdeal) -> PvdIdeal {
        self.pvd_colon(a, b)
    }

    fn contains(&self, big: &PvdIdeal, small: &PvdIdeal) -> bool {
        PvdRing::contains(self, big, small)
    }

    /// Any nonzero `u` with `u·W₁ ⊆ W₂` maps `W₁` onto `W₂` once the dimensions agree.
    fn find_scaling(&self, from: &PvdIdeal, to: &PvdIdeal) -> Option<PvdElement> {
        if from.w.rank() != to.w.rank() {
            return None;
        }
        let u = self.tower.field_colon(&to.w, &from.w).ok()?;
        let unit = u.basis().first()?.clone();
        Some(PvdElement { shift: to.level - from.level, unit })
    }

    fn scale(&self, c: &PvdElement, a: &PvdIdeal) -> PvdIdeal {
        let rows = a.w.basis().iter().map(|v| self.tower.mul(&c.unit, v)).collect();
        let w = Subspace::span(self.tower.field(), self.dim(), rows).expect("dimension");
        PvdIdeal { level: a.level + c.shift, w }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::BaseField;
    use crate::regularity::{check_implications, LStability};

    fn q_vec(v: &[i64]) -> Vec<Scalar> {
        v.iter().map(|&x| BaseField::Rationals.from_i64(x)).collect()
    }

    fn biquadratic() -> PvdRing {
        PvdRing::over_base(FieldTower::biquadratic(2, 3).unwrap()).unwrap()
    }

    #[test]
    fn rejects_degenerate_towers() {
        let q = BaseField::Rationals;
        let t = FieldTower::quadratic(2).unwrap();
        assert_eq!(PvdRing::new(t.clone(), Subspace::full(&q, 2)), Err(PvdError::BadTower));
        let not_field = Subspace::coordinate(&q, 2, &[1]);
        assert_eq!(PvdRing::new(t, not_field), Err(PvdError::NotSubfield));
    }

    #[test]
    fn example_ideal_is_not_regular() {
        let r = biquadratic();
        let i =
            r.ideal_from_residues(1, vec![q_vec(&[1, 0, 0, 0]), q_vec(&[0, 1, 0, 0]), q_vec(&[0, 0, 1, 0])]).unwrap();
        let square = r.pvd_product(&i, &i);
        assert_eq!(square, PvdIdeal { level: 2, w: r.full() });
        let report = regularity_report(&r, &i, 4);
        assert!(!report.is_regular());
        assert_eq!(report.regular.recomputed, square);
        assert!(r.contains(&i, &report.regular.recomputed));
        assert!(!r.contains(&report.regular.recomputed, &i));
        assert!(!report.is_stable());
        assert!(check_implications(&r, &i, &report).is_ok());
    }

    #[test]
    fn closed_form_basics() {
        let r = biquadratic();
        let one = r.unit_ideal();
        let m = r.maximal_ideal();
        assert_eq!(r.pvd_product(&one, &m), m);
        assert_eq!(r.pvd_colon(&one, &one), one);
        assert_eq!(r.pvd_colon(&m, &m), r.valuation_overring());
        let x = q_vec(&[0, 1, 0, 0]);
        let xk = r.ideal_from_residues(0, vec![x.clone()]).unwrap();
        assert_eq!(r.pvd_product(&one, &xk), xk);
        assert!(r.find_scaling(&one, &xk).is_some());
        // (M : R) = M and (R : M) = V
        assert_eq!(r.pvd_colon(&m, &one), m);
        assert_eq!(r.pvd_colon(&one, &m), r.valuation_overring());
    }

    #[test]
    fn witness_exists_above_degree_two() {
        let r = biquadratic();
        let w = r.non_regular_witness().unwrap();
        assert_eq!(w.endomorphism, r.k().clone());
        assert!(w.strict());
        assert_eq!(w.report.regular.recomputed.level, 2);

        let q2 = PvdRing::over_base(FieldTower::quadratic(2).unwrap()).unwrap();
        assert!(q2.non_regular_witness().is_none());

        let q = BaseField::Rationals;
        let cubic = FieldTower::simple_extension(&q, &q_vec(&[-2, 0, 0, 1]), "a").unwrap();
        let r3 = PvdRing::over_base(cubic).unwrap();
        let w3 = r3.non_regular_witness().unwrap();
        assert_eq!(w3.x, q_vec(&[0, 1, 0]));
        assert!(w3.strict());
    }

    #[test]
    fn quadratic_extension_is_boolean() {
        let r = PvdRing::over_base(FieldTower::quadratic(2).unwrap()).unwrap();
        let verdict = r.pvd_class_analysis().unwrap();
        assert!(verdict.is_boolean());
        let PvdClassVerdict::Classified(t) = verdict else { panic!("expected a class table") };
        assert_eq!(t.table, vec![vec![0, 1], vec![1, 1]]);
        for (i, report) in &t.reports {
            assert!(report.is_regular() && report.is_strongly_stable(), "{i}");
            assert_eq!(report.l_stable, LStability::Stable { index: 1 });
        }
        for x in r.scan_candidates() {
            assert!(r.is_quadratic_like(&x));
        }
    }

    #[test]
    fn intermediate_field_gives_boolean_ring() {
        let t = FieldTower::biquadratic(2, 3).unwrap();
        let k = Subspace::coordinate(t.field(), 4, &[0, 1]);
        let r = PvdRing::new(t, k).unwrap();
        assert_eq!(r.degree(), 2);
        assert!(r.pvd_class_analysis().unwrap().is_boolean());
    }

    #[test]
    fn prime_field_towers() {
        let f5 = BaseField::prime(5).unwrap();
        let c = |v: &[i64]| v.iter().map(|&x| f5.from_i64(x)).collect::<Vec<_>>();
        let f25 = FieldTower::simple_extension(&f5, &c(&[-2, 0, 1]), "t").unwrap();
        assert!(PvdRing::over_base(f25).unwrap().pvd_class_analysis().unwrap().is_boolean());
        let f625 = FieldTower::simple_extension(&f5, &c(&[-2, 0, 0, 0, 1]), "t").unwrap();
        let r = PvdRing::over_base(f625.clone()).unwrap();
        match r.pvd_class_analysis().unwrap() {
            PvdClassVerdict::NotClifford(w) => assert!(w.strict()),
            other => panic!("expected a witness, got {other:?}"),
        }
        let mid = PvdRing::new(f625, Subspace::coordinate(&f5, 4, &[0, 2])).unwrap();
        assert!(mid.pvd_class_analysis().unwrap().is_boolean());
    }

    #[test]
    fn unsupported_degree() {
        let q = BaseField::Rationals;
        let quintic = FieldTower::simple_extension(&q, &q_vec(&[-2, 0, 0, 0, 0, 1]), "a").unwrap();
        let r = PvdRing::over_base(quintic).unwrap();
        assert_eq!(r.pvd_class_analysis(), Err(PvdError::UnsupportedDegree(5)));
    }

    #[test]
    fn formats_elements() {
        let r = biquadratic();
        assert_eq!(r.format_element(&q_vec(&[0, 1, -1, 0])), "√2 - √3");
        assert_eq!(r.format_element(&q_vec(&[-2, 0, 0, 3])), "-2 + 3*√6");
    }
}
