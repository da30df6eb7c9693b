//! Regularity verdicts over any ring family with exact ideal arithmetic.
//!
//! For a nonzero fractional ideal `I` with endomorphism ring `T = (I:I)`:
//!
//! * regular: `I = I²(I:I²)`;
//! * stable: `I·(T:I) = T`;
//! * strongly stable: `I = qT` for some `q`;
//! * L-stable: `(Iⁿ:Iⁿ) = T` for every `n`.

use alloc::vec::Vec;
use core::fmt::Debug;

/// Exact ideal arithmetic of one ring family.
pub trait IdealArithmetic {
    type Ideal: Clone + Debug + PartialEq;
    type Element: Clone + Debug;

    /// The ring itself, as a fractional ideal.
    fn one(&self) -> Self::Ideal;
    fn product(&self, a: &Self::Ideal, b: &Self::Ideal) -> Self::Ideal;
    /// `(a : b) = {x : x·b ⊆ a}`.
    fn colon(&self, a: &Self::Ideal, b: &Self::Ideal) -> Self::Ideal;
    /// `small ⊆ big`.
    fn contains(&self, big: &Self::Ideal, small: &Self::Ideal) -> bool;
    /// Some `c` with `c·from = to`.
    fn find_scaling(&self, from: &Self::Ideal, to: &Self::Ideal) -> Option<Self::Element>;
    fn scale(&self, c: &Self::Element, a: &Self::Ideal) -> Self::Ideal;

    fn equals(&self, a: &Self::Ideal, b: &Self::Ideal) -> bool {
        a == b
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RegularCheck<I> {
    pub holds: bool,
    pub square: I,
    /// `(I : I²)`.
    pub quotient: I,
    /// `I²·(I : I²)`, always contained in `I`.
    pub recomputed: I,
}

#[derive(Clone, Debug, PartialEq)]
pub struct StableCheck<I> {
    pub holds: bool,
    /// `T = (I : I)`.
    pub endomorphism: I,
    /// `(T : I)`.
    pub dual: I,
    /// `I·(T : I)`.
    pub recomputed: I,
}

/// L-stability from a finite prefix of the chain `(Iⁿ:Iⁿ)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LStability {
    /// Chain constant from `index` on; certified for all `n` because `I` is stable.
    Stable { index: usize },
    /// `(Iⁿ:Iⁿ) ⊋ (I:I)` at `power`, so the union is strictly larger.
    NotStable { power: usize },
    /// Constant up to `checked` but no certificate for larger powers.
    Inconclusive { checked: usize },
}

impl LStability {
    pub fn holds(self) -> bool {
        matches!(self, LStability::Stable { .. })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RegularityReport<I, E> {
    pub regular: RegularCheck<I>,
    pub stable: StableCheck<I>,
    /// Generator `q` with `I = q·(I:I)`.
    pub strongly_stable: Option<E>,
    /// `c` with `I² = c·I`.
    pub scalar_idempotent: Option<E>,
    pub l_stable: LStability,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ImplicationViolation {
    #[error("strongly stable but not stable")]
    StronglyStableNotStable,
    #[error("stable but not regular")]
    StableNotRegular,
    #[error("stable but not L-stable")]
    StableNotLStable,
    #[error("strongly stable but I^2 != qI for the generator q")]
    GeneratorNotScalar,
}

impl<I, E> RegularityReport<I, E> {
    pub fn is_regular(&self) -> bool {
        self.regular.holds
    }

    pub fn is_stable(&self) -> bool {
        self.stable.holds
    }

    pub fn is_strongly_stable(&self) -> bool {
        self.strongly_stable.is_some()
    }

    pub fn is_l_stable(&self) -> bool {
        self.l_stable.holds()
    }

    /// Ideal-level form of the stable Boole-regular criterion:
    /// `(stable ∧ ∃c: I² = cI) ⟺ strongly stable`.
    pub fn boole_criterion_holds(&self) -> bool {
        (self.is_stable() && self.scalar_idempotent.is_some()) == self.is_strongly_stable()
    }
}

/// Computes every verdict for `ideal`; `n_max >= 2` bounds the L-stability chain.
pub fn regularity_report<A: IdealArithmetic>(
    arith: &A,
    ideal: &A::Ideal,
    n_max: usize,
) -> RegularityReport<A::Ideal, A::Element> {
    let regular = check_regular(arith, ideal);
    let stable = check_stable(arith, ideal);
    let strongly_stable = check_strongly_stable(arith, ideal, &stable.endomorphism);
    let scalar_idempotent = arith.find_scaling(ideal, &regular.square);
    let l_stable = check_l_stable(arith, ideal, stable.holds, n_max);
    RegularityReport { regular, stable, strongly_stable, scalar_idempotent, l_stable }
}

pub fn check_regular<A: IdealArithmetic>(arith: &A, ideal: &A::Ideal) -> RegularCheck<A::Ideal> {
    let square = arith.product(ideal, ideal);
    let quotient = arith.colon(ideal, &square);
    let recomputed = arith.product(&square, &quotient);
    let holds = arith.equals(&recomputed, ideal);
    RegularCheck { holds, square, quotient, recomputed }
}

pub fn check_stable<A: IdealArithmetic>(arith: &A, ideal: &A::Ideal) -> StableCheck<A::Ideal> {
    let endomorphism = arith.colon(ideal, ideal);
    let dual = arith.colon(&endomorphism, ideal);
    let recomputed = arith.product(ideal, &dual);
    let holds = arith.equals(&recomputed, &endomorphism);
    StableCheck { holds, endomorphism, dual, recomputed }
}

/// Generator of `ideal` over its endomorphism ring `t`, if principal there.
pub fn check_strongly_stable<A: IdealArithmetic>(arith: &A, ideal: &A::Ideal, t: &A::Ideal) -> Option<A::Element> {
    arith.find_scaling(t, ideal)
}

pub fn check_l_stable<A: IdealArithmetic>(arith: &A, ideal: &A::Ideal, stable: bool, n_max: usize) -> LStability {
    let n_max = n_max.max(2);
    let first = arith.colon(ideal, ideal);
    let mut power = ideal.clone();
    for n in 2..=n_max {
        power = arith.product(&power, ideal);
        if !arith.equals(&arith.colon(&power, &power), &first) {
            return LStability::NotStable { power: n };
        }
    }
    if stable {
        LStability::Stable { index: 1 }
    } else {
        LStability::Inconclusive { checked: n_max }
    }
}

/// Checks the chain strongly stable ⟹ stable ⟹ regular ∧ L-stable and that
/// a strong-stability generator `q` satisfies `I² = qI`.
pub fn check_implications<A: IdealArithmetic>(
    arith: &A,
    ideal: &A::Ideal,
    report: &RegularityReport<A::Ideal, A::Element>,
) -> Result<(), ImplicationViolation> {
    if report.is_strongly_stable() && !report.is_stable() {
        return Err(ImplicationViolation::StronglyStableNotStable);
    }
    if report.is_stable() && !report.is_regular() {
        return Err(ImplicationViolation::StableNotRegular);
    }
    if report.is_stable() && !report.is_l_stable() {
        return Err(ImplicationViolation::StableNotLStable);
    }
    if let Some(q) = &report.strongly_stable {
        if !arith.equals(&arith.scale(q, ideal), &report.regular.square) {
            return Err(ImplicationViolation::GeneratorNotScalar);
        }
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingVerdict {
    pub ideals: usize,
    /// Every ideal regular.
    pub clifford: bool,
    /// Every ideal satisfies `I² = cI`.
    pub boole: bool,
    pub stable: bool,
    pub strongly_stable: bool,
    pub l_stable: bool,
    /// The battery covers every class (a classification makes it complete).
    pub exhaustive: bool,
    /// For Noetherian families: clifford ⟺ stable and boole ⟺ strongly stable.
    pub equivalences_hold: Option<bool>,
    pub boole_criterion_holds: bool,
    pub implications_hold: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, thiserror::Error)]
pub enum VerdictError {
    #[error("battery is empty")]
    EmptyBattery,
}

pub type ReportOf<A> = RegularityReport<<A as IdealArithmetic>::Ideal, <A as IdealArithmetic>::Element>;

/// Aggregates reports over a battery of ideals.
pub fn ring_verdict<A: IdealArithmetic>(
    arith: &A,
    battery: &[A::Ideal],
    exhaustive: bool,
    noetherian: bool,
) -> Result<(RingVerdict, Vec<ReportOf<A>>), VerdictError> {
    if battery.is_empty() {
        return Err(VerdictError::EmptyBattery);
    }
    let reports: Vec<_> = battery.iter().map(|i| regularity_report(arith, i, 4)).collect();
    let all = |f: &dyn Fn(&ReportOf<A>) -> bool| reports.iter().all(f);
    let clifford = all(&|r| r.is_regular());
    let boole = all(&|r| r.scalar_idempotent.is_some());
    let stable = all(&|r| r.is_stable());
    let strongly_stable = all(&|r| r.is_strongly_stable());
    let verdict = RingVerdict {
        ideals: battery.len(),
        clifford,
        boole,
        stable,
        strongly_stable,
        l_stable: all(&|r| r.is_l_stable()),
        exhaustive,
        equivalences_hold: noetherian.then_some(clifford == stable && boole == strongly_stable),
        boole_criterion_holds: all(&|r| r.boole_criterion_holds()),
        implications_hold: battery.iter().zip(reports.iter()).all(|(i, r)| check_implications(arith, i, r).is_ok()),
    };
    Ok((verdict, reports))
}
