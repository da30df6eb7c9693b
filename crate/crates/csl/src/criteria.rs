//! The acceptance battery, one function per criterion.
//!
//! Criteria 9 and 10 are global: every regularity report produced by the
//! other criteria is recorded in a [`Tally`] and checked at the end.

use std::time::{Duration, Instant};

use csl_core::kernel::{BaseField, Scalar, Subspace};
use csl_core::pvd::oracle::{truncated_colon, DEFAULT_DEPTH};
use csl_core::pvd::{PvdClassVerdict, PvdIdeal, PvdRing};
use csl_core::quadratic::{exhaustive_sublattice_oracle, reduced_form_count, QuadraticOrder};
use csl_core::regularity::{check_implications, regularity_report, IdealArithmetic, RegularityReport};
use csl_core::semigroup::{all_commutative_tables, random_commutative_table, FiniteSemigroup};
use csl_core::window::WindowRing;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::families::{dvr_reports, quad_report, L_STABILITY_DEPTH};
use crate::files::preset_tower;
use crate::polyparse::parse_poly_list;

pub const GRID_DK: [i64; 8] = [-3, -4, -7, -8, -11, -15, -20, -23];
pub const GRID_F: std::ops::RangeInclusive<i64> = 1..=6;

/// Seed for randomized criteria, overridable through `CSL_SEED`.
pub fn seed() -> u64 {
    std::env::var("CSL_SEED").ok().and_then(|s| s.parse().ok()).unwrap_or(0x5eed_2024)
}

#[derive(Debug, Clone, Default)]
pub struct Tally {
    pub boole_checked: usize,
    pub boole_failures: Vec<String>,
    pub implication_checked: usize,
    pub implication_failures: Vec<String>,
}

impl Tally {
    /// Records the implication chain, and the Boole criterion when `boole` is set.
    fn record<A: IdealArithmetic>(
        &mut self,
        arith: &A,
        ideal: &A::Ideal,
        report: &RegularityReport<A::Ideal, A::Element>,
        boole: bool,
        name: &str,
    ) {
        self.implication_checked += 1;
        if let Err(e) = check_implications(arith, ideal, report) {
            self.implication_failures.push(format!("{name}: {e}"));
        }
        if boole {
            self.boole_checked += 1;
            if !report.boole_criterion_holds() {
                self.boole_failures.push(name.to_string());
            }
        }
    }
}

#[derive(Debug, Clone)]
pub struct CriterionResult {
    pub number: usize,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl CriterionResult {
    pub fn line(&self) -> String {
        format!(
            "criterion {:>2} [{}] {} -- {} ({:.2?})",
            self.number,
            if self.passed { "PASS" } else { "FAIL" },
            self.title,
            self.detail,
            self.elapsed
        )
    }
}

pub const TITLES: [&str; 12] = [
    "quadratic grid: every class regular",
    "structural decomposition matches form counts",
    "brute-force sublattice oracle equivalence",
    "Boolean dichotomy on the quadratic grid",
    "k[X^2,X^3] ideal (X^2-1, X^3-1) over Q and F_5",
    "Q(sqrt2,sqrt3) PVD ideal at level 1 not regular",
    "PVD class analysis: degree 2 Boolean, degree > 2 witness",
    "endomorphism ring of preimages on 50 random W",
    "(stable and I^2 = cI) iff strongly stable",
    "strongly stable => stable => regular and L-stable",
    "semigroup soundness on small tables",
    "DVR coefficient ring battery, p = 3",
];

fn divisors(f: i64) -> Vec<i64> {
    (1..=f).filter(|d| f % d == 0).collect()
}

fn h(dk: i64, fp: i64) -> usize {
    reduced_form_count(fp * fp * dk).expect("valid discriminant")
}

pub fn criterion_1(tally: &mut Tally) -> (bool, String) {
    let start = Instant::now();
    let mut classes = 0;
    let mut failures = Vec::new();
    for dk in GRID_DK {
        for f in GRID_F {
            let order = QuadraticOrder::new(dk, f).expect("grid order");
            let (table, _) = match quad_report(dk, f, None) {
                Ok(t) => t,
                Err(e) => {
                    failures.push(format!("({dk},{f}): {e}"));
                    continue;
                }
            };
            for rep in &table.reps {
                classes += 1;
                let r = regularity_report(&order, &rep.lattice, L_STABILITY_DEPTH);
                if !r.is_regular() {
                    failures.push(format!("({dk},{f}) {}", rep.label));
                }
                tally.record(&order, &rep.lattice, &r, true, &format!("quad({dk},{f}) {}", rep.label));
            }
        }
    }
    let elapsed = start.elapsed();
    let ok = failures.is_empty() && elapsed < Duration::from_secs(60);
    (ok, format!("{classes} classes over 48 orders, {} not regular, {:.2?} (< 60 s)", failures.len(), elapsed))
}

pub fn criterion_2() -> (bool, String) {
    let mut bad = Vec::new();
    for dk in GRID_DK {
        for f in GRID_F {
            let (table, _) = match quad_report(dk, f, None) {
                Ok(t) => t,
                Err(e) => {
                    bad.push(format!("({dk},{f}): {e}"));
                    continue;
                }
            };
            let expect: usize = divisors(f).iter().map(|&fp| h(dk, fp)).sum();
            if table.len() != expect {
                bad.push(format!("({dk},{f}): {} classes, forms give {expect}", table.len()));
            }
            let idem = table.semigroup.idempotents();
            if idem.len() != divisors(f).len() {
                bad.push(format!("({dk},{f}): {} idempotents", idem.len()));
            }
            let mut seen: Vec<i64> = idem.iter().map(|&e| table.reps[e].multiplier_conductor).collect();
            seen.sort_unstable();
            if seen != divisors(f) {
                bad.push(format!("({dk},{f}): idempotent multipliers {seen:?}"));
            }
            for &e in &idem {
                let fp = table.reps[e].multiplier_conductor;
                let g = table.semigroup.maximal_subgroup(e).len();
                if g != h(dk, fp) {
                    bad.push(format!("({dk},{f}) f'={fp}: |G_e| = {g}, forms give {}", h(dk, fp)));
                }
            }
        }
    }
    (bad.is_empty(), if bad.is_empty() { "48 orders agree".into() } else { bad.join("; ") })
}

pub fn criterion_3() -> (bool, String) {
    let mut notes = Vec::new();
    let mut ok = true;
    for (dk, f) in [(-3, 2), (-4, 2), (-3, 3)] {
        let order = QuadraticOrder::new(dk, f).expect("order");
        let structural = quad_report(dk, f, None).map(|t| t.0);
        let oracle = exhaustive_sublattice_oracle(&order, 60);
        match (structural, oracle) {
            (Ok(s), Ok(o)) => {
                let same = o.matches(&s).ok().flatten().is_some();
                ok &= same;
                notes.push(format!("({dk},{f}) {} classes {}", s.len(), if same { "match" } else { "DIFFER" }));
            }
            (s, o) => {
                ok = false;
                notes.push(format!("({dk},{f}) error {:?} / {:?}", s.err(), o.err()));
            }
        }
    }
    (ok, notes.join(", "))
}

pub fn criterion_4() -> (bool, String) {
    let mut bad = Vec::new();
    let mut boolean_orders = 0;
    for dk in GRID_DK {
        for f in GRID_F {
            let Ok((table, _)) = quad_report(dk, f, None) else {
                bad.push(format!("({dk},{f}) failed"));
                continue;
            };
            let boolean = table.semigroup.is_boolean().holds();
            let forms_trivial = divisors(f).iter().all(|&fp| h(dk, fp) == 1);
            boolean_orders += usize::from(boolean);
            if boolean != forms_trivial {
                bad.push(format!("({dk},{f})"));
            }
        }
    }
    let (t1, _) = quad_report(-3, 2, None).expect("order");
    let (t2, _) = quad_report(-15, 1, None).expect("order");
    let named =
        t1.semigroup.is_boolean().holds() && !t2.semigroup.is_boolean().holds() && t2.semigroup.is_clifford().holds();
    let ok = bad.is_empty() && named;
    (
        ok,
        format!(
            "{boolean_orders} Boolean orders, {} mismatches, named cases {}",
            bad.len(),
            if named { "ok" } else { "WRONG" }
        ),
    )
}

pub fn criterion_5(tally: &mut Tally) -> (bool, String) {
    let mut ok = true;
    let mut notes = Vec::new();
    for field in [BaseField::Rationals, BaseField::prime(5).expect("prime")] {
        let c = parse_poly_list("X^2", &field).expect("poly").remove(0);
        let r = WindowRing::constants(&field, &c).expect("ring");
        let gens = parse_poly_list("X^2-1,X^3-1", &field).expect("polys");
        let i = r.ideal_from_generators(&gens).expect("ideal");
        let rep = regularity_report(&r, &i, L_STABILITY_DEPTH);
        tally.record(&r, &i, &rep, true, &format!("example ideal over {field}"));
        let endo_is_r = rep.stable.endomorphism == r.unit_ideal();
        let pass = endo_is_r && rep.is_regular() && rep.is_stable() && !rep.is_strongly_stable();
        ok &= pass;
        notes.push(format!(
            "{field}: (I:I)=R {endo_is_r}, regular {}, stable {}, strongly stable {}",
            rep.is_regular(),
            rep.is_stable(),
            rep.is_strongly_stable()
        ));
    }
    (ok, notes.join("; "))
}

pub fn criterion_6(tally: &mut Tally) -> (bool, String) {
    let r = preset_tower("sqrt2-sqrt3").expect("preset").expect("tower");
    let q = BaseField::Rationals;
    let rows =
        [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0]].iter().map(|v| v.iter().map(|&x| q.from_i64(x)).collect()).collect();
    let i = r.ideal_from_residues(1, rows).expect("ideal");
    let rep = regularity_report(&r, &i, L_STABILITY_DEPTH);
    tally.record(&r, &i, &rep, true, "biquadratic PVD ideal");
    let rec = &rep.regular.recomputed;
    let strict = r.contains(&i, rec) && !r.contains(rec, &i);
    let ok = !rep.is_regular() && strict;
    (ok, format!("regular {}, I^2(I:I^2) = X^{}*V strictly inside I: {strict}", rep.is_regular(), rec.level))
}

fn record_pvd(tally: &mut Tally, r: &PvdRing, verdict: &PvdClassVerdict, name: &str) {
    match verdict {
        PvdClassVerdict::Classified(t) => {
            for (i, rep) in &t.reports {
                tally.record(r, i, rep, true, name);
            }
        }
        PvdClassVerdict::NotClifford(w) => tally.record(r, &w.ideal, &w.report, true, name),
    }
}

pub fn criterion_7(tally: &mut Tally) -> (bool, String) {
    let mut ok = true;
    let mut notes = Vec::new();
    for (name, expect_boolean) in [("sqrt2", true), ("sqrt2-sqrt3", false), ("f25", true), ("f625", false)] {
        let r = preset_tower(name).expect("preset").expect("tower");
        let verdict = match r.pvd_class_analysis() {
            Ok(v) => v,
            Err(e) => {
                ok = false;
                notes.push(format!("{name}: {e}"));
                continue;
            }
        };
        record_pvd(tally, &r, &verdict, name);
        let pass = match &verdict {
            PvdClassVerdict::Classified(t) => {
                let classes = t.reps == vec![r.unit_ideal(), r.valuation_overring()];
                expect_boolean && verdict.is_boolean() && classes && t.table == vec![vec![0, 1], vec![1, 1]]
            }
            PvdClassVerdict::NotClifford(w) => !expect_boolean && w.strict(),
        };
        ok &= pass;
        let shape = if expect_boolean { "Boolean {[R],[V]}" } else { "witness" };
        notes.push(format!("{name}: {shape} {}", if pass { "ok" } else { "WRONG" }));
    }
    (ok, notes.join(", "))
}

/// Random `W` with `k ⊆ W ⊊ K` in `Q(√2, √3)`.
pub fn random_intermediate(r: &PvdRing, rng: &mut StdRng) -> Subspace {
    let q = r.tower().field().clone();
    loop {
        let extra = rng.gen_range(0..=2);
        let mut rows: Vec<Vec<Scalar>> = r.k().basis().to_vec();
        for _ in 0..extra {
            rows.push((0..r.tower().dim()).map(|_| q.from_i64(rng.gen_range(-3..=3))).collect());
        }
        let w = Subspace::span(&q, r.tower().dim(), rows).expect("dimension");
        if !w.is_full() {
            return w;
        }
    }
}

pub fn criterion_8(seed: u64) -> (bool, String) {
    let r = preset_tower("sqrt2-sqrt3").expect("preset").expect("tower");
    let mut rng = StdRng::seed_from_u64(seed);
    let mut failures = 0;
    let mut dims = [0usize; 4];
    for _ in 0..50 {
        let w = random_intermediate(&r, &mut rng);
        dims[w.rank()] += 1;
        let pre = r.preimage(&w).expect("k-module");
        let lhs = r.pvd_colon(&pre, &pre);
        let rhs = PvdIdeal { level: 0, w: r.tower().field_colon(&w, &w).expect("colon") };
        let brute = truncated_colon(&r, &pre, &pre, DEFAULT_DEPTH);
        if lhs != rhs || brute.as_ref() != Some(&rhs) {
            failures += 1;
        }
    }
    (
        failures == 0,
        format!("seed {seed}: 50 subspaces (dims 1/2/3: {}/{}/{}), {failures} failures", dims[1], dims[2], dims[3]),
    )
}

pub fn criterion_9(tally: &Tally) -> (bool, String) {
    let ok = tally.boole_checked > 0 && tally.boole_failures.is_empty();
    let mut detail = format!("{} ideals, {} exceptions", tally.boole_checked, tally.boole_failures.len());
    if !tally.boole_failures.is_empty() {
        detail += &format!(": {}", tally.boole_failures.join(", "));
    }
    (ok, detail)
}

pub fn criterion_10(tally: &Tally) -> (bool, String) {
    let ok = tally.implication_checked > 0 && tally.implication_failures.is_empty();
    let mut detail = format!("{} reports, {} exceptions", tally.implication_checked, tally.implication_failures.len());
    if !tally.implication_failures.is_empty() {
        detail += &format!(": {}", tally.implication_failures.join(", "));
    }
    (ok, detail)
}

/// `None` when the decomposition agrees with both verdicts.
fn semigroup_mismatch(s: &FiniteSemigroup) -> Option<String> {
    let d = s.clifford_decomposition();
    let mut covered: Vec<usize> = d.groups.values().flatten().copied().collect();
    covered.sort_unstable();
    let partitions = d.unassigned.is_empty() && covered == (0..s.len()).collect::<Vec<_>>();
    let clifford = s.is_clifford().holds();
    let trivial = d.groups.values().all(|g| g.len() == 1);
    let boolean = s.is_boolean().holds();
    if partitions != clifford {
        return Some(format!("{:?}: partition {partitions}, clifford {clifford}", s.table()));
    }
    if boolean != (clifford && trivial) {
        return Some(format!("{:?}: boolean {boolean}, trivial groups {trivial}", s.table()));
    }
    None
}

pub fn criterion_11(seed: u64) -> (bool, String) {
    let mut failures = Vec::new();
    let mut counts = Vec::new();
    for n in 1..=4 {
        let tables = all_commutative_tables(n);
        counts.push(tables.len());
        for t in tables {
            let s = FiniteSemigroup::unlabeled(t).expect("generated tables are valid");
            failures.extend(semigroup_mismatch(&s));
        }
    }
    let mut rng = StdRng::seed_from_u64(seed);
    for _ in 0..1000 {
        let t = random_commutative_table(5, &mut |n| rng.gen_range(0..n));
        let s = FiniteSemigroup::unlabeled(t).expect("generated tables are valid");
        failures.extend(semigroup_mismatch(&s));
    }
    let detail = format!(
        "tables of size 1-4: {}, random size 5: 1000 (seed {seed}), {} mismatches",
        counts.iter().map(|c| c.to_string()).collect::<Vec<_>>().join("/"),
        failures.len()
    );
    (failures.is_empty(), detail)
}

pub fn criterion_12(tally: &mut Tally) -> (bool, String) {
    let Ok((v, _)) = dvr_reports(3) else { return (false, "could not build the ring".into()) };
    let ring = csl_core::pvd::DvrRing::new(3).expect("prime");
    for (i, r) in v.ideals.iter().zip(&v.reports) {
        tally.record(&ring, i, r, false, &format!("dvr {i}"));
    }
    let regular = v.reports.iter().filter(|r| r.is_regular()).count();
    let ok = regular == v.reports.len() && v.verdict.clifford;
    (ok, format!("{regular}/{} ideals regular, strongly stable: {}", v.reports.len(), v.verdict.strongly_stable))
}

/// Runs every criterion; 9 and 10 are evaluated over all reports of the others.
pub fn run_all(seed: u64) -> Vec<CriterionResult> {
    let mut tally = Tally::default();
    let mut results: Vec<Option<CriterionResult>> = vec![None; 12];
    let mut timed = |n: usize, f: &mut dyn FnMut(&mut Tally) -> (bool, String), tally: &mut Tally| {
        let start = Instant::now();
        let (passed, detail) = f(tally);
        results[n - 1] =
            Some(CriterionResult { number: n, title: TITLES[n - 1], passed, detail, elapsed: start.elapsed() });
    };
    timed(1, &mut |t| criterion_1(t), &mut tally);
    timed(2, &mut |_| criterion_2(), &mut tally);
    timed(3, &mut |_| criterion_3(), &mut tally);
    timed(4, &mut |_| criterion_4(), &mut tally);
    timed(5, &mut |t| criterion_5(t), &mut tally);
    timed(6, &mut |t| criterion_6(t), &mut tally);
    timed(7, &mut |t| criterion_7(t), &mut tally);
    timed(8, &mut |_| criterion_8(seed), &mut tally);
    timed(11, &mut |_| criterion_11(seed), &mut tally);
    timed(12, &mut |t| criterion_12(t), &mut tally);
    timed(9, &mut |t| criterion_9(t), &mut tally);
    timed(10, &mut |t| criterion_10(t), &mut tally);
    results.into_iter().map(|r| r.expect("every criterion ran")).collect()
}

/// Runs one criterion, replaying the others it depends on.
pub fn run_one(n: usize, seed: u64) -> Option<CriterionResult> {
    if !(1..=12).contains(&n) {
        return None;
    }
    if n == 9 || n == 10 {
        return run_all(seed).into_iter().nth(n - 1);
    }
    let mut tally = Tally::default();
    let start = Instant::now();
    let (passed, detail) = match n {
        1 => criterion_1(&mut tally),
        2 => criterion_2(),
        3 => criterion_3(),
        4 => criterion_4(),
        5 => criterion_5(&mut tally),
        6 => criterion_6(&mut tally),
        7 => criterion_7(&mut tally),
        8 => criterion_8(seed),
        11 => criterion_11(seed),
        _ => criterion_12(&mut tally),
    };
    Some(CriterionResult { number: n, title: TITLES[n - 1], passed, detail, elapsed: start.elapsed() })
}

/// Degree-2 check that `x² ∈ k + xk` over a coefficient grid.
pub fn quadratic_dichotomy(r: &PvdRing) -> bool {
    let q = r.tower().field().clone();
    (-3..=3).all(|a| (-3..=3).all(|b| r.is_quadratic_like(&[q.from_i64(a), q.from_i64(b)])))
}
