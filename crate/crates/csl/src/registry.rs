//! Named examples with their expected verdicts.

use std::time::Instant;

use csl_core::kernel::{BaseField, Poly, RatFn};
use csl_core::pvd::{DvrRing, PvdClassVerdict};
use csl_core::regularity::{regularity_report, ring_verdict, IdealArithmetic};
use csl_core::window::WindowRing;

use crate::criteria::{self, quadratic_dichotomy};
use crate::families::{window_ideal_report, L_STABILITY_DEPTH};
use crate::files::preset_tower;
use crate::polyparse::parse_poly_list;
use crate::report::{Check, ExampleOutcome};

pub struct ExampleSpec {
    pub id: &'static str,
    pub description: &'static str,
    run: fn(u64) -> Vec<Check>,
}

impl ExampleSpec {
    pub fn run(&self, seed: u64) -> ExampleOutcome {
        let start = Instant::now();
        let checks = (self.run)(seed);
        ExampleOutcome {
            id: self.id.to_string(),
            description: self.description.to_string(),
            checks,
            elapsed_ms: start.elapsed().as_millis(),
        }
    }
}

fn cusp_checks(field: &BaseField) -> Vec<Check> {
    let c = parse_poly_list("X^2", field).expect("poly").remove(0);
    let r = WindowRing::constants(field, &c).expect("ring");
    let gens = parse_poly_list("X^2-1,X^3-1", field).expect("polys");
    let (ideal, report, _) = window_ideal_report(&r, &gens).expect("ideal");
    let x_minus_1 = parse_poly_list("X-1", field).expect("poly").remove(0);
    let battery: Vec<_> = ["1", "X^2,X^3", "X^2-1,X^3-1", "X^2-4,X^3-8", "X^2+X+1"]
        .iter()
        .map(|g| r.ideal_from_generators(&parse_poly_list(g, field).expect("polys")).expect("ideal"))
        .collect();
    let (verdict, _) = ring_verdict(&r, &battery, false, true).expect("battery");
    vec![
        Check::new(format!("{field}: (I:I) = R"), true, report.stable.endomorphism == r.unit_ideal()),
        Check::new(format!("{field}: g = X - 1"), true, ideal.g.as_poly() == Some(&x_minus_1)),
        Check::new(format!("{field}: regular"), true, report.is_regular()),
        Check::new(format!("{field}: stable"), true, report.is_stable()),
        Check::new(format!("{field}: strongly stable"), false, report.is_strongly_stable()),
        Check::new(format!("{field}: battery Clifford"), true, verdict.clifford),
        Check::new(format!("{field}: battery Boole"), false, verdict.boole),
    ]
}

fn cusp_example(_: u64) -> Vec<Check> {
    let mut out = cusp_checks(&BaseField::Rationals);
    out.extend(cusp_checks(&BaseField::prime(5).expect("prime")));
    out
}

fn biquadratic_pvd(_: u64) -> Vec<Check> {
    let r = preset_tower("sqrt2-sqrt3").expect("preset").expect("tower");
    let q = BaseField::Rationals;
    let rows =
        [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0]].iter().map(|v| v.iter().map(|&x| q.from_i64(x)).collect()).collect();
    let i = r.ideal_from_residues(1, rows).expect("ideal");
    let rep = regularity_report(&r, &i, L_STABILITY_DEPTH);
    let rec = &rep.regular.recomputed;
    let t = preset_tower("sqrt2-sqrt3/sqrt2").expect("preset").expect("tower");
    let t_verdict = t.pvd_class_analysis().expect("degree 2");
    vec![
        Check::new("I regular", false, rep.is_regular()),
        Check::new("I^2(I:I^2) strictly inside I", true, r.contains(&i, rec) && !r.contains(rec, &i)),
        Check::new("I stable", false, rep.is_stable()),
        Check::new("R Clifford", false, r.pvd_class_analysis().map(|v| v.is_clifford()).unwrap_or(true)),
        Check::new("T = Q(sqrt2) + M Boolean", true, t_verdict.is_boolean()),
    ]
}

fn quadratic_pvd(_: u64) -> Vec<Check> {
    let mut out = Vec::new();
    for name in ["sqrt2", "f25"] {
        let r = preset_tower(name).expect("preset").expect("tower");
        let v = r.pvd_class_analysis().expect("degree 2");
        out.push(Check::new(format!("{name}: Clifford"), true, v.is_clifford()));
        out.push(Check::new(format!("{name}: Boolean"), true, v.is_boolean()));
        if let PvdClassVerdict::Classified(t) = &v {
            out.push(Check::new(
                format!("{name}: classes [R], [V]"),
                true,
                t.reps == vec![r.unit_ideal(), r.valuation_overring()],
            ));
            out.push(Check::new(
                format!("{name}: every shape strongly stable"),
                true,
                t.reports.iter().all(|(_, x)| x.is_strongly_stable()),
            ));
        }
    }
    let r = preset_tower("sqrt2").expect("preset").expect("tower");
    out.push(Check::new("sqrt2: x^2 in k + xk on a grid", true, quadratic_dichotomy(&r)));
    out
}

fn witness_scan(_: u64) -> Vec<Check> {
    let mut out = Vec::new();
    for (name, expect) in
        [("sqrt2", false), ("sqrt2-sqrt3", true), ("cbrt2", true), ("f625", true), ("f625/f25", false)]
    {
        let r = preset_tower(name).expect("preset").expect("tower");
        let w = r.non_regular_witness();
        out.push(Check::new(format!("{name}: witness exists"), expect, w.is_some()));
        if let Some(w) = w {
            out.push(Check::new(format!("{name}: (W:W) = k"), true, w.endomorphism == *r.k()));
            out.push(
                Check::new(format!("{name}: I^2(I:I^2) strictly inside I"), true, w.strict())
                    .with_detail(format!("x = {}", r.format_element(&w.x))),
            );
        }
    }
    out
}

fn dvr_instance(_: u64) -> Vec<Check> {
    let ring = DvrRing::new(3).expect("prime");
    let q = BaseField::Rationals;
    let x = RatFn::poly(Poly::x_pow(&q, 1)).expect("nonzero");
    let unit = ring.ideal(&RatFn::poly(Poly::one()).expect("nonzero"), 0);
    let i = ring.ideal(&x, 2);
    let ru = regularity_report(&ring, &unit, L_STABILITY_DEPTH);
    let ri = regularity_report(&ring, &i, L_STABILITY_DEPTH);
    let nine_x = RatFn::poly(Poly::x_pow(&q, 1).scale(&q.from_i64(9), &q)).expect("nonzero");
    let v = csl_core::pvd::dvr_coefficient_instance(3).expect("prime");
    vec![
        Check::new("a = 0: regular", true, ru.is_regular()),
        Check::new("a = 2, h = X: regular", true, ri.is_regular()),
        Check::new("a = 2, h = X: strongly stable", true, ri.is_strongly_stable()),
        Check::new("a = 2, h = X: generator 9X", true, ri.strongly_stable == Some(nine_x)),
        Check::new("a = 2, h = X: (I:I) = R", true, ri.stable.endomorphism == ring.one()),
        Check::new("battery Clifford", true, v.verdict.clifford),
    ]
}

macro_rules! criterion_entry {
    ($fn:ident, $n:expr) => {
        fn $fn(seed: u64) -> Vec<Check> {
            let r = criteria::run_one($n, seed).expect("valid criterion");
            vec![Check::new(r.title, true, r.passed).with_detail(r.detail)]
        }
    };
}

criterion_entry!(c1, 1);
criterion_entry!(c2, 2);
criterion_entry!(c3, 3);
criterion_entry!(c4, 4);
criterion_entry!(c5, 5);
criterion_entry!(c6, 6);
criterion_entry!(c7, 7);
criterion_entry!(c8, 8);
criterion_entry!(c9, 9);
criterion_entry!(c10, 10);
criterion_entry!(c11, 11);
criterion_entry!(c12, 12);

pub static REGISTRY: &[ExampleSpec] = &[
    ExampleSpec { id: "example-4.6", description: "k[X^2,X^3] is stable but not strongly stable", run: cusp_example },
    ExampleSpec {
        id: "example-5.2",
        description: "Q + X*Q(sqrt2,sqrt3)[[X]] has a non-regular class",
        run: biquadratic_pvd,
    },
    ExampleSpec { id: "example-5.4", description: "PVD of a DVR with [K:k] = 2 is Boolean", run: quadratic_pvd },
    ExampleSpec {
        id: "theorem-5.1-witness",
        description: "non-regular witness exactly when [K:k] > 2",
        run: witness_scan,
    },
    ExampleSpec { id: "theorem-5.5-dvr", description: "Z_(3) + X*Q[X] battery is Clifford", run: dvr_instance },
    ExampleSpec { id: "criterion-1", description: criteria::TITLES[0], run: c1 },
    ExampleSpec { id: "criterion-2", description: criteria::TITLES[1], run: c2 },
    ExampleSpec { id: "criterion-3", description: criteria::TITLES[2], run: c3 },
    ExampleSpec { id: "criterion-4", description: criteria::TITLES[3], run: c4 },
    ExampleSpec { id: "criterion-5", description: criteria::TITLES[4], run: c5 },
    ExampleSpec { id: "criterion-6", description: criteria::TITLES[5], run: c6 },
    ExampleSpec { id: "criterion-7", description: criteria::TITLES[6], run: c7 },
    ExampleSpec { id: "criterion-8", description: criteria::TITLES[7], run: c8 },
    ExampleSpec { id: "criterion-9", description: criteria::TITLES[8], run: c9 },
    ExampleSpec { id: "criterion-10", description: criteria::TITLES[9], run: c10 },
    ExampleSpec { id: "criterion-11", description: criteria::TITLES[10], run: c11 },
    ExampleSpec { id: "criterion-12", description: criteria::TITLES[11], run: c12 },
];

pub fn find(id: &str) -> Option<&'static ExampleSpec> {
    REGISTRY.iter().find(|e| e.id == id)
}

/// `examples all`: the named examples plus criteria 1-12, with 9 and 10 evaluated once over the whole battery.
pub fn run_all(seed: u64) -> Vec<ExampleOutcome> {
    let mut out: Vec<ExampleOutcome> =
        REGISTRY.iter().filter(|e| !e.id.starts_with("criterion-")).map(|e| e.run(seed)).collect();
    for r in criteria::run_all(seed) {
        out.push(ExampleOutcome {
            id: format!("criterion-{}", r.number),
            description: r.title.to_string(),
            checks: vec![Check::new(r.title, true, r.passed).with_detail(&r.detail)],
            elapsed_ms: r.elapsed.as_millis(),
        });
    }
    out
}
