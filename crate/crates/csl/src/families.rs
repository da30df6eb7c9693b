//! Builders that run one ring family and package the result as a report.

use csl_core::kernel::{BaseField, Poly, Subspace};
use csl_core::pvd::{DvrRing, PvdClassVerdict, PvdElement, PvdIdeal, PvdRing};
use csl_core::quadratic::{enumerate_class_semigroup, ClassTable, QuadError, QuadraticOrder};
use csl_core::regularity::{regularity_report, IdealArithmetic, RegularityReport};
use csl_core::window::{WindowError, WindowIdeal, WindowRing};

use crate::polyparse::{parse_poly_in, parse_poly_list, ParseError};
use crate::report::{class_entries, IdealReport, PvdReport, PvdWitnessReport, QuadReport, WindowFields};

/// Chain length used for L-stability in every report.
pub const L_STABILITY_DEPTH: usize = 4;

pub fn quad_report(dk: i64, f: i64, bound: Option<u64>) -> Result<(ClassTable, QuadReport), QuadError> {
    let order = QuadraticOrder::new(dk, f)?;
    let table = enumerate_class_semigroup(&order, bound)?;
    let reports: Vec<IdealReport> = table
        .reps
        .iter()
        .map(|rep| {
            let r = regularity_report(&order, &rep.lattice, L_STABILITY_DEPTH);
            let endo =
                format!("O_{}", order.multiplier_order(&r.stable.endomorphism).unwrap_or(rep.multiplier_conductor));
            IdealReport::build(&order, &rep.lattice, &r, |l| l.to_string(), |e| e.to_string(), endo)
        })
        .collect();
    let mut classes = class_entries(&table);
    for (c, r) in classes.iter_mut().zip(&reports) {
        c.regular = r.regular;
        c.stable = r.stable;
        c.strongly_stable = r.strongly_stable;
    }
    let report = QuadReport {
        fundamental_discriminant: dk,
        conductor: f,
        discriminant: order.discriminant(),
        bound: table.bound,
        classes,
        table: table.table.clone(),
        clifford: table.semigroup.is_clifford().holds(),
        boolean: table.semigroup.is_boolean().holds(),
        every_class_regular: reports.iter().all(|r| r.regular),
        reports,
    };
    Ok((table, report))
}

#[derive(Debug, thiserror::Error)]
pub enum WindowInputError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Window(#[from] WindowError),
}

/// `D` given as `const`, `full`, or a comma-separated list of polynomials.
pub fn window_ring(field: &BaseField, conductor: &str, d: &str) -> Result<WindowRing, WindowInputError> {
    let c = parse_poly_in(conductor, field)?;
    Ok(match d.trim() {
        "const" => WindowRing::constants(field, &c)?,
        "full" => {
            let m = c.degree().unwrap_or(0);
            if m == 0 {
                return Err(WindowError::BadConductor.into());
            }
            WindowRing::new(field, &c, Subspace::full(field, m))?
        }
        list => WindowRing::from_polys(field, &c, &parse_poly_list(list, field)?)?,
    })
}

fn endo_description(r: &WindowRing, t: &WindowIdeal) -> String {
    if *t == r.unit_ideal() {
        "R".into()
    } else if *t == r.closure() {
        "closure".into()
    } else {
        t.describe()
    }
}

pub fn window_ideal_report(
    r: &WindowRing,
    gens: &[Poly],
) -> Result<(WindowIdeal, RegularityReport<WindowIdeal, csl_core::kernel::RatFn>, IdealReport), WindowError> {
    let ideal = r.ideal_from_generators(gens)?;
    let report = regularity_report(r, &ideal, L_STABILITY_DEPTH);
    let endo = endo_description(r, &report.stable.endomorphism);
    let mut json = IdealReport::build(r, &ideal, &report, WindowIdeal::describe, |e| e.to_string(), endo);
    json.window = Some(WindowFields {
        generators: gens.iter().map(|g| g.to_string()).collect(),
        g: ideal.g.to_string(),
        window_dim: r.window_dim(),
        subspace_rank: ideal.subspace.rank(),
    });
    Ok((ideal, report, json))
}

pub fn describe_pvd_ideal(r: &PvdRing, i: &PvdIdeal) -> String {
    if i.w == *r.k() {
        return format!("X^{}*R", i.level);
    }
    if i.w.is_full() {
        return format!("X^{}*V", i.level);
    }
    let basis: Vec<String> = i.w.basis().iter().map(|v| r.format_element(v)).collect();
    format!("X^{}*(k<{}> + M)", i.level, basis.join(", "))
}

pub fn describe_pvd_element(r: &PvdRing, e: &PvdElement) -> String {
    format!("({})*X^{}", r.format_element(&e.unit), e.shift)
}

pub fn pvd_ideal_report(r: &PvdRing, i: &PvdIdeal) -> (RegularityReport<PvdIdeal, PvdElement>, IdealReport) {
    let report = regularity_report(r, i, L_STABILITY_DEPTH);
    let endo = describe_pvd_ideal(r, &report.stable.endomorphism);
    let json = IdealReport::build(r, i, &report, |x| describe_pvd_ideal(r, x), |e| describe_pvd_element(r, e), endo);
    (report, json)
}

pub fn pvd_report(r: &PvdRing) -> Result<(PvdClassVerdict, PvdReport), csl_core::pvd::PvdError> {
    let verdict = r.pvd_class_analysis()?;
    let mut out = PvdReport {
        degree: r.degree(),
        boolean: verdict.is_boolean(),
        clifford: verdict.is_clifford(),
        classes: Vec::new(),
        table: Vec::new(),
        witness: None,
        reports: Vec::new(),
    };
    match &verdict {
        PvdClassVerdict::Classified(t) => {
            out.classes = t.semigroup.labels().to_vec();
            out.table = t.table.clone();
            out.reports = t.reports.iter().map(|(i, _)| pvd_ideal_report(r, i).1).collect();
        }
        PvdClassVerdict::NotClifford(w) => {
            out.witness = Some(PvdWitnessReport {
                x: r.format_element(&w.x),
                z: w.z.as_ref().map(|z| r.format_element(z)),
                w: describe_pvd_ideal(r, &PvdIdeal { level: 0, w: w.w.clone() }),
                ideal: describe_pvd_ideal(r, &w.ideal),
                recomputed: describe_pvd_ideal(r, &w.report.regular.recomputed),
                strict: w.strict(),
            });
            out.reports = vec![pvd_ideal_report(r, &w.ideal).1];
        }
    }
    Ok((verdict, out))
}

pub fn dvr_reports(
    p: u64,
) -> Result<(csl_core::pvd::dvr::DvrVerdict, Vec<IdealReport>), csl_core::kernel::KernelError> {
    let v = csl_core::pvd::dvr_coefficient_instance(p)?;
    let ring = DvrRing::new(p)?;
    let reports = v
        .ideals
        .iter()
        .zip(&v.reports)
        .map(|(i, r)| {
            let endo =
                if r.stable.endomorphism == ring.one() { "R".to_string() } else { r.stable.endomorphism.to_string() };
            IdealReport::build(&ring, i, r, |x| x.to_string(), |e| e.to_string(), endo)
        })
        .collect();
    Ok((v, reports))
}
