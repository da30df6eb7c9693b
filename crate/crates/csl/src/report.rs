//! Serializable reports shared by every command.
//!
//! JSON is emitted through [`serde_json::Value`], whose maps are ordered, so
//! identical inputs give byte-identical output.

use std::collections::BTreeMap;
use std::fmt::Display;

use csl_core::quadratic::ClassTable;
use csl_core::regularity::{check_implications, IdealArithmetic, LStability, RegularityReport};
use csl_core::semigroup::FiniteSemigroup;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum LStableJson {
    Stable { index: usize },
    NotStable { power: usize },
    Inconclusive { checked: usize },
}

impl From<LStability> for LStableJson {
    fn from(l: LStability) -> Self {
        match l {
            LStability::Stable { index } => LStableJson::Stable { index },
            LStability::NotStable { power } => LStableJson::NotStable { power },
            LStability::Inconclusive { checked } => LStableJson::Inconclusive { checked },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WindowFields {
    pub generators: Vec<String>,
    pub g: String,
    pub window_dim: usize,
    pub subspace_rank: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealReport {
    pub ideal: String,
    pub regular: bool,
    pub stable: bool,
    pub strongly_stable: bool,
    pub l_stable: LStableJson,
    pub generator: Option<String>,
    /// `c` with `I² = cI`.
    pub scalar_idempotent: Option<String>,
    pub endo_ring: String,
    pub square: String,
    pub quotient: String,
    pub recomputed: String,
    pub implications_hold: bool,
    pub boole_criterion_holds: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub window: Option<WindowFields>,
}

impl IdealReport {
    pub fn build<A, FI, FE>(
        arith: &A,
        ideal: &A::Ideal,
        report: &RegularityReport<A::Ideal, A::Element>,
        show_ideal: FI,
        show_elem: FE,
        endo_ring: String,
    ) -> Self
    where
        A: IdealArithmetic,
        FI: Fn(&A::Ideal) -> String,
        FE: Fn(&A::Element) -> String,
    {
        IdealReport {
            ideal: show_ideal(ideal),
            regular: report.is_regular(),
            stable: report.is_stable(),
            strongly_stable: report.is_strongly_stable(),
            l_stable: report.l_stable.into(),
            generator: report.strongly_stable.as_ref().map(&show_elem),
            scalar_idempotent: report.scalar_idempotent.as_ref().map(&show_elem),
            endo_ring,
            square: show_ideal(&report.regular.square),
            quotient: show_ideal(&report.regular.quotient),
            recomputed: show_ideal(&report.regular.recomputed),
            implications_hold: check_implications(arith, ideal, report).is_ok(),
            boole_criterion_holds: report.boole_criterion_holds(),
            window: None,
        }
    }

    pub fn text(&self) -> String {
        let mut out = format!("ideal {}\n", self.ideal);
        out += &format!("  endomorphism ring: {}\n", self.endo_ring);
        out += &format!("  regular: {}  (I^2(I:I^2) = {})\n", self.regular, self.recomputed);
        out += &format!("  stable: {}\n", self.stable);
        match &self.generator {
            Some(g) => out += &format!("  strongly stable: true  (generator {g})\n"),
            None => out += "  strongly stable: false\n",
        }
        let l = match self.l_stable {
            LStableJson::Stable { index } => format!("true (constant from n = {index})"),
            LStableJson::NotStable { power } => format!("false (grows at n = {power})"),
            LStableJson::Inconclusive { checked } => format!("inconclusive (constant up to n = {checked})"),
        };
        out += &format!("  L-stable: {l}\n");
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassEntry {
    pub index: usize,
    pub label: String,
    pub multiplier_conductor: i64,
    pub norm: String,
    pub idempotent: bool,
    /// Order of the maximal subgroup, for idempotents.
    pub group_order: Option<usize>,
    pub regular: bool,
    pub stable: bool,
    pub strongly_stable: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadReport {
    pub fundamental_discriminant: i64,
    pub conductor: i64,
    pub discriminant: i64,
    pub bound: u64,
    pub classes: Vec<ClassEntry>,
    pub table: Vec<Vec<usize>>,
    pub clifford: bool,
    pub boolean: bool,
    pub every_class_regular: bool,
    pub reports: Vec<IdealReport>,
}

impl QuadReport {
    pub fn text(&self) -> String {
        let mut out = format!(
            "order of conductor {} in Q(sqrt({})), discriminant {}\n",
            self.conductor, self.fundamental_discriminant, self.discriminant
        );
        out += &format!("{} classes (norm bound {})\n", self.classes.len(), self.bound);
        for c in &self.classes {
            let mark = match c.group_order {
                Some(n) => format!("  idempotent, |G_e| = {n}"),
                None => String::new(),
            };
            out += &format!("  [{}] {}  norm {}{}\n", c.index, c.label, c.norm, mark);
        }
        out += "multiplication table:\n";
        for row in &self.table {
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            out += &format!("  {}\n", cells.join(" "));
        }
        out += &format!("Clifford: {}\nBoolean: {}\n", self.clifford, self.boolean);
        out += &format!("every class regular: {}\n", self.every_class_regular);
        out
    }
}

/// Verdict fields are left false; [`crate::families::quad_report`] fills them in.
pub fn class_entries(table: &ClassTable) -> Vec<ClassEntry> {
    let s = &table.semigroup;
    table
        .reps
        .iter()
        .enumerate()
        .map(|(i, r)| ClassEntry {
            index: i,
            label: r.label.clone(),
            multiplier_conductor: r.multiplier_conductor,
            norm: r.norm.to_string(),
            idempotent: s.is_idempotent(i),
            group_order: s.is_idempotent(i).then(|| s.maximal_subgroup(i).len()),
            regular: false,
            stable: false,
            strongly_stable: false,
        })
        .collect()
}

/// Class table as CSV: one row per class, product columns by class label.
pub fn class_table_csv(table: &ClassTable) -> Result<String, csv::Error> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header = vec![
        "class".to_string(),
        "label".into(),
        "multiplier_conductor".into(),
        "norm".into(),
        "idempotent".into(),
        "group_order".into(),
    ];
    header.extend(table.reps.iter().map(|r| format!("x[{}]", r.label)));
    w.write_record(&header)?;
    for (e, row) in class_entries(table).iter().zip(&table.table) {
        let mut rec = vec![
            e.index.to_string(),
            e.label.clone(),
            e.multiplier_conductor.to_string(),
            e.norm.clone(),
            e.idempotent.to_string(),
            e.group_order.map(|n| n.to_string()).unwrap_or_default(),
        ];
        rec.extend(row.iter().map(|k| k.to_string()));
        w.write_record(&rec)?;
    }
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemigroupReport {
    pub size: usize,
    pub idempotents: Vec<String>,
    pub clifford: bool,
    pub boolean: bool,
    /// Idempotent label ↦ elements of its maximal subgroup.
    pub groups: BTreeMap<String, Vec<String>>,
    pub unassigned: Vec<String>,
    pub regular_witnesses: BTreeMap<String, String>,
}

impl SemigroupReport {
    pub fn build(s: &FiniteSemigroup) -> Self {
        let label = |i: &usize| s.labels()[*i].clone();
        let d = s.clifford_decomposition();
        SemigroupReport {
            size: s.len(),
            idempotents: s.idempotents().iter().map(label).collect(),
            clifford: s.is_clifford().holds(),
            boolean: s.is_boolean().holds(),
            groups: d.groups.iter().map(|(e, g)| (label(e), g.iter().map(label).collect())).collect(),
            unassigned: d.unassigned.iter().map(label).collect(),
            regular_witnesses: s.regular_elements().iter().map(|(x, a)| (label(x), label(a))).collect(),
        }
    }

    pub fn text(&self) -> String {
        let mut out = format!("{} elements, idempotents {{{}}}\n", self.size, self.idempotents.join(", "));
        for (e, g) in &self.groups {
            out += &format!("  G_{e} = {{{}}}\n", g.join(", "));
        }
        if !self.unassigned.is_empty() {
            out += &format!("  not in any subgroup: {{{}}}\n", self.unassigned.join(", "));
        }
        out += &format!("Clifford: {}\nBoolean: {}\n", self.clifford, self.boolean);
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PvdWitnessReport {
    pub x: String,
    pub z: Option<String>,
    pub w: String,
    pub ideal: String,
    pub recomputed: String,
    pub strict: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PvdReport {
    pub degree: usize,
    pub boolean: bool,
    pub clifford: bool,
    pub classes: Vec<String>,
    pub table: Vec<Vec<usize>>,
    pub witness: Option<PvdWitnessReport>,
    pub reports: Vec<IdealReport>,
}

impl PvdReport {
    pub fn text(&self) -> String {
        let mut out = format!("[K:k] = {}\n", self.degree);
        if !self.classes.is_empty() {
            out += &format!("classes: {}\n", self.classes.join(", "));
            for row in &self.table {
                let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
                out += &format!("  {}\n", cells.join(" "));
            }
        }
        if let Some(w) = &self.witness {
            out += &format!("witness x = {}, W = {}\n", w.x, w.w);
            out += &format!("  I = {}\n  I^2(I:I^2) = {} (strictly smaller: {})\n", w.ideal, w.recomputed, w.strict);
        }
        out += &format!("Clifford: {}\nBoolean: {}\n", self.clifford, self.boolean);
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub expected: bool,
    pub actual: bool,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, expected: bool, actual: bool) -> Self {
        Check { name: name.into(), expected, actual, detail: String::new() }
    }

    pub fn with_detail(mut self, detail: impl Display) -> Self {
        self.detail = detail.to_string();
        self
    }

    pub fn passed(&self) -> bool {
        self.expected == self.actual
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExampleOutcome {
    pub id: String,
    pub description: String,
    pub checks: Vec<Check>,
    pub elapsed_ms: u128,
}

impl ExampleOutcome {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn text(&self) -> String {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        let mut out = format!("{status} {}: {} ({} ms)\n", self.id, self.description, self.elapsed_ms);
        for c in self.checks.iter().filter(|c| !c.passed()) {
            out += &format!("  mismatch {}: expected {}, got {}", c.name, c.expected, c.actual);
            if !c.detail.is_empty() {
                out += &format!(" ({})", c.detail);
            }
            out.push('\n');
        }
        out
    }
}

/// Pretty JSON with sorted keys.
pub fn to_json<T: Serialize>(value: &T) -> serde_json::Result<String> {
    serde_json::to_string_pretty(&serde_json::to_value(value)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn keys_come_out_sorted() {
        let c = Check::new("b", true, true);
        let json = to_json(&c).unwrap();
        let actual = json.find("\"actual\"").unwrap();
        let expected = json.find("\"expected\"").unwrap();
        let name = json.find("\"name\"").unwrap();
        assert!(actual < expected && expected < name);
    }

    #[test]
    fn l_stability_tags() {
        let j = to_json(&LStableJson::from(LStability::NotStable { power: 3 })).unwrap();
        assert!(j.contains("\"not-stable\""));
        let back: LStableJson = serde_json::from_str(&j).unwrap();
        assert_eq!(back, LStableJson::NotStable { power: 3 });
    }
}
