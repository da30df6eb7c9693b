//! Tower and semigroup description files.
//!
//! A tower file describes `k ⊆ K` by structure constants:
//!
//! ```json
//! {"base": "Q", "dim": 2,
//!  "mult_table": [[[1,0],[0,1]], [[0,1],[2,0]]],
//!  "k_basis_rows": [[1,0]]}
//! ```
//!
//! Coefficients are integers or strings such as `"-3/4"`.

use std::path::Path;

use csl_core::kernel::{Algebra, BaseField, FieldTower, Scalar, Subspace};
use csl_core::pvd::PvdRing;
use csl_core::semigroup::FiniteSemigroup;
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum FileError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unknown base field {0:?} (expected \"Q\" or \"F_p\")")]
    BadBase(String),
    #[error("bad coefficient {0:?}")]
    BadCoefficient(String),
    #[error("dim is {dim} but the table has {rows} rows")]
    Shape { dim: usize, rows: usize },
    #[error(transparent)]
    Kernel(#[from] csl_core::kernel::KernelError),
    #[error(transparent)]
    Pvd(#[from] csl_core::pvd::PvdError),
    #[error(transparent)]
    Semigroup(#[from] csl_core::semigroup::SemigroupError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Coef {
    Int(i64),
    Text(String),
}

impl Coef {
    fn to_rational(&self) -> Result<BigRational, FileError> {
        match self {
            Coef::Int(n) => Ok(BigRational::from_integer((*n).into())),
            Coef::Text(s) => {
                let bad = || FileError::BadCoefficient(s.clone());
                let (num, den) = s.split_once('/').unwrap_or((s, "1"));
                let num: BigInt = num.trim().parse().map_err(|_| bad())?;
                let den: BigInt = den.trim().parse().map_err(|_| bad())?;
                if den == BigInt::from(0) {
                    return Err(bad());
                }
                Ok(BigRational::new(num, den))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TowerSpec {
    pub base: String,
    pub dim: usize,
    pub mult_table: Vec<Vec<Vec<Coef>>>,
    pub k_basis_rows: Vec<Vec<Coef>>,
    #[serde(default)]
    pub labels: Option<Vec<String>>,
}

pub fn parse_base(s: &str) -> Result<BaseField, FileError> {
    let t = s.trim();
    if t == "Q" {
        return Ok(BaseField::Rationals);
    }
    let p = t
        .strip_prefix("F_")
        .or_else(|| t.strip_prefix('F'))
        .unwrap_or(t)
        .parse::<u64>()
        .map_err(|_| FileError::BadBase(s.to_string()))?;
    Ok(BaseField::prime(p)?)
}

fn row(field: &BaseField, r: &[Coef]) -> Result<Vec<Scalar>, FileError> {
    r.iter().map(|c| Ok(field.reduce(&c.to_rational()?)?)).collect()
}

impl TowerSpec {
    pub fn build(&self) -> Result<PvdRing, FileError> {
        let field = parse_base(&self.base)?;
        if self.mult_table.len() != self.dim {
            return Err(FileError::Shape { dim: self.dim, rows: self.mult_table.len() });
        }
        let table = self
            .mult_table
            .iter()
            .map(|r| r.iter().map(|e| row(&field, e)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        let labels = self
            .labels
            .clone()
            .unwrap_or_else(|| (0..self.dim).map(|i| if i == 0 { "1".into() } else { format!("e{i}") }).collect());
        let tower = FieldTower::new(Algebra::new(field.clone(), labels, table)?)?;
        let rows = self.k_basis_rows.iter().map(|r| row(&field, r)).collect::<Result<Vec<_>, _>>()?;
        let k = Subspace::span(&field, self.dim, rows)?;
        Ok(PvdRing::new(tower, k)?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemigroupSpec {
    #[serde(default)]
    pub labels: Option<Vec<String>>,
    pub table: Vec<Vec<usize>>,
}

impl SemigroupSpec {
    pub fn build(&self) -> Result<FiniteSemigroup, FileError> {
        Ok(match &self.labels {
            Some(l) => FiniteSemigroup::new(l.clone(), self.table.clone())?,
            None => FiniteSemigroup::unlabeled(self.table.clone())?,
        })
    }
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, FileError> {
    let text =
        std::fs::read_to_string(path).map_err(|source| FileError::Io { path: path.display().to_string(), source })?;
    Ok(serde_json::from_str(&text)?)
}

/// Named towers used by the example registry and the `pvd` command.
pub fn preset_tower(name: &str) -> Option<Result<PvdRing, FileError>> {
    let build = || -> Result<PvdRing, FileError> {
        let q = BaseField::Rationals;
        let ints = |f: &BaseField, v: &[i64]| v.iter().map(|&x| f.from_i64(x)).collect::<Vec<_>>();
        Ok(match name {
            "sqrt2" => PvdRing::over_base(FieldTower::quadratic(2)?)?,
            "sqrt2-sqrt3" => PvdRing::over_base(FieldTower::biquadratic(2, 3)?)?,
            "sqrt2-sqrt3/sqrt2" => {
                let t = FieldTower::biquadratic(2, 3)?;
                PvdRing::new(t, Subspace::coordinate(&q, 4, &[0, 1]))?
            }
            "cbrt2" => PvdRing::over_base(FieldTower::simple_extension(&q, &ints(&q, &[-2, 0, 0, 1]), "a")?)?,
            "f25" | "f625" | "f625/f25" => {
                let f5 = BaseField::prime(5)?;
                let deg = if name == "f25" { 2 } else { 4 };
                let mut minpoly = vec![f5.from_i64(-2)];
                minpoly.extend((1..deg).map(|_| f5.zero()));
                minpoly.push(f5.one());
                let t = FieldTower::simple_extension(&f5, &minpoly, "t")?;
                if name == "f625/f25" {
                    PvdRing::new(t, Subspace::coordinate(&f5, 4, &[0, 2]))?
                } else {
                    PvdRing::over_base(t)?
                }
            }
            _ => unreachable!("checked below"),
        })
    };
    PRESETS.contains(&name).then(build)
}

pub const PRESETS: &[&str] = &["sqrt2", "sqrt2-sqrt3", "sqrt2-sqrt3/sqrt2", "cbrt2", "f25", "f625", "f625/f25"];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tower_spec_builds_q_sqrt2() {
        let json = r#"{"base": "Q", "dim": 2,
            "mult_table": [[[1,0],[0,1]], [[0,1],[2,0]]],
            "k_basis_rows": [[1,0]]}"#;
        let spec: TowerSpec = serde_json::from_str(json).unwrap();
        let ring = spec.build().unwrap();
        assert_eq!(ring.degree(), 2);
        let back: TowerSpec = serde_json::from_str(&serde_json::to_string(&spec).unwrap()).unwrap();
        assert_eq!(back, spec);
    }

    #[test]
    fn tower_spec_rejects_non_fields() {
        // Q[t]/(t^2 - 1)
        let json = r#"{"base": "Q", "dim": 2,
            "mult_table": [[[1,0],[0,1]], [[0,1],[1,0]]],
            "k_basis_rows": [[1,0]]}"#;
        let spec: TowerSpec = serde_json::from_str(json).unwrap();
        assert!(spec.build().is_err());
    }

    #[test]
    fn rational_coefficients() {
        assert_eq!(Coef::Text("-3/4".into()).to_rational().unwrap(), BigRational::new((-3).into(), 4.into()));
        assert!(Coef::Text("1/0".into()).to_rational().is_err());
        assert!(Coef::Text("x".into()).to_rational().is_err());
    }

    #[test]
    fn bases() {
        assert_eq!(parse_base("Q").unwrap(), BaseField::Rationals);
        assert_eq!(parse_base("F_5").unwrap(), BaseField::prime(5).unwrap());
        assert!(parse_base("F_6").is_err());
        assert!(parse_base("R").is_err());
    }

    #[test]
    fn presets_build() {
        for name in PRESETS {
            preset_tower(name).unwrap().unwrap();
        }
        assert!(preset_tower("nope").is_none());
    }
}
