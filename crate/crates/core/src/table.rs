//! Eigenvalue tables over `{λ ∈ Λ : Σ n_j ≤ d}` and their JSON/CSV forms.

use serde::{Deserialize, Serialize};

use crate::cfunction::radon_eigenvalue;
use crate::numfmt;
use crate::rational::{self, Rational};
use crate::root_system::{LambdaElement, RestrictedRootSystem};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct EigenvalueRow {
    pub coeffs: Vec<u64>,
    pub exact: Option<Rational>,
    pub value: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct EigenvalueTable {
    pub system: String,
    pub rows: Vec<EigenvalueRow>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonRow {
    coeffs: Vec<u64>,
    exact: Option<String>,
    float: f64,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonTable {
    system: String,
    rows: Vec<JsonRow>,
}

/// Rows ordered by degree, then by descending coefficient vector.
pub fn eigenvalue_table(rs: &RestrictedRootSystem, max_degree: u64) -> Result<EigenvalueTable> {
    let rows = LambdaElement::up_to_degree(rs.rank(), max_degree)
        .into_iter()
        .map(|l| {
            let v = radon_eigenvalue(rs, &l)?;
            let value = v.as_f64().ok_or_else(|| Error::Internal(format!("non-real eigenvalue {v}")))?;
            Ok(EigenvalueRow { coeffs: l.coeffs().to_vec(), exact: v.exact().cloned(), value })
        })
        .collect::<Result<_>>()?;
    Ok(EigenvalueTable { system: rs.name().to_string(), rows })
}

fn table_error(message: impl Into<String>) -> Error {
    Error::Description { location: None, message: message.into() }
}

impl EigenvalueTable {
    pub fn to_json_value(&self) -> serde_json::Value {
        let t = JsonTable {
            system: self.system.clone(),
            rows: self
                .rows
                .iter()
                .map(|r| JsonRow {
                    coeffs: r.coeffs.clone(),
                    exact: r.exact.as_ref().map(rational::format),
                    float: r.value,
                })
                .collect(),
        };
        serde_json::to_value(t).expect("table serializes")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_json_value()).expect("table serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let t: JsonTable = serde_json::from_str(text).map_err(|e| table_error(e.to_string()))?;
        let rows = t
            .rows
            .into_iter()
            .map(|r| {
                let exact = r.exact.as_deref().map(rational::parse).transpose()?;
                Ok(EigenvalueRow { coeffs: r.coeffs, exact, value: r.float })
            })
            .collect::<Result<_>>()?;
        Ok(Self { system: t.system, rows })
    }

    /// `coeffs;exact;float`, coefficients comma-joined, floats with 17 significant digits.
    pub fn to_csv(&self) -> String {
        let mut w = csv::WriterBuilder::new().delimiter(b';').from_writer(Vec::new());
        w.write_record(["coeffs", "exact", "float"]).expect("in-memory write");
        for r in &self.rows {
            let coeffs = r.coeffs.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
            let exact = r.exact.as_ref().map(rational::format).unwrap_or_default();
            w.write_record([coeffs, exact, numfmt::sig17(r.value)]).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("ascii output")
    }

    pub fn from_csv(system: &str, text: &str) -> Result<Self> {
        let mut r = csv::ReaderBuilder::new().delimiter(b';').from_reader(text.as_bytes());
        let header = r.headers().map_err(|e| table_error(e.to_string()))?;
        if header != vec!["coeffs", "exact", "float"] {
            return Err(table_error(format!("unexpected header {header:?}")));
        }
        let mut rows = Vec::new();
        for rec in r.records() {
            let rec = rec.map_err(|e| table_error(e.to_string()))?;
            let coeffs = rec[0]
                .split(',')
                .map(|c| c.trim().parse::<u64>().map_err(|e| table_error(format!("coefficient `{c}`: {e}"))))
                .collect::<Result<_>>()?;
            let exact = if rec[1].is_empty() { None } else { Some(rational::parse(&rec[1])?) };
            let value = rec[2].parse().map_err(|e| table_error(format!("float `{}`: {e}", &rec[2])))?;
            rows.push(EigenvalueRow { coeffs, exact, value });
        }
        Ok(Self { system: system.to_string(), rows })
    }
}
