//! JSON root-system descriptions.
//!
//! ```json
//! {"name": "a2", "type": "A", "rank": 2, "multiplicities": {"short": 1}}
//! ```
//!
//! Rationals are written as `"p/q"` strings (plain JSON integers are accepted too).
//! Explicit systems list their simple roots, the ambient Gram matrix and the positive
//! roots as integer coordinates in the simple-root basis.

use std::path::Path;

use serde::{Deserialize, Serialize};

use super::classical::{classical, LengthClass, RootType};
use super::{multiplicity_u32, Provenance, RestrictedRootSystem, RootInput, SystemKind, Weight};
use crate::error::{Error, Result};
use crate::rational::{self, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Multiplicities {
    pub short: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub long: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub double: Option<i64>,
}

impl Multiplicities {
    pub fn single(m: i64) -> Self {
        Self { short: m, long: None, double: None }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RationalLiteral {
    Int(i64),
    Text(String),
}

impl RationalLiteral {
    fn value(&self) -> Result<Rational> {
        match self {
            Self::Int(n) => Ok(rational::int(*n)),
            Self::Text(t) => rational::parse(t),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RootDescription {
    pub coeffs: Vec<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub multiplicity: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RootSystemDescription {
    pub name: String,
    #[serde(rename = "type")]
    pub kind: String,
    pub rank: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub multiplicities: Option<Multiplicities>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub simple_roots: Option<Vec<Vec<RationalLiteral>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gram: Option<Vec<Vec<RationalLiteral>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub positive_roots: Option<Vec<RootDescription>>,
}

impl RootSystemDescription {
    pub fn classical(name: &str, ty: RootType, rank: usize, m: Multiplicities) -> Self {
        Self {
            name: name.to_string(),
            kind: ty.label().to_string(),
            rank,
            multiplicities: Some(m),
            simple_roots: None,
            gram: None,
            positive_roots: None,
        }
    }
}

/// Parses description text; errors carry the JSON field path and line/column.
pub fn parse_description(text: &str, source: &str) -> Result<RootSystemDescription> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        let inner = e.into_inner();
        Error::Description {
            location: Some(format!("{source}:{}:{}", inner.line(), inner.column())),
            message: if path == "." { inner.to_string() } else { format!("at `{path}`: {inner}") },
        }
    })
}

pub fn load_description(path: &Path) -> Result<RootSystemDescription> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_description(&text, &path.display().to_string())
}

fn field_error(name: &str, field: &str, message: impl Into<String>) -> Error {
    Error::Description {
        location: Some(format!("{name}: `{field}`")),
        message: message.into(),
    }
}

fn rational_matrix(name: &str, field: &str, rows: &[Vec<RationalLiteral>]) -> Result<Vec<Vec<Rational>>> {
    rows.iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, v)| v.value().map_err(|e| field_error(name, &format!("{field}[{i}][{j}]"), e.to_string())))
                .collect()
        })
        .collect()
}

/// Builds and validates a root system from a description.
pub fn build_custom(desc: &RootSystemDescription) -> Result<RestrictedRootSystem> {
    build_with_provenance(desc, Provenance::User)
}

pub(crate) fn build_with_provenance(desc: &RootSystemDescription, provenance: Provenance) -> Result<RestrictedRootSystem> {
    if desc.kind == "explicit" {
        return build_explicit(desc, provenance);
    }
    let ty = RootType::parse(&desc.kind).ok_or_else(|| {
        field_error(&desc.name, "type", format!("unknown type `{}` (A, B, C, D, BC or explicit)", desc.kind))
    })?;
    if desc.rank < ty.min_rank() {
        return Err(field_error(&desc.name, "rank", format!("type {} needs rank >= {}", ty.label(), ty.min_rank())));
    }
    if desc.simple_roots.is_some() || desc.positive_roots.is_some() {
        return Err(field_error(
            &desc.name,
            "simple_roots",
            "typed systems use the standard realization; use type \"explicit\" to give roots",
        ));
    }
    let m = desc
        .multiplicities
        .as_ref()
        .ok_or_else(|| field_error(&desc.name, "multiplicities", "required for typed systems"))?;
    let class_m = class_multiplicities(&desc.name, ty, desc.rank, m)?;

    let data = classical(ty, desc.rank);
    let simple: Vec<Weight> = data.simple_roots.iter().map(|s| Weight::from_ints(s)).collect();
    let gram = match &desc.gram {
        Some(g) => rational_matrix(&desc.name, "gram", g)?,
        None => rational::identity(data.ambient_dim),
    };
    if gram.len() != data.ambient_dim || gram.iter().any(|r| r.len() != data.ambient_dim) {
        return Err(field_error(
            &desc.name,
            "gram",
            format!("must be {0}x{0} for type {1}{2}", data.ambient_dim, ty.label(), desc.rank),
        ));
    }
    let mut roots: Vec<RootInput> = Vec::with_capacity(data.positive_roots.len());
    for (v, class) in &data.positive_roots {
        let coords = ambient_to_simple(v, &data.simple_roots).ok_or_else(|| {
            Error::Internal(format!("classical root {v:?} not in the simple-root lattice"))
        })?;
        let m = class_m
            .iter()
            .find(|(c, _)| c == class)
            .map(|(_, m)| *m)
            .ok_or_else(|| Error::Internal(format!("no multiplicity for class {class:?}")))?;
        roots.push((coords, m, Some(*class)));
    }
    RestrictedRootSystem::from_parts(
        desc.name.clone(),
        SystemKind::Classical(ty),
        simple,
        gram,
        roots,
        provenance,
    )
}

fn class_multiplicities(name: &str, ty: RootType, rank: usize, m: &Multiplicities) -> Result<Vec<(LengthClass, u32)>> {
    let inconsistent = |msg: String| Error::InvalidRootSystem(format!("{name}: inconsistent multiplicities: {msg}"));
    let classes = ty.classes(rank);
    if m.double.is_some() && ty != RootType::BC {
        return Err(inconsistent(format!("type {} has no doubled roots", ty.label())));
    }
    let mut out = Vec::new();
    for class in classes {
        let value = match (ty, class) {
            (RootType::A | RootType::D, LengthClass::Short) => {
                if let Some(l) = m.long {
                    if l != m.short {
                        return Err(inconsistent(format!(
                            "type {} has a single root length, got short={} long={l}",
                            ty.label(),
                            m.short
                        )));
                    }
                }
                m.short
            }
            // C_1 consists of a single long root 2e_1; accept `short` for it.
            (RootType::C, LengthClass::Long) if rank == 1 => m.long.unwrap_or(m.short),
            (_, LengthClass::Short) => m.short,
            (_, LengthClass::Long) => m
                .long
                .ok_or_else(|| inconsistent(format!("type {}{rank} needs a `long` multiplicity", ty.label())))?,
            (_, LengthClass::Double) => m
                .double
                .ok_or_else(|| inconsistent("type BC needs a `double` multiplicity".into()))?,
        };
        out.push((class, multiplicity_u32(value, &format!("{name} {class:?} roots"))?));
    }
    Ok(out)
}

fn ambient_to_simple(v: &[i64], simple: &[Vec<i64>]) -> Option<Vec<i64>> {
    let weight = Weight::from_ints(v);
    let basis: Vec<Weight> = simple.iter().map(|s| Weight::from_ints(s)).collect();
    let dim = v.len();
    let gram = rational::identity(dim);
    let m: Vec<Vec<Rational>> = basis
        .iter()
        .map(|a| basis.iter().map(|b| rational::dot(a.coords(), &gram, b.coords())).collect())
        .collect();
    let rhs: Vec<Rational> = basis.iter().map(|a| rational::dot(a.coords(), &gram, weight.coords())).collect();
    let c = rational::solve(&m, &rhs)?;
    c.iter()
        .map(|x| x.is_integer().then(|| x.to_integer().try_into().ok()).flatten())
        .collect()
}

fn build_explicit(desc: &RootSystemDescription, provenance: Provenance) -> Result<RestrictedRootSystem> {
    let name = &desc.name;
    let simple_rows = desc
        .simple_roots
        .as_ref()
        .ok_or_else(|| field_error(name, "simple_roots", "required for explicit systems"))?;
    let gram_rows = desc
        .gram
        .as_ref()
        .ok_or_else(|| field_error(name, "gram", "required for explicit systems"))?;
    let listed = desc
        .positive_roots
        .as_ref()
        .ok_or_else(|| field_error(name, "positive_roots", "required for explicit systems"))?;
    let simple = rational_matrix(name, "simple_roots", simple_rows)?;
    let gram = rational_matrix(name, "gram", gram_rows)?;
    if simple.len() != desc.rank {
        return Err(field_error(name, "simple_roots", format!("expected {} simple roots", desc.rank)));
    }
    let dim = gram.len();
    if gram.iter().any(|r| r.len() != dim) {
        return Err(field_error(name, "gram", "must be square"));
    }
    let default_m = desc.multiplicities.as_ref().map(|m| m.short);
    let roots = listed
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let m = r.multiplicity.or(default_m).ok_or_else(|| {
                field_error(name, &format!("positive_roots[{i}].multiplicity"), "missing and no default given")
            })?;
            Ok((r.coeffs.clone(), multiplicity_u32(m, &format!("{name} root {:?}", r.coeffs))?, None))
        })
        .collect::<Result<Vec<RootInput>>>()?;
    RestrictedRootSystem::from_parts(
        name.clone(),
        SystemKind::Explicit,
        simple.into_iter().map(Weight::new).collect(),
        gram,
        roots,
        provenance,
    )
}
