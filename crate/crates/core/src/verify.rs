//! Oracle suites behind `horokit verify`.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::Serialize;

use crate::cfunction::{c_function_complex, radon_eigenvalue};
use crate::numfmt;
use crate::oracle::{
    asymptotic_coefficient, build_rep, cbar_integral, cos2_alpha, default_t_grid, QuadratureSpec, RankOneGroup,
};
use crate::root_system::{LambdaElement, RestrictedRootSystem};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleKind {
    Iwasawa,
    Rep,
    Asymptotic,
    All,
}

impl OracleKind {
    pub fn label(self) -> &'static str {
        match self {
            OracleKind::Iwasawa => "iwasawa",
            OracleKind::Rep => "rep",
            OracleKind::Asymptotic => "asymptotic",
            OracleKind::All => "all",
        }
    }

    pub fn default_tolerance(self) -> f64 {
        match self {
            OracleKind::Rep => 1e-10,
            _ => 1e-6,
        }
    }
}

impl FromStr for OracleKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "iwasawa" => Ok(OracleKind::Iwasawa),
            "rep" => Ok(OracleKind::Rep),
            "asymptotic" => Ok(OracleKind::Asymptotic),
            "all" => Ok(OracleKind::All),
            _ => Err(Error::Domain(format!("unknown oracle `{s}`; expected iwasawa, rep, asymptotic or all"))),
        }
    }
}

impl fmt::Display for OracleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub max_l: u64,
    /// Overrides the per-oracle default tolerance.
    pub tolerance: Option<f64>,
    pub quadrature: QuadratureSpec,
    pub t_grid: Vec<f64>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self { max_l: 5, tolerance: None, quadrature: QuadratureSpec::default(), t_grid: default_t_grid() }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyRecord {
    pub oracle: String,
    pub case: String,
    pub expected: f64,
    pub actual: f64,
    pub abs_err: f64,
    pub pass: bool,
}

impl VerifyRecord {
    fn new(oracle: OracleKind, case: String, expected: f64, actual: f64, tol: f64) -> Self {
        let abs_err = (actual - expected).abs();
        Self { oracle: oracle.label().into(), case, expected, actual, abs_err, pass: abs_err <= tol }
    }
}

impl fmt::Display for VerifyRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {:<10} {:<28} expected {} actual {} err {:.3e}",
            if self.pass { "PASS" } else { "FAIL" },
            self.oracle,
            self.case,
            numfmt::sig17(self.expected),
            numfmt::sig17(self.actual),
            self.abs_err
        )
    }
}

/// Parameters `λ = λ_c α` checked against the defining integral.
pub const INTEGRAL_CASES: [(f64, f64); 7] = [(0.75, 0.0), (1.0, 0.0), (1.5, 0.0), (2.0, 0.0), (2.5, 0.0), (1.0, 1.0), (2.0, 0.5)];

fn format_lambda(z: Complex64) -> String {
    if z.im == 0.0 {
        numfmt::sig17(z.re)
    } else {
        let sign = if z.im < 0.0 { '-' } else { '+' };
        format!("{}{}{}i", numfmt::sig17(z.re), sign, numfmt::sig17(z.im.abs()))
    }
}

fn iwasawa_suite(rs: &RestrictedRootSystem, group: RankOneGroup, opts: &VerifyOptions) -> Result<Vec<VerifyRecord>> {
    let kind = OracleKind::Iwasawa;
    let tol = opts.tolerance.unwrap_or(kind.default_tolerance());
    let mut out = Vec::new();
    for (re, im) in INTEGRAL_CASES {
        let z = Complex64::new(re, im);
        let actual = cbar_integral(group, z, &opts.quadrature)?.value;
        let w = rs.from_simple_coordinates_complex(&[z])?;
        let expected = c_function_complex(rs, &w)?
            .as_complex()
            .ok_or_else(|| Error::Internal(format!("c-function is singular at {z}")))?;
        let case = format!("{group} lambda={}", format_lambda(z));
        if im == 0.0 {
            out.push(VerifyRecord::new(kind, case, expected.re, actual.re, tol));
        } else {
            out.push(VerifyRecord::new(kind, format!("{case} re"), expected.re, actual.re, tol));
            out.push(VerifyRecord::new(kind, format!("{case} im"), expected.im, actual.im, tol));
        }
    }
    Ok(out)
}

fn rep_suite(rs: &RestrictedRootSystem, opts: &VerifyOptions) -> Result<Vec<VerifyRecord>> {
    let kind = OracleKind::Rep;
    let tol = opts.tolerance.unwrap_or(kind.default_tolerance());
    (0..=opts.max_l)
        .map(|l| {
            let expected = radon_eigenvalue(rs, &LambdaElement::new(vec![l]))?
                .as_f64()
                .ok_or_else(|| Error::Internal("non-real eigenvalue".into()))?;
            let actual = cos2_alpha(&build_rep(l)?);
            Ok(VerifyRecord::new(kind, format!("l={l}"), expected, actual, tol))
        })
        .collect()
}

fn asymptotic_suite(opts: &VerifyOptions) -> Result<Vec<VerifyRecord>> {
    let kind = OracleKind::Asymptotic;
    let tol = opts.tolerance.unwrap_or(kind.default_tolerance());
    (0..=opts.max_l)
        .map(|l| {
            let rep = build_rep(l)?;
            let actual = asymptotic_coefficient(&rep, &opts.t_grid)?;
            Ok(VerifyRecord::new(kind, format!("l={l}"), cos2_alpha(&rep), actual, tol))
        })
        .collect()
}

/// Runs the requested oracle suites on `rs`.
///
/// The integral oracle needs the root data of `SL2R` or `SL2C`; the representation and
/// asymptotic oracles need `SL2R`.
pub fn verify(rs: &RestrictedRootSystem, kind: OracleKind, opts: &VerifyOptions) -> Result<Vec<VerifyRecord>> {
    let group = RankOneGroup::for_system(rs);
    let unsupported = |what: &str| {
        Error::Domain(format!(
            "the {what} oracle is not available for `{}`; use hyperbolic-real-2{}",
            rs.name(),
            if what == "iwasawa" { ", hyperbolic-real-3 or sl2c" } else { "" }
        ))
    };
    let is_sl2r = group == Some(RankOneGroup::SL2R);
    match kind {
        OracleKind::Iwasawa => iwasawa_suite(rs, group.ok_or_else(|| unsupported("iwasawa"))?, opts),
        OracleKind::Rep if is_sl2r => rep_suite(rs, opts),
        OracleKind::Asymptotic if is_sl2r => asymptotic_suite(opts),
        OracleKind::Rep | OracleKind::Asymptotic => Err(unsupported(kind.label())),
        OracleKind::All => {
            let group = group.ok_or_else(|| unsupported("iwasawa"))?;
            let mut out = iwasawa_suite(rs, group, opts)?;
            if is_sl2r {
                out.extend(rep_suite(rs, opts)?);
                out.extend(asymptotic_suite(opts)?);
            }
            Ok(out)
        }
    }
}

pub fn all_pass(records: &[VerifyRecord]) -> bool {
    records.iter().all(|r| r.pass)
}
