//! `horokit`: catalog browsing, root data, c-function values, eigenvalue tables and
//! oracle verification from the command line.

mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::Path;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use horokit_core::cfunction::{c_expr, c_function, c_function_complex, radon_eigenvalue, CValue};
use horokit_core::numfmt::sig17;
use horokit_core::oracle::QuadratureSpec;
use horokit_core::rational::{self, Rational};
use horokit_core::root_system::{
    build_custom, load_description, shipped_systems, Catalog, LambdaElement, RestrictedRootSystem, SystemKind,
    Weight, FAMILIES,
};
use horokit_core::table::eigenvalue_table;
use horokit_core::verify::{all_pass, verify, OracleKind, VerifyOptions};
use horokit_core::Error;
use num_complex::Complex64;
use serde_json::{json, Value};

pub use report::Format;
use report::{columns, fields, Report};

pub const CATALOG_DIR_ENV: &str = "HOROKIT_CATALOG_DIR";

#[derive(Parser, Debug)]
#[command(name = "horokit", version, about = "Eigenvalues of the dual horospherical Radon transform")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Space {
    /// Catalog key (e.g. hyperbolic-real-3) or path to a JSON description
    #[arg(long)]
    space: String,
}

#[derive(Args, Debug)]
struct Output {
    #[arg(long, value_enum, default_value_t = Format::Pretty)]
    format: Format,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List catalog families, shipped systems and extra descriptions
    Catalog {
        #[command(flatten)]
        out: Output,
    },
    /// Positive restricted roots with multiplicities
    Roots {
        #[command(flatten)]
        space: Space,
        #[command(flatten)]
        out: Output,
    },
    /// The basis β_j and the fundamental restricted weights ω_j
    Weights {
        #[command(flatten)]
        space: Space,
        #[command(flatten)]
        out: Output,
    },
    /// Half-sum ρ of positive roots and its pairings ρ_α
    Rho {
        #[command(flatten)]
        space: Space,
        #[command(flatten)]
        out: Output,
    },
    /// The c-function at λ given in simple-root coordinates (rationals or a+bi)
    Cfn {
        #[command(flatten)]
        space: Space,
        #[arg(long = "coeffs-root", allow_hyphen_values = true)]
        coeffs: String,
        #[command(flatten)]
        out: Output,
    },
    /// The eigenvalue c(λ+ρ) for λ = Σ n_j ω_j
    Eigen {
        #[command(flatten)]
        space: Space,
        #[arg(long = "coeffs-omega", visible_alias = "coeffs", allow_hyphen_values = true)]
        coeffs: String,
        #[command(flatten)]
        out: Output,
    },
    /// Eigenvalues for all λ with Σ n_j ≤ max
    Table {
        #[command(flatten)]
        space: Space,
        #[arg(long, default_value_t = 6)]
        max: u64,
        #[command(flatten)]
        out: Output,
    },
    /// Run the rank-one oracle suites; exits with 2 when a case fails
    Verify {
        #[command(flatten)]
        space: Space,
        #[arg(long, default_value = "all", value_parser = ["iwasawa", "rep", "asymptotic", "all"])]
        oracle: String,
        #[arg(long = "max-l", default_value_t = 5)]
        max_l: u64,
        /// Absolute tolerance, overriding the per-oracle defaults
        #[arg(long)]
        tol: Option<f64>,
        /// Quadrature node budget per integral
        #[arg(long)]
        nodes: Option<usize>,
        #[command(flatten)]
        out: Output,
    },
}

/// A failure with the exit code it maps to.
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Quadrature { .. } | Error::NotConverged(_) | Error::Model(_) => 2,
            _ => 1,
        };
        Failure { code, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: 1, message: message.into() }
}

/// Runs the CLI on `args` (without the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv = std::iter::once(OsString::from("horokit")).chain(args.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32, Failure> {
    let (report, format, code) = match command {
        Command::Catalog { out: o } => (catalog_report(&catalog()?), o.format, 0),
        Command::Roots { space, out: o } => (roots_report(&load_space(&space.space)?), o.format, 0),
        Command::Weights { space, out: o } => (weights_report(&load_space(&space.space)?), o.format, 0),
        Command::Rho { space, out: o } => (rho_report(&load_space(&space.space)?), o.format, 0),
        Command::Cfn { space, coeffs, out: o } => (cfn_report(&load_space(&space.space)?, &coeffs)?, o.format, 0),
        Command::Eigen { space, coeffs, out: o } => {
            (eigen_report(&load_space(&space.space)?, &coeffs)?, o.format, 0)
        }
        Command::Table { space, max, out: o } => (table_report(&load_space(&space.space)?, max)?, o.format, 0),
        Command::Verify { space, oracle, max_l, tol, nodes, out: o } => {
            let rs = load_space(&space.space)?;
            let mut opts = VerifyOptions { max_l, tolerance: tol, ..Default::default() };
            if let Some(n) = nodes {
                opts.quadrature = QuadratureSpec::default().with_nodes(n);
                opts.quadrature.validate()?;
            }
            if let Some(t) = tol {
                if !(t >= 0.0) {
                    return Err(usage(format!("tolerance must be nonnegative, got {t}")));
                }
            }
            let kind = OracleKind::from_str(&oracle)?;
            let (report, pass) = verify_report(&rs, kind, &opts)?;
            (report, o.format, if pass { 0 } else { 2 })
        }
    };
    report
        .write(format, out)
        .map_err(|e| usage(format!("cannot write output: {e}")))?;
    Ok(code)
}

/// The built-in catalog, with the descriptions in `HOROKIT_CATALOG_DIR` layered on top.
pub fn catalog() -> Result<Catalog, Error> {
    let catalog = Catalog::builtin();
    match std::env::var_os(CATALOG_DIR_ENV) {
        Some(dir) if !dir.is_empty() => catalog.with_dir(Path::new(&dir)),
        _ => Ok(catalog),
    }
}

/// A readable file path (or anything ending in `.json`) is loaded as a description;
/// anything else is a catalog key.
pub fn load_space(selector: &str) -> Result<RestrictedRootSystem, Error> {
    let path = Path::new(selector);
    if selector.ends_with(".json") || path.is_file() {
        return build_custom(&load_description(path)?);
    }
    catalog()?.build(selector)
}

fn kind_label(rs: &RestrictedRootSystem) -> String {
    match rs.kind() {
        SystemKind::Classical(t) => format!("{}{}", t.label(), rs.rank()),
        SystemKind::Explicit => format!("explicit rank {}", rs.rank()),
    }
}

fn header(rs: &RestrictedRootSystem) -> String {
    format!("{} ({}, provenance {})\n", rs.name(), kind_label(rs), rs.provenance().label())
}

fn rationals(v: &[Rational]) -> Vec<String> {
    v.iter().map(rational::format).collect()
}

fn tuple(v: &[String]) -> String {
    format!("({})", v.join(", "))
}

fn weight_json(rs: &RestrictedRootSystem, w: &Weight) -> Value {
    let simple = rs.simple_coordinates(w).expect("weights lie in the span of the roots");
    json!({ "simple": rationals(&simple), "vector": rationals(w.coords()) })
}

fn catalog_report(catalog: &Catalog) -> Report {
    let shipped = shipped_systems();
    let extra: Vec<String> = catalog.extra_keys().map(str::to_string).collect();
    let fam_rows: Vec<Vec<String>> = FAMILIES
        .iter()
        .map(|f| vec![f.pattern.into(), f.root_system.into(), f.provenance.label().into(), f.space.into()])
        .collect();
    let mut pretty = columns(&["family", "root system", "provenance", "space"], &fam_rows);
    pretty += &format!("\nshipped: {}\n", shipped.join(", "));
    if !extra.is_empty() {
        pretty += &format!("extra: {}\n", extra.join(", "));
    }
    let json = json!({
        "families": FAMILIES.iter().map(|f| json!({
            "pattern": f.pattern,
            "space": f.space,
            "root_system": f.root_system,
            "provenance": f.provenance.label(),
        })).collect::<Vec<_>>(),
        "shipped": shipped,
        "extra": extra,
    });
    let mut csv_rows: Vec<Vec<String>> = FAMILIES
        .iter()
        .map(|f| vec!["family".into(), f.pattern.into(), f.root_system.into(), f.provenance.label().into()])
        .collect();
    csv_rows.extend(shipped.iter().map(|k| vec!["shipped".into(), k.clone(), String::new(), String::new()]));
    csv_rows.extend(extra.iter().map(|k| vec!["extra".into(), k.clone(), String::new(), "user".into()]));
    Report { pretty, json, csv_header: vec!["entry", "key", "root_system", "provenance"], csv_rows }
}

fn roots_report(rs: &RestrictedRootSystem) -> Report {
    let rows: Vec<Vec<String>> = rs
        .positive_roots()
        .iter()
        .map(|r| {
            vec![
                r.simple_coords.iter().map(i64::to_string).collect::<Vec<_>>().join(","),
                rationals(r.vector.coords()).join(","),
                r.multiplicity.to_string(),
                r.double_multiplicity.map(|m| m.to_string()).unwrap_or_default(),
                r.class.map(|c| format!("{c:?}").to_lowercase()).unwrap_or_default(),
                r.divisible.to_string(),
            ]
        })
        .collect();
    let head = ["simple_coords", "vector", "multiplicity", "double_multiplicity", "class", "divisible"];
    let pretty = header(rs) + &columns(&head, &rows);
    let json = json!({
        "system": rs.name(),
        "rank": rs.rank(),
        "roots": rs.positive_roots().iter().map(|r| json!({
            "simple_coords": r.simple_coords,
            "vector": rationals(r.vector.coords()),
            "multiplicity": r.multiplicity,
            "double_multiplicity": r.double_multiplicity,
            "class": r.class,
            "divisible": r.divisible,
        })).collect::<Vec<_>>(),
    });
    Report { pretty, json, csv_header: head.to_vec(), csv_rows: rows }
}

fn weights_report(rs: &RestrictedRootSystem) -> Report {
    let betas = rs.beta_basis();
    let omegas = rs.fundamental_weights();
    let mut rows = Vec::new();
    let mut items = Vec::new();
    for (j, (b, w)) in betas.iter().zip(omegas).enumerate() {
        let bs = rationals(&rs.simple_coordinates(b).expect("in span"));
        let ws = rationals(&rs.simple_coordinates(w).expect("in span"));
        rows.push(vec![(j + 1).to_string(), bs.join(","), ws.join(","), rationals(w.coords()).join(",")]);
        items.push(json!({ "index": j + 1, "beta": weight_json(rs, b), "omega": weight_json(rs, w) }));
    }
    let head = ["j", "beta_simple", "omega_simple", "omega_vector"];
    let pretty = header(rs) + &columns(&head, &rows);
    Report { pretty, json: json!({ "system": rs.name(), "weights": items }), csv_header: head.to_vec(), csv_rows: rows }
}

fn rho_report(rs: &RestrictedRootSystem) -> Report {
    let rows: Vec<Vec<String>> = rs
        .indivisible_positive_roots()
        .iter()
        .zip(rs.rho_pairings())
        .map(|(r, p)| {
            vec![r.simple_coords.iter().map(i64::to_string).collect::<Vec<_>>().join(","), rational::format(&p)]
        })
        .collect();
    let simple = rationals(&rs.simple_coordinates(rs.rho()).expect("in span"));
    let mut pretty = header(rs);
    pretty += &fields(&[("rho (simple)", tuple(&simple)), ("rho (vector)", rs.rho().to_string())]);
    pretty += "\n";
    pretty += &columns(&["root", "rho_alpha"], &rows);
    let json = json!({
        "system": rs.name(),
        "rho": weight_json(rs, rs.rho()),
        "pairings": rs.indivisible_positive_roots().iter().zip(rs.rho_pairings()).map(|(r, p)| json!({
            "root": r.simple_coords,
            "value": rational::format(&p),
        })).collect::<Vec<_>>(),
    });
    Report { pretty, json, csv_header: vec!["root", "rho_alpha"], csv_rows: rows }
}

fn split_coeffs(text: &str, rank: usize) -> Result<Vec<&str>, Failure> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    if parts.len() != rank || parts.iter().any(|p| p.is_empty()) {
        return Err(usage(format!(
            "expected {rank} comma-separated coefficient(s), got `{text}`"
        )));
    }
    Ok(parts)
}

/// `p/q`, or `(p/q)*pi^(k/2)` when the value carries a power of `√π`.
pub fn closed_form_text(q: &Rational, k: i64) -> String {
    if k == 0 {
        rational::format(q)
    } else {
        format!("({})*pi^({k}/2)", rational::format(q))
    }
}

fn cfn_report(rs: &RestrictedRootSystem, text: &str) -> Result<Report, Failure> {
    let parts = split_coeffs(text, rs.rank())?;
    let exact: Option<Vec<Rational>> = parts.iter().map(|p| rational::parse(p).ok()).collect();
    let (value, expr) = match exact {
        Some(coeffs) => {
            let w = rs.from_simple_coordinates(&coeffs)?;
            let g = c_expr(rs, &w)?;
            let closed = g.closed_form();
            let value = c_function(rs, &w)?;
            (value, Some((g, closed)))
        }
        None => {
            let coeffs = parts
                .iter()
                .map(|p| {
                    Complex64::from_str(p).map_err(|_| {
                        usage(format!("invalid coefficient `{p}`: expected p/q or a complex literal such as 1.5-2i"))
                    })
                })
                .collect::<Result<Vec<_>, _>>()?;
            let w = rs.from_simple_coordinates_complex(&coeffs)?;
            (c_function_complex(rs, &w)?, None)
        }
    };
    let closed = expr.as_ref().and_then(|(_, c)| c.clone());
    let shown = match (&value, &closed) {
        (CValue::RealFloat(_), Some((q, k))) => closed_form_text(q, *k),
        _ => value.to_string(),
    };
    let float = value.as_f64();
    let mut pretty_fields = vec![
        ("space", rs.name().to_string()),
        ("lambda", format!("({}) in simple-root coordinates", parts.join(", "))),
        ("value", shown.clone()),
        ("kind", value.kind().to_string()),
    ];
    if let Some(v) = float {
        pretty_fields.push(("float", sig17(v)));
    }
    if let Some((g, _)) = &expr {
        pretty_fields.push(("expr", g.to_string()));
    }
    let complex = value.as_complex().filter(|_| matches!(value, CValue::ComplexFloat(_)));
    let order = match value {
        CValue::Pole(k) | CValue::Zero(k) => Some(k),
        _ => None,
    };
    let json = json!({
        "system": rs.name(),
        "coeffs_root": parts,
        "kind": value.kind(),
        "value": shown,
        "float": float,
        "re": complex.map(|z| z.re),
        "im": complex.map(|z| z.im),
        "order": order,
        "expr": expr.as_ref().map(|(g, _)| g.to_string()),
    });
    let row = vec![
        parts.join(","),
        value.kind().to_string(),
        shown,
        float.map(sig17).unwrap_or_default(),
    ];
    Ok(Report {
        pretty: fields(&pretty_fields),
        json,
        csv_header: vec!["coeffs", "kind", "value", "float"],
        csv_rows: vec![row],
    })
}

fn eigen_report(rs: &RestrictedRootSystem, text: &str) -> Result<Report, Failure> {
    let parts = split_coeffs(text, rs.rank())?;
    let coeffs = parts
        .iter()
        .map(|p| {
            p.parse::<u64>()
                .map_err(|_| usage(format!("invalid coefficient `{p}`: λ ∈ Λ needs nonnegative integers")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let lambda = LambdaElement::new(coeffs.clone());
    let value = radon_eigenvalue(rs, &lambda)?;
    let float = value.as_f64().expect("eigenvalues are finite and real");
    let exact = value.exact().map(rational::format);
    let pretty = fields(&[
        ("space", rs.name().to_string()),
        ("lambda", format!("{lambda} in the omega basis")),
        ("exact", exact.clone().unwrap_or_else(|| "-".into())),
        ("float", float.to_string()),
    ]);
    let json = json!({ "system": rs.name(), "coeffs": coeffs, "exact": exact, "float": float });
    let row = vec![
        coeffs.iter().map(u64::to_string).collect::<Vec<_>>().join(","),
        exact.unwrap_or_default(),
        sig17(float),
    ];
    Ok(Report { pretty, json, csv_header: vec!["coeffs", "exact", "float"], csv_rows: vec![row] })
}

fn table_report(rs: &RestrictedRootSystem, max: u64) -> Result<Report, Failure> {
    let t = eigenvalue_table(rs, max)?;
    let rows: Vec<Vec<String>> = t
        .rows
        .iter()
        .map(|r| {
            vec![
                r.coeffs.iter().map(u64::to_string).collect::<Vec<_>>().join(","),
                r.exact.as_ref().map(rational::format).unwrap_or_default(),
                sig17(r.value),
            ]
        })
        .collect();
    let pretty_rows: Vec<Vec<String>> = t
        .rows
        .iter()
        .zip(&rows)
        .map(|(r, row)| vec![format!("({})", row[0]), row[1].clone(), r.value.to_string()])
        .collect();
    let pretty = header(rs) + &columns(&["lambda", "exact", "float"], &pretty_rows);
    Ok(Report { pretty, json: t.to_json_value(), csv_header: vec!["coeffs", "exact", "float"], csv_rows: rows })
}

fn verify_report(rs: &RestrictedRootSystem, kind: OracleKind, opts: &VerifyOptions) -> Result<(Report, bool), Failure> {
    let records = verify(rs, kind, opts)?;
    let pass = all_pass(&records);
    let passed = records.iter().filter(|r| r.pass).count();
    let mut pretty: String = records.iter().map(|r| format!("{r}\n")).collect();
    pretty += &format!("{passed}/{} passed\n", records.len());
    let rows = records
        .iter()
        .map(|r| {
            vec![
                r.oracle.clone(),
                r.case.clone(),
                sig17(r.expected),
                sig17(r.actual),
                sig17(r.abs_err),
                r.pass.to_string(),
            ]
        })
        .collect();
    let json = serde_json::to_value(&records).expect("records serialize");
    Ok((
        Report { pretty, json, csv_header: vec!["oracle", "case", "expected", "actual", "abs_err", "pass"], csv_rows: rows },
        pass,
    ))
}
