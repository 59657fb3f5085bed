//! Named symmetric spaces.
//!
//! Keys are family prefixes followed by their integer parameters, e.g.
//! `hyperbolic-real-5` or `supq-2-3`. Extra description files can be layered on top
//! through [`Catalog::with_dir`].

use std::collections::BTreeMap;
use std::path::Path;

use super::classical::RootType;
use super::description::{build_with_provenance, load_description, Multiplicities, RootSystemDescription};
use super::{Provenance, RestrictedRootSystem};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug)]
pub struct FamilyInfo {
    pub pattern: &'static str,
    pub space: &'static str,
    pub root_system: &'static str,
    pub provenance: Provenance,
}

pub const FAMILIES: &[FamilyInfo] = &[
    FamilyInfo {
        pattern: "hyperbolic-real-<n>",
        space: "real hyperbolic space SO_0(n,1)/SO(n), n >= 2",
        root_system: "A1, m = n-1",
        provenance: Provenance::Reference,
    },
    FamilyInfo {
        pattern: "sl2c",
        space: "SL(2,C)/SU(2), same as hyperbolic-real-3",
        root_system: "A1, m = 2",
        provenance: Provenance::Reference,
    },
    FamilyInfo {
        pattern: "slnr-son-<n>",
        space: "SL(n,R)/SO(n), n >= 3",
        root_system: "A(n-1), m = 1",
        provenance: Provenance::External,
    },
    FamilyInfo {
        pattern: "slnc-sun-<n>",
        space: "SL(n,C)/SU(n), n >= 2",
        root_system: "A(n-1), m = 2",
        provenance: Provenance::External,
    },
    FamilyInfo {
        pattern: "complex-hyperbolic-<n>",
        space: "SU(n,1)/S(U(n)xU(1)), n >= 2",
        root_system: "BC1, m_a = 2(n-1), m_2a = 1",
        provenance: Provenance::External,
    },
    FamilyInfo {
        pattern: "quaternionic-hyperbolic-<n>",
        space: "Sp(n,1)/Sp(n)xSp(1), n >= 2",
        root_system: "BC1, m_a = 4(n-1), m_2a = 3",
        provenance: Provenance::External,
    },
    FamilyInfo {
        pattern: "octonionic-hyperbolic-2",
        space: "F4(-20)/Spin(9)",
        root_system: "BC1, m_a = 8, m_2a = 7",
        provenance: Provenance::External,
    },
    FamilyInfo {
        pattern: "sopq-<p>-<q>",
        space: "SO_0(p,q)/SO(p)xSO(q), 1 <= p <= q, p + q >= 3",
        root_system: "B_p (short m = q-p, long m = 1), D_p when p = q",
        provenance: Provenance::External,
    },
    FamilyInfo {
        pattern: "supq-<p>-<q>",
        space: "SU(p,q)/S(U(p)xU(q)), 1 <= p <= q",
        root_system: "BC_p (m = 2(q-p), 2, 1), C_p (m = 2, 1) when p = q",
        provenance: Provenance::External,
    },
    FamilyInfo {
        pattern: "spnr-un-<n>",
        space: "Sp(n,R)/U(n), n >= 1",
        root_system: "C_n, m = 1",
        provenance: Provenance::External,
    },
    FamilyInfo {
        pattern: "custom:<path>",
        space: "description file",
        root_system: "as described",
        provenance: Provenance::User,
    },
];

/// A representative finite list of catalog keys, used for whole-catalog checks.
pub fn shipped_systems() -> Vec<String> {
    let mut keys: Vec<String> = (2..=8).map(|n| format!("hyperbolic-real-{n}")).collect();
    keys.push("sl2c".into());
    keys.extend(["slnr-son-3", "slnr-son-4"].map(String::from));
    keys.extend(["slnc-sun-2", "slnc-sun-3", "slnc-sun-4"].map(String::from));
    keys.extend(["complex-hyperbolic-2", "complex-hyperbolic-3"].map(String::from));
    keys.extend(["quaternionic-hyperbolic-2", "octonionic-hyperbolic-2"].map(String::from));
    keys.extend(["sopq-1-4", "sopq-2-2", "sopq-2-3", "sopq-3-3"].map(String::from));
    keys.extend(["supq-1-2", "supq-2-2", "supq-2-3"].map(String::from));
    keys.extend(["spnr-un-2", "spnr-un-3"].map(String::from));
    keys
}

fn params(rest: &str, count: usize) -> Option<Vec<usize>> {
    let v: Vec<usize> = rest.split('-').map(str::parse).collect::<std::result::Result<_, _>>().ok()?;
    (v.len() == count).then_some(v)
}

fn describe(name: &str) -> Option<(RootSystemDescription, Provenance)> {
    use Provenance::*;
    use RootType::*;
    let typed = |ty, rank, m| Some((RootSystemDescription::classical(name, ty, rank, m), External));
    let bc = |rank, short: usize, long: Option<usize>, double: usize| {
        typed(
            BC,
            rank,
            Multiplicities {
                short: short as i64,
                long: long.map(|l| l as i64),
                double: Some(double as i64),
            },
        )
    };
    if name == "sl2c" {
        return Some((RootSystemDescription::classical(name, A, 1, Multiplicities::single(2)), Reference));
    }
    if name == "octonionic-hyperbolic-2" {
        return bc(1, 8, None, 7);
    }
    if let Some(rest) = name.strip_prefix("hyperbolic-real-") {
        let [n] = params(rest, 1)?[..] else { return None };
        return (n >= 2).then(|| {
            (RootSystemDescription::classical(name, A, 1, Multiplicities::single(n as i64 - 1)), Reference)
        });
    }
    if let Some(rest) = name.strip_prefix("slnr-son-") {
        let [n] = params(rest, 1)?[..] else { return None };
        return if n >= 3 { typed(A, n - 1, Multiplicities::single(1)) } else { None };
    }
    if let Some(rest) = name.strip_prefix("slnc-sun-") {
        let [n] = params(rest, 1)?[..] else { return None };
        return if n >= 2 { typed(A, n - 1, Multiplicities::single(2)) } else { None };
    }
    if let Some(rest) = name.strip_prefix("complex-hyperbolic-") {
        let [n] = params(rest, 1)?[..] else { return None };
        return if n >= 2 { bc(1, 2 * (n - 1), None, 1) } else { None };
    }
    if let Some(rest) = name.strip_prefix("quaternionic-hyperbolic-") {
        let [n] = params(rest, 1)?[..] else { return None };
        return if n >= 2 { bc(1, 4 * (n - 1), None, 3) } else { None };
    }
    if let Some(rest) = name.strip_prefix("sopq-") {
        let [p, q] = params(rest, 2)?[..] else { return None };
        if p == 0 || p > q || p + q < 3 {
            return None;
        }
        return if p == q {
            typed(D, p, Multiplicities::single(1))
        } else {
            let long = (p >= 2).then_some(1);
            typed(B, p, Multiplicities { short: (q - p) as i64, long, double: None })
        };
    }
    if let Some(rest) = name.strip_prefix("supq-") {
        let [p, q] = params(rest, 2)?[..] else { return None };
        if p == 0 || p > q {
            return None;
        }
        return if p == q {
            if p == 1 {
                // SU(1,1)/U(1) is the hyperbolic plane.
                typed(A, 1, Multiplicities::single(1))
            } else {
                typed(C, p, Multiplicities { short: 2, long: Some(1), double: None })
            }
        } else {
            bc(p, 2 * (q - p), (p >= 2).then_some(2), 1)
        };
    }
    if let Some(rest) = name.strip_prefix("spnr-un-") {
        let [n] = params(rest, 1)?[..] else { return None };
        return if n >= 1 {
            typed(C, n, Multiplicities { short: 1, long: Some(1), double: None })
        } else {
            None
        };
    }
    None
}

fn available_keys(extra: &BTreeMap<String, RootSystemDescription>) -> Vec<String> {
    extra
        .keys()
        .cloned()
        .chain(FAMILIES.iter().map(|f| f.pattern.to_string()))
        .collect()
}

/// Looks up a built-in catalog key (or `custom:<path>`).
pub fn build_from_catalog(name: &str) -> Result<RestrictedRootSystem> {
    Catalog::builtin().build(name)
}

/// Built-in families plus optional user descriptions, which take precedence.
#[derive(Clone, Debug, Default)]
pub struct Catalog {
    extra: BTreeMap<String, RootSystemDescription>,
}

impl Catalog {
    pub fn builtin() -> Self {
        Self::default()
    }

    /// Adds every `*.json` description in `dir`, keyed by its `name` field.
    pub fn with_dir(mut self, dir: &Path) -> Result<Self> {
        let entries = std::fs::read_dir(dir).map_err(|source| Error::Io {
            path: dir.display().to_string(),
            source,
        })?;
        let mut paths: Vec<_> = entries
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.extension().is_some_and(|e| e == "json"))
            .collect();
        paths.sort();
        for path in paths {
            let desc = load_description(&path)?;
            self.extra.insert(desc.name.clone(), desc);
        }
        Ok(self)
    }

    pub fn extra_keys(&self) -> impl Iterator<Item = &str> {
        self.extra.keys().map(String::as_str)
    }

    pub fn build(&self, name: &str) -> Result<RestrictedRootSystem> {
        if let Some(desc) = self.extra.get(name) {
            return build_with_provenance(desc, Provenance::User);
        }
        if let Some(path) = name.strip_prefix("custom:") {
            let desc = load_description(Path::new(path))?;
            return build_with_provenance(&desc, Provenance::User);
        }
        match describe(name) {
            Some((desc, provenance)) => build_with_provenance(&desc, provenance),
            None => Err(Error::UnknownSpace {
                name: name.to_string(),
                available: available_keys(&self.extra),
            }),
        }
    }
}
